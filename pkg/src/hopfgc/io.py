"""Canonical JSON documents for every structure the tool reads or writes.

One format with a ``kind`` discriminator.  Labels are strings (tuples render as ``(a,b)``),
group and G-set tables are arrays of 0-based positions, scalars are strings, and every
sparse tensor is a sorted list of index/scalar rows.  Emitting is deterministic, so
``emit(parse(emit(x))) == emit(x)`` byte for byte.
"""

from __future__ import annotations

import hashlib
import json
from contextlib import contextmanager
from typing import Any, Dict, List

from .discrete import (
    CrossedGSet,
    DiscreteDoiHopfDatum,
    DatumSet,
    DiscreteError,
    FiniteGroup,
    FiniteMonoid,
    RightGSet,
    label_str,
)
from .doihopf import ComoduleAlgebra, DoiHopfDatumTk, ModuleCoalgebra
from .double import DrinfeldDouble, YDModule, double_datum
from .graded import GradedAlgebra, GradedModule
from .hopf import GroupCoalgebra, HopfError, HopfGC, SemiHopfGC
from .linalg import CoTensor, LinalgError, LinMap, MultTensor, ScalarField

FORMAT_VERSION = 1
KINDS = ("hopf_gc", "graded_algebra", "graded_module", "drinfeld_double", "doihopf_datum", "yd_module")
_RESERVED = set("(),|;")


class SchemaError(Exception):
    """A document that does not describe a valid structure; ``path`` locates the offending node."""

    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path
        self.message = message


# ---------------------------------------------------------------- labels and keys


def encode_label(x) -> str:
    if isinstance(x, tuple):
        return label_str(tuple(encode_label(t) for t in x))
    if not isinstance(x, str) or not x or _RESERVED & set(x):
        raise ValueError(f"label {x!r} cannot be serialized")
    return x


def decode_label(s: str):
    pos = 0

    def item():
        nonlocal pos
        if pos < len(s) and s[pos] == "(":
            pos += 1
            parts = [item()]
            while pos < len(s) and s[pos] == ",":
                pos += 1
                parts.append(item())
            if pos >= len(s) or s[pos] != ")":
                raise ValueError(f"unbalanced label {s!r}")
            pos += 1
            return tuple(parts)
        start = pos
        while pos < len(s) and s[pos] not in _RESERVED:
            pos += 1
        if pos == start:
            raise ValueError(f"empty label in {s!r}")
        return s[start:pos]

    out = item()
    if pos != len(s):
        raise ValueError(f"trailing characters in label {s!r}")
    return out


def _split_top(s: str, sep: str) -> List[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(s):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(s[start:i])
            start = i + 1
    parts.append(s[start:])
    return parts


def _key(*labels) -> str:
    return ",".join(encode_label(x) for x in labels)


def _comp(k) -> str:
    return "|".join(encode_label(x) for x in k)


# ---------------------------------------------------------------- reading helpers


@contextmanager
def _at(path: str):
    try:
        yield
    except SchemaError:
        raise
    except (DiscreteError, LinalgError, HopfError, KeyError, ValueError, TypeError, IndexError,
            ZeroDivisionError, AttributeError) as exc:
        raise SchemaError(path, f"{type(exc).__name__}: {exc}") from None


def _need(obj, key: str, path: str, typ=None):
    if not isinstance(obj, dict):
        raise SchemaError(path, "expected an object")
    if key not in obj:
        raise SchemaError(f"{path}.{key}", "missing")
    v = obj[key]
    if typ is not None and (not isinstance(v, typ) or (typ is int and isinstance(v, bool))):
        raise SchemaError(f"{path}.{key}", f"expected {getattr(typ, '__name__', typ)}")
    return v


def _int(v, path: str, bound: int | None = None) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < 0 or (bound is not None and v >= bound):
        raise SchemaError(path, f"expected an index below {bound}" if bound is not None else "expected an index")
    return v


def _label(s, path: str, allowed=None):
    if not isinstance(s, str):
        raise SchemaError(path, "expected a label string")
    with _at(path):
        x = decode_label(s)
    if allowed is not None and x not in allowed:
        raise SchemaError(path, f"unknown label {s!r}")
    return x


def _labels_key(s: str, path: str, sep: str, *allowed):
    parts = _split_top(s, sep)
    if len(parts) != len(allowed):
        raise SchemaError(path, f"key {s!r} should have {len(allowed)} parts")
    return tuple(_label(p, path, a) for p, a in zip(parts, allowed))


def _comp_key(s: str, path: str, lams, xs):
    return _labels_key(s, path, "|", lams, xs)


# ---------------------------------------------------------------- scalars and tensors


def _vec_out(F: ScalarField, v: dict) -> list:
    return [[i, F.fmt(c)] for i, c in sorted(v.items()) if c]


def _vec_in(F: ScalarField, rows, path: str, n: int) -> dict:
    if not isinstance(rows, list):
        raise SchemaError(path, "expected a list of [index, scalar]")
    out: dict = {}
    for r, row in enumerate(rows):
        p = f"{path}[{r}]"
        if not isinstance(row, list) or len(row) != 2:
            raise SchemaError(p, "expected [index, scalar]")
        i = _int(row[0], p, n)
        out[i] = out.get(i, F.zero) + _scalar(F, row[1], p)
    return {i: c for i, c in out.items() if c}


def _scalar(F: ScalarField, s, path: str):
    if not isinstance(s, str):
        raise SchemaError(path, "scalars are strings")
    with _at(path):
        return F.parse(s)


def _rows_out(F: ScalarField, entries: dict) -> list:
    return [list(k) + [F.fmt(c)] for k, c in sorted(entries.items()) if c]


def _rows_in(F: ScalarField, rows, path: str, bounds) -> dict:
    if not isinstance(rows, list):
        raise SchemaError(path, "expected a list of index rows")
    out: dict = {}
    r_len = len(bounds) + 1
    for r, row in enumerate(rows):
        p = f"{path}[{r}]"
        if not isinstance(row, list) or len(row) != r_len:
            raise SchemaError(p, f"expected {len(bounds)} indices and a scalar")
        key = tuple(_int(v, p, b) for v, b in zip(row[:-1], bounds))
        out[key] = out.get(key, F.zero) + _scalar(F, row[-1], p)
    return {k: c for k, c in out.items() if c}


def _mult_out(F, t: MultTensor) -> list:
    return _rows_out(F, t.entries())


def _mult_in(F, rows, path, dims) -> MultTensor:
    with _at(path):
        return MultTensor.from_entries(tuple(dims), _rows_in(F, rows, path, dims))


def _co_out(F, t: CoTensor) -> list:
    return _rows_out(F, t.entries())


def _co_in(F, rows, path, n_in, targets) -> CoTensor:
    with _at(path):
        return CoTensor.from_entries(n_in, tuple(targets), _rows_in(F, rows, path, (n_in,) + tuple(targets)))


def _map_out(F, m: LinMap) -> list:
    return _rows_out(F, m.entries())


def _map_in(F, rows, path, n_in, n_out) -> LinMap:
    with _at(path):
        return LinMap.from_entries(n_in, n_out, _rows_in(F, rows, path, (n_out, n_in)))


def _tensor_out(F, t: dict) -> list:
    return _rows_out(F, t)


def _names_out(names) -> list:
    return [n if isinstance(n, str) else label_str(n) for n in names]


def _names_in(v, path, n):
    if not isinstance(v, list) or len(v) != n or not all(isinstance(s, str) for s in v):
        raise SchemaError(path, f"expected {n} basis names")
    return tuple(v)


def _obj(v, path):
    if not isinstance(v, dict):
        raise SchemaError(path, "expected an object")
    return v


# ---------------------------------------------------------------- groups and sets


def _group_out(M: FiniteMonoid) -> dict:
    E = M.elements
    return {
        "name": M.name,
        "elements": [encode_label(x) for x in E],
        "identity": encode_label(M.identity),
        "table": [[M.index(M.mul(a, b)) for b in E] for a in E],
    }


def _group_in(obj, path) -> FiniteMonoid:
    obj = _obj(obj, path)
    raw = _need(obj, "elements", path, list)
    if not raw:
        raise SchemaError(f"{path}.elements", "empty element list")
    E = tuple(_label(s, f"{path}.elements[{i}]") for i, s in enumerate(raw))
    if len(set(E)) != len(E):
        raise SchemaError(f"{path}.elements", "duplicate labels")
    ident = _label(_need(obj, "identity", path), f"{path}.identity", set(E))
    name = obj.get("name", "")
    if not isinstance(name, str):
        raise SchemaError(f"{path}.name", "expected a string")
    table = _index_table(_need(obj, "table", path, list), f"{path}.table", E, E, E)
    inverse = {}
    for a in E:
        for b in E:
            if table[(a, b)] == ident and table[(b, a)] == ident:
                inverse[a] = b
                break
    with _at(path):
        if len(inverse) == len(E):
            return FiniteGroup(E, table, ident, name, inverse)
        return FiniteMonoid(E, table, ident, name)


def _index_table(rows, path, left, right, values) -> dict:
    if len(rows) != len(left):
        raise SchemaError(path, f"expected {len(left)} rows")
    out = {}
    for i, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != len(right):
            raise SchemaError(f"{path}[{i}]", f"expected {len(right)} entries")
        for j, v in enumerate(row):
            out[(left[i], right[j])] = values[_int(v, f"{path}[{i}][{j}]", len(values))]
    return out


def _gset_out(X: RightGSet) -> dict:
    A = X.acting.elements
    pos = {y: i for i, y in enumerate(X.carrier)}
    return {
        "carrier": [encode_label(y) for y in X.carrier],
        "table": [[pos[X.act(y, g)] for g in A] for y in X.carrier],
    }


def _carrier_in(obj, path):
    raw = _need(obj, "carrier", path, list)
    C = tuple(_label(s, f"{path}.carrier[{i}]") for i, s in enumerate(raw))
    if len(set(C)) != len(C):
        raise SchemaError(f"{path}.carrier", "duplicate labels")
    return C


def _gset_in(obj, path, G: FiniteMonoid) -> RightGSet:
    obj = _obj(obj, path)
    C = _carrier_in(obj, path)
    action = _index_table(_need(obj, "table", path, list), f"{path}.table", C, G.elements, C)
    with _at(path):
        return RightGSet(C, G, action)


def _label_map_out(m: dict) -> dict:
    return {encode_label(k): encode_label(v) for k, v in m.items()}


def _label_map_in(obj, path, keys, values) -> dict:
    obj = _obj(obj, path)
    out = {}
    for s, v in obj.items():
        k = _label(s, path, set(keys))
        out[k] = _label(v, f"{path}.{s}", set(values))
    missing = [k for k in keys if k not in out]
    if missing:
        raise SchemaError(path, f"no entry for {label_str(missing[0])}")
    return out


def _datum_out(d: DiscreteDoiHopfDatum) -> dict:
    return {"G": _group_out(d.G), "Lambda": _group_out(d.Lam), "gamma": _label_map_out(d.gamma),
            "X": _gset_out(d.X)}


def _datum_in(obj, path) -> DiscreteDoiHopfDatum:
    obj = _obj(obj, path)
    G = _group_in(_need(obj, "G", path), f"{path}.G")
    Lam = _group_in(_need(obj, "Lambda", path), f"{path}.Lambda")
    gamma = _label_map_in(_need(obj, "gamma", path), f"{path}.gamma", Lam.elements, G.elements)
    X = _gset_in(_need(obj, "X", path), f"{path}.X", G)
    with _at(path):
        return DiscreteDoiHopfDatum(G, Lam, gamma, X)


# ---------------------------------------------------------------- Hopf group-coalgebras


def _hgc_out(H: GroupCoalgebra) -> dict:
    F, G = H.field, H.group
    comps = {}
    for g in G.elements:
        c: Dict[str, Any] = {"dim": H.dims[g], "basis": _names_out(H.names(g))}
        if isinstance(H, SemiHopfGC):
            c["unit"] = _vec_out(F, H.unit.get(g, {}))
            c["mult"] = _mult_out(F, H.mult[g]) if g in H.mult else []
        comps[encode_label(g)] = c
    out = {
        "field": F.spec(),
        "group": _group_out(G),
        "components": comps,
        "comult": {_key(g, h): _co_out(F, t) for (g, h), t in H.comult.items()},
        "counit": _vec_out(F, H.counit),
    }
    if isinstance(H, HopfGC):
        if H.antipode:
            out["antipode"] = {encode_label(g): _map_out(F, m) for g, m in H.antipode.items()}
        if H.twisted:
            out["twisted_antipode"] = {encode_label(g): _map_out(F, m) for g, m in H.twisted.items()}
    return out


def _field_in(obj, path) -> ScalarField:
    s = _need(obj, "field", path, str)
    with _at(f"{path}.field"):
        return ScalarField.from_spec(s)


def _hgc_in(obj, path) -> HopfGC:
    obj = _obj(obj, path)
    F = _field_in(obj, path)
    G = _group_in(_need(obj, "group", path), f"{path}.group")
    E = G.elements
    comps = _obj(_need(obj, "components", path), f"{path}.components")
    dims, basis, mult, unit = {}, {}, {}, {}
    for s in comps:
        _label(s, f"{path}.components", set(E))
    for g in E:
        p = f"{path}.components.{encode_label(g)}"
        if encode_label(g) not in comps:
            raise SchemaError(p, "missing")
        c = comps[encode_label(g)]
        n = _need(c, "dim", p, int)
        if n < 0:
            raise SchemaError(f"{p}.dim", "negative dimension")
        dims[g] = n
        basis[g] = _names_in(_need(c, "basis", p), f"{p}.basis", n)
    for g in E:
        p = f"{path}.components.{encode_label(g)}"
        c = comps[encode_label(g)]
        n = dims[g]
        unit[g] = _vec_in(F, _need(c, "unit", p), f"{p}.unit", n)
        mult[g] = _mult_in(F, _need(c, "mult", p), f"{p}.mult", (n, n, n))
    comult = {}
    for s, rows in _obj(_need(obj, "comult", path), f"{path}.comult").items():
        p = f"{path}.comult.{s}"
        g, h = _labels_key(s, p, ",", set(E), set(E))
        comult[(g, h)] = _co_in(F, rows, p, dims[G.mul(g, h)], (dims[g], dims[h]))
    counit = _vec_in(F, _need(obj, "counit", path), f"{path}.counit", dims[G.identity])
    maps = {}
    for section in ("antipode", "twisted_antipode"):
        maps[section] = {}
        if section not in obj:
            continue
        if not isinstance(G, FiniteGroup):
            raise SchemaError(f"{path}.{section}", "antipodes need a group")
        for s, rows in _obj(obj[section], f"{path}.{section}").items():
            p = f"{path}.{section}.{s}"
            g = _label(s, p, set(E))
            maps[section][g] = _map_in(F, rows, p, dims[G.inv(g)], dims[g])
    with _at(path):
        return HopfGC(F, G, dims, comult, counit, basis, mult, unit, maps["antipode"], maps["twisted_antipode"])


# ---------------------------------------------------------------- graded algebras and modules


def _dims_out(dims: dict, basis: dict, key) -> dict:
    out = {}
    for k, n in dims.items():
        c: Dict[str, Any] = {"dim": n}
        if basis.get(k):
            c["basis"] = _names_out(basis[k])
        out[key(k)] = c
    return out


def _dims_in(obj, path, keys, parse_key):
    obj = _obj(obj, path)
    dims, basis = {}, {}
    for s, c in obj.items():
        p = f"{path}.{s}"
        k = parse_key(s, p)
        n = _need(c, "dim", p, int)
        if n < 0:
            raise SchemaError(f"{p}.dim", "negative dimension")
        dims[k] = n
        if "basis" in c:
            basis[k] = _names_in(c["basis"], f"{p}.basis", n)
    for k in keys:
        if k not in dims:
            raise SchemaError(path, f"component {label_str(k)} missing")
    return dims, basis


def _galg_out(A: GradedAlgebra) -> dict:
    F = A.field
    return {
        "field": F.spec(),
        "datum": _datum_out(A.datum),
        "components": _dims_out(A.dims, A.basis, _comp),
        "mult": {f"{_comp(k1)};{_comp(k2)}": _mult_out(F, t) for (k1, k2), t in A.mult.items()},
        "units": {encode_label(x): _vec_out(F, v) for x, v in A.units.items()},
    }


def _galg_in(obj, path) -> GradedAlgebra:
    obj = _obj(obj, path)
    F = _field_in(obj, path)
    d = _datum_in(_need(obj, "datum", path), f"{path}.datum")
    lams, xs = set(d.Lam.elements), set(d.X.carrier)
    keys = [(lam, x) for lam in d.Lam.elements for x in d.X.carrier]
    dims, basis = _dims_in(_need(obj, "components", path), f"{path}.components", keys,
                           lambda s, p: _comp_key(s, p, lams, xs))
    mult = {}
    for s, rows in _obj(_need(obj, "mult", path), f"{path}.mult").items():
        p = f"{path}.mult.{s}"
        parts = s.split(";")
        if len(parts) != 2:
            raise SchemaError(p, "expected a key of the form 'l|x;l'|x''")
        k1, k2 = (_comp_key(q, p, lams, xs) for q in parts)
        if k2[1] != d.xg(k1[1], k2[0]):
            raise SchemaError(p, "components are not composable")
        kt = (d.Lam.mul(k1[0], k2[0]), k2[1])
        mult[(k1, k2)] = _mult_in(F, rows, p, (dims[k1], dims[k2], dims[kt]))
    units = {}
    e = d.Lam.identity
    for s, rows in _obj(_need(obj, "units", path), f"{path}.units").items():
        p = f"{path}.units.{s}"
        x = _label(s, p, xs)
        units[x] = _vec_in(F, rows, p, dims[(e, x)])
    with _at(path):
        return GradedAlgebra(d, F, dims, mult, units, basis)


def _datum_set_out(Y: DatumSet) -> dict:
    L = Y.datum.Lam.elements
    pos = {y: i for i, y in enumerate(Y.carrier)}
    return {
        "carrier": [encode_label(y) for y in Y.carrier],
        "table": [[pos[Y.act(y, lam)] for lam in L] for y in Y.carrier],
        "beta": _label_map_out(Y.beta),
    }


def _datum_set_in(obj, path, d: DiscreteDoiHopfDatum) -> DatumSet:
    obj = _obj(obj, path)
    C = _carrier_in(obj, path)
    action = _index_table(_need(obj, "table", path, list), f"{path}.table", C, d.Lam.elements, C)
    beta = _label_map_in(_need(obj, "beta", path), f"{path}.beta", C, d.X.carrier)
    with _at(path):
        return DatumSet(d, C, action, beta)


def _gmod_out(M: GradedModule) -> dict:
    F = M.algebra.field
    return {
        "field": F.spec(),
        "algebra": _galg_out(M.algebra),
        "Y": _datum_set_out(M.Y),
        "components": _dims_out(M.dims, M.basis, encode_label),
        "action": {f"{encode_label(y)};{_comp(k)}": _mult_out(F, t) for (y, k), t in M.action.items()},
    }


def _gmod_in(obj, path) -> GradedModule:
    obj = _obj(obj, path)
    A = _galg_in(_need(obj, "algebra", path), f"{path}.algebra")
    F = A.field
    d = A.datum
    Y = _datum_set_in(_need(obj, "Y", path), f"{path}.Y", d)
    ys = set(Y.carrier)
    dims, basis = _dims_in(_need(obj, "components", path), f"{path}.components", Y.carrier,
                           lambda s, p: _label(s, p, ys))
    action = {}
    lams, xs = set(d.Lam.elements), set(d.X.carrier)
    for s, rows in _obj(_need(obj, "action", path), f"{path}.action").items():
        p = f"{path}.action.{s}"
        parts = s.split(";")
        if len(parts) != 2:
            raise SchemaError(p, "expected a key of the form 'y;l|x'")
        y = _label(parts[0], p, ys)
        k = _comp_key(parts[1], p, lams, xs)
        y2 = Y.act(y, k[0])
        if k[1] != Y.beta[y2]:
            raise SchemaError(p, "grading mismatch between y and the algebra component")
        action[(y, k)] = _mult_in(F, rows, p, (dims[y], A.dims[k], dims[y2]))
    with _at(path):
        return GradedModule(A, Y, dims, action, basis)


# ---------------------------------------------------------------- doubles


def _double_out(D: DrinfeldDouble) -> dict:
    F = D.core.field
    out = _galg_out(D.core)
    out.update(
        form=D.form,
        source=_hgc_out(D.H),
        comult={_key(*k): _co_out(F, t) for k, t in D.comult.items()},
        counit={encode_label(lam): _vec_out(F, v) for lam, v in D.counit.items()},
        antipode={_key(*k): _map_out(F, m) for k, m in D.antipode.items()},
        twisted_antipode={_key(*k): _map_out(F, m) for k, m in D.twisted.items()},
        R={_key(*k): _tensor_out(F, t) for k, t in D.R.items()},
        Q={_key(*k): _tensor_out(F, t) for k, t in D.Q.items()},
    )
    return out


def _double_in(obj, path) -> DrinfeldDouble:
    obj = _obj(obj, path)
    core = _galg_in(obj, path)
    H = _hgc_in(_need(obj, "source", path), f"{path}.source")
    form = _need(obj, "form", path, str)
    if form not in ("smash", "koppinen"):
        raise SchemaError(f"{path}.form", "expected 'smash' or 'koppinen'")
    F, d = core.field, core.datum
    if not isinstance(d.Lam, FiniteGroup) or not d.Lam.same_as(H.group):
        raise SchemaError(f"{path}.datum", "the double is graded by the source group")
    if H.field != F:
        raise SchemaError(f"{path}.source.field", "field differs from the double's")
    G = d.Lam
    gs = set(G.elements)
    dims = core.dims

    def section(name, arity, optional=False):
        if optional and name not in obj:
            return
        for s, rows in _obj(_need(obj, name, path), f"{path}.{name}").items():
            p = f"{path}.{name}.{s}"
            yield p, _labels_key(s, p, ",", *([gs] * arity)), rows

    comult = {}
    for p, (lam, g, g2), rows in section("comult", 3):
        comult[(lam, g, g2)] = _co_in(F, rows, p, dims[(lam, G.mul(g, g2))], (dims[(lam, g)], dims[(lam, g2)]))
    counit = {}
    for s, rows in _obj(_need(obj, "counit", path), f"{path}.counit").items():
        p = f"{path}.counit.{s}"
        lam = _label(s, p, gs)
        counit[lam] = _vec_in(F, rows, p, dims[(lam, G.identity)])
    maps = {}
    for name in ("antipode", "twisted_antipode"):
        maps[name] = {}
        for p, (lam, g), rows in section(name, 2, optional=True):
            li = G.inv(lam)
            maps[name][(lam, g)] = _map_in(F, rows, p, dims[(lam, G.inv(g))], dims[(li, G.mul(lam, g, li))])
    RQ = {}
    for name in ("R", "Q"):
        RQ[name] = {}
        for p, (g, g2), rows in section(name, 2, optional=True):
            gi = G.inv(g)
            first = (gi, G.mul(g, g2, gi)) if name == "R" else (g, G.conj(g2, g))
            RQ[name][(g, g2)] = _rows_in(F, rows, p, (dims[first], dims[(G.identity, g)]))
    with _at(path):
        dh = double_datum(H)
        return DrinfeldDouble(core, comult, counit, maps["antipode"], maps["twisted_antipode"],
                              RQ["R"], RQ["Q"], H, form, dh)


# ---------------------------------------------------------------- Yetter-Drinfeld modules


def _yd_out(M: YDModule) -> dict:
    F = M.H.field
    V = M.V
    return {
        "field": F.spec(),
        "source": _hgc_out(M.H),
        "V": dict(_gset_out(V.gset), nu=_label_map_out(V.nu)),
        "components": _dims_out(M.dims, M.basis, encode_label),
        "action": {encode_label(v): _mult_out(F, t) for v, t in M.action.items()},
        "coaction": {_key(v, g): _co_out(F, t) for (v, g), t in M.coaction.items()},
    }


def _yd_in(obj, path) -> YDModule:
    obj = _obj(obj, path)
    H = _hgc_in(_need(obj, "source", path), f"{path}.source")
    F, G = H.field, H.group
    vobj = _obj(_need(obj, "V", path), f"{path}.V")
    gset = _gset_in(vobj, f"{path}.V", G)
    nu = _label_map_in(_need(vobj, "nu", f"{path}.V"), f"{path}.V.nu", gset.carrier, G.elements)
    with _at(f"{path}.V"):
        V = CrossedGSet(gset, nu)
    vs, gs = set(gset.carrier), set(G.elements)
    dims, basis = _dims_in(_need(obj, "components", path), f"{path}.components", gset.carrier,
                           lambda s, p: _label(s, p, vs))
    action = {}
    for s, rows in _obj(_need(obj, "action", path), f"{path}.action").items():
        p = f"{path}.action.{s}"
        v = _label(s, p, vs)
        action[v] = _mult_in(F, rows, p, (dims[v], H.dims[nu[v]], dims[v]))
    coaction = {}
    for s, rows in _obj(_need(obj, "coaction", path), f"{path}.coaction").items():
        p = f"{path}.coaction.{s}"
        v, g = _labels_key(s, p, ",", vs, gs)
        coaction[(v, g)] = _co_in(F, rows, p, dims[gset.act(v, g)], (dims[v], H.dims[g]))
    with _at(path):
        return YDModule(H, V, dims, action, coaction, basis)


# ---------------------------------------------------------------- Doi-Hopf data


def _dh_out(D: DoiHopfDatumTk) -> dict:
    F = D.field
    A, MC = D.A, D.C
    C = MC.C
    return {
        "field": F.spec(),
        "H": _hgc_out(D.H),
        "A": {
            "X": _gset_out(A.X),
            "components": {
                encode_label(x): dict(
                    {"dim": A.dims[x], "unit": _vec_out(F, A.unit.get(x, {})),
                     "mult": _mult_out(F, A.mult[x]) if x in A.mult else []},
                    **({"basis": _names_out(A.basis[x])} if A.basis.get(x) else {}))
                for x in A.X.carrier
            },
            "coaction": {_key(x, g): _co_out(F, t) for (x, g), t in A.coaction.items()},
        },
        "C": {
            "group": _group_out(C.group),
            "components": _dims_out(C.dims, C.basis, encode_label),
            "comult": {_key(a, b): _co_out(F, t) for (a, b), t in C.comult.items()},
            "counit": _vec_out(F, C.counit),
            "gamma": _label_map_out(MC.gamma),
            "action": {encode_label(lam): _mult_out(F, t) for lam, t in MC.action.items()},
        },
    }


def _dh_in(obj, path) -> DoiHopfDatumTk:
    obj = _obj(obj, path)
    H = _hgc_in(_need(obj, "H", path), f"{path}.H")
    F, G = H.field, H.group
    gs = set(G.elements)
    aobj = _obj(_need(obj, "A", path), f"{path}.A")
    X = _gset_in(_need(aobj, "X", f"{path}.A"), f"{path}.A.X", G)
    xs = set(X.carrier)
    comps = _obj(_need(aobj, "components", f"{path}.A"), f"{path}.A.components")
    dims, basis = _dims_in(comps, f"{path}.A.components", X.carrier, lambda s, p: _label(s, p, xs))
    mult, unit = {}, {}
    for x in X.carrier:
        p = f"{path}.A.components.{encode_label(x)}"
        c = comps[encode_label(x)]
        n = dims[x]
        unit[x] = _vec_in(F, _need(c, "unit", p), f"{p}.unit", n)
        mult[x] = _mult_in(F, _need(c, "mult", p), f"{p}.mult", (n, n, n))
    coaction = {}
    for s, rows in _obj(_need(aobj, "coaction", f"{path}.A"), f"{path}.A.coaction").items():
        p = f"{path}.A.coaction.{s}"
        x, g = _labels_key(s, p, ",", xs, gs)
        coaction[(x, g)] = _co_in(F, rows, p, dims[X.act(x, g)], (dims[x], H.dims[g]))
    cobj = _obj(_need(obj, "C", path), f"{path}.C")
    L = _group_in(_need(cobj, "group", f"{path}.C"), f"{path}.C.group")
    ls = set(L.elements)
    cdims, cbasis = _dims_in(_need(cobj, "components", f"{path}.C"), f"{path}.C.components", L.elements,
                             lambda s, p: _label(s, p, ls))
    ccomult = {}
    for s, rows in _obj(_need(cobj, "comult", f"{path}.C"), f"{path}.C.comult").items():
        p = f"{path}.C.comult.{s}"
        a, b = _labels_key(s, p, ",", ls, ls)
        ccomult[(a, b)] = _co_in(F, rows, p, cdims[L.mul(a, b)], (cdims[a], cdims[b]))
    ccounit = _vec_in(F, _need(cobj, "counit", f"{path}.C"), f"{path}.C.counit", cdims[L.identity])
    gamma = _label_map_in(_need(cobj, "gamma", f"{path}.C"), f"{path}.C.gamma", L.elements, G.elements)
    caction = {}
    for s, rows in _obj(_need(cobj, "action", f"{path}.C"), f"{path}.C.action").items():
        p = f"{path}.C.action.{s}"
        lam = _label(s, p, ls)
        caction[lam] = _mult_in(F, rows, p, (cdims[lam], H.dims[gamma[lam]], cdims[lam]))
    with _at(path):
        A = ComoduleAlgebra(H, X, dims, mult, unit, coaction, basis)
        C = GroupCoalgebra(F, L, cdims, ccomult, ccounit, cbasis)
        return DoiHopfDatumTk(H, A, ModuleCoalgebra(H, C, gamma, caction))


# ---------------------------------------------------------------- entry points


def kind_of(obj) -> str:
    if isinstance(obj, DrinfeldDouble):
        return "drinfeld_double"
    if isinstance(obj, GroupCoalgebra):
        return "hopf_gc"
    if isinstance(obj, GradedAlgebra):
        return "graded_algebra"
    if isinstance(obj, GradedModule):
        return "graded_module"
    if isinstance(obj, YDModule):
        return "yd_module"
    if isinstance(obj, DoiHopfDatumTk):
        return "doihopf_datum"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


_EMIT = {
    "hopf_gc": _hgc_out,
    "graded_algebra": _galg_out,
    "graded_module": _gmod_out,
    "drinfeld_double": _double_out,
    "yd_module": _yd_out,
    "doihopf_datum": _dh_out,
}

_PARSE = {
    "hopf_gc": _hgc_in,
    "graded_algebra": _galg_in,
    "graded_module": _gmod_in,
    "drinfeld_double": _double_in,
    "yd_module": _yd_in,
    "doihopf_datum": _dh_in,
}


def to_document(obj) -> dict:
    kind = kind_of(obj)
    doc = _EMIT[kind](obj)
    doc["kind"] = kind
    doc["format"] = FORMAT_VERSION
    return doc


def from_document(doc):
    if not isinstance(doc, dict):
        raise SchemaError("$", "top level must be an object")
    kind = _need(doc, "kind", "$", str)
    if kind not in _PARSE:
        raise SchemaError("$.kind", f"unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    version = _need(doc, "format", "$", int)
    if version != FORMAT_VERSION:
        raise SchemaError("$.format", f"unsupported format version {version}")
    try:
        return _PARSE[kind](doc, "$")
    except RecursionError:
        raise SchemaError("$", "document nested too deeply") from None


def emit(obj) -> str:
    return json.dumps(to_document(obj), indent=1, sort_keys=True, ensure_ascii=False) + "\n"


def parse(text: str | bytes):
    try:
        doc = json.loads(text)
    except (ValueError, RecursionError) as exc:
        raise SchemaError("$", f"not valid JSON: {exc}") from None
    return from_document(doc)


def digest(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


def load(path: str):
    """Parse a file; returns (object, sha256 of its bytes)."""
    try:
        with open(path, "rb") as fh:
            data = fh.read()
    except OSError as exc:
        raise SchemaError("$", f"cannot read {path}: {exc.strerror}") from None
    return parse(data), digest(data)


def dump(obj, path: str) -> str:
    text = emit(obj)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
    return text
