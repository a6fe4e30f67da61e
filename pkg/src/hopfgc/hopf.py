"""Group-coalgebras and (semi-)Hopf group-coalgebras given by structure constants.

A family is indexed by a finite monoid (a group once antipodes enter).  Component
``g`` is the space ``H_g`` of dimension ``dims[g]``; ``comult[(g, h)]`` sends
``H_{gh}`` to ``H_g (x) H_h``; ``counit`` is a functional on ``H_e``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Optional

from .discrete import (
    FiniteGroup,
    FiniteMonoid,
    monoid_direct_product,
    require_group,
    trivial_group,
)
from .linalg import (
    CoTensor,
    LinMap,
    MultTensor,
    ScalarField,
    SingularMatrix,
    add_term,
    axpy,
    evaluate,
    scale,
    vec_equal,
)
from .report import ValidationReport


class HopfError(Exception):
    pass


class SingularAntipode(HopfError):
    def __init__(self, g):
        super().__init__(f"antipode component for {g!r} is not invertible")
        self.g = g


class InvalidOrdinaryHopf(HopfError):
    pass


class AntipodeMissing(HopfError):
    pass


@dataclass(eq=False)
class GroupCoalgebra:
    field: ScalarField
    group: FiniteMonoid
    dims: Dict
    comult: Dict
    counit: dict
    basis: Dict = field(default_factory=dict)

    def names(self, g):
        return self.basis.get(g) or tuple(f"e{i}" for i in range(self.dims[g]))

    def delta(self, g, h, v: dict) -> dict:
        """Delta_{g,h}(v) as a dict keyed by (i, j)."""
        return self.comult[(g, h)](v)

    def eps(self, v: dict):
        return evaluate(self.counit, v)

    def basis_vectors(self, g):
        one = self.field.one
        return [{i: one} for i in range(self.dims[g])]


@dataclass(eq=False)
class SemiHopfGC(GroupCoalgebra):
    mult: Dict = field(default_factory=dict)
    unit: Dict = field(default_factory=dict)

    def mul(self, g, u: dict, v: dict) -> dict:
        return self.mult[g](u, v)

    def one(self, g) -> dict:
        return dict(self.unit[g])


@dataclass(eq=False)
class HopfGC(SemiHopfGC):
    antipode: Dict = field(default_factory=dict)
    twisted: Dict = field(default_factory=dict)

    def S(self, g, v: dict) -> dict:
        """S_g: H_{g^-1} -> H_g."""
        try:
            return self.antipode[g](v)
        except KeyError:
            raise AntipodeMissing(f"no antipode component for {g!r}") from None

    def Sbar(self, g, v: dict) -> dict:
        """Twisted antipode: H_{g^-1} -> H_g."""
        try:
            return self.twisted[g](v)
        except KeyError:
            raise AntipodeMissing(f"no twisted antipode component for {g!r}") from None


def _sum_over(t: dict, fn) -> dict:
    """Sum of c * fn(key) over the terms of a tensor."""
    acc: dict = {}
    for key, c in t.items():
        axpy(acc, c, fn(key))
    return acc


def tensor_apply(t: dict, *maps) -> dict:
    """Apply one linear map (index -> vector) per factor of a tensor keyed by tuples."""
    acc: dict = {}
    for key, c in t.items():
        parts = [m(k) if m is not None else {k: 1} for m, k in zip(maps, key)]
        for combo in itertools.product(*(p.items() for p in parts)):
            coef = c
            for _, x in combo:
                coef = coef * x
            if coef:
                add_term(acc, tuple(k for k, _ in combo), coef)
    return acc


# ---------------------------------------------------------------- validators


def check_group_coalgebra(C: GroupCoalgebra, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    M = C.group
    E = M.elements
    for g, h in itertools.product(E, E):
        if (g, h) not in C.comult:
            rep.fail("coalgebra:shape", (g, h), "missing", "comultiplication")
            return rep
        t = C.comult[(g, h)]
        if t.n_in != C.dims[M.mul(g, h)] or t.targets != (C.dims[g], C.dims[h]):
            rep.fail("coalgebra:shape", (g, h), (t.n_in, t.targets), (C.dims[M.mul(g, h)], (C.dims[g], C.dims[h])))
            return rep
    for g, h, k in itertools.product(E, E, E):
        src = M.mul(g, h, k)
        for i in range(C.dims[src]):
            lhs = tensor_apply(C.delta(g, M.mul(h, k), {i: 1}), None, lambda j: C.delta(h, k, {j: 1}))
            lhs = _flatten(lhs)
            rhs = _flatten(tensor_apply(C.delta(M.mul(g, h), k, {i: 1}), lambda j: C.delta(g, h, {j: 1}), None))
            rep.expect("coalgebra:coassoc", (g, h, k, i), lhs, rhs, vec_equal)
    e = M.identity
    for g in E:
        for i in range(C.dims[g]):
            v = {i: C.field.one}
            right = _sum_over(C.delta(g, e, v), lambda key: scale(C.counit.get(key[1], 0), {key[0]: 1}))
            left = _sum_over(C.delta(e, g, v), lambda key: scale(C.counit.get(key[0], 0), {key[1]: 1}))
            rep.expect("coalgebra:counit-right", (g, i), right, v, vec_equal)
            rep.expect("coalgebra:counit-left", (g, i), left, v, vec_equal)
    return rep


def _flatten(t: dict) -> dict:
    """Flatten nested tuple keys ((a, b), c) -> (a, b, c)."""
    out: dict = {}
    for key, c in t.items():
        flat = []
        for k in key:
            flat.extend(k if isinstance(k, tuple) else (k,))
        add_term(out, tuple(flat), c)
    return out


def check_algebra(mult: MultTensor, unit: dict, dim: int, rep: ValidationReport, tag: str, where=()):
    """Associativity and two-sided unit on basis vectors of one component."""
    for i, j, k in itertools.product(range(dim), repeat=3):
        lhs = mult(mult({i: 1}, {j: 1}), {k: 1})
        rhs = mult({i: 1}, mult({j: 1}, {k: 1}))
        rep.expect(f"{tag}:assoc", where + (i, j, k), lhs, rhs, vec_equal)
    for i in range(dim):
        rep.expect(f"{tag}:unit-left", where + (i,), mult(unit, {i: 1}), {i: 1}, vec_equal)
        rep.expect(f"{tag}:unit-right", where + (i,), mult({i: 1}, unit), {i: 1}, vec_equal)


def tensor_mul(m1: MultTensor, m2: MultTensor, t: dict, u: dict) -> dict:
    """(a (x) b)(a' (x) b') = aa' (x) bb' on tensors keyed by pairs."""
    acc: dict = {}
    for (a, b), c in t.items():
        for (a2, b2), c2 in u.items():
            left = m1.basis(a, a2)
            if not left:
                continue
            right = m2.basis(b, b2)
            for p, x in left.items():
                for q, y in right.items():
                    add_term(acc, (p, q), c * c2 * x * y)
    return acc


def check_semi_hopf(H: SemiHopfGC, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    check_group_coalgebra(H, rep)
    if not rep.ok and rep.by_check("coalgebra:shape"):
        return rep
    M = H.group
    E = M.elements
    for g in E:
        check_algebra(H.mult[g], H.unit[g], H.dims[g], rep, "algebra", (g,))
    for g, h in itertools.product(E, E):
        src = M.mul(g, h)
        d = H.dims[src]
        for i, j in itertools.product(range(d), repeat=2):
            lhs = H.delta(g, h, H.mul(src, {i: 1}, {j: 1}))
            rhs = tensor_mul(H.mult[g], H.mult[h], H.delta(g, h, {i: 1}), H.delta(g, h, {j: 1}))
            rep.expect("bialgebra:comult-mult", (g, h, i, j), lhs, rhs, vec_equal)
        lhs = H.delta(g, h, H.unit[src])
        rhs = {(p, q): a * b for p, a in H.unit[g].items() for q, b in H.unit[h].items()}
        rep.expect("bialgebra:comult-unit", (g, h), lhs, {k: v for k, v in rhs.items() if v}, vec_equal)
    e = M.identity
    for i, j in itertools.product(range(H.dims[e]), repeat=2):
        lhs = H.eps(H.mul(e, {i: 1}, {j: 1}))
        rhs = H.counit.get(i, 0) * H.counit.get(j, 0)
        rep.expect("bialgebra:counit-mult", (i, j), lhs, rhs, lambda a, b: a == b)
    rep.expect("bialgebra:counit-unit", (), H.eps(H.unit[e]), 1, lambda a, b: a == b)
    return rep


def antipode_sides(H: HopfGC, g, i) -> dict:
    """The four antipode expressions for basis vector i of H_e."""
    G = H.group
    gi = G.inv(g)
    v = {i: H.field.one}
    d1 = H.delta(gi, g, v)  # h_(1,g^-1) (x) h_(2,g)
    d2 = H.delta(g, gi, v)  # h_(1,g) (x) h_(2,g^-1)
    mg = H.mult[g]
    s_left = _sum_over(d1, lambda k: mg(H.S(g, {k[0]: 1}), {k[1]: 1}))
    s_right = _sum_over(d2, lambda k: mg({k[0]: 1}, H.S(g, {k[1]: 1})))
    t_left = _sum_over(d1, lambda k: mg({k[1]: 1}, H.Sbar(g, {k[0]: 1})))
    t_right = _sum_over(d2, lambda k: mg(H.Sbar(g, {k[1]: 1}), {k[0]: 1}))
    return {"S-left": s_left, "S-right": s_right, "Sbar-left": t_left, "Sbar-right": t_right}


def check_hopf(H: HopfGC, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    G = require_group(H.group, "index monoid of a Hopf group-coalgebra")
    check_semi_hopf(H, rep)
    e = G.identity
    for g in G.elements:
        if g not in H.antipode:
            rep.fail("hopf:antipode-missing", (g,), None, "S_g")
            continue
        if g not in H.twisted:
            rep.fail("hopf:twisted-missing", (g,), None, "Sbar_g")
            continue
        S, T = H.antipode[g], H.twisted[g]
        gi = G.inv(g)
        if (S.n_in, S.n_out) != (H.dims[gi], H.dims[g]) or (T.n_in, T.n_out) != (H.dims[gi], H.dims[g]):
            rep.fail("hopf:shape", (g,), (S.n_in, S.n_out), (H.dims[gi], H.dims[g]))
            continue
        for i in range(H.dims[e]):
            target = scale(H.counit.get(i, 0), H.unit[g])
            for name, val in antipode_sides(H, g, i).items():
                rep.expect(f"hopf:{name}", (g, i), val, target, vec_equal)
    for g in G.elements:
        gi = G.inv(g)
        if g in H.twisted and gi in H.antipode:
            comp1 = H.twisted[g].compose(H.antipode[gi])
            comp2 = H.antipode[gi].compose(H.twisted[g])
            rep.expect("hopf:twisted-inverse", (g, "Sbar_g.S_g^-1"), comp1.cols, LinMap.identity(comp1.n_in).cols,
                       lambda a, b: all(vec_equal(x, y) for x, y in zip(a, b)) and len(a) == len(b))
            rep.expect("hopf:twisted-inverse", (g, "S_g^-1.Sbar_g"), comp2.cols, LinMap.identity(comp2.n_in).cols,
                       lambda a, b: all(vec_equal(x, y) for x, y in zip(a, b)) and len(a) == len(b))
    return rep


# ---------------------------------------------------------------- constructions


def derive_twisted_antipode(H: HopfGC) -> HopfGC:
    """Install Sbar_g = (S_{g^-1})^-1 for every g."""
    G = require_group(H.group)
    twisted = {}
    for g in G.elements:
        gi = G.inv(g)
        if gi not in H.antipode:
            raise AntipodeMissing(f"no antipode component for {gi!r}")
        try:
            twisted[g] = H.antipode[gi].inverse(H.field)
        except SingularMatrix:
            raise SingularAntipode(gi) from None
    return HopfGC(H.field, G, dict(H.dims), dict(H.comult), dict(H.counit), dict(H.basis),
                  dict(H.mult), dict(H.unit), dict(H.antipode), twisted)


def opposite_hgc(H: HopfGC) -> HopfGC:
    """Reversed multiplication, same comultiplication, antipodes swapped with twisted ones."""
    mult = {}
    for g, m in H.mult.items():
        mult[g] = MultTensor((m.dims[1], m.dims[0], m.dims[2]), {(j, i): w for (i, j), w in m.table.items()})
    return HopfGC(H.field, H.group, dict(H.dims), dict(H.comult), dict(H.counit), dict(H.basis),
                  mult, dict(H.unit), dict(H.twisted), dict(H.antipode))


def _kron_map(A: LinMap, B: LinMap) -> LinMap:
    cols = []
    for a in range(A.n_in):
        for b in range(B.n_in):
            col = {}
            for p, x in A.cols[a].items():
                for q, y in B.cols[b].items():
                    add_term(col, p * B.n_out + q, x * y)
            cols.append(col)
    return LinMap(A.n_in * B.n_in, A.n_out * B.n_out, cols)


def tensor_hgc(K: HopfGC, H: HopfGC) -> HopfGC:
    """Componentwise K_l (x) H_g over L x G; index of a (x) b is a * dim H_g + b."""
    if K.field != H.field:
        raise HopfError("tensor factors over different fields")
    L, G = K.group, H.group
    P = monoid_direct_product(L, G)
    dims = {(l, g): K.dims[l] * H.dims[g] for (l, g) in P.elements}
    basis = {(l, g): tuple((a, b) for a in K.names(l) for b in H.names(g)) for (l, g) in P.elements}
    mult, unit = {}, {}
    for (l, g) in P.elements:
        dh = H.dims[g]
        mk, mh = K.mult[l], H.mult[g]
        table = {}
        for (a, a2), wa in mk.table.items():
            for (b, b2), wb in mh.table.items():
                w = {}
                for p, x in wa.items():
                    for q, y in wb.items():
                        add_term(w, p * dh + q, x * y)
                if w:
                    table[(a * dh + b, a2 * dh + b2)] = w
        mult[(l, g)] = MultTensor((dims[(l, g)],) * 3, table)
        unit[(l, g)] = {p * dh + q: x * y for p, x in K.unit[l].items() for q, y in H.unit[g].items() if x * y}
    comult = {}
    for (l, g), (l2, g2) in itertools.product(P.elements, P.elements):
        src_l, src_g = L.mul(l, l2), G.mul(g, g2)
        dsrc = H.dims[src_g]
        d1, d2 = H.dims[g], H.dims[g2]
        rows = []
        for a in range(K.dims[src_l]):
            dk = K.comult[(l, l2)].rows[a]
            for b in range(dsrc):
                dhh = H.comult[(g, g2)].rows[b]
                row = {}
                for (p, p2), x in dk.items():
                    for (q, q2), y in dhh.items():
                        add_term(row, (p * d1 + q, p2 * d2 + q2), x * y)
                rows.append(row)
        comult[((l, g), (l2, g2))] = CoTensor(K.dims[src_l] * dsrc, (dims[(l, g)], dims[(l2, g2)]), rows)
    e_h = H.dims[G.identity]
    counit = {}
    for p, x in K.counit.items():
        for q, y in H.counit.items():
            if x * y:
                counit[p * e_h + q] = x * y
    antipode, twisted = {}, {}
    if isinstance(P, FiniteGroup):
        for (l, g) in P.elements:
            if l in K.antipode and g in H.antipode:
                antipode[(l, g)] = _kron_map(K.antipode[l], H.antipode[g])
            if l in K.twisted and g in H.twisted:
                twisted[(l, g)] = _kron_map(K.twisted[l], H.twisted[g])
    return HopfGC(H.field, P, dims, comult, counit, basis, mult, unit, antipode, twisted)


def trivial_family(G: FiniteMonoid, field: ScalarField = ScalarField()) -> HopfGC:
    """H_g = k for every g."""
    one = field.one
    dims = {g: 1 for g in G.elements}
    mult = {g: MultTensor((1, 1, 1), {(0, 0): {0: one}}) for g in G.elements}
    unit = {g: {0: one} for g in G.elements}
    comult = {(g, h): CoTensor(1, (1, 1), [{(0, 0): one}]) for g in G.elements for h in G.elements}
    ident = {g: LinMap.identity(1, one) for g in G.elements}
    basis = {g: ("1",) for g in G.elements}
    anti = ident if isinstance(G, FiniteGroup) else {}
    return HopfGC(field, G, dims, comult, {0: one}, basis, mult, unit, dict(anti), dict(anti))


def constant_family(H0: HopfGC, G: FiniteMonoid) -> HopfGC:
    """H_g = H0 for all g, with the same structure maps everywhere."""
    if H0.group.order != 1:
        raise InvalidOrdinaryHopf("the seed algebra must be indexed by the trivial group")
    if not H0.twisted and H0.antipode:
        H0 = derive_twisted_antipode(H0)
    rep = check_hopf(H0)
    if not rep.ok:
        raise InvalidOrdinaryHopf(f"seed algebra fails the Hopf axioms: {rep.summary()}")
    e0 = H0.group.identity
    E = G.elements
    dims = {g: H0.dims[e0] for g in E}
    basis = {g: H0.names(e0) for g in E}
    mult = {g: H0.mult[e0] for g in E}
    unit = {g: dict(H0.unit[e0]) for g in E}
    comult = {(g, h): H0.comult[(e0, e0)] for g in E for h in E}
    anti = {g: H0.antipode[e0] for g in E} if isinstance(G, FiniteGroup) else {}
    twist = {g: H0.twisted[e0] for g in E} if isinstance(G, FiniteGroup) else {}
    return HopfGC(H0.field, G, dims, comult, dict(H0.counit), basis, mult, unit, anti, twist)


# ---------------------------------------------------------------- seed algebras


def kc2_hopf(field: ScalarField = ScalarField()) -> HopfGC:
    """Group algebra of C2: basis (1, x), x^2 = 1, x group-like, S = id."""
    o = field.one
    mult = MultTensor((2, 2, 2), {(0, 0): {0: o}, (0, 1): {1: o}, (1, 0): {1: o}, (1, 1): {0: o}})
    comult = CoTensor(2, (2, 2), [{(0, 0): o}, {(1, 1): o}])
    G = trivial_group()
    S = LinMap.identity(2, o)
    return HopfGC(field, G, {"e": 2}, {("e", "e"): comult}, {0: o, 1: o}, {"e": ("1", "x")},
                  {"e": mult}, {"e": {0: o}}, {"e": S}, {"e": S})


def sweedler_hopf(field: ScalarField = ScalarField()) -> HopfGC:
    """Sweedler's four-dimensional algebra: basis (1, g, x, gx), g^2 = 1, x^2 = 0, xg = -gx."""
    if field.characteristic == 2:
        raise HopfError("Sweedler's algebra needs characteristic other than 2")
    o = field.one
    # basis element g^a x^b sits at index 2*b + a
    def idx(a, b):
        return 2 * b + a

    table = {}
    for a, b, c, d in itertools.product((0, 1), repeat=4):
        if b + d >= 2:
            continue
        sign = -o if (b * c) % 2 else o
        table[(idx(a, b), idx(c, d))] = {idx((a + c) % 2, b + d): sign}
    mult = MultTensor((4, 4, 4), table)
    one, g, x, gx = 0, 1, 2, 3
    rows = [
        {(one, one): o},
        {(g, g): o},
        {(x, one): o, (g, x): o},
        {(gx, g): o, (one, gx): o},
    ]
    comult = CoTensor(4, (4, 4), rows)
    counit = {one: o, g: o}
    S = LinMap(4, 4, [{one: o}, {g: o}, {gx: -o}, {x: o}])
    G = trivial_group()
    H = HopfGC(field, G, {"e": 4}, {("e", "e"): comult}, counit, {"e": ("1", "g", "x", "gx")},
               {"e": mult}, {"e": {one: o}}, {"e": S}, {})
    return derive_twisted_antipode(H)
