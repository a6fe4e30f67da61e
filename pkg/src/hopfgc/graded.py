"""Algebras graded by a discrete Doi-Hopf datum and modules graded by datum sets.

A graded algebra stores one multiplication table per composable pair of components:
``A_{l,x} x A_{l',x'} -> A_{ll',x'}`` exists only when ``x' = x gamma(l')``.
Graded elements are dicts keyed by ``(component, index)``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Optional

from .discrete import (
    DatumSet,
    DiscreteDoiHopfDatum,
    FiniteGroup,
    NotAGroup,
    regular_datum_set,
    validate_discrete,
)
from .doihopf import (
    ComoduleAlgebra,
    DoiHopfDatumTk,
    DoiHopfModule,
    IndexMismatch,
    LambdaGradedAlgebra,
    dual_action_tensor,
    dual_graded_algebra,
)
from .linalg import CoTensor, LinMap, MultTensor, ScalarField, add_term, axpy, evaluate, rank, vec_equal
from .report import ValidationReport


class ValidationFailure(Exception):
    def __init__(self, report: ValidationReport):
        super().__init__(report.summary())
        self.report = report


class ActionAxiomFailure(ValidationFailure):
    pass


class NotClosed(Exception):
    def __init__(self, z, lam):
        super().__init__(f"{z!r}.{lam!r} leaves the subset")
        self.z, self.lam = z, lam


@dataclass(eq=False)
class GradedAlgebra:
    datum: DiscreteDoiHopfDatum
    field: ScalarField
    dims: Dict
    mult: Dict
    units: Dict
    basis: Dict = field(default_factory=dict)

    def components(self):
        return [(lam, x) for lam in self.datum.Lam.elements for x in self.datum.X.carrier]

    def composable(self, k1, k2) -> bool:
        return k2[1] == self.datum.xg(k1[1], k2[0])

    def target(self, k1, k2):
        return (self.datum.Lam.mul(k1[0], k2[0]), k2[1])

    def mul(self, k1, k2, u: dict, v: dict) -> dict:
        t = self.mult.get((k1, k2))
        if t is None or not self.composable(k1, k2):
            return {}
        return t(u, v)

    def unit(self, x) -> dict:
        """1_x as a graded element."""
        e = self.datum.Lam.identity
        return {((e, x), i): c for i, c in self.units.get(x, {}).items()}

    def one(self) -> dict:
        out = {}
        for x in self.datum.X.carrier:
            out.update(self.unit(x))
        return out

    def gmul(self, u: dict, v: dict) -> dict:
        """Product of graded elements."""
        acc: dict = {}
        for (k1, i), a in u.items():
            for (k2, j), b in v.items():
                if not self.composable(k1, k2):
                    continue
                kt = self.target(k1, k2)
                for r, c in self.mul(k1, k2, {i: 1}, {j: 1}).items():
                    add_term(acc, (kt, r), a * b * c)
        return acc

    def basis_elements(self):
        for k in self.components():
            for i in range(self.dims[k]):
                yield k, i


def _require_group_somewhere(d: DiscreteDoiHopfDatum):
    if not isinstance(d.G, FiniteGroup) and not isinstance(d.Lam, FiniteGroup):
        raise NotAGroup("G or Lambda must be a group")


def check_graded_algebra(A: GradedAlgebra, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    d = A.datum
    rep.extend(validate_discrete(d))
    comps = A.components()
    for (k1, k2), t in A.mult.items():
        if not A.composable(k1, k2):
            if t.table:
                rep.fail("graded-algebra:grading", (k1, k2), "nonzero", "0")
            continue
        want = (A.dims[k1], A.dims[k2], A.dims[A.target(k1, k2)])
        if tuple(t.dims) != want:
            rep.fail("graded-algebra:grading", (k1, k2), tuple(t.dims), want)
        else:
            rep.tick("graded-algebra:grading")
    e = d.Lam.identity
    for x in d.X.carrier:
        one = A.units.get(x)
        if one is None:
            rep.fail("graded-algebra:unit-right", ((e, x),), "missing", "1_x")
            rep.fail("graded-algebra:unit-left", ((e, x),), "missing", "1_x")
            continue
        for lam in d.Lam.elements:
            k = (lam, x)
            for i in range(A.dims[k]):
                got = A.mul(k, (e, x), {i: 1}, one)
                rep.expect("graded-algebra:unit-right", (k, i), got, {i: 1}, vec_equal)
            k = (lam, d.xg(x, lam))
            for i in range(A.dims[k]):
                got = A.mul((e, x), k, one, {i: 1})
                rep.expect("graded-algebra:unit-left", (k, i), got, {i: 1}, vec_equal)
    for k1 in comps:
        for l2 in d.Lam.elements:
            k2 = (l2, d.xg(k1[1], l2))
            k12 = A.target(k1, k2)
            for l3 in d.Lam.elements:
                k3 = (l3, d.xg(k2[1], l3))
                k23 = A.target(k2, k3)
                for i, j, m in itertools.product(range(A.dims[k1]), range(A.dims[k2]), range(A.dims[k3])):
                    lhs = A.mul(k12, k3, A.mul(k1, k2, {i: 1}, {j: 1}), {m: 1})
                    rhs = A.mul(k1, k23, {i: 1}, A.mul(k2, k3, {j: 1}, {m: 1}))
                    rep.expect("graded-algebra:assoc", (k1, k2, k3, i, j, m), lhs, rhs, vec_equal)
    return rep


def local_units_report(A: GradedAlgebra) -> dict:
    """Orthogonal idempotents, the global unit of the collapsed algebra, and the equivalent
    characterization via one-sided products with the local units."""
    d = A.datum
    _require_group_somewhere(d)
    rep = ValidationReport()
    X = d.X.carrier
    for x, y in itertools.product(X, X):
        lhs = A.gmul(A.unit(x), A.unit(y))
        rhs = A.unit(x) if x == y else {}
        rep.expect("local-units:orthogonal", (x, y), lhs, rhs, vec_equal)
    one = A.one()
    for k, i in A.basis_elements():
        a = {(k, i): 1}
        rep.expect("local-units:global-unit-right", (k, i), A.gmul(a, one), a, vec_equal)
        rep.expect("local-units:global-unit-left", (k, i), A.gmul(one, a), a, vec_equal)
    collapse = {lam: sum(A.dims[(lam, x)] for x in X) for lam in d.Lam.elements}

    # characterization (b): unital collapse plus A_{l,x}1_{x'} = delta A_{l,x}, 1_x A_{l',x'} = delta A_{l',x'}
    alt = ValidationReport()
    for k, i in A.basis_elements():
        a = {(k, i): 1}
        alt.expect("alt:unital", (k, i), A.gmul(one, a), a, vec_equal)
        alt.expect("alt:unital", (k, i), A.gmul(a, one), a, vec_equal)
    for k in A.components():
        lam, x = k
        for x2 in X:
            right = [A.gmul({(k, i): 1}, A.unit(x2)) for i in range(A.dims[k])]
            left = [A.gmul(A.unit(x2), {(k, i): 1}) for i in range(A.dims[k])]
            # images must lie in A_{l,x} and be all of it exactly when the Kronecker symbol is 1
            for imgs, on, where in ((right, x == x2, "right"), (left, d.xg(x2, lam) == x, "left")):
                inside = all(key == k for v in imgs for key, _ in v)
                r = rank([{i: c for (_, i), c in v.items()} for v in imgs], A.field)
                ok = inside and (r == A.dims[k] if on else r == 0)
                alt.expect(f"alt:{where}", (k, x2), ok, True, lambda p, q: p == q)
    main = check_graded_algebra(A)
    return {
        "report": rep,
        "collapse_dims": collapse,
        "graded_ok": main.ok,
        "alternative_ok": alt.ok,
        "agree": main.ok == alt.ok,
    }


# ---------------------------------------------------------------- constructions


def check_smash_action(B: LambdaGradedAlgebra, action: Dict, H, gamma: Dict,
                       rep: Optional[ValidationReport] = None) -> ValidationReport:
    """Module axioms for h -> b with h in H_{gamma(l)^-1}, multiplicativity and the unit condition."""
    rep = rep if rep is not None else ValidationReport()
    L = B.group
    G = H.group

    def ginv(lam):
        return G.inv(gamma[lam]) if isinstance(G, FiniteGroup) else gamma[L.inv(lam)]

    for lam in L.elements:
        g = ginv(lam)
        act = action[lam]
        for j in range(B.dims[lam]):
            rep.expect("smash-action:unit", (lam, j), act(H.unit[g], {j: 1}), {j: 1}, vec_equal)
            for a, b in itertools.product(range(H.dims[g]), repeat=2):
                lhs = act(H.mul(g, {a: 1}, {b: 1}), {j: 1})
                rhs = act({a: 1}, act({b: 1}, {j: 1}))
                rep.expect("smash-action:assoc", (lam, j, a, b), lhs, rhs, vec_equal)
    for l1, l2 in itertools.product(L.elements, L.elements):
        l12 = L.mul(l1, l2)
        g12, g1, g2 = ginv(l12), ginv(l1), ginv(l2)
        for a in range(H.dims[g12]):
            dh = H.delta(g2, g1, {a: 1})
            for i, j in itertools.product(range(B.dims[l1]), range(B.dims[l2])):
                lhs = action[l12]({a: 1}, B.mul(l1, l2, {i: 1}, {j: 1}))
                rhs: dict = {}
                for (p, q), c in dh.items():
                    axpy(rhs, c, B.mul(l1, l2, action[l1]({q: 1}, {i: 1}), action[l2]({p: 1}, {j: 1})))
                rep.expect("smash-action:multiplicative", (l1, l2, a, i, j), lhs, rhs, vec_equal)
    e = L.identity
    for a in range(H.dims[G.identity]):
        got = action[e]({a: 1}, B.unit)
        want = {k: H.counit.get(a, 0) * c for k, c in B.unit.items() if H.counit.get(a, 0) * c}
        rep.expect("smash-action:counit", (a,), got, want, vec_equal)
    return rep


def smash_product(B: LambdaGradedAlgebra, action: Dict, A: ComoduleAlgebra, gamma: Dict,
                  validate: bool = True) -> GradedAlgebra:
    """B # A with (b#a)(b'#a') = b (a_[1] -> b') # a_[0] a'; basis b_i # a_j at i * dim A_x + j."""
    H = A.H
    d = DiscreteDoiHopfDatum(H.group, B.group, dict(gamma), A.X)
    _require_group_somewhere(d)
    if validate:
        rep = check_smash_action(B, action, H, gamma)
        if not rep.ok:
            raise ActionAxiomFailure(rep)
    L = B.group
    X = A.X.carrier
    dims = {(lam, x): B.dims[lam] * A.dims[x] for lam in L.elements for x in X}
    mult = {}
    for (l1, x), l2 in itertools.product(dims, L.elements):
        x2 = d.xg(x, l2)
        gi = d.gamma_inv(l2)
        k1, k2 = (l1, x), (l2, x2)
        kt = (L.mul(l1, l2), x2)
        dA, dA2 = A.dims[x], A.dims[x2]
        rho = [A.rho(x2, gi, {j: 1}) for j in range(dA)]
        table = {}
        for i, j in itertools.product(range(B.dims[l1]), range(dA)):
            for k, l in itertools.product(range(B.dims[l2]), range(dA2)):
                w: dict = {}
                for (p, q), c in rho[j].items():
                    bpart = B.mul(l1, l2, {i: 1}, action[l2]({q: 1}, {k: 1}))
                    if not bpart:
                        continue
                    apart = A.mul(x2, {p: 1}, {l: 1})
                    for r, u in bpart.items():
                        for s, v in apart.items():
                            add_term(w, r * dA2 + s, c * u * v)
                if w:
                    table[(i * dA + j, k * dA2 + l)] = w
        mult[(k1, k2)] = MultTensor((dims[k1], dims[k2], dims[kt]), table)
    units = {}
    for x in X:
        u: dict = {}
        for i, c in B.unit.items():
            for j, c2 in A.unit[x].items():
                add_term(u, i * A.dims[x] + j, c * c2)
        units[x] = u
    return GradedAlgebra(d, H.field, dims, mult, units)


def datum_smash(D: DoiHopfDatumTk) -> GradedAlgebra:
    """The smash product of the dual algebra of C with A."""
    B = dual_graded_algebra(D.C.C)
    action = {lam: dual_action_tensor(D.C, lam) for lam in B.group.elements}
    return smash_product(B, action, D.A, D.C.gamma)


def koppinen_smash(D: DoiHopfDatumTk) -> GradedAlgebra:
    """Hom(C_{l^-1}, A_x) with (f#g)(c) = f(c_2)_[0] g(c_1 f(c_2)_[1]); E(c_j -> a_i) at j * dim A_x + i."""
    d = D.discrete
    L = d.Lam
    if not isinstance(L, FiniteGroup):
        raise NotAGroup("the Koppinen construction needs Lambda to be a group")
    A, C, MC = D.A, D.C.C, D.C
    X = A.X.carrier
    dims = {(lam, x): C.dims[L.inv(lam)] * A.dims[x] for lam in L.elements for x in X}
    mult = {}
    for (l1, x), l2 in itertools.product(dims, L.elements):
        x2 = d.xg(x, l2)
        gi = d.gamma_inv(l2)
        k1, k2 = (l1, x), (l2, x2)
        l12 = L.mul(l1, l2)
        kt = (l12, x2)
        dA, dA2 = A.dims[x], A.dims[x2]
        i1, i2, i12 = L.inv(l1), L.inv(l2), L.inv(l12)
        dC1, dC2 = C.dims[i1], C.dims[i2]
        comult = C.comult[(i2, i1)]
        rho = [A.rho(x2, gi, {i: 1}) for i in range(dA)]
        act = MC.action[i2]
        # c_p h_s expanded once
        moved = {(p, s): act({p: 1}, {s: 1}) for p in range(dC2) for s in range(D.H.dims[gi])}
        table = {}
        for j, i in itertools.product(range(dC1), range(dA)):
            for k, l in itertools.product(range(dC2), range(dA2)):
                w: dict = {}
                for m in range(C.dims[i12]):
                    val: dict = {}
                    for (p, q), c in comult.rows[m].items():
                        if q != j:
                            continue
                        for (r, s), e in rho[i].items():
                            coef = moved[(p, s)].get(k)
                            if not coef:
                                continue
                            for t, u in A.mul(x2, {r: 1}, {l: 1}).items():
                                add_term(val, t, c * e * coef * u)
                    for t, u in val.items():
                        add_term(w, m * dA2 + t, u)
                if w:
                    table[(j * dA + i, k * dA2 + l)] = w
        mult[(k1, k2)] = MultTensor((dims[k1], dims[k2], dims[kt]), table)
    units = {}
    e = L.identity
    for x in X:
        u: dict = {}
        for j in range(C.dims[e]):
            for i, c in A.unit[x].items():
                add_term(u, j * A.dims[x] + i, C.counit.get(j, 0) * c)
        units[x] = u
    return GradedAlgebra(d, D.field, dims, mult, units)


def alpha_iso(D: DoiHopfDatumTk):
    """alpha(xi # a)(c) = xi(c) a and its inverse f -> sum_k delta_k # f(c_k), per component."""
    d = D.discrete
    L = d.Lam
    A, C = D.A, D.C.C
    alpha, alpha_inv = {}, {}
    for lam in L.elements:
        li = L.inv(lam)
        dC = C.dims[li]
        for x in A.X.carrier:
            dA = A.dims[x]
            n = dC * dA
            cols = []
            for j, i in itertools.product(range(dC), range(dA)):
                xi = {j: 1}
                f: dict = {}
                for k in range(dC):
                    val = evaluate(xi, {k: 1})
                    if val:
                        add_term(f, k * dA + i, val)
                cols.append(f)
            alpha[(lam, x)] = LinMap(n, n, cols)
            inv_cols = []
            for k, i in itertools.product(range(dC), range(dA)):
                # f = E(c_k -> a_i); f(c_m) = delta_{mk} a_i
                out: dict = {}
                for m in range(dC):
                    fm = {i: 1} if m == k else {}
                    for t, c in fm.items():
                        add_term(out, m * dA + t, c)
                inv_cols.append(out)
            alpha_inv[(lam, x)] = LinMap(n, n, inv_cols)
    return alpha, alpha_inv


def check_alpha(D: DoiHopfDatumTk, S: GradedAlgebra, K: GradedAlgebra, alpha: Dict, alpha_inv: Dict,
                rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    for k in S.components():
        a, b = alpha[k], alpha_inv[k]
        rep.expect("alpha:inverse", (k, "alpha.inv"), a.compose(b).is_identity(), True, lambda p, q: p == q)
        rep.expect("alpha:inverse", (k, "inv.alpha"), b.compose(a).is_identity(), True, lambda p, q: p == q)
    for x in S.datum.X.carrier:
        e = S.datum.Lam.identity
        rep.expect("alpha:unit", (x,), alpha[(e, x)](S.units[x]), K.units[x], vec_equal)
    for (k1, k2), t in S.mult.items():
        kt = S.target(k1, k2)
        for i, j in itertools.product(range(S.dims[k1]), range(S.dims[k2])):
            lhs = alpha[kt](t.basis(i, j))
            rhs = K.mul(k1, k2, alpha[k1]({i: 1}), alpha[k2]({j: 1}))
            rep.expect("alpha:multiplicative", (k1, k2, i, j), lhs, rhs, vec_equal)
    return rep


# ---------------------------------------------------------------- graded modules


@dataclass(eq=False)
class GradedModule:
    """Spaces M_y with actions M_y x A_{l, beta(y l)} -> M_{y l}, keyed by (y, (l, x))."""

    algebra: GradedAlgebra
    Y: DatumSet
    dims: Dict
    action: Dict
    basis: Dict = field(default_factory=dict)

    def act(self, y, k, m: dict, a: dict) -> dict:
        t = self.action.get((y, k))
        if t is None or k[1] != self.Y.beta[self.Y.act(y, k[0])]:
            return {}
        return t(m, a)

    def gact(self, m: dict, a: dict) -> dict:
        """Action on graded elements: m keyed by (y, i), a keyed by (component, j)."""
        acc: dict = {}
        for (y, i), c in m.items():
            for (k, j), c2 in a.items():
                yl = self.Y.act(y, k[0])
                for r, v in self.act(y, k, {i: 1}, {j: 1}).items():
                    add_term(acc, (yl, r), c * c2 * v)
        return acc


def check_graded_module(M: GradedModule, rep: Optional[ValidationReport] = None,
                        cross_check: bool = True) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    A, Y = M.algebra, M.Y
    d = A.datum
    rep.extend(validate_discrete(Y))
    for (y, k), t in M.action.items():
        if k[1] != Y.beta[Y.act(y, k[0])]:
            if t.table:
                rep.fail("graded-module:grading", (y, k), "nonzero", "0")
            continue
        want = (M.dims[y], A.dims[k], M.dims[Y.act(y, k[0])])
        if tuple(t.dims) != want:
            rep.fail("graded-module:grading", (y, k), tuple(t.dims), want)
        else:
            rep.tick("graded-module:grading")
    e = d.Lam.identity
    for y in Y.carrier:
        x = Y.beta[y]
        for i in range(M.dims[y]):
            got = M.act(y, (e, x), {i: 1}, A.units.get(x, {}))
            rep.expect("graded-module:unit", (y, i), got, {i: 1}, vec_equal)
    L = d.Lam.elements
    for y, l1, l2 in itertools.product(Y.carrier, L, L):
        y1 = Y.act(y, l1)
        k1 = (l1, Y.beta[y1])
        k2 = (l2, Y.beta[Y.act(y1, l2)])
        k12 = A.target(k1, k2)
        for i, a, b in itertools.product(range(M.dims[y]), range(A.dims[k1]), range(A.dims[k2])):
            lhs = M.act(y1, k2, M.act(y, k1, {i: 1}, {a: 1}), {b: 1})
            rhs = M.act(y, k12, {i: 1}, A.mul(k1, k2, {a: 1}, {b: 1}))
            rep.expect("graded-module:assoc", (y, l1, l2, i, a, b), lhs, rhs, vec_equal)
    if cross_check:
        first = rep.ok
        second = _lambda_set_characterization(M)
        rep.expect("graded-module:characterizations-agree", (), first, second, lambda p, q: p == q)
    return rep


def _lambda_set_characterization(M: GradedModule) -> bool:
    """Graded by the Lambda-set Y, unital for 1 = sum 1_x, and M_y 1_x = delta M_y."""
    A, Y = M.algebra, M.Y
    d = A.datum
    one = A.one()
    for y in Y.carrier:
        imgs = []
        for i in range(M.dims[y]):
            m = {(y, i): 1}
            if not vec_equal(M.gact(m, one), m):
                return False
            for x in d.X.carrier:
                img = M.gact(m, A.unit(x))
                if x == Y.beta[y]:
                    imgs.append({j: c for (_, j), c in img.items()})
                elif img:
                    return False
        if rank(imgs, A.field) != M.dims[y]:
            return False
    for y, (k, j) in itertools.product(Y.carrier, A.basis_elements()):
        for i in range(M.dims[y]):
            img = M.gact({(y, i): 1}, {(k, j): 1})
            if any(key[0] != Y.act(y, k[0]) for key in img):
                return False
    for y in Y.carrier:
        for i in range(M.dims[y]):
            m = {(y, i): 1}
            for (k1, a), (k2, b) in itertools.product(list(A.basis_elements()), repeat=2):
                lhs = M.gact(M.gact(m, {(k1, a): 1}), {(k2, b): 1})
                rhs = M.gact(m, A.gmul({(k1, a): 1}, {(k2, b): 1}))
                if not vec_equal(lhs, rhs):
                    return False
    return True


def regular_graded_module(A: GradedAlgebra) -> GradedModule:
    """A as a right module over itself, graded by Lambda x X."""
    Y = regular_datum_set(A.datum)
    action = {}
    for y in Y.carrier:
        for lam in A.datum.Lam.elements:
            yl = Y.act(y, lam)
            k = (lam, Y.beta[yl])
            action[(y, k)] = A.mult[(y, k)]
    return GradedModule(A, Y, {y: A.dims[y] for y in Y.carrier}, action, dict(A.basis))


def orbit_subset(d: DiscreteDoiHopfDatum, x) -> tuple:
    """Z_x = {(l, x gamma(l))}."""
    return tuple((lam, d.xg(x, lam)) for lam in d.Lam.elements)


def restrict_module(M: GradedModule, Z) -> GradedModule:
    Y = M.Y
    Zs = set(Z)
    for z in Z:
        if z not in set(Y.carrier):
            raise NotClosed(z, None)
        for lam in Y.datum.Lam.elements:
            if Y.act(z, lam) not in Zs:
                raise NotClosed(z, lam)
    carrier = tuple(y for y in Y.carrier if y in Zs)
    Y2 = DatumSet(Y.datum, carrier, {(z, lam): Y.act(z, lam) for z in carrier for lam in Y.datum.Lam.elements},
                  {z: Y.beta[z] for z in carrier})
    action = {(y, k): t for (y, k), t in M.action.items() if y in Zs}
    return GradedModule(M.algebra, Y2, {z: M.dims[z] for z in carrier}, action,
                        {z: M.basis[z] for z in carrier if z in M.basis})


def functor_TZ(M: DoiHopfModule, K: Optional[GradedAlgebra] = None) -> GradedModule:
    """Graded module over the Koppinen algebra with m f = m_[0] f(m_[1])."""
    D = M.datum
    K = K if K is not None else koppinen_smash(D)
    L = D.discrete.Lam
    Y = M.Y
    action = {}
    for y, lam in itertools.product(Y.carrier, L.elements):
        yl = Y.act(y, lam)
        x = Y.beta[yl]
        li = L.inv(lam)
        dA = D.A.dims[x]
        dC = D.C.C.dims[li]
        table = {}
        for i in range(M.dims[y]):
            rho = M.rho(yl, li, {i: 1})
            for j, l in itertools.product(range(dC), range(dA)):
                w: dict = {}
                for (p, q), c in rho.items():
                    if q == j:
                        axpy(w, c, M.act(yl, {p: 1}, {l: 1}))
                if w:
                    table[(i, j * dA + l)] = w
        action[(y, (lam, x))] = MultTensor((M.dims[y], dC * dA, M.dims[yl]), table)
    return GradedModule(K, Y, dict(M.dims), action, dict(M.basis))


def inverse_functor(N: GradedModule, D: DoiHopfDatumTk) -> DoiHopfModule:
    """Action m a = m alpha(eps # a), coaction rho(m) = sum_k m alpha(delta_k # 1) (x) c_k."""
    L = D.discrete.Lam
    A, C = D.A, D.C.C
    Y = N.Y
    alpha, _ = alpha_iso(D)
    e = L.identity
    action = {}
    for y in Y.carrier:
        x = Y.beta[y]
        dA = A.dims[x]
        table = {}
        for i in range(N.dims[y]):
            for a in range(dA):
                sm: dict = {}
                for j, c in C.counit.items():
                    add_term(sm, j * dA + a, c)
                w = N.act(y, (e, x), {i: 1}, alpha[(e, x)](sm))
                if w:
                    table[(i, a)] = w
        action[y] = MultTensor((N.dims[y], dA, N.dims[y]), table)
    coaction = {}
    for y, lam in itertools.product(Y.carrier, L.elements):
        yl = Y.act(y, lam)
        x = Y.beta[y]
        dA = A.dims[x]
        li = L.inv(lam)
        rows = []
        for i in range(N.dims[yl]):
            row: dict = {}
            for k in range(C.dims[lam]):
                sm: dict = {}
                for t, c in A.unit[x].items():
                    add_term(sm, k * dA + t, c)
                for r, c in N.act(yl, (li, x), {i: 1}, alpha[(li, x)](sm)).items():
                    add_term(row, (r, k), c)
            rows.append(row)
        coaction[(y, lam)] = CoTensor(N.dims[yl], (N.dims[y], C.dims[lam]), rows)
    return DoiHopfModule(D, Y, dict(N.dims), action, coaction, dict(N.basis))


def same_graded_module(M: GradedModule, N: GradedModule) -> bool:
    if tuple(M.Y.carrier) != tuple(N.Y.carrier) or M.dims != N.dims:
        return False
    keys = set(M.action) | set(N.action)
    for key in keys:
        a, b = M.action.get(key), N.action.get(key)
        if a is None or b is None:
            if (a or b).table:
                return False
        elif not a == b:
            return False
    return True


def same_doihopf_module(M: DoiHopfModule, N: DoiHopfModule) -> bool:
    if tuple(M.Y.carrier) != tuple(N.Y.carrier) or M.dims != N.dims:
        return False
    if set(M.action) != set(N.action) or set(M.coaction) != set(N.coaction):
        return False
    return all(M.action[k] == N.action[k] for k in M.action) and all(
        M.coaction[k] == N.coaction[k] for k in M.coaction
    )


def check_graded_morphism(flavor: str, source: GradedModule, target: GradedModule, eta: Dict, phis: Dict,
                          rep: Optional[ValidationReport] = None) -> ValidationReport:
    """flavor "Z": eta: Y -> Y', phi_y: M_y -> M'_{eta(y)}; flavor "T": eta: Y' -> Y, phi_{y'}: M_{eta(y')} -> M'_{y'}."""
    rep = rep if rep is not None else ValidationReport()
    Y, Y2 = source.Y, target.Y
    A = source.algebra
    L = A.datum.Lam
    if flavor == "T":
        dom, cod = Y2, Y
    elif flavor == "Z":
        dom, cod = Y, Y2
    else:
        raise ValueError("flavor must be 'T' or 'Z'")
    if set(eta) != set(dom.carrier) or any(v not in set(cod.carrier) for v in eta.values()):
        raise IndexMismatch("eta is not a map between the expected carriers")
    if set(phis) != set(dom.carrier):
        raise IndexMismatch("phi family is indexed by the wrong carrier")
    for z in dom.carrier:
        if dom.beta[z] != cod.beta[eta[z]]:
            rep.fail("graded-morphism:beta", (z,), cod.beta[eta[z]], dom.beta[z])
        for lam in L.elements:
            if eta[dom.act(z, lam)] != cod.act(eta[z], lam):
                rep.fail("graded-morphism:equivariant", (z, lam), eta[dom.act(z, lam)], cod.act(eta[z], lam))
    if not rep.ok:
        return rep
    for z in dom.carrier:
        ys, yt = (eta[z], z) if flavor == "T" else (z, eta[z])
        phi = phis[z]
        if (phi.n_in, phi.n_out) != (source.dims[ys], target.dims[yt]):
            raise IndexMismatch(f"phi at {z!r} has shape {(phi.n_in, phi.n_out)}")
        for lam in L.elements:
            zl = dom.act(z, lam)
            k = (lam, Y.beta[Y.act(ys, lam)])
            for i, a in itertools.product(range(source.dims[ys]), range(A.dims[k])):
                lhs = phis[zl](source.act(ys, k, {i: 1}, {a: 1}))
                rhs = target.act(yt, k, phi({i: 1}), {a: 1})
                rep.expect("graded-morphism:square", (z, lam, i, a), lhs, rhs, vec_equal)
    return rep
