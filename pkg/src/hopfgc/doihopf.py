"""Comodule algebras, module coalgebras, Doi-Hopf data and Doi-Hopf modules over group-indexed families.

Also the duality pieces used by the graded constructions: the graded algebra dual to a
group-coalgebra, its left action, and the conversion of generalized Yetter-Drinfeld data.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Dict, Optional

from .discrete import (
    DatumSet,
    DiscreteDoiHopfDatum,
    FiniteGroup,
    FiniteMonoid,
    RightGSet,
    require_group,
    validate_discrete,
)
from .hopf import (
    GroupCoalgebra,
    HopfGC,
    SemiHopfGC,
    _flatten,
    _sum_over,
    check_algebra,
    check_group_coalgebra,
    opposite_hgc,
    tensor_apply,
    tensor_mul,
    tensor_hgc,
)
from .linalg import (
    CoTensor,
    MultTensor,
    ScalarField,
    add_term,
    axpy,
    evaluate,
    opposite_convolution,
    scale,
    vec_equal,
)
from .report import ValidationReport


class IndexMismatch(Exception):
    pass


class ShapeMismatch(Exception):
    pass


# ---------------------------------------------------------------- types


@dataclass(eq=False)
class ComoduleAlgebra:
    """Algebras A_x (x in a right G-set) with algebra maps rho_{x,g}: A_{xg} -> A_x (x) H_g."""

    H: SemiHopfGC
    X: RightGSet
    dims: Dict
    mult: Dict
    unit: Dict
    coaction: Dict
    basis: Dict = field(default_factory=dict)

    def rho(self, x, g, v: dict) -> dict:
        return self.coaction[(x, g)](v)

    def mul(self, x, u, v):
        return self.mult[x](u, v)


@dataclass(eq=False)
class ModuleCoalgebra:
    """A group-coalgebra C over Lambda with right actions C_l (x) H_{gamma(l)} -> C_l."""

    H: SemiHopfGC
    C: GroupCoalgebra
    gamma: Dict
    action: Dict

    def act(self, lam, c: dict, h: dict) -> dict:
        return self.action[lam](c, h)


@dataclass(eq=False)
class DoiHopfDatumTk:
    H: SemiHopfGC
    A: ComoduleAlgebra
    C: ModuleCoalgebra

    @property
    def field(self) -> ScalarField:
        return self.H.field

    @property
    def discrete(self) -> DiscreteDoiHopfDatum:
        if not hasattr(self, "_discrete"):
            self._discrete = DiscreteDoiHopfDatum(self.H.group, self.C.C.group, dict(self.C.gamma), self.A.X)
        return self._discrete


@dataclass(eq=False)
class DoiHopfModule:
    """Spaces M_y over a datum set Y, actions of A_{beta(y)}, coactions M_{y l} -> M_y (x) C_l."""

    datum: DoiHopfDatumTk
    Y: DatumSet
    dims: Dict
    action: Dict
    coaction: Dict
    basis: Dict = field(default_factory=dict)

    def rho(self, y, lam, v):
        return self.coaction[(y, lam)](v)

    def act(self, y, m, a):
        return self.action[y](m, a)


@dataclass(eq=False)
class LambdaGradedAlgebra:
    """A unital algebra graded by a group: mult[(l, l')] maps B_l x B_l' -> B_{ll'}."""

    field: ScalarField
    group: FiniteMonoid
    dims: Dict
    mult: Dict
    unit: dict

    def mul(self, l1, l2, u, v):
        return self.mult[(l1, l2)](u, v)


# ---------------------------------------------------------------- validators


def check_comodule_algebra(A: ComoduleAlgebra, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    H, X = A.H, A.X
    G = H.group
    for x in X.carrier:
        check_algebra(A.mult[x], A.unit[x], A.dims[x], rep, "comodule-algebra:algebra", (x,))
    for x, g in itertools.product(X.carrier, G.elements):
        src = X.act(x, g)
        for i, j in itertools.product(range(A.dims[src]), repeat=2):
            lhs = A.rho(x, g, A.mul(src, {i: 1}, {j: 1}))
            rhs = tensor_mul(A.mult[x], H.mult[g], A.rho(x, g, {i: 1}), A.rho(x, g, {j: 1}))
            rep.expect("comodule-algebra:multiplicative", (x, g, i, j), lhs, rhs, vec_equal)
        lhs = A.rho(x, g, A.unit[src])
        rhs = {(p, q): a * b for p, a in A.unit[x].items() for q, b in H.unit[g].items() if a * b}
        rep.expect("comodule-algebra:unital", (x, g), lhs, rhs, vec_equal)
    for x, g, h in itertools.product(X.carrier, G.elements, G.elements):
        src = X.act(x, G.mul(g, h))
        xg = X.act(x, g)
        for i in range(A.dims[src]):
            lhs = _flatten(tensor_apply(A.rho(x, G.mul(g, h), {i: 1}), None, lambda j: H.delta(g, h, {j: 1})))
            rhs = _flatten(tensor_apply(A.rho(xg, h, {i: 1}), lambda j: A.rho(x, g, {j: 1}), None))
            rep.expect("comodule-algebra:coassoc", (x, g, h, i), lhs, rhs, vec_equal)
    e = G.identity
    for x in X.carrier:
        for i in range(A.dims[x]):
            got = _sum_over(A.rho(x, e, {i: 1}), lambda k: scale(H.counit.get(k[1], 0), {k[0]: 1}))
            rep.expect("comodule-algebra:counit", (x, i), got, {i: 1}, vec_equal)
    return rep


def check_module_coalgebra(MC: ModuleCoalgebra, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    H, C = MC.H, MC.C
    L = C.group
    check_group_coalgebra(C, rep)
    for lam in L.elements:
        g = MC.gamma[lam]
        act = MC.action[lam]
        for i in range(C.dims[lam]):
            rep.expect("module-coalgebra:unit", (lam, i), act({i: 1}, H.unit[g]), {i: 1}, vec_equal)
            for a, b in itertools.product(range(H.dims[g]), repeat=2):
                lhs = act(act({i: 1}, {a: 1}), {b: 1})
                rhs = act({i: 1}, H.mul(g, {a: 1}, {b: 1}))
                rep.expect("module-coalgebra:assoc", (lam, i, a, b), lhs, rhs, vec_equal)
    for l1, l2 in itertools.product(L.elements, L.elements):
        src = L.mul(l1, l2)
        g1, g2, gs = MC.gamma[l1], MC.gamma[l2], MC.gamma[src]
        for i in range(C.dims[src]):
            dc = C.delta(l1, l2, {i: 1})
            for a in range(H.dims[gs]):
                lhs = C.delta(l1, l2, MC.act(src, {i: 1}, {a: 1}))
                rhs = tensor_mul(MC.action[l1], MC.action[l2], dc, H.delta(g1, g2, {a: 1}))
                rep.expect("module-coalgebra:comult", (l1, l2, i, a), lhs, rhs, vec_equal)
    e = L.identity
    for i, a in itertools.product(range(C.dims[e]), range(H.dims[MC.gamma[e]])):
        lhs = C.eps(MC.act(e, {i: 1}, {a: 1}))
        rhs = C.counit.get(i, 0) * H.counit.get(a, 0)
        rep.expect("module-coalgebra:counit", (i, a), lhs, rhs, lambda p, q: p == q)
    return rep


def check_doihopf_datum(D: DoiHopfDatumTk, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    rep.extend(validate_discrete(D.discrete))
    check_comodule_algebra(D.A, rep)
    check_module_coalgebra(D.C, rep)
    return rep


def check_doihopf_module(M: DoiHopfModule, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    D = M.datum
    A, C = D.A, D.C.C
    Y = M.Y
    L = C.group
    rep.extend(validate_discrete(Y))
    for y in Y.carrier:
        x = Y.beta[y]
        act = M.action[y]
        for i in range(M.dims[y]):
            rep.expect("dh-module:unit", (y, i), act({i: 1}, A.unit[x]), {i: 1}, vec_equal)
            for a, b in itertools.product(range(A.dims[x]), repeat=2):
                lhs = act(act({i: 1}, {a: 1}), {b: 1})
                rhs = act({i: 1}, A.mul(x, {a: 1}, {b: 1}))
                rep.expect("dh-module:assoc", (y, i, a, b), lhs, rhs, vec_equal)
    for y, l1, l2 in itertools.product(Y.carrier, L.elements, L.elements):
        src = Y.act(y, L.mul(l1, l2))
        yl = Y.act(y, l1)
        for i in range(M.dims[src]):
            lhs = _flatten(tensor_apply(M.rho(y, L.mul(l1, l2), {i: 1}), None, lambda j: C.delta(l1, l2, {j: 1})))
            rhs = _flatten(tensor_apply(M.rho(yl, l2, {i: 1}), lambda j: M.rho(y, l1, {j: 1}), None))
            rep.expect("dh-module:coassoc", (y, l1, l2, i), lhs, rhs, vec_equal)
    e = L.identity
    for y in Y.carrier:
        for i in range(M.dims[y]):
            got = _sum_over(M.rho(y, e, {i: 1}), lambda k: scale(C.counit.get(k[1], 0), {k[0]: 1}))
            rep.expect("dh-module:counit", (y, i), got, {i: 1}, vec_equal)
    # compatibility of action and coaction
    for y, lam in itertools.product(Y.carrier, L.elements):
        src = Y.act(y, lam)
        xs, x = Y.beta[src], Y.beta[y]
        g = D.C.gamma[lam]
        for i, a in itertools.product(range(M.dims[src]), range(A.dims[xs])):
            lhs = M.rho(y, lam, M.act(src, {i: 1}, {a: 1}))
            rhs = tensor_mul(M.action[y], D.C.action[lam], M.rho(y, lam, {i: 1}), A.rho(x, g, {a: 1}))
            rep.expect("dh-module:compat", (y, lam, i, a), lhs, rhs, vec_equal)
    return rep


def check_dh_morphism(flavor: str, source: DoiHopfModule, target: DoiHopfModule, eta: Dict, phis: Dict,
                      rep: Optional[ValidationReport] = None) -> ValidationReport:
    """Morphism check; flavor "T" has eta: Y' -> Y and phi_{y'}: M_{eta(y')} -> M'_{y'},
    flavor "Z" has eta: Y -> Y' and phi_y: M_y -> M'_{eta(y)}."""
    rep = rep if rep is not None else ValidationReport()
    Y, Y2 = source.Y, target.Y
    L = source.datum.C.C.group
    A = source.datum.A
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
    # eta is a map of datum sets
    for z in dom.carrier:
        if dom.beta[z] != cod.beta[eta[z]]:
            rep.fail("morphism:beta", (z,), cod.beta[eta[z]], dom.beta[z])
        for lam in L.elements:
            if eta[dom.act(z, lam)] != cod.act(eta[z], lam):
                rep.fail("morphism:equivariant", (z, lam), eta[dom.act(z, lam)], cod.act(eta[z], lam))
    if not rep.ok:
        return rep

    if flavor == "T":
        def src_space(z):  # domain of phi_z
            return source, eta[z]

        def tgt_space(z):
            return target, z
    else:
        def src_space(z):
            return source, z

        def tgt_space(z):
            return target, eta[z]

    for z in dom.carrier:
        Msrc, ys = src_space(z)
        Mtgt, yt = tgt_space(z)
        phi = phis[z]
        if (phi.n_in, phi.n_out) != (Msrc.dims[ys], Mtgt.dims[yt]):
            raise IndexMismatch(f"phi at {z!r} has shape {(phi.n_in, phi.n_out)}")
        x = Y.beta[ys]
        for i, a in itertools.product(range(Msrc.dims[ys]), range(A.dims[x])):
            lhs = phi(Msrc.act(ys, {i: 1}, {a: 1}))
            rhs = Mtgt.act(yt, phi({i: 1}), {a: 1})
            rep.expect("morphism:linear", (z, i, a), lhs, rhs, vec_equal)
        for lam in L.elements:
            zl = dom.act(z, lam)
            _, ysl = src_space(zl)
            phil = phis[zl]
            for i in range(Msrc.dims[ysl]):
                lhs = tensor_apply(Msrc.rho(ys, lam, {i: 1}), lambda j: phi({j: 1}), None)
                rhs = Mtgt.rho(yt, lam, phil({i: 1}))
                rep.expect("morphism:colinear", (z, lam, i), lhs, rhs, vec_equal)
    return rep


# ---------------------------------------------------------------- duality


def dual_graded_algebra(C: GroupCoalgebra) -> LambdaGradedAlgebra:
    """B_l = C*_{l^-1} with the opposite convolution product; the unit is the counit."""
    L = C.group
    if not isinstance(L, FiniteGroup):
        from .discrete import NotAGroup

        raise NotAGroup("the coalgebra index monoid must be a group")
    dims = {lam: C.dims[L.inv(lam)] for lam in L.elements}
    mult = {}
    for l1, l2 in itertools.product(L.elements, L.elements):
        comult = C.comult[(L.inv(l2), L.inv(l1))]
        table = {}
        for i in range(dims[l1]):
            for j in range(dims[l2]):
                w = opposite_convolution(comult, {i: 1}, {j: 1})
                if w:
                    table[(i, j)] = w
        mult[(l1, l2)] = MultTensor((dims[l1], dims[l2], dims[L.mul(l1, l2)]), table)
    return LambdaGradedAlgebra(C.field, L, dims, mult, dict(C.counit))


def check_lambda_graded(B: LambdaGradedAlgebra, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    L = B.group
    E = L.elements
    for a, b, c in itertools.product(E, E, E):
        ab, bc = L.mul(a, b), L.mul(b, c)
        for i, j, k in itertools.product(range(B.dims[a]), range(B.dims[b]), range(B.dims[c])):
            lhs = B.mul(ab, c, B.mul(a, b, {i: 1}, {j: 1}), {k: 1})
            rhs = B.mul(a, bc, {i: 1}, B.mul(b, c, {j: 1}, {k: 1}))
            rep.expect("lambda-graded:assoc", (a, b, c, i, j, k), lhs, rhs, vec_equal)
    e = L.identity
    for a in E:
        for i in range(B.dims[a]):
            rep.expect("lambda-graded:unit-left", (a, i), B.mul(e, a, B.unit, {i: 1}), {i: 1}, vec_equal)
            rep.expect("lambda-graded:unit-right", (a, i), B.mul(a, e, {i: 1}, B.unit), {i: 1}, vec_equal)
    return rep


def left_dual_action(MC: ModuleCoalgebra, lam, xi: dict, h: dict) -> dict:
    """(h -> xi)(c) = xi(c h) for xi in C*_{lam^-1} and h in H_{gamma(lam)^-1}."""
    L = require_group(MC.C.group)
    li = L.inv(lam)
    act = MC.action[li]
    out = {}
    for k in range(MC.C.dims[li]):
        val = evaluate(xi, act({k: 1}, h))
        if val:
            out[k] = val
    return out


def dual_action_tensor(MC: ModuleCoalgebra, lam) -> MultTensor:
    """The left action H_{gamma(lam)^-1} x B_lam -> B_lam as a table."""
    L = require_group(MC.C.group)
    li = L.inv(lam)
    g = MC.gamma[li]
    dB = MC.C.dims[li]
    table = {}
    for a in range(MC.H.dims[g]):
        for j in range(dB):
            w = left_dual_action(MC, lam, {j: 1}, {a: 1})
            if w:
                table[(a, j)] = w
    return MultTensor((MC.H.dims[g], dB, dB), table)


def check_dual_action(MC: ModuleCoalgebra, rep: Optional[ValidationReport] = None) -> ValidationReport:
    """Multiplicativity of the dual action, its unit law, and the dual-basis identity."""
    rep = rep if rep is not None else ValidationReport()
    H = MC.H
    L = require_group(MC.C.group)
    G = H.group
    B = dual_graded_algebra(MC.C)
    gam = MC.gamma
    for l1, l2 in itertools.product(L.elements, L.elements):
        g12 = G.inv(gam[L.mul(l1, l2)])
        g1, g2 = G.inv(gam[l1]), G.inv(gam[l2])
        for a in range(H.dims[g12]):
            dh = H.delta(g2, g1, {a: 1})
            for i, j in itertools.product(range(B.dims[l1]), range(B.dims[l2])):
                lhs = left_dual_action(MC, L.mul(l1, l2), B.mul(l1, l2, {i: 1}, {j: 1}), {a: 1})
                rhs = {}
                for (p, q), c in dh.items():
                    axpy(rhs, c, B.mul(l1, l2, left_dual_action(MC, l1, {i: 1}, {q: 1}),
                                       left_dual_action(MC, l2, {j: 1}, {p: 1})))
                rep.expect("dual-action:multiplicative", (l1, l2, a, i, j), lhs, rhs, vec_equal)
    e = L.identity
    for a in range(H.dims[G.identity]):
        lhs = left_dual_action(MC, e, B.unit, {a: 1})
        rep.expect("dual-action:unit", (a,), lhs, scale(H.counit.get(a, 0), B.unit), vec_equal)
    # h -> xi^(g) (x) c^(g) = xi^(g) (x) c^(g) h for h in H_{gamma(g)}
    for lam in L.elements:
        g = gam[lam]
        act = MC.action[lam]
        dim = MC.C.dims[lam]
        lb = L.inv(lam)  # xi^(lam) lives in B_{lam^-1}
        for a in range(H.dims[g]):
            lhs, rhs = {}, {}
            for i in range(dim):
                for k, c in left_dual_action(MC, lb, {i: 1}, {a: 1}).items():
                    add_term(lhs, (k, i), c)
                for k, c in act({i: 1}, {a: 1}).items():
                    add_term(rhs, (i, k), c)
            rep.expect("dual-action:dual-basis", (lam, a), lhs, rhs, vec_equal)
    return rep


# ---------------------------------------------------------------- phi families


def check_phi_family(H: HopfGC, x0, side: str, phis: Dict, rep: Optional[ValidationReport] = None) -> ValidationReport:
    """phi_l: H_{x0 l x0^-1} -> H_l (side "left") or H_{x0^-1 l x0} -> H_l (side "right")."""
    rep = rep if rep is not None else ValidationReport()
    G = require_group(H.group)
    if side == "left":
        def src(l):
            return G.mul(x0, l, G.inv(x0))
    elif side == "right":
        def src(l):
            return G.mul(G.inv(x0), l, x0)
    else:
        raise ValueError("side must be 'left' or 'right'")
    for l in G.elements:
        if l not in phis:
            raise ShapeMismatch(f"phi missing for {l!r}")
        p = phis[l]
        if (p.n_in, p.n_out) != (H.dims[src(l)], H.dims[l]):
            raise ShapeMismatch(f"phi_{l} has shape {(p.n_in, p.n_out)}")
    for l in G.elements:
        s = src(l)
        p = phis[l]
        for i, j in itertools.product(range(H.dims[s]), repeat=2):
            lhs = p(H.mul(s, {i: 1}, {j: 1}))
            rhs = H.mul(l, p({i: 1}), p({j: 1}))
            rep.expect("phi:multiplicative", (l, i, j), lhs, rhs, vec_equal)
        rep.expect("phi:unital", (l,), p(H.unit[s]), H.unit[l], vec_equal)
    e = G.identity
    for i in range(H.dims[e]):
        rep.expect("phi:counit", (i,), H.eps(phis[e]({i: 1})), H.counit.get(i, 0), lambda a, b: a == b)
    for l1, l2 in itertools.product(G.elements, G.elements):
        l12 = G.mul(l1, l2)
        for i in range(H.dims[src(l12)]):
            lhs = H.delta(l1, l2, phis[l12]({i: 1}))
            rhs = tensor_apply(H.delta(src(l1), src(l2), {i: 1}),
                               lambda j: phis[l1]({j: 1}), lambda j: phis[l2]({j: 1}))
            rep.expect("phi:comult", (l1, l2, i), lhs, rhs, vec_equal)
    return rep


# ---------------------------------------------------------------- generalized Yetter-Drinfeld data


@dataclass(eq=False)
class BiGSet:
    """A set with a left L-action and a right G-action that commute."""

    carrier: tuple
    L: FiniteGroup
    G: FiniteGroup
    left: Dict
    right: Dict

    def lxg(self, l, x, g):
        return self.right[(self.left[(l, x)], g)]


@dataclass(eq=False)
class BicomoduleAlgebra:
    """Algebras A_x with three-way coactions rho_{l,x,g}: A_{lxg} -> K_l (x) A_x (x) H_g."""

    K: HopfGC
    H: HopfGC
    X: BiGSet
    dims: Dict
    mult: Dict
    unit: Dict
    coaction: Dict


@dataclass(eq=False)
class BimoduleCoalgebra:
    """Group-coalgebra C over Lambda with left K_{psi(l)}- and right H_{gamma(l)}-actions."""

    K: HopfGC
    H: HopfGC
    C: GroupCoalgebra
    psi: Dict
    gamma: Dict
    left: Dict
    right: Dict


def check_bicomodule_algebra(A: BicomoduleAlgebra, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    K, H, X = A.K, A.H, A.X
    L, G = K.group, H.group
    for x in X.carrier:
        check_algebra(A.mult[x], A.unit[x], A.dims[x], rep, "bicomodule:algebra", (x,))
    for l, x, g in itertools.product(L.elements, X.carrier, G.elements):
        src = X.lxg(l, x, g)
        rho = A.coaction[(l, x, g)]
        for i, j in itertools.product(range(A.dims[src]), repeat=2):
            lhs = rho(A.mult[src]({i: 1}, {j: 1}))
            ri, rj = rho({i: 1}), rho({j: 1})
            rhs = {}
            for (a, b, c), s in ri.items():
                for (a2, b2, c2), t in rj.items():
                    for p, u in K.mult[l].basis(a, a2).items():
                        for q, v in A.mult[x].basis(b, b2).items():
                            for r, w in H.mult[g].basis(c, c2).items():
                                add_term(rhs, (p, q, r), s * t * u * v * w)
            rep.expect("bicomodule:multiplicative", (l, x, g, i, j), lhs, rhs, vec_equal)
        one = {}
        for p, u in K.unit[l].items():
            for q, v in A.unit[x].items():
                for r, w in H.unit[g].items():
                    add_term(one, (p, q, r), u * v * w)
        rep.expect("bicomodule:unital", (l, x, g), rho(A.unit[src]), one, vec_equal)
    for l1, l2, x, g1, g2 in itertools.product(L.elements, L.elements, X.carrier, G.elements, G.elements):
        mid = X.lxg(l2, x, g1)
        src = X.lxg(l1, mid, g2)
        for i in range(A.dims[src]):
            lhs = _flatten(tensor_apply(A.coaction[(l1, mid, g2)]({i: 1}), None,
                                        lambda j: A.coaction[(l2, x, g1)]({j: 1}), None))
            big = A.coaction[(L.mul(l1, l2), x, G.mul(g1, g2))]({i: 1})
            rhs = _flatten(tensor_apply(big, lambda j: K.delta(l1, l2, {j: 1}), None,
                                        lambda j: H.delta(g1, g2, {j: 1})))
            rep.expect("bicomodule:coassoc", (l1, l2, x, g1, g2, i), lhs, rhs, vec_equal)
    eL, eG = L.identity, G.identity
    for x in X.carrier:
        for i in range(A.dims[x]):
            got = {}
            for (a, b, c), s in A.coaction[(eL, x, eG)]({i: 1}).items():
                add_term(got, b, s * K.counit.get(a, 0) * H.counit.get(c, 0))
            rep.expect("bicomodule:counit", (x, i), got, {i: 1}, vec_equal)
    return rep


def check_bimodule_coalgebra(B: BimoduleCoalgebra, rep: Optional[ValidationReport] = None) -> ValidationReport:
    rep = rep if rep is not None else ValidationReport()
    K, H, C = B.K, B.H, B.C
    Lam = C.group
    check_group_coalgebra(C, rep)
    for lam in Lam.elements:
        l, g = B.psi[lam], B.gamma[lam]
        left, right = B.left[lam], B.right[lam]
        for i in range(C.dims[lam]):
            rep.expect("bimodule:unit", (lam, i), left(K.unit[l], right({i: 1}, H.unit[g])), {i: 1}, vec_equal)
            for a, b in itertools.product(range(K.dims[l]), range(H.dims[g])):
                lhs = right(left({a: 1}, {i: 1}), {b: 1})
                rhs = left({a: 1}, right({i: 1}, {b: 1}))
                rep.expect("bimodule:commute", (lam, i, a, b), lhs, rhs, vec_equal)
    for l1, l2 in itertools.product(Lam.elements, Lam.elements):
        src = Lam.mul(l1, l2)
        for i, a, b in itertools.product(range(C.dims[src]), range(K.dims[B.psi[src]]), range(H.dims[B.gamma[src]])):
            lhs = C.delta(l1, l2, B.right[src](B.left[src]({a: 1}, {i: 1}), {b: 1}))
            dk = K.delta(B.psi[l1], B.psi[l2], {a: 1})
            dc = C.delta(l1, l2, {i: 1})
            dh = H.delta(B.gamma[l1], B.gamma[l2], {b: 1})
            rhs = {}
            for (k1, k2), s in dk.items():
                for (c1, c2), t in dc.items():
                    for (h1, h2), u in dh.items():
                        left1 = B.right[l1](B.left[l1]({k1: 1}, {c1: 1}), {h1: 1})
                        left2 = B.right[l2](B.left[l2]({k2: 1}, {c2: 1}), {h2: 1})
                        for p, v in left1.items():
                            for q, w in left2.items():
                                add_term(rhs, (p, q), s * t * u * v * w)
            rep.expect("bimodule:comult", (l1, l2, i, a, b), lhs, rhs, vec_equal)
    e = Lam.identity
    for i, a, b in itertools.product(range(C.dims[e]), range(K.dims[B.psi[e]]), range(H.dims[B.gamma[e]])):
        lhs = C.eps(B.right[e](B.left[e]({a: 1}, {i: 1}), {b: 1}))
        rhs = K.counit.get(a, 0) * C.counit.get(i, 0) * H.counit.get(b, 0)
        rep.expect("bimodule:counit", (i, a, b), lhs, rhs, lambda p, q: p == q)
    return rep


def gyd_to_doihopf(K: HopfGC, H: HopfGC, A: BicomoduleAlgebra, C: BimoduleCoalgebra,
                   validate: bool = True) -> DoiHopfDatumTk:
    """Doi-Hopf datum over K^op (x) H: rho_{x,(l,g)}(a) = a_[0,x] (x) S_l(a_[-1,l^-1]) (x) a_[1,g]."""
    if validate:
        rep = check_bicomodule_algebra(A)
        check_bimodule_coalgebra(C, rep)
        if not rep.ok:
            from .graded import ValidationFailure

            raise ValidationFailure(rep)
    P = tensor_hgc(opposite_hgc(K), H)
    L = K.group
    LG = P.group
    X = A.X
    action = {(x, (l, g)): X.lxg(L.inv(l), x, g) for x in X.carrier for (l, g) in LG.elements}
    Xr = RightGSet(X.carrier, LG, action)
    coaction = {}
    for x in X.carrier:
        for (l, g) in LG.elements:
            li = L.inv(l)
            src = X.lxg(li, x, g)
            dh = H.dims[g]
            rows = []
            for i in range(A.dims[src]):
                row = {}
                for (k, a, h), c in A.coaction[(li, x, g)]({i: 1}).items():
                    for p, s in K.S(l, {k: 1}).items():
                        add_term(row, (a, p * dh + h), c * s)
                rows.append(row)
            coaction[(x, (l, g))] = CoTensor(A.dims[src], (A.dims[x], P.dims[(l, g)]), rows)
    CA = ComoduleAlgebra(P, Xr, dict(A.dims), dict(A.mult), dict(A.unit), coaction)
    gamma = {lam: (C.psi[lam], C.gamma[lam]) for lam in C.C.group.elements}
    act = {}
    for lam in C.C.group.elements:
        l, g = gamma[lam]
        dh = H.dims[g]
        dc = C.C.dims[lam]
        table = {}
        for i in range(dc):
            for p in range(K.dims[l]):
                for q in range(dh):
                    w = C.right[lam](C.left[lam]({p: 1}, {i: 1}), {q: 1})
                    if w:
                        table[(i, p * dh + q)] = w
        act[lam] = MultTensor((dc, P.dims[(l, g)], dc), table)
    MC = ModuleCoalgebra(P, C.C, gamma, act)
    return DoiHopfDatumTk(P, CA, MC)


def check_gyd_module(K: HopfGC, H: HopfGC, A: BicomoduleAlgebra, C: BimoduleCoalgebra, Y: DatumSet,
                     dims: Dict, action: Dict, coaction: Dict,
                     rep: Optional[ValidationReport] = None) -> ValidationReport:
    """rho_{v,l}(ma) = m_[0] a_[0] (x) S_{psi(l)}(a_[-1]) m_[1] a_[2] on all basis tuples.

    ``Y`` is the module's index set viewed over the converted datum, so beta plays the role of nu.
    """
    rep = rep if rep is not None else ValidationReport()
    L = K.group
    Lam = C.C.group
    for v, lam in itertools.product(Y.carrier, Lam.elements):
        src = Y.act(v, lam)
        xv = Y.beta[v]
        l, g = C.psi[lam], C.gamma[lam]
        li = L.inv(l)
        xs = Y.beta[src]
        for i, a in itertools.product(range(dims[src]), range(A.dims[xs])):
            lhs = coaction[(v, lam)](action[src]({i: 1}, {a: 1}))
            rhs = {}
            rm = coaction[(v, lam)]({i: 1})
            ra = A.coaction[(li, xv, g)]({a: 1})
            for (m0, m1), s in rm.items():
                for (k, a0, a2), t in ra.items():
                    first = action[v]({m0: 1}, {a0: 1})
                    second = C.right[lam](C.left[lam](K.S(l, {k: 1}), {m1: 1}), {a2: 1})
                    for p, u in first.items():
                        for q, w in second.items():
                            add_term(rhs, (p, q), s * t * u * w)
            rep.expect("gyd:compat", (v, lam, i, a), lhs, rhs, vec_equal)
    return rep


# ---------------------------------------------------------------- standard examples


def _regular_gset(G: FiniteMonoid) -> RightGSet:
    return RightGSet(G.elements, G, {(x, g): G.mul(x, g) for x in G.elements for g in G.elements})


def regular_comodule_algebra(H: SemiHopfGC) -> ComoduleAlgebra:
    """H as a comodule algebra over itself: X = G acting by right multiplication, rho = Delta."""
    G = H.group
    coaction = {(x, g): H.comult[(x, g)] for x in G.elements for g in G.elements}
    return ComoduleAlgebra(H, _regular_gset(G), dict(H.dims), dict(H.mult), dict(H.unit), coaction,
                           dict(H.basis))


def regular_module_coalgebra(H: SemiHopfGC) -> ModuleCoalgebra:
    """H as a module coalgebra over itself by right multiplication, gamma = id."""
    G = H.group
    C = GroupCoalgebra(H.field, G, dict(H.dims), dict(H.comult), dict(H.counit), dict(H.basis))
    return ModuleCoalgebra(H, C, {g: g for g in G.elements}, dict(H.mult))


def hopf_module_datum(H: SemiHopfGC) -> DoiHopfDatumTk:
    return DoiHopfDatumTk(H, regular_comodule_algebra(H), regular_module_coalgebra(H))


def hopf_module(H: SemiHopfGC) -> DoiHopfModule:
    """M = H over the datum (H, H, H), graded by G with beta = id."""
    D = hopf_module_datum(H)
    G = H.group
    Y = DatumSet(D.discrete, G.elements, {(y, g): G.mul(y, g) for y in G.elements for g in G.elements},
                 {y: y for y in G.elements})
    coaction = {(y, g): H.comult[(y, g)] for y in G.elements for g in G.elements}
    return DoiHopfModule(D, Y, dict(H.dims), dict(H.mult), coaction, dict(H.basis))


def trivial_coefficient_datum(A_dims: Dict, A_mult: Dict, A_unit: Dict, field: ScalarField) -> DoiHopfDatumTk:
    """Datum over G = Lambda = {e} with one-point-per-algebra X, rho(a) = a (x) 1 and C = k."""
    from .discrete import trivial_group
    from .hopf import trivial_family

    G = trivial_group()
    H = trivial_family(G, field)
    e = G.identity
    X = RightGSet(tuple(A_dims), G, {(x, e): x for x in A_dims})
    coaction = {(x, e): CoTensor(A_dims[x], (A_dims[x], 1), [{(i, 0): field.one} for i in range(A_dims[x])])
                for x in A_dims}
    A = ComoduleAlgebra(H, X, dict(A_dims), dict(A_mult), dict(A_unit), coaction)
    C = GroupCoalgebra(field, G, {e: 1}, dict(H.comult), {0: field.one})
    return DoiHopfDatumTk(H, A, ModuleCoalgebra(H, C, {e: e}, dict(H.mult)))


def algebra_as_module(D: DoiHopfDatumTk) -> DoiHopfModule:
    """Each A_x as a module over itself; C must be the trivial coalgebra k over Lambda = {e}."""
    A = D.A
    L = D.C.C.group
    e = L.identity
    one = D.field.one
    Y = DatumSet(D.discrete, A.X.carrier, {(x, e): x for x in A.X.carrier}, {x: x for x in A.X.carrier})
    coaction = {(x, e): CoTensor(A.dims[x], (A.dims[x], 1), [{(i, 0): one} for i in range(A.dims[x])])
                for x in A.X.carrier}
    return DoiHopfModule(D, Y, dict(A.dims), dict(A.mult), coaction)
