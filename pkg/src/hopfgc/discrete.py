"""Finite monoids, groups, G-sets, crossed G-sets and discrete Doi-Hopf data as explicit tables."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Dict, Hashable, Sequence, Tuple

from .report import ValidationReport

Label = Hashable


class DiscreteError(Exception):
    pass


class MalformedTable(DiscreteError):
    pass


class NotAGroup(DiscreteError):
    pass


class GroupMismatch(DiscreteError):
    pass


def label_str(x) -> str:
    """Render a label; tuples become "(a,b)"."""
    if isinstance(x, tuple):
        return "(" + ",".join(label_str(t) for t in x) + ")"
    return str(x)


@dataclass(eq=False)
class FiniteMonoid:
    elements: Tuple
    table: Dict[Tuple, Label]
    identity: Label
    name: str = ""

    def __post_init__(self):
        self.elements = tuple(self.elements)
        known = set(self.elements)
        if len(known) != len(self.elements):
            raise MalformedTable("duplicate element labels")
        if self.identity not in known:
            raise MalformedTable(f"identity {self.identity!r} is not an element")
        for a in self.elements:
            for b in self.elements:
                if (a, b) not in self.table:
                    raise MalformedTable(f"product {a!r}*{b!r} missing")
                if self.table[(a, b)] not in known:
                    raise MalformedTable(f"product {a!r}*{b!r} = {self.table[(a, b)]!r} is undeclared")
        self._index = {x: i for i, x in enumerate(self.elements)}

    @property
    def e(self):
        return self.identity

    @property
    def order(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        return self._index[x]

    def mul(self, *xs):
        out = self.identity
        for x in xs:
            out = self.table[(out, x)]
        return out

    def __contains__(self, x):
        return x in self._index

    def __iter__(self):
        return iter(self.elements)

    def is_group(self) -> bool:
        return isinstance(self, FiniteGroup)

    def same_as(self, other: "FiniteMonoid") -> bool:
        return self is other or (
            self.elements == other.elements
            and self.identity == other.identity
            and self.table == other.table
        )


@dataclass(eq=False)
class FiniteGroup(FiniteMonoid):
    inverse: Dict[Label, Label] = field(default_factory=dict)

    def __post_init__(self):
        super().__post_init__()
        if not self.inverse:
            inv = {}
            for a in self.elements:
                for b in self.elements:
                    if self.table[(a, b)] == self.identity and self.table[(b, a)] == self.identity:
                        inv[a] = b
                        break
            self.inverse = inv
        for a, b in self.inverse.items():
            if a not in self._index or b not in self._index:
                raise MalformedTable(f"inverse table references undeclared {a!r} or {b!r}")

    def inv(self, x):
        try:
            return self.inverse[x]
        except KeyError:
            raise NotAGroup(f"{x!r} has no inverse") from None

    def conj(self, x, g):
        """x^g = g^-1 x g."""
        return self.mul(self.inv(g), x, g)


def require_group(m: FiniteMonoid, what: str = "monoid") -> FiniteGroup:
    if not isinstance(m, FiniteGroup):
        raise NotAGroup(f"{what} must be a group")
    return m


# ---------------------------------------------------------------- standard groups


def group_from_function(elements: Sequence, op: Callable, identity, name="") -> FiniteGroup:
    table = {(a, b): op(a, b) for a in elements for b in elements}
    return FiniteGroup(tuple(elements), table, identity, name)


def trivial_group() -> FiniteGroup:
    return group_from_function(["e"], lambda a, b: "e", "e", "e")


def cyclic_group(n: int) -> FiniteGroup:
    names = ["e"] + (["g"] if n == 2 else [f"g{k}" for k in range(1, n)])

    def idx(s):
        return names.index(s)

    return group_from_function(names, lambda a, b: names[(idx(a) + idx(b)) % n], "e", f"c{n}")


def symmetric_group3() -> FiniteGroup:
    perms = list(itertools.permutations(range(3)))
    perms.sort()
    names = {p: ("e" if p == (0, 1, 2) else "s" + "".join(map(str, p))) for p in perms}
    back = {v: k for k, v in names.items()}

    def op(a, b):
        # (ab)(i) = a(b(i)): apply b first
        pa, pb = back[a], back[b]
        return names[tuple(pa[pb[i]] for i in range(3))]

    return group_from_function([names[p] for p in perms], op, "e", "s3")


def monoid_direct_product(A: FiniteMonoid, B: FiniteMonoid):
    elements = tuple((a, b) for a in A.elements for b in B.elements)
    table = {
        (x, y): (A.mul(x[0], y[0]), B.mul(x[1], y[1])) for x in elements for y in elements
    }
    ident = (A.identity, B.identity)
    name = f"{A.name}x{B.name}"
    if isinstance(A, FiniteGroup) and isinstance(B, FiniteGroup):
        inv = {x: (A.inv(x[0]), B.inv(x[1])) for x in elements}
        return FiniteGroup(elements, table, ident, name, inv)
    return FiniteMonoid(elements, table, ident, name)


def group_by_name(name: str) -> FiniteGroup:
    key = name.lower()
    if key in ("e", "trivial", "1"):
        return trivial_group()
    if key == "s3":
        return symmetric_group3()
    if key.startswith("c") and key[1:].isdigit():
        return cyclic_group(int(key[1:]))
    raise DiscreteError(f"unknown group {name!r}")


# ---------------------------------------------------------------- sets with actions


@dataclass(eq=False)
class RightGSet:
    carrier: Tuple
    acting: FiniteMonoid
    action: Dict[Tuple, Label]

    def __post_init__(self):
        self.carrier = tuple(self.carrier)
        known = set(self.carrier)
        if len(known) != len(self.carrier):
            raise MalformedTable("duplicate carrier labels")
        for y in self.carrier:
            for g in self.acting.elements:
                if (y, g) not in self.action:
                    raise MalformedTable(f"action {y!r}.{g!r} missing")
                if self.action[(y, g)] not in known:
                    raise MalformedTable(f"action {y!r}.{g!r} lands outside the carrier")

    def act(self, y, g):
        return self.action[(y, g)]


@dataclass(eq=False)
class CrossedGSet:
    gset: RightGSet
    nu: Dict[Label, Label]

    def __post_init__(self):
        require_group(self.gset.acting, "acting monoid of a crossed set")
        for v in self.gset.carrier:
            if v not in self.nu:
                raise MalformedTable(f"nu({v!r}) missing")
            if self.nu[v] not in self.gset.acting:
                raise MalformedTable(f"nu({v!r}) is not a group element")

    @property
    def group(self) -> FiniteGroup:
        return self.gset.acting

    @property
    def carrier(self):
        return self.gset.carrier

    def act(self, v, g):
        return self.gset.act(v, g)


@dataclass(eq=False)
class DiscreteDoiHopfDatum:
    G: FiniteMonoid
    Lam: FiniteMonoid
    gamma: Dict[Label, Label]
    X: RightGSet

    def __post_init__(self):
        for lam in self.Lam.elements:
            if lam not in self.gamma:
                raise MalformedTable(f"gamma({lam!r}) missing")
            if self.gamma[lam] not in self.G:
                raise MalformedTable(f"gamma({lam!r}) is not an element of G")
        if not self.X.acting.same_as(self.G):
            raise GroupMismatch("X is not a G-set for the datum's G")

    def xg(self, x, lam):
        """x . gamma(lam)."""
        return self.X.act(x, self.gamma[lam])

    def gamma_inv(self, lam):
        """gamma(lam)^-1, using whichever of G, Lambda is a group."""
        if isinstance(self.G, FiniteGroup):
            return self.G.inv(self.gamma[lam])
        if isinstance(self.Lam, FiniteGroup):
            return self.gamma[self.Lam.inv(lam)]
        raise NotAGroup("neither G nor Lambda is a group")


@dataclass(eq=False)
class DatumSet:
    datum: DiscreteDoiHopfDatum
    carrier: Tuple
    action: Dict[Tuple, Label]
    beta: Dict[Label, Label]

    def __post_init__(self):
        self.carrier = tuple(self.carrier)
        known = set(self.carrier)
        if len(known) != len(self.carrier):
            raise MalformedTable("duplicate carrier labels")
        for y in self.carrier:
            if y not in self.beta or self.beta[y] not in set(self.datum.X.carrier):
                raise MalformedTable(f"beta({y!r}) missing or outside X")
            for lam in self.datum.Lam.elements:
                if (y, lam) not in self.action or self.action[(y, lam)] not in known:
                    raise MalformedTable(f"action {y!r}.{lam!r} missing or outside the carrier")

    def act(self, y, lam):
        return self.action[(y, lam)]


# ---------------------------------------------------------------- validation


def _check_monoid(M: FiniteMonoid, rep: ValidationReport):
    E = M.elements
    for a, b, c in itertools.product(E, E, E):
        lhs, rhs = M.mul(M.mul(a, b), c), M.mul(a, M.mul(b, c))
        if lhs != rhs:
            rep.fail("monoid:assoc", (a, b, c), lhs, rhs)
    for a in E:
        if M.table[(M.identity, a)] != a:
            rep.fail("monoid:left-unit", (a,), M.table[(M.identity, a)], a)
        if M.table[(a, M.identity)] != a:
            rep.fail("monoid:right-unit", (a,), M.table[(a, M.identity)], a)
    if isinstance(M, FiniteGroup):
        for a in E:
            b = M.inverse.get(a)
            if b is None or M.table[(a, b)] != M.identity or M.table[(b, a)] != M.identity:
                got = None if b is None else (M.table[(a, b)], M.table[(b, a)])
                rep.fail("group:inverse", (a,), got, (M.identity, M.identity))


def _check_gset(X: RightGSet, rep: ValidationReport, tag="gset"):
    M = X.acting
    for y in X.carrier:
        if X.act(y, M.identity) != y:
            rep.fail(f"{tag}:unit", (y,), X.act(y, M.identity), y)
        for g, h in itertools.product(M.elements, M.elements):
            lhs, rhs = X.act(X.act(y, g), h), X.act(y, M.mul(g, h))
            if lhs != rhs:
                rep.fail(f"{tag}:assoc", (y, g, h), lhs, rhs)


def validate_discrete(obj) -> ValidationReport:
    """Check every invariant of a discrete object; an empty report means valid."""
    rep = ValidationReport()
    if isinstance(obj, FiniteMonoid):
        _check_monoid(obj, rep)
    elif isinstance(obj, RightGSet):
        _check_gset(obj, rep)
    elif isinstance(obj, CrossedGSet):
        G = obj.group
        _check_gset(obj.gset, rep)
        for v in obj.carrier:
            for g in G.elements:
                lhs = obj.nu[obj.act(v, g)]
                rhs = G.conj(obj.nu[v], g)
                if lhs != rhs:
                    rep.fail("crossed:nu", (v, g), lhs, rhs)
    elif isinstance(obj, DiscreteDoiHopfDatum):
        G, L = obj.G, obj.Lam
        if obj.gamma[L.identity] != G.identity:
            rep.fail("datum:gamma-unit", (L.identity,), obj.gamma[L.identity], G.identity)
        for a, b in itertools.product(L.elements, L.elements):
            lhs = obj.gamma[L.mul(a, b)]
            rhs = G.mul(obj.gamma[a], obj.gamma[b])
            if lhs != rhs:
                rep.fail("datum:gamma-mult", (a, b), lhs, rhs)
        _check_gset(obj.X, rep, "datum:X")
    elif isinstance(obj, DatumSet):
        d = obj.datum
        L = d.Lam
        for y in obj.carrier:
            if obj.act(y, L.identity) != y:
                rep.fail("datumset:unit", (y,), obj.act(y, L.identity), y)
            for lam in L.elements:
                lhs = obj.beta[obj.act(y, lam)]
                rhs = d.xg(obj.beta[y], lam)
                if lhs != rhs:
                    rep.fail("datumset:beta", (y, lam), lhs, rhs)
                for mu in L.elements:
                    lhs = obj.act(obj.act(y, lam), mu)
                    rhs = obj.act(y, L.mul(lam, mu))
                    if lhs != rhs:
                        rep.fail("datumset:assoc", (y, lam, mu), lhs, rhs)
    else:
        raise MalformedTable(f"cannot validate object of type {type(obj).__name__}")
    return rep


# ---------------------------------------------------------------- constructions


def make_crossed_datum(G: FiniteGroup) -> DiscreteDoiHopfDatum:
    """(G x G, G, G) with x.(l, g') = l^-1 x g' and the diagonal map G -> G x G."""
    require_group(G)
    GG = monoid_direct_product(G, G)
    action = {(x, p): G.mul(G.inv(p[0]), x, p[1]) for x in G.elements for p in GG.elements}
    X = RightGSet(G.elements, GG, action)
    gamma = {g: (g, g) for g in G.elements}
    return DiscreteDoiHopfDatum(GG, G, gamma, X)


def regular_datum_set(d: DiscreteDoiHopfDatum) -> DatumSet:
    """Y = Lambda x X with (l, x)l' = (ll', x gamma(l')) and beta(l, x) = x."""
    carrier = tuple((lam, x) for lam in d.Lam.elements for x in d.X.carrier)
    action = {
        ((lam, x), mu): (d.Lam.mul(lam, mu), d.xg(x, mu)) for (lam, x) in carrier for mu in d.Lam.elements
    }
    beta = {(lam, x): x for (lam, x) in carrier}
    return DatumSet(d, carrier, action, beta)


def crossed_as_datum_set(V: CrossedGSet, d: DiscreteDoiHopfDatum) -> DatumSet:
    """A crossed G-set viewed as a set over the datum (G x G, G, G), with beta = nu."""
    return DatumSet(d, V.carrier, dict(V.gset.action), dict(V.nu))


def datum_set_as_crossed(Y: DatumSet) -> CrossedGSet:
    G = Y.datum.Lam
    return CrossedGSet(RightGSet(Y.carrier, G, dict(Y.action)), dict(Y.beta))


def product_crossed_gset(V: CrossedGSet, W: CrossedGSet) -> CrossedGSet:
    """Carrier V x W, diagonal action, omega(v, w) = nu(v) nu'(w)."""
    if not V.group.same_as(W.group):
        raise GroupMismatch("crossed sets over different groups")
    G = V.group
    carrier = tuple((v, w) for v in V.carrier for w in W.carrier)
    action = {((v, w), g): (V.act(v, g), W.act(w, g)) for (v, w) in carrier for g in G.elements}
    nu = {(v, w): G.mul(V.nu[v], W.nu[w]) for (v, w) in carrier}
    return CrossedGSet(RightGSet(carrier, G, action), nu)


def unit_crossed_gset(G: FiniteGroup) -> CrossedGSet:
    return CrossedGSet(RightGSet(("*",), G, {("*", g): "*" for g in G.elements}), {"*": G.identity})


def regular_crossed_gset(G: FiniteGroup) -> CrossedGSet:
    """G acting on itself by conjugation, nu = id."""
    action = {(x, g): G.conj(x, g) for x in G.elements for g in G.elements}
    return CrossedGSet(RightGSet(G.elements, G, action), {x: x for x in G.elements})
