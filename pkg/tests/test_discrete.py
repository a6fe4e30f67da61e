import itertools

import hypothesis.strategies as st
import pytest
from hypothesis import given

from hopfgc.discrete import (
    CrossedGSet,
    DatumSet,
    DiscreteDoiHopfDatum,
    FiniteGroup,
    FiniteMonoid,
    GroupMismatch,
    MalformedTable,
    NotAGroup,
    RightGSet,
    crossed_as_datum_set,
    cyclic_group,
    datum_set_as_crossed,
    group_by_name,
    label_str,
    make_crossed_datum,
    monoid_direct_product,
    product_crossed_gset,
    regular_crossed_gset,
    regular_datum_set,
    require_group,
    symmetric_group3,
    trivial_group,
    unit_crossed_gset,
    validate_discrete,
)

GROUPS = ["e", "c2", "c3", "c4", "s3"]


@pytest.mark.parametrize("name", GROUPS)
def test_standard_groups_are_valid(name):
    G = group_by_name(name)
    assert validate_discrete(G).ok
    assert set(G.inverse) == set(G.elements)


def test_orders():
    assert [group_by_name(n).order for n in GROUPS] == [1, 2, 3, 4, 6]


def test_s3_is_not_abelian():
    G = symmetric_group3()
    assert any(G.mul(a, b) != G.mul(b, a) for a, b in itertools.product(G.elements, G.elements))


def test_unknown_group_name():
    with pytest.raises(Exception):
        group_by_name("q8")


def test_missing_product_is_malformed():
    with pytest.raises(MalformedTable):
        FiniteMonoid(("e", "a"), {("e", "e"): "e", ("e", "a"): "a", ("a", "e"): "a"}, "e")


def test_undeclared_product_is_malformed():
    table = {(a, b): "e" for a in "ea" for b in "ea"}
    table[("a", "a")] = "b"
    with pytest.raises(MalformedTable):
        FiniteMonoid(("e", "a"), table, "e")


def test_non_associative_table_is_reported():
    # a rock-paper-scissors style magma with a unit adjoined
    E = ("e", "r", "p", "s")
    beats = {("r", "s"): "r", ("s", "r"): "r", ("p", "r"): "p", ("r", "p"): "p", ("s", "p"): "s", ("p", "s"): "s"}
    table = {}
    for a, b in itertools.product(E, E):
        if a == "e":
            table[(a, b)] = b
        elif b == "e" or a == b:
            table[(a, b)] = a
        else:
            table[(a, b)] = beats[(a, b)]
    rep = validate_discrete(FiniteMonoid(E, table, "e"))
    assert "monoid:assoc" in rep.failed_checks()


def test_wrong_inverse_is_reported():
    G = cyclic_group(3)
    bad = FiniteGroup(G.elements, dict(G.table), "e", "c3", {"e": "e", "g1": "g1", "g2": "g1"})
    assert "group:inverse" in validate_discrete(bad).failed_checks()


def test_monoid_that_is_not_a_group():
    M = FiniteMonoid(("e", "z"), {("e", "e"): "e", ("e", "z"): "z", ("z", "e"): "z", ("z", "z"): "z"}, "e")
    assert validate_discrete(M).ok
    assert not M.is_group()
    with pytest.raises(NotAGroup):
        require_group(M)


@given(st.sampled_from(GROUPS), st.sampled_from(GROUPS))
def test_direct_products_are_groups(a, b):
    P = monoid_direct_product(group_by_name(a), group_by_name(b))
    assert isinstance(P, FiniteGroup)
    assert validate_discrete(P).ok


@pytest.mark.parametrize("name", GROUPS)
def test_crossed_datum_is_valid(name):
    d = make_crossed_datum(group_by_name(name))
    assert validate_discrete(d).ok
    assert validate_discrete(regular_datum_set(d)).ok


def test_crossed_datum_action_formula():
    G = symmetric_group3()
    d = make_crossed_datum(G)
    for x, lam, g in itertools.product(G.elements, repeat=3):
        assert d.X.act(x, (lam, g)) == G.mul(G.inv(lam), x, g)
    for lam in G.elements:
        # gamma is diagonal, so x.gamma(l) is conjugation
        assert all(d.xg(x, lam) == G.conj(x, lam) for x in G.elements)


def test_conj_is_a_right_action():
    G = symmetric_group3()
    for x, g, h in itertools.product(G.elements, repeat=3):
        assert G.conj(G.conj(x, g), h) == G.conj(x, G.mul(g, h))


@pytest.mark.parametrize("name", GROUPS)
def test_crossed_gsets(name):
    G = group_by_name(name)
    V = regular_crossed_gset(G)
    U = unit_crossed_gset(G)
    for W in (V, U, product_crossed_gset(V, V), product_crossed_gset(V, U)):
        assert validate_discrete(W).ok


def test_bad_nu_is_reported():
    G = symmetric_group3()
    V = regular_crossed_gset(G)
    nu = {x: "e" if x == "s021" else x for x in G.elements}
    rep = validate_discrete(CrossedGSet(V.gset, nu))
    assert "crossed:nu" in rep.failed_checks()


def test_crossed_sets_and_datum_sets_correspond():
    G = symmetric_group3()
    d = make_crossed_datum(G)
    V = regular_crossed_gset(G)
    Y = crossed_as_datum_set(V, d)
    assert validate_discrete(Y).ok
    V2 = datum_set_as_crossed(Y)
    assert V2.carrier == V.carrier and V2.nu == V.nu
    assert all(V2.act(v, g) == V.act(v, g) for v in V.carrier for g in G.elements)


def test_product_over_different_groups():
    with pytest.raises(GroupMismatch):
        product_crossed_gset(regular_crossed_gset(cyclic_group(2)), regular_crossed_gset(cyclic_group(3)))


def test_gset_with_bad_action_is_reported():
    G = cyclic_group(2)
    X = RightGSet(("a", "b"), G, {("a", "e"): "b", ("b", "e"): "a", ("a", "g"): "a", ("b", "g"): "b"})
    assert "gset:unit" in validate_discrete(X).failed_checks()


def test_datum_with_bad_gamma():
    G = cyclic_group(2)
    X = RightGSet(G.elements, G, {(x, g): G.mul(x, g) for x in G.elements for g in G.elements})
    d = DiscreteDoiHopfDatum(G, G, {"e": "g", "g": "g"}, X)
    assert {"datum:gamma-unit", "datum:gamma-mult"} <= set(validate_discrete(d).failed_checks())


def test_datum_set_with_bad_beta():
    d = make_crossed_datum(cyclic_group(2))
    Y = regular_datum_set(d)
    beta = dict(Y.beta)
    beta[Y.carrier[0]] = "g"
    bad = DatumSet(d, Y.carrier, dict(Y.action), beta)
    assert "datumset:beta" in validate_discrete(bad).failed_checks()


def test_labels_render_nested_tuples():
    assert label_str((("e", "g"), "s012")) == "((e,g),s012)"
    assert trivial_group().elements == ("e",)
