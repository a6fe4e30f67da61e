import dataclasses

import pytest

from hopfgc.discrete import FiniteMonoid, cyclic_group, group_by_name, symmetric_group3, trivial_group
from hopfgc.hopf import (
    AntipodeMissing,
    HopfError,
    InvalidOrdinaryHopf,
    SingularAntipode,
    check_group_coalgebra,
    check_hopf,
    check_semi_hopf,
    constant_family,
    derive_twisted_antipode,
    kc2_hopf,
    opposite_hgc,
    sweedler_hopf,
    tensor_hgc,
    trivial_family,
)
from hopfgc.linalg import CoTensor, LinMap, ScalarField


def families():
    yield "trivial-s3", trivial_family(symmetric_group3())
    yield "kc2-c2", constant_family(kc2_hopf(), cyclic_group(2))
    yield "kc2-c3", constant_family(kc2_hopf(), cyclic_group(3))
    yield "sweedler-e", sweedler_hopf()
    yield "sweedler-c2-f5", constant_family(sweedler_hopf(ScalarField(5)), cyclic_group(2))


@pytest.mark.parametrize("name,H", list(families()), ids=lambda x: x if isinstance(x, str) else "")
def test_generated_families_are_hopf(name, H):
    rep = check_hopf(H)
    assert rep.ok, rep.summary()


def test_sweedler_needs_odd_characteristic():
    with pytest.raises(HopfError):
        sweedler_hopf(ScalarField(2))


def test_sweedler_antipode_has_order_four():
    H = sweedler_hopf()
    S = H.antipode["e"]
    S2 = S.compose(S)
    assert not S2.is_identity()
    assert S2.compose(S2).is_identity()


def test_twisted_antipode_inverts_antipode(sweedler):
    S, T = sweedler.antipode["e"], sweedler.twisted["e"]
    assert S.compose(T).is_identity() and T.compose(S).is_identity()


def test_twisted_antipode_is_derived_when_missing():
    H = kc2_hopf()
    bare = dataclasses.replace(H, twisted={})
    assert check_hopf(derive_twisted_antipode(bare)).ok


def test_singular_antipode_is_reported():
    H = dataclasses.replace(kc2_hopf(), antipode={"e": LinMap(2, 2, [{0: 1}, {0: 1}])}, twisted={})
    with pytest.raises(SingularAntipode):
        derive_twisted_antipode(H)


def test_missing_antipode_is_a_failure_not_a_crash():
    H = dataclasses.replace(constant_family(kc2_hopf(), cyclic_group(2)), antipode={})
    rep = check_hopf(H)
    assert "hopf:antipode-missing" in rep.failed_checks()
    with pytest.raises(AntipodeMissing):
        H.S("e", {0: 1})


def test_semi_hopf_over_a_monoid():
    M = FiniteMonoid(("e", "z"), {("e", "e"): "e", ("e", "z"): "z", ("z", "e"): "z", ("z", "z"): "z"}, "e")
    H = trivial_family(M)
    assert check_semi_hopf(H).ok
    assert H.antipode == {}


def test_constant_family_rejects_bad_seed():
    H = kc2_hopf()
    bad = dataclasses.replace(H, antipode={"e": LinMap(2, 2, [{0: 2}, {1: 2}])}, twisted={})
    with pytest.raises(InvalidOrdinaryHopf):
        constant_family(bad, cyclic_group(2))


def test_broken_comultiplication_is_caught():
    H = constant_family(kc2_hopf(), cyclic_group(2))
    comult = dict(H.comult)
    # send x to x (x) 1 on one component: no longer coassociative with the rest
    comult[("e", "g")] = CoTensor(2, (2, 2), [{(0, 0): 1}, {(1, 0): 1}])
    rep = check_group_coalgebra(dataclasses.replace(H, comult=comult))
    assert "coalgebra:coassoc" in rep.failed_checks()


def test_doubled_antipode_is_caught():
    H = constant_family(sweedler_hopf(), cyclic_group(2))
    anti = dict(H.antipode)
    anti["g"] = LinMap(4, 4, [{k: 2 * c for k, c in col.items()} for col in anti["g"].cols])
    rep = check_hopf(dataclasses.replace(H, antipode=anti))
    assert {"hopf:S-left", "hopf:S-right", "hopf:twisted-inverse"} <= set(rep.failed_checks())
    assert all(f.where[0] == "g" for f in rep.by_check("hopf:S-left"))


def test_opposite_is_hopf(sweedler):
    Hop = opposite_hgc(sweedler)
    assert check_hopf(Hop).ok
    # x.g = -g.x in H, so the opposite product of x and g equals g.x
    assert Hop.mul("e", {2: 1}, {1: 1}) == sweedler.mul("e", {1: 1}, {2: 1})


def test_tensor_of_families():
    K = constant_family(kc2_hopf(), cyclic_group(2))
    H = trivial_family(group_by_name("c3"))
    T = tensor_hgc(K, H)
    assert T.group.order == 6
    assert all(d == 2 for d in T.dims.values())
    assert check_hopf(T).ok


def test_tensor_with_sweedler():
    T = tensor_hgc(kc2_hopf(), sweedler_hopf())
    assert T.dims[("e", "e")] == 8
    assert check_hopf(T).ok


def test_tensor_refuses_mixed_fields():
    with pytest.raises(HopfError):
        tensor_hgc(kc2_hopf(ScalarField(3)), kc2_hopf())


def test_counit_of_group_like_element():
    H = kc2_hopf()
    assert H.eps({1: 1}) == 1
    assert H.delta("e", "e", {1: 1}) == {(1, 1): 1}
    assert H.names("e") == ("1", "x")
    assert trivial_group().order == 1
