import dataclasses

import pytest

from hopfgc.discrete import cyclic_group, symmetric_group3
from hopfgc.doihopf import (
    IndexMismatch,
    ShapeMismatch,
    algebra_as_module,
    check_bicomodule_algebra,
    check_bimodule_coalgebra,
    check_comodule_algebra,
    check_dh_morphism,
    check_doihopf_datum,
    check_doihopf_module,
    check_dual_action,
    check_lambda_graded,
    check_module_coalgebra,
    check_phi_family,
    dual_graded_algebra,
    gyd_to_doihopf,
    hopf_module,
    hopf_module_datum,
    regular_module_coalgebra,
    trivial_coefficient_datum,
)
from hopfgc.double import double_datum, double_gyd_data, same_datum
from hopfgc.hopf import constant_family, kc2_hopf, trivial_family
from hopfgc.linalg import CoTensor, LinMap, MultTensor, ScalarField


@pytest.fixture(scope="module", params=["trivial-s3", "kc2-c2", "sweedler-e"])
def H(request, trivial_s3, kc2_c2, sweedler):
    return {"trivial-s3": trivial_s3, "kc2-c2": kc2_c2, "sweedler-e": sweedler}[request.param]


def test_hopf_module_datum_is_valid(H):
    assert check_doihopf_datum(hopf_module_datum(H)).ok


def test_hopf_module_is_valid(H):
    M = hopf_module(H)
    rep = check_doihopf_module(M)
    assert rep.ok, rep.summary()


def test_double_datum_is_valid(H):
    rep = check_doihopf_datum(double_datum(H))
    assert rep.ok, rep.summary()


def test_double_datum_grading(kc2_c2):
    D = double_datum(kc2_c2)
    G = kc2_c2.group
    assert D.H.group.order == G.order ** 2
    assert D.C.gamma == {lam: (lam, lam) for lam in G.elements}
    assert D.A.X.carrier == G.elements


def test_gyd_data_are_valid(H):
    A, C = double_gyd_data(H)
    rep = check_bicomodule_algebra(A)
    check_bimodule_coalgebra(C, rep)
    assert rep.ok, rep.summary()


def test_gyd_conversion_gives_the_double_datum(H):
    A, C = double_gyd_data(H)
    assert same_datum(gyd_to_doihopf(H, H, A, C), double_datum(H))


def test_same_datum_notices_a_changed_action(kc2_c2):
    D = double_datum(kc2_c2)
    D2 = double_datum(kc2_c2)
    lam = kc2_c2.group.identity
    MC = D2.C
    act = dict(MC.action)
    act[lam] = MultTensor(act[lam].dims, {k: {i: 2 * c for i, c in w.items()} for k, w in act[lam].table.items()})
    D2 = dataclasses.replace(D2, C=dataclasses.replace(MC, action=act))
    assert not same_datum(D, D2)
    assert not check_module_coalgebra(D2.C).ok


def test_corrupted_coaction_is_caught(kc2_c2):
    M = hopf_module(kc2_c2)
    co = dict(M.coaction)
    key = ("g", "g")
    co[key] = CoTensor(2, (2, 2), [{(0, 0): 1}, {(1, 0): 1}])
    rep = check_doihopf_module(dataclasses.replace(M, coaction=co))
    assert not rep.ok
    assert {"dh-module:coassoc", "dh-module:compat"} & set(rep.failed_checks())


def test_corrupted_comodule_algebra(kc2_c2):
    A = hopf_module_datum(kc2_c2).A
    unit = dict(A.unit)
    unit["g"] = {1: 1}
    rep = check_comodule_algebra(dataclasses.replace(A, unit=unit))
    assert "comodule-algebra:unital" in rep.failed_checks()
    assert all(f.where[0] == "g" for f in rep.by_check("comodule-algebra:algebra:unit-left"))


def test_algebra_as_module_over_trivial_coefficients():
    F = ScalarField()
    H = kc2_hopf()
    D = trivial_coefficient_datum({"a": 2}, {"a": H.mult["e"]}, {"a": H.unit["e"]}, F)
    assert check_doihopf_datum(D).ok
    assert check_doihopf_module(algebra_as_module(D)).ok


def test_identity_is_a_morphism(kc2_c2):
    M = hopf_module(kc2_c2)
    eta = {y: y for y in M.Y.carrier}
    phis = {y: LinMap.identity(M.dims[y]) for y in M.Y.carrier}
    for flavor in "TZ":
        assert check_dh_morphism(flavor, M, M, eta, phis).ok


def test_non_colinear_map_is_caught(kc2_c2):
    M = hopf_module(kc2_c2)
    eta = {y: y for y in M.Y.carrier}
    # x -> 1 kills multiplicativity and colinearity
    phis = {y: LinMap(2, 2, [{0: 1}, {0: 1}]) for y in M.Y.carrier}
    rep = check_dh_morphism("Z", M, M, eta, phis)
    assert {"morphism:linear", "morphism:colinear"} <= set(rep.failed_checks())


def test_morphism_index_errors(kc2_c2):
    M = hopf_module(kc2_c2)
    with pytest.raises(IndexMismatch):
        check_dh_morphism("Z", M, M, {"e": "e"}, {"e": LinMap.identity(2)})
    with pytest.raises(ValueError):
        check_dh_morphism("X", M, M, {}, {})


def test_dual_graded_algebra(H):
    B = dual_graded_algebra(regular_module_coalgebra(H).C)
    assert check_lambda_graded(B).ok
    assert B.unit == dict(H.counit)


def test_dual_action_on_regular_coalgebra(H):
    assert check_dual_action(regular_module_coalgebra(H)).ok


def test_identity_phi_family_on_constant_family():
    H = constant_family(kc2_hopf(), symmetric_group3())
    phis = {l: LinMap.identity(2) for l in H.group.elements}
    for side in ("left", "right"):
        for x0 in H.group.elements:
            assert check_phi_family(H, x0, side, phis).ok


def test_bad_phi_family():
    H = trivial_family(cyclic_group(3))
    phis = {l: LinMap(1, 1, [{0: 2}]) for l in H.group.elements}
    rep = check_phi_family(H, "e", "left", phis)
    assert {"phi:multiplicative", "phi:unital", "phi:counit"} <= set(rep.failed_checks())
    with pytest.raises(ShapeMismatch):
        check_phi_family(H, "e", "left", {})
    with pytest.raises(ValueError):
        check_phi_family(H, "e", "up", phis)
