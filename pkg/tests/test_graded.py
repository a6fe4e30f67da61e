import dataclasses

import pytest

from hopfgc.doihopf import check_doihopf_module, hopf_module, hopf_module_datum
from hopfgc.double import double_datum
from hopfgc.graded import (
    NotClosed,
    alpha_iso,
    check_alpha,
    check_graded_algebra,
    check_graded_module,
    check_graded_morphism,
    datum_smash,
    functor_TZ,
    inverse_functor,
    koppinen_smash,
    local_units_report,
    orbit_subset,
    regular_graded_module,
    restrict_module,
    same_doihopf_module,
    same_graded_module,
)
from hopfgc.linalg import LinMap, MultTensor


@pytest.fixture(scope="module")
def datum_kc2(kc2_c2):
    return double_datum(kc2_c2)


@pytest.fixture(scope="module")
def both_kc2(datum_kc2):
    return datum_smash(datum_kc2), koppinen_smash(datum_kc2)


def test_smash_and_koppinen_are_graded_algebras(both_kc2):
    for A in both_kc2:
        rep = check_graded_algebra(A)
        assert rep.ok, rep.summary()


def test_component_dimensions(datum_kc2, both_kc2):
    S, K = both_kc2
    L = datum_kc2.discrete.Lam
    for lam, x in S.components():
        want = datum_kc2.C.C.dims[L.inv(lam)] * datum_kc2.A.dims[x]
        assert S.dims[(lam, x)] == K.dims[(lam, x)] == want


def test_alpha_is_an_algebra_isomorphism(datum_kc2, both_kc2):
    S, K = both_kc2
    a, ai = alpha_iso(datum_kc2)
    rep = check_alpha(datum_kc2, S, K, a, ai)
    assert rep.ok, rep.summary()


def test_wrong_alpha_is_caught(datum_kc2, both_kc2):
    S, K = both_kc2
    a, ai = alpha_iso(datum_kc2)
    a = dict(a)
    k = next(iter(a))
    n = a[k].n_in
    a[k] = LinMap(n, n, [{i: 2} for i in range(n)])
    rep = check_alpha(datum_kc2, S, K, a, ai)
    assert "alpha:inverse" in rep.failed_checks()


@pytest.mark.parametrize("which", ["trivial_s3", "kc2_c2", "sweedler"])
def test_hopf_module_smash_products(which, request):
    D = hopf_module_datum(request.getfixturevalue(which))
    S, K = datum_smash(D), koppinen_smash(D)
    assert check_graded_algebra(S).ok and check_graded_algebra(K).ok
    assert check_alpha(D, S, K, *alpha_iso(D)).ok


def test_local_units(both_kc2):
    for A in both_kc2:
        info = local_units_report(A)
        assert info["report"].ok and info["agree"]
        assert info["graded_ok"] and info["alternative_ok"]


def test_characterizations_agree_on_broken_units(both_kc2):
    S, _ = both_kc2
    x = S.datum.X.carrier[0]
    units = dict(S.units)
    units[x] = {}
    bad = dataclasses.replace(S, units=units)
    info = local_units_report(bad)
    assert not info["report"].ok
    assert not info["graded_ok"] and not info["alternative_ok"]
    assert info["agree"]


def test_round_trip_from_doihopf_side(kc2_c2):
    M = hopf_module(kc2_c2)
    assert check_doihopf_module(M).ok
    N = functor_TZ(M)
    assert check_graded_module(N).ok
    assert same_doihopf_module(inverse_functor(N, M.datum), M)


def test_round_trip_from_graded_side(datum_kc2, both_kc2):
    _, K = both_kc2
    N = regular_graded_module(K)
    assert check_graded_module(N).ok
    M = inverse_functor(N, datum_kc2)
    assert check_doihopf_module(M).ok
    assert same_graded_module(functor_TZ(M, K), N)


def test_restriction_to_an_orbit(both_kc2):
    _, K = both_kc2
    R = regular_graded_module(K)
    x = K.datum.X.carrier[-1]
    Z = orbit_subset(K.datum, x)
    sub = restrict_module(R, Z)
    assert set(sub.Y.carrier) == set(Z)
    assert check_graded_module(sub).ok


def test_restriction_needs_a_closed_subset(both_kc2):
    _, K = both_kc2
    R = regular_graded_module(K)
    with pytest.raises(NotClosed):
        restrict_module(R, R.Y.carrier[:1])


def test_corrupted_action_fails_both_characterizations(both_kc2):
    S, _ = both_kc2
    R = regular_graded_module(S)
    key = next(k for k, t in R.action.items() if t.table)
    t = R.action[key]
    action = dict(R.action)
    action[key] = MultTensor(t.dims, {k: {i: 3 * c for i, c in w.items()} for k, w in t.table.items()})
    rep = check_graded_module(dataclasses.replace(R, action=action))
    assert not rep.ok
    assert "graded-module:characterizations-agree" not in rep.failed_checks()


def test_identity_graded_morphism(both_kc2):
    S, _ = both_kc2
    R = regular_graded_module(S)
    eta = {y: y for y in R.Y.carrier}
    phis = {y: LinMap.identity(R.dims[y]) for y in R.Y.carrier}
    assert check_graded_morphism("Z", R, R, eta, phis).ok
    assert check_graded_morphism("T", R, R, eta, phis).ok
