import dataclasses
import itertools

import pytest

from hopfgc.discrete import cyclic_group, symmetric_group3
from hopfgc.double import (
    build_double,
    check_graded_bialgebra,
    check_graded_hopf,
    check_koppinen_comult,
    check_quasitriangular,
    explicit_smash_product,
)
from hopfgc.graded import ValidationFailure, check_graded_algebra
from hopfgc.hopf import constant_family, kc2_hopf
from hopfgc.linalg import CoTensor, LinMap

DOUBLES = ["double_kc2", "double_kc2_koppinen", "double_trivial", "double_sweedler_e"]


def full_check(D):
    rep = check_graded_algebra(D.core)
    check_graded_bialgebra(D, rep)
    check_graded_hopf(D, rep)
    check_quasitriangular(D, rep)
    check_koppinen_comult(D, rep)
    return rep


@pytest.mark.parametrize("name", DOUBLES)
def test_double_satisfies_all_axioms(name, request):
    rep = full_check(request.getfixturevalue(name))
    assert rep.ok, rep.summary()


def test_double_over_a_nonabelian_group():
    D = build_double(constant_family(kc2_hopf(), symmetric_group3()))
    rep = full_check(D)
    assert rep.ok, rep.summary()


def test_unknown_form():
    with pytest.raises(ValueError):
        build_double(constant_family(kc2_hopf(), cyclic_group(2)), "tensor")


def test_invalid_input_is_refused():
    H = constant_family(kc2_hopf(), cyclic_group(2))
    anti = {g: LinMap(2, 2, [{0: 1}, {1: 2}]) for g in H.antipode}
    with pytest.raises(ValidationFailure):
        build_double(dataclasses.replace(H, antipode=anti, twisted={}))


def test_sweedler_double_dimension(double_sweedler_e):
    D = double_sweedler_e
    assert sum(D.core.dims.values()) == 16


@pytest.mark.parametrize("H", ["kc2_c2", "sweedler"])
def test_smash_multiplication_matches_closed_formula(H, request):
    H = request.getfixturevalue(H)
    D = build_double(H, "smash")
    G = H.group
    for lam, g, lam2 in itertools.product(G.elements, repeat=3):
        g2 = G.conj(g, lam2)
        n1, n2 = H.dims[G.inv(lam)], H.dims[G.inv(lam2)]
        k1, k2 = (lam, g), (lam2, g2)
        for j, i, j2, i2 in itertools.product(range(n1), range(H.dims[g]), range(n2), range(H.dims[g2])):
            want = explicit_smash_product(H, lam, g, lam2, {j: 1}, {i: 1}, {j2: 1}, {i2: 1})
            got = D.core.mul(k1, k2, {j * H.dims[g] + i: 1}, {j2 * H.dims[g2] + i2: 1})
            assert got == want, (k1, k2, j, i, j2, i2)


def test_dropping_a_term_of_R_is_caught(kc2_c2):
    D = build_double(kc2_c2)
    key = next(k for k, t in D.R.items() if len(t) > 1)
    R = dict(D.R)
    t = dict(R[key])
    t.pop(next(iter(t)))
    R[key] = t
    rep = check_quasitriangular(dataclasses.replace(D, R=R))
    assert "quasitriangular:inverse" in rep.failed_checks()


def test_scaled_antipode_is_caught(kc2_c2):
    D = build_double(kc2_c2)
    anti = dict(D.antipode)
    key = next(iter(anti))
    m = anti[key]
    anti[key] = LinMap(m.n_in, m.n_out, [{k: 2 * c for k, c in col.items()} for col in m.cols])
    rep = check_graded_hopf(dataclasses.replace(D, antipode=anti))
    assert not rep.ok
    assert all(f.check.startswith("graded-hopf:") for f in rep.failures)


def test_broken_comultiplication_is_caught(kc2_c2):
    D = build_double(kc2_c2)
    comult = dict(D.comult)
    key = next(iter(comult))
    old = comult[key]
    comult[key] = CoTensor(old.n_in, old.targets, [{} for _ in old.rows])
    rep = check_graded_bialgebra(dataclasses.replace(D, comult=comult))
    assert {"graded-bialgebra:coassoc", "graded-bialgebra:counit"} <= set(rep.failed_checks())


def test_forms_share_the_datum(double_kc2, double_kc2_koppinen):
    a, b = double_kc2.doihopf, double_kc2_koppinen.doihopf
    assert a.A.dims == b.A.dims
    assert double_kc2.core.dims == double_kc2_koppinen.core.dims
    # alpha is the identity matrix in these bases, so the counits agree
    assert double_kc2.counit == double_kc2_koppinen.counit
