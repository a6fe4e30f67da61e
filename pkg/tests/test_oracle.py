import itertools

import pytest

from hopfgc.double import build_double
from hopfgc.hopf import kc2_hopf, sweedler_hopf
from oracles import ClassicalDouble

CASES = [(seed, form) for seed in ("kc2", "sweedler") for form in ("smash", "koppinen")]


def seed_algebra(name):
    return kc2_hopf() if name == "kc2" else sweedler_hopf()


@pytest.fixture(scope="module")
def oracles():
    return {name: ClassicalDouble(seed_algebra(name)) for name in ("kc2", "sweedler")}


@pytest.fixture(scope="module")
def doubles():
    return {(name, form): build_double(seed_algebra(name), form) for name, form in CASES}


def dense(v, n):
    return [v.get(i, 0) for i in range(n)]


@pytest.mark.parametrize("name,form", CASES)
def test_multiplication(name, form, oracles, doubles):
    O, D = oracles[name], doubles[(name, form)]
    k = ("e", "e")
    N = O.n ** 2
    t = D.core.mult[(k, k)]
    for a, b in itertools.product(range(N), repeat=2):
        assert dense(t.basis(a, b), N) == O.mul_basis(a, b), (a, b)


@pytest.mark.parametrize("name,form", CASES)
def test_comultiplication_and_counit(name, form, oracles, doubles):
    O, D = oracles[name], doubles[(name, form)]
    N = O.n ** 2
    rows = D.comult[("e", "e", "e")].rows
    for a in range(N):
        want = O.comult(a)
        assert [[rows[a].get((p, q), 0) for q in range(N)] for p in range(N)] == want, a
        assert D.counit["e"].get(a, 0) == O.counit(a)


@pytest.mark.parametrize("name,form", CASES)
def test_antipodes(name, form, oracles, doubles):
    O, D = oracles[name], doubles[(name, form)]
    N = O.n ** 2
    S, T = D.antipode[("e", "e")], D.twisted[("e", "e")]
    for a in range(N):
        assert dense(S.cols[a], N) == O.antipode(a), a
        assert dense(T.cols[a], N) == O.twisted(a), a


@pytest.mark.parametrize("name,form", CASES)
def test_R_matrix(name, form, oracles, doubles):
    O, D = oracles[name], doubles[(name, form)]
    N = O.n ** 2
    R = D.R[("e", "e")]
    assert [[R.get((p, q), 0) for q in range(N)] for p in range(N)] == O.R()


@pytest.mark.parametrize("name", ["kc2", "sweedler"])
def test_Q_inverts_R_under_oracle_product(name, oracles, doubles):
    O, D = oracles[name], doubles[(name, "smash")]
    N = O.n ** 2
    R, Q = D.R[("e", "e")], D.Q[("e", "e")]
    one = O.elem(O.eps, O.one)
    unit = [[one[p] * one[q] for q in range(N)] for p in range(N)]
    for first, second in ((R, Q), (Q, R)):
        prod = [[0] * N for _ in range(N)]
        for (a, b), x in first.items():
            for (c, d), y in second.items():
                left, right = O.mul_basis(a, c), O.mul_basis(b, d)
                for p, u in enumerate(left):
                    if u:
                        for q, w in enumerate(right):
                            if w:
                                prod[p][q] += x * y * u * w
        assert prod == unit
