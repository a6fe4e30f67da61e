import dataclasses
import itertools

import pytest

from hopfgc.discrete import symmetric_group3
from hopfgc.double import (
    IndexedMap,
    adjoint_yd_module,
    braiding_from_R,
    build_double,
    check_braiding,
    check_crossed_indices,
    check_yd_module,
    check_yd_morphism,
    extract_RQ_from_braiding,
    graded_module_tensor,
    graded_to_yd,
    graded_unit,
    inverse_from_Q,
    same_tensor_family,
    same_yd_module,
    unit_flattening,
    yd_braiding,
    yd_tensor,
    yd_to_graded,
    yd_unit,
)
from hopfgc.graded import check_graded_module, regular_graded_module, same_graded_module
from hopfgc.hopf import trivial_family
from hopfgc.linalg import LinMap, add_term


def kron(A: LinMap, B: LinMap) -> LinMap:
    cols = []
    for a in range(A.n_in):
        for b in range(B.n_in):
            col = {}
            for p, x in A.cols[a].items():
                for q, y in B.cols[b].items():
                    add_term(col, p * B.n_out + q, x * y)
            cols.append(col)
    return LinMap(A.n_in * B.n_in, A.n_out * B.n_out, cols)


def tensor_maps(f: IndexedMap, g: IndexedMap) -> IndexedMap:
    index, maps = {}, {}
    for k1, k2 in itertools.product(f.index, g.index):
        index[(k1, k2)] = (f.index[k1], g.index[k2])
        maps[(k1, k2)] = kron(f.maps[k1], g.maps[k2])
    return IndexedMap(index, maps)


def identity_map(M) -> IndexedMap:
    return IndexedMap({v: v for v in M.V.carrier}, {v: LinMap.identity(M.dims[v]) for v in M.V.carrier})


def to_left(k):
    return ((k[0], k[1][0]), k[1][1])


def to_right(k):
    return (k[0][0], (k[0][1], k[1]))


def rebracket(F: IndexedMap, move) -> IndexedMap:
    """Associator on the targets of F; it is the identity on flat indices."""
    index, maps = {}, {}
    for k, k2 in F.index.items():
        index[k2] = move(k2)
        maps[k2] = LinMap.identity(F.maps[k].n_out)
    return IndexedMap(index, maps)


def hexagon_sides(M, N, P):
    """t_{M,N(x)P} and a o (id_N (x) t_{M,P}) o a^-1 o (t_{M,N} (x) id_P) o a^-1."""
    lhs, _ = yd_braiding(M, yd_tensor(N, P))
    t_mn, _ = yd_braiding(M, N)
    t_mp, _ = yd_braiding(M, P)
    start = IndexedMap({k: to_left(k) for k in lhs.index}, {k: LinMap.identity(m.n_in) for k, m in lhs.maps.items()})
    F = tensor_maps(t_mn, identity_map(P)).compose(start)
    F = rebracket(F, to_right).compose(F)
    F = tensor_maps(identity_map(N), t_mp).compose(F)
    F = rebracket(F, to_left).compose(F)
    return lhs, F


@pytest.fixture(scope="module", params=["kc2", "trivial-s3"])
def setting(request, kc2_c2):
    H = kc2_c2 if request.param == "kc2" else trivial_family(symmetric_group3())
    D = build_double(H, "koppinen")
    G = H.group
    return D, adjoint_yd_module(D), adjoint_yd_module(D, G.identity)


def test_adjoint_modules_are_yd(setting):
    _, M, M0 = setting
    assert check_yd_module(M).ok and check_yd_module(M0).ok


def test_yd_graded_round_trip(setting):
    D, M, _ = setting
    N = yd_to_graded(M, D)
    assert check_graded_module(N).ok
    assert same_yd_module(graded_to_yd(N, D), M)


def test_braiding_is_invertible(setting):
    _, M, M0 = setting
    for P, Q in ((M, M0), (M0, M), (M, M)):
        t, q = yd_braiding(P, Q)
        assert check_braiding(t, q).ok
        assert check_crossed_indices(t, P, Q).ok


def test_braiding_from_R_and_Q(setting):
    D, M, M0 = setting
    N, N0 = yd_to_graded(M, D), yd_to_graded(M0, D)
    t, q = yd_braiding(M, M0)
    assert braiding_from_R(D, N, N0).same_as(t)
    assert inverse_from_Q(D, N, N0).same_as(q)


def test_R_and_Q_are_recovered(setting):
    D = setting[0]
    reg = regular_graded_module(D.core)
    R, Q = extract_RQ_from_braiding(D, braiding_from_R(D, reg, reg), inverse_from_Q(D, reg, reg))
    assert same_tensor_family(R, D.R)
    assert same_tensor_family(Q, D.Q)


def test_extraction_notices_a_wrong_R(kc2_c2):
    D = build_double(kc2_c2, "koppinen")
    key = next(iter(D.R))
    R = dict(D.R)
    R[key] = {k: 2 * c for k, c in R[key].items()}
    bad = dataclasses.replace(D, R=R)
    reg = regular_graded_module(D.core)
    R2, _ = extract_RQ_from_braiding(bad, braiding_from_R(bad, reg, reg), inverse_from_Q(bad, reg, reg))
    assert not same_tensor_family(R2, D.R)


def test_tensor_is_compatible_with_the_equivalence(setting):
    D, M, M0 = setting
    for P, Q in ((M, M0), (M0, M)):
        T = yd_tensor(P, Q)
        assert check_yd_module(T).ok
        assert same_graded_module(yd_to_graded(T, D),
                                  graded_module_tensor(yd_to_graded(P, D), yd_to_graded(Q, D), D))


def test_unit_objects_correspond(setting):
    D = setting[0]
    U = yd_unit(D.H)
    assert check_yd_module(U).ok
    assert check_graded_module(graded_unit(D), cross_check=False).ok
    assert same_graded_module(yd_to_graded(U, D), graded_unit(D))


def test_unit_flattening_is_a_morphism(setting):
    _, M, _ = setting
    U = yd_unit(M.H)
    assert check_yd_morphism(unit_flattening(M), M, yd_tensor(M, U)).ok


def test_braiding_with_the_unit_is_trivial(setting):
    _, M, _ = setting
    t, _ = yd_braiding(M, yd_unit(M.H))
    for (v, star), k in t.index.items():
        assert k == (star, v)
        assert t.maps[(v, star)].is_identity()


def test_braiding_is_natural_for_unit_flattening(setting):
    _, M, M0 = setting
    U = yd_unit(M.H)
    f = unit_flattening(M)
    MU = yd_tensor(M, U)
    # t_{MU,N} o (f (x) id) = (id (x) f) o t_{M,N}
    t_big, _ = yd_braiding(MU, M0)
    t_small, _ = yd_braiding(M, M0)
    lhs = t_big.compose(tensor_maps(f, identity_map(M0)))
    rhs = tensor_maps(identity_map(M0), f).compose(t_small)
    assert lhs.same_as(rhs)


def test_hexagon_through_the_unit(kc2_c2):
    D = build_double(kc2_c2, "koppinen")
    lhs, rhs = hexagon_sides(adjoint_yd_module(D), yd_unit(D.H), adjoint_yd_module(D, "e"))
    assert rhs.same_as(lhs)


@pytest.mark.parametrize("x", ["e", "g"])
def test_hexagon(kc2_c2, x):
    D = build_double(kc2_c2, "koppinen")
    M, N = adjoint_yd_module(D), adjoint_yd_module(D, x)
    lhs, rhs = hexagon_sides(M, N, M)
    assert rhs.same_as(lhs)
