from fractions import Fraction

import hypothesis.strategies as st
import pytest
from hypothesis import given, settings

from hopfgc.linalg import (
    CoTensor,
    LinalgError,
    LinMap,
    ModP,
    MultTensor,
    ScalarField,
    SingularMatrix,
    Space,
    axpy,
    dual_basis,
    mat_from_rows,
    opposite_convolution,
    rank,
    tensor_space,
    tensor_vec,
    vec_equal,
)

PRIMES = [2, 3, 5, 7, 11, 101]

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


def sparse_vectors(n=6):
    return st.dictionaries(st.integers(0, n - 1), fractions.filter(bool), max_size=n)


@given(st.sampled_from(PRIMES), st.integers(-1000, 1000), st.integers(-1000, 1000))
def test_modp_field_laws(p, a, b):
    x, y = ModP(a, p), ModP(b, p)
    assert x + y == ModP(a + b, p)
    assert x * y == ModP(a * b, p)
    assert x - x == 0
    if y:
        assert (x / y) * y == x


def test_modp_refuses_mixed_moduli():
    with pytest.raises(LinalgError):
        ModP(1, 3) + ModP(1, 5)


def test_modp_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ModP(1, 7) / ModP(7, 7)


@pytest.mark.parametrize("spec", ["rational", "fp:2", "fp:5", "fp:101"])
def test_field_spec_round_trip(spec):
    F = ScalarField.from_spec(spec)
    assert F.spec() == spec
    assert ScalarField.from_spec(F.spec()) == F


@pytest.mark.parametrize("bad", ["fp:4", "fp:1", "reals", "fp:x"])
def test_bad_field_specs(bad):
    with pytest.raises((LinalgError, ValueError)):
        ScalarField.from_spec(bad)


@given(fractions)
def test_rational_scalar_text_is_canonical(q):
    F = ScalarField()
    s = F.fmt(q)
    assert F.parse(s) == q
    assert F.fmt(F.parse(s)) == s
    if q.denominator == 1:
        assert "/" not in s


def test_prime_field_scalar_text():
    F = ScalarField(5)
    assert F.fmt(F(-1)) == "4"
    assert F.parse("1/2") == F(3)
    assert F.characteristic == 5


@given(sparse_vectors(), sparse_vectors(), fractions)
def test_axpy_is_linear(u, v, c):
    acc = dict(u)
    axpy(acc, c, v)
    for k in set(u) | set(v):
        assert acc.get(k, 0) == u.get(k, 0) + c * v.get(k, 0)
    assert all(acc.values())


@given(st.lists(st.lists(st.integers(-3, 3), min_size=3, max_size=3), min_size=3, max_size=3))
@settings(max_examples=60)
def test_inverse_is_two_sided_or_singular(rows):
    F = ScalarField()
    M = mat_from_rows(rows)
    r = rank([{i: c for i, c in enumerate(row) if c} for row in rows], F)
    if r < 3:
        with pytest.raises(SingularMatrix):
            M.inverse(F)
    else:
        inv = M.inverse(F)
        assert M.compose(inv).is_identity() and inv.compose(M).is_identity()


def test_inverse_over_prime_field():
    F = ScalarField(3)
    M = mat_from_rows([[F(1), F(1)], [F(0), F(2)]])
    assert M.compose(M.inverse(F)).is_identity()


def test_linmap_shape_is_checked():
    with pytest.raises(LinalgError):
        LinMap(1, 2, [{5: 1}])
    with pytest.raises(LinalgError):
        LinMap(2, 2, [{}])


def test_mult_tensor_entries_round_trip():
    t = MultTensor((2, 2, 2), {(0, 1): {1: Fraction(2)}, (1, 1): {0: Fraction(-1)}})
    assert MultTensor.from_entries((2, 2, 2), t.entries()) == t
    assert t({0: 1, 1: 1}, {1: 1}) == {1: 2, 0: -1}
    with pytest.raises(LinalgError):
        MultTensor((1, 1, 1), {(0, 0): {3: 1}})


def test_cotensor_entries_round_trip():
    t = CoTensor(2, (2, 2), [{(0, 0): 1}, {(0, 1): 1, (1, 0): 1}])
    assert CoTensor.from_entries(2, (2, 2), t.entries()) == t
    assert t({1: 2}) == {(0, 1): 2, (1, 0): 2}


def test_tensor_space_and_vectors():
    U, V = Space.of_dim("U", 2), Space("V", ("a", "b", "c"))
    W = tensor_space(U, V)
    assert W.dim == 6
    assert W.basis[4] == ("e1", "b")
    assert tensor_vec({0: 2}, {1: 3, 2: 0}) == {(0, 1): 6}


def test_duplicate_basis_names_rejected():
    with pytest.raises(LinalgError):
        Space("V", ("a", "a"))


@given(sparse_vectors(4), sparse_vectors(4))
def test_dual_basis_reconstructs(c, xi):
    db = dual_basis(Space.of_dim("C", 4))
    assert vec_equal(db.reconstruct_vector(c), c)
    assert vec_equal(db.reconstruct_functional(xi), xi)


def test_opposite_convolution_swaps_factors():
    # Delta(e0) = e0 (x) e1: (xi xi')(e0) = xi(e1) xi'(e0)
    comult = CoTensor(1, (2, 2), [{(0, 1): 1}])
    assert opposite_convolution(comult, {1: 5}, {0: 7}) == {0: 35}
    assert opposite_convolution(comult, {0: 5}, {1: 7}) == {}


def test_rank_over_f2():
    F = ScalarField(2)
    assert rank([{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}], F) == 2
    assert rank([{0: 1, 1: 1}, {1: 1, 2: 1}, {0: 1, 2: 1}], ScalarField()) == 3
