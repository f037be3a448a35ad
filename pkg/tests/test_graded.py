from fractions import Fraction
from math import comb

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from fricke.arith import Coord, Poly, Var
from fricke.graded import (BasisMonomial, WeightTooLow, basis, dim_gr, exact_rank,
                           graded_component, independence_matrix)
from fricke.oracles import series_image

TP = Coord.TPRIME


def t(i, j=None):
    return Poly.var(Var(i, j), TP)


def naive_rank(rows):
    m = [[Fraction(int(x.numerator), int(x.denominator)) if hasattr(x, "numerator") else Fraction(x)
          for x in r] for r in rows]
    rank = 0
    for col in range(len(m[0]) if m else 0):
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col] / m[rank][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def test_basis_examples():
    assert [str(b) for b in basis(2, 1)] == ["t'_1", "t'_2", "t'_12"]
    assert [str(b) for b in basis(2, 2)] == ["t'_1^2", "t'_1*t'_2", "t'_2^2",
                                             "t'_1*t'_12", "t'_2*t'_12"]
    assert len(basis(3, 2)) == 15
    assert basis(1, 3) == [BasisMonomial((), (1, 1, 1))]


def test_basis_rejects_non_interlaced():
    with pytest.raises(ValueError):
        BasisMonomial(((1, 3), (2, 4)), ())
    with pytest.raises(ValueError):
        BasisMonomial(((1, 2),), (2, 1))
    with pytest.raises(ValueError):
        basis(0, 1)
    with pytest.raises(ValueError):
        dim_gr(2, 0)


def test_dimension_formula_examples():
    assert (dim_gr(2, 1), dim_gr(2, 2), dim_gr(3, 2)) == (3, 5, 15)
    assert dim_gr(1, 7) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_basis_size_matches_formula(n):
    for k in range(1, 7):
        expected = sum(comb(n, 2 * l) * comb(n + k - l - 1, k - l) for l in range(k + 1))
        assert len(basis(n, k)) == dim_gr(n, k) == expected
        assert len(set(basis(n, k))) == len(basis(n, k))


def test_graded_component():
    p = t(1, 2) * t(1) + t(1) * t(2) * t(3)
    vec = graded_component(p, 2, 3)
    idx = [b.to_poly() for b in basis(3, 2)].index(t(1) * t(1, 2))
    assert vec[idx] == 1 and sum(1 for c in vec if c) == 1
    assert all(c == 0 for c in graded_component(p, 1, 3))
    with pytest.raises(WeightTooLow) as info:
        graded_component(p, 3, 3)
    assert info.value.weight == 2


@pytest.mark.parametrize("p", [t(1, 3) * t(2, 4), t(1, 2) * t(1, 3), t(1, 4) ** 2,
                               t(1, 3) * t(2, 4) * t(1)])
def test_graded_component_matches_series_oracle(p):
    # the class in gr^k is pinned down by the degree-2k series coefficients
    n, k = 4, 2 if p.degree() == 2 else 3
    vec = graded_component(p, k, n)
    target = series_image(p, 2 * k, n).homogeneous_part(2 * k)
    combo = {}
    for c, b in zip(vec, basis(n, k)):
        for mono, v in series_image(b.to_poly(), 2 * k, n).homogeneous_part(2 * k).items():
            combo[mono] = combo.get(mono, 0) + c * v
    assert {m: v for m, v in combo.items() if v} == target


@given(st.lists(st.lists(st.integers(-3, 3), min_size=4, max_size=4), min_size=1, max_size=6),
       st.integers(1, 5))
def test_exact_rank_matches_naive(rows, den):
    rows = [[mpq(x, den) for x in r] for r in rows]
    assert exact_rank(rows) == naive_rank(rows)


def test_exact_rank_edge_cases():
    assert exact_rank([]) == 0
    assert exact_rank([[0, 0], [0, 0]]) == 0
    assert exact_rank([[1, 2], [2, 4], [Fraction(1, 2), 1]]) == 1


@pytest.mark.parametrize("n, k", [(1, 3), (2, 2), (3, 2)])
def test_independence_matrix_full_rank(n, k):
    rows, cols = independence_matrix(n, k)
    assert len(rows) == dim_gr(n, k)
    assert exact_rank(rows) == len(rows)
