"""Bases and dimensions of the graded quotients ``gr^k(J) = J^k / J^(k+1)``."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb, lcm
from typing import List, Sequence, Tuple

from gmpy2 import mpq

from .arith import (Coord, Monomial, Poly, Rational, Var, monomial, shift_coordinates,
                    to_rational)
from .ideal import normal_form, weight
from .oracles import series_image


@dataclass(frozen=True, order=True)
class BasisMonomial:
    """``t'_{p1 q1} ... t'_{pl ql} t'_{i1} ... t'_{im}`` with ``p1 < q1 < p2 < ...``."""

    pairs: Tuple[Tuple[int, int], ...]
    singles: Tuple[int, ...]

    def __post_init__(self):
        flat = [i for pq in self.pairs for i in pq]
        if any(a >= b for a, b in zip(flat, flat[1:])):
            raise ValueError(f"pairs {self.pairs} do not interlace increasingly")
        if list(self.singles) != sorted(self.singles):
            raise ValueError("singles must be sorted")

    @property
    def degree(self) -> int:
        return len(self.pairs) + len(self.singles)

    def monomial(self) -> Monomial:
        factors = [(Var(p, q), 1) for p, q in self.pairs] + [(Var(i), 1) for i in self.singles]
        return monomial(factors)

    def to_poly(self) -> Poly:
        return Poly({self.monomial(): 1}, Coord.TPRIME)

    def __str__(self) -> str:
        return str(self.to_poly())


def _check(n: int, k: int) -> None:
    if n < 1:
        raise ValueError("rank n must be at least 1")
    if k < 1:
        raise ValueError("degree k must be at least 1")


def basis(n: int, k: int) -> List[BasisMonomial]:
    """Basic monomials of degree ``k`` in rank ``n``.

    Ordered by the number of pair factors, then the flattened pair indices,
    then the sorted singles.
    """
    _check(n, k)
    out = []
    for l in range(0, min(k, n // 2) + 1):
        for subset in combinations(range(1, n + 1), 2 * l):
            pairs = tuple(zip(subset[::2], subset[1::2]))
            for singles in combinations_with_replacement(range(1, n + 1), k - l):
                out.append(BasisMonomial(pairs, singles))
    return out


def dim_gr(n: int, k: int) -> int:
    _check(n, k)
    return sum(comb(n, 2 * l) * comb(n + k - l - 1, k - l) for l in range(k + 1))


class WeightTooLow(ValueError):
    def __init__(self, k: int, actual):
        super().__init__(f"element has weight {actual}, so it has no class in gr^{k}")
        self.k = k
        self.weight = actual


def graded_component(p: Poly, k: int, n: int) -> List[Rational]:
    """Coordinates of the class of ``p`` in ``gr^k(J)`` in the :func:`basis` order."""
    nf = normal_form(shift_coordinates(p, Coord.TPRIME))
    w = weight(nf)
    if w < k:
        raise WeightTooLow(k, w)
    part = nf.poly.homogeneous_part(k).terms
    return [part.get(b.monomial(), mpq(0)) for b in basis(n, k)]


# -- exact linear algebra --------------------------------------------------

def exact_rank(rows: Sequence[Sequence]) -> int:
    """Rank by fraction-free (Bareiss) elimination over the integers."""
    mat = []
    for r in rows:
        r = [to_rational(x) for x in r]
        den = lcm(*(int(x.denominator) for x in r)) if r else 1
        mat.append([int(x * den) for x in r])
    if not mat:
        return 0
    m, ncols = len(mat), len(mat[0])
    rank, prev = 0, 1
    for col in range(ncols):
        pivot = next((i for i in range(rank, m) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        pv = mat[rank][col]
        for i in range(rank + 1, m):
            a = mat[i][col]
            row_i, row_r = mat[i], mat[rank]
            mat[i] = [(pv * row_i[j] - a * row_r[j]) // prev for j in range(ncols)]
        prev = pv
        rank += 1
        if rank == m:
            break
    return rank


def independence_matrix(n: int, k: int) -> Tuple[List[List[Rational]], list]:
    """Degree-``2k`` series coefficients of every basic monomial of degree ``k``.

    Rows follow :func:`basis`; columns are the ``s``-monomials that occur.
    """
    rows_raw = []
    cols = set()
    for b in basis(n, k):
        part = series_image(b.to_poly(), 2 * k, n).homogeneous_part(2 * k)
        rows_raw.append(part)
        cols.update(part)
    cols = sorted(cols)
    return [[r.get(c, mpq(0)) for c in cols] for r in rows_raw], cols
