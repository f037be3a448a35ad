"""Right action of ``Aut(H) = GL(n, Z)`` on the character ring.

Row ``i`` of an automorphism's matrix is the exponent vector of ``x_i^sigma``.
With this convention ``x^(sigma tau) = (x^sigma)^tau`` corresponds to the
matrix product ``sigma.matrix @ tau.matrix``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Sequence, Tuple

from .arith import Coord, Poly, Var, shift_coordinates
from .ideal import weight
from .words import char_abelian_shifted

TP = Coord.TPRIME


def _det(rows: Sequence[Sequence[int]]) -> Fraction:
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [a - f * b for a, b in zip(m[r], m[c])]
    return det


@dataclass(frozen=True)
class Automorphism:
    matrix: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.matrix)
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("automorphism matrix must be square and non-empty")
        if abs(_det(rows)) != 1:
            raise ValueError("automorphism matrix must have determinant +1 or -1")
        object.__setattr__(self, "matrix", rows)

    @classmethod
    def identity(cls, n: int) -> "Automorphism":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.matrix)

    def det(self) -> int:
        return int(_det(self.matrix))

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        a, b = self.matrix, other.matrix
        n = self.n
        return Automorphism(tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n))
                                        for j in range(n)) for i in range(n)))

    def image(self, i: int) -> Tuple[int, ...]:
        """Exponent vector of ``x_i^sigma``."""
        return self.matrix[i - 1]

    def is_plus_minus_identity(self) -> bool:
        ident = Automorphism.identity(self.n).matrix
        neg = tuple(tuple(-x for x in r) for r in ident)
        return self.matrix in (ident, neg)


def iota(n: int) -> Automorphism:
    """Inversion ``x_i -> x_i^-1``."""
    return Automorphism(tuple(tuple(-int(i == j) for j in range(n)) for i in range(n)))


def transvection(n: int, i: int, j: int, sign: int = 1) -> Automorphism:
    """``x_i -> x_i x_j^sign``, other generators fixed."""
    if i == j:
        raise ValueError("transvection needs i != j")
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    rows[i - 1][j - 1] = sign
    return Automorphism(tuple(map(tuple, rows)))


def permutation_matrix(perm: Sequence[int]) -> Automorphism:
    """``x_i -> x_perm[i]`` for a permutation of ``1..n``."""
    n = len(perm)
    return Automorphism(tuple(tuple(int(perm[i] == j + 1) for j in range(n)) for i in range(n)))


def elementary_automorphisms(n: int) -> List[Automorphism]:
    """All elementary transvections (both signs) and non-identity permutations."""
    out = [transvection(n, i, j, s) for i in range(1, n + 1) for j in range(1, n + 1)
           if i != j for s in (1, -1)]
    ident = tuple(range(1, n + 1))
    out += [permutation_matrix(p) for p in permutations(ident) if p != ident]
    return out


def random_automorphism(rng: random.Random, n: int, steps: int = 3) -> Automorphism:
    """Product of a few random elementary moves and sign flips (det +-1)."""
    rows = [[int(a == b) for b in range(n)] for a in range(n)]
    for _ in range(steps):
        if n > 1:
            i, j = rng.sample(range(n), 2)
            s = rng.choice((1, -1))
            rows[i] = [a + s * b for a, b in zip(rows[i], rows[j])]
        if rng.random() < 0.3:
            k = rng.randrange(n)
            rows[k] = [-a for a in rows[k]]
        if n > 1 and rng.random() < 0.3:
            i, j = rng.sample(range(n), 2)
            rows[i], rows[j] = rows[j], rows[i]
    return Automorphism(tuple(map(tuple, rows)))


def generators(n: int) -> List[Var]:
    return [Var(i) for i in range(1, n + 1)] + [
        Var(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def act_on_generator(sigma: Automorphism, v: Var) -> Poly:
    """``(tr' x)^sigma = tr' x^sigma`` for ``x = x_i`` or ``x_i x_j``."""
    word = [0] * sigma.n
    for i in v.indices:
        word = [a + b for a, b in zip(word, sigma.image(i))]
    return char_abelian_shifted(word)


def act_on_poly(sigma: Automorphism, p: Poly) -> Poly:
    """Ring-homomorphic extension of :func:`act_on_generator` (result in ``t'``)."""
    p = shift_coordinates(p, TP)
    if p.max_index() > sigma.n:
        raise ValueError("polynomial involves generators beyond the automorphism's rank")
    images: Dict[Var, Poly] = {v: act_on_generator(sigma, v) for v in p.variables()}
    if not images:
        return p
    return p.substitute(images, TP)


def in_E_k(sigma: Automorphism, k: int) -> bool:
    """Does ``sigma`` act trivially on ``J / J^(k+1)``?

    It suffices that every generator moves by an element of ``J^(k+1)``:
    ``a b - a' b' = (a - a') b + a' (b - b')`` keeps the weight bound on
    products, and every element of ``J`` is a combination of such products.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return all(weight(act_on_generator(sigma, v) - Poly.var(v, TP)) >= k + 1
               for v in generators(sigma.n))
