"""Independent evaluation oracles.

Three routes that never touch the rewriting machinery:

* :func:`laurent_image` evaluates a polynomial at the diagonal representation
  ``x_i -> diag(lam_i, 1/lam_i)`` symbolically, giving a Laurent polynomial;
* :func:`series_image` does the same with ``lam_i = 1 - s_i`` as a truncated
  power series in ``s``;
* :func:`eval_word_trace` multiplies exact ``SL(2, Q)`` matrices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple, Union

from gmpy2 import mpq

from .arith import (Coord, LaurentPoly, Poly, Rational, TruncatedSeries, Var, to_rational)
from .words import AbelianWord, FreeWord, as_word


@dataclass(frozen=True)
class Matrix2:
    a: Rational
    b: Rational
    c: Rational
    d: Rational

    def __post_init__(self):
        for f in "abcd":
            object.__setattr__(self, f, to_rational(getattr(self, f)))
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("matrix is not in SL(2): determinant != 1")

    @classmethod
    def identity(cls) -> "Matrix2":
        return cls(1, 0, 0, 1)

    @classmethod
    def diagonal(cls, lam) -> "Matrix2":
        lam = to_rational(lam)
        return cls(lam, 0, 0, 1 / lam)

    def __mul__(self, o: "Matrix2") -> "Matrix2":
        return Matrix2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                       self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def inverse(self) -> "Matrix2":
        return Matrix2(self.d, -self.b, -self.c, self.a)

    def __pow__(self, k: int) -> "Matrix2":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Matrix2.identity()
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def trace(self) -> Rational:
        return self.a + self.d

    def det(self) -> Rational:
        return self.a * self.d - self.b * self.c


@dataclass(frozen=True)
class RepAssignment:
    matrices: Tuple[Matrix2, ...]
    commuting_required: bool = False

    def __post_init__(self):
        object.__setattr__(self, "matrices", tuple(self.matrices))
        if self.commuting_required and not self.commutes():
            raise ValueError("assignment was declared commuting but is not")

    @property
    def n(self) -> int:
        return len(self.matrices)

    def commutes(self) -> bool:
        ms = self.matrices
        return all(ms[i] * ms[j] == ms[j] * ms[i]
                   for i in range(len(ms)) for j in range(i + 1, len(ms)))

    def traces(self) -> Dict[Var, Rational]:
        """Values of all generator variables ``t_i``, ``t_ij`` at this point."""
        ms = self.matrices
        out = {Var(i + 1): m.trace() for i, m in enumerate(ms)}
        for i in range(len(ms)):
            for j in range(i + 1, len(ms)):
                out[Var(i + 1, j + 1)] = (ms[i] * ms[j]).trace()
        return out


def diagonal_rep(lams: Sequence) -> RepAssignment:
    return RepAssignment(tuple(Matrix2.diagonal(x) for x in lams), commuting_required=True)


# -- exact random points ---------------------------------------------------

def _rand_rational(rng: random.Random, nonzero: bool = False) -> Rational:
    while True:
        x = mpq(rng.randint(-9, 9), rng.randint(1, 6))
        if x or not nonzero:
            return x


def sample_sl2(seed, count: int) -> List[Matrix2]:
    """``count`` seeded random matrices of ``SL(2, Q)`` with small entries."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        a = _rand_rational(rng, nonzero=True)
        b, c = _rand_rational(rng), _rand_rational(rng)
        out.append(Matrix2(a, b, c, (1 + b * c) / a))
    return out


def sample_commuting_family(seed, n: int, kind: str = "diagonal") -> RepAssignment:
    """Seeded commuting ``n``-tuple: ``diagonal`` or ``unipotent_signed``.

    ``unipotent_signed`` draws ``+-[[1, u], [0, 1]]``, which commute pairwise
    and are not diagonalisable unless ``u = 0``.
    """
    rng = random.Random(seed)
    if kind == "diagonal":
        mats = [Matrix2.diagonal(_rand_rational(rng, nonzero=True)) for _ in range(n)]
    elif kind == "unipotent_signed":
        mats = []
        for _ in range(n):
            sgn = rng.choice((1, -1))
            u = _rand_rational(rng)
            mats.append(Matrix2(sgn, sgn * u, 0, sgn))
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    return RepAssignment(tuple(mats), commuting_required=True)


# -- word traces -----------------------------------------------------------

def eval_word_trace(w: Union[AbelianWord, FreeWord, Sequence[int]], rep: RepAssignment) -> Rational:
    """Exact ``tr rho(w)``; abelian words need a commuting assignment."""
    ms = rep.matrices
    if isinstance(w, FreeWord):
        out = Matrix2.identity()
        for i, s in w.letters:
            out = out * (ms[i - 1] if s > 0 else ms[i - 1].inverse())
        return out.trace()
    w = as_word(w, rep.n)
    if not (rep.commuting_required or rep.commutes()):
        raise ValueError("abelian word evaluated at a non-commuting assignment")
    out = Matrix2.identity()
    for m, e in zip(ms, w.exponents):
        out = out * m ** e
    return out.trace()


def eval_poly(p: Poly, rep: RepAssignment) -> Rational:
    """Value of ``p`` at the traces of ``rep`` (shifted by 2 for ``t'``)."""
    vals = rep.traces()
    if p.coord is Coord.TPRIME:
        vals = {v: x - 2 for v, x in vals.items()}
    return p.evaluate(vals)


# -- Laurent and series images ---------------------------------------------

def _rank_of(p: Poly, n: int | None) -> int:
    need = p.max_index()
    if n is None:
        return max(need, 1)
    if n < need:
        raise ValueError(f"polynomial uses index {need} > n = {n}")
    return n


def _generator_laurent(v: Var, n: int, shifted: bool) -> LaurentPoly:
    e = [0] * n
    for i in v.indices:
        e[i - 1] = 1
    terms = {tuple(e): 1, tuple(-x for x in e): 1}
    if shifted:
        terms[(0,) * n] = -2
    return LaurentPoly(n, terms)


def _image(p: Poly, gen: Callable[[Var], object], one, zero):
    cache: Dict[Tuple[Var, int], object] = {}

    def power(v, e):
        if (v, e) not in cache:
            cache[(v, e)] = gen(v) if e == 1 else power(v, e - 1) * gen(v)
        return cache[(v, e)]

    total = zero
    for m, c in p.terms.items():
        term = one * c
        for v, e in m:
            term = term * power(v, e)
        total = total + term
    return total


def laurent_image(p: Poly, n: int | None = None) -> LaurentPoly:
    """Substitute ``t_i -> lam_i + 1/lam_i``, ``t_ij -> lam_i lam_j + 1/(lam_i lam_j)``."""
    n = _rank_of(p, n)
    shifted = p.coord is Coord.TPRIME
    gens: Dict[Var, LaurentPoly] = {}

    def gen(v):
        if v not in gens:
            gens[v] = _generator_laurent(v, n, shifted)
        return gens[v]

    return _image(p, gen, LaurentPoly.const(n, 1), LaurentPoly(n))


def _generator_series(v: Var, n: int, order: int, shifted: bool) -> TruncatedSeries:
    lam = TruncatedSeries.const(n, order, 1)
    inv = TruncatedSeries.const(n, order, 1)
    for i in v.indices:
        lam = lam * (TruncatedSeries.const(n, order, 1) - TruncatedSeries.variable(n, order, i))
        inv = inv * TruncatedSeries.geometric(n, order, i)
    out = lam + inv
    return out - TruncatedSeries.const(n, order, 2) if shifted else out


def series_image(p: Poly, order: int, n: int | None = None) -> TruncatedSeries:
    """Expansion at ``lam_i = 1 - s_i`` up to total degree ``order`` in ``s``."""
    n = _rank_of(p, n)
    shifted = p.coord is Coord.TPRIME
    gens: Dict[Var, TruncatedSeries] = {}

    def gen(v):
        if v not in gens:
            gens[v] = _generator_series(v, n, order, shifted)
        return gens[v]

    return _image(p, gen, TruncatedSeries.const(n, order, 1), TruncatedSeries(n, order))


def expand_laurent_at_one(f: LaurentPoly, order: int) -> TruncatedSeries:
    """Rewrite a Laurent polynomial in ``s = 1 - lam`` and truncate."""
    n = f.n
    one = TruncatedSeries.const(n, order, 1)
    pos = [one - TruncatedSeries.variable(n, order, i) for i in range(1, n + 1)]
    neg = [TruncatedSeries.geometric(n, order, i) for i in range(1, n + 1)]
    total = TruncatedSeries(n, order)
    for e, c in f.terms.items():
        term = one * c
        for i, k in enumerate(e):
            base = pos[i] if k > 0 else neg[i]
            for _ in range(abs(k)):
                term = term * base
        total = total + term
    return total


# -- classical trace identities on random SL(2) tuples ----------------------

def _vogt_sides(name: str, m: Sequence[Matrix2]):
    tr = lambda *ms: _prod(ms).trace()  # noqa: E731
    if name == "eq1":
        x, = m[:1]
        return tr(x.inverse()), tr(x)
    if name == "eq2":
        x, y = m[:2]
        return tr(x, y), tr(y, x)
    if name == "eq3":
        x, y = m[:2]
        return tr(x, y) + tr(x, y.inverse()), tr(x) * tr(y)
    if name == "eq4":
        x, y, z = m[:3]
        return (tr(x, y, z) + tr(y, x, z),
                tr(x) * tr(y, z) + tr(y) * tr(x, z) + tr(z) * tr(x, y) - tr(x) * tr(y) * tr(z))
    if name == "eq4.5":
        x, y = m[:2]
        comm = x * y * x.inverse() * y.inverse()
        return (comm.trace(),
                tr(x) ** 2 + tr(y) ** 2 + tr(x, y) ** 2 - tr(x) * tr(y) * tr(x, y) - 2)
    if name == "eq5":
        x, y, z, w = m[:4]
        X, Y, Z, W = tr(x), tr(y), tr(z), tr(w)
        rhs = (X * tr(y, z, w) + Y * tr(z, w, x) + Z * tr(w, x, y) + W * tr(x, y, z)
               + tr(x, y) * tr(z, w) - tr(x, z) * tr(y, w) + tr(x, w) * tr(y, z)
               - X * Y * tr(z, w) - Y * Z * tr(x, w) - X * W * tr(y, z) - Z * W * tr(x, y)
               + X * Y * Z * W)
        return 2 * tr(x, y, z, w), rhs
    raise ValueError(f"unknown identity {name!r}")


def _prod(ms: Sequence[Matrix2]) -> Matrix2:
    out = Matrix2.identity()
    for x in ms:
        out = out * x
    return out


VOGT_IDENTITIES = ("eq1", "eq2", "eq3", "eq4", "eq4.5", "eq5")


def verify_vogt(identity: str, seed=0, trials: int = 100) -> bool:
    """Check a classical ``SL(2)`` trace identity on random non-commuting tuples."""
    if identity not in VOGT_IDENTITIES:
        raise ValueError(f"unknown identity {identity!r}")
    if trials < 1:
        raise ValueError("trials must be positive")
    mats = sample_sl2(f"{seed}:{identity}", 4 * trials)
    for t in range(trials):
        lhs, rhs = _vogt_sides(identity, mats[4 * t:4 * t + 4])
        if lhs != rhs:
            return False
    return True


def f3_relation_value(x: Matrix2, y: Matrix2, z: Matrix2) -> Rational:
    """``t_123^2 - P t_123 + Q`` at a triple of matrices; zero for every triple."""
    ta, tb, tc = x.trace(), y.trace(), z.trace()
    tab, tac, tbc = (x * y).trace(), (x * z).trace(), (y * z).trace()
    tabc = (x * y * z).trace()
    P = tab * tc + tac * tb + tbc * ta - ta * tb * tc
    Q = (ta ** 2 + tb ** 2 + tc ** 2 + tab ** 2 + tac ** 2 + tbc ** 2
         - ta * tb * tab - ta * tc * tac - tb * tc * tbc + tab * tbc * tac - 4)
    return tabc ** 2 - P * tabc + Q


def verify_f3_kernel(seed=0, trials: int = 100) -> bool:
    if trials < 1:
        raise ValueError("trials must be positive")
    mats = sample_sl2(f"{seed}:f3", 3 * trials)
    return all(f3_relation_value(*mats[3 * t:3 * t + 3]) == 0 for t in range(trials))


def random_poly(rng: random.Random, n: int, *, degree: int = 3, terms: int = 4,
                coord: Coord = Coord.TPRIME) -> Poly:
    """Small random polynomial in the ``n + C(n, 2)`` generator variables."""
    gens = [Var(i) for i in range(1, n + 1)] + [
        Var(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    acc = {}
    for _ in range(terms):
        d = rng.randint(0, degree)
        factors = {}
        for v in rng.choices(gens, k=d):
            factors[v] = factors.get(v, 0) + 1
        m = tuple(sorted(factors.items()))
        acc[m] = acc.get(m, 0) + mpq(rng.randint(-5, 5), rng.randint(1, 3))
    return Poly(acc, coord)
