"""Relation ideal, normal forms and weights in the character ring of ``Z^n``.

Everything here works in shifted coordinates ``t'``.  A monomial is *basic*
when its pair variables are square-free with pairwise distinct indices that
interlace as ``p1 < q1 < p2 < q2 < ...``; basic monomials of degree ``k``
represent a basis of ``J^k / J^(k+1)``, and together they form a vector space
basis of the whole ring.  :func:`normal_form` rewrites any polynomial onto
them, so two polynomials agree in the ring iff their normal forms coincide.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Dict, List, Optional, Tuple

from gmpy2 import mpq

from .arith import (Coord, Monomial, Poly, Rational, Var, mono_mul,
                    shift_coordinates)

TP = Coord.TPRIME


def _single(i: int) -> Poly:
    return Poly.single(i, TP)


def read_pair(i: int, j: int) -> Poly:
    """``t'_ij`` with the reading conventions for ``i > j`` and ``i == j``."""
    if i == j:
        t = _single(i)
        return t * t + 4 * t
    return Poly.pair(min(i, j), max(i, j), TP)


def generator_poly(i: int, j: int, r: int, s: int) -> Poly:
    """The relation attached to the index quadruple ``(i, j, r, s)``."""
    ti, tj, tr, ts = _single(i), _single(j), _single(r), _single(s)
    ir, js, is_, jr = read_pair(i, r), read_pair(j, s), read_pair(i, s), read_pair(j, r)
    return (ir * js - is_ * jr
            - (ti * tr + tj * ts - tj * tr - ti * ts)
            + (ti * jr + tj * is_ + tr * is_ + ts * jr - tj * ir - ti * js - tr * js - ts * ir)
            + mpq(1, 2) * (tj * tr * is_ + ti * ts * jr - ti * tr * js - tj * ts * ir))


@dataclass(frozen=True)
class IdealGenerator:
    indices: Tuple[int, int, int, int]
    poly: Poly

    @property
    def trivial(self) -> bool:
        return self.poly.is_zero()


def ideal_generators(n: int) -> List[IdealGenerator]:
    """All ``n^4`` generators, zero ones included (``trivial`` is then True)."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    return [IdealGenerator(q, _generator_cached(*q))
            for q in product(range(1, n + 1), repeat=4)]


@lru_cache(maxsize=None)
def _generator_cached(i, j, r, s) -> Poly:
    return generator_poly(i, j, r, s)


# -- rewriting -------------------------------------------------------------

def is_basis_monomial(m: Monomial) -> bool:
    last = 0
    for v, e in m:
        if v.is_pair:
            p, q = v
            if e != 1 or p <= last:
                return False
            last = q
    return True


def _offending(pairs: List[Var]) -> List[Tuple[Var, Var]]:
    """Every pair of pair-factors (with multiplicity) violating the basis shape."""
    out = []
    for a in range(len(pairs)):
        for b in range(a + 1, len(pairs)):
            u, v = pairs[a], pairs[b]
            if u == v or set(u) & set(v):
                out.append((u, v))
                continue
            (p1, q1), (p2, q2) = sorted((u, v))
            if p2 < q1:  # crossing or nested
                out.append((u, v))
    return out


@lru_cache(maxsize=None)
def rewrite_rule(u: Var, v: Var) -> Poly:
    """Replacement for the product ``t'_u t'_v`` of two offending pair variables.

    The result is congruent to ``t'_u t'_v`` modulo the ideal and is smaller in
    the order (number of pair factors, total span of the pairs):

    * ``u == v``: the square formula, fewer pair factors;
    * ``u, v`` share an index ``a``: exchange relation through ``t'_aa``;
    * crossing / nested: exchange relation onto the consecutive pairing.
    """
    if u == v:
        a, b = u
        ta, tb, tab = _single(a), _single(b), Poly.var(u, TP)
        return -ta * ta - tb * tb + 2 * (ta * tb + ta * tab + tb * tab) + ta * tb * tab
    lead = Poly.var(u, TP) * Poly.var(v, TP)
    shared = set(u) & set(v)
    if shared:
        (a,) = shared
        (b,) = set(u) - shared
        (c,) = set(v) - shared
        g = generator_poly(a, c, b, a)
    else:
        a, b, c, d = sorted(u + v)
        if {u, v} == {Var(a, c), Var(b, d)}:
            g = generator_poly(a, d, c, b)
        elif {u, v} == {Var(a, d), Var(b, c)}:
            g = generator_poly(a, c, d, b)
        else:
            raise ValueError(f"{u} and {v} are already in consecutive position")
    return lead - g


def _split(m: Monomial, u: Var, v: Var) -> Monomial:
    """``m / (t'_u t'_v)``."""
    need = {u: 1}
    need[v] = need.get(v, 0) + 1
    out = []
    for w, e in m:
        e -= need.get(w, 0)
        if e:
            out.append((w, e))
    return tuple(out)


def _pairs_of(m: Monomial) -> List[Var]:
    return [v for v, e in m if v.is_pair for _ in range(e)]


@lru_cache(maxsize=None)
def _nf_monomial(m: Monomial) -> Tuple[Tuple[Monomial, Rational], ...]:
    if is_basis_monomial(m):
        return ((m, mpq(1)),)
    u, v = min(_offending(_pairs_of(m)), key=_rule_priority)
    return _reduce_step(m, u, v, _nf_monomial)


def _rule_priority(uv: Tuple[Var, Var]):
    u, v = uv
    return (0 if u == v else 1 if set(u) & set(v) else 2, uv)


def _reduce_step(m: Monomial, u: Var, v: Var, recurse) -> Tuple[Tuple[Monomial, Rational], ...]:
    rest = _split(m, u, v)
    acc: Dict[Monomial, Rational] = {}
    for mm, c in rewrite_rule(u, v).terms.items():
        for bm, bc in recurse(mono_mul(rest, mm)):
            acc[bm] = acc.get(bm, 0) + c * bc
    return tuple((k, c) for k, c in acc.items() if c)


def _nf_monomial_random(m: Monomial, rng: random.Random) -> Tuple[Tuple[Monomial, Rational], ...]:
    if is_basis_monomial(m):
        return ((m, mpq(1)),)
    u, v = rng.choice(_offending(_pairs_of(m)))
    return _reduce_step(m, u, v, lambda x: _nf_monomial_random(x, rng))


class NormalForm:
    """Canonical representative of a coset of the relation ideal."""

    __slots__ = ("poly",)

    def __init__(self, poly: Poly):
        if poly.coord is not TP:
            raise ValueError("normal forms live in t' coordinates")
        self.poly = poly

    def __eq__(self, other) -> bool:
        if isinstance(other, NormalForm):
            return self.poly == other.poly
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.poly)

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return ring_mul_normalized(self, other)

    def __add__(self, other: "NormalForm") -> "NormalForm":
        return NormalForm(self.poly + other.poly)

    def __sub__(self, other: "NormalForm") -> "NormalForm":
        return NormalForm(self.poly - other.poly)

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def weight(self):
        d = self.poly.min_degree()
        return math.inf if d is None else d

    def __repr__(self) -> str:
        return f"NormalForm({self.poly})"

    def __str__(self) -> str:
        return str(self.poly)


def normal_form(p: Poly, *, rng: Optional[random.Random] = None) -> NormalForm:
    """Rewrite ``p`` (in ``t'`` coordinates) onto basic monomials.

    Passing ``rng`` picks the offending pair to rewrite at random at every
    step (uncached); the output is the same either way.
    """
    if p.coord is not TP:
        raise ValueError("normal_form expects t'-coordinates; shift first")
    acc: Dict[Monomial, Rational] = {}
    for m, c in p.terms.items():
        reduced = _nf_monomial(m) if rng is None else _nf_monomial_random(m, rng)
        for bm, bc in reduced:
            acc[bm] = acc.get(bm, 0) + c * bc
    return NormalForm(Poly(acc, TP))


def _as_shifted(p: Poly) -> Poly:
    return shift_coordinates(p, TP)


def is_in_ideal(p: Poly) -> bool:
    return normal_form(_as_shifted(p)).is_zero()


def equal_mod_I(p: Poly, q: Poly) -> bool:
    return is_in_ideal(_as_shifted(p) - _as_shifted(q))


def weight(p: Poly | NormalForm):
    """Largest ``k`` with ``p`` in ``J^k``; ``math.inf`` for zero.

    Degree-``k`` basic monomials are independent in ``J^k / J^(k+1)``, so
    the lowest degree present in the normal form is the weight.
    """
    if isinstance(p, NormalForm):
        return p.weight()
    return normal_form(_as_shifted(p)).weight()


def ring_mul_normalized(p: NormalForm, q: NormalForm) -> NormalForm:
    return normal_form(p.poly * q.poly)


def clear_caches() -> None:
    _nf_monomial.cache_clear()
    rewrite_rule.cache_clear()
    _generator_cached.cache_clear()
