"""Fricke characters of elements of a free abelian group as trace polynomials.

An element of ``H = Z^n`` is an :class:`AbelianWord` (its exponent vector).
:func:`char_abelian` returns the polynomial in ``t_i = tr x_i`` and
``t_ij = tr x_i x_j`` whose value at every representation is ``tr rho(w)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence, Tuple, Union

from gmpy2 import mpq

from .arith import Coord, Poly, shift_coordinates
from .ideal import equal_mod_I, weight


@dataclass(frozen=True)
class AbelianWord:
    exponents: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(a) for a in self.exponents))

    @classmethod
    def generator(cls, n: int, i: int) -> "AbelianWord":
        e = [0] * n
        e[i - 1] = 1
        return cls(tuple(e))

    @property
    def n(self) -> int:
        return len(self.exponents)

    def __len__(self) -> int:
        return len(self.exponents)

    def __iter__(self):
        return iter(self.exponents)

    def __add__(self, other: "AbelianWord") -> "AbelianWord":
        other = as_word(other)
        if other.n != self.n:
            raise ValueError("words of different rank")
        return AbelianWord(tuple(a + b for a, b in zip(self, other)))

    # group law of H written multiplicatively
    __mul__ = __add__

    def __neg__(self) -> "AbelianWord":
        return AbelianWord(tuple(-a for a in self))

    def inverse(self) -> "AbelianWord":
        return -self

    def __pow__(self, k: int) -> "AbelianWord":
        return AbelianWord(tuple(k * a for a in self))

    def __str__(self) -> str:
        parts = [f"x{i}" + (f"^{a}" if a != 1 else "")
                 for i, a in enumerate(self.exponents, 1) if a]
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class FreeWord:
    """Element of the free group: a sequence of ``(generator index, +1/-1)``."""

    letters: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        letters = tuple((int(i), int(s)) for i, s in self.letters)
        for i, s in letters:
            if i < 1 or s not in (1, -1):
                raise ValueError(f"bad letter ({i}, {s})")
        object.__setattr__(self, "letters", letters)

    def inverse(self) -> "FreeWord":
        return FreeWord(tuple((i, -s) for i, s in reversed(self.letters)))

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        return FreeWord(self.letters + other.letters)

    def abelianize(self, n: int) -> AbelianWord:
        e = [0] * n
        for i, s in self.letters:
            e[i - 1] += s
        return AbelianWord(tuple(e))


WordLike = Union[AbelianWord, Sequence[int]]


def as_word(w: WordLike, n: int | None = None) -> AbelianWord:
    if not isinstance(w, AbelianWord):
        w = AbelianWord(tuple(w))
    if n is not None and w.n != n:
        raise ValueError(f"word has length {w.n}, ambient rank is {n}")
    return w


# -- text syntax -----------------------------------------------------------

class WordParseError(ValueError):
    def __init__(self, message: str, text: str, pos: int):
        super().__init__(f"{message} at position {pos} in {text!r}")
        self.text = text
        self.pos = pos


_TOKEN = re.compile(r"\s*(?:(x)(\d+)(?:\s*\^\s*([+-]?\d+))?|(\*))")


def parse_word(text: str, n: int | None = None) -> AbelianWord:
    """Parse ``x1^3*x2^-2`` (``*`` or whitespace separated) or ``[3,-2,0]``.

    For the letter syntax the rank defaults to the largest generator index.
    """
    stripped = text.strip()
    if stripped.startswith("["):
        if not stripped.endswith("]"):
            raise WordParseError("unterminated exponent vector", text, len(text))
        body = stripped[1:-1]
        exps = []
        offset = text.index("[") + 1
        for chunk in body.split(","):
            tok = chunk.strip()
            if not re.fullmatch(r"[+-]?\d+", tok):
                raise WordParseError(f"bad exponent {tok!r}", text, offset)
            exps.append(int(tok))
            offset += len(chunk) + 1
        return as_word(exps, n)

    exps: dict = {}
    pos = 0
    end = len(text.rstrip())
    dangling = None  # position of a '*' still waiting for its factor
    while pos < end:
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            bad = text[pos:].lstrip()
            at = pos + (len(text[pos:]) - len(bad))
            raise WordParseError(f"unexpected token {bad[:1]!r}", text, at)
        if m.group(4):
            if dangling is not None or not exps:
                raise WordParseError("'*' without a preceding factor", text, m.start(4))
            dangling = m.start(4)
        else:
            i = int(m.group(2))
            if i < 1:
                raise WordParseError(f"generator index {i} out of range", text, m.start(2))
            exps[i] = exps.get(i, 0) + int(m.group(3) or 1)
            dangling = None
        pos = m.end()
    if dangling is not None:
        raise WordParseError("trailing '*'", text, dangling)
    rank = max(exps, default=0) if n is None else n
    if exps and max(exps) > rank:
        raise WordParseError(f"generator x{max(exps)} exceeds rank {rank}", text, 0)
    return AbelianWord(tuple(exps.get(i, 0) for i in range(1, rank + 1)))


# -- trace reduction -----------------------------------------------------

def _t(i: int) -> Poly:
    return Poly.single(i)


def _tpair(i: int, j: int) -> Poly:
    return Poly.pair(min(i, j), max(i, j))


@lru_cache(maxsize=None)
def _trace(e: Tuple[int, ...], reverse: bool) -> Poly:
    nonzero = [i for i, a in enumerate(e) if a]
    if nonzero and all(e[i] < 0 for i in nonzero):
        return _trace(tuple(-a for a in e), reverse)

    unreduced = [i for i in nonzero if e[i] != 1]
    if unreduced:
        top = max(abs(e[i]) for i in unreduced)
        cands = [i for i in unreduced if abs(e[i]) == top]
        i = cands[-1] if reverse else cands[0]
        a = e[i]

        def with_exp(b: int) -> Tuple[int, ...]:
            return e[:i] + (b,) + e[i + 1:]

        ti = _t(i + 1)
        if a >= 2:
            return ti * _trace(with_exp(a - 1), reverse) - _trace(with_exp(a - 2), reverse)
        if a <= -2:
            return ti * _trace(with_exp(a + 1), reverse) - _trace(with_exp(a + 2), reverse)
        # a == -1: tr(x^-1 R) = tr(x) tr(R) - tr(x R)
        return ti * _trace(with_exp(0), reverse) - _trace(with_exp(1), reverse)

    support = [i + 1 for i in nonzero]
    if not support:
        return Poly.const(2)
    return _split_square_free(tuple(support))


@lru_cache(maxsize=None)
def _split_square_free(support: Tuple[int, ...]) -> Poly:
    """Trace of ``x_S`` for a square-free word with support ``S``.

    2 tr xyz = tr x tr yz + tr y tr xz + tr z tr xy - tr x tr y tr z, averaged
    over every choice of the pair ``{x, y}`` so the result is equivariant
    under relabelling the generators.
    """
    if len(support) == 1:
        return _t(support[0])
    if len(support) == 2:
        return _tpair(*support)
    total = Poly.zero()
    count = 0
    for a in range(len(support)):
        for b in range(a + 1, len(support)):
            x, y = support[a], support[b]
            z = tuple(i for i in support if i not in (x, y))
            tz = _split_square_free(z)
            total = total + (_t(x) * _split_square_free(tuple(sorted(z + (y,))))
                             + _t(y) * _split_square_free(tuple(sorted(z + (x,))))
                             + tz * _tpair(x, y) - _t(x) * _t(y) * tz)
            count += 1
    return total.scale(mpq(1, 2 * count))


def char_abelian(w: WordLike, n: int | None = None, *, reverse: bool = False) -> Poly:
    """Trace polynomial of ``w`` in ``t``-coordinates.

    Exponents are lowered by ``tr(x^a R) = tr(x) tr(x^(a-1) R) - tr(x^(a-2) R)``
    on the lowest-index generator of largest unreduced exponent (highest index
    when ``reverse``); square-free words of support three or more are split
    with the abelian three-term product formula, averaged over the choice of
    split.  ``reverse`` only changes the reduction order, never the result,
    and relabelling generators permutes the variables of the result.
    """
    w = as_word(w, n)
    return _trace(w.exponents, bool(reverse))


def char_abelian_shifted(w: WordLike, n: int | None = None, *, reverse: bool = False) -> Poly:
    """Shifted character ``tr' w = tr w - 2`` in ``t'``-coordinates."""
    return shift_coordinates(char_abelian(w, n, reverse=reverse), Coord.TPRIME) - 2


# -- shifted trace identities ----------------------------------------------

def _shifted_sides(name: str, ws: Sequence[AbelianWord], alpha: int):
    def tr(*parts: AbelianWord) -> Poly:
        acc = parts[0]
        for p in parts[1:]:
            acc = acc + p
        return char_abelian_shifted(acc)

    if name == "eq8":
        x, y = ws
        lhs = tr(x, y) + tr(x, -y)
        rhs = 2 * tr(x) + 2 * tr(y) + tr(x) * tr(y)
    elif name == "eq9":
        x, y, z = ws
        X, Y, Z = tr(x), tr(y), tr(z)
        lhs = tr(x, y, z) + tr(y, x, z)
        rhs = (-2 * (X + Y + Z) + 2 * (tr(x, y) + tr(y, z) + tr(x, z))
               + X * tr(y, z) + Y * tr(x, z) + Z * tr(x, y)
               - 2 * (X * Y + Y * Z + Z * X) - X * Y * Z)
    elif name == "eq20":
        x, y, z, w = ws
        X, Y, Z, W = tr(x), tr(y), tr(z), tr(w)
        lhs = 2 * tr(x, y, z, w)
        rhs = (2 * (X + Y + Z + W)
               - 2 * (tr(x, y) + tr(x, z) + tr(x, w) + tr(y, z) + tr(y, w) + tr(z, w))
               + 2 * (tr(x, y, z) + tr(x, y, w) + tr(x, z, w) + tr(y, z, w))
               + 2 * (X * Y + X * W + Y * Z + Z * W + 2 * X * Z + 2 * Y * W)
               - 2 * (X * tr(y, z) + X * tr(z, w) + Y * tr(x, w) + Y * tr(z, w)
                      + Z * tr(x, y) + Z * tr(x, w) + W * tr(x, y) + W * tr(y, z))
               + (X * tr(y, z, w) + Y * tr(x, z, w) + Z * tr(x, y, w) + W * tr(x, y, z))
               + (tr(x, y) * tr(z, w) - tr(x, z) * tr(y, w) + tr(x, w) * tr(y, z))
               - (X * Y * tr(z, w) + Y * Z * tr(x, w) + X * W * tr(y, z) + Z * W * tr(x, y))
               + X * Y * Z * W
               + 2 * (X * Y * Z + X * Y * W + X * Z * W + Y * Z * W))
    elif name == "colon":
        x, y, z, w = ws
        lhs = tr(x, z) * tr(y, w)
        rhs = colon_rhs(tr(x), tr(y), tr(z), tr(w),
                        tr(x, z), tr(y, w), tr(x, w), tr(y, z))
    elif name == "kofre":
        x, y, z = ws
        X, Y, Z = tr(x), tr(y), tr(z)
        XY, XZ, YZ = tr(x, y), tr(x, z), tr(y, z)
        lhs = XY * XZ
        rhs = kofre_rhs(X, Y, Z, XY, XZ, YZ)
    elif name == "sipre":
        x, y = ws
        X, Y, XY = tr(x), tr(y), tr(x, y)
        lhs = XY * XY
        rhs = sipre_rhs(X, Y, XY)
    elif name == "candy":
        (x,) = ws
        lhs = tr(x ** alpha)
        rhs = alpha * alpha * tr(x)
    else:
        raise ValueError(f"unknown identity {name!r}")
    return lhs, rhs


def colon_rhs(X, Y, Z, W, XZ, YW, XW, YZ):
    """Right-hand side of the abelian four-element exchange relation.

    It rewrites ``tr'(xz) tr'(yw)`` through ``tr'(xw) tr'(yz)`` plus terms with
    fewer two-letter factors.  Arguments are the shifted characters of
    ``x, y, z, w, xz, yw, xw, yz``; works on anything with ring operations.
    """
    return (XW * YZ
            + (X * Z + Y * W - Y * Z - X * W)
            - (X * YZ + Y * XW + Z * XW + W * YZ - Y * XZ - X * YW - Z * YW - W * XZ)
            - mpq(1, 2) * (Y * Z * XW + X * W * YZ - X * Z * YW - Y * W * XZ))


def sipre_rhs(X, Y, XY):
    return (-X * X - Y * Y + 2 * (X * Y + X * XY + Y * XY) + X * Y * XY)


def kofre_rhs(X, Y, Z, XY, XZ, YZ):
    """``tr'(xy) tr'(xz)`` expressed with at most one two-letter factor.

    Obtained from the exchange relation with ``(x, y, z, w) -> (x, z, y, x)``
    and ``tr'(x^2) = tr'(x)^2 + 4 tr'(x)``.
    """
    XX = X * X + 4 * X
    return colon_rhs(X, Z, Y, X, XY, XZ, XX, YZ)


_ARITY = {"eq8": 2, "eq9": 3, "eq20": 4, "colon": 4, "kofre": 3, "sipre": 2, "candy": 1}
SHIFTED_IDENTITIES = tuple(_ARITY)


def verify_shifted_identity(name: str, words: Iterable[WordLike], *, alpha: int = 2) -> bool:
    """Check one of the shifted-trace identities on concrete abelian words.

    Both sides are compared exactly as elements of the character ring, i.e.
    modulo the relation ideal (the abelian-only relations are not identities
    of bare polynomials).  ``candy`` checks that ``tr'(x^alpha) - alpha^2 tr'(x)``
    has weight at least two.
    """
    if name not in _ARITY:
        raise ValueError(f"unknown identity {name!r}; choose from {', '.join(_ARITY)}")
    ws = [as_word(w) for w in words]
    if len(ws) != _ARITY[name]:
        raise ValueError(f"{name} takes {_ARITY[name]} words, got {len(ws)}")
    if len({w.n for w in ws}) > 1:
        raise ValueError("words of different rank")
    lhs, rhs = _shifted_sides(name, ws, alpha)
    if name == "candy":
        return weight(lhs - rhs) >= 2
    return equal_mod_I(lhs, rhs)
