"""Exact sparse polynomial, Laurent and truncated power series arithmetic.

Polynomials live in the generator variables ``t_i`` (single generators) and
``t_ij`` (products of two generators, ``i < j``), either in the plain trace
coordinates ``t`` or in the shifted coordinates ``t' = t - 2``.  All
coefficients are exact rationals (``gmpy2.mpq``; ``int`` and
:class:`fractions.Fraction` are accepted on input); nothing here ever rounds.
"""

from __future__ import annotations

import enum
import json
import re
from fractions import Fraction
from typing import Dict, Iterable, Mapping, Tuple, Union

from gmpy2 import mpq, mpz

Rational = type(mpq())
Number = Union[int, Fraction, Rational]
_EXACT = (int, Fraction, Rational, type(mpz()))


class Coord(str, enum.Enum):
    T = "t"
    TPRIME = "t'"

    def other(self) -> "Coord":
        return Coord.TPRIME if self is Coord.T else Coord.T


class CoordinateMismatch(ValueError):
    pass


class Var(tuple):
    """A generator variable.

    ``Var(i)`` is the single variable ``t_i`` and ``Var(i, j)`` the pair
    variable ``t_ij``.  Internally a single is stored as ``(0, i)`` and a pair
    as ``(i, j)`` so that plain tuple comparison yields the canonical order
    ``t_1 < ... < t_n < t_12 < t_13 < ... < t_(n-1)n``.
    """

    __slots__ = ()

    def __new__(cls, i: int, j: int | None = None):
        if not isinstance(i, int) or i < 1:
            raise ValueError(f"generator index must be a positive integer, got {i!r}")
        if j is None:
            return tuple.__new__(cls, (0, i))
        if not isinstance(j, int) or j <= i:
            raise ValueError(f"pair variable needs i < j, got ({i}, {j})")
        return tuple.__new__(cls, (i, j))

    @property
    def is_pair(self) -> bool:
        return self[0] != 0

    @property
    def indices(self) -> Tuple[int, ...]:
        return tuple(self) if self[0] else (self[1],)

    @property
    def max_index(self) -> int:
        return self[1]

    def name(self, coord: Coord = Coord.T) -> str:
        idx = self.indices
        if max(idx) < 10:
            body = "".join(str(i) for i in idx)
        else:
            body = ",".join(str(i) for i in idx)
        return f"{coord.value}_{body}"

    def __repr__(self) -> str:
        return f"Var({', '.join(map(str, self.indices))})"

    def __getnewargs__(self):
        return self.indices


# A monomial is a tuple of (Var, exponent) pairs, sorted by Var, exponents > 0.
Monomial = Tuple[Tuple[Var, int], ...]
ONE: Monomial = ()


def monomial(exponents: Mapping[Var, int] | Iterable[Tuple[Var, int]]) -> Monomial:
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    acc: Dict[Var, int] = {}
    for v, e in items:
        if e < 0:
            raise ValueError("negative exponent in a polynomial monomial")
        if e:
            acc[v] = acc.get(v, 0) + e
    return tuple(sorted(acc.items()))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        va, ea = a[i]
        vb, eb = b[j]
        if va == vb:
            out.append((va, ea + eb))
            i += 1
            j += 1
        elif va < vb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_sort_key(m: Monomial):
    return (mono_degree(m), m)


def to_rational(c: Number) -> Rational:
    if isinstance(c, Rational):
        return c
    if isinstance(c, _EXACT):
        return mpq(c)
    raise TypeError(f"exact coefficient expected, got {type(c).__name__}")


class Poly:
    """Sparse polynomial with rational coefficients in ``t`` or ``t'`` coordinates.

    Instances are treated as immutable: every operation returns a new object and
    the ``terms`` mapping must not be modified after construction.
    """

    __slots__ = ("coord", "terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Number] | None = None,
                 coord: Coord = Coord.T):
        self.coord = Coord(coord)
        clean: Dict[Monomial, Rational] = {}
        if terms:
            for m, c in terms.items():
                c = to_rational(c)
                if c:
                    clean[m] = c
        self.terms = clean
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Rational], coord: Coord) -> "Poly":
        p = cls.__new__(cls)
        p.coord = coord
        p.terms = terms
        p._hash = None
        return p

    @classmethod
    def const(cls, c: Number, coord: Coord = Coord.T) -> "Poly":
        return cls({ONE: c}, coord)

    @classmethod
    def zero(cls, coord: Coord = Coord.T) -> "Poly":
        return cls._raw({}, Coord(coord))

    @classmethod
    def var(cls, v: Var, coord: Coord = Coord.T) -> "Poly":
        return cls._raw({((v, 1),): mpq(1)}, Coord(coord))

    @classmethod
    def single(cls, i: int, coord: Coord = Coord.T) -> "Poly":
        return cls.var(Var(i), coord)

    @classmethod
    def pair(cls, i: int, j: int, coord: Coord = Coord.T) -> "Poly":
        return cls.var(Var(i, j), coord)

    # -- arithmetic -------------------------------------------------------
    def _check(self, other: "Poly") -> None:
        if self.coord is not other.coord:
            raise CoordinateMismatch(
                f"cannot combine {self.coord.value}- and {other.coord.value}-coordinate polynomials")

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            self._check(other)
            return other
        return Poly.const(to_rational(other), self.coord)

    def __add__(self, other) -> "Poly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for m, c in other.terms.items():
            s = terms.get(m, 0) + c
            if s:
                terms[m] = s
            else:
                terms.pop(m, None)
        return Poly._raw(terms, self.coord)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly._raw({m: -c for m, c in self.terms.items()}, self.coord)

    def __sub__(self, other) -> "Poly":
        try:
            other = self._lift(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def scale(self, c: Number) -> "Poly":
        c = to_rational(c)
        if not c:
            return Poly.zero(self.coord)
        return Poly._raw({m: c * v for m, v in self.terms.items()}, self.coord)

    def __mul__(self, other) -> "Poly":
        if isinstance(other, _EXACT):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        terms: Dict[Monomial, Rational] = {}
        get = terms.get
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = mono_mul(ma, mb)
                terms[m] = get(m, 0) + ca * cb
        return Poly._raw({m: c for m, c in terms.items() if c}, self.coord)

    def __rmul__(self, other) -> "Poly":
        if isinstance(other, _EXACT):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other) -> "Poly":
        if isinstance(other, _EXACT):
            return self.scale(1 / to_rational(other))
        return NotImplemented

    def __pow__(self, e: int) -> "Poly":
        if not isinstance(e, int) or e < 0:
            raise ValueError("only non-negative integer powers")
        result = Poly.const(1, self.coord)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, Poly):
            return self.coord is other.coord and self.terms == other.terms
        if isinstance(other, _EXACT):
            return self.terms == ({ONE: mpq(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.coord, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- inspection -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((mono_degree(m) for m in self.terms), default=-1)

    def min_degree(self) -> int | None:
        return min((mono_degree(m) for m in self.terms), default=None)

    def variables(self) -> set:
        return {v for m in self.terms for v, _ in m}

    def max_index(self) -> int:
        return max((v.max_index for v in self.variables()), default=0)

    def homogeneous_part(self, k: int) -> "Poly":
        return Poly._raw({m: c for m, c in self.terms.items() if mono_degree(m) == k},
                         self.coord)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: mono_sort_key(mc[0]))

    def constant_term(self) -> Rational:
        return self.terms.get(ONE, mpq(0))

    # -- substitution and evaluation -------------------------------------
    def substitute(self, images: Mapping[Var, "Poly"], coord: Coord | None = None) -> "Poly":
        """Ring homomorphism sending each variable to ``images[v]``.

        Variables missing from ``images`` are an error.  ``coord`` is the
        coordinate tag of the result (taken from the images when omitted).
        """
        if coord is None:
            coord = next(iter(images.values())).coord if images else self.coord
        missing = self.variables() - set(images)
        if missing:
            names = ", ".join(v.name(self.coord) for v in sorted(missing))
            raise ValueError(f"no image given for {names}")
        powers: Dict[Tuple[Var, int], Poly] = {}

        def power(v: Var, e: int) -> Poly:
            key = (v, e)
            if key not in powers:
                powers[key] = images[v] if e == 1 else power(v, e - 1) * images[v]
            return powers[key]

        acc: Dict[Monomial, Rational] = {}
        for m, c in self.terms.items():
            term = Poly.const(c, coord)
            for v, e in m:
                term = term * power(v, e)
            for mm, cc in term.terms.items():
                acc[mm] = acc.get(mm, 0) + cc
        return Poly(acc, coord)

    def evaluate(self, values: Mapping[Var, Number]):
        total = mpq(0)
        for m, c in self.terms.items():
            term = c
            for v, e in m:
                term *= values[v] ** e
            total += term
        return total

    # -- printing ---------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [v.name(self.coord) + (f"^{e}" if e > 1 else "") for v, e in m]
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            elif c == -1:
                body = "-" + "*".join(factors)
            else:
                body = f"{c}*" + "*".join(factors)
            parts.append(body)
        out = parts[0]
        for p in parts[1:]:
            out += " - " + p[1:] if p.startswith("-") else " + " + p
        return out

    def __repr__(self) -> str:
        return f"Poly({self.coord.value}: {self})"


def poly_add(p: Poly, q: Poly) -> Poly:
    p._check(q)
    return p + q


def poly_mul(p: Poly, q: Poly) -> Poly:
    p._check(q)
    return p * q


def shift_coordinates(p: Poly, target: Coord) -> Poly:
    """Rewrite ``p`` in the ``target`` coordinates via ``t = t' + 2``."""
    target = Coord(target)
    if p.coord is target:
        return p
    offset = 2 if target is Coord.TPRIME else -2
    images = {v: Poly._raw({((v, 1),): mpq(1), ONE: mpq(offset)}, target)
              for v in p.variables()}
    if not images:
        return Poly._raw(dict(p.terms), target)
    return p.substitute(images, target)


# -- JSON wire format ----------------------------------------------------

_VAR_RE = re.compile(r"^t_(\d+)(?:[,_](\d+))?$")


def format_rational(c: Number) -> str:
    c = to_rational(c)
    return f"{c.numerator}/{c.denominator}"


def parse_rational(s: str | int) -> Rational:
    if isinstance(s, int):
        return mpq(s)
    if not isinstance(s, str) or not re.fullmatch(r"\s*-?\d+(\s*/\s*\d+)?\s*", s):
        raise ValueError(f"bad rational literal {s!r}")
    return mpq(s.replace(" ", ""))


def var_key(v: Var) -> str:
    idx = v.indices
    if len(idx) == 2 and max(idx) >= 10:
        return f"t_{idx[0]},{idx[1]}"
    return "t_" + "".join(str(i) for i in idx)


def parse_var_key(key: str) -> Var:
    m = _VAR_RE.match(key)
    if not m:
        raise ValueError(f"bad variable name {key!r}")
    a, b = m.groups()
    if b is not None:
        return Var(int(a), int(b))
    if len(a) == 1:
        return Var(int(a))
    if len(a) == 2:
        i, j = int(a[0]), int(a[1])
        if i >= j:
            raise ValueError(f"pair variable {key!r} needs i < j")
        return Var(i, j)
    raise ValueError(f"ambiguous variable name {key!r}; write t_i,j for indices >= 10")


def poly_to_json(p: Poly) -> dict:
    return {
        "schema": 1,
        "coord": p.coord.value,
        "terms": [{"coef": format_rational(c), "mono": {var_key(v): e for v, e in m}}
                  for m, c in p.sorted_terms()],
    }


def poly_from_json(data: dict | str) -> Poly:
    if isinstance(data, str):
        data = json.loads(data)
    if data.get("schema", 1) != 1:
        raise ValueError(f"unsupported polynomial schema {data['schema']!r}")
    try:
        coord = Coord(data["coord"])
    except (KeyError, ValueError):
        raise ValueError("polynomial JSON needs \"coord\": \"t\" or \"t'\"") from None
    acc: Dict[Monomial, Rational] = {}
    for term in data.get("terms", []):
        m = monomial({parse_var_key(k): int(e) for k, e in term.get("mono", {}).items()})
        acc[m] = acc.get(m, 0) + parse_rational(term["coef"])
    return Poly(acc, coord)


# -- Laurent polynomials in lambda_1..lambda_n ---------------------------

Exponents = Tuple[int, ...]


class LaurentPoly:
    """Laurent polynomial over Q in ``n`` variables, keyed by exponent vectors."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponents, Number] | None = None):
        self.n = n
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != n:
                raise ValueError("exponent vector length does not match n")
            c = to_rational(c)
            if c:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def monomial(cls, n: int, exps: Exponents, c: Number = 1) -> "LaurentPoly":
        return cls(n, {tuple(exps): c})

    @classmethod
    def const(cls, n: int, c: Number) -> "LaurentPoly":
        return cls(n, {(0,) * n: c})

    def _check(self, other: "LaurentPoly") -> None:
        if self.n != other.n:
            raise ValueError("Laurent polynomials over different numbers of variables")

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return LaurentPoly(self.n, terms)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.n, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, _EXACT):
            return LaurentPoly(self.n, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        terms: Dict[Exponents, Rational] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return LaurentPoly(self.n, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, lams) -> Rational:
        lams = [to_rational(x) for x in lams]
        total = mpq(0)
        for e, c in self.terms.items():
            term = c
            for x, k in zip(lams, e):
                term *= x ** k
            total += term
        return total

    def __repr__(self) -> str:
        return f"LaurentPoly(n={self.n}, {len(self.terms)} terms)"


def laurent_add(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a + b


def laurent_mul(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    return a * b


# -- truncated power series in s_1..s_n ----------------------------------

class TruncatedSeries:
    """Power series in ``n`` variables truncated above total degree ``order``."""

    __slots__ = ("n", "order", "terms")

    def __init__(self, n: int, order: int, terms: Mapping[Exponents, Number] | None = None):
        if order < 0:
            raise ValueError("series order must be non-negative")
        self.n = n
        self.order = order
        clean = {}
        for e, c in (terms or {}).items():
            if len(e) != n or min(e, default=0) < 0:
                raise ValueError("bad series exponent vector")
            c = to_rational(c)
            if c and sum(e) <= order:
                clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def const(cls, n: int, order: int, c: Number) -> "TruncatedSeries":
        return cls(n, order, {(0,) * n: c})

    @classmethod
    def variable(cls, n: int, order: int, i: int) -> "TruncatedSeries":
        e = [0] * n
        e[i - 1] = 1
        return cls(n, order, {tuple(e): 1})

    @classmethod
    def geometric(cls, n: int, order: int, i: int) -> "TruncatedSeries":
        """``1 / (1 - s_i)`` expanded to the given order."""
        terms = {}
        for k in range(order + 1):
            e = [0] * n
            e[i - 1] = k
            terms[tuple(e)] = 1
        return cls(n, order, terms)

    def _check(self, other: "TruncatedSeries") -> None:
        if self.n != other.n or self.order != other.order:
            raise ValueError("series with different variable count or order")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, 0) + c
        return TruncatedSeries(self.n, self.order, terms)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(self.n, self.order, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, _EXACT):
            return TruncatedSeries(self.n, self.order,
                                   {e: c * other for e, c in self.terms.items()})
        self._check(other)
        N = self.order
        terms: Dict[Exponents, Rational] = {}
        for e1, c1 in self.terms.items():
            d1 = sum(e1)
            for e2, c2 in other.terms.items():
                if d1 + sum(e2) > N:
                    continue
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return TruncatedSeries(self.n, N, terms)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return (self.n, self.order, self.terms) == (other.n, other.order, other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def min_degree(self) -> int | None:
        return min((sum(e) for e in self.terms), default=None)

    def homogeneous_part(self, d: int) -> Dict[Exponents, Rational]:
        return {e: c for e, c in self.terms.items() if sum(e) == d}

    def __repr__(self) -> str:
        return f"TruncatedSeries(n={self.n}, order={self.order}, {len(self.terms)} terms)"


def series_add(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a + b


def series_mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    return a * b
