import random
from itertools import permutations

import pytest
from gmpy2 import mpq
from hypothesis import given
from hypothesis import strategies as st

from fricke.arith import Coord, LaurentPoly, Poly, Var
from fricke.ideal import equal_mod_I
from fricke.oracles import (eval_poly, eval_word_trace, laurent_image,
                            sample_commuting_family)
from fricke.words import (SHIFTED_IDENTITIES, AbelianWord, FreeWord, WordParseError,
                          char_abelian, char_abelian_shifted, parse_word,
                          verify_shifted_identity)

from conftest import exponent_vectors

T, TP = Coord.T, Coord.TPRIME


def t(i, j=None, coord=T):
    return Poly.var(Var(i, j), coord)


def test_char_examples():
    assert char_abelian([0, 0]) == Poly.const(2, T)
    assert char_abelian([3, 0]) == t(1) ** 3 - 3 * t(1)
    assert char_abelian([1, 1]) == t(1, 2)
    assert char_abelian([1, -1]) == t(1) * t(2) - t(1, 2)
    assert char_abelian([1, 1, 1]) == mpq(1, 2) * (t(1) * t(2, 3) + t(2) * t(1, 3)
                                                   + t(3) * t(1, 2) - t(1) * t(2) * t(3))
    a = t(1, coord=TP)
    assert char_abelian_shifted([2, 0]) == a * a + 4 * a


@given(exponent_vectors())
def test_char_matches_laurent_oracle(e):
    # at diagonal representations tr w = lam^w + lam^-w
    n = len(e)
    expected = LaurentPoly.monomial(n, e) + LaurentPoly.monomial(n, tuple(-a for a in e))
    assert laurent_image(char_abelian(e), n) == expected


@pytest.mark.parametrize("kind", ["diagonal", "unipotent_signed"])
@given(e=exponent_vectors(), seed=st.integers(0, 10**6))
def test_char_matches_matrix_traces(kind, e, seed):
    rep = sample_commuting_family(seed, len(e), kind)
    assert eval_poly(char_abelian(e), rep) == eval_word_trace(e, rep)


@given(exponent_vectors())
def test_reduction_order_irrelevant(e):
    assert char_abelian(e) == char_abelian(e, reverse=True)


@given(exponent_vectors())
def test_inverse_has_same_character(e):
    assert char_abelian(e) == char_abelian([-a for a in e])


@given(exponent_vectors(n_max=4, bound=3), st.randoms(use_true_random=False))
def test_permutation_symmetry(e, r):
    n = len(e)
    perm = list(range(1, n + 1))
    r.shuffle(perm)
    permuted = [0] * n
    for i, a in enumerate(e):
        permuted[perm[i] - 1] = a
    images = {Var(i): t(perm[i - 1]) for i in range(1, n + 1)}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            p, q = sorted((perm[i - 1], perm[j - 1]))
            images[Var(i, j)] = t(p, q)
    p = char_abelian(e)
    lhs = p.substitute(images, T) if p.variables() else p
    assert lhs == char_abelian(permuted)


def test_shifted_is_tr_minus_two():
    e = (2, -1, 3)
    p = char_abelian_shifted(e)
    assert p.coord is TP and p.constant_term() == char_abelian_shifted(e).constant_term()
    ones = {v: 0 for v in p.variables()}
    assert p.evaluate(ones) == 0  # trivial representation


def test_free_word_abelianizes():
    w = FreeWord(((1, 1), (2, -1), (1, 1), (3, 1), (2, -1)))
    assert w.abelianize(3) == AbelianWord((2, -2, 1))
    assert (w * w.inverse()).abelianize(3) == AbelianWord((0, 0, 0))


def test_abelian_word_group_law():
    x, y = AbelianWord((1, 0)), AbelianWord((0, 1))
    assert x * y == AbelianWord((1, 1))
    assert (x * y) ** 3 == AbelianWord((3, 3))
    assert -x == x.inverse() == AbelianWord((-1, 0))
    assert str(AbelianWord((2, 0, -1))) == "x1^2*x3^-1"
    assert str(AbelianWord((0, 0))) == "1"


@pytest.mark.parametrize("text, n, expected", [
    ("x1^3*x2^-2", None, (3, -2)),
    ("x1 x2", None, (1, 1)),
    ("x2 * x1 x2^-1", 3, (1, 0, 0)),
    ("[3,-2,0]", None, (3, -2, 0)),
    ("  [ 1 , 2 ] ", 2, (1, 2)),
    ("", 2, (0, 0)),
])
def test_parse_word(text, n, expected):
    assert parse_word(text, n).exponents == expected


@pytest.mark.parametrize("text, pos", [
    ("x1^2 * x3^-1 ** x2", 14),
    ("*x1", 0),
    ("x1*", 2),
    ("x1 y2", 3),
    ("[1,a]", 3),
])
def test_parse_errors_report_position(text, pos):
    with pytest.raises(WordParseError) as info:
        parse_word(text)
    assert info.value.pos == pos


def test_parse_rank_errors():
    with pytest.raises(WordParseError):
        parse_word("x0")
    with pytest.raises(WordParseError):
        parse_word("x3", 2)
    with pytest.raises(ValueError):
        parse_word("[1,2]", 3)


def _random_words(rng, arity, n=3, bound=2):
    return [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(arity)]


@pytest.mark.parametrize("name", [s for s in SHIFTED_IDENTITIES if s != "candy"])
def test_shifted_identities_on_generators(name):
    arity = {"eq8": 2, "eq9": 3, "eq20": 4, "colon": 4, "kofre": 3, "sipre": 2}[name]
    gens = [AbelianWord.generator(4, i) for i in range(1, arity + 1)]
    assert verify_shifted_identity(name, gens)


@pytest.mark.parametrize("name", ["eq8", "eq9", "colon", "kofre", "sipre"])
def test_shifted_identities_on_random_words(name):
    arity = {"eq8": 2, "eq9": 3, "colon": 4, "kofre": 3, "sipre": 2}[name]
    rng = random.Random(name)
    for _ in range(3):
        assert verify_shifted_identity(name, _random_words(rng, arity, n=2))


def test_eq20_on_mixed_words():
    assert verify_shifted_identity("eq20", [(1, 0, 0), (0, 1, 0), (1, 0, 1), (0, 0, 1)])


@pytest.mark.parametrize("alpha", [-3, -1, 2, 5])
def test_candy(alpha):
    assert verify_shifted_identity("candy", [(1, 0)], alpha=alpha)
    assert verify_shifted_identity("candy", [(1, -1)], alpha=alpha)


def test_identity_arity_and_name_checked():
    with pytest.raises(ValueError):
        verify_shifted_identity("eq8", [(1, 0)])
    with pytest.raises(ValueError):
        verify_shifted_identity("nope", [(1, 0)])


def _kofre_printed(X, Y, Z, XY, XZ, YZ, *, with_w_line, W=None, YW=None):
    half = mpq(1, 2)
    out = (-3 * X * Y - 3 * X * Z - X * X - Y * Z + 2 * X * YZ
           + X * XY + X * XZ + Y * XZ + Z * XY
           + half * X * X * YZ - X * X * Y - X * X * Z
           - half * X * X * Y * Z - 2 * X * Y * Z + half * X * Z * XY
           + half * X * Y * XZ)
    if with_w_line:
        out = out - Y * XZ - X * YW - Z * YW - W * XZ
    return out


def test_printed_kofre_holds_without_stray_line():
    gens = [AbelianWord.generator(4, i) for i in range(1, 5)]
    x, y, z, w = gens
    tr = lambda *ws: char_abelian_shifted(sum(ws[1:], ws[0]))
    X, Y, Z, W = tr(x), tr(y), tr(z), tr(w)
    XY, XZ, YZ, YW = tr(x, y), tr(x, z), tr(y, z), tr(y, w)
    lhs = XY * XZ
    assert equal_mod_I(lhs, _kofre_printed(X, Y, Z, XY, XZ, YZ, with_w_line=False))
    assert not equal_mod_I(lhs, _kofre_printed(X, Y, Z, XY, XZ, YZ, with_w_line=True,
                                               W=W, YW=YW))
