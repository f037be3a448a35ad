"""Exact computations in rings of Fricke characters of free abelian groups."""

from . import ideal as _ideal
from . import words as _words
from .arith import (Coord, CoordinateMismatch, Poly, Var, poly_from_json, poly_to_json,
                    shift_coordinates)
from .automorphism import Automorphism, act_on_generator, act_on_poly, in_E_k, iota
from .graded import basis, dim_gr, graded_component
from .ideal import (NormalForm, equal_mod_I, ideal_generators, is_in_ideal, normal_form,
                    ring_mul_normalized, weight)
from .oracles import Matrix2, eval_word_trace, laurent_image, series_image
from .words import AbelianWord, char_abelian, char_abelian_shifted, parse_word

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop every memo table (trace polynomials, rewrite rules, normal forms)."""
    _ideal.clear_caches()
    _words._trace.cache_clear()
    _words._split_square_free.cache_clear()
