"""
Normal forms and weights
========================

The pair traces satisfy relations once n >= 3.  Rewriting every monomial onto
the interlaced basis gives a canonical representative, and its lowest degree
is the weight.
"""

from fricke import Coord, Poly, equal_mod_I, ideal_generators, normal_form, weight

TP = Coord.TPRIME
t13 = Poly.pair(1, 3, TP)
t24 = Poly.pair(2, 4, TP)

# Crossing pairs are rewritten to the consecutive pairing t'_12 t'_34.
nf = normal_form(t13 * t24)
print(nf)
print("weight:", weight(nf))

# Generators of the relation ideal normalize to zero.
nontrivial = [g for g in ideal_generators(4) if not g.trivial]
print(len(nontrivial), "nontrivial generators for n = 4;",
      "all zero:", all(normal_form(g.poly).is_zero() for g in nontrivial))

# Equality in the character ring is equality of normal forms.
print(equal_mod_I(t13 * t24, nf.poly))
