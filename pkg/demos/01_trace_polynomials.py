"""
Trace polynomials of abelian words
==================================

Every element of Z^n has a character: a polynomial in the traces of the
generators and of their pairwise products.
"""

from fricke import char_abelian, char_abelian_shifted, laurent_image, parse_word

# A single generator raised to a power gives a Chebyshev polynomial.
print("tr x^3      =", char_abelian([3]))

# Three distinct generators need the pair traces as well.
w = parse_word("x1*x2*x3")
print("tr x1 x2 x3 =", char_abelian(w))

# Shifted characters vanish at the trivial representation.
print("tr' x^2     =", char_abelian_shifted([2]))

# Sanity check against diagonal matrices diag(l, 1/l): the character of
# x1^2 x2^-1 should be l1^2 l2^-1 + l1^-2 l2.
print("as Laurent  =", laurent_image(char_abelian([2, -1])).terms)
