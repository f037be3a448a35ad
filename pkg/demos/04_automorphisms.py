"""
Automorphisms acting on characters
==================================

GL(n, Z) acts on the character ring by substituting words.  Only the
inversion x_i -> x_i^-1 acts trivially on J / J^2.
"""

import random

from fricke import Automorphism, act_on_poly, in_E_k, iota, normal_form
from fricke.automorphism import elementary_automorphisms, random_automorphism
from fricke.ideal import ideal_generators

print("inversion:", [in_E_k(iota(3), k) for k in range(1, 6)])
print("elementary moves in E(1):",
      sum(in_E_k(s, 1) for s in elementary_automorphisms(3)))

# The action is well defined: relations go to relations.
s = random_automorphism(random.Random(1), 3)
print(s.matrix)
print(all(normal_form(act_on_poly(s, g.poly)).is_zero() for g in ideal_generators(3)))

swap = Automorphism(((0, 1), (1, 0)))
print(in_E_k(swap, 1))
