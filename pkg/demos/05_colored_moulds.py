"""Colored permutations realized as rational moulds.

z_(sigma,s) = 1 / (u_sigma1^s1 (u_sigma1 + u_sigma2)^s2 ...). Products of
these fractions expand by a shuffle of colored words in which each letter
carries (color - 1) zeros after it.
"""

from qsymshuffle.cli import render_lincomb
from qsymshuffle.colored import colored_Z_product, colored_Z_product_via_F, is_multiplicative_on
from qsymshuffle.combinatorics import ColoredPermutation
from qsymshuffle.moulds import epsilon_word, guo_xie_product, mu, verify_mould_identity, z_fraction

p, q = ColoredPermutation.parse("1;2"), ColoredPermutation.parse("1;1")
print("z(1;2) * z(1;1) =", mu(z_fraction(p), z_fraction(q)))
print("  expands as", render_lincomb(guo_xie_product(p, q), "z"))
print("  exact check:", verify_mould_identity(p, q).passed)
print("  colored words:", epsilon_word(p), epsilon_word(q, shift=1))

# In the algebra of colored permutations the product of Z's agrees between
# the epsilon rule (zeros before each letter) and the route through F.
print("\nZ(1;1) * Z(1;2) =", render_lincomb(colored_Z_product(q, ColoredPermutation.parse("1;2")), "Z"))
print("  via F:         ", render_lincomb(colored_Z_product_via_F(q, ColoredPermutation.parse("1;2")), "Z"))

# The algebra product is realized by fractions once the permutation and its
# colors are read backwards; read forwards it is not multiplicative.
r = ColoredPermutation.parse("1;2")
print("\nmultiplicative, reversed reading:", is_multiplicative_on(q, r))
print("multiplicative, literal reading: ", is_multiplicative_on(q, r, fraction=z_fraction))
