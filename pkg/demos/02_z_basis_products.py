"""The Z basis multiplies by the shuffle of binary words.

The product is computed twice: from the binary-word rule directly, and by
converting to U, shuffling compositions there, and converting back.
"""

from qsymshuffle.basis import convert_U_to_Z, convert_Z_to_U, m_product, z_product, z_product_via_u
from qsymshuffle.cli import render_lincomb
from qsymshuffle.combinatorics import compositions_of, format_composition, word_of_composition

print("M_21 * M_12 =", render_lincomb(m_product((2, 1), (1, 2)), "M"))
print()
for I, J in [((1,), (2, 1)), ((1,), (1, 2)), ((2,), (1, 1))]:
    print(f"Z[{format_composition(I)}] * Z[{format_composition(J)}] =", render_lincomb(z_product(I, J), "Z"),
          f"   (words {word_of_composition(I)} and {word_of_composition(J)})")

print("\nU[1,1,2] =", render_lincomb(convert_U_to_Z((1, 1, 2)), "Z"))
print("Z[1,2]   =", render_lincomb(convert_Z_to_U((1, 2)), "U"))

agree = all(z_product(I, J) == z_product_via_u(I, J)
            for a in range(1, 5) for b in range(1, 5)
            for I in compositions_of(a) for J in compositions_of(b))
print("\nword rule == route through U for all degrees a, b <= 4:", agree)
