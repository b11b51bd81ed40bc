"""Transition matrices between the M, Y, U and Z bases, block by block.

Every block (n, k) of compositions with n total and k parts is printed as a
matrix; the entries sum to the Stirling number S(n, k).
"""

from qsymshuffle.basis import build_y_basis, c_matrix, d_matrix, y_matrix
from qsymshuffle.cli import render_lincomb
from qsymshuffle.combinatorics import format_composition
from qsymshuffle.golden import render_matrix_text
from qsymshuffle.verify import stirling2

n, k = 5, 3
order = c_matrix(n, k).index
print("block order:", " ".join(format_composition(I) for I in order))

for name, builder in (("Y", y_matrix), ("C", c_matrix), ("D", d_matrix)):
    m = builder(n, k)
    print(f"\n{name}({n},{k}), entry sum {m.total()}:")
    print(render_matrix_text(m), end="")

print(f"\nS({n},{k}) =", stirling2(n, k))

# D is the inverse transpose of C, so it undoes the change of basis.
print("D^T C = I:", (d_matrix(n, k).transpose() @ c_matrix(n, k)).is_identity())

# The Y basis is integral and unitriangular, but not nonnegative: the first
# negative coefficient shows up in degree 6.
y6 = build_y_basis(6)
print("\nY[1,2,2,1] =", render_lincomb(y6[(1, 2, 2, 1)], "W"))
