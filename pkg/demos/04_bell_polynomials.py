"""Noncommutative Bell polynomials and their image in the free algebra K<a,b>.

B_n expands over products Y^I; its coefficients are the row sums of C.
Substituting Y_n = ad_a^(n-1) b gives the same word as iterating
L(x) = a x - x a + b x on 1.
"""

from qsymshuffle.basis import c_matrix
from qsymshuffle.combinatorics import compositions_of, format_composition
from qsymshuffle.freealg import bell_polynomial, bell_substitute, L_power

for n in range(1, 5):
    b = bell_polynomial(n)
    print(f"B_{n} =", " + ".join(("" if b[I] == 1 else f"{b[I]}·") + f"Y^({format_composition(I)})"
                                 for I in compositions_of(n)))

n = 5
b = bell_polynomial(n)
rows = {I: s for k in range(1, n + 1) for I, s in zip(c_matrix(n, k).index, c_matrix(n, k).row_sums())}
print(f"\ncoefficients of B_{n} equal the C row sums:", all(b[I] == rows[I] for I in compositions_of(n)))

s3 = L_power(3)
print("\nL^3(1) =", " ".join(f"{c:+d}·{w}" for w, c in sorted(s3.items())))
print("matches the Bell substitution:", s3 == bell_substitute(3))
