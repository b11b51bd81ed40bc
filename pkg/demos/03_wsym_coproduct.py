"""Set partitions, their signed words, and the coproduct of X_J in WSym.

X_J is the sum of M_pi over set partitions whose block maxima give the
descent composition J. Its coproduct splits into tensor products of X's.
"""

from qsymshuffle.combinatorics import SetPartition, format_signed_word, signed_word_of_partition, stat_C, stat_K
from qsymshuffle.wsym import s_pairs_by_splitting, verify_theorem_coproduct, x_element

pi = SetPartition.parse("34|5|126")
print(pi, "K =", stat_K(pi), "C =", stat_C(pi), "signed word", format_signed_word(signed_word_of_partition(pi)))

print("\nX_211 =", " + ".join(f"M{p}" for p in sorted(x_element((2, 1, 1)))))

pairs = sorted(s_pairs_by_splitting((2, 1, 1)), key=lambda ab: (str(ab[0]), str(ab[1])))
print(f"\n{len(pairs)} ordered pairs in the coproduct of X_211:")
for a, b in pairs:
    print(f"  {format_signed_word(signed_word_of_partition(a)):>8} | {format_signed_word(signed_word_of_partition(b))}")

print("\ntheorem holds for J = 2,1,1:", verify_theorem_coproduct((2, 1, 1)).passed)
