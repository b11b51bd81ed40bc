"""Exact computations with shuffle-type bases of quasi-symmetric functions.

Bases of QSym multiplying by the binary shuffle, their transition matrices,
the set-partition coproduct in WSym, and the colored extension realized by
rational moulds.
"""

from .basis import (
    build_y_basis,
    c_entry,
    c_matrix,
    column_expansion,
    convert_U_to_Z,
    convert_Z_to_U,
    d_matrix,
    m_product,
    u_product,
    y_matrix,
    z_product,
    z_product_via_u,
)
from .colored import colored_F_product, colored_Z_convert, colored_Z_product, realization
from .combinatorics import (
    ColoredPermutation,
    SetPartition,
    composition_of_word,
    compositions_of,
    is_anti_lyndon,
    lyndon_factorization,
    lyndon_words,
    sp_enumerate,
    stat_C,
    stat_K,
    word_of_composition,
)
from .freealg import bell_polynomial, L_power, project_p, s_word
from .linalg import LinearCombination, TransitionMatrix, matrix_invert
from .moulds import f_fraction, guo_xie_product, mu, verify_mould_identity, z_fraction
from .shuffles import quasi_shuffle, shifted_colored_shuffle, shuffle, unshuffle
from .wsym import c_by_counting, set_partitions, verify_theorem_coproduct, wsym_coproduct, x_element

__version__ = "0.1.0"
