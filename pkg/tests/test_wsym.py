import pytest

from qsymshuffle.basis import c_entry
from qsymshuffle.combinatorics import SetPartition, compositions_of, signed_word
from qsymshuffle.golden import S211_PRINTED
from qsymshuffle.linalg import LinearCombination
from qsymshuffle.verify import stirling2
from qsymshuffle.wsym import (
    EMPTY,
    c_by_counting,
    s_pairs_by_splitting,
    s_pairs_by_unshuffle,
    set_partitions,
    verify_theorem_coproduct,
    wsym_coproduct,
    x_element,
    x_element_by_filter,
)

P = SetPartition.parse


def test_set_partition_counts():
    assert len(list(set_partitions(3))) == 5
    assert len(list(set_partitions(5, 3))) == 25
    assert list(set_partitions(1)) == [P("1")]
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert len(list(set_partitions(n, k))) == stirling2(n, k)


def test_x_elements():
    assert x_element((2, 1, 1)) == LinearCombination({P("12|3|4"): 1, P("2|13|4"): 1, P("2|3|14"): 1})
    assert x_element((4,)) == LinearCombination({P("1234"): 1})
    assert x_element((1, 1, 1)) == LinearCombination({P("1|2|3"): 1})
    for n in range(1, 6):
        for J in compositions_of(n):
            assert x_element(J) == x_element_by_filter(J)


def test_coproduct_small():
    m = lambda s: LinearCombination.monomial(P(s))
    assert wsym_coproduct(m("1")) == LinearCombination({(EMPTY, P("1")): 1, (P("1"), EMPTY): 1})
    assert len(wsym_coproduct(m("12|3"))) == 4
    assert wsym_coproduct(m("1|2"))[(P("1"), P("1"))] == 2


@pytest.mark.parametrize("n", range(1, 6))
def test_theorem(n):
    for J in compositions_of(n):
        assert verify_theorem_coproduct(J).passed


def test_s211_pairs():
    printed = set()
    for left, right in S211_PRINTED:
        printed.add((signed_word(left), signed_word(right)))
        printed.add((signed_word(right), signed_word(left)))
    assert len(printed) == 18
    assert s_pairs_by_splitting((2, 1, 1)) == s_pairs_by_unshuffle((2, 1, 1))
    assert len(s_pairs_by_splitting((2, 1, 1))) == 18


def test_c_by_counting():
    assert c_by_counting((2, 2), (3, 1)) == 2
    assert c_by_counting((1, 1, 1), (1, 1, 1)) == 1
    assert c_by_counting((2, 1, 3), (4, 1, 1)) == c_entry((2, 1, 3), (4, 1, 1))
