from itertools import product

import pytest

from qsymshuffle.combinatorics import (
    ColoredPermutation,
    SetPartition,
    composition_of_word,
    composition_to_subset,
    compositions_of,
    descent_set,
    format_composition,
    format_signed_word,
    is_anti_lyndon,
    is_lyndon,
    is_valid_signed_word,
    lyndon_factorization,
    lyndon_words,
    parse_composition,
    partition_of_signed_word,
    signed_word,
    signed_word_of_partition,
    sp_enumerate,
    stat_C,
    stat_Cprime,
    stat_K,
    stat_Kprime,
    subset_to_composition,
    word_of_composition,
)


def test_compositions_block_order():
    assert compositions_of(4, 3) == [(2, 1, 1), (1, 2, 1), (1, 1, 2)]
    assert compositions_of(5, 3) == [(3, 1, 1), (2, 2, 1), (2, 1, 2), (1, 3, 1), (1, 2, 2), (1, 1, 3)]
    assert compositions_of(0) == [()]
    assert compositions_of(3) == [(3,), (2, 1), (1, 2), (1, 1, 1)]


@pytest.mark.parametrize("n", range(1, 9))
def test_compositions_count(n):
    assert len(compositions_of(n)) == 2 ** (n - 1)
    assert len(set(compositions_of(n))) == 2 ** (n - 1)


def test_parse_composition():
    assert parse_composition("2,1,3") == (2, 1, 3)
    assert parse_composition("(2,1)") == (2, 1)
    assert parse_composition("") == ()
    with pytest.raises(ValueError, match="position 2"):
        parse_composition("2,x")
    with pytest.raises(ValueError):
        parse_composition("2,0")
    assert format_composition((2, 1, 3)) == "2,1,3"


def test_words_of_compositions():
    assert word_of_composition((2, 1, 3)) == "abbaab"
    assert word_of_composition((5,)) == "aaaab"
    assert word_of_composition((1, 1)) == "bb"
    assert composition_of_word("abbaab") == (2, 1, 3)
    assert composition_of_word("b") == (1,)
    assert composition_of_word("aab") == (3,)
    with pytest.raises(ValueError):
        composition_of_word("ba")


@pytest.mark.parametrize("n", range(1, 8))
def test_word_roundtrip(n):
    for I in compositions_of(n):
        assert composition_of_word(word_of_composition(I)) == I


def test_anti_lyndon():
    assert is_anti_lyndon((3, 2, 1))
    assert is_anti_lyndon((2, 2, 1, 1))
    assert not is_anti_lyndon((1, 2))


def test_lyndon_words_small():
    assert lyndon_words(6) == ["aaaaab", "aaaabb", "aaabab", "aaabbb", "aababb",
                               "aabbab", "aabbbb", "ababbb", "abbbbb"]
    assert lyndon_words(1) == ["a", "b"]
    assert lyndon_words(2) == ["ab"]


def _brute_lyndon(n):
    out = []
    for bits in product("ab", repeat=n):
        w = "".join(bits)
        if all(w < w[i:] + w[:i] for i in range(1, n)):
            out.append(w)
    return out


@pytest.mark.parametrize("n", range(1, 11))
def test_lyndon_words_match_brute_force(n):
    assert lyndon_words(n) == _brute_lyndon(n)


def test_lyndon_factorization():
    assert lyndon_factorization("abbbab") == ["abbb", "ab"]
    assert lyndon_factorization("aab") == ["aab"]
    assert lyndon_factorization("bb") == ["b", "b"]


def test_lyndon_factorization_unique_against_brute_force():
    def factorizations(w):
        if not w:
            yield []
            return
        for i in range(1, len(w) + 1):
            if is_lyndon(w[:i]):
                for rest in factorizations(w[i:]):
                    yield [w[:i]] + rest

    for n in range(1, 9):
        for bits in product("ab", repeat=n):
            w = "".join(bits)
            nonincreasing = [f for f in factorizations(w) if all(x >= y for x, y in zip(f, f[1:]))]
            assert nonincreasing == [lyndon_factorization(w)]


def test_statistics_worked_example():
    pi = SetPartition.of([[3, 4], [5], [1, 2, 6]])
    assert stat_K(pi) == (2, 1, 3)
    assert stat_Kprime(pi) == (3, 2, 1)
    assert stat_C(pi) == (4, 1, 1)
    assert stat_Cprime(pi) == (2, 2, 2)
    one = SetPartition.of([range(1, 6)])
    assert stat_K(one) == (5,) and stat_C(one) == (5,)


def test_subset_composition_bijection():
    assert subset_to_composition({4, 5}, 6) == (4, 1, 1)
    assert subset_to_composition({2, 4}, 6) == (2, 2, 2)
    assert subset_to_composition(set(), 5) == (5,)
    for n in range(1, 8):
        for I in compositions_of(n):
            assert subset_to_composition(composition_to_subset(I), n) == I
            assert descent_set(I) == composition_to_subset(I)


def test_set_partition_parse_and_order():
    pi = SetPartition.parse("127|346|5")
    assert str(pi) == "(5|346|127)"
    assert pi == SetPartition.parse("(346|5|127)")
    assert pi.maxima() == frozenset({5, 6, 7})
    assert pi.n == 7


def test_signed_word_follows_maxima_rule():
    # Blocks ordered by increasing maxima, each with its maximum overlined last.
    w = signed_word_of_partition(SetPartition.parse("346|5|127"))
    assert w == signed_word([-5, 3, 4, -6, 1, 2, -7])
    assert format_signed_word(w) == "5̅3 4 6̅1 2 7̅".replace(" ", "")
    assert is_valid_signed_word(w)
    assert partition_of_signed_word(w) == SetPartition.parse("346|5|127")
    # The other ordering of the same letters breaks the increasing-maxima rule.
    assert not is_valid_signed_word(signed_word([3, 4, -6, -5, 1, 2, -7]))


def test_sp_enumerate():
    got = sp_enumerate({1, 3, 5, 6}, {3, 5, 6})
    assert [str(p) for p in got] == ["(13|5|6)", "(3|15|6)", "(3|5|16)"]
    assert sp_enumerate({1, 2, 3}, {1, 2, 3}) == [SetPartition.of([[1], [2], [3]])]


def test_colored_permutation():
    p = ColoredPermutation.parse("21;1,2")
    assert p.sigma == (2, 1) and p.colors == (1, 2)
    assert p.bidegree == (2, 3)
    assert str(p) == "21;1,2"
    assert p.reversed() == ColoredPermutation((1, 2), (2, 1))
    with pytest.raises(ValueError):
        ColoredPermutation((1, 1), (1, 1))
