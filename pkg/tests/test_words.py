# -*- coding: utf-8 -*-
"""
Created on Friday, 16th October 2026 9:14:02 am
===============================================================================
@filename:  test_words.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   Unit tests for the words.py module.
===============================================================================
"""
# pylint: disable=missing-function-docstring,redefined-outer-name
# pylint: disable=protected-access

import math
from itertools import permutations, product

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cuntz_rep import words
from cuntz_rep.words import LassoWord, Word


class TestPeriods:
    """
    Tests the period and rotation helpers.
    """

    @staticmethod
    @pytest.mark.parametrize(
        "seq,expected",
        (
            ((1, 2, 1, 2, 1), 2),
            ((1, 1, 1), 1),
            ((1, 2, 3), 3),
            ((1, 2, 1, 1, 2, 1), 3),
        ),
    )
    def test_minimal_period(seq: tuple, expected: int):
        assert words.minimal_period(seq) == expected

    @staticmethod
    def test_minimal_period_empty():
        with pytest.raises(ValueError):
            words.minimal_period(())

    @staticmethod
    @pytest.mark.parametrize(
        "seq,expected",
        (((2, 1, 1), 1), ((3, 1, 2), 1), ((1, 2, 3), 0), ((2, 2), 0)),
    )
    def test_least_rotation(seq: tuple, expected: int):
        assert words.least_rotation(seq) == expected

    @staticmethod
    @settings(max_examples=100, deadline=None)
    @given(st.lists(st.integers(1, 3), min_size=1, max_size=10))
    def test_least_rotation_is_least(seq: list):
        k = words.least_rotation(seq)
        best = seq[k:] + seq[:k]
        assert all(best <= seq[i:] + seq[:i] for i in range(len(seq)))

    @staticmethod
    @settings(max_examples=50, deadline=None)
    @given(st.lists(st.integers(1, 3), min_size=1, max_size=8))
    def test_canonical_rotation_idempotent(seq: list):
        once = words.canonical_rotation(Word(3, tuple(seq)))
        assert words.canonical_rotation(once) == once

    @staticmethod
    def test_canonical_rotation():
        word = words.canonical_rotation(Word(3, (2, 3, 1)))
        assert word.letters == (1, 2, 3)

    @staticmethod
    def test_canonical_rotation_empty():
        with pytest.raises(ValueError):
            words.canonical_rotation(Word(2))


class TestWord:
    """
    Tests the Word class.
    """

    @staticmethod
    def test_str():
        assert str(Word(2)) == "(0)"
        assert str(Word(2, (1, 2))) == "(1,2)"

    @staticmethod
    def test_unit():
        assert Word(3).is_unit
        assert Word(3).length() == 0
        assert not Word(3, (1,)).is_unit

    @staticmethod
    def test_sequence_protocol():
        word = Word(3, [3, 1])
        assert len(word) == 2
        assert list(word) == [3, 1]
        assert word[0] == 3

    @staticmethod
    @pytest.mark.parametrize(
        "alphabet,letters,error",
        (
            (2, (3,), ValueError),
            (2, (0,), ValueError),
            (1, (), ValueError),
            (2, ("a",), TypeError),
            (True, (), TypeError),
            (2.0, (), TypeError),
        ),
    )
    def test_bad_words(alphabet, letters: tuple, error: type):
        with pytest.raises(error):
            Word(alphabet, letters)


class TestLassoWord:
    """
    Tests the LassoWord class.
    """

    @staticmethod
    def test_canonical_prefix():
        lasso = LassoWord(2, (1, 2), (2,))
        assert lasso.prefix == (1,)
        assert lasso.cycle == (2,)

    @staticmethod
    def test_canonical_cycle():
        lasso = LassoWord(2, (2,), (1, 2, 1, 2))
        assert lasso == LassoWord(2, (), (2, 1))
        assert lasso.period == 2

    @staticmethod
    def test_letters():
        lasso = LassoWord(3, (3,), (1, 2))
        assert [lasso.letter(n) for n in range(1, 5)] == [3, 1, 2, 1]
        assert lasso.expand(5) == (3, 1, 2, 1, 2)

    @staticmethod
    def test_letter_position():
        with pytest.raises(ValueError):
            LassoWord(2, (), (1,)).letter(0)

    @staticmethod
    def test_empty_cycle():
        with pytest.raises(ValueError):
            LassoWord(2, (1,), ())

    @staticmethod
    def test_str():
        assert str(LassoWord(2, (1,), (2,))) == "1 | 2"
        assert str(LassoWord(2, (), (2,))) == "| 2"


class TestOperations:
    """
    Tests the word operations.
    """

    @staticmethod
    def test_concat():
        assert words.concat(Word(2), Word(3, (1,))) == Word(3, (1,))
        assert words.concat(Word(3, (1,)), Word(2)) == Word(3, (1,))
        joined = words.concat(Word(2, (1,)), Word(2, (2, 1)))
        assert joined.letters == (1, 2, 1)

    @staticmethod
    def test_concat_mismatch():
        with pytest.raises(ValueError):
            words.concat(Word(2, (1,)), Word(3, (1,)))

    @staticmethod
    def test_power():
        assert words.power(Word(2, (1, 2)), 2).letters == (1, 2, 1, 2)
        assert words.power(Word(2, (1, 2)), 0).is_unit
        with pytest.raises(ValueError):
            words.power(Word(2, (1,)), -1)

    @staticmethod
    @pytest.mark.parametrize(
        "i,expected", ((1, (1, 2, 3)), (2, (2, 3, 1)), (3, (3, 1, 2)))
    )
    def test_rotate(i: int, expected: tuple):
        assert words.rotate(Word(3, (1, 2, 3)), i).letters == expected

    @staticmethod
    @pytest.mark.parametrize("i", (0, 4))
    def test_rotate_range(i: int):
        with pytest.raises(ValueError):
            words.rotate(Word(3, (1, 2, 3)), i)

    @staticmethod
    def test_shift_chain():
        lasso = LassoWord(2, (), (1, 2))
        assert words.shift_chain(lasso, 1) == LassoWord(2, (), (2, 1))
        assert words.shift_chain(lasso, 2) == lasso
        padded = words.shift_chain(lasso, -2)
        assert padded.prefix == (1, 1)
        assert padded.cycle == (1, 2)

    @staticmethod
    def test_pack_roundtrip():
        assert words.pack_index(2, 3, 2, 1) == 4
        assert words.unpack_index(2, 3, 4) == (2, 1)

    @staticmethod
    @pytest.mark.parametrize("a,b", ((3, 1), (1, 4), (0, 1)))
    def test_pack_range(a: int, b: int):
        with pytest.raises(ValueError):
            words.pack_index(2, 3, a, b)

    @staticmethod
    def test_unpack_range():
        with pytest.raises(ValueError):
            words.unpack_index(2, 3, 7)

    @staticmethod
    def test_dot():
        packed = words.dot(Word(2, (1, 2)), Word(2, (2, 1)))
        assert packed == Word(4, (2, 3))

    @staticmethod
    def test_dot_errors():
        with pytest.raises(ValueError):
            words.dot(Word(2, (1,)), Word(2, (1, 2)))
        with pytest.raises(ValueError):
            words.dot(Word(2), Word(2))

    @staticmethod
    def test_star():
        assert words.star(Word(2, (1, 2)), Word(2, (1,))) == Word(4, (1, 3))
        with pytest.raises(ValueError):
            words.star(Word(2), Word(2, (1,)))

    @staticmethod
    def test_as_lasso():
        lasso = LassoWord(2, (), (1,))
        assert words.as_lasso(lasso) is lasso
        assert words.as_lasso(Word(2, (1, 2))) == LassoWord(2, (), (1, 2))
        with pytest.raises(ValueError):
            words.as_lasso(Word(2))

    @staticmethod
    def test_star_chain():
        packed = words.star_chain(LassoWord(2, (2,), (1,)), Word(2, (1, 2)))
        assert packed.prefix == (3,)
        assert packed.cycle == (2, 1)


class TestIndices:
    """
    Tests the multi-index relabelings.
    """

    @staticmethod
    @pytest.mark.parametrize(
        "alphabets,sigma,letters,expected",
        (
            ((2, 3), (1, 2), (2, 1), 4),
            ((3, 2), (2, 1), (1, 2), 4),
            ((3, 2), (1, 2), (1, 2), 2),
            ((2, 2), (2, 1), (1, 2), 3),
            ((2, 2, 2), (1, 2, 3), (2, 1, 1), 5),
        ),
    )
    def test_multi_index(
        alphabets: tuple, sigma: tuple, letters: tuple, expected: int
    ):
        assert words.multi_index(alphabets, sigma, letters) == expected

    @staticmethod
    @pytest.mark.parametrize("sigma", tuple(permutations((1, 2, 3))))
    def test_multi_index_bijective(sigma: tuple):
        alphabets = (2, 3, 2)
        grid = product(*(range(1, n + 1) for n in alphabets))
        indices = [words.multi_index(alphabets, sigma, t) for t in grid]
        assert sorted(indices) == list(range(1, 13))

    @staticmethod
    @pytest.mark.parametrize(
        "alphabets,sigma,letters",
        (
            ((2,), (1,), (1,)),
            ((2, 2), (1, 1), (1, 1)),
            ((2, 2), (1, 2), (3, 1)),
        ),
    )
    def test_multi_index_errors(alphabets, sigma, letters):
        with pytest.raises(ValueError):
            words.multi_index(alphabets, sigma, letters)

    @staticmethod
    def test_relabel_perm_swap():
        assert words.relabel_perm((2, 2), (1, 2), (2, 1)) == (1, 3, 2, 4)

    @staticmethod
    def test_relabel_perm_identity():
        assert words.relabel_perm((2, 3), (1, 2), (1, 2)) == tuple(
            range(1, 7)
        )

    @staticmethod
    def test_relabel_perm_matches_multi_index():
        alphabets, sigma, eta = (2, 3, 2), (3, 1, 2), (2, 3, 1)
        perm = words.relabel_perm(alphabets, sigma, eta)
        for a in range(1, 3):
            for b in range(1, 4):
                for c in range(1, 3):
                    src = words.multi_index(alphabets, eta, (a, b, c))
                    dst = words.multi_index(alphabets, sigma, (a, b, c))
                    assert perm[src - 1] == dst

    @staticmethod
    def test_relabel_perm_composition():
        alphabets = (2, 3, 2)
        perms = tuple(permutations((1, 2, 3)))
        for sigma, eta, tau in product(perms, repeat=3):
            composed = words.compose_perm(
                words.relabel_perm(alphabets, sigma, eta),
                words.relabel_perm(alphabets, eta, tau),
            )
            assert composed == words.relabel_perm(alphabets, sigma, tau)

    @staticmethod
    def test_compose_perm():
        assert words.compose_perm((2, 1, 3), (1, 3, 2)) == (2, 3, 1)
        with pytest.raises(ValueError):
            words.compose_perm((1, 2), (1,))

    @staticmethod
    def test_primitive_root():
        root, p = words.primitive_root(Word(2, (1, 2, 1, 2)))
        assert root.letters == (1, 2)
        assert p == 2
        root, p = words.primitive_root(Word(2, (1, 2, 1)))
        assert root.letters == (1, 2, 1)
        assert p == 1

    @staticmethod
    def test_all_words():
        assert words.all_words(2, 2) == [(1, 1), (1, 2), (2, 1), (2, 2)]
        assert words.all_words(3, 0) == [()]


letter_lists = st.lists(st.integers(1, 3), min_size=1, max_size=6)


class TestInvariants:
    """
    Tests the laws the word operations satisfy.
    """

    @staticmethod
    @settings(max_examples=50, deadline=None)
    @given(letter_lists, st.integers(1, 6))
    def test_canonical_rotation_of_rotations(seq: list, shift: int):
        word = Word(3, tuple(seq))
        i = (shift - 1) % len(seq) + 1
        assert words.canonical_rotation(
            words.rotate(word, i)
        ) == words.canonical_rotation(word)

    @staticmethod
    @settings(max_examples=50, deadline=None)
    @given(letter_lists, st.lists(st.integers(1, 2), min_size=1, max_size=6))
    def test_star_projections(first: list, second: list):
        left, right = Word(3, tuple(first)), Word(2, tuple(second))
        packed = words.star(left, right)
        common = len(packed)
        assert common == len(first) * len(second) // math.gcd(
            len(first), len(second)
        )
        pairs = [words.unpack_index(3, 2, x) for x in packed]
        assert [k for k, _ in pairs] == first * (common // len(first))
        assert [m for _, m in pairs] == second * (common // len(second))

    @staticmethod
    @settings(max_examples=80, deadline=None)
    @given(letter_lists, st.lists(st.integers(1, 2), min_size=1, max_size=6))
    def test_star_keeps_primitive(first: list, second: list):
        left, right = Word(3, tuple(first)), Word(2, tuple(second))
        assume(words.primitive_root(left)[1] == 1)
        assume(words.primitive_root(right)[1] == 1)
        for i in range(1, len(right) + 1):
            packed = words.star(left, words.rotate(right, i))
            assert words.primitive_root(packed)[1] == 1

    @staticmethod
    @settings(max_examples=80, deadline=None)
    @given(
        st.lists(st.integers(1, 2), max_size=3),
        st.lists(st.integers(1, 2), min_size=1, max_size=3),
        st.integers(0, 6),
        st.integers(0, 6),
    )
    def test_shift_chain_additive(prefix, cycle, i: int, j: int):
        lasso = LassoWord(2, tuple(prefix), tuple(cycle))
        twice = words.shift_chain(words.shift_chain(lasso, i), j)
        assert twice == words.shift_chain(lasso, i + j)

    @staticmethod
    @settings(max_examples=80, deadline=None)
    @given(
        st.lists(st.integers(1, 2), max_size=3),
        st.lists(st.integers(1, 2), min_size=1, max_size=3),
        st.integers(-5, 6),
        st.integers(-5, 6),
    )
    def test_shift_chain_mixed_signs(prefix, cycle, i: int, j: int):
        lasso = LassoWord(2, tuple(prefix), tuple(cycle))
        twice = words.shift_chain(words.shift_chain(lasso, i), j)
        once = words.shift_chain(lasso, i + j)
        start = max(0, -i, -j, -i - j) + 1
        for n in range(start, 33):
            assert twice.letter(n) == once.letter(n)
