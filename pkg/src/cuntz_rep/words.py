# -*- coding: utf-8 -*-
"""
Created on Tuesday, 6th October 2026 10:02:17 am
===============================================================================
@filename:  words.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   multiindex algebra over finite alphabets. finite words, eventually
            periodic infinite words (lassos), the letter packing bijection
            and the index relabelings built on top of it.
===============================================================================
"""
import logging
import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence, Union

import numpy as np

logger = logging.getLogger(__name__)

Letters = tuple[int, ...]
Perm = tuple[int, ...]


def _check_alphabet(alphabet: int) -> None:
    if isinstance(alphabet, bool) or not isinstance(
        alphabet, (int, np.integer)
    ):
        raise TypeError(f"alphabet must be an integer, not {type(alphabet)}")
    if alphabet < 2:
        raise ValueError(f"alphabet must be at least 2, got {alphabet}")


def _coerce_letters(letters: Iterable[int], alphabet: int) -> Letters:
    out = []
    for letter in letters:
        if isinstance(letter, bool) or not isinstance(
            letter, (int, np.integer)
        ):
            raise TypeError(f"letters must be integers, not {type(letter)}")
        if not 1 <= letter <= alphabet:
            raise ValueError(
                f"letter {letter} is outside the alphabet 1..{alphabet}"
            )
        out.append(int(letter))
    return tuple(out)


def _prefix_function(seq: Sequence[int]) -> list[int]:
    """
    Knuth-Morris-Pratt failure function: pi[i] is the length of the longest
    proper prefix of seq[:i + 1] that is also its suffix.
    """
    pi = [0] * len(seq)
    for i in range(1, len(seq)):
        k = pi[i - 1]
        while k > 0 and seq[i] != seq[k]:
            k = pi[k - 1]
        if seq[i] == seq[k]:
            k += 1
        pi[i] = k
    return pi


def minimal_period(seq: Sequence[int]) -> int:
    """
    Smallest p such that seq[i] == seq[i + p] wherever both are defined.
    The period need not divide the length.

    Args:
        seq (Sequence[int]): a nonempty sequence

    Returns:
        int: the minimal period
    """
    if not seq:
        raise ValueError("the empty sequence has no period")
    return len(seq) - _prefix_function(seq)[-1]


def least_rotation(seq: Sequence[int]) -> int:
    """
    Booth's algorithm. Returns the offset k such that seq[k:] + seq[:k] is
    the lexicographically least rotation of seq.

    Args:
        seq (Sequence[int]): a nonempty sequence

    Returns:
        int: the 0-based start of the least rotation
    """
    n = len(seq)
    fail = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        i = fail[j - k - 1]
        while i != -1 and seq[j % n] != seq[(k + i + 1) % n]:
            if seq[j % n] < seq[(k + i + 1) % n]:
                k = j - i - 1
            i = fail[i]
        if i == -1 and seq[j % n] != seq[(k + i + 1) % n]:
            if seq[j % n] < seq[(k + i + 1) % n]:
                k = j
            fail[j - k] = -1
        else:
            fail[j - k] = i + 1
    return k


@dataclass(frozen=True)
class Word:
    """
    A finite word over the alphabet {1, ..., N}. The empty word is the unit
    "(0)" of concatenation.
    """

    alphabet: int
    letters: Letters = ()

    def __post_init__(self) -> None:
        _check_alphabet(self.alphabet)
        object.__setattr__(self, "alphabet", int(self.alphabet))
        object.__setattr__(
            self, "letters", _coerce_letters(self.letters, self.alphabet)
        )

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __getitem__(self, index: int) -> int:
        return self.letters[index]

    def __str__(self) -> str:
        if not self.letters:
            return "(0)"
        return "(" + ",".join(str(x) for x in self.letters) + ")"

    def length(self) -> int:
        """
        Returns:
            int: the number of letters
        """
        return len(self.letters)

    @property
    def is_unit(self) -> bool:
        """
        Returns:
            bool: whether this is the empty word
        """
        return not self.letters


@dataclass(frozen=True)
class LassoWord:
    """
    An eventually periodic infinite word prefix + cycle + cycle + ...

    The stored form is canonical: the cycle is primitive and the prefix is as
    short as possible, so two lassos are equal iff they spell the same
    infinite word.
    """

    alphabet: int
    prefix: Letters
    cycle: Letters

    def __post_init__(self) -> None:
        _check_alphabet(self.alphabet)
        prefix = _coerce_letters(self.prefix, self.alphabet)
        cycle = _coerce_letters(self.cycle, self.alphabet)
        if not cycle:
            raise ValueError("the cycle of a lasso word must be nonempty")

        root = _root_length(cycle)
        cycle = cycle[:root]
        while prefix and prefix[-1] == cycle[-1]:
            prefix = prefix[:-1]
            cycle = cycle[-1:] + cycle[:-1]

        object.__setattr__(self, "alphabet", int(self.alphabet))
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    def __str__(self) -> str:
        head = " ".join(str(x) for x in self.prefix)
        tail = " ".join(str(x) for x in self.cycle)
        return f"{head} | {tail}".strip()

    @property
    def period(self) -> int:
        """
        Returns:
            int: the length of the primitive cycle
        """
        return len(self.cycle)

    def letter(self, n: int) -> int:
        """
        The n-th letter of the infinite word, counted from 1.

        Args:
            n (int): position, at least 1

        Returns:
            int: the letter at that position
        """
        if n < 1:
            raise ValueError(f"positions start at 1, got {n}")
        if n <= len(self.prefix):
            return self.prefix[n - 1]
        return self.cycle[(n - len(self.prefix) - 1) % len(self.cycle)]

    def expand(self, n: int) -> Letters:
        """
        Returns:
            Letters: the first n letters of the infinite word
        """
        return tuple(self.letter(k) for k in range(1, n + 1))


Periodic = Union[Word, LassoWord]


def _root_length(letters: Sequence[int]) -> int:
    period = minimal_period(letters)
    if len(letters) % period == 0:
        return period
    return len(letters)


def _same_alphabet(*words: Periodic) -> int:
    alphabets = {w.alphabet for w in words}
    if len(alphabets) != 1:
        raise ValueError(f"alphabet mismatch: {sorted(alphabets)}")
    return alphabets.pop()


def concat(first: Word, second: Word) -> Word:
    """
    J_1 followed by J_2. The unit word combines with words over any
    alphabet.

    Args:
        first (Word): left word
        second (Word): right word

    Raises:
        ValueError: if both words are nonempty and their alphabets differ

    Returns:
        Word: the concatenation
    """
    if first.is_unit:
        return second
    if second.is_unit:
        return first
    alphabet = _same_alphabet(first, second)
    return Word(alphabet, first.letters + second.letters)


def power(word: Word, k: int) -> Word:
    """
    k-fold concatenation. k = 0 gives the unit word.
    """
    if k < 0:
        raise ValueError(f"power must be non-negative, got {k}")
    return Word(word.alphabet, word.letters * k)


def rotate(word: Word, i: int) -> Word:
    """
    The rotation (l_i, ..., l_b, l_1, ..., l_{i-1}).

    Args:
        word (Word): a nonempty word L
        i (int): start position, 1 <= i <= |L|

    Raises:
        ValueError: if i is out of range

    Returns:
        Word: the rotated word
    """
    if not 1 <= i <= len(word):
        raise ValueError(f"rotation {i} out of range 1..{len(word)}")
    return Word(word.alphabet, word.letters[i - 1 :] + word.letters[: i - 1])


def shift_chain(lasso: LassoWord, i: int) -> LassoWord:
    """
    Shifted infinite word: drops i leading letters when i >= 0 and pads with
    |i| copies of the letter 1 when i < 0.
    """
    if i < 0:
        return LassoWord(lasso.alphabet, (1,) * -i + lasso.prefix, lasso.cycle)
    if i <= len(lasso.prefix):
        return LassoWord(lasso.alphabet, lasso.prefix[i:], lasso.cycle)
    offset = (i - len(lasso.prefix)) % lasso.period
    return LassoWord(
        lasso.alphabet, (), lasso.cycle[offset:] + lasso.cycle[:offset]
    )


def pack_index(n: int, m: int, a: int, b: int) -> int:
    """
    The bijection {1..N} x {1..M} -> {1..NM}, (a, b) -> M(a - 1) + b.
    """
    if not (1 <= a <= n and 1 <= b <= m):
        raise ValueError(f"({a}, {b}) is outside {{1..{n}}} x {{1..{m}}}")
    return m * (a - 1) + b


def unpack_index(n: int, m: int, x: int) -> tuple[int, int]:
    """
    Inverse of pack_index.
    """
    if not 1 <= x <= n * m:
        raise ValueError(f"{x} is outside 1..{n * m}")
    a, b = divmod(x - 1, m)
    return a + 1, b + 1


def dot(left: Word, right: Word) -> Word:
    """
    Letterwise packing K . L of two words of equal length.

    Args:
        left (Word): K over N
        right (Word): L over M

    Raises:
        ValueError: if the lengths differ or the words are empty

    Returns:
        Word: K . L over NM
    """
    if len(left) != len(right):
        raise ValueError(
            f"length mismatch: |K| = {len(left)}, |L| = {len(right)}"
        )
    if not left.letters:
        raise ValueError("dot is undefined on empty words")
    n, m = left.alphabet, right.alphabet
    return Word(
        n * m,
        tuple(pack_index(n, m, k, x) for k, x in zip(left, right)),
    )


def star(left: Word, right: Word) -> Word:
    """
    K * L = K^{C/a} . L^{C/b} for C = lcm(a, b).
    """
    if not left.letters or not right.letters:
        raise ValueError("star is undefined on empty words")
    common = math.lcm(len(left), len(right))
    return dot(
        power(left, common // len(left)), power(right, common // len(right))
    )


def as_lasso(word: Periodic) -> LassoWord:
    """
    Reads a finite word L as the infinite word L L L ...
    """
    if isinstance(word, LassoWord):
        return word
    if not word.letters:
        raise ValueError("the empty word does not define an infinite word")
    return LassoWord(word.alphabet, (), word.letters)


def star_chain(left: Periodic, right: Periodic) -> LassoWord:
    """
    Letterwise packing of two infinite words. Finite arguments are unfolded
    periodically.

    Args:
        left (Periodic): K over N
        right (Periodic): L over M

    Returns:
        LassoWord: the canonical lasso of K . L over NM
    """
    first, second = as_lasso(left), as_lasso(right)
    n, m = first.alphabet, second.alphabet
    head = max(len(first.prefix), len(second.prefix))
    period = math.lcm(first.period, second.period)
    letters = [
        pack_index(n, m, first.letter(k), second.letter(k))
        for k in range(1, head + period + 1)
    ]
    return LassoWord(n * m, tuple(letters[:head]), tuple(letters[head:]))


def _check_perm(perm: Sequence[int], size: int) -> None:
    if sorted(perm) != list(range(1, size + 1)):
        raise ValueError(f"{tuple(perm)} is not a permutation of 1..{size}")


def multi_index(
    alphabets: Sequence[int], sigma: Sequence[int], letters: Sequence[int]
) -> int:
    """
    The index [i_1, ..., i_n]_sigma: the nested pack of
    (i_{sigma(1)}, ..., i_{sigma(n)}) with radices
    (N_{sigma(1)}, ..., N_{sigma(n)}).

    Args:
        alphabets (Sequence[int]): N_1, ..., N_n with n >= 2
        sigma (Sequence[int]): a permutation of 1..n given by its images
        letters (Sequence[int]): i_1, ..., i_n with 1 <= i_k <= N_k

    Raises:
        ValueError: on dimension mismatch or out of range letters

    Returns:
        int: an index in 1..N_1 ... N_n
    """
    size = len(alphabets)
    if size < 2 or len(sigma) != size or len(letters) != size:
        raise ValueError(
            "multi_index needs n >= 2 alphabets, a permutation and n letters"
        )
    _check_perm(sigma, size)
    for letter, alphabet in zip(letters, alphabets):
        if not 1 <= letter <= alphabet:
            raise ValueError(f"letter {letter} outside 1..{alphabet}")
    order = [s - 1 for s in sigma]
    dims = tuple(int(alphabets[k]) for k in order)
    index = tuple(int(letters[k]) - 1 for k in order)
    return int(np.ravel_multi_index(index, dims)) + 1


def relabel_perm(
    alphabets: Sequence[int], sigma: Sequence[int], eta: Sequence[int]
) -> Perm:
    """
    The letter permutation [i]_eta -> [i]_sigma of {1..M}, M = N_1 ... N_n.

    Returns:
        Perm: the images of 1..M
    """
    size = len(alphabets)
    _check_perm(sigma, size)
    _check_perm(eta, size)
    grid = np.indices(tuple(alphabets)).reshape(size, -1)
    src = np.ravel_multi_index(
        tuple(grid[s - 1] for s in eta), tuple(alphabets[s - 1] for s in eta)
    )
    dst = np.ravel_multi_index(
        tuple(grid[s - 1] for s in sigma),
        tuple(alphabets[s - 1] for s in sigma),
    )
    images = np.empty(grid.shape[1], dtype=int)
    images[src] = dst + 1
    return tuple(int(x) for x in images)


def compose_perm(outer: Perm, inner: Perm) -> Perm:
    """
    outer o inner, both given by their images.
    """
    if len(outer) != len(inner):
        raise ValueError("permutations act on different sets")
    return tuple(outer[x - 1] for x in inner)


def primitive_root(word: Word) -> tuple[Word, int]:
    """
    Writes J = P^p with P primitive.

    Args:
        word (Word): a nonempty word

    Returns:
        tuple[Word, int]: the primitive root P and the exponent p
    """
    if not word.letters:
        raise ValueError("the empty word has no primitive root")
    root = _root_length(word.letters)
    return Word(word.alphabet, word.letters[:root]), len(word) // root


def canonical_rotation(word: Word) -> Word:
    """
    The lexicographically least rotation of a nonempty word.
    """
    if not word.letters:
        raise ValueError("the empty word has no rotations")
    k = least_rotation(word.letters)
    return Word(word.alphabet, word.letters[k:] + word.letters[:k])


def all_words(alphabet: int, length: int) -> list[Letters]:
    """
    Every word of the given length in lexicographic order.
    """
    return list(product(range(1, alphabet + 1), repeat=length))
