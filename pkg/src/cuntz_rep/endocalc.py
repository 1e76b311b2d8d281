# -*- coding: utf-8 -*-
"""
Created on Thursday, 8th October 2026 11:20:03 am
===============================================================================
@filename:  endocalc.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   generalized permutative endomorphisms psi_g of O_N for
            permutation matrices g, their phi-tensor product and the
            branching laws of representations composed with them.
===============================================================================
"""
import json
import logging
from dataclasses import dataclass
from functools import reduce
from pathlib import Path
from typing import Any, Iterable, Sequence, Union

import numpy as np

from cuntz_rep.oracle import (
    OracleResult,
    canonical_bfs,
    compose_bfs,
    decompose_bfs,
)
from cuntz_rep.repcalc import (
    Chain,
    Decomposition,
    RepClass,
    as_decomposition,
)
from cuntz_rep.words import Letters, Perm, Word, all_words, dot

logger = logging.getLogger(__name__)

Monomial = tuple[Word, Word]
MonomialSum = tuple[Monomial, ...]


def _rank(word: Sequence[int], alphabet: int) -> int:
    index = tuple(x - 1 for x in word)
    return int(np.ravel_multi_index(index, (alphabet,) * len(word)))


def _reduce_depth(alphabet: int, table: list[Letters]) -> list[Letters]:
    # g = g' x I exactly when g(K a) = g'(K) a for every K and a
    letters = range(1, alphabet + 1)
    while len(table[0]) > 1:
        reduced: list[Letters] = []
        for head in all_words(alphabet, len(table[0]) - 1):
            images = [table[_rank(head + (a,), alphabet)] for a in letters]
            if any(image[-1] != a for a, image in zip(letters, images)):
                return table
            if len({image[:-1] for image in images}) != 1:
                return table
            reduced.append(images[0][:-1])
        table = reduced
    return table


@dataclass(frozen=True)
class PermEndo:
    """
    The endomorphism psi_g(s_i) = u_g s_i of O_N where g permutes the words
    of length l. The table lists g(K) for every K in lexicographic order and
    the depth is the smallest l at which g can be written.
    """

    alphabet: int
    depth: int
    table: tuple[Letters, ...]

    def __post_init__(self) -> None:
        if isinstance(self.depth, bool) or not isinstance(self.depth, int):
            raise TypeError(f"depth must be an integer, not {self.depth}")
        if self.depth < 1:
            raise ValueError(f"depth must be at least 1, got {self.depth}")
        size = self.alphabet**self.depth
        table = [
            Word(self.alphabet, image).letters for image in self.table
        ]
        if len(table) != size:
            raise ValueError(
                f"a depth {self.depth} endomorphism of O_{self.alphabet} "
                f"needs {size} images, got {len(table)}"
            )
        if any(len(image) != self.depth for image in table):
            raise ValueError(f"every image must have length {self.depth}")
        if len(set(table)) != size:
            raise ValueError("the word map is not a bijection")
        table = _reduce_depth(self.alphabet, table)
        object.__setattr__(self, "depth", len(table[0]))
        object.__setattr__(self, "table", tuple(table))

    def __call__(self, word: Sequence[int]) -> Letters:
        """
        Applies g to the first `depth` letters and leaves the rest alone, so
        longer words see the padded map g (x) I.
        """
        if len(word) < self.depth:
            raise ValueError(
                f"need at least {self.depth} letters, got {len(word)}"
            )
        head = tuple(word[: self.depth])
        return self.table[_rank(head, self.alphabet)] + tuple(
            word[self.depth :]
        )

    @property
    def pairs(self) -> list[tuple[Letters, Letters]]:
        """
        Returns:
            list[tuple[Letters, Letters]]: (K, g(K)) in lexicographic order
        """
        return list(zip(all_words(self.alphabet, self.depth), self.table))

    @property
    def is_identity(self) -> bool:
        """
        Returns:
            bool: whether psi_g is the identity
        """
        return all(k == j for k, j in self.pairs)

    def to_dict(self) -> dict[str, Any]:
        """
        Returns:
            dict[str, Any]: the JSON form {"alphabet", "depth", "map"}
        """
        return {
            "alphabet": self.alphabet,
            "depth": self.depth,
            "map": [[list(k), list(j)] for k, j in self.pairs],
        }

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "PermEndo":
        """
        Reads the JSON form written by to_dict.
        """
        return mk_endo(
            int(data["alphabet"]),
            int(data["depth"]),
            [(tuple(k), tuple(j)) for k, j in data["map"]],
        )

    @classmethod
    def load(cls, path: Union[str, Path]) -> "PermEndo":
        """
        Loads an endomorphism from a JSON file.

        Args:
            path (Union[str, Path]): the JSON file

        Returns:
            PermEndo: the endomorphism it describes
        """
        path = Path(path)
        logger.info("Loading endomorphism from %s", path)
        try:
            data = json.loads(path.read_text(encoding="utf-8"))
        except (OSError, json.JSONDecodeError) as e:
            logger.error(e)
            raise e
        return cls.from_dict(data)


def mk_endo(
    alphabet: int,
    depth: int,
    pairs: Iterable[tuple[Sequence[int], Sequence[int]]],
) -> PermEndo:
    """
    Builds psi_g from the pairs (K, J = g(K)).

    Args:
        alphabet (int): N
        depth (int): l, the length of the words g permutes
        pairs (Iterable[tuple[Sequence[int], Sequence[int]]]): one pair for
            every K in {1..N}^l

    Raises:
        ValueError: on wrong word lengths, repeated or missing K, or if g is
            not a bijection

    Returns:
        PermEndo: the endomorphism at its canonical depth
    """
    table: dict[Letters, Letters] = {}
    for source, image in pairs:
        key = Word(alphabet, tuple(source)).letters
        if len(key) != depth or len(image) != depth:
            raise ValueError(f"map entries must have length {depth}")
        if key in table:
            raise ValueError(f"{key} is mapped twice")
        table[key] = Word(alphabet, tuple(image)).letters
    missing = set(all_words(alphabet, depth)) - set(table)
    if missing:
        raise ValueError(f"no image given for {sorted(missing)[0]}")
    return PermEndo(
        alphabet,
        depth,
        tuple(table[k] for k in all_words(alphabet, depth)),
    )


def perm_endo(alphabet: int, perm: Sequence[int]) -> PermEndo:
    """
    The depth one endomorphism s_i -> s_{perm(i)}.
    """
    return PermEndo(alphabet, 1, tuple((x,) for x in perm))


def identity_endo(alphabet: int) -> PermEndo:
    """
    Returns:
        PermEndo: the identity of O_N
    """
    return perm_endo(alphabet, range(1, alphabet + 1))


def _collapse(terms: set[tuple[Letters, Letters]], alphabet: int) -> set:
    letters = set(range(1, alphabet + 1))
    changed = True
    while changed:
        changed = False
        families: dict[tuple[Letters, Letters], set[int]] = {}
        for left, right in terms:
            if left and right and left[-1] == right[-1]:
                key = (left[:-1], right[:-1])
                families.setdefault(key, set()).add(left[-1])
        for (left, right), found in sorted(families.items()):
            if found == letters:
                terms -= {(left + (a,), right + (a,)) for a in letters}
                terms.add((left, right))
                changed = True
                break
    return terms


def endo_monomials(endo: PermEndo, letter: int) -> MonomialSum:
    """
    psi_g(s_i) written as a sum of monomials s_J s_K^*. Starting from
    s_{g(i w)} s_w^* over all w of length l - 1, full families
    sum_a s_{J a} s_{K a}^* are collapsed to s_J s_K^*.

    Args:
        endo (PermEndo): psi_g
        letter (int): i

    Returns:
        MonomialSum: the sorted (J, K) pairs
    """
    n = endo.alphabet
    if not 1 <= letter <= n:
        raise ValueError(f"s_{letter} is not a generator of O_{n}")
    terms = {
        (endo((letter,) + w), w) for w in all_words(n, endo.depth - 1)
    }
    terms = _collapse(terms, n)
    return tuple(
        (Word(n, left), Word(n, right)) for left, right in sorted(terms)
    )


def render_monomials(endo: PermEndo) -> list[str]:
    """
    One line `s_i -> s_{J,K} + ...` per generator, with multi-digit letters
    separated by dots.
    """

    def fmt(word: Word) -> str:
        sep = "." if endo.alphabet > 9 else ""
        return sep.join(str(x) for x in word) or "0"

    lines = []
    for i in range(1, endo.alphabet + 1):
        terms = [
            f"s_{{{fmt(j)},{fmt(k)}}}" for j, k in endo_monomials(endo, i)
        ]
        lines.append(f"s_{i} -> " + " + ".join(terms))
    return lines


def endo_tensor(first: PermEndo, second: PermEndo) -> PermEndo:
    """
    The phi-tensor product of two endomorphisms. Both maps are padded with
    the identity to depth m = max(l, k), then K . Q -> g(K) . h(Q).

    Args:
        first (PermEndo): psi_g over N
        second (PermEndo): psi_h over M

    Returns:
        PermEndo: psi over NM at its canonical depth
    """
    depth = max(first.depth, second.depth)
    n, m = first.alphabet, second.alphabet
    pairs = []
    for k in all_words(n, depth):
        for q in all_words(m, depth):
            source = dot(Word(n, k), Word(m, q))
            image = dot(Word(n, first(k)), Word(m, second(q)))
            pairs.append((source.letters, image.letters))
    return mk_endo(n * m, depth, pairs)


def endo_power(endo: PermEndo, n: int) -> PermEndo:
    """
    The left-associated n-fold phi-tensor power of an endomorphism.
    """
    if n < 1:
        raise ValueError(f"tensor power needs n >= 1, got {n}")
    return reduce(endo_tensor, [endo] * (n - 1), endo)


def u_action(first: Sequence[int], second: Sequence[int]) -> Perm:
    """
    The packed permutation g * h of two letter permutations,
    M(i - 1) + j -> M(g(i) - 1) + h(j).

    Args:
        first (Sequence[int]): images of g on 1..N
        second (Sequence[int]): images of h on 1..M

    Returns:
        Perm: images of g * h on 1..NM
    """
    m = len(second)
    return tuple(m * (gi - 1) + hj for gi in first for hj in second)


def branch(
    rep: RepClass, endo: PermEndo, depth_budget: int = 8
) -> OracleResult:
    """
    Decomposes pi o psi_g for a cycle class pi by simulation. The oracle
    radius grows from l + 1 until the model accounts for every basis label
    or the budget runs out.

    Args:
        rep (RepClass): a cycle class over N
        endo (PermEndo): psi_g over N
        depth_budget (int, optional): largest radius to try. Defaults to 8.

    Raises:
        ValueError: for chain classes or an alphabet mismatch

    Returns:
        OracleResult: the decomposition and whether it is complete
    """
    if isinstance(rep, Chain):
        raise ValueError("branching laws are only computed for cycles")
    if rep.alphabet != endo.alphabet:
        raise ValueError(
            f"{rep} cannot be composed with an endomorphism of "
            f"O_{endo.alphabet}"
        )
    start = min(endo.depth + 1, depth_budget)
    result = OracleResult(Decomposition(rep.alphabet), False)
    for radius in range(max(start, 1), depth_budget + 1):
        model = compose_bfs(canonical_bfs(rep, depth=radius), endo)
        result = decompose_bfs(model)
        logger.debug(
            "radius %s: %s classes, complete=%s",
            radius,
            len(result.decomposition),
            result.complete,
        )
        if result.complete:
            return result
    logger.warning(
        "branch of %s stayed incomplete up to radius %s", rep, depth_budget
    )
    return result


def branch_decomposition(
    value: Union[RepClass, Decomposition],
    endo: PermEndo,
    depth_budget: int = 8,
) -> OracleResult:
    """
    branch applied to every class of a direct sum.
    """
    decomposition = as_decomposition(value)
    total = Decomposition(decomposition.alphabet)
    complete = True
    for rep, mult in decomposition.components:
        result = branch(rep, endo, depth_budget)
        total = total + result.decomposition.scaled(mult)
        complete = complete and result.complete
    return OracleResult(total, complete)


PSI12 = mk_endo(
    2,
    2,
    [
        ((1, 1), (1, 2)),
        ((1, 2), (1, 1)),
        ((2, 1), (2, 1)),
        ((2, 2), (2, 2)),
    ],
)
PSI13 = mk_endo(
    2,
    2,
    [
        ((1, 1), (2, 1)),
        ((1, 2), (1, 2)),
        ((2, 1), (1, 1)),
        ((2, 2), (2, 2)),
    ],
)

ENDOS: dict[str, PermEndo] = {
    "psi12": PSI12,
    "psi13": PSI13,
    "rho": endo_tensor(PSI12, PSI13),
    "rhobar": endo_tensor(PSI13, PSI12),
    "id2": identity_endo(2),
}
