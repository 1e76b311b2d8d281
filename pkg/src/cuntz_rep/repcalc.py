# -*- coding: utf-8 -*-
"""
Created on Wednesday, 7th October 2026 2:41:55 pm
===============================================================================
@filename:  repcalc.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   cyclic permutative representation classes P_N(J), direct sums of
            them and the closed-form decomposition of the phi-tensor
            product.
===============================================================================
"""
import json
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from functools import reduce
from typing import Any, ClassVar, Iterable, Sequence, Union

from cuntz_rep.words import (
    LassoWord,
    Perm,
    Word,
    canonical_rotation,
    primitive_root,
    relabel_perm,
    rotate,
    shift_chain,
    star,
    star_chain,
)

logger = logging.getLogger(__name__)

OMEGA = math.inf
Multiplicity = Union[int, float]


@dataclass(frozen=True)
class Cycle:
    """
    The class P_N(J) of a finite word J, stored by its least rotation.
    """

    alphabet: int
    word: Word

    kind: ClassVar[str] = "cycle"

    def __post_init__(self) -> None:
        word = self.word
        if not isinstance(word, Word):
            word = Word(self.alphabet, tuple(word))
        if word.alphabet != self.alphabet:
            raise ValueError(
                f"word over {word.alphabet} letters in a class over "
                f"{self.alphabet}"
            )
        if not word.letters:
            raise ValueError("a cycle needs a nonempty word")
        object.__setattr__(self, "word", canonical_rotation(word))

    def __str__(self) -> str:
        body = " ".join(str(x) for x in self.word)
        return f"P({self.alphabet}; {body})"

    @property
    def sort_key(self) -> tuple:
        """
        Returns:
            tuple: cycles first, then by length, then lexicographically
        """
        return (0, len(self.word), self.word.letters)

    def to_dict(self) -> dict[str, Any]:
        """
        Returns:
            dict[str, Any]: the JSON form without multiplicity
        """
        return {"kind": self.kind, "word": list(self.word)}


@dataclass(frozen=True)
class Chain:
    """
    The class P_N(J) of an infinite word J. Only the tail of J matters, so
    the stored lasso has an empty prefix and a least-rotated cycle.
    """

    alphabet: int
    lasso: LassoWord

    kind: ClassVar[str] = "chain"

    def __post_init__(self) -> None:
        lasso = self.lasso
        if lasso.alphabet != self.alphabet:
            raise ValueError(
                f"lasso over {lasso.alphabet} letters in a class over "
                f"{self.alphabet}"
            )
        tail = canonical_rotation(Word(lasso.alphabet, lasso.cycle))
        object.__setattr__(
            self, "lasso", LassoWord(self.alphabet, (), tail.letters)
        )

    def __str__(self) -> str:
        body = " ".join(str(x) for x in self.lasso.cycle)
        return f"P({self.alphabet}; | {body})"

    @property
    def sort_key(self) -> tuple:
        """
        Returns:
            tuple: chains after cycles, then by period, then lexicographically
        """
        return (1, self.lasso.period, self.lasso.cycle)

    def to_dict(self) -> dict[str, Any]:
        """
        Returns:
            dict[str, Any]: the JSON form without multiplicity
        """
        return {
            "kind": self.kind,
            "prefix": list(self.lasso.prefix),
            "cycle": list(self.lasso.cycle),
        }


RepClass = Union[Cycle, Chain]


def mk_cycle(alphabet: int, word: Union[Word, Sequence[int]]) -> Cycle:
    """
    Builds the canonical class P_N(J) of a finite word.

    Args:
        alphabet (int): N
        word (Union[Word, Sequence[int]]): J, nonempty

    Raises:
        ValueError: if J is empty or has letters outside 1..N

    Returns:
        Cycle: the canonical class
    """
    if not isinstance(word, Word):
        word = Word(alphabet, tuple(word))
    return Cycle(alphabet, word)


def mk_chain(alphabet: int, lasso: LassoWord) -> Chain:
    """
    Builds the canonical class P_N(J) of an eventually periodic infinite
    word.
    """
    return Chain(alphabet, lasso)


def _check_multiplicity(value: Multiplicity) -> Multiplicity:
    if value == OMEGA:
        return OMEGA
    if isinstance(value, bool) or not isinstance(value, int):
        raise TypeError(f"multiplicity must be an integer or OMEGA: {value}")
    if value < 1:
        raise ValueError(f"multiplicity must be positive, got {value}")
    return value


@dataclass(frozen=True)
class Decomposition:
    """
    A direct sum of cyclic permutative classes with multiplicities. OMEGA
    stands for a countably infinite multiplicity.
    """

    alphabet: int
    components: tuple[tuple[RepClass, Multiplicity], ...] = ()

    def __post_init__(self) -> None:
        totals: dict[RepClass, Multiplicity] = defaultdict(int)
        for rep, mult in self.components:
            if rep.alphabet != self.alphabet:
                raise ValueError(
                    f"{rep} does not belong to a sum over {self.alphabet} "
                    "letters"
                )
            totals[rep] += _check_multiplicity(mult)
        ordered = tuple(
            sorted(totals.items(), key=lambda item: item[0].sort_key)
        )
        object.__setattr__(self, "components", ordered)

    def __add__(self, other: "Decomposition") -> "Decomposition":
        if not isinstance(other, Decomposition):
            return NotImplemented
        if other.alphabet != self.alphabet:
            raise ValueError(
                f"cannot add sums over {self.alphabet} and {other.alphabet} "
                "letters"
            )
        return Decomposition(
            self.alphabet, self.components + other.components
        )

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __str__(self) -> str:
        return render(self)

    @classmethod
    def from_class(
        cls, rep: RepClass, multiplicity: Multiplicity = 1
    ) -> "Decomposition":
        """
        Returns:
            Decomposition: the single-class sum
        """
        return cls(rep.alphabet, ((rep, multiplicity),))

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "Decomposition":
        """
        Reads the JSON form written by to_dict.
        """
        alphabet = int(data["alphabet"])
        components = []
        for item in data["components"]:
            mult = item["multiplicity"]
            mult = OMEGA if mult == "inf" else int(mult)
            if item["kind"] == "cycle":
                rep: RepClass = mk_cycle(alphabet, item["word"])
            elif item["kind"] == "chain":
                rep = mk_chain(
                    alphabet,
                    LassoWord(alphabet, item["prefix"], item["cycle"]),
                )
            else:
                raise ValueError(f"unknown component kind {item['kind']}")
            components.append((rep, mult))
        return cls(alphabet, tuple(components))

    @property
    def classes(self) -> tuple[RepClass, ...]:
        """
        Returns:
            tuple[RepClass, ...]: the distinct classes in canonical order
        """
        return tuple(rep for rep, _ in self.components)

    def multiplicity(self, rep: RepClass) -> Multiplicity:
        """
        Returns:
            Multiplicity: how often rep occurs, 0 if it does not
        """
        return dict(self.components).get(rep, 0)

    def total(self) -> Multiplicity:
        """
        Returns:
            Multiplicity: the number of summands counted with multiplicity
        """
        return sum(mult for _, mult in self.components)

    def scaled(self, factor: Multiplicity) -> "Decomposition":
        """
        Multiplies every multiplicity by factor; OMEGA absorbs.
        """
        factor = _check_multiplicity(factor)
        return Decomposition(
            self.alphabet,
            tuple((rep, mult * factor) for rep, mult in self.components),
        )

    def to_dict(self) -> dict[str, Any]:
        """
        Returns:
            dict[str, Any]: the JSON form, OMEGA written as "inf"
        """
        components = []
        for rep, mult in self.components:
            item = rep.to_dict()
            item["multiplicity"] = "inf" if mult == OMEGA else mult
            components.append(item)
        return {"alphabet": self.alphabet, "components": components}

    def to_json(self) -> str:
        """
        Returns:
            str: the byte-stable JSON form
        """
        return json.dumps(self.to_dict())


def render(decomposition: Decomposition) -> str:
    """
    Text form `P(8; 1 8) (+) P(8; 2 7)`. Multiplicities other than one are
    written as a trailing `[xK]` or `[xinf]`.
    """
    if not decomposition.components:
        return "0"
    terms = []
    for rep, mult in decomposition.components:
        if mult == OMEGA:
            terms.append(f"{rep} [xinf]")
        elif mult > 1:
            terms.append(f"{rep} [x{mult}]")
        else:
            terms.append(str(rep))
    return " (+) ".join(terms)


def as_decomposition(value: Union[RepClass, Decomposition]) -> Decomposition:
    """
    Wraps a single class as a one-term sum.
    """
    if isinstance(value, Decomposition):
        return value
    if isinstance(value, (Cycle, Chain)):
        return Decomposition.from_class(value)
    raise TypeError(f"expected a class or a decomposition, not {type(value)}")


def twist_perm(left: int, right: int) -> Perm:
    """
    The relabeling that carries a product over (left, right) letters onto the
    product in the opposite order: M(a - 1) + b -> N(b - 1) + a.
    """
    return relabel_perm((left, right), (2, 1), (1, 2))


def _tensor_cycle_cycle(first: Cycle, second: Cycle) -> list[RepClass]:
    k, ell = first.word, second.word
    alphabet = first.alphabet * second.alphabet
    return [
        mk_cycle(alphabet, star(k, rotate(ell, i)))
        for i in range(1, math.gcd(len(k), len(ell)) + 1)
    ]


def _tensor_chain_cycle(first: Chain, second: Cycle) -> list[RepClass]:
    ell = second.word
    alphabet = first.alphabet * second.alphabet
    return [
        mk_chain(alphabet, star_chain(first.lasso, rotate(ell, i)))
        for i in range(1, len(ell) + 1)
    ]


def _tensor_chain_chain(first: Chain, second: Chain) -> set[RepClass]:
    k, ell = first.lasso, second.lasso
    alphabet = first.alphabet * second.alphabet
    window = (
        len(k.prefix) + len(ell.prefix) + math.lcm(k.period, ell.period)
    )
    return {
        mk_chain(alphabet, star_chain(k, shift_chain(ell, i)))
        for i in range(-window, window + 1)
    }


def _tensor_classes(first: RepClass, second: RepClass) -> Decomposition:
    alphabet = first.alphabet * second.alphabet
    if isinstance(first, Cycle) and isinstance(second, Cycle):
        terms = _tensor_cycle_cycle(first, second)
        return Decomposition(alphabet, tuple((r, 1) for r in terms))
    if isinstance(first, Chain) and isinstance(second, Cycle):
        terms = _tensor_chain_cycle(first, second)
        return Decomposition(alphabet, tuple((r, 1) for r in terms))
    if isinstance(first, Chain) and isinstance(second, Chain):
        tails = _tensor_chain_chain(first, second)
        return Decomposition(alphabet, tuple((r, OMEGA) for r in tails))
    # cycle (x) chain is the twisted chain (x) cycle
    mirrored = _tensor_classes(second, first)
    return relabel(mirrored, twist_perm(second.alphabet, first.alphabet))


def tensor(
    first: Union[RepClass, Decomposition],
    second: Union[RepClass, Decomposition],
) -> Decomposition:
    """
    Decomposes the phi-tensor product of two direct sums. The product is
    computed classwise and extended bilinearly; multiplicities multiply.

    Args:
        first (Union[RepClass, Decomposition]): a sum over N letters
        second (Union[RepClass, Decomposition]): a sum over M letters

    Returns:
        Decomposition: the canonical decomposition over NM letters
    """
    left, right = as_decomposition(first), as_decomposition(second)
    alphabet = left.alphabet * right.alphabet
    result = Decomposition(alphabet)
    for rep1, mult1 in left.components:
        for rep2, mult2 in right.components:
            result = result + _tensor_classes(rep1, rep2).scaled(
                mult1 * mult2
            )
    logger.debug(
        "tensor of %s and %s classes gave %s classes",
        len(left),
        len(right),
        len(result),
    )
    return result


def tensor_power(
    value: Union[RepClass, Decomposition], n: int
) -> Decomposition:
    """
    The left-associated n-fold phi-tensor power.
    """
    if n < 1:
        raise ValueError(f"tensor power needs n >= 1, got {n}")
    base = as_decomposition(value)
    return reduce(tensor, [base] * (n - 1), base)


def equivalent(first: RepClass, second: RepClass) -> bool:
    """
    Unitary equivalence of two classes. Cycles are equivalent when their
    words agree up to rotation and chains when their tails agree up to
    rotation of the period; a cycle is never equivalent to a chain.

    Raises:
        ValueError: if the alphabets differ
    """
    if first.alphabet != second.alphabet:
        raise ValueError(
            f"cannot compare classes over {first.alphabet} and "
            f"{second.alphabet} letters"
        )
    if isinstance(first, Cycle) and isinstance(second, Cycle):
        return first.word == second.word
    if isinstance(first, Chain) and isinstance(second, Chain):
        return first.lasso.cycle == second.lasso.cycle
    return False


def irreducible(rep: RepClass) -> bool:
    """
    A cycle is irreducible iff its word is not a proper power. Chains are
    taken as irreducible.
    """
    if isinstance(rep, Cycle):
        return primitive_root(rep.word)[1] == 1
    return True


def _relabel_class(rep: RepClass, perm: Perm) -> RepClass:
    if isinstance(rep, Cycle):
        return mk_cycle(rep.alphabet, [perm[x - 1] for x in rep.word])
    lasso = rep.lasso
    return mk_chain(
        rep.alphabet,
        LassoWord(
            rep.alphabet,
            tuple(perm[x - 1] for x in lasso.prefix),
            tuple(perm[x - 1] for x in lasso.cycle),
        ),
    )


def relabel(
    decomposition: Decomposition, perm: Iterable[int]
) -> Decomposition:
    """
    Applies a letter permutation to every class of the sum.

    Args:
        decomposition (Decomposition): a sum over N letters
        perm (Iterable[int]): the images of 1..N

    Raises:
        ValueError: if perm is not a bijection of 1..N

    Returns:
        Decomposition: the relabeled sum
    """
    images = tuple(perm)
    if sorted(images) != list(range(1, decomposition.alphabet + 1)):
        raise ValueError(
            f"{images} is not a permutation of 1..{decomposition.alphabet}"
        )
    return Decomposition(
        decomposition.alphabet,
        tuple(
            (_relabel_class(rep, images), mult)
            for rep, mult in decomposition.components
        ),
    )
