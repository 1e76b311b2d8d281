# -*- coding: utf-8 -*-
"""
Created on Saturday, 10th October 2026 10:47:12 am
===============================================================================
@filename:  models.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   builds truncated models: the canonical model of a cycle or chain
            class, the product model of a phi-tensor product and the model of
            a representation composed with an endomorphism.
===============================================================================
"""
import logging
from itertools import product
from typing import TYPE_CHECKING, Optional

from cuntz_rep.oracle.base import DepthError, Label, TruncatedBFS
from cuntz_rep.repcalc import Chain, Cycle, RepClass
from cuntz_rep.words import Letters, pack_index

if TYPE_CHECKING:  # pragma: no cover
    from cuntz_rep.endocalc import PermEndo

logger = logging.getLogger(__name__)


def _modifications(
    alphabet: int, depth: int, blocked: Optional[int]
) -> list[Letters]:
    # words w with |w| <= depth whose last letter is not `blocked`
    words: list[Letters] = [()]
    for length in range(1, depth + 1):
        words.extend(
            w
            for w in product(range(1, alphabet + 1), repeat=length)
            if w[-1] != blocked
        )
    return words


def _cycle_model(rep: Cycle, depth: int) -> TruncatedBFS:
    word = rep.word.letters
    size = len(word)
    n = rep.alphabet
    labels: list[Label] = []
    for phase in range(size):
        blocked = word[(phase - 1) % size]
        labels.extend((w, phase) for w in _modifications(n, depth, blocked))

    maps: dict[int, dict[Label, Label]] = {a: {} for a in range(1, n + 1)}
    for w, phase in labels:
        for a in range(1, n + 1):
            if not w and a == word[(phase - 1) % size]:
                maps[a][(w, phase)] = ((), (phase - 1) % size)
            elif len(w) < depth:
                maps[a][(w, phase)] = ((a,) + w, phase)

    return TruncatedBFS(
        alphabet=n,
        labels=tuple(labels),
        maps=maps,
        base=((), 0),
        depth=depth,
    )


def _chain_model(rep: Chain, depth: int, reach: int) -> TruncatedBFS:
    lasso = rep.lasso
    n = rep.alphabet
    labels: list[Label] = []
    for pos in range(reach + 1):
        blocked = lasso.letter(pos) if pos else None
        labels.extend((w, pos) for w in _modifications(n, depth, blocked))

    maps: dict[int, dict[Label, Label]] = {a: {} for a in range(1, n + 1)}
    for w, pos in labels:
        for a in range(1, n + 1):
            if not w and pos and a == lasso.letter(pos):
                maps[a][(w, pos)] = ((), pos - 1)
            elif len(w) < depth:
                maps[a][(w, pos)] = ((a,) + w, pos)

    return TruncatedBFS(
        alphabet=n,
        labels=tuple(labels),
        maps=maps,
        base=((), 0),
        depth=depth,
        reach=reach,
        anchors={label: label[1] for label in labels},
    )


def canonical_bfs(rep: RepClass, depth: int, reach: int = 0) -> TruncatedBFS:
    """
    The canonical model of P_N(J), truncated. A label (w, n) stands for
    pi(s_w) Omega_n where Omega_n runs over the cycle of vectors of a finite
    J or the chain of vectors of an infinite J, and w is a modification word
    of length at most `depth` that does not fold back onto Omega_n.

    Args:
        rep (RepClass): the class to model
        depth (int): bound on the modification word, at least 1
        reach (int, optional): how many chain vectors to keep. Required
            for chains, ignored for cycles. Defaults to 0.

    Raises:
        DepthError: if depth < 1, or reach < 1 for a chain

    Returns:
        TruncatedBFS: the truncated model with base label Omega
    """
    if depth < 1:
        raise DepthError(f"the modification radius must be >= 1, got {depth}")
    if isinstance(rep, Cycle):
        model = _cycle_model(rep, depth)
    else:
        if reach < 1:
            raise DepthError(f"a chain model needs reach >= 1, got {reach}")
        model = _chain_model(rep, depth, reach)
    logger.debug("canonical model of %s has %s labels", rep, len(model))
    return model


def product_bfs(first: TruncatedBFS, second: TruncatedBFS) -> TruncatedBFS:
    """
    The model of the phi-tensor product: labels are pairs and
    f_{M(i-1)+j}(x, y) = (f_i x, g_j y).

    Args:
        first (TruncatedBFS): a model over N letters
        second (TruncatedBFS): a model over M letters

    Raises:
        ValueError: if both models carry chains with different reach

    Returns:
        TruncatedBFS: the product model over NM letters
    """
    if first.reach and second.reach and first.reach != second.reach:
        raise ValueError(
            f"chain models with reach {first.reach} and {second.reach} "
            "cannot be multiplied"
        )
    n, m = first.alphabet, second.alphabet
    labels = tuple(product(first.labels, second.labels))
    logger.info("Building product model with %s labels", len(labels))

    maps: dict[int, dict[Label, Label]] = {}
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            maps[pack_index(n, m, i, j)] = {
                (x, y): (fx, gy)
                for x, fx in first.maps[i].items()
                for y, gy in second.maps[j].items()
            }

    anchors: dict[Label, int] = {}
    if first.reach or second.reach:
        anchors = {
            (x, y): max(first.anchor(x), second.anchor(y))
            for x, y in labels
        }

    return TruncatedBFS(
        alphabet=n * m,
        labels=labels,
        maps=maps,
        base=(first.base, second.base),
        depth=min(first.depth, second.depth),
        reach=max(first.reach, second.reach),
        anchors=anchors,
    )


def sum_bfs(*models: TruncatedBFS) -> TruncatedBFS:
    """
    The direct sum: disjoint union of the label sets, each label tagged with
    the position of its summand. The base label is the first summand's.
    """
    if not models:
        raise ValueError("a direct sum needs at least one model")
    alphabets = {model.alphabet for model in models}
    if len(alphabets) != 1:
        raise ValueError(f"alphabet mismatch: {sorted(alphabets)}")
    reaches = {model.reach for model in models if model.reach}
    if len(reaches) > 1:
        raise ValueError(f"chain models with reach {sorted(reaches)}")

    n = alphabets.pop()
    maps: dict[int, dict[Label, Label]] = {a: {} for a in range(1, n + 1)}
    labels: list[Label] = []
    anchors: dict[Label, int] = {}
    for tag, model in enumerate(models):
        labels.extend((tag, x) for x in model.labels)
        anchors.update(
            ((tag, x), model.anchor(x)) for x in model.labels if model.reach
        )
        for a in range(1, n + 1):
            maps[a].update(
                ((tag, x), (tag, y)) for x, y in model.maps[a].items()
            )

    return TruncatedBFS(
        alphabet=n,
        labels=tuple(labels),
        maps=maps,
        base=(0, models[0].base),
        depth=min(model.depth for model in models),
        reach=max(reaches, default=0),
        anchors=anchors,
    )


def compose_bfs(model: TruncatedBFS, endo: "PermEndo") -> TruncatedBFS:
    """
    The model of pi o psi_g. The new map for letter i sends x to
    f_{g(K)} f_K^* f_i x, where K is the word of length l read back from
    f_i x.

    Args:
        model (TruncatedBFS): a model of pi over N letters
        endo (PermEndo): psi_g over N letters

    Raises:
        ValueError: on an alphabet mismatch

    Returns:
        TruncatedBFS: the composed model, undefined wherever the
            truncation cuts the rewrite
    """
    if model.alphabet != endo.alphabet:
        raise ValueError(
            f"a model over {model.alphabet} letters cannot be composed with "
            f"an endomorphism of O_{endo.alphabet}"
        )
    maps: dict[int, dict[Label, Label]] = {
        a: {} for a in range(1, model.alphabet + 1)
    }
    for letter in range(1, model.alphabet + 1):
        for source, image in model.maps[letter].items():
            unwound = model.unwind(image, endo.depth)
            if unwound is None:
                continue
            word, root = unwound
            target = model.apply(endo(word), root)
            if target is not None:
                maps[letter][source] = target

    return TruncatedBFS(
        alphabet=model.alphabet,
        labels=model.labels,
        maps=maps,
        base=model.base,
        depth=model.depth,
        reach=model.reach,
        anchors=dict(model.anchors),
    )
