# -*- coding: utf-8 -*-
"""
Created on Sunday, 11th October 2026 3:05:26 pm
===============================================================================
@filename:  decompose.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   reads direct sum decompositions off the orbit structure of a
            truncated model, and evaluates vector states on it.
===============================================================================
"""
import logging
from collections import Counter
from typing import Optional, Sequence, Union

import networkx as nx
import pandas as pd

from cuntz_rep.oracle.base import (
    DepthError,
    Label,
    OracleResult,
    TruncatedBFS,
)
from cuntz_rep.oracle.models import canonical_bfs
from cuntz_rep.repcalc import (
    OMEGA,
    Chain,
    Decomposition,
    RepClass,
    mk_chain,
    mk_cycle,
)
from cuntz_rep.words import (
    Letters,
    LassoWord,
    Word,
    least_rotation,
    minimal_period,
)

logger = logging.getLogger(__name__)


def _read(graph: nx.DiGraph, start: Label, steps: int) -> Letters:
    # letters met walking `steps` backward edges from start
    letters = []
    node = start
    for _ in range(steps):
        node, data = next(iter(graph[node].items()))
        letters.append(data["letter"])
    return tuple(letters)


def certify_tail(tail: Sequence[int], reach: int) -> Optional[Letters]:
    """
    Decides whether a finite stretch of an infinite word pins down its tail.
    The upper half of the stretch must hold its minimal period at least
    twice and the stretch must cover half the chain window.

    Args:
        tail (Sequence[int]): letters read toward the end of the window
        reach (int): the chain window of the model

    Returns:
        Optional[Letters]: the least rotation of the period, or None
    """
    if not tail or len(tail) < reach // 2:
        return None
    upper = tuple(tail[len(tail) // 2 :])
    period = minimal_period(upper)
    if len(upper) < 2 * period:
        return None
    block = upper[:period]
    k = least_rotation(block)
    return block[k:] + block[:k]


def _scan(
    model: TruncatedBFS,
) -> tuple[Counter, Counter, bool]:
    graph = model.to_graph()
    reverse = graph.reverse(copy=False)
    frontier = model.frontier
    n = model.alphabet

    cycles: Counter = Counter()
    chains: Counter = Counter()
    accounted: set[Label] = set()

    for component in sorted(nx.attracting_components(graph), key=min):
        start = min(component)
        if len(component) > 1 or graph.has_edge(start, start):
            if component & frontier:
                logger.debug("dropping frontier cycle at %s", start)
                continue
            word = _read(graph, start, len(component))
            cycles[mk_cycle(n, word)] += 1
            accounted |= component
            accounted |= nx.descendants(reverse, start)
            continue

        # a label without preimage, only meaningful at the chain window
        if not model.reach or model.anchor(start) < model.reach:
            continue
        dists = nx.single_source_shortest_path_length(reverse, start)
        accounted.update(dists)
        far = min(dists, key=lambda x: (-dists[x], x))
        letters = _read(graph, far, dists[far])
        block = certify_tail(letters[model.depth :], model.reach)
        if block is not None:
            chains[mk_chain(n, LassoWord(n, (), block))] += 1

    complete = model.base not in frontier and all(
        label in accounted for label in model.labels if label not in frontier
    )
    return cycles, chains, complete


def _strides(reach: int) -> list[int]:
    strides = {max(1, reach // 8), max(1, reach // 6), max(1, reach // 4)}
    return sorted(s for s in strides if reach - 2 * s >= 1)


def ring_census(model: TruncatedBFS) -> pd.DataFrame:
    """
    Counts certified chain components class by class on the sub-models
    anchored within shrinking windows of the chain.

    Args:
        model (TruncatedBFS): a model with reach > 0

    Returns:
        pd.DataFrame: columns reach, key, rep and count
    """
    radii = {model.reach}
    for stride in _strides(model.reach):
        radii.update((model.reach - stride, model.reach - 2 * stride))

    rows = []
    for radius in sorted(radii):
        sub = model if radius == model.reach else model.restrict(radius)
        _, chains, _ = _scan(sub)
        for rep, count in chains.items():
            rows.append(
                {"reach": radius, "key": str(rep), "rep": rep, "count": count}
            )
    logger.debug("ring census over radii %s", sorted(radii))
    return pd.DataFrame(rows, columns=["reach", "key", "rep", "count"])


def omega_classes(census: pd.DataFrame, reach: int) -> set[str]:
    """
    The classes whose counts grow strictly over three equally spaced
    windows ending at `reach`.

    Returns:
        set[str]: keys of the classes with countably infinite multiplicity
    """
    if census.empty:
        return set()
    table = census.pivot_table(
        index="key", columns="reach", values="count", aggfunc="sum"
    ).fillna(0)
    found: set[str] = set()
    for stride in _strides(reach):
        cols = [reach - 2 * stride, reach - stride, reach]
        if not all(c in table.columns for c in cols):
            continue
        low, mid, high = (table[c] for c in cols)
        growing = (low < mid) & (mid < high)
        found.update(table.index[growing])
    return found


def decompose_bfs(model: TruncatedBFS) -> OracleResult:
    """
    Decomposes a truncated model along its orbits. Cycles of the backward
    functional graph that avoid the frontier give cycle classes. Chains
    are read at the chain window and counted once per certified tail; a
    class whose count keeps growing as the window widens gets OMEGA.

    Args:
        model (TruncatedBFS): the model to decompose

    Returns:
        OracleResult: the decomposition and whether every non-frontier
            label belongs to a detected component
    """
    cycles, chains, complete = _scan(model)
    components: list[tuple[RepClass, Union[int, float]]] = list(
        cycles.items()
    )
    if chains:
        infinite = omega_classes(ring_census(model), model.reach)
        components.extend(
            (rep, OMEGA if str(rep) in infinite else count)
            for rep, count in chains.items()
        )
    if not complete:
        logger.warning(
            "model with %s labels is not fully accounted for", len(model)
        )
    return OracleResult(
        Decomposition(model.alphabet, tuple(components)), complete
    )


def _as_letters(word: Union[Word, Sequence[int]]) -> Letters:
    if isinstance(word, Word):
        return word.letters
    return tuple(int(x) for x in word)


def vector_state(
    model: TruncatedBFS,
    left: Union[Word, Sequence[int]],
    right: Union[Word, Sequence[int]],
) -> int:
    """
    <Omega | pi(s_A s_B^*) Omega> for the base label Omega of a model.

    Args:
        model (TruncatedBFS): the model
        left (Union[Word, Sequence[int]]): A
        right (Union[Word, Sequence[int]]): B

    Raises:
        DepthError: if the truncation cuts the evaluation

    Returns:
        int: 1 or 0
    """
    label = model.base
    for letter in _as_letters(right):
        step = model.preimages().get(label)
        if step is None:
            raise DepthError(f"s_B^* leaves the model at {label}")
        found, label = step
        if found != letter:
            return 0
    image = model.apply(_as_letters(left), label)
    if image is None:
        raise DepthError(f"s_A leaves the model from {label}")
    return int(image == model.base)


def state_eval(
    rep: RepClass,
    left: Union[Word, Sequence[int]],
    right: Union[Word, Sequence[int]],
    depth: int,
    reach: Optional[int] = None,
) -> int:
    """
    The vector state of the GP vector of a class on s_A s_B^*.

    Args:
        rep (RepClass): the class
        left (Union[Word, Sequence[int]]): A
        right (Union[Word, Sequence[int]]): B
        depth (int): modification radius of the model, at least |A|
        reach (Optional[int], optional): chain window, at least |B|.
            Defaults to |B| + 1.

    Raises:
        DepthError: if the model is too small for A or B

    Returns:
        int: 1 or 0
    """
    a, b = _as_letters(left), _as_letters(right)
    if len(a) > depth:
        raise DepthError(f"|A| = {len(a)} exceeds the radius {depth}")
    if reach is None:
        reach = len(b) + 1
    if isinstance(rep, Chain) and len(b) > reach:
        raise DepthError(f"|B| = {len(b)} exceeds the reach {reach}")
    model = canonical_bfs(rep, depth=max(depth, 1), reach=reach)
    return vector_state(model, a, b)
