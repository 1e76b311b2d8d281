# -*- coding: utf-8 -*-
"""
Created on Friday, 9th October 2026 4:15:38 pm
===============================================================================
@filename:  base.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   truncated branching function systems, the finite stand-ins for
            permutative representations that the oracle works on.
===============================================================================
"""
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Hashable, NamedTuple, Optional, Union

import networkx as nx

from cuntz_rep.repcalc import Decomposition

logger = logging.getLogger(__name__)

Label = Hashable

EDGE_COLORS = (
    "black",
    "red",
    "blue",
    "darkgreen",
    "orange",
    "purple",
    "brown",
    "cyan",
)


class DepthError(ValueError):
    """
    Raised when a truncated model is too small for the requested evaluation.
    """


class OracleResult(NamedTuple):
    """
    A decomposition read off a truncated model, and whether the model
    accounts for every one of its non-frontier labels.
    """

    decomposition: Decomposition
    complete: bool


@dataclass
class TruncatedBFS:
    """
    A branching function system f_1, ..., f_N restricted to finitely many
    labels. A label is frontier when one of the f_i is undefined on it or
    when it has no preimage; everything else behaves as in the infinite
    model.

    `depth` bounds the modification word of a label and `reach` how far a
    label sits along a defining chain (0 for models without chains). The
    anchor of a label is its position along the chain.
    """

    alphabet: int
    labels: tuple
    maps: dict[int, dict[Label, Label]]
    base: Label
    depth: int
    reach: int = 0
    anchors: dict[Label, int] = field(default_factory=dict)
    frontier: frozenset = field(init=False, repr=False)
    _preimages: dict[Label, tuple[int, Label]] = field(
        init=False, repr=False
    )

    def __post_init__(self) -> None:
        if isinstance(self.alphabet, bool) or not isinstance(
            self.alphabet, int
        ):
            raise TypeError(
                f"alphabet must be an integer, not {type(self.alphabet)}"
            )
        if set(self.maps) != set(range(1, self.alphabet + 1)):
            raise ValueError(f"need one map for each of 1..{self.alphabet}")
        self.labels = tuple(sorted(self.labels))
        if self.base not in set(self.labels):
            raise ValueError(f"base label {self.base} is not a label")

        preimages: dict[Label, tuple[int, Label]] = {}
        for letter in range(1, self.alphabet + 1):
            for source, image in self.maps[letter].items():
                if image in preimages:
                    raise ValueError(
                        f"{image} is hit twice, the maps are not a branching "
                        "function system"
                    )
                preimages[image] = (letter, source)
        self._preimages = preimages

        defined = [set(self.maps[a]) for a in range(1, self.alphabet + 1)]
        self.frontier = frozenset(
            label
            for label in self.labels
            if label not in preimages
            or any(label not in dom for dom in defined)
        )

    def __len__(self) -> int:
        return len(self.labels)

    def preimages(self) -> dict[Label, tuple[int, Label]]:
        """
        Returns:
            dict[Label, tuple[int, Label]]: label -> (i, x) with f_i(x) equal
                to the label
        """
        return self._preimages

    def anchor(self, label: Label) -> int:
        """
        Returns:
            int: the chain position of the label, 0 if it has none
        """
        return self.anchors.get(label, 0)

    def apply(self, word: Any, label: Label) -> Optional[Label]:
        """
        Applies f_J = f_{j_1} o ... o f_{j_k} to a label.

        Returns:
            Optional[Label]: the image, None where the truncation cuts it
        """
        for letter in reversed(tuple(word)):
            label = self.maps[letter].get(label)
            if label is None:
                return None
        return label

    def unwind(
        self, label: Label, steps: int
    ) -> Optional[tuple[tuple[int, ...], Label]]:
        """
        Walks `steps` preimages back from a label.

        Returns:
            Optional[tuple[tuple[int, ...], Label]]: the letters read and the
                label reached, None where the truncation cuts the walk
        """
        letters = []
        for _ in range(steps):
            step = self._preimages.get(label)
            if step is None:
                return None
            letter, label = step
            letters.append(letter)
        return tuple(letters), label

    def check_cuntz(self) -> bool:
        """
        Checks the truncated Cuntz relations: every map is injective, the
        images are disjoint, and every non-frontier label is hit.
        """
        labels = set(self.labels)
        hits: dict[Label, int] = {}
        for letter in range(1, self.alphabet + 1):
            if not labels.issuperset(self.maps[letter]):
                return False
            images = list(self.maps[letter].values())
            if not labels.issuperset(images):
                return False
            if len(images) != len(set(images)):
                return False
            for image in images:
                hits[image] = hits.get(image, 0) + 1
        if any(count > 1 for count in hits.values()):
            return False
        return all(
            label in hits
            for label in self.labels
            if label not in self.frontier
        )

    def restrict(self, reach: int) -> "TruncatedBFS":
        """
        The sub-model of labels anchored at most `reach` along the chain.
        """
        keep = {
            label for label in self.labels if self.anchor(label) <= reach
        }
        maps = {
            letter: {
                x: y
                for x, y in self.maps[letter].items()
                if x in keep and y in keep
            }
            for letter in self.maps
        }
        return TruncatedBFS(
            alphabet=self.alphabet,
            labels=tuple(keep),
            maps=maps,
            base=self.base,
            depth=self.depth,
            reach=reach,
            anchors={x: self.anchors[x] for x in keep if x in self.anchors},
        )

    def to_graph(self) -> nx.DiGraph:
        """
        The backward functional graph: an edge x -> y labelled i whenever
        x = f_i(y).
        """
        graph = nx.DiGraph()
        graph.add_nodes_from(self.labels)
        for image, (letter, source) in self._preimages.items():
            graph.add_edge(image, source, letter=letter)
        return graph


def write_dot(model: TruncatedBFS, path: Union[str, Path]) -> Path:
    """
    Writes the backward functional graph of a model in graphviz DOT format.
    Frontier labels are drawn dashed and edges are coloured by letter.

    Args:
        model (TruncatedBFS): the model to draw
        path (Union[str, Path]): output file

    Returns:
        Path: the resolved output path
    """
    graph = model.to_graph()
    path = Path(path).resolve()
    lookup = {node: i for i, node in enumerate(graph.nodes())}
    lines = ["digraph bfs", "{"]
    for node, i in lookup.items():
        style = "dashed" if node in model.frontier else "solid"
        label = str(node).replace('"', "'")
        lines.append(f'    n{i} [label="{label}", style={style}];')
    for source, target, data in graph.edges(data=True):
        letter = data["letter"]
        color = EDGE_COLORS[(letter - 1) % len(EDGE_COLORS)]
        lines.append(
            f"    n{lookup[source]} -> n{lookup[target]} "
            f'[label="{letter}", color={color}];'
        )
    lines.append("}")
    logger.info("Writing %s nodes to %s", len(lookup), path)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return path
