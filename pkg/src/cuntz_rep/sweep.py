# -*- coding: utf-8 -*-
"""
Created on Wednesday, 14th October 2026 10:12:51 am
===============================================================================
@filename:  sweep.py
@author:    cuntz-rep developers
@project:   cuntz-rep
@purpose:   this module runs the closed-form tensor product against the orbit
            oracle on random pairs of cycle classes, in parallel.
===============================================================================
"""
import logging
import math
import os
from functools import partial
from multiprocessing import Pool
from typing import Any, Optional, Sequence

import numpy as np
import pandas as pd
from tqdm import tqdm
from tqdm.contrib.logging import logging_redirect_tqdm

from cuntz_rep.oracle import canonical_bfs, decompose_bfs, product_bfs
from cuntz_rep.repcalc import Cycle, mk_cycle, render, tensor

logger = logging.getLogger(__name__)

Pair = tuple[Cycle, Cycle]


def sample_pairs(
    n: int,
    seed: int,
    alphabets: Sequence[int] = (2, 3, 4),
    max_length: int = 6,
) -> list[Pair]:
    """
    Draws random pairs of cycle classes. The same seed always gives the same
    pairs.

    Args:
        n (int): number of pairs
        seed (int): seed for numpy's default generator
        alphabets (Sequence[int], optional): alphabet sizes to draw from.
            Defaults to (2, 3, 4).
        max_length (int, optional): longest word to draw. Defaults to 6.

    Returns:
        list[Pair]: the pairs
    """
    rng = np.random.default_rng(seed)

    def draw() -> Cycle:
        alphabet = int(rng.choice(alphabets))
        length = int(rng.integers(1, max_length + 1))
        word = rng.integers(1, alphabet + 1, size=length)
        return mk_cycle(alphabet, [int(x) for x in word])

    return [(draw(), draw()) for _ in range(n)]


def check_pair(pair: Pair, depth: int = 1) -> dict[str, Any]:
    """
    Decomposes the product of one pair both ways and records the outcome.

    Args:
        pair (Pair): the two cycle classes
        depth (int, optional): oracle radius. Defaults to 1.

    Returns:
        dict[str, Any]: one row of the sweep table
    """
    first, second = pair
    a, b = len(first.word), len(second.word)
    expected = tensor(first, second)
    found = decompose_bfs(
        product_bfs(canonical_bfs(first, depth), canonical_bfs(second, depth))
    )
    return {
        "left": str(first),
        "right": str(second),
        "a": a,
        "b": b,
        "expected": render(expected),
        "found": render(found.decomposition),
        "match": expected == found.decomposition,
        "complete": found.complete,
        "components": expected.total(),
        "gcd": math.gcd(a, b),
        "lcm_lengths": all(
            len(rep.word) == math.lcm(a, b)
            for rep in expected.classes
            if isinstance(rep, Cycle)
        ),
    }


def run_sweep(
    n: int = 200,
    seed: int = 0,
    depth: int = 1,
    processes: Optional[int] = None,
) -> pd.DataFrame:
    """
    Checks `n` random pairs over a process pool.

    Args:
        n (int, optional): number of pairs. Defaults to 200.
        seed (int, optional): sampling seed. Defaults to 0.
        depth (int, optional): oracle radius. Defaults to 1.
        processes (Optional[int], optional): pool size. Defaults to one
            less than the number of CPUs.

    Returns:
        pd.DataFrame: one row per pair, in sampling order
    """
    pairs = sample_pairs(n, seed)
    if processes is None:
        ncpu = os.cpu_count()
        if ncpu is None:
            processes = 1
        else:
            processes = max(1, ncpu - 1)
    logger.info("Checking %s pairs on %s processes", n, processes)
    with logging_redirect_tqdm():
        with Pool(processes) as p:
            rows = list(
                tqdm(
                    p.imap(partial(check_pair, depth=depth), pairs),
                    total=len(pairs),
                    desc="Sweeping",
                )
            )
    df = pd.DataFrame(rows)
    if not df.empty:
        bad = int((~df["match"]).sum())
        if bad:
            logger.warning("%s of %s pairs disagree", bad, len(df))
    return df
