# src/chuk_closure_lab/languages/words.py
"""Word combinatorics: the Prouhet-Thue-Morse substitution and cube detection."""

from typing import Optional, Tuple

import numpy as np


def thue_morse_iterate(k: int, x: str = "a", y: str = "b") -> str:
    """k-fold image of x under the substitution x -> xy, y -> yx"""
    if x == y:
        raise ValueError("the two letters must differ")
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    word = x
    swap = {x: y, y: x}
    for _ in range(k):
        word = word + "".join(swap[c] for c in word)
    return word


def _longest_run(mask: "np.ndarray") -> Tuple[int, int]:
    """(length, start) of the longest run of True values"""
    if not mask.any():
        return 0, 0
    padded = np.concatenate(([0], mask.astype(np.int8), [0]))
    edges = np.flatnonzero(np.diff(padded))
    starts, stops = edges[::2], edges[1::2]
    best = int(np.argmax(stops - starts))
    return int(stops[best] - starts[best]), int(starts[best])


def find_cube(word: str) -> Optional[Tuple[int, int]]:
    """
    (start, period) of some factor uuu, or None.

    A cube of period p starting at j exists iff w[i] = w[i+p] for the 2p
    consecutive positions i = j .. j+2p-1.
    """
    codes = np.array([ord(c) for c in word], dtype=np.int64)
    n = len(codes)
    for p in range(1, n // 3 + 1):
        length, start = _longest_run(codes[:-p] == codes[p:])
        if length >= 2 * p:
            return start, p
    return None


def is_cube_free(word: str) -> bool:
    return find_cube(word) is None
