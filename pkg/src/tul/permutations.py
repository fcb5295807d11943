"""Permutations on {0..k-1} as plain tuples of images.

Everything downstream (colored graphs, coverings, face counts) is built on
these. External formats use 1-based labels; conversion happens at the JSON
boundary, not here.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Iterator

Perm = tuple[int, ...]


def is_perm(p: Iterable[int]) -> bool:
    p = tuple(p)
    return sorted(p) == list(range(len(p)))


def identity(k: int) -> Perm:
    return tuple(range(k))


def compose(p: Perm, q: Perm) -> Perm:
    """p after q: result[i] = p[q[i]]."""
    if len(p) != len(q):
        raise ValueError(f"cannot compose permutations of lengths {len(p)} and {len(q)}")
    return tuple(p[q[i]] for i in range(len(q)))


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def cycles(p: Perm) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles including fixed points, each starting at its minimum."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p[start]
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p[j]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_count(p: Perm) -> int:
    seen = [False] * len(p)
    count = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        count += 1
        j = start
        while not seen[j]:
            seen[j] = True
            j = p[j]
    return count


def all_perms(k: int) -> Iterator[Perm]:
    """All of S_k in lexicographic order."""
    return itertools.permutations(range(k))


def random_perm(rng, k: int) -> Perm:
    return tuple(int(i) for i in rng.permutation(k))


def transposition(k: int, a: int, b: int) -> Perm:
    p = list(range(k))
    p[a], p[b] = p[b], p[a]
    return tuple(p)


def from_one_based(images: Iterable[int]) -> Perm:
    p = tuple(int(i) - 1 for i in images)
    if not is_perm(p):
        raise ValueError(f"{list(images)} is not a bijection on 1..{len(p)}")
    return p


def to_one_based(p: Perm) -> tuple[int, ...]:
    return tuple(i + 1 for i in p)


def cycle_string(p: Perm) -> str:
    """Cycle notation with 1-based labels, e.g. '(1 3 2)(4)'."""
    return "".join("(" + " ".join(str(i + 1) for i in cyc) + ")" for cyc in cycles(p))
