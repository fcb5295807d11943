"""Exhaustive enumeration of coverings over S_k, minimal covering graphs,
and exact Catalan/Narayana combinatorics.

The brute force walks all k! pairings tau, so callers must stay under a cap
(default 9, i.e. 362,880 coverings).  Everything the closed-form layer
predicts is checkable at that scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .graphs import ColoredGraph, CoveringGraph, FaceProfile, face_profile, is_connected
from .permutations import Perm, all_perms, identity

DEFAULT_CAP = 9


@dataclass(frozen=True)
class MinimalCoveringSet:
    """All pairings attaining the maximal total face count gamma."""

    gamma: int
    members: tuple[tuple[Perm, FaceProfile], ...]

    @property
    def count(self) -> int:
        return len(self.members)


def _check_cap(k: int, cap: int):
    if k > cap:
        raise ValueError(
            f"k={k} exceeds the enumeration cap ({cap}): {k}! = {math.factorial(k)} "
            "pairings; pass a larger cap explicitly if you really want the full sweep"
        )


def enumerate_coverings(B: ColoredGraph, cap: int = DEFAULT_CAP) -> Iterator[tuple[Perm, FaceProfile]]:
    """Yield (tau, FaceProfile) for every tau in S_k, in lexicographic order."""
    if not is_connected(B):
        raise ValueError("enumerate_coverings expects a connected graph")
    _check_cap(B.k, cap)
    for tau in all_perms(B.k):
        yield tau, face_profile(CoveringGraph(base=B, tau=tau))


def minimal_coverings(B: ColoredGraph, cap: int = DEFAULT_CAP) -> MinimalCoveringSet:
    """Sweep all coverings and keep every maximizer of the total face count."""
    gamma = -1
    members: list[tuple[Perm, FaceProfile]] = []
    for tau, profile in enumerate_coverings(B, cap=cap):
        if profile.total > gamma:
            gamma = profile.total
            members = [(tau, profile)]
        elif profile.total == gamma:
            members.append((tau, profile))
    return MinimalCoveringSet(gamma=gamma, members=tuple(members))


def limit_coefficient(B: ColoredGraph, c, cap: int = DEFAULT_CAP) -> float:
    """Sum over minimal coverings of prod_i c_i^zero_faces[i].

    With all c_i = 1 this is just the number of minimal coverings; in general
    it is the leading coefficient of the averaged invariant for a
    c_1 N x ... x c_D N tensor.
    """
    c = [float(x) for x in c]
    if len(c) != B.D:
        raise ValueError(f"expected {B.D} side ratios, got {len(c)}")
    if any(x <= 0 for x in c):
        raise ValueError(f"side ratios must be positive, got {c}")
    mcs = minimal_coverings(B, cap=cap)
    return math.fsum(
        math.prod(ci ** f for ci, f in zip(c, profile.zero_faces))
        for _, profile in mcs.members
    )


# ---------------------------------------------------------------------------
# Catalan / Narayana combinatorics (exact integers)
# ---------------------------------------------------------------------------

def catalan(k: int) -> int:
    """C_k = binom(2k, k) / (k+1), exact."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    return math.comb(2 * k, k) // (k + 1)


def narayana(k: int, l: int) -> int:
    """N_{k,l} = (1/k) binom(k, l) binom(k, l-1), exact; requires 1 <= l <= k."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not 1 <= l <= k:
        raise ValueError(f"l={l} out of range 1..{k}")
    return math.comb(k, l) * math.comb(k, l - 1) // k


def narayana_recurrence(k: int, l: int) -> int:
    """N_{k,l} by dynamic programming, independent of the closed form.

    Uses the decomposition of a minimal pairing by the blocks hanging off a
    fixed edge: N_{k,l} = sum over p >= 1 of the p-fold convolution of the
    table itself evaluated at (k-p, l-1), with base case N_{0,0} = 1.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not 1 <= l <= k:
        raise ValueError(f"l={l} out of range 1..{k}")
    size = k + 1
    T = [[0] * size for _ in range(size)]
    T[0][0] = 1
    for kk in range(1, size):
        # row kk of T stays zero until the end of this iteration, so the
        # convolutions only ever see the already-final rows < kk
        row = [0] * size
        conv = [r[:] for r in T]
        for p in range(1, kk + 1):
            if p > 1:
                conv = _conv2(conv, T, size)
            for ll in range(1, kk + 1):
                row[ll] += conv[kk - p][ll - 1]
        T[kk] = row
    return T[k][l]


def _conv2(A, B, size):
    C = [[0] * size for _ in range(size)]
    for a1 in range(size):
        rowA = A[a1]
        for b1 in range(size):
            v = rowA[b1]
            if v == 0:
                continue
            for a2 in range(size - a1):
                rowB = B[a2]
                out = C[a1 + a2]
                for b2 in range(size - b1):
                    w = rowB[b2]
                    if w:
                        out[b1 + b2] += v * w
    return C


def _is_two_color_cycle(B: ColoredGraph) -> bool:
    k = B.k
    shift = tuple((j + 1) % k for j in range(k))
    return B.D == 2 and set(B.sigma) == {identity(k), shift}


def narayana_face_distribution(B: ColoredGraph, anchor_color: int, cap: int = DEFAULT_CAP) -> dict[int, int]:
    """Histogram {l: count} of zero_faces[anchor_color] over minimal coverings.

    Only defined for two-color cycle graphs, where the histogram is the
    Narayana row N_{k, .}.
    """
    if not _is_two_color_cycle(B):
        raise ValueError("narayana_face_distribution expects a two-color cycle graph")
    if anchor_color not in (1, 2):
        raise ValueError(f"anchor color must be 1 or 2, got {anchor_color}")
    hist: dict[int, int] = {}
    for _, profile in minimal_coverings(B, cap=cap).members:
        l = profile.zero_faces[anchor_color - 1]
        hist[l] = hist.get(l, 0) + 1
    return dict(sorted(hist.items()))
