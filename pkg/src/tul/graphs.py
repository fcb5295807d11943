"""Colored graphs and their coverings, encoded as permutation tuples.

A D-colored graph on k white and k black vertices is stored as D
permutations: sigma[i] maps white vertex j to the black vertex sharing the
color-(i+1) edge with it.  A covering adds one more permutation tau (the
color-0 edges).  A (0,i)-face is an alternating color-0/color-i cycle, which
under this encoding is exactly a cycle of tau^-1 * sigma_i, so face counting
reduces to permutation cycle counting.

All values are immutable after construction; invalid permutation data is
rejected at construction time.  Disconnected graphs are accepted here (the
enumeration layer refuses them) so that degenerate cases stay unit-testable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .permutations import Perm, compose, cycle_count, inverse, is_perm


@dataclass(frozen=True)
class ColoredGraph:
    """D-colored bipartite graph on 2k vertices; sigma rows are colors 1..D."""

    k: int
    sigma: tuple[Perm, ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if len(self.sigma) < 1:
            raise ValueError("a colored graph needs at least one color")
        object.__setattr__(self, "sigma", tuple(tuple(p) for p in self.sigma))
        for i, p in enumerate(self.sigma):
            if len(p) != self.k:
                raise ValueError(f"sigma[{i + 1}] has length {len(p)}, expected k={self.k}")
            if not is_perm(p):
                raise ValueError(f"sigma[{i + 1}] is not a bijection on 0..{self.k - 1}")

    @property
    def D(self) -> int:
        return len(self.sigma)


@dataclass(frozen=True)
class CoveringGraph:
    """A colored graph plus the pairing permutation tau (color-0 edges)."""

    base: ColoredGraph
    tau: Perm

    def __post_init__(self):
        object.__setattr__(self, "tau", tuple(self.tau))
        if len(self.tau) != self.base.k:
            raise ValueError(f"tau has length {len(self.tau)}, expected k={self.base.k}")
        if not is_perm(self.tau):
            raise ValueError("tau is not a bijection")


@dataclass(frozen=True)
class FaceProfile:
    """Per-color (0,i)-face counts of a covering, plus optional (i,j) counts."""

    zero_faces: tuple[int, ...]
    total: int
    pair_faces: Mapping[tuple[int, int], int] | None = field(default=None, compare=False)


def face_profile(G: CoveringGraph, with_pairs: bool = False) -> FaceProfile:
    """Count (0,i)-faces for every color i; optionally also (i,j)-faces.

    zero_faces[i-1] is the cycle count of tau^-1 * sigma_i; pair_faces maps a
    1-based color pair (i, j), i < j, to the cycle count of sigma_j^-1 * sigma_i.
    """
    inv_tau = inverse(G.tau)
    zero = tuple(cycle_count(compose(inv_tau, s)) for s in G.base.sigma)
    pairs = None
    if with_pairs:
        pairs = {
            (i + 1, j + 1): cycle_count(compose(inverse(G.base.sigma[j]), G.base.sigma[i]))
            for i in range(G.base.D)
            for j in range(i + 1, G.base.D)
        }
    return FaceProfile(zero_faces=zero, total=sum(zero), pair_faces=pairs)


def is_connected(B: ColoredGraph) -> bool:
    """Union-find over the 2k vertices with edges (white j, black sigma_i(j))."""
    k = B.k
    parent = list(range(2 * k))  # whites 0..k-1, blacks k..2k-1

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for s in B.sigma:
        for j in range(k):
            a, b = find(j), find(k + s[j])
            if a != b:
                parent[a] = b
    root = find(0)
    return all(find(v) == root for v in range(2 * k))


def genus(G: CoveringGraph) -> Fraction:
    """Genus of a D=2 covering via Euler's relation on the 3-colored ribbon graph.

    Faces are all (i,j)-faces over colors {0,1,2}, edges 3k, vertices 2k.
    """
    if G.base.D != 2:
        raise ValueError(f"genus is only supported for D=2 coverings, got D={G.base.D}")
    profile = face_profile(G, with_pairs=True)
    faces = profile.total + profile.pair_faces[(1, 2)]
    k = G.base.k
    return Fraction(2 - (faces - 3 * k + 2 * k), 2)


# ---------------------------------------------------------------------------
# JSON interface: {"k": int, "D": int, "sigma": [[1-based images], ...]}
# ---------------------------------------------------------------------------

def graph_to_json_dict(B: ColoredGraph) -> dict:
    return {"k": B.k, "D": B.D, "sigma": [[j + 1 for j in s] for s in B.sigma]}


def graph_from_json_dict(data) -> ColoredGraph:
    if not isinstance(data, dict):
        raise ValueError("graph JSON must be an object")
    for key in ("k", "D", "sigma"):
        if key not in data:
            raise ValueError(f"graph JSON is missing field '{key}'")
    k, D, sigma = data["k"], data["D"], data["sigma"]
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"field 'k' must be a positive integer, got {k!r}")
    if not isinstance(D, int) or D < 1:
        raise ValueError(f"field 'D' must be a positive integer, got {D!r}")
    if not isinstance(sigma, list):
        raise ValueError("field 'sigma' must be a list of rows")
    if len(sigma) != D:
        raise ValueError(f"field 'sigma' has {len(sigma)} rows but field 'D' is {D}")
    rows = []
    for i, row in enumerate(sigma):
        if not isinstance(row, list) or len(row) != k or not all(isinstance(x, int) for x in row):
            raise ValueError(f"sigma[{i + 1}] must be a list of {k} integers")
        p = tuple(x - 1 for x in row)
        if not is_perm(p):
            raise ValueError(f"sigma[{i + 1}] is not a bijection on 1..{k}")
        rows.append(p)
    return ColoredGraph(k=k, sigma=tuple(rows))


def load_graph(path) -> ColoredGraph:
    with open(path) as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise ValueError(f"{path}: not valid JSON ({e})") from e
    return graph_from_json_dict(data)
