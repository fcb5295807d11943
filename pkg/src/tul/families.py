"""Constructors for the named graph families: dipoles, melonic graphs, and
cycle graphs with multiple edges.

Melonic graphs are grown from a dipole by repeatedly cutting an edge and
splicing in a two-vertex remnant joined by the remaining D-1 colors; a
recipe records the cut sequence so construction is reproducible.  Cycle
graphs alternate m-dipoles and n-dipoles around a ring, realized as identity
permutations for the m-colors and the cyclic shift for the n-colors.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import ColoredGraph, is_connected
from .permutations import identity

Step = tuple[int, int]  # (color, white vertex), both 1-based


@dataclass(frozen=True)
class MelonicRecipe:
    """Cut sequence generating a melonic graph with k = len(steps) + 1.

    Each step (color, white_vertex) names the edge to cut: the unique edge of
    that color at that white vertex, in the graph built so far.  Step t is
    applied to a graph with t white vertices, so white_vertex must be <= t.
    """

    D: int
    steps: tuple[Step, ...] = ()

    def __post_init__(self):
        if self.D < 1:
            raise ValueError(f"D must be positive, got {self.D}")
        object.__setattr__(self, "steps", tuple((int(c), int(v)) for c, v in self.steps))
        if self.steps and self.D < 3:
            raise ValueError(
                f"melonic growth needs D >= 3 (got D={self.D}); for D <= 2 the "
                "unique-minimal-covering property breaks down"
            )
        for t, (color, vertex) in enumerate(self.steps, start=1):
            if not 1 <= color <= self.D:
                raise ValueError(f"step {t}: color {color} out of range 1..{self.D}")
            if not 1 <= vertex <= t:
                raise ValueError(f"step {t}: white vertex {vertex} does not exist yet (k={t})")

    @property
    def k(self) -> int:
        return len(self.steps) + 1


@dataclass(frozen=True)
class CycleSpec:
    """An (m,n)-cycle graph: k m-dipoles and k n-dipoles with disjoint colors."""

    k: int
    m_colors: frozenset[int]
    n_colors: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "m_colors", frozenset(int(c) for c in self.m_colors))
        object.__setattr__(self, "n_colors", frozenset(int(c) for c in self.n_colors))
        if self.k < 1:
            raise ValueError(f"k must be positive, got {self.k}")
        if not self.m_colors or not self.n_colors:
            raise ValueError("both color sets must be nonempty")
        if self.m_colors & self.n_colors:
            raise ValueError(f"color sets overlap: {sorted(self.m_colors & self.n_colors)}")
        D = len(self.m_colors) + len(self.n_colors)
        if self.m_colors | self.n_colors != set(range(1, D + 1)):
            raise ValueError(f"color sets must partition 1..{D}, got "
                             f"{sorted(self.m_colors | self.n_colors)}")

    @property
    def m(self) -> int:
        return len(self.m_colors)

    @property
    def n(self) -> int:
        return len(self.n_colors)

    @property
    def D(self) -> int:
        return self.m + self.n


def make_dipole(D: int) -> ColoredGraph:
    """The unique D-colored graph on two vertices: D parallel edges."""
    if D < 1:
        raise ValueError(f"D must be positive, got {D}")
    return ColoredGraph(k=1, sigma=tuple(identity(1) for _ in range(D)))


def make_melonic(recipe: MelonicRecipe) -> ColoredGraph:
    """Grow a melonic graph from a dipole following the recipe's cut sequence.

    Cutting the color-c edge at white vertex w inserts a fresh white/black
    pair joined by every color except c; the severed half-edges reattach so
    that the new pair sits on the old edge.
    """
    D = recipe.D
    sigma = [[0] for _ in range(D)]  # dipole: every color maps white 0 -> black 0
    for color, vertex in recipe.steps:
        c, w = color - 1, vertex - 1
        new = len(sigma[0])  # label of the inserted white/black pair
        old_black = sigma[c][w]
        for i in range(D):
            sigma[i].append(new if i != c else old_black)
        sigma[c][w] = new
    return ColoredGraph(k=recipe.k, sigma=tuple(tuple(s) for s in sigma))


def random_melonic_recipe(rng, D: int, k: int) -> MelonicRecipe:
    """Uniformly random cut at each stage; k-1 steps, seeded via rng."""
    steps = []
    for t in range(1, k):
        steps.append((int(rng.integers(1, D + 1)), int(rng.integers(1, t + 1))))
    return MelonicRecipe(D=D, steps=tuple(steps))


def make_cycle_graph(spec: CycleSpec) -> ColoredGraph:
    """Identity rows for the m-colors, the k-cycle j -> j+1 for the n-colors."""
    k = spec.k
    shift = tuple((j + 1) % k for j in range(k))
    rows = []
    for color in range(1, spec.D + 1):
        rows.append(identity(k) if color in spec.m_colors else shift)
    return ColoredGraph(k=k, sigma=tuple(rows))


def split_cycle_graph(R: ColoredGraph, spec: CycleSpec) -> list[tuple[tuple[int, ...], ColoredGraph]]:
    """Split an (m,n)-cycle graph into the component cycle graphs.

    For m=n the result is m (1,1)-cycle graphs pairing the nu-th smallest
    m-color with the nu-th smallest n-color; for m<n it is m-1 such pairs
    plus one (1, n-m+1)-cycle graph carrying the last m-color and the n-m+1
    remaining n-colors.  Each part is returned with the tuple of original
    colors its rows correspond to (sorted), so that reassembling the rows by
    color reproduces R exactly.
    """
    if R != make_cycle_graph(spec):
        raise ValueError("graph does not match the cycle spec")
    m, n = spec.m, spec.n
    if m > n:
        raise ValueError(f"split requires m <= n, got m={m} > n={n}")
    mc = sorted(spec.m_colors)
    nc = sorted(spec.n_colors)
    groups: list[list[int]] = []
    if m == n:
        groups = [[mc[v], nc[v]] for v in range(m)]
    else:
        groups = [[mc[v], nc[v]] for v in range(m - 1)]
        groups.append([mc[m - 1]] + nc[m - 1:])
    parts = []
    for colors in groups:
        colors = tuple(sorted(colors))
        rows = tuple(R.sigma[c - 1] for c in colors)
        parts.append((colors, ColoredGraph(k=spec.k, sigma=rows)))
    return parts


def is_melonic(B: ColoredGraph, picker=None) -> bool:
    """True iff B reduces to a dipole by repeatedly deleting a white/black
    pair joined by exactly D-1 parallel edges (undoing a melonic insertion).

    Only defined as a useful predicate for D >= 3: a connected D=2 graph with
    k >= 2 is a plain matrix-trace cycle and is excluded, since the melonic
    dominance structure (unique minimal covering) does not hold there.

    picker, if given, selects among the eligible (white, black) pairs at each
    step; the default takes the lexicographically first.  Melonicity does not
    depend on this choice.
    """
    if not is_connected(B):
        raise ValueError("is_melonic expects a connected graph")
    if B.k == 1:
        return True
    if B.D < 3:
        return False
    D = B.D
    sigma = [list(s) for s in B.sigma]
    k = B.k
    while k > 1:
        eligible = []
        for w in range(k):
            hits: dict[int, int] = {}
            for i in range(D):
                hits[sigma[i][w]] = hits.get(sigma[i][w], 0) + 1
            for b, cnt in hits.items():
                if cnt == D - 1:
                    eligible.append((w, b))
        if not eligible:
            return False
        eligible.sort()
        w, b = picker(eligible) if picker is not None else eligible[0]
        c = next(i for i in range(D) if sigma[i][w] != b)
        v_bar = sigma[c][w]
        v = sigma[c].index(b)
        sigma[c][v] = v_bar
        for i in range(D):
            del sigma[i][w]
            sigma[i] = [y - 1 if y > b else y for y in sigma[i]]
        k -= 1
    return True


# ---------------------------------------------------------------------------
# JSON mirrors of CycleSpec and MelonicRecipe
# ---------------------------------------------------------------------------

def cycle_spec_from_json_dict(data) -> CycleSpec:
    if not isinstance(data, dict):
        raise ValueError("cycle spec JSON must be an object")
    for key in ("k", "m_colors", "n_colors"):
        if key not in data:
            raise ValueError(f"cycle spec JSON is missing field '{key}'")
    for key in ("m_colors", "n_colors"):
        if not isinstance(data[key], list) or not all(isinstance(x, int) for x in data[key]):
            raise ValueError(f"field '{key}' must be a list of integers")
    if not isinstance(data["k"], int):
        raise ValueError(f"field 'k' must be an integer, got {data['k']!r}")
    return CycleSpec(k=data["k"], m_colors=frozenset(data["m_colors"]),
                     n_colors=frozenset(data["n_colors"]))


def cycle_spec_to_json_dict(spec: CycleSpec) -> dict:
    return {"k": spec.k, "m_colors": sorted(spec.m_colors), "n_colors": sorted(spec.n_colors)}


def melonic_recipe_from_json_dict(data) -> MelonicRecipe:
    if not isinstance(data, dict):
        raise ValueError("melonic recipe JSON must be an object")
    for key in ("D", "steps"):
        if key not in data:
            raise ValueError(f"melonic recipe JSON is missing field '{key}'")
    if not isinstance(data["D"], int):
        raise ValueError(f"field 'D' must be an integer, got {data['D']!r}")
    steps = data["steps"]
    if (not isinstance(steps, list)
            or not all(isinstance(s, list) and len(s) == 2
                       and all(isinstance(x, int) for x in s) for s in steps)):
        raise ValueError("field 'steps' must be a list of [color, white_vertex] pairs")
    return MelonicRecipe(D=data["D"], steps=tuple((c, v) for c, v in steps))


def melonic_recipe_to_json_dict(recipe: MelonicRecipe) -> dict:
    return {"D": recipe.D, "steps": [[c, v] for c, v in recipe.steps]}
