"""Random tensor sampling, exact trace-invariant evaluation, Wick sums for
Gaussian entries, and seeded Monte Carlo universality scans.

Two independent evaluation routes are kept deliberately separate: the naive
route sums the delta-constrained index contractions term by term for any
colored graph, while the cycle route matricizes the tensor and takes
tr((M^H M)^k).  Tests lean on their agreement, so neither may be expressed
through the other.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from fractions import Fraction

import numpy as np

from .asymptotics import predict_cycle, predict_generic
from .enumeration import DEFAULT_CAP, enumerate_coverings
from .families import CycleSpec
from .graphs import ColoredGraph
from .permutations import inverse

DISTRIBUTIONS = ("complex_gaussian", "complex_rademacher", "uniform_disc")

DEFAULT_NAIVE_BUDGET = 10 ** 8


@dataclass(frozen=True)
class TensorSpec:
    """Shape, entry distribution, and seed of a random c_1 N x ... x c_D N tensor.

    Every distribution has zero odd moments and E|entry|^2 = 1, so the second
    Wick weight is exactly one and only higher moments distinguish them.
    """

    D: int
    c: tuple[Fraction, ...]
    N: int
    distribution: str
    seed: int

    def __post_init__(self):
        if self.D < 1:
            raise ValueError(f"D must be positive, got {self.D}")
        object.__setattr__(self, "c", tuple(Fraction(x) for x in self.c))
        if len(self.c) != self.D:
            raise ValueError(f"expected {self.D} side ratios, got {len(self.c)}")
        if self.N < 1:
            raise ValueError(f"N must be positive, got {self.N}")
        for i, ci in enumerate(self.c, start=1):
            if ci <= 0:
                raise ValueError(f"c[{i}] must be positive, got {ci}")
            if (ci * self.N).denominator != 1:
                raise ValueError(f"c[{i}]*N = {ci}*{self.N} is not an integer")
        if self.distribution not in DISTRIBUTIONS:
            raise ValueError(f"unknown distribution {self.distribution!r}; "
                             f"choose one of {', '.join(DISTRIBUTIONS)}")
        if not 0 <= self.seed < 2 ** 64:
            raise ValueError(f"seed must fit in 64 unsigned bits, got {self.seed}")

    @property
    def dims(self) -> tuple[int, ...]:
        return tuple(int(ci * self.N) for ci in self.c)


def _substream(seed: int, index: int) -> np.random.Generator:
    # spawn_key makes sample i independent of how many samples are drawn
    return np.random.default_rng(np.random.SeedSequence(entropy=seed, spawn_key=(index,)))


def sample_tensor(spec: TensorSpec, sample_index: int = 0) -> np.ndarray:
    """One i.i.d. tensor draw; deterministic given (spec.seed, sample_index)."""
    rng = _substream(spec.seed, sample_index)
    shape = spec.dims
    if spec.distribution == "complex_gaussian":
        z = rng.standard_normal(shape) + 1j * rng.standard_normal(shape)
        return z * math.sqrt(0.5)
    if spec.distribution == "complex_rademacher":
        re = 2.0 * rng.integers(0, 2, size=shape) - 1.0
        im = 2.0 * rng.integers(0, 2, size=shape) - 1.0
        return (re + 1j * im) * math.sqrt(0.5)
    # uniform on the disc of radius sqrt(2): E|z|^2 = 1
    r = np.sqrt(2.0 * rng.random(shape))
    theta = 2.0 * np.pi * rng.random(shape)
    return r * np.exp(1j * theta)


def naive_term_count(dims, k: int) -> int:
    return math.prod(dims) ** k


def trace_invariant_naive(T: np.ndarray, B: ColoredGraph,
                          budget: int = DEFAULT_NAIVE_BUDGET) -> float:
    """Exact delta-contraction sum over all free indices.

    White vertex j carries one index per color; the color-i edge equates that
    index with slot i of the conjugate copy at black vertex sigma_i(j).  The
    sum runs over all prod_i dims_i^k assignments.  White vertex 0 is kept as
    a vectorized grid; the remaining k-1 whites are looped explicitly, and
    chunk sums are accumulated with exact float summation.
    """
    T = np.asarray(T, dtype=np.complex128)
    if T.ndim != B.D:
        raise ValueError(f"tensor has {T.ndim} axes, graph has D={B.D} colors")
    dims = T.shape
    k, D = B.k, B.D
    terms = naive_term_count(dims, k)
    if terms > budget:
        raise ValueError(
            f"naive contraction needs {terms:.3e} scalar terms, over the budget "
            f"{budget:.1e}; use the matricized cycle route or raise the budget"
        )
    inv = [inverse(s) for s in B.sigma]
    Tc = np.conj(T)
    grid = list(np.ndindex(*dims)) if k > 1 else []
    reals: list[float] = []
    imags: list[float] = []
    for ws in itertools.product(grid, repeat=k - 1):
        # ws[j-1] holds the color indices of white vertex j (j = 1..k-1)
        white = complex(1.0)
        for idx in ws:
            white *= T[idx]
        chunk = T  # white vertex 0 contributes the full grid
        scalar = white
        for b in range(k):
            idx = []
            free = []
            for i in range(D):
                j = inv[i][b]
                if j == 0:
                    idx.append(slice(None))
                    free.append(i)
                else:
                    idx.append(ws[j - 1][i])
            if free:
                bshape = tuple(dims[i] if i in free else 1 for i in range(D))
                chunk = chunk * Tc[tuple(idx)].reshape(bshape)
            else:
                scalar *= Tc[tuple(idx)]
        total = chunk.sum() * scalar
        reals.append(total.real)
        imags.append(total.imag)
    real = math.fsum(reals)
    imag = math.fsum(imags)
    if abs(imag) > 1e-9 * max(1.0, abs(real)):
        raise ArithmeticError(
            f"invariant came out non-real: {real!r} + {imag!r}j; "
            "expected the imaginary part to cancel"
        )
    return real


def _matricize(T: np.ndarray, spec: CycleSpec) -> np.ndarray:
    if T.ndim != spec.D:
        raise ValueError(f"tensor has {T.ndim} axes, cycle spec has D={spec.D} colors")
    order = [i - 1 for i in sorted(spec.m_colors)] + [i - 1 for i in sorted(spec.n_colors)]
    rows = math.prod(T.shape[i - 1] for i in sorted(spec.m_colors))
    return np.transpose(T, order).reshape(rows, -1)


def trace_invariant_cycle(T: np.ndarray, spec: CycleSpec) -> float:
    """tr((M^H M)^k) for the matricization M with row index over the identity
    colors and column index over the shift colors.

    Works on whichever Gram side is smaller; uses a Frobenius inner product
    for k = 2 and Hermitian eigenvalues otherwise.
    """
    T = np.asarray(T, dtype=np.complex128)
    M = _matricize(T, spec)
    if M.shape[0] <= M.shape[1]:
        G = M @ M.conj().T
    else:
        G = M.conj().T @ M
    k = spec.k
    if k == 1:
        return float(np.trace(G).real)
    if k == 2:
        return float(np.vdot(G, G).real)
    eig = np.linalg.eigvalsh(G)
    return float(np.sum(eig ** k))


def gaussian_exact_mean(B: ColoredGraph, c, N: int, cap: int = DEFAULT_CAP) -> int:
    """Exact mean of the invariant for complex Gaussian entries: the Wick sum
    over all pairings tau of prod_i (c_i N)^{zero_faces_i(tau)}.

    Exact (not asymptotic) because every Gaussian cumulant beyond the second
    vanishes; the c_i N are integers, so the result is an exact integer.
    """
    if N < 1:
        raise ValueError(f"N must be positive, got {N}")
    c = [Fraction(x) for x in c]
    if len(c) != B.D:
        raise ValueError(f"expected {B.D} side ratios, got {len(c)}")
    dims = []
    for i, ci in enumerate(c, start=1):
        d = ci * N
        if ci <= 0 or d.denominator != 1:
            raise ValueError(f"c[{i}]*N = {ci}*{N} is not a positive integer")
        dims.append(int(d))
    total = 0
    for _, profile in enumerate_coverings(B, cap=cap):
        term = 1
        for d, f in zip(dims, profile.zero_faces):
            term *= d ** f
        total += term
    return total


def _evaluator(graph):
    if isinstance(graph, CycleSpec):
        return lambda T: trace_invariant_cycle(T, graph)
    if isinstance(graph, ColoredGraph):
        return lambda T: trace_invariant_naive(T, graph)
    raise TypeError(f"graph must be ColoredGraph or CycleSpec, got {type(graph)}")


def _sample_values(spec: TensorSpec, graph, samples: int, threads: int = 1) -> np.ndarray:
    evaluate = _evaluator(graph)
    values = np.empty(samples, dtype=np.float64)

    def fill(lo: int, hi: int):
        for s in range(lo, hi):
            values[s] = evaluate(sample_tensor(spec, s))

    if threads <= 1 or samples < 4:
        fill(0, samples)
    else:
        step = -(-samples // threads)
        bounds = [(lo, min(lo + step, samples)) for lo in range(0, samples, step)]
        with ThreadPoolExecutor(max_workers=threads) as pool:
            # disjoint slices; values identical for any worker count
            list(pool.map(lambda b: fill(*b), bounds))
    return values


def monte_carlo_mean(spec: TensorSpec, graph, samples: int,
                     threads: int = 1) -> tuple[float, float]:
    """Sample mean and standard error of the invariant over independent draws.

    graph selects the evaluation route: a ColoredGraph goes through the naive
    contraction, a CycleSpec through the matricized route.  Sample i always
    uses substream i of spec.seed, so results do not depend on threads.
    """
    if samples < 2:
        raise ValueError(f"need at least 2 samples for a standard error, got {samples}")
    values = _sample_values(spec, graph, samples, threads=threads)
    mean = float(values.mean())
    stderr = float(values.std(ddof=1) / math.sqrt(samples))
    return mean, stderr


@dataclass(frozen=True)
class ScanRow:
    N: int
    samples: int
    mean: float
    stderr: float
    normalized: float
    flagged: bool


@dataclass(frozen=True)
class UniversalityReport:
    """Normalized means mu_hat / N^gamma against the predicted N -> infinity
    coefficient, one row per N."""

    graph_id: str
    distribution: str
    gamma: int
    predicted: float
    rows: tuple[ScanRow, ...]

    def margins(self) -> list[float]:
        return [abs(r.normalized - self.predicted) for r in self.rows]


def graph_id(graph) -> str:
    if isinstance(graph, CycleSpec):
        m = ",".join(str(i) for i in sorted(graph.m_colors))
        n = ",".join(str(i) for i in sorted(graph.n_colors))
        return f"cycle(k={graph.k}, m_colors=[{m}], n_colors=[{n}])"
    if isinstance(graph, ColoredGraph):
        return f"graph(k={graph.k}, D={graph.D})"
    raise TypeError(f"graph must be ColoredGraph or CycleSpec, got {type(graph)}")


def universality_scan(spec: TensorSpec, graph, N_list, samples,
                      threads: int = 1, cap: int = DEFAULT_CAP) -> UniversalityReport:
    """Monte Carlo scan over N with a fixed distribution and side ratios.

    spec supplies c, distribution, and seed; its N is replaced by each entry
    of N_list.  samples may be a single count or a per-N sequence.  A row is
    flagged when |normalized - predicted| exceeds 4 stderr / N^gamma, i.e.
    when the subleading terms still dominate the Monte Carlo noise.
    """
    N_list = [int(N) for N in N_list]
    if not N_list:
        raise ValueError("N_list must not be empty")
    if isinstance(samples, int):
        per_N = [samples] * len(N_list)
    else:
        per_N = [int(s) for s in samples]
        if len(per_N) != len(N_list):
            raise ValueError(f"got {len(per_N)} sample counts for {len(N_list)} values of N")
    if isinstance(graph, CycleSpec):
        prediction = predict_cycle(graph, spec.c)
    else:
        prediction = predict_generic(graph, spec.c, cap=cap)
    rows = []
    for N, count in zip(N_list, per_N):
        row_spec = replace(spec, N=N)
        mean, stderr = monte_carlo_mean(row_spec, graph, count, threads=threads)
        scale = float(N) ** prediction.gamma
        normalized = mean / scale
        flagged = abs(normalized - prediction.coefficient) > 4.0 * stderr / scale
        rows.append(ScanRow(N=N, samples=count, mean=mean, stderr=stderr,
                            normalized=normalized, flagged=flagged))
    return UniversalityReport(graph_id=graph_id(graph), distribution=spec.distribution,
                              gamma=prediction.gamma, predicted=prediction.coefficient,
                              rows=tuple(rows))


def tensor_spec_from_json_dict(data) -> TensorSpec:
    """Build a TensorSpec from its JSON form; ratios may be numbers or 'p/q'."""
    if not isinstance(data, dict):
        raise ValueError("tensor spec JSON must be an object")
    for key in ("D", "c", "N", "distribution"):
        if key not in data:
            raise ValueError(f"tensor spec JSON is missing field '{key}'")
    for key in ("D", "N"):
        if not isinstance(data[key], int):
            raise ValueError(f"field '{key}' must be an integer, got {data[key]!r}")
    if not isinstance(data["c"], list):
        raise ValueError("field 'c' must be a list of ratios")
    ratios = []
    for i, x in enumerate(data["c"], start=1):
        try:
            ratios.append(Fraction(x) if not isinstance(x, float) else Fraction(x).limit_denominator(10 ** 9))
        except (ValueError, TypeError, ZeroDivisionError):
            raise ValueError(f"field 'c[{i}]' is not a number or 'p/q' ratio: {x!r}") from None
    if not isinstance(data["distribution"], str):
        raise ValueError(f"field 'distribution' must be a string, got {data['distribution']!r}")
    seed = data.get("seed", 0)
    if not isinstance(seed, int):
        raise ValueError(f"field 'seed' must be an integer, got {seed!r}")
    return TensorSpec(D=data["D"], c=tuple(ratios), N=data["N"],
                      distribution=data["distribution"], seed=seed)


# ---------------------------------------------------------------------------
# Unitary invariance
# ---------------------------------------------------------------------------

def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-distributed unitary via QR of a complex Gaussian matrix."""
    z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) * math.sqrt(0.5)
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def apply_unitaries(T: np.ndarray, unitaries) -> np.ndarray:
    """Rotate slot i of T by unitaries[i] for every color."""
    T = np.asarray(T, dtype=np.complex128)
    if len(unitaries) != T.ndim:
        raise ValueError(f"got {len(unitaries)} unitaries for {T.ndim} tensor slots")
    for i, U in enumerate(unitaries):
        U = np.asarray(U, dtype=np.complex128)
        if U.shape != (T.shape[i],) * 2:
            raise ValueError(f"unitary {i + 1} has shape {U.shape}, "
                             f"slot needs {(T.shape[i],) * 2}")
        T = np.moveaxis(np.tensordot(U, T, axes=(1, i)), 0, i)
    return T


def unitary_invariance_check(T: np.ndarray, graph, unitaries) -> float:
    """Relative change of the invariant under per-slot unitary rotations."""
    evaluate = _evaluator(graph)
    base = evaluate(np.asarray(T, dtype=np.complex128))
    rotated = evaluate(apply_unitaries(T, unitaries))
    if base == 0.0:
        return abs(rotated)
    return abs(rotated - base) / abs(base)
