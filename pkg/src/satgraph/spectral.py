"""Spectral radius, degree bounds, and equitable-partition quotients."""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path
from typing import NamedTuple

import numpy as np

from . import _backend
from .graph import Graph, GraphError, vertices_of

DEFAULT_TOL = 1e-10
MAX_ITER = 10**6


class ConvergenceError(ArithmeticError):
    pass


def adjacency_matrix(g: Graph, verts: list[int] | None = None) -> np.ndarray:
    verts = list(range(g.n)) if verts is None else verts
    a = np.zeros((len(verts), len(verts)))
    for i, u in enumerate(verts):
        for j, v in enumerate(verts):
            if g.adj[u] >> v & 1:
                a[i, j] = 1.0
    return a


def _perron_root(a: np.ndarray, tol: float, max_iter: int) -> float:
    # power iteration on A + I: same eigenvectors, spectrum shifted by +1, so
    # the -lambda_1 of a bipartite graph no longer ties with lambda_1
    b = a + np.eye(len(a))
    x = np.ones(len(a)) / math.sqrt(len(a))
    prev = None
    for _ in range(max_iter):
        y = b @ x
        x = y / np.linalg.norm(y)
        ax = a @ x
        rq = float(x @ ax)
        scale = max(1.0, abs(rq))
        if prev is not None and abs(rq - prev) <= tol * scale:
            if np.linalg.norm(ax - rq * x) <= 0.1 * math.sqrt(tol) * scale:
                return rq
        prev = rq
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps")


def spectral_radius(g: Graph, tol: float = DEFAULT_TOL, max_iter: int = MAX_ITER) -> float:
    """Largest adjacency eigenvalue; the max over components if disconnected."""
    if g.n < 1:
        raise GraphError("spectral radius of the empty graph is undefined")
    best = 0.0
    for comp in _backend.kernels(g.n).components(g.adj, g.full_mask):
        verts = vertices_of(comp)
        if len(verts) == 1:
            continue
        best = max(best, _perron_root(adjacency_matrix(g, verts), tol, max_iter))
    return best


class DegreeBounds(NamedTuple):
    lower: float  # 2m / n
    upper: int  # max degree
    radius: float
    regular: bool
    lower_tight: bool
    upper_tight: bool


def degree_bounds_check(g: Graph, tol: float = 1e-8) -> DegreeBounds:
    """Average degree <= lambda_1 <= max degree, both tight iff regular."""
    if g.n < 1:
        raise GraphError("degree bounds of the empty graph are undefined")
    degs = [g.degree(v) for v in range(g.n)]
    lam = spectral_radius(g)
    lower = 2.0 * g.m / g.n
    upper = max(degs)
    return DegreeBounds(lower, upper, lam, min(degs) == upper,
                        abs(lam - lower) <= tol, abs(lam - upper) <= tol)


def saturated_spectral_floor(k: int) -> float:
    """(k - 2 + sqrt(k^2 + 4k - 4)) / 2, the spectral radius of K_{k+1}^-."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return (k - 2 + math.sqrt(k * k + 4 * k - 4)) / 2


# -- partitions and quotients -------------------------------------------------


@dataclass(frozen=True)
class Partition:
    blocks: tuple[int, ...]  # vertex bitsets

    @classmethod
    def from_lists(cls, blocks) -> "Partition":
        masks = []
        for b in blocks:
            m = 0
            for v in b:
                m |= 1 << v
            masks.append(m)
        return cls(tuple(masks))

    def validate(self, g: Graph) -> None:
        seen = 0
        for b in self.blocks:
            if not b:
                raise GraphError("partition has an empty block")
            if b & seen:
                raise GraphError("partition blocks overlap")
            seen |= b
        if seen != g.full_mask:
            raise GraphError("partition blocks do not cover V(G)")

    def to_lists(self) -> list[list[int]]:
        return [vertices_of(b) for b in self.blocks]


@dataclass(frozen=True)
class QuotientMatrix:
    """Row i holds the average number of neighbours a vertex of block i has in block j."""

    entries: np.ndarray

    @property
    def t(self) -> int:
        return len(self.entries)

    def tolist(self) -> list[list[float]]:
        return self.entries.tolist()


def quotient_matrix(g: Graph, p: Partition) -> QuotientMatrix:
    p.validate(g)
    t = len(p.blocks)
    q = np.zeros((t, t))
    for i, bi in enumerate(p.blocks):
        size = bin(bi).count("1")
        for j, bj in enumerate(p.blocks):
            q[i, j] = sum(bin(g.adj[v] & bj).count("1") for v in vertices_of(bi)) / size
    return QuotientMatrix(q)


def is_equitable(g: Graph, p: Partition) -> QuotientMatrix | None:
    """The quotient matrix if every vertex of a block sees the same number of
    neighbours in each block, else None."""
    p.validate(g)
    for bi in p.blocks:
        for bj in p.blocks:
            counts = {bin(g.adj[v] & bj).count("1") for v in vertices_of(bi)}
            if len(counts) > 1:
                return None
    return quotient_matrix(g, p)


def quotient_spectral_radius(q: QuotientMatrix, tol: float = DEFAULT_TOL) -> float:
    """Largest eigenvalue of Q.  For two blocks the characteristic root is
    used directly and checked against the numerical eigensolver."""
    if q.t < 1:
        raise ValueError("empty quotient matrix")
    numeric = float(np.max(np.linalg.eigvals(q.entries).real))
    if q.t != 2:
        return numeric
    (a, b), (c, d) = q.entries
    tr, det = a + d, a * d - b * c
    closed = float(tr + math.sqrt(max(tr * tr - 4 * det, 0.0))) / 2
    if abs(closed - numeric) > max(tol, 1e-12) * max(1.0, abs(closed)):
        raise ConvergenceError(f"2x2 quotient root {closed} disagrees with eigensolver {numeric}")
    return closed


def k_minus_partition(k: int) -> Partition:
    """The two-block equitable partition of K_{k+1}^-: the two nonadjacent
    vertices {0, k} and the rest."""
    return Partition.from_lists([[0, k], list(range(1, k))])


def parse_partition(text: str) -> Partition:
    blocks = []
    for line in text.splitlines():
        if line.strip():
            try:
                blocks.append([int(x) for x in line.split()])
            except ValueError as exc:
                raise GraphError(f"bad partition line {line!r}") from exc
    return Partition.from_lists(blocks)


def read_partition(path) -> Partition:
    return parse_partition(Path(path).read_text(encoding="ascii"))
