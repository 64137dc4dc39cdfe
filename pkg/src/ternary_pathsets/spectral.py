"""Perron eigenvalues, Hausdorff dimension and block-counting entropy."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import sparse
from scipy.optimize import brentq

from .presentation import (
    Presentation,
    _require_right_resolving,
    tarjan_scc,
    trim,
)

LOG3 = math.log(3)


class ConvergenceError(RuntimeError):
    pass


def adjacency_matrix(p: Presentation) -> np.ndarray:
    """Square integer matrix; entry (i, j) counts the edges i -> j."""
    n = p.num_vertices
    a = np.zeros((n, n), dtype=np.int64)
    for u, v, _ in p.edges:
        a[u, v] += 1
    return a


def _irreducible_radius(block, tol: float, max_iter: int) -> float:
    """Perron value of an irreducible nonnegative block.

    Power iteration on ``B = A + I``, which is primitive, so the iterates
    converge.  For a positive vector x the Collatz-Wielandt quotients
    ``min (Bx)_i / x_i`` and ``max (Bx)_i / x_i`` bracket rho(B); we stop
    once the bracket is narrower than `tol`.
    """
    n = block.shape[0]
    if n == 1:
        return float(block[0, 0])
    b = sparse.csr_matrix(block, dtype=np.float64) + sparse.identity(n, format="csr")
    x = np.ones(n)
    for _ in range(max_iter):
        y = b @ x
        ratio = y / x
        lo, hi = ratio.min(), ratio.max()
        if hi - lo < tol:
            return 0.5 * (lo + hi) - 1.0
        x = y / y.max()
    raise ConvergenceError(f"power iteration did not converge in {max_iter} steps (n={n})")


@dataclass(frozen=True)
class SccSpectrum:
    index: int
    members: tuple[int, ...]
    beta: float

    @property
    def size(self) -> int:
        return len(self.members)


def scc_spectra(a, tol: float = 1e-12, max_iter: int = 1_000_000) -> list[SccSpectrum]:
    """Perron value of every strongly connected block, in topological order."""
    a = sparse.csr_matrix(a)
    n = a.shape[0]
    succ = [a.indices[a.indptr[i]: a.indptr[i + 1]].tolist() for i in range(n)]
    comps = tarjan_scc(n, succ)
    comps.reverse()
    out = []
    for idx, comp in enumerate(comps):
        comp = sorted(comp)
        block = a[comp][:, comp]
        if block.nnz == 0:
            beta = 0.0
        else:
            beta = _irreducible_radius(block, tol, max_iter)
        out.append(SccSpectrum(idx, tuple(comp), beta))
    return out


def spectral_radius(a, tol: float = 1e-12, max_iter: int = 1_000_000) -> float:
    """Perron eigenvalue of a nonnegative square matrix; the zero matrix gives 0."""
    if getattr(a, "shape", (0,))[0] == 0:
        return 0.0
    spectra = scc_spectra(a, tol, max_iter)
    return max((s.beta for s in spectra), default=0.0)


@dataclass(frozen=True)
class DimensionReport:
    beta: float
    dimension: float
    vertex_count: int
    edge_count: int
    per_scc: tuple[SccSpectrum, ...] = field(default=())
    dominant_component: int | None = None
    degenerate: bool = False

    def as_dict(self) -> dict:
        return {
            "beta": self.beta,
            "dimension": self.dimension,
            "vertex_count": self.vertex_count,
            "edge_count": self.edge_count,
            "degenerate": self.degenerate,
            "dominant_component": self.dominant_component,
            "per_scc": [
                {"component": s.index, "size": s.size, "beta": s.beta} for s in self.per_scc
            ],
        }


def hausdorff_dimension(p: Presentation) -> DimensionReport:
    """``log_3`` of the Perron eigenvalue of trim(p).

    The empty presentation yields a degenerate report with beta = 1.
    """
    p = trim(p)
    if p.is_empty:
        return DimensionReport(1.0, 0.0, 0, 0, degenerate=True)
    spectra = scc_spectra(adjacency_matrix(p))
    dominant = max(spectra, key=lambda s: s.beta)
    beta = dominant.beta
    # a trimmed nonempty graph always contains a cycle, so beta >= 1
    dim = math.log(beta) / LOG3 if beta > 0 else 0.0
    return DimensionReport(
        beta=beta,
        dimension=max(dim, 0.0),
        vertex_count=p.num_vertices,
        edge_count=p.num_edges,
        per_scc=tuple(spectra),
        dominant_component=dominant.index,
    )


def count_initial_blocks(p: Presentation, n: int) -> int:
    """Number of distinct length-n initial blocks, as an exact integer.

    Counts length-n paths from the marked vertex of trim(p); for a
    right-resolving presentation paths and label strings correspond.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    _require_right_resolving(p)
    p = trim(p)
    if p.is_empty:
        return 0
    counts = [0] * p.num_vertices
    counts[p.marked] = 1
    for _ in range(n):
        nxt = [0] * p.num_vertices
        for u, c in enumerate(counts):
            if c:
                for _, v in p.out_edges[u]:
                    nxt[v] += c
        counts = nxt
    return sum(counts)


def entropy_estimate(p: Presentation, n: int) -> float:
    """``(1/n) log_3 N_n``: the block-counting estimate of the dimension."""
    if n < 1:
        raise ValueError("n must be positive")
    count = count_initial_blocks(p, n)
    if count == 0:
        return 0.0
    return math.log(count) / (n * LOG3)


def lk_char_poly_root(k: int) -> float:
    """Root greater than 1 of ``x^k - x^(k-1) - 1``."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return brentq(lambda x: x**k - x ** (k - 1) - 1, 1.0, 2.0, xtol=1e-15, rtol=4 * np.finfo(float).eps)
