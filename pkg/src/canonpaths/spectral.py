"""Spectrum of the simple random walk and the quadratic forms around it.

The walk matrix K is reversible with respect to pi, so
S = D_pi^{1/2} K D_pi^{-1/2} is symmetric and shares K's eigenvalues. S is
diagonalised with cyclic Jacobi rotations; eigenvectors of S map back to
K-eigenfunctions by phi = D_pi^{-1/2} v.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import sqrt

import numpy as np

from .graph import Graph

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class ConvergenceError(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class WalkKernel:
    graph: Graph
    matrix: np.ndarray
    stationary: np.ndarray

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True, eq=False)
class SpectralReport:
    eigenvalues: np.ndarray  # descending
    eigenfunctions: np.ndarray  # column i pairs with eigenvalues[i]; pi-orthonormal
    stationary: np.ndarray
    sweeps: int

    @property
    def beta1(self) -> float:
        return float(self.eigenvalues[1])

    @property
    def beta_min(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def beta_star(self) -> float:
        return max(self.beta1, abs(self.beta_min))

    @property
    def gap(self) -> float:
        return 1.0 - self.beta1


def kernel(g: Graph) -> WalkKernel:
    n = g.n
    K = np.zeros((n, n))
    for v, row in enumerate(g.adjacency):
        K[v, list(row)] = 1.0 / len(row)
    deg = np.array([g.degree(v) for v in range(n)], dtype=float)
    return WalkKernel(g, K, deg / (2 * g.edge_count))


def symmetrized(k: WalkKernel) -> np.ndarray:
    root = np.sqrt(k.stationary)
    S = root[:, None] * k.matrix / root[None, :]
    return 0.5 * (S + S.T)


def off_diagonal_norm(A: np.ndarray) -> float:
    off = A - np.diag(np.diag(A))
    with np.errstate(under="ignore"):  # entries near 1e-160 square to zero, harmlessly
        return float(np.sqrt(np.sum(off * off)))


def jacobi_eigh(A: np.ndarray, tol: float = JACOBI_TOL, max_sweeps: int = JACOBI_MAX_SWEEPS):
    """Cyclic Jacobi eigen-decomposition of a real symmetric matrix.

    Sweeps the strict upper triangle row by row, annihilating each
    off-diagonal entry with a Givens rotation, until the off-diagonal
    Frobenius norm drops to ``tol``. Returns ``(values, vectors, sweeps)``
    with values in descending order and orthonormal eigenvectors as columns.
    """
    A = np.array(A, dtype=float)
    n = A.shape[0]
    V = np.eye(n)
    sweeps = 0
    while off_diagonal_norm(A) > tol:
        if sweeps >= max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = A[p, q]
                if abs(apq) < 1e-300:
                    continue
                theta = (A[q, q] - A[p, p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = (1.0 if theta >= 0 else -1.0) / (abs(theta) + sqrt(theta * theta + 1.0))
                c = 1.0 / sqrt(t * t + 1.0)
                s = t * c
                Ap = A[:, p].copy()
                Aq = A[:, q]
                A[:, p] = c * Ap - s * Aq
                A[:, q] = s * Ap + c * Aq
                Ap = A[p, :].copy()
                Aq = A[q, :]
                A[p, :] = c * Ap - s * Aq
                A[q, :] = s * Ap + c * Aq
                A[p, q] = A[q, p] = 0.0
                Vp = V[:, p].copy()
                Vq = V[:, q]
                V[:, p] = c * Vp - s * Vq
                V[:, q] = s * Vp + c * Vq
    values = np.diag(A).copy()
    order = np.argsort(-values, kind="stable")
    return values[order], V[:, order], sweeps


def eigenvalues(k: WalkKernel) -> SpectralReport:
    values, vectors, sweeps = jacobi_eigh(symmetrized(k))
    phis = vectors / np.sqrt(k.stationary)[:, None]
    return SpectralReport(values, phis, k.stationary, sweeps)


def spectrum(g: Graph) -> SpectralReport:
    return eigenvalues(kernel(g))


# -- quadratic forms ---------------------------------------------------------


def _check_dim(k: WalkKernel, phi) -> np.ndarray:
    phi = np.asarray(phi, dtype=float)
    if phi.shape != (k.n,):
        raise ValueError(f"function has shape {phi.shape}, expected ({k.n},)")
    return phi


def inner(k: WalkKernel, phi, psi) -> float:
    return float(np.sum(np.asarray(phi) * np.asarray(psi) * k.stationary))


def dirichlet_form(k: WalkKernel, phi) -> float:
    """Half-sum of squared differences weighted by pi(x) K(x, y)."""
    phi = _check_dim(k, phi)
    diff = phi[:, None] - phi[None, :]
    return 0.5 * float(np.sum(diff * diff * k.stationary[:, None] * k.matrix))


def dirichlet_form_operator(k: WalkKernel, phi) -> float:
    """The same form written as <phi, (I - K) phi>_pi."""
    phi = _check_dim(k, phi)
    return inner(k, phi, phi - k.matrix @ phi)


def variance(k: WalkKernel, phi) -> float:
    phi = _check_dim(k, phi)
    diff = phi[:, None] - phi[None, :]
    return 0.5 * float(np.sum(diff * diff * np.outer(k.stationary, k.stationary)))


def variance_centered(k: WalkKernel, phi) -> float:
    phi = _check_dim(k, phi)
    centered = phi - inner(k, phi, np.ones(k.n))
    return inner(k, centered, centered)


def rayleigh_lower_bound(k: WalkKernel, phi) -> float:
    """``1 - E(phi, phi) / Var(phi)``, a lower bound on the second eigenvalue."""
    phi = _check_dim(k, phi)
    if np.ptp(phi) == 0:
        raise ValueError("Rayleigh quotient needs a nonconstant function")
    return 1.0 - dirichlet_form(k, phi) / variance(k, phi)


# -- total variation ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class TVReport:
    start: int
    beta_star: float
    tv: np.ndarray  # tv[r-1] is the distance after r steps
    bound: np.ndarray
    slack: float

    @property
    def holds(self) -> bool:
        return bool(np.all(self.tv <= self.bound + self.slack))

    @property
    def worst_margin(self) -> float:
        return float(np.max(self.tv - self.bound))


def tv_bound_check(g: Graph, x: int, r_max: int, slack: float = 1e-10) -> TVReport:
    """Exact r-step total variation from ``x`` against the spectral bound, r = 1..r_max."""
    if r_max < 1:
        raise ValueError("r_max must be at least 1")
    k = kernel(g)
    rep = eigenvalues(k)
    pi_x = float(k.stationary[x])
    scale = 0.5 * sqrt((1.0 - pi_x) / pi_x)
    dist = np.zeros(g.n)
    dist[x] = 1.0
    tv = np.empty(r_max)
    for r in range(r_max):
        dist = dist @ k.matrix
        tv[r] = 0.5 * float(np.abs(dist - k.stationary).sum())
    bound = scale * rep.beta_star ** np.arange(1, r_max + 1)
    return TVReport(x, rep.beta_star, tv, bound, slack)
