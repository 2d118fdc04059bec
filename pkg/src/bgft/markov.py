"""Random-walk operators: P and I - P, stationary distribution, reversibility
machinery, and the asymmetry / non-normality indices."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import (
    NoPositiveVectorError,
    NotIrreducibleError,
    SinkNodeError,
)
from .graphs import DirectedGraph

STATIONARY_RESIDUAL_TOL = 1e-10
REVERSIBILITY_TOL = 1e-10


@dataclass(frozen=True)
class TransitionOperator:
    """Row-stochastic P together with its diffusion generator I - P."""

    p: np.ndarray
    l_rw: np.ndarray

    @property
    def n(self) -> int:
        return self.p.shape[0]


@dataclass(frozen=True)
class StationaryDistribution:
    """Positive probability vector pi with pi^T P = pi^T."""

    pi: np.ndarray

    @property
    def pi_diag_sqrt(self) -> np.ndarray:
        return np.sqrt(self.pi)


@dataclass(frozen=True)
class SpectralIndices:
    alpha: float
    delta: float


def transition(g: DirectedGraph) -> TransitionOperator:
    """P = D_out^{-1} A (rows normalized by out-degree)."""
    d = g.adjacency.sum(axis=1)
    sinks = np.nonzero(d == 0)[0]
    if sinks.size:
        raise SinkNodeError(int(sinks[0]))
    p = g.adjacency / d[:, None]
    return TransitionOperator(p=p, l_rw=np.eye(g.n) - p)


def asymmetry_index(m) -> float:
    """||M - M^T||_F / ||M||_F, with 0 for the zero matrix."""
    m = linalg.as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("asymmetry_index requires a square matrix")
    den = np.linalg.norm(m)
    if den == 0:
        return 0.0
    return float(np.linalg.norm(m - m.T) / den)


def departure_from_normality(m) -> float:
    """||M M* - M* M||_F / ||M||_F^2, with 0 for the zero matrix."""
    m = linalg.as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("departure_from_normality requires a square matrix")
    den = np.linalg.norm(m) ** 2
    if den == 0:
        return 0.0
    mh = m.conj().T
    return float(np.linalg.norm(m @ mh - mh @ m) / den)


def spectral_indices(m) -> SpectralIndices:
    return SpectralIndices(
        alpha=asymmetry_index(m), delta=departure_from_normality(m)
    )


def stationary(op: TransitionOperator) -> StationaryDistribution:
    """Left eigenvector of P for the eigenvalue closest to 1, sum-normalized.

    Computed with the general eigensolver on P^T (works for periodic chains
    where power iteration does not converge).  Raises NotIrreducibleError if
    eigenvalue 1 is not simple or pi has a nonpositive entry.
    """
    dec = linalg.eig_general(op.p.T)
    dist = np.abs(dec.eigenvalues - 1.0)
    k = int(np.argmin(dist))
    near_one = np.count_nonzero(dist <= 1e-8)
    if near_one > 1:
        raise NotIrreducibleError(
            f"eigenvalue 1 has multiplicity {near_one}; chain is not irreducible"
        )
    v = dec.right_vectors[:, k]
    if np.max(np.abs(v.imag)) > 1e-8 * np.max(np.abs(v)):
        raise NoPositiveVectorError("stationary eigenvector is not real")
    pi = v.real / v.real.sum()
    if np.any(pi < -1e-10):
        raise NoPositiveVectorError("stationary eigenvector has mixed signs")
    if np.any(pi <= 1e-12):
        raise NotIrreducibleError("stationary distribution has a zero entry")
    residual = np.linalg.norm(pi @ op.p - pi)
    if residual > STATIONARY_RESIDUAL_TOL:
        raise NotIrreducibleError(
            f"stationary residual {residual:.3e} exceeds tolerance"
        )
    return StationaryDistribution(pi=pi)


def is_reversible(
    op: TransitionOperator,
    dist: StationaryDistribution,
    tol: float = REVERSIBILITY_TOL,
) -> bool:
    """Detailed-balance test: Pi P = P^T Pi up to relative tolerance."""
    pi_p = dist.pi[:, None] * op.p
    return bool(np.linalg.norm(pi_p - pi_p.T) <= tol * np.linalg.norm(pi_p))


def symmetrize(op: TransitionOperator, dist: StationaryDistribution) -> np.ndarray:
    """Similarity transform S = Pi^{1/2} P Pi^{-1/2}; symmetric iff reversible."""
    s = dist.pi_diag_sqrt
    return (s[:, None] * op.p) / s[None, :]


def pi_inner(x, y, dist: StationaryDistribution) -> complex:
    """<x, y>_pi = sum_i conj(x_i) pi_i y_i.

    Conjugation on the first argument (the signals here are complex, and the
    norm must be nonnegative).
    """
    n = dist.pi.shape[0]
    x = linalg.as_vector(x, n)
    y = linalg.as_vector(y, n)
    return complex(np.sum(np.conj(x) * dist.pi * y))


def pi_norm(x, dist: StationaryDistribution) -> float:
    return float(np.sqrt(pi_inner(x, x, dist).real))
