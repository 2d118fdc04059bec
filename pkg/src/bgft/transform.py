"""Biorthogonal spectral analysis of the random-walk operator.

decompose() builds a biorthogonal basis (right eigenvectors V, left dual
U* = V^{-1}) of P.  Analysis is xhat = U* x, synthesis x = V xhat; diffusion
and spectral filters act diagonally in these coordinates.  Modes are ordered
by decay rate: omega_k = Re(1 - lambda_k), ascending (slow modes first).
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import linalg
from .errors import InvalidSizeError
from .linalg import EigenDecomposition
from .markov import StationaryDistribution, TransitionOperator

DEFAULT_TAU = 2.0


@dataclass(frozen=True)
class BgftBasis:
    """Biorthogonal eigenbasis of a transition operator.

    order sorts modes by ascending decay rate, ties broken by ascending
    |Im lambda| then by Im lambda (so conjugate pairs order deterministically,
    negative-imaginary first).
    """

    operator: TransitionOperator
    eig: EigenDecomposition
    frequencies: np.ndarray
    order: np.ndarray

    @property
    def n(self) -> int:
        return self.eig.n

    @property
    def eigenvalues(self) -> np.ndarray:
        return self.eig.eigenvalues

    @property
    def right_vectors(self) -> np.ndarray:
        return self.eig.right_vectors

    @property
    def left_dual(self) -> np.ndarray:
        return self.eig.left_dual

    @property
    def cond_v(self) -> float:
        return self.eig.cond_v


@dataclass(frozen=True)
class FilterSpec:
    """Scalar spectral response h(lambda).

    kinds:
      heat(tau):          h(lambda) = exp(-tau * (1 - lambda)), tau >= 0
      ideal-lowpass(k):    1 on the k slowest modes (basis order), else 0
      custom(samples):     explicit per-mode table h(lambda_k), basis index order
    """

    kind: str
    tau: float = 0.0
    k: int = 0
    samples: np.ndarray | None = field(default=None)

    @staticmethod
    def heat(tau: float = DEFAULT_TAU) -> "FilterSpec":
        if tau < 0:
            raise ValueError(f"heat filter needs tau >= 0, got {tau}")
        return FilterSpec(kind="heat", tau=float(tau))

    @staticmethod
    def ideal_lowpass(k: int) -> "FilterSpec":
        if k < 1:
            raise InvalidSizeError(f"ideal lowpass needs k >= 1, got {k}")
        return FilterSpec(kind="ideal-lowpass", k=int(k))

    @staticmethod
    def custom(samples) -> "FilterSpec":
        return FilterSpec(kind="custom", samples=np.asarray(samples, dtype=complex))

    def response(self, basis: BgftBasis) -> np.ndarray:
        """Evaluate h at each eigenvalue, in basis index order."""
        if self.kind == "heat":
            return np.exp(-self.tau * (1.0 - basis.eigenvalues))
        if self.kind == "ideal-lowpass":
            if self.k > basis.n:
                raise InvalidSizeError(
                    f"lowpass band {self.k} exceeds n={basis.n}"
                )
            h = np.zeros(basis.n, dtype=complex)
            h[basis.order[: self.k]] = 1.0
            return h
        if self.kind == "custom":
            if self.samples is None or self.samples.shape[0] != basis.n:
                raise ValueError("custom filter table must have one entry per mode")
            return self.samples
        raise ValueError(f"unknown filter kind {self.kind!r}")


@dataclass(frozen=True)
class EnergyReport:
    """Stationary-metric energy identities for one signal."""

    pi_energy: float
    gram_energy: float
    sigma_w_min: float
    sigma_w_max: float
    tv_pi: float
    tv_lower: float
    tv_upper: float


def decompose(op: TransitionOperator) -> BgftBasis:
    """Eigendecompose P and attach the decay-rate mode ordering."""
    eig = linalg.eig_general(op.p)
    lam = eig.eigenvalues
    freq = 1.0 - lam.real
    order = np.lexsort((lam.imag, np.abs(lam.imag), freq))
    return BgftBasis(operator=op, eig=eig, frequencies=freq, order=order)


def analyze(basis: BgftBasis, x) -> np.ndarray:
    """Forward transform: coefficients xhat_k = u_k* x."""
    return basis.left_dual @ linalg.as_vector(x, basis.n)


def synthesize(basis: BgftBasis, xhat) -> np.ndarray:
    """Inverse transform: x = sum_k v_k xhat_k."""
    return basis.right_vectors @ linalg.as_vector(xhat, basis.n)


def diffuse_direct(op: TransitionOperator, x0, t: int) -> np.ndarray:
    """P^t x0 by repeated matvec."""
    if t < 0:
        raise ValueError("t must be >= 0")
    x = linalg.as_vector(x0, op.n)
    for _ in range(t):
        x = op.p @ x
    return x


def diffuse_spectral(basis: BgftBasis, x0, t: int) -> np.ndarray:
    """P^t x0 via the diagonal spectral path V Lambda^t U* x0."""
    if t < 0:
        raise ValueError("t must be >= 0")
    xhat = analyze(basis, x0)
    return synthesize(basis, basis.eigenvalues**t * xhat)


def apply_filter(basis: BgftBasis, spec: FilterSpec, x) -> np.ndarray:
    """Filter a signal spectrally: analyze, scale by h(lambda), synthesize."""
    return synthesize(basis, spec.response(basis) * analyze(basis, x))


def filter_matrix(basis: BgftBasis, spec: FilterSpec) -> np.ndarray:
    """Materialize H = V h(Lambda) U* (apply_filter is the cheap path)."""
    h = spec.response(basis)
    return (basis.right_vectors * h) @ basis.left_dual


def iterate_bound(basis: BgftBasis, t: int) -> float:
    """Operator-norm bound cond(V) * max_k |lambda_k|^t for ||P^t||_2."""
    if t < 0:
        raise ValueError("t must be >= 0")
    return basis.cond_v * float(np.max(np.abs(basis.eigenvalues)) ** t)


def filter_bound(basis: BgftBasis, spec: FilterSpec) -> float:
    """Operator-norm bound cond(V) * max_k |h(lambda_k)| for ||H||_2."""
    return basis.cond_v * float(np.max(np.abs(spec.response(basis))))


def energy_report(basis: BgftBasis, dist: StationaryDistribution, x) -> EnergyReport:
    """Energy identities in the pi-metric.

    pi_energy = ||x||_pi^2 must equal the Gram form xhat* (V* Pi V) xhat; the
    diffusion variation ||(I-P)x||_pi^2 is sandwiched by the squared extreme
    singular values of W = Pi^{1/2} V times sum |1-lambda_k|^2 |xhat_k|^2.
    """
    x = linalg.as_vector(x, basis.n)
    xhat = analyze(basis, x)
    v = basis.right_vectors
    pi = dist.pi

    # Rescale columns to unit pi-norm (and coefficients inversely).  The
    # identities below are invariant under column scaling, and this choice
    # makes W unitary in the reversible limit (pi-orthonormal eigenbasis),
    # where the sandwich bounds collapse to equalities.
    w = dist.pi_diag_sqrt[:, None] * v
    scale = np.linalg.norm(w, axis=0)
    w = w / scale
    v = v / scale
    xhat = xhat * scale

    pi_energy = float(np.sum(pi * np.abs(x) ** 2))
    gram = v.conj().T @ (pi[:, None] * v)
    gram_energy = float((np.conj(xhat) @ gram @ xhat).real)

    sw = np.linalg.svd(w, compute_uv=False)

    lx = basis.operator.l_rw @ x
    tv_pi = float(np.sum(pi * np.abs(lx) ** 2))
    mode_sum = float(np.sum(np.abs(1.0 - basis.eigenvalues) ** 2 * np.abs(xhat) ** 2))

    return EnergyReport(
        pi_energy=pi_energy,
        gram_energy=gram_energy,
        sigma_w_min=float(sw[-1]),
        sigma_w_max=float(sw[0]),
        tv_pi=tv_pi,
        tv_lower=float(sw[-1] ** 2) * mode_sum,
        tv_upper=float(sw[0] ** 2) * mode_sum,
    )
