"""Dense complex linear-algebra kernels with deterministic conventions.

Matrices are plain ``numpy.ndarray`` values (any real/complex dtype on input,
complex128 internally).  The kernels here wrap LAPACK via numpy but enforce the
conventions the rest of the toolkit relies on: deterministic eigenvalue
ordering, unit-norm phase-fixed eigenvector columns, re-orthonormalized
degenerate clusters, and explicit detection of numerically defective input.

Sizes up to n = 512 are supported and tested; larger inputs work but are
limited only by memory and O(n^3) runtime.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DefectiveMatrixError, SingularMatrixError

# Eigenvalues closer than this are treated as one degenerate cluster.
CLUSTER_TOL = 1e-8
# Residual thresholds beyond which the input is declared defective.
DEFECTIVE_TOL = 1e-6
# Relative singular-value cutoff used for rank decisions everywhere.
RANK_RCOND = 1e-12


def as_matrix(a) -> np.ndarray:
    """Validate and convert input to a 2-d complex128 array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] < 1 or m.shape[1] < 1:
        raise ValueError(f"expected a nonempty 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix entries must be finite")
    return m


def as_vector(x, n: int | None = None) -> np.ndarray:
    """Validate and convert input to a 1-d complex128 array."""
    v = np.asarray(x, dtype=complex).ravel()
    if n is not None and v.shape[0] != n:
        raise ValueError(f"expected vector of length {n}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return v


@dataclass(frozen=True)
class EigenDecomposition:
    """Biorthogonal eigendecomposition M = V diag(eigenvalues) left_dual.

    right_vectors has unit-norm columns; left_dual is its exact inverse, so
    left_dual @ right_vectors = I up to roundoff.  cond_v is the 2-norm
    condition number of right_vectors; residual is ||M V - V Lambda||_F.
    """

    eigenvalues: np.ndarray
    right_vectors: np.ndarray
    left_dual: np.ndarray
    cond_v: float
    residual: float

    @property
    def n(self) -> int:
        return self.eigenvalues.shape[0]


@dataclass(frozen=True)
class SvdResult:
    singular_values: np.ndarray
    u: np.ndarray | None = None
    vh: np.ndarray | None = None

    @property
    def sigma_max(self) -> float:
        return float(self.singular_values[0])

    @property
    def sigma_min(self) -> float:
        return float(self.singular_values[-1])


@dataclass(frozen=True)
class LeastSquaresSolution:
    """Minimum-norm least-squares solution with rank metadata."""

    coeffs: np.ndarray
    rank: int
    rank_deficient: bool


def _normalize_columns(v: np.ndarray) -> np.ndarray:
    """Unit 2-norm columns, phase fixed so the largest-magnitude entry is
    positive real.  cond(V) is only reproducible under this convention."""
    v = v / np.linalg.norm(v, axis=0)
    for k in range(v.shape[1]):
        idx = int(np.argmax(np.abs(v[:, k])))
        pivot = v[idx, k]
        v[:, k] *= np.conj(pivot) / abs(pivot)
    return v


def eig_general(m) -> EigenDecomposition:
    """General (non-Hermitian) eigendecomposition with deterministic output.

    Eigenvalues are sorted by descending real part, ties broken by ascending
    imaginary part.  Within a degenerate cluster (gap <= CLUSTER_TOL after
    sorting) the eigenvector block is re-orthonormalized so that normal
    matrices get cond_v ~= 1 regardless of LAPACK's arbitrary basis choice.

    Raises DefectiveMatrixError when the eigenvector basis is numerically
    singular (residual or dual-basis check beyond DEFECTIVE_TOL).
    """
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("eig_general requires a square matrix")
    n = m.shape[0]

    lam, v = np.linalg.eig(m)
    order = np.lexsort((lam.imag, -lam.real))
    lam = lam[order]
    v = v[:, order]

    # Re-orthonormalize degenerate clusters (chained gap <= CLUSTER_TOL).
    # A cluster of merely close (not equal) eigenvalues has distinct
    # eigendirections that QR would destroy, so the swap is kept only when
    # the block residual stays at roundoff level.
    m_norm = np.linalg.norm(m)
    i = 0
    while i < n:
        j = i + 1
        while j < n and abs(lam[j] - lam[j - 1]) <= CLUSTER_TOL:
            j += 1
        if j - i > 1:
            q, _ = np.linalg.qr(v[:, i:j])
            block_residual = np.linalg.norm(m @ q - q * lam[i:j])
            if block_residual <= 1e-10 * max(1.0, m_norm):
                v[:, i:j] = q
        i = j

    v = _normalize_columns(v)

    sigma = np.linalg.svd(v, compute_uv=False)
    if sigma[-1] <= RANK_RCOND * sigma[0]:
        raise DefectiveMatrixError(
            "eigenvector matrix is numerically singular; "
            "matrix appears defective"
        )
    u = np.linalg.inv(v)
    residual = float(np.linalg.norm(m @ v - v * lam))
    dual_residual = float(np.linalg.norm(u @ v - np.eye(n)))
    if residual > DEFECTIVE_TOL * max(1.0, m_norm) or dual_residual > DEFECTIVE_TOL:
        raise DefectiveMatrixError(
            f"matrix is numerically non-diagonalizable "
            f"(residual={residual:.3e}, dual residual={dual_residual:.3e})"
        )
    cond_v = float(sigma[0] / sigma[-1])
    return EigenDecomposition(
        eigenvalues=lam,
        right_vectors=v,
        left_dual=u,
        cond_v=cond_v,
        residual=residual,
    )


def svd(m, compute_vectors: bool = False) -> SvdResult:
    m = as_matrix(m)
    if compute_vectors:
        u, s, vh = np.linalg.svd(m, full_matrices=False)
        return SvdResult(singular_values=s, u=u, vh=vh)
    s = np.linalg.svd(m, compute_uv=False)
    return SvdResult(singular_values=s)


def cond2(m) -> float:
    """2-norm condition number sigma_max / sigma_min; +inf when singular."""
    s = svd(m).singular_values
    if s[-1] <= 1e-14 * s[0]:
        return float("inf")
    return float(s[0] / s[-1])


def spectral_norm2(m) -> float:
    return float(svd(m).singular_values[0])


def frobenius_norm(m) -> float:
    return float(np.linalg.norm(np.asarray(m, dtype=complex)))


def matmul(a, b) -> np.ndarray:
    return as_matrix(a) @ as_matrix(b)


def matvec(a, x) -> np.ndarray:
    a = as_matrix(a)
    return a @ as_vector(x, a.shape[1])


def inverse(m) -> np.ndarray:
    m = as_matrix(m)
    if m.shape[0] != m.shape[1]:
        raise ValueError("inverse requires a square matrix")
    s = np.linalg.svd(m, compute_uv=False)
    if s[-1] <= 1e-14 * s[0]:
        raise SingularMatrixError(
            f"matrix is singular to working precision "
            f"(sigma_min/sigma_max = {s[-1] / s[0]:.3e})"
        )
    return np.linalg.inv(m)


def lstsq(b, y) -> LeastSquaresSolution:
    """Minimum-norm least-squares solve of b @ c ~= y.

    Rank is decided by the toolkit-wide threshold sigma_i > RANK_RCOND *
    sigma_max; deficiency is flagged, never raised.
    """
    b = as_matrix(b)
    y = as_vector(y, b.shape[0])
    coeffs, _, rank, _ = np.linalg.lstsq(b, y, rcond=RANK_RCOND)
    return LeastSquaresSolution(
        coeffs=coeffs,
        rank=int(rank),
        rank_deficient=bool(rank < b.shape[1]),
    )
