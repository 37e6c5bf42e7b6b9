"""Dense complex linear algebra with a single shared tolerance policy.

Every matrix in the package is a numpy ``complex128`` array. All rank,
equality, and invertibility decisions route through one
:class:`ToleranceConfig` so that no two checks can disagree about what
counts as zero.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import (
    ContractViolationError,
    NotInvertibleError,
    NumericFailureError,
)

__all__ = [
    "ToleranceConfig",
    "DEFAULT_TOL",
    "as_matrix",
    "svd",
    "singular_values",
    "rank_tol",
    "spectral_norm",
    "pinv",
    "inverse",
    "is_invertible",
    "hermitian_eig_bounds",
    "schatten_norm",
    "operator_defect",
    "matrices_close",
]


@dataclass(frozen=True)
class ToleranceConfig:
    """Relative cutoffs used by every numerical verdict.

    rank_rel
        Singular values below ``rank_rel * max(rows, cols) * s_max`` are
        treated as zero when ranking and pseudo-inverting.
    eq_rel
        Two operators are equal when their difference has norm at most
        ``eq_rel`` times the comparison scale.
    inv_rel
        A square operator is invertible when ``s_min > inv_rel * s_max``.
    """

    rank_rel: float = 1e-10
    eq_rel: float = 1e-8
    inv_rel: float = 1e-8

    def __post_init__(self):
        for name in ("rank_rel", "eq_rel", "inv_rel"):
            value = getattr(self, name)
            if not (0.0 < value < 1.0):
                raise ContractViolationError(
                    f"{name} must lie strictly between 0 and 1, got {value!r}"
                )


DEFAULT_TOL = ToleranceConfig()


def as_matrix(a) -> np.ndarray:
    """Coerce to a finite 2-d complex128 array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ContractViolationError(f"expected a 2-d array, got shape {m.shape}")
    if m.size and not np.all(np.isfinite(m)):
        raise ContractViolationError("matrix contains NaN or Inf entries")
    return m


def svd(a):
    """Thin singular value decomposition ``a = u @ diag(s) @ vh``.

    Returns
    -------
    (u, s, vh)
        ``u`` and ``vh.conj().T`` have orthonormal columns and ``s`` is
        non-increasing and non-negative.
    """
    m = as_matrix(a)
    try:
        return np.linalg.svd(m, full_matrices=False)
    except np.linalg.LinAlgError as exc:
        raise NumericFailureError(
            f"svd did not converge on a {m.shape[0]}x{m.shape[1]} matrix"
        ) from exc


def singular_values(a) -> np.ndarray:
    m = as_matrix(a)
    if min(m.shape) == 0:
        return np.zeros(0)
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:
        raise NumericFailureError(
            f"svd did not converge on a {m.shape[0]}x{m.shape[1]} matrix"
        ) from exc


def rank_tol(a, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Numerical rank: count of singular values above the relative cutoff."""
    m = as_matrix(a)
    s = singular_values(m)
    if s.size == 0 or s[0] == 0.0:
        return 0
    cutoff = tol.rank_rel * max(m.shape) * s[0]
    return int(np.count_nonzero(s > cutoff))


def spectral_norm(a) -> float:
    s = singular_values(a)
    return float(s[0]) if s.size else 0.0


def pinv(a, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Moore-Penrose pseudoinverse truncated at the rank cutoff."""
    m = as_matrix(a)
    if min(m.shape) == 0:
        return np.zeros((m.shape[1], m.shape[0]), dtype=np.complex128)
    return np.linalg.pinv(m, rcond=tol.rank_rel * max(m.shape))


def is_invertible(a, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1] or m.shape[0] == 0:
        return False
    s = singular_values(m)
    return bool(s[0] > 0.0 and s[-1] > tol.inv_rel * s[0])


def inverse(a, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Inverse of a square matrix, guarded by the invertibility cutoff."""
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ContractViolationError(f"cannot invert a {m.shape[0]}x{m.shape[1]} matrix")
    s = singular_values(m)
    sigma_min = float(s[-1]) if s.size else 0.0
    if s.size == 0 or s[0] == 0.0 or s[-1] <= tol.inv_rel * s[0]:
        raise NotInvertibleError(
            f"matrix is singular at tolerance (sigma_min={sigma_min:.3e})",
            sigma_min=sigma_min,
        )
    return np.linalg.inv(m)


def hermitian_eig_bounds(a, tol: ToleranceConfig = DEFAULT_TOL):
    """Extreme eigenvalues of a Hermitian matrix.

    The input must be Hermitian up to ``eq_rel``; the eigenvalues of its
    Hermitian part are returned as ``(smallest, largest)``.
    """
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise ContractViolationError("eigenvalue bounds need a square matrix")
    if m.shape[0] == 0:
        raise ContractViolationError("eigenvalue bounds need a nonempty matrix")
    scale = max(1.0, float(np.linalg.norm(m)))
    if float(np.linalg.norm(m - m.conj().T)) > tol.eq_rel * scale:
        raise ContractViolationError("matrix is not Hermitian at tolerance")
    w = np.linalg.eigvalsh((m + m.conj().T) / 2.0)
    return float(w[0]), float(w[-1])


def schatten_norm(a, p: float) -> float:
    """Schatten p-norm ``(sum_i s_i**p) ** (1/p)`` for ``p >= 1``."""
    if p < 1:
        raise ContractViolationError(f"Schatten norm needs p >= 1, got {p}")
    s = singular_values(a)
    if s.size == 0:
        return 0.0
    return float(np.sum(s**p) ** (1.0 / p))


def operator_defect(a, b) -> float:
    """Spectral-norm distance between two operators of equal shape."""
    return spectral_norm(as_matrix(a) - as_matrix(b))


def matrices_close(a, b, tol: ToleranceConfig = DEFAULT_TOL, scale: float | None = None) -> bool:
    """Equality at tolerance: ``||a - b|| <= eq_rel * max(1, scale)``.

    When ``scale`` is omitted the larger of the two spectral norms is used.
    """
    if scale is None:
        scale = max(spectral_norm(a), spectral_norm(b))
    return operator_defect(a, b) <= tol.eq_rel * max(1.0, float(scale))
