"""Ordinary vector frames in C^n: bounds, canonical duals, multipliers."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ContractViolationError, NotInvertibleError
from .numerics import (
    DEFAULT_TOL,
    ToleranceConfig,
    as_matrix,
    inverse,
    pinv,
    singular_values,
    spectral_norm,
)

__all__ = [
    "VectorFrame",
    "frame_operator",
    "frame_bounds_ordinary",
    "is_frame",
    "canonical_dual_ordinary",
    "ordinary_multiplier",
    "sample_ordinary_duals",
    "inverse_representation_ordinary",
]


@dataclass(frozen=True)
class VectorFrame:
    """A finite sequence of vectors in C^n, stored as the rows of a matrix."""

    vectors: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "vectors", as_matrix(self.vectors))

    @classmethod
    def from_vectors(cls, vecs) -> "VectorFrame":
        return cls(np.array([np.asarray(v, dtype=np.complex128) for v in vecs]))

    @property
    def dim(self) -> int:
        return self.vectors.shape[1]

    @property
    def count(self) -> int:
        return self.vectors.shape[0]


def frame_operator(phi: VectorFrame) -> np.ndarray:
    """S = sum_i phi_i phi_i^*, Hermitian positive semidefinite."""
    v = phi.vectors
    return v.T @ v.conj()


def frame_bounds_ordinary(phi: VectorFrame, tol: ToleranceConfig = DEFAULT_TOL):
    """Extreme eigenvalues (alpha, beta) of the frame operator."""
    if phi.count == 0:
        raise ContractViolationError("frame bounds need at least one vector")
    w = np.linalg.eigvalsh(frame_operator(phi))
    lo, hi = float(w[0]), float(w[-1])
    if lo < 0.0 and abs(lo) <= tol.eq_rel * max(1.0, hi):
        lo = 0.0
    return lo, hi


def is_frame(phi: VectorFrame, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    lo, hi = frame_bounds_ordinary(phi, tol)
    return lo > tol.inv_rel * hi


def canonical_dual_ordinary(phi: VectorFrame, tol: ToleranceConfig = DEFAULT_TOL) -> VectorFrame:
    """Dual vectors psi_i = pinv(S) phi_i, computed within the span of phi."""
    sp = pinv(frame_operator(phi), tol)
    return VectorFrame((sp @ phi.vectors.T).T)


def ordinary_multiplier(m, synth: VectorFrame, anal: VectorFrame) -> np.ndarray:
    """Matrix of x -> sum_i m_i <x, anal_i> synth_i.

    Synthesis and analysis roles are explicit arguments; there is no hidden
    convention about which frame analyzes and which reconstructs.
    """
    m = np.asarray(m, dtype=np.complex128).ravel()
    if len(m) != synth.count or synth.count != anal.count:
        raise ContractViolationError(
            f"length mismatch: {len(m)} symbols, {synth.count} synthesis and "
            f"{anal.count} analysis vectors"
        )
    if synth.dim != anal.dim:
        raise ContractViolationError("synthesis and analysis frames live in different spaces")
    return synth.vectors.T @ (m[:, None] * anal.vectors.conj())


def sample_ordinary_duals(
    phi: VectorFrame,
    count: int,
    rng: np.random.Generator,
    tol: ToleranceConfig = DEFAULT_TOL,
):
    """Canonical dual of ``phi`` plus ``count - 1`` kernel-perturbed duals.

    Duals are drawn through the operator-valued dual parametrization of the
    embedded frame, so each returned frame ``d`` satisfies
    ``sum_i <x, d_i> phi_i = x``.
    """
    from . import ovf  # deferred: ovf imports this module at load time

    a = ovf.embed_ordinary(phi)
    duals = [ovf.canonical_ov_dual(a, tol)]
    for _ in range(max(0, count - 1)):
        g = rng.standard_normal((phi.count, phi.dim)) + 1j * rng.standard_normal(
            (phi.count, phi.dim)
        )
        duals.append(ovf.sample_ov_dual(a, g, tol))
    return [VectorFrame(d.analysis.conj()) for d in duals]


def inverse_representation_ordinary(
    m,
    synth: VectorFrame,
    anal: VectorFrame,
    tol: ToleranceConfig = DEFAULT_TOL,
    num_duals: int = 5,
    rng: np.random.Generator | None = None,
):
    """Inverse of an invertible vector multiplier as a reciprocal multiplier.

    For M = ordinary_multiplier(m, synth, anal) invertible and m bounded away
    from zero, the frame ``psi_dag_i = M^-1 (m_i synth_i)`` represents the
    inverse: ``M^-1 = ordinary_multiplier(1/m, psi_dag, d)`` for every dual
    ``d`` of the synthesis frame. Returns ``(psi_dag, residual)`` where the
    residual is the worst relative deviation over sampled duals.
    """
    m = np.asarray(m, dtype=np.complex128).ravel()
    mat = ordinary_multiplier(m, synth, anal)
    s = singular_values(mat)
    if s.size == 0 or s[0] == 0.0 or s[-1] <= tol.inv_rel * s[0]:
        raise NotInvertibleError(
            f"multiplier is singular at tolerance (sigma_min={float(s[-1]) if s.size else 0.0:.3e})",
            sigma_min=float(s[-1]) if s.size else 0.0,
        )
    if np.min(np.abs(m)) == 0.0:
        raise ContractViolationError("symbol is not semi-normalized: zero entry")
    minv = inverse(mat, tol)
    psi_dag = VectorFrame((minv @ (m[:, None] * synth.vectors).T).T)
    if rng is None:
        rng = np.random.default_rng(0x5EED)
    residual = 0.0
    scale = spectral_norm(minv)
    for d in sample_ordinary_duals(synth, num_duals, rng, tol):
        rep = ordinary_multiplier(1.0 / m, psi_dag, d)
        residual = max(residual, spectral_norm(minv - rep) / scale)
    return psi_dag, residual
