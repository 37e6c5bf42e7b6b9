"""Operator-valued frames {A_i} in B(C^n, C^k) and their dual family.

Every dual of an operator-valued frame A has stacked analysis
T_A S_A^-1 + L where L annihilates T_A from the left (L^* T_A = 0).
In finite dimensions the coefficient space splits exactly as
ran(T_A) + ker(T_A^*), which turns the density statements about the dual
family into rank equalities that can be certified by a single SVD.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .exceptions import ContractViolationError, NotAFrameError
from .frames import VectorFrame
from .fusion import FusionSequence, projection
from .numerics import (
    DEFAULT_TOL,
    ToleranceConfig,
    as_matrix,
    pinv,
    rank_tol,
    spectral_norm,
)

__all__ = [
    "OVFrame",
    "ovf_analysis",
    "ovf_frame_operator_bounds",
    "is_ov_frame",
    "embed_ordinary",
    "embed_fusion",
    "DualCandidate",
    "duality_defect",
    "kernel_projector",
    "canonical_ov_dual",
    "sample_ov_dual",
    "spanning_dual_family",
    "dual_span_dimension",
    "null_bessel_certificate",
]


@dataclass(frozen=True)
class OVFrame:
    """A sequence of k x n operator blocks, stored as an (N, k, n) array."""

    blocks: np.ndarray

    def __post_init__(self):
        b = np.asarray(self.blocks, dtype=np.complex128)
        if b.ndim != 3:
            raise ContractViolationError(f"expected (N, k, n) blocks, got shape {b.shape}")
        if b.size and not np.all(np.isfinite(b)):
            raise ContractViolationError("operator blocks contain NaN or Inf")
        object.__setattr__(self, "blocks", b)

    @classmethod
    def from_blocks(cls, blocks) -> "OVFrame":
        return cls(np.array([as_matrix(b) for b in blocks]))

    @property
    def count(self) -> int:
        return self.blocks.shape[0]

    @property
    def codomain_dim(self) -> int:
        return self.blocks.shape[1]

    @property
    def domain_dim(self) -> int:
        return self.blocks.shape[2]


def ovf_analysis(a: OVFrame) -> np.ndarray:
    """(N*k) x n stacked analysis matrix."""
    n_blocks, k, n = a.blocks.shape
    return a.blocks.reshape(n_blocks * k, n)


def ovf_frame_operator_bounds(a: OVFrame, tol: ToleranceConfig = DEFAULT_TOL):
    """Frame operator S_A = T_A^* T_A with its extreme eigenvalues."""
    t = ovf_analysis(a)
    s = t.conj().T @ t
    w = np.linalg.eigvalsh((s + s.conj().T) / 2.0)
    lo, hi = float(w[0]), float(w[-1])
    if lo < 0.0 and abs(lo) <= tol.eq_rel * max(1.0, hi):
        lo = 0.0
    return s, lo, hi


def is_ov_frame(a: OVFrame, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    _, lo, hi = ovf_frame_operator_bounds(a, tol)
    return lo > tol.inv_rel * hi


def embed_ordinary(phi: VectorFrame) -> OVFrame:
    """Vectors as rank-one analysis functionals: block i is the row phi_i^*."""
    return OVFrame(phi.vectors.conj()[:, None, :])


def embed_fusion(f: FusionSequence) -> OVFrame:
    """Fusion sequence as B(C^n)-valued frame: block i is w_i P_i."""
    return OVFrame(
        np.array([w * projection(s) for s, w in zip(f.subspaces, f.weights)])
    )


@dataclass(frozen=True)
class DualCandidate:
    """A member T_A S_A^-1 + L of the dual family of ``base``.

    ``perturbation`` is the stacked L and ``analysis`` the stacked analysis
    of the dual itself. Membership of L in the annihilator of T_A is checked
    at construction.
    """

    base: OVFrame
    perturbation: np.ndarray
    analysis: np.ndarray

    def __post_init__(self):
        l = as_matrix(self.perturbation)
        t = ovf_analysis(self.base)
        object.__setattr__(self, "perturbation", l)
        object.__setattr__(self, "analysis", as_matrix(self.analysis))
        scale = max(1.0, spectral_norm(t) * spectral_norm(l))
        if spectral_norm(l.conj().T @ t) > DEFAULT_TOL.eq_rel * scale:
            raise ContractViolationError("perturbation does not annihilate the analysis operator")

    @property
    def blocks(self) -> np.ndarray:
        n_blocks, k, n = self.base.blocks.shape
        return self.analysis.reshape(n_blocks, k, n)


def duality_defect(cand: DualCandidate) -> float:
    """Spectral norm of T_dual^* T_A - I."""
    t = ovf_analysis(cand.base)
    n = cand.base.domain_dim
    return spectral_norm(cand.analysis.conj().T @ t - np.eye(n))


def _canonical_analysis(a: OVFrame, tol: ToleranceConfig):
    t = ovf_analysis(a)
    s, lo, hi = ovf_frame_operator_bounds(a, tol)
    if not lo > tol.inv_rel * hi:
        raise NotAFrameError(
            f"operator-valued sequence is not a frame at tolerance (alpha={lo:.3e}, beta={hi:.3e})"
        )
    # (S^-1 T^*)^* = T S^-1 since S is Hermitian
    t_dual = np.linalg.solve(s, t.conj().T).conj().T
    return t, t_dual


def kernel_projector(a: OVFrame, tol: ToleranceConfig = DEFAULT_TOL) -> np.ndarray:
    """Orthogonal projector onto ker(T_A^*) inside the stacked space."""
    t = ovf_analysis(a)
    m = t.shape[0]
    return np.eye(m) - t @ pinv(t, tol)


def canonical_ov_dual(a: OVFrame, tol: ToleranceConfig = DEFAULT_TOL) -> DualCandidate:
    """The dual with L = 0, read off from T_A S_A^-1."""
    t, t_dual = _canonical_analysis(a, tol)
    zero = np.zeros_like(t)
    return DualCandidate(base=a, perturbation=zero, analysis=t_dual)


def sample_ov_dual(a: OVFrame, g, tol: ToleranceConfig = DEFAULT_TOL) -> DualCandidate:
    """Dual obtained by projecting an arbitrary stacked matrix onto the annihilator."""
    t, t_dual = _canonical_analysis(a, tol)
    g = as_matrix(g)
    if g.shape != t.shape:
        raise ContractViolationError(
            f"perturbation seed must have shape {t.shape}, got {g.shape}"
        )
    l = kernel_projector(a, tol) @ g
    return DualCandidate(base=a, perturbation=l, analysis=t_dual + l)


def _elementary_perturbations(a: OVFrame, tol: ToleranceConfig):
    """Deterministic spanning family of the annihilator: projected E_rs."""
    t = ovf_analysis(a)
    rows, cols = t.shape
    pker = kernel_projector(a, tol)
    for r in range(rows):
        for s in range(cols):
            e = np.zeros((rows, cols), dtype=np.complex128)
            e[r, s] = 1.0
            yield pker @ e


def spanning_dual_family(a: OVFrame, tol: ToleranceConfig = DEFAULT_TOL, limit: int | None = None):
    """Canonical dual followed by the elementary-matrix kernel perturbations.

    The sweep order is deterministic: L = 0 first, then the projections of
    E_rs in row-major order. ``limit`` caps the number of candidates.
    """
    t, t_dual = _canonical_analysis(a, tol)
    produced = 0

    def _emit(l):
        nonlocal produced
        produced += 1
        return DualCandidate(base=a, perturbation=l, analysis=t_dual + l)

    yield _emit(np.zeros_like(t))
    if limit is not None and produced >= limit:
        return
    for l in _elementary_perturbations(a, tol):
        yield _emit(l)
        if limit is not None and produced >= limit:
            return


def dual_span_dimension(a: OVFrame, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Rank of the horizontally stacked dual family analyses.

    Concatenates the canonical dual with every projected elementary
    perturbation; the dual ranges exhaust the stacked space exactly when
    this rank equals N*k.
    """
    _, t_dual = _canonical_analysis(a, tol)
    pieces = [t_dual]
    pieces.extend(_elementary_perturbations(a, tol))
    return rank_tol(np.hstack(pieces), tol)


def null_bessel_certificate(a: OVFrame, tol: ToleranceConfig = DEFAULT_TOL) -> int:
    """Dimension of {B : T_B^* T_dual = 0 for the whole spanning family}.

    Solves the joint linear system over the stacked unknown T_B; the dual
    family annihilates only the zero sequence exactly when this is 0.
    """
    t, t_dual = _canonical_analysis(a, tol)
    stacked_rows = [t_dual.conj().T]
    for l in _elementary_perturbations(a, tol):
        stacked_rows.append((t_dual + l).conj().T)
    k = np.vstack(stacked_rows)
    nullity = t.shape[0] - rank_tol(k, tol)
    return int(nullity * a.domain_dim)
