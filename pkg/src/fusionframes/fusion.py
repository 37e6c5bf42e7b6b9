"""Weighted subspace sequences: projections, analysis/synthesis, bounds, excess.

A fusion sequence is a list of subspaces of C^n with non-negative weights,
subject to the compatibility rule that a weight vanishes exactly when its
subspace is zero. Two coefficient spaces appear throughout:

* the ambient stacked space C^(N*n), where block i of the analysis operator
  is w_i P_i, and
* the restricted space K_W of per-subspace coordinates, where synthesis is
  the block-column matrix [w_1 B_1 | ... | w_N B_N].
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import ContractViolationError
from .frames import VectorFrame, canonical_dual_ordinary
from .numerics import (
    DEFAULT_TOL,
    ToleranceConfig,
    as_matrix,
    rank_tol,
    svd,
)

__all__ = [
    "Subspace",
    "random_subspace",
    "projection",
    "FusionSequence",
    "fusion_analysis_ambient",
    "fusion_synthesis_kw",
    "fusion_frame_operator",
    "fusion_bounds",
    "is_fusion_frame",
    "FusionClassification",
    "classify",
    "excess",
    "scale_weights",
    "LocalFrameFamily",
    "build_local_frames",
]


@dataclass(frozen=True)
class Subspace:
    """A subspace of C^n held as an n x d matrix with orthonormal columns."""

    basis: np.ndarray

    def __post_init__(self):
        b = as_matrix(self.basis)
        object.__setattr__(self, "basis", b)
        n, d = b.shape
        if d > n:
            raise ContractViolationError(f"subspace dimension {d} exceeds ambient {n}")
        if d:
            gram = b.conj().T @ b
            if float(np.linalg.norm(gram - np.eye(d))) > DEFAULT_TOL.eq_rel * max(1.0, d):
                raise ContractViolationError("basis columns are not orthonormal")

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(np.zeros((n, 0), dtype=np.complex128))

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def span(cls, vectors, tol: ToleranceConfig = DEFAULT_TOL) -> "Subspace":
        """Orthonormalize a spanning set (columns) into a canonical basis."""
        mat = as_matrix(vectors)
        u, s, _ = svd(mat)
        r = rank_tol(mat, tol)
        return cls(u[:, :r])

    @property
    def ambient_dim(self) -> int:
        return self.basis.shape[0]

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


def random_subspace(n: int, d: int, rng: np.random.Generator) -> Subspace:
    """Haar-random d-dimensional subspace of C^n.

    The basis is the phase-fixed QR orthonormalization of an n x d complex
    Gaussian matrix, which makes the draw unitarily invariant and exactly
    reproducible for a fixed generator state.
    """
    if d < 0 or d > n:
        raise ContractViolationError(f"need 0 <= d <= n, got d={d}, n={n}")
    if d == 0:
        return Subspace.zero(n)
    g = (rng.standard_normal((n, d)) + 1j * rng.standard_normal((n, d))) / np.sqrt(2.0)
    q, r = np.linalg.qr(g)
    diag = np.diagonal(r).copy()
    diag[np.abs(diag) == 0.0] = 1.0
    phases = diag / np.abs(diag)
    return Subspace(q * phases.conj()[None, :])


def projection(w: Subspace) -> np.ndarray:
    """Orthogonal projection matrix basis @ basis^*."""
    return w.basis @ w.basis.conj().T


@dataclass(frozen=True)
class FusionSequence:
    """Weighted subspaces (W_i, w_i) sharing one ambient space."""

    subspaces: tuple
    weights: np.ndarray

    def __post_init__(self):
        subs = tuple(self.subspaces)
        wts = np.asarray(self.weights, dtype=np.float64).ravel()
        object.__setattr__(self, "subspaces", subs)
        object.__setattr__(self, "weights", wts)
        if len(subs) == 0:
            raise ContractViolationError("fusion sequence needs at least one block")
        if len(subs) != wts.size:
            raise ContractViolationError(
                f"{len(subs)} subspaces but {wts.size} weights"
            )
        if not np.all(np.isfinite(wts)) or np.any(wts < 0):
            raise ContractViolationError("weights must be finite and non-negative")
        n = subs[0].ambient_dim
        for i, (sub, wt) in enumerate(zip(subs, wts)):
            if sub.ambient_dim != n:
                raise ContractViolationError("subspaces live in different ambient spaces")
            if (sub.dim == 0) != (wt == 0.0):
                raise ContractViolationError(
                    f"block {i}: zero subspace and zero weight must coincide "
                    f"(dim={sub.dim}, weight={wt})"
                )

    @property
    def ambient_dim(self) -> int:
        return self.subspaces[0].ambient_dim

    @property
    def count(self) -> int:
        return len(self.subspaces)

    @property
    def dims(self):
        return tuple(s.dim for s in self.subspaces)


def fusion_analysis_ambient(f: FusionSequence) -> np.ndarray:
    """(N*n) x n stack whose i-th block is w_i P_i."""
    return np.vstack([w * projection(s) for s, w in zip(f.subspaces, f.weights)])


def fusion_synthesis_kw(f: FusionSequence) -> np.ndarray:
    """n x (sum d_i) block column [w_1 B_1 | ... | w_N B_N] on K_W coordinates."""
    return np.hstack([w * s.basis for s, w in zip(f.subspaces, f.weights)])


def fusion_frame_operator(f: FusionSequence) -> np.ndarray:
    """S = sum_i w_i^2 P_i."""
    n = f.ambient_dim
    s = np.zeros((n, n), dtype=np.complex128)
    for sub, w in zip(f.subspaces, f.weights):
        if sub.dim:
            s += (w * w) * projection(sub)
    return s


def fusion_bounds(f: FusionSequence, tol: ToleranceConfig = DEFAULT_TOL):
    """Extreme eigenvalues (alpha, beta) of the fusion frame operator."""
    w = np.linalg.eigvalsh(fusion_frame_operator(f))
    lo, hi = float(w[0]), float(w[-1])
    if lo < 0.0 and abs(lo) <= tol.eq_rel * max(1.0, hi):
        lo = 0.0
    return lo, hi


def is_fusion_frame(f: FusionSequence, tol: ToleranceConfig = DEFAULT_TOL) -> bool:
    lo, hi = fusion_bounds(f, tol)
    return lo > tol.inv_rel * hi


@dataclass(frozen=True)
class FusionClassification:
    bessel: bool
    frame: bool
    riesz_fusion_basis: bool
    lower: float
    upper: float


def classify(f: FusionSequence, tol: ToleranceConfig = DEFAULT_TOL) -> FusionClassification:
    """Bessel / frame / Riesz flags.

    In finite dimensions every fusion sequence is Bessel. The Riesz flag
    requires the subspace dimensions to sum to n with the K_W synthesis
    having full rank n.
    """
    lo, hi = fusion_bounds(f, tol)
    frame = lo > tol.inv_rel * hi
    total = sum(f.dims)
    riesz = total == f.ambient_dim and rank_tol(fusion_synthesis_kw(f), tol) == f.ambient_dim
    return FusionClassification(bessel=True, frame=frame, riesz_fusion_basis=riesz, lower=lo, upper=hi)


def excess(f: FusionSequence, tol: ToleranceConfig = DEFAULT_TOL):
    """Excess in the ambient stacked space and in K_W.

    The ambient number is N*n minus the rank of the stacked analysis
    operator (the kernel dimension of its adjoint); the K_W number is
    sum(d_i) minus the rank of the block-column synthesis.
    """
    n, big_n = f.ambient_dim, f.count
    ambient = big_n * n - rank_tol(fusion_analysis_ambient(f), tol)
    kw = sum(f.dims) - rank_tol(fusion_synthesis_kw(f), tol)
    return int(ambient), int(kw)


def scale_weights(f: FusionSequence, factors) -> FusionSequence:
    """New sequence with weights |c_i| * w_i; blocks scaled to zero are emptied."""
    factors = np.abs(np.asarray(factors, dtype=np.complex128).ravel())
    if factors.size != f.count:
        raise ContractViolationError("one scale factor per block required")
    new_w = factors * f.weights
    subs = [
        s if wt > 0.0 else Subspace.zero(f.ambient_dim)
        for s, wt in zip(f.subspaces, new_w)
    ]
    return FusionSequence(tuple(subs), new_w)


@dataclass(frozen=True)
class LocalFrameFamily:
    """Per-block vector frames spanning each nonzero subspace, with duals.

    ``frames[i]`` and ``duals[i]`` are None exactly when block i is the zero
    subspace. ``alpha``/``beta`` witness the uniform local bounds
    inf alpha_i and sup beta_i over the nonzero blocks.
    """

    frames: tuple
    duals: tuple
    alpha: float
    beta: float


def build_local_frames(
    f: FusionSequence,
    redundancy: int,
    rng: np.random.Generator,
    tol: ToleranceConfig = DEFAULT_TOL,
    min_lower: float = 0.1,
) -> LocalFrameFamily:
    """Random spanning frames of each W_i with d_i + redundancy unit vectors.

    Coefficients are complex Gaussian against the stored basis with each
    vector normalized; a block is redrawn while its local lower bound falls
    below ``min_lower`` so the family stays uniformly bounded below.
    Canonical local duals are computed within each subspace through the
    pseudoinverse of the local frame operator.
    """
    if redundancy < 0:
        raise ContractViolationError("redundancy must be non-negative")
    frames: list[Optional[VectorFrame]] = []
    duals: list[Optional[VectorFrame]] = []
    alpha, beta = np.inf, 0.0
    for sub in f.subspaces:
        d = sub.dim
        if d == 0:
            frames.append(None)
            duals.append(None)
            continue
        count = d + redundancy
        while True:
            coeff = rng.standard_normal((d, count)) + 1j * rng.standard_normal((d, count))
            coeff /= np.linalg.norm(coeff, axis=0, keepdims=True)
            local_s = coeff @ coeff.conj().T
            ev = np.linalg.eigvalsh(local_s)
            if ev[0] >= min_lower:
                break
        alpha = min(alpha, float(ev[0]))
        beta = max(beta, float(ev[-1]))
        phi = VectorFrame((sub.basis @ coeff).T)
        frames.append(phi)
        duals.append(canonical_dual_ordinary(phi, tol))
    if not np.isfinite(alpha):
        alpha = 0.0
    return LocalFrameFamily(tuple(frames), tuple(duals), alpha, beta)
