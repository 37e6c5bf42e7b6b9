"""Fusion-frame duality through admissible operator sequences.

A Bessel fusion sequence (V, u) is a dual of the fusion frame (W, w) when
some admissible sequence Q makes the composite

    T_V,u^*  D_Q  T_W,w  =  sum_i u_i w_i P_{V_i} Q_i P_{W_i}

equal to the identity (generalized dual: merely invertible). Admissibility
pins Q_i to act from W_i into V_i with unit norm off the zero-index set.
This module checks the definition for a given Q, checks the classical
S^-1-weighted reconstruction, constructs duals from an invertible target
operator, and searches the operator-valued dual family for a dual that
separates two fusion frames.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .exceptions import ContractViolationError, NotAFrameError
from .fusion import (
    FusionSequence,
    Subspace,
    fusion_analysis_ambient,
    fusion_frame_operator,
    fusion_synthesis_kw,
    is_fusion_frame,
    projection,
)
from .numerics import (
    DEFAULT_TOL,
    ToleranceConfig,
    as_matrix,
    inverse,
    rank_tol,
    singular_values,
    spectral_norm,
    svd,
)
from .ovf import (
    DualCandidate,
    OVFrame,
    embed_fusion,
    kernel_projector,
    ovf_analysis,
    spanning_dual_family,
)

__all__ = [
    "index_zero_set",
    "AdmissibilityReport",
    "is_admissible",
    "DualVerdict",
    "kpp_dual_check",
    "gavruta_dual_check",
    "canonical_gavruta_dual",
    "hmbz_dual_check",
    "GeneratedDual",
    "random_annihilating_ovf",
    "generate_fusion_dual",
    "fusion_dual_to_ovf",
    "SeparationResult",
    "find_separating_dual",
]


def index_zero_set(v: FusionSequence, w: FusionSequence) -> frozenset:
    """Indices where either sequence has a zero block."""
    if v.count != w.count:
        raise ContractViolationError(
            f"sequences have different lengths: {v.count} and {w.count}"
        )
    return frozenset(
        i for i in range(v.count) if v.weights[i] == 0.0 or w.weights[i] == 0.0
    )


@dataclass(frozen=True)
class AdmissibilityReport:
    """Outcome of the three per-index admissibility conditions.

    Each row of ``defects`` is (kernel_defect, range_defect, norm_defect)
    for one index; unconstrained indices (inside the zero-index set) carry
    zeros.
    """

    admissible: bool
    defects: tuple


def is_admissible(
    q_blocks,
    v: FusionSequence,
    w: FusionSequence,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> AdmissibilityReport:
    """Check W_i-perp in ker(Q_i), ran(Q_i) in V_i, and ||Q_i|| = 1 off I_0."""
    q = np.asarray(q_blocks, dtype=np.complex128)
    if q.ndim != 3 or q.shape[0] != v.count or q.shape[1:] != (v.ambient_dim,) * 2:
        raise ContractViolationError(
            f"expected {v.count} square blocks of size {v.ambient_dim}, got shape {q.shape}"
        )
    zero_set = index_zero_set(v, w)
    rows = []
    ok = True
    for i in range(v.count):
        if i in zero_set:
            rows.append((0.0, 0.0, 0.0))
            continue
        qi = q[i]
        norm_q = spectral_norm(qi)
        kernel_defect = spectral_norm(qi @ projection(w.subspaces[i]) - qi)
        range_defect = spectral_norm(projection(v.subspaces[i]) @ qi - qi)
        norm_defect = abs(norm_q - 1.0)
        rows.append((kernel_defect, range_defect, norm_defect))
        bound = tol.eq_rel * max(1.0, norm_q)
        if kernel_defect > bound or range_defect > bound or norm_defect > bound:
            ok = False
    return AdmissibilityReport(admissible=ok, defects=tuple(rows))


@dataclass(frozen=True)
class DualVerdict:
    """Verdict for a given admissible candidate Q.

    kind is "dual" when the composite is the identity at tolerance,
    "generalized_dual" when it is merely invertible, and "none" otherwise
    (including inadmissible Q, whose diagnostics are attached).
    """

    kind: str
    composite: np.ndarray
    sigma_min: float
    sigma_max: float
    residual_to_identity: float
    admissibility: AdmissibilityReport


def _composite(v: FusionSequence, w: FusionSequence, q: np.ndarray) -> np.ndarray:
    n = v.ambient_dim
    out = np.zeros((n, n), dtype=np.complex128)
    for i in range(v.count):
        coeff = v.weights[i] * w.weights[i]
        if coeff == 0.0:
            continue
        out += coeff * (projection(v.subspaces[i]) @ q[i] @ projection(w.subspaces[i]))
    return out


def kpp_dual_check(
    v: FusionSequence,
    w: FusionSequence,
    q_blocks,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> DualVerdict:
    """Assemble the composite for Q and classify it."""
    q = np.asarray(q_blocks, dtype=np.complex128)
    report = is_admissible(q, v, w, tol)
    comp = _composite(v, w, q)
    s = singular_values(comp)
    sigma_max = float(s[0]) if s.size else 0.0
    sigma_min = float(s[-1]) if s.size else 0.0
    residual = spectral_norm(comp - np.eye(v.ambient_dim))
    if not report.admissible:
        kind = "none"
    elif residual <= tol.eq_rel:
        kind = "dual"
    elif sigma_min > tol.inv_rel * sigma_max:
        kind = "generalized_dual"
    else:
        kind = "none"
    return DualVerdict(
        kind=kind,
        composite=comp,
        sigma_min=sigma_min,
        sigma_max=sigma_max,
        residual_to_identity=residual,
        admissibility=report,
    )


def gavruta_dual_check(
    v: FusionSequence,
    w: FusionSequence,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> float:
    """Normalized residual of sum_i w_i u_i P_{V_i} S_W^-1 P_{W_i} = I."""
    if v.count != w.count:
        raise ContractViolationError("sequences have different lengths")
    if not is_fusion_frame(w, tol):
        raise NotAFrameError("reconstruction requires the analyzed sequence to be a frame")
    n = w.ambient_dim
    s_inv = inverse(fusion_frame_operator(w), tol)
    comp = np.zeros((n, n), dtype=np.complex128)
    for i in range(w.count):
        coeff = w.weights[i] * v.weights[i]
        if coeff == 0.0:
            continue
        comp += coeff * (projection(v.subspaces[i]) @ s_inv @ projection(w.subspaces[i]))
    return float(np.linalg.norm(comp - np.eye(n)) / np.sqrt(n))


def canonical_gavruta_dual(
    w: FusionSequence, tol: ToleranceConfig = DEFAULT_TOL
) -> FusionSequence:
    """The classical dual (S_W^-1 W_i, w_i)."""
    if not is_fusion_frame(w, tol):
        raise NotAFrameError("canonical dual requires a fusion frame")
    s_inv = inverse(fusion_frame_operator(w), tol)
    subs = [
        Subspace.span(s_inv @ sub.basis, tol) if sub.dim else Subspace.zero(w.ambient_dim)
        for sub in w.subspaces
    ]
    return FusionSequence(tuple(subs), w.weights.copy())


def hmbz_dual_check(
    v: FusionSequence,
    w: FusionSequence,
    q_kw,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> float:
    """Residual of T_V^* Q T_W = I for a given K_W -> K_V coordinate operator."""
    q = as_matrix(q_kw)
    synth_v = fusion_synthesis_kw(v)
    synth_w = fusion_synthesis_kw(w)
    if q.shape != (synth_v.shape[1], synth_w.shape[1]):
        raise ContractViolationError(
            f"coordinate operator must be {synth_v.shape[1]} x {synth_w.shape[1]}, got {q.shape}"
        )
    comp = synth_v @ q @ synth_w.conj().T
    return spectral_norm(comp - np.eye(v.ambient_dim))


@dataclass(frozen=True)
class GeneratedDual:
    """Output of the constructive dual generator."""

    v: FusionSequence
    q: np.ndarray
    composite: np.ndarray
    operators: np.ndarray


def random_annihilating_ovf(
    w: FusionSequence,
    rng: np.random.Generator,
    tol: ToleranceConfig = DEFAULT_TOL,
    scale: float = 1.0,
) -> OVFrame:
    """Random operator sequence L with T_L^* T_W,w = 0, for dual generation."""
    n = w.ambient_dim
    a = embed_fusion(w)
    g = rng.standard_normal((w.count * n, n)) + 1j * rng.standard_normal((w.count * n, n))
    stacked = kernel_projector(a, tol) @ (scale * g)
    return OVFrame(stacked.reshape(w.count, n, n))


def generate_fusion_dual(
    w: FusionSequence,
    u,
    l: Optional[OVFrame] = None,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> GeneratedDual:
    """Construct a (generalized) dual of W whose composite equals U.

    Builds A_i = (w_i U S_W^-1 + L_i^*) P_{W_i}, then takes V_i as the range
    of A_i, u_i = ||A_i||, and Q_i = A_i / u_i. The returned Q is admissible
    by construction and the composite reproduces U; with U = I the output
    passes :func:`kpp_dual_check` with kind "dual".
    """
    if not is_fusion_frame(w, tol):
        raise NotAFrameError("dual generation requires a fusion frame")
    n = w.ambient_dim
    u = as_matrix(u)
    if u.shape != (n, n):
        raise ContractViolationError(f"target operator must be {n} x {n}, got {u.shape}")
    su = singular_values(u)
    if su[0] == 0.0 or su[-1] <= tol.inv_rel * su[0]:
        raise ContractViolationError("target operator must be invertible at tolerance")
    if l is None:
        l_blocks = np.zeros((w.count, n, n), dtype=np.complex128)
    else:
        if l.blocks.shape != (w.count, n, n):
            raise ContractViolationError(
                f"annihilating sequence must have shape {(w.count, n, n)}, got {l.blocks.shape}"
            )
        t_w = fusion_analysis_ambient(w)
        t_l = ovf_analysis(l)
        defect = spectral_norm(t_l.conj().T @ t_w)
        if defect > tol.eq_rel * max(1.0, spectral_norm(t_l) * spectral_norm(t_w)):
            raise ContractViolationError(
                f"sequence does not annihilate the analysis operator (defect {defect:.3e})"
            )
        l_blocks = l.blocks
    s_inv = inverse(fusion_frame_operator(w), tol)
    subs, weights, q_blocks, ops = [], [], [], []
    for i in range(w.count):
        a_i = (w.weights[i] * (u @ s_inv) + l_blocks[i].conj().T) @ projection(w.subspaces[i])
        ops.append(a_i)
        if rank_tol(a_i, tol) == 0:
            subs.append(Subspace.zero(n))
            weights.append(0.0)
            q_blocks.append(np.zeros((n, n), dtype=np.complex128))
            continue
        uu, ss, _ = svd(a_i)
        r = rank_tol(a_i, tol)
        subs.append(Subspace(uu[:, :r]))
        nrm = float(ss[0])
        weights.append(nrm)
        q_blocks.append(a_i / nrm)
    if all(wt == 0.0 for wt in weights):
        raise ContractViolationError("degenerate construction: every operator collapsed to zero")
    v = FusionSequence(tuple(subs), np.asarray(weights))
    q = np.array(q_blocks)
    comp = _composite(v, w, q)
    return GeneratedDual(v=v, q=q, composite=comp, operators=np.array(ops))


def fusion_dual_to_ovf(v: FusionSequence, q_blocks) -> OVFrame:
    """The operator-valued sequence {u_i Q_i^*} attached to a dual (V, u, Q)."""
    q = np.asarray(q_blocks, dtype=np.complex128)
    if q.ndim != 3 or q.shape[0] != v.count:
        raise ContractViolationError("one square block per index required")
    return OVFrame(
        np.array([v.weights[i] * q[i].conj().T for i in range(v.count)])
    )


@dataclass(frozen=True)
class SeparationResult:
    """Outcome of the separating-dual sweep.

    ``witness`` is the first dual of W whose reconstruction of W' fails, or
    None when the whole family also reconstructs W'. ``block_deviation`` is
    max_i ||w_i P_i - w'_i P'_i||.
    """

    witness: Optional[DualCandidate]
    residual: float
    block_deviation: float
    checked: int


def find_separating_dual(
    w: FusionSequence,
    w_prime: FusionSequence,
    trials_bound: int | None = None,
    tol: ToleranceConfig = DEFAULT_TOL,
) -> SeparationResult:
    """Sweep the dual family of W for a dual that is not a dual of W'.

    The deterministic sweep tries the canonical dual first, then the
    elementary-matrix kernel perturbations in row-major order. A candidate
    separates when ||T_D^* T_{W'} - I|| exceeds 10 * eq_rel. When no
    candidate separates, the two sequences agree blockwise up to tolerance.
    """
    if w.count != w_prime.count or w.ambient_dim != w_prime.ambient_dim:
        raise ContractViolationError("sequences must share length and ambient dimension")
    if not is_fusion_frame(w, tol) or not is_fusion_frame(w_prime, tol):
        raise NotAFrameError("separating-dual search requires two fusion frames")
    deviation = max(
        spectral_norm(
            w.weights[i] * projection(w.subspaces[i])
            - w_prime.weights[i] * projection(w_prime.subspaces[i])
        )
        for i in range(w.count)
    )
    a = embed_fusion(w)
    t_prime = fusion_analysis_ambient(w_prime)
    eye = np.eye(w.ambient_dim)
    threshold = 10.0 * tol.eq_rel
    worst = 0.0
    checked = 0
    for cand in spanning_dual_family(a, tol, limit=trials_bound):
        checked += 1
        residual = spectral_norm(cand.analysis.conj().T @ t_prime - eye)
        if residual > threshold:
            return SeparationResult(
                witness=cand, residual=residual, block_deviation=deviation, checked=checked
            )
        worst = max(worst, residual)
    return SeparationResult(
        witness=None, residual=worst, block_deviation=deviation, checked=checked
    )
