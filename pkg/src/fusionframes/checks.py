"""Registry of verification checks and the suite runner.

Each check certifies one constructive statement about duals or multipliers
on a concrete instance, returning a residual that is compared against a
tolerance derived from the active ToleranceConfig. Checks draw any extra
structure they need (Riesz pairs, local frames, perturbed copies) from a
generator seeded by the instance seed and the check name, so a report is a
pure function of (instance, tolerances).
"""

from __future__ import annotations

import time
import zlib
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence

import numpy as np

from . import duality, multipliers, ovf
from .exceptions import ContractViolationError, FusionFrameError
from .fusion import (
    FusionSequence,
    build_local_frames,
    fusion_analysis_ambient,
    is_fusion_frame,
    projection,
    random_subspace,
)
from .instances import (
    Instance,
    random_invertible_matrix,
    random_partition,
    random_riesz_basis,
    random_symbol,
)
from .numerics import DEFAULT_TOL, ToleranceConfig, rank_tol, spectral_norm
from .ovf import duality_defect, embed_fusion, ovf_analysis

__all__ = ["CheckResult", "Check", "CHECKS", "SUITES", "run_suite", "describe_check"]


@dataclass
class CheckResult:
    residual: float
    indeterminate: bool = False
    detail: str = ""


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    anchor: str
    tolerance: Callable[[ToleranceConfig], float]
    tolerance_desc: str
    applies: Callable[[Instance, ToleranceConfig], bool]
    run: Callable[[Instance, np.random.Generator, ToleranceConfig], CheckResult]


def _always(inst: Instance, tol: ToleranceConfig) -> bool:
    return True


def _w_frame(inst: Instance, tol: ToleranceConfig) -> bool:
    return is_fusion_frame(inst.w, tol)


def _both_frames(inst: Instance, tol: ToleranceConfig) -> bool:
    return is_fusion_frame(inst.w, tol) and is_fusion_frame(inst.v, tol)


def _invertible_multiplier(inst: Instance, tol: ToleranceConfig) -> bool:
    return multipliers.assemble_multiplier(inst.symbol, inst.v, inst.w, tol).invertible


def _c_holding_invertible(inst: Instance, tol: ToleranceConfig) -> bool:
    return (
        _both_frames(inst, tol)
        and multipliers.condition_c(inst.symbol, tol).holds
        and _invertible_multiplier(inst, tol)
    )


# --- duals suite -----------------------------------------------------------


def _run_canonical_dual(inst, rng, tol):
    cand = ovf.canonical_ov_dual(embed_fusion(inst.w), tol)
    return CheckResult(duality_defect(cand))


def _run_sampled_duals(inst, rng, tol):
    a = embed_fusion(inst.w)
    t = ovf_analysis(a)
    worst = 0.0
    for _ in range(5):
        g = rng.standard_normal(t.shape) + 1j * rng.standard_normal(t.shape)
        worst = max(worst, duality_defect(ovf.sample_ov_dual(a, g, tol)))
    return CheckResult(worst)


def _run_dual_span(inst, rng, tol):
    a = embed_fusion(inst.w)
    want = a.count * a.codomain_dim
    got = ovf.dual_span_dimension(a, tol)
    return CheckResult(float(abs(got - want)), detail=f"rank {got}, expected {want}")


def _run_null_certificate(inst, rng, tol):
    return CheckResult(float(ovf.null_bessel_certificate(embed_fusion(inst.w), tol)))


def _run_left_inverse_span(inst, rng, tol):
    a = embed_fusion(inst.w)
    t_w = fusion_analysis_ambient(inst.w)
    eye = np.eye(inst.w.ambient_dim)
    worst = 0.0
    analyses = []
    for cand in ovf.spanning_dual_family(a, tol):
        worst = max(worst, spectral_norm(cand.analysis.conj().T @ t_w - eye))
        analyses.append(cand.analysis)
    rank = rank_tol(np.hstack(analyses), tol)
    want = a.count * a.codomain_dim
    return CheckResult(max(worst, float(abs(rank - want))))


def _run_kpp_construction(inst, rng, tol):
    n = inst.w.ambient_dim
    u = random_invertible_matrix(n, rng)
    l = duality.random_annihilating_ovf(inst.w, rng, tol)
    gd = duality.generate_fusion_dual(inst.w, u, l, tol)
    residual = spectral_norm(gd.composite - u) / max(1.0, spectral_norm(u))
    adm = duality.is_admissible(gd.q, gd.v, inst.w, tol)
    if not adm.admissible:
        residual = max(residual, 1.0)
    return CheckResult(residual)


def _run_kpp_verdict(inst, rng, tol):
    n = inst.w.ambient_dim
    l = duality.random_annihilating_ovf(inst.w, rng, tol)
    gd = duality.generate_fusion_dual(inst.w, np.eye(n), l, tol)
    verdict = duality.kpp_dual_check(gd.v, inst.w, gd.q, tol)
    residual = verdict.residual_to_identity
    if verdict.kind != "dual":
        residual = max(residual, 1.0)
    return CheckResult(residual, detail=f"kind={verdict.kind}")


def _run_gavruta_canonical(inst, rng, tol):
    dual = duality.canonical_gavruta_dual(inst.w, tol)
    return CheckResult(duality.gavruta_dual_check(dual, inst.w, tol))


def _run_separating_self(inst, rng, tol):
    res = duality.find_separating_dual(inst.w, inst.w, tol=tol)
    residual = res.block_deviation
    if res.witness is not None:
        residual = max(residual, 1.0)
    return CheckResult(residual, detail=f"checked {res.checked} duals")


def _perturbed_copy(w: FusionSequence, rng, tol) -> FusionSequence:
    """A fusion frame differing from w by at least 0.1 in some block."""
    while True:
        idx = int(rng.integers(0, w.count))
        if w.weights[idx] == 0.0:
            continue
        if rng.random() < 0.5:
            weights = w.weights.copy()
            weights[idx] *= 2.0
            cand = FusionSequence(w.subspaces, weights)
        else:
            subs = list(w.subspaces)
            subs[idx] = random_subspace(w.ambient_dim, subs[idx].dim, rng)
            cand = FusionSequence(tuple(subs), w.weights.copy())
        deviation = max(
            spectral_norm(
                w.weights[i] * projection(w.subspaces[i])
                - cand.weights[i] * projection(cand.subspaces[i])
            )
            for i in range(w.count)
        )
        if deviation >= 0.1 and is_fusion_frame(cand, tol):
            return cand


def _run_separating_distinct(inst, rng, tol):
    other = _perturbed_copy(inst.w, rng, tol)
    res = duality.find_separating_dual(inst.w, other, tol=tol)
    ok = res.witness is not None
    return CheckResult(
        0.0 if ok else 1.0,
        detail=f"deviation {res.block_deviation:.3f}, checked {res.checked}",
    )


# --- multipliers suite -----------------------------------------------------


def _run_norm_bound(inst, rng, tol):
    rep = multipliers.assemble_multiplier(inst.symbol, inst.v, inst.w, tol)
    excessive = max(0.0, rep.sigma_max - rep.norm_bound)
    return CheckResult(excessive / max(1.0, rep.norm_bound))


def _run_assembly_routes(inst, rng, tol):
    rep = multipliers.assemble_multiplier(inst.symbol, inst.v, inst.w, tol)
    t_v = fusion_analysis_ambient(inst.v)
    t_w = fusion_analysis_ambient(inst.w)
    route = t_v.conj().T @ multipliers.block_diag_apply(inst.symbol) @ t_w
    residual = spectral_norm(rep.matrix - route) / max(1.0, spectral_norm(rep.matrix))
    return CheckResult(residual)


def _run_condition_c_coherence(inst, rng, tol):
    rep = multipliers.condition_c(inst.symbol, tol)
    if not rep.holds:
        return CheckResult(0.0, detail="two-sided bound does not hold; nothing to certify")
    residual = 0.0
    if not rep.semi_normalized:
        residual = 1.0
    min_m = float(np.min(np.abs(inst.symbol.m)))
    residual = max(residual, max(0.0, rep.lower_witness - min_m) / max(1.0, rep.lower_witness))
    inv_blocks = multipliers.inverse_symbol_blocks(inst.symbol, tol)
    eye = np.eye(inst.symbol.dim)
    for i in range(inst.symbol.count):
        defect = spectral_norm(inst.symbol.m[i] * inst.symbol.r[i] @ inv_blocks[i] - eye)
        residual = max(residual, defect)
    return CheckResult(residual)


def _riesz_pair(inst, rng):
    # matched per-index dimensions: otherwise the blockwise compression is
    # rectangular and the multiplier is singular for structural reasons
    n = inst.w.ambient_dim
    count = min(inst.w.count, n)
    dims = random_partition(n, count, rng)
    w = random_riesz_basis(n, rng, dims=dims)
    v = random_riesz_basis(n, rng, dims=dims)
    return w, v, count


def _run_riesz_symbol_iff(inst, rng, tol):
    n = inst.w.ambient_dim
    w, v, count = _riesz_pair(inst, rng)
    mode = inst.symbol_mode if inst.symbol_mode != "identity" else "random_C_holding"
    sym = random_symbol(mode, n, count, rng, tol)
    verdict = multipliers.riesz_multiplier_verdict(sym, v, w, tol)
    detail = (
        f"predicted {verdict.predicted_by_c}, actual {verdict.actually_invertible}, "
        f"gamma {verdict.gamma:.3e}"
    )
    return CheckResult(
        0.0 if verdict.consistent else 1.0,
        indeterminate=verdict.indeterminate,
        detail=detail,
    )


def _run_invertible_consequences(inst, rng, tol):
    rep = multipliers.invertible_multiplier_consequences(inst.symbol, inst.v, inst.w, tol)
    ok = rep.all_frames and rep.lower_bound_ok
    detail = f"reweighted lower bound {rep.bounds_w_scaled[0]:.3e} vs {rep.lower_bound_rhs:.3e}"
    return CheckResult(0.0 if ok else 1.0, detail=detail)


def _run_excess_invariance(inst, rng, tol):
    rep = multipliers.invertible_multiplier_consequences(inst.symbol, inst.v, inst.w, tol)
    mismatch = 0.0
    if rep.excess_w_preserved is not None:
        mismatch += abs(rep.excess_w - rep.excess_w_scaled)
        mismatch += abs(rep.excess_v - rep.excess_v_scaled)
    if rep.excess_pair_equal is not None:
        mismatch += abs(rep.excess_w - rep.excess_v)
    return CheckResult(float(mismatch))


def _sampled_v_duals(inst, rng, tol, count=5):
    a_v = embed_fusion(inst.v)
    t = ovf_analysis(a_v)
    duals = [ovf.canonical_ov_dual(a_v, tol)]
    for _ in range(count - 1):
        g = rng.standard_normal(t.shape) + 1j * rng.standard_normal(t.shape)
        duals.append(ovf.sample_ov_dual(a_v, g, tol))
    return duals


def _run_inverse_representation(inst, rng, tol):
    duals = _sampled_v_duals(inst, rng, tol)
    rep = multipliers.inverse_multiplier_representation(
        inst.symbol, inst.v, inst.w, duals, tol, rng=rng
    )
    return CheckResult(max(rep.duality_residual, rep.representation_residual))


def _run_inverse_uniqueness(inst, rng, tol):
    duals = _sampled_v_duals(inst, rng, tol)
    rep = multipliers.inverse_multiplier_representation(
        inst.symbol, inst.v, inst.w, duals, tol, rng=rng
    )
    shortfall = max(0.0, (1e-4 - rep.probe_residual) / 1e-4)
    return CheckResult(shortfall, detail=f"probe residual {rep.probe_residual:.3e}")


def _run_contrast(inst, rng, tol):
    from .instances import cross_swap_instance

    cross = cross_swap_instance()
    ones = np.ones(2)
    swap = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=np.complex128)
    proj = multipliers.projection_composition_multiplier(ones, cross.v, cross.w)
    gav = multipliers.gavruta_multiplier(ones, cross.v, cross.w, tol)
    sym = multipliers.assemble_multiplier(cross.symbol, cross.v, cross.w, tol).matrix
    residual = max(spectral_norm(proj), spectral_norm(gav), spectral_norm(sym - swap))
    return CheckResult(residual)


# --- local suite -----------------------------------------------------------


def _local_family(inst, rng, tol, redundancy=None):
    if inst.local is not None:
        return inst.local
    if redundancy is None:
        redundancy = int(rng.integers(0, 4))
    return build_local_frames(inst.w, redundancy, rng, tol)


def _run_local_equivalence(inst, rng, tol):
    family = _local_family(inst, rng, tol)
    residual = multipliers.local_frame_equivalence(inst.symbol, inst.v, inst.w, family, tol)
    return CheckResult(residual)


def _run_local_negative(inst, rng, tol):
    family = build_local_frames(inst.w, 1 + int(rng.integers(0, 3)), rng, tol)
    from .fusion import LocalFrameFamily

    broken = LocalFrameFamily(family.frames, family.frames, family.alpha, family.beta)
    residual = multipliers.local_frame_equivalence(inst.symbol, inst.v, inst.w, broken, tol)
    shortfall = max(0.0, (1e-3 - residual) / 1e-3)
    return CheckResult(shortfall, detail=f"control residual {residual:.3e}")


# --- schatten suite --------------------------------------------------------


def _run_schatten_blocks(inst, rng, tol):
    rep = multipliers.schatten_checks(inst.symbol, inst.v, inst.w, 2.0, tol)
    return CheckResult(rep.block_sval_defect)


def _run_schatten_composite(inst, rng, tol):
    worst = 0.0
    for p in (1.0, 2.0, 4.0):
        rep = multipliers.schatten_checks(inst.symbol, inst.v, inst.w, p, tol)
        worst = max(
            worst,
            max(0.0, rep.composite_norm - rep.composite_bound) / max(1.0, rep.composite_bound),
        )
    return CheckResult(worst)


def _run_schatten_rank(inst, rng, tol):
    worst = 0.0
    for p in (1.0, 2.0, 4.0):
        rep = multipliers.schatten_checks(inst.symbol, inst.v, inst.w, p, tol)
        worst = max(
            worst, max(0.0, rep.block_power - rep.rank_bound) / max(1.0, rep.rank_bound)
        )
    return CheckResult(worst)


# --- registry --------------------------------------------------------------


def _eq(tol: ToleranceConfig) -> float:
    return tol.eq_rel


def _exact(tol: ToleranceConfig) -> float:
    return 0.0


_RAW_CHECKS = [
    # duals
    (
        "ovf_canonical_dual",
        "duals",
        "The canonical operator-valued dual reconstructs: T_dual(0)^* T_A = I.",
        "T_dual(0) = T_A S_A^-1, T_dual(0)^* T_A = I",
        _eq,
        "eq_rel",
        _w_frame,
        _run_canonical_dual,
    ),
    (
        "ovf_sampled_duals",
        "duals",
        "Every kernel-perturbed dual reconstructs: T_dual(L)^* T_A = I for L = P_ker(T_A^*) G.",
        "T_dual(L) = T_A S_A^-1 + L with L^* T_A = 0",
        _eq,
        "eq_rel",
        _w_frame,
        _run_sampled_duals,
    ),
    (
        "dual_span",
        "duals",
        "The analysis ranges of the dual family jointly span the stacked space.",
        "rank[T_A S_A^-1 | P_ker(T_A^*) E_rs] = N*k",
        _exact,
        "exact (rank at rank_rel)",
        _w_frame,
        _run_dual_span,
    ),
    (
        "null_dual_certificate",
        "duals",
        "Only the zero sequence is orthogonal to every member of the dual family.",
        "T_B^* T_dual(L_t) = 0 for all t forces B = 0",
        _exact,
        "exact (nullity at rank_rel)",
        _w_frame,
        _run_null_certificate,
    ),
    (
        "left_inverse_span",
        "duals",
        "Each dual synthesis left-inverts the fusion analysis operator and "
        "their adjoint ranges exhaust the stacked space.",
        "T_D^* T_W,w = I and rank[stacked T_D] = N*n",
        _eq,
        "eq_rel",
        _w_frame,
        _run_left_inverse_span,
    ),
    (
        "kpp_construction",
        "duals",
        "The constructive dual generator reproduces its target operator.",
        "sum_i w_i u_i P_{V_i} Q_i P_{W_i} = U for A_i = (w_i U S_W^-1 + L_i^*) P_{W_i}",
        _eq,
        "eq_rel (relative to ||U||)",
        _w_frame,
        _run_kpp_construction,
    ),
    (
        "kpp_verdict_dual",
        "duals",
        "With identity target the generated pair passes the duality check with kind 'dual'.",
        "T_V,u^* D_Q T_W,w = I with Q admissible",
        _eq,
        "eq_rel",
        _w_frame,
        _run_kpp_verdict,
    ),
    (
        "gavruta_canonical",
        "duals",
        "The S^-1-image sequence with the same weights reconstructs the identity.",
        "sum_i w_i^2 P_{S^-1 W_i} S_W^-1 P_{W_i} = I",
        _eq,
        "eq_rel",
        _w_frame,
        _run_gavruta_canonical,
    ),
    (
        "separating_dual_self",
        "duals",
        "No dual of W separates W from itself.",
        "all duals of W reconstruct W; blockwise deviation stays near zero",
        lambda tol: 100.0 * tol.eq_rel,
        "100 * eq_rel",
        _w_frame,
        _run_separating_self,
    ),
    (
        "separating_dual_distinct",
        "duals",
        "A genuinely different fusion frame is separated by some dual of W.",
        "w_i P_i != w'_i P'_i for some i implies a dual of W fails on W'",
        _exact,
        "witness required",
        _w_frame,
        _run_separating_distinct,
    ),
    # multipliers
    (
        "multiplier_norm_bound",
        "multipliers",
        "The multiplier norm is controlled by the bounds and the symbol.",
        "||M|| <= sqrt(beta_V beta_W) ||m||_inf ||R||_inf",
        _eq,
        "eq_rel",
        _always,
        _run_norm_bound,
    ),
    (
        "multiplier_assembly_routes",
        "multipliers",
        "Blockwise assembly agrees with the analysis/block-diagonal/synthesis route.",
        "sum_i m_i u_i w_i P_V R_i P_W = T_V,u^* D_mR T_W,w",
        _eq,
        "eq_rel",
        _always,
        _run_assembly_routes,
    ),
    (
        "condition_c_coherence",
        "multipliers",
        "The two-sided symbol bound forces semi-normalization and blockwise inverses.",
        "gamma <= |m_i| ||R||_inf and (m_i R_i)(m_i R_i)^-1 = I",
        _eq,
        "eq_rel",
        _always,
        _run_condition_c_coherence,
    ),
    (
        "riesz_symbol_iff",
        "multipliers",
        "Over Riesz decompositions, invertibility of the multiplier matches the "
        "symbol verdict; near-cutoff symbols are flagged indeterminate.",
        "M invertible <-> two-sided symbol bound (on Riesz pairs)",
        _exact,
        "consistency required",
        _always,
        _run_riesz_symbol_iff,
    ),
    (
        "invertible_multiplier_frames",
        "multipliers",
        "An invertible multiplier forces all four weighted sequences to be frames, "
        "with a quantified reweighted lower bound.",
        "alpha(W,|m|w) >= 1/(beta_V ||R||_inf^2 ||M^-1||^2)",
        _exact,
        "boolean with 1e-6 slack in the bound",
        lambda inst, tol: _both_frames(inst, tol) and _invertible_multiplier(inst, tol),
        _run_invertible_consequences,
    ),
    (
        "excess_invariance",
        "multipliers",
        "Stacked-space excess is preserved under |m|-reweighting and shared "
        "across the pair under the symbol bound.",
        "dim ker T^* invariant under semi-normalized reweighting",
        _exact,
        "exact integers",
        lambda inst, tol: _both_frames(inst, tol) and _invertible_multiplier(inst, tol),
        _run_excess_invariance,
    ),
    (
        "inverse_multiplier_dual",
        "multipliers",
        "The closed-form operator-valued dual represents the inverse multiplier "
        "through every sampled dual of {u_i P_{V_i}}.",
        "M^-1 = T_Qd^* D_(mR)^-1 T_D for every dual D",
        _eq,
        "eq_rel",
        _c_holding_invertible,
        _run_inverse_representation,
    ),
    (
        "inverse_multiplier_uniqueness",
        "multipliers",
        "Perturbing the closed-form dual in a kernel direction breaks the "
        "inverse representation.",
        "perturbed Qd violates the representation by >= 1e-4 relative",
        _exact,
        "probe >= 1e-4",
        _c_holding_invertible,
        _run_inverse_uniqueness,
    ),
    (
        "symbol_vs_projection_contrast",
        "multipliers",
        "On the crossed pair the projection-composition and S^-1-weighted "
        "multipliers vanish while the rank-one symbol multiplier is the swap.",
        "sum P_V P_W = 0, sum P_V S^-1 P_W = 0, sum P_V R_i P_W = swap",
        lambda tol: 1e-12,
        "1e-12 absolute",
        _always,
        _run_contrast,
    ),
    # local
    (
        "local_equivalence",
        "local",
        "The fusion multiplier equals its lift through local frames and their "
        "canonical duals.",
        "M = ordinary multiplier of {w_i phi_ij} against {u_i P_V R_i dual_ij}",
        _eq,
        "eq_rel (relative)",
        _both_frames,
        _run_local_equivalence,
    ),
    (
        "local_negative_control",
        "local",
        "Replacing the local duals by the frames themselves breaks the lift.",
        "non-dual local synthesis must deviate by >= 1e-3",
        _exact,
        "control >= 1e-3",
        _both_frames,
        _run_local_negative,
    ),
    # schatten
    (
        "schatten_block_svals",
        "schatten",
        "The block diagonal has exactly the union of the per-block singular values.",
        "svals(D_mR) = union_i svals(m_i R_i)",
        _eq,
        "eq_rel",
        _always,
        _run_schatten_blocks,
    ),
    (
        "schatten_composite_bound",
        "schatten",
        "Schatten norms of the multiplier are controlled through the block diagonal.",
        "||M||_p <= ||T_V|| ||T_W|| ||D_mR||_p for p in {1, 2, 4}",
        _eq,
        "eq_rel",
        _always,
        _run_schatten_composite,
    ),
    (
        "schatten_rank_bound",
        "schatten",
        "Block ranks bound the Schatten mass of the block diagonal.",
        "||D_mR||_p^p <= sum_i rank(R_i) |m_i|^p ||R_i||^p",
        _eq,
        "eq_rel",
        _always,
        _run_schatten_rank,
    ),
]


CHECKS: Dict[str, Check] = {}
SUITES: Dict[str, List[str]] = {"duals": [], "multipliers": [], "local": [], "schatten": []}
for name, suite, statement, anchor, tol_fn, tol_desc, applies, runner in _RAW_CHECKS:
    CHECKS[name] = Check(
        name=name,
        statement=statement,
        anchor=anchor,
        tolerance=tol_fn,
        tolerance_desc=tol_desc,
        applies=applies,
        run=runner,
    )
    SUITES[suite].append(name)
SUITES["all"] = [name for names in (SUITES[s] for s in ("duals", "multipliers", "local", "schatten")) for name in names]


def _check_rng(seed: int, name: str) -> np.random.Generator:
    return np.random.default_rng(
        np.random.SeedSequence([int(seed), zlib.crc32(name.encode("utf-8"))])
    )


def run_suite(
    suite: str,
    instances: Sequence[Instance],
    tol: ToleranceConfig = DEFAULT_TOL,
    base_seed: int = 0,
) -> dict:
    """Run every applicable check of a suite over the instances.

    Entries are ordered by trial index then registry order. The report is a
    plain dict matching the ffv1-report schema; wall_time is the only
    non-deterministic field.
    """
    if suite not in SUITES:
        raise ContractViolationError(f"unknown suite {suite!r}")
    start = time.monotonic()
    entries = []
    for trial, inst in enumerate(instances):
        for name in SUITES[suite]:
            check = CHECKS[name]
            if not check.applies(inst, tol):
                continue
            tol_value = float(check.tolerance(tol))
            try:
                result = check.run(inst, _check_rng(inst.seed, name), tol)
            except (FusionFrameError, np.linalg.LinAlgError) as exc:
                # an aborted check is a failed check, not a crashed report
                result = CheckResult(residual=1e300, detail=f"aborted: {exc}")
            if result.indeterminate:
                verdict = "indeterminate"
            else:
                verdict = "pass" if result.residual <= tol_value else "fail"
            entries.append(
                {
                    "name": name,
                    "trial": trial,
                    "anchor": check.anchor,
                    "residual": float(result.residual),
                    "tolerance": tol_value,
                    "verdict": verdict,
                }
            )
    summary = {
        "pass": sum(1 for e in entries if e["verdict"] == "pass"),
        "fail": sum(1 for e in entries if e["verdict"] == "fail"),
        "indeterminate": sum(1 for e in entries if e["verdict"] == "indeterminate"),
    }
    return {
        "schema": "ffv1-report",
        "suite": suite,
        "seed": int(base_seed),
        "checks": entries,
        "summary": summary,
        "wall_time": time.monotonic() - start,
    }


def describe_check(name: str) -> str:
    check = CHECKS[name]
    return (
        f"{check.name}\n"
        f"  statement: {check.statement}\n"
        f"  identity:  {check.anchor}\n"
        f"  tolerance: {check.tolerance_desc}\n"
    )
