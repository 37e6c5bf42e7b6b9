"""Vector frames: bounds, duals, multipliers, inverse representation."""

import numpy as np
import pytest

from fusionframes.exceptions import ContractViolationError, NotInvertibleError
from fusionframes.frames import (
    VectorFrame,
    canonical_dual_ordinary,
    frame_bounds_ordinary,
    frame_operator,
    inverse_representation_ordinary,
    is_frame,
    ordinary_multiplier,
)
from fusionframes.numerics import DEFAULT_TOL, spectral_norm

E1 = np.array([1.0, 0.0], dtype=np.complex128)
E2 = np.array([0.0, 1.0], dtype=np.complex128)


def test_bounds_parseval():
    onb = VectorFrame(np.eye(2))
    assert frame_bounds_ordinary(onb) == pytest.approx((1.0, 1.0))


def test_bounds_redundant():
    phi = VectorFrame.from_vectors([E1, E1, E2])
    np.testing.assert_allclose(frame_operator(phi), np.diag([2.0, 1.0]))
    assert frame_bounds_ordinary(phi) == pytest.approx((1.0, 2.0))


def test_bounds_rank_deficient():
    phi = VectorFrame.from_vectors([E1])
    lo, hi = frame_bounds_ordinary(phi)
    assert lo == pytest.approx(0.0, abs=1e-15) and hi == pytest.approx(1.0)
    assert not is_frame(phi)


def test_canonical_dual_examples():
    onb = VectorFrame(np.eye(3))
    np.testing.assert_allclose(canonical_dual_ordinary(onb).vectors, np.eye(3), atol=1e-14)
    twice = VectorFrame.from_vectors([E1, E1])
    np.testing.assert_allclose(
        canonical_dual_ordinary(twice).vectors, np.array([E1 / 2, E1 / 2]), atol=1e-14
    )
    scaled = VectorFrame.from_vectors([2 * E1, E2])
    np.testing.assert_allclose(
        canonical_dual_ordinary(scaled).vectors, np.array([E1 / 2, E2]), atol=1e-14
    )


def test_canonical_dual_reconstructs_random_frames(rng):
    for _ in range(200):
        n = int(rng.integers(1, 9))
        count = int(rng.integers(n, 17))
        vecs = rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n))
        phi = VectorFrame(vecs)
        if not is_frame(phi):
            continue
        dual = canonical_dual_ordinary(phi)
        recon = ordinary_multiplier(np.ones(count), phi, dual)
        assert spectral_norm(recon - np.eye(n)) <= 1e-7


def test_multiplier_examples():
    onb = VectorFrame(np.eye(2))
    np.testing.assert_allclose(ordinary_multiplier(np.ones(2), onb, onb), np.eye(2), atol=1e-15)
    np.testing.assert_allclose(
        ordinary_multiplier([2.0, 3.0], onb, onb), np.diag([2.0, 3.0]), atol=1e-15
    )
    swapped = ordinary_multiplier(
        np.ones(2),
        VectorFrame.from_vectors([E2, E1]),
        VectorFrame.from_vectors([E1, E2]),
    )
    np.testing.assert_allclose(swapped, np.array([[0, 1], [1, 0]]), atol=1e-15)


def test_multiplier_length_mismatch():
    onb = VectorFrame(np.eye(2))
    with pytest.raises(ContractViolationError):
        ordinary_multiplier(np.ones(3), onb, onb)


def test_multiplier_sesquilinearity(rng):
    n, count = 3, 5
    synth = VectorFrame(rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n)))
    anal = VectorFrame(rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n)))
    m = rng.standard_normal(count) + 1j * rng.standard_normal(count)
    c = complex(rng.standard_normal(), rng.standard_normal())
    base = ordinary_multiplier(m, synth, anal)
    scaled_synth = ordinary_multiplier(m, VectorFrame(c * synth.vectors), anal)
    np.testing.assert_allclose(scaled_synth, c * base, atol=1e-12)
    scaled_anal = ordinary_multiplier(m, synth, VectorFrame(c * anal.vectors))
    np.testing.assert_allclose(scaled_anal, np.conj(c) * base, atol=1e-12)


def test_inverse_representation_identity_symbol():
    onb = VectorFrame(np.eye(2))
    psi, residual = inverse_representation_ordinary(np.ones(2), onb, onb)
    np.testing.assert_allclose(psi.vectors, np.eye(2), atol=1e-12)
    assert residual <= DEFAULT_TOL.eq_rel


def test_inverse_representation_diagonal_symbol():
    onb = VectorFrame(np.eye(2))
    psi, residual = inverse_representation_ordinary([2.0, 4.0], onb, onb)
    np.testing.assert_allclose(psi.vectors, np.eye(2), atol=1e-12)
    assert residual <= DEFAULT_TOL.eq_rel


def test_inverse_representation_singular_symbol():
    onb = VectorFrame(np.eye(2))
    with pytest.raises(NotInvertibleError):
        inverse_representation_ordinary([1.0, 0.0], onb, onb)


def test_inverse_representation_random_redundant(rng):
    for _ in range(10):
        n = int(rng.integers(2, 6))
        count = n + int(rng.integers(0, 3))
        phi = VectorFrame(rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n)))
        psi = VectorFrame(rng.standard_normal((count, n)) + 1j * rng.standard_normal((count, n)))
        m = np.exp(1j * rng.uniform(0, 2 * np.pi, count)) * rng.uniform(0.5, 2.0, count)
        mat = ordinary_multiplier(m, phi, psi)
        s = np.linalg.svd(mat, compute_uv=False)
        if s[-1] <= 1e-3 * s[0]:
            continue
        _, residual = inverse_representation_ordinary(m, phi, psi, rng=rng)
        assert residual <= DEFAULT_TOL.eq_rel
