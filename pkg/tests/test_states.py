import numpy as np
import pytest
from hypothesis import given, strategies as st

from decolab import states


def test_ghz_entries():
    vec = states.ghz(0.5, np.sqrt(3) / 2)
    assert vec[0] == 0.5
    assert vec[7] == pytest.approx(np.sqrt(3) / 2)
    assert np.count_nonzero(vec) == 2
    assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)


def test_ghz_product_limit():
    vec = states.ghz(1, 0)
    assert np.array_equal(vec, np.eye(8)[0].astype(complex))


def test_ghz_rejects_unnormalized():
    with pytest.raises(ValueError, match="ghz amplitudes"):
        states.ghz(1, 1)


def test_ghz_like_entries():
    c4 = np.sqrt(4 - 0.64 - 0.49 - 0.36)
    vec = states.ghz_like(0.8, 0.7, 0.6, c4)
    assert vec[1] == pytest.approx(0.4)   # |001>
    assert vec[2] == pytest.approx(0.35)  # |010>
    assert vec[4] == pytest.approx(0.3)   # |100>
    assert vec[7] == pytest.approx(c4 / 2)
    assert np.linalg.norm(vec) == pytest.approx(1.0, abs=1e-12)


def test_ghz_like_single_term():
    vec = states.ghz_like(2, 0, 0, 0)
    assert np.array_equal(vec, np.eye(8)[1].astype(complex))


def test_ghz_like_rejects_unnormalized():
    with pytest.raises(ValueError, match="ghz_like amplitudes"):
        states.ghz_like(1, 1, 1, 0.5)


def test_qubit_normalization():
    states.qubit(0.6, 0.8)
    with pytest.raises(ValueError):
        states.qubit(0.6, 0.9)


def test_bell_basis_orthonormal_and_complete():
    basis = states.bell_basis()
    assert len(basis) == 4
    for i, u in enumerate(basis):
        for j, v in enumerate(basis):
            assert np.vdot(u, v) == pytest.approx(1.0 if i == j else 0.0, abs=1e-12)
    total = sum(np.outer(v, v.conj()) for v in basis)
    assert np.allclose(total, np.eye(4), atol=1e-12)


def test_bell_basis_phi_plus_overlap():
    phi_plus = states.bell_basis()[0]
    assert phi_plus[0] == pytest.approx(1 / np.sqrt(2))


def test_analyzer_limits():
    x1, x2 = states.analyzer_basis(0.0)
    assert np.allclose(x1, [1, 0])
    assert np.allclose(x2, [0, 1])
    x1, x2 = states.analyzer_basis(np.pi / 2)
    assert np.allclose(x1, [0, 1], atol=1e-15)
    assert np.allclose(x2, [-1, 0], atol=1e-15)


def test_analyzer_orthogonal_at_0p3():
    x1, x2 = states.analyzer_basis(0.3)
    assert np.vdot(x1, x2) == pytest.approx(0.0, abs=1e-14)


def test_analyzer_resolves_identity_over_grid():
    for theta in np.linspace(0, 2 * np.pi, 100):
        x1, x2 = states.analyzer_basis(theta)
        total = np.outer(x1, x1.conj()) + np.outer(x2, x2.conj())
        assert np.allclose(total, np.eye(2), atol=1e-12)


@given(st.floats(min_value=-50, max_value=50, allow_nan=False))
def test_analyzer_orthonormal_any_angle(theta):
    x1, x2 = states.analyzer_basis(theta)
    assert abs(np.vdot(x1, x1) - 1) < 1e-12
    assert abs(np.vdot(x2, x2) - 1) < 1e-12
    assert abs(np.vdot(x1, x2)) < 1e-12


def test_density_basics():
    assert np.array_equal(states.density([1, 0]), np.diag([1, 0]).astype(complex))
    rho = states.density(states.maximal_ghz())
    assert np.trace(rho) == pytest.approx(1.0, abs=1e-12)
    assert np.allclose(rho @ rho, rho, atol=1e-12)


def test_density_global_phase_invariance():
    psi = states.maximal_ghz()
    for phase in (0.3, 1.7, -2.2):
        assert np.allclose(
            states.density(np.exp(1j * phase) * psi), states.density(psi), atol=1e-12
        )


def test_density_rejects_unnormalized():
    with pytest.raises(ValueError, match="state vector"):
        states.density([1, 1])
