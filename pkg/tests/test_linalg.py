import numpy as np
import pytest

from decolab import linalg
from decolab.linalg import (
    IDENTITY_2,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    dagger,
    hermitian_eigenvalues,
    lift_operator,
    partial_trace,
    partial_transpose,
    tensor,
)

from conftest import random_density

KET0 = np.array([1, 0], dtype=complex)
KET1 = np.array([0, 1], dtype=complex)
PHI_PLUS = (np.kron(KET0, KET0) + np.kron(KET1, KET1)) / np.sqrt(2)


def test_tensor_identity():
    assert np.array_equal(tensor(IDENTITY_2, IDENTITY_2), np.eye(4))


def test_tensor_basis_projector_placement():
    p0 = np.outer(KET0, KET0)
    p1 = np.outer(KET1, KET1)
    assert np.array_equal(tensor(p0, p1), np.diag([0, 1, 0, 0]).astype(complex))


def test_tensor_sigma_x_pair_flips_00():
    out = tensor(SIGMA_X, SIGMA_X) @ np.kron(KET0, KET0)
    assert np.array_equal(out, np.kron(KET1, KET1))


def test_tensor_associative_exactly(rng):
    for _ in range(5):
        a = rng.integers(-3, 4, size=(2, 2)) + 1j * rng.integers(-3, 4, size=(2, 2))
        b = rng.integers(-3, 4, size=(3, 2)) + 0j
        c = rng.integers(-3, 4, size=(2, 3)) + 0j
        left = tensor(tensor(a, b), c)
        right = tensor(a, tensor(b, c))
        assert np.array_equal(left, right)


def test_dagger():
    assert np.array_equal(dagger(IDENTITY_2), IDENTITY_2)
    assert np.array_equal(dagger(SIGMA_Y), SIGMA_Y)
    assert np.array_equal(dagger([[0, 2], [0, 0]]), np.array([[0, 0], [2, 0]]))


def test_pauli_algebra():
    assert np.allclose(SIGMA_X @ SIGMA_Y, 1j * SIGMA_Z)


def test_trace_and_norm_basics():
    assert linalg.real_trace(np.eye(8)) == 8.0
    assert linalg.frobenius_norm(np.zeros((4, 4))) == 0.0


def test_nan_rejected():
    with pytest.raises(ValueError, match="NaN"):
        linalg.as_matrix([[np.nan, 0], [0, 1]])


def test_partial_transpose_product_state(rng):
    rho_a = random_density(rng, 2)
    rho_b = random_density(rng, 2)
    out = partial_transpose(np.kron(rho_a, rho_b), 0)
    assert np.allclose(out, np.kron(rho_a.T, rho_b), atol=1e-14)


def test_partial_transpose_bell_spectrum():
    rho = np.outer(PHI_PLUS, PHI_PLUS.conj())
    eigs = hermitian_eigenvalues(partial_transpose(rho, 0))
    assert np.allclose(eigs, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


def test_partial_transpose_involution(rng):
    rho = random_density(rng, 8)
    assert np.allclose(partial_transpose(partial_transpose(rho, 1), 1), rho, atol=1e-15)


def test_partial_transpose_preserves_trace_and_hermiticity(rng):
    for _ in range(5):
        rho = random_density(rng, 8)
        for q in range(3):
            pt = partial_transpose(rho, q)
            assert abs(np.trace(pt) - np.trace(rho)) < 1e-12
            assert np.abs(pt - pt.conj().T).max() < 1e-12


def test_partial_transpose_bad_qubit():
    with pytest.raises(ValueError, match="out of range"):
        partial_transpose(np.eye(4), 2)


def test_partial_trace_product_state(rng):
    rho_a = random_density(rng, 2)
    rho_b = random_density(rng, 2)
    out = partial_trace(np.kron(rho_a, rho_b), keep={0})
    assert np.allclose(out, rho_a * np.trace(rho_b), atol=1e-14)


def test_partial_trace_bell_marginal():
    rho = np.outer(PHI_PLUS, PHI_PLUS.conj())
    assert np.allclose(partial_trace(rho, keep={1}), np.eye(2) / 2, atol=1e-14)


def test_partial_trace_keep_all(rng):
    rho = random_density(rng, 8)
    assert np.array_equal(partial_trace(rho, keep={0, 1, 2}), rho)


def test_partial_trace_preserves_trace(rng):
    rho = random_density(rng, 16)
    for keep in ({0}, {1, 3}, {0, 2}, {0, 1, 2, 3}):
        reduced = partial_trace(rho, keep)
        assert abs(np.trace(reduced) - np.trace(rho)) < 1e-12


def test_partial_trace_empty_keep():
    with pytest.raises(ValueError, match="nonempty"):
        partial_trace(np.eye(4), keep=set())


def test_eigenvalues_diagonal():
    assert np.allclose(hermitian_eigenvalues(np.diag([0.75, 0.25])), [0.25, 0.75])


def test_eigenvalues_sigma_x():
    assert np.allclose(hermitian_eigenvalues(SIGMA_X), [-1.0, 1.0], atol=1e-14)


@pytest.mark.parametrize("dim", [2, 3, 4, 8, 16])
def test_eigenvalues_match_numpy(rng, dim):
    for _ in range(5):
        a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
        h = (a + a.conj().T) / 2
        assert np.abs(hermitian_eigenvalues(h) - np.linalg.eigvalsh(h)).max() < 1e-11


def test_eigenvalue_sum_is_trace(rng):
    for _ in range(5):
        a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
        h = (a + a.conj().T) / 2
        assert abs(hermitian_eigenvalues(h).sum() - np.trace(h).real) < 1e-10


def test_eigenvalue_spectral_bounds_probe(rng):
    a = rng.normal(size=(8, 8)) + 1j * rng.normal(size=(8, 8))
    h = (a + a.conj().T) / 2
    eigs = hermitian_eigenvalues(h)
    for _ in range(50):
        v = rng.normal(size=8) + 1j * rng.normal(size=8)
        v = v / np.linalg.norm(v)
        rayleigh = (v.conj() @ h @ v).real
        assert eigs[0] - 1e-9 <= rayleigh <= eigs[-1] + 1e-9


def test_eigenvalues_reject_non_hermitian():
    with pytest.raises(ValueError, match="not Hermitian"):
        hermitian_eigenvalues([[0, 1], [0, 0]])


def test_lift_operator_single_qubit():
    assert np.array_equal(lift_operator(SIGMA_X, (1,), 2), np.kron(IDENTITY_2, SIGMA_X))
    assert np.array_equal(lift_operator(SIGMA_X, (0,), 2), np.kron(SIGMA_X, IDENTITY_2))


def test_lift_operator_contiguous_block():
    proj = np.outer(PHI_PLUS, PHI_PLUS.conj())
    assert np.allclose(lift_operator(proj, (0, 1), 3), np.kron(proj, IDENTITY_2))
    assert np.allclose(lift_operator(proj, (1, 2), 3), np.kron(IDENTITY_2, proj))


def test_lift_operator_non_contiguous(rng):
    # acting on qubits (0, 2) of 3: oracle via explicit basis mapping
    op = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    lifted = lift_operator(op, (0, 2), 3)
    expected = np.zeros((8, 8), dtype=complex)
    for r in range(8):
        for c in range(8):
            r0, r1, r2 = (r >> 2) & 1, (r >> 1) & 1, r & 1
            c0, c1, c2 = (c >> 2) & 1, (c >> 1) & 1, c & 1
            if r1 == c1:
                expected[r, c] = op[2 * r0 + r2, 2 * c0 + c2]
    assert np.allclose(lifted, expected, atol=1e-14)


def test_lift_operator_order_matters():
    # (q0, q1) vs (q1, q0) differ by a swap of the operator's slots
    op = np.kron(SIGMA_X, SIGMA_Z)
    assert np.array_equal(lift_operator(op, (0, 1), 2), op)
    assert np.array_equal(lift_operator(op, (1, 0), 2), np.kron(SIGMA_Z, SIGMA_X))
