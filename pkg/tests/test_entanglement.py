import numpy as np
import pytest

from decolab import states
from decolab.channels import ApplicationMode, apply_channel, gad_standard
from decolab.entanglement import negativity_cut, tripartite_negativity

from conftest import random_unitary


def damped_ghz(p, gamma, mode=ApplicationMode.INDEPENDENT):
    rho = states.density(states.maximal_ghz())
    return apply_channel(rho, gad_standard(p, gamma), (0, 1, 2), mode, renormalize=True)


def damped_ghz_like(p, gamma):
    rho = states.density(states.maximal_ghz_like())
    return apply_channel(rho, gad_standard(p, gamma), (0, 1, 2), renormalize=True)


def test_maximal_ghz_every_cut_is_one():
    rho = states.density(states.maximal_ghz())
    for q in range(3):
        assert negativity_cut(rho, q) == pytest.approx(1.0, abs=1e-10)


def test_product_state_is_ppt():
    rho = states.density(states.ghz(1, 0))
    for q in range(3):
        assert negativity_cut(rho, q) == 0.0
    report = tripartite_negativity(rho)
    assert report.cuts() == (0.0, 0.0, 0.0)
    assert report.tripartite == 0.0


def test_partial_ghz_closed_form():
    # one negative PT eigenvalue at -|alpha*beta| gives N = 2|alpha*beta|
    alpha, beta = 0.5, np.sqrt(3) / 2
    rho = states.density(states.ghz(alpha, beta))
    assert negativity_cut(rho, 0) == pytest.approx(2 * alpha * beta, abs=1e-10)
    assert negativity_cut(rho, 0) == pytest.approx(np.sqrt(3) / 2, abs=1e-4)


def test_maximal_ghz_like_tripartite_is_one():
    rho = states.density(states.maximal_ghz_like())
    report = tripartite_negativity(rho)
    assert report.tripartite == pytest.approx(1.0, abs=1e-10)


def test_full_damping_kills_everything():
    for p in (0.0, 0.5, 1.0):
        for rho in (damped_ghz(p, 1.0), damped_ghz_like(p, 1.0)):
            report = tripartite_negativity(rho)
            assert report.tripartite == 0.0
            assert report.cuts() == (0.0, 0.0, 0.0)


def test_report_geometric_mean_consistency():
    rho = damped_ghz(0.3, 0.4)
    report = tripartite_negativity(rho)
    product = report.n_a_bc * report.n_b_ac * report.n_c_ab
    assert report.tripartite**3 == pytest.approx(product, abs=1e-12)


def test_permutation_symmetry_of_maximal_ghz():
    rho = damped_ghz(0.25, 0.35)
    report = tripartite_negativity(rho)
    assert report.n_a_bc == pytest.approx(report.n_b_ac, abs=1e-10)
    assert report.n_b_ac == pytest.approx(report.n_c_ab, abs=1e-10)


def test_local_unitary_invariance(rng):
    rho = damped_ghz_like(0.2, 0.3)
    base = tripartite_negativity(rho)
    for _ in range(3):
        u = np.kron(
            np.kron(random_unitary(rng, 2), random_unitary(rng, 2)), random_unitary(rng, 2)
        )
        rotated = u @ rho @ u.conj().T
        report = tripartite_negativity(rotated)
        for got, want in zip(report.cuts(), base.cuts()):
            assert got == pytest.approx(want, abs=1e-9)


@pytest.mark.parametrize("p", [0.0, 0.5, 1.0])
@pytest.mark.parametrize("family", ["ghz", "ghz_like"])
def test_monotone_decay_in_gamma(p, family):
    build = damped_ghz if family == "ghz" else damped_ghz_like
    values = [tripartite_negativity(build(p, g)).tripartite for g in np.linspace(0, 1, 11)]
    for earlier, later in zip(values, values[1:]):
        assert later <= earlier + 1e-10


def test_components_within_single_qubit_cut_bound():
    for p, g in [(0.1, 0.2), (0.6, 0.5), (0.9, 0.8)]:
        report = tripartite_negativity(damped_ghz(p, g))
        for cut in report.cuts():
            assert -1e-12 <= cut <= 1.0 + 1e-9


def test_raw_variant_is_strength_sensitive_at_zero_damping():
    # the whole point of shipping gad_raw: with renormalization it loses
    # entanglement as p grows even at gamma=0, where the standard (physical)
    # variant is exactly the identity
    from decolab.channels import gad_raw

    rho = states.density(states.maximal_ghz())
    raw = [
        tripartite_negativity(
            apply_channel(rho, gad_raw(p, 0.0), (0, 1, 2), renormalize=True)
        ).tripartite
        for p in (0.0, 0.1, 0.3)
    ]
    assert raw[0] == pytest.approx(1.0, abs=1e-10)
    assert raw[1] < 0.5
    assert raw[2] < raw[1]
    std = tripartite_negativity(damped_ghz(0.3, 0.0)).tripartite
    assert std == pytest.approx(1.0, abs=1e-10)


def test_rejects_invalid_density():
    with pytest.raises(ValueError, match="trace"):
        negativity_cut(np.eye(8), 0)
    with pytest.raises(ValueError, match="8x8"):
        negativity_cut(np.eye(4) / 4, 0)
    with pytest.raises(ValueError, match="Hermitian"):
        bad = np.eye(8, dtype=complex) / 8
        bad[0, 1] = 0.5
        negativity_cut(bad, 0)
