import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lossychain.dynamics import evolve, prepare_initial_state
from lossychain.errors import DomainError
from lossychain.model import ModelSpec, build_operators
from lossychain.oracle import (annihilators, correlation_from_rho, from_operator_set, jw_build,
                               lindblad_integrate, liouvillian_matrix, s_ab_closed_form, slater_state,
                               superoperator_spectrum, two_site_entropies, two_site_initial_rho,
                               two_site_operators, two_site_rho)

LN2 = np.log(2)


def singlet_block(scale):
    return 0.5 * scale * np.array([[1, -1], [-1, 1]])


# --- two-site solution ----------------------------------------------------------------

def test_two_site_examples():
    rho = two_site_rho(0.25, 0.0).rho
    np.testing.assert_allclose(rho[1:3, 1:3], singlet_block(1), atol=1e-15)
    assert rho[0, 0] == 0 and rho[3, 3] == 0
    vac = np.zeros((4, 4))
    vac[0, 0] = 1
    np.testing.assert_allclose(two_site_rho(0.25, 200.0).rho, vac, atol=1e-15)
    rho = two_site_rho(0.25, 1.0).rho
    assert rho[1, 1].real == pytest.approx(np.exp(-1) / 2, abs=1e-15)
    assert rho[1, 2].real == pytest.approx(-np.exp(-1) / 2, abs=1e-15)
    assert np.exp(-1) / 2 == pytest.approx(0.18394, abs=1e-5)


@pytest.mark.parametrize("gamma", [0.1, 0.25, 1.3])
def test_closed_form_matches_integration(gamma):
    sys = from_operator_set(two_site_operators(gamma))
    ts = np.linspace(0, 5, 11)
    for t, rho in zip(ts, lindblad_integrate(sys, two_site_initial_rho("singlet_like"), ts)):
        assert np.abs(rho - two_site_rho(gamma, t).rho).max() <= 1e-10


@settings(max_examples=30, deadline=None)
@given(st.floats(0.05, 2.0), st.floats(0.0, 8.0))
def test_two_site_state_validity(gamma, t):
    rho = two_site_rho(gamma, t).rho
    assert abs(np.trace(rho) - 1) <= 1e-12
    assert np.abs(rho - rho.conj().T).max() == 0
    assert np.linalg.eigvalsh(rho).min() >= -1e-10


def test_two_site_entropy_examples():
    e = two_site_entropies(two_site_rho(0.25, 0.0))
    assert e["S_AB"] == pytest.approx(0, abs=1e-12)
    assert e["S_A"] == pytest.approx(LN2, abs=1e-12)
    late = two_site_entropies(two_site_rho(0.25, 100.0))
    assert max(late.values()) < 1e-10


def test_s_ab_maximum_location():
    g = 0.25
    t_star = np.log(2) / (4 * g)
    dt = 1e-3
    ts = np.arange(dt, 3.0, dt)
    S = np.array([two_site_entropies(two_site_rho(g, t))["S_AB"] for t in ts])
    assert abs(ts[np.argmax(S)] - t_star) <= dt
    mid = two_site_entropies(two_site_rho(g, t_star))["S_AB"]
    for nb in (t_star - dt, t_star + dt):
        assert two_site_entropies(two_site_rho(g, nb))["S_AB"] < mid


@settings(max_examples=40, deadline=None)
@given(st.floats(0.05, 2.0), st.floats(0.01, 6.0))
def test_s_ab_closed_form(gamma, t):
    exact = two_site_entropies(two_site_rho(gamma, t))["S_AB"]
    assert s_ab_closed_form(gamma, t) == pytest.approx(exact, abs=1e-10)


# --- Jordan-Wigner system -------------------------------------------------------------

def test_jw_single_cell():
    c = annihilators(2)
    assert c[0].shape == (4, 4)
    assert (c[0] @ c[0]).nnz == 0 or np.abs((c[0] @ c[0]).toarray()).max() == 0


def test_jw_car_two_cells():
    c = annihilators(4)
    eye = np.eye(16)
    for i in range(4):
        for j in range(4):
            anti = (c[i] @ c[j].T + c[j].T @ c[i]).toarray()
            np.testing.assert_allclose(anti, eye if i == j else 0 * eye, atol=1e-13)


def test_single_particle_sector():
    spec = ModelSpec(2, 0.2, 0.3)
    sys = jw_build(spec)
    one = [1 << i for i in range(4)]
    H1 = sys.H[np.ix_(one, one)]
    np.testing.assert_allclose(np.linalg.eigvalsh(H1), np.linalg.eigvalsh(build_operators(spec).h),
                               atol=1e-12)
    assert np.abs(sys.H - sys.H.conj().T).max() == 0
    for L in sys.jumps:
        assert np.abs(L[:, 0]).max() == 0


def test_jw_size_limit():
    with pytest.raises(DomainError):
        jw_build(ModelSpec(4, 0.2, 0.3))


def test_unitary_limit_keeps_purity():
    sys = jw_build(ModelSpec(2, 0.5, 0.3))
    ops = build_operators(ModelSpec(2, 0.5, 0.3))
    rho0 = slater_state(sys, prepare_initial_state(ops, "half_filling_real_band").C)
    for rho in lindblad_integrate(sys, rho0, [0.5, 4.0]):
        assert np.trace(rho @ rho).real == pytest.approx(1, abs=1e-10)


def test_all_filled_two_cells_matches_propagation():
    ops = build_operators(ModelSpec(2, 0.2, 0.3))
    sys = from_operator_set(ops)
    st0 = prepare_initial_state(ops, "all_filled")
    ts = np.linspace(0, 10, 21)
    rhos = lindblad_integrate(sys, slater_state(sys, st0.C), ts)
    for s, rho in zip(evolve(st0, ops, ts), rhos):
        assert np.abs(s.C - correlation_from_rho(sys, rho)).max() <= 1e-8


@pytest.mark.parametrize("spec", [ModelSpec(1, 0.2, 0.3, "open"), ModelSpec(2, 0.1, 0.5),
                                  ModelSpec(3, 0.3, 0.6, "open")])
def test_trajectory_physicality(spec):
    ops = build_operators(spec)
    sys = from_operator_set(ops)
    rho0 = slater_state(sys, prepare_initial_state(ops, "all_filled").C)
    number = sum((c.T @ c).toarray() for c in sys.c)
    previous = np.inf
    for rho in lindblad_integrate(sys, rho0, np.linspace(0, 6, 13)):
        assert abs(np.trace(rho) - 1) <= 1e-10
        assert np.abs(rho - rho.conj().T).max() <= 1e-12
        assert np.linalg.eigvalsh(rho).min() >= -1e-9
        n = np.trace(number @ rho).real
        assert n <= previous + 1e-12
        previous = n


def test_vacuum_stationary():
    sys = jw_build(ModelSpec(2, 0.2, 0.3))
    vac = np.zeros(sys.dim ** 2)
    vac[0] = 1.0
    assert np.abs(liouvillian_matrix(sys) @ vac).max() <= 1e-13


def test_correlation_examples():
    sys = jw_build(ModelSpec(1, 0.2, 0.3, "open"))
    vac = np.zeros((4, 4))
    vac[0, 0] = 1
    assert np.abs(correlation_from_rho(sys, vac)).max() == 0
    full = np.zeros((4, 4))
    full[3, 3] = 1
    np.testing.assert_allclose(correlation_from_rho(sys, full), np.eye(2), atol=1e-15)
    np.testing.assert_allclose(correlation_from_rho(sys, two_site_initial_rho("singlet_like")),
                               singlet_block(1), atol=1e-15)


def test_superoperator_spectrum_properties():
    unitary = superoperator_spectrum(jw_build(ModelSpec(1, 0.5, 0.3, "open")))
    assert np.abs(unitary.real).max() < 1e-12
    ev = superoperator_spectrum(jw_build(ModelSpec(2, 0.2, 0.3)))
    assert ev.size == 256
    assert ev.real.max() <= 1e-10
    assert np.count_nonzero(np.abs(ev) < 1e-9) == 1
    with pytest.raises(DomainError):
        superoperator_spectrum(jw_build(ModelSpec(3, 0.2, 0.3)))


def test_integrator_rejects_bad_state():
    sys = jw_build(ModelSpec(1, 0.2, 0.3, "open"))
    with pytest.raises(DomainError):
        lindblad_integrate(sys, 2 * np.eye(4) / 4, [1.0])

