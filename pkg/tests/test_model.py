import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lossychain.errors import DomainError
from lossychain.model import (ModelSpec, build_operators, consistency_check, derive_params,
                              jump_vectors, spectral_operators, with_operators)

lam_loss = st.floats(0.01, 0.5)
unit = st.floats(0.01, 0.99)


def test_derived_params_hermitian_line():
    p = derive_params(0.5, 0.3)
    assert p.gamma_A == 0 and p.gamma_B == 0 and p.mu == 0


@pytest.mark.parametrize("lam,eta,expected", [
    (0.2, 0.3, dict(t1=0.56, t2=0.24, t1p=0.14, t2p=-0.06, mu=-0.3, gamma_A=0.42, gamma_B=0.18)),
    (0.3, 0.2, dict(t1=0.56, t2=0.14, t1p=0.24, t2p=-0.06, mu=-0.2, gamma_A=0.32, gamma_B=0.08)),
])
def test_derived_params_values(lam, eta, expected):
    d = derive_params(lam, eta).as_dict()
    for key, val in expected.items():
        assert d[key] == pytest.approx(val, abs=1e-15), key


@pytest.mark.parametrize("lam,eta,name", [(0.0, 0.3, "lam"), (0.2, 1.0, "eta"), (-1, 0.5, "lam")])
def test_derived_params_domain(lam, eta, name):
    with pytest.raises(DomainError, match=name):
        derive_params(lam, eta)


@given(unit, unit)
def test_parameter_identities(lam, eta):
    p = derive_params(lam, eta)
    assert p.t1 + p.t1p == pytest.approx(p.w, abs=1e-15)
    assert p.t2 - p.t2p == pytest.approx(p.v, abs=1e-15)


@given(unit, unit)
def test_rate_sum_independent_of_eta(lam, eta):
    p = derive_params(lam, eta)
    assert p.gamma_A + p.gamma_B == pytest.approx(1 - 2 * lam, abs=1e-14)


@settings(max_examples=40, deadline=None)
@given(lam_loss, unit, st.integers(2, 8), st.sampled_from(["periodic", "open"]))
def test_K_positive_semidefinite(lam, eta, n, boundary):
    ops = build_operators(ModelSpec(n, lam, eta, boundary))
    assert np.linalg.eigvalsh(ops.K).min() >= -1e-12
    assert np.abs(ops.h - ops.h.conj().T).max() == 0


def test_hermitian_line_operator_set():
    ops = build_operators(ModelSpec(2, 0.5, 0.3))
    assert np.all(ops.K == 0)
    assert np.array_equal(ops.h_eff, ops.h)
    assert np.array_equal(ops.D, ops.h.T)


def test_single_dimer_open():
    spec = ModelSpec(1, 0.2, 0.7, "open")
    jumps = jump_vectors(spec)
    assert len(jumps) == 1
    gA = derive_params(0.2, 0.7).gamma_A
    ops = build_operators(spec)
    np.testing.assert_allclose(ops.K, gA * np.array([[1, -1], [-1, 1]]), atol=1e-15)


def test_effective_hoppings_open_chain():
    ops = build_operators(ModelSpec(2, 0.2, 0.3, "open"))
    p = derive_params(0.2, 0.3)
    H = ops.h_eff
    # site index 2n + s
    assert H[1, 0] == pytest.approx(1j * p.t1)
    assert H[0, 1] == pytest.approx(-1j * p.t1p)   # gauge-dependent sign of t1p
    assert H[2, 1] == pytest.approx(1j * p.t2)
    assert H[1, 2] == pytest.approx(1j * p.t2p)
    # bulk sites carry mu on the diagonal; the chain ends feel only one bond
    assert H[1, 1] == pytest.approx(1j * p.mu)
    assert H[2, 2] == pytest.approx(1j * p.mu)


def test_h_eff_minus_h_is_exact():
    ops = build_operators(ModelSpec(5, 0.2, 0.3))
    assert np.array_equal(ops.h_eff - ops.h, -0.5j * ops.K)


def test_block_circulant_pbc():
    ops = build_operators(ModelSpec(6, 0.2, 0.3))
    for M in (ops.h, ops.K, ops.h_eff, ops.D):
        shifted = np.roll(np.roll(M, 2, axis=0), 2, axis=1)
        np.testing.assert_array_equal(shifted, M)


def test_open_equals_periodic_with_wrap_removed():
    n = 5
    pbc = build_operators(ModelSpec(n, 0.2, 0.3, "periodic"))
    obc = build_operators(ModelSpec(n, 0.2, 0.3, "open"))
    np.testing.assert_allclose(obc.h[1:-1, 1:-1], pbc.h[1:-1, 1:-1], atol=0)
    # interior K rows away from the wrap bond coincide
    np.testing.assert_allclose(obc.K[2:-2, 2:-2], pbc.K[2:-2, 2:-2], atol=1e-15)
    assert pbc.h[0, -1] != 0 and obc.h[0, -1] == 0


def test_domain_errors():
    with pytest.raises(DomainError):
        build_operators(ModelSpec(1, 0.2, 0.3, "periodic"))
    with pytest.raises(DomainError, match="negative loss rates"):
        build_operators(ModelSpec(3, 0.7, 0.3))
    h, h_eff = spectral_operators(ModelSpec(3, 0.7, 0.3))
    assert np.abs(h_eff.imag).max() > 0


@pytest.mark.parametrize("spec", [ModelSpec(3, 0.5, 0.3), ModelSpec(50, 0.2, 0.3)])
def test_consistency_check_clean(spec):
    report = consistency_check(build_operators(spec))
    assert report["passed"]
    for key in ("anti_hermitian_defect", "h_hermiticity", "K_hermiticity", "D_defect"):
        assert report[key] <= 1e-13


def test_consistency_check_detects_fault():
    ops = build_operators(ModelSpec(4, 0.2, 0.3))
    bad = ops.h_eff.copy()
    bad[3, 2] += 1e-6
    report = consistency_check(with_operators(ops, h_eff=bad))
    assert not report["passed"]
    assert report["anti_hermitian_defect"] == pytest.approx(5e-7, rel=0.01) or \
        report["hermitian_part_defect"] == pytest.approx(5e-7, rel=0.01)


def test_operators_are_read_only():
    ops = build_operators(ModelSpec(2, 0.2, 0.3))
    with pytest.raises(ValueError):
        ops.h[0, 0] = 1.0
