"""Brute-force references: Jordan-Wigner Fock space Lindblad integration and the two-site solution.

Fock basis index ``s = sum_i n_i 2^i`` (site 0 is the low bit), so for two
sites the basis is ``{|00>, |10>, |01>, |11>}`` with the first label on site A.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import scipy.linalg
import scipy.sparse as sp
from scipy.sparse.linalg import expm_multiply

from .dynamics import CorrelationState
from .entanglement import (concurrence, entanglement_of_formation, mutual_information,
                           partial_trace_qubit, von_neumann)
from .errors import DomainError
from .model import ModelSpec, OperatorSet, build_operators

MAX_CELLS_TRAJECTORY = 3
MAX_CELLS_SPECTRUM = 2


def annihilators(n_sites: int) -> list[sp.csr_matrix]:
    """Jordan-Wigner ``c_j = (prod_{i<j} Z_i) sigma^-_j`` as sparse matrices."""
    dim = 1 << n_sites
    states = np.arange(dim)
    ops = []
    for j in range(n_sites):
        occupied = (states >> j) & 1 == 1
        src = states[occupied]
        below = src & ((1 << j) - 1)
        parity = np.array([bin(x).count("1") & 1 for x in below], dtype=int)
        vals = np.where(parity == 1, -1.0, 1.0)
        ops.append(sp.csr_matrix((vals, (src ^ (1 << j), src)), shape=(dim, dim)))
    return ops


@dataclass(frozen=True, eq=False)
class FockLindbladSystem:
    H: np.ndarray
    jumps: tuple
    c: tuple
    n_sites: int

    @property
    def dim(self) -> int:
        return self.H.shape[0]

    def liouvillian(self, sparse: bool = True):
        return liouvillian_matrix(self, sparse=sparse)


def fock_system(h: np.ndarray, jump_vectors, check: bool = True) -> FockLindbladSystem:
    """Second-quantize ``H = sum h_ij c_i^dag c_j`` and ``L = sum l_i c_i``."""
    h = np.asarray(h, dtype=complex)
    n = h.shape[0]
    c = annihilators(n)
    dim = 1 << n
    H = sp.csr_matrix((dim, dim), dtype=complex)
    for i in range(n):
        for j in range(n):
            if h[i, j] != 0:
                H = H + h[i, j] * (c[i].T @ c[j])
    jumps = []
    for l in jump_vectors:
        L = sp.csr_matrix((dim, dim), dtype=complex)
        for i, li in enumerate(np.asarray(l)):
            if li != 0:
                L = L + li * c[i]
        jumps.append(L.toarray())
    if check:
        _check_car(c)
    return FockLindbladSystem(H=H.toarray(), jumps=tuple(jumps), c=tuple(c), n_sites=n)


def _check_car(c, tol: float = 1e-13) -> None:
    eye = sp.identity(c[0].shape[0], format="csr")
    for i, ci in enumerate(c):
        for j, cj in enumerate(c):
            anti = (ci @ cj.T + cj.T @ ci) - (eye if i == j else 0 * eye)
            if anti.nnz and np.abs(anti.data).max() > tol:
                raise AssertionError(f"CAR violated for pair ({i}, {j})")


def jw_build(spec: ModelSpec) -> FockLindbladSystem:
    if spec.n_cells > MAX_CELLS_TRAJECTORY:
        raise DomainError(f"Fock-space oracle limited to {MAX_CELLS_TRAJECTORY} cells, got {spec.n_cells}")
    ops = build_operators(spec)
    return fock_system(ops.h, ops.jumps)


def from_operator_set(ops: OperatorSet) -> FockLindbladSystem:
    if ops.n_sites > 2 * MAX_CELLS_TRAJECTORY:
        raise DomainError("operator set too large for the Fock-space oracle")
    return fock_system(ops.h, ops.jumps)


def liouvillian_matrix(sys: FockLindbladSystem, sparse: bool = True):
    """Row-major vectorized Lindbladian: ``vec(A rho B) = (A kron B^T) vec(rho)``."""
    kron = sp.kron if sparse else np.kron
    conv = (lambda m: sp.csr_matrix(m)) if sparse else np.asarray
    H = conv(sys.H)
    eye = sp.identity(sys.dim, format="csr") if sparse else np.eye(sys.dim)
    Lsup = -1j * (kron(H, eye) - kron(eye, H.T))
    for Lm in sys.jumps:
        L = conv(Lm)
        LdL = L.conj().T @ L
        Lsup = Lsup + kron(L, L.conj()) - 0.5 * (kron(LdL, eye) + kron(eye, LdL.T))
    return sp.csr_matrix(Lsup) if sparse else Lsup


def lindblad_integrate(sys: FockLindbladSystem, rho0, t_grid) -> list[np.ndarray]:
    """``rho(t) = exp(Lt) rho0`` for each ``t`` (independent exponentials, no stepping)."""
    rho0 = np.asarray(rho0, dtype=complex)
    if abs(np.trace(rho0) - 1) > 1e-12:
        raise DomainError("initial state must have unit trace")
    Lsup = liouvillian_matrix(sys, sparse=True)
    v0 = rho0.reshape(-1)
    out = []
    for t in np.asarray(t_grid, dtype=float):
        if t < 0:
            raise DomainError("times must be nonnegative")
        v = v0 if t == 0 else expm_multiply(Lsup * t, v0)
        rho = v.reshape(sys.dim, sys.dim)
        out.append((rho + rho.conj().T) / 2)
    return out


def correlation_from_rho(sys: FockLindbladSystem, rho) -> np.ndarray:
    """``C_ij = Tr[c_i^dag c_j rho]``."""
    rho = np.asarray(rho)
    n = sys.n_sites
    C = np.empty((n, n), dtype=complex)
    cr = [ci @ rho for ci in sys.c]          # c_j rho
    for i in range(n):
        cdag = sys.c[i].T
        for j in range(n):
            C[i, j] = np.trace(cdag @ cr[j])
    return (C + C.conj().T) / 2


def superoperator_spectrum(sys: FockLindbladSystem) -> np.ndarray:
    if sys.n_sites > 2 * MAX_CELLS_SPECTRUM:
        raise DomainError(f"superoperator spectrum limited to {MAX_CELLS_SPECTRUM} cells")
    return scipy.linalg.eigvals(liouvillian_matrix(sys, sparse=False))


def reduced_left(rho, n_sites: int, l: int) -> np.ndarray:
    """Density matrix of sites ``0..l-1`` (the low bits; no Jordan-Wigner string crosses in)."""
    d_low = 1 << l
    d_high = 1 << (n_sites - l)
    r = np.asarray(rho).reshape(d_high, d_low, d_high, d_low)
    return np.einsum("aiaj->ij", r)


def slater_state(sys: FockLindbladSystem, C) -> np.ndarray:
    """Pure Fock density matrix of the Gaussian state with idempotent correlation ``C``."""
    C = np.asarray(C, dtype=complex)
    nu, W = np.linalg.eigh(C.conj())
    if np.any((nu > 1e-8) & (nu < 1 - 1e-8)):
        raise DomainError("slater_state needs an idempotent correlation matrix")
    orbitals = W[:, nu > 0.5]
    psi = np.zeros(sys.dim, dtype=complex)
    psi[0] = 1.0
    for a in range(orbitals.shape[1]):
        d_dag = sum(orbitals[i, a] * sys.c[i].T for i in range(sys.n_sites))
        psi = d_dag @ psi
    psi /= np.linalg.norm(psi)
    return np.outer(psi, psi.conj())


def oracle_correlations(ops: OperatorSet, C0, times) -> list[np.ndarray]:
    """Correlation matrices from the brute-force integration of a Gaussian initial state."""
    sys = from_operator_set(ops)
    rho0 = slater_state(sys, C0)
    return [correlation_from_rho(sys, r) for r in lindblad_integrate(sys, rho0, times)]


# --- two-site system -------------------------------------------------------------------

class TwoSiteInitial(str, enum.Enum):
    SINGLET_LIKE = "singlet_like"
    DOUBLY_OCCUPIED = "doubly_occupied"


@dataclass(frozen=True, eq=False)
class TwoSiteState:
    rho: np.ndarray
    t: float
    gamma: float


def two_site_operators(gamma: float, hopping: float = 0.0) -> OperatorSet:
    """Two sites A, B with the single jump ``sqrt(2 gamma) (c_A - c_B)``.

    The factor 2 puts the dissipator in the ``2 L rho L^dag - {L^dag L, rho}``
    normalization with ``L = sqrt(gamma)(c_A - c_B)``, for which the singlet
    coherence decays as ``exp(-4 gamma t)``.  ``hopping`` adds the intracell
    term ``(i hopping / 2)(c_B^dag c_A - c_A^dag c_B)``.
    """
    h = np.array([[0, -0.5j * hopping], [0.5j * hopping, 0]], dtype=complex)
    l = np.sqrt(2.0 * gamma) * np.array([1.0, -1.0], dtype=complex)
    return OperatorSet.from_jumps(h, [l], unit_cell=2)


def two_site_initial_rho(initial) -> np.ndarray:
    initial = TwoSiteInitial(initial)
    psi = np.zeros(4, dtype=complex)
    if initial is TwoSiteInitial.SINGLET_LIKE:
        psi[1], psi[2] = 1 / np.sqrt(2), -1 / np.sqrt(2)
    else:
        psi[3] = 1.0
    return np.outer(psi, psi.conj())


def two_site_rho(gamma: float, t: float, initial="singlet_like", hopping: float = 0.0) -> TwoSiteState:
    """Two-site density matrix; closed form for the singlet without hopping, Fock integration otherwise."""
    if gamma <= 0 or t < 0:
        raise DomainError("need gamma > 0 and t >= 0")
    initial = TwoSiteInitial(initial)
    if initial is TwoSiteInitial.SINGLET_LIKE and hopping == 0.0:
        p = np.exp(-4.0 * gamma * t)
        rho = np.zeros((4, 4), dtype=complex)
        rho[1:3, 1:3] = 0.5 * p * np.array([[1, -1], [-1, 1]])
        rho[0, 0] = -np.expm1(-4.0 * gamma * t)
        return TwoSiteState(rho, float(t), float(gamma))
    sys = from_operator_set(two_site_operators(gamma, hopping))
    rho = lindblad_integrate(sys, two_site_initial_rho(initial), [t])[0]
    return TwoSiteState(rho, float(t), float(gamma))


def two_site_entropies(state: TwoSiteState) -> dict:
    rho = state.rho
    c = concurrence(rho)
    return {
        "S_AB": von_neumann(rho),
        "S_A": von_neumann(partial_trace_qubit(rho, 0)),
        "S_B": von_neumann(partial_trace_qubit(rho, 1)),
        "I": mutual_information(rho),
        "concurrence": c,
        "EoF": entanglement_of_formation(c),
    }


def s_ab_closed_form(gamma: float, t):
    """``e^{-4 gamma t} [4 gamma t + (1 - e^{4 gamma t}) ln(1 - e^{-4 gamma t})]``."""
    x = 4.0 * gamma * np.asarray(t, dtype=float)
    return np.exp(-x) * (x + (1.0 - np.exp(x)) * np.log(-np.expm1(-x)))


__all__ = [
    "annihilators", "FockLindbladSystem", "fock_system", "jw_build", "from_operator_set",
    "liouvillian_matrix", "lindblad_integrate", "correlation_from_rho", "superoperator_spectrum",
    "reduced_left", "slater_state", "oracle_correlations", "TwoSiteInitial", "TwoSiteState",
    "two_site_operators", "two_site_initial_rho", "two_site_rho", "two_site_entropies",
    "s_ab_closed_form",
]
