"""Correlation-matrix dynamics ``C(t) = E C(0) E^dag`` with ``E = exp(i D t)``.

``C_ij = Tr[c_i^dag c_j rho]`` obeys ``dC/dt = i (D C - C D^dag)`` with the
damping operator ``D = h^T + (i/2) K^T``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DomainError, NumericalError
from .model import DerivedParams, OperatorSet
from .spectral import bloch_momenta, dispersion_pbc

FILLING_TOL = 1e-9
EIG_COND_MAX = 1e8


class InitialRule(str, enum.Enum):
    HALF_FILLING = "half_filling_real_band"
    ALL_FILLED = "all_filled"
    CUSTOM = "custom_projector"


@dataclass(frozen=True, eq=False)
class CorrelationState:
    C: np.ndarray
    time: float = 0.0

    def __post_init__(self):
        C = np.array(self.C, dtype=complex)
        C.setflags(write=False)
        object.__setattr__(self, "C", C)

    @property
    def n_sites(self) -> int:
        return self.C.shape[0]

    @property
    def trace(self) -> float:
        return float(np.trace(self.C).real)


@dataclass(frozen=True, eq=False)
class Propagator:
    E: np.ndarray
    t: float


def matrix_exponential(M, method: str = "pade") -> np.ndarray:
    """``exp(M)`` by scaling-and-squaring Pade (``"pade"``) or eigendecomposition (``"eig"``).

    ``"eig"`` refuses inputs whose eigenvector matrix has condition number above 1e8.
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise DomainError("matrix has non-finite entries")
    if method == "pade":
        out = scipy.linalg.expm(M)
    elif method == "eig":
        w, V = np.linalg.eig(M)
        if np.linalg.cond(V) > EIG_COND_MAX:
            raise NumericalError("eigenvector basis too ill-conditioned for the eig path")
        out = (V * np.exp(w)) @ np.linalg.inv(V)
    else:
        raise DomainError(f"unknown method {method!r}")
    if not np.all(np.isfinite(out)):
        raise NumericalError("matrix exponential overflowed")
    return out


def _require_loss(ops: OperatorSet) -> None:
    if np.linalg.eigvalsh((ops.K + ops.K.conj().T) / 2).min() < -1e-12:
        raise DomainError("dynamics needs nonnegative loss rates (lambda <= 1/2)")


def _fermi_selection(ev: np.ndarray, n_fill: int, tol: float = FILLING_TOL) -> np.ndarray:
    """Indices of the ``n_fill`` modes with lowest real part.

    Modes with ``|Re eps| <= tol`` straddle the Fermi level; they are filled in
    order of increasing ``Im eps`` (lexicographic order on (Re, Im)).
    """
    neg = np.flatnonzero(ev.real < -tol)
    zero = np.flatnonzero(np.abs(ev.real) <= tol)
    if not (neg.size <= n_fill <= neg.size + zero.size):
        raise DomainError(
            f"ambiguous Fermi level: {neg.size} modes with Re eps < 0 and {zero.size} at Re eps = 0, need {n_fill}"
        )
    need = n_fill - neg.size
    if need == 0 or need == zero.size:
        return np.concatenate([neg, zero[:need]]) if need else neg
    z = zero[np.argsort(ev.imag[zero], kind="stable")]
    if abs(ev.imag[z[need - 1]] - ev.imag[z[need]]) <= tol:
        raise DomainError("ambiguous Fermi level: degenerate modes at Re eps = 0 straddle the cut")
    return np.concatenate([neg, z[:need]])


def projector_from_orbitals(Q: np.ndarray) -> np.ndarray:
    """Correlation matrix of the Slater determinant built on the columns of ``Q``.

    For an occupied orbital ``phi`` (``d^dag = sum_i phi_i c_i^dag``) one has
    ``<c_i^dag c_j> = conj(phi_i) phi_j``, hence ``C = conj(Q Q^dag)``.
    """
    Q, _ = np.linalg.qr(Q)
    P = Q @ Q.conj().T
    return ((P + P.conj().T) / 2).conj()


def prepare_initial_state(ops: OperatorSet, rule="half_filling_real_band",
                          C=None, n_fill: int | None = None) -> CorrelationState:
    rule = InitialRule(rule)
    n = ops.n_sites
    if rule is InitialRule.ALL_FILLED:
        return CorrelationState(np.eye(n, dtype=complex))
    if rule is InitialRule.CUSTOM:
        if C is None:
            raise DomainError("custom_projector needs a correlation matrix")
        C = np.asarray(C, dtype=complex)
        if C.shape != (n, n):
            raise DomainError(f"custom C has shape {C.shape}, expected {(n, n)}")
        if np.max(np.abs(C - C.conj().T)) > 1e-10:
            raise DomainError("custom C is not Hermitian")
        nu = np.linalg.eigvalsh((C + C.conj().T) / 2)
        if nu.min() < -1e-10 or nu.max() > 1 + 1e-10:
            raise DomainError(f"custom C eigenvalues leave [0, 1]: [{nu.min()}, {nu.max()}]")
        return CorrelationState(C)
    n_fill = n // 2 if n_fill is None else n_fill
    ev, V = np.linalg.eig(ops.h_eff)
    idx = _fermi_selection(ev, n_fill)
    return CorrelationState(projector_from_orbitals(V[:, idx]))


def propagator(ops: OperatorSet, t: float) -> Propagator:
    if t < 0:
        raise DomainError(f"time must be nonnegative, got {t}")
    return Propagator(matrix_exponential(1j * ops.D * t), float(t))


def propagate(state: CorrelationState, ops: OperatorSet, t: float) -> CorrelationState:
    """Evolve ``state`` forward by ``t``."""
    _require_loss(ops)
    E = propagator(ops, t).E
    C = E @ state.C @ E.conj().T
    return CorrelationState((C + C.conj().T) / 2, state.time + t)


def evolve(state: CorrelationState, ops: OperatorSet, times) -> list[CorrelationState]:
    """States at each absolute time in ``times`` (measured from ``state``).

    Every output uses its own propagator; ``D`` is diagonalized once when its
    eigenvector basis is well conditioned, otherwise Pade is used per time.
    """
    _require_loss(ops)
    times = np.asarray(times, dtype=float)
    if np.any(times < 0):
        raise DomainError("times must be nonnegative")
    w, V = np.linalg.eig(1j * ops.D)
    use_eig = np.linalg.cond(V) < EIG_COND_MAX
    Vi = np.linalg.inv(V) if use_eig else None
    out = []
    for t in times:
        if use_eig:
            E = (V * np.exp(w * t)) @ Vi
        else:
            E = matrix_exponential(1j * ops.D * t)
        C = E @ state.C @ E.conj().T
        out.append(CorrelationState((C + C.conj().T) / 2, state.time + float(t)))
    return out


# --- translation-invariant fast path ------------------------------------------------

def bloch_blocks(M: np.ndarray, k=None, sign: int = -1) -> tuple[np.ndarray, np.ndarray]:
    """``M(k) = sum_d M(d) exp(sign*i k d)`` for a block-circulant ``M`` (2x2 blocks).

    ``sign=-1`` is the Hamiltonian convention ``c_n = N^-1/2 sum_k e^{ikn} a_k``;
    the damping operator and ``C`` transform with ``sign=+1``.
    """
    n = M.shape[0] // 2
    k = bloch_momenta(n) if k is None else np.asarray(k)
    cells = M[:, 0:2].reshape(n, 2, 2)  # cells[d] = M(d) = M[(d, s), (0, s')]
    phase = np.exp(sign * 1j * np.outer(k, np.arange(n)))
    return k, np.einsum("kd,dst->kst", phase, cells)


def momentum_correlation(state: CorrelationState) -> tuple[np.ndarray, np.ndarray]:
    """2x2 blocks ``C(k)_{ss'} = <a_{k,s}^dag a_{k,s'}>``; only valid for PBC states."""
    C = state.C
    n = C.shape[0] // 2
    k = bloch_momenta(n)
    C4 = C.reshape(n, 2, n, 2)
    F = np.exp(1j * np.outer(k, np.arange(n)))
    Ck = np.einsum("kn,nsmt,km->kst", F, C4, F.conj()) / n
    return k, Ck


def from_momentum(k: np.ndarray, Ck: np.ndarray) -> np.ndarray:
    n = k.size
    F = np.exp(1j * np.outer(k, np.arange(n)))
    C4 = np.einsum("kn,kst,km->nsmt", F.conj(), Ck, F) / n
    return C4.reshape(2 * n, 2 * n)


def propagate_bloch(state: CorrelationState, ops: OperatorSet, t: float) -> CorrelationState:
    """Same as :func:`propagate` for periodic chains, one 2x2 block per momentum."""
    _require_pbc(ops)
    _require_loss(ops)
    if t < 0:
        raise DomainError(f"time must be nonnegative, got {t}")
    k, Ck = momentum_correlation(state)
    _, Dk = bloch_blocks(ops.D, k, sign=+1)
    Ek = np.stack([scipy.linalg.expm(1j * d * t) for d in Dk])
    Ct = Ek @ Ck @ np.conj(np.transpose(Ek, (0, 2, 1)))
    C = from_momentum(k, Ct)
    return CorrelationState((C + C.conj().T) / 2, state.time + t)


def _require_pbc(ops: OperatorSet) -> None:
    if ops.spec is None or not ops.spec.periodic:
        raise DomainError("momentum-space quantities need a periodic chain")


# --- observables ----------------------------------------------------------------------

def density_real(state: CorrelationState) -> np.ndarray:
    return np.diag(state.C).real.copy()


@dataclass(frozen=True)
class MomentumDensity:
    k: np.ndarray
    total: np.ndarray         # sublattice trace of C(k)
    bands: np.ndarray         # (n_k, 2) occupations of the h_eff(k) bands, ordered (eps_+, eps_-)
    flagged: np.ndarray       # near-exceptional momenta where ``bands`` falls back to sublattices

    def asymmetry(self) -> float:
        return momentum_asymmetry(self.k, self.total)


def density_momentum(state: CorrelationState, ops: OperatorSet, cond_max: float = 1e6) -> MomentumDensity:
    _require_pbc(ops)
    k, Ck = momentum_correlation(state)
    _, Hk = bloch_blocks(ops.h_eff, k, sign=-1)
    total = np.einsum("kss->k", Ck).real
    bands = np.empty((k.size, 2))
    flagged = np.zeros(k.size, dtype=bool)
    for j, (H, C) in enumerate(zip(Hk, Ck)):
        w, V = np.linalg.eig(H)
        V = V[:, np.argsort(-w.real, kind="stable")]
        V = V / np.linalg.norm(V, axis=0)
        if np.linalg.cond(V) > cond_max:
            flagged[j] = True
            bands[j] = np.diag(C).real
            continue
        # occupation of d = sum_s conj(psi_s) a_s  ->  psi^T C conj(psi)
        bands[j] = np.einsum("sa,st,ta->a", V, C, V.conj()).real
    return MomentumDensity(k=k, total=total, bands=bands, flagged=flagged)


def momentum_asymmetry(k, n_k) -> float:
    """``sum_{k>0} (n_k - n_{-k})`` over momenta whose mirror is on the grid."""
    k = np.asarray(k)
    n_k = np.asarray(n_k)
    lookup = {round(float(q), 12): float(n) for q, n in zip(k, n_k)}
    total = 0.0
    for q, n in zip(k, n_k):
        if 1e-12 < q < np.pi - 1e-12:
            total += n - lookup[round(float(-q), 12)]
    return total


def group_velocity_partition(params: DerivedParams, n_k: int = 512, tol: float = 1e-10):
    """Label each k on the symmetric grid by the sign of ``d Re eps_+ / dk``."""
    k = -np.pi + 2.0 * np.pi * np.arange(n_k) / n_k
    dk = 2.0 * np.pi / n_k
    plus_r, _ = dispersion_pbc(params, k + dk)
    plus_l, _ = dispersion_pbc(params, k - dk)
    v = (plus_r.real - plus_l.real) / (2 * dk)
    labels = np.where(v > tol, "right_mover", np.where(v < -tol, "left_mover", "stationary"))
    return k, v, labels


__all__ = [
    "InitialRule", "CorrelationState", "Propagator", "matrix_exponential", "prepare_initial_state",
    "projector_from_orbitals", "propagator", "propagate", "evolve", "bloch_blocks",
    "momentum_correlation", "from_momentum", "propagate_bloch", "density_real", "MomentumDensity",
    "density_momentum", "momentum_asymmetry", "group_velocity_partition",
]
