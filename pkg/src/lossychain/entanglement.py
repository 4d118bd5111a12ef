"""Entanglement measures: Gaussian block entropies, two-qubit measures and scaling fits."""
from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np
from scipy.special import xlogy

from .dynamics import CorrelationState
from .errors import DomainError

CLAMP = 1e-12
PHYSICAL_SLACK = 1e-6
L_MIN = 4


@dataclass(frozen=True)
class EntropyRecord:
    t: float
    l: int
    S: float
    Z_ratio: float = 1.0


@dataclass(frozen=True)
class SpatialFit:
    a: float
    b: float
    c: float
    residual_rms: float


def reduced_block(state: CorrelationState | np.ndarray, l: int) -> np.ndarray:
    """Correlation matrix restricted to the contiguous left block of ``l`` sites."""
    C = state.C if isinstance(state, CorrelationState) else np.asarray(state)
    n = C.shape[0]
    if not (1 <= l < n):
        raise DomainError(f"block length must satisfy 1 <= l < {n}, got {l}")
    block = C[:l, :l]
    return (block + block.conj().T) / 2


def block_spectrum(state, l: int) -> np.ndarray:
    return np.linalg.eigvalsh(reduced_block(state, l))


def _binary_entropy(nu: np.ndarray) -> np.ndarray:
    return -(xlogy(nu, nu) + xlogy(1.0 - nu, 1.0 - nu))


def gaussian_entropy(nu) -> float:
    """``-sum nu ln nu + (1 - nu) ln(1 - nu)`` with 0 ln 0 = 0.

    Roundoff excursions outside [0, 1] are clipped; anything beyond 1e-6
    signals an unphysical correlation matrix.  No lower floor is applied, so
    long-time entropies of order 1e-12 stay resolvable.
    """
    nu = np.asarray(nu, dtype=float).ravel()
    if nu.size and (nu.min() < -PHYSICAL_SLACK or nu.max() > 1 + PHYSICAL_SLACK):
        raise DomainError(f"correlation eigenvalues leave [0, 1]: [{nu.min()}, {nu.max()}]")
    return float(_binary_entropy(np.clip(nu, 0.0, 1.0)).sum())


def block_entropy(state, l: int) -> float:
    return gaussian_entropy(block_spectrum(state, l))


def z_ratio(state_t, state_0, l: int) -> float:
    """Trace ratio ``Tr C_A(t) / Tr C_A(0)`` used as ``Z_t / Z_0``."""
    tr0 = float(np.trace(reduced_block(state_0, l)).real)
    if tr0 <= 0:
        raise DomainError("empty block at t = 0: trace ratio undefined")
    return float(np.trace(reduced_block(state_t, l)).real) / tr0


def entropy_eq7_variant(nu_t, nu_0, Z_ratio: float) -> float:
    """Trace-weighted entropy variant mixing time-t and t=0 block eigenvalues.

    ``S = -sum_s [C_s(t) ln C_s(t) - C_s(t) ln(Z - C_s(t)) + Z ln(1 - C_s(0))]``
    with eigenvalues of both times sorted ascending and paired by rank.  With
    ``Z = 1`` and equal spectra it reduces to :func:`gaussian_entropy`.
    """
    nu_t = np.sort(np.clip(np.asarray(nu_t, dtype=float).ravel(), CLAMP, 1 - CLAMP))
    nu_0 = np.sort(np.clip(np.asarray(nu_0, dtype=float).ravel(), CLAMP, 1 - CLAMP))
    if nu_t.shape != nu_0.shape:
        raise DomainError("time-t and t=0 spectra differ in size")
    arg = Z_ratio - nu_t
    bad = np.flatnonzero(arg <= 0)
    if bad.size:
        raise DomainError(f"log of nonpositive argument Z - C_sigma(t) at sigma={int(bad[0])}")
    terms = nu_t * np.log(nu_t) - nu_t * np.log(arg) + Z_ratio * np.log1p(-nu_0)
    return float(-terms.sum())


# --- two-qubit measures ---------------------------------------------------------------

_SYSY = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def _check_rho(rho, dim: int = 4) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (dim, dim):
        raise DomainError(f"expected a {dim}x{dim} density matrix, got {rho.shape}")
    if np.max(np.abs(rho - rho.conj().T)) > 1e-10:
        raise DomainError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > 1e-10:
        raise DomainError(f"density matrix trace {np.trace(rho).real} != 1")
    if np.linalg.eigvalsh((rho + rho.conj().T) / 2).min() < -1e-10:
        raise DomainError("density matrix is not positive semidefinite")
    return (rho + rho.conj().T) / 2


def von_neumann(rho) -> float:
    """``-Tr rho ln rho`` (natural log), 0 ln 0 = 0."""
    p = np.linalg.eigvalsh((np.asarray(rho) + np.asarray(rho).conj().T) / 2)
    p = p[p > CLAMP]
    return float(-(p * np.log(p)).sum())


def concurrence(rho) -> float:
    """Wootters concurrence of a two-qubit state."""
    rho = _check_rho(rho)
    R = rho @ _SYSY @ rho.conj() @ _SYSY
    ev = np.sort(np.sqrt(np.clip(np.linalg.eigvals(R).real, 0.0, None)))[::-1]
    return float(max(0.0, ev[0] - ev[1] - ev[2] - ev[3]))


def _h2(x: float, one_minus_x: float) -> float:
    out = 0.0
    for p in (x, one_minus_x):
        if p > 0:
            out -= p * np.log2(p)
    return out


def entanglement_of_formation(c: float) -> float:
    c = float(np.clip(c, 0.0, 1.0))
    root = np.sqrt(1.0 - c * c)
    # 1 - x computed without cancellation for small c
    one_minus_x = c * c / (2.0 * (1.0 + root))
    return _h2(1.0 - one_minus_x, one_minus_x)


def partial_trace_qubit(rho, keep: int) -> np.ndarray:
    """Reduce a two-qubit state in the basis {|00>, |10>, |01>, |11>} to qubit ``keep``.

    The first label (qubit 0) is the low bit of the basis index.
    """
    r = np.asarray(rho).reshape(2, 2, 2, 2)  # (bit1, bit0, bit1', bit0')
    if keep == 0:
        return np.einsum("aiaj->ij", r)
    return np.einsum("iaja->ij", r)


def mutual_information(rho) -> float:
    rho = _check_rho(rho)
    return (von_neumann(partial_trace_qubit(rho, 0)) + von_neumann(partial_trace_qubit(rho, 1))
            - von_neumann(rho))


# --- fits -----------------------------------------------------------------------------

def fit_spatial(records, L: int, l_min: int = L_MIN) -> SpatialFit:
    """Least squares ``S(l) = a ln sin(pi l / L) + b l + c`` on ``l in [l_min, L - l_min]``."""
    ls = np.array([r.l for r in records], dtype=float)
    S = np.array([r.S for r in records], dtype=float)
    keep = (ls >= l_min) & (ls <= L - l_min)
    ls, S = ls[keep], S[keep]
    if np.unique(ls).size < 10:
        raise DomainError(f"need at least 10 distinct block lengths in [{l_min}, {L - l_min}]")
    A = np.column_stack([np.log(np.sin(np.pi * ls / L)), ls, np.ones_like(ls)])
    coef, _, rank, _ = np.linalg.lstsq(A, S, rcond=None)
    if rank < 3:
        raise DomainError("rank-deficient design matrix (symmetric l grid?)")
    resid = A @ coef - S
    return SpatialFit(a=float(coef[0]), b=float(coef[1]), c=float(coef[2]),
                      residual_rms=float(np.sqrt(np.mean(resid ** 2))))


class Regime(str, enum.Enum):
    SHORT_TIME = "short_time"
    LONG_TIME_GAPPED = "long_time_gapped"
    LONG_TIME_GAPLESS = "long_time_gapless"


DEFAULT_WINDOWS = {
    Regime.SHORT_TIME: (1e-3, 5e-2),
    Regime.LONG_TIME_GAPLESS: (1e2, 1e4),
}


def _r_squared(y, fitted) -> float:
    ss_res = float(np.sum((y - fitted) ** 2))
    ss_tot = float(np.sum((y - np.mean(y)) ** 2))
    return 1.0 - ss_res / ss_tot if ss_tot > 0 else 1.0


def fit_temporal(t, S, regime) -> dict:
    """Fit entropy samples to the asymptotic form of ``regime``.

    short_time:        ``S = A t ln(1/t) + B t``        -> A, B, r2
    long_time_gapped:  ``ln(S/t) = ln c - rate t``       -> rate, r2
    long_time_gapless: ``ln S = p ln t + c``             -> p, r2, plus
                       ``p_lnln`` from ``ln(S/ln t) = p ln t + c``
    """
    regime = Regime(regime)
    t = np.asarray(t, dtype=float)
    S = np.asarray(S, dtype=float)
    if t.size < 3 or t.size != S.size:
        raise DomainError("need at least 3 matching (t, S) samples")
    if regime is Regime.SHORT_TIME:
        A = np.column_stack([t * np.log(1.0 / t), t])
        coef, *_ = np.linalg.lstsq(A, S, rcond=None)
        return {"A": float(coef[0]), "B": float(coef[1]), "r2": _r_squared(S, A @ coef)}
    if np.any(S <= 0) or np.any(t <= 0):
        raise DomainError("log fits need positive S and t")
    if regime is Regime.LONG_TIME_GAPPED:
        y = np.log(S / t)
        slope, icpt = np.polyfit(t, y, 1)
        return {"rate": float(-slope), "slope": float(slope),
                "r2": _r_squared(y, slope * t + icpt)}
    lt = np.log(t)
    if np.any(lt <= 0):
        raise DomainError("ln ln correction needs t > 1")
    p, c = np.polyfit(lt, np.log(S), 1)
    p2, _ = np.polyfit(lt, np.log(S) - np.log(lt), 1)
    return {"p": float(p), "p_lnln": float(p2), "r2": _r_squared(np.log(S), p * lt + c)}


def fit_decay_rate(t, y, prefactor_power: int = 0) -> float:
    """Rate ``r`` in ``y ~ t^prefactor_power exp(-r t)`` by a straight-line fit."""
    t = np.asarray(t, dtype=float)
    y = np.asarray(y, dtype=float)
    if np.any(y <= 0):
        raise DomainError("decay fit needs positive samples")
    slope, _ = np.polyfit(t, np.log(y) - prefactor_power * np.log(t), 1)
    return float(-slope)


__all__ = [
    "EntropyRecord", "SpatialFit", "reduced_block", "block_spectrum", "gaussian_entropy",
    "block_entropy", "z_ratio", "entropy_eq7_variant", "von_neumann", "concurrence",
    "entanglement_of_formation", "partial_trace_qubit", "mutual_information", "fit_spatial",
    "Regime", "fit_temporal", "fit_decay_rate",
]
