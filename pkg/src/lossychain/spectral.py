"""Complex spectra of the effective Hamiltonian and the Liouvillian."""
from __future__ import annotations

import enum
import itertools
import re
from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .errors import DomainError, NumericalError
from .model import Boundary, DerivedParams, ModelSpec, derive_params, spectral_operators

HERMITIAN_TOL = 1e-12
EXCEPTIONAL_TOL = 1e-10
LINE_GAP_TOL = 1e-8
SINGLE_BAND_TOL = 1e-12
CLASSIFY_GRID = 2048


class PhaseClass(str, enum.Enum):
    HERMITIAN = "hermitian"
    LINE_GAPPED = "line_gapped"
    POINT_GAPPED = "point_gapped"
    EXCEPTIONAL = "exceptional"
    SINGLE_BAND = "single_band"


@dataclass(frozen=True)
class SpectrumReport:
    eigenvalues: np.ndarray
    phase_class: PhaseClass | None
    liouvillian_gap: float
    gap_fast: float
    rapidities: np.ndarray


def k_grid(n: int) -> np.ndarray:
    """Symmetric grid ``k_j = -pi + 2 pi j / n``; contains k = 0 for even n."""
    return -np.pi + 2.0 * np.pi * np.arange(n) / n


def bloch_momenta(n_cells: int) -> np.ndarray:
    """Momenta allowed by periodic quantization, ``2 pi m / N`` folded into (-pi, pi]."""
    k = 2.0 * np.pi * np.arange(n_cells) / n_cells
    k = np.where(k > np.pi + 1e-12, k - 2.0 * np.pi, k)
    return np.sort(k)


def dispersion_pbc(params: DerivedParams, k) -> tuple[np.ndarray, np.ndarray]:
    """Bloch eigenvalues ``eps_+(k), eps_-(k)`` of the effective Hamiltonian.

    ``eps_+`` uses the principal square root, so ``Re eps_+ >= 0``.
    """
    k = np.asarray(k, dtype=float)
    prod = -(params.t1 + params.t2p * np.exp(1j * k)) * (params.t2 * np.exp(-1j * k) - params.t1p)
    root = np.sqrt(prod.astype(complex))
    return root + 1j * params.mu, -root + 1j * params.mu


def spectrum_numeric(M) -> np.ndarray:
    """All eigenvalues of a dense square matrix (LAPACK zgeev: Hessenberg + shifted QR)."""
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DomainError(f"expected a square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise DomainError("matrix has non-finite entries")
    try:
        return scipy.linalg.eigvals(M, check_finite=False)
    except np.linalg.LinAlgError as exc:
        m = re.search(r"(\d+)", str(exc))
        converged_from = int(m.group(1)) if m else -1
        raise NumericalError(
            f"QR iteration did not converge (eigenvalues from index {converged_from} on converged)"
        ) from exc


def classify_phase(lam: float, eta: float, n_k: int = CLASSIFY_GRID) -> PhaseClass:
    params = derive_params(lam, eta)
    if abs(lam - 0.5) <= HERMITIAN_TOL:
        return PhaseClass.HERMITIAN
    if min(eta, 1.0 - eta) <= SINGLE_BAND_TOL:
        return PhaseClass.SINGLE_BAND
    if abs(lam * (1.0 - lam) - eta * (1.0 - eta)) <= EXCEPTIONAL_TOL:
        return PhaseClass.EXCEPTIONAL
    eps_plus, _ = dispersion_pbc(params, k_grid(n_k))
    if np.min(np.abs(eps_plus.real)) > LINE_GAP_TOL:
        return PhaseClass.LINE_GAPPED
    return PhaseClass.POINT_GAPPED


def gaps(eigenvalues) -> tuple[float, float]:
    """``(gap_slow, gap_fast) = (-max Im eps, -min Im eps)``."""
    ev = np.asarray(eigenvalues)
    if ev.size == 0:
        raise DomainError("empty spectrum has no Liouvillian gap")
    return float(-ev.imag.max()), float(-ev.imag.min())


def liouvillian_gap(report: SpectrumReport | np.ndarray) -> float:
    """Slowest single-particle decay rate ``-max Im eps``.

    Clipped at zero: a gain spectrum (lambda > 1/2) has no decay gap.
    """
    ev = report.eigenvalues if isinstance(report, SpectrumReport) else report
    slow, _ = gaps(ev)
    return max(slow, 0.0)


def pbc_gaps(lam: float, eta: float, n_k: int = 4096) -> tuple[float, float]:
    """Gaps from the analytic dispersion sampled on a dense symmetric k-grid."""
    plus, minus = dispersion_pbc(derive_params(lam, eta), k_grid(n_k))
    return gaps(np.concatenate([plus, minus]))


def rapidities(D_eigenvalues) -> np.ndarray:
    return -1j * np.asarray(D_eigenvalues, dtype=complex)


def spectrum_report(spec: ModelSpec, operator: str = "h_eff") -> SpectrumReport:
    """Numerical spectrum of ``h_eff`` (or ``h``) with gaps, rapidities and phase."""
    h, h_eff = spectral_operators(spec)
    M = {"h_eff": h_eff, "h": h}[operator]
    ev = spectrum_numeric(M)
    slow, fast = gaps(ev)
    D_ev = spectrum_numeric(h_eff.conj())
    return SpectrumReport(
        eigenvalues=ev,
        phase_class=classify_phase(spec.lam, spec.eta),
        liouvillian_gap=max(slow, 0.0),
        gap_fast=fast,
        rapidities=rapidities(D_ev),
    )


def hausdorff_distance(a, b) -> float:
    a = np.asarray(a, dtype=complex)[:, None]
    b = np.asarray(b, dtype=complex)[None, :]
    d = np.abs(a - b)
    return float(max(d.min(axis=1).max(), d.min(axis=0).max()))


def multiset_distance(a, b) -> float:
    """Max distance under the optimal one-to-one matching of two equal-size spectra."""
    from scipy.optimize import linear_sum_assignment

    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise DomainError(f"spectra differ in size: {a.size} vs {b.size}")
    cost = np.abs(a[:, None] - b[None, :])
    rows, cols = linear_sum_assignment(cost)
    return float(cost[rows, cols].max(initial=0.0))


MANY_BODY_RULES = ("independent", "single")


def many_body_spectrum(rapidity_list, max_excitations: int | None = None,
                       rule: str = "independent", deduplicate: bool = True,
                       tol: float = 1e-10) -> np.ndarray:
    """Liouvillian eigenvalues assembled from single-particle rapidities.

    ``rule="independent"`` draws the ket subset ``S`` and the bra subset ``S'``
    independently: ``-sum_S lam_j - sum_S' conj(lam_j)``.  This is the rule that
    reproduces the dense superoperator spectrum.  ``rule="single"`` only keeps
    ``-sum_S lam_j`` and is retained for comparison.
    """
    lam = np.asarray(rapidity_list, dtype=complex).ravel()
    m = lam.size
    if rule not in MANY_BODY_RULES:
        raise DomainError(f"unknown rule {rule!r}; choose from {MANY_BODY_RULES}")
    if max_excitations is None:
        if m > 16:
            raise DomainError(f"{m} modes without max_excitations would enumerate 4^{m} eigenvalues")
        max_excitations = 2 * m
    channels = [-lam] if rule == "single" else [-lam, -lam.conj()]
    amps = np.concatenate(channels)
    n_ch = len(channels)
    out = []
    for size in range(0, max_excitations + 1):
        for combo in itertools.combinations(range(n_ch * m), size):
            out.append(amps[list(combo)].sum() if combo else 0.0 + 0.0j)
    values = np.array(out, dtype=complex)
    if not deduplicate:
        return values
    return _dedup(values, tol)


def _dedup(values: np.ndarray, tol: float) -> np.ndarray:
    values = values[np.lexsort((values.imag, values.real))]
    keep = np.ones(values.size, dtype=bool)
    for i in range(values.size):
        if keep[i]:
            close = np.abs(values[i + 1:] - values[i]) <= tol
            keep[i + 1:][close] = False
    return values[keep]


def spectra_for(spec: ModelSpec):
    """Convenience: ``(eig h_eff, eig D)`` for a model with lambda <= 1/2."""
    from .model import build_operators

    ops = build_operators(spec)
    return spectrum_numeric(ops.h_eff), spectrum_numeric(ops.D)


__all__ = [
    "Boundary", "PhaseClass", "SpectrumReport", "k_grid", "bloch_momenta", "dispersion_pbc",
    "spectrum_numeric", "classify_phase", "liouvillian_gap", "gaps", "pbc_gaps", "rapidities",
    "spectrum_report", "hausdorff_distance", "multiset_distance", "many_body_spectrum",
]
