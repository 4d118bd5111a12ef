"""Dimerized fermion chain with correlated particle loss.

Site layout: site ``i = 2*n + s`` with ``s = 0`` for sublattice A and ``s = 1``
for sublattice B, ``n`` in ``[0, N)``.  Every other module reads its matrices
from :func:`build_operators`.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .errors import DomainError


class Boundary(str, enum.Enum):
    PERIODIC = "periodic"
    OPEN = "open"


@dataclass(frozen=True)
class ModelSpec:
    """Control point of the lossy chain.

    ``orientation`` fixes the relative sign inside each jump operator:
    ``+1`` gives ``c_{n,A} - c_{n,B}`` (the default), ``-1`` gives
    ``c_{n,A} + c_{n,B}``.  Flipping it mirrors the chiral damping front.
    """

    n_cells: int
    lam: float
    eta: float
    boundary: Boundary = Boundary.PERIODIC
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, "boundary", Boundary(self.boundary))
        if int(self.n_cells) != self.n_cells or self.n_cells < 1:
            raise DomainError(f"n_cells must be a positive integer, got {self.n_cells!r}")
        object.__setattr__(self, "n_cells", int(self.n_cells))
        _check_unit_interval("lambda", self.lam)
        _check_unit_interval("eta", self.eta)
        if self.orientation not in (1, -1):
            raise DomainError(f"orientation must be +1 or -1, got {self.orientation!r}")

    @property
    def n_sites(self) -> int:
        return 2 * self.n_cells

    @property
    def periodic(self) -> bool:
        return self.boundary is Boundary.PERIODIC


@dataclass(frozen=True)
class DerivedParams:
    lam: float
    eta: float
    w: float
    v: float
    gamma_A: float
    gamma_B: float
    gamma: float
    t1: float
    t2: float
    t1p: float
    t2p: float
    mu: float

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in self.__dataclass_fields__}


def _check_unit_interval(name: str, value: float) -> None:
    if not (0.0 < value < 1.0):
        raise DomainError(f"{name} must lie in the open interval (0, 1), got {value!r}")


def derive_params(lam: float, eta: float) -> DerivedParams:
    """Hopping magnitudes, loss rates and effective non-reciprocal hoppings."""
    _check_unit_interval("lambda", lam)
    _check_unit_interval("eta", eta)
    w = 1.0 - eta
    v = eta
    gamma_A = (1.0 - 2.0 * lam) * (1.0 - eta)
    gamma_B = (1.0 - 2.0 * lam) * eta
    t1 = (1.0 - eta) * (1.0 - lam)
    t2 = eta * (1.0 - lam)
    t1p = lam * (1.0 - eta)
    t2p = -lam * eta
    return DerivedParams(
        lam=lam, eta=eta, w=w, v=v,
        gamma_A=gamma_A, gamma_B=gamma_B, gamma=gamma_A + gamma_B,
        t1=t1, t2=t2, t1p=t1p, t2p=t2p, mu=(2.0 * lam - 1.0) / 2.0,
    )


@dataclass(frozen=True, eq=False)
class OperatorSet:
    """Single-particle matrices of the Lindbladian.

    ``jumps`` holds one coefficient vector ``l`` per jump operator
    ``L = sum_i l_i c_i``; ``K = sum_l conj(l) l^T`` so that
    ``sum_l L^dag L = sum_mn K_mn c_m^dag c_n``.
    """

    h: np.ndarray
    jumps: tuple
    K: np.ndarray
    h_eff: np.ndarray
    D: np.ndarray
    spec: ModelSpec | None = None
    params: DerivedParams | None = None
    unit_cell: int = field(default=2)

    @classmethod
    def from_jumps(cls, h, jumps, spec=None, params=None, unit_cell=2) -> "OperatorSet":
        h = np.array(h, dtype=complex)
        n = h.shape[0]
        jumps = tuple(np.asarray(l, dtype=complex) for l in jumps)
        K = np.zeros((n, n), dtype=complex)
        for l in jumps:
            K += np.outer(l.conj(), l)
        h_eff = h - 0.5j * K
        D = h.T + 0.5j * K.T
        for m in (h, K, h_eff, D):
            m.setflags(write=False)
        return cls(h=h, jumps=jumps, K=K, h_eff=h_eff, D=D, spec=spec,
                   params=params, unit_cell=unit_cell)

    @property
    def n_sites(self) -> int:
        return self.h.shape[0]


def hopping_matrix(spec: ModelSpec) -> np.ndarray:
    """Hermitian hopping matrix with imaginary amplitudes ``i w/2``, ``i v/2``."""
    N, L = spec.n_cells, spec.n_sites
    w, v = 1.0 - spec.eta, spec.eta
    h = np.zeros((L, L), dtype=complex)
    for n in range(N):
        a, b = 2 * n, 2 * n + 1
        h[b, a] += 0.5j * w
        h[a, b] -= 0.5j * w
        if n < N - 1 or spec.periodic:
            a_next = (2 * n + 2) % L
            h[a_next, b] += 0.5j * v
            h[b, a_next] -= 0.5j * v
    return h


def jump_vectors(spec: ModelSpec) -> list[np.ndarray]:
    params = derive_params(spec.lam, spec.eta)
    if params.gamma_A < 0 or params.gamma_B < 0:
        raise DomainError(
            f"negative loss rates: lambda={spec.lam} > 1/2 is only valid for spectral analysis"
        )
    N, L = spec.n_cells, spec.n_sites
    sign = -float(spec.orientation)
    sqA, sqB = np.sqrt(params.gamma_A), np.sqrt(params.gamma_B)
    jumps = []
    for n in range(N):
        l = np.zeros(L, dtype=complex)
        l[2 * n] = sqA
        l[2 * n + 1] = sign * sqA
        jumps.append(l)
    for n in range(N):
        if n == N - 1 and not spec.periodic:
            continue
        l = np.zeros(L, dtype=complex)
        l[2 * n + 1] = sqB
        l[(2 * n + 2) % L] += sign * sqB
        jumps.append(l)
    return jumps


def build_operators(spec: ModelSpec) -> OperatorSet:
    if spec.periodic and spec.n_cells < 2:
        raise DomainError("periodic boundary needs n_cells >= 2 (a single cell would double-count bonds)")
    return OperatorSet.from_jumps(
        hopping_matrix(spec), jump_vectors(spec), spec=spec,
        params=derive_params(spec.lam, spec.eta),
    )


def spectral_operators(spec: ModelSpec) -> tuple[np.ndarray, np.ndarray]:
    """``(h, h_eff)`` for any lambda in (0, 1), including the gain side lambda > 1/2.

    The dissipative part is continued analytically: ``K`` is assembled with
    signed rates, so it stops being positive semidefinite once lambda > 1/2.
    """
    if spec.periodic and spec.n_cells < 2:
        raise DomainError("periodic boundary needs n_cells >= 2")
    if spec.lam <= 0.5:
        ops = build_operators(spec)
        return ops.h, ops.h_eff
    flipped = ModelSpec(spec.n_cells, 1.0 - spec.lam, spec.eta, spec.boundary, spec.orientation)
    K = build_operators(flipped).K
    h = hopping_matrix(spec)
    # gamma(lam) = -gamma(1 - lam): same bond pattern, opposite sign
    return h, h + 0.5j * K


def consistency_check(ops: OperatorSet) -> dict:
    """Defects of the operator set; every entry should be below ~1e-13."""
    h, K, h_eff, D = ops.h, ops.K, ops.h_eff, ops.D
    anti = (h_eff - h_eff.conj().T) / 2.0
    herm = (h_eff + h_eff.conj().T) / 2.0
    report = {
        "anti_hermitian_defect": float(np.max(np.abs(anti + 0.5j * K), initial=0.0)),
        "hermitian_part_defect": float(np.max(np.abs(herm - h), initial=0.0)),
        "h_hermiticity": float(np.max(np.abs(h - h.conj().T), initial=0.0)),
        "K_hermiticity": float(np.max(np.abs(K - K.conj().T), initial=0.0)),
        "K_min_eigenvalue": float(np.linalg.eigvalsh((K + K.conj().T) / 2).min()),
        "D_defect": float(np.max(np.abs(D - (h.T + 0.5j * K.T)), initial=0.0)),
    }
    defects = [v for k, v in report.items() if k != "K_min_eigenvalue"]
    report["passed"] = bool(max(defects) <= 1e-13 and report["K_min_eigenvalue"] >= -1e-12)
    return report


def with_operators(ops: OperatorSet, **changes) -> OperatorSet:
    """Copy of ``ops`` with some matrices replaced (fault injection, tests)."""
    fields = dict(h=ops.h, jumps=ops.jumps, K=ops.K, h_eff=ops.h_eff, D=ops.D,
                  spec=ops.spec, params=ops.params, unit_cell=ops.unit_cell)
    fields.update(changes)
    return OperatorSet(**fields)
