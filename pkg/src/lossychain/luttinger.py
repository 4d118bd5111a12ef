"""Short-time bosonized dynamics of a lossy Luttinger liquid.

Only the ``(b_q^dag, b_{-q})`` pair dynamics and the resulting momentum-space
entanglement between ``q`` and ``-q`` are modelled; ``v`` and ``g2`` are free
inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.linalg
from scipy.special import xlogy

from .errors import DomainError

VALIDITY = 0.2


@dataclass(frozen=True)
class LuttingerParams:
    v: float
    g2: float
    gamma: float
    q_grid: tuple = field(default=(0.5,))
    t_grid: tuple = field(default=(0.01,))

    def __post_init__(self):
        if self.v <= 0:
            raise DomainError("sound velocity must be positive")
        if self.gamma < 0:
            raise DomainError("loss rate must be nonnegative")
        if any(q <= 0 for q in self.q_grid):
            raise DomainError("momenta must be positive")


@dataclass(frozen=True)
class BogoliubovPair:
    u: complex
    v_coef: complex
    q: float
    t: float
    flagged: bool = False
    raw_u: complex = 1.0
    raw_v: complex = 0.0


def eom_generator(params: LuttingerParams, q: float) -> np.ndarray:
    """``d/dt (b_q^dag, b_{-q}) = M (b_q^dag, b_{-q})``.

    The pairing entries follow from ``i[H, .]`` for the quadratic Hamiltonian,
    so at ``gamma = 0`` the evolution is a proper Bogoliubov transformation.
    """
    aq = abs(q)
    return np.array([
        [-4.0 * params.gamma + 1j * params.v * aq, 1j * params.g2 * aq],
        [-1j * params.g2 * aq, -1j * params.v * aq],
    ])


def eom_integrate(params: LuttingerParams, q: float, t_grid=None) -> np.ndarray:
    """Coefficient matrices ``X(t)`` with ``(b_q^dag(t), b_{-q}(t)) = X(t) (b_q^dag, b_{-q})``.

    Returns an array of shape ``(len(t_grid), 2, 2)``.
    """
    M = eom_generator(params, q)
    ts = params.t_grid if t_grid is None else t_grid
    return np.stack([scipy.linalg.expm(M * t) for t in np.asarray(ts, dtype=float)])


def bogoliubov_short_time(params: LuttingerParams, q: float, t: float) -> BogoliubovPair:
    """Leading-order pseudo-Bogoliubov coefficients, rescaled to ``|u|^2 + |v|^2 = 1``.

    ``g2`` does not enter at this order.
    """
    if t < 0:
        raise DomainError("time must be nonnegative")
    aq = abs(q)
    u = 1.0 + 1j * params.v * aq * t - 4.0 * params.gamma * t
    v = -2.0 * np.sqrt(2.0) * 1j * np.sqrt(params.gamma * t)
    norm = np.sqrt(abs(u) ** 2 + abs(v) ** 2)
    flagged = t * max(4.0 * params.gamma, params.v * aq) >= VALIDITY
    return BogoliubovPair(u=complex(u / norm), v_coef=complex(v / norm), q=float(q), t=float(t),
                          flagged=bool(flagged), raw_u=complex(u), raw_v=complex(v))


@dataclass(frozen=True)
class MSEE:
    S: float
    per_mode: np.ndarray
    occupations: np.ndarray
    decay_factor: float


def mode_entropy(n) -> np.ndarray:
    n = np.asarray(n, dtype=float)
    return -(xlogy(n, n) + xlogy(1.0 - n, 1.0 - n))


def msee_short_time(pairs, gamma: float | None = None) -> MSEE:
    """Entanglement between ``q`` and ``-q`` summed over the pairs at a common time."""
    pairs = list(pairs)
    if not pairs:
        return MSEE(0.0, np.zeros(0), np.zeros(0), 1.0)
    ts = {p.t for p in pairs}
    if len(ts) != 1:
        raise DomainError("pairs must share a common time")
    n = np.array([abs(p.v_coef) ** 2 for p in pairs])
    if np.any(n < -1e-12) or np.any(n > 1 + 1e-12):
        raise DomainError("mode occupation outside [0, 1]")
    s = mode_entropy(np.clip(n, 0.0, 1.0))
    t = ts.pop()
    decay = float(np.exp(-8.0 * gamma * t)) if gamma is not None else float("nan")
    return MSEE(S=float(s.sum()), per_mode=s, occupations=n, decay_factor=decay)


def msee_curve(params: LuttingerParams) -> np.ndarray:
    """``S(t)`` over ``params.t_grid`` summed over ``params.q_grid``."""
    out = []
    for t in params.t_grid:
        pairs = [bogoliubov_short_time(params, q, t) for q in params.q_grid]
        out.append(msee_short_time(pairs, params.gamma).S)
    return np.array(out)


__all__ = [
    "LuttingerParams", "BogoliubovPair", "eom_generator", "eom_integrate", "bogoliubov_short_time",
    "MSEE", "mode_entropy", "msee_short_time", "msee_curve",
]
