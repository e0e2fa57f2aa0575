"""Local depolarizing and dephasing noise acting qubit-wise.

Each qubit couples independently to its own environment; the decay
constant is fixed to 1 so ``t`` is dimensionless and the noise parameter
is s = exp(-t).  Kraus forms:

  depolarizing: E0 = sqrt(1 - p') I, Ej = sqrt(p'/3) sigma_j, p' = 3(1 - s)/4
  dephasing:    E0 = sqrt((1 + s)/2) I, E1 = sqrt((1 - s)/2) sigma_z

``generator`` returns the exact t = 0 derivative of the evolved state in
closed form (not by differencing), so the perturbative speed solver is
exact up to eigensolver error.
"""

from __future__ import annotations

import math

import numpy as np

from ._backend import kernels
from .states import QuantumState

DEPOLARIZING = "depolarizing"
DEPHASING = "dephasing"
CHANNEL_KINDS = (DEPOLARIZING, DEPHASING)

KAPPA = 1.0  # decay constant; time is measured in units of 1/KAPPA


def check_kind(kind: str) -> str:
    k = str(kind).strip().lower()
    if k not in CHANNEL_KINDS:
        raise ValueError(f"channel kind must be one of {CHANNEL_KINDS}, got {kind!r}")
    return k


def evolve_density(rho: np.ndarray, k: int, t: float, kind: str) -> np.ndarray:
    """Array-level channel application at time t (validated inputs)."""
    s = math.exp(-float(t))
    if kind == DEPOLARIZING:
        return kernels.depolarize(rho, k, s)
    return kernels.dephase(rho, k, s)


def generator_density(rho: np.ndarray, k: int, kind: str) -> np.ndarray:
    """Array-level exact t = 0 derivative (validated inputs)."""
    if kind == DEPOLARIZING:
        return kernels.depolarizing_generator(rho, k)
    return kernels.dephasing_generator(rho, k)


def apply_channel(state: QuantumState, t: float, kind: str = DEPOLARIZING) -> QuantumState:
    """Evolve a state for time t >= 0 under the qubit-wise channel."""
    kind = check_kind(kind)
    if t < 0:
        raise ValueError(f"t = {t!r} must be non-negative")
    if t == 0:
        return state
    rho = evolve_density(state.rho, state.k, t, kind)
    return QuantumState(k=state.k, rho=rho)


def generator(state: QuantumState, kind: str = DEPOLARIZING) -> np.ndarray:
    """Exact derivative of the evolved density matrix at t = 0.

    Depolarizing: sum_i [(I_i/2) (x) tr_i rho - rho]; dephasing:
    sum_i (Z_i rho Z_i - rho)/2.  Traceless and Hermitian.
    """
    kind = check_kind(kind)
    return generator_density(state.rho, state.k, kind)
