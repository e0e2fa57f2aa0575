"""Speed of disentanglement (SoDE) engines.

The SoDE is |dN/dt| at t = 0 for the negativity N of one qubit against
the rest, under a local noise channel.  ``sode_perturbative`` computes it
exactly from first-order perturbation of the partially transposed state:

    eta = eta_minus - eta_zero
    eta_minus = 2 sum_k <psi_k^-| sigma^{T_i} |psi_k^->       (negative subspace)
    eta_zero  = ||sigma_0||_1 - tr sigma_0                    (zero subspace)

where sigma is the exact t = 0 generator and sigma_0 the compression of
sigma^{T_i} onto the zero eigenspace of rho^{T_i}.  The module also
carries a finite-difference cross-check and every closed-form speed law
used in the experiments, plus the alternative robustness
R = 1 - exp(-T*) with characteristic time T* = N/eta.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable


from . import channels, measures, states
from ._backend import kernels
from .measures import InvariantSet
from .states import QuantumState

ZERO_TOL = 1e-9       # eigenvalue classification band, scaled by spectral radius
THETA_BAND = 1e-9     # branch band for the general three-qubit formula
NEGATIVE_ETA_GUARD = 1e-9


@dataclass(frozen=True)
class SodeReport:
    """Perturbative solve for one (state, qubit, channel) query.

    eta = eta_minus - eta_zero (clamped to 0 when negligibly negative);
    neg_dim / zero_dim are the negative / zero subspace dimensions of the
    partially transposed state.  t_star = negativity/eta (+inf when
    eta = 0 with entanglement left) and robustness = 1 - exp(-t_star).
    """

    eta: float
    eta_minus: float
    eta_zero: float
    negativity: float
    t_star: float
    robustness: float
    neg_dim: int
    zero_dim: int


def robustness(n: float, eta: float) -> tuple[float, float]:
    """Characteristic time T* = n/eta and robustness R = 1 - exp(-T*).

    Conventions: n = 0 gives (0, 0); eta = 0 with n > 0 gives (+inf, 1).
    """
    if n < 0 or eta < 0:
        raise ValueError(f"n = {n!r} and eta = {eta!r} must be non-negative")
    if n == 0.0:
        return 0.0, 0.0
    if eta == 0.0:
        return math.inf, 1.0
    t_star = n / eta
    return t_star, 1.0 - math.exp(-t_star)


def sode_perturbative(
    state: QuantumState, qubit: int, kind: str = channels.DEPOLARIZING
) -> SodeReport:
    """Exact t = 0 disentanglement speed via the perturbation approach."""
    kind = channels.check_kind(kind)
    q = int(qubit)
    if not 0 <= q < state.k:
        raise ValueError(f"qubit index {qubit} out of range for k={state.k}")
    sigma = channels.generator_density(state.rho, state.k, kind)
    rho_pt = kernels.partial_transpose(state.rho, q, state.k)
    sigma_pt = kernels.partial_transpose(sigma, q, state.k)
    eta_minus, eta_zero, neg, d_neg, d_zero = kernels.eta_split(rho_pt, sigma_pt, ZERO_TOL)
    eta = eta_minus - eta_zero
    assert eta >= -NEGATIVE_ETA_GUARD, f"eta = {eta!r} below the negativity guard"
    eta = max(eta, 0.0)
    t_star, r = robustness(neg, eta)
    return SodeReport(
        eta=eta,
        eta_minus=eta_minus,
        eta_zero=eta_zero,
        negativity=neg,
        t_star=t_star,
        robustness=r,
        neg_dim=d_neg,
        zero_dim=d_zero,
    )


def sode_finite_difference(
    state: QuantumState,
    qubit: int,
    kind: str = channels.DEPOLARIZING,
    dt: float = 1e-9,
    measure: str = "negativity",
) -> float:
    """(m(rho) - m(rho_dt))/dt for m = negativity or concurrence2."""
    kind = channels.check_kind(kind)
    if dt <= 0:
        raise ValueError(f"dt = {dt!r} must be positive")
    q = int(qubit)
    if not 0 <= q < state.k:
        raise ValueError(f"qubit index {qubit} out of range for k={state.k}")
    evolved = channels.evolve_density(state.rho, state.k, dt, kind)
    if measure == "negativity":
        before = kernels.negativity_from_pt(kernels.partial_transpose(state.rho, q, state.k))
        after = kernels.negativity_from_pt(kernels.partial_transpose(evolved, q, state.k))
    elif measure == "concurrence2":
        if state.k != 2:
            raise ValueError("measure 'concurrence2' requires a two-qubit state")
        before = measures.concurrence2_density(state.rho)
        after = measures.concurrence2_density(evolved)
    else:
        raise ValueError(f"measure must be 'negativity' or 'concurrence2', got {measure!r}")
    return (before - after) / dt


# ---------------------------------------------------------------------------
# closed-form speed laws
# ---------------------------------------------------------------------------


def _check_unit(n: float, name: str = "n") -> float:
    v = float(n)
    if not -1e-12 <= v <= 1.0 + 1e-12:
        raise ValueError(f"{name} = {n!r} outside [0, 1]")
    return min(max(v, 0.0), 1.0)


def eta_pure2(n: float) -> float:
    """Two-qubit pure-state law: eta = 2n + 1."""
    return 2.0 * _check_unit(n) + 1.0


def eta_bounds2(n: float) -> tuple[float, float]:
    """(lower, upper) speed bounds for arbitrary two-qubit states.

    lower = (n^2 + sqrt(2n(n+1))) / (1 + 2n - sqrt(2n(n+1))), upper = 2n + 1.
    The lower bound behaves like sqrt(2n) as n -> 0.
    """
    v = _check_unit(n)
    root = math.sqrt(2.0 * v * (v + 1.0))
    lower = (v * v + root) / (1.0 + 2.0 * v - root)
    return lower, 2.0 * v + 1.0


def min_negativity_for_concurrence(c: float) -> float:
    """Smallest negativity compatible with concurrence c (frontier mixtures)."""
    v = _check_unit(c, "c")
    return math.sqrt(v * v + (1.0 - v) ** 2) + v - 1.0


def eta_rho_c(n: float, c: float) -> float:
    """Speed of the Bell/|01>/|10> mixture family in terms of (n, c).

    eta = 2n + 1 - 2(1-c)(c-n)(1+n) / (n^2 - c^2 + 2c(1+n)); reduces to
    the pure-state law at c = n and to the lower bound at maximal c.
    """
    nv = float(n)
    cv = _check_unit(c, "c")
    if not 0.0 < nv <= 1.0 + 1e-12:
        raise ValueError(f"n = {n!r} outside (0, 1]")
    if cv < nv - 1e-12:
        raise ValueError(f"infeasible pair: c = {c!r} below n = {n!r}")
    if nv < min_negativity_for_concurrence(cv) - 1e-9:
        raise ValueError(f"infeasible pair: n = {n!r} below the frontier for c = {c!r}")
    return 2.0 * nv + 1.0 - (
        2.0 * (1.0 - cv) * (cv - nv) * (1.0 + nv)
        / (nv * nv - cv * cv + 2.0 * cv * (1.0 + nv))
    )


def eta_g3(n: float) -> float:
    """Three-qubit GHZ-type law: eta = 3n + 1/2 (lower symmetric frontier)."""
    return 3.0 * _check_unit(n) + 0.5


def eta_j3(n: float) -> float:
    """Three-qubit W-type law: eta = 5n/2 + 1 (upper symmetric frontier)."""
    return 2.5 * _check_unit(n) + 1.0


def eta_sym3(n: float, tau: float, i4: float) -> float:
    """Closed form for permutation-symmetric three-qubit pure states.

    eta = (32 - 32 I4 - 12 n^2 + 84 n^3 + 69 n^4 + 3 tau^2) / (24 n^2 (n+1)).
    """
    nv = float(n)
    if nv <= 0.0:
        raise ValueError(f"n = {n!r} must be positive (formula is singular at 0)")
    num = 32.0 - 32.0 * i4 - 12.0 * nv**2 + 84.0 * nv**3 + 69.0 * nv**4 + 3.0 * tau**2
    return num / (24.0 * nv**2 * (nv + 1.0))


def eta_gen3(inv: InvariantSet) -> float:
    """Closed form for arbitrary three-qubit pure states (qubit 0 vs rest).

    Main fraction
      (-16 - 12 Theta - 32 I4 + 36 N^2 + 84 N^3 + 57 N^4
        + 12 (I2 + I3)(2 - N^2)) / (24 N^2 (N + 1))
    minus (sqrt(M^2 + N^2 Theta) - M)/N^2 when Theta > 0.
    """
    n = float(inv.N1)
    if n <= 0.0:
        raise ValueError(f"N1 = {inv.N1!r} must be positive (formula is singular at 0)")
    theta, m = inv.Theta, inv.M
    num = (
        -16.0
        - 12.0 * theta
        - 32.0 * inv.I4
        + 36.0 * n**2
        + 84.0 * n**3
        + 57.0 * n**4
        + 12.0 * (inv.I2 + inv.I3) * (2.0 - n**2)
    )
    eta = num / (24.0 * n**2 * (n + 1.0))
    if theta > THETA_BAND:
        eta -= (math.sqrt(m * m + n * n * theta) - m) / (n * n)
    return eta


def eta_lambda_minus(n1: float, i3: float) -> float:
    """Negative-subspace speed of the |000>/|001>/|110> family."""
    if n1 <= 0.0:
        raise ValueError(f"n1 = {n1!r} must be positive")
    return 2.5 * n1 + 1.0 - (1.0 - n1) * (1.0 - i3) / (n1 * n1)


def eta_lambda_zero(n1: float, i3: float, theta: float) -> float:
    """Zero-subspace speed of the |000>/|001>/|110> family (0 unless Theta > 0)."""
    if n1 <= 0.0:
        raise ValueError(f"n1 = {n1!r} must be positive")
    if theta <= 0.0:
        return 0.0
    one_m_i3 = 1.0 - i3
    return (math.sqrt(one_m_i3**2 + n1 * n1 * theta) - one_m_i3) / (n1 * n1)


def eta_ghz_k(k: int, n: float) -> float:
    """k-qubit GHZ-type law eta = k n + 1/2, valid for k >= 3.

    The two-qubit family follows eta = 2n + 1 instead and is rejected.
    """
    if int(k) < 3:
        raise ValueError(f"k = {k!r} must be at least 3 (two qubits follow 2n + 1)")
    return int(k) * _check_unit(n) + 0.5


def eta_w_k(k: int) -> float:
    """k-qubit W-state law ((k+2) sqrt(k-1) + 2(k-1) - (k-2) sqrt(k-2)) / k."""
    kk = int(k)
    if kk < 2:
        raise ValueError(f"k = {k!r} must be at least 2")
    return ((kk + 2) * math.sqrt(kk - 1) + 2 * (kk - 1) - (kk - 2) * math.sqrt(kk - 2)) / kk


def eta_dephasing_ghz_k(k: int, n: float) -> float:
    """GHZ-type law under dephasing: eta = k n (concurrence and negativity alike)."""
    if int(k) < 2:
        raise ValueError(f"k = {k!r} must be at least 2")
    return int(k) * _check_unit(n)


FORMULAS = {
    "Pure2": eta_pure2,
    "Bounds2": eta_bounds2,
    "RhoC": eta_rho_c,
    "G3": eta_g3,
    "J3": eta_j3,
    "Sym3": eta_sym3,
    "Gen3": eta_gen3,
    "GhzK": eta_ghz_k,
    "WK": eta_w_k,
    "DephGhzK": eta_dephasing_ghz_k,
}


def eta_formula(tag: str, *args, **kwargs):
    """Evaluate a closed-form speed law by tag, e.g. eta_formula('Pure2', n=1)."""
    try:
        fn = FORMULAS[tag]
    except KeyError:
        raise ValueError(f"unknown speed formula {tag!r}") from None
    return fn(*args, **kwargs)


def delta_eta_phase(
    k: int,
    q: float,
    phi_grid: Iterable[float],
    kind: str = channels.DEPOLARIZING,
    qubit: int = 0,
) -> float:
    """Maximal speed spread over relative phases of the GHZ/W superposition.

    max - min of the solver speed for |Z(q, phi)> over the phi grid; the
    negativity itself is phase-independent.
    """
    grid = [float(p) for p in phi_grid]
    if not grid:
        raise ValueError("phi_grid must be nonempty")
    etas = [
        sode_perturbative(states.z_state(k, q, phi), qubit, kind).eta for phi in grid
    ]
    return max(etas) - min(etas)
