"""Entanglement and correlation functionals.

Negativity (normalized so a Bell state scores 1), Wootters concurrence,
pure-state bipartite concurrence, linear entropy, quantum mutual
information and the five local-unitary invariants of three-qubit pure
states.  Entropies use the natural logarithm.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import linalg
from ._backend import kernels
from .states import QuantumState

ENTROPY_CLIP = 1e-12

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_YY = np.kron(_SIGMA_Y, _SIGMA_Y)


@dataclass(frozen=True)
class InvariantSet:
    """Local-unitary invariants of a three-qubit pure state.

    I1..I3 are one-qubit purities, I4 the pair invariant
    3 tr[(rho_i (x) rho_j) rho_ij] - tr rho_i^3 - tr rho_j^3, and
    I5 = tau^2 with tau the three-tangle.  N1..N3 are one-vs-rest
    negativities, Cij concurrences of the two-qubit reductions, and
    Theta = (I2 - I3)^2 - tau^2/4 flags a nonzero zero-subspace speed
    contribution.  M = (5 - 3 I1 - 3 I2 - 3 I3 + 4 I4)/3.
    """

    I1: float
    I2: float
    I3: float
    I4: float
    I5: float
    tau: float
    N1: float
    N2: float
    N3: float
    C12: float
    C13: float
    C23: float
    Theta: float
    M: float


def _check_qubit(state: QuantumState, qubit: int) -> int:
    q = int(qubit)
    if not 0 <= q < state.k:
        raise ValueError(f"qubit index {qubit} out of range for k={state.k}")
    return q


def _check_partition(state: QuantumState, partition: Iterable[int]) -> list[int]:
    part = sorted(set(int(q) for q in partition))
    if not part or len(part) >= state.k:
        raise ValueError(f"partition {part} must be a nonempty proper subset")
    if part[0] < 0 or part[-1] >= state.k:
        raise ValueError(f"partition {part} out of range for k={state.k}")
    return part


def _require_pure(state: QuantumState, what: str) -> np.ndarray:
    if state.amplitudes is None:
        raise ValueError(f"{what} requires a state constructed pure")
    return state.amplitudes


def negativity(state: QuantumState, qubit: int) -> float:
    """Twice the absolute sum of negative eigenvalues of rho^{T_qubit}."""
    q = _check_qubit(state, qubit)
    pt = kernels.partial_transpose(state.rho, q, state.k)
    return kernels.negativity_from_pt(pt)


def schmidt_coefficients(state: QuantumState, partition: Iterable[int]) -> np.ndarray:
    """Descending Schmidt coefficients of a pure state across a bipartition."""
    amps = _require_pure(state, "schmidt_coefficients")
    part = _check_partition(state, partition)
    rest = [q for q in range(state.k) if q not in part]
    tensor = amps.reshape((2,) * state.k).transpose(part + rest)
    return np.linalg.svd(tensor.reshape(2 ** len(part), -1), compute_uv=False)


def negativity_pure_schmidt(state: QuantumState, partition: Iterable[int]) -> float:
    """Pure-state negativity (sum_i a_i)^2 - 1 from the Schmidt coefficients."""
    a = schmidt_coefficients(state, partition)
    return max(0.0, float(np.sum(a)) ** 2 - 1.0)


def concurrence2_density(rho: np.ndarray) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    The lambda_i are obtained as singular values of
    sqrt(rho) (sigma_y (x) sigma_y) conj(sqrt(rho)), which shares its
    squared spectrum with rho rho~ but is numerically stable down to
    machine precision.
    """
    w, v = np.linalg.eigh(rho)
    s = (v * np.sqrt(np.clip(w, 0.0, None))) @ v.conj().T
    lam = np.linalg.svd(s @ _YY @ s.conj(), compute_uv=False)
    return max(0.0, float(lam[0] - lam[1] - lam[2] - lam[3]))


def concurrence2(state: QuantumState) -> float:
    """Wootters concurrence; two-qubit states only."""
    if state.k != 2:
        raise ValueError(f"concurrence2 requires k=2, got k={state.k}")
    return concurrence2_density(state.rho)


def pure_bipartite_concurrence(state: QuantumState, partition: Iterable[int]) -> float:
    """sqrt(2 (1 - tr rho_A^2)) for a pure state across a bipartition."""
    _require_pure(state, "pure_bipartite_concurrence")
    part = _check_partition(state, partition)
    red = linalg.partial_trace(state.rho, part, state.k)
    purity = float(np.trace(red @ red).real)
    return float(np.sqrt(max(0.0, 2.0 * (1.0 - purity))))


def linear_entropy(state: QuantumState) -> float:
    """(4/3)(1 - tr rho^2); the 4/3 normalization is the two-qubit convention."""
    if state.k != 2:
        raise ValueError(f"linear_entropy requires k=2, got k={state.k}")
    purity = float(np.trace(state.rho @ state.rho).real)
    return (4.0 / 3.0) * (1.0 - purity)


def von_neumann_entropy(rho: np.ndarray) -> float:
    """-tr(rho ln rho) with 0 ln 0 = 0; eigenvalues in [-1e-12, 0) clip to 0."""
    w = np.linalg.eigvalsh(rho)
    if w[0] < -ENTROPY_CLIP:
        raise ValueError(f"matrix has negative eigenvalue {w[0]:.3e}")
    w = w[w > 0.0]
    return float(-np.sum(w * np.log(w)))


def mutual_information(state: QuantumState, partition: Iterable[int]) -> float:
    """S(rho_A) + S(rho_B) - S(rho) across a bipartition, natural log."""
    part = _check_partition(state, partition)
    rest = [q for q in range(state.k) if q not in part]
    sa = von_neumann_entropy(linalg.partial_trace(state.rho, part, state.k))
    sb = von_neumann_entropy(linalg.partial_trace(state.rho, rest, state.k))
    return sa + sb - von_neumann_entropy(state.rho)


def invariants3(state: QuantumState) -> InvariantSet:
    """Full invariant set of a three-qubit pure state.

    I4 uses the qubit pair (1, 2) relative to qubit 0; on pure states the
    value is pair-independent.  tau comes from the monogamy combination
    |N1^2 - C12^2 - C13^2|.
    """
    if state.k != 3:
        raise ValueError(f"invariants3 requires k=3, got k={state.k}")
    _require_pure(state, "invariants3")
    rho = state.rho

    singles = [linalg.partial_trace(rho, [q], 3) for q in range(3)]
    purities = [float(np.trace(r @ r).real) for r in singles]
    negs = [negativity(state, q) for q in range(3)]

    r1, r2 = singles[1], singles[2]
    r12 = linalg.partial_trace(rho, [1, 2], 3)
    i4 = (
        3.0 * float(np.trace(np.kron(r1, r2) @ r12).real)
        - float(np.trace(r1 @ r1 @ r1).real)
        - float(np.trace(r2 @ r2 @ r2).real)
    )

    c = {
        pair: concurrence2_density(linalg.partial_trace(rho, list(pair), 3))
        for pair in ((0, 1), (0, 2), (1, 2))
    }
    tau = abs(negs[0] ** 2 - c[(0, 1)] ** 2 - c[(0, 2)] ** 2)
    theta = (purities[1] - purities[2]) ** 2 - tau**2 / 4.0
    m = (5.0 - 3.0 * (purities[0] + purities[1] + purities[2]) + 4.0 * i4) / 3.0
    return InvariantSet(
        I1=purities[0],
        I2=purities[1],
        I3=purities[2],
        I4=i4,
        I5=tau**2,
        tau=tau,
        N1=negs[0],
        N2=negs[1],
        N3=negs[2],
        C12=c[(0, 1)],
        C13=c[(0, 2)],
        C23=c[(1, 2)],
        Theta=theta,
        M=m,
    )
