"""State constructors, random-state samplers and local unitaries.

Every named family used in the two-, three- and k-qubit studies lives
here, plus Haar/Hilbert-Schmidt samplers and convex mixing.  Pure states
carry their amplitude vector alongside the density matrix; qubit 0 is
the leftmost (most significant) tensor factor.

Samplers take an explicit ``numpy.random.Generator``; callers own stream
splitting and there is no hidden global RNG.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import linalg

NORMALIZATION_TOL = 1e-9
PSD_TOL = 1e-10
_EPS = 1e-12


@dataclass(frozen=True)
class QuantumState:
    """Density matrix of a k-qubit register.

    ``amplitudes`` is set when the state was constructed pure; density
    matrices are compared directly, amplitude vectors only up to a global
    phase.
    """

    k: int
    rho: np.ndarray
    amplitudes: np.ndarray | None = None

    @property
    def dim(self) -> int:
        return 2**self.k

    @property
    def is_pure(self) -> bool:
        return self.amplitudes is not None

    def validate(self) -> "QuantumState":
        """Check unit trace, Hermiticity, positivity and purity consistency."""
        rho = linalg.require_qubit_operator(self.rho, self.k, "rho")
        if abs(float(np.trace(rho).real) - 1.0) > _EPS:
            raise ValueError(f"trace(rho) = {np.trace(rho).real!r}, expected 1")
        if not linalg.is_hermitian(rho):
            raise ValueError("rho is not Hermitian within tolerance")
        w = np.linalg.eigvalsh(rho)
        if w[0] < -PSD_TOL:
            raise ValueError(f"rho has negative eigenvalue {w[0]:.3e}")
        if self.amplitudes is not None:
            if abs(float(np.vdot(self.amplitudes, self.amplitudes).real) - 1.0) > PSD_TOL:
                raise ValueError("amplitudes are not normalized")
            if float(np.sum((rho @ rho - rho).real**2)) > PSD_TOL:
                raise ValueError("purity hint set but rho is not a projector")
        return self


def from_amplitudes(amplitudes) -> QuantumState:
    """Lift an amplitude vector to a pure QuantumState (length 2**k)."""
    a = np.ascontiguousarray(amplitudes, dtype=np.complex128).ravel()
    k = int(round(math.log2(a.size)))
    if 2**k != a.size or k < 1:
        raise ValueError(f"amplitude vector length {a.size} is not 2**k")
    norm = float(np.linalg.norm(a))
    if abs(norm - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"amplitudes norm {norm!r} differs from 1")
    a = a / norm
    return QuantumState(k=k, rho=np.outer(a, a.conj()), amplitudes=a)


def from_density(rho, k: int | None = None) -> QuantumState:
    """Wrap and validate a density matrix."""
    m = linalg.as_operator(rho, "rho")
    kk = int(round(math.log2(m.shape[0]))) if k is None else k
    return QuantumState(k=kk, rho=m).validate()


def _basis_ket(k: int, index: int) -> np.ndarray:
    v = np.zeros(2**k, dtype=np.complex128)
    v[index] = 1.0
    return v


def _require_range(value: float, lo: float, hi: float, name: str) -> float:
    v = float(value)
    if not (lo - _EPS <= v <= hi + _EPS):
        raise ValueError(f"{name} = {value!r} outside [{lo}, {hi}]")
    return min(max(v, lo), hi)


# ---------------------------------------------------------------------------
# two-qubit families
# ---------------------------------------------------------------------------


def pure_theta(theta: float) -> QuantumState:
    """cos(theta)|00> + sin(theta)|11>, theta in [0, pi/4]."""
    th = _require_range(theta, 0.0, math.pi / 4, "theta")
    a = np.zeros(4, dtype=np.complex128)
    a[0], a[3] = math.cos(th), math.sin(th)
    return from_amplitudes(a)


def ansatz(x: float, y: float, a: float, b: float, gamma: float) -> QuantumState:
    """X-shaped two-qubit mixture with weights x, y, a, b, gamma >= 0 summing to 1.

    Matrix form: diag(x + g/2, a, b, y + g/2) with corners g/2 coupling
    |00> and |11>.
    """
    params = {"x": x, "y": y, "a": a, "b": b, "gamma": gamma}
    for name, value in params.items():
        if value < -_EPS:
            raise ValueError(f"ansatz weight {name} = {value!r} is negative")
    total = sum(params.values())
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"ansatz weights sum to {total!r}, expected 1")
    x, y, a, b, gamma = (max(0.0, float(v)) for v in (x, y, a, b, gamma))
    m = np.zeros((4, 4), dtype=np.complex128)
    m[0, 0] = x + gamma / 2
    m[3, 3] = y + gamma / 2
    m[0, 3] = m[3, 0] = gamma / 2
    m[1, 1] = a
    m[2, 2] = b
    m /= np.trace(m).real
    return QuantumState(k=2, rho=m)


def rho_m(gamma: float) -> QuantumState:
    """Mixture of a Bell state with the orthogonal product state |01>."""
    g = _require_range(gamma, 0.0, 1.0, "gamma")
    return ansatz(x=0.0, y=0.0, a=1.0 - g, b=0.0, gamma=g)


def rho_k(gamma: float) -> QuantumState:
    """Bell state mixed evenly with |01> and |10| populations (gamma + 2a = 1)."""
    g = _require_range(gamma, 0.0, 1.0, "gamma")
    a = (1.0 - g) / 2
    return ansatz(x=0.0, y=0.0, a=a, b=a, gamma=g)


def rho_c(gamma: float, a: float, b: float) -> QuantumState:
    """Bell state plus independent |01>/|10> populations (gamma + a + b = 1)."""
    return ansatz(x=0.0, y=0.0, a=a, b=b, gamma=gamma)


def rho_sl(gamma: float, theta: float) -> QuantumState:
    """gamma |psi(theta)><psi(theta)| + (1 - gamma) |01><01|."""
    g = _require_range(gamma, 0.0, 1.0, "gamma")
    pure = pure_theta(theta)
    m = g * pure.rho
    m[1, 1] += 1.0 - g
    return QuantumState(k=2, rho=m)


def itot_concurrence_constraint(x: float) -> float:
    """Concurrence prescribed as a function of negativity: -x/2 + sqrt(x + 5x^2/4)."""
    return -x / 2 + math.sqrt(x + 1.25 * x * x)


def rho_itot(n_target: float, a_free: float) -> QuantumState:
    """Ansatz state with y = 0, negativity n_target and concurrence f(n_target).

    Substituting gamma = f(n) + 2 sqrt(a b) keeps the concurrence pinned;
    the remaining negativity constraint is solved for b by bisection.
    Raises ValueError when no root exists with x = 1 - gamma - a - b >= 0.
    """
    n = float(n_target)
    if not 0.0 < n < 1.0:
        raise ValueError(f"n_target = {n_target!r} outside (0, 1)")
    a = float(a_free)
    if a < 0.0:
        raise ValueError(f"a_free = {a_free!r} is negative")
    c = itot_concurrence_constraint(n)

    # bisect in u = sqrt(b); the residual is smooth in u even at b -> 0
    def residual(u: float) -> float:
        b = u * u
        gamma = c + 2.0 * math.sqrt(a) * u
        return math.hypot(a - b, gamma) - (a + b) - n

    # largest b with x >= 0: solve 2 sqrt(a) u + u^2 = 1 - c - a
    room = 1.0 - c - a
    if room < 0.0:
        raise ValueError(
            f"infeasible parameters: a_free = {a_free!r} leaves no weight for x"
        )
    u_hi = math.sqrt(a + room) - math.sqrt(a)
    r_lo, r_hi = residual(0.0), residual(u_hi)
    if r_lo * r_hi > 0.0:
        raise ValueError(
            f"infeasible parameters: no root in b for n_target={n_target!r}, "
            f"a_free={a_free!r}"
        )
    lo, hi = 0.0, u_hi
    while hi - lo > 1e-14:
        mid = 0.5 * (lo + hi)
        if residual(mid) * r_lo > 0.0:
            lo = mid
        else:
            hi = mid
    b = (0.5 * (lo + hi)) ** 2
    gamma = c + 2.0 * math.sqrt(a * b)
    x = max(0.0, 1.0 - gamma - a - b)
    return ansatz(x=x, y=0.0, a=a, b=b, gamma=gamma)


# ---------------------------------------------------------------------------
# three-qubit families
# ---------------------------------------------------------------------------


def ghz(k: int = 3) -> QuantumState:
    """(|0...0> + |1...1>)/sqrt(2) on k qubits."""
    if k < 2:
        raise ValueError(f"k = {k!r} must be at least 2")
    a = np.zeros(2**k, dtype=np.complex128)
    a[0] = a[-1] = 1.0 / math.sqrt(2)
    return from_amplitudes(a)


def w_state(k: int = 3) -> QuantumState:
    """Uniform superposition of all single-excitation basis states."""
    if k < 2:
        raise ValueError(f"k = {k!r} must be at least 2")
    a = np.zeros(2**k, dtype=np.complex128)
    for i in range(k):
        a[1 << i] = 1.0 / math.sqrt(k)
    return from_amplitudes(a)


def w_prime() -> QuantumState:
    """Three-qubit W state with every qubit flipped."""
    a = np.zeros(8, dtype=np.complex128)
    a[[6, 5, 3]] = 1.0 / math.sqrt(3)
    return from_amplitudes(a)


def _checked_amplitude_combo(parts, weights, names) -> np.ndarray:
    w = np.asarray(weights, dtype=np.complex128)
    total = float(np.sum(np.abs(w) ** 2))
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise ValueError(
            f"{'/'.join(names)} amplitudes have squared norm {total!r}, expected 1"
        )
    out = sum(c * p for c, p in zip(w, parts))
    return out / np.linalg.norm(out)


def symmetric3(t1: complex, t2: complex, t3: complex, t4: complex) -> QuantumState:
    """t1|000> + t2|W> + t3|W'> + t4|111>, permutation-symmetric."""
    parts = [_basis_ket(3, 0), w_state(3).amplitudes, w_prime().amplitudes, _basis_ket(3, 7)]
    return from_amplitudes(
        _checked_amplitude_combo(parts, [t1, t2, t3, t4], ["t1", "t2", "t3", "t4"])
    )


def g_type(a: float) -> QuantumState:
    """sqrt(a)|000> + sqrt(1-a)|111>."""
    av = _require_range(a, 0.0, 1.0, "a")
    amps = np.zeros(8, dtype=np.complex128)
    amps[0], amps[7] = math.sqrt(av), math.sqrt(1.0 - av)
    return from_amplitudes(amps)


def j_state(b: float) -> QuantumState:
    """sqrt(b)|W> + sqrt(1-b)|111>."""
    bv = _require_range(b, 0.0, 1.0, "b")
    amps = math.sqrt(bv) * w_state(3).amplitudes + math.sqrt(1.0 - bv) * _basis_ket(3, 7)
    return from_amplitudes(amps)


def upsilon(c1: float, c2: float, c3: float) -> QuantumState:
    """c1|000> + c2|W> + c3|111> with real coefficients."""
    parts = [_basis_ket(3, 0), w_state(3).amplitudes, _basis_ket(3, 7)]
    return from_amplitudes(
        _checked_amplitude_combo(parts, [float(c1), float(c2), float(c3)], ["c1", "c2", "c3"])
    )


def lambda_state(c0: float, c1: float, c6: float) -> QuantumState:
    """c0|000> + c1|001> + c6|110> with real coefficients."""
    a = np.zeros(8, dtype=np.complex128)
    a[0], a[1], a[6] = float(c0), float(c1), float(c6)
    norm2 = float(np.sum(np.abs(a) ** 2))
    if abs(norm2 - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"c0/c1/c6 have squared norm {norm2!r}, expected 1")
    return from_amplitudes(a)


def omega_state(c0: float, c1: float, c2: float, c4: float) -> QuantumState:
    """c0|000> + c1|001> + c2|010> + c4|100>, a zero-three-tangle family."""
    a = np.zeros(8, dtype=np.complex128)
    a[0], a[1], a[2], a[4] = (float(v) for v in (c0, c1, c2, c4))
    norm2 = float(np.sum(np.abs(a) ** 2))
    if abs(norm2 - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"c0/c1/c2/c4 have squared norm {norm2!r}, expected 1")
    return from_amplitudes(a)


def general3(amplitudes) -> QuantumState:
    """Arbitrary three-qubit pure state from 8 complex amplitudes."""
    a = np.ascontiguousarray(amplitudes, dtype=np.complex128).ravel()
    if a.size != 8:
        raise ValueError(f"amplitudes must have length 8, got {a.size}")
    return from_amplitudes(a)


# ---------------------------------------------------------------------------
# k-qubit families
# ---------------------------------------------------------------------------


def g_type_k(k: int, alpha: complex, beta: complex | None = None) -> QuantumState:
    """alpha|0...0> + beta|1...1> on k qubits; beta defaults to sqrt(1-|alpha|^2)."""
    if k < 2:
        raise ValueError(f"k = {k!r} must be at least 2")
    al = complex(alpha)
    be = complex(beta) if beta is not None else complex(math.sqrt(max(0.0, 1.0 - abs(al) ** 2)))
    total = abs(al) ** 2 + abs(be) ** 2
    if abs(total - 1.0) > NORMALIZATION_TOL:
        raise ValueError(f"alpha/beta have squared norm {total!r}, expected 1")
    a = np.zeros(2**k, dtype=np.complex128)
    a[0], a[-1] = al, be
    return from_amplitudes(a)


def z_state(k: int, q: float, phi: float) -> QuantumState:
    """sqrt(q)|GHZ_k> - e^{i phi} sqrt(1-q)|W_k>."""
    qv = _require_range(q, 0.0, 1.0, "q")
    a = (
        math.sqrt(qv) * ghz(k).amplitudes
        - np.exp(1j * float(phi)) * math.sqrt(1.0 - qv) * w_state(k).amplitudes
    )
    return from_amplitudes(a)


# ---------------------------------------------------------------------------
# family dispatch (tag-based construction)
# ---------------------------------------------------------------------------

FAMILIES = {
    "PureTheta": pure_theta,
    "Ansatz": ansatz,
    "RhoM": rho_m,
    "RhoK": rho_k,
    "RhoC": rho_c,
    "RhoSL": rho_sl,
    "RhoItot": rho_itot,
    "GHZ": ghz,
    "W": w_state,
    "WPrime": w_prime,
    "Symmetric": symmetric3,
    "GType": g_type,
    "JState": j_state,
    "Upsilon": upsilon,
    "Lambda": lambda_state,
    "Omega": omega_state,
    "General3": general3,
    "GTypeK": g_type_k,
    "WK": w_state,
    "ZState": z_state,
}


def build(tag: str, **params) -> QuantumState:
    """Construct a named family state, e.g. build('PureTheta', theta=0.3)."""
    try:
        ctor = FAMILIES[tag]
    except KeyError:
        raise ValueError(f"unknown state family {tag!r}") from None
    return ctor(**params)


# ---------------------------------------------------------------------------
# samplers and mixing
# ---------------------------------------------------------------------------


def random_pure(k: int, rng: np.random.Generator) -> QuantumState:
    """Haar-distributed pure state: normalized i.i.d. complex Gaussian amplitudes."""
    if k < 1:
        raise ValueError(f"k = {k!r} must be at least 1")
    n = 2**k
    a = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return from_amplitudes(a / np.linalg.norm(a))


def random_mixed2(rng: np.random.Generator) -> QuantumState:
    """Two-qubit density matrix from the Hilbert-Schmidt (Ginibre) ensemble."""
    g = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
    m = g @ g.conj().T
    m /= np.trace(m).real
    return QuantumState(k=2, rho=m)


def mix(components) -> QuantumState:
    """Convex combination of (weight, state) pairs; weights must sum to 1."""
    comps = list(components)
    if not comps:
        raise ValueError("mix requires at least one component")
    total = sum(float(w) for w, _ in comps)
    if abs(total - 1.0) > _EPS:
        raise ValueError(f"mixture weights sum to {total!r}, expected 1")
    k = comps[0][1].k
    out = np.zeros((2**k, 2**k), dtype=np.complex128)
    for w, state in comps:
        if float(w) < -_EPS:
            raise ValueError(f"mixture weight {w!r} is negative")
        if state.k != k:
            raise ValueError(f"component qubit count {state.k} != {k}")
        out += float(w) * state.rho
    return QuantumState(k=k, rho=out)


def random_unitary2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random 2x2 unitary (QR of a Ginibre matrix with phase fix)."""
    g = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(g)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_local_unitary(k: int, rng: np.random.Generator) -> np.ndarray:
    """Tensor product of k independent Haar-random single-qubit unitaries."""
    if k < 1:
        raise ValueError(f"k = {k!r} must be at least 1")
    u = random_unitary2(rng)
    for _ in range(k - 1):
        u = np.kron(u, random_unitary2(rng))
    return u


def apply_unitary(state: QuantumState, u: np.ndarray) -> QuantumState:
    """U rho U^dagger, propagating amplitudes when the input is pure."""
    rho = u @ state.rho @ u.conj().T
    amps = u @ state.amplitudes if state.amplitudes is not None else None
    return QuantumState(k=state.k, rho=rho, amplitudes=amps)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------


def to_json_dict(state: QuantumState) -> dict:
    """JSON document {k, rho: [[re, im], ...] row-major}."""
    flat = state.rho.ravel()
    return {"k": state.k, "rho": [[float(z.real), float(z.imag)] for z in flat]}


def from_json_dict(doc: dict) -> QuantumState:
    """Rebuild a state from ``to_json_dict`` output (validates invariants)."""
    k = int(doc["k"])
    n = 2**k
    entries = doc["rho"]
    if len(entries) != n * n:
        raise ValueError(f"rho entry count {len(entries)} != {n * n}")
    flat = np.array([complex(re, im) for re, im in entries], dtype=np.complex128)
    return from_density(flat.reshape(n, n), k=k)
