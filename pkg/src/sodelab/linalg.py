"""Dense complex linear algebra over qubit tensor factors.

Kronecker products, partial transpose / partial trace, Hermitian
eigendecomposition and the trace norm, for square complex matrices of
dimension 2**k.  Qubit 0 is the leftmost (most significant) factor
throughout the package.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

import numpy as np

from ._backend import kernels

HERMITICITY_TOL = 1e-12


class EigenSystem(NamedTuple):
    """Full Hermitian spectrum: ascending real values, orthonormal columns."""

    values: np.ndarray
    vectors: np.ndarray


def as_operator(a, name: str = "matrix") -> np.ndarray:
    """Coerce to a square complex128 array."""
    m = np.ascontiguousarray(a, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"{name} must be square, got shape {m.shape}")
    return m


def require_qubit_operator(a, k: int, name: str = "matrix") -> np.ndarray:
    """Coerce to a 2**k x 2**k complex operator."""
    m = as_operator(a, name)
    if k < 1:
        raise ValueError(f"qubit count must be positive, got {k}")
    if m.shape[0] != 2**k:
        raise ValueError(
            f"{name} has dimension {m.shape[0]}, expected 2**{k} = {2**k}"
        )
    return m


def is_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> bool:
    dev = np.max(np.abs(a - a.conj().T)) if a.size else 0.0
    scale = max(1.0, float(np.max(np.abs(a)))) if a.size else 1.0
    return dev <= tol * scale


def require_hermitian(a, name: str = "matrix") -> np.ndarray:
    m = as_operator(a, name)
    if not is_hermitian(m):
        raise ValueError(f"{name} is not Hermitian within tolerance")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product; dimension is the product of the input dimensions."""
    return np.kron(as_operator(a, "a"), as_operator(b, "b"))


def partial_transpose(rho, qubit: int, k: int) -> np.ndarray:
    """Transpose the indices of tensor factor ``qubit`` only.

    Involutive, trace- and Hermiticity-preserving.
    """
    m = require_qubit_operator(rho, k, "rho")
    if not 0 <= qubit < k:
        raise ValueError(f"qubit index {qubit} out of range for k={k}")
    return kernels.partial_transpose(m, qubit, k)


def partial_trace(rho, keep: Iterable[int], k: int) -> np.ndarray:
    """Reduced matrix over the kept qubits, tracing out all others.

    ``keep`` is a nonempty set of qubit indices; the kept qubits retain
    their original relative order.
    """
    m = require_qubit_operator(rho, k, "rho")
    kept = sorted(set(int(q) for q in keep))
    if not kept:
        raise ValueError("keep must be a nonempty set of qubit indices")
    if kept[0] < 0 or kept[-1] >= k:
        raise ValueError(f"keep {kept} out of range for k={k}")
    t = m.reshape((2,) * (2 * k))
    nk = k
    for q in sorted(set(range(k)) - set(kept), reverse=True):
        t = np.trace(t, axis1=q, axis2=nk + q)
        nk -= 1
    d = 2 ** len(kept)
    return np.ascontiguousarray(t.reshape(d, d))


def hermitian_eigendecompose(a) -> EigenSystem:
    """Ascending spectrum with orthonormal eigenvectors of a Hermitian matrix.

    Degenerate subspaces come back as an arbitrary orthonormal basis; all
    downstream uses are basis-independent (subspace traces).
    """
    m = require_hermitian(a, "matrix")
    values, vectors = np.linalg.eigh(m)
    return EigenSystem(values=values, vectors=vectors)


def trace_norm(a) -> float:
    """Sum of absolute eigenvalues (trace norm of a Hermitian matrix)."""
    m = require_hermitian(a, "matrix")
    return float(np.sum(np.abs(np.linalg.eigvalsh(m))))
