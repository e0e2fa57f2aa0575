"""Pure-numpy implementations of the hot per-sample kernels.

These are the reference kernels; ``sodelab._kernels_numba`` carries jitted
twins with identical signatures.  Which set is active is decided once at
import time by ``sodelab._backend`` (env var ``SODELAB_BACKEND``).

All kernels assume validated inputs: contiguous complex128 square arrays
of dimension ``2**k`` and qubit indices in ``range(k)``.  Qubit 0 is the
leftmost (most significant) tensor factor, so basis index ``r`` carries
the bit of qubit ``i`` at position ``k - 1 - i``.
"""

from __future__ import annotations

import numpy as np


def partial_transpose(rho: np.ndarray, qubit: int, k: int) -> np.ndarray:
    """Transpose the indices of one qubit tensor factor only."""
    t = rho.reshape((2,) * (2 * k))
    t = np.swapaxes(t, qubit, k + qubit)
    return np.ascontiguousarray(t.reshape(rho.shape))


def _bit_masks(n: int):
    idx = np.arange(n)
    return idx, idx[:, None] ^ idx[None, :]


def depolarizing_generator(rho: np.ndarray, k: int) -> np.ndarray:
    """d/dt of the k-fold local depolarizing map at t = 0.

    Entry-wise: rows/columns agreeing on qubit i contribute
    (rho_flipped - rho)/2, disagreeing ones contribute -rho, summed over
    qubits (equivalent to sum_i [(I_i/2) (x) tr_i rho - rho]).
    """
    n = rho.shape[0]
    idx, xor = _bit_masks(n)
    sig = np.zeros_like(rho)
    for i in range(k):
        bit = 1 << (k - 1 - i)
        flipped = rho[np.ix_(idx ^ bit, idx ^ bit)]
        agree = (xor & bit) == 0
        sig += np.where(agree, 0.5 * (flipped - rho), -rho)
    return sig


def dephasing_generator(rho: np.ndarray, k: int) -> np.ndarray:
    """d/dt of the k-fold local dephasing map at t = 0.

    Equals sum_i (Z_i rho Z_i - rho)/2, i.e. each off-diagonal entry is
    damped at a rate given by the Hamming distance of its basis indices.
    """
    n = rho.shape[0]
    _, xor = _bit_masks(n)
    return -np.bitwise_count(xor).astype(np.float64) * rho


def depolarize(rho: np.ndarray, k: int, s: float) -> np.ndarray:
    """Apply the local depolarizing channel qubit-wise at noise level s.

    s = exp(-t) is the Bloch contraction factor; each qubit map sends
    entries with agreeing qubit-i bits to (1+s)/2 rho + (1-s)/2 rho_flip
    and scales disagreeing ones by s.
    """
    n = rho.shape[0]
    idx, xor = _bit_masks(n)
    out = rho
    for i in range(k):
        bit = 1 << (k - 1 - i)
        flipped = out[np.ix_(idx ^ bit, idx ^ bit)]
        agree = (xor & bit) == 0
        out = np.where(agree, 0.5 * (1 + s) * out + 0.5 * (1 - s) * flipped, s * out)
    return out


def dephase(rho: np.ndarray, k: int, s: float) -> np.ndarray:
    """Apply the local dephasing channel: entries scale by s**hamming(r ^ c)."""
    n = rho.shape[0]
    _, xor = _bit_masks(n)
    return rho * (s ** np.bitwise_count(xor))


def negativity_from_pt(rho_pt: np.ndarray) -> float:
    """Twice the absolute sum of negative eigenvalues of a Hermitian matrix."""
    w = np.linalg.eigvalsh(rho_pt)
    return -2.0 * float(np.sum(w[w < 0.0]))


def eta_split(rho_pt: np.ndarray, sigma_pt: np.ndarray, rel_tol: float):
    """Eigenvalue classification of rho_pt and the two speed contributions.

    Eigenvalues below -tol count as negative, |w| <= tol as zero, with
    tol = rel_tol * max(1, spectral radius).  Returns
    (eta_minus, eta_zero, negativity, d_neg, d_zero) where
    eta_minus = 2 sum_neg <v|sigma_pt|v> and eta_zero = ||sigma0||_1 - tr sigma0
    for the zero-subspace compression sigma0 of sigma_pt.
    """
    w, v = np.linalg.eigh(rho_pt)
    tol = rel_tol * max(1.0, float(max(abs(w[0]), abs(w[-1]))))
    neg = w < -tol
    zero = np.abs(w) <= tol

    eta_minus = 0.0
    if neg.any():
        vn = v[:, neg]
        eta_minus = 2.0 * float(np.sum((vn.conj() * (sigma_pt @ vn)).real))

    eta_zero = 0.0
    d_zero = int(zero.sum())
    if d_zero:
        v0 = v[:, zero]
        s0 = v0.conj().T @ sigma_pt @ v0
        s0 = 0.5 * (s0 + s0.conj().T)
        beta = np.linalg.eigvalsh(s0)
        eta_zero = float(np.sum(np.abs(beta) - beta))

    negativity = -2.0 * float(np.sum(w[neg]))
    return eta_minus, eta_zero, negativity, int(neg.sum()), d_zero
