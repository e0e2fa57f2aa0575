"""Numba-jitted twins of the kernels in ``sodelab._kernels_numpy``.

Same signatures and conventions; explicit bit loops instead of fancy
indexing.  Compiled lazily on first call and cached on disk.
"""

from __future__ import annotations

import numba as nb
import numpy as np

_JIT = {"cache": True, "fastmath": False}


@nb.njit(**_JIT)
def partial_transpose(rho: np.ndarray, qubit: int, k: int) -> np.ndarray:
    n = rho.shape[0]
    bit = 1 << (k - 1 - qubit)
    out = np.empty_like(rho)
    for r in range(n):
        for c in range(n):
            rr = (r & ~bit) | (c & bit)
            cc = (c & ~bit) | (r & bit)
            out[rr, cc] = rho[r, c]
    return out


@nb.njit(**_JIT)
def depolarizing_generator(rho: np.ndarray, k: int) -> np.ndarray:
    n = rho.shape[0]
    out = np.empty_like(rho)
    for r in range(n):
        for c in range(n):
            acc = 0.0 + 0.0j
            for i in range(k):
                bit = 1 << (k - 1 - i)
                if (r ^ c) & bit:
                    acc -= rho[r, c]
                else:
                    acc += 0.5 * (rho[r ^ bit, c ^ bit] - rho[r, c])
            out[r, c] = acc
    return out


@nb.njit(**_JIT)
def dephasing_generator(rho: np.ndarray, k: int) -> np.ndarray:
    n = rho.shape[0]
    out = np.empty_like(rho)
    for r in range(n):
        for c in range(n):
            d = 0
            x = r ^ c
            while x:
                d += x & 1
                x >>= 1
            out[r, c] = -d * rho[r, c]
    return out


@nb.njit(**_JIT)
def depolarize(rho: np.ndarray, k: int, s: float) -> np.ndarray:
    n = rho.shape[0]
    out = rho.copy()
    for i in range(k):
        bit = 1 << (k - 1 - i)
        nxt = np.empty_like(out)
        for r in range(n):
            for c in range(n):
                if (r ^ c) & bit:
                    nxt[r, c] = s * out[r, c]
                else:
                    nxt[r, c] = 0.5 * (1 + s) * out[r, c] + 0.5 * (1 - s) * out[r ^ bit, c ^ bit]
        out = nxt
    return out


@nb.njit(**_JIT)
def dephase(rho: np.ndarray, k: int, s: float) -> np.ndarray:
    n = rho.shape[0]
    out = np.empty_like(rho)
    for r in range(n):
        for c in range(n):
            d = 0
            x = r ^ c
            while x:
                d += x & 1
                x >>= 1
            out[r, c] = rho[r, c] * s**d
    return out


@nb.njit(**_JIT)
def negativity_from_pt(rho_pt: np.ndarray) -> float:
    w = np.linalg.eigvalsh(rho_pt)
    acc = 0.0
    for x in w:
        if x < 0.0:
            acc -= x
    return 2.0 * acc


@nb.njit(**_JIT)
def eta_split(rho_pt: np.ndarray, sigma_pt: np.ndarray, rel_tol: float):
    w, v = np.linalg.eigh(rho_pt)
    radius = max(abs(w[0]), abs(w[-1]))
    tol = rel_tol * max(1.0, radius)
    neg_idx = np.where(w < -tol)[0]
    zero_idx = np.where(np.abs(w) <= tol)[0]

    eta_minus = 0.0
    negativity = 0.0
    if neg_idx.size:
        vn = np.ascontiguousarray(v[:, neg_idx])
        sv = sigma_pt @ vn
        eta_minus = 2.0 * np.sum((np.conj(vn) * sv).real)
        negativity = -2.0 * np.sum(w[neg_idx])

    eta_zero = 0.0
    if zero_idx.size:
        v0 = np.ascontiguousarray(v[:, zero_idx])
        s0 = np.conj(v0.T) @ (sigma_pt @ v0)
        s0 = 0.5 * (s0 + np.conj(s0.T))
        beta = np.linalg.eigvalsh(s0)
        eta_zero = np.sum(np.abs(beta) - beta)

    return eta_minus, eta_zero, negativity, neg_idx.size, zero_idx.size
