import numpy as np
import pytest

from sodelab import linalg, states

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)


def bell_rho():
    return states.pure_theta(np.pi / 4).rho


def random_hermitian(dim, rng):
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    return (g + g.conj().T) / 2


def test_kron_identities():
    assert np.allclose(linalg.kron(I2, I2), np.eye(4))
    psi00 = np.array([1, 0, 0, 0], dtype=complex)
    assert np.allclose(linalg.kron(SX, SX) @ psi00.reshape(4, 1), np.eye(4)[:, [3]])
    assert np.allclose(linalg.kron(np.diag([1, 0]), np.diag([0, 1])), np.diag([0, 1, 0, 0]))


def test_partial_transpose_bell_spectrum():
    pt = linalg.partial_transpose(bell_rho(), 0, 2)
    w = np.linalg.eigvalsh(pt)
    assert np.allclose(w, [-0.5, 0.5, 0.5, 0.5], atol=1e-12)


def test_partial_transpose_product_state_stays_positive():
    rng = np.random.default_rng(3)
    for _ in range(10):
        ra = states.random_mixed2(rng).rho[:2, :2]
        ra = ra / np.trace(ra).real
        rb = states.random_mixed2(rng).rho[2:, 2:]
        rb = rb / np.trace(rb).real
        rho = linalg.kron(ra, rb)
        for qubit in (0, 1):
            w = np.linalg.eigvalsh(linalg.partial_transpose(rho, qubit, 2))
            assert w.min() > -1e-12


def test_partial_transpose_involution_and_symmetries():
    rng = np.random.default_rng(7)
    for k in (2, 3):
        rho = states.random_pure(k, rng).rho
        for qubit in range(k):
            pt = linalg.partial_transpose(rho, qubit, k)
            assert abs(np.trace(pt) - np.trace(rho)) < 1e-12
            assert np.max(np.abs(pt - pt.conj().T)) < 1e-12
            assert np.max(np.abs(linalg.partial_transpose(pt, qubit, k) - rho)) < 1e-14


def test_partial_transpose_shape_errors():
    with pytest.raises(ValueError):
        linalg.partial_transpose(np.eye(3, dtype=complex), 0, 2)
    with pytest.raises(ValueError):
        linalg.partial_transpose(np.eye(4, dtype=complex), 2, 2)


def test_partial_trace_examples():
    assert np.allclose(linalg.partial_trace(bell_rho(), [0], 2), I2 / 2, atol=1e-14)
    ghz = states.ghz(3).rho
    assert np.allclose(linalg.partial_trace(ghz, [0], 3), np.diag([0.5, 0.5]), atol=1e-14)
    rng = np.random.default_rng(11)
    ra = random_hermitian(2, rng)
    ra = ra @ ra.conj().T
    ra /= np.trace(ra).real
    rb = random_hermitian(2, rng)
    rb = rb @ rb.conj().T
    rb /= np.trace(rb).real
    assert np.allclose(linalg.partial_trace(linalg.kron(ra, rb), [0], 2), ra, atol=1e-14)


def test_partial_trace_chain():
    rng = np.random.default_rng(13)
    for _ in range(5):
        rho = states.random_pure(3, rng).rho
        two = linalg.partial_trace(rho, [0, 2], 3)
        # kept qubits keep their relative order: old qubit 0 is new qubit 0
        one = linalg.partial_trace(two, [0], 2)
        assert np.max(np.abs(one - linalg.partial_trace(rho, [0], 3))) < 1e-12


def test_partial_trace_errors():
    rho = bell_rho()
    with pytest.raises(ValueError):
        linalg.partial_trace(rho, [], 2)
    with pytest.raises(ValueError):
        linalg.partial_trace(rho, [2], 2)


def test_eigendecompose_diagonal_and_pauli():
    es = linalg.hermitian_eigendecompose(np.diag([3.0, 1.0, 2.0]).astype(complex))
    assert np.allclose(es.values, [1, 2, 3])
    es = linalg.hermitian_eigendecompose(SX)
    assert np.allclose(es.values, [-1, 1])
    minus, plus = es.vectors[:, 0], es.vectors[:, 1]
    ref_minus = np.array([1, -1]) / np.sqrt(2)
    ref_plus = np.array([1, 1]) / np.sqrt(2)
    assert min(np.linalg.norm(minus - ref_minus), np.linalg.norm(minus + ref_minus)) < 1e-12
    assert min(np.linalg.norm(plus - ref_plus), np.linalg.norm(plus + ref_plus)) < 1e-12


def test_eigendecompose_bell_pt_negative_eigenvalue():
    es = linalg.hermitian_eigendecompose(linalg.partial_transpose(bell_rho(), 0, 2))
    assert abs(es.values[0] + 0.5) < 1e-12
    assert (es.values < -1e-12).sum() == 1


def test_eigendecompose_reconstruction_and_orthonormality():
    rng = np.random.default_rng(17)
    for dim in (4, 8, 16):
        a = random_hermitian(dim, rng)
        es = linalg.hermitian_eigendecompose(a)
        scale = max(1.0, np.max(np.abs(es.values)))
        rebuilt = (es.vectors * es.values) @ es.vectors.conj().T
        assert np.max(np.abs(rebuilt - a)) < 1e-10 * scale
        gram = es.vectors.conj().T @ es.vectors
        assert np.max(np.abs(gram - np.eye(dim))) < 1e-10
        residual = a @ es.vectors - es.vectors * es.values
        assert np.max(np.linalg.norm(residual, axis=0)) < 1e-10 * scale


def test_eigendecompose_rejects_non_hermitian():
    with pytest.raises(ValueError):
        linalg.hermitian_eigendecompose(np.array([[0, 1], [0, 0]], dtype=complex))


def test_trace_norm_values():
    assert abs(linalg.trace_norm(np.diag([1.0, -2.0]).astype(complex)) - 3.0) < 1e-14
    rng = np.random.default_rng(19)
    assert abs(linalg.trace_norm(states.random_mixed2(rng).rho) - 1.0) < 1e-12


def test_trace_norm_negative_part_identity():
    rng = np.random.default_rng(23)
    for _ in range(10):
        a = random_hermitian(6, rng)
        w = np.linalg.eigvalsh(a)
        lhs = linalg.trace_norm(a) - np.trace(a).real
        rhs = 2 * np.sum(np.abs(w[w < 0]))
        assert abs(lhs - rhs) < 1e-10


def test_trace_norm_unitary_invariance():
    rng = np.random.default_rng(29)
    for _ in range(5):
        a = random_hermitian(8, rng)
        u = states.random_local_unitary(3, rng)
        assert abs(linalg.trace_norm(u @ a @ u.conj().T) - linalg.trace_norm(a)) < 1e-10


def test_trace_norm_rejects_non_hermitian():
    with pytest.raises(ValueError):
        linalg.trace_norm(np.array([[0, 2], [0, 0]], dtype=complex))
