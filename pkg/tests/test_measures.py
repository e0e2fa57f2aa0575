import math

import numpy as np
import pytest

from sodelab import linalg, measures, states


def binary_entropy(x):
    if x in (0.0, 1.0):
        return 0.0
    return -x * math.log(x) - (1 - x) * math.log(1 - x)


def test_negativity_examples():
    assert abs(measures.negativity(states.pure_theta(np.pi / 4), 0) - 1.0) < 1e-12
    assert abs(measures.negativity(states.w_state(4), 0) - math.sqrt(3) / 2) < 1e-12
    assert measures.negativity(states.from_amplitudes([1, 0, 0, 0]), 0) < 1e-12
    with pytest.raises(ValueError):
        measures.negativity(states.pure_theta(0.3), 2)


def test_negativity_pure_schmidt():
    for th in (0.1, 0.4, np.pi / 4):
        st = states.pure_theta(th)
        assert abs(measures.negativity_pure_schmidt(st, [0]) - math.sin(2 * th)) < 1e-12
    assert abs(measures.negativity_pure_schmidt(states.ghz(3), [0]) - 1.0) < 1e-12
    assert measures.negativity_pure_schmidt(states.from_amplitudes([1, 0, 0, 0]), [0]) < 1e-12
    with pytest.raises(ValueError):
        measures.negativity_pure_schmidt(states.rho_m(0.5), [0])


def test_concurrence_examples():
    assert abs(measures.concurrence2(states.pure_theta(np.pi / 4)) - 1.0) < 1e-12
    for gamma in (0.2, 0.5, 0.9):
        assert abs(measures.concurrence2(states.rho_m(gamma)) - gamma) < 1e-12
    # equal |01>/|10> populations make concurrence and negativity coincide
    for gamma in (0.3, 0.7):
        st = states.rho_k(gamma)
        assert abs(measures.concurrence2(st) - measures.negativity(st, 0)) < 1e-12
    with pytest.raises(ValueError):
        measures.concurrence2(states.ghz(3))


def test_pure_bipartite_concurrence():
    for th in (0.2, np.pi / 4):
        st = states.pure_theta(th)
        assert abs(measures.pure_bipartite_concurrence(st, [0]) - math.sin(2 * th)) < 1e-12
    w3 = states.w_state(3)
    red = linalg.partial_trace(w3.rho, [0], 3)
    assert abs(np.trace(red @ red).real - 5 / 9) < 1e-12
    assert abs(measures.pure_bipartite_concurrence(w3, [0]) - 2 * math.sqrt(2) / 3) < 1e-12
    assert measures.pure_bipartite_concurrence(states.from_amplitudes([1, 0, 0, 0]), [0]) < 1e-12
    with pytest.raises(ValueError):
        measures.pure_bipartite_concurrence(states.rho_m(0.5), [0])


def test_linear_entropy():
    assert abs(measures.linear_entropy(states.pure_theta(0.5))) < 1e-12
    mixed = states.from_density(np.eye(4, dtype=complex) / 4)
    assert abs(measures.linear_entropy(mixed) - 1.0) < 1e-12
    for gamma in (0.25, 0.6):
        expected = (4 / 3) * (1 - gamma**2 - (1 - gamma) ** 2)
        assert abs(measures.linear_entropy(states.rho_m(gamma)) - expected) < 1e-12
    with pytest.raises(ValueError):
        measures.linear_entropy(states.ghz(3))


def test_mutual_information():
    product = states.from_amplitudes([1, 0, 0, 0])
    assert abs(measures.mutual_information(product, [0])) < 1e-10
    bell = states.pure_theta(np.pi / 4)
    assert abs(measures.mutual_information(bell, [0]) - 2 * math.log(2)) < 1e-10
    # rank-2 mixture has spectrum {gamma, 1-gamma}; both marginals are
    # diag(gamma/2, 1-gamma/2)
    for gamma in (0.3, 0.8):
        expected = 2 * binary_entropy(gamma / 2) - binary_entropy(gamma)
        got = measures.mutual_information(states.rho_m(gamma), [0])
        assert abs(got - expected) < 1e-10
    with pytest.raises(ValueError):
        measures.mutual_information(bell, [0, 1])


def test_invariants_ghz():
    inv = measures.invariants3(states.ghz(3))
    assert abs(inv.I1 - 0.5) < 1e-12 and abs(inv.I2 - 0.5) < 1e-12 and abs(inv.I3 - 0.5) < 1e-12
    assert abs(inv.I4 - 0.25) < 1e-12
    assert abs(inv.tau - 1.0) < 1e-9
    assert abs(inv.Theta + 0.25) < 1e-9
    assert abs(inv.M - 0.5) < 1e-12
    assert abs(inv.I5 - inv.tau**2) < 1e-12


def test_invariants_w():
    inv = measures.invariants3(states.w_state(3))
    assert inv.tau < 1e-8
    assert abs(inv.I4 - 2 / 9) < 1e-12
    assert abs(inv.N1 - 2 * math.sqrt(2) / 3) < 1e-12


def test_invariants_g_and_j_families():
    for a in (0.2, 0.5, 0.8):
        inv = measures.invariants3(states.g_type(a))
        assert abs(inv.I4 - (1 - 3 * a + 3 * a**2)) < 1e-12
        assert abs(inv.tau - 4 * a * (1 - a)) < 1e-9
        assert abs(inv.N1 - 2 * math.sqrt(a * (1 - a))) < 1e-12
    for b in (0.3, 0.7, 1.0):
        inv = measures.invariants3(states.j_state(b))
        assert abs(inv.I4 - (1 - 3 * b + 4 * b**2 - 16 * b**3 / 9)) < 1e-12
        assert abs(inv.tau - 16 * math.sqrt(1 - b) * b**1.5 / (3 * math.sqrt(3))) < 1e-9


def test_invariants_lambda_family():
    # tau = 4 c1^2 c6^2 (the monogamy combination with tau(GHZ) = 1),
    # I3 = 1 - 2 c1^2 c6^2, I4 = (c0^2 + c1^2)^3 + c6^6
    rng = np.random.default_rng(21)
    for _ in range(8):
        c = rng.uniform(0.2, 1.0, 3)
        c /= np.linalg.norm(c)
        c0, c1, c6 = (float(v) for v in c)
        inv = measures.invariants3(states.lambda_state(c0, c1, c6))
        assert abs(inv.tau - 4 * c1**2 * c6**2) < 1e-9
        assert abs(inv.I3 - (1 - 2 * c1**2 * c6**2)) < 1e-10
        assert abs(inv.I4 - ((c0**2 + c1**2) ** 3 + c6**6)) < 1e-10
        assert abs(inv.N1 - 2 * math.sqrt((c0**2 + c1**2) * c6**2)) < 1e-10
        assert abs(inv.I1 - (1 - inv.N1**2 / 2)) < 1e-9
        assert abs(inv.I2 - (1 - inv.N1**2 / 2)) < 1e-9


def test_invariants_upsilon_family():
    rng = np.random.default_rng(22)
    for _ in range(8):
        c = rng.uniform(0.1, 1.0, 3)
        c /= np.linalg.norm(c)
        c1, c2, c3 = (float(v) for v in c)
        inv = measures.invariants3(states.upsilon(c1, c2, c3))
        n_ref = (2 / 3) * math.sqrt(2 * c2**4 + 9 * c1**2 * c3**2 + 6 * c2**2 * c3**2)
        tau_ref = (4 / 9) * abs(c3 * (4 * math.sqrt(3) * c2**3 + 9 * c1**2 * c3))
        i4_ref = (
            c1**6
            + 3 * c1**4 * c2**2
            + 2 * c2**6 / 9
            + c2**4 * c3**2
            + c3**6
            + (2 / 3) * c1**2 * c2**3 * (3 * c2 + math.sqrt(3) * c3)
        )
        assert abs(inv.N1 - n_ref) < 1e-10
        assert abs(inv.tau - tau_ref) < 1e-9
        assert abs(inv.I4 - i4_ref) < 1e-10


def test_concurrence_dominates_negativity():
    rng = np.random.default_rng(23)
    for _ in range(200):
        st = states.random_mixed2(rng)
        assert measures.concurrence2(st) - measures.negativity(st, 0) >= -1e-10


def test_pure_state_measure_agreement():
    rng = np.random.default_rng(24)
    for k in (2, 3):
        for _ in range(20):
            st = states.random_pure(k, rng)
            for q in range(k):
                n = measures.negativity(st, q)
                ns = measures.negativity_pure_schmidt(st, [q])
                c = measures.pure_bipartite_concurrence(st, [q])
                assert abs(n - ns) < 1e-9
                if k == 2:
                    assert abs(n - c) < 1e-9


def test_purity_negativity_relation_on_pure_states():
    rng = np.random.default_rng(25)
    for _ in range(30):
        inv = measures.invariants3(states.random_pure(3, rng))
        assert abs(inv.I1 - (1 - inv.N1**2 / 2)) < 1e-9
        assert abs(inv.I2 - (1 - inv.N2**2 / 2)) < 1e-9
        assert abs(inv.I3 - (1 - inv.N3**2 / 2)) < 1e-9


def test_measures_lu_invariant():
    rng = np.random.default_rng(26)
    for _ in range(10):
        st = states.random_pure(2, rng)
        u = states.random_local_unitary(2, rng)
        rotated = states.apply_unitary(st, u)
        assert abs(measures.negativity(st, 0) - measures.negativity(rotated, 0)) < 1e-8
        assert abs(measures.concurrence2(st) - measures.concurrence2(rotated)) < 1e-8
        assert abs(measures.linear_entropy(st) - measures.linear_entropy(rotated)) < 1e-8
        assert abs(
            measures.mutual_information(st, [0]) - measures.mutual_information(rotated, [0])
        ) < 1e-8


def test_i4_pair_independence():
    def i4_for_pair(rho, i, j, k_other):
        ri = linalg.partial_trace(rho, [i], 3)
        rj = linalg.partial_trace(rho, [j], 3)
        rij = linalg.partial_trace(rho, [i, j], 3)
        return (
            3 * float(np.trace(np.kron(ri, rj) @ rij).real)
            - float(np.trace(ri @ ri @ ri).real)
            - float(np.trace(rj @ rj @ rj).real)
        )

    rng = np.random.default_rng(27)
    for _ in range(25):
        rho = states.random_pure(3, rng).rho
        values = [i4_for_pair(rho, 0, 1, 2), i4_for_pair(rho, 0, 2, 1), i4_for_pair(rho, 1, 2, 0)]
        assert max(values) - min(values) < 1e-8


def test_tau_pivot_consistency():
    rng = np.random.default_rng(28)
    for _ in range(25):
        inv = measures.invariants3(states.random_pure(3, rng))
        t1 = abs(inv.N1**2 - inv.C12**2 - inv.C13**2)
        t2 = abs(inv.N2**2 - inv.C12**2 - inv.C23**2)
        t3 = abs(inv.N3**2 - inv.C13**2 - inv.C23**2)
        assert max(t1, t2, t3) - min(t1, t2, t3) < 1e-8


def test_invariants3_rejects_bad_input():
    with pytest.raises(ValueError):
        measures.invariants3(states.pure_theta(0.3))
    with pytest.raises(ValueError):
        measures.invariants3(states.from_density(np.eye(8, dtype=complex) / 8))
