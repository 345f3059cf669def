import numpy as np
import pytest

from pqcgeo import ansatz, simulator as sim
from pqcgeo.ansatz import ANSATZE, HEA, LDCA, QGAN, QGAN_AUG, SHEA

RNG_SEED = 20260808


def test_parameter_counts():
    assert [ansatz.param_count(k) for k in ANSATZE] == [4, 5, 5, 6, 9]


def test_wrong_parameter_count_rejected():
    with pytest.raises(ValueError, match="parameters"):
        ansatz.prepare_state(HEA, [0.0, 0.0, 0.0])
    with pytest.raises(ValueError, match="finite"):
        ansatz.prepare_state(HEA, [0.0, np.nan, 0.0, 0.0])
    with pytest.raises(ValueError, match="unknown ansatz"):
        ansatz.prepare_state("nope", [0.0])


def test_hea_zero_angles_gives_00():
    assert np.abs(ansatz.prepare_state(HEA, np.zeros(4)) - sim.basis_state("00")).max() == 0.0


def test_qgan_zero_angles_gives_00():
    psi = ansatz.prepare_state(QGAN, np.zeros(5))
    assert sim.fidelity_up_to_phase(psi, sim.basis_state("00")) == pytest.approx(1.0, abs=1e-15)


def test_qgan_aug_zero_angles_gives_00():
    psi = ansatz.prepare_state(QGAN_AUG, np.zeros(9))
    assert sim.fidelity_up_to_phase(psi, sim.basis_state("00")) == pytest.approx(1.0, abs=1e-15)


def test_ldca_quarter_mixing_example():
    psi = ansatz.prepare_state(LDCA, [0, 0, np.pi / 4, 0, 0])
    expected = np.cos(np.pi / 4) * sim.basis_state("01") - 1j * np.sin(np.pi / 4) * sim.basis_state("10")
    assert np.abs(psi - expected).max() < 1e-15


def test_states_unit_norm():
    rng = np.random.default_rng(RNG_SEED)
    for kind in ANSATZE:
        for _ in range(1000):
            psi = ansatz.prepare_state(kind, ansatz.random_parameters(kind, rng))
            assert abs(np.linalg.norm(psi) - 1.0) < 1e-12


def test_jacobian_matches_central_differences():
    rng = np.random.default_rng(RNG_SEED + 1)
    h = 1e-5
    for kind in ANSATZE:
        m = ansatz.param_count(kind)
        for _ in range(100):
            theta = ansatz.random_parameters(kind, rng)
            jac = ansatz.state_jacobian(kind, theta)
            for j in range(m):
                tp, tm = theta.copy(), theta.copy()
                tp[j] += h
                tm[j] -= h
                fd = (ansatz.prepare_state(kind, tp) - ansatz.prepare_state(kind, tm)) / (2 * h)
                assert np.abs(fd - jac[:, j]).max() < 1e-6


def test_jacobian_norm_preservation_direction():
    # d||psi||^2/dtheta_j = 2 Re<psi|d_j psi> must vanish
    rng = np.random.default_rng(RNG_SEED + 2)
    for kind in ANSATZE:
        for _ in range(200):
            psi, jac = ansatz.state_and_jacobian(kind, ansatz.random_parameters(kind, rng))
            assert np.abs(np.real(psi.conj() @ jac)).max() < 1e-10


def test_hea_first_column_zero_00_component_at_origin():
    jac = ansatz.state_jacobian(HEA, np.zeros(4))
    assert abs(jac[0, 0]) < 1e-15


# --- gate-level realizations cross-checked against the closed forms ---

CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)


def _hea_circuit(t):
    layer1 = sim.gate_unitary(sim.rotation("Y", 2 * t[0], qubit=1)) \
        @ sim.gate_unitary(sim.rotation("Y", 2 * t[1], qubit=2))
    layer2 = sim.gate_unitary(sim.rotation("Y", 2 * t[2], qubit=1)) \
        @ sim.gate_unitary(sim.rotation("Y", 2 * t[3], qubit=2))
    return layer2 @ CNOT @ layer1 @ sim.basis_state("00")


def _qgan_circuit(t):
    u = sim.gate_unitary(sim.rotation("ZZ", t[4]))
    u = u @ sim.gate_unitary(sim.rotation("Z", t[2], qubit=1))
    u = u @ sim.gate_unitary(sim.rotation("Z", t[3], qubit=2))
    u = u @ sim.gate_unitary(sim.rotation("X", t[0], qubit=1))
    u = u @ sim.gate_unitary(sim.rotation("X", t[1], qubit=2))
    return u @ sim.basis_state("00")


def _ldca_circuit(t):
    # phase gates act first, on |01>, where they reduce to a global phase
    psi = sim.basis_state("01")
    psi = sim.gate_unitary(sim.rotation("Z", t[0], qubit=1)) @ psi
    psi = sim.gate_unitary(sim.rotation("Z", t[1], qubit=2)) @ psi
    psi = sim.gate_unitary(sim.rotation("ZZ", t[3])) @ psi
    psi = sim.gate_unitary(sim.iswap_dag(t[2])) @ psi
    psi = sim.gate_unitary(sim.rotation("YX", -t[4])) @ sim.gate_unitary(sim.rotation("XY", t[4])) @ psi
    return psi


@pytest.mark.parametrize("kind,circuit", [(HEA, _hea_circuit), (QGAN, _qgan_circuit),
                                          (LDCA, _ldca_circuit)])
def test_gate_realization_matches_closed_form(kind, circuit):
    rng = np.random.default_rng(RNG_SEED + 3)
    for _ in range(1000):
        theta = ansatz.random_parameters(kind, rng)
        fid = sim.fidelity_up_to_phase(circuit(theta), ansatz.prepare_state(kind, theta))
        assert fid >= 1.0 - 1e-10


# --- closed-form concurrence and curvature ---

def test_concurrence_examples():
    assert ansatz.concurrence_closed(HEA, [np.pi / 4, 0, 0.3, 0.7]) == pytest.approx(1.0)
    assert ansatz.concurrence_closed(QGAN, [np.pi / 2, np.pi / 2, 0.2, 0.4, np.pi / 2]) \
        == pytest.approx(1.0)
    assert ansatz.concurrence_closed(LDCA, [0.1, 0.2, 0, 0.3, 0]) == pytest.approx(0.0)


def test_concurrence_closed_matches_brute_force():
    rng = np.random.default_rng(RNG_SEED + 4)
    for kind in ANSATZE:
        thetas = rng.uniform(0, 2 * np.pi, size=(2000, ansatz.param_count(kind)))
        closed = ansatz.concurrence_closed(kind, thetas)
        brute = np.array([ansatz.brute_concurrence(ansatz.prepare_state(kind, t)) for t in thetas])
        assert np.abs(closed - brute).max() < 1e-9


def test_qgan_aug_concurrence_ignores_local_rotations():
    rng = np.random.default_rng(RNG_SEED + 5)
    for _ in range(1000):
        base = rng.uniform(0, 2 * np.pi, 5)
        aug = np.concatenate([base, rng.uniform(0, 2 * np.pi, 4)])
        c_base = ansatz.brute_concurrence(ansatz.prepare_state(QGAN, base))
        c_aug = ansatz.brute_concurrence(ansatz.prepare_state(QGAN_AUG, aug))
        assert abs(c_base - c_aug) < 1e-9
        assert abs(ansatz.concurrence_closed(QGAN_AUG, aug) - c_base) < 1e-9


def test_ricci_circuit_examples():
    # C = 0 gives 12 - 1/1 + 1/(-1) = 10
    assert ansatz.ricci_closed_circuit(HEA, [0.0, 0.3, 0.2, 0.1]) == pytest.approx(10.0, abs=1e-12)
    assert ansatz.ricci_closed_circuit(LDCA, [0.4, 0.5, 0, 0.6, 0]) == pytest.approx(10.0, abs=1e-12)
    # sin(2 t1) = 1/sqrt(2) at t1 = pi/8 gives C = 1/sqrt(2) and curvature 8
    assert ansatz.ricci_closed_circuit(HEA, [np.pi / 8, 0, 0, 0]) == pytest.approx(8.0, abs=1e-12)


def test_ricci_circuit_singularity_signal():
    with pytest.raises(ansatz.SingularityError):
        ansatz.ricci_closed_circuit(HEA, [np.pi / 4, 0, 0, 0])


def test_ricci_circuit_matches_universal_form():
    from pqcgeo.geometry import ricci_closed

    rng = np.random.default_rng(RNG_SEED + 6)
    for kind in ANSATZE:
        thetas = rng.uniform(0, 2 * np.pi, size=(2000, ansatz.param_count(kind)))
        c = np.asarray(ansatz.concurrence_closed(kind, thetas))
        keep = c <= 0.99
        circuit = np.asarray(ansatz.ricci_circuit_grid(kind, thetas))[keep]
        universal = ricci_closed(c[keep])
        rel = np.abs(circuit - universal) / (1.0 + np.abs(universal))
        assert rel.max() < 1e-8
