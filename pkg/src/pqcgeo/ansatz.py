"""The five two-qubit circuit families.

Each family is defined canonically by a closed-form map from its parameter
vector to a normalized statevector, together with a hand-differentiated
analytic Jacobian and closed-form concurrence / scalar-curvature expressions.

Closed-form state maps (notation C(x)=cos x, S(x)=sin x):

hea (4 params), amplitudes all real:
    a00 = C(t1) C(t3) C(t2+t4) - S(t1) S(t3) S(t2-t4)
    a01 = C(t1) C(t3) S(t2+t4) - S(t1) S(t3) C(t2-t4)
    a10 = C(t1) S(t3) C(t2+t4) + S(t1) C(t3) S(t2-t4)
    a11 = S(t1) C(t3) C(t2-t4) + C(t1) S(t3) S(t2+t4)

ldca (5 params), supported on |01>, |10>:
    e   = exp(-i (t1 - t2 - t4) / 2)
    a01 = e (C(t3) C(t5) - i S(t3) S(t5))
    a10 = -e (S(t5) C(t3) + i S(t3) C(t5))

qgan (5 params), half angles h = t/2:
    a00 =    exp(-i (t3+t4+t5)/2) C(h1) C(h2)
    a01 = -i exp(-i (t3-t4-t5)/2) C(h1) S(h2)
    a10 = -i exp(+i (t3-t4+t5)/2) S(h1) C(h2)
    a11 = -  exp(+i (t3+t4-t5)/2) S(h1) S(h2)

shea (6 params), half angles for t1..t3, quarter angle for t4:
    a00 = -i exp(-i (t5+t6)/2) C(h1) S(h2)
    a01 =    exp(-i (t5-t6)/2) (C(h1) C(h2) C(h3) - i S(h1) S(h2) S(h3))
    a10 =    exp(+i (t5-t6)/2) (-S(h1) S(h2) C(h3) + i C(h1) C(h2) S(h3))
    a11 = -i exp(-i (t4 - 2 (t5+t6)) / 4) S(h1) C(h2)

qgan-aug (9 params): the qgan state followed by R_X(t6), R_X(t7) and then
R_Z(t8), R_Z(t9) on qubits 1 and 2 respectively (half-angle rotations).
"""
from __future__ import annotations

import numpy as np

from .simulator import require_normalized

HEA = "hea"
LDCA = "ldca"
QGAN = "qgan"
SHEA = "shea"
QGAN_AUG = "qgan-aug"

ANSATZE = (HEA, LDCA, QGAN, SHEA, QGAN_AUG)

_N_PARAMS = {HEA: 4, LDCA: 5, QGAN: 5, SHEA: 6, QGAN_AUG: 9}

# Index partitions defining the block-diagonal metric approximation.
# The appended local-rotation layers of qgan-aug block by circuit layer.
BLOCK_PARTITIONS = {
    HEA: ((0, 1), (2, 3)),
    LDCA: ((0, 1), (2,), (3,), (4,)),
    QGAN: ((0, 1), (2, 3), (4,)),
    SHEA: ((0, 1), (2,), (3,), (4, 5)),
    QGAN_AUG: ((0, 1), (2, 3), (4,), (5, 6), (7, 8)),
}


class SingularityError(ValueError):
    """Raised where a closed-form curvature expression hits its C = 1 pole."""


def resolve_kind(kind: str) -> str:
    k = str(kind).strip().lower().replace("_", "-")
    if k not in ANSATZE:
        raise ValueError(f"unknown ansatz {kind!r}; expected one of {ANSATZE}")
    return k


def param_count(kind: str) -> int:
    return _N_PARAMS[resolve_kind(kind)]


def _check_theta(kind: str, theta) -> np.ndarray:
    theta = np.asarray(theta, dtype=float)
    m = _N_PARAMS[kind]
    if theta.shape != (m,):
        raise ValueError(f"{kind} takes {m} parameters, got shape {theta.shape}")
    if not np.all(np.isfinite(theta)):
        raise ValueError("parameters must be finite")
    return theta


# ---------------------------------------------------------------------------
# state maps and Jacobians
# ---------------------------------------------------------------------------

def _hea_state_jac(t):
    t1, t2, t3, t4 = t
    c1, s1, c3, s3 = np.cos(t1), np.sin(t1), np.cos(t3), np.sin(t3)
    cp, sp = np.cos(t2 + t4), np.sin(t2 + t4)
    cm, sm = np.cos(t2 - t4), np.sin(t2 - t4)
    psi = np.array(
        [c1 * c3 * cp - s1 * s3 * sm,
         c1 * c3 * sp - s1 * s3 * cm,
         c1 * s3 * cp + s1 * c3 * sm,
         s1 * c3 * cm + c1 * s3 * sp],
        dtype=complex,
    )
    jac = np.empty((4, 4), dtype=complex)
    jac[:, 0] = [-s1 * c3 * cp - c1 * s3 * sm,
                 -s1 * c3 * sp - c1 * s3 * cm,
                 -s1 * s3 * cp + c1 * c3 * sm,
                 c1 * c3 * cm - s1 * s3 * sp]
    jac[:, 1] = [-c1 * c3 * sp - s1 * s3 * cm,
                 c1 * c3 * cp + s1 * s3 * sm,
                 -c1 * s3 * sp + s1 * c3 * cm,
                 -s1 * c3 * sm + c1 * s3 * cp]
    jac[:, 2] = [-c1 * s3 * cp - s1 * c3 * sm,
                 -c1 * s3 * sp - s1 * c3 * cm,
                 c1 * c3 * cp - s1 * s3 * sm,
                 -s1 * s3 * cm + c1 * c3 * sp]
    jac[:, 3] = [-c1 * c3 * sp + s1 * s3 * cm,
                 c1 * c3 * cp - s1 * s3 * sm,
                 -c1 * s3 * sp - s1 * c3 * cm,
                 s1 * c3 * sm + c1 * s3 * cp]
    return psi, jac


def _ldca_state_jac(t):
    t1, t2, t3, t4, t5 = t
    e = np.exp(-0.5j * (t1 - t2 - t4))
    c3, s3, c5, s5 = np.cos(t3), np.sin(t3), np.cos(t5), np.sin(t5)
    u = c3 * c5 - 1j * s3 * s5
    v = -(s5 * c3 + 1j * s3 * c5)
    psi = np.array([0.0, e * u, e * v, 0.0], dtype=complex)
    jac = np.zeros((4, 5), dtype=complex)
    # t1, t2, t4 enter only through the overall phase
    jac[:, 0] = -0.5j * psi
    jac[:, 1] = 0.5j * psi
    jac[:, 3] = 0.5j * psi
    jac[1, 2] = e * (-s3 * c5 - 1j * c3 * s5)
    jac[2, 2] = e * (s3 * s5 - 1j * c3 * c5)
    jac[1, 4] = e * (-c3 * s5 - 1j * s3 * c5)
    jac[2, 4] = e * (-c3 * c5 + 1j * s3 * s5)
    return psi, jac


def _qgan_state_jac(t):
    t1, t2, t3, t4, t5 = t
    c1, s1 = np.cos(t1 / 2), np.sin(t1 / 2)
    c2, s2 = np.cos(t2 / 2), np.sin(t2 / 2)
    p00 = np.exp(-0.5j * (t3 + t4 + t5))
    p01 = np.exp(-0.5j * (t3 - t4 - t5))
    p10 = np.exp(0.5j * (t3 - t4 + t5))
    p11 = np.exp(0.5j * (t3 + t4 - t5))
    psi = np.array(
        [p00 * c1 * c2, -1j * p01 * c1 * s2, -1j * p10 * s1 * c2, -p11 * s1 * s2]
    )
    jac = np.empty((4, 5), dtype=complex)
    jac[:, 0] = [p00 * (-s1 / 2) * c2, -1j * p01 * (-s1 / 2) * s2,
                 -1j * p10 * (c1 / 2) * c2, -p11 * (c1 / 2) * s2]
    jac[:, 1] = [p00 * c1 * (-s2 / 2), -1j * p01 * c1 * (c2 / 2),
                 -1j * p10 * s1 * (-s2 / 2), -p11 * s1 * (c2 / 2)]
    # t3, t4, t5 generate Z1, Z2, Z1Z2 phase patterns
    jac[:, 2] = -0.5j * psi * np.array([1, 1, -1, -1])
    jac[:, 3] = -0.5j * psi * np.array([1, -1, 1, -1])
    jac[:, 4] = -0.5j * psi * np.array([1, -1, -1, 1])
    return psi, jac


def _shea_state_jac(t):
    t1, t2, t3, t4, t5, t6 = t
    c1, s1 = np.cos(t1 / 2), np.sin(t1 / 2)
    c2, s2 = np.cos(t2 / 2), np.sin(t2 / 2)
    c3, s3 = np.cos(t3 / 2), np.sin(t3 / 2)
    pa = np.exp(-0.5j * (t5 + t6))
    pb = np.exp(-0.5j * (t5 - t6))
    pg = np.exp(0.5j * (t5 - t6))
    pd = np.exp(-0.25j * (t4 - 2 * (t5 + t6)))
    psi = np.array(
        [-1j * pa * c1 * s2,
         pb * (c1 * c2 * c3 - 1j * s1 * s2 * s3),
         pg * (-s1 * s2 * c3 + 1j * c1 * c2 * s3),
         -1j * pd * s1 * c2]
    )
    jac = np.zeros((4, 6), dtype=complex)
    jac[:, 0] = [-1j * pa * (-s1 / 2) * s2,
                 pb * ((-s1 / 2) * c2 * c3 - 1j * (c1 / 2) * s2 * s3),
                 pg * (-(c1 / 2) * s2 * c3 + 1j * (-s1 / 2) * c2 * s3),
                 -1j * pd * (c1 / 2) * c2]
    jac[:, 1] = [-1j * pa * c1 * (c2 / 2),
                 pb * (c1 * (-s2 / 2) * c3 - 1j * s1 * (c2 / 2) * s3),
                 pg * (-s1 * (c2 / 2) * c3 + 1j * c1 * (-s2 / 2) * s3),
                 -1j * pd * s1 * (-s2 / 2)]
    jac[1, 2] = pb * (c1 * c2 * (-s3 / 2) - 1j * s1 * s2 * (c3 / 2))
    jac[2, 2] = pg * (-s1 * s2 * (-s3 / 2) + 1j * c1 * c2 * (c3 / 2))
    jac[3, 3] = -0.25j * psi[3]
    jac[:, 4] = -0.5j * psi * np.array([1, 1, -1, -1])
    jac[:, 5] = -0.5j * psi * np.array([1, -1, 1, -1])
    return psi, jac


_X1 = np.kron(np.array([[0, 1], [1, 0]], dtype=complex), np.eye(2))
_X2 = np.kron(np.eye(2), np.array([[0, 1], [1, 0]], dtype=complex))
_Z1_DIAG = np.array([1, 1, -1, -1], dtype=complex)
_Z2_DIAG = np.array([1, -1, 1, -1], dtype=complex)


def _rx2(th):
    c, s = np.cos(th / 2), np.sin(th / 2)
    return np.array([[c, -1j * s], [-1j * s, c]])


def _qgan_aug_state_jac(t):
    psi_q, jac_q = _qgan_state_jac(t[:5])
    a = np.kron(_rx2(t[5]), _rx2(t[6]))
    rz_diag = np.exp(-0.5j * t[7] * _Z1_DIAG) * np.exp(-0.5j * t[8] * _Z2_DIAG)
    a_psi = a @ psi_q
    psi = rz_diag * a_psi
    jac = np.empty((4, 9), dtype=complex)
    jac[:, :5] = rz_diag[:, None] * (a @ jac_q)
    jac[:, 5] = rz_diag * (-0.5j * (_X1 @ a_psi))
    jac[:, 6] = rz_diag * (-0.5j * (_X2 @ a_psi))
    jac[:, 7] = -0.5j * _Z1_DIAG * psi
    jac[:, 8] = -0.5j * _Z2_DIAG * psi
    return psi, jac


_STATE_JAC = {
    HEA: _hea_state_jac,
    LDCA: _ldca_state_jac,
    QGAN: _qgan_state_jac,
    SHEA: _shea_state_jac,
    QGAN_AUG: _qgan_aug_state_jac,
}


def prepare_state(kind: str, theta) -> np.ndarray:
    """Normalized statevector of the ansatz at the given parameters."""
    kind = resolve_kind(kind)
    theta = _check_theta(kind, theta)
    return _STATE_JAC[kind](theta)[0]


def state_jacobian(kind: str, theta) -> np.ndarray:
    """Analytic 4 x m Jacobian; column j is d|psi>/d theta_j."""
    kind = resolve_kind(kind)
    theta = _check_theta(kind, theta)
    return _STATE_JAC[kind](theta)[1]


def state_and_jacobian(kind: str, theta) -> tuple[np.ndarray, np.ndarray]:
    kind = resolve_kind(kind)
    theta = _check_theta(kind, theta)
    return _STATE_JAC[kind](theta)


# ---------------------------------------------------------------------------
# closed-form concurrence and scalar curvature
# ---------------------------------------------------------------------------

def _theta_cols(kind, theta):
    theta = np.asarray(theta, dtype=float)
    m = _N_PARAMS[kind]
    if theta.shape[-1] != m:
        raise ValueError(f"{kind} takes {m} parameters, got trailing dimension {theta.shape[-1:]}")
    return np.moveaxis(theta, -1, 0)


def concurrence_closed(kind: str, theta) -> np.ndarray | float:
    """Closed-form concurrence; broadcasts over leading axes of theta."""
    kind = resolve_kind(kind)
    t = _theta_cols(kind, theta)
    if kind == HEA:
        c = np.abs(np.sin(2 * t[0]) * np.cos(2 * t[1]))
    elif kind == LDCA:
        inner = 3.0 - 2.0 * np.cos(4 * t[2]) * np.cos(2 * t[4]) ** 2 - np.cos(4 * t[4])
        c = 0.5 * np.sqrt(np.clip(inner, 0.0, None))
    elif kind in (QGAN, QGAN_AUG):
        # appended single-qubit rotations of qgan-aug leave the concurrence alone
        c = np.abs(np.sin(t[0]) * np.sin(t[1]) * np.sin(t[4]))
    else:
        c = 0.5 * np.sqrt(_shea_pole_argument(t))
    c = np.clip(c, 0.0, 1.0)
    return float(c) if np.ndim(c) == 0 else c


def _shea_pole_argument(t):
    # shared between the shea concurrence (C = sqrt(n)/2) and curvature ((12n-40)/(n-4))
    a = np.sin(t[0]) ** 2 * np.sin(t[1]) ** 2 * (np.cos(t[2]) - np.cos(t[3] / 4)) ** 2
    b = (np.sin(t[2]) * (np.cos(t[0]) * np.cos(t[1]) + 1)
         - np.sin(t[0]) * np.sin(t[1]) * np.sin(t[3] / 4)) ** 2
    return a + b


def _ricci_from_pole(num, den):
    """Evaluate num/den elementwise, mapping den == 0 to -inf (the C = 1 pole)."""
    den = np.asarray(den, dtype=float)
    safe = np.where(den != 0.0, den, 1.0)
    out = np.where(den != 0.0, np.asarray(num, dtype=float) / safe, -np.inf)
    return out


def ricci_closed_circuit(kind: str, theta) -> float:
    """Per-circuit closed-form scalar curvature at a single parameter vector.

    Raises SingularityError when the parameters sit on the maximal-entanglement
    pole (concurrence equal to 1 within 1e-12).
    """
    kind = resolve_kind(kind)
    theta = _check_theta(kind, theta)
    c = concurrence_closed(kind, theta)
    if 1.0 - c <= 1e-12:
        raise SingularityError(f"curvature pole: concurrence = {c!r}")
    return float(ricci_circuit_grid(kind, theta))


def ricci_circuit_grid(kind: str, theta) -> np.ndarray | float:
    """Vectorized per-circuit curvature; poles evaluate to -inf instead of raising."""
    kind = resolve_kind(kind)
    t = _theta_cols(kind, theta)
    with np.errstate(divide="ignore", invalid="ignore"):
        if kind == HEA:
            s = np.sin(2 * t[0]) * np.cos(2 * t[1])
            r = 12.0 + _ricci_from_pole(2.0, s * s - 1.0)
        elif kind == LDCA:
            cc = (np.cos(2 * t[2]) * np.cos(2 * t[4])) ** 2
            r = np.where(cc != 0.0, 12.0 - 2.0 / np.where(cc != 0.0, cc, 1.0), -np.inf)
        elif kind in (QGAN, QGAN_AUG):
            s = np.sin(t[0]) * np.sin(t[1]) * np.sin(t[4])
            r = 12.0 + _ricci_from_pole(2.0, s * s - 1.0)
        else:
            n = _shea_pole_argument(t)
            r = _ricci_from_pole(12.0 * n - 40.0, n - 4.0)
    return float(r) if np.ndim(r) == 0 else r


def random_parameters(kind: str, rng: np.random.Generator) -> np.ndarray:
    """Uniform draw from the canonical initialization domain [0, 2 pi)^m."""
    return rng.uniform(0.0, 2.0 * np.pi, size=param_count(kind))


def brute_concurrence(state: np.ndarray) -> float:
    """2 |a00 a11 - a01 a10| straight from amplitudes (oracle for the closed forms)."""
    state = require_normalized(state)
    return float(min(1.0, 2.0 * abs(state[0] * state[3] - state[1] * state[2])))
