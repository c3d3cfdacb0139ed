import math

import numpy as np
import pytest

import fockbundle as fb


def test_commutator_is_identity():
    a = fb.Operator.annihilation()
    ad = fb.Operator.creation()
    c = a * ad - ad * a
    assert np.array_equal(c.dense(10), np.eye(11))


def test_h_jc_dense_layout():
    h = fb.h_jc(0.5).dense(4)
    assert h.shape == (10, 10)
    assert h[0, 0] == 0.5
    assert h[5, 5] == -0.5
    assert h[0, 6] == pytest.approx(1.0)  # <1,0| a |2,1>
    assert np.allclose(h, h.conj().T)


def test_dirac_string_map_agrees():
    m = fb.dirac_string_map(-1.0, "I", 20)
    assert m["agree"]
    assert m["computed"] == {"slot2": [0]}
    assert fb.dirac_string_map(1.0, "II", 20)["computed"] == {"slot1": [0], "slot2": [0]}


def test_singular_columns_are_nan():
    phi = fb.transition(1.0).dense(5)
    assert np.isnan(phi[:, 0]).all()
    assert not np.isnan(phi[:, 1]).any()
    assert fb.transition(1.0).singular_support(5) == {1: [0]}


def test_propagator_is_unitary_on_low_block():
    u = fb.propagator(0.5, 1.0, 1.0).dense(30)
    d = 31
    cols = [s * d + n for s in range(2) for n in range(d - 2)]
    sub = u[:, cols]
    assert np.allclose(sub.conj().T @ sub, np.eye(len(cols)), atol=1e-12)


def test_spin_rep_matches_symmetric_square():
    alpha, beta = complex(0.6, 0.0), complex(0.0, 0.8)
    phi = fb.spin_rep(alpha, beta, 2)
    assert phi.shape == (3, 3)
    assert phi[:, 0] == pytest.approx([alpha**2, math.sqrt(2) * alpha * beta, beta**2])
    assert np.allclose(phi.conj().T @ phi, np.eye(3))


def test_verify_returns_report():
    rep = fb.verify("charts", [1.0], n_max=12)
    assert rep["pass"]
    assert {"version", "config", "checks", "pass"} <= rep.keys()


def test_bad_config_raises():
    with pytest.raises(fb.ConfigError):
        fb.verify("charts", [1.0], n_max=2)
