import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.special import gamma as sp_gamma
from scipy.special import loggamma

from bethe_qsl.awop import QParam
from bethe_qsl.qsl import XxzParams
from bethe_qsl.weights import (
    log_gamma,
    orthogonality_check,
    q_gamma,
    qpoch,
    qpoch_full,
    xxx_weight,
    xxx_weight_closed,
    xxz_weight,
    xxz_weight_forms,
)
from bethe_qsl.wilson import xxx_ground_config

AW_PARAMS = XxzParams.from_a((0.1, 0.2, -0.15, 0.05), QParam.from_q(0.36))


def test_qpoch_examples():
    assert qpoch(0.3, 0.5, 0) == 1
    assert abs(qpoch(0.3, 0.5, 2) - 0.7 * 0.85) < 1e-15
    ref = np.prod([1 - 0.5 * 0.5**k for k in range(60)])
    full = qpoch_full(0.5, 0.5)
    assert abs(full.value - ref) < 1e-14 and full.tail_bound < 1e-14
    with pytest.raises(ValueError):
        qpoch(0.3, 1.2)
    with pytest.raises(ValueError):
        qpoch(0.3, 0.5, -1)


@settings(max_examples=50, deadline=None)
@given(st.builds(complex, st.floats(-1.5, 1.5), st.floats(-1.5, 1.5)),
       st.floats(0.05, 0.9), st.integers(0, 12))
def test_qpoch_ladder(a, q, n):
    # (a; q)_inf = (a; q)_n (a q^n; q)_inf
    lhs = qpoch(a, q)
    rhs = qpoch(a, q, n) * qpoch(a * q**n, q)
    assert abs(lhs - rhs) <= 1e-12 * max(1.0, abs(lhs), abs(qpoch(a, q, n)))


def test_q_gamma_examples():
    for q in (0.2, 0.5, 0.8):
        assert abs(q_gamma(1, q) - 1) < 1e-14 and abs(q_gamma(2, q) - 1) < 1e-14
        assert abs(q_gamma(4, q) - (1 + q) * (1 + q + q * q)) < 1e-13
    with pytest.raises(ValueError, match="pole"):
        q_gamma(-2, 0.5)
    with pytest.raises(ValueError):
        q_gamma(1.5, 1.0)


@settings(max_examples=50, deadline=None)
@given(st.builds(complex, st.floats(0.1, 4), st.floats(-2, 2)), st.floats(0.1, 0.9))
def test_q_gamma_functional_equation(y, q):
    lhs = q_gamma(y + 1, q)
    rhs = (1 - q**y) / (1 - q) * q_gamma(y, q)
    assert abs(lhs - rhs) < 1e-11 * abs(lhs)


def test_q_gamma_classical_limit():
    for y in (0.7, 1.5, 3.2):
        assert abs(q_gamma(y, 0.9999) / sp_gamma(y) - 1) < 1e-3


def test_log_gamma():
    assert abs(log_gamma(1)) < 1e-14 and abs(log_gamma(2)) < 1e-14
    for z in (0.3 + 2j, -2.7 + 0.1j, 5.5 - 3j, -0.5 + 1j, 12 + 30j, -7.3 - 4j):
        assert abs(log_gamma(z) - loggamma(z)) < 1e-12 * max(1.0, abs(loggamma(z)))
    for pole in (0, -1, -5):
        with pytest.raises(ValueError, match="pole"):
            log_gamma(pole)


def test_xxz_weight_positive_and_symmetric():
    x = np.linspace(-0.99, 0.99, 101)
    w = xxz_weight(x, AW_PARAMS)
    assert np.all(np.abs(w.imag) < 1e-12 * np.abs(w.real)) and np.all(w.real > 0)
    flipped = XxzParams(AW_PARAMS.q, AW_PARAMS.a[::-1])
    assert np.allclose(xxz_weight(x, flipped), w, rtol=1e-13)


def test_xxz_weight_forms_agree(rng):
    for x in rng.uniform(-0.95, 0.95, 8):
        first, second = xxz_weight_forms(x, AW_PARAMS)
        w = xxz_weight(x, AW_PARAMS)
        assert abs(first - w) < 1e-12 * abs(w) and abs(second - w) < 1e-12 * abs(w)


def test_xxz_weight_needs_real_q():
    with pytest.raises(ValueError):
        xxz_weight(0.2, XxzParams.from_a((0.1, 0.2, 0.3, 0.4), QParam.from_q(1.5)))
    with pytest.raises(ValueError):
        xxz_weight(0.2, XxzParams.from_a((0.1, 0.2, 0.3, 0.4), QParam.from_q(0.5 + 0.1j)))


@pytest.mark.parametrize("L", [2, 4, 6, 8])
def test_xxx_closed_forms(L):
    params, _ = xxx_ground_config(L)
    for y in (0.1, 0.45, 1.0, 2.3):
        assert abs(xxx_weight(y, params.s) / xxx_weight_closed(y, L) - 1) < 1e-10
    with pytest.raises(ValueError):
        xxx_weight(0.0, params.s)


def test_xxx_weight_example():
    params, _ = xxx_ground_config(2)
    assert abs(xxx_weight(0.5, params.s) - 42.9571065324135) < 1e-10


@pytest.mark.parametrize("maxdeg", [0, 4])
def test_orthogonality(maxdeg):
    gram = orthogonality_check(AW_PARAMS, maxdeg)
    assert gram.shape == (maxdeg + 1, maxdeg + 1)
    assert np.allclose(np.diag(gram), 1)
    assert np.max(np.abs(gram - np.eye(maxdeg + 1))) < 1e-7
    with pytest.raises(ValueError):
        orthogonality_check(XxzParams.from_a((0.1,) * 6, QParam.from_q(0.4)), 2)


def test_q_gamma_matches_product(rng):
    q = 0.45
    for n in range(1, 6):
        expected = math.prod((1 - q**k) / (1 - q) for k in range(1, n))
        assert abs(q_gamma(n, q) - expected) < 1e-13 * expected
