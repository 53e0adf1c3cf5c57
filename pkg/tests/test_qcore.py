import pytest
from hypothesis import given, strategies as st

from qharm import DomainError, QParam, q_integer, q_integer_pow

# q values away from the endpoints; the endpoints themselves are covered by
# dedicated limit tests.
q_values = st.floats(min_value=1e-6, max_value=1.0 - 1e-6)


def test_qparam_range():
    assert QParam(0.5).q == 0.5
    for bad in (0.0, 1.0, -0.1, 1.2, float("nan"), float("inf")):
        with pytest.raises(DomainError):
            QParam(bad)


def test_qparam_float_conversion():
    assert float(QParam(0.25)) == 0.25


def test_q_integer_single_term():
    assert q_integer(1, QParam(0.3)) == 1.0


def test_q_integer_direct_sum():
    # oracle: the geometric sum written out
    assert q_integer(3, QParam(0.5)) == 1.0 + 0.5 + 0.25 == 1.75


def test_q_integer_classical_limit():
    q = QParam(1.0 - 1e-8)
    assert abs(q_integer(5, q) - 5.0) <= 1e-6 * 5.0


def test_q_integer_rejects_nonpositive():
    q = QParam(0.5)
    with pytest.raises(DomainError):
        q_integer(0, q)
    with pytest.raises(DomainError):
        q_integer(-3, q)


def test_q_integer_pow_zeroth():
    assert q_integer_pow(7, QParam(0.9), 0) == 1.0


def test_q_integer_pow_square():
    # [2]_0.5 = 1.5, squared
    assert q_integer_pow(2, QParam(0.5), 2) == 1.5**2 == 2.25


def test_q_integer_pow_classical_limit():
    val = q_integer_pow(2, QParam(1.0 - 1e-8), 3)
    assert abs(val - 8.0) <= 1e-6 * 8.0


def test_q_integer_pow_rejects_negative_m():
    with pytest.raises(DomainError):
        q_integer_pow(2, QParam(0.5), -1)


@given(u=st.integers(min_value=1, max_value=64), q=q_values)
def test_recurrence_is_bitwise(u, q):
    qp = QParam(q)
    assert q_integer(u + 1, qp) == 1.0 + q * q_integer(u, qp)


@given(u=st.integers(min_value=1, max_value=64), q=q_values)
def test_monotone_in_u(u, q):
    # strictly increasing mathematically; in doubles the increment q**u can
    # fall below an ulp of the saturated sum, so demand strictness only
    # where it is representable
    qp = QParam(q)
    lo, hi = q_integer(u, qp), q_integer(u + 1, qp)
    assert hi >= lo
    if q**u > 1e-12:
        assert hi > lo


@given(u=st.integers(min_value=2, max_value=64), q=q_values)
def test_bounds(u, q):
    qp = QParam(q)
    val = q_integer(u, qp)
    assert 1.0 <= val < u
    # < 1/(1-q) mathematically; allow the saturated sum to touch the limit
    # to within a few ulps
    assert val <= 1.0 / (1.0 - q) * (1.0 + 1e-14)


@pytest.mark.parametrize("u", range(1, 21))
def test_limit_rate(u):
    # |[u]_{1-eps} - u| <= u(u-1) eps / 2, up to fp noise
    eps = 1e-8
    val = q_integer(u, QParam(1.0 - eps))
    assert abs(val - u) <= u * (u - 1) * eps / 2.0 + 1e-12
