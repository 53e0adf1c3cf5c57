"""Jackson q-difference operator and its Salagean-type iterates.

All operators act coefficientwise: the q-derivative multiplies c_u by
[u]_q and drops the degree, and the order-m Salagean operator multiplies
c_u by [u]_q**m in place.  The difference-quotient definition
(s(z) - s(qz)) / ((1 - q) z) is deliberately not used for computation;
it is the independent oracle against which the coefficientwise form is
tested.

``classical_mode`` swaps the weights [u]_q**m for u**m, the undeformed
operator, without routing q = 1 through QParam.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass

from .qcore import DomainError, QParam, q_integer, q_integer_pow
from .series import (
    AnalyticSeries,
    HarmonicFunction,
    PowerSeries,
    _t_structure,
    eval_analytic,
    eval_power,
)


@dataclass(frozen=True)
class OperatorParams:
    """Salagean order m >= 0, deformation q, and the classical-mode switch."""

    m: int
    q: QParam
    classical_mode: bool = False

    def __post_init__(self) -> None:
        m = operator.index(self.m)
        if m < 0:
            raise DomainError(f"operator order m must be >= 0, got {self.m!r}")
        object.__setattr__(self, "m", m)


def _weight(u: int, p: OperatorParams) -> float:
    if p.classical_mode:
        return float(u**p.m)
    return q_integer_pow(u, p.q, p.m)


def q_derivative(s: AnalyticSeries, q: QParam) -> PowerSeries:
    """Jackson q-derivative: [u]_q c_u becomes the coefficient of z**(u-1).

    Equals (s(z) - s(qz)) / ((1 - q) z) pointwise; the quotient form is
    reserved for test oracles.
    """
    return PowerSeries(tuple(q_integer(u, q) * c for u, c in enumerate(s.coeffs, start=1)))


def salagean_kernel(trunc: int, p: OperatorParams) -> AnalyticSeries:
    """The convolution kernel z + sum_u w_u z**u with w_u = [u]_q**m
    (or u**m in classical mode)."""
    return AnalyticSeries(tuple(_weight(u, p) for u in range(1, trunc + 1)), trunc=trunc)


def salagean(s: AnalyticSeries, p: OperatorParams) -> AnalyticSeries:
    """Order-m Salagean q-operator: c_u -> [u]_q**m c_u.

    m = 0 returns ``s`` unchanged.  The result coincides coefficient by
    coefficient, bitwise, with hadamard(s, salagean_kernel(...)).
    """
    if p.m == 0:
        return s
    return AnalyticSeries(
        tuple(_weight(u, p) * c for u, c in enumerate(s.coeffs, start=1)),
        trunc=s.trunc_degree,
    )


def salagean_harmonic(f: HarmonicFunction, p: OperatorParams) -> HarmonicFunction:
    """Apply the operator to a harmonic pair: the analytic part is
    transformed directly and the co-analytic part picks up the factor
    (-1)**m, so that evaluating the result as h(z) + conj(g(z)) gives the
    operator value on f.

    The t_form flag of the result is recomputed from the coefficient signs
    (odd orders flip them).
    """
    h2 = salagean(f.h, p)
    g2 = salagean(f.g, p)
    if p.m % 2:
        g2 = AnalyticSeries(tuple(-c for c in g2.coeffs), trunc=g2.trunc_degree)
    return HarmonicFunction(h2, g2, t_form=_t_structure(h2, g2))


def class_transform(f: HarmonicFunction, p: OperatorParams) -> PowerSeries:
    """The series whose value at z is (D^m h(z) + D^m g(z)) / z, with the
    co-analytic coefficients entering verbatim (no conjugation, no sign).

    Constant term 1 + b_1; the coefficient of z**(u-1) is w_u (a_u + b_u).
    The real part of this series minus alpha is the membership margin of
    the family.  For the variant that instead conjugates and signs the g
    part, see class_transform_value with signed_conjugate=True.
    """
    h, g = f.h.coeffs, f.g.coeffs
    return PowerSeries(
        tuple(_weight(u, p) * (a + b) for u, (a, b) in enumerate(zip(h, g), start=1))
    )


def class_transform_value(
    f: HarmonicFunction,
    p: OperatorParams,
    z: complex,
    *,
    signed_conjugate: bool = False,
) -> complex:
    """Pointwise value of the membership transform at z.

    With signed_conjugate=False this evaluates class_transform (the
    verbatim form).  With signed_conjugate=True the co-analytic part
    enters as (-1)**m times its complex conjugate, matching the harmonic
    operator convention; that expression is not analytic in z and has no
    limit at z = 0 (unless b_1 = 0), so z = 0 is rejected there.  The two
    conventions disagree in general and are both exposed for comparison.
    """
    if not signed_conjugate:
        return eval_power(class_transform(f, p), complex(z))
    z = complex(z)
    if z == 0:
        raise DomainError("the conjugated transform has no limit at z = 0")
    sign = -1.0 if p.m % 2 else 1.0
    hv = eval_analytic(salagean(f.h, p), z)
    gv = eval_analytic(salagean(f.g, p), z)
    return (hv + sign * gv.conjugate()) / z
