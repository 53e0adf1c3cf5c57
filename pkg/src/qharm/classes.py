"""Membership criteria, extreme points, sharpness witnesses and growth
bounds for the harmonic families cut out by the Salagean q-operator.

The family S(m, alpha, q) consists of normalized harmonic f = h + conj(g)
with Re{(D^m h(z) + D^m g(z)) / z} > alpha on the unit disc.  Its
coefficient functional

    sum_{u>=2} ([u]_q**m / (1-alpha)) |a_u|
  + sum_{u>=1} ([u]_q**m / (1-alpha)) |b_u|

is <= 1 for a sufficient membership certificate; for functions in the
negative-coefficient normalization (t_form) the same inequality is an
exact characterization.  The one-term boundary functions with functional
exactly 1 are the extreme points of the closed convex hull, and every
member obeys two-sided growth bounds in |z| = r with the [2]_q**m
denominator.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Iterable, Sequence

from .qcore import DomainError, QParam, q_integer_pow
from .salagean import OperatorParams
from .series import (
    DEFAULT_TRUNC,
    AnalyticSeries,
    HarmonicFunction,
    _t_structure,
)

# Boundary functions sit exactly on the threshold; the comparison needs a
# hair of room for rounding in the functional sum.
MEMBERSHIP_TOL = 1e-12

WEIGHT_SUM_TOL = 1e-12


@dataclass(frozen=True)
class ClassParams:
    """Identifies the family: Salagean order m >= 0, level alpha in [0, 1),
    deformation q in (0, 1)."""

    m: int
    alpha: float
    q: QParam

    def __post_init__(self) -> None:
        m = operator.index(self.m)
        if m < 0:
            raise DomainError(f"m must be >= 0, got {self.m!r}")
        alpha = float(self.alpha)
        if not 0.0 <= alpha < 1.0:
            raise DomainError(f"alpha must lie in [0, 1), got {self.alpha!r}")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "alpha", alpha)

    def operator_params(self) -> OperatorParams:
        return OperatorParams(self.m, self.q)


@dataclass(frozen=True)
class GrowthBounds:
    """Two-sided bound on |f(z)| at |z| = r for members of the t_form
    subclass."""

    lower: float
    upper: float
    radius: float

    def __post_init__(self) -> None:
        if not self.lower <= self.upper:
            raise ValueError(f"lower bound {self.lower!r} exceeds upper bound {self.upper!r}")


def coeff_functional(f: HarmonicFunction, p: ClassParams) -> float:
    """The normalized coefficient sum; membership threshold is 1."""
    one_minus = 1.0 - p.alpha
    terms = []
    for u, c in enumerate(f.h.coeffs, start=1):
        if u >= 2 and c != 0:
            terms.append(q_integer_pow(u, p.q, p.m) / one_minus * abs(c))
    for u, c in enumerate(f.g.coeffs, start=1):
        if c != 0:
            terms.append(q_integer_pow(u, p.q, p.m) / one_minus * abs(c))
    return math.fsum(terms)


def satisfies_sufficient(f: HarmonicFunction, p: ClassParams, tol: float = MEMBERSHIP_TOL) -> bool:
    """Sufficient membership certificate: functional <= 1 (+ tol).

    A True result certifies that f is univalent, sense-preserving and in
    the family; False is inconclusive for general f (the condition is not
    necessary outside the t_form normalization).
    """
    return coeff_functional(f, p) <= 1.0 + tol


def member_t_iff(f: HarmonicFunction, p: ClassParams, tol: float = MEMBERSHIP_TOL) -> bool:
    """Exact membership test for t_form functions: functional <= 1 (+ tol).

    Raises DomainError for non-t_form input, where only the sufficient
    direction is available (use satisfies_sufficient).
    """
    if not f.t_form:
        raise DomainError("the iff criterion applies only to t_form functions")
    return coeff_functional(f, p) <= 1.0 + tol


def extreme_point(
    u: int,
    kind: str,
    p: ClassParams,
    *,
    coanalytic_sign: int = -1,
    trunc: int = DEFAULT_TRUNC,
) -> HarmonicFunction:
    """One-term boundary function of the closed convex hull.

    kind="analytic": z for u = 1, otherwise z - ((1-alpha)/[u]_q**m) z**u.
    kind="coanalytic": h = z plus a single co-analytic coefficient of
    magnitude (1-alpha)/[u]_q**m at power u.  The hull statement prints
    that coefficient with a minus sign, which conflicts with the sign
    normalization of the t_form subclass; coanalytic_sign selects the
    stored sign (-1 as printed, +1 for the t_form-compatible variant).
    The t_form flag is set only when the signs match that normalization.

    Every output except u = 1 analytic has coefficient functional exactly
    1 (to rounding); u = 1 analytic gives 0.
    """
    u = operator.index(u)
    if u < 1:
        raise DomainError(f"u must be a positive integer, got {u!r}")
    if kind not in ("analytic", "coanalytic"):
        raise DomainError(f"kind must be 'analytic' or 'coanalytic', got {kind!r}")
    if coanalytic_sign not in (-1, 1):
        raise DomainError(f"coanalytic_sign must be -1 or +1, got {coanalytic_sign!r}")
    n = max(trunc, u)
    mag = (1.0 - p.alpha) / q_integer_pow(u, p.q, p.m)
    if kind == "analytic":
        h = [0j] * n
        h[0] = 1.0
        if u >= 2:
            h[u - 1] = -mag
        return HarmonicFunction(AnalyticSeries(h, trunc=n), AnalyticSeries.zero(n), t_form=True)
    g = [0j] * n
    g[u - 1] = coanalytic_sign * mag
    hf = HarmonicFunction(
        AnalyticSeries.identity(n),
        AnalyticSeries(g, trunc=n),
        t_form=(coanalytic_sign > 0),
    )
    return hf


def convex_combination(
    terms: Iterable[tuple[int, str, float]],
    p: ClassParams,
    *,
    trunc: int = DEFAULT_TRUNC,
) -> HarmonicFunction:
    """Weighted combination sum w_i * point_i of extreme points.

    ``terms`` are (u, kind, weight) triples.  Weights must be >= 0 and sum
    to 1 within 1e-12.  The co-analytic coefficients are stored with the
    t_form-compatible positive sign, so the result has functional equal to
    the weight mass placed off the identity and is t_form.
    """
    terms = list(terms)
    if not terms:
        raise DomainError("at least one extreme point is required")
    weights = []
    for u, kind, w in terms:
        w = float(w)
        if w < 0.0 or not math.isfinite(w):
            raise DomainError(f"weights must be non-negative, got {w!r}")
        if kind not in ("analytic", "coanalytic"):
            raise DomainError(f"kind must be 'analytic' or 'coanalytic', got {kind!r}")
        if operator.index(u) < 1:
            raise DomainError(f"u must be a positive integer, got {u!r}")
        weights.append(w)
    total = math.fsum(weights)
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise DomainError(f"weights must sum to 1 within {WEIGHT_SUM_TOL}, got {total!r}")
    n = max([trunc, *(u for u, _, _ in terms)])
    a_acc = [0.0] * (n + 1)
    b_acc = [0.0] * (n + 1)
    for (u, kind, w), wf in zip(terms, weights):
        if wf == 0.0:
            continue
        mag = wf * (1.0 - p.alpha) / q_integer_pow(u, p.q, p.m)
        if kind == "analytic":
            if u >= 2:
                a_acc[u] += mag
        else:
            b_acc[u] += mag
    # The identity coefficient is the weight total, which is 1 by contract;
    # store it as exactly 1 rather than the rounded float sum.
    h = [0j] * n
    h[0] = 1.0
    g = [0j] * n
    for u in range(2, n + 1):
        if a_acc[u] != 0.0:
            h[u - 1] = -a_acc[u]
    for u in range(1, n + 1):
        if b_acc[u] != 0.0:
            g[u - 1] = b_acc[u]
    return HarmonicFunction(AnalyticSeries(h, trunc=n), AnalyticSeries(g, trunc=n), t_form=True)


def sharpness_witness(
    x: Sequence[complex],
    y: Sequence[complex],
    p: ClassParams,
    *,
    trunc: int = DEFAULT_TRUNC,
) -> HarmonicFunction:
    """Function attaining equality in the coefficient bound:

        f(z) = z + sum_{u>=2} ((1-alpha)/[u]_q**m) x_u z**u
                 + conj(sum_{u>=1} ((1-alpha)/[u]_q**m) y_u z**u)

    with x[i] the weight of power i+2, y[i] of power i+1, and
    sum |x_u| + sum |y_u| = 1 within 1e-12.  The result's coefficient
    functional is 1 to rounding, whatever the weight phases.
    """
    xs = [complex(v) for v in x]
    ys = [complex(v) for v in y]
    total = math.fsum([abs(v) for v in xs] + [abs(v) for v in ys])
    if abs(total - 1.0) > WEIGHT_SUM_TOL:
        raise DomainError(f"weight moduli must sum to 1 within {WEIGHT_SUM_TOL}, got {total!r}")
    n = max(trunc, len(xs) + 1, len(ys))
    h = [0j] * n
    g = [0j] * n
    h[0] = 1.0
    one_minus = 1.0 - p.alpha
    for i, v in enumerate(xs):
        u = i + 2
        h[u - 1] = one_minus / q_integer_pow(u, p.q, p.m) * v
    for i, v in enumerate(ys):
        u = i + 1
        g[u - 1] = one_minus / q_integer_pow(u, p.q, p.m) * v
    hs = AnalyticSeries(h, trunc=n)
    gs = AnalyticSeries(g, trunc=n)
    return HarmonicFunction(hs, gs, t_form=_t_structure(hs, gs))


def growth_bounds(b1_mag: float, r: float, p: ClassParams) -> GrowthBounds:
    """Two-sided bound on |f| at |z| = r for t_form members with first
    co-analytic modulus b1_mag:

        upper = (1 + b1) r + (1 - alpha - b1) / [2]_q**m * r**2
        lower = (1 - b1) r - (1 - alpha - b1) / [2]_q**m * r**2

    Valid for b1_mag <= 1 - alpha (automatic for members); outside that
    regime the bounds may invert and construction is refused.
    """
    b1 = float(b1_mag)
    r = float(r)
    if not 0.0 <= b1 < 1.0:
        raise DomainError(f"b1 magnitude must lie in [0, 1), got {b1_mag!r}")
    if not 0.0 <= r < 1.0:
        raise DomainError(f"radius must lie in [0, 1), got {r!r}")
    if b1 > 1.0 - p.alpha:
        raise DomainError(
            f"bounds require |b_1| <= 1 - alpha = {1.0 - p.alpha!r}, got {b1!r}"
        )
    c = (1.0 - p.alpha - b1) / q_integer_pow(2, p.q, p.m)
    return GrowthBounds(
        lower=(1.0 - b1) * r - c * r * r,
        upper=(1.0 + b1) * r + c * r * r,
        radius=r,
    )


def growth_witness_upper(b1_mag: float, p: ClassParams, *, trunc: int = DEFAULT_TRUNC) -> HarmonicFunction:
    """z + b1 conj(z) + ((1 - alpha - b1)/[2]_q**m) conj(z)**2; its modulus
    on the positive real axis equals the upper growth bound."""
    b1 = float(b1_mag)
    if not 0.0 <= b1 <= 1.0 - p.alpha:
        raise DomainError(f"witness requires 0 <= |b_1| <= 1 - alpha, got {b1_mag!r}")
    c = (1.0 - p.alpha - b1) / q_integer_pow(2, p.q, p.m)
    g = [0j] * trunc
    g[0] = b1
    g[1] = c
    return HarmonicFunction(AnalyticSeries.identity(trunc), AnalyticSeries(g, trunc=trunc), t_form=True)


def growth_witness_lower(b1_mag: float, p: ClassParams, *, trunc: int = DEFAULT_TRUNC) -> AnalyticSeries:
    """(1 - b1) z - ((1 - alpha - b1)/[2]_q**m) z**2; its modulus on the
    positive real axis equals the lower growth bound.

    Note the leading coefficient is 1 - b1, so this witness is not a
    normalized HarmonicFunction; it is returned as a plain series for
    pointwise evaluation.
    """
    b1 = float(b1_mag)
    if not 0.0 <= b1 <= 1.0 - p.alpha:
        raise DomainError(f"witness requires 0 <= |b_1| <= 1 - alpha, got {b1_mag!r}")
    c = (1.0 - p.alpha - b1) / q_integer_pow(2, p.q, p.m)
    return AnalyticSeries((1.0 - b1, -c), trunc=trunc)
