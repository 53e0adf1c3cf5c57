"""Truncated complex power series and harmonic pairs on the unit disc.

An ``AnalyticSeries`` stores coefficients c_1..c_N (no constant term) of
s(z) = sum_u c_u z**u.  A ``HarmonicFunction`` is a pair (h, g) read as
f = h + conj(g), normalized so that h starts with coefficient exactly 1.
Derivative-like maps produce a ``PowerSeries``, which carries a constant
term (coefficients from z**0).

Series arithmetic is exact for the stored coefficient range and silently
truncates beyond the truncation degree.  All types are immutable and all
operations are pure, so concurrent use and transfer between threads are
unrestricted.
"""

from __future__ import annotations

import cmath
import operator
from typing import Iterable, Mapping

from .qcore import DomainError

DEFAULT_TRUNC = 32


class SchemaError(ValueError):
    """A series JSON document violates the schema; ``field`` names the
    offending entry."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field


def _coeff_tuple(coeffs: Iterable[complex], trunc: int, what: str) -> tuple[complex, ...]:
    vals = [complex(c) for c in coeffs]
    for i, c in enumerate(vals):
        if not (cmath.isfinite(c)):
            raise ValueError(f"{what} at power {i + 1} is not finite: {c!r}")
    if len(vals) < trunc:
        vals.extend([0j] * (trunc - len(vals)))
    return tuple(vals[:trunc])


class AnalyticSeries:
    """Coefficients c_1..c_N of a series with no constant term.

    ``coeffs`` are stored as a tuple of complex values, index 0 holding the
    coefficient of z**1.  Shorter input is zero-padded to the truncation
    degree; longer input is silently truncated.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[complex] = (), trunc: int = DEFAULT_TRUNC):
        trunc = operator.index(trunc)
        if trunc < 1:
            raise ValueError(f"truncation degree must be positive, got {trunc!r}")
        self._coeffs = _coeff_tuple(coeffs, trunc, "coefficient")

    @property
    def coeffs(self) -> tuple[complex, ...]:
        return self._coeffs

    @property
    def trunc_degree(self) -> int:
        return len(self._coeffs)

    def coeff(self, u: int) -> complex:
        """Coefficient of z**u for u >= 1; zero beyond the truncation degree."""
        u = operator.index(u)
        if u < 1:
            raise DomainError(f"power index must be >= 1, got {u!r}")
        if u > len(self._coeffs):
            return 0j
        return self._coeffs[u - 1]

    @classmethod
    def identity(cls, trunc: int = DEFAULT_TRUNC) -> "AnalyticSeries":
        """The series z."""
        return cls((1.0,), trunc=trunc)

    @classmethod
    def zero(cls, trunc: int = DEFAULT_TRUNC) -> "AnalyticSeries":
        return cls((), trunc=trunc)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, AnalyticSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"AnalyticSeries({list(self._coeffs)!r})"


class PowerSeries:
    """Coefficients from z**0 upward; the result type of derivative-like
    maps, which drop the degree by one and so acquire a constant term."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[complex] = (0j,)):
        vals = [complex(c) for c in coeffs]
        for k, c in enumerate(vals):
            if not cmath.isfinite(c):
                raise ValueError(f"coefficient at power {k} is not finite: {c!r}")
        self._coeffs = tuple(vals) or (0j,)

    @property
    def coeffs(self) -> tuple[complex, ...]:
        return self._coeffs

    def coeff(self, u: int) -> complex:
        u = operator.index(u)
        if u < 0:
            raise DomainError(f"power index must be >= 0, got {u!r}")
        if u >= len(self._coeffs):
            return 0j
        return self._coeffs[u]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"PowerSeries({list(self._coeffs)!r})"


def _t_structure(h: AnalyticSeries, g: AnalyticSeries) -> bool:
    # Exact, tolerance-free: T-form functions are constructed, not measured.
    h_ok = all(c.imag == 0.0 and c.real <= 0.0 for c in h.coeffs[1:])
    g_ok = all(c.imag == 0.0 and c.real >= 0.0 for c in g.coeffs)
    return h_ok and g_ok


class HarmonicFunction:
    """Pair (h, g) representing f = h + conj(g) on the unit disc.

    Invariants enforced at construction: the h coefficient of z is exactly
    1, and the g coefficient of z has modulus at most 1 (modulus exactly 1
    sits on the closure boundary and is admitted so that the one-term
    boundary functions of the family are constructible).  When ``t_form``
    is set, every h coefficient beyond the first must be real and <= 0 and
    every g coefficient real and >= 0; that is the sign normalization under
    which the coefficient criterion is an equivalence rather than only a
    sufficient condition.
    """

    __slots__ = ("_h", "_g", "_t_form")

    def __init__(self, h: AnalyticSeries, g: AnalyticSeries | None = None, t_form: bool = False):
        if g is None:
            g = AnalyticSeries.zero(trunc=h.trunc_degree)
        trunc = max(h.trunc_degree, g.trunc_degree)
        if h.trunc_degree < trunc:
            h = AnalyticSeries(h.coeffs, trunc=trunc)
        if g.trunc_degree < trunc:
            g = AnalyticSeries(g.coeffs, trunc=trunc)
        if h.coeffs[0] != 1:
            raise ValueError(f"h must be normalized with coefficient 1 at z, got {h.coeffs[0]!r}")
        if abs(g.coeffs[0]) > 1.0:
            raise DomainError(f"|b_1| must not exceed 1, got {abs(g.coeffs[0])!r}")
        t_form = bool(t_form)
        if t_form and not _t_structure(h, g):
            raise ValueError("t_form flag set but coefficients do not have the required signs")
        self._h = h
        self._g = g
        self._t_form = t_form

    @property
    def h(self) -> AnalyticSeries:
        return self._h

    @property
    def g(self) -> AnalyticSeries:
        return self._g

    @property
    def t_form(self) -> bool:
        return self._t_form

    @property
    def trunc_degree(self) -> int:
        return self._h.trunc_degree

    @classmethod
    def from_t_magnitudes(
        cls,
        a_mags: Mapping[int, float],
        b_mags: Mapping[int, float],
        trunc: int = DEFAULT_TRUNC,
    ) -> "HarmonicFunction":
        """Build h(z) = z - sum |a_u| z**u, g(z) = sum |b_u| z**u from
        magnitude maps (a keys are powers >= 2, b keys powers >= 1)."""
        trunc = max([operator.index(trunc), *a_mags.keys(), *b_mags.keys()])
        h = [0.0] * trunc
        g = [0.0] * trunc
        h[0] = 1.0
        for u, mag in a_mags.items():
            u = operator.index(u)
            if u < 2:
                raise DomainError(f"analytic magnitudes start at power 2, got {u}")
            if not (mag >= 0.0):
                raise DomainError(f"magnitude for power {u} must be >= 0, got {mag!r}")
            h[u - 1] = -float(mag)
        for u, mag in b_mags.items():
            u = operator.index(u)
            if u < 1:
                raise DomainError(f"co-analytic magnitudes start at power 1, got {u}")
            if not (mag >= 0.0):
                raise DomainError(f"magnitude for power {u} must be >= 0, got {mag!r}")
            g[u - 1] = float(mag)
        return cls(AnalyticSeries(h, trunc=trunc), AnalyticSeries(g, trunc=trunc), t_form=True)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HarmonicFunction):
            return NotImplemented
        return self._h == other._h and self._g == other._g and self._t_form == other._t_form

    def __hash__(self) -> int:
        return hash((self._h, self._g, self._t_form))

    def __repr__(self) -> str:
        return f"HarmonicFunction(h={self._h!r}, g={self._g!r}, t_form={self._t_form})"


def eval_analytic(s: AnalyticSeries, z: complex) -> complex:
    """Evaluate sum c_u z**u by Horner's scheme.

    Values with |z| > 1 are allowed; the series is simply evaluated as the
    polynomial it stores.
    """
    acc = 0j
    for c in reversed(s.coeffs):
        acc = acc * z + c
    return acc * z


def eval_power(s: PowerSeries, z: complex) -> complex:
    """Evaluate sum c_u z**u (from u = 0) by Horner's scheme."""
    acc = 0j
    for c in reversed(s.coeffs):
        acc = acc * z + c
    return acc


def eval_harmonic(f: HarmonicFunction, z: complex) -> complex:
    """f(z) = h(z) + conj(g(z))."""
    return eval_analytic(f.h, z) + eval_analytic(f.g, z).conjugate()


def hadamard(s1: AnalyticSeries, s2: AnalyticSeries) -> AnalyticSeries:
    """Coefficientwise (Hadamard) product; the shorter series is
    zero-padded to the longer truncation."""
    n = max(s1.trunc_degree, s2.trunc_degree)
    a = s1.coeffs + (0j,) * (n - s1.trunc_degree)
    b = s2.coeffs + (0j,) * (n - s2.trunc_degree)
    return AnalyticSeries(tuple(x * y for x, y in zip(a, b)), trunc=n)


def classical_derivative(s: AnalyticSeries) -> PowerSeries:
    """Ordinary derivative: u * c_u becomes the coefficient of z**(u-1)."""
    return PowerSeries(tuple(u * c for u, c in enumerate(s.coeffs, start=1)))


def is_t_form(f: HarmonicFunction) -> bool:
    """True iff every h coefficient beyond the first is real and <= 0 and
    every g coefficient is real and >= 0 (exact zero-imaginary test)."""
    return _t_structure(f.h, f.g)


# --- JSON wire format -------------------------------------------------------
#
# {"trunc": N, "h": [[re, im], ...], "g": [[re, im], ...]} with index 0 of
# each array holding the coefficient of z**1; h[0] must be [1, 0].


def harmonic_to_json(f: HarmonicFunction) -> dict:
    return {
        "trunc": f.trunc_degree,
        "h": [[c.real, c.imag] for c in f.h.coeffs],
        "g": [[c.real, c.imag] for c in f.g.coeffs],
    }


def _parse_pairs(obj: object, field: str, trunc: int) -> tuple[complex, ...]:
    if not isinstance(obj, list):
        raise SchemaError(field, f"expected a list of [re, im] pairs, got {type(obj).__name__}")
    if len(obj) > trunc:
        raise SchemaError(field, f"{len(obj)} coefficients exceed trunc = {trunc}")
    out = []
    for i, entry in enumerate(obj):
        where = f"{field}[{i}]"
        if not (isinstance(entry, list) and len(entry) == 2):
            raise SchemaError(where, "expected a [re, im] pair")
        re, im = entry
        if isinstance(re, bool) or isinstance(im, bool) or not isinstance(re, (int, float)) or not isinstance(im, (int, float)):
            raise SchemaError(where, "re and im must be real numbers")
        c = complex(float(re), float(im))
        if not cmath.isfinite(c):
            raise SchemaError(where, f"coefficient is not finite: {entry!r}")
        out.append(c)
    return tuple(out)


def harmonic_from_json(obj: object) -> HarmonicFunction:
    """Parse the series JSON schema; raises SchemaError naming the
    offending field.  The t_form flag is recovered structurally from the
    coefficient signs."""
    if not isinstance(obj, dict):
        raise SchemaError("$", f"expected a JSON object, got {type(obj).__name__}")
    for key in ("trunc", "h", "g"):
        if key not in obj:
            raise SchemaError(key, "missing required field")
    trunc = obj["trunc"]
    if isinstance(trunc, bool) or not isinstance(trunc, int) or trunc < 1:
        raise SchemaError("trunc", f"expected a positive integer, got {trunc!r}")
    h_coeffs = _parse_pairs(obj["h"], "h", trunc)
    g_coeffs = _parse_pairs(obj["g"], "g", trunc)
    if not h_coeffs or h_coeffs[0] != 1:
        raise SchemaError("h[0]", "must be [1, 0] (normalization of the analytic part)")
    if g_coeffs and abs(g_coeffs[0]) > 1.0:
        raise SchemaError("g[0]", f"|b_1| must not exceed 1, got modulus {abs(g_coeffs[0])!r}")
    h = AnalyticSeries(h_coeffs, trunc=trunc)
    g = AnalyticSeries(g_coeffs, trunc=trunc)
    return HarmonicFunction(h, g, t_form=_t_structure(h, g))
