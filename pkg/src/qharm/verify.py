"""Disc-sampled empirical verification of the membership condition,
sense-preservation, injectivity, growth conformance, and the
positive-real-axis necessity argument, plus a randomized scan for gaps
between the sufficient coefficient condition and the family itself.

Checks evaluate the stored polynomials exactly (to rounding) on a finite
grid, so they are desk-scale probes, not certificates.  Reports are
deterministic: grid points are enumerated in (radius, angle) order and
minima are reduced with first-occurrence tie-breaking, so identical
inputs (including seeds) give bitwise-identical reports.  Tolerances
accept an explicit tail allowance for inputs meant as truncations of
infinite series; functions generated in this module are exact polynomials
and need none.
"""

from __future__ import annotations

import math
import operator
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .qcore import DomainError, q_integer_pow
from .classes import (
    ClassParams,
    coeff_functional,
    growth_bounds,
    member_t_iff,
)
from .salagean import class_transform
from .series import (
    DEFAULT_TRUNC,
    AnalyticSeries,
    HarmonicFunction,
    classical_derivative,
)

DEFAULT_TOLERANCE = 1e-9
DEFAULT_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999)
DEFAULT_ANGULAR_COUNT = 256
DEFAULT_PROBE_RADII = (0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99, 0.999, 0.9999)


@dataclass(frozen=True)
class DiskGrid:
    """Sampling specification: circles at the given radii with equispaced
    angles.  With include_positive_axis the first angle on each circle is
    0 (the point z = r exactly); otherwise angles are offset by half a
    step so the axis is avoided."""

    radii: tuple[float, ...] = DEFAULT_RADII
    angular_count: int = DEFAULT_ANGULAR_COUNT
    include_positive_axis: bool = True

    def __post_init__(self) -> None:
        radii = tuple(float(r) for r in self.radii)
        if not radii:
            raise DomainError("at least one radius is required")
        for r in radii:
            if not 0.0 < r < 1.0:
                raise DomainError(f"radii must lie strictly inside (0, 1), got {r!r}")
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise DomainError(f"radii must be strictly increasing, got {radii!r}")
        k = operator.index(self.angular_count)
        if k < 4:
            raise DomainError(f"angular_count must be >= 4, got {self.angular_count!r}")
        object.__setattr__(self, "radii", radii)
        object.__setattr__(self, "angular_count", k)

    @property
    def size(self) -> int:
        return len(self.radii) * self.angular_count

    def points(self) -> np.ndarray:
        """Grid points in lexicographic (radius index, angle index) order."""
        k = self.angular_count
        offset = 0.0 if self.include_positive_axis else 0.5
        theta = 2.0 * np.pi * (np.arange(k) + offset) / k
        ring = np.exp(1j * theta)
        return np.concatenate([r * ring for r in self.radii])


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one check: the worst margin, where it occurred, and the
    verdict at the recorded tolerance.

    For all checks except injectivity, passed means min_margin >=
    -tolerance; injectivity demands strict clearance, min_margin >
    tolerance.
    """

    check_name: str
    min_margin: float
    argmin_point: complex
    passed: bool
    samples: int
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "check": self.check_name,
            "min_margin": self.min_margin,
            "argmin": [self.argmin_point.real, self.argmin_point.imag],
            "passed": self.passed,
            "samples": self.samples,
            "tolerance": self.tolerance,
        }


def _eval_poly(coeffs: Sequence[complex], z: np.ndarray) -> np.ndarray:
    # Horner with a zero seed, matching the scalar evaluators bit for bit.
    acc = np.zeros(z.shape, dtype=np.complex128)
    for c in reversed(coeffs):
        acc = acc * z + c
    return acc


def _eval_analytic_grid(s: AnalyticSeries, z: np.ndarray) -> np.ndarray:
    return _eval_poly(s.coeffs, z) * z


def _eval_harmonic_grid(f: HarmonicFunction, z: np.ndarray) -> np.ndarray:
    return _eval_analytic_grid(f.h, z) + np.conjugate(_eval_analytic_grid(f.g, z))


def _min_report(
    name: str,
    margins: np.ndarray,
    where: np.ndarray,
    tolerance: float,
    *,
    strict: bool = False,
) -> VerificationReport:
    i = int(np.argmin(margins))  # first minimum = lexicographic tie-break
    worst = float(margins[i])
    passed = worst > tolerance if strict else worst >= -tolerance
    return VerificationReport(name, worst, complex(where[i]), passed, int(margins.size), float(tolerance))


def re_condition_margin(
    f: HarmonicFunction,
    p: ClassParams,
    grid: DiskGrid,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """Margin of the defining condition: Re{transform(z)} - alpha at each
    grid point."""
    t = class_transform(f, p.operator_params())
    z = grid.points()
    margins = np.real(_eval_poly(t.coeffs, z)) - p.alpha
    return _min_report("re_condition", margins, z, tolerance)


def sense_preserving_margin(
    f: HarmonicFunction,
    grid: DiskGrid,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """|h'(z)| - |g'(z)| at each grid point (ordinary derivatives)."""
    hp = classical_derivative(f.h).coeffs
    gp = classical_derivative(f.g).coeffs
    z = grid.points()
    margins = np.abs(_eval_poly(hp, z)) - np.abs(_eval_poly(gp, z))
    return _min_report("sense_preserving", margins, z, tolerance)


def injectivity_sample_check(
    f: HarmonicFunction,
    grid: DiskGrid,
    pair_budget: int,
    *,
    seed: int = 0,
    tolerance: float = DEFAULT_TOLERANCE,
) -> VerificationReport:
    """Sampled separation probe: min over drawn point pairs of
    |f(z1) - f(z2)| / |z1 - z2|.  Pairs are drawn by a seeded generator,
    so the report is a pure function of (f, grid, pair_budget, seed).
    Passes only with margin strictly above the tolerance.  argmin_point
    records the first point of the worst pair.
    """
    pair_budget = operator.index(pair_budget)
    if pair_budget < 1:
        raise DomainError(f"pair_budget must be >= 1, got {pair_budget!r}")
    z = grid.points()
    n = z.size
    rng = np.random.default_rng(seed)
    i = rng.integers(0, n, size=pair_budget)
    j = rng.integers(0, n, size=pair_budget)
    j = np.where(i == j, (j + 1) % n, j)
    fz = _eval_harmonic_grid(f, z)
    ratios = np.abs(fz[i] - fz[j]) / np.abs(z[i] - z[j])
    return _min_report("injectivity", ratios, z[i], tolerance, strict=True)


def growth_bound_check(
    f: HarmonicFunction,
    p: ClassParams,
    grid: DiskGrid,
    *,
    tolerance: float = DEFAULT_TOLERANCE,
    tail_allowance: float = 0.0,
) -> VerificationReport:
    """Checks lower(r) - eps <= |f(z)| <= upper(r) + eps on the grid,
    eps = tolerance + tail_allowance.  The pointwise margin is the smaller
    of the two one-sided margins.  Requires a t_form member (the bounds
    are proved for that subclass); raises DomainError otherwise.
    """
    if not member_t_iff(f, p):
        raise DomainError("growth bounds hold for t_form members; the functional exceeds 1")
    b1 = f.g.coeffs[0].real
    z = grid.points()
    k = grid.angular_count
    lowers = np.repeat([growth_bounds(b1, r, p).lower for r in grid.radii], k)
    uppers = np.repeat([growth_bounds(b1, r, p).upper for r in grid.radii], k)
    mod = np.abs(_eval_harmonic_grid(f, z))
    margins = np.minimum(uppers - mod, mod - lowers)
    return _min_report("growth_bounds", margins, z, tolerance + tail_allowance)


@dataclass(frozen=True)
class ProbeReport:
    """Trace of the positive-real-axis expression

        1 - sum_{u>=2} w_u |a_u| r**(u-1) - sum_{u>=1} w_u |b_u| r**(u-1) - alpha

    along an increasing radius sequence.  first_failure is the first
    sampled radius where the margin drops below -tolerance (None if it
    never does); limit_margin is the value at r = 1, which has the sign of
    1 - functional.
    """

    entries: tuple[tuple[float, float], ...]
    first_failure: float | None
    limit_margin: float
    passed: bool
    tolerance: float

    def to_dict(self) -> dict:
        return {
            "check": "necessity_axis",
            "entries": [[r, m] for r, m in self.entries],
            "first_failure": self.first_failure,
            "limit_margin": self.limit_margin,
            "passed": self.passed,
            "tolerance": self.tolerance,
        }


def necessity_probe(
    f: HarmonicFunction,
    p: ClassParams,
    r_sequence: Sequence[float] | None = None,
    *,
    tolerance: float = 1e-12,
) -> ProbeReport:
    """Evaluate the axis expression toward r -> 1 for a t_form function.

    For members the margin stays >= 0 for every r < 1; once the functional
    exceeds 1 the expression is eventually negative, so the probe exposes
    non-membership given a radius sequence reaching close enough to 1.
    """
    if not f.t_form:
        raise DomainError("the necessity probe applies only to t_form functions")
    rs = tuple(float(r) for r in (DEFAULT_PROBE_RADII if r_sequence is None else r_sequence))
    if not rs:
        raise DomainError("the radius sequence must be non-empty")
    for r in rs:
        if not 0.0 < r < 1.0:
            raise DomainError(f"probe radii must lie in (0, 1), got {r!r}")
    if any(b <= a for a, b in zip(rs, rs[1:])):
        raise DomainError("probe radii must be strictly increasing")

    triples = _axis_triples(f, p)

    def margin_at(r: float) -> float:
        return 1.0 + math.fsum(-w * mag * r ** (u - 1) for u, w, mag in triples) - p.alpha

    entries = tuple((r, margin_at(r)) for r in rs)
    first_failure = next((r for r, m in entries if m < -tolerance), None)
    limit_margin = 1.0 + math.fsum(-w * mag for _, w, mag in triples) - p.alpha
    return ProbeReport(
        entries=entries,
        first_failure=first_failure,
        limit_margin=limit_margin,
        passed=first_failure is None,
        tolerance=float(tolerance),
    )


def _axis_triples(f: HarmonicFunction, p: ClassParams) -> list[tuple[int, float, float]]:
    out = []
    for u, c in enumerate(f.h.coeffs, start=1):
        if u >= 2 and c != 0:
            out.append((u, q_integer_pow(u, p.q, p.m), abs(c)))
    for u, c in enumerate(f.g.coeffs, start=1):
        if c != 0:
            out.append((u, q_integer_pow(u, p.q, p.m), abs(c)))
    return out


# --- randomized generators and the counterexample scan ----------------------


def random_t_form(
    p: ClassParams,
    target_functional: float,
    rng: np.random.Generator,
    *,
    trunc: int = DEFAULT_TRUNC,
    decay: float = 0.25,
    max_b1: float = 0.95,
) -> HarmonicFunction:
    """Random t_form function whose coefficient functional equals
    target_functional exactly (to rounding).

    Functional shares are drawn Dirichlet-style: jittered raw weights with
    a decay**u envelope over every slot (analytic powers 2..trunc,
    co-analytic 1..trunc), normalized so the shares sum to the target.
    Coefficient magnitudes follow as share * (1 - alpha) / w_u, so summing
    the functional telescopes back to the share total.  The first
    co-analytic magnitude is capped at max_b1 (excess share moves to the
    power-2 co-analytic slot), keeping construction inside |b_1| <= 1.
    """
    target = float(target_functional)
    if not (target >= 0.0 and math.isfinite(target)):
        raise DomainError(f"target functional must be finite and >= 0, got {target_functional!r}")
    if not 0.0 < decay < 1.0:
        raise DomainError(f"decay must lie in (0, 1), got {decay!r}")
    trunc = operator.index(trunc)
    if trunc < 1:
        raise DomainError(f"trunc must be >= 1, got {trunc!r}")
    slots = [("a", u) for u in range(2, trunc + 1)] + [("b", u) for u in range(1, trunc + 1)]
    raws = np.array([(0.5 + rng.random()) * decay**u for _, u in slots])
    shares = raws / raws.sum() * target

    one_minus = 1.0 - p.alpha
    b1_index = len(slots) - trunc  # first "b" slot, power 1
    b1_limit = max_b1 / one_minus
    if shares[b1_index] > b1_limit:
        excess = shares[b1_index] - b1_limit
        shares[b1_index] = b1_limit
        shares[b1_index + 1] += excess  # power-2 co-analytic slot

    a_mags: dict[int, float] = {}
    b_mags: dict[int, float] = {}
    for (kind, u), share in zip(slots, shares):
        mag = share * one_minus / q_integer_pow(u, p.q, p.m)
        if kind == "a":
            a_mags[u] = mag
        else:
            b_mags[u] = mag
    return HarmonicFunction.from_t_magnitudes(a_mags, b_mags, trunc=trunc)


def _random_gap_candidate(
    p: ClassParams,
    rng: np.random.Generator,
    *,
    trunc: int = DEFAULT_TRUNC,
) -> HarmonicFunction:
    """Random function with complex-phased coefficients whose functional
    slightly exceeds 1, i.e. a violator of the sufficient condition.  The
    first co-analytic slot is excluded so |b_1| stays 0."""
    target = 1.001 + 0.4 * rng.random()
    nslots = 2 + int(rng.random() * 3)
    slots = []
    for _ in range(nslots):
        kind = "a" if rng.random() < 0.5 else "b"
        u = 2 + int(rng.random() * 6)
        slots.append((kind, u))
    raws = np.array([0.2 + rng.random() for _ in slots])
    shares = raws / raws.sum() * target
    one_minus = 1.0 - p.alpha
    h = [0j] * trunc
    g = [0j] * trunc
    h[0] = 1.0
    for (kind, u), share in zip(slots, shares):
        mag = share * one_minus / q_integer_pow(u, p.q, p.m)
        phase = complex(math.cos(2.0 * math.pi * rng.random()), math.sin(2.0 * math.pi * rng.random()))
        if kind == "a":
            h[u - 1] += mag * phase
        else:
            g[u - 1] += mag * phase
    return HarmonicFunction(AnalyticSeries(h, trunc=trunc), AnalyticSeries(g, trunc=trunc))


def proof_step_violations(p: ClassParams, *, max_u: int = DEFAULT_TRUNC) -> tuple[int, ...]:
    """Powers u in 2..max_u where u (1 - alpha) > [u]_q**m.

    Wherever this comparison fails, bounding u |c_u| by
    ([u]_q**m / (1 - alpha)) |c_u| is invalid, so the standard chain from
    the coefficient condition to univalence and sense-preservation does
    not go through pointwise; the sufficient condition itself is then an
    empirical matter, which the scan below probes.
    """
    return tuple(
        u
        for u in range(2, max_u + 1)
        if u * (1.0 - p.alpha) > q_integer_pow(u, p.q, p.m)
    )


@dataclass(frozen=True)
class GapExample:
    """A sampled function that violates the coefficient condition yet
    passes every empirical check on the grid."""

    trial: int
    functional: float
    re_condition_margin: float
    sense_preserving_margin: float
    injectivity_margin: float

    def to_dict(self) -> dict:
        return {
            "trial": self.trial,
            "functional": self.functional,
            "re_condition_margin": self.re_condition_margin,
            "sense_preserving_margin": self.sense_preserving_margin,
            "injectivity_margin": self.injectivity_margin,
        }


@dataclass(frozen=True)
class ScanReport:
    trials: int
    seed: int
    step_violations: tuple[int, ...]
    gap_examples: tuple[GapExample, ...]

    def to_dict(self) -> dict:
        return {
            "trials": self.trials,
            "seed": self.seed,
            "step_violations": list(self.step_violations),
            "gap_examples": [g.to_dict() for g in self.gap_examples],
        }


def counterexample_scan(
    p: ClassParams,
    trials: int,
    seed: int,
    *,
    grid: DiskGrid | None = None,
    pair_budget: int = 64,
    tolerance: float = DEFAULT_TOLERANCE,
) -> ScanReport:
    """Randomized probe of the gap between the sufficient coefficient
    condition and the family, plus the validity map of the
    u (1 - alpha) <= [u]_q**m comparison.

    Each trial draws a violator of the coefficient condition and runs the
    three empirical checks; trials passing all of them are flagged as gap
    evidence (the sufficient condition is not necessary there, at least at
    grid resolution).  Deterministic for a given seed: trial t uses the
    generator seeded with (seed, t).
    """
    trials = operator.index(trials)
    if trials < 1:
        raise DomainError(f"trials must be >= 1, got {trials!r}")
    seed = operator.index(seed)
    if grid is None:
        grid = DiskGrid()
    flagged = []
    for trial in range(trials):
        rng = np.random.default_rng([seed, trial])
        f = _random_gap_candidate(p, rng)
        functional = coeff_functional(f, p)
        if functional <= 1.0:
            continue
        re_rep = re_condition_margin(f, p, grid, tolerance=tolerance)
        sp_rep = sense_preserving_margin(f, grid, tolerance=tolerance)
        inj_rep = injectivity_sample_check(f, grid, pair_budget, seed=trial, tolerance=tolerance)
        if re_rep.passed and sp_rep.passed and inj_rep.passed:
            flagged.append(
                GapExample(
                    trial=trial,
                    functional=functional,
                    re_condition_margin=re_rep.min_margin,
                    sense_preserving_margin=sp_rep.min_margin,
                    injectivity_margin=inj_rep.min_margin,
                )
            )
    return ScanReport(
        trials=trials,
        seed=seed,
        step_violations=proof_step_violations(p),
        gap_examples=tuple(flagged),
    )


# --- margin tables and CSV dumps ---------------------------------------------


def margin_rows(
    f: HarmonicFunction,
    p: ClassParams,
    grid: DiskGrid,
) -> tuple[list[str], list[list[float]]]:
    """Per-point margin table: one row per grid point with the pointwise
    margins of the active checks.  Growth margins are included when f is a
    t_form member (both one-sided margins, lower then upper)."""
    z = grid.points()
    t = class_transform(f, p.operator_params())
    re_m = np.real(_eval_poly(t.coeffs, z)) - p.alpha
    hp = classical_derivative(f.h).coeffs
    gp = classical_derivative(f.g).coeffs
    sp_m = np.abs(_eval_poly(hp, z)) - np.abs(_eval_poly(gp, z))
    header = ["re", "im", "re_condition_margin", "sense_preserving_margin"]
    columns = [np.real(z), np.imag(z), re_m, sp_m]
    if f.t_form and member_t_iff(f, p):
        b1 = f.g.coeffs[0].real
        k = grid.angular_count
        lowers = np.repeat([growth_bounds(b1, r, p).lower for r in grid.radii], k)
        uppers = np.repeat([growth_bounds(b1, r, p).upper for r in grid.radii], k)
        mod = np.abs(_eval_harmonic_grid(f, z))
        header += ["growth_lower_margin", "growth_upper_margin"]
        columns += [mod - lowers, uppers - mod]
    rows = [[float(col[i]) for col in columns] for i in range(z.size)]
    return header, rows


def write_margin_csv(stream, f: HarmonicFunction, p: ClassParams, grid: DiskGrid) -> None:
    """CSV dump of margin_rows: plain decimal floats, comma separated."""
    header, rows = margin_rows(f, p, grid)
    stream.write(",".join(header) + "\n")
    for row in rows:
        stream.write(",".join(repr(v) for v in row) + "\n")
