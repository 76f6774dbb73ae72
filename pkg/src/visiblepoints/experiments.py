"""Measured-discrepancy experiments for visible points on level curves.

Each harness compares exact integer counts against the density heuristic
(6/pi^2) * X * Y / p and reports the accumulated absolute deviation next
to a scaling envelope:

* ``level_sweep``   - sum over all levels a = 0..p-1 for one prime;
  envelope X^(1/2) * Y^(1/2) * p^(3/4) * log p (natural log).
* ``prime_sweep``   - sum over primes p in [T/2, T] at the fixed level
  a = 0; envelope X^(1/2) * Y^(1/2) * T^(3/4).
* ``count_deviation`` - a single curve's raw point count against X*Y/p,
  normalized by p^(1/2) * (log p)^2.

The envelopes carry unknown constant factors, so harnesses report ratios
and never threshold them.  Deviation sums are accumulated with
``math.fsum`` in a fixed order, making every reported float reproducible
bit-for-bit across runs and worker counts.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .arith import primes_in_range
from .counting import (
    CountBox,
    LevelCurveSpec,
    count_level_points,
    count_visible_direct,
    expected_visible,
    visible_histogram,
)
from .errors import BoxTooLarge, DegenerateReduction, EmptyPlan, HypothesisViolated
from .factor import is_absolutely_irreducible
from .poly import IntBivariatePoly, reduce_mod

#: default relative thresholds for concentration profiles
DEFAULT_DELTAS = (0.1, 0.25, 0.5)


@dataclass(frozen=True)
class DiscrepancyRecord:
    """One row of an experiment sweep.

    ``sum_abs_dev`` is the measured sum of |N - (6/pi^2) X Y / p|,
    ``bound_value`` the evaluated scaling envelope, ``ratio`` their
    quotient.  ``box_nontrivial`` records whether X*Y >= (p or T)^(3/2),
    the regime where the averaged statements carry content; it is an
    annotation, never a pass/fail.  ``per_prime`` keeps the individual
    (p, N) terms of a prime sweep for inspection; it is not serialized.
    """

    kind: str  # "levels" or "primes"
    f_text: str
    p: int | None
    T: float | None
    a: int | None
    X: float
    Y: float
    sum_abs_dev: float
    bound_value: float
    ratio: float
    skipped_primes: tuple[int, ...] = ()
    box_nontrivial: bool = False
    per_prime: tuple[tuple[int, int], ...] = field(
        default=(), compare=False, repr=False
    )


@dataclass(frozen=True)
class CountDeviation:
    """A single curve's count against the main term X*Y/p."""

    count: int
    main_term: float
    abs_dev: float
    normalized: float


@dataclass(frozen=True)
class ConcentrationProfile:
    """Fraction of levels a whose visible count sits within a relative
    delta of the expected value."""

    p: int
    X: float
    Y: float
    delta: float
    fraction_within: float


@dataclass(frozen=True)
class ZeroSetReport:
    """Exact integer zeros of f inside the box."""

    f_text: str
    X: float
    Y: float
    points: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class SweepPoint:
    """One entry of a sweep plan: a 'levels' point needs p, a 'primes'
    point needs T; both need the box."""

    kind: str
    X: float
    Y: float
    p: int | None = None
    T: float | None = None


@dataclass(frozen=True)
class SweepFailure:
    """Error placeholder keeping a failed plan entry in the output list."""

    point: SweepPoint
    message: str


def _require_admissible(f: IntBivariatePoly, p: int, a: int | None = None) -> None:
    """Raise HypothesisViolated unless f (or f - a) stays absolutely
    irreducible of total degree > 1 modulo p."""
    fmod = reduce_mod(f, p)  # DegenerateReduction propagates
    if a is not None:
        fmod = fmod.subtract_const(a)
    if fmod.degree <= 1:
        raise HypothesisViolated(
            f"{f.text()} has degree {fmod.degree} <= 1 modulo {p}"
        )
    verdict = is_absolutely_irreducible(fmod)
    if not verdict.absolutely_irreducible:
        what = f.text() if a is None else f"{f.text()} - {a}"
        raise HypothesisViolated(
            f"{what} is not absolutely irreducible modulo {p}"
            + (f" (witness: {verdict.witness})" if verdict.witness is not None else "")
        )


def level_sweep(
    f: IntBivariatePoly, p: int, box: CountBox, workers: int = 1
) -> DiscrepancyRecord:
    """Sum over every level a of |N_a - (6/pi^2) X Y / p| for one prime.

    Requires f itself absolutely irreducible of degree > 1 mod p; one
    histogram sweep supplies all p visible counts.
    """
    _require_admissible(f, p)
    box.validate_for(p)
    hist = visible_histogram(f, p, box, workers=workers)
    main = expected_visible(box, p)
    sum_abs_dev = math.fsum(abs(int(c) - main) for c in hist.visible_counts)
    bound = math.sqrt(box.X) * math.sqrt(box.Y) * p**0.75 * math.log(p)
    return DiscrepancyRecord(
        kind="levels",
        f_text=f.text(),
        p=p,
        T=None,
        a=None,
        X=float(box.X),
        Y=float(box.Y),
        sum_abs_dev=sum_abs_dev,
        bound_value=bound,
        ratio=sum_abs_dev / bound,
        box_nontrivial=box.X * box.Y >= p**1.5,
    )


def _prime_term(f: IntBivariatePoly, p: int, box: CountBox) -> tuple[int, int | None]:
    try:
        _require_admissible(f, p)
    except (HypothesisViolated, DegenerateReduction):
        return p, None
    n = count_visible_direct(LevelCurveSpec(f, p, 0), box)
    return p, n


def prime_sweep(
    f: IntBivariatePoly, T: float, box: CountBox, workers: int = 1
) -> DiscrepancyRecord:
    """Sum over primes p in [T/2, T] of |N_p - (6/pi^2) X Y / p| at the
    fixed level a = 0.

    Needs T >= 2*max(X, Y) so the box fits under every prime in range;
    primes where f degenerates or loses absolute irreducibility are
    skipped and listed in the record.
    """
    if T < 4:
        raise ValueError("T must be >= 4")
    if T < 2 * max(box.X, box.Y):
        raise BoxTooLarge(f"T = {T} < 2*max(X, Y) = {2 * max(box.X, box.Y)}")
    primes = primes_in_range(math.ceil(T / 2), math.floor(T))
    workers = max(1, int(workers))
    if workers == 1 or len(primes) <= 1:
        results = [_prime_term(f, p, box) for p in primes]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda p: _prime_term(f, p, box), primes))
    skipped = tuple(p for p, n in results if n is None)
    kept = [(p, n) for p, n in results if n is not None]
    sum_abs_dev = math.fsum(abs(n - expected_visible(box, p)) for p, n in kept)
    bound = math.sqrt(box.X) * math.sqrt(box.Y) * T**0.75
    return DiscrepancyRecord(
        kind="primes",
        f_text=f.text(),
        p=None,
        T=float(T),
        a=0,
        X=float(box.X),
        Y=float(box.Y),
        sum_abs_dev=sum_abs_dev,
        bound_value=bound,
        ratio=sum_abs_dev / bound,
        skipped_primes=skipped,
        box_nontrivial=box.X * box.Y >= T**1.5,
        per_prime=tuple(kept),
    )


def count_deviation(spec: LevelCurveSpec, box: CountBox) -> CountDeviation:
    """Raw level-curve count against X*Y/p, normalized by the classical
    square-root-of-p envelope p^(1/2) (log p)^2.

    Requires f - a absolutely irreducible of degree > 1 mod p.
    """
    _require_admissible(spec.f, spec.p, spec.a)
    box.validate_for(spec.p)
    count = count_level_points(spec, box)
    main = box.X * box.Y / spec.p
    abs_dev = abs(count - main)
    return CountDeviation(
        count=count,
        main_term=main,
        abs_dev=abs_dev,
        normalized=abs_dev / (math.sqrt(spec.p) * math.log(spec.p) ** 2),
    )


def concentration_profile(
    f: IntBivariatePoly, p: int, box: CountBox, delta: float, workers: int = 1
) -> ConcentrationProfile:
    """Fraction of levels a with |N_a - m| <= delta*m, m the expected count."""
    if not 0 < delta < 1:
        raise ValueError("delta must lie in (0, 1)")
    _require_admissible(f, p)
    box.validate_for(p)
    hist = visible_histogram(f, p, box, workers=workers)
    return _profile_from_counts(hist.visible_counts, f, p, box, delta)


def _profile_from_counts(counts, f, p, box, delta) -> ConcentrationProfile:
    main = expected_visible(box, p)
    within = sum(1 for c in counts if abs(int(c) - main) <= delta * main)
    return ConcentrationProfile(
        p=p, X=float(box.X), Y=float(box.Y), delta=delta, fraction_within=within / p
    )


def concentration_profiles(
    f: IntBivariatePoly,
    p: int,
    box: CountBox,
    deltas: tuple[float, ...] = DEFAULT_DELTAS,
    workers: int = 1,
) -> list[ConcentrationProfile]:
    """Profiles at several thresholds from a single histogram sweep."""
    for d in deltas:
        if not 0 < d < 1:
            raise ValueError("every delta must lie in (0, 1)")
    _require_admissible(f, p)
    box.validate_for(p)
    hist = visible_histogram(f, p, box, workers=workers)
    return [
        _profile_from_counts(hist.visible_counts, f, p, box, d) for d in deltas
    ]


def integer_zero_set(f: IntBivariatePoly, box: CountBox) -> ZeroSetReport:
    """All integer points (u, v) in the box with f(u, v) = 0 exactly.

    Evaluation is unbounded-precision integer arithmetic, specialized row
    by row; a row where f vanishes identically contributes every v.
    """
    if f.is_zero():
        raise ValueError("zero set of the zero polynomial is the whole box")
    nx, ny = box.nx, box.ny
    points: list[tuple[int, int]] = []
    for u in range(1, nx + 1):
        row = f.specialize_u_int(u)
        if not row:
            points.extend((u, v) for v in range(1, ny + 1))
            continue
        for v in range(1, ny + 1):
            acc = 0
            for c in reversed(row):
                acc = acc * v + c
            if acc == 0:
                points.append((u, v))
    return ZeroSetReport(
        f_text=f.text(), X=float(box.X), Y=float(box.Y), points=tuple(points)
    )


def run_sweep_series(
    f: IntBivariatePoly, plan: list[SweepPoint], workers: int = 1
) -> list[DiscrepancyRecord | SweepFailure]:
    """Run a list of sweep points in order; a failing entry becomes a
    SweepFailure in its slot instead of aborting the series."""
    if not plan:
        raise EmptyPlan("sweep plan has no entries")
    out: list[DiscrepancyRecord | SweepFailure] = []
    for point in plan:
        try:
            box = CountBox(point.X, point.Y)
            if point.kind == "levels":
                if point.p is None:
                    raise ValueError("'levels' sweep point needs p")
                out.append(level_sweep(f, point.p, box, workers=workers))
            elif point.kind == "primes":
                if point.T is None:
                    raise ValueError("'primes' sweep point needs T")
                out.append(prime_sweep(f, point.T, box, workers=workers))
            else:
                raise ValueError(f"unknown sweep kind {point.kind!r}")
        except Exception as exc:  # noqa: BLE001 - isolation is the contract
            out.append(SweepFailure(point=point, message=f"{type(exc).__name__}: {exc}"))
    return out
