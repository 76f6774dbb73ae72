"""Exact counts of lattice points on level curves f(x, y) = a (mod p) in a
box [1, X] x [1, Y], with and without the coprimality (visibility) filter.

Two independent routes compute the visible count: a direct gcd filter over
the level-curve points, and Moebius inclusion-exclusion over the counts
M(d) of points whose coordinate gcd is divisible by d.  They must agree
exactly on every input; the test suite enforces this.

Grid evaluation is vectorized with numpy in int64: coordinates are first
reduced mod p, per-monomial power tables are combined by outer products,
and coefficients stay below p, so no intermediate exceeds 2^63 for any p
handled here.  The gcd filter uses the raw integer coordinates, never the
residues.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .arith import is_prime, mobius_sieve
from .errors import DegenerateReduction
from .fields import PrimeField, univariate_roots
from .poly import IntBivariatePoly, ModBivariatePoly, reduce_mod

#: density of coprime pairs, the constant in the expected count; computed
#: once so every consumer shares the identical float
COPRIME_DENSITY = 6.0 / (math.pi * math.pi)

_ROW_STRATEGY_MAX_DEGV = 4


@dataclass(frozen=True)
class CountBox:
    """The rectangle [1, X] x [1, Y]; X and Y may be real and are floored
    for enumeration while formulas keep the real values."""

    X: float
    Y: float

    def __post_init__(self):
        if self.X < 1 or self.Y < 1:
            raise ValueError("box sides must be >= 1")

    @property
    def nx(self) -> int:
        return math.floor(self.X)

    @property
    def ny(self) -> int:
        return math.floor(self.Y)

    def validate_for(self, p: int) -> None:
        if self.X > p or self.Y > p:
            raise ValueError(f"box {self.X} x {self.Y} exceeds p = {p}")


class LevelCurveSpec:
    """One congruence f(x, y) = a (mod p); a is reduced at construction and
    f must stay nonconstant modulo p."""

    __slots__ = ("f", "p", "a", "fmod")

    def __init__(self, f: IntBivariatePoly, p: int, a: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "f", f)
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "a", a % p)
        object.__setattr__(self, "fmod", reduce_mod(f, p))  # may raise DegenerateReduction

    def __setattr__(self, *_):
        raise AttributeError("LevelCurveSpec is immutable")

    @property
    def in_theorem_scope(self) -> bool:
        """True when the reduced polynomial keeps total degree > 1, the
        standing hypothesis of the averaged-discrepancy statements."""
        return self.fmod.degree > 1

    def __repr__(self):
        return f"LevelCurveSpec(f={self.f.text()!r}, p={self.p}, a={self.a})"


def _coord_arrays(n: int) -> np.ndarray:
    return np.arange(1, n + 1, dtype=np.int64)


def _power_table(coords: np.ndarray, max_exp: int, p: int) -> list[np.ndarray]:
    """[coords^e mod p for e = 0..max_exp], each an int64 array."""
    table = [np.ones_like(coords)]
    base = coords % p
    for _ in range(max_exp):
        table.append(table[-1] * base % p)
    return table


def _values_grid(fmod: ModBivariatePoly, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
    """f(x, y) mod p for the integer coordinate grid xs x ys."""
    p = fmod.p
    pu = _power_table(xs, fmod.deg_u if fmod.terms else 0, p)
    pv = _power_table(ys, fmod.deg_v if fmod.terms else 0, p)
    acc = np.zeros((len(xs), len(ys)), dtype=np.int64)
    for (i, j), c in sorted(fmod.terms.items()):
        # every factor is < p, so the products stay below p^2 < 2^63
        term = pu[i][:, None] * pv[j][None, :] % p
        acc += term * c % p
        acc %= p
    return acc


def _count_grid(fmod: ModBivariatePoly, a: int, nx: int, ny: int, coprime_only: bool) -> int:
    if nx <= 0 or ny <= 0:
        return 0
    xs, ys = _coord_arrays(nx), _coord_arrays(ny)
    vals = _values_grid(fmod, xs, ys)
    mask = vals == a
    if coprime_only:
        mask &= np.gcd.outer(xs, ys) == 1
    return int(np.count_nonzero(mask))


def _count_rows(spec: LevelCurveSpec, nx: int, ny: int) -> int:
    """Row-by-row count: specialize at each x and pick the roots in V whose
    canonical lift lands in [1, ny].

    Lift convention: residue r in [1, p-1] is the lattice row value r, and
    residue 0 corresponds to y = p, in range only when ny = p.
    """
    p = spec.p
    K = PrimeField(p)
    total = 0
    for x in range(1, nx + 1):
        g = spec.fmod.specialize_u(x)
        if g:
            g = list(g)
            g[0] = (g[0] - spec.a) % p
            while g and g[-1] == 0:
                g.pop()
        else:
            g = [(-spec.a) % p] if spec.a else []
        if not g:
            total += ny  # the whole row satisfies the congruence
            continue
        for r in univariate_roots(g, K):
            y = r if r != 0 else p
            if y <= ny:
                total += 1
    return total


def count_level_points(spec: LevelCurveSpec, box: CountBox, strategy: str = "auto") -> int:
    """Number of points of f(x, y) = a (mod p) in the box (no gcd filter).

    ``strategy`` is "grid" (evaluate everywhere), "rows" (univariate roots
    per row), or "auto" (rows when the full column range is in the box and
    the V-degree is small).  Both strategies agree exactly.
    """
    box.validate_for(spec.p)
    nx, ny = box.nx, box.ny
    if strategy == "auto":
        strategy = (
            "rows"
            if ny == spec.p and 1 <= spec.fmod.deg_v <= _ROW_STRATEGY_MAX_DEGV
            else "grid"
        )
    if strategy == "grid":
        return _count_grid(spec.fmod, spec.a, nx, ny, coprime_only=False)
    if strategy == "rows":
        return _count_rows(spec, nx, ny)
    raise ValueError(f"unknown strategy {strategy!r}")


def count_divisible(spec: LevelCurveSpec, box: CountBox, d: int) -> int:
    """M(d): points of the level curve in the box whose coordinate gcd is
    divisible by d; equals the level count of f(d*s, d*t) on the shrunken
    box [1, X/d] x [1, Y/d].  Zero whenever d exceeds min(X, Y)."""
    if d < 1:
        raise ValueError("d must be >= 1")
    box.validate_for(spec.p)
    nx, ny = math.floor(box.X / d), math.floor(box.Y / d)
    if nx <= 0 or ny <= 0:
        return 0
    scaled = spec.fmod.scale_args(d % spec.p)
    return _count_grid(scaled, spec.a, nx, ny, coprime_only=False)


def count_visible_direct(spec: LevelCurveSpec, box: CountBox) -> int:
    """Visible points on the level curve: the gcd(x, y) = 1 filter applied
    directly to every counted point."""
    box.validate_for(spec.p)
    return _count_grid(spec.fmod, spec.a, box.nx, box.ny, coprime_only=True)


def count_visible_mobius(spec: LevelCurveSpec, box: CountBox) -> int:
    """Visible points via inclusion-exclusion: sum of mu(d) * M(d) over
    d up to min(X, Y), where the sum truncates exactly because M(d)
    vanishes beyond that.  Must equal count_visible_direct on every input."""
    box.validate_for(spec.p)
    dmax = min(box.nx, box.ny)
    if dmax < 1:
        return 0
    mu = mobius_sieve(dmax)
    total = 0
    for d in range(1, dmax + 1):
        m = mu[d]
        if m:
            total += m * count_divisible(spec, box, d)
    return total


def expected_visible(box: CountBox, p: int) -> float:
    """The density heuristic (6/pi^2) * X * Y / p for the visible count."""
    return COPRIME_DENSITY * (box.X * box.Y) / p


@dataclass(frozen=True, eq=False)
class VisibleHistogram:
    """Per-level counts from one sweep over the grid: entry a of
    ``level_counts`` is the number of box points with f(x, y) = a (mod p),
    entry a of ``visible_counts`` additionally requires gcd(x, y) = 1."""

    p: int
    box: CountBox
    level_counts: np.ndarray
    visible_counts: np.ndarray

    def total_points(self) -> int:
        return int(self.level_counts.sum())

    def total_visible(self) -> int:
        return int(self.visible_counts.sum())


def _histogram_chunk(fmod, xs, ys, p):
    vals = _values_grid(fmod, xs, ys)
    cop = np.gcd.outer(xs, ys) == 1
    level = np.bincount(vals.ravel(), minlength=p)
    visible = np.bincount(vals[cop], minlength=p)
    return level, visible


def visible_histogram(
    f: IntBivariatePoly, p: int, box: CountBox, workers: int = 1
) -> VisibleHistogram:
    """One sweep over the grid accumulating both per-level counts.

    Rows may be processed in chunks by several workers; the accumulation
    is integer-only, so the result is identical for any worker count.
    """
    fmod = reduce_mod(f, p)  # propagates DegenerateReduction
    box.validate_for(p)
    nx, ny = box.nx, box.ny
    xs, ys = _coord_arrays(nx), _coord_arrays(ny)
    workers = max(1, int(workers))
    chunks = np.array_split(xs, min(workers, len(xs))) if nx else []
    level = np.zeros(p, dtype=np.int64)
    visible = np.zeros(p, dtype=np.int64)
    if workers == 1 or len(chunks) <= 1:
        results = [_histogram_chunk(fmod, c, ys, p) for c in chunks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda c: _histogram_chunk(fmod, c, ys, p), chunks))
    for lev, vis in results:
        level += lev
        visible += vis
    return VisibleHistogram(p=p, box=box, level_counts=level, visible_counts=visible)
