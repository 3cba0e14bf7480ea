"""Rational step sets and their fiber structure over a 1/p grid.

A step set is a finite union of half-open intervals [a, b) with exact
rational endpoints.  For a measure-one step set Omega and an integer p, the
fiber at x in [0, 1/p) is

    S(x) = { k in Z : x + k/p in Omega },

a finite integer set that is constant on finitely many half-open cells.
Omega tiles the reals by translates of (1/p)Z exactly when every fiber has
p elements; ``multiplicity_profile`` computes the cell decomposition and
raises ``NotPTileError`` with the offending cell otherwise.

A candidate spectrum for such an Omega of the arithmetic form
Lambda = p*gamma + p*Z (gamma a p-element set of rationals in [0, 1))
works or fails fiber by fiber: ``verify_fiber_spectrum`` reduces the
continuous statement to one exact integer-set spectrum check per distinct
fiber.  ``assemble_omega`` runs the construction the other way, building a
step set with prescribed fibers on a prescribed partition.

Everything is exact: endpoints are ``Fraction``, fibers are integer sets,
and the spectrum checks ride the cyclotomic divisibility route.
"""

from __future__ import annotations

import dataclasses
import math

from fractions import Fraction
from typing import Iterable, Sequence

from .cm import RationalSpectrum
from .errors import (
    BadPartitionError,
    CardinalityMismatchError,
    EmptySetError,
    NotPTileError,
)
from .poly import IntSet
from .verify import Certificate, is_spectrum_z

Interval = tuple[Fraction, Fraction]


def _frac(x) -> str:
    f = Fraction(x)
    return f"{f.numerator}/{f.denominator}"


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class StepSet:
    """A finite union of half-open rational intervals, normalized.

    Construction sorts the intervals and merges overlapping and abutting
    ones, so equal sets compare equal.  Each input interval must satisfy
    lo < hi; the union must be nonempty.
    """

    intervals: tuple[Interval, ...]

    def __init__(self, intervals: Iterable[tuple]):
        raw = []
        for lo, hi in intervals:
            lo, hi = Fraction(lo), Fraction(hi)
            if lo >= hi:
                raise ValueError(f"interval [{lo}, {hi}) is empty or reversed")
            raw.append((lo, hi))
        if not raw:
            raise EmptySetError("a step set needs at least one interval")
        raw.sort()
        merged = [raw[0]]
        for lo, hi in raw[1:]:
            mlo, mhi = merged[-1]
            if lo <= mhi:
                merged[-1] = (mlo, max(mhi, hi))
            else:
                merged.append((lo, hi))
        object.__setattr__(self, "intervals", tuple(merged))

    @property
    def measure(self) -> Fraction:
        return sum((hi - lo for lo, hi in self.intervals), Fraction(0))

    def __contains__(self, x) -> bool:
        x = Fraction(x)
        return any(lo <= x < hi for lo, hi in self.intervals)

    def translate(self, q) -> "StepSet":
        q = Fraction(q)
        return StepSet((lo + q, hi + q) for lo, hi in self.intervals)

    def scale(self, q) -> "StepSet":
        q = Fraction(q)
        if q <= 0:
            raise ValueError(f"scale factor must be positive, got {q}")
        return StepSet((lo * q, hi * q) for lo, hi in self.intervals)

    def rescaled(self) -> "StepSet":
        """The same set scaled to measure exactly one."""
        return self.scale(1 / self.measure)


def from_int_set(a: IntSet) -> StepSet:
    """The union of unit intervals [e, e+1) over e in a (runs merge)."""
    if not a.elements:
        raise EmptySetError("cannot build a step set from the empty set")
    return StepSet((e, e + 1) for e in a.elements)


@dataclasses.dataclass(frozen=True)
class FiberDecomposition:
    """The constant-fiber cells of a measure-one p-tile.

    ``cells`` partitions [0, 1/p) into half-open rational intervals, each
    paired with its fiber, a strictly increasing tuple of p integers.
    Adjacent cells always carry different fibers (equal neighbors merge),
    so the cell count is minimal.
    """

    p: int
    cells: tuple[tuple[Interval, tuple[int, ...]], ...]

    def fiber_at(self, x) -> tuple[int, ...]:
        x = Fraction(x)
        for (lo, hi), fiber in self.cells:
            if lo <= x < hi:
                return fiber
        raise ValueError(f"{x} is outside [0, 1/{self.p})")

    @property
    def distinct_fibers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted({fiber for _, fiber in self.cells}))


def _fiber(omega: StepSet, x: Fraction, p: int) -> tuple[int, ...]:
    # x + k/p in [lo, hi)  <=>  p*(lo - x) <= k < p*(hi - x); both bounds
    # are exact rationals, so the k-range per interval is a ceil away.
    out = []
    for lo, hi in omega.intervals:
        out.extend(range(math.ceil(p * (lo - x)), math.ceil(p * (hi - x))))
    return tuple(sorted(out))


def multiplicity_profile(omega: StepSet, p: int) -> FiberDecomposition:
    """Cut [0, 1/p) at the interval endpoints mod 1/p and read off fibers.

    The fiber map is right-continuous and can only change where some
    endpoint of omega lands on the grid, so evaluating at each cut's left
    end determines it on the whole cell.  Raises ``NotPTileError`` at the
    first cell whose fiber does not have exactly p elements.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if omega.measure != 1:
        raise ValueError(
            f"profile needs measure one, got {omega.measure}; use rescaled()"
        )
    w = Fraction(1, p)
    cuts = {Fraction(0)}
    for lo, hi in omega.intervals:
        cuts.add(lo % w)
        cuts.add(hi % w)
    cut_list = sorted(cuts)
    cells: list[tuple[Interval, tuple[int, ...]]] = []
    for i, lo in enumerate(cut_list):
        hi = cut_list[i + 1] if i + 1 < len(cut_list) else w
        fiber = _fiber(omega, lo, p)
        if len(fiber) != p:
            raise NotPTileError(
                f"fiber on [{lo}, {hi}) has {len(fiber)} elements, expected {p}",
                cell=(lo, hi),
                fiber=fiber,
            )
        if cells and cells[-1][1] == fiber:
            (mlo, _), _ = cells[-1]
            cells[-1] = ((mlo, hi), fiber)
        else:
            cells.append(((lo, hi), fiber))
    return FiberDecomposition(p=p, cells=tuple(cells))


def verify_fiber_spectrum(fd: FiberDecomposition, gamma: RationalSpectrum) -> Certificate:
    """Certify p*gamma + p*Z as a spectrum of the profiled step set.

    The continuous orthogonality statement splits over the cells: it holds
    exactly when gamma is a spectrum of every fiber as an integer set.
    Fibers may contain negatives, so each is translated to start at 0 first
    (orthogonality sees only differences).  A false certificate carries the
    first failing cell, its fiber, and the inner pair witness.
    """
    if len(gamma) != fd.p:
        raise CardinalityMismatchError(
            f"candidate has {len(gamma)} points but p = {fd.p}"
        )
    checked: set[tuple[int, ...]] = set()
    for (lo, hi), fiber in fd.cells:
        if fiber in checked:
            continue
        checked.add(fiber)
        shifted = IntSet(k - fiber[0] for k in fiber)
        inner = is_spectrum_z(shifted, gamma)
        if not inner:
            return Certificate(
                False,
                {
                    "kind": "fiber",
                    "cell": [_frac(lo), _frac(hi)],
                    "fiber": list(fiber),
                    "witness": inner.witness,
                },
            )
    return Certificate(True)


def assemble_omega(family: Sequence[IntSet], cuts: Sequence) -> StepSet:
    """Build the step set with fiber family[i] on the i-th cell of cuts.

    ``cuts`` must rise strictly from 0 to 1/p with one more entry than the
    family, where p is the common size of the family members.  The result is

        Omega = union_i ( [cuts[i], cuts[i+1]) + family[i] / p ),

    disjoint by construction (a point determines its cell by reduction mod
    1/p and its fiber element by the quotient), of measure exactly one, and
    ``multiplicity_profile`` recovers each family[i] on its cell.
    """
    fam = list(family)
    if not fam:
        raise EmptySetError("family must contain at least one fiber")
    p = len(fam[0].elements)
    if p == 0:
        raise EmptySetError("fibers must be nonempty")
    for b in fam:
        if len(b.elements) != p:
            raise CardinalityMismatchError(
                f"fiber sizes differ: {len(b.elements)} vs {p}"
            )
    cl = [Fraction(c) for c in cuts]
    if len(cl) != len(fam) + 1:
        raise BadPartitionError(
            f"need {len(fam) + 1} cuts for {len(fam)} fibers, got {len(cl)}"
        )
    if cl[0] != 0:
        raise BadPartitionError(f"cuts must start at 0, got {cl[0]}")
    if cl[-1] != Fraction(1, p):
        raise BadPartitionError(f"cuts must end at 1/{p}, got {cl[-1]}")
    if any(a >= b for a, b in zip(cl, cl[1:])):
        raise BadPartitionError("cuts must be strictly increasing")
    intervals = []
    for (lo, hi), b in zip(zip(cl, cl[1:]), fam):
        for e in b.elements:
            intervals.append((lo + Fraction(e, p), hi + Fraction(e, p)))
    return StepSet(intervals)
