"""Brute-force engines over Z_n.

Classifies every subset of Z_n (up to translation, optionally up to unit
multiplication) as tile and/or spectral with explicit witnesses, checks the
two implications between those verdicts exhaustively, and searches common
spectra / common tiling sets for finite families.  The per-class work runs
in the selected kernel backend; everything here is orchestration, so the
results are identical whichever backend is active.
"""

from __future__ import annotations

import dataclasses
import math
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Sequence

from . import cm, kernels, tables
from .errors import (
    CardinalityMismatchError,
    CeilingExceededError,
    EmptySetError,
    ModulusMismatchError,
)
from .ntheory import divisors
from .poly import IntSet, cyclotomic, divides, mask_polynomial
from .verify import ZnSubset

# Full surveys grow like 2^n / n; the default keeps a run in the minutes
# range on one core.  SPECTILE_SURVEY_CEILING raises it, but never past the
# kernel table cap.
DEFAULT_CEILING = 24

# Classification is sent to workers in fixed-size runs so the output order
# never depends on the worker count.
_CHUNK = 8192


def _survey_ceiling() -> int:
    raw = os.environ.get("SPECTILE_SURVEY_CEILING")
    if raw is None:
        return DEFAULT_CEILING
    return min(int(raw), tables.MAX_TABLE_N)


@dataclasses.dataclass(frozen=True)
class FourierZeroSet:
    """Exact zero set of a mask polynomial on the n-th roots of unity.

    Bit k is set iff A(zeta_n^k) = 0; bit 0 never is, since A(1) = |A| > 0.
    The set is symmetric under k -> n - k because A has integer coefficients.
    """

    n: int
    zeros: int

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.n) if self.zeros >> k & 1)

    def __contains__(self, k: int) -> bool:
        return bool(self.zeros >> (k % self.n) & 1)


def fourier_zero_set(a: ZnSubset) -> FourierZeroSet:
    """Where the mask polynomial of a vanishes on the n-th roots of unity.

    A(zeta_n^k) = 0 iff Phi_{n/gcd(n,k)} | A, so one exact division per
    divisor of n settles every k at once.
    """
    if not a.bits:
        raise EmptySetError("the empty set has no mask polynomial")
    n = a.n
    mask = mask_polynomial(IntSet(a.elements))
    zeros = 0
    for d in divisors(n):
        if d == 1 or not divides(cyclotomic(d), mask):
            continue
        step = n // d
        for j in range(1, d):
            if math.gcd(j, d) == 1:
                zeros |= 1 << (step * j)
    return FourierZeroSet(n, zeros)


def find_spectrum_zn(a: ZnSubset) -> ZnSubset | None:
    """A spectrum for a in Z_n, or None if no subset qualifies.

    A spectrum is a set containing 0, of the same size as a, whose pairwise
    differences all fall in the Fourier zero set; the search is a clique
    backtracking on the Cayley graph of that zero set.
    """
    zeros = fourier_zero_set(a).zeros
    got = kernels.clique_spectrum(a.n, zeros, a.size)
    return None if got == -1 else ZnSubset(a.n, got)


def find_tiling_complement_zn(
    a: ZnSubset, allowed: ZnSubset | None = None
) -> ZnSubset | None:
    """A complement C containing 0 with a + C = Z_n exactly, or None.

    When allowed is given, every shift of C must come from it (it must
    contain 0); this restriction is what lets callers ask for complements
    inside a subgroup such as kZ_n.
    """
    if not a.bits:
        raise EmptySetError("the empty set tiles nothing")
    if allowed is None:
        allowed_bits = (1 << a.n) - 1
    else:
        if allowed.n != a.n:
            raise ModulusMismatchError(
                f"allowed shifts live in Z_{allowed.n}, the set in Z_{a.n}"
            )
        allowed_bits = allowed.bits
    got = kernels.tile_complement(a.n, a.bits, allowed_bits)
    return None if got == -1 else ZnSubset(a.n, got)


def _validated_family(family: Sequence[ZnSubset]) -> tuple[int, int]:
    if not family:
        raise EmptySetError("family must contain at least one set")
    n = family[0].n
    size = family[0].size
    for a in family:
        if a.n != n:
            raise ModulusMismatchError(f"family mixes Z_{n} and Z_{a.n}")
        if a.size != size:
            raise CardinalityMismatchError(
                f"family mixes cardinalities {size} and {a.size}"
            )
    if size == 0:
        raise EmptySetError("family members must be nonempty")
    return n, size


def common_spectrum(family: Sequence[ZnSubset]) -> ZnSubset | None:
    """One spectrum shared by every member of the family, or None.

    The clique search runs over the intersection of the members' Fourier
    zero sets; for a singleton family this is exactly find_spectrum_zn.
    """
    family = list(family)
    n, size = _validated_family(family)
    inter = (1 << n) - 1
    for a in family:
        inter &= fourier_zero_set(a).zeros
    got = kernels.clique_spectrum(n, inter, size)
    return None if got == -1 else ZnSubset(n, got)


def common_tiling_set(family: Sequence[ZnSubset]) -> ZnSubset | None:
    """One complement tiling Z_n simultaneously with every member, or None.

    Backtracks on the smallest residue the first member leaves uncovered,
    shifts ascending, keeping collision masks per member; for a singleton
    family this visits exactly the states of find_tiling_complement_zn.
    """
    family = list(family)
    n, size = _validated_family(family)
    if n % size:
        return None
    full = (1 << n) - 1
    masks = [a.bits for a in family]
    rots = [
        [((m << t) | (m >> (n - t))) & full if t else m for t in range(n)]
        for m in masks
    ]
    elems0 = family[0].elements

    def rec(covers: list[int], cmask: int) -> int:
        if covers[0] == full:
            return cmask
        low = ~covers[0]
        r = (low & -low).bit_length() - 1
        for t in sorted({(r - a) % n for a in elems0}):
            shifted = [ro[t] for ro in rots]
            if any(s & c for s, c in zip(shifted, covers)):
                continue
            got = rec([c | s for c, s in zip(covers, shifted)], cmask | 1 << t)
            if got != -1:
                return got
        return -1

    got = rec(list(masks), 1)
    return None if got == -1 else ZnSubset(n, got)


@dataclasses.dataclass(frozen=True)
class ZnClassification:
    """Survey verdicts for one canonical class of subsets of Z_n.

    subset is the canonical representative (contains 0, lexicographically
    least tuple among its translates).  orbit_size counts the distinct
    subsets containing 0 that the class stands for, so orbit sizes across a
    full survey sum to 2^(n-1).  cm analyzes the representative read as an
    integer set.
    """

    n: int
    subset: ZnSubset
    is_tile: bool
    tile_witness: ZnSubset | None
    is_spectral: bool
    spectrum_witness: ZnSubset | None
    cm: cm.CmAnalysis
    orbit_size: int


@dataclasses.dataclass(frozen=True)
class SurveySummary:
    """Aggregate counts over one survey run (classes, not orbit-weighted,
    except subsets which totals the represented subsets containing 0)."""

    n: int
    classes: int
    subsets: int
    tiles: int
    spectral: int
    tile_not_spectral: int
    spectral_not_tile: int
    tiles_failing_t1: int
    tiles_failing_t2: int

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


class SurveyAccumulator:
    """Streaming tally of survey rows; summary() at any point."""

    def __init__(self, n: int):
        self.n = n
        self.classes = 0
        self.subsets = 0
        self.tiles = 0
        self.spectral = 0
        self.tile_not_spectral = 0
        self.spectral_not_tile = 0
        self.tiles_failing_t1 = 0
        self.tiles_failing_t2 = 0

    def add(self, row: ZnClassification) -> None:
        self.classes += 1
        self.subsets += row.orbit_size
        if row.is_tile:
            self.tiles += 1
            if not row.is_spectral:
                self.tile_not_spectral += 1
            if not row.cm.t1:
                self.tiles_failing_t1 += 1
            if not row.cm.t2:
                self.tiles_failing_t2 += 1
        if row.is_spectral:
            self.spectral += 1
            if not row.is_tile:
                self.spectral_not_tile += 1

    def summary(self) -> SurveySummary:
        return SurveySummary(
            n=self.n,
            classes=self.classes,
            subsets=self.subsets,
            tiles=self.tiles,
            spectral=self.spectral,
            tile_not_spectral=self.tile_not_spectral,
            spectral_not_tile=self.spectral_not_tile,
            tiles_failing_t1=self.tiles_failing_t1,
            tiles_failing_t2=self.tiles_failing_t2,
        )


def summarize(n: int, rows: Iterable[ZnClassification]) -> SurveySummary:
    acc = SurveyAccumulator(n)
    for row in rows:
        acc.add(row)
    return acc.summary()


def _zero_orbit(n: int, mask: int, period: int) -> int:
    # Distinct translates containing 0: |A| per n translates counted with
    # multiplicity n / period.
    return mask.bit_count() * period // n


def _classify_chunk(args: tuple[int, list[int]]) -> list[tuple]:
    n, masks = args
    return kernels.classify_many(n, masks, tables.kernel_tables(n))


def _build_row(
    n: int, mask: int, orbit: int, verdict: tuple, tab: tables.KernelTables
) -> ZnClassification:
    zeros, tile_w, spec_w, sa_mask, t1, t2 = verdict
    elems = tuple(i for i in range(n) if mask >> i & 1)
    sa_values = tuple(
        tab.pp_values[i] for i in range(len(tab.pp_values)) if sa_mask >> i & 1
    )
    analysis = cm._analysis_from_parts(IntSet(elems), sa_values, t2)
    return ZnClassification(
        n=n,
        subset=ZnSubset(n, mask),
        is_tile=tile_w != -1,
        tile_witness=None if tile_w == -1 else ZnSubset(n, tile_w),
        is_spectral=spec_w != -1,
        spectrum_witness=None if spec_w == -1 else ZnSubset(n, spec_w),
        cm=analysis,
        orbit_size=orbit,
    )


def survey(n: int, units: bool = False, jobs: int = 1) -> Iterator[ZnClassification]:
    """Classify every translation class of nonempty subsets of Z_n.

    Yields rows in a fixed enumeration order that does not depend on jobs.
    With units=True, classes related by multiplication by a unit of Z_n
    merge into one row keyed by the units-canonical representative, orbit
    sizes summed; verdicts are the representative's (tile and spectral
    status are unit-invariant, the CM columns describe the representative's
    integer lift).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if jobs < 1:
        raise ValueError("jobs must be >= 1")
    ceiling = _survey_ceiling()
    if n > ceiling:
        raise CeilingExceededError(
            f"survey of Z_{n} exceeds the ceiling {ceiling}; raise"
            f" SPECTILE_SURVEY_CEILING (hard cap {tables.MAX_TABLE_N})"
        )

    classes = kernels.enumerate_canonical(n)
    if units:
        orbit_by_key: dict[int, int] = {}
        for mask, period in classes:
            key = kernels.units_canonical(n, mask)
            orbit_by_key[key] = orbit_by_key.get(key, 0) + _zero_orbit(n, mask, period)
        work = [(mask, orbit_by_key[mask]) for mask, _ in classes if mask in orbit_by_key]
    else:
        work = [(mask, _zero_orbit(n, mask, period)) for mask, period in classes]

    tab = tables.kernel_tables(n)
    masks = [mask for mask, _ in work]
    chunks = [masks[i : i + _CHUNK] for i in range(0, len(masks), _CHUNK)]

    def rows(verdicts: Iterable[tuple]) -> Iterator[ZnClassification]:
        for (mask, orbit), verdict in zip(work, verdicts):
            yield _build_row(n, mask, orbit, verdict, tab)

    if jobs == 1 or len(chunks) <= 1:
        yield from rows(
            v for chunk in chunks for v in kernels.classify_many(n, chunk, tab)
        )
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(chunks))) as pool:
            results = pool.map(_classify_chunk, [(n, c) for c in chunks])
            yield from rows(v for res in results for v in res)
