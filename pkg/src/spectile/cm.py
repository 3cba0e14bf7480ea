"""Coven-Meyerowitz analysis of finite integer sets.

For a finite A of non-negative integers with mask polynomial A(x), let S_A be
the set of prime powers s whose cyclotomic Phi_s divides A(x).  The two
structure conditions are

* T1: #A equals the product of Phi_s(1) = p over s in S_A, and
* T2: for prime powers in S_A that are powers of pairwise distinct primes,
  Phi of their product also divides A(x).

From S_A this module derives the standard objects: the lcm M of S_A, the
digit spectrum built from one digit per element of S_A, the period computed
from the maximal unbroken tower of each prime inside S_A, and the
complementary tiling-set construction whose mask is the product of the
missing prime-power cyclotomics evaluated at coprime strides.

Only exact integer and rational arithmetic is used.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction
from typing import Iterable

from .errors import (
    EmptySetError,
    EmptySpectrumError,
    NonBinaryCoefficientsError,
)
from .ntheory import divisors, euler_phi, prime_factorization, prime_power_root, primes_up_to
from .poly import IntPoly, IntSet, cyclotomic, divides, mask_polynomial


@dataclasses.dataclass(frozen=True, order=True)
class PrimePower:
    """A prime power s = prime**exponent, ordered by value."""

    value: int
    prime: int
    exponent: int

    @staticmethod
    def of(value: int) -> "PrimePower":
        fact = prime_factorization(value)
        if len(fact) != 1:
            raise ValueError(f"{value} is not a prime power")
        p, e = fact[0]
        return PrimePower(value, p, e)


@dataclasses.dataclass(frozen=True)
class CmAnalysis:
    """Everything the T1/T2 machinery derives from one set.

    period_exponents maps each prime p of lcm to the length of the unbroken
    tower p, p^2, ..., p^alpha inside S_A (0 when p itself is missing);
    laba_period is the product of those towers.
    """

    a: IntSet
    s_a: tuple[PrimePower, ...]
    t1: bool
    t2: bool
    t2_readings_differ: bool
    lcm: int
    period_exponents: dict[int, int]
    laba_period: int

    @property
    def is_cm(self) -> bool:
        return self.t1 and self.t2

    @property
    def s_a_values(self) -> tuple[int, ...]:
        return tuple(pp.value for pp in self.s_a)


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class RationalSpectrum:
    """A finite set of rationals in [0, 1), stored over one denominator.

    The representation is normalized: the stored denominator is the lcm of
    the reduced denominators, so equal sets compare equal.  ``period``, when
    set, is a rational period of the periodized spectrum Gamma + Z.
    """

    denom: int
    numerators: tuple[int, ...]
    period: Fraction | None

    def __init__(self, denom: int, numerators: Iterable[int], period: Fraction | None = None):
        if denom < 1:
            raise ValueError(f"denominator must be >= 1, got {denom}")
        nums = sorted(int(v) for v in numerators)
        for i, v in enumerate(nums):
            if not 0 <= v < denom:
                raise ValueError(f"numerator {v} outside [0, {denom})")
            if i and v == nums[i - 1]:
                raise ValueError(f"duplicate value {v}/{denom}")
        g = denom
        for v in nums:
            g = math.gcd(g, v)
        object.__setattr__(self, "denom", denom // g)
        object.__setattr__(self, "numerators", tuple(v // g for v in nums))
        object.__setattr__(self, "period", period)

    @staticmethod
    def from_fractions(values: Iterable[Fraction], period: Fraction | None = None) -> "RationalSpectrum":
        vals = [Fraction(v) for v in values]
        denom = math.lcm(1, *(v.denominator for v in vals))
        return RationalSpectrum(denom, (v.numerator * (denom // v.denominator) for v in vals), period)

    def as_fractions(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(v, self.denom) for v in self.numerators)

    def __len__(self) -> int:
        return len(self.numerators)


@dataclasses.dataclass(frozen=True)
class TilingSet:
    """The periodic set block + modulus*Z, given by its block in [0, inf)."""

    block: IntSet
    modulus: int


def _candidate_prime_powers(bound: int) -> list[PrimePower]:
    # Phi_s can divide a polynomial of degree `bound` only when phi(s) <= bound.
    out = []
    for p in primes_up_to(bound + 1):
        s = p
        e = 1
        while euler_phi(s) <= bound:
            out.append(PrimePower(s, p, e))
            s *= p
            e += 1
    out.sort()
    return out


def _phi_of_product(parts: tuple[int, ...]) -> int:
    exps: dict[int, int] = {}
    for s in parts:
        for p, e in prime_factorization(s):
            exps[p] = exps.get(p, 0) + e
    out = 1
    for p, e in exps.items():
        out *= (p - 1) * p ** (e - 1)
    return out


def _t2_distinct_primes(s_a: tuple[PrimePower, ...], mask: IntPoly, max_deg: int) -> bool:
    # One power per prime, at least two primes.  Sum of phi over S_A is at
    # most deg A (the cyclotomics are coprime divisors of A), which keeps this
    # enumeration small for every reachable input.
    by_prime: dict[int, list[int]] = {}
    for pp in s_a:
        by_prime.setdefault(pp.prime, []).append(pp.value)
    primes = sorted(by_prime)
    for r in range(2, len(primes) + 1):
        for chosen in itertools.combinations(primes, r):
            for parts in itertools.product(*(by_prime[p] for p in chosen)):
                phi = 1
                prod = 1
                for s in parts:
                    phi *= euler_phi(s)
                    prod *= s
                if phi > max_deg:
                    return False
                if not divides(cyclotomic(prod), mask):
                    return False
    return True


def _t2_distinct_elements(s_a: tuple[PrimePower, ...], mask: IntPoly, max_deg: int) -> bool:
    # Subsets of S_A of size >= 2 with no distinct-prime restriction.
    values = [pp.value for pp in s_a]
    for r in range(2, len(values) + 1):
        for parts in itertools.combinations(values, r):
            if _phi_of_product(parts) > max_deg:
                return False
            prod = math.prod(parts)
            if not divides(cyclotomic(prod), mask):
                return False
    return True


def _t2_repeated_primes(s_a: tuple[PrimePower, ...], mask: IntPoly, max_deg: int) -> bool:
    # The element subsets skipped by the distinct-primes enumeration: those
    # repeating a prime.  Together the two cover every subset of size >= 2,
    # so the distinct-elements reading is their conjunction.
    for r in range(2, len(s_a) + 1):
        for combo in itertools.combinations(s_a, r):
            if len({pp.prime for pp in combo}) == r:
                continue
            parts = tuple(pp.value for pp in combo)
            if _phi_of_product(parts) > max_deg:
                return False
            if not divides(cyclotomic(math.prod(parts)), mask):
                return False
    return True


def analyze(a: IntSet) -> CmAnalysis:
    """Compute S_A, the T1/T2 verdicts, and the derived period data.

    Requires a nonempty set translated so its least element is 0.
    """
    if not a.elements:
        raise EmptySetError("cannot analyze the empty set")
    if a.elements[0] != 0:
        raise ValueError("set must be canonicalized (least element 0)")
    mask = mask_polynomial(a)
    max_deg = a.elements[-1]

    s_a = tuple(pp for pp in _candidate_prime_powers(max_deg) if divides(cyclotomic(pp.value), mask))

    t1_product = math.prod(pp.prime for pp in s_a)
    t1 = len(a) == t1_product
    t2 = _t2_distinct_primes(s_a, mask, max_deg)
    t2_alt = _t2_distinct_elements(s_a, mask, max_deg)

    m = math.lcm(1, *(pp.value for pp in s_a))
    in_s_a = set(pp.value for pp in s_a)
    period_exponents: dict[int, int] = {}
    for p, _ in prime_factorization(m):
        alpha = 0
        power = p
        while power in in_s_a:
            alpha += 1
            power *= p
        period_exponents[p] = alpha
    laba_period = math.prod(p**e for p, e in period_exponents.items())

    return CmAnalysis(
        a=a,
        s_a=s_a,
        t1=t1,
        t2=t2,
        t2_readings_differ=t2 != t2_alt,
        lcm=m,
        period_exponents=period_exponents,
        laba_period=laba_period,
    )


def _analysis_from_parts(a: IntSet, s_a_values: tuple[int, ...], t2: bool) -> CmAnalysis:
    """Rebuild the analysis when S_A and the standard T2 verdict are known.

    The survey kernel already settled every divisibility behind S_A and T2;
    only the repeated-prime combos of the alternate T2 reading can still need
    a division, and only when the standard reading holds with a repeated
    prime present.  Must produce exactly analyze(a); the tests compare them.
    """
    s_a = tuple(PrimePower.of(v) for v in sorted(s_a_values))
    t1 = len(a) == math.prod(pp.prime for pp in s_a)
    if t2 and len({pp.prime for pp in s_a}) != len(s_a):
        t2_alt = _t2_repeated_primes(s_a, mask_polynomial(a), a.elements[-1])
    else:
        t2_alt = t2

    m = math.lcm(1, *(pp.value for pp in s_a))
    in_s_a = set(pp.value for pp in s_a)
    period_exponents: dict[int, int] = {}
    for p, _ in prime_factorization(m):
        alpha = 0
        power = p
        while power in in_s_a:
            alpha += 1
            power *= p
        period_exponents[p] = alpha
    laba_period = math.prod(p**e for p, e in period_exponents.items())

    return CmAnalysis(
        a=a,
        s_a=s_a,
        t1=t1,
        t2=t2,
        t2_readings_differ=t2 != t2_alt,
        lcm=m,
        period_exponents=period_exponents,
        laba_period=laba_period,
    )


def laba_spectrum(c: CmAnalysis) -> RationalSpectrum:
    """The digit spectrum {sum over s in S_A of k_s/s mod 1 : 0 <= k_s < p(s)}.

    Returned over denominator lcm(S_A), with period 1/laba_period attached.
    The digit map is injective mod 1, so the size is always the product of
    the primes of S_A; under T1 that equals #A.
    """
    m = c.lcm
    sums = {0}
    for pp in c.s_a:
        step = m // pp.value
        sums = {(v + k * step) % m for v in sums for k in range(pp.prime)}
    return RationalSpectrum(m, sorted(sums), period=Fraction(1, c.laba_period))


def cm_tiling_set(c: CmAnalysis) -> TilingSet:
    """The complementary construction B(x) = prod Phi_s(x^t(s)) over the
    prime powers s dividing lcm(S_A) that are absent from S_A, where t(s) is
    the largest divisor of the lcm coprime to s.

    The construction is total: it raises NonBinaryCoefficientsError if the
    product fails to be a 0/1 mask, and otherwise returns its exponent set
    as a block modulo lcm(S_A).
    """
    m = c.lcm
    in_s_a = set(c.s_a_values)
    b = IntPoly((1,))
    for s in divisors(m):
        p = prime_power_root(s)
        if p is None or s in in_s_a:
            continue
        t = m
        while t % p == 0:
            t //= p
        phi_s = cyclotomic(s)
        spread = [0] * (phi_s.degree * t + 1)
        for i, coef in enumerate(phi_s.coeffs):
            spread[i * t] = coef
        b = b * IntPoly(spread)
    if any(coef not in (0, 1) for coef in b.coeffs):
        raise NonBinaryCoefficientsError(
            "tiling-set construction produced non-0/1 coefficients", coeffs=b.coeffs
        )
    block = IntSet(i for i, coef in enumerate(b.coeffs) if coef == 1)
    return TilingSet(block=block, modulus=m)


def minimal_period(sp: RationalSpectrum) -> Fraction:
    """The least rational 1/P with Gamma + 1/P = Gamma (mod 1).

    Any period of a nonempty Gamma + Z is a difference of two grid points,
    hence of the form (denom/P)/denom with P dividing denom; scan divisors
    of the denominator from the largest down.
    """
    if not sp.numerators:
        raise EmptySpectrumError("minimal period of an empty spectrum")
    nums = set(sp.numerators)
    for p_div in reversed(divisors(sp.denom)):
        shift = sp.denom // p_div
        if {(v + shift) % sp.denom for v in nums} == nums:
            return Fraction(1, p_div)
    raise AssertionError("unreachable: 1 is always a period")
