"""Certified checks for tiling pairs and spectral pairs, exact throughout.

Each check returns a Certificate whose verdict is backed either by having
examined every required condition (verdict True) or by a concrete witness a
reader can re-check in isolation (verdict False).  Witnesses are plain
JSON-ready dicts; rationals inside them are "num/den" strings.
"""

from __future__ import annotations

import dataclasses
import math
from fractions import Fraction
from typing import Iterable

from .cm import RationalSpectrum, TilingSet
from .errors import (
    EmptySetError,
    EmptySpectrumError,
    ModulusMismatchError,
)
from .poly import IntSet, mask_polynomial, vanishes_at_root_of_unity


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class ZnSubset:
    """A subset of Z_n held as a characteristic bitmask (bit i = element i)."""

    n: int
    bits: int

    def __init__(self, n: int, bits: int):
        if n < 1:
            raise ValueError(f"modulus must be >= 1, got {n}")
        if not 0 <= bits < (1 << n):
            raise ValueError(f"bitmask {bits:#x} out of range for Z_{n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "bits", bits)

    @staticmethod
    def from_elements(n: int, elements: Iterable[int]) -> "ZnSubset":
        bits = 0
        for e in elements:
            bits |= 1 << (int(e) % n)
        return ZnSubset(n, bits)

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.n) if self.bits >> i & 1)

    @property
    def size(self) -> int:
        return self.bits.bit_count()

    def lift(self) -> IntSet:
        """The canonical integer representatives in [0, n)."""
        return IntSet(self.elements)

    def __len__(self) -> int:
        return self.size

    def __contains__(self, x: int) -> bool:
        return bool(self.bits >> (x % self.n) & 1)


@dataclasses.dataclass(frozen=True)
class Certificate:
    """A verdict plus, when false, a self-contained counterexample."""

    verdict: bool
    witness: dict | None = None

    def __bool__(self) -> bool:
        return self.verdict

    def to_json(self) -> dict:
        return {"verdict": self.verdict, "witness": self.witness}


def _coverage_certificate(
    a_elems: tuple[int, ...], b_elems: tuple[int, ...], modulus: int
) -> Certificate:
    # Exact multiset count of a + b over Z_modulus; a tiling is count == 1
    # everywhere, which forces |a| * |b| == modulus as a byproduct.
    if len(a_elems) * len(b_elems) != modulus:
        return Certificate(
            False,
            {
                "kind": "cardinality",
                "product": len(a_elems) * len(b_elems),
                "modulus": modulus,
            },
        )
    counts = [0] * modulus
    for x in a_elems:
        for y in b_elems:
            counts[(x + y) % modulus] += 1
    for r, c in enumerate(counts):
        if c != 1:
            pairs = [
                [x, y] for x in a_elems for y in b_elems if (x + y) % modulus == r
            ]
            return Certificate(
                False, {"kind": "multiplicity", "residue": r, "count": c, "pairs": pairs}
            )
    return Certificate(True)


def is_tiling_zn(a: ZnSubset, c: ZnSubset) -> Certificate:
    """Does a + c hit every residue of Z_n exactly once?"""
    if a.n != c.n:
        raise ModulusMismatchError(f"Z_{a.n} vs Z_{c.n}")
    if a.size == 0 or c.size == 0:
        raise EmptySetError("tiling check needs nonempty sets")
    return _coverage_certificate(a.elements, c.elements, a.n)


def is_spectral_pair_zn(a: ZnSubset, lam: ZnSubset) -> Certificate:
    """Is lam an orthogonal spectrum for a in Z_n?

    The condition is |lam| == |a| together with the mask polynomial of a
    vanishing at zeta_n^(l - l') for every pair of distinct l, l' in lam.
    Conjugation pairs the two orders of each difference, so unordered pairs
    suffice.
    """
    if a.n != lam.n:
        raise ModulusMismatchError(f"Z_{a.n} vs Z_{lam.n}")
    if a.size == 0:
        raise EmptySetError("spectral check needs a nonempty set")
    if lam.size != a.size:
        return Certificate(
            False,
            {"kind": "cardinality", "set_size": a.size, "spectrum_size": lam.size},
        )
    mask = mask_polynomial(a.lift())
    elems = lam.elements
    for i, l1 in enumerate(elems):
        for l2 in elems[i + 1 :]:
            if not vanishes_at_root_of_unity(mask, a.n, l2 - l1):
                return Certificate(
                    False,
                    {
                        "kind": "nonorthogonal_pair",
                        "pair": [l1, l2],
                        "difference": (l2 - l1) % a.n,
                    },
                )
    return Certificate(True)


def is_spectrum_z(a: IntSet, gamma: RationalSpectrum) -> Certificate:
    """Is the rational set gamma (mod 1) a spectrum for the integer set a?

    Exactness: each difference k/Q lands on a root of unity of order
    Q/gcd(Q, k), where divisibility by the cyclotomic decides vanishing.
    """
    if not a.elements:
        raise EmptySetError("spectral check needs a nonempty set")
    if len(gamma) == 0:
        raise EmptySpectrumError("candidate spectrum is empty")
    if len(gamma) != len(a):
        return Certificate(
            False,
            {"kind": "cardinality", "set_size": len(a), "spectrum_size": len(gamma)},
        )
    mask = mask_polynomial(a)
    q = gamma.denom
    nums = gamma.numerators
    vanishing: dict[int, bool] = {}
    for i, g1 in enumerate(nums):
        for g2 in nums[i + 1 :]:
            k = (g2 - g1) % q
            ok = vanishing.get(k)
            if ok is None:
                ok = vanishing[k] = vanishes_at_root_of_unity(mask, q, k)
            if not ok:
                return Certificate(
                    False,
                    {
                        "kind": "nonorthogonal_pair",
                        "pair": [f"{g1}/{q}", f"{g2}/{q}"],
                        "difference": f"{k}/{q}",
                    },
                )
    return Certificate(True)


def is_tiling_z(a: IntSet, t: TilingSet) -> Certificate:
    """Does a + (block + modulus*Z) tile the integers?

    The periodic tiling reduces exactly to multiset coverage of the residues
    mod t.modulus by a + block, counting collisions of the reductions.
    """
    if not a.elements:
        raise EmptySetError("tiling check needs a nonempty set")
    if not t.block.elements:
        raise EmptySetError("tiling check needs a nonempty block")
    return _coverage_certificate(a.elements, t.block.elements, t.modulus)
