"""Constructive passages between Z_n objects and Z objects.

Four small builders, each exact and each paired with a verifier elsewhere in
the package:

* ``lift_block`` stacks k consecutive periods of a Z_n subset into one
  integer set, the finite window on which periodic tiling and spectral
  arguments can be replayed verbatim.
* ``decompose_mod_k`` splits an integer set by residue class mod k into
  offset-plus-inflation parts, the shape in which equidistribution and the
  reassembly identity A(x) = sum_i x^{a_i} A_i(x^k) become visible.
* ``assemble_spectrum_mod_k`` compresses a candidate spectrum for the parts
  into one for the whole: Gamma = (Gamma' + {0, ..., k-1}) / k.
* ``periodize_complement`` packages a Z_n tiling complement as the periodic
  integer tiling set block + n*Z.
"""

from __future__ import annotations

import dataclasses

from fractions import Fraction

from .cm import RationalSpectrum, TilingSet
from .errors import EmptySetError
from .poly import IntPoly, IntSet, mask_polynomial
from .verify import ZnSubset


def lift_block(a: ZnSubset, k: int) -> IntSet:
    """The integer set a + n*{0, ..., k-1}: k stacked periods of the lift.

    Size is exactly k * |a|; the result inherits every tiling or spectral
    relation of the periodization a + n*Z restricted to [0, k*n).
    """
    if k < 1:
        raise ValueError(f"period count must be >= 1, got {k}")
    if a.size == 0:
        raise EmptySetError("cannot lift the empty subset")
    return IntSet(sorted(e + a.n * j for j in range(k) for e in a.elements))


@dataclasses.dataclass(frozen=True)
class ModKDecomposition:
    """An integer set split by residue mod k.

    For each residue r present, ``offsets`` holds a_r = min of the class and
    ``parts`` holds A_r = (class - a_r) / k, an integer set containing 0.
    The three tuples are aligned and ordered by residue.  ``reassemble``
    rebuilds the mask polynomial, so the identity

        A(x) = sum_r x^{a_r} * A_r(x^k)

    is checkable exactly against ``mask_polynomial``.
    """

    k: int
    residues: tuple[int, ...]
    offsets: tuple[int, ...]
    parts: tuple[IntSet, ...]

    @property
    def equidistributed(self) -> bool:
        """All k classes present, all the same size (hence k divides |A|)."""
        if len(self.residues) != self.k:
            return False
        sizes = {len(p.elements) for p in self.parts}
        return len(sizes) == 1

    def part_at(self, residue: int) -> IntSet:
        try:
            return self.parts[self.residues.index(residue % self.k)]
        except ValueError:
            raise KeyError(f"no elements in residue class {residue % self.k}") from None

    def reassemble(self) -> IntPoly:
        """sum_r x^{a_r} * A_r(x^k), exact over Z."""
        total = IntPoly(())
        for off, part in zip(self.offsets, self.parts):
            total = total + mask_polynomial(part).inflate(self.k).shift(off)
        return total


def decompose_mod_k(a: IntSet, k: int) -> ModKDecomposition:
    """Split a by residue mod k; missing classes are simply absent."""
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    if not a.elements:
        raise EmptySetError("cannot decompose the empty set")
    classes: dict[int, list[int]] = {}
    for e in a.elements:
        classes.setdefault(e % k, []).append(e)
    residues = tuple(sorted(classes))
    offsets = tuple(classes[r][0] for r in residues)
    parts = tuple(
        IntSet(tuple((e - classes[r][0]) // k for e in classes[r])) for r in residues
    )
    return ModKDecomposition(k=k, residues=residues, offsets=offsets, parts=parts)


def assemble_spectrum_mod_k(gamma_prime: RationalSpectrum, k: int) -> RationalSpectrum:
    """Gamma = (Gamma' + {0, ..., k-1}) / k, stamped with period 1/k.

    |Gamma| = k * |Gamma'|; the k translates never collide because Gamma'
    sits inside [0, 1).
    """
    if k < 1:
        raise ValueError(f"modulus must be >= 1, got {k}")
    d = gamma_prime.denom
    nums = [g + d * j for g in gamma_prime.numerators for j in range(k)]
    return RationalSpectrum(d * k, nums, period=Fraction(1, k))


def periodize_complement(c: ZnSubset) -> TilingSet:
    """The periodic integer tiling set lift(c) + n*Z for a Z_n complement."""
    if c.size == 0:
        raise EmptySetError("cannot periodize the empty complement")
    return TilingSet(block=c.lift(), modulus=c.n)
