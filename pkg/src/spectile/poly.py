"""Exact integer polynomials, mask polynomials, and cyclotomic factors.

Everything here runs over Z with arbitrary-precision integers; no floating
point enters any verdict.  The three facts this module is built around:

* ``x^n - 1 = prod_{d | n} Phi_d(x)``, which yields every cyclotomic
  polynomial by repeated exact division;
* a polynomial with integer coefficients vanishes at a primitive d-th root
  of unity iff ``Phi_d`` divides it, so "p(zeta_n^k) == 0" is decidable by
  exact division with ``d = n / gcd(n, k)``;
* ``Phi_s(1)`` is ``p`` when s is a power of the prime p, ``0`` for s = 1
  and ``1`` otherwise, which drives the counting identities used elsewhere.
"""

from __future__ import annotations

import dataclasses
import functools
import math
import os
from typing import Iterable, Iterator

from .errors import EmptySetError, InvalidIndexError, ZeroDivisorError
from .ntheory import divisors


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class IntPoly:
    """A polynomial with integer coefficients, low degree first.

    Trailing zeros are stripped on construction; the zero polynomial is the
    empty tuple and reports degree -1.

    >>> IntPoly((1, 0, 1)).degree
    2
    >>> IntPoly((5, 1, 0, 0)).coeffs
    (5, 1)
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int] = ()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    def __call__(self, x: int) -> int:
        """Evaluate at an integer point by Horner's rule.

        >>> IntPoly((1, 1, 1, 1))(1)
        4
        """
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __divmod__(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Long division over Z; raises ValueError when no integer quotient
        exists at some elimination step (so callers learn divisibility fails
        already over Z, not merely over Q)."""
        qr = _divmod_int(self.coeffs, other.coeffs)
        if qr is None:
            raise ValueError(f"{other} does not divide {self} over Z at some step")
        q, r = qr
        return IntPoly(q), IntPoly(r)

    def shift(self, k: int) -> "IntPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return IntPoly((0,) * k + self.coeffs)

    def inflate(self, k: int) -> "IntPoly":
        """Substitute x -> x^k, spreading coefficients to stride k."""
        if k < 1:
            raise ValueError(f"inflate stride must be >= 1, got {k}")
        if k == 1 or not self.coeffs:
            return self
        spread = [0] * ((len(self.coeffs) - 1) * k + 1)
        for i, c in enumerate(self.coeffs):
            spread[i * k] = c
        return IntPoly(spread)


def _divmod_int(p: tuple[int, ...], d: tuple[int, ...]) -> tuple[list[int], list[int]] | None:
    """Integer long division p = q*d + r.  Returns None when an elimination
    step has no integer quotient coefficient: in that case d cannot divide p
    over Z, because an integer quotient's coefficients are exactly the ones
    long division produces, from the top degree down."""
    if not d:
        raise ZeroDivisorError("division by the zero polynomial")
    if not p:
        return [], []
    lead = d[-1]
    r = list(p)
    dq = len(p) - len(d)
    if dq < 0:
        return [], r
    q = [0] * (dq + 1)
    for i in range(dq, -1, -1):
        c = r[i + len(d) - 1]
        if c == 0:
            continue
        if c % lead != 0:
            return None
        f = c // lead
        q[i] = f
        for j, dc in enumerate(d):
            r[i + j] -= f * dc
    return q, r


def divides(d: IntPoly, p: IntPoly) -> bool:
    """Exact divisibility of p by d over Z[x].

    >>> divides(IntPoly((1, 1)), IntPoly((1, 0, -1)))
    True
    >>> divides(IntPoly((1, 1, 1)), IntPoly((1, 1, 1, 1)))
    False
    """
    if d.is_zero:
        raise ZeroDivisorError("division by the zero polynomial")
    qr = _divmod_int(p.coeffs, d.coeffs)
    return qr is not None and not any(qr[1])


def _cyc_cache_size() -> int | None:
    raw = os.environ.get("SPECTILE_CYC_CACHE")
    if raw is None:
        return None
    size = int(raw)
    if size < 0:
        raise ValueError("SPECTILE_CYC_CACHE must be >= 0")
    return size


@functools.lru_cache(maxsize=_cyc_cache_size())
def _cyclotomic_coeffs(n: int) -> tuple[int, ...]:
    if n == 1:
        return (-1, 1)
    # x^n - 1 divided by Phi_d for every proper divisor d of n.
    rem = [-1] + [0] * (n - 1) + [1]
    for d in divisors(n)[:-1]:
        qr = _divmod_int(tuple(rem), _cyclotomic_coeffs(d))
        assert qr is not None and not any(qr[1])
        rem = qr[0]
    return tuple(rem)


def cyclotomic(n: int) -> IntPoly:
    """The n-th cyclotomic polynomial Phi_n.

    >>> cyclotomic(1).coeffs
    (-1, 1)
    >>> cyclotomic(8).coeffs
    (1, 0, 0, 0, 1)
    >>> cyclotomic(9)(1)
    3
    """
    if n < 1:
        raise InvalidIndexError(f"cyclotomic index must be >= 1, got {n}")
    return IntPoly(_cyclotomic_coeffs(n))


def vanishes_at_root_of_unity(p: IntPoly, n: int, k: int) -> bool:
    """Exact test of p(zeta) == 0 for zeta = exp(2*pi*i*k/n).

    For k != 0 (mod n) the point is a primitive d-th root of unity with
    d = n / gcd(n, k), and vanishing there is equivalent to Phi_d | p.

    >>> vanishes_at_root_of_unity(IntPoly((1, 0, 1)), 8, 2)
    True
    >>> vanishes_at_root_of_unity(IntPoly((1, 1)), 3, 1)
    False
    """
    if n < 1:
        raise InvalidIndexError(f"root order must be >= 1, got {n}")
    k %= n
    if k == 0:
        return p(1) == 0
    d = n // math.gcd(n, k)
    return divides(cyclotomic(d), p)


@dataclasses.dataclass(init=False, eq=True, unsafe_hash=True)
class IntSet:
    """A finite set of non-negative integers, stored strictly increasing.

    Construction rejects negatives and duplicates; emptiness is permitted at
    the type level and rejected by the operations that need content.

    >>> IntSet([3, 0, 2]).elements
    (0, 2, 3)
    """

    elements: tuple[int, ...]

    def __init__(self, elements: Iterable[int] = ()):
        elems = sorted(int(e) for e in elements)
        for i, e in enumerate(elems):
            if e < 0:
                raise ValueError(f"negative element {e}")
            if i and e == elems[i - 1]:
                raise ValueError(f"duplicate element {e}")
        object.__setattr__(self, "elements", tuple(elems))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in set(self.elements)

    @property
    def is_canonical(self) -> bool:
        """True when the least element is 0."""
        return bool(self.elements) and self.elements[0] == 0

    def canonicalized(self) -> "IntSet":
        """Translate so the least element sits at 0.

        >>> IntSet([4, 6, 9]).canonicalized().elements
        (0, 2, 5)
        """
        if not self.elements:
            raise EmptySetError("cannot canonicalize the empty set")
        m = self.elements[0]
        return IntSet(e - m for e in self.elements)

    def translate(self, t: int) -> "IntSet":
        return IntSet(e + t for e in self.elements)


def mask_polynomial(a: IntSet) -> IntPoly:
    """The 0/1 polynomial sum_{a in A} x^a.

    Its value at 1 is the cardinality, and its vanishing at roots of unity
    encodes all tiling/spectral structure used downstream.

    >>> mask_polynomial(IntSet([0, 1, 3])).coeffs
    (1, 1, 0, 1)
    """
    if not a.elements:
        raise EmptySetError("mask polynomial of the empty set")
    out = [0] * (a.elements[-1] + 1)
    for e in a.elements:
        out[e] = 1
    return IntPoly(out)
