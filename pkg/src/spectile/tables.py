"""Flat integer tables that let the survey kernels test cyclotomic
divisibility by pure accumulation.

For a set A inside [0, n) and any modulus m, Phi_m | A(x) is equivalent to
sum over a in A of (x^(a mod m) mod Phi_m) being the zero vector: folding the
exponents mod m is sound because Phi_m divides x^m - 1, and reducing each
power mod Phi_m is plain linear algebra over Z.  The tables store one such
reduction row per residue and per needed modulus, so a kernel classifies a
subset with nothing but int64 additions.

Moduli covered: every divisor d > 1 of n (they decide the Fourier zero set),
every prime power s with phi(s) <= n-1 (they decide S_A of the lift), and
every product of prime powers of pairwise distinct primes with phi <= n-1
(they decide T2; combinations with larger phi cannot divide a mask of degree
< n and are settled by counting).
"""

from __future__ import annotations

import dataclasses
import functools
import math
from array import array

from .ntheory import divisors, euler_phi, primes_up_to
from .poly import cyclotomic

# Masks live in one machine word and fold accumulators must stay far from
# int64 overflow; 30 is already far beyond feasible survey runtimes.
MAX_TABLE_N = 30

_ENTRY_BOUND = 1 << 40


@dataclasses.dataclass(frozen=True)
class KernelTables:
    """Per-n tables shared by the compiled and pure kernels.

    Array layout (all array('q'), i.e. int64):
      red_flat     concatenated reduction rows; reducer r occupies
                   red_offsets[r] + a * red_phis[r] + j for a in [0, n)
      kdiv_reducer reducer index testing zeta_n^k for k in [0, n), -1 at k=0
      pp_*         prime-power candidates, ascending value
      prod_*       tabulated distinct-prime products, component sets as
                   bitmasks over pp indices
      prime_masks  per distinct candidate prime, the bitmask of its pp indices
    """

    n: int
    red_moduli: array
    red_phis: array
    red_offsets: array
    red_flat: array
    kdiv_reducer: array
    pp_values: array
    pp_primes: array
    pp_reducers: array
    prod_reducers: array
    prod_comp_masks: array
    prime_masks: array


def _reduction_rows(m: int, count: int) -> list[list[int]]:
    """x^j mod Phi_m as a phi(m)-vector, for j in [0, count)."""
    phi_m = cyclotomic(m)
    phi = phi_m.degree
    rows = []
    cur = [0] * phi
    cur[0] = 1
    for j in range(min(count, m)):
        rows.append(list(cur))
        # multiply by x, reduce once (Phi_m is monic)
        top = cur[phi - 1]
        nxt = [0] + cur[:-1]
        if top:
            for i in range(phi):
                nxt[i] -= top * phi_m.coeffs[i]
        cur = nxt
    return [rows[j % m] for j in range(count)]


@functools.lru_cache(maxsize=32)
def kernel_tables(n: int) -> KernelTables:
    if not 1 <= n <= MAX_TABLE_N:
        raise ValueError(f"kernel tables support 1 <= n <= {MAX_TABLE_N}, got {n}")
    bound = max(n - 1, 1)

    pp_values: list[int] = []
    pp_primes: list[int] = []
    for p in primes_up_to(bound + 1):
        s = p
        while euler_phi(s) <= bound:
            pp_values.append(s)
            pp_primes.append(p)
            s *= p
    order = sorted(range(len(pp_values)), key=lambda i: pp_values[i])
    pp_values = [pp_values[i] for i in order]
    pp_primes = [pp_primes[i] for i in order]

    # Distinct-prime products with phi <= bound, >= 2 components.
    prods: list[tuple[int, int]] = []
    primes = sorted(set(pp_primes))
    by_prime = [[i for i, q in enumerate(pp_primes) if q == p] for p in primes]

    def grow(pi: int, value: int, phi: int, comp: int, parts: int) -> None:
        if parts >= 2:
            prods.append((value, comp))
        for pj in range(pi, len(primes)):
            for idx in by_prime[pj]:
                phi2 = phi * euler_phi(pp_values[idx])
                if phi2 <= bound:
                    grow(pj + 1, value * pp_values[idx], phi2, comp | (1 << idx), parts + 1)

    grow(0, 1, 1, 0, 0)
    prods.sort()

    moduli = sorted(
        set(d for d in divisors(n) if d > 1) | set(pp_values) | set(v for v, _ in prods)
    )
    reducer_of = {m: i for i, m in enumerate(moduli)}

    red_phis = [euler_phi(m) for m in moduli]
    red_offsets = []
    flat: list[int] = []
    for m, phi in zip(moduli, red_phis):
        red_offsets.append(len(flat))
        for row in _reduction_rows(m, n):
            assert len(row) == phi
            for e in row:
                assert abs(e) < _ENTRY_BOUND
                flat.append(e)

    kdiv = [-1] * n
    for k in range(1, n):
        kdiv[k] = reducer_of[n // math.gcd(n, k)]

    prime_masks = []
    for p, idxs in zip(primes, by_prime):
        mask = 0
        for i in idxs:
            mask |= 1 << i
        prime_masks.append(mask)

    return KernelTables(
        n=n,
        red_moduli=array("q", moduli),
        red_phis=array("q", red_phis),
        red_offsets=array("q", red_offsets),
        red_flat=array("q", flat if flat else [0]),
        kdiv_reducer=array("q", kdiv),
        pp_values=array("q", pp_values),
        pp_primes=array("q", pp_primes),
        pp_reducers=array("q", [reducer_of[v] for v in pp_values]),
        prod_reducers=array("q", [reducer_of[v] for v, _ in prods] or []),
        prod_comp_masks=array("q", [c for _, c in prods] or []),
        prime_masks=array("q", prime_masks),
    )
