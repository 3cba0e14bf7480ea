"""Pure Python survey kernel.

Implements exactly the same operations and visit orders as the compiled
kernel in _ckern.pyx, on Python integers.  Any divergence between the two is
a bug; the test suite compares them wholesale on small n.
"""

from __future__ import annotations

import math

from .tables import KernelTables

BACKEND = "python"

# Same cap as the compiled twin: masks, witnesses and fold accumulators must
# sit in one signed 64-bit word there, so the pure backend refuses the same
# inputs rather than silently accepting more.
MAXN = 62


def _check_n(n: int) -> None:
    if n < 1 or n > MAXN:
        raise ValueError(f"n must be in 1..{MAXN}, got {n}")


def _rot(mask: int, t: int, n: int) -> int:
    # cyclic shift of an n-bit mask: element a moves to (a + t) mod n
    t %= n
    return ((mask << t) | (mask >> (n - t))) & ((1 << n) - 1) if t else mask


def _rev(mask: int, n: int) -> int:
    out = 0
    for i in range(n):
        if mask >> i & 1:
            out |= 1 << (n - 1 - i)
    return out


def canonical_form(n: int, mask: int) -> int:
    """The translate whose sorted-tuple form is lexicographically least.

    Least tuple = greatest bit-reversed value over all rotations.
    """
    _check_n(n)
    best = None
    best_key = -1
    for t in range(n):
        r = _rot(mask, t, n)
        key = _rev(r, n)
        if key > best_key:
            best_key = key
            best = r
    return best


def units_canonical(n: int, mask: int) -> int:
    """Canonical form under translations and multiplication by units of Z_n."""
    _check_n(n)
    best = None
    best_key = -1
    for u in range(1, n + 1):
        if math.gcd(u, n) != 1:
            continue
        permuted = 0
        m = mask
        while m:
            a = (m & -m).bit_length() - 1
            permuted |= 1 << (u * a % n)
            m &= m - 1
        r = canonical_form(n, permuted)
        key = _rev(r, n)
        if key > best_key:
            best_key = key
            best = r
    return best


def enumerate_canonical(n: int) -> list[tuple[int, int]]:
    """All canonical translation classes of nonempty subsets of Z_n.

    Generates binary necklaces with the FKM recursion; the complement of a
    lex-least string is the lex-greatest one, i.e. the mask whose element
    tuple is lex-least among its translates.  Emission order is the FKM
    order; the second entry is the orbit size (count of distinct translates,
    which equals the minimal string period).
    """
    _check_n(n)
    out: list[tuple[int, int]] = []
    word = [0] * (n + 1)
    full = (1 << n) - 1

    def gen(t: int, p: int) -> None:
        if t > n:
            if n % p == 0:
                mask = 0
                for i in range(1, n + 1):
                    if word[i] == 0:
                        mask |= 1 << (i - 1)
                if mask:
                    out.append((mask, p))
            return
        word[t] = word[t - p]
        gen(t + 1, p)
        for j in range(word[t - p] + 1, 2):
            word[t] = j
            gen(t + 1, t)

    gen(1, 1)
    assert out and out[0] == (full, 1)
    return out


def clique_spectrum(n: int, zeros: int, size: int) -> int:
    """Smallest-first search for a mask L with 0 in L, |L| == size, and all
    pairwise differences inside the zero mask.  Returns -1 when none exists."""
    _check_n(n)
    if size < 1:
        raise ValueError("spectrum size must be >= 1")
    if size == 1:
        return 1
    adj = [0] * n
    for v in range(1, n):
        if zeros >> v & 1:
            adj[v] = _rot(zeros, v, n) & zeros

    def rec(cand: int, chosen: int, need: int) -> int:
        if need == 0:
            return chosen
        while cand:
            if cand.bit_count() < need:
                return -1
            v = (cand & -cand).bit_length() - 1
            got = rec(cand & adj[v], chosen | (1 << v), need - 1)
            if got != -1:
                return got
            cand &= cand - 1
        return -1

    return rec(zeros, 1, size - 1)


def tile_complement(n: int, amask: int, allowed: int) -> int:
    """Exact-cover search for a complement C with 0 in C, shifts restricted
    to the allowed mask, placing the shift that covers the smallest uncovered
    residue first, candidates ascending.  Returns -1 when none exists."""
    _check_n(n)
    k = amask.bit_count()
    if k == 0 or n % k != 0 or not allowed & 1:
        return -1
    full = (1 << n) - 1
    elems = []
    m = amask
    while m:
        elems.append((m & -m).bit_length() - 1)
        m &= m - 1
    rots = [_rot(amask, t, n) for t in range(n)]

    def rec(cover: int, cmask: int) -> int:
        if cover == full:
            return cmask
        r = ((~cover) & -(~cover)).bit_length() - 1
        ts = sorted({(r - a) % n for a in elems})
        for t in ts:
            if not allowed >> t & 1:
                continue
            ro = rots[t]
            if ro & cover:
                continue
            got = rec(cover | ro, cmask | (1 << t))
            if got != -1:
                return got
        return -1

    return rec(amask, 1)


def _reducer_zero(tab: KernelTables, reducer: int, elems: list[int]) -> bool:
    phi = tab.red_phis[reducer]
    base = tab.red_offsets[reducer]
    flat = tab.red_flat
    acc = [0] * phi
    for a in elems:
        row = base + a * phi
        for j in range(phi):
            acc[j] += flat[row + j]
    return not any(acc)


def classify_many(n: int, masks, tab: KernelTables) -> list[tuple]:
    """For each mask: (zeros, tile_witness, spectrum_witness, sa_mask, t1, t2),
    with -1 for absent witnesses."""
    _check_n(n)
    full = (1 << n) - 1
    out = []
    n_pp = len(tab.pp_values)
    for mask in masks:
        elems = []
        m = mask
        while m:
            elems.append((m & -m).bit_length() - 1)
            m &= m - 1
        flags: dict[int, bool] = {}

        def flag(reducer: int) -> bool:
            got = flags.get(reducer)
            if got is None:
                got = flags[reducer] = _reducer_zero(tab, reducer, elems)
            return got

        zeros = 0
        for k in range(1, n):
            if flag(tab.kdiv_reducer[k]):
                zeros |= 1 << k

        sa_mask = 0
        for i in range(n_pp):
            if flag(tab.pp_reducers[i]):
                sa_mask |= 1 << i

        prod_primes = 1
        sm = sa_mask
        while sm:
            i = (sm & -sm).bit_length() - 1
            prod_primes *= tab.pp_primes[i]
            sm &= sm - 1
        t1 = prod_primes == len(elems)

        t2 = True
        matched = 0
        for j in range(len(tab.prod_comp_masks)):
            comp = tab.prod_comp_masks[j]
            if comp & ~sa_mask:
                continue
            matched += 1
            if not flag(tab.prod_reducers[j]):
                t2 = False
                break
        if t2:
            total = 1
            for pm in tab.prime_masks:
                total *= 1 + (pm & sa_mask).bit_count()
            total -= 1 + sa_mask.bit_count()
            t2 = matched == total

        tile_w = tile_complement(n, mask, full)
        spec_w = clique_spectrum(n, zeros, len(elems))
        out.append((zeros, tile_w, spec_w, sa_mask, t1, t2))
    return out
