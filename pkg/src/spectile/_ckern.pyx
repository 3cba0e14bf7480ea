# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
# cython: initializedcheck=False
# cython: cdivision=True
"""Compiled survey kernel.

Twin of _pykern.py: same operations, same visit orders, C integer arithmetic.
The pure module is the reference semantics; the test suite compares the two
wholesale on small n.  Masks, witnesses and fold accumulators all fit in one
signed 64-bit word because the table builder caps n.
"""

from libc.stdint cimport int64_t, uint64_t

BACKEND = "cython"

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    static __inline int spt_pop64(unsigned long long x) { return __builtin_popcountll(x); }
    static __inline int spt_ctz64(unsigned long long x) { return __builtin_ctzll(x); }
    #else
    static __inline int spt_pop64(unsigned long long x) {
        int c = 0; while (x) { x &= x - 1; ++c; } return c;
    }
    static __inline int spt_ctz64(unsigned long long x) {
        int c = 0; while (!(x & 1ULL)) { x >>= 1; ++c; } return c;
    }
    #endif
    """
    int spt_pop64(uint64_t x) nogil
    int spt_ctz64(uint64_t x) nogil

# Masks must leave headroom in a signed word; the survey never exceeds the
# table cap anyway.
cdef int MAXN = 62
cdef int MAX_REDUCERS = 512


cdef inline uint64_t c_rot(uint64_t mask, int t, int n) nogil:
    t = t % n
    if t == 0:
        return mask
    return ((mask << t) | (mask >> (n - t))) & ((<uint64_t>1 << n) - 1)


cdef inline uint64_t c_rev(uint64_t mask, int n) nogil:
    cdef uint64_t out = 0
    cdef int i
    for i in range(n):
        if (mask >> i) & 1:
            out |= <uint64_t>1 << (n - 1 - i)
    return out


cdef inline int c_gcd(int a, int b) nogil:
    cdef int t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int _check_n(int n) except -1:
    if n < 1 or n > MAXN:
        raise ValueError(f"n must be in 1..{MAXN}, got {n}")
    return 0


cdef uint64_t _canon_impl(int n, uint64_t mask) nogil:
    cdef uint64_t best = 0, r
    cdef int64_t best_key = -1, key
    cdef int t
    for t in range(n):
        r = c_rot(mask, t, n)
        key = <int64_t>c_rev(r, n)
        if key > best_key:
            best_key = key
            best = r
    return best


def canonical_form(int n, mask):
    """The translate whose sorted-tuple form is lexicographically least.

    Least tuple = greatest bit-reversed value over all rotations.
    """
    _check_n(n)
    return _canon_impl(n, <uint64_t>mask)


def units_canonical(int n, mask):
    """Canonical form under translations and multiplication by units of Z_n."""
    _check_n(n)
    cdef uint64_t m0 = <uint64_t>mask
    cdef uint64_t best = 0, permuted, r, m
    cdef int64_t best_key = -1, key
    cdef int u, a
    for u in range(1, n + 1):
        if c_gcd(u, n) != 1:
            continue
        permuted = 0
        m = m0
        while m:
            a = spt_ctz64(m)
            permuted |= <uint64_t>1 << ((u * a) % n)
            m &= m - 1
        r = _canon_impl(n, permuted)
        key = <int64_t>c_rev(r, n)
        if key > best_key:
            best_key = key
            best = r
    return best


cdef void _fkm(int t, int p, int n, char* word, list out):
    cdef uint64_t mask
    cdef int i, j
    if t > n:
        if n % p == 0:
            mask = 0
            for i in range(1, n + 1):
                if word[i] == 0:
                    mask |= <uint64_t>1 << (i - 1)
            if mask:
                out.append((mask, p))
        return
    word[t] = word[t - p]
    _fkm(t + 1, p, n, word, out)
    for j in range(word[t - p] + 1, 2):
        word[t] = <char>j
        _fkm(t + 1, t, n, word, out)


def enumerate_canonical(int n):
    """All canonical translation classes of nonempty subsets of Z_n.

    Same FKM recursion and emission order as the pure backend; second entry
    is the orbit size.
    """
    _check_n(n)
    cdef char word[64]
    cdef int i
    for i in range(n + 1):
        word[i] = 0
    out = []
    _fkm(1, 1, n, word, out)
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    assert out and out[0] == (full, 1)
    return out


cdef int64_t _clique_rec(uint64_t cand, uint64_t chosen, int need, uint64_t* adj) nogil:
    cdef int v
    cdef int64_t got
    if need == 0:
        return <int64_t>chosen
    while cand:
        if spt_pop64(cand) < need:
            return -1
        v = spt_ctz64(cand)
        got = _clique_rec(cand & adj[v], chosen | (<uint64_t>1 << v), need - 1, adj)
        if got != -1:
            return got
        cand &= cand - 1
    return -1


cdef int64_t _clique_impl(int n, uint64_t zeros, int size) except -2:
    cdef uint64_t adj[64]
    cdef int v
    if size < 1:
        raise ValueError("spectrum size must be >= 1")
    if size == 1:
        return 1
    for v in range(n):
        adj[v] = 0
    for v in range(1, n):
        if (zeros >> v) & 1:
            adj[v] = c_rot(zeros, v, n) & zeros
    return _clique_rec(zeros, 1, size - 1, adj)


def clique_spectrum(int n, zeros, size):
    """Smallest-first search for a mask L with 0 in L, |L| == size, and all
    pairwise differences inside the zero mask.  Returns -1 when none exists."""
    _check_n(n)
    return _clique_impl(n, <uint64_t>zeros, <int>size)


cdef int64_t _tile_rec(uint64_t cover, uint64_t cmask, int n, uint64_t full,
                       uint64_t allowed, int* elems, int nelems,
                       uint64_t* rots) nogil:
    cdef int r, i, t
    cdef uint64_t ro
    cdef int64_t got
    cdef bint seen[64]
    if cover == full:
        return <int64_t>cmask
    r = spt_ctz64(~cover)
    for t in range(n):
        seen[t] = False
    for i in range(nelems):
        t = (r - elems[i]) % n
        if t < 0:
            t += n
        seen[t] = True
    for t in range(n):
        if not seen[t]:
            continue
        if not (allowed >> t) & 1:
            continue
        ro = rots[t]
        if ro & cover:
            continue
        got = _tile_rec(cover | ro, cmask | (<uint64_t>1 << t), n, full,
                        allowed, elems, nelems, rots)
        if got != -1:
            return got
    return -1


cdef int64_t _tile_impl(int n, uint64_t amask, uint64_t allowed) nogil:
    cdef int k = spt_pop64(amask)
    cdef int elems[64]
    cdef uint64_t rots[64]
    cdef int nelems = 0, t
    cdef uint64_t m = amask
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    if k == 0 or n % k != 0 or not allowed & 1:
        return -1
    while m:
        elems[nelems] = spt_ctz64(m)
        nelems += 1
        m &= m - 1
    for t in range(n):
        rots[t] = c_rot(amask, t, n)
    return _tile_rec(amask, 1, n, full, allowed, elems, nelems, rots)


def tile_complement(int n, amask, allowed):
    """Exact-cover search for a complement C with 0 in C, shifts restricted
    to the allowed mask, placing the shift that covers the smallest uncovered
    residue first, candidates ascending.  Returns -1 when none exists."""
    _check_n(n)
    return _tile_impl(n, <uint64_t>amask, <uint64_t>allowed)


cdef bint _creducer_zero(int reducer, int64_t[:] red_phis, int64_t[:] red_offsets,
                         int64_t[:] red_flat, int* elems, int nelems) nogil:
    cdef int phi = <int>red_phis[reducer]
    cdef int64_t base = red_offsets[reducer]
    cdef int64_t acc[64]
    cdef int64_t row
    cdef int i, j
    for j in range(phi):
        acc[j] = 0
    for i in range(nelems):
        row = base + elems[i] * phi
        for j in range(phi):
            acc[j] += red_flat[row + j]
    for j in range(phi):
        if acc[j] != 0:
            return False
    return True


cdef inline bint _flag(int reducer, char* flags, int64_t[:] red_phis,
                       int64_t[:] red_offsets, int64_t[:] red_flat,
                       int* elems, int nelems) nogil:
    if flags[reducer] == <char>-1:
        flags[reducer] = _creducer_zero(reducer, red_phis, red_offsets,
                                        red_flat, elems, nelems)
    return flags[reducer] == 1


def classify_many(int n, masks, tab):
    """For each mask: (zeros, tile_witness, spectrum_witness, sa_mask, t1, t2),
    with -1 for absent witnesses."""
    _check_n(n)
    cdef int64_t[:] red_phis = tab.red_phis
    cdef int64_t[:] red_offsets = tab.red_offsets
    cdef int64_t[:] red_flat = tab.red_flat
    cdef int64_t[:] kdiv_reducer = tab.kdiv_reducer
    cdef int n_pp = len(tab.pp_values)
    cdef int n_prod = len(tab.prod_comp_masks)
    cdef int n_primes = len(tab.prime_masks)
    cdef int n_red = len(tab.red_moduli)
    # Acquire possibly-empty buffers only when populated; the loops below
    # never index them otherwise.
    cdef int64_t[:] pp_values = tab.pp_values if n_pp else None
    cdef int64_t[:] pp_primes = tab.pp_primes if n_pp else None
    cdef int64_t[:] pp_reducers = tab.pp_reducers if n_pp else None
    cdef int64_t[:] prod_reducers = tab.prod_reducers if n_prod else None
    cdef int64_t[:] prod_comp_masks = tab.prod_comp_masks if n_prod else None
    cdef int64_t[:] prime_masks = tab.prime_masks if n_primes else None
    if n_red > MAX_REDUCERS:
        raise ValueError(f"too many reducers ({n_red}) for the kernel cache")

    cdef char flags[512]
    cdef int elems[64]
    cdef uint64_t full = (<uint64_t>1 << n) - 1
    cdef uint64_t mask_u, m, zeros
    cdef int64_t sa_mask, sm, comp, tile_w, spec_w
    cdef int64_t prod_primes, total, matched
    cdef int nelems, i, j, k
    cdef bint t1, t2
    out = []
    for mask_obj in masks:
        mask_u = <uint64_t>mask_obj
        nelems = 0
        m = mask_u
        while m:
            elems[nelems] = spt_ctz64(m)
            nelems += 1
            m &= m - 1
        for i in range(n_red):
            flags[i] = <char>-1

        zeros = 0
        for k in range(1, n):
            if _flag(<int>kdiv_reducer[k], flags, red_phis, red_offsets,
                     red_flat, elems, nelems):
                zeros |= <uint64_t>1 << k

        sa_mask = 0
        for i in range(n_pp):
            if _flag(<int>pp_reducers[i], flags, red_phis, red_offsets,
                     red_flat, elems, nelems):
                sa_mask |= <int64_t>1 << i

        prod_primes = 1
        sm = sa_mask
        while sm:
            i = spt_ctz64(<uint64_t>sm)
            prod_primes *= pp_primes[i]
            sm &= sm - 1
        t1 = prod_primes == nelems

        t2 = True
        matched = 0
        for j in range(n_prod):
            comp = prod_comp_masks[j]
            if comp & ~sa_mask:
                continue
            matched += 1
            if not _flag(<int>prod_reducers[j], flags, red_phis, red_offsets,
                         red_flat, elems, nelems):
                t2 = False
                break
        if t2:
            total = 1
            for i in range(n_primes):
                total *= 1 + spt_pop64(<uint64_t>(prime_masks[i] & sa_mask))
            total -= 1 + spt_pop64(<uint64_t>sa_mask)
            t2 = matched == total

        tile_w = _tile_impl(n, mask_u, full)
        spec_w = _clique_impl(n, zeros, nelems)
        out.append((zeros, tile_w, spec_w, sa_mask, t1 != 0, t2 != 0))
    return out
