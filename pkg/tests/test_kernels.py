"""Kernel backends: enumeration, classification, searches, and parity."""

import math
import os
import random
import subprocess
import sys

import pytest

from spectile import _pykern, kernels, tables

import corpus

try:
    from spectile import _ckern
except ImportError:
    _ckern = None

BACKENDS = [_pykern] if _ckern is None else [_pykern, _ckern]


def _naive_canonical(n, mask):
    # the translate whose sorted element tuple is lexicographically least
    best_tuple = None
    best_mask = None
    for t in range(n):
        rot = ((mask >> t) | (mask << (n - t))) & ((1 << n) - 1)
        elems = tuple(i for i in range(n) if rot >> i & 1)
        if best_tuple is None or elems < best_tuple:
            best_tuple = elems
            best_mask = rot
    return best_mask


def test_backend_selected():
    assert kernels.BACKEND in ("python", "cython")
    if _ckern is not None:
        assert kernels.BACKEND == "cython"  # compiled wins when importable


def test_backend_env_override():
    env = dict(os.environ, SPECTILE_BACKEND="python")
    out = subprocess.run(
        [sys.executable, "-c", "from spectile import kernels; print(kernels.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"
    env_bad = dict(os.environ, SPECTILE_BACKEND="fortran")
    bad = subprocess.run(
        [sys.executable, "-c", "import spectile.kernels"],
        env=env_bad,
        capture_output=True,
        text=True,
    )
    assert bad.returncode != 0


@pytest.mark.parametrize("be", BACKENDS, ids=lambda b: b.BACKEND)
def test_enumeration_counts_and_shape(be):
    for n in range(1, 15):
        classes = be.enumerate_canonical(n)
        # Burnside counts all necklaces including the empty one
        assert len(classes) == corpus.binary_necklaces(n) - 1, n
        assert classes[0] == ((1 << n) - 1, 1)  # full set first
        seen = set()
        for mask, period in classes:
            assert mask & 1, "canonical masks contain 0"
            assert mask not in seen
            seen.add(mask)
            assert n % period == 0
            assert be.canonical_form(n, mask) == mask


@pytest.mark.parametrize("be", BACKENDS, ids=lambda b: b.BACKEND)
def test_canonical_form_is_least_rotation(be):
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 20)
        mask = rng.randrange(1, 1 << n)
        want = _naive_canonical(n, mask)
        assert be.canonical_form(n, mask) == want, (n, mask)


@pytest.mark.parametrize("be", BACKENDS, ids=lambda b: b.BACKEND)
def test_units_canonical_orbit_invariance(be):
    rng = random.Random(32)
    for _ in range(100):
        n = rng.randint(1, 16)
        mask = rng.randrange(1, 1 << n)
        key = be.units_canonical(n, mask)
        # applying any unit and re-keying lands on the same key
        units = [u for u in range(1, n) if math.gcd(u, n) == 1] or [1]
        u = rng.choice(units)
        image = 0
        for i in range(n):
            if mask >> i & 1:
                image |= 1 << (i * u % n)
        assert be.units_canonical(n, image) == key, (n, mask, u)


@pytest.mark.parametrize("be", BACKENDS, ids=lambda b: b.BACKEND)
def test_search_kernels_against_naive(be):
    for n in range(1, 11):
        tab = tables.kernel_tables(n)
        classes = be.enumerate_canonical(n)
        verdicts = be.classify_many(n, [m for m, _ in classes], tab)
        for (mask, _), (zeros, tile_w, spec_w, sa_mask, t1, t2) in zip(classes, verdicts):
            elems = tuple(i for i in range(n) if mask >> i & 1)
            assert zeros == sum(
                1 << k for k in corpus.naive_zero_set(n, elems)
            ), (n, elems)
            naive_spec = corpus.naive_spectrum_zn(n, elems)
            assert (spec_w != -1) == (naive_spec is not None), (n, elems)
            naive_tile = corpus.naive_tiling_complement_zn(n, elems)
            assert (tile_w != -1) == (naive_tile is not None), (n, elems)


@pytest.mark.skipif(_ckern is None, reason="compiled backend not built")
def test_backend_parity_wholesale():
    for n in range(1, 14):
        tab = tables.kernel_tables(n)
        py_classes = _pykern.enumerate_canonical(n)
        cy_classes = _ckern.enumerate_canonical(n)
        assert py_classes == cy_classes, n
        masks = [m for m, _ in py_classes]
        assert _pykern.classify_many(n, masks, tab) == _ckern.classify_many(
            n, masks, tab
        ), n


@pytest.mark.skipif(_ckern is None, reason="compiled backend not built")
def test_backend_parity_random_calls():
    rng = random.Random(20260822)
    for _ in range(200):
        n = rng.randint(1, 20)
        mask = rng.randrange(1, 1 << n)
        assert _pykern.canonical_form(n, mask) == _ckern.canonical_form(n, mask)
        assert _pykern.units_canonical(n, mask) == _ckern.units_canonical(n, mask)
        allowed = rng.randrange(0, 1 << n) | 1
        assert _pykern.tile_complement(n, mask | 1, allowed) == _ckern.tile_complement(
            n, mask | 1, allowed
        )
        zeros = rng.randrange(0, 1 << n) & ~1
        size = rng.randint(1, n)
        assert _pykern.clique_spectrum(n, zeros, size) == _ckern.clique_spectrum(
            n, zeros, size
        )


@pytest.mark.parametrize("be", BACKENDS, ids=lambda b: b.BACKEND)
def test_kernel_guards(be):
    with pytest.raises(ValueError):
        be.enumerate_canonical(0)
    with pytest.raises(ValueError):
        be.enumerate_canonical(63)
    with pytest.raises(ValueError):
        be.canonical_form(0, 0)
    with pytest.raises(ValueError):
        be.clique_spectrum(4, 0, 0)  # size must be >= 1


def test_witness_sentinel_is_minus_one():
    # kernel layer uses -1, not None, so results pack into int64 arrays
    tab = tables.kernel_tables(6)
    verdicts = kernels.classify_many(6, [0b000101], tab)  # {0, 2} in Z_6
    zeros, tile_w, spec_w, sa_mask, t1, t2 = verdicts[0]
    assert tile_w == -1 and spec_w == -1
