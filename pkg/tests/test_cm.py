"""Structure analysis: S_A, the two conditions, spectrum and tiling set."""

import random
from fractions import Fraction

import pytest

from spectile import cm
from spectile.cm import PrimePower, RationalSpectrum, TilingSet
from spectile.errors import EmptySetError, EmptySpectrumError
from spectile.poly import IntSet

import corpus


def test_prime_power_of():
    assert PrimePower.of(8) == PrimePower(8, 2, 3)
    assert PrimePower.of(7) == PrimePower(7, 7, 1)
    assert PrimePower.of(25) == PrimePower(25, 5, 2)
    with pytest.raises(ValueError):
        PrimePower.of(12)
    with pytest.raises(ValueError):
        PrimePower.of(1)


def test_rational_spectrum_normalization():
    assert RationalSpectrum(4, (0, 2)) == RationalSpectrum(2, (0, 1))
    assert RationalSpectrum(4, (0, 2)).denom == 2
    assert RationalSpectrum.from_fractions([Fraction(1, 2), Fraction(0)]).numerators == (0, 1)
    sp = RationalSpectrum(4, (0, 1, 2, 3))
    assert sp.as_fractions() == (Fraction(0), Fraction(1, 4), Fraction(1, 2), Fraction(3, 4))
    assert len(sp) == 4
    with pytest.raises(ValueError):
        RationalSpectrum(4, (0, 4))
    with pytest.raises(ValueError):
        RationalSpectrum(4, (1, 1))
    with pytest.raises(ValueError):
        RationalSpectrum(0, (0,))


def test_analyze_worked_example():
    a = IntSet((0, 1, 2, 3))
    analysis = cm.analyze(a)
    assert analysis.s_a_values == (2, 4)
    assert analysis.t1 and analysis.t2 and analysis.is_cm
    assert analysis.t2_readings_differ  # element reading would need Phi_8
    assert analysis.lcm == 4
    assert analysis.laba_period == 4
    assert analysis.period_exponents == {2: 2}

    gamma = cm.laba_spectrum(analysis)
    assert gamma.as_fractions() == (
        Fraction(0),
        Fraction(1, 4),
        Fraction(1, 2),
        Fraction(3, 4),
    )
    assert gamma.period == Fraction(1, 4)
    assert cm.minimal_period(gamma) == Fraction(1, 4)

    tset = cm.cm_tiling_set(analysis)
    assert tset.block.elements == (0,)
    assert tset.modulus == 4


def test_analyze_two_element_set():
    analysis = cm.analyze(IntSet((0, 2)))
    assert analysis.s_a_values == (4,)
    assert analysis.is_cm
    assert analysis.laba_period == 1  # tower broken: 2 absent below 4
    gamma = cm.laba_spectrum(analysis)
    assert gamma.as_fractions() == (Fraction(0), Fraction(1, 4))
    tset = cm.cm_tiling_set(analysis)
    assert tset.block.elements == (0, 1) and tset.modulus == 4


def test_analyze_singleton():
    analysis = cm.analyze(IntSet((0,)))
    assert analysis.s_a_values == ()
    assert analysis.is_cm
    assert analysis.lcm == 1 and analysis.laba_period == 1
    assert cm.laba_spectrum(analysis).as_fractions() == (Fraction(0),)
    tset = cm.cm_tiling_set(analysis)
    assert tset.block.elements == (0,) and tset.modulus == 1


def test_analyze_t1_failure():
    analysis = cm.analyze(IntSet((0, 1, 3)))
    assert analysis.s_a_values == ()
    assert not analysis.t1
    assert not analysis.is_cm


def test_analyze_t2_failure():
    # (1+x+x^2)(1+x^4): S_A = {3, 8}, so T1 gives 3*2 = 6 = #A, but
    # Phi_24 has degree 8 > 6 and cannot divide the mask.
    analysis = cm.analyze(IntSet((0, 1, 2, 4, 5, 6)))
    assert analysis.s_a_values == (3, 8)
    assert analysis.t1
    assert not analysis.t2
    assert not analysis.is_cm


def test_analyze_empty_raises():
    with pytest.raises(EmptySetError):
        cm.analyze(IntSet())


def test_analyze_translation_invariance():
    # analyze takes canonicalized sets only; invariance means any translate
    # canonicalizes back to the same analysis
    rng = random.Random(5)
    for _ in range(30):
        elems = sorted(rng.sample(range(0, 40), rng.randint(1, 8)))
        base = cm.analyze(IntSet(elems).canonicalized())
        shifted = cm.analyze(IntSet([e - min(elems) + 7 for e in elems]).canonicalized())
        assert base.s_a_values == shifted.s_a_values
        assert base.t1 == shifted.t1 and base.t2 == shifted.t2
    with pytest.raises(ValueError):
        cm.analyze(IntSet((7, 8)))


def test_s_a_matches_float_oracle():
    rng = random.Random(13)
    for _ in range(60):
        elems = sorted(rng.sample(range(0, 25), rng.randint(2, 8)))
        if elems[0] != 0:
            elems = [e - elems[0] for e in elems]
        analysis = cm.analyze(IntSet(elems))
        assert analysis.s_a_values == corpus.naive_s_a(elems), elems


def test_analysis_from_parts_rebuilds_analyze():
    rng = random.Random(99)
    for _ in range(80):
        elems = sorted(rng.sample(range(0, 30), rng.randint(1, 9)))
        a = IntSet(elems).canonicalized()
        full = cm.analyze(a)
        rebuilt = cm._analysis_from_parts(a, full.s_a_values, full.t2)
        assert rebuilt == full, a.elements


def test_laba_spectrum_size_is_prime_product():
    for a, analysis in corpus.random_cm_sets(40, seed=2):
        gamma = cm.laba_spectrum(analysis)
        assert len(gamma) == len(a)  # T1 makes the digit count #A
        assert gamma.period == Fraction(1, analysis.laba_period)


def test_laba_minimal_period_exact():
    # The constructed spectrum's minimal period is exactly 1/laba_period.
    for _, analysis in corpus.random_cm_sets(40, seed=3):
        gamma = cm.laba_spectrum(analysis)
        assert cm.minimal_period(gamma) == Fraction(1, analysis.laba_period)


def test_cm_tiling_set_block_properties():
    for a, analysis in corpus.random_cm_sets(40, seed=4):
        tset = cm.cm_tiling_set(analysis)
        assert len(a) * len(tset.block.elements) == analysis.lcm
        assert all(e % analysis.laba_period == 0 for e in tset.block.elements)
        assert tset.modulus == analysis.lcm


def test_minimal_period_frozen():
    assert cm.minimal_period(RationalSpectrum(4, (0, 1, 2, 3))) == Fraction(1, 4)
    assert cm.minimal_period(RationalSpectrum(8, (0, 1))) == Fraction(1)
    assert cm.minimal_period(RationalSpectrum(1, (0,))) == Fraction(1)
    assert cm.minimal_period(RationalSpectrum(6, (0, 2, 4))) == Fraction(1, 3)
    with pytest.raises(EmptySpectrumError):
        cm.minimal_period(RationalSpectrum(4, ()))


def test_tiling_set_type():
    t = TilingSet(block=IntSet((0, 2)), modulus=4)
    assert t.block.elements == (0, 2) and t.modulus == 4
