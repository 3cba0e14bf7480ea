"""End-to-end acceptance battery.

One test per acceptance criterion, each printing a single PASS line with
its headline numbers (run with -s to see them stream).  The survey walk
over n = 1..24 happens once, in a module-scoped fixture, and feeds every
criterion that consumes survey data.  Expected corpus sizes are frozen:
the enumeration is deterministic, so a drift in any count is a behavioral
regression, not noise.
"""

import random
import time

from fractions import Fraction
from io import StringIO

import pytest

from spectile import cli, cm, lift, search, stepset, verify
from spectile.poly import IntPoly, IntSet, cyclotomic, mask_polynomial
from spectile.verify import ZnSubset

import corpus

MAX_SURVEY_N = 24
RANDOM_CORPUS_SIZE = 200

# deterministic totals of the n = 1..24 walk
EXPECTED_CM_ROWS = 6290
EXPECTED_TILE_ROWS = 1425


@pytest.fixture(scope="module")
def survey_data():
    t0 = time.perf_counter()
    summaries = {}
    cm_rows = []  # (n, CmAnalysis, spectrum witness elements or None)
    tile_rows = []  # (n, subset elements)
    for n in range(1, MAX_SURVEY_N + 1):
        acc = search.SurveyAccumulator(n)
        for row in search.survey(n):
            acc.add(row)
            if row.cm.is_cm:
                witness = (
                    None
                    if row.spectrum_witness is None
                    else row.spectrum_witness.elements
                )
                cm_rows.append((n, row.cm, witness))
            if row.is_tile:
                tile_rows.append((n, row.subset.elements))
        summaries[n] = acc.summary()
    return {
        "summaries": summaries,
        "cm_rows": cm_rows,
        "tile_rows": tile_rows,
        "elapsed": time.perf_counter() - t0,
    }


@pytest.fixture(scope="module")
def random_corpus():
    return corpus.random_cm_sets(RANDOM_CORPUS_SIZE, seed=1729)


def _least_prime_factor(s: int) -> int:
    p = 2
    while p * p <= s:
        if s % p == 0:
            return p
        p += 1
    return s


def test_criterion_1_cyclotomic_foundations():
    t0 = time.perf_counter()
    for n in range(1, 201):
        prod = IntPoly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic(d)
        assert prod == IntPoly((-1,) + (0,) * (n - 1) + (1,)), n
    assert cyclotomic(1)(1) == 0
    for s in range(2, 201):
        want = _least_prime_factor(s) if corpus._is_prime_power(s) else 1
        assert cyclotomic(s)(1) == want, s
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0, f"cyclotomic foundations took {elapsed:.2f}s"
    print(f"ACCEPTANCE 1 cyclotomic identities up to 200: PASS ({elapsed:.2f}s)")


def test_criterion_2_worked_pipeline():
    a = IntSet((0, 1, 2, 3))
    analysis = cm.analyze(a)
    assert analysis.s_a_values == (2, 4)
    assert analysis.t1 and analysis.t2 and analysis.is_cm
    gamma = cm.laba_spectrum(analysis)
    assert gamma.as_fractions() == (
        Fraction(0),
        Fraction(1, 4),
        Fraction(1, 2),
        Fraction(3, 4),
    )
    assert analysis.laba_period == 4
    assert cm.minimal_period(gamma) == Fraction(1, 4)
    tset = cm.cm_tiling_set(analysis)
    assert tset.block.elements == (0,) and tset.modulus == 4
    assert verify.is_spectrum_z(a, gamma).verdict
    assert verify.is_tiling_z(a, tset).verdict
    print("ACCEPTANCE 2 worked pipeline on {0,1,2,3}: PASS")


def test_criterion_3_constructions_verify_everywhere(survey_data, random_corpus):
    t0 = time.perf_counter()
    assert len(survey_data["cm_rows"]) == EXPECTED_CM_ROWS
    checked = 0
    for n, analysis, _ in survey_data["cm_rows"]:
        gamma = cm.laba_spectrum(analysis)
        tset = cm.cm_tiling_set(analysis)
        assert verify.is_spectrum_z(analysis.a, gamma).verdict, (n, analysis.a.elements)
        assert verify.is_tiling_z(analysis.a, tset).verdict, (n, analysis.a.elements)
        checked += 1
    for a, analysis in random_corpus:
        gamma = cm.laba_spectrum(analysis)
        tset = cm.cm_tiling_set(analysis)
        assert verify.is_spectrum_z(a, gamma).verdict, a.elements
        assert verify.is_tiling_z(a, tset).verdict, a.elements
        checked += 1
    elapsed = time.perf_counter() - t0
    assert checked == EXPECTED_CM_ROWS + RANDOM_CORPUS_SIZE
    assert elapsed < 600.0
    print(
        f"ACCEPTANCE 3 spectrum+tiling certificates on {checked} CM sets:"
        f" PASS ({elapsed:.1f}s)"
    )


def test_criterion_4_period_divisibility(survey_data, random_corpus):
    block_checks = 0
    for n, analysis, _ in survey_data["cm_rows"]:
        tset = cm.cm_tiling_set(analysis)
        p = analysis.laba_period
        assert all(b % p == 0 for b in tset.block.elements), (n, analysis.a.elements)
        block_checks += 1

    witness_checks = 0
    for n, analysis, witness in survey_data["cm_rows"]:
        if witness is None:
            continue
        mp = cm.minimal_period(cm.RationalSpectrum(n, witness))
        assert mp.numerator == 1, (n, witness)
        assert analysis.laba_period % mp.denominator == 0, (n, analysis.a.elements)
        witness_checks += 1

    for a, analysis in random_corpus:
        gamma = cm.laba_spectrum(analysis)
        assert cm.minimal_period(gamma) == Fraction(1, analysis.laba_period), a.elements

    assert block_checks == EXPECTED_CM_ROWS
    assert witness_checks == EXPECTED_TILE_ROWS
    print(
        f"ACCEPTANCE 4 period divisibility ({block_checks} blocks,"
        f" {witness_checks} brute-force spectra, {RANDOM_CORPUS_SIZE} random): PASS"
    )


def test_criterion_5_no_survey_discrepancies(survey_data):
    for n, s in sorted(survey_data["summaries"].items()):
        assert s.subsets == 1 << (n - 1), n
        assert s.tile_not_spectral == 0, n
        assert s.spectral_not_tile == 0, n
        assert s.tiles_failing_t1 == 0, n
    assert len(survey_data["tile_rows"]) == EXPECTED_TILE_ROWS
    elapsed = survey_data["elapsed"]
    assert elapsed <= 600.0, f"survey walk took {elapsed:.1f}s"
    classes = sum(s.classes for s in survey_data["summaries"].values())
    print(
        f"ACCEPTANCE 5 surveys n<=24 clean ({classes} classes,"
        f" {elapsed:.1f}s walk): PASS"
    )


def test_criterion_6_finders_match_naive_search():
    checked = 0
    for n in range(1, 13):
        for row in search.survey(n):
            elems = row.subset.elements
            assert row.is_spectral == (
                corpus.naive_spectrum_zn(n, elems) is not None
            ), (n, elems)
            assert row.is_tile == (
                corpus.naive_tiling_complement_zn(n, elems) is not None
            ), (n, elems)
            checked += 1
    print(f"ACCEPTANCE 6 finder agreement with naive search on {checked} classes: PASS")


def test_criterion_7_mod_k_equidistribution(survey_data):
    searches = 0
    found = 0
    for n, elems in survey_data["tile_rows"]:
        a = ZnSubset.from_elements(n, elems)
        for k in (2, 3, 4):
            if n % k:
                continue
            allowed = ZnSubset.from_elements(n, range(0, n, k))
            searches += 1
            comp = search.find_tiling_complement_zn(a, allowed=allowed)
            if comp is None:
                continue
            found += 1
            d = lift.decompose_mod_k(IntSet(elems), k)
            assert d.equidistributed, (n, elems, k)
            assert len(elems) % k == 0, (n, elems, k)
    assert (searches, found) == (3330, 2063)

    rng = random.Random(683)
    for _ in range(1000):
        a = corpus.random_int_set(rng, 50, 14)
        k = rng.randint(1, 8)
        assert lift.decompose_mod_k(a, k).reassemble() == mask_polynomial(a), (a, k)
    print(
        f"ACCEPTANCE 7 mod-k equidistribution on {found} grid-complement tiles"
        f" + 1000 reassemblies: PASS"
    )


def test_criterion_8_fiber_recovery_and_equivalence():
    rng = random.Random(505)
    for trial in range(500):
        p = rng.randrange(1, 7)
        ncells = rng.randrange(1, 5)
        fam = [IntSet(sorted(rng.sample(range(0, 4 * p + 1), p))) for _ in range(ncells)]
        denom = p * rng.choice([4, 6, 8, 12])
        inner = sorted(rng.sample(range(1, denom // p), ncells - 1)) if ncells > 1 else []
        cuts = [Fraction(0)] + [Fraction(v, denom) for v in inner] + [Fraction(1, p)]
        om = stepset.assemble_omega(fam, cuts)
        fd = stepset.multiplicity_profile(om, p)
        for (lo, hi), b in zip(zip(cuts, cuts[1:]), fam):
            for (plo, phi), fib in fd.cells:
                if plo < hi and lo < phi:
                    assert fib == b.elements, (trial, fam, cuts)

    for _ in range(200):
        size = rng.randrange(1, 7)
        a = IntSet(sorted(rng.sample(range(0, 25), size)))
        fd = stepset.multiplicity_profile(stepset.from_int_set(a).rescaled(), size)
        assert fd.cells[0][1] == a.elements
        q = rng.randrange(size, 30)
        gamma = cm.RationalSpectrum(q, sorted(rng.sample(range(q), size)))
        direct = verify.is_spectrum_z(a, gamma).verdict
        fiberwise = stepset.verify_fiber_spectrum(fd, gamma).verdict
        assert direct == fiberwise, (a.elements, gamma.denom, gamma.numerators)
    print("ACCEPTANCE 8 fiber recovery (500) + fiber/direct equivalence (200): PASS")


def test_criterion_9_survey_deterministic_across_jobs():
    outputs = []
    for jobs in (1, 4, 8):
        out = StringIO()
        rc = cli.main(
            ["survey", "20", "--jobs", str(jobs)], stdout=out, stderr=StringIO()
        )
        assert rc == 0
        outputs.append(out.getvalue())
    assert outputs[0] == outputs[1] == outputs[2]
    rows = len(outputs[0].splitlines()) - 1
    print(f"ACCEPTANCE 9 survey n=20 byte-identical for jobs 1/4/8 ({rows} rows): PASS")
