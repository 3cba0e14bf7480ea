"""Command-line surface: analysis reports, corpus surveys, certificate checks.

Three subcommands:

* ``analyze`` runs the full pipeline on one integer set: structure analysis,
  spectrum and tiling-set construction when the structure conditions hold,
  and certified verification of both, as text or JSON.
* ``survey`` streams the classification of every translation class of
  subsets of Z_n as JSONL or CSV, one row per class plus a summary.
* ``verify`` exposes the individual certified checks and constructions.

Machine output never contains floats: rationals are "num/den" strings.
Exit codes encode verdicts: 0 for true/CM, 1 for false/not-CM, 2 for parse
or precondition errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from fractions import Fraction

from . import cm, kernels, lift, search, stepset, verify
from .errors import SpectileError
from .poly import IntSet, mask_polynomial
from .verify import ZnSubset

SURVEY_COLUMNS = (
    "n",
    "set",
    "tile",
    "tile_witness",
    "spectral",
    "spectrum_witness",
    "cm_t1",
    "cm_t2",
    "s_a",
    "orbit",
)


class UsageError(ValueError):
    """Bad command-line input; maps to exit code 2."""


def _parse_set(spec: str) -> tuple[int, ...]:
    """Comma-separated decimal non-negative integers, duplicates rejected."""
    elems = []
    for tok in spec.split(","):
        tok = tok.strip()
        if not tok.isdigit():
            raise UsageError(f"bad set element {tok!r} (want a non-negative integer)")
        elems.append(int(tok))
    if len(set(elems)) != len(elems):
        raise UsageError(f"duplicate elements in set-spec {spec!r}")
    return tuple(sorted(elems))


def _parse_zn_subset(n: int, spec: str) -> ZnSubset:
    elems = _parse_set(spec)
    if elems and elems[-1] >= n:
        raise UsageError(f"element {elems[-1]} is outside Z_{n}")
    return ZnSubset.from_elements(n, elems)


def _parse_rationals(spec: str) -> cm.RationalSpectrum:
    """Comma-separated fractions in [0, 1), e.g. "0/1,1/4,1/2,3/4"."""
    vals = []
    for tok in spec.split(","):
        tok = tok.strip()
        try:
            f = Fraction(tok)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad rational {tok!r}: {exc}") from None
        if not 0 <= f < 1:
            raise UsageError(f"rational {tok} outside [0, 1)")
        vals.append(f)
    if len(set(vals)) != len(vals):
        raise UsageError(f"duplicate values in rational-spec {spec!r}")
    return cm.RationalSpectrum.from_fractions(vals)


def _parse_intervals(spec: str) -> stepset.StepSet:
    """Semicolon-separated "lo:hi" rational pairs, e.g. "0:3/4;5/4:3/2"."""
    intervals = []
    for part in spec.split(";"):
        lo, sep, hi = part.partition(":")
        if not sep:
            raise UsageError(f"bad interval {part!r} (want lo:hi)")
        try:
            intervals.append((Fraction(lo.strip()), Fraction(hi.strip())))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad interval {part!r}: {exc}") from None
    return stepset.StepSet(intervals)


def _frac_str(f: Fraction) -> str:
    return f"{f.numerator}/{f.denominator}"


def _spectrum_strings(sp: cm.RationalSpectrum) -> list[str]:
    return [_frac_str(f) for f in sp.as_fractions()]


# ---------------------------------------------------------------- analyze


def _build_report(elems: tuple[int, ...]) -> dict:
    t0 = time.perf_counter()
    a = IntSet(elems)
    analysis = cm.analyze(a)
    report = {
        "input": list(elems),
        "size": len(elems),
        "s_a": list(analysis.s_a_values),
        "t1": analysis.t1,
        "t2": analysis.t2,
        "t2_readings_differ": analysis.t2_readings_differ,
        "is_cm": analysis.is_cm,
        "lcm": analysis.lcm,
        "laba_period": analysis.laba_period,
        "spectrum": None,
        "spectrum_minimal_period": None,
        "tiling_block": None,
        "tiling_modulus": None,
        "spectrum_certificate": None,
        "tiling_certificate": None,
    }
    if analysis.is_cm:
        gamma = cm.laba_spectrum(analysis)
        tset = cm.cm_tiling_set(analysis)
        report["spectrum"] = _spectrum_strings(gamma)
        report["spectrum_minimal_period"] = _frac_str(cm.minimal_period(gamma))
        report["tiling_block"] = list(tset.block.elements)
        report["tiling_modulus"] = tset.modulus
        report["spectrum_certificate"] = verify.is_spectrum_z(a, gamma).to_json()
        report["tiling_certificate"] = verify.is_tiling_z(a, tset).to_json()
    report["elapsed_ms"] = round((time.perf_counter() - t0) * 1000.0, 3)
    return report


def _print_report_text(r: dict, out) -> None:
    print(f"set            {{{', '.join(map(str, r['input']))}}}", file=out)
    print(f"size           {r['size']}", file=out)
    print(f"S_A            {{{', '.join(map(str, r['s_a']))}}}", file=out)
    print(f"T1             {r['t1']}", file=out)
    print(f"T2             {r['t2']}", file=out)
    if r["t2_readings_differ"]:
        print("T2 readings    DIFFER (element reading false)", file=out)
    print(f"CM             {r['is_cm']}", file=out)
    print(f"lcm(S_A)       {r['lcm']}", file=out)
    print(f"period         {r['laba_period']}", file=out)
    if r["is_cm"]:
        print(f"spectrum       {{{', '.join(r['spectrum'])}}}", file=out)
        print(f"min period     {r['spectrum_minimal_period']}", file=out)
        block = ", ".join(map(str, r["tiling_block"]))
        print(f"tiling set     {{{block}}} + {r['tiling_modulus']}Z", file=out)
        sc = r["spectrum_certificate"]["verdict"]
        tc = r["tiling_certificate"]["verdict"]
        print(f"spectrum cert  {'verified' if sc else 'FAILED'}", file=out)
        print(f"tiling cert    {'verified' if tc else 'FAILED'}", file=out)
    else:
        print("spectrum       not constructed (CM fails)", file=out)
        print("tiling set     not constructed (CM fails)", file=out)
    print(f"elapsed        {r['elapsed_ms']} ms", file=out)


def cmd_analyze(args) -> int:
    elems = _parse_set(args.set)
    report = _build_report(elems)
    if args.json:
        print(json.dumps(report, indent=2), file=args.stdout)
    else:
        _print_report_text(report, args.stdout)
    if not report["is_cm"]:
        return 1
    ok = (
        report["spectrum_certificate"]["verdict"]
        and report["tiling_certificate"]["verdict"]
    )
    return 0 if ok else 1


# ----------------------------------------------------------------- survey


def _row_dict(row: search.ZnClassification) -> dict:
    return {
        "n": row.n,
        "set": list(row.subset.elements),
        "tile": row.is_tile,
        "tile_witness": None if row.tile_witness is None else list(row.tile_witness.elements),
        "spectral": row.is_spectral,
        "spectrum_witness": None
        if row.spectrum_witness is None
        else list(row.spectrum_witness.elements),
        "cm_t1": row.cm.t1,
        "cm_t2": row.cm.t2,
        "s_a": list(row.cm.s_a_values),
        "orbit": row.orbit_size,
    }


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def cmd_survey(args) -> int:
    if args.jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {args.jobs}")
    acc = search.SurveyAccumulator(args.n)
    rows = search.survey(args.n, units=args.units, jobs=args.jobs)
    out = args.stdout
    if args.out == "jsonl":
        for row in rows:
            acc.add(row)
            print(json.dumps(_row_dict(row), separators=(",", ":")), file=out)
        summary = acc.summary().as_dict()
        print(json.dumps({"summary": summary}, separators=(",", ":")), file=out)
    else:
        print(",".join(SURVEY_COLUMNS), file=out)
        for row in rows:
            acc.add(row)
            d = _row_dict(row)
            cells = []
            for col in SURVEY_COLUMNS:
                cell = _csv_cell(d[col])
                if "," in cell or '"' in cell:
                    cell = '"' + cell.replace('"', '""') + '"'
                cells.append(cell)
            print(",".join(cells), file=out)
        summary = acc.summary().as_dict()
        print(json.dumps({"summary": summary}, separators=(",", ":")), file=args.stderr)
    return 0


# ----------------------------------------------------------------- verify


def _emit_certificate(cert: verify.Certificate, out) -> int:
    print(json.dumps(cert.to_json(), indent=2), file=out)
    return 0 if cert.verdict else 1


def cmd_verify(args) -> int:
    kind = args.kind
    argv = args.args
    out = args.stdout

    def need(k: int):
        if len(argv) != k:
            raise UsageError(f"verify {kind} takes {k} arguments, got {len(argv)}")

    if kind == "tiling-zn":
        need(3)
        n = _parse_modulus(argv[0])
        return _emit_certificate(
            verify.is_tiling_zn(_parse_zn_subset(n, argv[1]), _parse_zn_subset(n, argv[2])),
            out,
        )
    if kind == "spectrum-zn":
        need(3)
        n = _parse_modulus(argv[0])
        return _emit_certificate(
            verify.is_spectral_pair_zn(
                _parse_zn_subset(n, argv[1]), _parse_zn_subset(n, argv[2])
            ),
            out,
        )
    if kind == "spectrum-z":
        need(2)
        return _emit_certificate(
            verify.is_spectrum_z(IntSet(_parse_set(argv[0])), _parse_rationals(argv[1])),
            out,
        )
    if kind == "tiling-z":
        need(3)
        a = IntSet(_parse_set(argv[0]))
        block = IntSet(_parse_set(argv[1]))
        modulus = _parse_modulus(argv[2])
        return _emit_certificate(
            verify.is_tiling_z(a, cm.TilingSet(block=block, modulus=modulus)), out
        )
    if kind == "fiber-spectrum":
        need(3)
        omega = _parse_intervals(argv[0])
        p = _parse_modulus(argv[1])
        gamma = _parse_rationals(argv[2])
        fd = stepset.multiplicity_profile(omega, p)
        return _emit_certificate(stepset.verify_fiber_spectrum(fd, gamma), out)
    if kind == "decompose":
        need(2)
        a = IntSet(_parse_set(argv[0]))
        k = _parse_modulus(argv[1])
        d = lift.decompose_mod_k(a, k)
        payload = {
            "k": d.k,
            "residues": list(d.residues),
            "offsets": list(d.offsets),
            "parts": [list(p.elements) for p in d.parts],
            "equidistributed": d.equidistributed,
            "reassembles": d.reassemble() == mask_polynomial(a),
        }
        print(json.dumps(payload, indent=2), file=out)
        return 0 if d.equidistributed else 1
    if kind == "lift":
        need(3)
        n = _parse_modulus(argv[0])
        a = _parse_zn_subset(n, argv[1])
        k = _parse_modulus(argv[2])
        lifted = lift.lift_block(a, k)
        print(
            json.dumps(
                {"n": n, "set": list(a.elements), "k": k, "lift": list(lifted.elements)},
                indent=2,
            ),
            file=out,
        )
        return 0
    raise UsageError(f"unknown verify kind {kind!r}")


def _parse_modulus(tok: str) -> int:
    tok = tok.strip()
    if not tok.isdigit() or int(tok) < 1:
        raise UsageError(f"bad positive integer {tok!r}")
    return int(tok)


# ------------------------------------------------------------------- main


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="spectile",
        description="Exact tiling/spectral toolkit for integer sets and Z_n.",
    )
    p.add_argument(
        "--backend-info",
        action="store_true",
        help="print the active kernel backend and exit",
    )
    sub = p.add_subparsers(dest="command")

    pa = sub.add_parser("analyze", help="full pipeline report for one integer set")
    pa.add_argument("set", help="comma-separated non-negative integers, e.g. 0,1,2,3")
    pa.add_argument("--json", action="store_true", help="emit the report as JSON")

    ps = sub.add_parser("survey", help="classify all translation classes of Z_n subsets")
    ps.add_argument("n", type=int, help="modulus (1 <= n <= ceiling)")
    ps.add_argument("--jobs", type=int, default=1, help="worker processes (default 1)")
    ps.add_argument(
        "--out", choices=("jsonl", "csv"), default="jsonl", help="row format (default jsonl)"
    )
    ps.add_argument(
        "--units",
        action="store_true",
        help="merge classes equivalent under multiplicative units",
    )

    pv = sub.add_parser("verify", help="one certified check or construction")
    pv.add_argument(
        "kind",
        choices=(
            "tiling-zn",
            "spectrum-zn",
            "spectrum-z",
            "tiling-z",
            "fiber-spectrum",
            "decompose",
            "lift",
        ),
    )
    pv.add_argument("args", nargs="*", help="per-kind arguments; see README")
    return p


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = _build_parser()
    args = parser.parse_args(argv)
    args.stdout = stdout
    args.stderr = stderr
    if args.backend_info:
        print(f"kernel backend: {kernels.BACKEND}", file=stdout)
        return 0
    if args.command is None:
        parser.print_usage(stderr)
        return 2
    handler = {"analyze": cmd_analyze, "survey": cmd_survey, "verify": cmd_verify}[
        args.command
    ]
    try:
        return handler(args)
    except (SpectileError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
