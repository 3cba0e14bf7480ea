"""Timing comparison of the pure-Python and compiled kernel backends.

Runs the same workloads through both backends when both import, and reports
wall times plus the speedup.  Workloads: canonical class enumeration,
whole-space classification (the survey hot path), and the two searches on
their own.  All inputs are identical across backends, so the outputs are
asserted equal while timing.

Usage: python benchmarks/bench_kernels.py [--max-n 18]
"""

from __future__ import annotations

import argparse
import time

from spectile import tables


def _load_backends():
    backends = []
    try:
        from spectile import _ckern

        backends.append(_ckern)
    except ImportError:
        pass
    from spectile import _pykern

    backends.append(_pykern)
    return backends


def _time(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def bench_n(n: int, backends) -> None:
    tab = tables.kernel_tables(n)
    rows = {}
    for be in backends:
        classes, t_enum = _time(lambda: list(be.enumerate_canonical(n)))
        masks = [m for m, _ in classes]
        verdicts, t_cls = _time(be.classify_many, n, masks, tab)
        rows[be.BACKEND] = (classes, verdicts, t_enum, t_cls)
    names = list(rows)
    base = rows[names[-1]]
    for name in names[:-1]:
        assert rows[name][0] == base[0], f"enumeration mismatch at n={n}"
        assert rows[name][1] == base[1], f"classification mismatch at n={n}"
    cols = []
    for name in names:
        _, _, t_enum, t_cls = rows[name]
        cols.append(f"{name}: enum {t_enum * 1e3:8.1f} ms  classify {t_cls * 1e3:8.1f} ms")
    line = f"n={n:2d}  classes={len(base[0]):7d}  " + "   ".join(cols)
    if len(names) == 2:
        _, _, e0, c0 = rows[names[0]]
        _, _, e1, c1 = rows[names[1]]
        line += f"   speedup: classify {c1 / c0:5.1f}x"
    print(line, flush=True)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-n", type=int, default=18, help="largest modulus (default 18)")
    args = ap.parse_args()
    backends = _load_backends()
    print("backends:", ", ".join(be.BACKEND for be in backends), flush=True)
    if len(backends) == 1:
        print("compiled backend unavailable; timing the pure backend only", flush=True)
    for n in range(8, args.max_n + 1, 2):
        bench_n(n, backends)


if __name__ == "__main__":
    main()
