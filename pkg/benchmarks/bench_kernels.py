"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row times one kernel call on both backends and checks that the
results agree.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from cyclocover import _kernels
from cyclocover.finite_field import base_field, field_over, minimal_polynomial, multiplicative_generator


def _best(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t)
    return best


def lfsr_case(q: int, d: int):
    F = field_over(q, d)
    bf = F.base
    g = multiplicative_generator(F)
    taps = np.array([bf.neg[c] for c in minimal_polynomial(g)[:-1]], dtype=np.int64)
    init, cur = [], F._one
    for _ in range(d):
        init.append(F._trace(cur))
        cur = F._mul(cur, g.coeffs)
    N = F.order - 1
    return f"lfsr_nonzero_mask q={q} d={d}", lambda b: b.lfsr_nonzero_mask(taps, init, N, bf.add_table, bf.mul_table)


def scan_case(N: int, m: int):
    mask = np.ones(N, dtype=np.uint8)
    mask[:: 7] = 0
    return f"coset_scan N={N} m={m}", lambda b: b.coset_scan(mask, m)


def hyperplane_case(q: int, n: int):
    bf = base_field(q)
    return f"first_covering_hyperplane q={q} n={n}", lambda b: b.first_covering_hyperplane(q, n, bf.add_table, bf.mul_table)


def uncovered_case(q: int, n: int):
    bf = base_field(q)
    # a covering hyperplane forces a sweep over all q^n vectors
    rank = _kernels.compiled_backend.first_covering_hyperplane(q, n, bf.add_table, bf.mul_table)
    c = [(rank // q**i) % q for i in range(n)]
    rows = np.asarray([c], dtype=np.uint8)
    return f"first_uncovered q={q} n={n}", lambda b: b.first_uncovered(q, n, rows, bf.add_table, bf.mul_table)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    if _kernels.compiled_backend is None:
        raise SystemExit("compiled extension not built; run pip install -e . --no-build-isolation")
    cases = [
        lfsr_case(2, 16),
        lfsr_case(2, 20),
        lfsr_case(3, 12),
        scan_case((1 << 20) - 1, 3 * 11 * 31),
        hyperplane_case(2, 14),
        hyperplane_case(3, 8),
        uncovered_case(2, 17),
        uncovered_case(4, 7),
    ]
    print(f"{'kernel':<42} {'python (s)':>11} {'compiled (s)':>13} {'speedup':>8}")
    for name, call in cases:
        py = _kernels.python_backend
        cc = _kernels.compiled_backend
        a, b = call(py), call(cc)
        if isinstance(a, np.ndarray):
            assert np.array_equal(np.asarray(a, dtype=np.uint8), np.asarray(b, dtype=np.uint8)), name
        else:
            assert a == b, name
        tp = _best(lambda: call(py), args.repeat)
        tc = _best(lambda: call(cc), args.repeat)
        print(f"{name:<42} {tp:>11.4f} {tc:>13.4f} {tp / tc:>7.1f}x")


if __name__ == "__main__":
    main()
