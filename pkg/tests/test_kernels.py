"""The compiled and pure-Python kernels must agree bit for bit."""

from __future__ import annotations

import numpy as np
import pytest

from cyclocover import _kernels
from cyclocover.finite_field import base_field, field_over, minimal_polynomial, multiplicative_generator
from cyclocover.oracle import rref_matrices

backends = [_kernels.python_backend]
if _kernels.compiled_backend is not None:
    backends.append(_kernels.compiled_backend)

needs_compiled = pytest.mark.skipif(_kernels.compiled_backend is None, reason="extension not built")


def _lfsr_inputs(q, d):
    F = field_over(q, d)
    g = multiplicative_generator(F)
    taps = np.array([F.base.neg[c] for c in minimal_polynomial(g)[:-1]], dtype=np.int64)
    init, cur = [], F._one
    for _ in range(d):
        init.append(F._trace(cur))
        cur = F._mul(cur, g.coeffs)
    return F, g, taps, init


@pytest.mark.parametrize("backend", backends, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("q,d", [(2, 4), (2, 10), (3, 5), (4, 4), (5, 3), (9, 2), (2, 16)])
def test_lfsr_matches_direct_traces(backend, q, d):
    F, g, taps, init = _lfsr_inputs(q, d)
    N = F.order - 1
    bf = F.base
    mask = backend.lfsr_nonzero_mask(taps, init, N, bf.add_table, bf.mul_table)
    assert len(mask) == N
    step = max(1, N // 500)
    x = F._one
    gs = F._pow(g.coeffs, step)
    for j in range(0, N, step):
        assert bool(mask[j]) == (F._trace(x) != 0)
        x = F._mul(x, gs)


@needs_compiled
@pytest.mark.parametrize("q,d", [(2, 15), (2, 18), (3, 9), (7, 5)])
def test_lfsr_backends_agree(q, d):
    F, _, taps, init = _lfsr_inputs(q, d)
    bf = F.base
    a = _kernels.python_backend.lfsr_nonzero_mask(taps, init, F.order - 1, bf.add_table, bf.mul_table)
    b = _kernels.compiled_backend.lfsr_nonzero_mask(taps, init, F.order - 1, bf.add_table, bf.mul_table)
    assert np.array_equal(np.asarray(a, dtype=np.uint8), np.asarray(b, dtype=np.uint8))


@pytest.mark.parametrize("backend", backends, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
def test_coset_scan(backend):
    rng = np.random.default_rng(0)
    for N, m in [(15, 3), (15, 5), (63, 7), (80, 8), (255, 17), (1, 1)]:
        for _ in range(20):
            mask = (rng.random(N) < 0.8).astype(np.uint8)
            s = N // m
            want = next((j for j in range(s) if all(mask[j + i * s] for i in range(m))), -1)
            assert backend.coset_scan(mask, m) == want


@pytest.mark.parametrize("backend", backends, ids=lambda b: b.__name__.rsplit(".", 1)[-1])
@pytest.mark.parametrize("q,n", [(2, 3), (2, 5), (2, 8), (3, 4), (4, 3), (5, 3), (8, 2), (9, 3)])
def test_covering_kernels_agree(backend, q, n):
    bf = base_field(q)
    ref = _kernels.python_backend
    assert backend.first_covering_hyperplane(q, n, bf.add_table, bf.mul_table) == \
        ref.first_covering_hyperplane(q, n, bf.add_table, bf.mul_table)
    for c in (1, 2):
        for M in list(rref_matrices(q, n, c))[:40]:
            rows = np.asarray(M, dtype=np.uint8)
            assert backend.first_uncovered(q, n, rows, bf.add_table, bf.mul_table) == \
                ref.first_uncovered(q, n, rows, bf.add_table, bf.mul_table)


def test_backend_name():
    assert _kernels.BACKEND in ("compiled", "python")


def test_pure_python_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, CYCLOCOVER_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import cyclocover; print(cyclocover.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
