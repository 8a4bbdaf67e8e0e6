"""Pure-Python (numpy-assisted) versions of the compiled kernels.

Same signatures and results as ``_ckernels``; selected automatically when
the extension is not built or ``CYCLOCOVER_PURE_PYTHON`` is set.
"""

from __future__ import annotations

from math import isqrt

import numpy as np


def _fq_matmul(A: np.ndarray, B: np.ndarray, add: np.ndarray, mul: np.ndarray) -> np.ndarray:
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.uint8)
    for k in range(A.shape[1]):
        out = add[out, mul[A[:, k][:, None], B[k][None, :]]]
    return out


def _lfsr_direct(taps, init, length, add, mul) -> np.ndarray:
    d = len(taps)
    add_l, mul_l = add.tolist(), mul.tolist()
    taps = [int(t) for t in taps]
    s = [int(v) for v in init]
    out = bytearray(length)
    for j in range(length):
        if j >= len(s):
            acc = 0
            base = j - d
            for k, tk in enumerate(taps):
                if tk:
                    acc = add_l[acc][mul_l[tk][s[base + k]]]
            s.append(acc)
        out[j] = 1 if s[j] else 0
    return np.frombuffer(bytes(out), dtype=np.uint8).copy()


def lfsr_nonzero_mask(taps, init, length, add, mul) -> np.ndarray:
    """Mask of nonzero terms of ``s[j+d] = sum_k taps[k] * s[j+k]`` over F_q.

    Long sequences are split into ~sqrt(length) lanes whose start states
    come from powers of the companion matrix; all lanes then advance
    together as numpy vectors.
    """
    add = np.asarray(add, dtype=np.uint8)
    mul = np.asarray(mul, dtype=np.uint8)
    taps = np.asarray(taps, dtype=np.int64).astype(np.uint8)
    d = len(taps)
    if length <= 1 << 14 or d == 0:
        return _lfsr_direct(taps, init, length, add, mul)
    steps = isqrt(length) + 1
    lanes = -(-length // steps)
    comp = np.zeros((d, d), dtype=np.uint8)
    comp[np.arange(d - 1), np.arange(1, d)] = 1
    comp[d - 1] = taps
    # jump = comp ** steps
    jump = np.eye(d, dtype=np.uint8)
    base, e = comp, steps
    while e:
        if e & 1:
            jump = _fq_matmul(jump, base, add, mul)
        e >>= 1
        if e:
            base = _fq_matmul(base, base, add, mul)
    states = np.zeros((d, lanes), dtype=np.uint8)
    states[:, 0] = np.asarray(init, dtype=np.uint8)
    filled, power = 1, jump
    while filled < lanes:
        take = min(filled, lanes - filled)
        states[:, filled:filled + take] = _fq_matmul(power, states[:, :take], add, mul)
        filled += take
        if filled < lanes:
            power = _fq_matmul(power, power, add, mul)
    out = np.zeros((lanes, steps), dtype=np.uint8)
    window = [states[k].copy() for k in range(d)]
    for step in range(steps):
        out[:, step] = window[0]
        acc = np.zeros(lanes, dtype=np.uint8)
        for k in range(d):
            if taps[k]:
                acc = add[acc, mul[taps[k], window[k]]]
        window = window[1:] + [acc]
    return (out.reshape(-1)[:length] != 0).astype(np.uint8)


def coset_scan(mask, m: int) -> int:
    """First j < N/m whose residues ``j + i*(N/m)`` are all nonzero, else -1."""
    mask = np.asarray(mask, dtype=np.uint8)
    ok = (mask.reshape(m, -1) != 0).all(axis=0)
    hits = np.flatnonzero(ok)
    return int(hits[0]) if hits.size else -1


def _scan(q, n, rows, add_l, mul_l, total) -> int:
    rows = [list(r) for r in rows]
    x = [0] * n
    for rank in range(total):
        xx = x + x
        hit = False
        for i in range(n):
            for row in rows:
                ip = 0
                for j in range(n):
                    ip = add_l[ip][mul_l[row[j]][xx[j - i + n]]]
                if ip:
                    break
            else:
                hit = True
                break
        if not hit:
            return rank
        t = 0
        while t < n:
            x[t] += 1
            if x[t] == q:
                x[t] = 0
                t += 1
            else:
                break
    return -1


def first_uncovered(q, n, rows, add, mul) -> int:
    """Rank of the first x with no shift sigma^i(x) in ker(rows), else -1."""
    rows = np.asarray(rows, dtype=np.uint8).reshape(-1, n).tolist()
    return _scan(q, n, rows, np.asarray(add).tolist(), np.asarray(mul).tolist(), q**n)


def first_covering_hyperplane(q, n, add, mul) -> int:
    """Rank of the first normalized dual vector whose hyperplane covers, else -1."""
    add_l, mul_l = np.asarray(add).tolist(), np.asarray(mul).tolist()
    total = q**n
    c = [0] * n
    for rank in range(1, total):
        t = 0
        while t < n:
            c[t] += 1
            if c[t] == q:
                c[t] = 0
                t += 1
            else:
                break
        if next(v for v in c if v) != 1:
            continue
        if _scan(q, n, [c], add_l, mul_l, total) == -1:
            return rank
    return -1
