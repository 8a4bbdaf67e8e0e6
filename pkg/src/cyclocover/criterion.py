"""Deciding ``h_q(n) = 0``.

The p-part of n is stripped (``n = p^k m``) and the coprime trace criterion
is applied to m: for every q-cyclotomic coset mod m, with ``m_t`` the order
of the corresponding root power and ``F = F_{q^{d_t}}``, some coset of the
order-``m_t`` subgroup of ``F^x`` must avoid the kernel of the trace to
``F_q``.

Each subgroup check runs on one of two exact routes:

``enumerate``
    Walks the trace sequence ``Tr(gamma^j)`` over the discrete logarithms of
    the canonical generator gamma (an LFSR whose taps are gamma's minimal
    polynomial) and scans the cosets ``gamma^j <theta>`` in order.  The first
    passing j gives the witness ``gamma^j``.
``weight-enumerator``
    For fields too large to enumerate.  The vectors
    ``(Tr(beta theta^i))_{i < m_t}`` form a linear code of dimension d_t;
    a passing coset is a codeword with no zero entry.  Their number is
    obtained exactly from the dual code by the MacWilliams identity, so only
    ``q^(m_t - d_t)`` dual words are enumerated.
``information-set``
    Same code.  A full-weight word is nonzero on every pivot of the reduced
    generator matrix and may be scaled to start with 1, so only
    ``(q - 1)^(d_t - 1)`` words are candidates (one when q = 2).

``sampled``
    Tries ``2^16`` seeded random beta and stops at the first full-weight
    word.  It can only certify a pass; a miss falls through to the exact
    routes.

Fields up to the budget use ``enumerate``.  Beyond it the cheaper of
``weight-enumerator`` and ``information-set`` is taken, preceded by
``sampled`` whenever that exact cost is above ``2^16``.
"""

from __future__ import annotations

import random
from itertools import product
from dataclasses import dataclass, field, replace
from functools import lru_cache
from math import gcd
from typing import Optional

import numpy as np

from . import _kernels, linalg
from .budget import DEFAULT_BUDGET, Budget
from .cyclotomic import (
    CyclotomicCoset,
    PPartSplit,
    cyclotomic_cosets,
    multiplicative_order,
    p_part_split,
    prime_power,
)
from .errors import InvalidInput, NotCoprime, ResourceExceeded
from .finite_field import (
    FieldDescriptor,
    FieldElement,
    field_over,
    minimal_polynomial,
    multiplicative_generator,
    primitive_root_of_unity,
)

EXACT_ROUTES = ("enumerate", "weight-enumerator", "information-set")
ROUTES = EXACT_ROUTES + ("sampled",)
_WITNESS_ATTEMPTS = 20000
_SAMPLE_ATTEMPTS = 1 << 16


@dataclass(frozen=True)
class CosetVerdict:
    """Outcome of the trace check for one cyclotomic coset (or one subgroup order)."""

    subgroup_order: int
    field: FieldDescriptor
    passes: bool
    witness: Optional[FieldElement] = None
    #: ``(beta, i)`` with ``Tr(beta * theta^i) == 0`` for the subgroup coset of beta = 1
    counterexample: Optional[tuple[FieldElement, int]] = None
    route: str = "trivial"
    theta: Optional[FieldElement] = None
    coset: Optional[CyclotomicCoset] = None

    def to_dict(self) -> dict:
        out: dict = {}
        if self.coset is not None:
            out.update(
                representative=self.coset.representative,
                members=list(self.coset.members),
                size=self.coset.size,
            )
        out.update(
            subgroup_order=self.subgroup_order,
            passes=self.passes,
            route=self.route,
            field=self.field.to_dict(),
            theta=list(self.theta.coeffs) if self.theta is not None else None,
            witness=list(self.witness.coeffs) if self.witness is not None else None,
            counterexample=(
                {"beta": list(self.counterexample[0].coeffs), "i": self.counterexample[1]}
                if self.counterexample is not None
                else None
            ),
        )
        return out


@dataclass(frozen=True)
class DecisionRecord:
    q: int
    n: int
    split: PPartSplit
    verdict: bool
    coset_verdicts: tuple[CosetVerdict, ...] = field(default_factory=tuple)
    method: str = "criterion"

    @property
    def failing_coset_rep(self) -> Optional[int]:
        for cv in self.coset_verdicts:
            if not cv.passes:
                return cv.coset.representative if cv.coset else None
        return None

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "n": self.n,
            "split": {"n": self.split.n, "p": self.split.p, "k": self.split.k, "m": self.split.m},
            "h_zero": self.verdict,
            "method": self.method,
            "failing_coset_rep": self.failing_coset_rep,
            "cosets": [cv.to_dict() for cv in self.coset_verdicts],
        }


def _traces_along(F: FieldDescriptor, beta, theta, count: int) -> list[int]:
    out, cur = [], beta
    for _ in range(count):
        out.append(F._trace(cur))
        cur = F._mul(cur, theta)
    return out


def _enumerate_route(q: int, m_t: int, d: int, budget: Budget, generator_index: int) -> CosetVerdict:
    F = field_over(q, d, max_order=budget.field_order)
    bf = F.base
    gamma = multiplicative_generator(F, generator_index)
    N = F.order - 1
    s = N // m_t
    theta = gamma ** s
    minpoly = minimal_polynomial(gamma)
    taps = np.array([bf.neg[c] for c in minpoly[:-1]], dtype=np.int64)
    init = _traces_along(F, F._one, gamma.coeffs, d)
    mask = _kernels.lfsr_nonzero_mask(taps, init, N, bf.add_table, bf.mul_table)
    j = _kernels.coset_scan(mask, m_t)
    if j >= 0:
        witness = gamma ** j
        traces = _traces_along(F, witness.coeffs, theta.coeffs, m_t)
        if not all(traces):
            raise AssertionError(f"kernel witness gamma^{j} fails direct trace check")
        return CosetVerdict(m_t, F, True, witness=witness, route="enumerate", theta=theta)
    i0 = next(i for i in range(m_t) if not mask[i * s])
    if F._trace(F._pow(theta.coeffs, i0)) != 0:
        raise AssertionError("kernel counterexample fails direct trace check")
    return CosetVerdict(m_t, F, False, counterexample=(F.one(), i0), route="enumerate", theta=theta)


def _codeword_words(bf, basis: list[list[int]], length: int, limit: int) -> np.ndarray:
    """Weight histogram of the span of ``basis`` (exhaustive)."""
    add, mul = bf.add_table, bf.mul_table
    q = bf.q
    r = len(basis)
    if q**r > limit:
        raise ResourceExceeded(f"dual code has {q}^{r} words, budget {limit}")
    head = 0
    while head < r and q ** (head + 1) <= 1 << 16:
        head += 1
    block = np.zeros((1, length), dtype=np.uint8)
    for h in basis[:head]:
        hv = np.asarray(h, dtype=np.uint8)
        block = np.concatenate([add[block, mul[a, hv][None, :]] for a in range(q)])
    hist = np.zeros(length + 1, dtype=np.int64)
    tail = basis[head:]
    tail_arr = [np.asarray(h, dtype=np.uint8) for h in tail]
    for coeffs in product(range(q), repeat=len(tail)):
        offset = np.zeros(length, dtype=np.uint8)
        for a, hv in zip(coeffs, tail_arr):
            if a:
                offset = add[offset, mul[a, hv]]
        words = add[block, offset[None, :]]
        hist += np.bincount(np.count_nonzero(words, axis=1), minlength=length + 1)
    return hist


def _trace_code(q: int, m_t: int, d: int):
    """Generator matrix ``G[j][i] = Tr(x^j theta^i)`` of the trace code, with theta of order m_t."""
    F = field_over(q, d, max_order=None)
    bf = F.base
    add, mul = bf.add, bf.mul
    theta = primitive_root_of_unity(F, m_t)
    tv = F.trace_vector
    powers, cur = [], F._one
    for _ in range(m_t):
        powers.append(cur)
        cur = F._mul(cur, theta.coeffs)
    # Tr(x^j v) = sum_l v_l Tr(x^(j+l))
    G = []
    for j in range(d):
        row = []
        for v in powers:
            acc = 0
            for l, c in enumerate(v):
                if c:
                    acc = add[acc][mul[c][tv[j + l]]]
            row.append(acc)
        G.append(row)
    return F, theta, G


def _witness_from_word(F: FieldDescriptor, theta, G, c) -> FieldElement:
    b = linalg.solve_left(F.base, G, c)
    witness = F.element(b)
    if _traces_along(F, witness.coeffs, theta.coeffs, len(c)) != list(c):
        raise AssertionError("reconstructed witness has the wrong trace pattern")
    return witness


def _failing(F: FieldDescriptor, theta, G, route: str) -> CosetVerdict:
    # the word of beta = 1 has a zero like every other word
    i0 = next(i for i, t in enumerate(G[0]) if t == 0)
    return CosetVerdict(len(G[0]), F, False, counterexample=(F.one(), i0), route=route, theta=theta)


def _weight_enumerator_route(q: int, m_t: int, d: int, budget: Budget) -> CosetVerdict:
    F, theta, G = _trace_code(q, m_t, d)
    bf = F.base
    dual = linalg.nullspace(bf, G, m_t)
    if len(dual) != m_t - d:
        raise AssertionError("trace code does not have full dimension")
    hist = _codeword_words(bf, dual, m_t, budget.field_order)
    total = sum(int(hist[w]) * (q - 1) ** (m_t - w) * (-1) ** w for w in range(m_t + 1))
    full_weight, rem = divmod(total, q ** len(dual))
    if rem:
        raise AssertionError("MacWilliams count is not integral")
    if full_weight == 0:
        return _failing(F, theta, G, "weight-enumerator")
    R, _ = linalg.rref(bf, G)
    rng = random.Random(f"{q}:{m_t}")
    witness = None
    for _ in range(_WITNESS_ATTEMPTS):
        a = [rng.randrange(1, q) for _ in range(d)]
        c = linalg.combine(bf, a, R, m_t)
        if all(c):
            witness = _witness_from_word(F, theta, G, c)
            break
    if witness is None:  # full-weight words exist but are rare
        witness = _information_set_route(q, m_t, d).witness
    return CosetVerdict(m_t, F, True, witness=witness, route="weight-enumerator", theta=theta)


def _information_set_route(q: int, m_t: int, d: int) -> CosetVerdict:
    F, theta, G = _trace_code(q, m_t, d)
    bf = F.base
    R, _ = linalg.rref(bf, G)
    if len(R) != d:
        raise AssertionError("trace code does not have full dimension")
    add, mul = bf.add_table, bf.mul_table
    rows = [np.asarray(r, dtype=np.uint8) for r in R]
    # a full-weight word is nonzero on the pivots; scaling fixes the first one to 1
    head = 1
    while head < d and (q - 1) ** head <= 1 << 16:
        head += 1
    block = rows[0][None, :]
    for r in rows[1:head]:
        block = np.concatenate([add[block, mul[a, r][None, :]] for a in range(1, q)])
    for coeffs in product(range(1, q), repeat=d - head):
        offset = np.zeros(m_t, dtype=np.uint8)
        for a, r in zip(coeffs, rows[head:]):
            offset = add[offset, mul[a, r]]
        words = add[block, offset[None, :]]
        full = np.flatnonzero(np.all(words != 0, axis=1))
        if full.size:
            c = [int(v) for v in words[full[0]]]
            return CosetVerdict(m_t, F, True, witness=_witness_from_word(F, theta, G, c),
                                route="information-set", theta=theta)
    return _failing(F, theta, G, "information-set")


def _sampled_route(q: int, m_t: int, d: int, attempts: int) -> Optional[CosetVerdict]:
    """Look for a full-weight trace word among random beta; None if none is hit."""
    F, theta, G = _trace_code(q, m_t, d)
    add, mul = F.base.add_table, F.base.mul_table
    rows = np.asarray(G, dtype=np.uint8)
    rng = np.random.default_rng([q, m_t])
    batch = 1 << 12
    for _ in range(0, attempts, batch):
        a = rng.integers(0, q, size=(batch, d), dtype=np.uint8)
        words = np.zeros((batch, m_t), dtype=np.uint8)
        for j in range(d):
            words = add[words, mul[a[:, j][:, None], rows[j][None, :]]]
        full = np.flatnonzero(np.all(words != 0, axis=1))
        if full.size:
            c = [int(v) for v in words[full[0]]]
            return CosetVerdict(m_t, F, True, witness=_witness_from_word(F, theta, G, c),
                                route="sampled", theta=theta)
    return None


def _pick_route(q: int, m_t: int, d: int, budget: Budget) -> str:
    if q**d <= budget.field_order:
        return "enumerate"
    costs = {"weight-enumerator": q ** (m_t - d), "information-set": (q - 1) ** (d - 1)}
    route = min(costs, key=costs.__getitem__)
    if costs[route] > _SAMPLE_ATTEMPTS and _sampled_route(q, m_t, d, _SAMPLE_ATTEMPTS):
        return "sampled"
    if costs[route] > budget.field_order:
        raise ResourceExceeded(
            f"subgroup order {m_t}: field q^{d}, dual code q^{m_t - d} and "
            f"information set (q-1)^{d - 1} all exceed budget {budget.field_order}"
        )
    return route


@lru_cache(maxsize=4096)
def _check(q: int, m_t: int, budget: Budget, generator_index: int, route: Optional[str]) -> CosetVerdict:
    if m_t == 1 and route is None:
        F = field_over(q, 1)
        return CosetVerdict(1, F, True, witness=F.one(), route="trivial", theta=F.one())
    d = multiplicative_order(q, m_t)
    if route is None:
        route = _pick_route(q, m_t, d, budget)
    if route == "enumerate":
        return _enumerate_route(q, m_t, d, budget, generator_index)
    if route == "weight-enumerator":
        return _weight_enumerator_route(q, m_t, d, budget)
    if route == "information-set":
        return _information_set_route(q, m_t, d)
    if route == "sampled":
        cv = _sampled_route(q, m_t, d, _SAMPLE_ATTEMPTS)
        if cv is None:
            raise ResourceExceeded(f"subgroup order {m_t}: sampling found no full-weight word")
        return cv
    raise InvalidInput(f"unknown route {route!r}")


def coset_trace_nonvanishing(
    q: int,
    m_t: int,
    *,
    budget: Budget | None = None,
    generator_index: int = 0,
    route: str | None = None,
) -> CosetVerdict:
    """Does some coset of the order-``m_t`` subgroup of ``F_{q^{d_t}}^x`` avoid trace zero?

    Args:
        q: prime power.
        m_t: subgroup order, coprime to q.
        budget: enumeration bounds.
        generator_index: use the (index+1)-th smallest generator (enumerate route).
        route: force one of :data:`ROUTES`; by default ``enumerate`` when the
            field fits the budget, else the cheaper of the other two.
    """
    prime_power(q)
    if m_t < 1:
        raise InvalidInput("subgroup order must be positive")
    if gcd(m_t, q) != 1:
        raise NotCoprime(f"gcd({m_t}, {q}) != 1")
    return _check(q, m_t, budget or DEFAULT_BUDGET, generator_index, route)


def h_zero_coprime(q: int, m: int, *, budget: Budget | None = None, generator_index: int = 0) -> DecisionRecord:
    p, _ = prime_power(q)
    if m < 1:
        raise InvalidInput("m must be positive")
    if gcd(m, q) != 1:
        raise NotCoprime(f"gcd({m}, {q}) != 1")
    verdicts = []
    for coset in cyclotomic_cosets(q, m):
        cv = coset_trace_nonvanishing(
            q, coset.subgroup_order, budget=budget, generator_index=generator_index
        )
        verdicts.append(replace(cv, coset=coset))
    return DecisionRecord(
        q=q,
        n=m,
        split=p_part_split(m, p),
        verdict=all(v.passes for v in verdicts),
        coset_verdicts=tuple(verdicts),
    )


def h_zero(q: int, n: int, *, budget: Budget | None = None, generator_index: int = 0) -> DecisionRecord:
    """Decide whether ``F_q^n`` has no proper cyclically covering subspace."""
    p, _ = prime_power(q)
    if not isinstance(n, int) or n < 1:
        raise InvalidInput(f"n must be a positive integer, got {n!r}")
    split = p_part_split(n, p)
    rec = h_zero_coprime(q, split.m, budget=budget, generator_index=generator_index)
    return replace(rec, n=n, split=split)
