"""Brute-force ground truth straight from the covering definition.

Nothing here uses the algebraic machinery: a subspace ``U = ker(A)`` covers
``F_q^n`` iff every x has some cyclic shift ``sigma^i(x)`` with ``A
sigma^i(x) = 0``, and that is checked vector by vector.

Vectors and dual vectors are enumerated by their base-q rank
``sum_j x_j q^j`` (coordinate 0 least significant).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Optional, Sequence

import numpy as np

from . import _kernels
from .budget import DEFAULT_BUDGET, Budget
from .cyclotomic import prime_power
from .errors import InvalidInput
from .finite_field import base_field


def cyclic_shift(x: Sequence, i: int = 1) -> tuple:
    """Rotate right by i: ``sigma(x_0, ..., x_{n-1}) = (x_{n-1}, x_0, ..., x_{n-2})``."""
    n = len(x)
    if n == 0:
        return ()
    i %= n
    return tuple(x[n - i:]) + tuple(x[: n - i])


def vector_from_rank(rank: int, q: int, n: int) -> tuple[int, ...]:
    out = []
    for _ in range(n):
        rank, r = divmod(rank, q)
        out.append(r)
    return tuple(out)


def vector_rank(x: Sequence[int], q: int) -> int:
    r = 0
    for c in reversed(x):
        r = r * q + c
    return r


def normalize(c: Sequence[int], q: int) -> tuple[int, ...]:
    """Scale c so that its first nonzero coordinate is 1."""
    bf = base_field(q)
    lead = next((v for v in c if v), 0)
    if lead == 0:
        raise InvalidInput("the zero vector does not define a hyperplane")
    s = bf.mul[bf.inv[lead]]
    return tuple(s[v] for v in c)


def _tables(q: int):
    prime_power(q)
    bf = base_field(q)
    return bf, bf.add_table, bf.mul_table


def find_uncovered(q: int, n: int, rows: Sequence[Sequence[int]], *, budget: Budget | None = None) -> Optional[tuple[int, ...]]:
    """First x (by rank) none of whose shifts lies in ``ker(rows)``, or None if it covers."""
    budget = budget or DEFAULT_BUDGET
    budget.check("oracle vector space q^n", q**n, budget.vectors)
    _, add, mul = _tables(q)
    rows = np.asarray(rows, dtype=np.uint8).reshape(-1, n)
    rank = _kernels.first_uncovered(q, n, rows, add, mul)
    return None if rank < 0 else vector_from_rank(rank, q, n)


def subspace_covers(q: int, n: int, rows: Sequence[Sequence[int]], *, budget: Budget | None = None) -> bool:
    """Is ``{x : rows @ x == 0}`` cyclically covering?"""
    return find_uncovered(q, n, rows, budget=budget) is None


def hyperplane_covers(q: int, n: int, c: Sequence[int], *, budget: Budget | None = None) -> bool:
    """Is the hyperplane ``{x : <c, x> = 0}`` cyclically covering?  c need not be normalized."""
    if len(c) != n:
        raise InvalidInput(f"dual vector has length {len(c)}, expected {n}")
    normalize(c, q)
    return subspace_covers(q, n, [list(c)], budget=budget)


def _sweep_cost(q: int, n: int, count: int) -> int:
    return count * q**n * n


def exists_covering_hyperplane(q: int, n: int, *, budget: Budget | None = None) -> Optional[tuple[int, ...]]:
    """First normalized dual vector (by rank) whose hyperplane covers, or None.

    None is equivalent to ``h_q(n) = 0``: if a proper subspace U covers, so
    does every hyperplane W containing U, because ``sigma^i(U)`` lies in
    ``sigma^i(W)``.
    """
    budget = budget or DEFAULT_BUDGET
    budget.check("oracle vector space q^n", q**n, budget.vectors)
    budget.check("hyperplane sweep", _sweep_cost(q, n, (q**n - 1) // (q - 1)), budget.sweep)
    _, add, mul = _tables(q)
    rank = _kernels.first_covering_hyperplane(q, n, add, mul)
    return None if rank < 0 else vector_from_rank(rank, q, n)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of ``F_q^n``."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def rref_matrices(q: int, n: int, c: int) -> Iterator[list[list[int]]]:
    """Every c x n matrix over ``F_q`` in reduced row-echelon form of rank c.

    Each c-dimensional subspace of ``F_q^n`` appears exactly once.
    """
    for pivots in combinations(range(n), c):
        pivot_set = set(pivots)
        free = [(r, j) for r, pc in enumerate(pivots) for j in range(pc + 1, n) if j not in pivot_set]
        for values in product(range(q), repeat=len(free)):
            M = [[0] * n for _ in range(c)]
            for r, pc in enumerate(pivots):
                M[r][pc] = 1
            for (r, j), v in zip(free, values):
                M[r][j] = v
            yield M


def find_covering_subspace(q: int, n: int, codim: int, *, budget: Budget | None = None) -> Optional[list[list[int]]]:
    """RREF dual basis of the first covering subspace of codimension ``codim``, or None."""
    budget = budget or DEFAULT_BUDGET
    budget.check("oracle vector space q^n", q**n, budget.vectors)
    budget.check("subspace sweep", _sweep_cost(q, n, gaussian_binomial(n, codim, q)), budget.sweep)
    _, add, mul = _tables(q)
    for M in rref_matrices(q, n, codim):
        if _kernels.first_uncovered(q, n, np.asarray(M, dtype=np.uint8), add, mul) < 0:
            return M
    return None


def exact_h_bruteforce(q: int, n: int, max_codim: int, *, budget: Budget | None = None) -> int:
    """Largest ``c <= max_codim`` with a covering subspace of codimension c (0 if none).

    Codimensions are tried upward and the search stops at the first one
    without a covering subspace: coverings are closed under enlarging the
    subspace, so none can exist above it.  With ``max_codim >= floor(log_q n)``
    the result is exactly ``h_q(n)``.
    """
    budget = budget or DEFAULT_BUDGET
    prime_power(q)
    if max_codim < 0:
        raise InvalidInput("max_codim must be non-negative")
    max_codim = min(max_codim, n - 1)
    # each codimension's budget is checked when the search reaches it
    best = 0
    for c in range(1, max_codim + 1):
        if find_covering_subspace(q, n, c, budget=budget) is None:
            break
        best = c
    return best


def floor_log(n: int, q: int) -> int:
    """``floor(log_q n)`` in exact integer arithmetic."""
    k, v = 0, q
    while v <= n:
        k += 1
        v *= q
    return k


@dataclass(frozen=True)
class OracleReport:
    q: int
    n: int
    witness: Optional[tuple[int, ...]]
    exact_h: Optional[int] = None

    @property
    def h_zero(self) -> bool:
        return self.witness is None
