from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, strategies as st

from cyclocover.budget import Budget
from cyclocover.errors import InvalidInput, ResourceExceeded
from cyclocover.finite_field import base_field
from cyclocover.oracle import (
    cyclic_shift,
    exact_h_bruteforce,
    exists_covering_hyperplane,
    find_covering_subspace,
    floor_log,
    gaussian_binomial,
    hyperplane_covers,
    normalize,
    rref_matrices,
    subspace_covers,
)


def _union_covers(q, n, rows):
    """Union of the shifted kernels, computed as sets."""
    bf = base_field(q)

    def dot(r, x):
        acc = 0
        for a, b in zip(r, x):
            acc = bf.add[acc][bf.mul[a][b]]
        return acc

    U = [x for x in product(range(q), repeat=n) if all(dot(r, x) == 0 for r in rows)]
    union = {cyclic_shift(x, i) for x in U for i in range(n)}
    return len(union) == q**n


# -- shifts -------------------------------------------------------------------------------


def test_shift_examples():
    assert cyclic_shift((1, 0, 0)) == (0, 1, 0)
    assert cyclic_shift((4, 5, 6), 0) == (4, 5, 6)
    assert cyclic_shift((4, 5, 6), 3) == (4, 5, 6)
    assert cyclic_shift((1, 2, 3, 4), -1) == (2, 3, 4, 1)


@given(st.lists(st.integers(0, 8), min_size=1, max_size=12), st.integers(-30, 30))
def test_shift_group_law(x, i):
    n = len(x)
    assert cyclic_shift(cyclic_shift(x, i), -i) == tuple(x)
    assert cyclic_shift(x, n) == tuple(x)


# -- hyperplanes ---------------------------------------------------------------------------


def test_hyperplane_examples():
    assert hyperplane_covers(2, 3, (1, 1, 0))
    assert not hyperplane_covers(2, 3, (1, 1, 1))
    assert not hyperplane_covers(2, 2, (1, 0))


def test_zero_dual_rejected():
    with pytest.raises(InvalidInput):
        hyperplane_covers(2, 3, (0, 0, 0))


@pytest.mark.parametrize("q,n", [(2, 3), (2, 4), (2, 5), (3, 3), (3, 4), (4, 3), (5, 2), (2, 6)])
def test_hyperplane_matches_set_union(q, n):
    for c in product(range(q), repeat=n):
        if any(c):
            assert hyperplane_covers(q, n, c) == _union_covers(q, n, [c])


@pytest.mark.parametrize("q,n", [(2, 5), (3, 4), (4, 3), (2, 7)])
def test_shift_and_scalar_invariance(q, n):
    bf = base_field(q)
    for c in product(range(q), repeat=n):
        if not any(c):
            continue
        v = hyperplane_covers(q, n, c)
        assert hyperplane_covers(q, n, cyclic_shift(c)) == v
        for s in range(1, q):
            assert hyperplane_covers(q, n, tuple(bf.mul[s][x] for x in c)) == v


def test_exists_covering_hyperplane_examples():
    assert exists_covering_hyperplane(2, 2) is None
    assert exists_covering_hyperplane(2, 3) == (1, 1, 0)
    assert exists_covering_hyperplane(2, 4) is None


def test_witness_is_normalized_and_covers():
    for q, n in [(2, 5), (4, 5), (2, 9), (2, 7)]:
        w = exists_covering_hyperplane(q, n)
        assert w is not None
        assert normalize(w, q) == w
        assert _union_covers(q, n, [w])


def test_normalize():
    assert normalize((0, 2, 1), 3) == (0, 1, 2)
    with pytest.raises(InvalidInput):
        normalize((0, 0), 3)


def test_budget():
    with pytest.raises(ResourceExceeded):
        exists_covering_hyperplane(2, 12, budget=Budget(vectors=1 << 10))
    with pytest.raises(ResourceExceeded):
        exists_covering_hyperplane(2, 12, budget=Budget(sweep=1 << 20))


# -- subspaces -----------------------------------------------------------------------------


@pytest.mark.parametrize("q,n,c", [(2, 4, 2), (3, 3, 1), (2, 5, 3), (4, 3, 2)])
def test_rref_enumeration_counts(q, n, c):
    mats = [tuple(map(tuple, M)) for M in rref_matrices(q, n, c)]
    assert len(mats) == len(set(mats)) == gaussian_binomial(n, c, q)


def test_exact_h_examples():
    assert exact_h_bruteforce(2, 4, 2) == 0
    assert exact_h_bruteforce(2, 3, 1) == 1
    assert exact_h_bruteforce(2, 5, 2) == 2


@pytest.mark.parametrize("q,n", [(2, 5), (2, 6), (2, 7), (3, 4), (3, 5)])
def test_subspace_matches_set_union(q, n):
    for M in list(rref_matrices(q, n, 2))[:60]:
        assert subspace_covers(q, n, M) == _union_covers(q, n, M)


@pytest.mark.parametrize("q,n", [(2, 5), (2, 6), (2, 7), (2, 9)])
def test_monotonicity(q, n):
    M = find_covering_subspace(q, n, 2)
    if M is None:
        pytest.skip("no covering codimension-2 subspace")
    # each hyperplane containing ker(M) is cut out by a nonzero combination of the rows
    bf = base_field(q)
    for a, b in product(range(q), repeat=2):
        if (a, b) == (0, 0):
            continue
        c = [bf.add[bf.mul[a][x]][bf.mul[b][y]] for x, y in zip(*M)]
        assert hyperplane_covers(q, n, c)


def test_exact_h_bounded_by_log():
    for q, n in [(2, 3), (2, 5), (2, 6), (2, 7), (3, 4), (3, 5), (4, 5)]:
        k = floor_log(n, q)
        assert exact_h_bruteforce(q, n, k) <= k


def test_floor_log():
    assert [floor_log(n, 2) for n in (1, 2, 3, 4, 7, 8)] == [0, 1, 1, 2, 2, 3]
    assert floor_log(9, 3) == 2 and floor_log(8, 3) == 1
