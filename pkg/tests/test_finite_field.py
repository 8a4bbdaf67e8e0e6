"""Finite field arithmetic, trace, generators and irreducibility."""

from __future__ import annotations

from itertools import product

import pytest
from hypothesis import given, strategies as st

from cyclocover.cyclotomic import prime_factors
from cyclocover.errors import (
    DescriptorMismatch,
    DivisionByZero,
    NonMonic,
    NonPrimeCharacteristic,
    OrderUnavailable,
    ResourceExceeded,
)
from cyclocover.finite_field import (
    base_field,
    build_field,
    element_of_order,
    element_order,
    field_over,
    frobenius_trace,
    is_irreducible,
    multiplicative_generator,
    trace_to_base,
)

# every (p, e, d) with p^(e d) <= 2^16
SMALL_FIELDS = [
    (p, e, d)
    for p, e in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1)]
    for d in range(1, 17)
    if p ** (e * d) <= 1 << 16
]


def _naive_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return tuple(out)


def _reducible_set(p, d):
    """Monic degree-d polynomials over F_p that are products of lower-degree monics."""
    red = set()
    for a in range(1, d // 2 + 1):
        for g in product(range(p), repeat=a):
            for h in product(range(p), repeat=d - a):
                red.add(_naive_mul(g + (1,), h + (1,), p))
    return red


# -- construction ------------------------------------------------------------------------


def test_prime_field_modulus():
    F = build_field(2, 1, 1)
    assert F.order == 2 and F.d == 1 and F.ext_modulus == (0, 1)


def test_f4_modulus():
    assert build_field(2, 1, 2).ext_modulus == (1, 1, 1)


def test_f9_modulus_is_smallest_irreducible():
    expected = next(f for f in product(range(3), repeat=2)
                    if all((f[0] + f[1] * x + x * x) % 3 for x in range(3)))
    assert build_field(3, 1, 2).ext_modulus == expected + (1,)


def test_field_order():
    for p, e, d in SMALL_FIELDS:
        assert build_field(p, e, d).order == p ** (e * d)


def test_deterministic_construction():
    assert build_field(3, 1, 5).ext_modulus == build_field(3, 1, 5).ext_modulus


def test_nonprime_characteristic():
    with pytest.raises(NonPrimeCharacteristic):
        build_field(4, 1, 1)


def test_resource_bound():
    with pytest.raises(ResourceExceeded):
        build_field(2, 1, 30, max_order=1 << 24)


# -- arithmetic ---------------------------------------------------------------------------


def test_omega_squared():
    F = build_field(2, 1, 2)
    w = F.gen()
    assert w * w == w + 1


def test_inverse_of_one():
    for p, e, d in SMALL_FIELDS[:10]:
        F = build_field(p, e, d)
        assert F.one().inverse() == F.one()


def test_lagrange_in_f9():
    F = build_field(3, 1, 2)
    assert all(g ** 8 == F.one() for g in F.elements() if not g.is_zero())


def test_inverse_of_zero():
    F = build_field(2, 1, 3)
    with pytest.raises(DivisionByZero):
        F.zero().inverse()


def test_descriptor_mismatch():
    with pytest.raises(DescriptorMismatch):
        build_field(2, 1, 2).one() + build_field(2, 1, 3).one()


@st.composite
def field_triples(draw):
    p, e, d = draw(st.sampled_from(SMALL_FIELDS))
    F = build_field(p, e, d)
    elem = st.tuples(*[st.integers(0, F.q - 1)] * F.d).map(F.element)
    return draw(elem), draw(elem), draw(elem)


@given(field_triples())
def test_field_axioms(abc):
    a, b, c = abc
    F = a.field
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + F.zero() == a and a * F.one() == a
    assert a - a == F.zero()
    if not a.is_zero():
        assert a * a.inverse() == F.one()
        assert a ** (F.order - 1) == F.one()


# -- trace ------------------------------------------------------------------------------


def test_trace_f4():
    F = build_field(2, 1, 2)
    assert trace_to_base(F.zero()) == 0
    assert trace_to_base(F.gen()) == 1


def test_trace_degree_one_is_identity():
    for q in (2, 3, 4, 5, 7, 8, 9):
        F = field_over(q, 1)
        assert [trace_to_base(x) for x in F.elements()] == list(range(q))


@pytest.mark.parametrize("p,e,d", [f for f in SMALL_FIELDS if f[0] ** (f[1] * f[2]) <= 1 << 12])
def test_trace_properties(p, e, d):
    F = build_field(p, e, d)
    values = set()
    for x in F.elements():
        t = trace_to_base(x)
        values.add(t)
        assert trace_to_base(x ** F.q) == t
        # agrees with the literal Frobenius sum, which lies in F_q
        lit = frobenius_trace(x)
        assert lit == F.from_base(t)
        assert lit ** F.q == lit
    assert values == set(range(F.q))


def test_trace_linear():
    F = build_field(3, 1, 3)
    xs = list(F.elements())[::5]
    bf = F.base
    for x in xs:
        for y in xs:
            assert trace_to_base(x + y) == bf.add[trace_to_base(x)][trace_to_base(y)]
            assert trace_to_base(x * 2) == bf.mul[2][trace_to_base(x)]


# -- generators and orders -------------------------------------------------------------------


def test_generator_f2():
    assert multiplicative_generator(build_field(2, 1, 1)) == build_field(2, 1, 1).one()


def test_generator_f4():
    F = build_field(2, 1, 2)
    assert multiplicative_generator(F) == F.gen()


def test_generator_f9_smallest():
    F = build_field(3, 1, 2)
    gens = [x for x in F.elements() if not x.is_zero() and len({(x ** k).coeffs for k in range(8)}) == 8]
    assert multiplicative_generator(F) == gens[0]


def test_generator_index_is_increasing():
    F = build_field(2, 1, 5)
    gs = [multiplicative_generator(F, i).coeffs for i in range(3)]
    assert gs == sorted(gs) and len(set(gs)) == 3


def test_element_of_order_examples():
    F4 = build_field(2, 1, 2)
    assert element_of_order(F4, 3) == F4.gen()
    assert element_of_order(F4, 1) == F4.one()
    F9 = build_field(3, 1, 2)
    g = multiplicative_generator(F9)
    z = element_of_order(F9, 4)
    assert z == g ** 2
    assert z ** 4 == F9.one() and z ** 2 != F9.one()


def test_element_of_order_unavailable():
    with pytest.raises(OrderUnavailable):
        element_of_order(build_field(2, 1, 2), 5)


@pytest.mark.parametrize("q,d", [(2, 4), (2, 6), (3, 4), (4, 3), (5, 2), (7, 2), (9, 2)])
def test_element_of_order_exact(q, d):
    F = field_over(q, d)
    N = F.order - 1
    for m in [m for m in range(1, N + 1) if N % m == 0]:
        z = element_of_order(F, m)
        assert z ** m == F.one()
        for ell in prime_factors(m) if m > 1 else []:
            assert z ** (m // ell) != F.one()
        assert element_order(z) == m


# -- irreducibility ----------------------------------------------------------------------


def test_irreducible_examples():
    assert is_irreducible((1, 1, 1), 2)
    assert not is_irreducible((1, 0, 1), 2)
    assert is_irreducible((1, 0, 1), 3)


def test_irreducible_rejects_non_monic():
    with pytest.raises(NonMonic):
        is_irreducible((1, 1, 2), 3)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_irreducible_matches_factor_search(p):
    for d in range(1, 5):
        red = _reducible_set(p, d)
        for low in product(range(p), repeat=d):
            f = low + (1,)
            assert is_irreducible(f, p) == (f not in red), f


def test_irreducible_matches_factor_search_f4():
    bf = base_field(4)

    def mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                out[i + j] = bf.add[out[i + j]][bf.mul[x][y]]
        return tuple(out)

    for d in range(1, 4):
        red = {mul(g + (1,), h + (1,))
               for a in range(1, d // 2 + 1)
               for g in product(range(4), repeat=a)
               for h in product(range(4), repeat=d - a)}
        for low in product(range(4), repeat=d):
            f = low + (1,)
            assert is_irreducible(f, 4) == (f not in red)
