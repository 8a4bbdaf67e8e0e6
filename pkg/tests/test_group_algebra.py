from __future__ import annotations

import random
from math import gcd

import pytest

from cyclocover.cyclotomic import cyclotomic_cosets, p_part_split, prime_power
from cyclocover.errors import NotCoprime, ParameterMismatch, ZeroElement
from cyclocover.finite_field import base_field, build_field, field_over
from cyclocover.group_algebra import (
    BiGradedElement,
    GroupAlgebraElement,
    TruncatedPoly,
    check_idempotents,
    decompose_semisimple,
    gram_rank,
    hyperplane_count,
    psi,
    res_tr,
    shift_multiply,
    socle,
    universal_inverse,
    verification_report,
    verify_psi_iso,
)


def _component(q, m, rep):
    return next(c for c in decompose_semisimple(q, m) if c.coset.representative == rep)


# -- psi ----------------------------------------------------------------------------------


def test_psi_q2_n2():
    g = GroupAlgebraElement.monomial(2, 2, 1)
    assert psi(g, 2, 1, 1).coeffs == ((1, 1),)
    assert psi(g * g, 2, 1, 1).coeffs == ((1, 0),)


def test_psi_identity():
    for q, n in [(2, 6), (3, 9), (4, 12), (5, 10)]:
        p, _ = prime_power(q)
        s = p_part_split(n, p)
        img = psi(GroupAlgebraElement.identity(q, n), p, s.k, s.m)
        one = [[0] * s.p_power for _ in range(s.m)]
        one[0][0] = 1
        assert img.coeffs == tuple(map(tuple, one))


def test_psi_g_cubed_q2_n6():
    g3 = GroupAlgebraElement.monomial(2, 6, 3)
    assert psi(g3, 2, 1, 3).coeffs == ((1, 1), (0, 0), (0, 0))


def test_psi_parameter_mismatch():
    a = GroupAlgebraElement.identity(2, 6)
    with pytest.raises(ParameterMismatch):
        psi(a, 2, 2, 3)
    with pytest.raises(ParameterMismatch):
        psi(a, 3, 1, 2)


def test_psi_is_multiplicative_on_random_elements():
    rng = random.Random(3)
    for q, n in [(2, 12), (3, 6), (4, 8)]:
        p, _ = prime_power(q)
        s = p_part_split(n, p)
        for _ in range(20):
            a = GroupAlgebraElement(q, tuple(rng.randrange(q) for _ in range(n)))
            b = GroupAlgebraElement(q, tuple(rng.randrange(q) for _ in range(n)))
            assert psi(a * b, p, s.k, s.m) == psi(a, p, s.k, s.m) * psi(b, p, s.k, s.m)
            add = base_field(q).add
            lhs = psi(a + b, p, s.k, s.m).flat()
            rhs = [add[x][y] for x, y in zip(psi(a, p, s.k, s.m).flat(), psi(b, p, s.k, s.m).flat())]
            assert lhs == rhs


@pytest.mark.parametrize("q,n", [(2, 2), (2, 6), (3, 9), (2, 1), (5, 5)])
def test_verify_psi_iso_examples(q, n):
    rep = verify_psi_iso(q, n)
    assert rep.homomorphism_ok and rep.bijective


def test_bigraded_truncation():
    u = BiGradedElement(2, ((0, 1), (0, 0), (0, 0)))
    assert (u * u).coeffs == ((0, 0), (0, 0), (0, 0))
    h = BiGradedElement(2, ((0, 0), (1, 0), (0, 0)))
    assert (h * h * h).coeffs == ((1, 0), (0, 0), (0, 0))


# -- semisimple decomposition --------------------------------------------------------------


def test_decompose_q2_m3():
    comps = decompose_semisimple(2, 3)
    assert [c.factor for c in comps] == [(1, 1), (1, 1, 1)]


def test_decompose_q2_m1():
    (c,) = decompose_semisimple(2, 1)
    assert c.factor == (1, 1) and c.field.order == 2


def test_decompose_q3_m4():
    comps = decompose_semisimple(3, 4)
    by_rep = {c.coset.representative: c.factor for c in comps}
    # x - 1, x + 1, x^2 + 1 over F_3
    assert by_rep == {0: (2, 1), 2: (1, 1), 1: (1, 0, 1)}
    assert {c.coset.members: c.degree for c in comps} == {(0,): 1, (2,): 1, (1, 3): 2}


def test_decompose_not_coprime():
    with pytest.raises(NotCoprime):
        decompose_semisimple(3, 6)


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9])
def test_idempotents(q):
    for m in range(1, 31):
        if gcd(m, q) != 1:
            continue
        comps = decompose_semisimple(q, m)
        assert check_idempotents(q, m, comps)
        assert [c.coset for c in comps] == cyclotomic_cosets(q, m)
        for c in comps:
            assert c.degree == c.coset.size
            # theta_t is a root of f_t of order m_t
            assert c.theta ** c.subgroup_order == c.field.one()


def test_theta_powers_match_cosets():
    # the root of f_t is theta^{k_t} for one fixed theta
    q, m = 2, 21
    comps = decompose_semisimple(q, m)
    theta_field = comps[1].field
    theta = comps[1].theta
    for c in comps:
        root = theta ** c.coset.representative
        val = theta_field.zero()
        for k, coef in enumerate(c.factor):
            if coef:
                val = val + root ** k
        assert val.is_zero()
    assert comps[1].degree == 6


# -- A_t ----------------------------------------------------------------------------------


def test_res_tr_examples():
    F4 = build_field(2, 1, 2)
    w = F4.gen()
    assert res_tr(TruncatedPoly.monomial(w, 1, 2)) == 1
    # Tr(1) = d_t
    for q, d, L in [(2, 3, 2), (3, 2, 3), (5, 2, 1)]:
        F = field_over(q, d)
        assert res_tr(socle(F, L)) == d % F.p
    a = TruncatedPoly.monomial(w, 0, 2)
    assert res_tr(a) == 0


def test_res_tr_linear():
    rng = random.Random(1)
    F = field_over(3, 2)
    for _ in range(50):
        a = TruncatedPoly.random(rng, F, 3)
        b = TruncatedPoly.random(rng, F, 3)
        assert res_tr(a + b) == F.base.add[res_tr(a)][res_tr(b)]


def test_gram_rank_examples():
    assert gram_rank(field_over(2, 1), 1) == 1
    assert gram_rank(field_over(2, 2), 2) == 4
    assert gram_rank(field_over(3, 1), 3) == 3


@pytest.mark.parametrize("q", [2, 3, 4, 5])
def test_gram_rank_full(q):
    p, _ = prime_power(q)
    for n in range(1, 33):
        s = p_part_split(n, p)
        for comp in decompose_semisimple(q, s.m):
            dim = comp.degree * s.p_power
            if dim <= 64:
                assert gram_rank(comp.field, s.p_power) == dim


def test_universal_inverse_examples():
    F4 = build_field(2, 1, 2)
    w = F4.gen()
    assert universal_inverse(socle(F4, 2)) == TruncatedPoly.monomial(F4.one(), 0, 2)
    assert universal_inverse(TruncatedPoly.monomial(F4.one(), 0, 2)) == socle(F4, 2)
    c = TruncatedPoly([w, F4.one()], F4)
    v = universal_inverse(c)
    assert v == TruncatedPoly.monomial(w * w, 1, 2)
    assert c * v == socle(F4, 2)


def test_universal_inverse_zero():
    with pytest.raises(ZeroElement):
        universal_inverse(TruncatedPoly.zero(field_over(2, 2), 4))


def test_universal_inverse_random():
    rng = random.Random(11)
    for q, m, L in [(2, 7, 4), (3, 8, 3), (4, 5, 2), (5, 3, 5)]:
        for comp in decompose_semisimple(q, m):
            for _ in range(200):
                c = TruncatedPoly.random(rng, comp.field, L)
                if not c.is_zero():
                    assert c * universal_inverse(c) == socle(comp.field, L)


def test_shift_multiply_identity_powers():
    rng = random.Random(5)
    q, n = 2, 12
    s = p_part_split(n, 2)
    for comp in decompose_semisimple(q, s.m):
        a = TruncatedPoly.random(rng, comp.field, s.p_power)
        assert shift_multiply(a, 0, comp) == a
        assert shift_multiply(a, n, comp) == a
        assert shift_multiply(shift_multiply(a, 5, comp), -5, comp) == a


def test_shift_on_socle():
    for q, n in [(2, 12), (3, 18), (4, 20), (5, 15)]:
        p, _ = prime_power(q)
        s = p_part_split(n, p)
        for comp in decompose_semisimple(q, s.m):
            soc = socle(comp.field, s.p_power)
            for i in range(n):
                assert shift_multiply(soc, i, comp) == soc * comp.theta ** i


def test_residue_trace_of_shift():
    rng = random.Random(9)
    for q, n in [(2, 12), (3, 6), (4, 10)]:
        p, _ = prime_power(q)
        s = p_part_split(n, p)
        for comp in decompose_semisimple(q, s.m):
            soc = socle(comp.field, s.p_power)
            for _ in range(10):
                b = TruncatedPoly.random(rng, comp.field, s.p_power)
                for i in range(n):
                    assert res_tr(soc * shift_multiply(b, i, comp)) == (comp.theta ** i * b.coeffs[0]).trace()


@pytest.mark.parametrize("q,d,L", [(2, 1, 4), (2, 2, 2), (2, 4, 4), (2, 3, 4), (3, 2, 3), (4, 1, 4), (2, 2, 8)])
def test_hyperplane_count(q, d, L):
    got, want = hyperplane_count(field_over(q, d), L)
    assert got == want


@pytest.mark.parametrize("q,n", [(2, 6), (2, 2), (3, 9), (4, 12), (5, 10)])
def test_verification_report(q, n):
    checks = verification_report(q, n, samples=200)
    assert checks and all(c.passed for c in checks), [c for c in checks if not c.passed]


def test_functional_matches_products():
    from cyclocover.group_algebra import _basis, functional

    rng = random.Random(2)
    F = field_over(3, 2)
    bf = F.base
    for _ in range(30):
        c = TruncatedPoly.random(rng, F, 3)
        if c.is_zero():
            continue
        vals = [res_tr(c * b) for b in _basis(F, 3)]
        lead = next(v for v in vals if v)
        assert functional(c) == tuple(bf.mul[bf.inv[lead]][v] for v in vals)
