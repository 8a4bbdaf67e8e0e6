"""Univariate polynomials over a small finite field ``F_q``.

Polynomials are tuples of coefficients, little-endian (index i holds the
coefficient of x^i), with no trailing zeros; the zero polynomial is ``()``.
Coefficients are ``F_q`` elements encoded as ints; every function takes the
coefficient field ``bf`` (a :class:`~cyclocover.finite_field.BaseField`)
for its add/mul/neg/inv tables.
"""

from __future__ import annotations

from itertools import product
from typing import Sequence

from .errors import DivisionByZero, NonMonic

Poly = tuple[int, ...]


def trim(a: Sequence[int]) -> Poly:
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def degree(a: Poly) -> int:
    return len(a) - 1


def add(bf, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    tab = bf.add
    out = list(a)
    for i, c in enumerate(b):
        out[i] = tab[out[i]][c]
    return trim(out)


def neg(bf, a: Poly) -> Poly:
    return tuple(bf.neg[c] for c in a)


def sub(bf, a: Poly, b: Poly) -> Poly:
    return add(bf, a, neg(bf, b))


def scale(bf, a: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    row = bf.mul[c]
    return tuple(row[x] for x in a)


def mul(bf, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    addt, mult = bf.add, bf.mul
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        row = mult[ai]
        for j, bj in enumerate(b):
            if bj:
                out[i + j] = addt[out[i + j]][row[bj]]
    return trim(out)


def divmod_(bf, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    db = len(b) - 1
    if len(a) - 1 < db:
        return (), a
    addt, mult, negt = bf.add, bf.mul, bf.neg
    lead_inv = bf.inv[b[-1]]
    r = list(a)
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1, db - 1, -1):
        c = r[k]
        if c == 0:
            continue
        c = mult[c][lead_inv]
        quot[k - db] = c
        nc = mult[negt[c]]
        for j in range(db + 1):
            if b[j]:
                r[k - db + j] = addt[r[k - db + j]][nc[b[j]]]
    return trim(quot), trim(r[:db])


def mod(bf, a: Poly, b: Poly) -> Poly:
    return divmod_(bf, a, b)[1]


def monic(bf, a: Poly) -> Poly:
    if not a:
        return a
    return scale(bf, a, bf.inv[a[-1]])


def gcd(bf, a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (``()`` only if both inputs are zero)."""
    while b:
        a, b = b, mod(bf, a, b)
    return monic(bf, a)


def egcd(bf, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return ``(g, s, t)`` with ``s*a + t*b == g`` and g monic."""
    r0, r1 = a, b
    s0, s1 = (1,), ()
    t0, t1 = (), (1,)
    while r1:
        qt, r = divmod_(bf, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(bf, s0, mul(bf, qt, s1))
        t0, t1 = t1, sub(bf, t0, mul(bf, qt, t1))
    if not r0:
        return (), (), ()
    c = bf.inv[r0[-1]]
    return scale(bf, r0, c), scale(bf, s0, c), scale(bf, t0, c)


def invmod(bf, a: Poly, f: Poly) -> Poly:
    g, s, _ = egcd(bf, mod(bf, a, f), f)
    if g != (1,):
        raise DivisionByZero("polynomial is not invertible modulo f")
    return mod(bf, s, f)


def mulmod(bf, a: Poly, b: Poly, f: Poly) -> Poly:
    return mod(bf, mul(bf, a, b), f)


def powmod(bf, a: Poly, e: int, f: Poly) -> Poly:
    if e < 0:
        return powmod(bf, invmod(bf, a, f), -e, f)
    result: Poly = mod(bf, (1,), f)
    base = mod(bf, a, f)
    while e:
        if e & 1:
            result = mulmod(bf, result, base, f)
        e >>= 1
        if e:
            base = mulmod(bf, base, base, f)
    return result


def evaluate(bf, a: Poly, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = bf.add[bf.mul[acc][x]][c]
    return acc


def compose_mod(bf, f: Poly, g: Poly, modulus: Poly) -> Poly:
    """``f(g(x)) mod modulus`` by Horner's rule."""
    acc: Poly = ()
    for c in reversed(f):
        acc = add(bf, mulmod(bf, acc, g, modulus), (c,) if c else ())
    return acc


def x_power_minus_one(bf, m: int) -> Poly:
    return trim((bf.neg[1],) + (0,) * (m - 1) + (1,))


def is_irreducible(bf, f: Poly) -> bool:
    """Ben-Or test: f has no factor of degree <= deg f / 2.

    Iterates ``h = x^(q^i) mod f`` and checks ``gcd(h - x, f) == 1`` for
    ``i = 1 .. deg f // 2``; aborts at the first shared factor.
    """
    if not f or f[-1] != 1:
        raise NonMonic(f"polynomial {f} is not monic")
    d = len(f) - 1
    if d < 1:
        raise NonMonic("degree must be at least 1")
    if d == 1:
        return True
    if f[0] == 0:
        return False
    x: Poly = mod(bf, (0, 1), f)
    h = x
    for _ in range(d // 2):
        h = powmod(bf, h, bf.q, f)
        if gcd(bf, sub(bf, h, x), f) != (1,):
            return False
    return True


def monic_polys(q: int, d: int):
    """All monic polynomials of degree d, coefficients compared low-degree first."""
    for low in product(range(q), repeat=d):
        yield tuple(low) + (1,)


def smallest_irreducible(bf, d: int) -> Poly:
    """Lexicographically smallest monic irreducible of degree d (low-degree first)."""
    if d == 1:
        return (0, 1)
    # a zero constant term means x divides f
    for c0 in range(1, bf.q):
        for rest in product(range(bf.q), repeat=d - 1):
            f = (c0,) + rest + (1,)
            if is_irreducible(bf, f):
                return f
    raise AssertionError(f"no irreducible polynomial of degree {d}")  # pragma: no cover
