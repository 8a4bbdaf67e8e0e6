"""Integer-side combinatorics: p-part splits, q-cyclotomic cosets, orders.

All moduli handled here are desk-scale, so factorization is plain trial
division.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import InvalidQ, NotCoprime, InvalidInput


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``n >= 1`` by trial division."""
    if n < 1:
        raise InvalidInput(f"cannot factor {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return factorize(n) == {n: 1}


def prime_power(q: int) -> tuple[int, int]:
    """Return ``(p, e)`` with ``q == p**e``; raise :class:`InvalidQ` otherwise."""
    if not isinstance(q, int) or q < 2:
        raise InvalidQ(f"q={q!r} is not a prime power")
    f = factorize(q)
    if len(f) != 1:
        raise InvalidQ(f"q={q} is not a prime power")
    ((p, e),) = f.items()
    return p, e


def divisors(n: int) -> list[int]:
    out = [1]
    for p, e in factorize(n).items():
        out = [d * p**i for d in out for i in range(e + 1)]
    return sorted(out)


@dataclass(frozen=True)
class PPartSplit:
    """``n = p**k * m`` with ``gcd(m, p) == 1``."""

    n: int
    p: int
    k: int
    m: int

    @property
    def p_power(self) -> int:
        return self.p**self.k


def p_part_split(n: int, p: int) -> PPartSplit:
    if n < 1:
        raise InvalidInput(f"n must be positive, got {n}")
    k, m = 0, n
    while m % p == 0:
        m //= p
        k += 1
    return PPartSplit(n=n, p=p, k=k, m=m)


def multiplicative_order(q: int, m: int) -> int:
    """Smallest ``d >= 1`` with ``q**d == 1 (mod m)``; 1 when ``m == 1``."""
    if m < 1:
        raise InvalidInput(f"modulus must be positive, got {m}")
    if gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    if m == 1:
        return 1
    d, x = 1, q % m
    while x != 1:
        x = x * q % m
        d += 1
    return d


@dataclass(frozen=True)
class CyclotomicCoset:
    """One orbit ``{k * q**i mod m}`` of multiplication by q on Z_m."""

    representative: int
    members: tuple[int, ...]
    modulus: int

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def subgroup_order(self) -> int:
        """Multiplicative order of the corresponding root power: ``m / gcd(m, k)``."""
        return self.modulus // gcd(self.modulus, self.representative)


def cyclotomic_cosets(q: int, m: int) -> list[CyclotomicCoset]:
    """Partition of ``{0, ..., m-1}`` into q-orbits, sorted by their minima."""
    if m < 1:
        raise InvalidInput(f"modulus must be positive, got {m}")
    if gcd(q, m) != 1:
        raise NotCoprime(f"gcd({q}, {m}) != 1")
    seen = [False] * m
    out = []
    for k in range(m):
        if seen[k]:
            continue
        orbit = []
        x = k
        while not seen[x]:
            seen[x] = True
            orbit.append(x)
            x = x * q % m
        out.append(CyclotomicCoset(representative=k, members=tuple(sorted(orbit)), modulus=m))
    return out
