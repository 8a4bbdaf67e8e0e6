"""Exact arithmetic in ``F_q = F_{p^e}`` and its extensions ``F_{q^d}``.

``F_q`` is table driven (:class:`BaseField`); its elements are ints whose
base-p digits are the coefficients over ``F_p`` (little-endian), so the prime
subfield is ``0 .. p-1``.  An extension ``F_{q^d}`` (:class:`FieldDescriptor`)
stores elements as length-d tuples of ``F_q`` ints, little-endian in the
root of the extension modulus.

Moduli are the lexicographically smallest monic irreducibles, comparing
coefficients from the constant term upward, so every construction is
reproducible.
"""

from __future__ import annotations

from functools import cached_property, lru_cache
from itertools import product
from typing import Iterator, Sequence

import numpy as np

from . import polynomial as P
from .budget import DEFAULT_BUDGET
from .cyclotomic import factorize, is_prime, prime_factors, prime_power
from .errors import (
    DescriptorMismatch,
    DivisionByZero,
    InvalidInput,
    NonPrimeCharacteristic,
    OrderUnavailable,
    ResourceExceeded,
)

#: largest q for which q x q operation tables are built
MAX_TABLE_Q = 256


class BaseField:
    """``F_q`` with precomputed operation tables."""

    def __init__(self, p: int, modulus: Sequence[int] = (0, 1)):
        self.p = p
        self.modulus = tuple(modulus)
        self.e = len(self.modulus) - 1
        self.q = p**self.e
        q = self.q
        if q > MAX_TABLE_Q:
            raise ResourceExceeded(f"q={q} exceeds table bound {MAX_TABLE_Q}")
        if self.e == 1:
            self.add = [[(a + b) % p for b in range(q)] for a in range(q)]
            self.mul = [[(a * b) % p for b in range(q)] for a in range(q)]
        else:
            prime = BaseField(p)
            digits = [self._digits(a) for a in range(q)]
            self.add = [[self._undigits([(x + y) % p for x, y in zip(digits[a], digits[b])])
                         for b in range(q)] for a in range(q)]
            self.mul = [[self._undigits(P.mod(prime, P.mul(prime, P.trim(digits[a]),
                                                           P.trim(digits[b])), self.modulus))
                         for b in range(q)] for a in range(q)]
        self.neg = [self.add[a].index(0) for a in range(q)]
        self.inv = [0] + [self.mul[a].index(1) for a in range(1, q)]
        self.sub = [[self.add[a][self.neg[b]] for b in range(q)] for a in range(q)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.e):
            a, r = divmod(a, self.p)
            out.append(r)
        return out

    def _undigits(self, ds: Sequence[int]) -> int:
        a = 0
        for c in reversed(ds):
            a = a * self.p + c
        return a

    @cached_property
    def add_table(self) -> np.ndarray:
        return np.array(self.add, dtype=np.uint8)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return np.array(self.mul, dtype=np.uint8)

    def embed_int(self, k: int) -> int:
        """Image of the integer k in the prime subfield."""
        return k % self.p

    def __eq__(self, other: object) -> bool:
        return isinstance(other, BaseField) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        return f"BaseField(q={self.q}, modulus={self.modulus})"


@lru_cache(maxsize=None)
def base_field(q: int) -> BaseField:
    """``F_q`` built on the smallest irreducible of degree e over ``F_p``."""
    p, e = prime_power(q)
    if q > MAX_TABLE_Q:
        raise ResourceExceeded(f"q={q} exceeds table bound {MAX_TABLE_Q}")
    if e == 1:
        return BaseField(p)
    return BaseField(p, P.smallest_irreducible(BaseField(p), e))


class FieldDescriptor:
    """The field ``F_q[x] / (ext_modulus)`` of order ``q**d``."""

    def __init__(self, base: BaseField, ext_modulus: Sequence[int], *, check: bool = True):
        self.base = base
        self.ext_modulus = tuple(ext_modulus)
        if check and not P.is_irreducible(base, self.ext_modulus):
            raise InvalidInput(f"{self.ext_modulus} is not irreducible over F_{base.q}")
        self.p, self.e, self.q = base.p, base.e, base.q
        self.d = len(self.ext_modulus) - 1
        self.order = self.q**self.d
        d = self.d
        # x^k mod f for k = d .. 2d-2, as fixed-length rows
        self._reduce_rows = []
        r = tuple(P.neg(base, self.ext_modulus[:d]))
        cur = self._pad(r)
        for _ in range(max(d - 1, 0)):
            self._reduce_rows.append(cur)
            cur = self._pad(P.mod(base, (0,) + P.trim(cur), self.ext_modulus))

    @property
    def base_modulus(self) -> tuple[int, ...]:
        return self.base.modulus

    def _pad(self, a: Sequence[int]) -> tuple[int, ...]:
        return tuple(a) + (0,) * (self.d - len(a))

    # -- raw arithmetic on coefficient tuples ---------------------------------

    def _add(self, a, b):
        t = self.base.add
        return tuple(t[x][y] for x, y in zip(a, b))

    def _sub(self, a, b):
        t = self.base.sub
        return tuple(t[x][y] for x, y in zip(a, b))

    def _neg(self, a):
        t = self.base.neg
        return tuple(t[x] for x in a)

    def _scale(self, a, c: int):
        row = self.base.mul[c]
        return tuple(row[x] for x in a)

    def _mul(self, a, b):
        d = self.d
        addt, mult = self.base.add, self.base.mul
        out = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            row = mult[ai]
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = addt[out[i + j]][row[bj]]
        for k in range(2 * d - 2, d - 1, -1):
            c = out[k]
            if c:
                row = mult[c]
                red = self._reduce_rows[k - d]
                for j in range(d):
                    if red[j]:
                        out[j] = addt[out[j]][row[red[j]]]
        return tuple(out[:d])

    def _pow(self, a, e: int):
        if e < 0:
            a, e = self._inv(a), -e
        result = self._one
        while e:
            if e & 1:
                result = self._mul(result, a)
            e >>= 1
            if e:
                a = self._mul(a, a)
        return result

    def _inv(self, a):
        if not any(a):
            raise DivisionByZero("inverse of zero")
        return self._pad(P.invmod(self.base, P.trim(a), self.ext_modulus))

    @cached_property
    def _one(self):
        return self._pad((1,))

    @cached_property
    def _zero(self):
        return (0,) * self.d

    @cached_property
    def trace_vector(self) -> tuple[int, ...]:
        """``Tr(x^k)`` for k < 2d - 1, from Newton's identities on the modulus."""
        bf, f, d = self.base, self.ext_modulus, self.d
        add, mul, neg = bf.add, bf.mul, bf.neg
        ps = [bf.embed_int(d)]
        for k in range(1, 2 * d - 1):
            acc = 0
            if k <= d:
                for j in range(1, k):
                    acc = add[acc][mul[f[d - j]][ps[k - j]]]
                acc = add[acc][mul[bf.embed_int(k)][f[d - k]]]
            else:
                for j in range(d):
                    acc = add[acc][mul[f[j]][ps[k - d + j]]]
            ps.append(neg[acc])
        return tuple(ps)

    def _trace(self, a) -> int:
        add, mul = self.base.add, self.base.mul
        acc = 0
        for c, t in zip(a, self.trace_vector):
            if c and t:
                acc = add[acc][mul[c][t]]
        return acc

    # -- element construction -------------------------------------------------

    def element(self, coeffs: Sequence[int]) -> "FieldElement":
        coeffs = tuple(coeffs)
        if len(coeffs) != self.d or any(not 0 <= c < self.q for c in coeffs):
            raise InvalidInput(f"bad coefficients {coeffs} for degree {self.d} over F_{self.q}")
        return FieldElement(coeffs, self)

    def _wrap(self, coeffs) -> "FieldElement":
        return FieldElement(tuple(coeffs), self)

    def zero(self) -> "FieldElement":
        return self._wrap(self._zero)

    def one(self) -> "FieldElement":
        return self._wrap(self._one)

    def from_base(self, c: int) -> "FieldElement":
        """Embed the ``F_q`` element c."""
        return self._wrap(self._pad((c,)) if self.d else ())

    def gen(self) -> "FieldElement":
        """The class of x, a root of the extension modulus."""
        return self._wrap(self._pad(P.mod(self.base, (0, 1), self.ext_modulus)))

    def elements(self) -> Iterator["FieldElement"]:
        """All elements, coefficient tuples in lexicographic order."""
        for c in product(range(self.q), repeat=self.d):
            yield FieldElement(c, self)

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "e": self.e,
            "d": self.d,
            "base_modulus": list(self.base_modulus),
            "ext_modulus": list(self.ext_modulus),
        }

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldDescriptor) and (self.base, self.ext_modulus) == (
            other.base,
            other.ext_modulus,
        )

    def __hash__(self) -> int:
        return hash((self.base, self.ext_modulus))

    def __repr__(self) -> str:
        return f"FieldDescriptor(q={self.q}, d={self.d}, ext_modulus={self.ext_modulus})"


class FieldElement:
    """An element of an extension field; immutable."""

    __slots__ = ("coeffs", "field")

    def __init__(self, coeffs: tuple[int, ...], field: FieldDescriptor):
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def __reduce__(self):
        return (FieldElement, (self.coeffs, self.field))

    def _other(self, other) -> tuple[int, ...]:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise DescriptorMismatch(f"{self.field} vs {other.field}")
            return other.coeffs
        if isinstance(other, int):
            return self.field.from_base(self.field.base.embed_int(other)).coeffs
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return self.field._wrap(self.field._add(self.coeffs, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return self.field._wrap(self.field._sub(self.coeffs, o))

    def __rsub__(self, other):
        o = self._other(other)
        return self.field._wrap(self.field._sub(o, self.coeffs))

    def __neg__(self):
        return self.field._wrap(self.field._neg(self.coeffs))

    def __mul__(self, other):
        o = self._other(other)
        return self.field._wrap(self.field._mul(self.coeffs, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return self.field._wrap(self.field._mul(self.coeffs, self.field._inv(o)))

    def __pow__(self, e: int):
        return self.field._wrap(self.field._pow(self.coeffs, e))

    def inverse(self) -> "FieldElement":
        return self.field._wrap(self.field._inv(self.coeffs))

    def trace(self) -> int:
        return self.field._trace(self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self) -> bool:
        return any(self.coeffs)

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.coeffs == other.coeffs and self.field == other.field
        if isinstance(other, int):
            return self.coeffs == self.field.from_base(self.field.base.embed_int(other)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.coeffs, self.field))

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coeffs)}, q={self.field.q}, d={self.field.d})"


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise NonPrimeCharacteristic(f"{p} is not prime")


@lru_cache(maxsize=None)
def _extension(p: int, e: int, d: int) -> FieldDescriptor:
    bf = base_field(p**e)
    return FieldDescriptor(bf, P.smallest_irreducible(bf, d), check=False)


def build_field(p: int, e: int = 1, d: int = 1, *, max_order: int | None = DEFAULT_BUDGET.field_order) -> FieldDescriptor:
    """Construct ``F_{q^d}`` with ``q = p**e``.

    Raises:
        NonPrimeCharacteristic: p is composite.
        ResourceExceeded: ``p**(e*d)`` is above ``max_order`` (None disables the bound).
    """
    _check_prime(p)
    if e < 1 or d < 1:
        raise InvalidInput("degrees must be positive")
    if max_order is not None and p ** (e * d) > max_order:
        raise ResourceExceeded(f"field order {p}^{e * d} exceeds budget {max_order}")
    return _extension(p, e, d)


def field_over(q: int, d: int, *, max_order: int | None = DEFAULT_BUDGET.field_order) -> FieldDescriptor:
    p, e = prime_power(q)
    return build_field(p, e, d, max_order=max_order)


def trace_to_base(x: FieldElement) -> int:
    """``Tr_{F_{q^d}/F_q}(x)`` as an ``F_q`` int."""
    return x.trace()


def is_irreducible(poly: Sequence[int], q: int) -> bool:
    """Irreducibility of a monic polynomial over ``F_q`` (coefficients little-endian)."""
    return P.is_irreducible(base_field(q), tuple(poly))


def element_order(x: FieldElement) -> int:
    if x.is_zero():
        raise DivisionByZero("zero has no multiplicative order")
    f = x.field
    n = f.order - 1
    for ell in prime_factors(n) if n > 1 else []:
        while n % ell == 0 and (x ** (n // ell)).coeffs == f._one:
            n //= ell
    return n


def _has_order(x, f: FieldDescriptor, m: int) -> bool:
    if f._pow(x, m) != f._one:
        return False
    return all(f._pow(x, m // ell) != f._one for ell in (prime_factors(m) if m > 1 else []))


@lru_cache(maxsize=None)
def _generators(f: FieldDescriptor, count: int) -> tuple[FieldElement, ...]:
    n = f.order - 1
    found = []
    for c in product(range(f.q), repeat=f.d):
        if any(c) and _has_order(c, f, n):
            found.append(FieldElement(c, f))
            if len(found) == count:
                break
    return tuple(found)


def multiplicative_generator(f: FieldDescriptor, index: int = 0) -> FieldElement:
    """Smallest (lexicographically) element of order ``q^d - 1``.

    ``index`` selects the next ones in the same order; used to show that
    results do not depend on the choice.
    """
    gens = _generators(f, index + 1)
    if len(gens) <= index:
        raise InvalidInput(f"field has fewer than {index + 1} generators")
    return gens[index]


def element_of_order(f: FieldDescriptor, m: int, generator_index: int = 0) -> FieldElement:
    """``gamma ** ((q^d - 1) / m)`` for the canonical generator gamma."""
    n = f.order - 1
    if m < 1 or n % m:
        raise OrderUnavailable(f"{m} does not divide {n}")
    return multiplicative_generator(f, generator_index) ** (n // m)


def primitive_root_of_unity(f: FieldDescriptor, m: int) -> FieldElement:
    """An element of exact order m found without a multiplicative generator.

    Tries ``z ** ((q^d - 1) / m)`` for z in lexicographic order.  Only the
    factorization of m is needed, so this also works for fields far too
    large to enumerate.
    """
    n = f.order - 1
    if m < 1 or n % m:
        raise OrderUnavailable(f"{m} does not divide {n}")
    s = n // m
    for c in product(range(f.q), repeat=f.d):
        if any(c):
            t = f._pow(c, s)
            if _has_order(t, f, m):
                return FieldElement(t, f)
    raise AssertionError("cyclic group has no element of the requested order")  # pragma: no cover


def minimal_polynomial(x: FieldElement) -> tuple[int, ...]:
    """Monic minimal polynomial of x over ``F_q`` (little-endian ``F_q`` ints)."""
    f = x.field
    conj = [x.coeffs]
    while True:
        nxt = f._pow(conj[-1], f.q)
        if nxt == conj[0]:
            break
        conj.append(nxt)
    poly = [f._one]
    for c in conj:
        nc = f._neg(c)
        shifted = [f._zero] + poly
        for k in range(len(poly)):
            shifted[k] = f._add(shifted[k], f._mul(nc, poly[k]))
        poly = shifted
    if any(any(a[1:]) for a in poly):
        raise AssertionError("minimal polynomial has coefficients outside F_q")
    return tuple(a[0] for a in poly)


def frobenius_trace(x: FieldElement) -> FieldElement:
    """``sum_{i<d} x^(q^i)`` computed literally, as an element of the extension."""
    f = x.field
    acc = f.zero()
    y = x
    for _ in range(f.d):
        acc = acc + y
        y = y ** f.q
    return acc


__all__ = [
    "BaseField",
    "FieldDescriptor",
    "FieldElement",
    "base_field",
    "build_field",
    "field_over",
    "trace_to_base",
    "is_irreducible",
    "element_order",
    "multiplicative_generator",
    "element_of_order",
    "primitive_root_of_unity",
    "minimal_polynomial",
    "frobenius_trace",
]
