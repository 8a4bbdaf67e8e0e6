"""The cyclic group algebra ``F_q G`` and its decomposition.

With ``n = p^k m`` and ``gcd(m, p) = 1``:

* ``F_q G = F_q[x]/(x^n - 1)`` (:class:`GroupAlgebraElement`),
* ``psi`` identifies it with ``F_q H[u]/(u^{p^k})`` for ``|H| = m``
  (:class:`BiGradedElement`) by ``g -> h(1 + u)``,
* ``F_q H`` splits by the CRT over the irreducible factors ``f_t`` of
  ``x^m - 1``, giving components ``A_t = F_{q^{d_t}}[u]/(u^{p^k})``
  (:class:`TruncatedPoly`) on which g acts as ``theta_t (1 + u)``.

The module also carries the executable checks of the structural facts used
by the criterion: nondegeneracy of the residue trace form, the universal
inverse, the action of g on the socle ``u^{p^k - 1}``, and the
parametrization of hyperplanes of ``A_t``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import comb, gcd
from typing import Optional, Sequence

from . import linalg
from . import polynomial as P
from .budget import DEFAULT_BUDGET, Budget
from .cyclotomic import (
    CyclotomicCoset,
    cyclotomic_cosets,
    multiplicative_order,
    p_part_split,
    prime_factors,
    prime_power,
)
from .errors import InvalidInput, NotCoprime, ParameterMismatch, ZeroElement
from .finite_field import BaseField, FieldDescriptor, FieldElement, base_field


# -- F_q G ---------------------------------------------------------------------


@dataclass(frozen=True)
class GroupAlgebraElement:
    """``sum_i coeffs[i] g^i`` in ``F_q C_n``."""

    q: int
    coeffs: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @classmethod
    def monomial(cls, q: int, n: int, i: int = 1) -> "GroupAlgebraElement":
        c = [0] * n
        c[i % n] = 1
        return cls(q, tuple(c))

    @classmethod
    def identity(cls, q: int, n: int) -> "GroupAlgebraElement":
        return cls.monomial(q, n, 0)

    def _check(self, other: "GroupAlgebraElement") -> None:
        if self.q != other.q or self.n != other.n:
            raise ParameterMismatch("group algebra elements over different (q, n)")

    def __add__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        add = base_field(self.q).add
        return GroupAlgebraElement(self.q, tuple(add[a][b] for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "GroupAlgebraElement") -> "GroupAlgebraElement":
        self._check(other)
        bf = base_field(self.q)
        n = self.n
        out = [0] * n
        for i, a in enumerate(self.coeffs):
            if a:
                row = bf.mul[a]
                for j, b in enumerate(other.coeffs):
                    if b:
                        k = (i + j) % n
                        out[k] = bf.add[out[k]][row[b]]
        return GroupAlgebraElement(self.q, tuple(out))


@dataclass(frozen=True)
class BiGradedElement:
    """``sum coeffs[i][j] h^i u^j`` in ``F_q H[u]/(u^{p^k})`` with ``|H| = m``."""

    q: int
    coeffs: tuple[tuple[int, ...], ...]

    @property
    def m(self) -> int:
        return len(self.coeffs)

    @property
    def p_power(self) -> int:
        return len(self.coeffs[0])

    def flat(self) -> list[int]:
        return [c for row in self.coeffs for c in row]

    def __mul__(self, other: "BiGradedElement") -> "BiGradedElement":
        if (self.q, self.m, self.p_power) != (other.q, other.m, other.p_power):
            raise ParameterMismatch("bigraded elements over different parameters")
        bf = base_field(self.q)
        add, mul = bf.add, bf.mul
        m, L = self.m, self.p_power
        out = [[0] * L for _ in range(m)]
        terms = [(i, j, c) for i, row in enumerate(other.coeffs) for j, c in enumerate(row) if c]
        for i1, row in enumerate(self.coeffs):
            for j1, a in enumerate(row):
                if not a:
                    continue
                ra = mul[a]
                for i2, j2, b in terms:
                    j = j1 + j2
                    if j < L:
                        tgt = out[(i1 + i2) % m]
                        tgt[j] = add[tgt[j]][ra[b]]
        return BiGradedElement(self.q, tuple(tuple(r) for r in out))


def _check_split(q: int, n: int, p: int, k: int, m: int) -> None:
    char, _ = prime_power(q)
    if p != char:
        raise ParameterMismatch(f"p={p} is not the characteristic of F_{q}")
    if k < 0 or m < 1 or p**k * m != n or m % p == 0:
        raise ParameterMismatch(f"n={n} is not p^k*m with p={p}, k={k}, m={m} and p not dividing m")


def psi_monomial(q: int, i: int, p: int, k: int, m: int) -> BiGradedElement:
    """Image of ``g^i``: ``h^(i mod m) (1 + u)^i`` truncated below ``u^{p^k}``."""
    L = p**k
    rows = [[0] * L for _ in range(m)]
    rows[i % m] = [comb(i, j) % p for j in range(L)]
    return BiGradedElement(q, tuple(tuple(r) for r in rows))


def psi(a: GroupAlgebraElement, p: int, k: int, m: int) -> BiGradedElement:
    """The isomorphism ``F_q C_n -> F_q H[u]/(u^{p^k})`` determined by ``g -> h(1 + u)``.

    Raises:
        ParameterMismatch: ``n != p^k m``, p divides m, or p is not the characteristic.
    """
    _check_split(a.q, a.n, p, k, m)
    bf = base_field(a.q)
    L = p**k
    out = [[0] * L for _ in range(m)]
    for i, c in enumerate(a.coeffs):
        if not c:
            continue
        img = psi_monomial(a.q, i, p, k, m).coeffs[i % m]
        row = out[i % m]
        for j, b in enumerate(img):
            if b:
                row[j] = bf.add[row[j]][bf.mul[c][b]]
    return BiGradedElement(a.q, tuple(tuple(r) for r in out))


@dataclass(frozen=True)
class PsiReport:
    homomorphism_ok: bool
    bijective: bool

    @property
    def ok(self) -> bool:
        return self.homomorphism_ok and self.bijective


def verify_psi_iso(q: int, n: int, *, budget: Budget | None = None) -> PsiReport:
    """Check psi on all pairs of basis monomials and the rank of its matrix."""
    budget = budget or DEFAULT_BUDGET
    p, _ = prime_power(q)
    if n < 1:
        raise InvalidInput("n must be positive")
    budget.check("psi basis pairs", n * n, budget.vectors)
    s = p_part_split(n, p)
    images = [psi_monomial(q, i, p, s.k, s.m) for i in range(n)]
    hom = all(
        images[(a + b) % n] == images[a] * images[b] for a in range(n) for b in range(n)
    )
    bij = linalg.rank(base_field(q), [img.flat() for img in images]) == n
    return PsiReport(hom, bij)


# -- semisimple part -------------------------------------------------------------


@dataclass(frozen=True)
class Component:
    """One simple factor ``F_q[x]/(f_t)`` of ``F_q[x]/(x^m - 1)``.

    ``theta`` is the class of x in ``field``; it is ``theta^{k_t}`` for a fixed
    primitive m-th root theta, and has order ``coset.subgroup_order``.
    """

    index: int
    coset: CyclotomicCoset
    factor: tuple[int, ...]
    idempotent: tuple[int, ...]
    field: FieldDescriptor
    theta: FieldElement

    @property
    def degree(self) -> int:
        return self.field.d

    @property
    def subgroup_order(self) -> int:
        return self.coset.subgroup_order


def _split_by(bf: BaseField, factors: list, s: tuple) -> list:
    out = []
    for f in factors:
        if len(f) <= 2:
            out.append(f)
            continue
        r = P.mod(bf, s, f)
        parts = []
        for a in range(bf.q):
            g = P.gcd(bf, f, P.sub(bf, r, (a,) if a else ()))
            if len(g) > 1:
                parts.append(g)
        out.extend(parts)
    return out


def _has_root_order(bf: BaseField, f: tuple, m: int) -> bool:
    x = (0, 1)
    if P.powmod(bf, x, m, f) != (1,):
        return False
    return all(P.powmod(bf, x, m // ell, f) != (1,) for ell in (prime_factors(m) if m > 1 else []))


def decompose_semisimple(q: int, m: int) -> list[Component]:
    """Factor ``x^m - 1`` over ``F_q`` and build the CRT components.

    Factors are separated by the cyclotomic coset sums ``sum_{j in Gamma} x^j``,
    which span the Berlekamp subalgebra of ``F_q[x]/(x^m - 1)``.  Theta is x
    modulo the lexicographically smallest factor whose root has order m, and
    component t is the factor vanishing at ``theta^{k_t}``.  Components are
    listed in coset order.

    Raises:
        NotCoprime: ``gcd(m, q) > 1``.
    """
    prime_power(q)
    if m < 1:
        raise InvalidInput("m must be positive")
    if gcd(m, q) != 1:
        raise NotCoprime(f"gcd({m}, {q}) != 1")
    bf = base_field(q)
    cosets = cyclotomic_cosets(q, m)
    xm1 = P.x_power_minus_one(bf, m)
    factors = [xm1]
    for c in cosets:
        s = P.trim([1 if j in c.members else 0 for j in range(max(c.members) + 1)])
        factors = _split_by(bf, factors, s)
    if len(factors) != len(cosets) or not all(P.is_irreducible(bf, f) for f in factors):
        raise AssertionError("coset sums failed to split x^m - 1")

    D = multiplicative_order(q, m)
    f1 = min(f for f in factors if len(f) - 1 == D and _has_root_order(bf, f, m))
    comps = []
    for t, c in enumerate(cosets):
        root = P.powmod(bf, (0, 1), c.representative, f1)
        matches = [f for f in factors if not P.compose_mod(bf, f, root, f1)]
        if len(matches) != 1 or len(matches[0]) - 1 != c.size:
            raise AssertionError(f"no unique factor for coset {c.representative}")
        f = matches[0]
        cof = P.divmod_(bf, xm1, f)[0]
        e = P.mod(bf, P.mul(bf, cof, P.invmod(bf, cof, f)), xm1)
        F = FieldDescriptor(bf, f)
        comps.append(Component(t, c, f, e, F, F.gen()))
    return comps


def check_idempotents(q: int, m: int, components: Optional[list[Component]] = None) -> bool:
    """``e_s e_t = 0`` for s != t, ``e_t^2 = e_t``, ``sum e_t = 1`` and ``prod f_t = x^m - 1``."""
    bf = base_field(q)
    comps = components if components is not None else decompose_semisimple(q, m)
    xm1 = P.x_power_minus_one(bf, m)
    prod: tuple = (1,)
    total: tuple = ()
    for a in comps:
        prod = P.mul(bf, prod, a.factor)
        total = P.add(bf, total, a.idempotent)
        for b in comps:
            e = P.mulmod(bf, a.idempotent, b.idempotent, xm1)
            if e != (a.idempotent if a.index == b.index else ()):
                return False
    return prod == xm1 and P.mod(bf, total, xm1) == P.mod(bf, (1,), xm1)


# -- A_t = F_{q^d}[u]/(u^{p^k}) ----------------------------------------------------


class TruncatedPoly:
    """``sum_l coeffs[l] u^l`` with ``u^{p^k} = 0`` and coefficients in a field."""

    __slots__ = ("coeffs", "field", "component")

    def __init__(self, coeffs: Sequence[FieldElement], field: FieldDescriptor, component: int = 0):
        self.coeffs = tuple(coeffs)
        self.field = field
        self.component = component

    @classmethod
    def zero(cls, field: FieldDescriptor, p_power: int, component: int = 0) -> "TruncatedPoly":
        return cls([field.zero()] * p_power, field, component)

    @classmethod
    def monomial(cls, c: FieldElement, ell: int, p_power: int, component: int = 0) -> "TruncatedPoly":
        """``c u^ell`` (zero when ell >= p_power)."""
        F = c.field
        out = [F.zero()] * p_power
        if ell < p_power:
            out[ell] = c
        return cls(out, F, component)

    @classmethod
    def random(cls, rng: random.Random, field: FieldDescriptor, p_power: int, component: int = 0) -> "TruncatedPoly":
        return cls(
            [field._wrap(tuple(rng.randrange(field.q) for _ in range(field.d))) for _ in range(p_power)],
            field,
            component,
        )

    @property
    def p_power(self) -> int:
        return len(self.coeffs)

    def _check(self, other: "TruncatedPoly") -> None:
        if self.field != other.field or self.p_power != other.p_power:
            raise ParameterMismatch("truncated polynomials from different components")

    def __add__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check(other)
        return TruncatedPoly([a + b for a, b in zip(self.coeffs, other.coeffs)], self.field, self.component)

    def __sub__(self, other: "TruncatedPoly") -> "TruncatedPoly":
        self._check(other)
        return TruncatedPoly([a - b for a, b in zip(self.coeffs, other.coeffs)], self.field, self.component)

    def __mul__(self, other) -> "TruncatedPoly":
        F = self.field
        if isinstance(other, FieldElement):
            return TruncatedPoly([a * other for a in self.coeffs], F, self.component)
        self._check(other)
        L = self.p_power
        out = [F._zero] * L
        rhs = [(j, b.coeffs) for j, b in enumerate(other.coeffs) if any(b.coeffs)]
        for i, a in enumerate(self.coeffs):
            if not any(a.coeffs):
                continue
            for j, b in rhs:
                if i + j >= L:
                    break
                out[i + j] = F._add(out[i + j], F._mul(a.coeffs, b))
        return TruncatedPoly([F._wrap(c) for c in out], F, self.component)

    def valuation(self) -> int:
        """Smallest l with a nonzero ``u^l`` coefficient."""
        for ell, c in enumerate(self.coeffs):
            if not c.is_zero():
                return ell
        raise ZeroElement("zero has no valuation")

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def base_coords(self) -> list[int]:
        """Coordinates over ``F_q`` in the basis ``x^i u^l`` (l-major)."""
        return [c for a in self.coeffs for c in a.coeffs]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedPoly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.coeffs, self.field))

    def __repr__(self) -> str:
        return f"TruncatedPoly({[c.coeffs for c in self.coeffs]}, t={self.component})"


def socle(field: FieldDescriptor, p_power: int, component: int = 0) -> TruncatedPoly:
    """``u^{p^k - 1}``."""
    return TruncatedPoly.monomial(field.one(), p_power - 1, p_power, component)


def res_tr(a: TruncatedPoly) -> int:
    """Residue trace: the field trace of the ``u^{p^k - 1}`` coefficient."""
    return a.coeffs[-1].trace()


def _basis(field: FieldDescriptor, p_power: int) -> list[TruncatedPoly]:
    out = []
    for ell in range(p_power):
        for i in range(field.d):
            xi = [0] * field.d
            xi[i] = 1
            out.append(TruncatedPoly.monomial(field._wrap(tuple(xi)), ell, p_power))
    return out


def gram_matrix(field: FieldDescriptor, p_power: int) -> list[list[int]]:
    """``[ResTr(b_i b_j)]`` over the basis ``x^i u^l`` of ``A_t``."""
    basis = _basis(field, p_power)
    return [[res_tr(a * b) for b in basis] for a in basis]


def gram_rank(field: FieldDescriptor, p_power: int, *, budget: Budget | None = None) -> int:
    """Rank over ``F_q`` of the residue trace form; full rank ``d * p^k`` means nondegenerate."""
    budget = budget or DEFAULT_BUDGET
    dim = field.d * p_power
    budget.check("Gram matrix entries", dim * dim, budget.vectors)
    return linalg.rank(field.base, gram_matrix(field, p_power))


def universal_inverse(c: TruncatedPoly) -> TruncatedPoly:
    """``v = a_r^{-1} u^{p^k - 1 - r}`` with r the valuation of c, so ``c v = u^{p^k - 1}``.

    Raises:
        ZeroElement: c is zero.
    """
    if c.is_zero():
        raise ZeroElement("zero has no universal inverse")
    r = c.valuation()
    L = c.p_power
    v = TruncatedPoly.monomial(c.coeffs[r].inverse(), L - 1 - r, L, c.component)
    if c * v != socle(c.field, L, c.component):
        raise AssertionError("universal inverse identity failed")
    return v


def shift_generator(comp: Component, p_power: int) -> TruncatedPoly:
    """``X_t = theta_t (1 + u)``, the image of g in ``A_t``."""
    F = comp.field
    coeffs = [F.zero()] * p_power
    coeffs[0] = comp.theta
    if p_power > 1:
        coeffs[1] = comp.theta
    return TruncatedPoly(coeffs, F, comp.index)


def shift_multiply(a: TruncatedPoly, i: int, comp: Component) -> TruncatedPoly:
    """``X_t^i a`` by square-and-multiply; i may be negative."""
    L = a.p_power
    i %= comp.subgroup_order * L
    result = a
    base = shift_generator(comp, L)
    while i:
        if i & 1:
            result = base * result
        i >>= 1
        if i:
            base = base * base
    return result


def functional(c: TruncatedPoly) -> tuple[int, ...]:
    """Values of ``a -> ResTr(c a)`` on the basis ``x^i u^l``, scaled so the first nonzero is 1."""
    F = c.field
    bf = F.base
    L = c.p_power
    # the u^{L-1} coefficient of c * x^i u^l is c_{L-1-l} x^i
    xs = [F._pad((0,) * i + (1,)) for i in range(F.d)]
    vals = [F._trace(F._mul(c.coeffs[L - 1 - ell].coeffs, x)) for ell in range(L) for x in xs]
    lead = next((v for v in vals if v), 0)
    if not lead:
        return tuple(vals)
    s = bf.mul[bf.inv[lead]]
    return tuple(s[v] for v in vals)


def hyperplane_count(field: FieldDescriptor, p_power: int, *, budget: Budget | None = None) -> tuple[int, int]:
    """``(distinct kernels of a -> ResTr(c a) over c != 0, number of hyperplanes of A_t)``.

    Equality means every hyperplane arises, and two c give the same one only
    when they are proportional.
    """
    budget = budget or DEFAULT_BUDGET
    q, dim = field.q, field.d * p_power
    budget.check("hyperplane enumeration", q**dim, budget.vectors)
    seen = set()
    for flat in product(range(q), repeat=dim):
        if not any(flat):
            continue
        coeffs = [field._wrap(flat[ell * field.d:(ell + 1) * field.d]) for ell in range(p_power)]
        f = functional(TruncatedPoly(coeffs, field))
        if not any(f):
            raise AssertionError("residue trace form is degenerate")
        seen.add(f)
    return len(seen), (q**dim - 1) // (q - 1)


# -- verification report --------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


def verification_report(
    q: int,
    n: int,
    *,
    seed: int = 0,
    samples: int = 1000,
    budget: Budget | None = None,
    max_gram_dim: int = 64,
    max_hyperplane_space: int = 1 << 12,
) -> list[Check]:
    """Run every structural check for ``F_q C_n`` and return the named outcomes.

    Per component the checks are: full rank of the residue trace form,
    ``c * universal_inverse(c) == u^{p^k-1}`` on ``samples`` random nonzero c,
    ``X_t^i u^{p^k-1} = theta_t^i u^{p^k-1}`` for all ``i < n``, and
    ``ResTr(u^{p^k-1} X_t^i b) = Tr(theta_t^i b_0)`` on random b.  Components
    over the size limits skip the Gram and hyperplane checks.
    """
    budget = budget or DEFAULT_BUDGET
    p, _ = prime_power(q)
    if n < 1:
        raise InvalidInput("n must be positive")
    rng = random.Random(seed)
    split = p_part_split(n, p)
    L = split.p_power
    checks: list[Check] = []

    rep = verify_psi_iso(q, n, budget=budget)
    checks.append(Check("psi_homomorphism", rep.homomorphism_ok, f"{n * n} basis pairs"))
    checks.append(Check("psi_bijective", rep.bijective, f"rank {n} required"))

    comps = decompose_semisimple(q, split.m)
    degrees_ok = all(c.degree == c.coset.size and c.theta ** c.subgroup_order == c.field.one()
                     for c in comps)
    checks.append(Check("factor_degrees", degrees_ok, f"{len(comps)} factors of x^{split.m} - 1"))
    checks.append(Check("idempotents", check_idempotents(q, split.m, comps)))

    for comp in comps:
        tag = f"[t={comp.index}]"
        F = comp.field
        dim = F.d * L
        if dim <= max_gram_dim:
            r = gram_rank(F, L, budget=budget)
            checks.append(Check("gram_rank" + tag, r == dim, f"rank {r} of {dim}"))

        ok = True
        drawn = 0
        while drawn < samples:
            c = TruncatedPoly.random(rng, F, L, comp.index)
            if c.is_zero():
                continue
            drawn += 1
            ok &= c * universal_inverse(c) == socle(F, L)
        checks.append(Check("universal_inverse" + tag, ok, f"{samples} samples"))

        s = socle(F, L, comp.index)
        ok = all(
            shift_multiply(s, i, comp) == s * comp.theta ** i for i in range(n)
        )
        checks.append(Check("shift_on_socle" + tag, ok, f"i < {n}"))

        ok = True
        for _ in range(max(1, samples // 100)):
            b = TruncatedPoly.random(rng, F, L, comp.index)
            beta0 = b.coeffs[0]
            for i in range(n):
                lhs = res_tr(s * shift_multiply(b, i, comp))
                ok &= lhs == (comp.theta ** i * beta0).trace()
        checks.append(Check("residue_trace_shift" + tag, ok, f"i < {n}"))

        if F.q ** dim <= max_hyperplane_space:
            got, want = hyperplane_count(F, L, budget=budget)
            checks.append(Check("hyperplane_count" + tag, got == want, f"{got} of {want}"))
    return checks
