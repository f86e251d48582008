"""Exact arithmetic substrate: prime fields, monomials, orders, polynomials.

Polynomials are immutable.  Internally a polynomial is a tuple of
``(exponents, coefficient)`` pairs, strictly descending in the ring's active
monomial order, with exponents a tuple of ``n`` non-negative ints and
coefficients canonical representatives in ``[1, p)``.  The zero polynomial is
the empty tuple.  This flat representation is shared with the computation
kernels (see ``kalkpart.kernel``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from . import kernel


class DomainError(ValueError):
    """A value outside the domain of an operation (0 inverse, composite modulus)."""


class ContextMismatchError(ValueError):
    """Operands belong to different rings / variable contexts."""


# ---------------------------------------------------------------------------
# prime fields
# ---------------------------------------------------------------------------

_MR_BASES = (2, 3, 5, 7)  # deterministic for n < 3_215_031_751 > 2^31


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid for the machine-word range we allow."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class PrimeField:
    """The field Z/p for a prime p below 2^31; elements are ints in [0, p)."""

    __slots__ = ("p",)

    def __init__(self, p: int):
        if not 2 <= p < 2**31:
            raise DomainError(f"modulus must be in [2, 2^31), got {p}")
        if not is_prime(p):
            raise DomainError(f"modulus {p} is not prime")
        self.p = p

    def add(self, a: int, b: int) -> int:
        r = a + b
        return r - self.p if r >= self.p else r

    def sub(self, a: int, b: int) -> int:
        r = a - b
        return r + self.p if r < 0 else r

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return self.p - a if a else 0

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise DomainError("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


# ---------------------------------------------------------------------------
# variable contexts and monomials
# ---------------------------------------------------------------------------

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


class VariableContext:
    """An ordered list of distinct variable names; fixed for a computation."""

    __slots__ = ("names",)

    def __init__(self, names):
        names = tuple(names)
        if not names:
            raise DomainError("need at least one variable")
        if len(set(names)) != len(names):
            raise DomainError(f"duplicate variable names in {names}")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise DomainError(f"invalid variable name {nm!r}")
        self.names = names

    @property
    def n(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self.names.index(name)

    def insert(self, position: int, name: str) -> "VariableContext":
        if not 0 <= position <= self.n:
            raise DomainError(f"insertion position {position} out of range")
        return VariableContext(
            self.names[:position] + (name,) + self.names[position:]
        )

    def drop(self, position: int) -> "VariableContext":
        return VariableContext(
            self.names[:position] + self.names[position + 1:]
        )

    def __eq__(self, other):
        return isinstance(other, VariableContext) and other.names == self.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"VariableContext({list(self.names)})"


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True iff x^a divides x^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Exponent vector of x^a / x^b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


class Monomial:
    """A power product in a fixed context, with its total degree cached."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents):
        self.exponents = tuple(exponents)
        if any(e < 0 for e in self.exponents):
            raise DomainError("negative exponent")
        self.degree = sum(self.exponents)

    def __mul__(self, other):
        return Monomial(mono_mul(self.exponents, other.exponents))

    def divides(self, other) -> bool:
        return mono_divides(self.exponents, other.exponents)

    def lcm(self, other) -> "Monomial":
        return Monomial(mono_lcm(self.exponents, other.exponents))

    def __eq__(self, other):
        return isinstance(other, Monomial) and other.exponents == self.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial{self.exponents}"


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonomialOrder:
    """Degree-reverse-lexicographic order, optionally with an elimination block.

    ``block == 0`` is plain DRL.  ``block == k >= 1`` compares the first k
    exponents by DRL (so those variables are eliminated) and breaks ties by
    DRL on the remaining exponents.  Both variants are total well-orders and
    multiplicative; within the trailing block the induced order is again DRL,
    so eliminated bases keep their term sorting.
    """

    block: int = 0

    def key(self, exps):
        """A tuple whose natural (ascending) order matches the monomial order."""
        k = self.block
        if k == 0:
            return _drl_key(exps)
        return _drl_key(exps[:k]) + _drl_key(exps[k:])

    def cmp(self, a, b) -> int:
        ka, kb = self.key(a), self.key(b)
        return -1 if ka < kb else (1 if ka > kb else 0)

    def __repr__(self):
        return "DRL" if self.block == 0 else f"BlockElim({self.block})"


def _drl_key(exps):
    return (sum(exps),) + tuple(-e for e in reversed(exps))


DRL = MonomialOrder(0)


def block_elim(k: int) -> MonomialOrder:
    if k < 1:
        raise DomainError("elimination block must have size >= 1")
    return MonomialOrder(k)


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """-1, 0, 1 as m1 <, =, > m2 under the given order."""
    if len(m1.exponents) != len(m2.exponents):
        raise ContextMismatchError("monomials from different contexts")
    return order.cmp(m1.exponents, m2.exponents)


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------

class Ring:
    """A polynomial ring: coefficient field, variable context, active order."""

    __slots__ = ("field", "context", "order", "_vars")

    def __init__(self, field: PrimeField, context: VariableContext,
                 order: MonomialOrder = DRL):
        if order.block >= context.n:
            raise DomainError("elimination block must leave at least one variable")
        self.field = field
        self.context = context
        self.order = order
        self._vars = None

    @classmethod
    def make(cls, p: int, names, order: MonomialOrder = DRL) -> "Ring":
        return cls(PrimeField(p), VariableContext(names), order)

    @property
    def n(self) -> int:
        return self.context.n

    @property
    def p(self) -> int:
        return self.field.p

    def __eq__(self, other):
        return (isinstance(other, Ring) and other.field == self.field
                and other.context == self.context and other.order == self.order)

    def __hash__(self):
        return hash((self.field, self.context, self.order))

    def __repr__(self):
        return f"Ring(GF({self.p}), {list(self.context.names)}, {self.order})"

    # construction helpers ---------------------------------------------------

    def from_terms(self, pairs) -> "Polynomial":
        """Build a polynomial from (exponent tuple, coefficient) pairs."""
        acc = {}
        n, p = self.n, self.p
        for exps, c in pairs:
            exps = tuple(exps)
            if len(exps) != n:
                raise ContextMismatchError(
                    f"exponent vector of length {len(exps)} in a {n}-variable ring")
            c = c % p
            if c:
                acc[exps] = (acc.get(exps, 0) + c) % p
        key = self.order.key
        terms = tuple(sorted(((e, c) for e, c in acc.items() if c),
                             key=lambda t: key(t[0]), reverse=True))
        return Polynomial(self, terms)

    def _raw(self, terms) -> "Polynomial":
        """Wrap kernel output (already canonical) without re-sorting."""
        return Polynomial(self, terms)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def one(self) -> "Polynomial":
        return self.constant(1)

    def constant(self, c: int) -> "Polynomial":
        c = c % self.p
        if not c:
            return self.zero()
        return Polynomial(self, (((0,) * self.n, c),))

    def var(self, i) -> "Polynomial":
        if isinstance(i, str):
            i = self.context.index(i)
        exps = tuple(1 if j == i else 0 for j in range(self.n))
        return Polynomial(self, ((exps, 1),))

    def variables(self):
        if self._vars is None:
            self._vars = tuple(self.var(i) for i in range(self.n))
        return self._vars

    def with_order(self, order: MonomialOrder) -> "Ring":
        return Ring(self.field, self.context, order)

    def insert_var(self, position: int, name: str,
                   order: MonomialOrder | None = None) -> "Ring":
        ctx = self.context.insert(position, name)
        return Ring(self.field, ctx, order if order is not None else self.order)

    def drop_var(self, position: int, order: MonomialOrder | None = None) -> "Ring":
        ctx = self.context.drop(position)
        return Ring(self.field, ctx, order if order is not None else self.order)


class Polynomial:
    """An element of a :class:`Ring`, kept in canonical sorted form."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms):
        self.ring = ring
        self.terms = terms

    # predicates and accessors -----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or self.terms[0][0] == (0,) * self.ring.n

    def is_unit(self) -> bool:
        return bool(self.terms) and self.is_constant()

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    @property
    def lead_exponents(self):
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        return self.terms[0][0]

    @property
    def lead_coefficient(self) -> int:
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        return self.terms[0][1]

    def lead_monomial(self) -> Monomial:
        return Monomial(self.lead_exponents)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e, _ in self.terms)

    def monomials(self):
        return tuple(Monomial(e) for e, _ in self.terms)

    def uses_var(self, i: int) -> bool:
        return any(e[i] for e, _ in self.terms)

    # arithmetic ---------------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if other.ring != self.ring:
            raise ContextMismatchError(
                f"operands from different rings: {self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check(other)
        k = kernel.active()
        return self.ring._raw(k.add_terms(self.terms, other.terms,
                                          self.ring.p, self.ring.order.block))

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        self._check(other)
        return self + (-other)

    def __neg__(self):
        p = self.ring.p
        return self.ring._raw(tuple((e, p - c) for e, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        k = kernel.active()
        return self.ring._raw(k.mul_terms(self.terms, other.terms,
                                          self.ring.p, self.ring.order.block))

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: int) -> "Polynomial":
        c = c % self.ring.p
        if not c:
            return self.ring.zero()
        p = self.ring.p
        return self.ring._raw(tuple((e, c * t % p) for e, t in self.terms))

    def mul_term(self, c: int, exps) -> "Polynomial":
        """Multiply by the term c*x^exps (order-preserving, no re-sort)."""
        c = c % self.ring.p
        if not c:
            return self.ring.zero()
        k = kernel.active()
        return self.ring._raw(k.mul_term(self.terms, c, tuple(exps), self.ring.p))

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        lc = self.terms[0][1]
        if lc == 1:
            return self
        return self.scale(self.ring.field.inv(lc))

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative polynomial power")
        out = self.ring.one()
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base if e > 1 else base
            e >>= 1
        return out

    def evaluate(self, point) -> int:
        """Value at a point given as a length-n integer tuple."""
        point = tuple(point)
        if len(point) != self.ring.n:
            raise ContextMismatchError("point dimension mismatch")
        p = self.ring.p
        total = 0
        for exps, c in self.terms:
            v = c
            for x, e in zip(point, exps):
                if e:
                    v = v * pow(x, e, p) % p
            total = (total + v) % p
        return total

    # context changes ----------------------------------------------------------

    def extend_context(self, position: int, name: str,
                       order: MonomialOrder | None = None) -> "Polynomial":
        """View this polynomial in a ring with one more variable (exponent 0)."""
        ring = self.ring.insert_var(position, name, order)
        terms = tuple((e[:position] + (0,) + e[position:], c)
                      for e, c in self.terms)
        if order is None and self.ring.order.block == 0:
            # inserting a zero exponent never changes relative DRL order
            return ring._raw(terms)
        return ring.from_terms(terms)

    def restrict_context(self, position: int,
                         order: MonomialOrder | None = None) -> "Polynomial":
        """Drop an unused variable; error if the polynomial involves it."""
        if self.uses_var(position):
            raise DomainError(
                f"polynomial involves {self.ring.context.names[position]!r}; "
                "cannot restrict")
        ring = self.ring.drop_var(position, order)
        terms = tuple((e[:position] + e[position + 1:], c)
                      for e, c in self.terms)
        if order is None and self.ring.order.block == 0:
            return ring._raw(terms)
        return ring.from_terms(terms)

    def to_order(self, order: MonomialOrder) -> "Polynomial":
        if order == self.ring.order:
            return self
        return self.ring.with_order(order).from_terms(self.terms)

    # comparisons and hashing ----------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == self.ring.constant(other).terms
        return (isinstance(other, Polynomial) and other.ring == self.ring
                and other.terms == self.terms)

    def __hash__(self):
        return hash((self.ring, self.terms))

    def sort_key(self):
        """Deterministic structural key (used for canonical output sorting)."""
        key = self.ring.order.key
        return tuple((key(e), c) for e, c in self.terms)

    def __repr__(self):
        from .parse import format_polynomial
        return format_polynomial(self)

    __str__ = __repr__
