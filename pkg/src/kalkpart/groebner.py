"""Buchberger engine: normal forms, S-pair management, reduced bases.

Pair elimination uses the Gebauer-Moeller installation of Buchberger's
coprimality and chain criteria; pairs are processed in increasing lcm degree
(normal selection).  Division always reduces by the first basis element, in
basis order, whose lead monomial divides the current lead term, so results
are deterministic.  Auto-reduction happens once at the end: minimalize, then
tail-reduce, then sort generators by descending lead monomial.
"""

from __future__ import annotations

from . import kernel, stats
from .arith import (ContextMismatchError, MonomialOrder, Polynomial, Ring,
                    mono_coprime, mono_divides, mono_lcm)


class GroebnerBasis:
    """A reduced Groebner basis; generators are monic and canonically sorted."""

    __slots__ = ("ring", "generators", "_reducer")

    def __init__(self, ring: Ring, generators):
        self.ring = ring
        self.generators = tuple(generators)
        self._reducer = None

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def is_zero_ideal(self) -> bool:
        return not self.generators

    def is_unit_ideal(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_unit()

    def lead_exponents(self):
        return tuple(g.lead_exponents for g in self.generators)

    def reducer_set(self):
        if self._reducer is None:
            k = kernel.active()
            rs = k.ReducerSet(self.ring.p, self.ring.order.block)
            for g in self.generators:
                rs.add(g.terms)
            self._reducer = rs
        return self._reducer

    def __eq__(self, other):
        return (isinstance(other, GroebnerBasis) and other.ring == self.ring
                and other.generators == self.generators)

    def __hash__(self):
        return hash((self.ring, self.generators))

    def __repr__(self):
        gens = ", ".join(str(g) for g in self.generators)
        return f"GroebnerBasis[{gens}]"


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    """The unique remainder of f under division by G."""
    if f.ring != G.ring:
        raise ContextMismatchError("polynomial and basis from different rings")
    if not G.generators or f.is_zero():
        return f
    return f.ring._raw(G.reducer_set().reduce(f.terms))


def is_member(f: Polynomial, G: GroebnerBasis) -> bool:
    return normal_form(f, G).is_zero()


def ideal_equal(G1: GroebnerBasis, G2: GroebnerBasis) -> bool:
    """Reduced bases are unique, so ideal equality is term-for-term equality."""
    if G1.ring != G2.ring:
        raise ContextMismatchError("bases from different rings")
    return G1.generators == G2.generators


def _gm_update(leads, pairs, t, order):
    """Gebauer-Moeller pair update for the new element with index t."""
    lm_t = leads[t]
    lcms = [mono_lcm(leads[i], lm_t) for i in range(t)]
    # chain criterion inside the new column: keep only order-minimal lcms,
    # but never discard a coprime pair here (it is dropped for free below)
    keep = []
    for i in range(t):
        if mono_coprime(leads[i], lm_t):
            keep.append(i)
            continue
        li = lcms[i]
        dominated = False
        for j in range(t):
            if j == i:
                continue
            lj = lcms[j]
            if lj != li and mono_divides(lj, li):
                dominated = True
                break
            if lj == li and j < i:
                dominated = True  # duplicate lcm: keep the first
                break
        if not dominated:
            keep.append(i)
    # coprimality criterion
    new_pairs = [(i, t, lcms[i]) for i in keep
                 if not mono_coprime(leads[i], lm_t)]
    # chain criterion against the old pair list
    survivors = []
    for (i, j, lij) in pairs:
        if (not mono_divides(lm_t, lij)
                or mono_lcm(leads[i], lm_t) == lij
                or mono_lcm(leads[j], lm_t) == lij):
            survivors.append((i, j, lij))
    survivors.extend(new_pairs)
    return survivors


def buchberger(polys, order: MonomialOrder | None = None,
               ring: Ring | None = None) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``polys``.

    All inputs must share a ring; ``order`` re-sorts them into another order
    on the same context first.  An empty or all-zero input yields the empty
    basis of the zero ideal (``ring`` is then required to fix the ring).
    """
    polys = [f for f in polys if not f.is_zero()]
    if not polys:
        if ring is None:
            raise ValueError("cannot infer the ring of an empty generating set")
        if order is not None:
            ring = ring.with_order(order)
        return GroebnerBasis(ring, ())
    if ring is None:
        ring = polys[0].ring
    if order is not None and order != ring.order:
        ring = ring.with_order(order)
        polys = [f.to_order(order) for f in polys]
    for f in polys:
        if f.ring != ring:
            raise ContextMismatchError("generators from different rings")

    stats.count("gb_calls")
    k = kernel.active()
    p, block = ring.p, ring.order.block
    ord_key = ring.order.key

    basis = []          # monic term tuples
    leads = []
    pairs = []          # (i, j, lcm exponent tuple) with i < j
    reducer = k.ReducerSet(p, block)

    def absorb(terms):
        lc = terms[0][1]
        if lc != 1:
            inv = pow(lc, p - 2, p)
            terms = tuple((e, inv * c % p) for e, c in terms)
        basis.append(terms)
        leads.append(terms[0][0])
        reducer.add(terms)
        return _gm_update(leads, pairs, len(basis) - 1, ring.order)

    unit = None
    for f in polys:
        if f.is_constant():
            unit = f
            break
        pairs = absorb(f.terms)

    if unit is None:
        while pairs:
            best = min(
                range(len(pairs)),
                key=lambda idx: (sum(pairs[idx][2]), ord_key(pairs[idx][2]),
                                 pairs[idx][1], pairs[idx][0]))
            i, j, _ = pairs.pop(best)
            s = k.spair(basis[i], basis[j], p, block)
            h = reducer.reduce(s)
            if not h:
                continue
            if sum(h[0][0]) == 0:
                unit = ring._raw(h)
                break
            pairs = absorb(h)

    if unit is not None:
        return GroebnerBasis(ring, (ring.one(),))

    return _reduce_basis(ring, basis)


def _reduce_basis(ring: Ring, basis) -> GroebnerBasis:
    """Minimalize, tail-reduce and canonically sort a completed basis."""
    k = kernel.active()
    p, block = ring.p, ring.order.block
    ord_key = ring.order.key

    by_lead = sorted(range(len(basis)), key=lambda i: ord_key(basis[i][0][0]))
    kept = []
    for i in by_lead:
        lm = basis[i][0][0]
        if any(mono_divides(basis[j][0][0], lm) for j in kept):
            continue
        kept.append(i)

    reduced = []
    for i in kept:
        rs = k.ReducerSet(p, block)
        for j in kept:
            if j != i:
                rs.add(basis[j])
        h = rs.reduce(basis[i])
        lc = h[0][1]
        if lc != 1:
            inv = pow(lc, p - 2, p)
            h = tuple((e, inv * c % p) for e, c in h)
        reduced.append(h)

    reduced.sort(key=lambda t: ord_key(t[0][0]), reverse=True)
    return GroebnerBasis(ring, tuple(ring._raw(t) for t in reduced))
