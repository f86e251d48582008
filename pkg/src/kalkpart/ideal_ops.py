"""Ideal operations on top of the Groebner engine.

Saturation and intersection go through the Rabinowitsch construction: adjoin
an auxiliary variable ``t`` in front, compute a basis for the one-variable
elimination block order, and keep the ``t``-free generators.  Because the
order is DRL inside each block, the eliminated generators are already a
reduced DRL basis for the original variables; this is asserted rather than
recomputed.
"""

from __future__ import annotations

from .arith import (DRL, ContextMismatchError, DomainError, Polynomial, Ring,
                    VariableContext, block_elim, mono_divides)
from .groebner import GroebnerBasis, buchberger, normal_form


class Ideal:
    """A generating set paired with its lazily computed reduced DRL basis."""

    __slots__ = ("generators", "_basis")

    def __init__(self, generators):
        self.generators = tuple(generators)
        self._basis = None

    def basis(self) -> GroebnerBasis:
        if self._basis is None:
            self._basis = buchberger(self.generators)
        return self._basis


def _require_drl(ring: Ring):
    if ring.order.block != 0:
        raise DomainError("operation requires a DRL ring")


def _fresh_name(ring: Ring, base: str = "_t") -> str:
    if base not in ring.context.names:
        return base
    i = 0
    while f"{base}{i}" in ring.context.names:
        i += 1
    return f"{base}{i}"


def _extended_ring(ring: Ring):
    name = _fresh_name(ring)
    ext = Ring(ring.field, ring.context.insert(0, name), block_elim(1))
    return ext, name


def _lift(f: Polynomial, name: str):
    return f.extend_context(0, name, order=block_elim(1))


def eliminate(G: GroebnerBasis):
    """Generators of the elimination ideal, restricted to the trailing block.

    ``G`` must be reduced for a BlockElim(k) order; the result lives in the
    k-fewer-variable DRL ring and generates the intersection of the ideal
    with that subring.
    """
    k = G.ring.order.block
    if k == 0:
        raise DomainError("eliminate needs a basis for an elimination order")
    small = Ring(G.ring.field, VariableContext(G.ring.context.names[k:]), DRL)
    out = []
    for g in G.generators:
        if any(any(e[:k]) for e, _ in g.terms):
            continue
        out.append(small._raw(tuple((e[k:], c) for e, c in g.terms)))
    return out


def _eliminated_basis(ring: Ring, Gext: GroebnerBasis) -> GroebnerBasis:
    gens = eliminate(Gext)
    fixed = [g if g.ring == ring else ring._raw(g.terms) for g in gens]
    G = GroebnerBasis(ring, fixed)
    _assert_reduced(G)
    return G


def _assert_reduced(G: GroebnerBasis):
    """Cheap structural check that a basis is reduced (monic, interreduced)."""
    leads = G.lead_exponents()
    for i, g in enumerate(G.generators):
        if g.lead_coefficient != 1:
            raise RuntimeError("eliminated basis is not monic")
        for j, lm in enumerate(leads):
            if j == i:
                continue
            if any(mono_divides(lm, e) for e, _ in g.terms):
                raise RuntimeError("eliminated basis is not reduced")


def saturate(polys, h: Polynomial) -> GroebnerBasis:
    """Reduced DRL basis of the saturation of <polys> by h.

    The saturation is the ideal of all f with f*h^k in <polys> for some k;
    it cuts out the closure of V(polys) minus V(h).  Realized by adjoining t
    with t*h - 1 and eliminating t.  h = 0 yields the unit ideal, h a
    nonzero constant yields the plain basis of <polys>.
    """
    ring = h.ring
    _require_drl(ring)
    for f in polys:
        if f.ring != ring:
            raise ContextMismatchError("generators and h from different rings")
    ext, name = _extended_ring(ring)
    gens = [_lift(f, name) for f in polys if not f.is_zero()]
    t = ext.var(0)
    gens.append(t * _lift(h, name) - ext.one())
    Gext = buchberger(gens, ring=ext)
    return _eliminated_basis(ring, Gext)


def intersect(G1: GroebnerBasis, G2: GroebnerBasis) -> GroebnerBasis:
    """Reduced DRL basis of the intersection of two ideals."""
    ring = G1.ring
    if G2.ring != ring:
        raise ContextMismatchError("ideals from different rings")
    _require_drl(ring)
    if G1.is_zero_ideal() or G2.is_zero_ideal():
        return GroebnerBasis(ring, ())
    ext, name = _extended_ring(ring)
    t = ext.var(0)
    one_minus_t = ext.one() - t
    gens = [t * _lift(g, name) for g in G1.generators]
    gens += [one_minus_t * _lift(g, name) for g in G2.generators]
    Gext = buchberger(gens, ring=ext)
    return _eliminated_basis(ring, Gext)


def radical_member(f: Polynomial, G: GroebnerBasis) -> bool:
    """True iff some power of f lies in the ideal of G (Rabinowitsch test)."""
    ring = G.ring
    if f.ring != ring:
        raise ContextMismatchError("polynomial and basis from different rings")
    if f.is_zero() or normal_form(f, G).is_zero():
        return True
    name = _fresh_name(ring)
    ext = ring.insert_var(0, name)  # plain DRL; no elimination needed
    t = ext.var(0)
    gens = [g.extend_context(0, name) for g in G.generators]
    gens.append(t * f.extend_context(0, name) - ext.one())
    return buchberger(gens, ring=ext).is_unit_ideal()


def dimension(G: GroebnerBasis) -> int:
    """Krull dimension of the variety of G (a reduced DRL basis).

    Computed as the largest variable subset S such that no lead monomial is
    supported inside S, via a pruned subset search.  Returns -1 for the unit
    ideal and n for the zero ideal.
    """
    _require_drl(G.ring)
    if G.is_unit_ideal():
        return -1
    n = G.ring.n
    if G.is_zero_ideal():
        return n
    masks = set()
    for lead in G.lead_exponents():
        masks.add(sum(1 << i for i, e in enumerate(lead) if e))
    # keep minimal supports only: a superset support adds no constraint
    supports = [m for m in masks
                if not any(o != m and o & ~m == 0 for o in masks)]
    best = 0
    n_sup = len(supports)

    def walk(i, mask, size):
        nonlocal best
        if size + (n - i) <= best:
            return
        if i == n:
            best = max(best, size)
            return
        with_i = mask | (1 << i)
        ok = True
        for s in range(n_sup):
            if supports[s] & ~with_i == 0:
                ok = False
                break
        if ok:
            walk(i + 1, with_i, size + 1)
        walk(i + 1, mask, size)

    walk(0, 0, 0)
    return best
