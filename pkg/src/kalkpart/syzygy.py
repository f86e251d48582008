"""Syzygies of polynomial sequences and the decomposition witness search.

A syzygy of F = (f_1, ..., f_r) is a vector (g_1, ..., g_r) with
sum g_i * f_i = 0.  Generators of the full syzygy module are computed by
running Buchberger's algorithm over the free module R^(r+1): each f_i enters
as (f_i, e_i), with the first component a polynomial payload and the last r
components tracking coefficients, under a position-over-term order with the
payload dominant.  Elements whose payload reduces to zero are exactly the
syzygies, and the zero-payload members of the completed basis generate the
whole syzygy module.

``get_syz`` turns this into the witness search used by the decomposition:
it streams each syzygy as the module computation emits it, discards Koszul
combinations (their entries lie in <F>, which is contained in the cell
ideal, so they can never produce a witness), and returns the first syzygy
entry that does not reduce to zero modulo the cell's basis.  When the run
completes without a witness, every generator of the syzygy module has all
entries in the cell ideal I_X; since I_X is closed under R-combinations,
every entry of *every* syzygy then lies in I_X, which certifies that the
cell's sequence is a local regular sequence outside its inequation.

Module pair management uses only the chain criterion; the coprimality
criterion is not sound for modules.
"""

from __future__ import annotations

from . import kernel, stats
from .arith import Polynomial, Ring, mono_div, mono_divides, mono_lcm
from .groebner import normal_form


class SyzygyVector:
    """One relation (g_1, ..., g_r) of a fixed sequence."""

    __slots__ = ("entries",)

    def __init__(self, entries):
        self.entries = tuple(entries)

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def expand(self, sequence) -> Polynomial:
        """sum g_i * f_i; zero exactly when this is a syzygy of the sequence."""
        acc = sequence[0].ring.zero()
        for g, f in zip(self.entries, sequence):
            acc = acc + g * f
        return acc

    def __eq__(self, other):
        return isinstance(other, SyzygyVector) and other.entries == self.entries

    def __repr__(self):
        return "SyzygyVector(" + ", ".join(str(g) for g in self.entries) + ")"


class SyzygyBasis:
    """A generating set of the syzygy module of a sequence."""

    __slots__ = ("sequence", "vectors")

    def __init__(self, sequence, vectors):
        self.sequence = tuple(sequence)
        self.vectors = tuple(vectors)

    def __iter__(self):
        return iter(self.vectors)

    def __len__(self):
        return len(self.vectors)


# ---------------------------------------------------------------------------
# free-module vectors as tuples of flat term lists
# ---------------------------------------------------------------------------

def _vec_lead(vec):
    """(component, exponents, coefficient) of the POT-leading term, or None."""
    for c, terms in enumerate(vec):
        if terms:
            e, cf = terms[0]
            return c, e, cf
    return None


def _vec_scale(vec, c, p):
    return tuple(tuple((e, c * t % p) for e, t in comp) for comp in vec)


def _vec_monic(vec, p):
    lead = _vec_lead(vec)
    if lead is None:
        return vec
    lc = lead[2]
    if lc == 1:
        return vec
    return _vec_scale(vec, pow(lc, p - 2, p), p)


def _vec_add_scaled(vec, w, c, u, p, block):
    k = kernel.active()
    return tuple(k.add_scaled(a, b, c, u, p, block) for a, b in zip(vec, w))


def _vec_spair(v, w, p, block):
    cv, ev, lv = _vec_lead(v)
    cw, ew, lw = _vec_lead(w)
    L = mono_lcm(ev, ew)
    uv, uw = mono_div(L, ev), mono_div(L, ew)
    k = kernel.active()
    left = tuple(k.mul_term(comp, pow(lv, p - 2, p), uv, p) for comp in v)
    return _vec_add_scaled(left, w, p - pow(lw, p - 2, p), uw, p, block)


def _vec_reduce(vec, basis, p, block):
    """Full module normal form of ``vec`` by monic basis vectors."""
    k = kernel.active()
    m = len(vec)
    rem = [[] for _ in range(m)]
    work = [list(comp) for comp in vec]
    leads = [_vec_lead(b) for b in basis]
    while True:
        c0 = None
        for c in range(m):
            if work[c]:
                c0 = c
                break
        if c0 is None:
            break
        e, cf = work[c0][0]
        hit = None
        for gi, (bc, be, _) in enumerate(leads):
            if bc == c0 and mono_divides(be, e):
                hit = gi
                break
        if hit is None:
            rem[c0].append(work[c0].pop(0))
            continue
        u = mono_div(e, leads[hit][1])
        g = basis[hit]
        for c in range(c0, m):
            work[c] = list(k.add_scaled(tuple(work[c]), g[c], p - cf, u, p, block))
    return tuple(tuple(comp) for comp in rem)


def _vec_is_zero(vec):
    return all(not comp for comp in vec)


def _module_buchberger(gens, p, block, ord_key, emit=None, reduce_final=True):
    """Buchberger over a free module, position-over-term order.

    ``emit`` is called on every new basis element (monic, in discovery
    order); returning True aborts the computation.  Returns the completed
    basis (reduced if ``reduce_final``), or None when aborted.
    """
    basis = []
    leads = []
    pairs = []  # (i, j, lcm)

    def update(t):
        ct, et, _ = leads[t]
        lcms = {}
        for i in range(t):
            if leads[i][0] == ct:
                lcms[i] = mono_lcm(leads[i][1], et)
        keep = []
        for i in lcms:
            li = lcms[i]
            dominated = False
            for j in lcms:
                if j == i:
                    continue
                lj = lcms[j]
                if lj != li and mono_divides(lj, li):
                    dominated = True
                    break
                if lj == li and j < i:
                    dominated = True
                    break
            if not dominated:
                keep.append(i)
        survivors = []
        for (i, j, lij) in pairs:
            same = leads[i][0] == ct
            if (not same or not mono_divides(et, lij)
                    or mono_lcm(leads[i][1], et) == lij
                    or mono_lcm(leads[j][1], et) == lij):
                survivors.append((i, j, lij))
        survivors.extend((i, t, lcms[i]) for i in keep)
        return survivors

    aborted = False
    for g in gens:
        g = _vec_monic(tuple(tuple(c) for c in g), p)
        if _vec_is_zero(g):
            continue
        basis.append(g)
        leads.append(_vec_lead(g))
        pairs = update(len(basis) - 1)
        if emit is not None and emit(g):
            aborted = True
            break

    while pairs and not aborted:
        best = min(
            range(len(pairs)),
            key=lambda idx: (sum(pairs[idx][2]), ord_key(pairs[idx][2]),
                             leads[pairs[idx][0]][0], pairs[idx][1],
                             pairs[idx][0]))
        i, j, _ = pairs.pop(best)
        s = _vec_spair(basis[i], basis[j], p, block)
        h = _vec_reduce(s, basis, p, block)
        if _vec_is_zero(h):
            continue
        h = _vec_monic(h, p)
        basis.append(h)
        leads.append(_vec_lead(h))
        pairs = update(len(basis) - 1)
        if emit is not None and emit(h):
            aborted = True

    if aborted:
        return None
    if not reduce_final:
        return basis
    return _module_reduce_basis(basis, p, block, ord_key)


def _module_reduce_basis(basis, p, block, ord_key):
    leads = [_vec_lead(b) for b in basis]
    by_lead = sorted(range(len(basis)),
                     key=lambda i: (leads[i][0], ord_key(leads[i][1])))
    kept = []
    for i in by_lead:
        ci, ei, _ = leads[i]
        if any(leads[j][0] == ci and mono_divides(leads[j][1], ei)
               for j in kept):
            continue
        kept.append(i)
    out = []
    for i in kept:
        others = [basis[j] for j in kept if j != i]
        h = _vec_monic(_vec_reduce(basis[i], others, p, block), p)
        out.append(h)
    return _canonical_module_sort(out, ord_key)


def _canonical_module_sort(vecs, ord_key):
    def key(v):
        c, e, _ = _vec_lead(v)
        return (c, tuple(-x for x in ord_key(e)))
    return sorted(vecs, key=key)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def _payload_generators(F):
    r = len(F)
    n = F[0].ring.n
    unit = ((0,) * n, 1)
    gens = []
    for i, f in enumerate(F):
        comps = [f.terms] + [()] * r
        comps[1 + i] = (unit,)
        gens.append(tuple(comps))
    return gens


def syzygy_basis(F) -> SyzygyBasis:
    """A generating set of the syzygy module of the nonempty sequence F."""
    F = tuple(F)
    if not F:
        raise ValueError("syzygy_basis needs a nonempty sequence")
    ring = F[0].ring
    p, block = ring.p, ring.order.block
    gb = _module_buchberger(_payload_generators(F), p, block, ring.order.key)
    vectors = []
    for vec in _canonical_module_sort([v for v in gb if not v[0]],
                                      ring.order.key):
        vectors.append(SyzygyVector(ring._raw(t) for t in vec[1:]))
    return SyzygyBasis(F, vectors)


def _koszul_generators(F):
    r = len(F)
    gens = []
    for i in range(r):
        for j in range(i + 1, r):
            comps = [()] * r
            comps[i] = F[j].terms
            comps[j] = (-F[i]).terms
            gens.append(tuple(comps))
    return gens


def _koszul_gb(F):
    ring = F[0].ring
    gens = _koszul_generators(F)
    if not gens:
        return []
    return _module_buchberger(gens, ring.p, ring.order.block, ring.order.key)


def is_koszul_combination(v: SyzygyVector, F) -> bool:
    """True iff v lies in the submodule generated by the Koszul relations."""
    F = tuple(F)
    ring = F[0].ring
    vec = tuple(g.terms for g in v)
    if _vec_is_zero(vec):
        return True
    gb = _koszul_gb(F)
    if not gb:
        return False
    rem = _vec_reduce(vec, gb, ring.p, ring.order.block)
    return _vec_is_zero(rem)


def get_syz(cell):
    """Witness search: (g, i) with g*f_i in <F minus f_i> and g not in I_X.

    Syzygies are scanned in module-emission order; within one syzygy,
    entries by ascending index; the first witness wins.  Koszul combinations
    are skipped (after reducing against them, which only changes entries by
    elements of <F>).  Returns None when no generator yields a witness,
    certifying a local regular sequence outside V(h).
    """
    F = cell.F
    r = len(F)
    if r == 0:
        return None
    stats.count("syzygy_calls")
    ring = F[0].ring
    p, block = ring.p, ring.order.block
    koszul = _koszul_gb(F)
    G = cell.G
    found = []

    def emit(vec):
        if vec[0]:
            return False
        syz = vec[1:]
        rem = _vec_reduce(syz, koszul, p, block) if koszul else syz
        for idx in range(r):
            terms = rem[idx]
            if not terms:
                continue
            g = ring._raw(tuple(terms))
            if not normal_form(g, G).is_zero():
                found.append((g, idx))
                return True
        return False

    _module_buchberger(_payload_generators(F), p, block, ring.order.key,
                       emit=emit, reduce_final=False)
    return found[0] if found else None
