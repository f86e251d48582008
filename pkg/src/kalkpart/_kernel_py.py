"""Pure-Python computation kernel.

Reference implementation of the hot polynomial loops; the C kernel in
``_kernel_c.pyx`` mirrors this module exactly.  All functions work on the
flat term representation described in ``kalkpart.arith``: a term list is a
tuple of ``(exponent tuple, coefficient)`` pairs, strictly descending in the
active order.  ``block`` selects the order: 0 for DRL, k >= 1 for the
k-variable elimination block.
"""

IMPL = "python"


def cmp_exps(a, b, block):
    """-1, 0, 1 as x^a <, =, > x^b under the block-DRL order."""
    if block:
        c = _cmp_drl(a[:block], b[:block])
        if c:
            return c
        return _cmp_drl(a[block:], b[block:])
    return _cmp_drl(a, b)


def _cmp_drl(a, b):
    da, db = sum(a), sum(b)
    if da != db:
        return -1 if da < db else 1
    # on a degree tie the smaller exponent in the last differing slot wins
    for x, y in zip(reversed(a), reversed(b)):
        if x != y:
            return 1 if x < y else -1
    return 0


def mul_term(terms, c, u, p):
    """c * x^u * terms; multiplicativity of the order keeps the sorting."""
    if any(u):
        return tuple((tuple(x + y for x, y in zip(e, u)), c * t % p)
                     for e, t in terms)
    if c == 1:
        return tuple(terms)
    return tuple((e, c * t % p) for e, t in terms)


def _merge(a, ai, b, bi, c, u, p, block):
    """a[ai:] + c * x^u * b[bi:], both inputs descending."""
    out = []
    shifted = mul_term(b[bi:], c, u, p)
    la, lb = len(a), len(shifted)
    j = 0
    while ai < la and j < lb:
        ea, ca = a[ai]
        eb, cb = shifted[j]
        cmp = cmp_exps(ea, eb, block)
        if cmp > 0:
            out.append(a[ai])
            ai += 1
        elif cmp < 0:
            out.append(shifted[j])
            j += 1
        else:
            s = (ca + cb) % p
            if s:
                out.append((ea, s))
            ai += 1
            j += 1
    if ai < la:
        out.extend(a[ai:])
    if j < lb:
        out.extend(shifted[j:])
    return out


def add_scaled(a, b, c, u, p, block):
    """a + c * x^u * b."""
    c %= p
    if not c or not b:
        return tuple(a)
    return tuple(_merge(a, 0, b, 0, c, u, p, block))


def add_terms(a, b, p, block):
    if not b:
        return tuple(a)
    if not a:
        return tuple(b)
    n = len(a[0][0])
    return tuple(_merge(a, 0, b, 0, 1, (0,) * n, p, block))


def mul_terms(a, b, p, block):
    """Full product, accumulated in a dict and re-sorted once."""
    if not a or not b:
        return ()
    acc = {}
    for ea, ca in a:
        for eb, cb in b:
            e = tuple(x + y for x, y in zip(ea, eb))
            v = acc.get(e)
            if v is None:
                acc[e] = ca * cb % p
            else:
                acc[e] = (v + ca * cb) % p
    items = [(e, c) for e, c in acc.items() if c]
    items.sort(key=_SortKey(block), reverse=True)
    return tuple(items)


class _SortKey:
    __slots__ = ("block",)

    def __init__(self, block):
        self.block = block

    def __call__(self, term):
        e = term[0]
        k = self.block
        if k:
            return ((sum(e[:k]),) + tuple(-x for x in reversed(e[:k]))
                    + (sum(e[k:]),) + tuple(-x for x in reversed(e[k:])))
        return (sum(e),) + tuple(-x for x in reversed(e))


def spair(f, g, p, block):
    """S-polynomial: the lcm-matched difference with leading terms cancelled."""
    ef, cf = f[0]
    eg, cg = g[0]
    lcm = tuple(max(x, y) for x, y in zip(ef, eg))
    uf = tuple(x - y for x, y in zip(lcm, ef))
    ug = tuple(x - y for x, y in zip(lcm, eg))
    left = mul_term(f, pow(cf, p - 2, p), uf, p)
    return add_scaled(left, g, p - pow(cg, p - 2, p), ug, p, block)


class ReducerSet:
    """A fixed-order list of monic reducers supporting full normal forms.

    Division is deterministic: at every step the first reducer (in insertion
    order) whose lead monomial divides the current lead term is used.
    """

    __slots__ = ("p", "block", "_polys", "_leads")

    def __init__(self, p, block):
        self.p = p
        self.block = block
        self._polys = []
        self._leads = []

    def __len__(self):
        return len(self._polys)

    def add(self, terms):
        if not terms:
            raise ValueError("cannot reduce by the zero polynomial")
        lc = terms[0][1]
        if lc != 1:
            inv = pow(lc, self.p - 2, self.p)
            terms = tuple((e, inv * c % self.p) for e, c in terms)
        else:
            terms = tuple(terms)
        self._polys.append(terms)
        self._leads.append(terms[0][0])

    def reduce(self, terms):
        """Full normal form of ``terms`` by the reducers."""
        p, block = self.p, self.block
        leads, polys = self._leads, self._polys
        ng = len(leads)
        out = []
        work = list(terms)
        off = 0
        while off < len(work):
            e, c = work[off]
            gi = 0
            while gi < ng:
                le = leads[gi]
                for x, y in zip(le, e):
                    if x > y:
                        break
                else:
                    break
                gi += 1
            if gi == ng:
                out.append(work[off])
                off += 1
                continue
            u = tuple(x - y for x, y in zip(e, leads[gi]))
            work = _merge(work, off + 1, polys[gi], 1, p - c, u, p, block)
            off = 0
        return tuple(out)
