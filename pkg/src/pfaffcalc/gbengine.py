"""Groebner machinery for submodules of graded free modules.

Terms of a free module R^r are packed into single integers the same way
ring monomials are (see `monomials`): the component index sits above the
monomial bits, complemented so that integer comparison realizes a
position-over-term order (earlier basis vectors are greater).  Syzygy
levels use Schreyer orders that embed the parent level's keys, so every
level of a free resolution runs on the identical reduction code path.

A module element ("vec") is a tuple of (key, coefficient) pairs sorted
descending by key.  All functions here operate on vecs; the translation
to Polynomial columns lives in `resolutions`.
"""

import heapq

from .rings import Polynomial

MAXC = 1 << 20          # component capacity of a position-over-term order
SBITS = 24              # index bits appended per Schreyer level
SMASK = (1 << SBITS) - 1


def _codec_bits(codec):
    bits = 0
    for bvars, style in codec.blocks:
        bits += 8 * len(bvars) + (16 if style == "grevlex" else 0)
    return bits


class FreeModuleOrder:
    """Position-over-term order on R^rank with one bidegree twist per
    component.  Keys: (MAXC - comp) << shift | monomial.

    mshift is the bit position of the scalar monomial inside a key (0
    here; Schreyer levels accumulate SBITS per level), so that
    multiplying a key by a monomial m is key + ((m - one) << mshift)."""

    __slots__ = ("ring", "rank", "twists", "codec", "one", "guards",
                 "shift", "_mask", "mshift")

    def __init__(self, ring, rank, twists=None):
        if rank >= MAXC:
            raise ValueError("free module rank exceeds the packed capacity")
        if twists is None:
            twists = ((0, 0),) * rank
        twists = tuple((int(a), int(b)) for a, b in twists)
        if len(twists) != rank:
            raise ValueError("need one twist per component")
        self.ring = ring
        self.rank = rank
        self.twists = twists
        self.codec = ring.codec
        self.one = self.codec.one
        self.guards = self.codec._guards
        self.shift = _codec_bits(self.codec)
        self._mask = (1 << self.shift) - 1
        self.mshift = 0

    def key(self, comp, mono):
        return ((MAXC - comp) << self.shift) | mono

    def comp(self, key):
        return MAXC - (key >> self.shift)

    def mono(self, key):
        return key & self._mask

    def moff(self, m):
        """Additive key offset realizing multiplication by the scalar
        monomial m."""
        return m - self.one

    def divides(self, b, a):
        """Does term key b divide term key a (same component, monomial
        divisibility)?"""
        return (a >> self.shift) == (b >> self.shift) and \
            ((a - b + self.one) & self.guards) == 0

    def quot(self, a, b):
        """Scalar monomial a/b for same-component keys with b | a."""
        return a - b + self.one

    def bideg(self, key):
        mx, mt = self.ring.bidegree_of_monomial(self.mono(key))
        ta, tb = self.twists[self.comp(key)]
        return (mx + ta, mt + tb)

    def deg(self, key):
        a, b = self.bideg(key)
        return a + b

    def compdeg(self, comp):
        a, b = self.twists[comp]
        return a + b


class SchreyerOrder:
    """Order on the syzygy module of a basis G inside a parent order:
    m*eps_i compares by the parent key of lt(m*g_i); ties go to the
    smaller index i.  anchors[i] = parent key of lt(g_i); twists[i] =
    bidegree of g_i.

    Keys: (parent key of lt(m*g_i)) << SBITS | (SMASK - i).  The scalar
    monomial m therefore sits mshift = parent.mshift + SBITS bits up, and
    multiplying a key by m adds (m - one) << mshift -- at every nesting
    depth, since parent keys place their own monomial at parent.mshift."""

    __slots__ = ("parent", "ring", "rank", "anchors", "twists", "codec",
                 "one", "guards", "mshift", "bases")

    def __init__(self, parent, anchors, twists):
        if len(anchors) > SMASK:
            raise ValueError("too many basis elements for one Schreyer level")
        if len(anchors) != len(twists):
            raise ValueError("need one twist per anchor")
        self.parent = parent
        self.ring = parent.ring
        self.rank = len(anchors)
        self.anchors = tuple(anchors)
        self.twists = tuple((int(a), int(b)) for a, b in twists)
        self.codec = parent.codec
        self.one = parent.one
        self.guards = parent.guards
        self.mshift = parent.mshift + SBITS
        self.bases = tuple((a << SBITS) | (SMASK - i)
                           for i, a in enumerate(self.anchors))

    def key(self, comp, mono):
        return self.bases[comp] + ((mono - self.one) << self.mshift)

    def comp(self, key):
        return SMASK - (key & SMASK)

    def mono(self, key):
        return ((key - self.bases[SMASK - (key & SMASK)]) >> self.mshift) \
            + self.one

    def moff(self, m):
        return (m - self.one) << self.mshift

    def divides(self, b, a):
        return ((a ^ b) & SMASK) == 0 and \
            ((((a - b) >> self.mshift) + self.one) & self.guards) == 0

    def quot(self, a, b):
        return ((a - b) >> self.mshift) + self.one

    def bideg(self, key):
        mx, mt = self.ring.bidegree_of_monomial(self.mono(key))
        ta, tb = self.twists[self.comp(key)]
        return (mx + ta, mt + tb)

    def deg(self, key):
        a, b = self.bideg(key)
        return a + b

    def compdeg(self, comp):
        a, b = self.twists[comp]
        return a + b


# -- vec primitives ----------------------------------------------------------

def vec_of_poly(p, order, comp=0):
    """Embed a Polynomial as a vec concentrated in one component."""
    return tuple((order.key(comp, m), c) for m, c in p.terms)


def poly_of_vec_component(v, order, ring, comp):
    """The Polynomial sitting in one component of a vec."""
    terms = tuple((order.mono(k), c) for k, c in v if order.comp(k) == comp)
    return Polynomial(ring, terms)


def vec_bideg(v, order):
    """Bidegree of a bihomogeneous vec (raises on mixed terms)."""
    if not v:
        return None
    bd = order.bideg(v[0][0])
    for k, _ in v[1:]:
        if order.bideg(k) != bd:
            raise ValueError("vec is not bihomogeneous")
    return bd


def _merge_sub(a, ai, g, m, c, order, field):
    """a[ai:] minus (m, c)*g[1:] as a fresh descending list.

    Precondition: the caller has arranged that a[ai-1] cancels against
    (m, c)*g[0]; neither canceled head is included."""
    out = []
    off = order.moff(m)
    fmul = field.mul
    fsub = field.sub
    fneg = field.neg
    fzero = field.is_zero
    i, j = ai, 1
    na, ng = len(a), len(g)
    while i < na and j < ng:
        ka, ca = a[i]
        kg = g[j][0] + off
        if ka > kg:
            out.append(a[i])
            i += 1
        elif ka < kg:
            out.append((kg, fneg(fmul(c, g[j][1]))))
            j += 1
        else:
            cc = fsub(ca, fmul(c, g[j][1]))
            if not fzero(cc):
                out.append((ka, cc))
            i += 1
            j += 1
    if i < na:
        out.extend(a[i:])
    while j < ng:
        out.append((g[j][0] + off, fneg(fmul(c, g[j][1]))))
        j += 1
    return out


def make_buckets(G, order, field):
    """Index a basis by leading component for divisor scans: comp ->
    list of (ltkey, inv(lc), terms, index)."""
    buckets = {}
    for idx, g in enumerate(G):
        bucket_insert(buckets, order, field, g, idx)
    return buckets


def bucket_insert(buckets, order, field, g, idx):
    k, c = g[0]
    buckets.setdefault(order.comp(k), []).append((k, field.inv(c), g, idx))


def nf(f, order, buckets, field, record=False, zero_only=False):
    """Full normal form of the vec f against the bucketed basis.

    Returns (remainder, quots): remainder is a descending tuple; quots
    (when record) maps basis index -> list of (monomial, coeff) with
    f = sum(quots * basis) + remainder.  With zero_only=True, returns as
    soon as an irreducible head proves the remainder nonzero (the
    remainder returned is then partial)."""
    work = list(f)
    i0 = 0
    rem = []
    quots = {} if record else None
    ocomp = order.comp
    odiv = order.divides
    oquot = order.quot
    fmul = field.mul
    empty = ()
    while i0 < len(work):
        k, c = work[i0]
        hit = None
        for ent in buckets.get(ocomp(k), empty):
            if odiv(ent[0], k):
                hit = ent
                break
        if hit is None:
            if zero_only:
                rem.extend(work[i0:])
                return tuple(rem), quots
            rem.append(work[i0])
            i0 += 1
            continue
        lk, inv, g, gi = hit
        m = oquot(k, lk)
        cc = fmul(c, inv)
        if record:
            quots.setdefault(gi, []).append((m, cc))
        work = _merge_sub(work, i0 + 1, g, m, cc, order, field)
        i0 = 0
    return tuple(rem), quots


def spair_vec(gi, gj, ua, ub, order, field):
    """ua*gi/lc(gi) - ub*gj/lc(gj); the leading terms cancel exactly."""
    inv_i = field.inv(gi[0][1])
    inv_j = field.inv(gj[0][1])
    offa = order.moff(ua)
    fmul = field.mul
    a = [(k + offa, fmul(c, inv_i)) for k, c in gi]
    return _merge_sub(a, 1, gj, ub, inv_j, order, field), inv_i, inv_j


# -- Buchberger --------------------------------------------------------------

def buchberger(vecs, order, field, trace=False, use_criteria=None):
    """Groebner basis of the submodule generated by `vecs`.

    Returns (G, arows, taus):
      G     list of vecs forming a GB (leading coefficients arbitrary);
      arows (trace only) list of dicts input-index -> Polynomial with
            G[i] = sum_j arows[i][j] * vecs[j];
      taus  (trace only) one syzygy of G per processed S-pair, as a dict
            basis-index -> list of (monomial, coeff); together they
            generate the full syzygy module of G.

    Pair criteria (Gebauer-Moeller chain/multiple elimination, plus the
    coprime criterion on rank-1 scalar input) are applied only when no
    trace is requested, because every eliminated pair would be a missing
    syzygy generator.  use_criteria overrides the default (not trace).
    """
    if use_criteria is None:
        use_criteria = not trace
    if trace and use_criteria:
        raise ValueError("pair criteria would drop syzygy generators")
    ring = order.ring
    codec = order.codec
    field_one = field.one()
    scalar = isinstance(order, FreeModuleOrder) and order.rank == 1

    G = []
    lts = []
    arows = [] if trace else None
    taus = [] if trace else None
    buckets = {}
    heap = []
    alive = set()
    lcms = {}

    def pair_degree(L, comp):
        return codec.deg(L) + order.compdeg(comp)

    def add_pairs(t):
        kt = lts[t]
        ct = order.comp(kt)
        mt = order.mono(kt)
        cand = []
        for i in range(t):
            if order.comp(lts[i]) != ct:
                continue
            L = codec.lcm(order.mono(lts[i]), mt)
            cand.append((codec.deg(L), L, i))
        if use_criteria:
            cand.sort()
            kept = []
            for dL, L, i in cand:
                redundant = False
                for dK, K, _ in kept:
                    if dK <= dL and codec.divides(K, L):
                        redundant = True
                        break
                if not redundant:
                    kept.append((dL, L, i))
            if scalar:
                kept = [(dL, L, i) for (dL, L, i) in kept
                        if not codec.coprime(order.mono(lts[i]), mt)]
            # chain criterion on pending pairs: lt(t) divides their lcm
            # and both new lcms differ from the old one
            for (i, j) in list(alive):
                Lij = lcms[(i, j)]
                if order.comp(lts[i]) != ct:
                    continue
                if not codec.divides(mt, Lij):
                    continue
                Lit = codec.lcm(order.mono(lts[i]), mt)
                Ljt = codec.lcm(order.mono(lts[j]), mt)
                if Lit != Lij and Ljt != Lij:
                    alive.discard((i, j))
                    del lcms[(i, j)]
            cand = kept
        else:
            cand.sort()
        for dL, L, i in cand:
            alive.add((i, t))
            lcms[(i, t)] = L
            heapq.heappush(heap, (pair_degree(L, ct), t, i))

    def trace_row(base, quots):
        row = dict(base)
        if quots:
            for gi in sorted(quots):
                mult = Polynomial(ring, tuple(sorted(quots[gi], reverse=True)))
                for j, p in arows[gi].items():
                    prod = mult * p
                    if j in row:
                        s = row[j] - prod
                    else:
                        s = -prod
                    if s.is_zero():
                        row.pop(j, None)
                    else:
                        row[j] = s
        return row

    def install(remainder, base_row):
        s = len(G)
        G.append(tuple(remainder))
        lts.append(remainder[0][0])
        if trace:
            arows.append(base_row)
        bucket_insert(buckets, order, field, G[s], s)
        add_pairs(s)
        return s

    for idx, v in enumerate(vecs):
        v = tuple(v)
        if not v:
            continue
        rem, quots = nf(v, order, buckets, field, record=trace)
        if not rem:
            continue
        base = {idx: ring.one()} if trace else None
        install(rem, trace_row(base, quots) if trace else None)

    while heap:
        _, j, i = heapq.heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        L = lcms.pop((i, j))
        ua = codec.div(L, order.mono(lts[i]))
        ub = codec.div(L, order.mono(lts[j]))
        sp, inv_i, inv_j = spair_vec(G[i], G[j], ua, ub, order, field)
        rem, quots = nf(sp, order, buckets, field, record=trace)
        if trace:
            tau = {i: [(ua, inv_i)], j: [(ub, field.neg(inv_j))]}
            if quots:
                for gi in quots:
                    entry = tau.setdefault(gi, [])
                    entry.extend((m, field.neg(c)) for m, c in quots[gi])
        if rem:
            if trace:
                row_i = arows[i]
                row_j = arows[j]
                mono_i = Polynomial(ring, ((ua, inv_i),))
                mono_j = Polynomial(ring, ((ub, inv_j),))
                base = {}
                for t, p in row_i.items():
                    base[t] = mono_i * p
                for t, p in row_j.items():
                    s = base.get(t)
                    prod = mono_j * p
                    s = -prod if s is None else s - prod
                    if s.is_zero():
                        base.pop(t, None)
                    else:
                        base[t] = s
                s_idx = install(rem, trace_row(base, quots))
            else:
                s_idx = install(rem, None)
            if trace:
                tau.setdefault(s_idx, []).append((order.one, field.neg(field_one)))
        if trace:
            taus.append(tau)
    return G, arows, taus


def interreduce(G, order, field):
    """Reduce a GB to a monic, auto-reduced one: drop elements whose
    leading term is divisible by another's, then fully reduce each
    survivor against the rest.  The result is still a GB of the same
    submodule, sorted descending by leading key."""
    items = sorted(G, key=lambda g: g[0][0])
    kept = []
    for g in items:
        k = g[0][0]
        if any(order.divides(h[0][0], k) for h in kept):
            continue
        kept.append(g)
    changed = True
    while changed:
        changed = False
        for i in range(len(kept)):
            others = kept[:i] + kept[i + 1:]
            buckets = make_buckets(others, order, field)
            rem, _ = nf(kept[i], order, buckets, field)
            if rem != kept[i]:
                if not rem or rem[0][0] != kept[i][0][0]:
                    raise AssertionError("interreduction destroyed a leading term")
                kept[i] = rem
                changed = True
    out = []
    for g in sorted(kept, key=lambda g: g[0][0], reverse=True):
        c = g[0][1]
        if c == field.one():
            out.append(tuple(g))
        else:
            inv = field.inv(c)
            out.append(tuple((k, field.mul(cc, inv)) for k, cc in g))
    return out


# -- Schreyer levels ---------------------------------------------------------

def schreyer_pairs(G, order):
    """The divisibility-minimal S-pair set for one syzygy level.

    For each i, among the quotient monomials u_ij = lcm(lt_i, lt_j)/lt_i
    over all j > i with matching lead component, only the divisibility-
    minimal ones are kept (one representative among equals).  The
    syzygies of the kept pairs have leading terms u_ij*eps_i generating
    the full leading-term module of the syzygy module, so they form a
    Groebner basis of it under the Schreyer order.
    Returns a list of (i, j, ua, ub)."""
    codec = order.codec
    n = len(G)
    comps = [order.comp(g[0][0]) for g in G]
    monos = [order.mono(g[0][0]) for g in G]
    by_comp = {}
    for i, c in enumerate(comps):
        by_comp.setdefault(c, []).append(i)
    out = []
    for c in sorted(by_comp):
        idxs = by_comp[c]
        for pos, i in enumerate(idxs):
            cand = []
            for j in idxs[pos + 1:]:
                L = codec.lcm(monos[i], monos[j])
                u = codec.div(L, monos[i])
                cand.append((codec.deg(u), u, j, L))
            cand.sort()
            kept = []
            for du, u, j, L in cand:
                redundant = False
                for dv, v, _, _ in kept:
                    if dv <= du and codec.divides(v, u):
                        redundant = True
                        break
                if not redundant:
                    kept.append((du, u, j, L))
            for du, u, j, L in kept:
                out.append((i, j, u, codec.div(L, monos[j])))
    return out


def schreyer_level(G, order, field):
    """Syzygies of the GB G, as a GB under the induced Schreyer order.

    Returns (taus, next_order).  Each tau is a vec over next_order; its
    leading term is u_ij * eps_i by construction (asserted)."""
    anchors = [g[0][0] for g in G]
    twists = [vec_bideg(g, order) for g in G]
    nxt = SchreyerOrder(order, anchors, twists)
    buckets = make_buckets(G, order, field)
    taus = []
    for (i, j, ua, ub) in schreyer_pairs(G, order):
        sp, inv_i, inv_j = spair_vec(G[i], G[j], ua, ub, order, field)
        rem, quots = nf(sp, order, buckets, field, record=True)
        if rem:
            raise AssertionError("S-pair of a Groebner basis did not reduce to zero")
        acc = {}
        acc[nxt.key(i, ua)] = inv_i
        kj = nxt.key(j, ub)
        acc[kj] = field.sub(acc.get(kj, field.zero()), inv_j)
        if quots:
            for gi, terms in quots.items():
                for m, c in terms:
                    k = nxt.key(gi, m)
                    s = field.sub(acc.get(k, field.zero()), c)
                    if field.is_zero(s):
                        acc.pop(k, None)
                    else:
                        acc[k] = s
        tau = tuple(sorted(((k, c) for k, c in acc.items()
                            if not field.is_zero(c)), reverse=True))
        if tau[0][0] != nxt.key(i, ua):
            raise AssertionError("Schreyer leading term mismatch")
        taus.append(tau)
    taus.sort(key=lambda v: v[0][0], reverse=True)
    return taus, nxt


def schreyer_resolution(vecs, order0, field, max_levels, tidy=True):
    """Iterated syzygies of the submodule generated by `vecs` inside the
    free module described by order0.

    Returns (levels, truncated): levels[k] = (ambient_order, elements);
    levels[0] holds a GB of the input submodule, levels[k+1] a GB of the
    syzygies of levels[k].  The ladder stops when a level has no
    same-component pairs left; truncated reports stopping at max_levels
    instead."""
    G, _, _ = buchberger(vecs, order0, field)
    if tidy:
        G = interreduce(G, order0, field)
    else:
        G = sorted(G, key=lambda g: g[0][0], reverse=True)
    if not G:
        return [], False
    levels = [(order0, G)]
    while True:
        order_k, Gk = levels[-1]
        if not schreyer_pairs(Gk, order_k):
            return levels, False
        if len(levels) >= max_levels:
            return levels, True
        taus, nxt = schreyer_level(Gk, order_k, field)
        if tidy:
            taus = interreduce(taus, nxt, field)
        if not taus:
            return levels, False
        levels.append((nxt, taus))
