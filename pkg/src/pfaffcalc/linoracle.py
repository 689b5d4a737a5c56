"""Degreewise linear-algebra oracle for graded Betti numbers.

A deliberately independent route: no Groebner bases, no S-pairs, no
division — only exact ranks and null spaces of multiplication matrices
on graded pieces, bidegree by bidegree up to a total-degree cap.

The tower is built level by level.  Level 1 is the column module of the
presentation; its graded pieces are spanned by monomial multiples of
the columns.  Minimal generators in each bidegree are found by graded
Nakayama: new generators = dim(piece) − dim(variables · previous
piece), with explicit representatives kept.  The next level is the
syzygy module of those representatives, whose graded pieces are null
spaces of the evaluation matrices; the same Nakayama count reads off
its Betti numbers, and so on until a level has no pieces under the cap.
Minimal generators never admit same-degree syzygies, so levels climb in
degree and the tower ends on its own.
"""

from itertools import combinations_with_replacement

from .betti import BettiTable


def monomials_of_bidegree(ring, a, b):
    """All packed monomials of x-degree a and t-degree b, ascending."""
    codec = ring.codec
    nx = ring.n_x
    nt = len(ring.names) - nx
    if a < 0 or b < 0 or (b and not nt):
        return []
    nvars = len(ring.names)
    out = []
    for xpart in combinations_with_replacement(range(nx), a):
        ex = [0] * nvars
        for v in xpart:
            ex[v] += 1
        for tpart in combinations_with_replacement(range(nx, nvars), b):
            et = ex[:]
            for v in tpart:
                et[v] += 1
            out.append(codec.pack(et))
    out.sort()
    return out


def _bidegrees_upto(cap):
    """All (a, b) with a + b <= cap, in increasing (total, a) order."""
    out = []
    for tot in range(cap + 1):
        for a in range(tot + 1):
            out.append((a, tot - a))
    return out


class _Eliminator:
    """Incremental Gaussian elimination over a field: feed columns, be
    told which ones enlarge the span."""

    def __init__(self, field):
        self.field = field
        self.pivots = {}  # row index -> reduced column (dict row -> coeff)

    def reduce(self, col):
        f = self.field
        col = dict(col)
        while col:
            lead = min(col)
            piv = self.pivots.get(lead)
            if piv is None:
                return lead, col
            c = col[lead]
            for r, v in piv.items():
                s = f.sub(col.get(r, f.zero()), f.mul(c, v))
                if f.is_zero(s):
                    col.pop(r, None)
                else:
                    col[r] = s
        return None, None

    def insert(self, col):
        """True iff the column was independent (and is now recorded)."""
        lead, red = self.reduce(col)
        if lead is None:
            return False
        inv = self.field.inv(red[lead])
        self.pivots[lead] = {r: self.field.mul(v, inv)
                             for r, v in red.items()}
        return True

    @property
    def rank(self):
        return len(self.pivots)


def _mul_vector(ring, vec, mono):
    """Monomial times a module element {(comp, mono): coeff}."""
    mul = ring.codec.mul
    return {(c, mul(m, mono)): v for (c, m), v in vec.items()}


def _piece_coords(vec, index):
    """Dense-ish coordinates {position: coeff} of a module element on an
    indexed strand basis {(comp, mono): position}."""
    out = {}
    for key, v in vec.items():
        pos = index.get(key)
        if pos is None:
            raise AssertionError("element leaves its graded strand")
        out[pos] = v
    return out


def _strand_index(ring, twists, bidegree):
    """Basis {(comp, mono): position} of the free module's piece in one
    bidegree."""
    a, b = bidegree
    index = {}
    pos = 0
    for comp, (ta, tb) in enumerate(twists):
        for m in monomials_of_bidegree(ring, a - ta, b - tb):
            index[(comp, m)] = pos
            pos += 1
    return index


def _poly_columns_to_vectors(pres):
    """Presentation columns as {(row, mono): coeff} elements."""
    out = []
    for j in range(pres.ncols):
        vec = {}
        for i in range(pres.nrows):
            p = pres.entries[i][j]
            for m, c in p.terms:
                vec[(i, m)] = c
        out.append((vec, pres.col_degs[j]))
    return out


def oracle_betti(pres, max_total_degree=6):
    """Bigraded Betti numbers of coker(pres) with total degree at most
    the cap, by graded linear algebra alone.

    The presentation must be bihomogeneous with no unit entries (its
    cover generators are taken as the minimal ones)."""
    ring = pres.ring
    field = ring.field
    for row in pres.entries:
        for e in row:
            if not e.is_zero() and e.degree() == 0:
                raise ValueError("presentation has a unit entry; its cover "
                                 "is not minimal")
    B = BettiTable()
    for bd in pres.row_degs:
        B.add(0, bd)

    degrees = _bidegrees_upto(max_total_degree)
    prev_twists = list(pres.row_degs)
    gens = _poly_columns_to_vectors(pres)  # generating set of level 1
    level = 1
    vars_all = [ring._vcache[i] for i in range(len(ring.names))]

    while True:
        # choose minimal generators of the module generated by `gens`
        # inside Free(prev_twists), bidegree by bidegree
        chosen = []  # (vector, bidegree)
        pieces = {}  # bidegree -> list of basis vectors of the piece
        for bd in degrees:
            index = _strand_index(ring, prev_twists, bd)
            if not index:
                continue
            elim = _Eliminator(field)
            piece = []
            # span of (variables * piece one bidegree lower)
            for v in vars_all:
                va, vb = ring.bidegree_of_monomial(v)
                low = (bd[0] - va, bd[1] - vb)
                for w in pieces.get(low, ()):
                    wv = _mul_vector(ring, w, v)
                    if elim.insert(_piece_coords(wv, index)):
                        piece.append(wv)
            old_rank = elim.rank
            # full piece of the module: monomial multiples of gens
            for gvec, gd in gens:
                for m in monomials_of_bidegree(ring, bd[0] - gd[0],
                                               bd[1] - gd[1]):
                    wv = _mul_vector(ring, gvec, m)
                    if elim.insert(_piece_coords(wv, index)):
                        piece.append(wv)
                        chosen.append((wv, bd))
            if piece:
                pieces[bd] = piece
            new = elim.rank - old_rank
            if new:
                B.add(level, bd, new)
        if not chosen:
            break
        # next level: syzygies of the chosen generators, as null spaces
        # of the evaluation matrices per bidegree
        next_twists = [bd for _, bd in chosen]
        next_gens = []
        for bd in degrees:
            index = _strand_index(ring, prev_twists, bd)
            cols = []  # (syzygy-coordinate key, strand coords)
            for gi, (gvec, gd) in enumerate(chosen):
                for m in monomials_of_bidegree(ring, bd[0] - gd[0],
                                               bd[1] - gd[1]):
                    wv = _mul_vector(ring, gvec, m)
                    cols.append(((gi, m), _piece_coords(wv, index)))
            if not cols:
                continue
            for kvec in _null_space(cols, field):
                next_gens.append((kvec, bd))
        if not next_gens:
            break
        prev_twists = next_twists
        gens = next_gens
        level += 1
        if level > max_total_degree + len(ring.names) + 2:
            raise AssertionError("oracle tower failed to terminate")
    return B


def _null_space(cols, field):
    """Null-space basis of the matrix whose columns are given as
    (key, {row: coeff}); vectors come back as {key: coeff}.

    Augmented elimination: every pivot remembers how it was combined
    from the original columns, so a column that reduces to zero hands
    over its combination as a kernel vector."""
    f = field
    pivots = {}  # lead row -> (monic coords {row: coeff}, combo {key: coeff})
    kernel = []
    for key, coords in cols:
        col = dict(coords)
        combo = {key: f.one()}
        while col:
            lead = min(col)
            piv = pivots.get(lead)
            if piv is None:
                inv = f.inv(col[lead])
                pivots[lead] = ({r: f.mul(v, inv) for r, v in col.items()},
                                {k: f.mul(v, inv) for k, v in combo.items()})
                col = None
                break
            pcoords, pcombo = piv
            c = col[lead]
            for r, v in pcoords.items():
                s = f.sub(col.get(r, f.zero()), f.mul(c, v))
                if f.is_zero(s):
                    col.pop(r, None)
                else:
                    col[r] = s
            for k, v in pcombo.items():
                s = f.sub(combo.get(k, f.zero()), f.mul(c, v))
                if f.is_zero(s):
                    combo.pop(k, None)
                else:
                    combo[k] = s
        if col is not None:
            kernel.append(combo)
    return kernel
