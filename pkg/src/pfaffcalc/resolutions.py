"""Syzygies of graded matrices, graded free resolutions, and Betti
tables.

Two independent Betti routes are provided on purpose:

* ``free_resolution`` builds the iterated-syzygy ladder under Schreyer
  orders, converts it to a chain of graded matrices, and minimalizes it
  by contracting unit entries (deterministic pivot order);
* ``ladder_betti`` never minimalizes: it reads the minimal Betti numbers
  off the non-minimal ladder as dimensions of constant-strand homology
  (number of generators in a bidegree minus the ranks of the incoming
  and outgoing constant blocks).

Both must agree; tests compare them.
"""

from .rings import Polynomial
from .constructions import GradedMatrix
from .betti import BettiTable
from .gbengine import (FreeModuleOrder, vec_of_poly, poly_of_vec_component,
                       vec_bideg, make_buckets, nf, buchberger, interreduce,
                       schreyer_resolution)


class ResolutionTruncated(Exception):
    """A resolution did not finish within the requested length."""


# -- vec <-> GradedMatrix ----------------------------------------------------

def _vecs_of_matrix(M):
    """Columns of a GradedMatrix as engine vecs, plus the ambient order."""
    order = FreeModuleOrder(M.ring, M.nrows, twists=M.row_degs)
    vecs = []
    for j in range(M.ncols):
        acc = []
        for i in range(M.nrows):
            p = M.entries[i][j]
            if not p.is_zero():
                acc.extend((order.key(i, m), c) for m, c in p.terms)
        acc.sort(reverse=True)
        vecs.append(tuple(acc))
    return vecs, order


def _matrix_of_vecs(vecs, order, col_degs=None):
    """GradedMatrix with the given vecs as columns."""
    ring = order.ring
    if col_degs is None:
        col_degs = [vec_bideg(v, order) for v in vecs]
    ent = [[poly_of_vec_component(v, order, ring, i) for v in vecs]
           for i in range(order.rank)]
    return GradedMatrix(ring, ent, list(order.twists), list(col_degs))


# -- syzygies by division tracing --------------------------------------------

def syzygies(M):
    """A graded matrix whose columns generate ker(M : R^ncols -> R^nrows).

    Route: run the Buchberger loop with full division tracing.  With
    G = A * F (F the input columns, A the tracing rows) and F = B * G
    (each input re-divided by the final basis), the kernel is generated
    by the traced S-pair syzygies pushed through A together with the
    columns of Id - B*A.  Zero input columns contribute standard basis
    vectors."""
    ring = M.ring
    field = ring.field
    vecs, order = _vecs_of_matrix(M)
    live = [j for j, v in enumerate(vecs) if v]
    F = [vecs[j] for j in live]
    m = M.ncols
    sorder = FreeModuleOrder(ring, m, twists=M.col_degs)
    cols = []

    for j in range(m):
        if not vecs[j]:
            cols.append(((sorder.key(j, sorder.one), field.one()),))

    if F:
        G, arows, taus = buchberger(F, order, field, trace=True)
        buckets = make_buckets(G, order, field)

        def push_through_A(coeffs):
            # coeffs: dict basis-index -> Polynomial; returns the vec
            # sum_s coeffs[s] * (row s of A), in input coordinates.
            acc = {}
            for s, c in coeffs.items():
                for jloc, p in arows[s].items():
                    prod = c * p
                    if jloc in acc:
                        q = acc[jloc] + prod
                    else:
                        q = prod
                    if q.is_zero():
                        acc.pop(jloc, None)
                    else:
                        acc[jloc] = q
            out = []
            for jloc, p in acc.items():
                jg = live[jloc]
                out.extend((sorder.key(jg, mm), cc) for mm, cc in p.terms)
            out.sort(reverse=True)
            return tuple(out)

        for tau in taus:
            coeffs = {s: Polynomial(ring, tuple(sorted(terms, reverse=True)))
                      for s, terms in tau.items()}
            v = push_through_A(coeffs)
            if v:
                cols.append(v)

        for jloc, v in enumerate(F):
            rem, quots = nf(v, order, buckets, field, record=True)
            if rem:
                raise AssertionError("basis member failed to re-divide to zero")
            coeffs = {s: Polynomial(ring, tuple(sorted(terms, reverse=True)))
                      for s, terms in (quots or {}).items()}
            bav = push_through_A(coeffs)
            ej = ((sorder.key(live[jloc], sorder.one), field.one()),)
            diff = _vec_sub(ej, bav, field)
            if diff:
                cols.append(diff)

    return _matrix_of_vecs(cols, sorder)


def _vec_sub(a, b, field):
    """a - b for descending vecs."""
    out = {}
    for k, c in a:
        out[k] = c
    for k, c in b:
        if k in out:
            s = field.sub(out[k], c)
            if field.is_zero(s):
                del out[k]
            else:
                out[k] = s
        else:
            out[k] = field.neg(c)
    return tuple(sorted(out.items(), reverse=True))


# -- free complexes -----------------------------------------------------------

class FreeComplex:
    """A chain F_0 <- F_1 <- ... of graded free modules.

    twists[i] lists the generator bidegrees of F_i; diffs[i] is the
    graded matrix of d_{i+1}: F_{i+1} -> F_i.  Invariants (checked):
    differentials match the twist data, and consecutive composites are
    identically zero.  `truncated` marks a chain cut off before its
    natural end; it is never set silently by the constructors here."""

    __slots__ = ("ring", "twists", "diffs", "truncated")

    def __init__(self, ring, twists, diffs, truncated=False, check=True):
        self.ring = ring
        self.twists = [list(tw) for tw in twists]
        self.diffs = list(diffs)
        self.truncated = bool(truncated)
        if len(self.twists) != len(self.diffs) + 1:
            raise ValueError("need exactly one twist list per module")
        if check:
            self.check()

    @property
    def length(self):
        return len(self.twists) - 1

    def check(self):
        for k, d in enumerate(self.diffs):
            if list(d.row_degs) != list(self.twists[k]) or \
                    list(d.col_degs) != list(self.twists[k + 1]):
                raise ValueError("differential %d does not match the twist "
                                 "data" % (k + 1,))
            d.check_degrees()
        for k in range(len(self.diffs) - 1):
            if not (self.diffs[k] @ self.diffs[k + 1]).is_zero():
                raise ValueError("composite d_%d o d_%d is nonzero"
                                 % (k + 1, k + 2))

    def betti(self):
        """Generator counts by (homological index, bidegree) — the Betti
        table when the complex is minimal."""
        B = BettiTable()
        for i, tw in enumerate(self.twists):
            for bd in tw:
                B.add(i, bd)
        return B

    def is_minimal(self):
        return not any(not e.is_zero() and e.degree() == 0
                       for d in self.diffs for row in d.entries for e in row)

    def __repr__(self):
        return "<FreeComplex ranks %r%s>" % (
            [len(t) for t in self.twists],
            " (truncated)" if self.truncated else "")


def _ladder_complex(levels, order0, truncated):
    """Convert schreyer_resolution output to a FreeComplex over F_0 =
    the free module of order0."""
    ring = order0.ring
    twists = [list(order0.twists)]
    diffs = []
    for k, (order_k, els) in enumerate(levels):
        coldegs = [vec_bideg(el, order_k) for el in els]
        diffs.append(_matrix_of_vecs(els, order_k, coldegs))
        twists.append(coldegs)
    return FreeComplex(ring, twists, diffs, truncated=truncated)


def _run_ladder(pres, cap):
    field = pres.ring.field
    vecs, order0 = _vecs_of_matrix(pres)
    vecs = [v for v in vecs if v]
    levels, truncated = schreyer_resolution(vecs, order0, field,
                                            max_levels=cap)
    return levels, truncated, order0


def free_resolution(pres, max_len):
    """The minimal graded free resolution of coker(pres), of length at
    most max_len.

    Iterated Schreyer syzygies of the column module, assembled over the
    target free module and minimalized.  If the ladder does not end
    naturally within a generous internal cap, or the minimal resolution
    turns out longer than max_len, a ResolutionTruncated error is raised
    — never a silently shortened complex."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    cap = max(max_len + 3, len(pres.ring.names) + 2)
    levels, truncated, order0 = _run_ladder(pres, cap)
    if truncated:
        raise ResolutionTruncated(
            "syzygy ladder still active after %d levels" % cap)
    C = _ladder_complex(levels, order0, truncated=False)
    minC, _ = minimalize(C)
    if minC.length > max_len:
        raise ResolutionTruncated(
            "minimal resolution has length %d, beyond the requested %d"
            % (minC.length, max_len))
    return minC


def minimalize(C):
    """(homotopy-equivalent minimal complex, its Betti table).

    Contracts unit entries one at a time: a constant entry u at (r, c)
    of d_k is removed by a Schur update of d_k, deleting row r / column
    c there, column r of d_{k-1} and row c of d_{k+1} (basis changes
    touch only the deleted row and column).  Pivot choice is the lowest
    (i, j) unit of the lowest k, so tables are reproducible."""
    ring = C.ring
    field = ring.field
    mats = [[row[:] for row in d.entries] for d in C.diffs]
    twists = [list(tw) for tw in C.twists]

    def find_unit(mat):
        for i, row in enumerate(mat):
            for j, e in enumerate(row):
                if not e.is_zero() and e.degree() == 0:
                    return i, j
        return None

    progress = True
    while progress:
        progress = False
        for k in range(len(mats)):
            while True:
                piv = find_unit(mats[k])
                if piv is None:
                    break
                progress = True
                r, c = piv
                mat = mats[k]
                uinv = field.inv(mat[r][c].lc())
                colvals = [mat[i][c] for i in range(len(mat))]
                rowvals = list(mat[r])
                for i in range(len(mat)):
                    if i == r or colvals[i].is_zero():
                        continue
                    fac = colvals[i].scale(uinv)
                    rowi = mat[i]
                    for j in range(len(rowvals)):
                        if j == c or rowvals[j].is_zero():
                            continue
                        rowi[j] = rowi[j] - fac * rowvals[j]
                del mat[r]
                for row in mat:
                    del row[c]
                twists[k].pop(r)
                twists[k + 1].pop(c)
                if k + 1 < len(mats):
                    del mats[k + 1][c]
                if k > 0:
                    for row in mats[k - 1]:
                        del row[r]

    while twists and not twists[-1]:
        twists.pop()
        mats.pop()

    diffs = []
    for k, mat in enumerate(mats):
        diffs.append(GradedMatrix(ring, mat, twists[k], twists[k + 1]))
    out = FreeComplex(ring, twists, diffs, truncated=C.truncated)
    if not out.is_minimal():
        raise AssertionError("unit entry survived minimalization")
    return out, out.betti()


def complex_betti(C):
    """Betti table of a minimal complex (errors on non-minimal input)."""
    if not C.is_minimal():
        raise ValueError("complex is not minimal; minimalize it first")
    return C.betti()


# -- Betti numbers straight from the ladder ----------------------------------

def _field_rank(rows, field):
    """Rank of a dense matrix given as lists of field elements."""
    if not rows:
        return 0
    rows = [row[:] for row in rows]
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, len(rows)):
            if not field.is_zero(rows[i][c]):
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][c])
        base = rows[rank]
        for i in range(rank + 1, len(rows)):
            if not field.is_zero(rows[i][c]):
                f = field.mul(rows[i][c], inv)
                rowi = rows[i]
                for j in range(c, ncols):
                    rowi[j] = field.sub(rowi[j], field.mul(f, base[j]))
        rank += 1
        if rank == len(rows):
            break
    return rank


def _constant_strands(order, els, row_twists, col_twists, field):
    """For one ladder differential, the constant blocks by bidegree:
    {bidegree: rows list over row-indices with that twist}."""
    rows_at = {}
    for i, bd in enumerate(row_twists):
        rows_at.setdefault(bd, []).append(i)
    cols_at = {}
    for j, bd in enumerate(col_twists):
        cols_at.setdefault(bd, []).append(j)
    one = order.one
    strands = {}
    for bd, cols in cols_at.items():
        rows = rows_at.get(bd)
        if not rows:
            continue
        rowpos = {ri: p for p, ri in enumerate(rows)}
        zero = field.zero()
        block = [[zero] * len(cols) for _ in rows]
        for p, j in enumerate(cols):
            for key, c in els[j]:
                if order.mono(key) == one:
                    i = order.comp(key)
                    if i in rowpos:
                        block[rowpos[i]][p] = c
        strands[bd] = block
    return strands


def ladder_betti(pres, cap=None):
    """Minimal bigraded Betti numbers of coker(pres), read directly off
    the non-minimal Schreyer ladder.

    In each bidegree, beta_{k} = (generators of the ladder's F_k there)
    minus the ranks of the incoming and outgoing constant strands; no
    minimalization is performed.  Raises ResolutionTruncated if the
    ladder does not end naturally within the cap."""
    ring = pres.ring
    field = ring.field
    if cap is None:
        cap = len(ring.names) + 2
    levels, truncated, order0 = _run_ladder(pres, cap)
    if truncated:
        raise ResolutionTruncated(
            "syzygy ladder still active after %d levels" % cap)
    twists = [list(order0.twists)]
    for k in range(1, len(levels)):
        twists.append(list(levels[k][0].twists))
    if levels:
        last_order, last_els = levels[-1]
        twists.append([vec_bideg(el, last_order) for el in last_els])
    ranks = []  # ranks[k]: {bidegree: rank of the constant strand of d_{k+1}}
    for k, (order_k, els) in enumerate(levels):
        strands = _constant_strands(order_k, els, twists[k], twists[k + 1],
                                    field)
        ranks.append({bd: _field_rank(rows, field)
                      for bd, rows in strands.items()})
    B = BettiTable()
    for k, tw in enumerate(twists):
        counts = {}
        for bd in tw:
            counts[bd] = counts.get(bd, 0) + 1
        for bd, n in counts.items():
            r_out = ranks[k].get(bd, 0) if k < len(ranks) else 0
            r_in = ranks[k - 1].get(bd, 0) if k >= 1 else 0
            beta = n - r_out - r_in
            if beta < 0:
                raise AssertionError("negative strand homology dimension")
            if beta:
                B.add(k, bd, beta)
    return B
