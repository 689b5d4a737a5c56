"""Homology-vanishing tests over quotient rings, Betti palindromes, and
the characteristic-2 membership anomaly of the rank-f cokernel module.

Quotient-ring homology is decided without quotient-ring Groebner bases:
"zero in the module" always means membership in the span of the map
columns together with the term's own relation columns and the ambient
quotient ideal times each cover generator, all over the polynomial
ring.
"""

from fractions import Fraction

from .rings import Polynomial
from .fields import QQ, GF
from .constructions import (GradedMatrix, map_matrix, module_presentation,
                            generic_xi, _dec_coord, all_subsets)
from .exterior import ExteriorElement, AlternatingMatrix, pfaffian_oracle
from .gbengine import (FreeModuleOrder, make_buckets, nf, buchberger,
                       interreduce)
from .resolutions import syzygies, ladder_betti


def _vec_of_column(col, order):
    acc = []
    for i, p in enumerate(col):
        if not p.is_zero():
            acc.extend((order.key(i, m), c) for m, c in p.terms)
    acc.sort(reverse=True)
    return tuple(acc)


def _column_bidegree(col, row_degs):
    for i, p in enumerate(col):
        if not p.is_zero():
            a, b = p.bidegree()
            return (row_degs[i][0] + a, row_degs[i][1] + b)
    return None


def _quotient_columns(ring, quotient, rank):
    zero = ring.zero()
    cols = []
    for q in quotient:
        for i in range(rank):
            cols.append([q if r == i else zero for r in range(rank)])
    return cols


class ModuleSpan:
    """Membership oracle for the submodule of a free module generated by
    the given columns."""

    def __init__(self, ring, rank, cols, twists=None):
        self.ring = ring
        self.field = ring.field
        self.order = FreeModuleOrder(ring, rank, twists=twists)
        vecs = [_vec_of_column(c, self.order) for c in cols]
        vecs = [v for v in vecs if v]
        G, _, _ = buchberger(vecs, self.order, self.field)
        self._G = interreduce(G, self.order, self.field)
        self._buckets = make_buckets(self._G, self.order, self.field)

    def contains_column(self, col):
        v = _vec_of_column(col, self.order)
        if not v:
            return True
        rem, _ = nf(v, self.order, self._buckets, self.field, zero_only=True)
        return not rem


def kernel_over_quotient(M, quotient=(), target_relations=()):
    """Column generators of {v : M v = 0 in the target module}, where
    the target is coker of its relation columns plus quotient * cover.

    Implemented as syzygies of [M | relations], projected onto the
    M-block coordinates; zero projections are dropped."""
    ring = M.ring
    cols = [list(c) for c in M.columns()]
    col_degs = list(M.col_degs)
    extra = [list(c) for c in target_relations]
    extra.extend(_quotient_columns(ring, quotient, M.nrows))
    for c in extra:
        bd = _column_bidegree(c, M.row_degs)
        if bd is None:
            continue
        cols.append(c)
        col_degs.append(bd)
    entries = [[cols[j][i] for j in range(len(cols))]
               for i in range(M.nrows)]
    aug = GradedMatrix(ring, entries, list(M.row_degs), col_degs)
    S = syzygies(aug)
    out, degs = [], []
    for j in range(S.ncols):
        col = [S.entries[i][j] for i in range(M.ncols)]
        if any(not p.is_zero() for p in col):
            out.append(col)
            degs.append(S.col_degs[j])
    ent = [[out[j][i] for j in range(len(out))] for i in range(M.ncols)]
    return GradedMatrix(ring, ent, list(M.col_degs), degs)


def homology_is_zero(C, position):
    """Whether the presented complex C is exact at the given position.

    Interior: every kernel generator of the outgoing map (kernel taken
    modulo the target's relations) lies in the incoming image plus this
    term's relations.  Rightmost (position 0): the incoming map is onto
    the presented module.  Leftmost: the outgoing map is injective on
    the presented module."""
    L = len(C.maps)
    if not 0 <= position <= L:
        raise ValueError("position out of range")
    ring = C.ring
    term = C.terms[position]
    span_cols = []
    if position < L:
        span_cols.extend(C.maps[position].columns())
    span_cols.extend([list(c) for c in term.extra_relations])
    span_cols.extend(_quotient_columns(ring, C.quotient, term.rank))
    span = ModuleSpan(ring, term.rank, span_cols, twists=term.degs)
    if position >= 1:
        tgt = C.terms[position - 1]
        K = kernel_over_quotient(C.maps[position - 1], C.quotient,
                                 tgt.extra_relations)
        tests = K.columns()
    else:
        zero = ring.zero()
        one = ring.one()
        tests = [[one if r == i else zero for r in range(term.rank)]
                 for i in range(term.rank)]
    return all(span.contains_column(col) for col in tests)


class PalindromeReport:
    __slots__ = ("ok", "c", "sigma")

    def __init__(self, ok, c, sigma):
        self.ok = ok
        self.c = c
        self.sigma = sigma

    def __bool__(self):
        return self.ok

    def __repr__(self):
        return "PalindromeReport(ok=%r, c=%r, sigma=%r)" % (
            self.ok, self.c, self.sigma)


def betti_palindrome_check(B, codim):
    """Whether the (total-degree) Betti table satisfies beta_{i,j} =
    beta_{c-i, sigma-j} with c = codim and the alignment sigma fixed by
    the extreme corners; reports (ok, c, sigma)."""
    tab = B.by_total_degree()
    if not tab:
        return PalindromeReport(False, None, None)
    c = B.length()
    if c != codim:
        return PalindromeReport(False, c, None)
    sigma = min(j for (i, j) in tab if i == 0) + \
        max(j for (i, j) in tab if i == c)
    keys = set(tab) | {(c - i, sigma - j) for (i, j) in tab}
    ok = all(tab.get((i, j), 0) == tab.get((c - i, sigma - j), 0)
             for (i, j) in keys)
    return PalindromeReport(ok, c, sigma)


class Char2Report:
    """Outcome of the characteristic-2 membership comparison at f = 5."""

    __slots__ = ("witness_in_columns_char2", "witness_in_relations_char2",
                 "witness_in_columns_char0", "certificate_matches",
                 "beta1_char2", "beta1_char0", "pd_char2", "pd_char0")

    def __init__(self, **kw):
        for name in self.__slots__:
            setattr(self, name, kw.pop(name))
        if kw:
            raise TypeError("unexpected fields: %r" % sorted(kw))

    @property
    def ok(self):
        return (not self.witness_in_columns_char2
                and self.witness_in_relations_char2
                and self.witness_in_columns_char0
                and self.certificate_matches
                and self.beta1_char2 > self.beta1_char0
                and self.pd_char2 == self.pd_char0 == 3)

    def lines(self):
        return [
            "witness in column span (char 2):       %s (expected False)"
            % self.witness_in_columns_char2,
            "witness in span + relations (char 2):  %s (expected True)"
            % self.witness_in_relations_char2,
            "witness in column span (char 0):       %s (expected True)"
            % self.witness_in_columns_char0,
            "half-coefficient certificate verified: %s"
            % self.certificate_matches,
            "first Betti number: %d (char 2) vs %d (char 0)"
            % (self.beta1_char2, self.beta1_char0),
            "projective dimension: %d (char 2) vs %d (char 0)"
            % (self.pd_char2, self.pd_char0),
        ]


def _witness_column(ring):
    """Pf(1,2,3,4) placed in the last cover coordinate of rank f = 5."""
    A = AlternatingMatrix.generic(ring)
    pf = pfaffian_oracle(A, (1, 2, 3, 4))
    zero = ring.zero()
    return [zero, zero, zero, zero, pf]


def char2_anomaly_check(ring_for_fn):
    """The characteristic-dependence report at f = 5.

    The witness Pf(1,2,3,4) * e_5 must lie outside the span of the
    rank-5 differential's columns in characteristic 2 but inside it in
    characteristic 0, where an explicit preimage exists whose formula
    carries a coefficient 1/2: with phi1 = e_5* and phi4 the dual basis
    4-form on (1,2,3,4),

        c = [phi1(xi)](phi4) + (1/2) xi(phi1 ^ phi4)

    satisfies xi(c) = Pf(1,2,3,4) * phi1, verified by direct expansion
    and by re-multiplying the extracted coordinate vector through the
    differential.  First Betti numbers of the cokernel module must
    differ between the two characteristics while the projective
    dimension stays 3.

    `ring_for_fn(field)` must return the f = 5 x-variable ring over the
    requested field."""
    r2 = ring_for_fn(GF(2))
    r0 = ring_for_fn(QQ)
    if r2.f != 5 or r0.f != 5:
        raise ValueError("the witness construction is specific to f = 5")

    d1_2 = map_matrix("d1", r2)
    d1_0 = map_matrix("d1", r0)
    w2 = _witness_column(r2)
    w0 = _witness_column(r0)

    span2 = ModuleSpan(r2, 5, [list(c) for c in d1_2.columns()],
                       twists=d1_2.row_degs)
    in_cols_2 = span2.contains_column(w2)

    pres2 = module_presentation("N", r2)
    span2r = ModuleSpan(r2, 5, [list(c) for c in pres2.columns()],
                        twists=pres2.row_degs)
    in_rel_2 = span2r.contains_column(w2)

    span0 = ModuleSpan(r0, 5, [list(c) for c in d1_0.columns()],
                       twists=d1_0.row_degs)
    in_cols_0 = span0.contains_column(w0)

    # explicit half-coefficient preimage over the rationals
    xi = generic_xi(r0)
    phi1 = ExteriorElement.basis(r0, "dual", (5,))
    phi4 = ExteriorElement.basis(r0, "dual", (1, 2, 3, 4))
    part1 = phi1.act(xi).act(phi4)
    part2 = xi.act(phi1.wedge(phi4)).scale(r0.const(Fraction(1, 2)))
    cert = part1 + part2
    image = xi.act(cert)  # must equal Pf(1,2,3,4) * e_5*
    A0 = AlternatingMatrix.generic(r0)
    pf0 = pfaffian_oracle(A0, (1, 2, 3, 4))
    expected = ExteriorElement(r0, "dual", 1, {(5,): pf0})
    cert_ok = (image == expected)

    # the same certificate as a coordinate vector through the matrix
    coords = [_dec_coord(cert, S) for S in all_subsets(5, 3)]
    recomposed = [r0.zero()] * 5
    for j, c in enumerate(coords):
        if c.is_zero():
            continue
        for i in range(5):
            e = d1_0.entries[i][j]
            if not e.is_zero():
                recomposed[i] = recomposed[i] + e * c
    cert_ok = cert_ok and all(
        (recomposed[i] - w0[i]).is_zero() for i in range(5))

    B2 = ladder_betti(pres2)
    B0 = ladder_betti(module_presentation("N", r0))

    return Char2Report(
        witness_in_columns_char2=in_cols_2,
        witness_in_relations_char2=in_rel_2,
        witness_in_columns_char0=in_cols_0,
        certificate_matches=cert_ok,
        beta1_char2=B2.totals()[1],
        beta1_char0=B0.totals()[1],
        pd_char2=B2.length(),
        pd_char0=B0.length(),
    )
