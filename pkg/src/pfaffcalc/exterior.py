"""Exterior algebra over a free module F of rank f, with coefficients in
a polynomial ring.

Elements of wedge^k(F) ("primal") and wedge^k(F*) ("dual") are stored as
{increasing index tuple: polynomial coefficient}.  The two algebras act
on each other as modules: a degree-1 actor expands at the leftmost
position with alternating signs, and a wedge of actors applies right
factor first, i.e. (u ^ v)(w) = u(v(w)).  All other signs (wedge
reordering, interior products of higher degree) emerge from these two
rules; none are hand-coded.

Divided powers of a degree-2 element v are computed by the recursion
e_i*(v^(l)) = e_i*(v) ^ v^(l-1), reading off the coefficient of each
basis monomial from its smallest index.  The independent cross-check,
pfaffian_oracle, instead expands submatrix Pfaffians along the first row
with explicit (-1)^j signs.
"""

from itertools import combinations


def merge_sign(S, T):
    """Sign of sorting the concatenation of two disjoint increasing
    tuples: (-1)^#{(s,t) in S x T : s > t}."""
    inv = 0
    for t in T:
        for s in S:
            if s > t:
                inv += 1
    return -1 if inv & 1 else 1


def _act_basis(T, S):
    """Basis action e_T(e_S) for increasing tuples: returns (sign,
    remaining tuple) or None if T is not contained in S.  The rightmost
    factor of e_T acts first; a degree-1 actor on index s removes it
    with sign (-1)^position."""
    cur = list(S)
    sign = 1
    for t in reversed(T):
        try:
            pos = cur.index(t)
        except ValueError:
            return None
        if pos & 1:
            sign = -sign
        del cur[pos]
    return sign, tuple(cur)


class ExteriorElement:
    __slots__ = ("ring", "side", "k", "terms")

    def __init__(self, ring, side, k, terms=None):
        if side not in ("primal", "dual"):
            raise ValueError("side must be 'primal' or 'dual'")
        self.ring = ring
        self.side = side
        self.k = k
        self.terms = {} if terms is None else terms  # tuple -> Polynomial

    # -- constructors -------------------------------------------------------
    @classmethod
    def zero(cls, ring, side, k):
        return cls(ring, side, k, {})

    @classmethod
    def basis(cls, ring, side, indices, coeff=None):
        """Wedge of basis vectors in the listed order (sign-normalized to
        the increasing tuple)."""
        idx = list(indices)
        if len(set(idx)) != len(idx):
            return cls.zero(ring, side, len(idx))
        sign = 1
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                if idx[a] > idx[b]:
                    sign = -sign
        c = ring.one() if coeff is None else coeff
        if sign < 0:
            c = -c
        key = tuple(sorted(idx))
        if c.is_zero():
            return cls.zero(ring, side, len(idx))
        return cls(ring, side, len(idx), {key: c})

    def _new(self, terms):
        return ExteriorElement(self.ring, self.side, self.k, terms)

    # -- linear structure ------------------------------------------------------
    def __add__(self, other):
        if (other.side, other.k) != (self.side, self.k):
            raise ValueError("degree/side mismatch in addition")
        out = dict(self.terms)
        for key, c in other.terms.items():
            s = out.get(key)
            s = c if s is None else s + c
            if s.is_zero():
                out.pop(key, None)
            else:
                out[key] = s
        return self._new(out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return self._new({k: -c for k, c in self.terms.items()})

    def scale(self, poly):
        if poly.is_zero():
            return ExteriorElement.zero(self.ring, self.side, self.k)
        return self._new({k: c * poly for k, c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def coeff(self, indices):
        """Coefficient of the basis element with the given indices (any
        order; the sign of sorting is applied)."""
        idx = tuple(indices)
        sign = 1
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                if idx[a] > idx[b]:
                    sign = -sign
        c = self.terms.get(tuple(sorted(idx)))
        if c is None:
            return self.ring.zero()
        return -c if sign < 0 else c

    # -- multiplicative structure -----------------------------------------------
    def wedge(self, other):
        if other.side != self.side:
            raise ValueError("wedge requires matching sides")
        out = {}
        for S, p in self.terms.items():
            sset = set(S)
            for T, q in other.terms.items():
                if sset & set(T):
                    continue
                sign = merge_sign(S, T)
                key = tuple(sorted(S + T))
                c = p * q
                if sign < 0:
                    c = -c
                s = out.get(key)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return ExteriorElement(self.ring, self.side, self.k + other.k, out)

    def act(self, other):
        """Module action of self on other (opposite sides, deg self <=
        deg other): result lives on other's side in degree
        other.k - self.k."""
        if other.side == self.side:
            raise ValueError("module action requires opposite sides")
        if self.k > other.k:
            raise ValueError("actor degree exceeds target degree")
        out = {}
        for T, p in self.terms.items():
            for S, q in other.terms.items():
                hit = _act_basis(T, S)
                if hit is None:
                    continue
                sign, key = hit
                c = p * q
                if sign < 0:
                    c = -c
                s = out.get(key)
                s = c if s is None else s + c
                if s.is_zero():
                    out.pop(key, None)
                else:
                    out[key] = s
        return ExteriorElement(self.ring, other.side, other.k - self.k, out)

    # -- divided powers -----------------------------------------------------------
    def divided_power(self, ell):
        if self.k != 2:
            raise ValueError("divided powers are defined here for degree-2 elements")
        if ell < 0:
            raise ValueError("negative divided power")
        if ell == 0:
            return ExteriorElement(self.ring, self.side, 0, {(): self.ring.one()})
        if ell == 1:
            return self
        f = self.ring.f
        prev = self.divided_power(ell - 1)
        opp = "dual" if self.side == "primal" else "primal"
        out = {}
        for i in range(1, f + 1):
            w = ExteriorElement.basis(self.ring, opp, (i,)).act(self).wedge(prev)
            for S, c in w.terms.items():
                if S and S[0] > i:
                    out[(i,) + S] = c
        return ExteriorElement(self.ring, self.side, 2 * ell, out)

    # ------------------------------------------------------------------------------
    def __eq__(self, other):
        return (isinstance(other, ExteriorElement) and self.side == other.side
                and self.k == other.k and self.terms == other.terms)

    def __repr__(self):
        if not self.terms:
            return "<0 (%s deg %d)>" % (self.side, self.k)
        star = "*" if self.side == "dual" else ""
        bits = []
        for key in sorted(self.terms):
            mono = "^".join("e%d%s" % (i, star) for i in key) or "1"
            bits.append("(%s)%s" % (self.terms[key], mono))
        return "<" + " + ".join(bits) + ">"


def contract(phi, f):
    """Action between a dual element phi (degree q) and a primal element
    f (degree p): phi(f) when q <= p, else f(phi)."""
    if phi.side != "dual" or f.side != "primal":
        raise ValueError("contract expects (dual, primal)")
    if phi.k <= f.k:
        return phi.act(f)
    return f.act(phi)


class AlternatingMatrix:
    """n x n alternating matrix over a polynomial ring, stored by its
    strictly-upper entries."""

    __slots__ = ("ring", "n", "upper")

    def __init__(self, ring, n, upper):
        self.ring = ring
        self.n = n
        self.upper = dict(upper)  # (i,j) i<j -> Polynomial

    @classmethod
    def generic(cls, ring):
        f = ring.f
        return cls(ring, f, {(i, j): ring.x(i, j)
                             for i in range(1, f + 1) for j in range(i + 1, f + 1)})

    @classmethod
    def from_two_form(cls, el):
        if el.k != 2:
            raise ValueError("need a degree-2 element")
        n = el.ring.f
        return cls(el.ring, n, {key: c for key, c in el.terms.items()})

    def two_form(self):
        return ExteriorElement(self.ring, "primal", 2, dict(self.upper))

    def entry(self, i, j):
        if i == j:
            return self.ring.zero()
        if i < j:
            return self.upper.get((i, j), self.ring.zero())
        return -self.upper.get((j, i), self.ring.zero())


def pfaffian_oracle(A, rows=None):
    """Pfaffian of the principal submatrix of the alternating matrix A on
    `rows`, by recursive expansion along the first row:

        Pf = sum_{j=2}^{m} (-1)^j A[r1, rj] Pf(rows minus r1, rj)

    Independent of the exterior-algebra machinery by design."""
    if rows is None:
        rows = tuple(range(1, A.n + 1))
    rows = tuple(sorted(rows))
    if len(rows) % 2:
        return A.ring.zero()
    memo = {}

    def pf(rs):
        if not rs:
            return A.ring.one()
        got = memo.get(rs)
        if got is not None:
            return got
        r1 = rs[0]
        total = A.ring.zero()
        for pos in range(1, len(rs)):
            rj = rs[pos]
            rest = rs[1:pos] + rs[pos + 1:]
            term = A.entry(r1, rj) * pf(rest)
            # pos is j-1 for 1-based j; (-1)^j = +1 when pos is odd
            total = total + term if pos & 1 else total - term
        memo[rs] = total
        return total

    return pf(rows)


def determinant_oracle(M):
    """Determinant of a square matrix of polynomials by first-row minor
    expansion with memoization on column subsets."""
    n = len(M)
    if n == 0:
        raise ValueError("empty matrix")
    ring = None
    for row in M:
        for e in row:
            ring = e.ring
            break
        if ring:
            break
    memo = {}

    def det(r, cols):
        if r == n:
            return ring.one()
        got = memo.get(cols)
        if got is not None:
            return got
        total = ring.zero()
        for k, c in enumerate(cols):
            term = M[r][c] * det(r + 1, cols[:k] + cols[k + 1:])
            total = total + term if k % 2 == 0 else total - term
        memo[cols] = total
        return total

    return det(0, tuple(range(n)))


def all_subsets(n, k):
    """Increasing k-subsets of 1..n in lexicographic order."""
    return list(combinations(range(1, n + 1), k))
