"""Bigraded polynomial rings R0[x_(i,j), t_i] with exact arithmetic.

The standard ring for matrix size f has the x-variables x_(i,j),
1 <= i < j <= f, listed ascending by (i,j), followed by t_1..t_f.
x-variables carry bidegree (1,0) and t-variables (0,1).  Polynomials
are immutable term lists (packed monomial, coefficient), sorted
descending in the ring's monomial order.
"""

from . import monomials
from .fields import CoefficientField


class Monomial:
    """Exponent-vector view of a monomial, with cached degrees."""

    __slots__ = ("exponents", "degree", "bidegree")

    def __init__(self, exponents, n_x=None):
        self.exponents = tuple(exponents)
        self.degree = sum(self.exponents)
        if n_x is None:
            self.bidegree = None
        else:
            dx = sum(self.exponents[:n_x])
            self.bidegree = (dx, self.degree - dx)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return "Monomial%r" % (self.exponents,)


def monomial_cmp(a, b, codec):
    """-1 / 0 / +1 comparison of two Monomials under the given order."""
    ka = codec.pack(a.exponents)
    kb = codec.pack(b.exponents)
    return (ka > kb) - (ka < kb)


class PolyRing:
    __slots__ = ("field", "names", "codec", "n_x", "f", "xidx", "tidx", "_vcache")

    def __init__(self, field, names, codec, n_x, f=None):
        if not isinstance(field, CoefficientField):
            raise TypeError("field must be a CoefficientField")
        if codec.nvars != len(names):
            raise ValueError("codec/name count mismatch")
        self.field = field
        self.names = tuple(names)
        self.codec = codec
        self.n_x = n_x
        self.f = f
        self.xidx = {}
        self.tidx = {}
        for k, nm in enumerate(self.names):
            if nm.startswith("x_("):
                i, j = nm[3:-1].split(",")
                self.xidx[(int(i), int(j))] = k
            elif nm.startswith("t_"):
                self.tidx[int(nm[2:])] = k
        self._vcache = [codec.var(i) for i in range(codec.nvars)]

    # -- constructors -----------------------------------------------------
    def zero(self):
        return Polynomial(self, ())

    def one(self):
        return Polynomial(self, ((self.codec.one, self.field.one()),))

    def const(self, c):
        c = self.field.from_int(c) if isinstance(c, int) else c
        if self.field.is_zero(c):
            return self.zero()
        return Polynomial(self, ((self.codec.one, c),))

    def var_poly(self, i):
        return Polynomial(self, ((self._vcache[i], self.field.one()),))

    def x(self, i, j):
        return self.var_poly(self.xidx[(i, j)])

    def t(self, i):
        return self.var_poly(self.tidx[i])

    def from_exp_terms(self, pairs):
        """pairs: iterable of (exponent tuple, coefficient)."""
        acc = {}
        f = self.field
        for exps, c in pairs:
            m = self.codec.pack(exps)
            if m in acc:
                acc[m] = f.add(acc[m], c)
            else:
                acc[m] = c
        terms = tuple((m, c) for m, c in sorted(acc.items(), reverse=True)
                      if not f.is_zero(c))
        return Polynomial(self, terms)

    # -- structure ----------------------------------------------------------
    def monomial_view(self, m):
        return Monomial(self.codec.unpack(m), self.n_x)

    def bidegree_of_monomial(self, m):
        exps = self.codec.unpack(m)
        dx = sum(exps[: self.n_x])
        return (dx, sum(exps) - dx)

    def with_order(self, order):
        """Same variables/field under another order ('grevlex', 'lex',
        'elimxfirst')."""
        n = len(self.names)
        if order == "grevlex":
            codec = monomials.grevlex(n)
        elif order == "lex":
            codec = monomials.lex(n)
        elif order == "elimxfirst":
            if self.n_x in (0, n):
                raise ValueError("elimxfirst needs both x- and t-variables")
            codec = monomials.elim_blocks(n, self.n_x, "elimxfirst")
        else:
            raise ValueError("unknown order %r" % (order,))
        return PolyRing(self.field, self.names, codec, self.n_x, self.f)

    def with_tag(self, tagname="w_0"):
        """Ring with one extra variable that outranks everything (its own
        leading block); used for elimination.  The tag is the LAST index
        so existing exponent vectors embed by appending a zero."""
        n = len(self.names)
        codec = monomials.OrderCodec(
            n + 1, [((n,), "grevlex"), (tuple(range(n)), "grevlex")], "tagfirst")
        return PolyRing(self.field, self.names + (tagname,), codec, self.n_x, self.f)

    def convert(self, poly, target):
        """Re-sort a polynomial into `target`, which must share a variable
        name prefix (extra target variables get exponent 0)."""
        if target.names[: len(self.names)] != self.names:
            raise ValueError("rings do not share a variable prefix")
        pad = len(target.names) - len(self.names)
        pairs = []
        for m, c in poly.terms:
            exps = self.codec.unpack(m)
            pairs.append((exps + (0,) * pad, c))
        return target.from_exp_terms(pairs)

    def restrict(self, poly, target):
        """Inverse of convert: drop trailing variables, which must not
        occur in the polynomial."""
        if self.names[: len(target.names)] != target.names:
            raise ValueError("rings do not share a variable prefix")
        k = len(target.names)
        pairs = []
        for m, c in poly.terms:
            exps = self.codec.unpack(m)
            if any(exps[k:]):
                raise ValueError("polynomial involves a variable outside the target ring")
            pairs.append((exps[:k], c))
        return target.from_exp_terms(pairs)

    def __eq__(self, other):
        return (isinstance(other, PolyRing) and self.field == other.field
                and self.names == other.names and self.codec.name == other.codec.name)

    def __hash__(self):
        return hash((self.field, self.names, self.codec.name))

    def __repr__(self):
        return "PolyRing(%r, %d vars, %s)" % (self.field, len(self.names), self.codec.name)


def ring_for(f, field, order="grevlex", vars="xt"):
    """The standard ring for matrix size f: x_(i,j) ascending, then t_i.
    vars='x' gives the x-only subring."""
    if f < 2:
        raise ValueError("need f >= 2")
    names = ["x_(%d,%d)" % (i, j) for i in range(1, f + 1) for j in range(i + 1, f + 1)]
    n_x = len(names)
    if vars == "xt":
        names += ["t_%d" % i for i in range(1, f + 1)]
    elif vars != "x":
        raise ValueError("vars must be 'xt' or 'x'")
    n = len(names)
    if order == "grevlex":
        codec = monomials.grevlex(n)
    elif order == "lex":
        codec = monomials.lex(n)
    elif order == "elimxfirst":
        if vars != "xt":
            raise ValueError("elimxfirst needs both variable groups")
        codec = monomials.elim_blocks(n, n_x, "elimxfirst")
    else:
        raise ValueError("unknown order %r" % (order,))
    return PolyRing(field, names, codec, n_x, f)


class Polynomial:
    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms  # tuple of (packed monomial, coeff), descending

    # -- predicates ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def lm(self):
        return self.terms[0][0]

    def lc(self):
        return self.terms[0][1]

    def degree(self):
        """Total degree (max over terms); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        deg = self.ring.codec.deg
        return max(deg(m) for m, _ in self.terms)

    def bidegree(self):
        """(x-degree, t-degree) of a bihomogeneous polynomial; raises on
        mixed terms.  Zero polynomial -> None."""
        if not self.terms:
            return None
        bd = self.ring.bidegree_of_monomial(self.terms[0][0])
        for m, _ in self.terms[1:]:
            if self.ring.bidegree_of_monomial(m) != bd:
                raise ValueError("polynomial is not bihomogeneous")
        return bd

    def is_homogeneous(self):
        if not self.terms:
            return True
        deg = self.ring.codec.deg
        d = deg(self.terms[0][0])
        return all(deg(m) == d for m, _ in self.terms)

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        f = self.ring.field
        a, b = self.terms, other.terms
        ia = ib = 0
        na, nb = len(a), len(b)
        out = []
        while ia < na and ib < nb:
            ma, ca = a[ia]
            mb, cb = b[ib]
            if ma > mb:
                out.append(a[ia]); ia += 1
            elif ma < mb:
                out.append(b[ib]); ib += 1
            else:
                c = f.add(ca, cb)
                if not f.is_zero(c):
                    out.append((ma, c))
                ia += 1; ib += 1
        out.extend(a[ia:]); out.extend(b[ib:])
        return Polynomial(self.ring, tuple(out))

    def __sub__(self, other):
        other = self._coerce(other)
        return self + (-other)

    def __neg__(self):
        f = self.ring.field
        return Polynomial(self.ring, tuple((m, f.neg(c)) for m, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            f = self.ring.field
            one = self.ring.codec.one
            acc = {}
            get = acc.get
            for ma, ca in self.terms:
                base = ma - one
                for mb, cb in other.terms:
                    m = base + mb
                    c = get(m)
                    acc[m] = f.mul(ca, cb) if c is None else f.add(c, f.mul(ca, cb))
            terms = tuple((m, c) for m, c in sorted(acc.items(), reverse=True)
                          if not f.is_zero(c))
            return Polynomial(self.ring, terms)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        f = self.ring.field
        if isinstance(c, int):
            c = f.from_int(c)
        if f.is_zero(c):
            return self.ring.zero()
        return Polynomial(self.ring, tuple((m, f.mul(cc, c)) for m, cc in self.terms))

    def mul_monomial(self, m, c=None):
        f = self.ring.field
        off = m - self.ring.codec.one
        if c is None:
            return Polynomial(self.ring, tuple((mm + off, cc) for mm, cc in self.terms))
        return Polynomial(self.ring, tuple((mm + off, f.mul(cc, c)) for mm, cc in self.terms))

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power")
        if n * max(self.degree(), 0) > monomials.MAX_EXP:
            # the per-variable cap is what actually matters; this coarse
            # bound stays well inside it
            raise ValueError("power too large for the packed exponent range")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n > 1
            if base_needed:
                base = base * base
            n >>= 1
        return result

    def monic(self):
        if not self.terms:
            return self
        f = self.ring.field
        c = self.terms[0][1]
        if c == f.one():
            return self
        inv = f.inv(c)
        return Polynomial(self.ring, tuple((m, f.mul(cc, inv)) for m, cc in self.terms))

    # -- evaluation ------------------------------------------------------------
    def specialize(self, values):
        """Evaluate at a point: values is a sequence of field elements, one
        per variable.  Exact ring homomorphism into the field."""
        f = self.ring.field
        unpack = self.ring.codec.unpack
        total = f.zero()
        for m, c in self.terms:
            v = c
            for e, val in zip(unpack(m), values):
                if e:
                    v = f.mul(v, val ** e if not self.ring.field.char else pow(val, e, f.char))
            total = f.add(total, v)
        return total

    # -- misc ---------------------------------------------------------------
    def terms_view(self):
        return [(self.ring.monomial_view(m), c) for m, c in self.terms]

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring.codec is not self.ring.codec and other.ring != self.ring:
                raise ValueError("mixed rings")
            return other
        if isinstance(other, int):
            return self.ring.const(other)
        return self.ring.const(other)

    def __eq__(self, other):
        if isinstance(other, int):
            return self == self.ring.const(other)
        return (isinstance(other, Polynomial) and self.ring == other.ring
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.ring.names, self.terms))

    def __str__(self):
        from . import textio
        return textio.render(self)

    def __repr__(self):
        return "<%s>" % self.__str__()
