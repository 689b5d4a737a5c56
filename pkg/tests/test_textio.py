"""Text round-trips: polynomial rendering/parsing and the .cas format."""

import random
from fractions import Fraction

import pytest

from pfaffcalc.constructions import build_ideal
from pfaffcalc.fields import GF, QQ
from pfaffcalc.rings import ring_for
from pfaffcalc.textio import (ParseError, emit_cas, field_str, parse,
                              parse_cas, render)


def random_poly(ring, rng, nterms=6, maxdeg=4):
    p = ring.zero()
    n = len(ring.names)
    for _ in range(nterms):
        exps = [0] * n
        for _ in range(maxdeg):
            exps[rng.randrange(n)] += 1
        if ring.field.char:
            c = ring.field.from_int(rng.randrange(1, ring.field.char))
        else:
            c = Fraction(rng.randrange(-30, 31), rng.randrange(1, 7))
        p = p + ring.from_exp_terms([(tuple(exps), c)])
    return p


@pytest.mark.parametrize("char", [0, 32003])
@pytest.mark.parametrize("f", [2, 3, 4, 5, 6])
@pytest.mark.parametrize("kind", ["I", "K", "J"])
def test_ideal_generators_roundtrip(kind, f, char):
    ring = ring_for(f, GF(char) if char else QQ)
    for g in build_ideal(kind, ring).gens:
        assert parse(render(g), ring) == g


@pytest.mark.parametrize("char", [0, 2, 32003])
def test_random_polynomials_roundtrip(char):
    ring = ring_for(4, GF(char) if char else QQ)
    rng = random.Random("textio|roundtrip|%d" % char)
    for _ in range(100):
        p = random_poly(ring, rng)
        assert parse(render(p), ring) == p


def test_render_zero_and_constants(qq):
    ring = ring_for(2, qq)
    assert parse(render(ring.zero()), ring) == ring.zero()
    c = ring.const(Fraction(-7, 3))
    assert parse(render(c), ring) == c


def test_render_t_before_x_within_monomial(qq):
    ring = ring_for(2, qq)
    s = render(ring.t(1) * ring.x(1, 2))
    assert s == "t_1*x_(1,2)"


def test_parse_rejects_garbage(qq):
    ring = ring_for(2, qq)
    for bad in ["x_(1,2) +", "y_3", "x_(2,1)", "1/(0)*x_(1,2)", "((("]:
        with pytest.raises(ParseError):
            parse(bad, ring)


def test_field_str():
    assert field_str(QQ) == "QQ"
    assert field_str(GF(2)) == "GF(2)"


@pytest.mark.parametrize("char", [0, 32003])
@pytest.mark.parametrize("f", [2, 4, 5])
def test_cas_roundtrip_bit_exact(f, char):
    ring = ring_for(f, GF(char) if char else QQ)
    gens = build_ideal("J", ring).gens
    text = emit_cas(gens, ring)
    ring2, gens2 = parse_cas(text)
    assert ring2 == ring
    assert gens2 == list(gens)
    assert emit_cas(gens2, ring2) == text


def test_cas_header_shape(qq):
    ring = ring_for(4, qq)
    text = emit_cas(build_ideal("I", ring).gens, ring)
    head = text.splitlines()[0]
    assert head.startswith("ring: QQ[x_(1,2),")
    assert head.endswith("order: grevlex")
    assert ",t_1,t_2,t_3,t_4]" in head


def test_cas_rejects_bad_header():
    with pytest.raises(ParseError):
        parse_cas("ring: ZZ[x], order: grevlex\nx\n")
    with pytest.raises(ParseError):
        parse_cas("")


def test_cas_rejects_nonstandard_variables():
    with pytest.raises(ParseError):
        parse_cas("ring: QQ[x_(1,2),t_5], order: grevlex\nt_5\n")
