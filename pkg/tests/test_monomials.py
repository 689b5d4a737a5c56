"""Packed-monomial codec: pack/unpack, arithmetic, and order laws."""

import random
from itertools import combinations

import pytest

from pfaffcalc.monomials import (OrderCodec, cmp_blocks_ref, cmp_grevlex_ref,
                                 cmp_lex_ref, elim_blocks, grevlex, lex)


def random_exps(rng, nvars, maxdeg=9):
    return tuple(rng.randrange(maxdeg + 1) for _ in range(nvars))


@pytest.mark.parametrize("maker,ref", [
    (grevlex, cmp_grevlex_ref),
    (lex, cmp_lex_ref),
])
@pytest.mark.parametrize("nvars", [1, 2, 5, 11])
def test_pack_roundtrip_and_order(maker, ref, nvars):
    codec = maker(nvars)
    rng = random.Random("codec|%s|%d" % (codec.name, nvars))
    pool = [random_exps(rng, nvars) for _ in range(60)]
    for e in pool:
        assert codec.unpack(codec.pack(e)) == e
    for ea, eb in combinations(pool[:25], 2):
        got = (codec.pack(ea) > codec.pack(eb)) - (codec.pack(ea) < codec.pack(eb))
        assert got == ref(ea, eb), (ea, eb)


def test_elim_blocks_order_matches_reference():
    codec = elim_blocks(7, 4)
    rng = random.Random("codec|elim|7|4")
    pool = [random_exps(rng, 7, maxdeg=5) for _ in range(40)]
    for e in pool:
        assert codec.unpack(codec.pack(e)) == e
    for ea, eb in combinations(pool[:20], 2):
        got = (codec.pack(ea) > codec.pack(eb)) - (codec.pack(ea) < codec.pack(eb))
        assert got == cmp_blocks_ref(ea, eb, 4)


def test_mul_div_divides_lcm_deg():
    codec = grevlex(5)
    rng = random.Random("codec|laws")
    for _ in range(50):
        ea = random_exps(rng, 5, maxdeg=6)
        eb = random_exps(rng, 5, maxdeg=6)
        a, b = codec.pack(ea), codec.pack(eb)
        prod = codec.mul(a, b)
        assert codec.unpack(prod) == tuple(x + y for x, y in zip(ea, eb))
        assert codec.deg(prod) == sum(ea) + sum(eb)
        assert codec.divides(a, prod) and codec.divides(b, prod)
        assert codec.div(prod, a) == b and codec.div(prod, b) == a
        lcm = codec.unpack(codec.lcm(a, b))
        assert lcm == tuple(max(x, y) for x, y in zip(ea, eb))
        assert codec.coprime(a, b) == all(x == 0 or y == 0
                                          for x, y in zip(ea, eb))


def test_divides_is_componentwise():
    codec = grevlex(3)
    a = codec.pack((1, 0, 2))
    b = codec.pack((1, 1, 2))
    assert codec.divides(a, b)
    assert not codec.divides(b, a)


def test_block_degs_split():
    codec = elim_blocks(5, 3)
    m = codec.pack((2, 0, 1, 4, 1))
    assert codec.block_degs(m) == (3, 5)


def test_var_monomials():
    codec = grevlex(4)
    for i in range(4):
        e = codec.unpack(codec.var(i))
        assert sum(e) == 1 and e[i] == 1


def test_pack_rejects_out_of_range():
    codec = grevlex(3)
    with pytest.raises((ValueError, OverflowError)):
        codec.pack((1, 10 ** 9, 0))
