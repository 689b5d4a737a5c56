"""Degreewise linear-algebra Betti oracle (Buchberger-independent)."""

from math import comb

import pytest

from conftest import A4_BIGRADED, RJ4_BIGRADED
from pfaffcalc.constructions import module_presentation
from pfaffcalc.fields import GF, QQ
from pfaffcalc.linoracle import monomials_of_bidegree, oracle_betti
from pfaffcalc.rings import ring_for


def test_monomial_piece_dimensions():
    ring = ring_for(4, QQ)
    nx = comb(4, 2)
    for a, b in [(0, 0), (1, 0), (0, 1), (2, 1), (3, 2)]:
        got = monomials_of_bidegree(ring, a, b)
        assert len(got) == comb(nx + a - 1, a) * comb(4 + b - 1, b)
        assert len(set(got)) == len(got)


def test_monomial_piece_x_only_ring():
    ring = ring_for(4, QQ, vars="x")
    assert len(monomials_of_bidegree(ring, 2, 0)) == comb(6 + 1, 2)
    assert monomials_of_bidegree(ring, 0, 1) == []


@pytest.mark.parametrize("char", [0, 32003])
def test_oracle_full_quotient_f4(char):
    field = GF(char) if char else QQ
    ring = ring_for(4, field)
    B = oracle_betti(module_presentation("RJ", ring))
    assert B.data == RJ4_BIGRADED


def test_oracle_hypersurface_quotient_f4(qq):
    ring = ring_for(4, qq, vars="x")
    B = oracle_betti(module_presentation("A", ring))
    assert B.data == A4_BIGRADED


def test_oracle_almost_complete_intersection_f4(qq):
    ring = ring_for(4, qq, vars="x")
    B = oracle_betti(module_presentation("N", ring))
    totals = {}
    for (i, _), c in B.data.items():
        totals[i] = totals.get(i, 0) + c
    assert totals == {0: 4, 1: 4}


def test_oracle_rejects_unit_entries(qq):
    from pfaffcalc.constructions import GradedMatrix

    ring = ring_for(3, qq)
    pres = GradedMatrix(ring, [[ring.one()]], [(0, 0)], [(0, 0)])
    with pytest.raises(ValueError):
        oracle_betti(pres)
