"""Buchberger/Schreyer engine: S-pair closure, traces, module orders."""

import pytest

from pfaffcalc.constructions import build_ideal
from pfaffcalc.fields import GF, QQ
from pfaffcalc.gbengine import (FreeModuleOrder, buchberger, interreduce,
                                make_buckets, nf, poly_of_vec_component,
                                schreyer_level, spair_vec, vec_of_poly)
from pfaffcalc.rings import ring_for


def scalar_setup(f, field, kind="J"):
    ring = ring_for(f, field)
    order = FreeModuleOrder(ring, 1)
    gens = build_ideal(kind, ring).gens
    vecs = [vec_of_poly(g, order) for g in gens]
    return ring, order, vecs


def test_vec_poly_roundtrip():
    ring = ring_for(3, QQ)
    order = FreeModuleOrder(ring, 1)
    p = ring.x(1, 2) * ring.t(3) - ring.x(2, 3).scale(QQ.from_int(5))
    v = vec_of_poly(p, order)
    assert poly_of_vec_component(v, order, ring, 0) == p
    # leading entry first
    assert v[0][0] == order.key(0, p.lm())


@pytest.mark.parametrize("char", [0, 32003])
def test_groebner_basis_invariants(char):
    field = GF(char) if char else QQ
    ring, order, vecs = scalar_setup(3, field)
    G, _, _ = buchberger(vecs, order, field)
    G = interreduce(G, order, field)
    one = field.one()
    leads = [g[0][0] for g in G]
    for i, g in enumerate(G):
        assert g[0][1] == one
        for j, k in enumerate(leads):
            if i != j:
                assert not order.divides(k, leads[i])


@pytest.mark.parametrize("char", [0, 32003])
def test_every_s_pair_reduces_to_zero(char):
    field = GF(char) if char else QQ
    ring, order, vecs = scalar_setup(3, field)
    G, _, _ = buchberger(vecs, order, field)
    buckets = make_buckets(G, order, field)
    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            ki, kj = G[i][0][0], G[j][0][0]
            L = order.codec.lcm(order.mono(ki), order.mono(kj))
            ua = order.codec.div(L, order.mono(ki))
            ub = order.codec.div(L, order.mono(kj))
            s, _, _ = spair_vec(G[i], G[j], ua, ub, order, field)
            rem, _ = nf(s, order, buckets, field)
            assert not rem


def test_membership_via_normal_form():
    ring, order, vecs = scalar_setup(4, QQ)
    G, _, _ = buchberger(vecs, order, QQ)
    buckets = make_buckets(G, order, QQ)
    gens = build_ideal("J", ring).gens
    member = gens[0] * ring.x(1, 3) + gens[2].scale(QQ.from_int(-3))
    rem, _ = nf(vec_of_poly(member, order), order, buckets, QQ)
    assert not rem
    rem, _ = nf(vec_of_poly(ring.x(1, 2), order), order, buckets, QQ)
    assert rem


def test_trace_reconstructs_basis_elements():
    ring = ring_for(3, QQ)
    order = FreeModuleOrder(ring, 1)
    gens = build_ideal("K", ring).gens
    vecs = [vec_of_poly(g, order) for g in gens]
    G, arows, taus = buchberger(vecs, order, QQ, trace=True)
    assert len(arows) == len(G)
    for g, row in zip(G, arows):
        acc = ring.zero()
        for j, coeff_poly in row.items():
            acc = acc + coeff_poly * gens[j]
        assert acc == poly_of_vec_component(g, order, ring, 0)


def test_trace_syzygies_annihilate_basis():
    ring = ring_for(3, QQ)
    order = FreeModuleOrder(ring, 1)
    gens = build_ideal("K", ring).gens
    vecs = [vec_of_poly(g, order) for g in gens]
    G, _, taus = buchberger(vecs, order, QQ, trace=True)
    polys = [poly_of_vec_component(g, order, ring, 0) for g in G]
    assert taus, "at least one S-pair must have been processed"
    for tau in taus:
        acc = ring.zero()
        for i, pairs in tau.items():
            for mono, c in pairs:
                acc = acc + polys[i].mul_monomial(mono, c)
        assert acc.is_zero()


def test_trace_forbids_pair_criteria():
    ring = ring_for(3, QQ)
    order = FreeModuleOrder(ring, 1)
    vecs = [vec_of_poly(g, order) for g in build_ideal("K", ring).gens]
    with pytest.raises(ValueError):
        buchberger(vecs, order, QQ, trace=True, use_criteria=True)


def test_schreyer_level_produces_syzygies():
    ring = ring_for(4, QQ)
    order = FreeModuleOrder(ring, 1)
    gens = build_ideal("J", ring).gens
    vecs = [vec_of_poly(g, order) for g in gens]
    G, _, _ = buchberger(vecs, order, QQ)
    G = interreduce(G, order, QQ)
    syz, sorder = schreyer_level(G, order, QQ)
    polys = [poly_of_vec_component(g, order, ring, 0) for g in G]
    assert syz
    for s in syz[:10]:
        acc = ring.zero()
        for key, c in s:
            comp = sorder.comp(key)
            acc = acc + polys[comp].mul_monomial(sorder.mono(key), c)
        assert acc.is_zero()


def test_module_order_twists_and_degrees():
    ring = ring_for(3, QQ)
    order = FreeModuleOrder(ring, 2, twists=[(1, 0), (0, 2)])
    k = order.key(1, ring.x(1, 2).lm())
    assert order.comp(k) == 1
    assert order.bideg(k) == (1, 2)
    assert order.compdeg(0) == 1
