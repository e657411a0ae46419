from __future__ import annotations

import random
from collections import Counter

import pytest

from transversal import Hypergraph, VertexSet
from transversal.extension import (
    ExtensionOutcome,
    build_reduced_families,
    extend,
    find_higher_order,
    has_higher_order_extension,
)
from transversal.hitting import is_minimal_hitting_set
from transversal.oracle import brute_extensions

from conftest import masks, random_hypergraph


def collect(h, x, y, **kw):
    got: list[VertexSet] = []
    outcome = extend(h, x, y, got.append, **kw)
    return got, outcome


def test_one_extensions_then_halt():
    h = Hypergraph(4, [(0, 1), (2, 3)])
    got, outcome = collect(h, VertexSet.of(4, 0), VertexSet(4))
    assert [t.members() for t in got] == [(0, 2), (0, 3)]
    assert outcome.halted


def test_empty_x_emits_forced_singletons():
    h = Hypergraph(3, [(0, 1), (0, 2)])
    got, outcome = collect(h, VertexSet(3), VertexSet(3))
    assert [t.members() for t in got] == [(0,)]
    assert outcome.continues
    assert outcome.y_plus == VertexSet.of(3, 0)


def test_continue_with_veto_vertex():
    h = Hypergraph(6, [(0, 1), (2, 3), (4, 5)])
    got, outcome = collect(h, VertexSet.of(6, 0), VertexSet(6))
    assert got == []
    assert outcome.continues
    # vertex 1 would strip 0 of its only candidate private edge
    assert outcome.y_plus == VertexSet.of(6, 1)


def test_rejects_overlapping_x_y_and_edgeless():
    h = Hypergraph(2, [(0,)])
    with pytest.raises(ValueError):
        extend(h, VertexSet.of(2, 0), VertexSet.of(2, 0))
    with pytest.raises(ValueError):
        extend(Hypergraph(2, []), VertexSet(2), VertexSet(2))


def test_has_higher_order_examples():
    h = Hypergraph(6, [(0, 1), (2, 3), (4, 5)])
    assert has_higher_order_extension(h, VertexSet.of(6, 0))
    h = Hypergraph(4, [(0, 1), (2, 3)])
    assert not has_higher_order_extension(h, VertexSet.of(4, 0))
    assert not has_higher_order_extension(Hypergraph(1, [(0,)]), VertexSet(1))


def test_emitted_order_is_ascending():
    h = Hypergraph(5, [(0, 4), (1, 2, 3)])
    got, _ = collect(h, VertexSet.of(5, 0), VertexSet(5))
    extras = [(t - VertexSet.of(5, 0)).members()[0] for t in got]
    assert extras == sorted(extras)


def test_reduced_families_structure():
    h = Hypergraph(5, [(0, 1, 4), (0, 2), (2, 3), (1, 2)])
    fam = build_reduced_families(h, VertexSet.of(5, 0), VertexSet.of(5, 4))
    assert fam.x_vertices == (0,)
    # every candidate private edge still contains its vertex
    for fam_x, v in zip(fam.per_x, fam.x_vertices):
        assert all(em >> v & 1 for _, em in fam_x)
    # unhit reduced edges are disjoint from X
    assert all(em & 1 == 0 for _, em in fam.unhit)


def test_matches_oracle_on_random_triples():
    rng = random.Random(1234)
    trials = 0
    while trials < 300:
        h = random_hypergraph(rng, n_max=7, m_max=9)
        if h.m == 0:
            continue
        xm = ym = 0
        for v in range(h.n):
            r = rng.random()
            if r < 0.25:
                xm |= 1 << v
            elif r < 0.45:
                ym |= 1 << v
        trials += 1
        x, y = VertexSet(h.n, xm), VertexSet(h.n, ym)
        part = brute_extensions(h, x, y)
        counters: Counter = Counter()
        got, outcome = collect(h, x, y, counters=counters)
        assert masks(got) == masks(part.zero) | masks(part.one)
        assert len(got) == len(masks(got))
        assert outcome.continues == bool(part.higher)
        if outcome.continues:
            assert all(t.mask & outcome.y_plus.mask == 0 for t in part.higher)
            assert y <= outcome.y_plus
            assert outcome.y_plus.mask & xm == 0
        # every emission is a minimal hitting set of the original hypergraph
        for t in got:
            assert is_minimal_hitting_set(h, t)
        # product loop budget
        delta = h.max_degree
        assert counters["product_iterations"] <= max(1, delta) ** len(x)


def test_outcome_repr():
    assert repr(ExtensionOutcome.halt()) == "ExtensionOutcome.halt()"
    assert "continue_with" in repr(ExtensionOutcome.continue_with(VertexSet.of(2, 1)))


def test_find_higher_order_returns_certificate():
    h = Hypergraph(6, [(0, 1), (2, 3), (4, 5)])
    w = find_higher_order(h, VertexSet.of(6, 0))
    assert w is not None
    assert len(w.edge_indices) == 1
    assert h.edges[w.edge_indices[0]].members() == (0, 1)
