from __future__ import annotations

import random

import pytest

from transversal import (
    Hypergraph,
    HypergraphFormatError,
    VertexSet,
    degree_profile,
    edge_complement,
    k_section,
    minimize_edges,
    parse,
    serialize,
    uniform_complement,
)
from transversal.oracle import brute_tr

from conftest import masks, random_hypergraph


class TestVertexSet:
    def test_basic_algebra(self):
        a = VertexSet.of(5, 0, 2, 4)
        b = VertexSet.of(5, 2, 3)
        assert (a | b).members() == (0, 2, 3, 4)
        assert (a & b).members() == (2,)
        assert (a - b).members() == (0, 4)
        assert b <= (a | b)
        assert not a <= b
        assert a.complement().members() == (1, 3)
        assert len(a) == 3 and 2 in a and 1 not in a
        assert list(a) == [0, 2, 4]

    def test_universe_mismatch(self):
        with pytest.raises(ValueError):
            VertexSet.of(3, 0) | VertexSet.of(4, 0)

    def test_mask_out_of_range(self):
        with pytest.raises(ValueError):
            VertexSet(2, 0b100)
        with pytest.raises(ValueError):
            VertexSet.of(2, 5)

    def test_hash_and_eq(self):
        assert VertexSet.of(4, 1, 2) == VertexSet.of(4, 2, 1)
        assert len({VertexSet.of(4, 1), VertexSet.of(4, 1)}) == 1


class TestHypergraph:
    def test_dedup_counts(self):
        h = Hypergraph(2, [(0, 1), (1, 0)])
        assert h.m == 1
        assert h.duplicates_dropped == 1

    def test_stats(self):
        h = Hypergraph(3, [(0, 1), (1, 2)])
        assert h.rank == 2
        assert h.max_degree == 2  # vertex 1
        assert h.is_sperner()
        assert degree_profile(h).degrees == (1, 2, 1)
        assert sum(degree_profile(h).degrees) == sum(len(e) for e in h.edges)

    def test_not_sperner(self):
        assert not Hypergraph(2, [(0,), (0, 1)]).is_sperner()

    def test_empty_conventions(self):
        h = Hypergraph(0, [])
        assert h.rank == 0 and h.max_degree == 0 and h.is_sperner()

    def test_edge_outside_universe(self):
        with pytest.raises(ValueError):
            Hypergraph(2, [(0, 2)])


class TestParse:
    def test_numbered_by_first_appearance(self):
        h = parse("1 2\n3 4\n")
        assert h.n == 4
        assert [h.set_tokens(e) for e in h.edges] == [["1", "2"], ["3", "4"]]

    def test_header_fixes_universe(self):
        h = parse("!vertices a b c\na b\n")
        assert h.n == 3
        assert h.names == ("a", "b", "c")
        assert [h.set_tokens(e) for e in h.edges] == [["a", "b"]]

    def test_duplicate_edges_dropped_with_count(self):
        h = parse("1 2\n1 2\n")
        assert h.m == 1
        assert h.duplicates_dropped == 1

    def test_empty_edge_and_comments(self):
        h = parse("# full file\n!vertices a b\n{}\na b  # an edge\n\n")
        assert [e.members() for e in h.edges] == [(), (0, 1)]

    def test_blank_line_is_not_an_empty_edge(self):
        assert parse("a b\n\nc\n").m == 2

    def test_errors(self):
        with pytest.raises(HypergraphFormatError):
            parse("!vertices a\n!vertices b\na\n")  # duplicate header
        with pytest.raises(HypergraphFormatError):
            parse("!vertices a\nb\n")  # vertex not in header
        with pytest.raises(HypergraphFormatError):
            parse("a {} b\n")  # empty-edge token mixed into an edge
        with pytest.raises(HypergraphFormatError):
            parse("!vertexes a\n")  # unknown directive
        with pytest.raises(HypergraphFormatError):
            parse("a\n!vertices a\n")  # header after an edge

    def test_roundtrip_preserves_isolated_vertices(self):
        text = "!vertices a b c\na b\n"
        assert serialize(parse(text)) == text

    def test_roundtrip_normalizes_idempotently(self):
        rng = random.Random(5)
        for _ in range(30):
            h = random_hypergraph(rng, n_max=6, m_max=8)
            once = serialize(h)
            assert serialize(parse(once)) == once


class TestMinimizeEdges:
    def test_subset_dominance(self):
        assert minimize_edges(Hypergraph(2, [(0,), (0, 1)])).edges == (
            VertexSet.of(2, 0),
        )

    def test_already_sperner(self):
        h = Hypergraph(4, [(0, 1), (2, 3)])
        assert minimize_edges(h) == h

    def test_drops_dominated_edge(self):
        h = Hypergraph(3, [(0, 1), (1, 2), (0, 1, 2)])
        assert masks(minimize_edges(h).edges) == masks(
            [VertexSet.of(3, 0, 1), VertexSet.of(3, 1, 2)]
        )

    def test_idempotent_sperner_and_tr_preserving(self):
        rng = random.Random(17)
        for _ in range(40):
            h = random_hypergraph(rng)
            m1 = minimize_edges(h)
            assert m1.is_sperner()
            assert minimize_edges(m1) == m1
            assert masks(brute_tr(h)) == masks(brute_tr(m1))


class TestComplements:
    def test_edge_complement_examples(self):
        h = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
        assert [e.members() for e in edge_complement(h).edges] == [(2,), (0,), (1,)]
        assert edge_complement(Hypergraph(2, [(0, 1)])).edges[0].members() == ()
        assert edge_complement(Hypergraph(4, [(0, 1)])).edges[0].members() == (2, 3)

    def test_involution(self):
        rng = random.Random(23)
        for _ in range(30):
            h = random_hypergraph(rng)
            assert edge_complement(edge_complement(h)) == h

    def test_uniform_complement_examples(self):
        h = Hypergraph(3, [(0, 1), (1, 2)])
        assert masks(uniform_complement(h, 2).edges) == {VertexSet.of(3, 0, 2).mask}
        full = Hypergraph(3, [(0, 1), (1, 2), (0, 2)])
        assert uniform_complement(full, 2).m == 0
        h = Hypergraph(4, [(0, 1, 2)])
        assert masks(uniform_complement(h, 3).edges) == masks(
            [VertexSet.of(4, 0, 1, 3), VertexSet.of(4, 0, 2, 3), VertexSet.of(4, 1, 2, 3)]
        )

    def test_uniform_complement_rejects_mixed(self):
        with pytest.raises(ValueError):
            uniform_complement(Hypergraph(3, [(0,), (0, 1)]), 2)

    def test_uniform_complement_partitions(self):
        import itertools

        rng = random.Random(31)
        for _ in range(20):
            n = rng.randint(2, 6)
            r = rng.randint(1, n)
            everything = list(itertools.combinations(range(n), r))
            chosen = rng.sample(everything, rng.randint(0, len(everything)))
            h = Hypergraph(n, chosen)
            comp = uniform_complement(h, r)
            union = masks(h.edges) | masks(comp.edges)
            assert len(union) == len(everything)
            assert masks(h.edges) & masks(comp.edges) == set()


class TestSection:
    def test_examples(self):
        h = Hypergraph(4, [(0, 1, 2), (2, 3)])
        assert masks(k_section(h, 2).edges) == masks(
            [
                VertexSet.of(4, 0, 1),
                VertexSet.of(4, 0, 2),
                VertexSet.of(4, 1, 2),
                VertexSet.of(4, 2, 3),
            ]
        )
        g = Hypergraph(2, [(0, 1)])
        assert k_section(g, 2) == g
        assert k_section(Hypergraph(4, [(0, 1), (2, 3)]), 3).m == 0

    def test_rejects_k_zero(self):
        with pytest.raises(ValueError):
            k_section(Hypergraph(2, [(0,)]), 0)

    def test_every_k_subset_appears(self):
        import itertools

        rng = random.Random(41)
        for _ in range(25):
            h = random_hypergraph(rng, n_max=7, m_max=8, empty_edge_p=0)
            k = rng.randint(1, 4)
            sec = k_section(h, k)
            assert all(len(e) == k for e in sec.edges)
            expected = set()
            for e in h.edges:
                for combo in itertools.combinations(e.members(), k):
                    expected.add(VertexSet.from_iterable(h.n, combo).mask)
            assert masks(sec.edges) == expected
