from __future__ import annotations

import random

import pytest

from transversal import Hypergraph
from transversal.oracle import brute_tr

CORPUS_SEED = 0x5E7C0DE


def random_hypergraph(
    rng: random.Random,
    n_max: int = 8,
    m_max: int = 12,
    empty_edge_p: float = 0.03,
) -> Hypergraph:
    n = rng.randint(1, n_max)
    m = rng.randint(0, m_max)
    edges = []
    for _ in range(m):
        if rng.random() < empty_edge_p:
            edges.append(())
        else:
            edges.append(rng.sample(range(n), rng.randint(1, n)))
    return Hypergraph(n, edges)


def build_corpus(count: int = 500, seed: int = CORPUS_SEED) -> list[Hypergraph]:
    """Mixed random instances, front-loaded with the degenerate shapes."""
    rng = random.Random(seed)
    corpus: list[Hypergraph] = [
        Hypergraph(0, []),  # empty universe, edgeless
        Hypergraph(0, [()]),  # empty universe, empty edge
        Hypergraph(3, []),  # edgeless
        Hypergraph(3, [()]),  # empty edge alone
        Hypergraph(3, [(), (0, 1)]),  # empty edge among others
        Hypergraph(1, [(0,)]),
    ]
    while len(corpus) < count:
        corpus.append(random_hypergraph(rng))
    return corpus


@pytest.fixture(scope="session")
def corpus() -> list[Hypergraph]:
    return build_corpus()


@pytest.fixture(scope="session")
def corpus_tr(corpus) -> list[list]:
    """Brute-force transversal hypergraph for every corpus instance."""
    return [brute_tr(h) for h in corpus]


def masks(sets) -> set[int]:
    return {s.mask for s in sets}
