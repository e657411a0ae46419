"""Deciding whether some minimal hitting set has at least k vertices.

Two independent deciders produce certified witnesses: the look-ahead
route seeds the search with every (k-2)-subset of vertices and asks for a
higher-order extension, and the edge-family route scans k-tuples of
minimal edges whose pairwise overlaps trap no edge.  A brute-force oracle
route is available for cross-checking.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterator

from .core import Hypergraph, VertexSet, minimize_edges
from .extension import find_higher_order
from .hitting import minimize

__all__ = [
    "RankWitness",
    "colex_combinations",
    "rank_at_least_lookahead",
    "rank_at_least_bd",
    "rank_at_least",
    "transversal_rank",
]


def colex_combinations(n: int, size: int) -> Iterator[tuple[int, ...]]:
    """All size-subsets of range(n) in colexicographic order."""
    if size == 0:
        yield ()
        return
    if size > n:
        return
    for top in range(size - 1, n):
        for rest in colex_combinations(top, size - 1):
            yield rest + (top,)


@dataclass(frozen=True)
class RankWitness:
    """A minimal hitting set of at least k vertices plus its certificate.

    The look-ahead route fills ``seed`` (its (k-2)-vertex partial
    solution), ``chosen_edges`` (one candidate private edge per seed
    vertex), ``forced`` (the vertices completing the seed in one step)
    and ``cover`` (the hitting superset that was shrunk to ``t``).  The
    edge-family route fills ``edge_family`` (the k certifying edges) and
    ``overlap`` (the vertices lying in at least two of them).
    """

    t: VertexSet
    seed: VertexSet | None = None
    chosen_edges: tuple[VertexSet, ...] | None = None
    forced: VertexSet | None = None
    cover: VertexSet | None = None
    edge_family: tuple[VertexSet, ...] | None = None
    overlap: VertexSet | None = None


def _reject_empty_edge(h: Hypergraph) -> None:
    if any(e == 0 for e in h.edge_masks()):
        raise ValueError("an empty edge admits no hitting set; rank is undefined")


def _small_k(h: Hypergraph, k: int) -> RankWitness | None:
    """Conventions for k <= 1: the edgeless hypergraph has rank 0, and any
    minimal hitting set of a non-empty one witnesses k <= 1."""
    if h.m == 0:
        return RankWitness(t=VertexSet(h.n)) if k <= 0 else None
    return RankWitness(t=minimize(h, VertexSet.full(h.n)))


def rank_at_least_lookahead(
    h: Hypergraph, k: int, *, counters: Counter | None = None
) -> RankWitness | None:
    """Witness a minimal hitting set of size >= k, or None.

    For k >= 2, a set of k-2 vertices with a higher-order minimal
    extension is searched (colex order, first hit wins).  From the
    certifying combination, the union of the seed with everything outside
    the chosen edges and the forced vertices is a hitting superset whose
    minimization necessarily keeps the seed and at least two more
    vertices.
    """
    _reject_empty_edge(h)
    if h.m == 0 or k <= 1:
        return _small_k(h, k)
    n = h.n
    full = (1 << n) - 1
    masks = h.edge_masks()
    for seed_tuple in colex_combinations(n, k - 2):
        seed = VertexSet.from_iterable(n, seed_tuple)
        witness = find_higher_order(h, seed, counters=counters)
        if witness is None:
            continue
        union = 0
        for i in witness.edge_indices:
            union |= masks[i]
        cover = VertexSet(n, seed.mask | (full & ~(witness.forced.mask | union)))
        t = minimize(h, cover)
        return RankWitness(
            t=t,
            seed=seed,
            chosen_edges=tuple(h.edges[i] for i in witness.edge_indices),
            forced=witness.forced,
            cover=cover,
        )
    return None


def _sorted_lists_intersect(
    lists: list[tuple[int, ...]], counters: Counter | None
) -> bool:
    """Whether k ascending index lists share an element, by merging.

    Every list entry is read at most once; reads are tallied under
    ``bd_entries_touched`` (and the per-call maximum under
    ``bd_entries_touched_max``).
    """
    touched = 0
    found = False
    heads: list[int] | None = []
    pos = [0] * len(lists)
    for lst in lists:
        if not lst:
            heads = None
            break
        heads.append(lst[0])
        touched += 1
    if heads is not None:
        while True:
            hi = max(heads)
            if min(heads) == hi:
                found = True
                break
            exhausted = False
            for i, lst in enumerate(lists):
                while heads[i] < hi:
                    pos[i] += 1
                    if pos[i] == len(lst):
                        exhausted = True
                        break
                    heads[i] = lst[pos[i]]
                    touched += 1
                if exhausted:
                    break
            if exhausted:
                break
    if counters is not None:
        counters["bd_entries_touched"] += touched
        if touched > counters["bd_entries_touched_max"]:
            counters["bd_entries_touched_max"] = touched
    return found


def rank_at_least_bd(
    h: Hypergraph,
    k: int,
    *,
    counters: Counter | None = None,
    max_table_entries: int = 1 << 20,
) -> RankWitness | None:
    """Edge-family decider: after reducing to the inclusion-minimal edges,
    look for k of them such that no edge lies inside the union of any k-1
    (equivalently, no edge survives inside their pairwise overlaps); the
    complement of the overlap set is then a hitting set whose minimization
    has at least k vertices.

    Membership lists for the (k-1)-subfamilies are precomputed when their
    number fits ``max_table_entries``, otherwise recomputed per family
    (slower, same answers).
    """
    _reject_empty_edge(h)
    if h.m == 0 or k <= 1:
        return _small_k(h, k)
    hs = minimize_edges(h)
    masks = hs.edge_masks()
    ms = len(masks)
    if k > ms:
        return None
    full = (1 << h.n) - 1

    def member_list(family: tuple[int, ...]) -> tuple[int, ...]:
        union = 0
        for i in family:
            union |= masks[i]
        return tuple(j for j, e in enumerate(masks) if e & ~union == 0)

    table: dict[tuple[int, ...], tuple[int, ...]] | None = None
    if math.comb(ms, k - 1) <= max_table_entries:
        table = {
            fam: member_list(fam) for fam in itertools.combinations(range(ms), k - 1)
        }

    for family in colex_combinations(ms, k):
        lists = []
        for drop in range(k):
            sub = family[:drop] + family[drop + 1 :]
            lists.append(table[sub] if table is not None else member_list(sub))
        if _sorted_lists_intersect(lists, counters):
            continue
        overlap = 0
        for a, b in itertools.combinations(family, 2):
            overlap |= masks[a] & masks[b]
        t = minimize(h, VertexSet(h.n, full & ~overlap))
        return RankWitness(
            t=t,
            edge_family=tuple(hs.edges[i] for i in family),
            overlap=VertexSet(h.n, overlap),
        )
    return None


def rank_at_least(
    h: Hypergraph,
    k: int,
    *,
    method: str = "lookahead",
    counters: Counter | None = None,
) -> RankWitness | None:
    if method == "lookahead":
        return rank_at_least_lookahead(h, k, counters=counters)
    if method == "bd":
        return rank_at_least_bd(h, k, counters=counters)
    if method == "oracle":
        from .oracle import brute_tr

        _reject_empty_edge(h)
        for t in brute_tr(h):
            if len(t) >= k:
                return RankWitness(t=t)
        return None
    raise ValueError(f"unknown rank method {method!r}")


def transversal_rank(h: Hypergraph, *, method: str = "lookahead") -> int:
    """Largest k admitting a minimal hitting set of size k (0 for an
    edgeless hypergraph), by ascending scan of the monotone decider."""
    _reject_empty_edge(h)
    best = 0
    for k in range(1, h.n + 1):
        if rank_at_least(h, k, method=method) is None:
            break
        best = k
    return best
