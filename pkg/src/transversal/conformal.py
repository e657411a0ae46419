"""Conformality: is every set whose small subsets all fit inside edges
itself inside an edge?

The k-test builds the k-section and lists its maximal hypercliques; the
hypergraph is k-conformal exactly when every such clique is literally an
edge, and the first clique that is not one is a counterexample set.  At
most m+1 cliques ever need to be seen.  The k = 2 case runs on the
count-independent graph clique enumerator.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .core import Hypergraph, VertexSet, k_section
from .cliques import enumerate_maximal_cliques, enumerate_maximal_hypercliques

__all__ = ["ConformalityVerdict", "is_k_conformal", "conformal_degree", "is_conformal"]


@dataclass(frozen=True)
class ConformalityVerdict:
    """Truthy when conformal; otherwise carries a counterexample set whose
    small subsets are all covered by edges while the set itself is not."""

    counterexample: VertexSet | None = None

    @property
    def ok(self) -> bool:
        return self.counterexample is None

    def __bool__(self) -> bool:
        return self.ok


class _Found(Exception):
    pass


def _member(sorted_masks: list[int], mask: int) -> bool:
    pos = bisect_left(sorted_masks, mask)
    return pos < len(sorted_masks) and sorted_masks[pos] == mask


def is_k_conformal(h: Hypergraph, k: int) -> ConformalityVerdict:
    if k < 1:
        raise ValueError("conformality is defined for k >= 1")
    sorted_masks = sorted(h.edge_masks())
    if k == 1:
        # the 1-section has a single maximal hyperclique: the covered vertices
        covered = 0
        for e in h.edge_masks():
            covered |= e
        if covered == 0 or _member(sorted_masks, covered):
            return ConformalityVerdict()
        return ConformalityVerdict(VertexSet(h.n, covered))
    section = k_section(h, k)
    if section.m == 0:
        return ConformalityVerdict()
    budget = h.m + 1  # m+1 distinct cliques cannot all be edges
    hit: list[VertexSet] = []

    def check(c: VertexSet) -> None:
        if not _member(sorted_masks, c.mask):
            hit.append(c)
            raise _Found

    try:
        if k == 2:
            enumerate_maximal_cliques(section, check, limit=budget)
        else:
            enumerate_maximal_hypercliques(section, check, limit=budget, r=k)
    except _Found:
        return ConformalityVerdict(hit[0])
    return ConformalityVerdict()


def conformal_degree(h: Hypergraph) -> int:
    """Smallest k for which the hypergraph is k-conformal (k-conformality
    is monotone in k, and rank+1 always suffices)."""
    k = 1
    while True:
        if is_k_conformal(h, k):
            return k
        k += 1
        if k > h.rank + 1:
            raise RuntimeError("conformal degree scan failed to terminate")


def is_conformal(h: Hypergraph) -> ConformalityVerdict:
    """The k = 2 test, on the co-occurrence graph's clique enumerator."""
    return is_k_conformal(h, 2)
