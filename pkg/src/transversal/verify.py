"""Decide whether a candidate hypergraph G is exactly the family of
minimal hitting sets of H, and on failure extract a counter-witness the
incremental enumerator can turn into a fresh solution.

Three checks, cheapest first: every edge of G must be a minimal hitting
set of H; every minimal hitting set of G with at most rank(H) vertices
must be an edge of H; and G may not have a minimal hitting set larger
than rank(H).  A failure of the last two hands back a minimal hitting set
S of G that is no edge of H — the complement of S is then a hitting set
of H none of whose minimal subsets is already in G.
"""

from __future__ import annotations

from collections import Counter

from .core import Hypergraph, VertexSet
from .hitting import is_minimal_mask, minimize
from .rank import colex_combinations, rank_at_least

__all__ = ["VerifyOutcome", "Equal", "NotSubset", "MissingSolution", "verify_tr", "preorder_leq"]


class VerifyOutcome:
    """Base of Equal / NotSubset / MissingSolution."""

    __slots__ = ()

    @property
    def equal(self) -> bool:
        return isinstance(self, Equal)


class Equal(VerifyOutcome):
    __slots__ = ()

    def __repr__(self) -> str:
        return "Equal()"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Equal)

    def __hash__(self) -> int:
        return hash(Equal)


class NotSubset(VerifyOutcome):
    """Some edge of G is not a minimal hitting set of H."""

    __slots__ = ("g",)

    def __init__(self, g: VertexSet):
        self.g = g

    def __repr__(self) -> str:
        return f"NotSubset({self.g!r})"


class MissingSolution(VerifyOutcome):
    """``s`` is a minimal hitting set of G absent from H's edges, and
    ``t`` the fresh minimal hitting set of H extracted from it."""

    __slots__ = ("s", "t")

    def __init__(self, s: VertexSet, t: VertexSet):
        self.s = s
        self.t = t

    def __repr__(self) -> str:
        return f"MissingSolution(s={self.s!r}, t={self.t!r})"


def _extract(h: Hypergraph, s: VertexSet) -> MissingSolution:
    complement = VertexSet(h.n, ((1 << h.n) - 1) & ~s.mask)
    return MissingSolution(s, minimize(h, complement))


def verify_tr(
    g: Hypergraph,
    h: Hypergraph,
    *,
    rank_method: str = "lookahead",
    counters: Counter | None = None,
) -> VerifyOutcome:
    if g.n != h.n:
        raise ValueError("both hypergraphs must share the universe")
    n = h.n
    r = h.rank
    h_masks = h.edge_masks()
    h_mask_set = h.edge_mask_set()

    # 1: G contains only minimal hitting sets of H.
    for ge in g.edges:
        if not is_minimal_mask(h_masks, ge.mask):
            return NotSubset(ge)

    # 2: every minimal hitting set of G with <= r vertices is an edge of H.
    # Scan subsets by size then colex; distinct hits are distinct edges of
    # H, so the (m+1)-st hit cannot pass and the scan self-terminates.
    g_masks = g.edge_masks()
    for size in range(0, r + 1):
        for combo in colex_combinations(n, size):
            if counters is not None:
                counters["verify_subset_candidates"] += 1
            s = 0
            for v in combo:
                s |= 1 << v
            if is_minimal_mask(g_masks, s) and s not in h_mask_set:
                return _extract(h, VertexSet(n, s))

    # 3: G has no minimal hitting set larger than r.  An empty edge in G
    # leaves G without hitting sets, which passes trivially.
    if all(gm != 0 for gm in g_masks):
        witness = rank_at_least(g, r + 1, method=rank_method, counters=counters)
        if witness is not None:
            return _extract(h, witness.t)

    return Equal()


def preorder_leq(g: Hypergraph, h: Hypergraph) -> bool:
    """Every edge of ``g`` contains some edge of ``h``."""
    if g.n != h.n:
        raise ValueError("both hypergraphs must share the universe")
    h_masks = h.edge_masks()
    return all(
        any(he & ~ge == 0 for he in h_masks) for ge in g.edge_masks()
    )
