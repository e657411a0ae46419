"""Brute-force reference implementations, straight from the definitions.

These are the ground truth the fast algorithms are tested against, so
they deliberately share no code with them: plain subset scans over int
masks, guarded by a hard universe-size cap.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import Hypergraph, VertexSet, iter_bits

__all__ = [
    "DEFAULT_CAP",
    "OracleCapExceeded",
    "ExtensionPartition",
    "brute_tr",
    "brute_rank",
    "brute_conformal_degree",
    "brute_max_cliques",
    "brute_extensions",
]

DEFAULT_CAP = 20


class OracleCapExceeded(ValueError):
    """The instance is too large for exhaustive search."""


def _guard(h: Hypergraph, cap: int) -> None:
    if h.n > cap:
        raise OracleCapExceeded(
            f"universe of {h.n} vertices exceeds the oracle cap of {cap}"
        )


def _is_minimal_hitting(masks: tuple[int, ...], t: int) -> bool:
    for e in masks:
        if e & t == 0:
            return False
    private = 0
    for e in masks:
        et = e & t
        if et & (et - 1) == 0:
            private |= et
    return private == t


def brute_tr(h: Hypergraph, *, cap: int = DEFAULT_CAP) -> list[VertexSet]:
    """Every minimal hitting set, by scanning all subsets of the universe
    in ascending mask order."""
    _guard(h, cap)
    masks = h.edge_masks()
    return [
        VertexSet(h.n, t)
        for t in range(1 << h.n)
        if _is_minimal_hitting(masks, t)
    ]


def brute_rank(h: Hypergraph, *, cap: int = DEFAULT_CAP) -> int:
    """Maximum size of a minimal hitting set; 0 when there is none."""
    return max((len(t) for t in brute_tr(h, cap=cap)), default=0)


def _covered(masks: tuple[int, ...], s: int) -> bool:
    return any(s & ~e == 0 for e in masks)


def _qualifies(masks: tuple[int, ...], s: int, k: int) -> bool:
    # Coverage is closed downward, so checking the subsets of size
    # min(k, |s|) checks every subset of size <= k.
    vs = tuple(iter_bits(s))
    size = min(k, len(vs))
    for combo in itertools.combinations(vs, size):
        sub = 0
        for v in combo:
            sub |= 1 << v
        if not _covered(masks, sub):
            return False
    return True


def brute_conformal_degree(h: Hypergraph, *, cap: int = DEFAULT_CAP) -> int:
    """Smallest k such that every set whose size-<=k subsets are all
    covered by edges is itself covered."""
    _guard(h, cap)
    masks = h.edge_masks()
    k = 1
    while True:
        if all(
            _covered(masks, s)
            for s in range(1 << h.n)
            if _qualifies(masks, s, k)
        ):
            return k
        k += 1
        if k > h.n + 1:
            raise RuntimeError("conformal degree scan failed to terminate")


def _uniform_rank(h: Hypergraph, r: int | None) -> int:
    sizes = {e.bit_count() for e in h.edge_masks()}
    if len(sizes) > 1:
        raise ValueError("hypergraph is not uniform")
    if sizes:
        found = sizes.pop()
        if r is not None and r != found:
            raise ValueError(f"hypergraph is {found}-uniform, not {r}-uniform")
        return found
    if r is None:
        raise ValueError("edge size is ambiguous for an edgeless hypergraph; pass r")
    return r


def brute_max_cliques(
    h: Hypergraph, r: int | None = None, *, cap: int = DEFAULT_CAP
) -> list[VertexSet]:
    """Maximal sets of >= r vertices whose r-subsets are all edges."""
    _guard(h, cap)
    r = _uniform_rank(h, r)
    present = h.edge_mask_set()

    def is_clique(c: int) -> bool:
        vs = tuple(iter_bits(c))
        if len(vs) < r:
            return False
        for combo in itertools.combinations(vs, r):
            sub = 0
            for v in combo:
                sub |= 1 << v
            if sub not in present:
                return False
        return True

    cliques = [c for c in range(1 << h.n) if is_clique(c)]
    clique_set = set(cliques)
    out = []
    for c in cliques:
        extendable = any(
            (c | (1 << v)) in clique_set for v in range(h.n) if not (c >> v) & 1
        )
        if not extendable:
            out.append(VertexSet(h.n, c))
    return out


@dataclass(frozen=True)
class ExtensionPartition:
    """Minimal hitting sets T with X ⊆ T ⊆ V∖Y, split by |T ∖ X|."""

    zero: tuple[VertexSet, ...]
    one: tuple[VertexSet, ...]
    higher: tuple[VertexSet, ...]


def brute_extensions(
    h: Hypergraph, x: VertexSet, y: VertexSet, *, cap: int = DEFAULT_CAP
) -> ExtensionPartition:
    _guard(h, cap)
    if x.mask & y.mask:
        raise ValueError("X and Y must be disjoint")
    zero, one, higher = [], [], []
    for t in brute_tr(h, cap=cap):
        if x.mask & ~t.mask or t.mask & y.mask:
            continue
        extra = (t.mask & ~x.mask).bit_count()
        (zero if extra == 0 else one if extra == 1 else higher).append(t)
    return ExtensionPartition(tuple(zero), tuple(one), tuple(higher))
