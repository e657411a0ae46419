"""Maximal clique and hyperclique enumeration.

Graphs get a dedicated enumerator that grows the vertex set one vertex at
a time and walks the resulting tree of maximal cliques; its delay depends
only on the graph size, never on how many cliques were already produced.
Uniform hypergraphs of higher arity go through the complement: maximal
hypercliques are exactly the complements of the minimal hitting sets of
the non-edges.
"""

from __future__ import annotations

from typing import Callable

from .core import Hypergraph, VertexSet, uniform_complement
from .enumeration import enumerate_tr

__all__ = [
    "enumerate_maximal_cliques",
    "enumerate_maximal_hypercliques",
    "enumerate_maximal_independent_sets",
]

Sink = Callable[[VertexSet], None]


class _Stop(Exception):
    pass


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


def enumerate_maximal_cliques(
    g: Hypergraph, sink: Sink | None = None, *, limit: int | None = None
) -> int:
    """Emit every maximal clique (>= 2 vertices) of a graph exactly once.

    Vertices are added in index order; a maximal clique C of the graph on
    the first i vertices either survives vertex i, absorbs it, or spawns
    the clique (C ∩ N(v_i)) ∪ {v_i} — the spawn is kept only when it is
    maximal so far and C is the least maximal clique containing its base,
    which makes every clique reachable from exactly one parent.  The work
    between two outputs is polynomial in the graph size regardless of how
    many cliques came before.
    """
    if limit is not None and limit < 0:
        raise ValueError("limit must be non-negative")
    for e in g.edge_masks():
        if e.bit_count() != 2:
            raise ValueError("clique enumeration needs a 2-uniform hypergraph")
    n = g.n
    adj = [0] * n
    for e in g.edge_masks():
        a = (e & -e).bit_length() - 1
        b = e.bit_length() - 1
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    count = 0
    if limit == 0:
        return 0
    emit = sink if sink is not None else (lambda _c: None)
    stack: list[tuple[int, int]] = [(0, 0)]  # (level, clique mask)
    try:
        while stack:
            i, c = stack.pop()
            if i == n:
                if c.bit_count() >= 2:
                    emit(VertexSet(n, c))
                    count += 1
                    if limit is not None and count >= limit:
                        raise _Stop
                continue
            av = adj[i]
            if c & ~av == 0:
                # every clique vertex neighbors v_i: the clique absorbs it
                stack.append((i + 1, c | (1 << i)))
                continue
            base = c & av
            spawn = base | (1 << i)
            keep_spawn = True
            for u in range(i):
                if not (spawn >> u) & 1 and spawn & ~adj[u] == 0:
                    keep_spawn = False  # extendable below v_i: not maximal yet
                    break
            if keep_spawn:
                # parent test: c must be the least maximal clique over base
                least = base
                for u in range(i):
                    if not (least >> u) & 1 and least & ~adj[u] == 0:
                        least |= 1 << u
                keep_spawn = least == c
            if keep_spawn:
                stack.append((i + 1, spawn))
            stack.append((i + 1, c))
    except _Stop:
        pass
    return count


def enumerate_maximal_hypercliques(
    h: Hypergraph,
    sink: Sink | None = None,
    *,
    limit: int | None = None,
    r: int | None = None,
) -> int:
    """Emit the maximal hypercliques (>= r vertices, every r-subset an
    edge) of an r-uniform hypergraph, r >= 2, via the complement's
    minimal hitting sets.  Complements smaller than r are discarded."""
    if limit is not None and limit < 0:
        raise ValueError("limit must be non-negative")
    r = _uniform_rank(h, r)
    if r < 2:
        raise ValueError("hypercliques need arity at least 2")
    non_edges = uniform_complement(h, r)
    full = (1 << h.n) - 1
    count = 0
    if limit == 0:
        return 0
    emit = sink if sink is not None else (lambda _c: None)

    def on_transversal(t: VertexSet) -> None:
        nonlocal count
        c = full & ~t.mask
        if c.bit_count() >= r:
            emit(VertexSet(h.n, c))
            count += 1
            if limit is not None and count >= limit:
                raise _Stop

    try:
        enumerate_tr(non_edges, on_transversal)
    except _Stop:
        pass
    return count


def enumerate_maximal_independent_sets(
    h: Hypergraph,
    sink: Sink | None = None,
    *,
    limit: int | None = None,
    r: int | None = None,
) -> int:
    """Emit the maximal sets containing no edge of a uniform hypergraph;
    these are exactly the complements of its minimal hitting sets, with
    no size floor."""
    if limit is not None and limit < 0:
        raise ValueError("limit must be non-negative")
    if h.edge_masks():
        _uniform_rank(h, r)
    full = (1 << h.n) - 1
    count = 0
    if limit == 0:
        return 0
    emit = sink if sink is not None else (lambda _c: None)

    def on_transversal(t: VertexSet) -> None:
        nonlocal count
        emit(VertexSet(h.n, full & ~t.mask))
        count += 1
        if limit is not None and count >= limit:
            raise _Stop

    try:
        enumerate_tr(h, on_transversal)
    except _Stop:
        pass
    return count
