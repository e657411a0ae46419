"""Streaming enumeration of all minimal hitting sets.

Two routes: a look-ahead tree search (works for any input, delay governed
by the maximum degree and the largest solution), and an incremental
verify-and-extract loop that shines when the edge rank is small.  Both
stream to a sink and collect delay instrumentation.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable

from .core import Hypergraph, VertexSet
from .extension import ExtensionOutcome, extend
from . import verify as _verify

__all__ = ["DelayStats", "ExtendCallRecord", "enumerate_tr", "enumerate_incremental"]

Sink = Callable[[VertexSet], None]


class _LimitReached(Exception):
    pass


@dataclass(frozen=True)
class ExtendCallRecord:
    x_size: int
    product_iterations: int


@dataclass
class DelayStats:
    """Per-run instrumentation: output timestamps, the size of the partial
    solution at every extension call, and product-loop totals."""

    n: int
    m: int
    started_ns: int
    finished_ns: int = 0
    output_ns: list[int] = field(default_factory=list)
    calls: list[ExtendCallRecord] = field(default_factory=list)
    output_call_index: list[int] = field(default_factory=list)
    max_stack_depth: int = 0

    @property
    def outputs(self) -> int:
        return len(self.output_ns)

    @property
    def total_ns(self) -> int:
        return self.finished_ns - self.started_ns

    @property
    def max_delay_ns(self) -> int:
        """Largest gap, counting lead-in before the first output and the
        tail until termination."""
        if not self.output_ns:
            return self.total_ns
        gaps = [self.output_ns[0] - self.started_ns]
        gaps.extend(b - a for a, b in zip(self.output_ns, self.output_ns[1:]))
        gaps.append(self.finished_ns - self.output_ns[-1])
        return max(gaps)

    @property
    def x_size_histogram(self) -> Counter:
        hist: Counter = Counter()
        for rec in self.calls:
            hist[rec.x_size] += 1
        return hist

    @property
    def product_iterations(self) -> int:
        return sum(rec.product_iterations for rec in self.calls)

    def to_json(self) -> dict:
        return {
            "outputs": self.outputs,
            "max_delay_ns": self.max_delay_ns,
            "total_ns": self.total_ns,
            "extend_call_histogram": {
                str(k): v for k, v in sorted(self.x_size_histogram.items())
            },
            "product_iterations": self.product_iterations,
        }


def enumerate_tr(
    h: Hypergraph, sink: Sink | None = None, *, limit: int | None = None
) -> DelayStats:
    """Stream every minimal hitting set of ``h`` exactly once.

    At each node (X, Y) the extension call emits the small solutions and
    either halts the branch or returns a grown forbidden set Y+; the
    search then branches on the lowest vertex outside X and Y+, include
    branch first.  The recursion is an explicit stack, so live state is
    one scratch family plus the (X, Y) path.

    An edgeless hypergraph yields the single solution {} and an empty
    edge yields nothing.
    """
    if limit is not None and limit < 0:
        raise ValueError("limit must be non-negative")
    n = h.n
    stats = DelayStats(n=n, m=h.m, started_ns=time.perf_counter_ns())
    emitted = 0

    def deliver(t: VertexSet) -> None:
        nonlocal emitted
        if sink is not None:
            sink(t)
        stats.output_ns.append(time.perf_counter_ns())
        stats.output_call_index.append(len(stats.calls))
        emitted += 1
        if limit is not None and emitted >= limit:
            raise _LimitReached

    try:
        if limit == 0:
            pass
        elif h.m == 0:
            deliver(VertexSet(n))
        else:
            full = (1 << n) - 1
            stack: list[tuple[int, int]] = [(0, 0)]
            while stack:
                if len(stack) > stats.max_stack_depth:
                    stats.max_stack_depth = len(stack)
                xm, ym = stack.pop()
                counters: Counter = Counter()
                outcome: ExtensionOutcome = extend(
                    h, VertexSet(n, xm), VertexSet(n, ym), deliver, counters=counters
                )
                stats.calls.append(
                    ExtendCallRecord(xm.bit_count(), counters["product_iterations"])
                )
                if outcome.continues:
                    ypm = outcome.y_plus.mask
                    rest = full & ~(xm | ypm)
                    if not rest:
                        raise RuntimeError(
                            "higher-order extension promised but no vertex is left"
                        )
                    vbit = rest & -rest
                    stack.append((xm, ypm | vbit))  # exclude branch, visited second
                    stack.append((xm | vbit, ypm))  # include branch, visited first
    except _LimitReached:
        pass
    stats.finished_ns = time.perf_counter_ns()
    return stats


def enumerate_incremental(
    h: Hypergraph,
    sink: Sink | None = None,
    *,
    limit: int | None = None,
    rank_method: str = "lookahead",
) -> DelayStats:
    """Enumerate by repeatedly verifying the solutions found so far.

    Stage i checks whether the hypergraph G of found solutions already
    equals the transversal hypergraph; if not, the failing condition
    hands back a minimal hitting set S of G that is no edge of the input,
    and shrinking the complement of S yields a fresh solution.  Intended
    for inputs of small edge rank, where the verification is cheap.
    """
    if limit is not None and limit < 0:
        raise ValueError("limit must be non-negative")
    stats = DelayStats(n=h.n, m=h.m, started_ns=time.perf_counter_ns())
    emitted = 0

    def deliver(t: VertexSet) -> None:
        nonlocal emitted
        if sink is not None:
            sink(t)
        stats.output_ns.append(time.perf_counter_ns())
        stats.output_call_index.append(len(stats.calls))
        emitted += 1
        if limit is not None and emitted >= limit:
            raise _LimitReached

    solutions: list[VertexSet] = []
    try:
        if limit != 0:
            while True:
                g = Hypergraph(h.n, solutions, names=h.names)
                outcome = _verify.verify_tr(g, h, rank_method=rank_method)
                if isinstance(outcome, _verify.Equal):
                    break
                if isinstance(outcome, _verify.NotSubset):
                    raise RuntimeError(
                        "found solutions stopped being minimal hitting sets"
                    )
                deliver(outcome.t)
                solutions.append(outcome.t)
    except _LimitReached:
        pass
    stats.finished_ns = time.perf_counter_ns()
    return stats
