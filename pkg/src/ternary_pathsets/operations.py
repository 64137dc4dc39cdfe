"""Interleaving and decimation of path sets.

Interleaving builds the set of sequences whose residue-class subsequences
``x_j, x_{j+n}, x_{j+2n}, ...`` all lie in given path sets; decimation
extracts one such subsequence.
"""

from __future__ import annotations

import itertools
import logging
from collections import deque
from typing import Sequence

from .presentation import (
    DIGITS,
    Presentation,
    _subset_automaton,
    determinize,
    is_right_resolving,
    minimize,
    trim,
)

log = logging.getLogger(__name__)


def _tuple_label(parts: Sequence[str]) -> str:
    return "(" + ",".join(parts) + ")"


def interleave(
    p: Presentation, n: int, *, trim_output: bool = True, return_info: bool = False
):
    """Presentation of the n-interleaving of the path set of `p`.

    Vertices are n-tuples of vertices of `p` used as a rotating queue: the
    last coordinate is the one advanced by the current digit, and its
    successor is pushed on the front.  An edge ``u -a-> v`` of `p` yields
    the edges ``(i_1..i_{n-1}, u) -a-> (v, i_1..i_{n-1})`` for every choice
    of the ``i``.

    With ``trim_output=False`` all ``k**n`` tuples and ``m * k**(n-1)``
    edges are materialized (k vertices and m edges in `p`).  Otherwise only
    the part reachable from the all-marked tuple is explored and trimmed.

    A non-right-resolving `p` is determinized first; pass
    ``return_info=True`` to get ``(presentation, determinized)``.
    """
    if n < 1:
        raise ValueError("interleaving factor n must be >= 1")
    determinized = False
    if p.is_empty:
        out = Presentation.empty()
        return (out, determinized) if return_info else out
    if not is_right_resolving(p):
        log.info("interleave: input not right-resolving, determinizing first")
        p = determinize(p)
        determinized = True
    k = p.num_vertices
    out_edges = p.out_edges

    if not trim_output:
        tuples = list(itertools.product(range(k), repeat=n))
        ids = {t: i for i, t in enumerate(tuples)}
        edges = set()
        for t in tuples:
            for d, v in out_edges[t[-1]]:
                edges.add((ids[t], ids[(v,) + t[:-1]], d))
        labels = tuple(_tuple_label([p.labels[i] for i in t]) for t in tuples)
        marked = ids[(p.marked,) * n]
        out = Presentation(labels, marked, frozenset(edges))
    else:
        start = (p.marked,) * n
        ids = {start: 0}
        order = [start]
        edges = set()
        queue = deque([start])
        while queue:
            t = queue.popleft()
            for d, v in out_edges[t[-1]]:
                nxt = (v,) + t[:-1]
                if nxt not in ids:
                    ids[nxt] = len(order)
                    order.append(nxt)
                    queue.append(nxt)
                edges.add((ids[t], ids[nxt], d))
        labels = tuple(_tuple_label([p.labels[i] for i in t]) for t in order)
        out = trim(Presentation(labels, 0, frozenset(edges)))
    return (out, determinized) if return_info else out


def interleave_multi(ps: Sequence[Presentation]) -> Presentation:
    """Presentation of I(P_0, ..., P_{m-1}): digit t must follow P_{t mod m}.

    Uses the same rotating-queue states as :func:`interleave`, with each
    coordinate tagged by the (deduplicated) presentation it belongs to, so
    that the coordinate advanced next always knows which graph to follow.
    Equal presentations share a tag, which makes ``interleave_multi([p]*n)``
    coincide with ``interleave(p, n)``.
    """
    ps = list(ps)
    if not ps:
        raise ValueError("interleave_multi needs at least one presentation")
    graphs: list[Presentation] = []
    tags = []
    for p in ps:
        p = trim(p)
        if p.is_empty:
            return Presentation.empty()
        if not is_right_resolving(p):
            p = determinize(p)
        if p in graphs:
            tags.append(graphs.index(p))
        else:
            tags.append(len(graphs))
            graphs.append(p)
    m = len(ps)
    # at time 0 the last coordinate belongs to component 0, the first to component m-1
    start = tuple((tags[j], graphs[tags[j]].marked) for j in reversed(range(m)))
    ids = {start: 0}
    order = [start]
    edges = set()
    queue = deque([start])
    while queue:
        t = queue.popleft()
        tag, u = t[-1]
        for d, v in graphs[tag].out_edges[u]:
            nxt = ((tag, v),) + t[:-1]
            if nxt not in ids:
                ids[nxt] = len(order)
                order.append(nxt)
                queue.append(nxt)
            edges.add((ids[t], ids[nxt], d))
    if len(graphs) == 1:
        labels = [_tuple_label([graphs[0].labels[u] for _, u in t]) for t in order]
    else:
        labels = [_tuple_label([f"{g}:{graphs[g].labels[u]}" for g, u in t]) for t in order]
    return trim(Presentation(tuple(labels), 0, frozenset(edges)))


def decimate(p: Presentation, j: int, m: int, *, reduce: bool = True) -> Presentation:
    """Right-resolving presentation of the decimation ``x -> (x_j, x_{j+m}, ...)``.

    Subset construction: the start state collects the vertices reachable
    from the marked vertex in exactly `j` steps; on digit d a state S moves
    to the vertices reachable from S by one d-edge followed by any ``m-1``
    edges.  With `reduce` (the default) the result is minimized, which
    makes it a canonical presentation of the decimated path set.
    """
    if m < 1:
        raise ValueError("decimation step m must be >= 1")
    if j < 0:
        raise ValueError("decimation offset j must be >= 0")
    p = trim(p)
    if p.is_empty:
        return p
    succ = p.successors
    out = p.out_edges

    def any_steps(s: frozenset[int], count: int) -> frozenset[int]:
        for _ in range(count):
            s = frozenset(v for u in s for v in succ[u])
        return s

    def step(s, d):
        hit = frozenset(v for u in s for e, v in out[u] if e == d)
        return any_steps(hit, m - 1)

    start = any_steps(frozenset([p.marked]), j)
    q = _subset_automaton(p, start, step)
    return minimize(q) if reduce else q


__all__ = ["interleave", "interleave_multi", "decimate", "DIGITS"]
