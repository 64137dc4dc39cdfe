"""Pointed labeled directed graphs over the digit alphabet {0, 1, 2}.

A :class:`Presentation` describes a path set: the set of digit sequences
read along one-sided infinite walks that start at the marked vertex.
Vertices are dense integers ``0..n-1``; labels are display strings and
never influence the structural algorithms in this module.

The empty presentation (no vertices, ``marked is None``) presents the
empty path set.
"""

from __future__ import annotations

import struct
from collections import Counter, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Hashable, Iterable, Mapping, Sequence

DIGITS = (0, 1, 2)


class PresentationError(ValueError):
    """Raised for malformed presentations or violated preconditions."""


class NotRightResolvingError(PresentationError):
    pass


@dataclass(frozen=True)
class Presentation:
    labels: tuple[str, ...]
    marked: int | None
    edges: frozenset[tuple[int, int, int]]
    alphabet_size: int = field(default=3, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if n == 0:
            if self.marked is not None or self.edges:
                raise PresentationError("empty presentation cannot carry a marked vertex or edges")
            return
        if self.marked is not None and not 0 <= self.marked < n:
            raise PresentationError(f"marked vertex {self.marked} out of range")
        if len(set(self.labels)) != n:
            raise PresentationError("vertex labels must be pairwise distinct")
        for u, v, d in self.edges:
            if not (0 <= u < n and 0 <= v < n):
                raise PresentationError(f"edge {(u, v, d)} references a missing vertex")
            if d not in DIGITS:
                raise PresentationError(f"edge digit {d!r} outside {{0,1,2}}")

    @classmethod
    def empty(cls) -> Presentation:
        return cls((), None, frozenset())

    @classmethod
    def from_edges(
        cls,
        edges: Iterable[tuple[Hashable, Hashable, int]],
        marked: Hashable,
        labels: Mapping[Hashable, str] | None = None,
        vertices: Iterable[Hashable] = (),
    ) -> Presentation:
        """Build a presentation from edges between arbitrary hashable vertex names.

        Vertex ids are assigned in breadth-first order from `marked`, with
        unreachable vertices appended in first-seen order.  Labels default to
        ``str(name)``.
        """
        edges = [(u, v, int(d)) for u, v, d in edges]
        out: dict[Hashable, list[tuple[int, Hashable]]] = {}
        order: list[Hashable] = []
        for name in [marked, *vertices]:
            if name not in out:
                out[name] = []
                order.append(name)
        for u, v, d in edges:
            for name in (u, v):
                if name not in out:
                    out[name] = []
                    order.append(name)
            out[u].append((d, v))
        ids: dict[Hashable, int] = {marked: 0}
        queue = deque([marked])
        while queue:
            u = queue.popleft()
            for _, v in sorted(out[u], key=lambda t: t[0]):
                if v not in ids:
                    ids[v] = len(ids)
                    queue.append(v)
        for name in order:
            if name not in ids:
                ids[name] = len(ids)
        names = sorted(ids, key=ids.__getitem__)
        if labels is None:
            lab = tuple(str(x) for x in names)
        else:
            lab = tuple(labels[x] for x in names)
        return cls(lab, 0, frozenset((ids[u], ids[v], d) for u, v, d in edges))

    @property
    def num_vertices(self) -> int:
        return len(self.labels)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def is_empty(self) -> bool:
        return not self.labels

    @cached_property
    def out_edges(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex, the sorted ``(digit, target)`` pairs of its out-edges."""
        out: list[list[tuple[int, int]]] = [[] for _ in self.labels]
        for u, v, d in self.edges:
            out[u].append((d, v))
        return tuple(tuple(sorted(x)) for x in out)

    @cached_property
    def successors(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(sorted({v for _, v in row})) for row in self.out_edges)

    def vertex_of(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(label) from None

    def transition(self, u: int, digit: int) -> int | None:
        """Target of the `digit` edge at `u` (right-resolving graphs only)."""
        for d, v in self.out_edges[u]:
            if d == digit:
                return v
        return None

    def relabel(self, labels: Sequence[str]) -> Presentation:
        return Presentation(tuple(labels), self.marked, self.edges)

    def permuted(self, perm: Sequence[int]) -> Presentation:
        """Rename vertex ``i`` to ``perm[i]``."""
        n = self.num_vertices
        if sorted(perm) != list(range(n)):
            raise PresentationError("perm must be a permutation of the vertex ids")
        labels = [""] * n
        for i, lab in enumerate(self.labels):
            labels[perm[i]] = lab
        return Presentation(
            tuple(labels),
            None if self.marked is None else perm[self.marked],
            frozenset((perm[u], perm[v], d) for u, v, d in self.edges),
        )

    def __repr__(self) -> str:
        return (
            f"Presentation(vertices={self.num_vertices}, edges={self.num_edges}, "
            f"marked={self.marked!r})"
        )


def _induced(p: Presentation, keep: Iterable[int]) -> Presentation:
    """Sub-presentation on `keep`, renumbered in increasing old-id order."""
    keep = sorted(set(keep))
    if p.marked is not None and p.marked not in keep:
        return Presentation.empty()
    new = {old: i for i, old in enumerate(keep)}
    return Presentation(
        tuple(p.labels[v] for v in keep),
        None if p.marked is None else new[p.marked],
        frozenset((new[u], new[v], d) for u, v, d in p.edges if u in new and v in new),
    )


def reachable(p: Presentation, start: int | None = None) -> set[int]:
    start = p.marked if start is None else start
    if start is None:
        return set()
    seen = {start}
    stack = [start]
    succ = p.successors
    while stack:
        u = stack.pop()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return seen


def trim(p: Presentation) -> Presentation:
    """Restrict to reachable vertices and iteratively delete sinks.

    Sources are kept: the marked vertex may legitimately have no in-edges.
    If the marked vertex itself dies, the path set is empty and the empty
    presentation is returned.
    """
    if p.is_empty:
        return p
    alive = reachable(p)
    preds: dict[int, list[int]] = {v: [] for v in alive}
    outdeg = dict.fromkeys(alive, 0)
    for u, v, _ in p.edges:
        if u in alive and v in alive:
            outdeg[u] += 1
            preds[v].append(u)
    dead = [v for v in alive if outdeg[v] == 0]
    while dead:
        v = dead.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u in preds[v]:
            if u in alive:
                outdeg[u] -= 1
                if outdeg[u] == 0:
                    dead.append(u)
    if p.marked not in alive:
        return Presentation.empty()
    return _induced(p, alive)


def is_trimmed(p: Presentation) -> bool:
    if p.is_empty:
        return True
    return all(p.out_edges) and len(reachable(p)) == p.num_vertices


def is_right_resolving(p: Presentation) -> bool:
    for row in p.out_edges:
        digits = [d for d, _ in row]
        if len(digits) != len(set(digits)):
            return False
    return True


def _require_right_resolving(p: Presentation) -> None:
    if not is_right_resolving(p):
        raise NotRightResolvingError("presentation is not right-resolving; determinize it first")


def _subset_automaton(
    p: Presentation,
    start: frozenset[int],
    step: Callable[[frozenset[int], int], frozenset[int]],
) -> Presentation:
    """Breadth-first subset construction driven by `step`, then trimmed."""
    ids = {start: 0}
    order = [start]
    edges = set()
    queue = deque([start])
    while queue:
        s = queue.popleft()
        for d in DIGITS:
            t = step(s, d)
            if not t:
                continue
            if t not in ids:
                ids[t] = len(order)
                order.append(t)
                queue.append(t)
            edges.add((ids[s], ids[t], d))
    labels = tuple("{" + ",".join(p.labels[v] for v in sorted(s)) + "}" for s in order)
    return trim(Presentation(labels, 0, frozenset(edges)))


def determinize(p: Presentation) -> Presentation:
    """Right-resolving presentation of the same path set (subset construction).

    Vertices of the result are nonempty subsets of the trimmed input's
    vertices, labelled ``{a,b,...}``.
    """
    p = trim(p)
    if p.is_empty:
        return p
    out = p.out_edges

    def step(s, d):
        return frozenset(v for u in s for e, v in out[u] if e == d)

    return _subset_automaton(p, frozenset([p.marked]), step)


def label_product(p1: Presentation, p2: Presentation) -> Presentation:
    """Presentation of the intersection of two path sets."""
    if p1.is_empty or p2.is_empty:
        return Presentation.empty()
    if p1.alphabet_size != p2.alphabet_size:
        raise PresentationError("alphabet mismatch")
    start = (p1.marked, p2.marked)
    ids = {start: 0}
    order = [start]
    edges = set()
    queue = deque([start])
    while queue:
        a, b = pair = queue.popleft()
        for d, a2 in p1.out_edges[a]:
            for e, b2 in p2.out_edges[b]:
                if d != e:
                    continue
                nxt = (a2, b2)
                if nxt not in ids:
                    ids[nxt] = len(order)
                    order.append(nxt)
                    queue.append(nxt)
                edges.add((ids[pair], ids[nxt], d))
    labels = tuple(f"({p1.labels[a]},{p2.labels[b]})" for a, b in order)
    return trim(Presentation(labels, 0, frozenset(edges)))


def minimize(p: Presentation) -> Presentation:
    """Merge follower-equivalent vertices of a right-resolving presentation.

    Two vertices are equivalent when they present the same path set.  The
    result is the smallest right-resolving presentation of the path set.
    """
    p = trim(p)
    if p.is_empty:
        return p
    _require_right_resolving(p)
    n = p.num_vertices
    delta = [[p.transition(u, d) for d in DIGITS] for u in range(n)]
    # Moore refinement; a missing edge behaves like a transition to a reject sink.
    block = [0] * n
    num_blocks = 1
    while True:
        sig = {}
        new_block = []
        for u in range(n):
            key = (block[u],) + tuple(-1 if v is None else block[v] for v in delta[u])
            new_block.append(sig.setdefault(key, len(sig)))
        if len(sig) == num_blocks:
            break
        block, num_blocks = new_block, len(sig)
    labels: dict[int, list[str]] = {}
    for u in range(n):
        labels.setdefault(block[u], []).append(p.labels[u])
    edges = {(block[u], block[v], d) for u, v, d in p.edges}
    lab = tuple(labels[b][0] if len(labels[b]) == 1 else "{" + ",".join(labels[b]) + "}"
                for b in range(num_blocks))
    q = Presentation(lab, block[p.marked], frozenset(edges))
    return q.permuted(_bfs_order(q))


def _bfs_order(p: Presentation) -> list[int]:
    """perm[old] = new id in digit-ordered breadth-first order from the marked vertex."""
    order = {p.marked: 0}
    queue = deque([p.marked])
    while queue:
        u = queue.popleft()
        for _, v in p.out_edges[u]:
            if v not in order:
                order[v] = len(order)
                queue.append(v)
    for v in range(p.num_vertices):
        if v not in order:
            order[v] = len(order)
    return [order[v] for v in range(p.num_vertices)]


# --- strongly connected components -------------------------------------------


@dataclass(frozen=True)
class SccDecomposition:
    components: tuple[frozenset[int], ...]
    condensation: frozenset[tuple[int, int]]
    component_of: tuple[int, ...]

    def is_chain(self) -> bool:
        """True when the condensation is a single directed path through all components."""
        n = len(self.components)
        if n == 0:
            return False
        out = {i: set() for i in range(n)}
        indeg = dict.fromkeys(range(n), 0)
        for a, b in self.condensation:
            out[a].add(b)
            indeg[b] += 1
        roots = [i for i in range(n) if indeg[i] == 0]
        if len(roots) != 1:
            return False
        seen, cur = 1, roots[0]
        while out[cur]:
            if len(out[cur]) != 1:
                return False
            (cur,) = out[cur]
            seen += 1
        return seen == n and len(self.condensation) == n - 1

    def chain_order(self) -> list[int]:
        """Component indices in topological order (sources first)."""
        indeg = {i: 0 for i in range(len(self.components))}
        out: dict[int, list[int]] = {i: [] for i in indeg}
        for a, b in sorted(self.condensation):
            out[a].append(b)
            indeg[b] += 1
        ready = deque(sorted(i for i, d in indeg.items() if d == 0))
        order = []
        while ready:
            i = ready.popleft()
            order.append(i)
            for j in out[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        return order


def tarjan_scc(n: int, successors: Sequence[Sequence[int]]) -> list[list[int]]:
    """Iterative Tarjan; components come out in reverse topological order."""
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            succ = successors[v]
            if i < len(succ):
                work[-1] = (v, i + 1)
                w = succ[i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(comp)
    return comps


def scc_decomposition(p: Presentation) -> SccDecomposition:
    comps = tarjan_scc(p.num_vertices, p.successors)
    comps.reverse()  # topological order: sources first
    component_of = [0] * p.num_vertices
    for i, comp in enumerate(comps):
        for v in comp:
            component_of[v] = i
    cond = {
        (component_of[u], component_of[v])
        for u, v, _ in p.edges
        if component_of[u] != component_of[v]
    }
    return SccDecomposition(
        tuple(frozenset(c) for c in comps), frozenset(cond), tuple(component_of)
    )


def is_strongly_connected(p: Presentation) -> bool:
    return not p.is_empty and len(scc_decomposition(p).components) == 1


# --- canonical forms and automorphisms ---------------------------------------


def canonical_form(p: Presentation) -> bytes:
    """Renaming-invariant encoding of a trimmed right-resolving presentation.

    Vertices are renumbered in breadth-first order from the marked vertex,
    visiting out-edges by increasing digit.  Each vertex then contributes
    one signed 32-bit target (or -1) per digit.  Two such presentations
    encode equally iff they are isomorphic as pointed labeled graphs.
    """
    if p.is_empty:
        return b""
    _require_right_resolving(p)
    if not is_trimmed(p):
        raise PresentationError("canonical_form expects a trimmed presentation")
    perm = _bfs_order(p)
    inv = sorted(range(p.num_vertices), key=perm.__getitem__)
    words = [p.num_vertices]
    for old in inv:
        for d in DIGITS:
            v = p.transition(old, d)
            words.append(-1 if v is None else perm[v])
    return struct.pack(f"<{len(words)}i", *words)


def isomorphic(p: Presentation, q: Presentation) -> bool:
    return canonical_form(p) == canonical_form(q)


def verify_automorphism(
    p: Presentation,
    vertex_map: Mapping[int, int] | Sequence[int],
    digit_map: Mapping[int, int] | Sequence[int] = (0, 1, 2),
) -> tuple[bool, Presentation | None]:
    """Check that (vertex_map, digit_map) maps the edge set onto itself.

    Returns ``(ok, quotient)``.  The quotient is only built when `ok` holds
    and `vertex_map` is a fixed-point-free involution; it identifies each
    orbit pair, keeping the out-edges of the smaller id, and is unpointed
    (``marked is None``).
    """
    n = p.num_vertices
    vmap = [vertex_map[i] for i in range(n)]
    if sorted(vmap) != list(range(n)):
        raise PresentationError("vertex_map is not a bijection on the vertex set")
    dmap = [digit_map[d] for d in DIGITS]
    if sorted(dmap) != list(DIGITS):
        raise PresentationError("digit_map is not a permutation of {0,1,2}")
    image = {(vmap[u], vmap[v], dmap[d]) for u, v, d in p.edges}
    if image != p.edges:
        return False, None
    if any(vmap[vmap[i]] != i or vmap[i] == i for i in range(n)):
        return True, None
    reps = sorted(i for i in range(n) if i < vmap[i])
    rep_of = {}
    for k, i in enumerate(reps):
        rep_of[i] = rep_of[vmap[i]] = k
    edges = frozenset((rep_of[u], rep_of[v], d) for u, v, d in p.edges if u < vmap[u])
    labels = tuple(f"{p.labels[i]}~{p.labels[vmap[i]]}" for i in reps)
    return True, Presentation(labels, None, edges)


def is_covering(
    cover: Presentation, base: Presentation, vertex_map: Mapping[int, int], degree: int = 2
) -> bool:
    """Check that `vertex_map` is a `degree`-fold covering of underlying graphs.

    Edge labels are ignored.  Every base vertex must have exactly `degree`
    preimages, and at each cover vertex the out-neighbour multiset must map
    bijectively onto the out-neighbour multiset of its image (likewise for
    in-neighbours).
    """
    fibres = Counter(vertex_map[v] for v in range(cover.num_vertices))
    if set(fibres) != set(range(base.num_vertices)) or any(c != degree for c in fibres.values()):
        return False

    def neighbourhoods(g: Presentation, image=lambda v: v):
        outs = [Counter() for _ in range(g.num_vertices)]
        ins = [Counter() for _ in range(g.num_vertices)]
        for u, v, _ in g.edges:
            outs[u][image(v)] += 1
            ins[v][image(u)] += 1
        return outs, ins

    cov_out, cov_in = neighbourhoods(cover, vertex_map.__getitem__)
    base_out, base_in = neighbourhoods(base)
    return all(
        cov_out[x] == base_out[vertex_map[x]] and cov_in[x] == base_in[vertex_map[x]]
        for x in range(cover.num_vertices)
    )


def initial_words(p: Presentation, n: int) -> set[tuple[int, ...]]:
    """All length-`n` digit strings read from the marked vertex of trim(p).

    Exhaustive; meant for small `n` and cross-checks.
    """
    p = trim(p)
    if p.is_empty:
        return set()
    frontier = {((), p.marked)}
    for _ in range(n):
        frontier = {(w + (d,), v) for w, u in frontier for d, v in p.out_edges[u]}
    return {w for w, _ in frontier}
