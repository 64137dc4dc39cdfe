"""Structural checks for the P_k, Q_k, L_k and N_k families.

Every verifier returns a :class:`CheckReport` whose ``checks`` map names
each sub-check to a boolean, so callers (and the CLI) can tell exactly
which property failed.
"""

from __future__ import annotations

import itertools
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import Any

from .operations import interleave
from .presentation import (
    Presentation,
    canonical_form,
    is_covering,
    scc_decomposition,
    verify_automorphism,
)
from .spectral import LOG3, hausdorff_dimension
from .translate import (
    build_family,
    build_translate_presentation,
    family_member,
    from_ternary,
    run_automaton,
    to_ternary,
)

LOG3_PHI = math.log((1 + math.sqrt(5)) / 2) / LOG3
LOG3_2 = math.log(2) / LOG3


class VerificationError(AssertionError):
    def __init__(self, report: CheckReport):
        super().__init__(f"{report.name}: failed {', '.join(report.failures)}")
        self.report = report


@dataclass
class CheckReport:
    name: str
    checks: dict[str, bool] = field(default_factory=dict)
    data: dict[str, Any] = field(default_factory=dict)

    def record(self, check: str, ok: bool) -> bool:
        self.checks[check] = bool(ok)
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    @property
    def failures(self) -> list[str]:
        return [k for k, v in self.checks.items() if not v]

    def raise_for_failures(self) -> CheckReport:
        if not self.ok:
            raise VerificationError(self)
        return self

    def as_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "checks": self.checks, "data": self.data}


# --- label classification -----------------------------------------------------


@dataclass(frozen=True)
class LabelClass:
    s_class: str | None
    t_class: str
    depth: int


def _label_value(label) -> int:
    return label if isinstance(label, int) else from_ternary(label)


def _runs_of_two(m: int, k: int) -> int:
    digits = to_ternary(m, k)
    return sum(1 for d, _ in itertools.groupby(digits) if d == "2")


def classify_pk_vertex(label, k: int) -> LabelClass:
    """S/T type and depth of a vertex label of the P_k graph.

    `label` is an integer or a most-significant-first ternary string.
    S1: the k-digit form has no digit 1.  S2: exactly one digit 1 with only
    zeros below it, or the label ``3^k``.  T1/T2 split on whether the k-th
    digit is 2 (``3^k`` counts as T2).  A T1 label's depth is its number of
    runs of 2s; a T2 label takes the depth of its reflection ``3^k - m``.
    """
    m = _label_value(label)
    top = 3**k
    if not 0 <= m <= top:
        raise ValueError(f"label {m} outside 0..3^{k}")
    if m == top:
        return LabelClass("S2", "T2", 0)
    digits = to_ternary(m, k)
    if "1" not in digits:
        s_class = "S1"
    elif digits.count("1") == 1 and set(digits[digits.index("1") + 1:]) <= {"0"}:
        s_class = "S2"
    else:
        s_class = None
    if digits[0] == "2":
        return LabelClass(s_class, "T2", _runs_of_two(top - m, k))
    return LabelClass(s_class, "T1", _runs_of_two(m, k))


def reflection_map(p: Presentation, k: int) -> list[int]:
    """Vertex permutation induced by ``R(m) = 3^k - m`` on the P_k graph."""
    index = {_label_value(lab): i for i, lab in enumerate(p.labels)}
    return [index[3**k - _label_value(lab)] for lab in p.labels]


@dataclass(frozen=True)
class DepthTable:
    k: int
    counts: dict[int, int]
    expected: dict[int, int]

    @property
    def matches(self) -> bool:
        return self.counts == self.expected and sum(self.counts.values()) == 2 ** (self.k + 1)

    def row(self) -> list[int]:
        return [self.counts.get(j, 0) for j in range(self.k // 2 + 1)]


def pk_depth_table(k: int, p: Presentation | None = None) -> DepthTable:
    p = build_family("P", k) if p is None else p
    counts: dict[int, int] = {}
    for lab in p.labels:
        d = classify_pk_vertex(lab, k).depth
        counts[d] = counts.get(d, 0) + 1
    expected = {j: 2 * comb(k + 1, 2 * j + 1) for j in range(k // 2 + 1)}
    return DepthTable(k, dict(sorted(counts.items())), expected)


def pk_structure_check(k: int) -> CheckReport:
    """Vertex count, depth monotonicity, depth-class SCCs, chain, reflection."""
    rep = CheckReport(f"pk-structure k={k}")
    p = build_family("P", k)
    rep.data["vertices"] = p.num_vertices
    rep.record("vertex_count", p.num_vertices == 2 ** (k + 1))

    classes = [classify_pk_vertex(lab, k) for lab in p.labels]
    depth = [c.depth for c in classes]
    s1 = sum(c.s_class == "S1" for c in classes)
    s2 = sum(c.s_class == "S2" for c in classes)
    rep.record("label_classes", s1 == s2 == 2**k)
    rep.record("depth_nondecreasing", all(depth[u] <= depth[v] for u, v, _ in p.edges))

    table = pk_depth_table(k, p)
    rep.data["depth_counts"] = table.row()
    rep.record("depth_counts", table.matches)

    scc = scc_decomposition(p)
    rep.data["scc_sizes"] = [len(scc.components[i]) for i in scc.chain_order()]
    by_depth: dict[int, set[int]] = {}
    for v, d in enumerate(depth):
        by_depth.setdefault(d, set()).add(v)
    rep.record("scc_are_depth_classes", set(scc.components) == {frozenset(s) for s in by_depth.values()})
    rep.record("scc_chain", scc.is_chain() and len(scc.components) == 1 + k // 2)

    perm = reflection_map(p, k)
    ok, quotient = verify_automorphism(p, perm, (1, 0, 2))
    rep.record("reflection_automorphism", ok)
    rep.record("reflection_fixed_point_free", all(perm[i] != i for i in range(len(perm))))
    rep.record("quotient_size", quotient is not None and quotient.num_vertices == 2**k)
    rep.data["quotient_vertices"] = None if quotient is None else quotient.num_vertices
    # reflection swaps S1 <-> S2
    rep.record(
        "reflection_swaps_s_classes",
        all({classes[i].s_class, classes[perm[i]].s_class} == {"S1", "S2"} for i in range(len(perm))),
    )
    return rep


def pk_depth_entropies(k: int) -> list[tuple[int, int, float]]:
    """(depth, SCC size, SCC Perron value) for each depth class of the P_k graph."""
    p = build_family("P", k)
    report = hausdorff_dimension(p)
    out = []
    for s in report.per_scc:
        d = classify_pk_vertex(p.labels[s.members[0]], k).depth
        out.append((d, s.size, s.beta))
    return sorted(out)


# --- lower bound witness -------------------------------------------------------


def witness_strings(k: int, periods: int = 3):
    """Prefixes of the eventually periodic witness family for P_k.

    Yields ``(digits, boundaries)``; `boundaries` are the prefix lengths at
    which each period (and the initial segment) ends.  Every free digit in
    every period is enumerated independently.
    """
    a, b = divmod(k, 4)
    head = [1, 1, 0, 0] * a + [0] * b
    tail = [0] * b + [1, 0, 0, 0] * (a - 1) + [1, 0, 0] + [0] * b
    for choice in itertools.product((0, 1), repeat=a * periods):
        digits = list(head)
        bounds = [len(digits)]
        it = iter(choice)
        for _ in range(periods):
            for _ in range(a):
                digits += [1, next(it), 0, 0]
            digits += tail
            bounds.append(len(digits))
        yield digits, bounds


def pk_lower_bound_witness(k: int, periods: int = 3) -> CheckReport:
    """Check the witness family is accepted and the entropy bound it implies holds.

    For ``k < 4`` the witness is empty (a = 0) and the bound is 0.
    """
    a, b = divmod(k, 4)
    rep = CheckReport(f"pk-lower-bound k={k}")
    bound = a / (2 * k - 1) * LOG3_2 if a else 0.0
    rep.data.update(a=a, b=b, bound=bound, floor=LOG3_2 / 13)
    p = build_family("P", k)
    dim = hausdorff_dimension(p).dimension
    rep.data["dimension"] = dim
    if a >= 1:
        period_len = 2 * k - 1
        rejected = []
        loops = True
        hub_label = from_ternary("0" * b + "0022" * a)
        for digits, bounds in witness_strings(k, periods):
            if not run_automaton(p, digits):
                rejected.append("".join(map(str, digits)))
                continue
            # the vertex at the end of each period must be the same hub vertex
            ends = set()
            u = p.marked
            pos = 0
            for stop in bounds:
                while pos < stop:
                    u = p.transition(u, digits[pos])
                    pos += 1
                ends.add(u)
            loops &= len(ends) == 1 and _label_value(p.labels[ends.pop()]) == hub_label
        rep.data["rejected"] = rejected[:5]
        rep.data["period_length"] = period_len
        rep.record("witnesses_accepted", not rejected)
        rep.record("witness_returns_to_hub", loops)
    rep.record("dimension_above_bound", dim >= bound - 1e-9)
    rep.record("dimension_above_floor", dim >= LOG3_2 / 13 - 1e-9)
    return rep


# --- subgraph double-covering the L_{k+1} graph --------------------------------


def _cover_cycle_labels(k: int) -> list[str]:
    up = ["2" * i + "0" * (k - i) for i in range(1, k + 1)]
    down = ["1" + "0" * (k - j) for j in range(0, k + 1)]
    return ["0", *up, *down]


def pk_cover_subgraph(k: int) -> CheckReport:
    """Embed the (2k+2)-cycle-with-two-loops subgraph H and check it covers L_{k+1}.

    H runs along 1-edges ``0 -> (2 0^{k-1}) -> ... -> (2^k) -> (1 0^k)``,
    then along 0-edges ``(1 0^k) -> (1 0^{k-1}) -> ... -> (1) -> 0``, with a
    0-loop at ``0`` and a 1-loop at ``(1 0^k)``.
    """
    rep = CheckReport(f"pk-cover k={k}")
    p = build_family("P", k)
    lookup = {_label_value(lab): i for i, lab in enumerate(p.labels)}
    cycle = [from_ternary(s) for s in _cover_cycle_labels(k)]
    n = len(cycle)
    h_edges = []
    for i, m in enumerate(cycle):
        nxt = cycle[(i + 1) % n]
        h_edges.append((m, nxt, 1 if i <= k else 0))
    h_edges.append((0, 0, 0))
    h_edges.append((3**k, 3**k, 1))
    present = all(
        m in lookup and t in lookup and (lookup[m], lookup[t], d) in p.edges for m, t, d in h_edges
    )
    rep.record("subgraph_embeds", present)
    rep.data["subgraph_vertices"] = n

    h = Presentation.from_edges(h_edges, 0, labels={m: to_ternary(m) for m in cycle})
    base = build_family("L", k + 1)
    # walk the base cycle from the marked vertex, never taking a self-loop
    walk = [base.marked]
    while True:
        nxt = [v for v in base.successors[walk[-1]] if v != walk[-1]]
        if len(nxt) != 1 or nxt[0] == base.marked or len(walk) > base.num_vertices:
            break
        walk.append(nxt[0])
    cover_ok = len(walk) == base.num_vertices
    if cover_ok:
        pos = {from_ternary(lab): i for i, lab in enumerate(h.labels)}
        vertex_map = {pos[m]: walk[i % len(walk)] for i, m in enumerate(cycle)}
        cover_ok = is_covering(h, base, vertex_map, degree=2)
    rep.record("double_cover_of_L", cover_ok)

    dim_p = hausdorff_dimension(p).dimension
    dim_l = hausdorff_dimension(base).dimension
    rep.data.update(dimension_P=dim_p, dimension_L=dim_l)
    rep.record("dimension_inequality", dim_p >= dim_l - 1e-9)
    rep.data["equal"] = abs(dim_p - dim_l) <= 5e-7
    return rep


# --- Q_k -----------------------------------------------------------------------


def qk_identity_check(k: int) -> CheckReport:
    rep = CheckReport(f"qk k={k}")
    q = build_family("Q", k)
    rep.data.update(vertices=q.num_vertices, edges=q.num_edges)
    rep.record("vertex_count", q.num_vertices == 4**k)
    rep.record("edge_count", q.num_edges == 6 * 4 ** (k - 1))
    rep.record("strongly_connected", len(scc_decomposition(q).components) == 1)
    dim = hausdorff_dimension(q).dimension
    rep.data["dimension"] = dim
    rep.record("dimension_log3_phi", abs(dim - LOG3_PHI) <= 1e-9)
    seven = build_translate_presentation([1, 7])
    rep.record("isomorphic_to_interleave", canonical_form(q) == canonical_form(interleave(seven, k)))
    return rep


# --- upper bound scan ------------------------------------------------------------


def _dim_of(m: int) -> float:
    return hausdorff_dimension(build_translate_presentation([1, m])).dimension


def alpha2_scan(bound: int, jobs: int = 1) -> CheckReport:
    """Check ``dim C(1, M) <= log_3 phi`` for all ``4 <= M <= bound``, ``M = 1 mod 3``."""
    if bound < 4:
        raise ValueError("bound must be >= 4")
    ms = list(range(4, bound + 1, 3))
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            dims = list(pool.map(_dim_of, ms, chunksize=64))
    else:
        dims = [_dim_of(m) for m in ms]
    violations = [m for m, d in zip(ms, dims) if d > LOG3_PHI + 1e-9]
    best = max(dims)
    rep = CheckReport(f"alpha2 bound={bound}")
    rep.data.update(
        count=len(ms),
        maximum=best,
        maximizers=[m for m, d in zip(ms, dims) if d >= best - 1e-9],
        violations=violations,
        log3_phi=LOG3_PHI,
    )
    rep.record("no_violations", not violations)
    rep.record("maximum_is_log3_phi", abs(best - LOG3_PHI) <= 1e-9)
    return rep


# --- intersections of P_k translates ------------------------------------------------


def pk_intersection_bounds(max_k: int = 6, max_n: int = 3) -> list[dict]:
    """Dimensions of C(1, P_k1, ..., P_kn) against both L-index comparisons.

    Positivity is the only property treated as required; the comparisons
    with L_{kn+1} and L_{kn+2} are reported, not asserted.
    """
    l_dims = {j: hausdorff_dimension(build_family("L", j)).dimension for j in range(2, max_k + 3)}
    rows = []
    for n in range(1, max_n + 1):
        for ks in itertools.combinations(range(1, max_k + 1), n):
            ms = [1, *(family_member("P", j) for j in ks)]
            dim = hausdorff_dimension(build_translate_presentation(ms)).dimension
            top = ks[-1]
            rows.append(
                {
                    "ks": ks,
                    "dimension": dim,
                    "positive": dim > 0,
                    "ge_L_top_plus_1": dim >= l_dims[top + 1] - 1e-9,
                    "ge_L_top_plus_2": dim >= l_dims[top + 2] - 1e-9,
                }
            )
    return rows
