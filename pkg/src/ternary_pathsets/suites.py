"""Named invariant suites run by ``verify``."""

from __future__ import annotations

import networkx as nx
import numpy as np

from . import reference
from .families import (
    CheckReport,
    alpha2_scan,
    pk_cover_subgraph,
    pk_lower_bound_witness,
    pk_structure_check,
    qk_identity_check,
)
from .operations import decimate, interleave
from .presentation import (
    Presentation,
    canonical_form,
    determinize,
    is_right_resolving,
    is_strongly_connected,
    minimize,
    trim,
)
from .spectral import adjacency_matrix, count_initial_blocks, hausdorff_dimension, spectral_radius
from .translate import build_translate_presentation

SUITES = ("pk-structure", "pk-bounds", "qk", "alpha2", "interleave", "roundtrip", "figures")
FIXTURE_MULTIPLIERS = ((1, 4), (1, 7), (1, 19))


def figure_presentation(fig_id: str) -> Presentation:
    fig = reference.FIGURES[fig_id]
    return Presentation.from_edges(fig["edges"], "0")


def matrix_matches(p: Presentation, matrix) -> bool:
    """Is `matrix` the adjacency matrix of `p` under some vertex order with the marked vertex first?"""
    m = np.asarray(matrix)
    a = adjacency_matrix(p)
    if m.shape != a.shape:
        return False
    g1 = nx.from_numpy_array(a, create_using=nx.MultiDiGraph, parallel_edges=True)
    g2 = nx.from_numpy_array(m, create_using=nx.MultiDiGraph, parallel_edges=True)
    nx.set_node_attributes(g1, {v: v == p.marked for v in g1}, "marked")
    nx.set_node_attributes(g2, {v: v == 0 for v in g2}, "marked")
    return nx.is_isomorphic(g1, g2, node_match=lambda x, y: x["marked"] == y["marked"])


def figures_suite() -> CheckReport:
    rep = CheckReport("figures")
    expected_beta = {"19": 1.465571, "73": 1.618033, "7": 1.618033}
    matrices = {"19": reference.MATRIX_19, "73": reference.MATRIX_73}
    for fig_id, fig in reference.FIGURES.items():
        built = build_translate_presentation(fig["multipliers"])
        drawn = figure_presentation(fig_id)
        built_edges = {(built.labels[u], built.labels[v], d) for u, v, d in built.edges}
        rep.record(f"fig{fig_id}_edges_exact", built_edges == set(fig["edges"]))
        rep.record(f"fig{fig_id}_isomorphic", canonical_form(built) == canonical_form(drawn))
        beta = spectral_radius(adjacency_matrix(built))
        rep.data[f"fig{fig_id}_beta"] = beta
        rep.record(f"fig{fig_id}_beta", abs(beta - expected_beta[fig_id]) <= 5e-7)
        if fig_id in matrices:
            rep.record(f"fig{fig_id}_matrix", matrix_matches(built, matrices[fig_id]))
            rep.record(
                f"fig{fig_id}_matrix_beta",
                abs(spectral_radius(np.array(matrices[fig_id])) - expected_beta[fig_id]) <= 5e-7,
            )
    return rep


def interleave_suite(n_max: int = 3, k_max: int = 8) -> CheckReport:
    rep = CheckReport("interleave")
    for ms in FIXTURE_MULTIPLIERS:
        p = build_translate_presentation(ms)
        dim = hausdorff_dimension(p).dimension
        k, m = p.num_vertices, p.num_edges
        tag = f"X{ms}"
        for n in range(1, n_max + 1):
            raw = interleave(p, n, trim_output=False)
            q = interleave(p, n)
            rep.record(f"{tag}^{n}_counts", raw.num_vertices == k**n and raw.num_edges == m * k ** (n - 1))
            rep.record(f"{tag}^{n}_dimension", abs(hausdorff_dimension(q).dimension - dim) <= 1e-9)
            rep.record(f"{tag}^{n}_right_resolving", is_right_resolving(raw))
            rep.record(
                f"{tag}^{n}_strong_connectivity",
                is_strongly_connected(raw) == is_strongly_connected(p),
            )
            rep.record(
                f"{tag}^{n}_block_counts",
                all(count_initial_blocks(q, n * j) == count_initial_blocks(p, j) ** n for j in range(k_max + 1)),
            )
    return rep


def roundtrip_suite(n_max: int = 3) -> CheckReport:
    rep = CheckReport("roundtrip")
    for ms in FIXTURE_MULTIPLIERS:
        p = build_translate_presentation(ms)
        target = canonical_form(minimize(determinize(trim(p))))
        for n in range(1, n_max + 1):
            q = interleave(p, n)
            for j in range(n):
                rep.record(f"X{ms}_n{n}_j{j}", canonical_form(decimate(q, j, n)) == target)
    return rep


def run_suite(name: str, k_max: int | None = None, bound: int | None = None, jobs: int = 1) -> list[CheckReport]:
    if name == "pk-structure":
        return [pk_structure_check(k) for k in range(1, (k_max or 9) + 1)]
    if name == "pk-bounds":
        top = k_max or 12
        return [pk_lower_bound_witness(k) for k in range(1, top + 1)] + [
            pk_cover_subgraph(k) for k in range(1, min(top, 8) + 1)
        ]
    if name == "qk":
        return [qk_identity_check(k) for k in range(1, (k_max or 6) + 1)]
    if name == "alpha2":
        return [alpha2_scan(bound or 10_000, jobs=jobs)]
    if name == "interleave":
        return [interleave_suite(n_max=k_max or 3)]
    if name == "roundtrip":
        return [roundtrip_suite(n_max=k_max or 3)]
    if name == "figures":
        return [figures_suite()]
    raise KeyError(f"unknown suite {name!r}; expected one of {SUITES}")
