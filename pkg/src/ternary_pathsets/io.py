"""DOT and JSON serialization of presentations."""

from __future__ import annotations

import json
import re

from .presentation import Presentation


def to_json(p: Presentation) -> dict:
    return {
        "vertices": [{"id": i, "label": lab} for i, lab in enumerate(p.labels)],
        "marked": p.marked,
        "edges": [{"from": u, "to": v, "digit": str(d)} for u, v, d in sorted(p.edges)],
    }


def from_json(data: dict | str) -> Presentation:
    if isinstance(data, str):
        data = json.loads(data)
    verts = sorted(data["vertices"], key=lambda x: x["id"])
    if [v["id"] for v in verts] != list(range(len(verts))):
        raise ValueError("vertex ids must be 0..n-1")
    edges = frozenset((e["from"], e["to"], int(e["digit"])) for e in data["edges"])
    return Presentation(tuple(v["label"] for v in verts), data["marked"], edges)


def _quote(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(p: Presentation, name: str = "presentation") -> str:
    """Graphviz digraph; the marked vertex is drawn as a double circle."""
    lines = [f"digraph {_quote(name)} {{", "  rankdir=LR;", "  node [shape=circle];"]
    for i, lab in enumerate(p.labels):
        shape = "doublecircle" if i == p.marked else "circle"
        lines.append(f"  n{i} [label={_quote(lab)}, shape={shape}];")
    for u, v, d in sorted(p.edges):
        lines.append(f'  n{u} -> n{v} [label="{d}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


_NODE = re.compile(r'^\s*n(\d+)\s*\[label="((?:[^"\\]|\\.)*)",\s*shape=(\w+)\];\s*$')
_EDGE = re.compile(r'^\s*n(\d+)\s*->\s*n(\d+)\s*\[label="([012])"\];\s*$')


def from_dot(text: str) -> Presentation:
    """Parse DOT written by :func:`to_dot`."""
    labels: dict[int, str] = {}
    marked = None
    edges = set()
    for line in text.splitlines():
        if m := _NODE.match(line):
            i = int(m.group(1))
            labels[i] = re.sub(r"\\(.)", r"\1", m.group(2))
            if m.group(3) == "doublecircle":
                marked = i
        elif m := _EDGE.match(line):
            edges.add((int(m.group(1)), int(m.group(2)), int(m.group(3))))
    n = len(labels)
    if sorted(labels) != list(range(n)):
        raise ValueError("DOT node ids must be n0..n{N-1}")
    return Presentation(tuple(labels[i] for i in range(n)), marked, frozenset(edges))
