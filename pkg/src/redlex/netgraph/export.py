"""Deterministic graph exports: edge list CSV, node table CSV, DOT, GraphML.

All writers emit byte-identical output for identical inputs: rows are sorted,
floats are fixed at six significant digits, and newlines are always ``\\n``.
"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Optional
from xml.sax.saxutils import escape

from .community import Partition
from .graph import SemanticGraph

NODE_COLUMNS = ("label", "degree", "core", "eigen", "betweenness", "community")


def _fmt(x: float) -> str:
    return format(float(x), ".6g")


def node_table(
    g: SemanticGraph,
    cores: dict[str, int],
    eigen: dict[str, float],
    betweenness: dict[str, float],
    partition: Optional[Partition] = None,
) -> list[tuple]:
    """Per-vertex attribute rows, sorted by label."""
    assignment = partition.assignment if partition is not None else {}
    rows = []
    for label in sorted(g.labels):
        v = g.index_of(label)
        rows.append(
            (
                label,
                g.degree(v),
                cores.get(label, 0),
                eigen.get(label, 0.0),
                betweenness.get(label, 0.0),
                assignment.get(label, 0),
            )
        )
    return rows


def write_edge_list_csv(g: SemanticGraph, path) -> None:
    """CSV export ``source,target,weight`` sorted by labels."""
    rows = sorted(g.edge_labels(), key=lambda e: (e[0], e[1]))
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["source", "target", "weight"])
        for a, b, w in rows:
            writer.writerow([a, b, int(w) if float(w).is_integer() else _fmt(w)])


def write_node_table_csv(
    g: SemanticGraph,
    path,
    cores: dict[str, int],
    eigen: dict[str, float],
    betweenness: dict[str, float],
    partition: Optional[Partition] = None,
) -> None:
    with Path(path).open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(NODE_COLUMNS)
        for label, degree, core, eig, btw, comm in node_table(
            g, cores, eigen, betweenness, partition
        ):
            writer.writerow([label, degree, core, _fmt(eig), _fmt(btw), comm])


def _dot_quote(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def write_dot(
    g: SemanticGraph,
    path,
    cores: Optional[dict[str, int]] = None,
    eigen: Optional[dict[str, float]] = None,
    betweenness: Optional[dict[str, float]] = None,
    partition: Optional[Partition] = None,
) -> None:
    """Graphviz DOT with the node attributes carried as plain attrs."""
    assignment = partition.assignment if partition is not None else {}
    lines = ["graph semantic {"]
    for label in sorted(g.labels):
        attrs = [f"degree={g.degree(g.index_of(label))}"]
        if cores is not None:
            attrs.append(f"core={cores.get(label, 0)}")
        if eigen is not None:
            attrs.append(f"eigen={_fmt(eigen.get(label, 0.0))}")
        if betweenness is not None:
            attrs.append(f"betweenness={_fmt(betweenness.get(label, 0.0))}")
        if assignment:
            attrs.append(f"community={assignment.get(label, 0)}")
        lines.append(f"  {_dot_quote(label)} [{', '.join(attrs)}];")
    for a, b, w in sorted(g.edge_labels(), key=lambda e: (e[0], e[1])):
        weight = int(w) if float(w).is_integer() else _fmt(w)
        lines.append(f"  {_dot_quote(a)} -- {_dot_quote(b)} [weight={weight}];")
    lines.append("}")
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def write_graphml(
    g: SemanticGraph,
    path,
    cores: Optional[dict[str, int]] = None,
    eigen: Optional[dict[str, float]] = None,
    betweenness: Optional[dict[str, float]] = None,
    partition: Optional[Partition] = None,
) -> None:
    """GraphML with weight on edges and the node attribute columns."""
    assignment = partition.assignment if partition is not None else {}
    out = ['<?xml version="1.0" encoding="UTF-8"?>']
    out.append('<graphml xmlns="http://graphml.graphdrawing.org/xmlns">')
    keys = [("label", "string"), ("degree", "int")]
    if cores is not None:
        keys.append(("core", "int"))
    if eigen is not None:
        keys.append(("eigen", "double"))
    if betweenness is not None:
        keys.append(("betweenness", "double"))
    if assignment:
        keys.append(("community", "int"))
    for name, kind in keys:
        out.append(f'  <key id="{name}" for="node" attr.name="{name}" attr.type="{kind}"/>')
    out.append('  <key id="weight" for="edge" attr.name="weight" attr.type="double"/>')
    out.append('  <graph edgedefault="undirected">')
    ordered = sorted(g.labels)
    ids = {label: i for i, label in enumerate(ordered)}
    for label in ordered:
        out.append(f'    <node id="n{ids[label]}">')
        out.append(f'      <data key="label">{escape(label)}</data>')
        out.append(f'      <data key="degree">{g.degree(g.index_of(label))}</data>')
        if cores is not None:
            out.append(f'      <data key="core">{cores.get(label, 0)}</data>')
        if eigen is not None:
            out.append(f'      <data key="eigen">{_fmt(eigen.get(label, 0.0))}</data>')
        if betweenness is not None:
            out.append(
                f'      <data key="betweenness">{_fmt(betweenness.get(label, 0.0))}</data>'
            )
        if assignment:
            out.append(f'      <data key="community">{assignment.get(label, 0)}</data>')
        out.append("    </node>")
    for a, b, w in sorted(g.edge_labels(), key=lambda e: (e[0], e[1])):
        out.append(f'    <edge source="n{ids[a]}" target="n{ids[b]}">')
        out.append(f'      <data key="weight">{_fmt(w)}</data>')
        out.append("    </edge>")
    out.append("  </graph>")
    out.append("</graphml>")
    Path(path).write_text("\n".join(out) + "\n", encoding="utf-8", newline="\n")
