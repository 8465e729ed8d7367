from __future__ import annotations

import xml.etree.ElementTree as ET

from redlex.netgraph import (
    Partition,
    SemanticGraph,
    betweenness_centrality,
    eigenvector_centrality,
    k_core_decomposition,
    write_dot,
    write_edge_list_csv,
    write_graphml,
    write_node_table_csv,
)


def sample_graph():
    return SemanticGraph.from_edge_labels(
        [("verdad", "justicia", 3), ("justicia", "paz", 1), ("verdad", "paz", 2)]
    )


def attrs(g):
    return (
        k_core_decomposition(g),
        eigenvector_centrality(g),
        betweenness_centrality(g),
        Partition(assignment={lab: 0 for lab in g.labels}),
    )


def test_edge_list_csv(tmp_path):
    g = sample_graph()
    path = tmp_path / "edges.csv"
    write_edge_list_csv(g, path)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "source,target,weight"
    assert lines[1:] == ["justicia,paz,1", "verdad,justicia,3", "verdad,paz,2"]


def test_node_table_csv(tmp_path):
    g = sample_graph()
    cores, eigen, betw, part = attrs(g)
    path = tmp_path / "nodes.csv"
    write_node_table_csv(g, path, cores, eigen, betw, part)
    lines = path.read_text(encoding="utf-8").splitlines()
    assert lines[0] == "label,degree,core,eigen,betweenness,community"
    assert len(lines) == 4
    assert lines[1].startswith("justicia,2,2,")


def test_dot_escaping_and_content(tmp_path):
    g = SemanticGraph.from_edge_labels([('a"b', "c", 1)])
    path = tmp_path / "g.dot"
    write_dot(g, path)
    text = path.read_text(encoding="utf-8")
    assert '"a\\"b" -- "c" [weight=1];' in text
    assert text.startswith("graph semantic {")


def test_graphml_well_formed(tmp_path):
    g = sample_graph()
    cores, eigen, betw, part = attrs(g)
    path = tmp_path / "g.graphml"
    write_graphml(g, path, cores, eigen, betw, part)
    root = ET.parse(path).getroot()
    ns = "{http://graphml.graphdrawing.org/xmlns}"
    nodes = root.findall(f"{ns}graph/{ns}node")
    edges = root.findall(f"{ns}graph/{ns}edge")
    assert len(nodes) == 3 and len(edges) == 3
    labels = {
        data.text
        for node in nodes
        for data in node.findall(f"{ns}data")
        if data.get("key") == "label"
    }
    assert labels == {"verdad", "justicia", "paz"}


def test_exports_deterministic(tmp_path):
    g = sample_graph()
    cores, eigen, betw, part = attrs(g)
    for writer, name in (
        (lambda p: write_edge_list_csv(g, p), "e.csv"),
        (lambda p: write_node_table_csv(g, p, cores, eigen, betw, part), "n.csv"),
        (lambda p: write_dot(g, p, cores, eigen, betw, part), "g.dot"),
        (lambda p: write_graphml(g, p, cores, eigen, betw, part), "g.graphml"),
    ):
        p1 = tmp_path / f"one_{name}"
        p2 = tmp_path / f"two_{name}"
        writer(p1)
        writer(p2)
        assert p1.read_bytes() == p2.read_bytes()
