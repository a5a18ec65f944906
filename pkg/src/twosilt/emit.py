"""Serialization of exploration graphs (JSON, CSV, DOT) and algebra
presentations (DSL), plus atomic file output.

All integer data is emitted as exact decimal text; nodes are ordered by
their canonical g-matrix key, so output is byte-identical across runs.
In DOT diagrams, tau-tilting nodes are drawn as circles and
support-only nodes as boxes, with edges directed along left mutation.
"""

import csv
import io
import json
import os
import tempfile


def atomic_write(path, text):
    """Write text to path atomically (temp file + rename)."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _ordered_nodes(graph):
    return sorted(graph.nodes)


def _total(key):
    return [sum(col) for col in zip(*key)]


def graph_to_json(graph, report=None):
    keys = _ordered_nodes(graph)
    index = {key: k for k, key in enumerate(keys)}
    doc = {
        "node_count": len(keys),
        "tau_count": graph.tau_count(),
        "support_only_count": graph.support_only_count(),
        "nodes": [
            {
                "id": k,
                "g_matrix": [list(row) for row in key],
                "total_g_vector": _total(key),
                "tau_tilting": graph.nodes[key]["tau"],
            }
            for k, key in enumerate(keys)
        ],
        "edges": sorted(
            [
                {"source": index[src], "target": index[tgt],
                 "mutated_index": i}
                for src, tgt, i in graph.edges
                if src in index and tgt in index
            ],
            key=lambda e: (e["source"], e["target"], e["mutated_index"]),
        ),
    }
    if report is not None:
        # wall-clock time is dropped so output is identical across runs
        info = report.as_dict()
        info.pop("seconds", None)
        doc["exploration"] = info
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def json_to_gmatrices(text):
    """Canonical g-matrix keys recovered from graph_to_json output."""
    doc = json.loads(text)
    return {
        tuple(sorted((tuple(int(c) for c in row) for row in node["g_matrix"]),
                     reverse=True))
        for node in doc["nodes"]
    }


def graph_to_csv(graph):
    """One CSV row per indecomposable-summand g-vector; node id and the
    tau-tilting flag repeat on each row of a node's g-matrix."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    n = graph.A.n
    writer.writerow(["node", "tau_tilting"]
                    + ["g%d" % j for j in range(n)])
    for k, key in enumerate(_ordered_nodes(graph)):
        tau = 1 if graph.nodes[key]["tau"] else 0
        for row in key:
            writer.writerow([k, tau] + [str(c) for c in row])
    return out.getvalue()


def csv_to_gmatrices(text):
    """Canonical g-matrix keys recovered from graph_to_csv output."""
    rows = list(csv.reader(io.StringIO(text)))
    grouped = {}
    for row in rows[1:]:
        if not row:
            continue
        grouped.setdefault(int(row[0]), []).append(
            tuple(int(c) for c in row[2:]))
    return {tuple(sorted(g, reverse=True)) for g in grouped.values()}


def graph_to_dot(graph, name="twosilt"):
    keys = _ordered_nodes(graph)
    index = {key: k for k, key in enumerate(keys)}
    lines = ["digraph %s {" % name, "  rankdir=TB;"]
    for k, key in enumerate(keys):
        shape = "circle" if graph.nodes[key]["tau"] else "box"
        label = "(" + ",".join(str(c) for c in _total(key)) + ")"
        lines.append('  n%d [shape=%s, label="%s"];' % (k, shape, label))
    edges = sorted(
        (index[src], index[tgt], i)
        for src, tgt, i in graph.edges
        if src in index and tgt in index)
    for s, t, i in edges:
        lines.append('  n%d -> n%d [label="%d"];' % (s, t, i))
    lines.append("}")
    return "\n".join(lines) + "\n"


def presentation_to_dsl(presentation):
    return presentation.to_dsl() + "\n"
