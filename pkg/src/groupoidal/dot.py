"""Deterministic Graphviz DOT output for groupoids and action graphs."""


def _quote(text):
    return '"' + str(text).replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(graph, name=None):
    """Render anything with ``nodes``, ``edges`` ((src, dst, label) with
    node indices) and optionally ``node_shape`` as a DOT digraph."""
    name = name or getattr(graph, "name", None) or "G"
    shape = getattr(graph, "node_shape", "box")
    lines = [f"digraph {_quote(name)} {{"]
    nodes = list(graph.nodes)
    if nodes:
        lines.append(f"  node [shape={shape}];")
    for i, label in enumerate(nodes):
        lines.append(f"  n{i} [label={_quote(label)}];")
    for src, dst, label in graph.edges:
        lines.append(f"  n{src} -> n{dst} [label={_quote(label)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
