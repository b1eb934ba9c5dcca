"""Text serializations: DOT graphs, CSV tables, Markdown tables."""
from __future__ import annotations

import csv
import io

__all__ = ["to_dot", "tree_to_dot", "csv_text", "markdown_table", "adjacency_rows"]


def _quote(name):
    return '"' + str(name).replace('"', r"\"") + '"'


def to_dot(g, name="G", labels=None, weights=False):
    """Undirected DOT text; ``labels(v)`` names vertex ``v`` (defaults to the index).

    With ``weights`` every vertex carries ``w_v``/``s_v`` attributes and every
    edge ``s_e``.
    """
    label = labels or str
    lines = [f"graph {_quote(name)} {{"]
    for v in range(g.vertex_count):
        attrs = f' [w_v={g.w_v[v]}, s_v={g.s_v[v]}]' if weights else ""
        lines.append(f"  {_quote(label(v))}{attrs};")
    for (a, b), s in zip(g.edges, g.s_e):
        attrs = f" [s_e={s}]" if weights else ""
        lines.append(f"  {_quote(label(a))} -- {_quote(label(b))}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def tree_to_dot(trace, labels=None, name="broadcast"):
    """Directed DOT of a broadcast tree; edges carry the round they fired in."""
    label = labels or str
    lines = [f"digraph {_quote(name)} {{", f"  {_quote(label(trace.source))} [shape=doublecircle];"]
    for r, sends in enumerate(trace.rounds, 1):
        for sender, receiver in sends:
            lines.append(f"  {_quote(label(sender))} -> {_quote(label(receiver))} [label={r}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def csv_text(header, rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def markdown_table(header, rows):
    out = ["| " + " | ".join(map(str, header)) + " |", "|" + "---|" * len(header)]
    out += ["| " + " | ".join(map(str, row)) + " |" for row in rows]
    return "\n".join(out) + "\n"


def adjacency_rows(g):
    return [list(e) for e in g.edges]
