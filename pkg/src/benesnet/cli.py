"""Command-line front end: ``benesnet <command> [flags]``.

Exit status is 0 on success, 1 when a comparison or verification finds a
disagreement and 2 on a usage error.  Output goes to ``--out`` or stdout and
never depends on the clock, so repeated runs are byte-identical.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import broadcast, closedforms, descriptors, generators, netparams, thetacuts, verify
from .export import csv_text, markdown_table, to_dot, tree_to_dot
from .swgraph import all_pairs_distances

COMMANDS = ("generate", "descriptors", "params", "tables", "cuts", "broadcast", "verify")
NETWORKS = ("bf", "bb", "bba", "cluster")
METHODS = ("brute", "cuts", "closed", "all")
FORMATS = ("csv", "json", "md", "dot")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def parse_range(text):
    """``"A..B"`` (inclusive) or a single integer."""
    try:
        if ".." in text:
            a, b = text.split("..")
            return list(range(int(a), int(b) + 1))
        return [int(text)]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad range {text!r}; expected A..B") from None


def build_parser():
    p = argparse.ArgumentParser(prog="benesnet", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--network", choices=NETWORKS)
    p.add_argument("--n", type=int)
    p.add_argument("--n-range", type=parse_range, metavar="A..B")
    p.add_argument("--method", choices=METHODS)
    p.add_argument("--format", choices=FORMATS, default=None)
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--source", help='broadcast source "j,k" or "bits:k"')
    p.add_argument("--sources", choices=("boundary-levels", "all"), default="boundary-levels")
    p.add_argument("--class-index", type=int, help="1-based cut class (1 = middle class on BB/BB*)")
    p.add_argument("--precision", type=int)
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--a", type=int, default=None)
    p.add_argument("--b", type=int, default=None)
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--beta", type=int, default=1)
    return p


# -- helpers ---------------------------------------------------------------


def _fmt(cfg, default, allowed):
    fmt = cfg.format or default
    if fmt not in allowed:
        raise UsageError(f"{cfg.command} does not support --format {fmt}; choose from {', '.join(allowed)}")
    return fmt


def _value(x):
    return netparams.render_value(x)


def _decimal(x, precision):
    return netparams.render_value(x, precision)


def _jsonable(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else str(x)
    return x


def _need_n(cfg, low=1):
    if cfg.n is None:
        raise UsageError(f"{cfg.command} needs --n")
    if cfg.n < low:
        raise UsageError(f"--n must be at least {low} for this command, got {cfg.n}")
    return cfg.n


def _n_values(cfg, default):
    if cfg.n_range is not None and cfg.n is not None:
        raise UsageError("give either --n or --n-range, not both")
    if cfg.n_range is not None:
        values = cfg.n_range
    elif cfg.n is not None:
        values = [cfg.n]
    else:
        values = list(default)
    if not values:
        raise UsageError("empty sweep")
    return values


def _cluster_params(cfg):
    if cfg.m is None or cfg.a is None or cfg.b is None:
        raise UsageError("cluster network needs --m, --a and --b")
    try:
        return generators.ClusterFamilyParams(cfg.m, cfg.a, cfg.b, cfg.alpha, cfg.beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cluster_name(p):
    return f"cluster[m={p.m};a={p.a};b={p.b};alpha={p.alpha};beta={p.beta}]"


def _target(cfg):
    """``(display name, n or "", graph, network or None)`` for the selected network."""
    if cfg.network is None:
        raise UsageError(f"{cfg.command} needs --network")
    if cfg.network == "cluster":
        p = _cluster_params(cfg)
        return _cluster_name(p), "", generators.make_cluster_family(p).graph, None
    n = _need_n(cfg)
    if n > 12:
        raise UsageError("--n above 12 is out of reach for dense distance tables")
    net = generators.make_network(cfg.network, n)
    return cfg.network, n, net.graph, net


# -- commands --------------------------------------------------------------


def cmd_generate(cfg):
    fmt = _fmt(cfg, "csv", ("csv", "dot", "json"))
    name, n, g, net = _target(cfg)
    label = net.labels.render if net else str
    if fmt == "csv":
        return csv_text(["u", "v"], [list(e) for e in g.edges]), EXIT_OK
    if fmt == "dot":
        gname = f"{name}({n})" if net else name
        return to_dot(g, gname, labels=label, weights=not g.is_plain), EXIT_OK
    doc = {
        "network": name,
        "n": n if net else None,
        "vertices": g.vertex_count,
        "labels": [label(v) for v in range(g.vertex_count)],
        "edges": [list(e) for e in g.edges],
        "w_v": list(g.w_v),
    }
    return json.dumps(doc, indent=2) + "\n", EXIT_OK


def _method_values(cfg, g, name, n, method):
    if method == "brute":
        return descriptors.all_descriptors(g).as_dict()
    if method == "cuts":
        return thetacuts.cut_method_descriptors(g).as_dict()
    # closed
    if cfg.network == "cluster":
        return {"W": closedforms.cluster_wiener(_cluster_params(cfg))}
    return closedforms.closed_forms(cfg.network, n).as_dict()


def cmd_descriptors(cfg):
    fmt = _fmt(cfg, "csv", ("csv", "json", "md"))
    method = cfg.method or "brute"
    if method in ("closed", "all") and cfg.network in ("bf",):
        raise UsageError("closed forms exist for bb, bba (n >= 2) and cluster only")
    if method in ("closed", "all") and cfg.network in ("bb", "bba"):
        _need_n(cfg, 2)
    name, n, g, _ = _target(cfg)
    methods = ("brute", "cuts", "closed") if method == "all" else (method,)
    results = {m: _method_values(cfg, g, name, n, m) for m in methods}
    rows = []
    status = EXIT_OK
    for d in descriptors.DESCRIPTOR_NAMES:
        got = [(m, results[m][d]) for m in methods if d in results[m]]
        for m, v in got:
            rows.append([name, n, d, m, v])
        if method == "all":
            agree = len({v for _, v in got}) == 1
            if not agree:
                status = EXIT_FAIL
            rows.append([name, n, d, "agree", "true" if agree else "false"])

    header = ["network", "n", "descriptor", "method", "value"]
    if fmt == "json":
        doc = [dict(zip(header, [r[0], r[1] if r[1] != "" else None, r[2], r[3], _jsonable(r[4])])) for r in rows]
        return json.dumps(doc, indent=2) + "\n", status
    out_rows = []
    for r in rows:
        text = r[4] if r[3] == "agree" else _value(r[4])
        row = [r[0], r[1], r[2], r[3], text]
        if cfg.precision is not None:
            row.append("" if r[3] == "agree" else _decimal(r[4], cfg.precision))
        out_rows.append(row)
    if cfg.precision is not None:
        header = header + ["value_decimal"]
    if fmt == "md":
        return markdown_table(header, out_rows), status
    return csv_text(header, out_rows), status


def cmd_params(cfg):
    fmt = _fmt(cfg, "csv", ("csv", "json", "md"))
    if cfg.network not in (None, "bb", "bba"):
        raise UsageError("params compares bb and bba; pick one of them or leave --network out")
    networks = (cfg.network,) if cfg.network else ("bb", "bba")
    n_values = _n_values(cfg, range(2, 7))
    try:
        rows, ratios = netparams.comparison_sweep(n_values, networks)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    precision = 6 if cfg.precision is None else cfg.precision
    status = EXIT_OK
    table = []
    for name, n, p, measured, formula in rows:
        if measured != formula:
            status = EXIT_FAIL
        table.append([name, n, p, "measured", measured])
        table.append([name, n, p, "formula", formula])
    for name, n, p, r, _ in ratios:
        table.append([name, n, p, "ratio", r])
    header = ["network", "n", "parameter", "source", "value_exact", "value_decimal"]
    out = [[a, b, c, d, _value(v), _decimal(v, precision)] for a, b, c, d, v in table]
    if fmt == "json":
        doc = [dict(zip(header, [a, b, c, d, _jsonable(v), float(v)])) for a, b, c, d, v in table]
        return json.dumps(doc, indent=2) + "\n", status
    if fmt == "md":
        return markdown_table(header, out), status
    return csv_text(header, out), status


def _table_values(method, name, n):
    if method == "closed":
        return closedforms.closed_forms(name, n).as_dict()
    g = generators.make_network(name, n).graph
    if method == "cuts":
        return thetacuts.cut_method_descriptors(g).as_dict()
    return descriptors.all_descriptors(g).as_dict()


def cmd_tables(cfg):
    fmt = _fmt(cfg, "md", ("md", "csv", "json"))
    n_values = _n_values(cfg, range(2, 7))
    if any(n < 2 for n in n_values):
        raise UsageError("tables need n >= 2")
    method = cfg.method or "closed"
    methods = ("closed", "brute", "cuts") if method == "all" else (method,)
    values = {}
    status = EXIT_OK
    for name in ("bb", "bba"):
        for n in n_values:
            got = [_table_values(m, name, n) for m in methods]
            if any(x != got[0] for x in got[1:]):
                status = EXIT_FAIL
            values[name, n] = got[0]

    names = descriptors.DESCRIPTOR_NAMES
    if fmt == "csv":
        rows = [[d, n, _value(values["bb", n][d]), _value(values["bba", n][d])] for d in names for n in n_values]
        return csv_text(["descriptor", "n", "bb", "bba"], rows), status
    if fmt == "json":
        doc = {
            name: {str(n): {d: _jsonable(values[name, n][d]) for d in names} for n in n_values}
            for name in ("bb", "bba")
        }
        return json.dumps(doc, indent=2) + "\n", status

    parts = []
    for name, title in (("bb", "BB(n)"), ("bba", "BB*(n)")):
        for group in (names[:4], names[4:]):
            parts.append(f"### {title}: {', '.join(group)}\n")
            rows = [[n] + [_value(values[name, n][d]) for d in group] for n in n_values]
            parts.append(markdown_table(["n", *group], rows))
    parts.append("### BB(n) vs BB*(n)\n")
    rows = [[d, n, _value(values["bb", n][d]), _value(values["bba", n][d])] for d in names for n in n_values]
    parts.append(markdown_table(["descriptor", "n", "bb", "bba"], rows))
    return "\n".join(parts), status


def _partition_order(net, partition):
    if net is not None and net.name in ("bb", "bba"):
        return thetacuts.middle_out_order(net, partition)
    return list(range(len(partition)))


def cmd_cuts(cfg):
    fmt = _fmt(cfg, "csv", ("csv", "dot", "json", "md"))
    name, n, g, net = _target(cfg)
    oracle = all_pairs_distances(g)
    partition = thetacuts.theta_star_classes(g, oracle)
    order = _partition_order(net, partition)
    if cfg.class_index is not None:
        if not 1 <= cfg.class_index <= len(order):
            raise UsageError(f"--class-index must lie in [1, {len(order)}]")
        chosen = [cfg.class_index]
    else:
        chosen = list(range(1, len(order) + 1))
    quots = {i: thetacuts.quotient(g, partition, order[i - 1]) for i in chosen}

    if fmt == "dot":
        gname = f"{name}({n})" if net else name
        return "".join(
            to_dot(quots[i].graph, f"{gname}/class{i}", weights=True) for i in chosen
        ), EXIT_OK
    if fmt == "json":
        doc = {
            "network": name,
            "n": n if net else None,
            "classes": len(partition),
            "theta_transitive": thetacuts.theta_is_transitive(g, oracle, partition),
            "quotients": [
                {
                    "class": i,
                    "cut_edges": len(partition.classes[order[i - 1]]),
                    "edges": [list(e) for e in quots[i].graph.edges],
                    "s_e": list(quots[i].graph.s_e),
                    "weights": [list(r) for r in quots[i].weight_table()],
                }
                for i in chosen
            ],
        }
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    if fmt == "md":
        rows = []
        for i in chosen:
            q = quots[i].graph
            rows.append([i, len(partition.classes[order[i - 1]]), q.vertex_count, q.edge_count])
        transitive = thetacuts.theta_is_transitive(g, oracle, partition)
        head = f"{len(partition)} cut classes; Theta is {'' if transitive else 'not '}transitive\n\n"
        return head + markdown_table(["class", "cut_edges", "quotient_vertices", "quotient_edges"], rows), EXIT_OK
    header = ["component_id", "w_v", "s_v", "member_count"]
    if cfg.class_index is None:
        rows = [[i, *r] for i in chosen for r in quots[i].weight_table()]
        return csv_text(["class", *header], rows), EXIT_OK
    return csv_text(header, quots[chosen[0]].weight_table()), EXIT_OK


def cmd_broadcast(cfg):
    if cfg.network not in (None, "bba"):
        raise UsageError("broadcasting is only defined on bba")
    if cfg.source is None:
        return _broadcast_sweep(cfg)
    fmt = _fmt(cfg, "csv", ("csv", "dot", "json", "md"))
    n = _need_n(cfg)
    net = generators.make_augmented_benes(n)
    try:
        s = broadcast.source_index(net, cfg.source)
    except ValueError as exc:
        raise UsageError(f"bad --source: {exc}") from None
    oracle = all_pairs_distances(net.graph)
    trace = broadcast.broadcast_from(net, s, oracle)
    render = net.labels.render
    if fmt == "dot":
        return tree_to_dot(trace, render, f"bba({n}) from {render(s)}"), EXIT_OK
    rows = [[r, render(a), render(b)] for r, sends in enumerate(trace.rounds, 1) for a, b in sends]
    if fmt == "csv":
        return csv_text(["round", "sender", "receiver"], rows), EXIT_OK
    ecc = oracle.eccentricity(s)
    report = broadcast.check_tree_conditions(net, trace)
    summary = {
        "network": "bba",
        "n": n,
        "source": render(s),
        "e_S": ecc,
        "rounds": trace.total_rounds,
        "bound": broadcast.round_bound(n, ecc),
        "lower_bound": broadcast.lower_bound(net.graph.vertex_count, ecc),
        "source_children": report.source_children,
        "last_informed": render(report.last_vertex),
        "last_parent_children": report.last_parent_children,
        "tree_conditions_hold": report.all_hold,
    }
    if fmt == "json":
        summary["sends"] = [{"round": r, "sender": a, "receiver": b} for r, a, b in rows]
        return json.dumps(summary, indent=2) + "\n", EXIT_OK
    return markdown_table(["key", "value"], [[k, v] for k, v in summary.items()]), EXIT_OK


def _broadcast_sweep(cfg):
    fmt = _fmt(cfg, "csv", ("csv", "json", "md"))
    n_values = _n_values(cfg, range(2, 5))
    try:
        rows = broadcast.broadcast_sweep(n_values, cfg.sources)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    header = ["n", "source_j", "source_k", "e_S", "rounds", "bound", "meets_bound"]
    out = [[n, f"{j:0{n}b}", k, e, r, b, "true" if ok else "false"] for n, j, k, e, r, b, ok in rows]
    if fmt == "json":
        doc = [dict(zip(header, [n, f"{j:0{n}b}", k, e, r, b, ok])) for n, j, k, e, r, b, ok in rows]
        return json.dumps(doc, indent=2) + "\n", EXIT_OK
    if fmt == "md":
        return markdown_table(header, out), EXIT_OK
    return csv_text(header, out), EXIT_OK


def cmd_verify(cfg):
    fmt = _fmt(cfg, "md", ("md", "csv", "json"))
    method = cfg.method or "all"
    if method not in ("all", "closed"):
        raise UsageError("verify supports --method all or closed")
    n_values = _n_values(cfg, range(2, 6))
    if any(n < 2 for n in n_values):
        raise UsageError("verify needs n >= 2")
    results = verify.run_checks(n_values, method)
    status = EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
    if fmt == "csv":
        rows = [[r.name, "pass" if r.passed else "fail", r.detail] for r in results]
        return csv_text(["check", "status", "detail"], rows), status
    if fmt == "json":
        doc = [{"check": r.name, "passed": r.passed, "detail": r.detail} for r in results]
        return json.dumps(doc, indent=2) + "\n", status
    failed = sum(not r.passed for r in results)
    lines = [r.line() for r in results]
    lines.append(f"{len(results) - failed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n", status


HANDLERS = {
    "generate": cmd_generate,
    "descriptors": cmd_descriptors,
    "params": cmd_params,
    "tables": cmd_tables,
    "cuts": cmd_cuts,
    "broadcast": cmd_broadcast,
    "verify": cmd_verify,
}


def _check_writable(path):
    folder = os.path.dirname(os.path.abspath(path))
    if os.path.isdir(path) or not os.path.isdir(folder) or not os.access(folder, os.W_OK):
        raise UsageError(f"cannot write {path}")


def main(argv=None):
    parser = build_parser()
    cfg = parser.parse_args(argv)
    try:
        if cfg.out:
            _check_writable(cfg.out)
        if cfg.precision is not None and cfg.precision < 0:
            raise UsageError("--precision must be non-negative")
        text, status = HANDLERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"benesnet {cfg.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # bad dimensions and labels surface from the library as ValueError
        print(f"benesnet {cfg.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        with open(cfg.out, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
