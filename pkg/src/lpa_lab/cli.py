"""Command-line front end: ``lpa-lab <command> ...``.

Exit codes: 0 success, 1 input error, 2 search budget exhausted (``orbit``).
Graph arguments are file paths, inline JSON, or ``sig:l1,t1;l2,t2``.
"""

from __future__ import annotations

import argparse
import csv
import hashlib
import io
import json
import os
import sys
from typing import Optional

from . import __version__
from .classify import SearchBudget, classify, compare, enumerate_table
from .errors import BadGraphFile, InputError, LpaError, UnknownCommand
from .graph import format_signature, parse_graph_text
from .invariants import invariant_bundle
from .linalg import IntMatrix, smith_normal_form
from .moves import OrbitConfig, ShiftSpec, orbit_search, shift

EXIT_OK, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        if "invalid choice" in message and "command" in message:
            raise UnknownCommand(message)
        raise InputError(message)


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="lpa-lab", description="Leavitt path algebra invariants for small graphs.")
    p.add_argument("--version", action="version", version=f"lpa-lab {__version__}")
    sub = p.add_subparsers(dest="command", metavar="command", parser_class=_Parser)

    def cmd(name, help_):
        s = sub.add_parser(name, help=help_)
        s.add_argument("--format", choices=("text", "json", "csv"), default="text")
        return s

    s = cmd("invariants", "all invariants of a graph")
    s.add_argument("graph")
    s = cmd("classify", "case label of a graph with at most two vertices")
    s.add_argument("graph")
    s = cmd("compare", "three-valued isomorphism decision")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--budget", type=int, default=SearchBudget.max_states, help="max orbit-search states")
    s.add_argument("--max-mult", type=int, default=SearchBudget.max_total_multiplicity)
    s.add_argument("--depth", type=int, default=SearchBudget.max_depth)
    s = cmd("enumerate", "reproduce a classification table")
    s.add_argument("--family", choices=("nonibn", "ibn", "onevertex"), required=True)
    s.add_argument("--max", type=int, required=True, dest="max_param")
    s = cmd("snf", "Smith normal form of an integer matrix")
    s.add_argument("matrix")
    s = cmd("shift", "apply one shift move")
    s.add_argument("graph")
    s.add_argument("--from", type=int, required=True, dest="source")
    s.add_argument("--to", type=int, required=True, dest="range")
    s = cmd("orbit", "search for a shift-move witness")
    s.add_argument("a")
    s.add_argument("b")
    s.add_argument("--max-mult", type=int, default=OrbitConfig.max_total_multiplicity)
    s.add_argument("--depth", type=int, default=OrbitConfig.max_depth)
    s.add_argument("--max-states", type=int, default=OrbitConfig.max_states)
    return p


def _read_arg(arg: str) -> str:
    s = arg.strip()
    if s.startswith("sig:") or s.startswith("{"):
        return s
    if not os.path.exists(arg):
        raise BadGraphFile(f"no such file: {arg}")
    try:
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    except (OSError, UnicodeDecodeError) as exc:
        raise BadGraphFile(f"cannot read {arg}: {exc}") from None


def _parse_matrix(text: str) -> IntMatrix:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BadGraphFile(f"malformed matrix JSON: {exc}") from None
    rows = obj.get("rows") if isinstance(obj, dict) else obj
    ok = (
        isinstance(rows, list) and rows
        and all(isinstance(r, list) and all(isinstance(x, int) and not isinstance(x, bool) for x in r) for r in rows)
    )
    if not ok:
        raise BadGraphFile("matrix JSON must look like {\"rows\": [[...], ...]}")
    return IntMatrix.of(rows)


def _positive(**kw):
    for k, v in kw.items():
        if v < 1:
            raise InputError(f"--{k.replace('_', '-')} must be positive, got {v}")


# -- text rendering -------------------------------------------------------------


def _fmt_set(s) -> str:
    return "{" + ", ".join(str(x) for x in sorted(s)) + "}"


def _bundle_text(g, b) -> list[str]:
    k0 = b.k0
    order = "inf" if k0.unit_order == float("inf") else k0.unit_order
    lines = [
        f"type: {'IBN' if b.type_result.ibn else 'not IBN, type ' + str(b.type_result)}",
        f"K0: {k0.group}",
        f"order unit: {k0.order_unit.to_json()} (order {order})",
        f"d_E: {k0.d_E}",
        f"delta_E: {k0.delta_E}",
        f"P_l: {_fmt_set(b.p_l)}  P_c: {_fmt_set(b.p_c)}  P_ec: {_fmt_set(b.p_ec)}",
        "flags: " + " ".join(f"{k}={int(v)}" for k, v in b.flags._asdict().items()),
    ]
    if b.ideal_pl is not None:
        lines += [f"{k}: {v}" for k, v in b.descriptors().items()]
    return lines


def _flatten(obj, prefix=""):
    if isinstance(obj, dict):
        for k in sorted(obj):
            yield from _flatten(obj[k], f"{prefix}{k}.")
    elif isinstance(obj, list) and any(isinstance(x, (dict, list)) for x in obj):
        for i, x in enumerate(obj):
            yield from _flatten(x, f"{prefix}{i}.")
    else:
        yield prefix[:-1], json.dumps(obj) if isinstance(obj, list) else obj


def _csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- commands -------------------------------------------------------------------


def _execute(ns, texts: list[str]):
    """Return ``(exit code, payload dict, text lines, csv table or None)``."""
    c = ns.command
    if c in ("invariants", "classify", "shift"):
        g = parse_graph_text(texts[0])
    if c == "invariants":
        b = invariant_bundle(g)
        return EXIT_OK, {"graph": g.to_json(), "invariants": b.to_json()}, _bundle_text(g, b), None
    if c == "classify":
        r = classify(g)
        lines = [f"graph: {format_signature(g)}", f"case: {r.label}"]
        if r.case.reduced_from:
            lines.append(f"reduced from: {r.case.reduced_from} "
                         f"(normal form {format_signature(r.case.normal_graph)})")
        if r.case.known_algebra:
            lines.append(f"algebra: {r.case.known_algebra}")
        lines += _bundle_text(g, r.bundle)
        lines.append("path: " + " -> ".join(r.decision_path))
        return EXIT_OK, r.to_json(), lines, None
    if c == "compare":
        _positive(budget=ns.budget, max_mult=ns.max_mult, depth=ns.depth)
        e, f = parse_graph_text(texts[0]), parse_graph_text(texts[1])
        cfg = SearchBudget(max_total_multiplicity=ns.max_mult, max_depth=ns.depth, max_states=ns.budget)
        d = compare(e, f, cfg)
        js = d.to_json()
        lines = [f"verdict: {js['verdict']}", f"reason: {js['reason']}"]
        if d.tag:
            lines.append(f"tag: {d.tag}")
        if d.witness is not None:
            lines.append("witness: " + json.dumps(js["witness"], sort_keys=True))
        return EXIT_OK, js, lines, None
    if c == "enumerate":
        rows = enumerate_table(ns.max_param, ns.family)
        payload = {"family": ns.family, "max": ns.max_param, "rows": [r.to_json() for r in rows]}
        lines = [
            f"{r.signature:>14}  {str(r.label):<5} {r.type_text:<7} K0={r.k0_text:<12} d={r.d_E} delta={r.delta_E}"
            f" bits={''.join(map(str, r.bits))}"
            for r in rows
        ]
        table = (rows[0].CSV_FIELDS if rows else (), [r.csv_row() for r in rows])
        return EXIT_OK, payload, lines, table
    if c == "snf":
        m = _parse_matrix(texts[0])
        s = smith_normal_form(m)
        lines = []
        for name, mat in (("P", s.P), ("D", s.D), ("Q", s.Q)):
            lines.append(f"{name}:")
            lines += ["  " + " ".join(f"{x:>4}" for x in r) for r in mat.entries]
        return EXIT_OK, {**s.to_json(), "diagonal": list(s.diagonal)}, lines, None
    if c == "shift":
        h = shift(g, ShiftSpec(ns.source, ns.range))
        lines = [f"shift ({ns.source} -> {ns.range})"] + [" ".join(map(str, r)) for r in h.adjacency]
        return EXIT_OK, {"graph": h.to_json()}, lines, None
    if c == "orbit":
        _positive(max_mult=ns.max_mult, depth=ns.depth, max_states=ns.max_states)
        e, f = parse_graph_text(texts[0]), parse_graph_text(texts[1])
        path = orbit_search(e, f, OrbitConfig(ns.max_mult, ns.depth, ns.max_states))
        if path is None:
            return EXIT_BUDGET, {"found": False}, ["NotFound (budget exhausted; not evidence of non-isomorphism)"], None
        lines = [f"found: {len(path)} step(s)"]
        lines += [f"  {d}: shift ({s.source} -> {s.range})" for d, s in path.steps]
        lines.append("meet: " + json.dumps([list(r) for r in path.meet.adjacency]))
        return EXIT_OK, {"found": True, "path": path.to_json()}, lines, None
    raise UnknownCommand(f"unknown command {c!r}")  # pragma: no cover


def run(argv: list[str], err=None) -> tuple[int, str]:
    """Run the CLI; returns ``(exit code, stdout text)``.  Diagnostics go to ``err``."""
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    if not argv:
        return EXIT_INPUT, parser.format_usage()
    try:
        ns = parser.parse_args(argv)
        if ns.command is None:
            return EXIT_INPUT, parser.format_usage()
        inputs = [getattr(ns, k) for k in ("graph", "a", "b", "matrix") if hasattr(ns, k)]
        texts = [_read_arg(x) for x in inputs]
        code, payload, lines, table = _execute(ns, texts)
    except SystemExit as exc:  # --help / --version
        return int(exc.code or 0), ""
    except LpaError as exc:
        print(f"lpa-lab: error: {exc}", file=err)
        return EXIT_INPUT, ""
    digest = hashlib.sha256("\n".join(texts if inputs else argv).encode()).hexdigest()
    report = {"command": list(argv), "input_sha256": digest, "result": payload}
    if ns.format == "json":
        return code, json.dumps(report, sort_keys=True, indent=2) + "\n"
    if ns.format == "csv":
        if table is not None:
            return code, _csv(table[1], table[0])
        return code, _csv(list(_flatten(payload)), ("key", "value"))
    return code, "\n".join(lines) + "\n"


def main(argv: Optional[list[str]] = None) -> None:
    code, out = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.write(out)
    sys.exit(code)
