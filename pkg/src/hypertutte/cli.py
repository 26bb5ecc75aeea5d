"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 budget exceeded. Documents go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence

from .activity import TransferTable, verify_order_independence
from .corpus import corpus_document, generate_corpus
from .errors import BudgetExceeded, HypergraphError, ParseError
from .hypergraph import (
    Hypergraph,
    build_bipartite,
    diagnostics,
    graph_from_document,
    graph_to_hypergraph,
    hypergraph_from_document,
    is_connected,
)
from .hypertrees import DEFAULT_STATE_BUDGET, as_mapping, enumerate_hypertrees
from .lemmas import verify_lemmas
from .proof import verify_transposition_proof
from .report import Report
from .tutte import crosscheck_specialization

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, separators=(",", ":"))


def _read(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
    except OSError as exc:
        raise HypergraphError(f"cannot read {path}: {exc.strerror}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed document: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("malformed document: top level must be an object")
    return doc


def _instances(doc: dict) -> list[Hypergraph]:
    """A single hypergraph document or a corpus ``{"hypergraphs": [...]}``."""
    if "hypergraphs" in doc:
        if not isinstance(doc["hypergraphs"], list):
            raise ParseError('malformed document: "hypergraphs" must be a list')
        return [hypergraph_from_document(d) for d in doc["hypergraphs"]]
    return [hypergraph_from_document(doc)]


def _bipartite(H: Hypergraph):
    for note in diagnostics(H):
        print(f"note: {note}", file=sys.stderr)
    B = build_bipartite(H)
    if not is_connected(B):
        raise HypergraphError("hypergraph is not connected")
    return B


def _table(B, budget: int) -> TransferTable:
    return TransferTable.of(B, budget)


# -- per-instance workers (module level so they pickle) ----------------------

def _work_order_independence(H, a):
    B = _bipartite(H)
    return verify_order_independence(B, a["mode"], a["samples"], a["seed"], table=_table(B, a["budget"]))


def _work_lemmas(H, a):
    B = _bipartite(H)
    return verify_lemmas(B, a["mode"], a["samples"], a["seed"], table=_table(B, a["budget"]))


def _work_transposition(H, a):
    B = _bipartite(H)
    return verify_transposition_proof(B, a["order"], a["h"], table=_table(B, a["budget"]))


def _run_verify(instances, worker: Callable, params: dict, jobs: int, command: str) -> Report:
    if len(instances) == 1:
        return worker(instances[0], params)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            reports = list(pool.map(worker, instances, [params] * len(instances)))
    else:
        reports = [worker(H, params) for H in instances]
    total = Report(command, seed=reports[0].seed if reports else None)
    inst = total.check("instances")
    for r in reports:
        total.merge(r)
        inst.record(r.ok)
    return total


# -- verbs -------------------------------------------------------------------

def _emit_report(report: Report, fmt: str) -> int:
    print(report.render_text() if fmt == "text" else _dump(report.to_document()))
    if not report.ok:
        print(f"verification failed: {report.counterexample['check']}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def cmd_hypertrees(args) -> int:
    out = []
    for H in _instances(_read(args.input)):
        B = _bipartite(H)
        hts = enumerate_hypertrees(B, args.budget_trees)
        out.append([as_mapping(B, f) for f in hts])
    if args.format == "text":
        for k, hts in enumerate(out):
            if len(out) > 1:
                print(f"# instance {k + 1}: {len(hts)} hypertrees")
            for f in hts:
                print(" ".join(f"{e}={x}" for e, x in f.items()))
    else:
        docs = [{"count": len(h), "hypertrees": h} for h in out]
        print(_dump(docs[0] if len(docs) == 1 else {"instances": docs}))
    return EXIT_OK


def _cmd_polynomial(args, which: int, var: str) -> int:
    polys = []
    for H in _instances(_read(args.input)):
        B = _bipartite(H)
        polys.append(_table(B, args.budget_trees).polynomials(args.order)[which])
    if args.format == "text":
        for p in polys:
            print(p.format(var))
    else:
        docs = [p.to_document() for p in polys]
        print(_dump(docs[0] if len(docs) == 1 else {"instances": docs}))
    return EXIT_OK


def cmd_interior(args) -> int:
    return _cmd_polynomial(args, 0, "x")


def cmd_exterior(args) -> int:
    return _cmd_polynomial(args, 1, "y")


def _params(args) -> dict:
    return {"mode": args.mode, "samples": args.samples, "seed": args.seed, "budget": args.budget_trees,
            "order": getattr(args, "order", None), "h": getattr(args, "h", None)}


def cmd_verify(args) -> int:
    instances = _instances(_read(args.input))
    worker, command = {
        "order-independence": (_work_order_independence, "verify order-independence"),
        "lemmas": (_work_lemmas, "verify lemmas"),
        "transposition": (_work_transposition, "verify transposition"),
    }[args.target]
    if args.target == "transposition" and args.h is None:
        raise HypergraphError("verify transposition needs --h")
    report = _run_verify(instances, worker, _params(args), args.jobs, command)
    return _emit_report(report, args.format)


def cmd_crosscheck(args) -> int:
    doc = _read(args.input)
    graphs = doc["graphs"] if isinstance(doc.get("graphs"), list) else [doc]
    report = Report("crosscheck-tutte")
    for g in graphs:
        G = graph_from_document(g)
        if not is_connected(build_bipartite(graph_to_hypergraph(G))):
            raise HypergraphError("graph is not connected")
        report.merge(crosscheck_specialization(G, args.order))
    return _emit_report(report, args.format)


def cmd_gen_corpus(args) -> int:
    if args.count < 0 or args.max_v < 1 or args.max_e < 1:
        raise HypergraphError("--count must be >= 0, --max-v and --max-e >= 1")
    corpus = generate_corpus(args.count, args.seed, args.max_v, args.max_e)
    print(_dump(corpus_document(corpus, args.seed)))
    return EXIT_OK


def replay(doc: dict) -> Report:
    """Re-run the verification a counterexample document came from.

    Accepts either the counterexample itself or a whole report carrying one.
    """
    if doc.get("status") == "pass" and "counterexample" not in doc:
        raise ParseError("report passed and carries no counterexample to replay")
    cx = doc.get("counterexample", doc)
    if not isinstance(cx, dict) or "command" not in cx:
        raise ParseError('malformed counterexample: missing "command"')
    command = cx["command"]
    if command == "crosscheck-tutte":
        return crosscheck_specialization(graph_from_document(cx["graph"]), cx.get("order"))
    if "hypergraph" not in cx:
        raise ParseError('malformed counterexample: missing "hypergraph"')
    B = _bipartite(hypergraph_from_document(cx["hypergraph"]))
    if command == "verify order-independence":
        return verify_order_independence(B, orderings=cx["orderings"])
    if command == "verify transposition":
        return verify_transposition_proof(B, cx["order"], cx["h"])
    if command == "verify lemmas":
        if "order" in cx:
            return verify_lemmas(B, order_list=[cx["order"]])
        return verify_lemmas(B, "all" if B.n_edges <= 6 else "random")
    raise ParseError(f"cannot replay command {command!r}")


def cmd_replay(args) -> int:
    report = replay(_read(args.input))
    code = _emit_report(report, args.format)
    print("counterexample reproduced" if code == EXIT_FAIL else "counterexample did not reproduce",
          file=sys.stderr)
    return code


# -- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="input", required=True, metavar="FILE",
                        help="input document ('-' for stdin)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--budget-trees", type=int, default=DEFAULT_STATE_BUDGET, metavar="M",
                        help="cap on enumeration subproblems")
    common.add_argument("--jobs", type=int, default=1, metavar="N", help="worker processes for corpora")

    ordered = argparse.ArgumentParser(add_help=False)
    ordered.add_argument("--order", metavar="LIST", help="comma-separated hyperedge ids")

    sampled = argparse.ArgumentParser(add_help=False)
    sampled.add_argument("--mode", choices=("all", "random"), default="all")
    sampled.add_argument("--samples", type=int, default=100, metavar="K")
    sampled.add_argument("--seed", type=int, default=0, metavar="S")

    p = _Parser(prog="hypertutte", description="Interior and exterior polynomials of hypergraphs.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)
    sub.add_parser("hypertrees", parents=[common], help="list all hypertrees").set_defaults(fn=cmd_hypertrees)
    sub.add_parser("interior", parents=[common, ordered], help="interior polynomial").set_defaults(fn=cmd_interior)
    sub.add_parser("exterior", parents=[common, ordered], help="exterior polynomial").set_defaults(fn=cmd_exterior)

    v = sub.add_parser("verify", help="run a verification").add_subparsers(
        dest="target", required=True, parser_class=_Parser)
    v.add_parser("order-independence", parents=[common, sampled]).set_defaults(fn=cmd_verify)
    v.add_parser("lemmas", parents=[common, sampled]).set_defaults(fn=cmd_verify)
    t = v.add_parser("transposition", parents=[common, ordered])
    t.add_argument("--h", type=int, metavar="K", help="swap ranks K and K+1 (1-based)")
    t.set_defaults(fn=cmd_verify, mode="all", samples=0, seed=0)

    sub.add_parser("crosscheck-tutte", parents=[common, ordered],
                   help="compare with the Tutte polynomial of a graph").set_defaults(fn=cmd_crosscheck)

    g = sub.add_parser("gen-corpus", help="random connected hypergraphs")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--count", type=int, default=200)
    g.add_argument("--max-v", type=int, default=7)
    g.add_argument("--max-e", type=int, default=6)
    g.set_defaults(fn=cmd_gen_corpus)

    r = sub.add_parser("replay", parents=[common], help="re-run a counterexample")
    r.set_defaults(fn=cmd_replay)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.fn(args)
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (HypergraphError, KeyError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
