"""Command-line front end.

Graph files are plain text::

    # comment
    vertex 5
    edge 1 2
    edge 2 3

Exit codes: 0 success, 1 verification failure, 2 input error,
3 unsupported pattern shape, 4 search budget exhausted.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import construct, oracle, trep
from .core import (
    Graph,
    OpenProblemError,
    UnrepresentableError,
    UnsupportedPatternError,
    WordRepError,
    as_word,
    format_word,
    path_graph,
    represents_11,
    star_graph,
)
from .patterns import (
    as_pattern,
    induced_graph_t,
    kitaev_induced_graph,
    represents_kitaev,
    represents_t,
)

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_UNSUPPORTED, EXIT_TRUNCATED = range(5)


class InputError(WordRepError):
    pass


def parse_graph_text(text: str) -> Graph:
    vertices, edges, seen = [], [], set()
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "vertex" and len(parts) == 2:
            vertices.append(parts[1])
        elif parts[0] == "edge" and len(parts) == 3:
            u, v = parts[1:]
            if u == v:
                raise InputError(f"line {lineno}: self-loop on {u}")
            key = frozenset((u, v))
            if key in seen:
                raise InputError(f"line {lineno}: duplicate edge {u} {v}")
            seen.add(key)
            for x in (u, v):
                if x not in vertices:
                    vertices.append(x)
            edges.append((u, v))
        else:
            raise InputError(f"line {lineno}: expected 'vertex <label>' or 'edge <u> <v>'")
    if len(set(vertices)) != len(vertices):
        vertices = list(dict.fromkeys(vertices))
    for v in vertices:
        if not v.isascii():
            raise InputError(f"label {v!r} is not ASCII")
    return Graph(vertices, edges)


def read_graph(path: str) -> Graph:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc
    return parse_graph_text(text)


def parse_word(text: str, G: Graph | None = None) -> tuple:
    w = as_word(text)
    if G is not None:
        if not any(c.isspace() for c in text) and any(len(v) > 1 for v in G.vertices):
            raise InputError("graph has multi-character labels; give the word as "
                             "space-separated tokens")
        unknown = [x for x in dict.fromkeys(w) if x not in G]
        if unknown:
            raise InputError(f"word uses undeclared vertices {unknown}")
    return w


def _positive(s: str) -> int:
    v = int(s)
    if v < 1:
        raise argparse.ArgumentTypeError("expected a positive integer")
    return v


# ---------------------------------------------------------------------------
# output
# ---------------------------------------------------------------------------


def _emit(args, command, inputs, result=None, words=None, ell=None, count=None,
          truncated=False, text=None):
    if args.json:
        payload = {
            "command": command,
            "inputs": inputs,
            "result": result,
            "words": None if words is None else [format_word(w) for w in words],
            "ell": ell,
            "count": count,
            "truncated": truncated,
        }
        print(json.dumps(payload, indent=2))
    elif text is not None:
        print(text)
    elif words is not None:
        for w in words:
            print(format_word(w))


def _edges_text(G: Graph) -> str:
    return "\n".join(f"{u} {v}" for u, v in G.edge_list())


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_verify(args) -> int:
    G = read_graph(args.graph)
    w = parse_word(args.word, G)
    t = as_pattern(args.pattern)
    if args.kitaev:
        report = represents_kitaev(w, G, t)
    elif t.symbols == "aa":
        report = represents_11(w, G)
    else:
        report = represents_t(w, G, t)
    lines = [report.verdict]
    lines += [f"missing vertex {v}" for v in report.missing_vertices]
    lines += [f"extra letter {v}" for v in report.extra_letters]
    for wi in report.witnesses:
        x, y = wi.pair
        if wi.factor is None:
            lines.append(f"spurious edge {x} {y}: restriction {format_word(wi.restriction)} avoids {t}")
        else:
            lines.append(f"missing edge {x} {y}: restriction {format_word(wi.restriction)} "
                         f"contains {format_word(wi.factor)}")
    _emit(args, "verify",
          {"graph": args.graph, "word": format_word(w), "pattern": t.raw if args.kitaev else t.symbols,
           "kitaev": args.kitaev},
          result=report.to_dict(), words=[w], ell=len(w), count=None, text="\n".join(lines))
    return EXIT_OK if report else EXIT_FAIL


def cmd_induce(args) -> int:
    G0 = read_graph(args.graph) if args.graph else None
    w = parse_word(args.word, G0)
    t = as_pattern(args.pattern)
    if args.kitaev:
        G = kitaev_induced_graph(w, t, order=G0.vertices if G0 else None)
    else:
        G = induced_graph_t(w, t)
    _emit(args, "induce", {"word": format_word(w), "pattern": t.raw if args.kitaev else t.symbols,
                           "kitaev": args.kitaev},
          result={"vertices": list(G.vertices), "edges": [list(e) for e in G.edge_list()]},
          text=_edges_text(G))
    return EXIT_OK


def _component_word(C: Graph, max_len) -> tuple:
    if C.n == 1:
        return C.vertices
    if C.is_tree():
        return construct.tree_min_representant(C)
    res = oracle.search_min_representants(
        C, oracle.SearchConfig(mode=oracle.Mode.FIRST, max_len=max_len))
    if res.truncated or not res.words:
        raise WordRepError(f"no representant found for component {C!r}")
    return res.words[0]


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "tree":
        G = read_graph(args.arg)
        words = [construct.tree_min_representant(G)]
    elif kind == "cycle":
        words = [construct.cycle_min_representant(_int(args.arg))]
    elif kind == "star":
        words = construct.star_min_representants(_int(args.arg))
    else:
        G = read_graph(args.arg)
        comps = sorted(G.components(), key=lambda C: C.n)
        words = [construct.compose_components([_component_word(C, args.max_len) for C in comps])]
    _emit(args, "construct", {"kind": kind, "arg": args.arg}, words=words,
          ell=len(words[0]), count=len(words))
    return EXIT_OK


def _int(s: str) -> int:
    try:
        return int(s)
    except ValueError:
        raise InputError(f"expected an integer, got {s!r}") from None


def cmd_enumerate(args) -> int:
    kind = args.kind
    if kind == "tree":
        words = construct.enumerate_tree_min_representants(read_graph(args.arg))
    elif kind == "cycle":
        words = construct.enumerate_cycle_min_representants(_int(args.arg))
    elif kind == "path":
        words = construct.enumerate_tree_min_representants(path_graph(_int(args.arg)))
    else:
        words = construct.star_min_representants(_int(args.arg))
    _emit(args, "enumerate", {"kind": kind, "arg": args.arg}, words=words,
          ell=len(words[0]) if words else None, count=len(words))
    return EXIT_OK


def cmd_count(args) -> int:
    kind = args.kind
    if kind == "tree":
        T = read_graph(args.arg)
        summary = construct.tree_summary(T)
    elif kind == "cycle":
        summary = construct.cycle_summary(_int(args.arg))
    elif kind == "path":
        k = _int(args.arg)
        summary = construct.MinRepSummary(2 * k - 2, construct.count_path_min(k))
    else:
        summary = construct.tree_summary(star_graph(_int(args.arg)))
    _emit(args, "count", {"kind": kind, "arg": args.arg},
          result={"ell": summary.ell, "count": summary.count},
          ell=summary.ell, count=summary.count, text=str(summary.count))
    return EXIT_OK


def cmd_build_t(args) -> int:
    G = read_graph(args.graph)
    t = as_pattern(args.pattern)
    rep = parse_word(args.rep11, G) if args.rep11 else None
    word, trace = trep.build_t_representant(G, t, representant_11=rep,
                                            max_vertices=args.max_vertices)
    lines = [format_word(word)]
    if args.trace:
        lines.append(f"start {format_word(trace.start_word)}")
        for s in trace.steps:
            edge = " ".join(s.edge) if s.edge else "-"
            lines.append(f"delete {edge}: {s.where} {format_word(s.segment)}")
        if trace.reversed:
            lines.append("reverse")
    result = None
    if args.trace:
        result = {
            "start_word": format_word(trace.start_word),
            "steps": [{"edge": list(s.edge), "where": s.where, "segment": format_word(s.segment)}
                      for s in trace.steps],
            "reversed": trace.reversed,
        }
    _emit(args, "build-t", {"graph": args.graph, "pattern": t.symbols}, result=result,
          words=[word], ell=len(word), count=1, text="\n".join(lines))
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = read_graph(args.graph)
    if args.length is not None:
        mode = oracle.Mode.AT_LENGTH
    elif args.first:
        mode = oracle.Mode.FIRST
    else:
        mode = oracle.Mode.ALL_MINIMAL
    if args.uniform is not None and mode is oracle.Mode.ALL_MINIMAL:
        mode = oracle.Mode.AT_LENGTH
    cfg = oracle.SearchConfig(
        pattern=as_pattern(args.pattern).symbols,
        max_len=args.max_len,
        uniform_k=args.uniform,
        mode=mode,
        length=args.length,
        max_explored=args.max_explored,
        prune=not args.no_prune,
        workers=args.threads,
    )
    res = oracle.search_min_representants(G, cfg)
    shown = res.words if (args.all or args.uniform is not None or args.length is not None) \
        else res.words[:1]
    lines = [f"ell {res.ell if res.ell is not None else 'none'}",
             f"count {res.count}", f"explored {res.explored}"]
    if res.truncated:
        lines.append("truncated: budget exhausted, minimality not established")
    lines += [format_word(w) for w in shown]
    _emit(args, "oracle",
          {"graph": args.graph, "pattern": cfg.pattern, "uniform": args.uniform,
           "max_len": args.max_len, "length": args.length, "mode": mode.value},
          result={"explored": res.explored}, words=shown, ell=res.ell, count=res.count,
          truncated=res.truncated, text="\n".join(lines))
    return EXIT_TRUNCATED if res.truncated else EXIT_OK


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _global_flags(parser, suppress):
    d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
    parser.add_argument("--json", action="store_true", default=d(False),
                        help="machine-readable output")
    parser.add_argument("--threads", type=_positive, default=d(1),
                        help="oracle worker processes")
    parser.add_argument("--max-len", type=_positive, default=d(None),
                        help="oracle length bound (default 2|V|)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wordrep",
                                description="Graph representation by words under pattern avoidance.")
    _global_flags(p, suppress=False)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("verify", parents=[common], help="check that a word represents a graph")
    s.add_argument("graph")
    s.add_argument("word")
    s.add_argument("--pattern", default="aa")
    s.add_argument("--kitaev", action="store_true")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("induce", parents=[common], help="graph induced by a word")
    s.add_argument("word")
    s.add_argument("--pattern", default="aa")
    s.add_argument("--kitaev", action="store_true")
    s.add_argument("--graph", help="graph file fixing the vertex order")
    s.set_defaults(func=cmd_induce)

    s = sub.add_parser("construct", parents=[common], help="minimal representants")
    s.add_argument("kind", choices=["tree", "cycle", "star", "components"])
    s.add_argument("arg", help="graph file, or n / k")
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("enumerate", parents=[common], help="all minimal representants")
    s.add_argument("kind", choices=["tree", "cycle", "path", "star"])
    s.add_argument("arg")
    s.set_defaults(func=cmd_enumerate)

    s = sub.add_parser("count", parents=[common], help="closed-form minimal counts")
    s.add_argument("kind", choices=["tree", "cycle", "path", "star"])
    s.add_argument("arg")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("build-t", parents=[common], help="t-representant by edge deletion")
    s.add_argument("graph")
    s.add_argument("--pattern", required=True)
    s.add_argument("--rep11", help="known word-representant (for aab / abb)")
    s.add_argument("--trace", action="store_true")
    s.add_argument("--max-vertices", type=_positive, default=trep.DEFAULT_MAX_VERTICES)
    s.set_defaults(func=cmd_build_t)

    s = sub.add_parser("oracle", parents=[common], help="exhaustive minimal search")
    s.add_argument("graph")
    s.add_argument("--pattern", default="aa")
    s.add_argument("--uniform", type=_positive)
    s.add_argument("--all", action="store_true", help="print every minimal word")
    s.add_argument("--first", action="store_true", help="stop at the first hit")
    s.add_argument("--length", type=_positive, help="search this length only")
    s.add_argument("--no-prune", action="store_true")
    s.add_argument("--max-explored", type=_positive, default=oracle.DEFAULT_MAX_EXPLORED)
    s.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UnsupportedPatternError, OpenProblemError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNSUPPORTED
    except UnrepresentableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except WordRepError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
