"""Command line interface.

Exit codes: 0 success or concordant, 1 usage or input error, 2 a hypothesis
or guard failed, 3 crosscheck discrepancy.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .complex import is_simple, point_classes, read_complex
from .decomposition import classify_elementary, decompose, tree_json, tree_text
from .errors import BraidcxError, ComplexFormatError, GuardFailed
from .homology import h1_braid
from .oracle import DEFAULT_CELL_LIMIT, GraphModel, build_udc, cube_h1, cube_pi1, subdivide_for
from .presentation import (
    LeafLabelledTree,
    pair_classes,
    presentation_h1,
    tree_b2,
    tree_closure_b2,
    tree_r2,
    twotrees_b2,
)
from .reduction import MoveLog, replay, simplify
from .verdicts import EXIT_DISCREPANCY, EXIT_GUARD, EXIT_OK, EXIT_USAGE, crosscheck, verdict


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text)


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError("n must be >= 1")
    return n


# -- subcommands ----------------------------------------------------------------


def cmd_classify(args) -> int:
    X = read_complex(args.file)
    classes = {v: c.value for v, c in point_classes(X.skeleton(2)).items()}
    simple = is_simple(X)
    try:
        kind = classify_elementary(X)
        elementary = kind.to_json()
        kind_text = str(kind)
    except GuardFailed as exc:
        elementary, kind_text = None, f"not elementary ({exc.detail or exc.hypothesis})"
    payload = {
        "name": X.name, "fingerprint": X.fingerprint, "dim": X.dim,
        "vertices": len(X.vertices), "euler_characteristic": X.euler_characteristic,
        "point_classes": classes, "simple": bool(simple), "non_simple": list(simple.offenders),
        "elementary": elementary,
    }
    lines = [f"{X.name} [{X.fingerprint}] dim={X.dim} chi={X.euler_characteristic}",
             f"simple: {'yes' if simple else 'no ' + ','.join(simple.offenders)}",
             f"elementary: {kind_text}"]
    lines += [f"  {v}: {c}" for v, c in classes.items()]
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_simplify(args) -> int:
    X = read_complex(args.file)
    Y, log = simplify(X)
    if args.log:
        Path(args.log).write_text(log.to_text())
    payload = {"fingerprint": Y.fingerprint, "complex": [list(s) for s in Y.maximal],
               "moves": [m.to_line() for m in log.moves], "log": log.to_text()}
    _emit(args, payload, Y.to_text() + "\n" + log.to_text())
    return EXIT_OK


def cmd_decompose(args) -> int:
    X, _ = simplify(read_complex(args.file))
    node = decompose(X)
    _emit(args, tree_json(node), tree_text(node))
    return EXIT_OK


def _tree(path, labels) -> LeafLabelledTree:
    T = read_complex(path)
    mapping = None
    if labels:
        mapping = {v: i for i, v in enumerate(labels.split(","), 1)}
    try:
        return LeafLabelledTree.from_tree(T, mapping)
    except ValueError as exc:
        raise GuardFailed("input is a leaf-labelled tree", str(exc)) from exc


def cmd_present(args) -> int:
    A = _tree(args.file, args.labels)
    if args.second:
        P = twotrees_b2(A, _tree(args.second, args.second_labels))
        family = "twotrees"
    elif args.closure:
        P, family = tree_closure_b2(A), "tree-closure"
    else:
        P, family = tree_b2(A), "tree"
    h = presentation_h1(P)
    classes = [{"center": c.center, "members": [[list(ij), s] for ij, s in c.members]}
               for c in pair_classes(A)]
    payload = {"family": family, "k": A.k, "r2": tree_r2(A), "pair_classes": classes,
               "presentation": P.to_json(), "abelianization": h.to_json()}
    _emit(args, payload, f"{family} k={A.k} r2={tree_r2(A)}\n{P}\nabelianization: {h}")
    return EXIT_OK


def cmd_h1(args) -> int:
    cert = h1_braid(read_complex(args.file), args.n)
    _emit(args, cert.to_json(), cert.to_text())
    return EXIT_OK


def cmd_oracle(args) -> int:
    X = read_complex(args.file)
    G = GraphModel.from_complex(X)
    if args.n > 1:
        G = subdivide_for(G, args.n)
    C = build_udc(G, args.n, limit=args.limit, max_dim=None if args.census else 2)
    payload = {"n": args.n, "graph_vertices": G.n_vertices, "graph_edges": len(G.edges),
               "census": {str(d): c for d, c in C.census().items()}}
    lines = [f"UD_{args.n}: graph {G.n_vertices} vertices {len(G.edges)} edges",
             "cells " + " ".join(f"d{d}={c}" for d, c in C.census().items())]
    h = cube_h1(C)
    payload["h1"] = h.to_json()
    lines.append(f"H1 = {h}")
    if args.pi1:
        P = cube_pi1(C)
        payload["pi1"] = P.to_json()
        lines.append(f"pi1: {len(P.generators)} generators, {len(P.relators)} relators")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verdict(args) -> int:
    v = verdict(read_complex(args.file), args.n)
    text = "\n".join(f"{k}: {val}" for k, val in v.summary().items())
    _emit(args, v.to_json(), text)
    return EXIT_OK


def _expand(paths) -> list[Path]:
    out = []
    for p in map(Path, paths):
        out += sorted(p.glob("*.cx")) if p.is_dir() else [p]
    return out


def cmd_crosscheck(args) -> int:
    reports, code = [], EXIT_OK
    for path in _expand(args.files):
        rep = crosscheck(read_complex(path), args.n, oracle=not args.no_oracle)
        reports.append(rep)
        if not rep.concordant:
            code = EXIT_DISCREPANCY
    payload = {"n": args.n, "reports": [r.to_json() for r in reports],
               "concordant": code == EXIT_OK}
    _emit(args, payload, "\n\n".join(r.to_text() for r in reports))
    return code


def cmd_replay(args) -> int:
    X = read_complex(args.file)
    log = MoveLog.from_text(Path(args.log).read_text())
    Y = replay(X, log)
    payload = {"initial": X.fingerprint, "final": Y.fingerprint, "moves": len(log.moves),
               "matches": Y.fingerprint == log.final}
    _emit(args, payload, f"replayed {len(log.moves)} moves: {X.fingerprint} -> {Y.fingerprint}")
    return EXIT_OK if payload["matches"] else EXIT_GUARD


def cmd_report(args) -> int:
    from .report import write_report

    out = write_report(_expand(args.files), args.out, args.n, oracle=not args.no_oracle)
    bad = [r["name"] for r in out["rows"] if r.get("concordant") == "no"]
    payload = {"files": out["files"], "complexes": len(out["rows"]), "discrepancies": bad}
    _emit(args, payload, "\n".join(f"wrote {f}" for f in out["files"].values()))
    return EXIT_DISCREPANCY if bad else EXIT_OK


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="braidcx", description="Braid-group invariants of simplicial complexes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("classify", parents=[common], help="point classes, simplicity, elementary kind")
    s.add_argument("file")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("simplify", parents=[common], help="braid-equivalent simple complex with move log")
    s.add_argument("file")
    s.add_argument("--log", help="write the move log to this path")
    s.set_defaults(func=cmd_simplify)

    s = sub.add_parser("decompose", parents=[common], help="decomposition tree")
    s.add_argument("file")
    s.set_defaults(func=cmd_decompose)

    s = sub.add_parser("present", parents=[common], help="presentations for trees and tree closures")
    s.add_argument("file", help="a tree")
    s.add_argument("--labels", help="comma-separated leaves in label order 1..k")
    s.add_argument("--closure", action="store_true", help="closure along all leaves")
    s.add_argument("--second", help="second tree: sum of both closures")
    s.add_argument("--second-labels", help="leaf order for the second tree")
    s.set_defaults(func=cmd_present)

    s = sub.add_parser("h1", parents=[common], help="H1 of the braid group with certificate")
    s.add_argument("file")
    s.add_argument("--n", type=_positive, required=True)
    s.set_defaults(func=cmd_h1)

    s = sub.add_parser("oracle", parents=[common], help="discrete configuration space of a graph")
    s.add_argument("file")
    s.add_argument("--n", type=_positive, required=True)
    s.add_argument("--pi1", action="store_true", help="also build a presentation")
    s.add_argument("--census", action="store_true", help="enumerate cells of every dimension")
    s.add_argument("--limit", type=int, default=DEFAULT_CELL_LIMIT)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("verdict", parents=[common], help="circle / surface / plane verdicts")
    s.add_argument("file")
    s.add_argument("--n", type=_positive, default=2)
    s.set_defaults(func=cmd_verdict)

    s = sub.add_parser("crosscheck", parents=[common], help="verdicts against H1 and the oracle")
    s.add_argument("files", nargs="+", help="complex files or directories of *.cx")
    s.add_argument("--n", type=_positive, default=2)
    s.add_argument("--no-oracle", action="store_true")
    s.set_defaults(func=cmd_crosscheck)

    s = sub.add_parser("replay", parents=[common], help="replay a move log")
    s.add_argument("file")
    s.add_argument("log")
    s.set_defaults(func=cmd_replay)

    s = sub.add_parser("report", parents=[common], help="TSV table and PNG figures for a corpus")
    s.add_argument("files", nargs="+")
    s.add_argument("--out", default="report")
    s.add_argument("--n", type=_positive, default=2)
    s.add_argument("--no-oracle", action="store_true")
    s.set_defaults(func=cmd_report)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ComplexFormatError, FileNotFoundError, IsADirectoryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GuardFailed as exc:
        print(f"hypothesis failed: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except BraidcxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
