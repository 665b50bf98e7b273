"""Command-line front end.  Output is newline-delimited JSON unless ``--dot`` or ``--text`` is given.

Exit status: 0 on success, 1 when a verification suite reports failures,
2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from qgrass.pathmatrix import path_matrix, path_matrix_minor
from qgrass.positroid import (
    HPrimeKey,
    all_keys,
    hprime_poset,
    key_necklace,
    plucker_set,
    polynormal_sequence,
    positroid_bases,
    pset_to_json,
    relabeled_witness,
    separating_set,
)
from qgrass.postnikov import build_graph, to_dot, vertex_name
from qgrass.shapes import InvalidInput, diagram_from_json, index_set
from qgrass.verify import SUITES, run_suite

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _emit(obj, out) -> None:
    out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _load_key(path: str) -> HPrimeKey:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InvalidInput(f"cannot read diagram file: {exc}") from exc
    m, n, gamma, diagram = diagram_from_json(text)
    return HPrimeKey(m, n, gamma, diagram)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qgrass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list H-prime keys as JSON lines")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=_int_list, help="restrict to one gamma, e.g. 1,3,5")

    p = sub.add_parser("graph", help="the weighted graph of a diagram")
    p.add_argument("--diagram", required=True)
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("pathmatrix", help="path-matrix entries")
    p.add_argument("--diagram", required=True)
    p.add_argument("--text", action="store_true")

    p = sub.add_parser("minor", help="a pseudo minor of the path matrix")
    p.add_argument("--diagram", required=True)
    p.add_argument("--rows", type=_int_list, required=True)
    p.add_argument("--cols", type=_int_list, required=True)
    p.add_argument("--text", action="store_true")

    p = sub.add_parser("member", help="is a Plucker coordinate in the H-prime")
    p.add_argument("--diagram", required=True)
    p.add_argument("--alpha", type=_int_list, required=True)

    for name in ("positroid", "necklace", "separating", "polynormal"):
        p = sub.add_parser(name)
        p.add_argument("--diagram", required=True)
        if name == "polynormal":
            p.add_argument("--dedupe", action="store_true")

    p = sub.add_parser("poset", help="the containment poset of H-primes")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dot", action="store_true")

    p = sub.add_parser("verify", help="run a consistency suite")
    p.add_argument("--suite", choices=sorted(SUITES), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return parser


def _graph_json(g) -> dict:
    return {
        "vertices": [vertex_name(v) for v in g.vertices()],
        "edges": [
            {"from": vertex_name(u), "to": vertex_name(v), "kind": g.kind[(u, v)], "weight": str(g.weight[(u, v)])}
            for u, v in g.edges()
        ],
    }


def _dispatch(args, out) -> int:
    cmd = args.command
    if cmd == "enumerate":
        gamma = None if args.gamma is None else index_set(args.gamma, args.m, args.n)
        for key in all_keys(args.m, args.n):
            if gamma is None or key.gamma == gamma:
                _emit(key.to_json(), out)
        return EXIT_OK
    if cmd == "poset":
        if not 1 <= args.m < args.n:
            raise InvalidInput(f"need 1 <= m < n, got m={args.m}, n={args.n}")
        poset = hprime_poset(args.m, args.n)
        if args.dot:
            out.write(poset.to_dot())
        else:
            _emit(poset.to_json(), out)
        return EXIT_OK
    if cmd == "verify":
        res = run_suite(args.suite, args.m, args.n)
        _emit(res.to_json(), out)
        return EXIT_OK if res.ok else EXIT_FAILED

    key = _load_key(args.diagram)
    if cmd == "graph":
        g = build_graph(key.diagram)
        if args.dot:
            out.write(to_dot(g))
        else:
            _emit(_graph_json(g), out)
    elif cmd == "pathmatrix":
        M = path_matrix(key.diagram)
        for (i, j), value in sorted(M.entries.items()):
            if args.text:
                out.write(f"M[{i},{j}] = {value}\n")
            else:
                _emit({"i": i, "j": j, "value": str(value)}, out)
    elif cmd == "minor":
        value = path_matrix_minor(path_matrix(key.diagram), args.rows, args.cols)
        if args.text:
            out.write(f"{value}\nvanishing={str(value.is_zero()).lower()}\n")
        else:
            _emit({"rows": args.rows, "cols": args.cols, "value": str(value), "vanishing": value.is_zero()}, out)
    elif cmd == "member":
        alpha = index_set(args.alpha, key.m, key.n)
        witness = relabeled_witness(key, alpha)
        _emit(
            {
                "alpha": list(alpha),
                "member": witness is None,
                "witness": None if witness is None else [[vertex_name(v) for v in p] for p in witness],
            },
            out,
        )
    elif cmd == "positroid":
        _emit({"plucker_set": pset_to_json(plucker_set(key)), "positroid": pset_to_json(positroid_bases(key))}, out)
    elif cmd == "necklace":
        _emit({"necklace": [list(a) for a in key_necklace(key)]}, out)
    elif cmd == "separating":
        _emit({"separating": [list(a) for a in separating_set(key)]}, out)
    elif cmd == "polynormal":
        _emit({"sequence": [list(a) for a in polynormal_sequence(key, dedupe=args.dedupe)]}, out)
    return EXIT_OK


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args, out)
    except InvalidInput as exc:
        sys.stderr.write(f"qgrass: invalid input: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
