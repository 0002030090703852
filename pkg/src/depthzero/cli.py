"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (message on stderr), 2 on a
usage error such as a malformed partition or multisegment literal.
"""
from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence

from . import hecke, symgroup
from .branching import BackendInconsistency, branch, branch_report, generic_branching
from .kl import kl_polynomial
from .multisegments import (MultisegmentError, decomposition_number, format_multisegment,
                            parse_multisegment, partition_P, poset, zelevinsky_dual)
from .partitions import (PartitionError, PartitionVector, conjugate, dominates, format_partition,
                         kostka_ssyt, parse_partition)

DOMAIN_ERRORS = (PartitionError, MultisegmentError, hecke.HeckeError,
                 symgroup.NotAVirtualCharacter, BackendInconsistency, ValueError)


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except PartitionError:
        raise argparse.ArgumentTypeError(f"malformed partition literal: {text!r}") from None


def _lengths_arg(text: str):
    try:
        lengths = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed length list: {text!r}") from None
    if any(l < 1 for l in lengths):
        raise argparse.ArgumentTypeError(f"malformed length list: {text!r}")
    return lengths


def _multisegment_arg(text: str):
    try:
        return parse_multisegment(text)
    except MultisegmentError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _perm_arg(text: str):
    try:
        return hecke.WeylElement(int(tok) for tok in text.split(","))
    except (ValueError, hecke.HeckeError):
        raise argparse.ArgumentTypeError(f"malformed permutation literal: {text!r}") from None


def render_vector(vec: PartitionVector, fmt: str) -> str:
    if fmt == "json":
        return vec.to_json()
    if not len(vec):
        return "(no constituents)"
    return "\n".join(f"{format_partition(mu)} : {c}" for mu, c in vec.items())


def render(result, fmt: str = "table") -> str:
    """Text for a library result; output is deterministic."""
    if isinstance(result, PartitionVector):
        return render_vector(result, fmt)
    if fmt == "json":
        return json.dumps(result, sort_keys=True, separators=(",", ":"))
    return str(result)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json"), default="table")
    common.add_argument("--cap", type=int, default=None, help="maximum support size for posets")

    parser = argparse.ArgumentParser(
        prog="depthzero",
        description="Depth-zero branching of Iwahori-spherical representations of GL_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", parents=[common], help="conjugate / dominance")
    p.add_argument("partition", type=_partition_arg)
    p.add_argument("--dominates", type=_partition_arg, metavar="MU")

    p = sub.add_parser("kostka", parents=[common], help="Kostka number K(shape, content)")
    p.add_argument("shape", type=_partition_arg)
    p.add_argument("content", type=_partition_arg)

    p = sub.add_parser("generic", parents=[common], help="generic decomposition for segment lengths")
    p.add_argument("lengths", type=_lengths_arg)

    p = sub.add_parser("mseg", parents=[common], help="multisegment data and poset export")
    p.add_argument("multisegment", type=_multisegment_arg)
    p.add_argument("--poset", choices=("dot", "json"), default=None)

    p = sub.add_parser("m", parents=[common], help="decomposition number m(b; a)")
    p.add_argument("b", type=_multisegment_arg)
    p.add_argument("a", type=_multisegment_arg)

    p = sub.add_parser("branch", parents=[common], help="multiplicities in St(<a>)^{K_+}")
    p.add_argument("multisegment", type=_multisegment_arg)
    p.add_argument("--report", action="store_true", help="emit the full report (JSON)")

    p = sub.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomial P_{x,w}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--x", type=_perm_arg, required=True)
    p.add_argument("--w", type=_perm_arg, required=True)

    p = sub.add_parser("hecke", parents=[common], help="Hecke algebra checks")
    p.add_argument("action", choices=("verify",))
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("symgroup", parents=[common], help="symmetric group character table")
    p.add_argument("action", choices=("table",))
    p.add_argument("n", type=int)
    return parser


def _dispatch(args) -> tuple[str, int]:
    fmt = args.format
    cmd = args.command
    if cmd == "partition":
        lam = args.partition
        if args.dominates is not None:
            ans = dominates(lam, args.dominates)
            return (json.dumps(ans) if fmt == "json" else str(ans).lower()), 0
        data = {"partition": list(lam), "n": lam.n, "conjugate": list(conjugate(lam))}
        if fmt == "json":
            return render(data, fmt), 0
        return (f"partition: {format_partition(lam)}\nn: {lam.n}\n"
                f"conjugate: {format_partition(conjugate(lam))}"), 0
    if cmd == "kostka":
        return str(kostka_ssyt(args.shape, args.content)), 0
    if cmd == "generic":
        return render_vector(generic_branching(args.lengths).multiplicities, fmt), 0
    if cmd == "mseg":
        a = args.multisegment
        if args.poset == "dot":
            return poset(a, args.cap).to_dot().rstrip("\n"), 0
        if args.poset == "json":
            p = poset(a, args.cap)
            return p.to_json({b: decomposition_number(b, a) for b in p.nodes}), 0
        dual = zelevinsky_dual(a)
        data = {
            "multisegment": format_multisegment(a),
            "n": a.degree,
            "P": format_partition(partition_P(a)),
            "dual": format_multisegment(dual),
            "poset_size": len(poset(a, args.cap).nodes),
        }
        if fmt == "json":
            return render(data, fmt), 0
        return "\n".join(f"{k}: {v}" for k, v in data.items()), 0
    if cmd == "m":
        return str(decomposition_number(args.b, args.a)), 0
    if cmd == "branch":
        if args.report:
            return branch_report(args.multisegment, args.cap).to_json(), 0
        return render_vector(branch(args.multisegment, args.cap).multiplicities, fmt), 0
    if cmd == "kl":
        if len(args.x) != args.n or len(args.w) != args.n:
            raise hecke.HeckeError(f"permutations must have length n={args.n}")
        poly = kl_polynomial(args.x, args.w)
        coeffs = poly.coefficient_list()
        if fmt == "json":
            return render({"x": list(args.x), "w": list(args.w), "coefficients": coeffs,
                           "polynomial": str(poly)}, fmt), 0
        return str(poly), 0
    if cmd == "hecke":
        failures = hecke.verify_relations(args.n)
        if fmt == "json":
            return render({"n": args.n, "failures": failures, "ok": not failures}, fmt), int(bool(failures))
        if failures:
            return "\n".join(failures), 1
        return f"all Hecke relations hold on induced modules of rank {args.n}", 0
    if cmd == "symgroup":
        return render(symgroup.table_as_json(args.n), "json"), 0
    raise AssertionError(cmd)


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        text, status = _dispatch(args)
    except DOMAIN_ERRORS as exc:
        print(str(exc), file=err)
        return 1
    print(text, file=out)
    return status


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
