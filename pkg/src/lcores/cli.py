"""Command-line interface.

Exit status is 0 on success, 1 when a ``verify`` suite finds a counterexample,
and 2 on usage or domain errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any

from . import verify as verify_mod
from .abacus import balanced_flush_abacus
from .affine import (
    RootVector,
    apply_s_core,
    apply_s_vector,
    canonical_word,
    coxeter_length,
    format_vector,
    n_vector,
    phi_subexpression,
    pi,
    pi_inv,
)
from .alcoves import alcove_svg
from .corebij import enumerate_cores, phi, phi_inv, phi_rows, phi_tilde
from .lmcorr import rho, skew_boxes, upsilon
from .partition import (
    Box,
    DomainError,
    Partition,
    format_partition,
    hooks,
    parse_partition,
    region,
    residue,
)


@dataclass
class OutputRecord:
    """One result line; ``--json`` prints it as ``{"op", "input", "output"}``."""

    op: str
    input: dict[str, Any] = field(default_factory=dict)
    output: Any = None

    def to_json(self) -> str:
        return json.dumps({"op": self.op, "input": self.input, "output": self.output}, sort_keys=True)


def _emit(args, record: OutputRecord, text: str) -> None:
    print(record.to_json() if args.json else text)


def cmd_enumerate(args) -> int:
    mode = "at_most" if args.at_most else "exact"
    cores = enumerate_cores(args.ell, args.k, mode)
    inputs = {"ell": args.ell, "k": args.k, "mode": mode}
    if args.count:
        _emit(args, OutputRecord("count", inputs, len(cores)), str(len(cores)))
        return 0
    for lam in cores:
        text = format_partition(lam)
        _emit(args, OutputRecord("enumerate", inputs, text), text)
    return 0


def _need(value, name: str):
    if value is None:
        raise DomainError(f"--{name} is required for this operation")
    return value


def cmd_map(args) -> int:
    op, arg = args.op, args.arg
    inputs: dict[str, Any] = {"arg": arg}
    for key in ("ell", "k", "i"):
        if getattr(args, key) is not None:
            inputs[key] = getattr(args, key)

    if op in ("pi", "s-vector"):
        v = RootVector.parse(arg)
        out = pi(v) if op == "pi" else apply_s_vector(_need(args.i, "i"), v)
    else:
        lam = parse_partition(arg)
        ell = args.ell
        if op == "phi":
            out = phi(_need(ell, "ell"), lam)
        elif op == "phi-inv":
            out = phi_inv(_need(ell, "ell"), _need(args.k, "k"), lam)
        elif op == "phi-rows":
            out = phi_rows(_need(ell, "ell"), lam)
        elif op == "phi-tilde":
            out = phi_tilde(_need(ell, "ell"), lam)
        elif op == "rho":
            out = rho(_need(ell, "ell"), lam)
        elif op == "upsilon":
            out = upsilon(lam)
        elif op == "pi-inv":
            out = pi_inv(lam, _need(ell, "ell"))
        elif op == "n-vector":
            out = n_vector(lam, _need(ell, "ell"))
        elif op == "s":
            out = apply_s_core(_need(args.i, "i"), lam, _need(ell, "ell"))
        elif op == "abacus":
            text = balanced_flush_abacus(lam, _need(ell, "ell")).render()
            _emit(args, OutputRecord(op, inputs, text), text)
            return 0
        else:  # pragma: no cover - argparse restricts choices
            raise DomainError(f"unknown operation {op}")

    text = format_vector(out) if isinstance(out, RootVector) else format_partition(out)
    _emit(args, OutputRecord(op, inputs, text), text)
    return 0


def cmd_word(args) -> int:
    lam = parse_partition(args.partition)
    inputs = {"ell": args.ell, "partition": format_partition(lam)}
    if not args.subexpr:
        word = canonical_word(lam, args.ell)
        text = f"{word} (length {coxeter_length(lam, args.ell)})".lstrip()
        _emit(args, OutputRecord("word", inputs, {"word": str(word), "length": len(word)}), text)
        return 0
    sub = phi_subexpression(lam, args.ell)
    marked = " ".join(
        f"[s{i}]" if j in sub.kept else f"s{i}" for j, i in enumerate(sub.word)
    )
    kept = ",".join(str(j + 1) for j in sub.kept)
    text = "\n".join([
        f"{marked} (length {len(sub.word)})",
        f"kept: {kept}",
        f"image: {sub.image_word} (length {len(sub.image_word)})",
    ])
    output = {"word": str(sub.word), "kept": [j + 1 for j in sub.kept], "image": str(sub.image_word)}
    _emit(args, OutputRecord("word-subexpr", inputs, output), text)
    return 0


def render(lam: Partition, ell: int, annotate: str) -> str:
    """Fill each box of the diagram with the requested label, one text row per part."""
    if annotate == "residues":
        rows = [[str(residue(Box(i, j), ell)) for j in range(1, p + 1)] for i, p in enumerate(lam, 1)]
    elif annotate == "regions":
        rows = [[str(region(Box(i, j), ell)) for j in range(1, p + 1)] for i, p in enumerate(lam, 1)]
    elif annotate == "hooks":
        rows = [[str(h) for h in row] for row in hooks(lam)]
    elif annotate == "skew":
        flags = skew_boxes(ell, lam)
        rows = [[("*" if f else "") + str(h) for h, f in zip(hrow, frow)]
                for hrow, frow in zip(hooks(lam), flags)]
    else:
        raise DomainError(f"unknown annotation {annotate!r}")
    width = max((len(c) for row in rows for c in row), default=1)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in rows)


def cmd_render(args) -> int:
    lam = parse_partition(args.partition)
    text = render(lam, args.ell, args.annotate)
    inputs = {"ell": args.ell, "partition": format_partition(lam), "annotate": args.annotate}
    record = OutputRecord("render", inputs, text)
    if args.json:
        print(record.to_json())
    elif text:
        print(text)
    return 0


def cmd_alcoves(args) -> int:
    svg = alcove_svg(args.k, args.radius)
    if args.output and args.output != "-":
        with open(args.output, "w") as fh:
            fh.write(svg)
    else:
        sys.stdout.write(svg)
    return 0


def cmd_verify(args) -> int:
    suite = args.suite
    kwargs: dict[str, Any] = {}
    if suite == "counting":
        kwargs = {"ell_max": args.ell_max, "k_max": 10 if args.k_max is None else args.k_max}
    else:
        if args.ell:
            kwargs["ells"] = tuple(args.ell)
        if suite == "roundtrip":
            kwargs.update(max_size=args.max_size, coord_box=args.coord_box)
        elif suite in ("equivariance", "theorem-main"):
            kwargs["coord_box"] = args.coord_box
        elif suite == "commute":
            kwargs["k_max"] = 8 if args.k_max is None else args.k_max
        elif suite == "lengths":
            kwargs["max_boxes"] = args.max_boxes
    report = verify_mod.SUITES[suite](**kwargs)
    record = OutputRecord("verify", {"suite": suite}, {"ok": report.ok, "cases": report.cases,
                                                      "failure": report.failure})
    _emit(args, record, str(report))
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lcores", description="l-core partition combinatorics")
    parser.add_argument("--json", action="store_true", help="one JSON record per output line")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", parents=[common], help="list the ell-cores with a given first part")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--at-most", action="store_true", help="first part <= k instead of = k")
    p.add_argument("--count", action="store_true", help="print only the number of cores")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", parents=[common], help="apply one map to a partition or lattice vector")
    p.add_argument("op", choices=["phi", "phi-inv", "phi-rows", "phi-tilde", "rho", "upsilon",
                                  "pi", "pi-inv", "n-vector", "s", "s-vector", "abacus"])
    p.add_argument("arg", help='partition like "8,5,2,2,1,1,1" or "-", or vector like "(2,0,0,-2)"')
    p.add_argument("--ell", type=int)
    p.add_argument("--k", type=int)
    p.add_argument("--i", type=int, help="generator index for s and s-vector")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("word", parents=[common], help="canonical reduced word and Coxeter length")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--subexpr", action="store_true", help="mark the subexpression kept by phi")
    p.add_argument("partition")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("render", parents=[common], help="draw the diagram filled with labels")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--annotate", choices=["residues", "hooks", "regions", "skew"], default="residues")
    p.add_argument("partition")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("alcoves", parents=[common], help="SVG of the A2 alcove picture (ell = 3)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--radius", type=int, default=3)
    p.add_argument("--output", "-o", help="file to write; standard output by default")
    p.set_defaults(func=cmd_alcoves)

    p = sub.add_parser("verify", parents=[common], help="run an exhaustive verification suite")
    p.add_argument("suite", choices=sorted(verify_mod.SUITES))
    p.add_argument("--ell", type=int, action="append", help="repeatable; suite default if omitted")
    p.add_argument("--ell-max", type=int, default=6)
    p.add_argument("--k-max", type=int)
    p.add_argument("--coord-box", type=int, default=3)
    p.add_argument("--max-size", type=int, default=40)
    p.add_argument("--max-boxes", type=int, default=14)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
