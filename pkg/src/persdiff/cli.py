"""Command line interface.

Subcommands: ``validate``, ``diagram``, ``barcode``, ``blankets``,
``verify``.  Exit codes: 0 success, 1 verification counterexamples,
2 validation failure, 3 parse/usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .diagrams import (
    barcode_document,
    barcode_svg,
    barcode_text,
    compute_barcode,
    compute_diagram,
    diagram_csv,
    diagram_document,
    open_repr,
)
from .fields import InvalidField
from .io import InputError, load_complex
from .oracle import NotAChain
from .posets import (
    BlanketMode,
    EMPTY_OPEN,
    InvalidPair,
    InvalidPoset,
    UnknownElement,
    degree_blankets,
    make_pair,
)
from .verify import run_verification

EXIT_OK = 0
EXIT_COUNTEREXAMPLES = 1
EXIT_INVALID = 2
EXIT_USAGE = 3


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _dump(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _parse_open(k, spec: str):
    """An open from generator grades: 'g' or 'g1;g2', vectors as 'a,b'."""
    text = spec.strip()
    if text.lower() in ("inf", "none", "empty"):
        return EMPTY_OPEN
    generators = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        parts = [c.strip() for c in chunk.split(",")]
        if all(p.lstrip("-").isdigit() for p in parts):
            gen = int(parts[0]) if len(parts) == 1 else tuple(int(c) for c in parts)
            if len(parts) == 1 and k.poset.grades and len(k.poset.grades[0]) == 1:
                gen = (int(parts[0]),)
        else:
            gen = chunk
        generators.append(gen)
    if not generators:
        raise _UsageError(f"empty open spec {spec!r}")
    return k.poset.closure(generators)


def _cmd_validate(args) -> int:
    k = load_complex(args.input, field_override=args.field)
    violations = k.validate()
    if args.json:
        doc = {
            "format_version": 1,
            "kind": "validation",
            "ok": not violations,
            "violations": [
                {"kind": v.kind, "detail": v.detail, "cells": list(v.cells)} for v in violations
            ],
        }
        sys.stdout.write(_dump(doc))
    else:
        for v in violations:
            sys.stdout.write(str(v) + "\n")
        sys.stdout.write("valid\n" if not violations else f"{len(violations)} violation(s)\n")
    return EXIT_OK if not violations else EXIT_INVALID


def _require_valid(k) -> None:
    violations = k.validate()
    if violations:
        for v in violations:
            sys.stderr.write(str(v) + "\n")
        raise SystemExit(EXIT_INVALID)


def _cmd_diagram(args) -> int:
    k = load_complex(args.input, field_override=args.field)
    _require_valid(k)
    mode = BlanketMode.parse(args.mode)
    degrees = None if args.degree is None else [args.degree]
    entries = compute_diagram(k, degrees=degrees, mode=mode, include_zero=args.all)
    if args.csv:
        sys.stdout.write(diagram_csv(entries))
    else:
        sys.stdout.write(_dump(diagram_document(k, entries, mode)))
    return EXIT_OK


def _cmd_barcode(args) -> int:
    k = load_complex(args.input, field_override=args.field)
    _require_valid(k)
    try:
        bars = compute_barcode(k, mode=BlanketMode.parse(args.mode))
    except NotAChain:
        raise NotAChain(
            "barcodes need a 1-parameter (chain) poset; use the diagram command instead"
        ) from None
    if args.svg:
        Path(args.svg).write_text(barcode_svg(bars))
    if args.json:
        sys.stdout.write(_dump(barcode_document(k, bars)))
    else:
        sys.stdout.write(barcode_text(bars))
    return EXIT_OK


def _cmd_blankets(args) -> int:
    k = load_complex(args.input, field_override=args.field)
    _require_valid(k)
    mode = BlanketMode.parse(args.mode)
    birth = _parse_open(k, args.birth)
    death = _parse_open(k, args.death)
    pair = make_pair(k.poset, birth, death)
    found = degree_blankets(k.poset, pair, args.steps, mode)
    listed = sorted(
        found,
        key=lambda y: (y.birth.sorted_members(), y.death.sorted_members()),
    )
    p = k.poset
    if args.json:
        doc = {
            "format_version": 1,
            "kind": "blankets",
            "steps": args.steps,
            "mode": mode.value,
            "pairs": [
                {
                    "birth": list(open_repr(p, y.birth)) if not y.birth.is_empty else [],
                    "death": "inf" if y.death.is_empty else list(open_repr(p, y.death)),
                }
                for y in listed
            ],
        }
        sys.stdout.write(_dump(doc))
    else:
        for y in listed:
            b = open_repr(p, y.birth)
            d = "inf" if y.death.is_empty else open_repr(p, y.death)
            sys.stdout.write(f"{list(b)} {d if d == 'inf' else list(d)}\n")
        if not listed:
            sys.stdout.write("(no blankets)\n")
    return EXIT_OK


def _cmd_verify(args) -> int:
    k = load_complex(args.input, field_override=args.field)
    _require_valid(k)
    report = run_verification(
        k, samples=args.samples, seed=args.seed, include_oracle=args.oracle
    )
    if args.json:
        sys.stdout.write(_dump(report.as_json()))
    else:
        sys.stdout.write(report.as_text())
    return EXIT_OK if report.ok else EXIT_COUNTEREXAMPLES


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="persdiff",
        description="Generalized persistence diagrams via blanket-shift finite differences.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("input", help="input JSON document")
        sp.add_argument("--field", default=None, help="override field: gf2 | gf:p | rational")

    sp = sub.add_parser("validate", help="check an input document")
    common(sp)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_validate)

    sp = sub.add_parser("diagram", help="generalized persistence diagram")
    common(sp)
    sp.add_argument("--degree", type=int, default=None, help="restrict to one homological degree")
    sp.add_argument("--mode", default="full", help="blanket mode: full | principal")
    sp.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")
    sp.add_argument("--all", action="store_true", help="include zero multiplicities")
    sp.set_defaults(func=_cmd_diagram)

    sp = sub.add_parser("barcode", help="1-parameter barcode")
    common(sp)
    sp.add_argument("--mode", default="full")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--svg", default=None, help="also write a static SVG to this path")
    sp.set_defaults(func=_cmd_barcode)

    sp = sub.add_parser("blankets", help="list iterated blankets of a pair of opens")
    common(sp)
    sp.add_argument("--birth", required=True, help="birth open generators, e.g. '1' or '1,1;0,2'")
    sp.add_argument("--death", required=True, help="death open generators, or 'inf'")
    sp.add_argument("--steps", type=int, default=1, help="number of blanket steps (degree)")
    sp.add_argument("--mode", default="full")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_blankets)

    sp = sub.add_parser("verify", help="sampled exact self-checks")
    common(sp)
    sp.add_argument("--samples", type=int, default=50)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--oracle", action="store_true", help="also compare against the reduction oracle")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (InputError, InvalidField, InvalidPoset, InvalidPair, UnknownElement, NotAChain) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
