"""Command-line front end.

Exit codes: 0 ok, 1 parse error, 2 not associative, 3 parameter error,
4 I/O error.

Examples::

    algkit check my_algebra.alg
    algkit der As4_1
    algkit centroid As4_9 --params alpha=3 --format json
    algkit der As4_9 --sweep alpha=2,3,-1
    algkit report --format latex --output tables.tex
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .algebra import StructureConstants, associativity_witness, center, commutant_center
from .centroid import central_derivations, centroid
from .corpus import load_corpus
from .derivations import derivations
from .errors import CorpusError, ParameterError, ParseError
from .parsing import parse_algebra
from .report import render_report, render_space
from .serialize import dumps
from .structure import classify, dimension_report

EXIT_OK, EXIT_PARSE, EXIT_ASSOC, EXIT_PARAM, EXIT_IO = 0, 1, 2, 3, 4


class CLIError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _parse_binding(text: str) -> tuple[str, str]:
    if "=" not in text:
        raise CLIError(f"parameter binding must look like name=value, got {text!r}", EXIT_PARAM)
    name, value = text.split("=", 1)
    return name.strip(), value.strip()


def _rational(name: str, value: str) -> Fraction:
    try:
        return Fraction(value)
    except ValueError:
        raise CLIError(f"parameter {name} needs a rational value, got {value!r}", EXIT_PARAM)


def _params(args) -> dict[str, Fraction]:
    out = {}
    for item in args.params or []:
        name, value = _parse_binding(item)
        out[name] = _rational(name, value)
    return out


def _read_definition(target: str, corpus: str | None) -> tuple[str, str]:
    """Definition text and algebra name for a file path or a corpus class name."""
    path = Path(target)
    if path.exists():
        try:
            return path.read_text(encoding="utf-8"), path.stem
        except OSError as exc:
            raise CLIError(f"cannot read {target}: {exc}", EXIT_IO)
    try:
        entries = load_corpus(corpus, strict=False)
    except CorpusError:
        entries = []
    for e in entries:
        if e.name == target:
            return e.definition, e.name
    raise CLIError(f"no such file or corpus class: {target}", EXIT_IO)


def _load(args, overrides=None) -> StructureConstants:
    text, name = _read_definition(args.file, args.corpus)
    return parse_algebra(text, name=name, overrides=overrides if overrides is not None else _params(args))


def _emit(args, text: str) -> None:
    if args.output:
        try:
            Path(args.output).write_text(text, encoding="utf-8")
        except OSError as exc:
            raise CLIError(f"cannot write {args.output}: {exc}", EXIT_IO)
    else:
        sys.stdout.write(text)


def cmd_check(args) -> int:
    sc = _load(args)
    w = associativity_witness(sc)
    if w is not None:
        i, j, k = w
        print(f"{sc.name}: not associative: (e{i}e{j})e{k} != e{i}(e{j}e{k}) at triple ({i},{j},{k})",
              file=sys.stderr)
        return EXIT_ASSOC
    _emit(args, f"{sc.name}: ok (dim {sc.dim}, associative)\n")
    return EXIT_OK


def _space_matrices(kind: str, sc: StructureConstants):
    if kind == "derivations":
        return derivations(sc).matrices(), None
    if kind == "centroid":
        return centroid(sc).matrices(), None
    cd = central_derivations(sc)
    extra = {
        "matches_annihilator_definition": cd.matches_annihilator_definition,
        "matches_commutant_definition": cd.matches_commutant_definition,
    }
    return cd.matrices(), extra


def _sweep(args, kind: str) -> int:
    name, values = _parse_binding(args.sweep)
    base = _params(args)
    lines, dims = [], []
    for v in values.split(","):
        value = _rational(name, v.strip())
        sc = _load(args, dict(base, **{name: value}))
        mats, _ = _space_matrices(kind, sc)
        dims.append(len(mats))
        lines.append(f"{name}={value}: dim {len(mats)}")
    if len(set(dims)) > 1:
        lines.append(f"dimension jumps across {name}: {sorted(set(dims))}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def _space_command(kind: str):
    def run(args) -> int:
        if getattr(args, "sweep", None):
            return _sweep(args, kind)
        sc = _load(args)
        mats, extra = _space_matrices(kind, sc)
        _emit(args, render_space(kind, sc, mats, args.format, extra))
        return EXIT_OK
    return run


def cmd_classify(args) -> int:
    sc = _load(args)
    flags = classify(sc)
    ann, com = center(sc), commutant_center(sc)
    if args.format == "json":
        data = {"algebra": sc.name, "flags": flags.to_json(),
                "center_dim": {"annihilator": ann.dim, "commutant": com.dim}}
        _emit(args, dumps(data))
        return EXIT_OK
    lines = [f"{sc.name}"]
    for k, v in flags.to_json().items():
        lines.append(f"  {k}: {v}")
    lines.append(f"  center (annihilator) dim: {ann.dim}")
    lines.append(f"  center (commutant) dim: {com.dim}")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_report(args) -> int:
    try:
        entries = load_corpus(args.corpus, strict=False)
    except CorpusError as exc:
        raise CLIError(str(exc), EXIT_IO)
    overrides = {}
    params = _params(args)
    if params:
        # apply a binding to every entry that declares that parameter
        for e in entries:
            declared = {p.name for p in e.parameters}
            hit = {k: v for k, v in params.items() if k in declared}
            if hit:
                overrides[e.name] = hit
    reports = dimension_report(entries, overrides)
    _emit(args, render_report(reports, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="algkit",
        description="Derivations, centroids and structure flags of algebras given by structure constants.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_file=True, formats=("text", "json", "latex")):
        if with_file:
            p.add_argument("file", help="definition file, or a corpus class name such as As4_1")
        p.add_argument("--params", action="append", metavar="NAME=VALUE",
                       help="rebind a declared parameter (repeatable)")
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--corpus", metavar="PATH", help="corpus directory (default: bundled, or $ALGKIT_CORPUS_DIR)")
        p.add_argument("--output", metavar="PATH", help="write output here instead of stdout")

    p = sub.add_parser("check", help="parse a definition and check associativity")
    common(p)
    p.set_defaults(func=cmd_check)

    for name, kind in (("der", "derivations"), ("centroid", "centroid"), ("central-der", "central_derivations")):
        p = sub.add_parser(name, help=f"basis and dimension of the {kind.replace('_', ' ')} space")
        common(p)
        if name != "central-der":
            p.add_argument("--sweep", metavar="NAME=V1,V2,...",
                           help="report the dimension at each listed parameter value")
        p.set_defaults(func=_space_command(kind))

    p = sub.add_parser("classify", help="nilpotency and characteristic nilpotency flags")
    common(p, formats=("text", "json"))
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("report", help="dimension tables for the whole corpus")
    common(p, with_file=False)
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ParameterError as exc:
        print(f"parameter error: {exc}", file=sys.stderr)
        return EXIT_PARAM


if __name__ == "__main__":
    sys.exit(main())
