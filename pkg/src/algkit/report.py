"""Rendering of spaces and corpus reports as text, JSON or LaTeX."""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Sequence

from .algebra import StructureConstants
from .linalg import RationalMatrix
from .serialize import dumps, space_to_json
from .structure import AlgebraReport

SPACE_TITLES = {
    "derivations": "Der",
    "centroid": "Gamma",
    "central_derivations": "C",
}
SPACE_TEX = {"Der": "\\mathrm{Der}", "Gamma": "\\Gamma", "C": "C"}


def _latex_class(name: str) -> str:
    m = re.fullmatch(r"As(\d+)_(\d+)", name)
    if m:
        return f"$As_{{{m.group(1)}}}^{{{m.group(2)}}}$"
    return "\\texttt{" + name.replace("_", "\\_") + "}"


def _latex_matrix(m: RationalMatrix) -> str:
    def cell(x):
        if x.denominator == 1:
            return str(x.numerator)
        sign = "-" if x < 0 else ""
        return f"{sign}\\frac{{{abs(x.numerator)}}}{{{x.denominator}}}"
    body = " \\\\\n".join(" & ".join(cell(x) for x in m.row(i)) for i in range(m.rows))
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def _params_text(sc: StructureConstants) -> str:
    if not sc.parameters:
        return "none"
    return ", ".join(f"{p.name}={p.value}" for p in sc.parameters)


def render_space(kind: str, sc: StructureConstants, matrices: Sequence[RationalMatrix], fmt: str,
                 extra: dict | None = None) -> str:
    if fmt == "json":
        data = space_to_json(kind, sc, list(matrices))
        if extra:
            data.update(extra)
        return dumps(data)
    symbol = SPACE_TITLES[kind]
    if fmt == "latex":
        lines = [f"% {symbol}({sc.name or 'A'}), params: {_params_text(sc)}",
                 f"\\[ \\dim {SPACE_TEX[symbol]}(A) = {len(matrices)} \\]"]
        for m in matrices:
            lines.append("\\[\n" + _latex_matrix(m) + "\n\\]")
        return "\n".join(lines) + "\n"
    lines = [f"{symbol}({sc.name or 'A'})  params: {_params_text(sc)}", f"dim {len(matrices)}"]
    for idx, m in enumerate(matrices, start=1):
        lines.append(f"basis {idx}:")
        lines.append(m.pretty())
    if extra:
        for k, v in extra.items():
            lines.append(f"{k}: {v}")
    return "\n".join(lines) + "\n"


def _discrepancy_text(rep: AlgebraReport) -> str:
    out = []
    for d in rep.discrepancies:
        if d["kind"] == "dim_der":
            out.append(f"Der: table {d['expected']}, computed {d['computed']}")
        elif d["kind"] == "dim_centroid":
            out.append(f"Gamma: table {d['expected']}, computed {d['computed']}")
        elif d["kind"] == "associativity":
            out.append("not associative at ({},{},{})".format(*d["witness"]))
    return "; ".join(out)


def report_json(reports: Sequence[AlgebraReport]) -> str:
    return dumps({
        "entries": [r.to_json() for r in reports],
        "characteristically_nilpotent": [r.name for r in reports if r.characteristically_nilpotent],
        "discrepancy_count": sum(len(r.discrepancies) for r in reports),
        "error_count": sum(1 for r in reports if r.error),
    })


def report_text(reports: Sequence[AlgebraReport]) -> str:
    header = ("IC", "Der", "Gamma", "C(A)", "flags", "discrepancies")
    rows = []
    for r in reports:
        if r.error:
            rows.append((r.name, "-", "-", "-", "ERROR", r.error))
            continue
        params = ",".join(f"{k}={Fraction(v)}" for k, v in r.params.items())
        name = f"{r.name}({params})" if params else r.name
        rows.append((name, str(r.dim_der), str(r.dim_centroid), str(r.dim_central_der),
                     "CN" if r.characteristically_nilpotent else "", _discrepancy_text(r)))
    widths = [max(len(row[i]) for row in [header, *rows]) for i in range(5)]
    lines = []
    for row in [header, *rows]:
        cells = [row[i].ljust(widths[i]) for i in range(5)] + [row[5]]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def report_latex(reports: Sequence[AlgebraReport]) -> str:
    """Standalone document; the tabular mirrors the IC | Dim(Der) | Dim(Gamma) layout."""
    lines = [
        "\\documentclass{article}",
        "\\usepackage{amsmath}",
        "\\begin{document}",
        "\\begin{center}",
        "\\small",
        "\\begin{tabular}{|c|c|c|}",
        "\\hline",
        "\\textbf{IC} & \\textbf{Dim(Der)} & \\textbf{Dim($\\Gamma$)} \\\\",
        "\\hline",
    ]
    for r in reports:
        ic = _latex_class(r.name)
        if r.characteristically_nilpotent:
            ic += " (CN)"
        if r.error:
            lines.append(f"{ic} & \\multicolumn{{2}}{{c|}}{{error}} \\\\")
            continue
        der, gam = str(r.dim_der), str(r.dim_centroid)
        for d in r.discrepancies:
            if d["kind"] == "dim_der":
                der = f"{d['computed']} ({d['expected']})$^\\dagger$"
            elif d["kind"] == "dim_centroid":
                gam = f"{d['computed']} ({d['expected']})$^\\dagger$"
        lines.append(f"{ic} & {der} & {gam} \\\\")
    lines += [
        "\\hline",
        "\\end{tabular}",
        "\\end{center}",
        "",
        "\\noindent $^\\dagger$ computed value differs from the published table (published value in parentheses).",
        "CN marks the characteristically nilpotent class.",
        "\\end{document}",
    ]
    return "\n".join(lines) + "\n"


def render_report(reports: Sequence[AlgebraReport], fmt: str) -> str:
    return {"json": report_json, "latex": report_latex, "text": report_text}[fmt](reports)
