"""Renderers for CLI output: json, csv, latex (tabular) and plain text."""

import csv
import io
import json
from typing import Iterable, List, Sequence

from pydantic import BaseModel

from common.enums import CheckStatus, OutputFormat
from services.cli.schemas import BasisRecord, SuiteReport, TransitionRecord
from services.linalg.rational import parse_rational

_LATEX_SPECIALS = {
    "\\": r"\textbackslash{}",
    "&": r"\&",
    "%": r"\%",
    "$": r"\$",
    "#": r"\#",
    "_": r"\_",
    "{": r"\{",
    "}": r"\}",
    "^": r"\^{}",
    "~": r"\~{}",
}


def _json(records: Iterable[BaseModel]) -> str:
    return json.dumps([r.model_dump(mode="json") for r in records], indent=2, ensure_ascii=False) + "\n"


def _csv(header: Sequence[str], rows: Iterable[Sequence[object]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buffer.getvalue()


def latex_escape(text: str) -> str:
    return "".join(_LATEX_SPECIALS.get(ch, ch) for ch in text)


def latex_rational(text: str) -> str:
    """"-1/12" -> "-\\frac{1}{12}", "3/1" -> "3"."""
    value = parse_rational(text)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    return f"{sign}\\frac{{{abs(value.numerator)}}}{{{value.denominator}}}"


def _tableau_text(rows: List[List[int]]) -> str:
    return " / ".join(" ".join(str(x) for x in row) for row in rows) or "-"


def _matrix_text(rows: List[List[int]]) -> str:
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in rows) + "]"


def _words_text(record: BasisRecord) -> str:
    return ";".join(f"{' '.join(str(x) for x in term.word)}:{term.coeff}" for term in record.vector)


def _tabular(columns: str, header: Sequence[str], rows: Iterable[Sequence[str]]) -> List[str]:
    lines = [f"\\begin{{tabular}}{{{columns}}}", "\\hline", " & ".join(header) + " \\\\", "\\hline"]
    lines.extend(" & ".join(row) + " \\\\" for row in rows)
    lines.extend(["\\hline", "\\end{tabular}"])
    return lines


def render_basis(records: List[BasisRecord], fmt: OutputFormat) -> str:
    """One record per basis vector."""
    if fmt is OutputFormat.JSON:
        return _json(records)
    if fmt is OutputFormat.CSV:
        return _csv(
            ["degree", "shape", "tableau", "gamma", "weight", "coeff", "norm2", "vector"],
            (
                [r.degree, ",".join(map(str, r.shape)), _tableau_text(r.tableau), _matrix_text(r.gamma),
                 ",".join(map(str, r.weight)), r.coeff, r.norm2, _words_text(r)]
                for r in records
            ),
        )
    if fmt is OutputFormat.LATEX:
        rows = (
            [f"\\texttt{{{_tableau_text(r.tableau)}}}", f"$({','.join(map(str, r.weight))})$",
             f"${latex_rational(r.coeff)}$", f"${latex_rational(r.norm2)}$"]
            for r in records
        )
        return "\n".join(_tabular("llrr", ["$A$", "weight", "$\\lambda!/\\gamma!$", "$\\|v\\|^2$"], rows)) + "\n"
    lines = []
    for r in records:
        lines.append(f"A = {_tableau_text(r.tableau)}  gamma = {_matrix_text(r.gamma)}  coeff = {r.coeff}  norm2 = {r.norm2}")
    lines.append(f"{len(records)} basis vectors")
    return "\n".join(lines) + "\n"


def render_report(report: SuiteReport, fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return _json([report])
    if fmt is OutputFormat.CSV:
        return _csv(["suite", "name", "anchor", "status", "detail"], ([report.suite.value, c.name, c.anchor, c.status.value, c.detail] for c in report.checks))
    if fmt is OutputFormat.LATEX:
        rows = ([f"\\texttt{{{latex_escape(c.name)}}}", c.status.value] for c in report.checks)
        return "\n".join(_tabular("ll", ["identity", "status"], rows)) + "\n"
    lines = [f"suite {report.suite.value}: n={report.n} p={report.p} degree={report.degree} seed={report.seed}"]
    for c in report.checks:
        detail = f" ({c.detail})" if c.detail else ""
        lines.append(f"  [{c.status.value}] {c.name} :: {c.anchor}{detail}")
    failed = sum(1 for c in report.checks if c.status is CheckStatus.FAILED)
    lines.append(f"{len(report.checks)} checks, {failed} failed")
    return "\n".join(lines) + "\n"


def render_transition(records: List[TransitionRecord], fmt: OutputFormat) -> str:
    if fmt is OutputFormat.JSON:
        return _json(records)
    if fmt is OutputFormat.CSV:
        rows = []
        for r in records:
            for a, (t_row, inv_row) in enumerate(zip(r.T, r.T_inverse)):
                for b in range(len(t_row)):
                    rows.append([
                        ",".join(map(str, r.shape)), ",".join(map(str, r.weight)),
                        _tableau_text(r.tableaux[a]), _tableau_text(r.tableaux[b]), t_row[b], inv_row[b],
                    ])
        return _csv(["shape", "weight", "row", "column", "T", "T_inverse"], rows)
    if fmt is OutputFormat.LATEX:
        lines: List[str] = []
        for r in records:
            labels = [f"\\texttt{{{_tableau_text(t)}}}" for t in r.tableaux]
            lines.append(f"% lambda = ({','.join(map(str, r.shape))}), weight ({','.join(map(str, r.weight))})")
            rows = ([labels[a]] + [f"${latex_rational(x)}$" for x in row] for a, row in enumerate(r.T))
            lines.extend(_tabular("l" + "r" * len(r.tableaux), ["$T$"] + labels, rows))
            for bracket in r.brackets:
                body = " + ".join(bracket.latex).replace("+ -", "- ") or "0"
                lines.append(f"% v_A for A = {_tableau_text(bracket.tableau)}")
                lines.append(f"$v_{{A}} = {body}$")
        return "\n".join(lines) + "\n"
    lines = []
    for r in records:
        lines.append(f"lambda = ({','.join(map(str, r.shape))})  weight = ({','.join(map(str, r.weight))})  triangular = {r.triangular}")
        for a, t in enumerate(r.tableaux):
            lines.append(f"  T[{_tableau_text(t)}] = ({', '.join(r.T[a])})")
        for a, t in enumerate(r.tableaux):
            lines.append(f"  T^-1[{_tableau_text(t)}] = ({', '.join(r.T_inverse[a])})")
        for bracket in r.brackets:
            lines.append(f"  v_A for A = {_tableau_text(bracket.tableau)}:")
            lines.extend(f"    {term}" for term in bracket.terms)
    return "\n".join(lines) + "\n"
