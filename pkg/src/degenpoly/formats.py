"""Exact JSON / CSV / LaTeX renderings of polynomials and reports.

Rationals are always written as strings in lowest terms ("3", "-1/2"), never floats.
"""

from __future__ import annotations

import csv
import io
import json
import math
from fractions import Fraction

from .core import VARS, MPoly

LATEX_VARS = ("x", "x_{1}", "x_{2}", r"\lambda")


def rational_str(r) -> str:
    return str(Fraction(r))


def parse_rational(text) -> Fraction:
    return Fraction(str(text).strip())


def poly_to_json(p: MPoly) -> dict:
    return {
        "vars": list(VARS),
        "terms": [{"exp": list(exp), "coef": rational_str(c)} for exp, c in p.terms()],
    }


def poly_from_json(doc) -> MPoly:
    if isinstance(doc, str):
        doc = json.loads(doc)
    names = doc.get("vars", list(VARS))
    if list(names) != list(VARS):
        raise ValueError(f"unexpected variable list {names!r}")
    terms = {}
    for term in doc["terms"]:
        exp = tuple(int(e) for e in term["exp"])
        if exp in terms:
            raise ValueError(f"duplicate exponent {list(exp)}")
        terms[exp] = parse_rational(term["coef"])
    return MPoly(terms)


def valuation_str(v) -> str:
    return "inf" if v == math.inf else str(v)


def dumps(doc) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


# -- LaTeX --------------------------------------------------------------------------


def latex_rational(r) -> str:
    r = Fraction(r)
    if r.denominator == 1:
        return str(r.numerator)
    sign = "-" if r < 0 else ""
    return rf"{sign}\frac{{{abs(r.numerator)}}}{{{r.denominator}}}"


def _latex_monomial(exp) -> str:
    parts = []
    for name, e in zip(LATEX_VARS, exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{{{e}}}")
    return " ".join(parts)


def latex_poly(p: MPoly) -> str:
    terms = p.terms()
    if not terms:
        return "0"
    out = []
    for idx, (exp, c) in enumerate(terms):
        mono = _latex_monomial(exp)
        mag = abs(c)
        if mono:
            body = mono if mag == 1 else f"{latex_rational(mag)} {mono}"
        else:
            body = latex_rational(mag)
        if idx == 0:
            out.append(f"-{body}" if c < 0 else body)
        else:
            out.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(out)


def latex_table(header, rows) -> str:
    lines = [r"\begin{tabular}{" + "l" * len(header) + "}", r"\hline"]
    lines.append(" & ".join(header) + r" \\ \hline")
    for row in rows:
        lines.append(" & ".join(row) + r" \\")
    lines.append(r"\hline")
    lines.append(r"\end{tabular}")
    return "\n".join(lines) + "\n"


def csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# -- polynomials -------------------------------------------------------------------


def poly_csv(p: MPoly) -> str:
    rows = [[*map(str, exp), rational_str(c)] for exp, c in p.terms()]
    return csv_text([*VARS, "coef"], rows)


# -- verification reports ----------------------------------------------------------


def report_to_json(report, timings: bool = False) -> dict:
    return {
        "id": report.id,
        "params": dict(report.params),
        "verdict": report.verdict,
        "residual": report.residual,
        "elapsed_ms": round(report.elapsed * 1000, 3) if timings else None,
    }


def reports_json(reports, n_max, k_max, timings=False) -> str:
    summary = {v: sum(r.verdict == v for r in reports) for v in ("pass", "fail", "skip")}
    doc = {
        "n_max": n_max,
        "k_max": k_max,
        "cases": len({r.id for r in reports}),
        "summary": summary,
        "reports": [report_to_json(r, timings) for r in reports],
    }
    return dumps(doc)


def reports_csv(reports, timings=False) -> str:
    rows = [
        [r.id, r.params_text(), r.verdict, f"{r.elapsed * 1000:.3f}" if timings else ""]
        for r in reports
    ]
    return csv_text(["id", "params", "verdict", "elapsed_ms"], rows)


def reports_latex(reports, timings=False) -> str:
    header = ["id", "params", "verdict"] + (["elapsed (ms)"] if timings else [])
    rows = []
    for r in reports:
        row = [r.id, r.params_text().replace("_", r"\_"), r.verdict]
        if timings:
            row.append(f"{r.elapsed * 1000:.3f}")
        rows.append(row)
    return latex_table(header, rows)


# -- valuation reports --------------------------------------------------------------


def valuation_json(report) -> str:
    doc = {
        "check": report.check,
        "p": report.p,
        "params": {k: rational_str(v) if isinstance(v, Fraction) else v for k, v in report.params.items()},
        "rows": [
            {
                "N": row.N,
                "partial": rational_str(row.partial),
                "limit": rational_str(row.limit),
                "valuation": valuation_str(row.valuation),
            }
            for row in report.rows
        ],
    }
    return dumps(doc)


def valuation_rows(report):
    return [[str(r.N), rational_str(r.partial), rational_str(r.limit), valuation_str(r.valuation)]
            for r in report.rows]


VALUATION_HEADER = ["N", "partial", "limit", "valuation"]
