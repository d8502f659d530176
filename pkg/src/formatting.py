"""Rendering of reports as JSON-ready dictionaries and as plain text."""

from __future__ import annotations

import json
from dataclasses import asdict
from fractions import Fraction
from typing import Any, Dict, Optional, Tuple

from cohomology_bases import CohomologyReport, Provenance
from graded_oracle import CrosscheckRecord, GradedDimsRow, OracleReport
from milnor_algebra import MilnorData
from poisson_calculus import Bivector, PoissonGerm, VectorField
from qpoly import Weights, parse_poly


def rational_text(value: Fraction) -> str:
    return str(Fraction(value))


def parse_vector_field(text: str, w: Weights) -> VectorField:
    """Inverse of VectorField.to_text."""
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")*Dy") and ")*Dx + (" in body):
        raise ValueError(f"not a vector field: {text!r}")
    a_text, b_text = body[1:-len(")*Dy")].split(")*Dx + (", 1)
    return VectorField(parse_poly(a_text), parse_poly(b_text), w)


def parse_bivector(text: str, w: Weights) -> Bivector:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")*Dx^Dy")):
        raise ValueError(f"not a bivector: {text!r}")
    return Bivector(parse_poly(body[1:-len(")*Dx^Dy")]), w)


def oracle_to_dict(report: OracleReport) -> Dict[str, Any]:
    return {
        "rows": [asdict(row) for row in report.rows],
        "totals": list(report.totals),
        "stabilized": report.stabilized,
        "cutoff": report.cutoff,
        "margin": report.margin,
        "graded": report.graded,
    }


def oracle_from_dict(payload: Dict[str, Any]) -> OracleReport:
    return OracleReport(
        rows=tuple(GradedDimsRow(**row) for row in payload["rows"]),
        cutoff=payload["cutoff"],
        totals=tuple(payload["totals"]),
        stabilized=payload["stabilized"],
        graded=payload.get("graded", True),
        margin=payload.get("margin", 0),
    )


def germ_to_dict(germ: PoissonGerm) -> Dict[str, Any]:
    w = germ.weights
    return {
        "weights": [w.w1, w.w2],
        "f": germ.f.to_text(w),
        "h": germ.h.to_text(w),
        "d": germ.d,
        "s": germ.s,
    }


def report_to_dict(
    germ: PoissonGerm,
    report: CohomologyReport,
    oracle: Optional[OracleReport] = None,
) -> Dict[str, Any]:
    payload = germ_to_dict(germ)
    payload.update(
        {
            "r": report.r,
            "c": report.c if report.c is not None else "infinite",
            "h0": report.h0_dim,
            "h1": report.h1_dim,
            "h2": report.h2_dim,
            "h1_basis": [field.to_text() for field in report.h1_basis],
            "h2_basis": [bivector.to_text() for bivector in report.h2_basis],
            "provenance": report.provenance.value,
            "oracle": oracle_to_dict(oracle) if oracle is not None else None,
        }
    )
    return payload


def report_from_dict(payload: Dict[str, Any]) -> Tuple[CohomologyReport, Optional[OracleReport]]:
    w = Weights(*payload["weights"])
    c = payload["c"]
    report = CohomologyReport(
        h0_dim=payload["h0"],
        h1_dim=payload["h1"],
        h2_dim=payload["h2"],
        h1_basis=tuple(parse_vector_field(text, w) for text in payload["h1_basis"]),
        h2_basis=tuple(parse_bivector(text, w) for text in payload["h2_basis"]),
        r=payload["r"],
        c=None if c == "infinite" else c,
        provenance=Provenance(payload["provenance"]),
    )
    oracle = oracle_from_dict(payload["oracle"]) if payload.get("oracle") is not None else None
    return report, oracle


def oracle_as_report(oracle: OracleReport, r: int, c: Optional[int]) -> CohomologyReport:
    """The oracle's dimensions in report form; it produces no representatives."""
    h0_dim, h1_dim, h2_dim = oracle.totals
    return CohomologyReport(
        h0_dim=h0_dim,
        h1_dim=h1_dim,
        h2_dim=h2_dim,
        h1_basis=(),
        h2_basis=(),
        r=r,
        c=c,
        provenance=Provenance.ORACLE,
    )


def crosscheck_to_dict(record: CrosscheckRecord) -> Dict[str, Any]:
    return {
        "theorem": list(record.theorem),
        "oracle": list(record.oracle),
        "agree": list(record.agree),
        "mismatch_degree": record.mismatch_degree,
        "stabilized": record.stabilized,
        "notes": list(record.notes),
    }


def milnor_to_dict(data: MilnorData) -> Dict[str, Any]:
    return {
        "c": data.c if data.is_finite else "infinite",
        "basis": [m.to_text() or "1" for m in data.basis],
        "bound": data.bound,
        "checked_through": data.checked_through,
    }


def dumps(payload: Dict[str, Any]) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False)


def render_text(payload: Dict[str, Any], indent: int = 0) -> str:
    """Human-readable ``key: value`` lines in payload order."""
    pad = "  " * indent
    lines = []
    for key, value in payload.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(f"{pad}  - " + ", ".join(f"{k}={v}" for k, v in item.items()))
        elif isinstance(value, list) and value and isinstance(value[0], str) and key != "weights":
            lines.append(f"{pad}{key}:")
            lines.extend(f"{pad}  {item}" for item in value)
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: {', '.join(str(item) for item in value)}")
        elif value is None:
            lines.append(f"{pad}{key}: -")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(line for line in lines if line)
