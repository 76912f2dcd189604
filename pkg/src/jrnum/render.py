"""Serialization of results: canonical rational strings, Surd records, CSV."""

from __future__ import annotations

import json
from fractions import Fraction

from .field import FieldDescriptor
from .lattice import BoundsReport, JRResult
from .numeth import Surd

CSV_HEADER = "a,b,r,N,u,v,t,s_squared,jr_decimal"


def frac_str(x: Fraction) -> str:
    """Lowest terms, q >= 1; integers render without the denominator."""
    return str(Fraction(x))


def surd_record(s: Surd, digits: int = 10) -> dict:
    return {
        "int": s.int_part,
        "coeff": frac_str(s.coeff),
        "radicand": s.radicand,
        "decimal": s.decimal(digits),
    }


def witness_records(result: JRResult) -> list[dict]:
    return [
        {"k": w.k, "x": frac_str(w.x), "y": frac_str(w.y)} for w in result.witnesses
    ]


def bounds_record(report: BoundsReport) -> dict:
    return {
        "ok": report.ok,
        "checks": [
            {
                "name": c.name,
                "applicable": c.applicable,
                "passed": c.passed,
                "detail": c.detail,
            }
            for c in report.checks
        ],
    }


def output_record(
    desc: FieldDescriptor,
    result: JRResult,
    bounds: BoundsReport | None = None,
    digits: int = 10,
) -> dict:
    rec = {
        "triple": {"a": desc.a, "b": desc.b, "r": desc.r},
        "descriptor": {
            "N": desc.big_n,
            "u": desc.u,
            "v": desc.v,
            "t": desc.t,
            "cos_theta": frac_str(desc.cos_theta),
        },
        "s_squared": frac_str(result.s_squared),
        "s": surd_record(result.s, digits),
        "jr": surd_record(result.jr, digits),
        "witnesses": witness_records(result),
    }
    if bounds is not None:
        rec["bounds"] = bounds_record(bounds)
    return rec


def dumps(record) -> str:
    """The one JSON encoding used everywhere, so round-trips are byte-identical."""
    return json.dumps(record, indent=2, sort_keys=False)


def scan_csv_row(desc: FieldDescriptor, result: JRResult, digits: int = 10) -> str:
    return ",".join(
        [
            str(desc.a),
            str(desc.b),
            str(desc.r),
            str(desc.big_n),
            str(desc.u),
            str(desc.v),
            str(desc.t),
            frac_str(result.s_squared),
            result.jr.decimal(digits),
        ]
    )
