"""Classification tables for the Euclidean and hyperbolic families."""
import csv
import io
import json
import logging
from dataclasses import dataclass
from typing import List, Tuple

from .classify import MatrixAlgebraType, classify_complex, classify_even, classify_real
from .config import DEFAULT_SETTINGS, Settings
from .signature import Signature

logger = logging.getLogger(__name__)

FAMILIES = ("euclidean", "hyperbolic")

HEADERS = {
    "euclidean": ("n", "C^ℂ", "C(n,0)", "C(0,n)", "C₀(n,0)", "θ"),
    "hyperbolic": ("n", "C^ℂ", "C(n-1,1)", "C(1,n-1)", "C₀(n-1,1)", "θ"),
}

CSV_COLUMNS = ("n", "complex", "first", "second", "even", "theta")


@dataclass(frozen=True)
class TableRow:
    n: int
    complex_type: MatrixAlgebraType
    first: Signature
    first_type: MatrixAlgebraType
    second: Signature
    second_type: MatrixAlgebraType
    even_type: MatrixAlgebraType
    theta: str

    def cells(self) -> Tuple[str, ...]:
        return (
            str(self.n),
            str(self.complex_type),
            str(self.first_type),
            str(self.second_type),
            str(self.even_type),
            self.theta,
        )


def _signatures(family: str, n: int) -> Tuple[Signature, Signature]:
    if family == "euclidean":
        return Signature(n, 0), Signature(0, n)
    if family == "hyperbolic":
        return Signature(n - 1, 1), Signature(1, n - 1)
    raise ValueError(f"unknown table family {family!r}; choose from {FAMILIES}")


def theta_label(sig: Signature) -> str:
    """'ε' or 'iε' for even n, blank for odd n."""
    if sig.n % 2:
        return ""
    return "ε" if sig.orientation_square() == 1 else "iε"


def table_row(family: str, n: int, settings: Settings = DEFAULT_SETTINGS) -> TableRow:
    first, second = _signatures(family, n)
    return TableRow(
        n=n,
        complex_type=classify_complex(n, settings),
        first=first,
        first_type=classify_real(first, settings)[0],
        second=second,
        second_type=classify_real(second, settings)[0],
        even_type=classify_even(first, settings),
        theta=theta_label(first),
    )


def generate_table(
    family: str, n_min: int = 4, n_max: int = 11, settings: Settings = DEFAULT_SETTINGS
) -> List[TableRow]:
    if n_min < 1 or n_max < n_min:
        raise ValueError(f"need 1 <= min <= max, got {n_min}..{n_max}")
    rows = [table_row(family, n, settings) for n in range(n_min, n_max + 1)]
    logger.debug("generated %s table for n = %d..%d", family, n_min, n_max)
    return rows


def to_markdown(rows: List[TableRow], family: str) -> str:
    header = HEADERS[family]
    lines = [
        "| " + " | ".join(header) + " |",
        "|" + "---|" * len(header),
    ]
    for row in rows:
        lines.append("| " + " | ".join(row.cells()) + " |")
    return "\n".join(lines) + "\n"


def to_csv(rows: List[TableRow]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.cells())
    return buffer.getvalue()


def _cell(sig: Signature, settings: Settings) -> dict:
    algebra, chain = classify_real(sig, settings)
    return {"p": sig.p, "q": sig.q, "type": algebra.to_json(), "chain": chain.to_json()}


def to_json(rows: List[TableRow], family: str, settings: Settings = DEFAULT_SETTINGS) -> str:
    payload = {
        "family": family,
        "rows": [
            {
                "n": row.n,
                "complex": row.complex_type.to_json(),
                "cells": [_cell(row.first, settings), _cell(row.second, settings)],
                "even": row.even_type.to_json(),
                "theta": row.theta,
            }
            for row in rows
        ],
    }
    return json.dumps(payload, ensure_ascii=False, indent=2)
