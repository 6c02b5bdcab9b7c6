"""Exact-value codecs and table/report writers."""

import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import pandas as pd

from ..core.polyarith import Poly
from .exceptions import SerializationError
from .types import Certificate, Report

logger = logging.getLogger(__name__)


def rational_to_str(value: Union[int, Fraction]) -> str:
    """Always "num/den", denominator included."""
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def rational_from_str(text: str) -> Fraction:
    try:
        num, _, den = str(text).strip().partition("/")
        return Fraction(int(num), int(den) if den else 1)
    except (ValueError, ZeroDivisionError) as e:
        raise SerializationError(f"Invalid rational literal: {text!r}", details=str(e))


def poly_to_json(p: Poly) -> List[str]:
    """Ascending coefficients as "num/den" strings."""
    return [rational_to_str(c) for c in p.coeffs]


def poly_from_json(coeffs: Sequence[str]) -> Poly:
    return Poly(tuple(rational_from_str(c) for c in coeffs))


def format_cell(value: Fraction) -> Union[int, str]:
    """Table cells: plain integers when integral, otherwise "num/den"."""
    if value.denominator == 1:
        return int(value.numerator)
    return rational_to_str(value)


def table_frame(rows: Sequence[Tuple[int, Poly]]) -> pd.DataFrame:
    """
    One row per n, columns c0..cN for the coefficients of x^0..x^N.

    Cells hold exact Python ints or "num/den" strings (object dtype); cells
    beyond a row's degree are left blank.
    """
    width = max((len(p.coeffs) for _, p in rows), default=0)
    records: List[Dict[str, Any]] = []
    for n, p in rows:
        record: Dict[str, Any] = {"n": n}
        for k in range(width):
            record[f"c{k}"] = format_cell(p.coeffs[k]) if k < len(p.coeffs) else ""
        records.append(record)
    columns = ["n"] + [f"c{k}" for k in range(width)]
    return pd.DataFrame(records, columns=columns, dtype=object)


def table_json(family: str, rows: Sequence[Tuple[int, Poly]]) -> Dict[str, Any]:
    return {
        "family": family,
        "rows": [{"n": n, "coeffs": [format_cell(c) for c in p.coeffs]} for n, p in rows],
    }


def _open_target(path: Optional[Path]) -> Any:
    if path is None:
        return sys.stdout
    path.parent.mkdir(parents=True, exist_ok=True)
    return open(path, "w", encoding="utf-8", newline="")


def write_json(data: Any, path: Optional[Path] = None) -> None:
    """Write JSON to path, or stdout when path is None."""
    target = _open_target(path)
    try:
        json.dump(data, target, indent=2)
        target.write("\n")
    finally:
        if target is not sys.stdout:
            target.close()
    if path is not None:
        logger.info(f"Wrote {path}")


def write_frame(frame: pd.DataFrame, path: Optional[Path] = None) -> None:
    target = _open_target(path)
    try:
        frame.to_csv(target, index=False)
    finally:
        if target is not sys.stdout:
            target.close()
    if path is not None:
        logger.info(f"Wrote {path}")


def write_table(family: str, rows: Sequence[Tuple[int, Poly]], fmt: str,
                path: Optional[Path] = None) -> None:
    if fmt == "json":
        write_json(table_json(family, rows), path)
    else:
        write_frame(table_frame(rows), path)


def report_frame(report: Report) -> pd.DataFrame:
    return pd.DataFrame(report.to_records(), columns=["check", "n", "expected", "got", "pass"])


def write_report(report: Report, fmt: str, path: Optional[Path] = None) -> None:
    if fmt == "json":
        write_json(report.to_records(), path)
    else:
        write_frame(report_frame(report), path)


def certificates_to_json(certificates: Sequence[Certificate]) -> List[Dict[str, Any]]:
    return [c.model_dump(mode="json") for c in certificates]


def certificates_from_json(data: Sequence[Dict[str, Any]]) -> List[Certificate]:
    return [Certificate.model_validate(item) for item in data]


def certificate_frame(certificates: Sequence[Certificate]) -> pd.DataFrame:
    """One summary line per certificate."""
    records = [
        {
            "label": c.label or "",
            "claim": c.claim.value,
            "degrees": ";".join(str(len(p) - 1) for p in c.polys),
            "roots": len(c.evidence.roots),
            "checkpoints": len(c.evidence.checkpoints),
            "pairs": len(c.evidence.pairs),
            "verdict": c.verdict.value,
        }
        for c in certificates
    ]
    columns = ["label", "claim", "degrees", "roots", "checkpoints", "pairs", "verdict"]
    return pd.DataFrame(records, columns=columns)


def write_certificates(certificates: Sequence[Certificate], fmt: str,
                       path: Optional[Path] = None) -> None:
    if fmt == "json":
        write_json(certificates_to_json(certificates), path)
    else:
        write_frame(certificate_frame(certificates), path)
