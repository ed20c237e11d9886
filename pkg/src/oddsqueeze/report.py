"""Suite configuration, report document assembly and deterministic output.

Reports are emitted as JSON (one top-level object; exact rationals are
serialized as strings, never floats, both in "num/den" and decimal form)
or CSV with the fixed header

    check_id,params,lhs,rhs,abs_err,rel_err,exact,pass

Records are sorted by (check_id, parameters) before emission, so a given
configuration always produces byte-identical output apart from the
wall-clock duration field.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .records import VerificationRecord

SUITES = (
    "jacobi",
    "racah",
    "ipn",
    "identities",
    "operator",
    "completeness",
    "even-divergence",
    "all",
)
MODES = ("exact", "float", "both")
FORMATS = ("json", "csv")


@dataclass(frozen=True)
class SuiteConfig:
    """Validated run configuration; all checks are deterministic (no seed)."""

    suite: str
    p_max: int = 10
    n_max: int | None = None
    mode: str = "both"
    tol: float | None = None
    format: str = "json"
    output_path: str | None = None
    dim: int | None = None
    xi: float | None = None
    phi: float | None = None

    def __post_init__(self) -> None:
        if self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}; expected one of {SUITES}")
        if self.mode not in MODES:
            raise ValueError(f"unknown mode {self.mode!r}; expected one of {MODES}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}; expected one of {FORMATS}")
        n_max = self.p_max if self.n_max is None else self.n_max
        object.__setattr__(self, "n_max", n_max)
        if not 0 <= n_max <= self.p_max:
            raise ValueError("need p_max >= n_max >= 0")
        if self.tol is not None and not self.tol > 0:
            raise ValueError("tol must be positive")
        if self.dim is not None and self.dim < 2:
            raise ValueError("dim must be at least 2")
        if self.xi is not None and self.xi < 0:
            raise ValueError("xi must be nonnegative")

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "p_max": self.p_max,
            "n_max": self.n_max,
            "mode": self.mode,
            "tol": self.tol,
            "format": self.format,
            "output_path": self.output_path,
            "dim": self.dim,
            "xi": self.xi,
            "phi": self.phi,
        }


@dataclass
class ReportDocument:
    """Tool identity, configuration echo, records and summary tallies."""

    version: str
    config: SuiteConfig
    records: list[VerificationRecord] = field(default_factory=list)
    duration_seconds: float = 0.0

    @property
    def summary(self) -> dict[str, int]:
        passed = sum(1 for r in self.records if r.passed)
        return {"passed": passed, "failed": len(self.records) - passed, "skipped": 0}

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.records)


def _param_key(params: dict) -> str:
    return json.dumps(params, sort_keys=True, default=str)


def sort_records(records: list[VerificationRecord]) -> list[VerificationRecord]:
    return sorted(records, key=lambda r: (r.check_id, _param_key(r.params)))


def _rational_str(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _decimal_str(value: Fraction | float | int) -> str:
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return repr(float(value))
    if isinstance(value, int):
        return str(value)
    return repr(float(value))


def _finite_or_none(value: float) -> float | None:
    return value if math.isfinite(value) else None


def record_to_dict(record: VerificationRecord) -> dict:
    lhs_rational = _rational_str(record.lhs) if isinstance(record.lhs, Fraction) else None
    rhs_rational = _rational_str(record.rhs) if isinstance(record.rhs, Fraction) else None
    return {
        "check_id": record.check_id,
        "params": dict(record.params),
        "lhs_decimal": _decimal_str(record.lhs),
        "rhs_decimal": _decimal_str(record.rhs),
        "lhs_rational": lhs_rational,
        "rhs_rational": rhs_rational,
        "abs_err": _finite_or_none(record.abs_err),
        "rel_err": _finite_or_none(record.rel_err),
        "exact": record.exact,
        "pass": record.passed,
        "tol": record.tol,
        "note": record.note,
    }


def document_to_dict(doc: ReportDocument) -> dict:
    return {
        "tool": "oddsqueeze",
        "version": doc.version,
        "config": doc.config.as_dict(),
        "records": [record_to_dict(r) for r in doc.records],
        "summary": doc.summary,
        "duration_seconds": doc.duration_seconds,
    }


def render_json(doc_dict: dict) -> str:
    return json.dumps(doc_dict, indent=2, sort_keys=True, allow_nan=False) + "\n"


def _csv_value(decimal: str, rational: str | None) -> str:
    return rational if rational is not None else decimal


def render_csv(doc_dict: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["check_id", "params", "lhs", "rhs", "abs_err", "rel_err", "exact", "pass"])
    for rec in doc_dict["records"]:
        params = ";".join(f"{k}={rec['params'][k]}" for k in sorted(rec["params"]))
        writer.writerow(
            [
                rec["check_id"],
                params,
                _csv_value(rec["lhs_decimal"], rec["lhs_rational"]),
                _csv_value(rec["rhs_decimal"], rec["rhs_rational"]),
                "" if rec["abs_err"] is None else repr(rec["abs_err"]),
                "" if rec["rel_err"] is None else repr(rec["rel_err"]),
                str(rec["exact"]).lower(),
                str(rec["pass"]).lower(),
            ]
        )
    return buf.getvalue()


def render(doc_dict: dict, fmt: str) -> str:
    if fmt == "json":
        return render_json(doc_dict)
    if fmt == "csv":
        return render_csv(doc_dict)
    raise ValueError(f"unknown format {fmt!r}")


def emit_report(doc_dict: dict, fmt: str, path: str | None) -> str:
    """Render and write the report; returns the rendered text.

    Writing failures propagate as OSError for the caller to map to its
    I/O exit status.
    """
    text = render(doc_dict, fmt)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    return text


def reload_summary(doc_dict: dict) -> dict[str, int]:
    """Recompute summary tallies from a parsed report (round-trip check)."""
    passed = sum(1 for r in doc_dict["records"] if r["pass"])
    return {
        "passed": passed,
        "failed": len(doc_dict["records"]) - passed,
        "skipped": 0,
    }
