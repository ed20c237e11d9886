"""Result record shared by all verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

Number = Fraction | float | int
ParamValue = int | float | str


@dataclass(frozen=True)
class VerificationRecord:
    """One executed check: identifier, parameters, both sides, errors, verdict.

    Exact records pass iff lhs == rhs as rationals. Float records pass iff
    rel_err <= tol, where rel_err is the absolute difference over
    max(|lhs|, |rhs|, scale_floor); zero-target defect checks set a scale
    floor of 1 so the defect is measured against the natural unit scale.
    """

    check_id: str
    params: dict[str, ParamValue] = field(compare=False)
    lhs: Number
    rhs: Number
    abs_err: float
    rel_err: float
    exact: bool
    passed: bool
    tol: float | None = None
    note: str = ""

    @staticmethod
    def compare_exact(
        check_id: str,
        params: dict[str, ParamValue],
        lhs: Fraction,
        rhs: Fraction,
        note: str = "",
    ) -> "VerificationRecord":
        diff = lhs - rhs
        abs_err = abs(float(diff))
        scale = max(abs(float(lhs)), abs(float(rhs)))
        rel_err = 0.0 if diff == 0 else (abs_err / scale if scale > 0 else abs_err)
        return VerificationRecord(
            check_id=check_id,
            params=dict(params),
            lhs=lhs,
            rhs=rhs,
            abs_err=abs_err,
            rel_err=rel_err,
            exact=True,
            passed=diff == 0,
            tol=None,
            note=note,
        )

    @staticmethod
    def compare_float(
        check_id: str,
        params: dict[str, ParamValue],
        lhs: float,
        rhs: float,
        tol: float,
        scale_floor: float = 0.0,
        note: str = "",
    ) -> "VerificationRecord":
        abs_err = abs(lhs - rhs)
        scale = max(abs(lhs), abs(rhs), scale_floor)
        rel_err = abs_err / scale if scale > 0.0 else 0.0
        return VerificationRecord(
            check_id=check_id,
            params=dict(params),
            lhs=lhs,
            rhs=rhs,
            abs_err=abs_err,
            rel_err=rel_err,
            exact=False,
            passed=rel_err <= tol,
            tol=tol,
            note=note,
        )

    @staticmethod
    def failure(check_id: str, params: dict[str, ParamValue], note: str) -> "VerificationRecord":
        """Record for a check that raised instead of returning values."""
        return VerificationRecord(
            check_id=check_id,
            params=dict(params),
            lhs=float("nan"),
            rhs=float("nan"),
            abs_err=float("nan"),
            rel_err=float("nan"),
            exact=False,
            passed=False,
            tol=None,
            note=note,
        )
