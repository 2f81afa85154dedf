"""Relative proportionality check for curves on ball quotient surfaces.

For a curve C on a smooth compactification X of a ball quotient with
boundary divisor D, the inequality

    3 C.C + 3 deg(D n C)  >=  -K_X.C + 2 D.C

holds, with equality exactly for totally geodesic curves.  Records are
classified with exact rational arithmetic.
"""

from __future__ import annotations

import enum
import io
import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import InvariantViolation, ParseError
from .numfield import parse_rational

__all__ = [
    "CurveData",
    "Verdict",
    "Classification",
    "Report",
    "classify",
    "report",
    "ingest",
    "serialize",
    "INTERPRETATION_NOTE",
]

INTERPRETATION_NOTE = (
    "Equality marks a totally geodesic curve. For a nonarithmetic ball quotient "
    "only finitely many curves can attain equality, so infinitely many equality "
    "curves force arithmeticity. A finite list of curves cannot decide "
    "arithmeticity either way; this report only counts verdicts."
)

_NUMERIC = ("c_dot_c", "kx_dot_c", "d_dot_c", "deg_d_cap_c")


class Verdict(enum.Enum):
    EQUALITY = "Equality"
    STRICT = "StrictInequality"
    VIOLATION = "Violation"


@dataclass(frozen=True)
class CurveData:
    name: str
    c_dot_c: Fraction
    kx_dot_c: Fraction
    d_dot_c: Fraction = Fraction(0)
    deg_d_cap_c: Fraction = Fraction(0)
    compact: bool = False

    def __post_init__(self):
        for k in _NUMERIC:
            object.__setattr__(self, k, Fraction(getattr(self, k)))
        if self.compact and (self.d_dot_c or self.deg_d_cap_c):
            raise InvariantViolation(f"curve {self.name!r}: compact surface but D terms are nonzero")

    def scaled(self, k):
        k = Fraction(k)
        return CurveData(self.name, *(getattr(self, f) * k for f in _NUMERIC), compact=self.compact)

    def to_json(self):
        out = {"name": self.name, "compact": self.compact}
        for k in _NUMERIC:
            if self.compact and k in ("d_dot_c", "deg_d_cap_c"):
                continue
            out[k] = str(getattr(self, k))
        return out


@dataclass(frozen=True)
class Classification:
    verdict: Verdict
    lhs: Fraction
    rhs: Fraction


def classify(c):
    if c.compact and (c.d_dot_c or c.deg_d_cap_c):
        raise InvariantViolation(f"curve {c.name!r}: compact surface but D terms are nonzero")
    lhs = 3 * c.c_dot_c + 3 * c.deg_d_cap_c
    rhs = -c.kx_dot_c + 2 * c.d_dot_c
    if lhs == rhs:
        v = Verdict.EQUALITY
    elif lhs > rhs:
        v = Verdict.STRICT
    else:
        v = Verdict.VIOLATION
    return Classification(v, lhs, rhs)


@dataclass
class Report:
    counts: dict
    equality_curves: list
    violations: list
    rows: list
    note: str = INTERPRETATION_NOTE

    @property
    def has_violation(self):
        return bool(self.violations)

    def to_json(self):
        return {
            "counts": {v.value: self.counts[v] for v in Verdict},
            "equality_curves": list(self.equality_curves),
            "violations": list(self.violations),
            "curves": [
                {"name": c.name, "verdict": r.verdict.value, "lhs": str(r.lhs), "rhs": str(r.rhs)}
                for c, r in self.rows
            ],
            "note": self.note,
        }


def report(curves):
    counts = {v: 0 for v in Verdict}
    rows, eq, bad = [], [], []
    for c in curves:
        r = classify(c)
        counts[r.verdict] += 1
        rows.append((c, r))
        if r.verdict is Verdict.EQUALITY:
            eq.append(c.name)
        elif r.verdict is Verdict.VIOLATION:
            bad.append(c.name)
    return Report(counts, eq, bad, rows)


def _field(rec, key, line, default=None):
    if key not in rec:
        if default is None:
            raise ParseError(f"missing field {key!r}", line=line)
        return default
    val = rec[key]
    if isinstance(val, bool) or not isinstance(val, (int, str)):
        raise ParseError(f"{key} must be an integer or a 'p/q' string", line=line)
    try:
        return parse_rational(val)
    except ParseError as exc:
        raise ParseError(f"{key}: {exc}", line=line) from None


def _record(rec, line):
    if not isinstance(rec, dict):
        raise ParseError("expected a JSON object", line=line)
    compact = rec.get("compact", False)
    if not isinstance(compact, bool):
        raise ParseError("compact must be a boolean", line=line)
    name = rec.get("name", f"line{line}")
    if not isinstance(name, str):
        raise ParseError("name must be a string", line=line)
    vals = [
        _field(rec, "c_dot_c", line),
        _field(rec, "kx_dot_c", line),
        _field(rec, "d_dot_c", line, Fraction(0)),
        _field(rec, "deg_d_cap_c", line, Fraction(0)),
    ]
    try:
        return CurveData(name, *vals, compact=compact)
    except InvariantViolation as exc:
        raise InvariantViolation(str(exc), line=line) from None


def ingest(source):
    """Read JSON-lines curve records from a path or a text stream.

    Blank lines are skipped.  Errors carry the 1-based line number.
    """
    if isinstance(source, io.IOBase) or hasattr(source, "read"):
        lines = source.read().splitlines()
    else:
        with open(source, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    out = []
    for no, text in enumerate(lines, 1):
        if not text.strip():
            continue
        try:
            rec = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON ({exc.msg})", line=no) from None
        out.append(_record(rec, no))
    return out


def serialize(curves):
    """JSON-lines text for ``curves``; ``ingest`` reads it back unchanged."""
    return "".join(json.dumps(c.to_json()) + "\n" for c in curves)
