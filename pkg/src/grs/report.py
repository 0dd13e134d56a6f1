"""Verification reports: per-check verdicts, JSON and text rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import DEFAULT_BOUND, Bound
from .scalars import Scalar

PASS = "pass"
FAIL = "fail"
DISCREPANCY = "paper-discrepancy"
STATUSES = (PASS, FAIL, DISCREPANCY)


@dataclass
class Check:
    id: str
    locus: str
    status: str
    counterexample: dict | None = None
    detail: str = ""
    # (lhs, rhs) Scalar pairs kept for numeric re-evaluation; not serialized
    samples: list = field(default_factory=list, repr=False, compare=False)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if not self.locus:
            raise ValueError("every check needs a locus (use 'plumbing')")

    def as_dict(self) -> dict:
        out = {"id": self.id, "locus": self.locus, "status": self.status, "counterexample": self.counterexample}
        if self.detail:
            out["detail"] = self.detail
        return out


def counterexample(where, lhs, rhs) -> dict:
    return {"monomial": str(where), "lhs": str(lhs), "rhs": str(rhs)}


@dataclass
class Report:
    suite: str
    bound: Bound | None = field(default_factory=lambda: DEFAULT_BOUND)
    spot: tuple | None = None
    checks: list[Check] = field(default_factory=list)

    def add(self, id, locus, ok, cex=None, *, discrepancy=False, detail="", samples=()) -> Check:
        """Record a verdict; ``discrepancy`` marks an expected mismatch with the printed text.

        ``samples`` are (lhs, rhs) Scalar pairs behind a passing verdict,
        re-checked numerically by :meth:`spot_check`.
        """
        if ok:
            status = PASS
        else:
            status = DISCREPANCY if discrepancy else FAIL
        chk = Check(id, locus, status, None if ok else cex, detail, list(samples))
        self.checks.append(chk)
        return chk

    def extend(self, other: Report) -> Report:
        self.checks.extend(other.checks)
        return self

    @property
    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "discrepancy": 0}
        for c in self.checks:
            out["discrepancy" if c.status == DISCREPANCY else c.status] += 1
        return out

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def discrepancies(self) -> list[Check]:
        return [c for c in self.checks if c.status == DISCREPANCY]

    def exit_code(self) -> int:
        s = self.summary
        if s["fail"]:
            return 1
        if s["discrepancy"]:
            return 3
        return 0

    def spot_check(self, r0, s0) -> Report:
        """Re-evaluate every passing check's samples at r = r0, s = s0."""
        out = Report(self.suite, self.bound, (Fraction(r0), Fraction(s0)))
        for c in self.checks:
            if c.status != PASS:
                out.checks.append(c)
                continue
            bad = None
            for lhs, rhs in c.samples:
                a = Scalar.coerce(lhs).substitute(r0, s0)
                b = Scalar.coerce(rhs).substitute(r0, s0)
                if a != b:
                    bad = counterexample("numeric", a, b)
                    break
            out.add(c.id, c.locus, bad is None, bad, detail=c.detail, samples=c.samples)
        return out

    def sample_count(self) -> int:
        return sum(len(c.samples) for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "bound": self.bound.as_dict() if self.bound else None,
            "spot": None if self.spot is None else {"r": _num(self.spot[0]), "s": _num(self.spot[1])},
            "checks": [c.as_dict() for c in self.checks],
            "summary": self.summary,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        rows = [(c.status, c.id, c.locus) for c in self.checks]
        w_status = max([len("status")] + [len(r[0]) for r in rows])
        w_id = max([len("check")] + [len(r[1]) for r in rows])
        lines = [f"suite: {self.suite}"]
        if self.bound:
            lines.append("bound: " + ",".join(f"{k}={v}" for k, v in self.bound.as_dict().items()))
        if self.spot is not None:
            lines.append(f"spot: r={_num(self.spot[0])}, s={_num(self.spot[1])}")
        lines.append(f"{'status':<{w_status}}  {'check':<{w_id}}  locus")
        for c in self.checks:
            lines.append(f"{c.status:<{w_status}}  {c.id:<{w_id}}  {c.locus}")
            if c.counterexample:
                cx = c.counterexample
                lines.append(f"{'':<{w_status}}    at {cx.get('monomial')}: lhs = {cx.get('lhs')}, rhs = {cx.get('rhs')}")
            if c.detail and c.status != PASS:
                lines.append(f"{'':<{w_status}}    {c.detail}")
        s = self.summary
        lines.append(f"summary: pass={s['pass']} fail={s['fail']} discrepancy={s['discrepancy']}")
        return "\n".join(lines) + "\n"


def _num(x) -> str:
    return str(Fraction(x))


def merge(suite: str, reports, bound=DEFAULT_BOUND, spot=None) -> Report:
    out = Report(suite, bound, spot)
    for rep in reports:
        out.extend(rep)
    return out


def scalar_text(x) -> str:
    return str(Scalar.coerce(x)) if not isinstance(x, str) else x


def sample_pairs(lhs, rhs, limit: int = 6) -> list:
    """Matching coefficient pairs of two equal-shaped values.

    Works on Scalars, algebra and tensor elements (anything with ``terms``),
    one-form vectors (anything with ``coeffs``), dicts and nested lists.
    """
    out: list = []
    _collect(lhs, rhs, out, limit)
    # two zero values still leave one (trivial) pair to evaluate
    return out or [(Scalar(), Scalar())]


def _parts(x):
    if x is None:
        return {}
    if hasattr(x, "coeffs"):
        return x.coeffs
    if hasattr(x, "terms") and not isinstance(x, Scalar):
        return x.terms
    return x


def _collect(x, y, out: list, limit: int) -> None:
    if len(out) >= limit:
        return
    if isinstance(x, (Scalar, int, Fraction)) or isinstance(y, (Scalar, int, Fraction)):
        out.append((Scalar.coerce(x or 0), Scalar.coerce(y or 0)))
        return
    if isinstance(x, (list, tuple)):
        for a, b in zip(x, y):
            _collect(a, b, out, limit)
        return
    px, py = _parts(x), _parts(y)
    for key in sorted(set(px) | set(py), key=repr):
        _collect(px.get(key), py.get(key), out, limit)
        if len(out) >= limit:
            return
