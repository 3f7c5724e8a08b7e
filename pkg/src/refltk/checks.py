"""Pass/fail records shared by the verification routines."""

from dataclasses import dataclass, field

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


def fmt_vector(v):
    return "(" + ", ".join(str(x) for x in v) + ")"


def fmt_matrix(M):
    return "[" + "; ".join(" ".join(str(x) for x in row) for row in M) + "]"


@dataclass
class Check:
    check_id: str
    location: str
    status: str
    witnesses: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return self.status != FAIL

    def to_dict(self):
        return {
            "check_id": self.check_id,
            "anchor": self.location,
            "status": self.status,
            "witnesses": list(self.witnesses),
            "details": dict(self.details),
        }


def make_check(check_id, location, failures, count=None, max_witnesses=5, **details):
    """Build a :class:`Check` from failure witnesses; ``count`` overrides ``len(failures)``."""
    count = len(failures) if count is None else int(count)
    return Check(
        check_id=check_id,
        location=location,
        status=FAIL if count else PASS,
        witnesses=list(failures[:max_witnesses]),
        details={"failures": count, **details},
    )


@dataclass
class VerificationReport:
    title: str
    checks: list = field(default_factory=list)

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    def __getitem__(self, check_id):
        for c in self.checks:
            if c.check_id == check_id:
                return c
        raise KeyError(check_id)

    def failures(self):
        return [c for c in self.checks if not c.passed]

    def to_dict(self):
        return {"title": self.title, "checks": [c.to_dict() for c in self.checks]}

    def summary_lines(self):
        return [f"[{c.status.upper():4}] {c.check_id}: {c.location}" for c in self.checks]
