"""Check records and suite reports with deterministic JSON / Markdown output."""

import json
import time
from dataclasses import dataclass, field
from importlib import resources

PASS = "pass"
FAIL = "fail"
FLAGGED = "flagged"

STATUSES = (PASS, FAIL, FLAGGED)


@dataclass
class Check:
    name: str
    status: str
    anchor: str
    details: dict = field(default_factory=dict)
    seconds: float = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")

    @property
    def ok(self):
        return self.status != FAIL

    def to_dict(self, timings=False):
        out = {"name": self.name, "status": self.status, "anchor": self.anchor, "details": _plain(self.details)}
        if timings and self.seconds is not None:
            out["seconds"] = round(self.seconds, 3)
        return out


@dataclass
class SuiteReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def ok(self):
        return all(c.ok for c in self.checks)

    def add(self, check):
        self.checks.append(check)
        return check

    def check(self, name, condition, anchor, flagged=False, **details):
        """Record a boolean outcome; ``flagged`` downgrades a pass to a flagged pass."""
        status = FAIL if not condition else (FLAGGED if flagged else PASS)
        return self.add(Check(name, status, anchor, details))

    def to_dict(self, timings=False):
        return {
            "suite": self.suite,
            "status": PASS if self.ok else FAIL,
            "checks": [c.to_dict(timings) for c in self.checks],
        }


def timed(report, name, anchor, fn, timeout=None):
    """Run ``fn() -> (bool, details)`` or ``(status, details)`` and record it.

    Exceptions become failing checks carrying the error text.
    """
    start = time.perf_counter()
    try:
        with _alarm(timeout):
            ok, details = fn()
        if isinstance(ok, str):
            status = ok
        else:
            status = PASS if ok else FAIL
    except CheckTimeout:
        status, details = FAIL, {"error": f"timed out after {timeout} s"}
    except Exception as exc:  # a crashing check is a failing check
        status, details = FAIL, {"error": f"{type(exc).__name__}: {exc}"}
    check = Check(name, status, anchor, details, time.perf_counter() - start)
    return report.add(check)


class CheckTimeout(Exception):
    pass


class _alarm:
    def __init__(self, seconds):
        self.seconds = seconds

    def __enter__(self):
        import signal

        if not self.seconds or not hasattr(signal, "SIGALRM"):
            self.seconds = None
            return self

        def handler(signum, frame):
            raise CheckTimeout()

        self._old = signal.signal(signal.SIGALRM, handler)
        signal.setitimer(signal.ITIMER_REAL, self.seconds)
        return self

    def __exit__(self, *exc):
        if self.seconds:
            import signal

            signal.setitimer(signal.ITIMER_REAL, 0)
            signal.signal(signal.SIGALRM, self._old)
        return False


def _plain(value):
    """Convert details into JSON-friendly values (rationals and polynomials become text)."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, (bool, int, str)) or value is None:
        return value
    if isinstance(value, float):
        return value
    return str(value)


def to_json(document):
    return json.dumps(document, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def to_markdown(document):
    lines = [f"# ogradlab report ({document['status']})", ""]
    for suite in document["suites"]:
        lines.append(f"## {suite['suite']}: {suite['status']}")
        lines.append("")
        lines.append("| check | status | claim |")
        lines.append("|---|---|---|")
        for c in suite["checks"]:
            lines.append(f"| {c['name']} | {c['status']} | {c['anchor']} |")
        lines.append("")
    return "\n".join(lines)


def load_schema():
    text = resources.files("ogradlab").joinpath("report_schema.json").read_text()
    return json.loads(text)
