"""Check verdict records shared by every validator and axiom check."""

from __future__ import annotations

from dataclasses import dataclass, field

from coendcheck.exactla import Mat, fmt

PASS = "pass"
FAIL = "fail"
INFO = "info"


class PresentationError(ValueError):
    """Structurally inconsistent input data (unknown object, bad shape, ...)."""


class ConstructionError(RuntimeError):
    """A coend structure map cannot be built from the given data."""

    def __init__(self, message: str, witness: dict):
        super().__init__(message)
        self.witness = witness


class DescentError(ConstructionError):
    """An ambient structure map does not vanish on the coend relations."""


@dataclass(frozen=True)
class CheckReport:
    name: str
    verdict: str
    witness: dict | None = None
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL

    @property
    def holds(self) -> bool:
        """Whether the checked property holds, informational or not."""
        if self.verdict == INFO:
            return bool(self.info.get("holds", True))
        return self.verdict == PASS

    def to_json(self) -> dict:
        out = {"name": self.name, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.info:
            out["info"] = self.info
        return out


def entry_witness(residual: Mat, **labels) -> dict | None:
    """Witness for the row-major first nonzero entry of ``residual``."""
    hit = residual.first_nonzero()
    if hit is None:
        return None
    i, j, x = hit
    out = dict(labels)
    out["entry"] = [i, j]
    out["value"] = fmt(x)
    return out


def verdict_from(name: str, residual: Mat, info: dict | None = None,
                 **labels) -> CheckReport:
    w = entry_witness(residual, **labels)
    return CheckReport(name, PASS if w is None else FAIL, w, dict(info or {}))


class Collector:
    """Accumulates labelled residuals into one report; the first failure wins."""

    def __init__(self, name: str):
        self.name = name
        self.witness = None
        self.failures: dict[str, int] = {}
        self.info: dict = {}

    def residual(self, law: str, residual: Mat, **labels) -> bool:
        w = entry_witness(residual, law=law, **labels)
        if w is None:
            return True
        self.fail(law, w)
        return False

    def fail(self, law: str, witness: dict):
        self.failures[law] = self.failures.get(law, 0) + 1
        if self.witness is None:
            witness.setdefault("law", law)
            self.witness = witness

    def report(self) -> CheckReport:
        info = dict(self.info)
        if self.failures:
            info["failures"] = dict(sorted(self.failures.items()))
            return CheckReport(self.name, FAIL, self.witness, info)
        return CheckReport(self.name, PASS, None, info)
