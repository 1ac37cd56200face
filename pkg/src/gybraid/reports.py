"""Result records for verification checks and group enumerations."""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


@dataclass
class CheckReport:
    check_name: str
    n: int | None
    m: int | None
    passed: bool
    residual_max: float
    tol: float
    details: list[tuple[str, float]] = field(default_factory=list)
    elapsed_ms: float = 0.0
    notes: dict = field(default_factory=dict)

    @classmethod
    def from_residuals(cls, check_name, n, m, details, tol) -> CheckReport:
        worst = max((r for _, r in details), default=0.0)
        return cls(check_name, n, m, worst < tol, worst, tol, list(details))

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "check_name": self.check_name,
            "pass": self.passed,
            "residual_max": self.residual_max,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_text(self) -> str:
        return json.dumps(self.to_record())

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        where = f"(n={self.n}, m={self.m})" if self.n is not None else f"(m={self.m})"
        return (f"{status}  {self.check_name} {where}  residual_max={self.residual_max:.3e}"
                f"  cases={len(self.details)}")


@dataclass
class EnumerationReport:
    n: int
    m: int
    backend: str
    order_found: int
    order_predicted: int
    truncated: bool
    levels: int = 0
    max_frontier: int = 0
    elapsed_ms: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.truncated and self.order_found == self.order_predicted

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "check_name": f"enumerate_image[{self.backend}]",
            "pass": self.passed,
            "order_found": self.order_found,
            "order_predicted": self.order_predicted,
            "truncated": self.truncated,
            "levels": self.levels,
            "max_frontier": self.max_frontier,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }

    def to_text(self) -> str:
        return json.dumps(self.to_record())

    def summary(self) -> str:
        if self.truncated:
            status = "TRUNCATED"
        else:
            status = "PASS" if self.passed else "FAIL"
        return (f"{status}  image order (n={self.n}, m={self.m}, backend={self.backend}): "
                f"found {self.order_found}, predicted {self.order_predicted}"
                f"  [{self.levels} levels, max frontier {self.max_frontier}]")


def stopwatch():
    """Return a callable giving milliseconds since creation."""
    t0 = time.perf_counter()
    return lambda: (time.perf_counter() - t0) * 1e3
