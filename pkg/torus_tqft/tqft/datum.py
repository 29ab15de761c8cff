"""
TQFT data (n, rho_a, rho_b, beta, gamma, eta, eps) and axiom validation.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable, List, Optional, Tuple

from ..exceptions import ValidationError
from ..log import get_logger
from ..scalars import FieldDescriptor, FieldMatrix

logger = get_logger(__name__)


@dataclass(frozen=True)
class TqftDatum:
    """Matrices describing a TQFT on the torus subcategory.

    ``beta`` is a 1 x n^2 row, ``gamma`` an n^2 x 1 column, ``eta`` an n x 1 column and ``eps`` a
    1 x n row. A datum is ``sealed`` once :func:`seal` has validated it.
    """

    name: str
    field: FieldDescriptor
    n: int
    rho_a: FieldMatrix
    rho_b: FieldMatrix
    beta: FieldMatrix
    gamma: FieldMatrix
    eta: Optional[FieldMatrix] = None
    eps: Optional[FieldMatrix] = None
    sealed: bool = field(default=False, compare=False)

    @property
    def has_unit(self) -> bool:
        return self.eta is not None

    def identity(self, power: int = 1) -> FieldMatrix:
        return FieldMatrix.identity(self.field, self.n**power)

    def derived_eps(self) -> Optional[FieldMatrix]:
        """beta . (1 (x) eta), or None without a unit."""
        if self.eta is None:
            return None
        return self.beta @ self.identity().kron(self.eta)

    def counit(self) -> Optional[FieldMatrix]:
        """The stored eps, falling back to the derived one."""
        return self.eps if self.eps is not None else self.derived_eps()


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    offending: List[Tuple[int, int]] = field(default_factory=list)


@dataclass
class ValidationReport:
    name: str
    checks: List[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_checks(self) -> List[str]:
        return [c.name for c in self.checks if not c.passed]

    def add(self, result: CheckResult) -> None:
        self.checks.append(result)


def _compare(name: str, lhs: FieldMatrix, rhs: FieldMatrix, detail: str) -> CheckResult:
    bad = lhs.differing_entries(rhs)
    return CheckResult(name, not bad, detail, bad)


def _shape_problems(d: TqftDatum) -> List[str]:
    n = d.n
    if n < 1:
        return [f"n is {n}, expected at least 1"]
    expected = {
        "rho_a": (d.rho_a, (n, n)),
        "rho_b": (d.rho_b, (n, n)),
        "beta": (d.beta, (1, n * n)),
        "gamma": (d.gamma, (n * n, 1)),
    }
    if d.eta is not None:
        expected["eta"] = (d.eta, (n, 1))
    if d.eps is not None:
        expected["eps"] = (d.eps, (1, n))
    problems = []
    for label, (m, shape) in expected.items():
        if m.shape != shape:
            problems.append(f"{label} is {m.rows}x{m.cols}, expected {shape[0]}x{shape[1]}")
        elif m.descriptor != d.field:
            problems.append(f"{label} is over {m.descriptor.name}, expected {d.field.name}")
    return problems


def validate(d: TqftDatum) -> ValidationReport:
    """Run every axiom check; failures are report entries, never exceptions."""
    report = ValidationReport(d.name)
    problems = _shape_problems(d)
    report.add(CheckResult("shapes", not problems, "; ".join(problems)))
    if problems:
        return report

    one = d.identity()
    ra, rb = d.rho_a, d.rho_b
    swap = FieldMatrix.swap(d.field, d.n)
    checks: List[Tuple[str, Callable[[], FieldMatrix], Callable[[], FieldMatrix], str]] = [
        (
            "eq-rep1",
            lambda: ra @ rb @ ra,
            lambda: rb @ ra @ rb,
            "rho_a rho_b rho_a = rho_b rho_a rho_b",
        ),
        ("eq-rep2", lambda: (ra @ rb) ** 6, lambda: one, "(rho_a rho_b)^6 = 1"),
        ("eq-b", lambda: d.beta @ swap, lambda: d.beta, "beta . tau = beta"),
        ("eq-g", lambda: swap @ d.gamma, lambda: d.gamma, "tau . gamma = gamma"),
        (
            "eq-bg",
            lambda: d.beta.kron(one) @ one.kron(d.gamma),
            lambda: one,
            "(beta (x) 1)(1 (x) gamma) = 1",
        ),
        (
            "eq-bg-mirror",
            lambda: one.kron(d.beta) @ d.gamma.kron(one),
            lambda: one,
            "(1 (x) beta)(gamma (x) 1) = 1",
        ),
        (
            "eq-rep-b",
            lambda: d.beta @ ra.kron(one),
            lambda: d.beta @ one.kron(rb),
            "beta (rho_a (x) 1) = beta (1 (x) rho_b)",
        ),
    ]
    if d.eta is not None:
        eta = d.eta
        eps = d.counit()
        checks.append(("eq-e", lambda: ra @ eta, lambda: eta, "rho_a eta = eta"))
        checks.append(("eps-rho-b", lambda: eps @ rb, lambda: eps, "eps rho_b = eps"))
        if d.eps is not None:
            checks.append(
                ("unit-counit", lambda: d.eps, lambda: d.derived_eps(), "eps = beta (1 (x) eta)")
            )

    for name, lhs, rhs, detail in checks:
        result = _compare(name, lhs(), rhs(), detail)
        logger.debug("%s %s: %s", d.name, name, "pass" if result.passed else "FAIL")
        report.add(result)
    return report


def seal(d: TqftDatum) -> TqftDatum:
    """Validated, sealed copy of ``d``.

    Raises:
        ValidationError: if any check fails.
    """
    if d.sealed:
        return d
    report = validate(d)
    if not report.passed:
        raise ValidationError(report)
    return replace(d, sealed=True)
