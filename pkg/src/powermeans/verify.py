"""Numerical checks of inequality chains, monotonicity in the order p,
and the auxiliary functions behind the sharp comparisons."""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .means import DomainError, MeanKind, PowerTypeSpec, evaluate
from .scan import STRICT_SLACK, LinkScan, Violation, default_grid, scan_link

__all__ = [
    "ChainSpec",
    "ChainReport",
    "BUILTIN_CHAINS",
    "YANG2_C",
    "get_chain",
    "verify_chain",
    "MonotonicityReport",
    "verify_monotonicity_in_p",
    "z_log_derivative",
    "mixed_log_partial",
    "witness_f",
    "n_lower_bound_check",
]

#: exponent of the power mean separating I and N in the yang2 chain
YANG2_C = math.log(2.0) / math.log(math.log(3.0 + 2.0 * math.sqrt(2.0)))


@dataclass(frozen=True)
class ChainSpec:
    """An all-strict chain ``links[0] < links[1] < ...``."""

    name: str
    links: tuple[PowerTypeSpec, ...]

    @classmethod
    def parse(cls, name: str, text: str) -> ChainSpec:
        """Build from ``"L:2 < P < N:1/2"``."""
        return cls(name, tuple(PowerTypeSpec.parse(s.strip()) for s in text.split("<")))

    def __str__(self) -> str:
        return " < ".join(map(str, self.links))


def _chain(name, *links):
    return ChainSpec(name, tuple(
        PowerTypeSpec.parse(s) if isinstance(s, str) else PowerTypeSpec(*s) for s in links))


BUILTIN_CHAINS = {
    c.name: c for c in (
        _chain("yang1", "L:2", "He", "A:2/3", "I", "Z:1/3", "Y:1/2"),
        _chain("yang3", "L:2", "P", "N:1/2", "He", "A:2/3", "I", "Z:1/3", "Y:1/2"),
        _chain("costin_toader", "G", "L", "A:1/2", "P", "A", "N", "T", "A:2"),
        _chain("chu_yang", "T:2/5", "He", "A:2/3", "I", "Z:1/3", "Y:1/2"),
        _chain("yang2", "A:0", "L", "A:1/3", ("A", math.log(2) / math.log(math.pi)),
               "P", "A:2/3", "I", ("A", math.log(2)), ("A", YANG2_C), "N", "A:4/3",
               ("A", math.log(2) / math.log(math.pi / 2)), "T", "A:5/3"),
    )
}


def get_chain(name: str) -> ChainSpec:
    try:
        return BUILTIN_CHAINS[name]
    except KeyError:
        raise KeyError(f"unknown chain {name!r}; built-in chains: "
                       f"{', '.join(sorted(BUILTIN_CHAINS))}") from None


@dataclass
class ChainReport:
    spec: ChainSpec
    grid: np.ndarray = field(repr=False)
    links: list[LinkScan]
    gaps: dict[str, np.ndarray] = field(repr=False, default_factory=dict)

    @property
    def violations(self) -> list[Violation]:
        out = [v for link in self.links for v in link.violations]
        return sorted(out, key=lambda v: (v.x, v.link))

    @property
    def min_gap(self) -> float:
        return min(link.min_gap for link in self.links)

    @property
    def passed(self) -> bool:
        return all(link.passed for link in self.links)


def verify_chain(spec: ChainSpec, grid=None, slack: float = STRICT_SLACK) -> ChainReport:
    """Check every adjacent link of ``spec`` at the points ``(x, 1)``.

    ``grid`` defaults to :func:`powermeans.scan.default_grid` (2000 points
    in ``[1e-6, 1 - 1e-6]``).  Gaps are relative, ``(rhs - lhs) / rhs``.
    """
    grid = default_grid() if grid is None else np.asarray(grid, dtype=float)
    report = ChainReport(spec, grid, [])
    for lhs, rhs in zip(spec.links, spec.links[1:]):
        scan, gaps = scan_link(lhs, rhs, grid, slack)
        report.links.append(scan)
        report.gaps[scan.name] = gaps
    return report


@dataclass
class MonotonicityReport:
    kind: MeanKind
    p_grid: np.ndarray
    points: list[tuple[float, float]]
    values: np.ndarray = field(repr=False)  # shape (len(points), len(p_grid))
    min_rel_step: np.ndarray  # per point
    violations: list[tuple[tuple[float, float], float, float, float, float]]

    @property
    def passed(self) -> bool:
        return not self.violations


def verify_monotonicity_in_p(kind: MeanKind | str, p_grid, points,
                             slack: float = STRICT_SLACK) -> MonotonicityReport:
    """Check that ``p -> M_p(a, b)`` increases along the sorted ``p_grid``.

    A step counts as a violation only if the value drops by more than
    ``slack`` relative; equal values (``a == b``) pass.
    """
    kind = MeanKind.parse(kind)
    p_grid = np.sort(np.asarray(p_grid, dtype=float))
    points = [(float(a), float(b)) for a, b in points]
    values = np.array([[evaluate(PowerTypeSpec(kind, p), a, b) for p in p_grid]
                       for a, b in points])
    steps = np.diff(values, axis=1) / values[:, :-1]
    violations = []
    for i, j in zip(*np.nonzero(steps < -slack)):
        violations.append((points[i], p_grid[j], p_grid[j + 1],
                           values[i, j], values[i, j + 1]))
    return MonotonicityReport(kind, p_grid, points, values,
                              steps.min(axis=1), violations)


def z_log_derivative(p: float, a: float, b: float) -> float:
    """d/dp ln Z_p(a, b) = a^p b^p (ln a - ln b)^2 / (a^p + b^p)^2.

    Evaluated as ``(ln(a/b) / (2 cosh(p ln(a/b) / 2)))**2`` to stay finite
    for large |p|.
    """
    if a <= 0 or b <= 0:
        raise DomainError("arguments must be positive")
    lr = math.log(a) - math.log(b)
    half = 0.5 * p * lr
    if abs(half) > 700:
        return 0.0
    return (lr / (2.0 * math.cosh(half))) ** 2


def mixed_log_partial(kind: MeanKind | str, x: float, y: float,
                      rel_step: float = 1e-4) -> float:
    """Estimate d^2 ln M / dx dy at (x, y) by Richardson-extrapolated
    central differences with step ``rel_step * min(x, y)``."""
    spec = PowerTypeSpec(MeanKind.parse(kind), 1.0)
    h = rel_step * min(x, y)
    if abs(x - y) < 10 * h:
        raise DomainError(f"|x - y| = {abs(x - y):.3g} is within 10 steps of the "
                          "diagonal; the estimate would be ill-conditioned")

    def lnm(u, v):
        return math.log(evaluate(spec, u, v))

    def cross(s):
        return (lnm(x + s, y + s) - lnm(x + s, y - s)
                - lnm(x - s, y + s) + lnm(x - s, y - s)) / (4 * s * s)

    return (4.0 * cross(h / 2) - cross(h)) / 3.0


def witness_f(which: int, x):
    """The auxiliary functions f1, f2, f3 on (0, 1).

    With ``u = (x - 1) / (x + 1)``::

        f1 = 2 asin(u)**2 / u - ln x
        f2 = 2 asinh(u)**2 / u - asin((x**2 - 1) / (x**2 + 1))
        f3 = (x - 1) / sqrt((x**2 + x + 1) / 3) - 2 asinh(u)

    ``asinh(u)`` equals ``ln((x - 1 + sqrt(2 (x**2 + 1))) / (x + 1))`` and
    ``asin((x**2 - 1)/(x**2 + 1)) = 2 atan(u)``; the right-hand forms are
    the ones evaluated.  Each function is positive and decreasing, with
    limit 0 as x -> 1-.
    """
    x = np.asarray(x, dtype=float)
    if np.any(~((x > 0) & (x < 1))):
        raise DomainError("witness functions are defined on (0, 1)")
    u = (x - 1.0) / (x + 1.0)
    if which == 1:
        out = 2.0 * np.arcsin(u) ** 2 / u - np.log(x)
    elif which == 2:
        out = 2.0 * np.arcsinh(u) ** 2 / u - 2.0 * np.arctan(u)
    elif which == 3:
        out = (x - 1.0) / np.sqrt((x * x + x + 1.0) / 3.0) - 2.0 * np.arcsinh(u)
    else:
        raise ValueError(f"witness index must be 1, 2 or 3, got {which!r}")
    return out if out.ndim else float(out)


def n_lower_bound_check(x: float, y: float) -> float:
    """N(x, y) - A(x, y)**2 / A_2(x, y); positive off the diagonal."""
    n = evaluate(PowerTypeSpec(MeanKind.N), x, y)
    a = evaluate(PowerTypeSpec(MeanKind.A), x, y)
    a2 = evaluate(PowerTypeSpec(MeanKind.A, 2.0), x, y)
    return n - a * a / a2
