"""Sampling grids and accurate relative gaps between two power-type means.

For two means compared at ``(x, 1)`` the geometric factor cancels in the
ratio, so ``ln(rhs / lhs) = psi_rhs(mu) - psi_lhs(mu)`` with
``mu = -ln(x) / 2`` and ``psi = ln(M_p / G)``.  Close to the diagonal the
two ``psi`` agree to second (and for sharp pairs, fourth) order, so there
the difference is taken coefficient-wise on their Taylor series in ``mu``;
elsewhere the closed forms from :mod:`powermeans.means` are used.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .jets import log_phi_series
from .means import MeanKind, PowerTypeSpec, evaluate, log_excess

__all__ = [
    "STRICT_SLACK",
    "default_grid",
    "diagonal_refined_grid",
    "scan_grid",
    "half_log_ratio",
    "log_gap",
    "relative_gap",
    "Violation",
    "LinkScan",
    "scan_link",
]

#: relative tolerance absorbed before a strict inequality counts as violated
STRICT_SLACK = 1e-13

# |p| * mu below which psi is summed from its series
_SERIES_CUTOFF = 0.2
_SERIES_ORDER = 24


def default_grid(samples: int = 2000, lo: float = 1e-6) -> np.ndarray:
    """``samples`` points in ``[lo, 1 - lo]``, log-spaced towards both ends.

    Half the points are ``10**-k`` (clustering at 0), half ``1 - 10**-k``
    (clustering at the diagonal); they meet at x = 1/2.
    """
    if samples < 2:
        raise ValueError("need at least two samples")
    n_low = samples // 2
    n_high = samples - n_low
    top = np.log10(0.5)
    low = np.logspace(np.log10(lo), top, n_low, endpoint=False)
    high = 1.0 - np.logspace(top, np.log10(lo), n_high)
    return np.concatenate([low, high])


def diagonal_refined_grid(levels: int = 48) -> np.ndarray:
    """x = 1 - 10**(-k/4) for k = 1..levels."""
    k = np.arange(1, levels + 1)
    return 1.0 - 10.0 ** (-k / 4.0)


def scan_grid(samples: int = 2000) -> np.ndarray:
    """Default grid merged with the diagonal-refined one, sorted, deduplicated."""
    return np.unique(np.concatenate([default_grid(samples), diagonal_refined_grid()]))


def half_log_ratio(x) -> np.ndarray:
    """mu = ln(1/x) / 2 for 0 < x <= 1, accurate as x -> 1."""
    x = np.asarray(x, dtype=float)
    with np.errstate(all="ignore"):
        near = -np.log1p(x - 1.0)
        far = -np.log(x)
    return 0.5 * np.where(x >= 0.5, near, far)


def _psi_series(spec: PowerTypeSpec) -> np.ndarray:
    base = log_phi_series(spec.kind, _SERIES_ORDER).coeffs.copy()
    base[1::2] = 0.0  # phi is even
    k = np.arange(base.size)
    return base * spec.p ** (k - 1.0)


def log_gap(lhs: PowerTypeSpec, rhs: PowerTypeSpec, x) -> np.ndarray:
    """ln(rhs(x, 1) / lhs(x, 1)) for x in (0, 1]."""
    mu = half_log_ratio(x)
    specs = [s for s in (lhs, rhs) if s.p != 0.0 and s.kind is not MeanKind.G]
    pmax = max((abs(s.p) for s in specs), default=0.0)
    closed = np.asarray(log_excess(rhs, mu) - log_excess(lhs, mu))
    if pmax == 0.0:
        return closed
    near = pmax * mu <= _SERIES_CUTOFF
    if not np.any(near):
        return closed
    diff = np.zeros(_SERIES_ORDER + 1)
    for spec, sign in ((rhs, 1.0), (lhs, -1.0)):
        if spec in specs:
            diff += sign * _psi_series(spec)
    series = np.polynomial.polynomial.polyval(mu, diff)
    return np.where(near, series, closed)


def relative_gap(lhs: PowerTypeSpec, rhs: PowerTypeSpec, x) -> np.ndarray:
    """(rhs - lhs) / rhs at (x, 1); positive when lhs < rhs."""
    return -np.expm1(-log_gap(lhs, rhs, x))


@dataclass(frozen=True)
class Violation:
    link: str
    x: float
    lhs: float
    rhs: float
    gap: float


@dataclass
class LinkScan:
    """Outcome of checking ``lhs(x, 1) < rhs(x, 1)`` along a grid."""

    lhs: PowerTypeSpec
    rhs: PowerTypeSpec
    min_gap: float
    argmin_x: float
    violations: list[Violation] = field(default_factory=list)

    @property
    def name(self) -> str:
        return f"{self.lhs}<{self.rhs}"

    @property
    def passed(self) -> bool:
        return not self.violations


def scan_link(lhs: PowerTypeSpec, rhs: PowerTypeSpec, grid,
              slack: float = STRICT_SLACK) -> tuple[LinkScan, np.ndarray]:
    """Check ``lhs < rhs`` at every ``(x, 1)``; also return the gap array."""
    grid = np.asarray(grid, dtype=float)
    gaps = relative_gap(lhs, rhs, grid)
    i = int(np.argmin(gaps))
    scan = LinkScan(lhs, rhs, float(gaps[i]), float(grid[i]))
    bad = np.flatnonzero(gaps < -slack)
    if bad.size:
        lv = evaluate(lhs, grid[bad], 1.0)
        rv = evaluate(rhs, grid[bad], 1.0)
        scan.violations = [
            Violation(scan.name, float(grid[j]), float(l), float(r), float(gaps[j]))
            for j, l, r in zip(bad, np.atleast_1d(lv), np.atleast_1d(rv))
        ]
    return scan, gaps
