"""Sharp exponents for comparisons ``F_p < R`` (or ``F_p > R``).

Near the diagonal two means agree to first order, so the sign of a
comparison is decided by the coefficient of ``(x - 1)**2`` in the difference
``smaller(x, 1) - larger(x, 1)``, where "smaller" is the side claimed to be
below.  That coefficient, ``c2(p)``, must be ``<= 0`` for the inequality to
hold; its root ``p*`` is the only candidate for a sharp exponent.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import bisect

from .jets import DEFAULT_ORDER, mean_series, power_type_series
from .means import (
    EndpointNotAvailable,
    MeanKind,
    PowerTypeSpec,
    endpoint_limit,
    evaluate,
    format_order,
)
from .scan import STRICT_SLACK, LinkScan, scan_grid, scan_link

log = logging.getLogger(__name__)

__all__ = [
    "Direction",
    "ComparisonPair",
    "NoRootError",
    "SUPPORTED_PAIRS",
    "C2_SAMPLE_ORDERS",
    "c2_of_p",
    "CriticalExponentReport",
    "critical_exponent",
    "restate_by_rescaling",
    "rescaled_order",
    "rescaling_agreement",
    "endpoint_gap",
    "PairScan",
    "scan_pair",
    "conjecture_scan",
    "sharpness_witness",
]

C2_SAMPLE_ORDERS = (-2.0, -1.0, -0.5, 1 / 3, 0.5, 1.0, 2.0, 3.0, 4.0)


class NoRootError(ValueError):
    """c2 keeps one sign over the whole search bracket."""


class Direction(str, Enum):
    BELOW = "below"
    ABOVE = "above"


@dataclass(frozen=True)
class ComparisonPair:
    """``family_p`` compared with a fixed ``reference`` mean.

    ``direction`` says on which side the family is claimed to lie.
    """

    family: MeanKind
    reference: PowerTypeSpec
    direction: Direction

    def __post_init__(self):
        object.__setattr__(self, "family", MeanKind.parse(self.family))
        if not isinstance(self.reference, PowerTypeSpec):
            object.__setattr__(self, "reference", PowerTypeSpec.parse(str(self.reference)))
        object.__setattr__(self, "direction", Direction(self.direction))

    def sides(self, p: float) -> tuple[PowerTypeSpec, PowerTypeSpec]:
        """(claimed smaller, claimed larger) at order ``p``."""
        fam = PowerTypeSpec(self.family, p)
        if self.direction is Direction.BELOW:
            return fam, self.reference
        return self.reference, fam

    def statement(self, p: str | float = "p") -> str:
        fam = f"{self.family}_{p}"
        ref = str(self.reference)
        if self.direction is Direction.BELOW:
            return f"{fam} < {ref}"
        return f"{ref} < {fam}"

    def __str__(self) -> str:
        return self.statement()


def _pair(family, reference, direction):
    return ComparisonPair(MeanKind.parse(family), PowerTypeSpec.parse(reference),
                          Direction(direction))


#: the six comparisons with known critical exponent, and whether the
#: sufficiency half is proven ("theorem") or only conjectured
SUPPORTED_PAIRS = {
    "L-P": (_pair("L", "P", "below"), "theorem"),
    "P-N": (_pair("P", "N", "below"), "theorem"),
    "He-N": (_pair("He", "N", "above"), "theorem"),
    "Z-I": (_pair("Z", "I", "above"), "theorem"),
    "Z-Y": (_pair("Z", "Y", "below"), "theorem"),
    "T-N": (_pair("T", "N", "above"), "conjecture"),
}


def _series(spec: PowerTypeSpec, order: int):
    if spec.p == 0.0:
        return mean_series(MeanKind.G, order)
    return power_type_series(spec, order)


def _c2(pair: ComparisonPair, p: float, order: int = DEFAULT_ORDER) -> float:
    # p = 0 is allowed here and means G (continuous limit of M_p)
    lo, hi = pair.sides(p)
    return float(_series(lo, order)[2] - _series(hi, order)[2])


def c2_of_p(pair: ComparisonPair, p: float, order: int = DEFAULT_ORDER) -> float:
    """Coefficient of ``(x-1)**2`` in ``smaller(x, 1) - larger(x, 1)`` at order p.

    >>> round(c2_of_p(SUPPORTED_PAIRS["L-P"][0], 1.0) * 24, 12)
    -1.0
    """
    if p == 0:
        raise ValueError("c2 analysis excludes p = 0 (M_0 is the geometric mean)")
    return _c2(pair, float(p), order)


@dataclass
class CriticalExponentReport:
    pair: ComparisonPair
    c2_samples: list[tuple[float, float]]
    p_star: float
    c2_slope: float
    c2_intercept: float
    affine_residual: float
    holds_when: str  # "p <= p*" or "p >= p*"
    endpoint_check: dict[str, float] | None = None

    def verdict(self, status: str = "necessity") -> str:
        text = (f"{self.pair.statement()} for all a != b holds only if "
                f"p {'<=' if self.holds_when == 'p <= p*' else '>='} "
                f"{format_order(self.p_star)}")
        if status == "theorem":
            text = text.replace("holds only if", "holds if and only if")
        elif status == "conjecture":
            text += " (conjectural sufficiency)"
        return text


def _bracket(f, lo: float = -8.0, hi: float = 8.0, limit: float = 64.0):
    flo, fhi = f(lo), f(hi)
    while np.sign(flo) == np.sign(fhi):
        if hi >= limit:
            raise NoRootError(f"c2 has no sign change on [{lo}, {hi}]")
        lo, hi = 2 * lo, 2 * hi
        flo, fhi = f(lo), f(hi)
    return lo, hi


def critical_exponent(pair: ComparisonPair, xtol: float = 1e-12,
                      samples=C2_SAMPLE_ORDERS, delta: float = 1e-3,
                      order: int = DEFAULT_ORDER) -> CriticalExponentReport:
    """Root of ``c2(p)`` by bisection, plus an affine fit of the samples."""
    f = lambda p: _c2(pair, p, order)  # noqa: E731
    lo, hi = _bracket(f)
    if f(lo) == 0.0:
        p_star = lo
    elif f(hi) == 0.0:
        p_star = hi
    else:
        p_star = bisect(f, lo, hi, xtol=xtol)
    c2s = [(float(p), f(p)) for p in samples]
    ps, cs = np.array(c2s).T
    slope, intercept = np.polyfit(ps, cs, 1)
    residual = float(np.max(np.abs(cs - (slope * ps + intercept))))
    holds = "p <= p*" if slope > 0 else "p >= p*"

    check = None
    try:
        check = {
            "at": endpoint_gap(pair, p_star),
            "minus": endpoint_gap(pair, p_star - delta),
            "plus": endpoint_gap(pair, p_star + delta),
            "delta": delta,
        }
    except EndpointNotAvailable:
        log.debug("no endpoint data for %s near p* = %g", pair, p_star)
    return CriticalExponentReport(pair, c2s, float(p_star), float(slope),
                                  float(intercept), residual, holds, check)


def restate_by_rescaling(pair: ComparisonPair, p_star: float | None = None) -> ComparisonPair:
    """Move the free order to the other side.

    Substituting ``a -> a**(1/p)``, ``b -> b**(1/p)`` turns ``F_p < R_q``
    into ``F < R_{q/p}`` (for p > 0), so the restated pair has ``R`` as its
    family, ``F`` as its fixed side, the opposite direction, and critical
    order ``q / p*``.
    """
    if pair.reference.p == 0.0:
        raise ValueError("cannot rescale against a geometric-mean reference")
    if p_star is None:
        p_star = critical_exponent(pair).p_star
    if not p_star > 0:
        raise ValueError(f"rescaling needs a positive critical order, got {p_star}")
    flipped = Direction.ABOVE if pair.direction is Direction.BELOW else Direction.BELOW
    return ComparisonPair(pair.reference.kind, PowerTypeSpec(pair.family, 1.0), flipped)


def rescaled_order(pair: ComparisonPair, p: float) -> float:
    """Order of the restated family equivalent to order ``p`` of the original."""
    return pair.reference.p / p


def rescaling_agreement(pair: ComparisonPair, n: int = 100, seed: int = 0,
                        p_range=(0.05, 4.0)) -> tuple[int, int]:
    """Sample random (a, b, p) and compare both forms of the inequality.

    Returns ``(agreements, n)``.
    """
    restated = restate_by_rescaling(pair)
    rng = np.random.default_rng(seed)
    agree = 0
    for _ in range(n):
        a, b = 10.0 ** rng.uniform(-1, 1, size=2)
        p = rng.uniform(*p_range)
        lo, hi = pair.sides(p)
        original = evaluate(lo, a, b) < evaluate(hi, a, b)
        lo2, hi2 = restated.sides(rescaled_order(pair, p))
        ap, bp = a ** p, b ** p
        other = evaluate(lo2, ap, bp) < evaluate(hi2, ap, bp)
        agree += original == other
    return agree, n


def endpoint_gap(pair: ComparisonPair, p: float) -> float:
    """lim_{x -> 0+} [smaller(x, 1) - larger(x, 1)] at order ``p``.

    Negative means the claimed inequality also holds at the endpoint.
    """
    lo, hi = pair.sides(p)
    return endpoint_limit(lo) - endpoint_limit(hi)


@dataclass
class PairScan:
    pair: ComparisonPair
    p: float
    grid_size: int
    link: LinkScan
    gaps: np.ndarray = field(repr=False)

    @property
    def passed(self) -> bool:
        return self.link.passed

    @property
    def violations(self):
        return self.link.violations

    @property
    def min_gap(self) -> float:
        return self.link.min_gap


def scan_pair(pair: ComparisonPair, p: float, grid=None,
              slack: float = STRICT_SLACK) -> PairScan:
    """Check the claimed inequality at order ``p`` along ``(x, 1)``."""
    if grid is None:
        grid = scan_grid()
    grid = np.asarray(grid, dtype=float)
    lo, hi = pair.sides(p)
    link, gaps = scan_link(lo, hi, grid, slack)
    return PairScan(pair, float(p), grid.size, link, gaps)


def conjecture_scan(p: float, grid=None) -> PairScan:
    """Scan ``N(x, 1) < T_p(x, 1)``; expected to hold exactly when p >= 4/5."""
    if not p > 0:
        raise ValueError("the conjecture concerns p > 0")
    return scan_pair(SUPPORTED_PAIRS["T-N"][0], p, grid)


def sharpness_witness(pair: ComparisonPair, delta: float = 1e-3, grid=None,
                      report: CriticalExponentReport | None = None):
    """Scan just past ``p*`` on the failing side and just inside on the passing side.

    Returns ``(failing_scan, passing_scan)``; a sharp exponent shows
    violations in the first and none in the second.
    """
    report = report or critical_exponent(pair)
    sigma = 1.0 if report.c2_slope > 0 else -1.0
    failing = scan_pair(pair, report.p_star + sigma * delta, grid)
    passing = scan_pair(pair, report.p_star - sigma * delta, grid)
    return failing, passing
