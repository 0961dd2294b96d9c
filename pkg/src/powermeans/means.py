"""Bivariate means, their power-type transforms and related diagonal data.

Every mean handled here is symmetric and homogeneous of degree one, so it
factors as

    M(a, b) = G(a, b) * phi_M(mu),    mu = ln(a / b) / 2,

with ``phi_M`` even and ``phi_M(0) = 1``.  The power-type transform then
reads ``M_p(a, b) = G(a, b) * phi_M(p * mu) ** (1 / p)``, which is what
:func:`evaluate` computes in the log domain.  Writing each ``phi_M`` through
``sinh``, ``tanh``, ``atan`` and friends removes the 0/0 quotients of the
textbook definitions at ``a == b`` and keeps full relative accuracy both
near the diagonal and for extreme ratios ``min(a, b) / max(a, b)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

__all__ = [
    "MeanKind",
    "PowerTypeSpec",
    "MeanValue",
    "DiagonalWeights",
    "DomainError",
    "EndpointNotAvailable",
    "parse_order",
    "format_order",
    "log_phi",
    "log_excess",
    "evaluate",
    "mean_eval",
    "power_type_eval",
    "endpoint_limit",
    "diagonal_weights",
    "rescaling_identity_residual",
]

_EPS = np.finfo(float).eps
_LN2 = math.log(2.0)
_LN3 = math.log(3.0)


class DomainError(ValueError):
    """An argument lies outside the domain of a mean or transform."""


class EndpointNotAvailable(ValueError):
    """No closed-form limit at x -> 0+ is shipped for this (kind, order)."""


class MeanKind(str, Enum):
    A = "A"
    G = "G"
    He = "He"
    L = "L"
    I = "I"  # noqa: E741
    P = "P"
    T = "T"
    N = "N"
    Z = "Z"
    Y = "Y"

    @classmethod
    def parse(cls, tag: str | MeanKind) -> MeanKind:
        if isinstance(tag, MeanKind):
            return tag
        key = str(tag).strip()
        for kind in cls:
            if kind.value.lower() == key.lower():
                return kind
        raise ValueError(f"unknown mean {tag!r}; expected one of "
                         f"{', '.join(k.value for k in cls)}")

    def __str__(self) -> str:
        return self.value


def parse_order(text: str | float) -> float:
    """Parse a real order such as ``"0.5"``, ``"2/3"`` or ``"-1"``."""
    if isinstance(text, (int, float)):
        value = float(text)
    else:
        try:
            value = float(Fraction(text.strip()))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"cannot parse order {text!r}") from exc
    if not math.isfinite(value):
        raise ValueError(f"order must be finite, got {text!r}")
    return value


def format_order(p: float, tol: float = 1e-9) -> str:
    """Show ``p`` as a small fraction when it is one to within ``tol``."""
    frac = Fraction(p).limit_denominator(1000)
    if abs(float(frac) - p) <= tol * max(1.0, abs(p)):
        return str(frac)
    return f"{p:.6g}"


@dataclass(frozen=True)
class PowerTypeSpec:
    """The power-type mean ``kind_p``; ``p = 0`` stands for the geometric mean."""

    kind: MeanKind
    p: float = 1.0

    def __post_init__(self):
        object.__setattr__(self, "kind", MeanKind.parse(self.kind))
        p = float(self.p)
        if not math.isfinite(p):
            raise DomainError(f"order p must be finite, got {self.p!r}")
        object.__setattr__(self, "p", p)

    @classmethod
    def parse(cls, text: str) -> PowerTypeSpec:
        """Parse ``KIND[:P]``, e.g. ``"N:1/2"`` or ``"A"``."""
        kind, _, order = text.partition(":")
        return cls(MeanKind.parse(kind), parse_order(order) if order else 1.0)

    def label(self) -> str:
        if self.p == 1.0:
            return self.kind.value
        return f"{self.kind.value}_{format_order(self.p)}"

    def __str__(self) -> str:
        return self.label()


@dataclass(frozen=True)
class MeanValue:
    value: float
    rel_error_bound: float

    def __float__(self) -> float:
        return self.value


@dataclass(frozen=True)
class DiagonalWeights:
    wx: float
    wy: float


# ---------------------------------------------------------------------------
# phi_M(m) = M(e^m, e^-m)
# ---------------------------------------------------------------------------

def _gd(m):
    # Gudermannian, arcsin(tanh m) == arctan(sinh m)
    return 2.0 * np.arctan(np.tanh(0.5 * m))


def _log_phi_small(kind: MeanKind, m):
    """ln phi(m) for 0 < m <= 1."""
    if kind is MeanKind.A:
        return np.log1p(2.0 * np.sinh(0.5 * m) ** 2)
    if kind is MeanKind.G:
        return np.zeros_like(m)
    if kind is MeanKind.He:
        return np.log1p(4.0 / 3.0 * np.sinh(0.5 * m) ** 2)
    if kind is MeanKind.L:
        return np.log(np.sinh(m) / m)
    if kind is MeanKind.P:
        return np.log(np.sinh(m) / _gd(m))
    if kind is MeanKind.T:
        return np.log(np.sinh(m) / np.arctan(np.tanh(m)))
    if kind is MeanKind.N:
        return np.log(np.sinh(m) / np.arcsinh(np.tanh(m)))
    if kind is MeanKind.I:
        return m / np.tanh(m) - 1.0
    if kind is MeanKind.Z:
        return m * np.tanh(m)
    if kind is MeanKind.Y:
        return m / np.tanh(m) - (m / np.sinh(m)) ** 2
    raise AssertionError(kind)


def _log_phi_large_shifted(kind: MeanKind, m):
    """ln phi(m) - m for m > 1, i.e. ln M(1, exp(-2m))."""
    e = np.exp(-2.0 * m)
    if kind is MeanKind.A:
        return np.log1p(e) - _LN2
    if kind is MeanKind.G:
        return -m
    if kind is MeanKind.He:
        return np.log1p(np.exp(-m) + e) - _LN3
    if kind is MeanKind.L:
        return np.log1p(-e) - np.log(2.0 * m)
    if kind is MeanKind.P:
        return np.log1p(-e) - _LN2 - np.log(_gd(m))
    if kind is MeanKind.T:
        return np.log1p(-e) - _LN2 - np.log(np.arctan(np.tanh(m)))
    if kind is MeanKind.N:
        return np.log1p(-e) - _LN2 - np.log(np.arcsinh(np.tanh(m)))
    if kind is MeanKind.I:
        return 2.0 * m * e / (1.0 - e) - 1.0
    if kind is MeanKind.Z:
        return -2.0 * m * e / (1.0 + e)
    if kind is MeanKind.Y:
        return (2.0 * m * e / (1.0 - e)
                - (2.0 * m * np.exp(-m) / (1.0 - e)) ** 2)
    raise AssertionError(kind)


def _split_log_phi(kind: MeanKind, m):
    """Return ``(small, shifted, is_large)`` for ``m >= 0``.

    ``small`` holds ln phi(m) where m <= 1, ``shifted`` holds
    ln phi(m) - m where m > 1; the other entries are zero.
    """
    m = np.asarray(m, dtype=float)
    large = m > 1.0
    small_m = np.where(large | (m == 0.0), 0.5, m)
    large_m = np.where(large, m, 2.0)
    with np.errstate(all="ignore"):
        small = np.where(large | (m == 0.0), 0.0, _log_phi_small(kind, small_m))
        shifted = np.where(large, _log_phi_large_shifted(kind, large_m), 0.0)
    return small, shifted, large


def log_phi(kind: MeanKind | str, m):
    """ln M(e^m, e^-m) for the base mean ``kind`` (even in ``m``)."""
    kind = MeanKind.parse(kind)
    m = np.abs(np.asarray(m, dtype=float))
    small, shifted, large = _split_log_phi(kind, m)
    out = np.where(large, shifted + m, small)
    return out if out.ndim else float(out)


def log_excess(spec: PowerTypeSpec, mu):
    """ln(M_p(a, b) / G(a, b)) as a function of mu = ln(a / b) / 2."""
    mu = np.abs(np.asarray(mu, dtype=float))
    if spec.p == 0.0 or spec.kind is MeanKind.G:
        out = np.zeros_like(mu)
    else:
        out = np.asarray(log_phi(spec.kind, spec.p * mu)) / spec.p
    return out if out.ndim else float(out)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------

def _check_positive(*arrays):
    for arr in arrays:
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
            raise DomainError("mean arguments must be finite and positive")


def _half_log_ratio(hi, lo):
    """mu = ln(hi / lo) / 2 for hi >= lo > 0, accurate near hi == lo."""
    with np.errstate(all="ignore"):
        close = hi <= 2.0 * lo
        # hi - lo is exact when hi <= 2 lo
        near = np.log1p((hi - lo) / lo)
        far = np.log(hi) - np.log(lo)
    return 0.5 * np.where(close, near, far)


def evaluate(spec: PowerTypeSpec, a, b):
    """Vectorised ``M_p(a, b)``; returns a float for scalar input."""
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    _check_positive(a, b)
    hi = np.maximum(a, b)
    lo = np.minimum(a, b)
    p = spec.p
    with np.errstate(all="ignore"):
        g = np.sqrt(hi) * np.sqrt(lo)
        if p == 0.0 or spec.kind is MeanKind.G:
            out = g
        else:
            mu = _half_log_ratio(hi, lo)
            small, shifted, large = _split_log_phi(spec.kind, abs(p) * mu)
            # phi is even, so ln phi(p mu) / p flips sign with p
            near = g * np.exp(small / p)
            if p > 0:
                far = hi * np.exp(shifted / p)
            else:
                far = lo * np.exp(shifted / p)
            out = np.where(large, far, near)
            if p == 1.0 and spec.kind is MeanKind.A:
                # the direct form is exact in more cases, e.g. A(1, 3) = 2
                out = 0.5 * hi + 0.5 * lo
            elif p == 1.0 and spec.kind is MeanKind.He:
                out = np.where(hi < 1e300, (hi + lo + g) / 3.0, out)
    out = np.where(hi == lo, hi, out)
    return out if out.ndim else float(out)


def _rel_bound(spec: PowerTypeSpec, a: float, b: float) -> float:
    mu = abs(math.log(a) - math.log(b)) / 2
    if spec.p == 0.0 or spec.kind is MeanKind.G:
        return 4 * _EPS
    return 32 * _EPS * (1.0 + mu) * (1.0 + 1.0 / abs(spec.p))


def mean_eval(kind: MeanKind | str, a: float, b: float) -> MeanValue:
    """Evaluate the base mean ``kind`` at ``(a, b)``.

    >>> mean_eval("A", 1, 3).value
    2.0
    """
    return power_type_eval(PowerTypeSpec(MeanKind.parse(kind), 1.0), a, b)


def power_type_eval(spec: PowerTypeSpec, a: float, b: float) -> MeanValue:
    """Evaluate ``M_p(a, b) = M(a**p, b**p) ** (1/p)`` (``sqrt(ab)`` at p = 0)."""
    a = float(a)
    b = float(b)
    value = evaluate(spec, a, b)
    return MeanValue(value, 0.0 if a == b else _rel_bound(spec, a, b))


# ---------------------------------------------------------------------------
# x -> 0+ limits, diagonal weights, rescaling
# ---------------------------------------------------------------------------

#: lim_{x -> 0+} M(x, 1) for each base mean
BASE_ENDPOINT = {
    MeanKind.A: 0.5,
    MeanKind.G: 0.0,
    MeanKind.He: 1.0 / 3.0,
    MeanKind.L: 0.0,
    MeanKind.I: math.exp(-1.0),
    MeanKind.P: 1.0 / math.pi,
    MeanKind.T: 2.0 / math.pi,
    MeanKind.N: 1.0 / (2.0 * math.asinh(1.0)),
    MeanKind.Z: 1.0,
    MeanKind.Y: 1.0,
}


def endpoint_limit(spec: PowerTypeSpec) -> float:
    """lim_{x -> 0+} M_p(x, 1) from the closed-form table.

    Only p > 0 is covered, where the limit is ``M(0+, 1) ** (1/p)``.

    Raises
    ------
    EndpointNotAvailable
        for p <= 0.
    """
    if spec.p <= 0.0:
        raise EndpointNotAvailable(
            f"no endpoint limit shipped for {spec} (order must be positive)")
    base = BASE_ENDPOINT[spec.kind]
    if spec.kind is MeanKind.G or base == 0.0:
        return 0.0
    return base ** (1.0 / spec.p)


def diagonal_weights(kind: MeanKind | str, h: float = 1e-6) -> DiagonalWeights:
    """Partial derivatives ``M_x(1, 1)``, ``M_y(1, 1)`` by Richardson-extrapolated
    central differences."""
    spec = PowerTypeSpec(MeanKind.parse(kind), 1.0)

    def central(step, first):
        if first:
            up, down = evaluate(spec, 1.0 + step, 1.0), evaluate(spec, 1.0 - step, 1.0)
        else:
            up, down = evaluate(spec, 1.0, 1.0 + step), evaluate(spec, 1.0, 1.0 - step)
        return (up - down) / (2.0 * step)

    def richardson(first):
        return (4.0 * central(h / 2, first) - central(h, first)) / 3.0

    return DiagonalWeights(richardson(True), richardson(False))


def rescaling_identity_residual(spec: PowerTypeSpec, t: float,
                                a: float, b: float) -> float:
    """Relative mismatch between ``M_{pt}(a, b) ** t`` and ``M_p(a**t, b**t)``."""
    lhs = power_type_eval(PowerTypeSpec(spec.kind, spec.p * t), a, b).value ** t
    rhs = power_type_eval(spec, a ** t, b ** t).value
    return abs(lhs - rhs) / rhs
