"""Truncated Taylor series ("jets") in t = x - 1 and the diagonal expansions
of the means built from them.

A :class:`Jet` of order n holds the coefficients c_0..c_n of a power series.
Arithmetic is dense and closed at the common order, except division, which
first cancels a common factor t**z (a removable singularity) and therefore
returns a jet of order n - z.  The means are assembled from their defining
formulas, so every quotient that is 0/0 on the diagonal goes through that
cancellation.
"""

from __future__ import annotations

import math
from functools import lru_cache

import numpy as np

from .means import DomainError, MeanKind, PowerTypeSpec

__all__ = [
    "Jet",
    "OrderMismatch",
    "PoleError",
    "jet_add",
    "jet_sub",
    "jet_mul",
    "jet_scale",
    "jet_div",
    "jet_compose_elementary",
    "exp",
    "log",
    "sqrt",
    "arcsin",
    "arctan",
    "arcsinh",
    "pow_real",
    "mean_of_jet",
    "mean_series",
    "power_type_series",
    "log_phi_series",
    "DEFAULT_ORDER",
]

DEFAULT_ORDER = 8
ZERO_TOL = 1e-300


class OrderMismatch(ValueError):
    """Two jets of different order were combined."""


class PoleError(ZeroDivisionError):
    """The quotient has a genuine pole at t = 0."""


class Jet:
    """Truncated power series ``sum_k c_k t**k`` for k = 0..order."""

    __slots__ = ("_c",)

    def __init__(self, coeffs):
        c = np.array(coeffs, dtype=float)
        if c.ndim != 1 or c.size < 1:
            raise ValueError("a jet needs a 1-d array of at least one coefficient")
        c.flags.writeable = False
        self._c = c

    @classmethod
    def variable(cls, order: int, at: float = 0.0) -> Jet:
        """The identity series ``at + t``."""
        c = np.zeros(order + 1)
        c[0] = at
        if order >= 1:
            c[1] = 1.0
        return cls(c)

    @classmethod
    def constant(cls, value: float, order: int) -> Jet:
        c = np.zeros(order + 1)
        c[0] = value
        return cls(c)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __len__(self):
        return self._c.size

    def __getitem__(self, k):
        return self._c[k]

    def __repr__(self):
        return f"Jet({self._c.tolist()!r})"

    def truncate(self, order: int) -> Jet:
        if order > self.order:
            raise OrderMismatch(f"cannot raise order {self.order} to {order}")
        return Jet(self._c[: order + 1])

    def valuation(self, tol: float = ZERO_TOL) -> int | None:
        """Index of the first coefficient with ``|c| >= tol`` (None if all vanish)."""
        nz = np.flatnonzero(np.abs(self._c) >= tol)
        return int(nz[0]) if nz.size else None

    def derivative(self) -> Jet:
        if self.order == 0:
            return Jet([0.0])
        k = np.arange(1, self.order + 1)
        return Jet(self._c[1:] * k)

    def integral(self, constant: float = 0.0) -> Jet:
        k = np.arange(1, self.order + 2)
        return Jet(np.concatenate([[constant], self._c / k]))

    def __call__(self, t):
        return np.polynomial.polynomial.polyval(t, self._c)

    # operators
    def __add__(self, other):
        return jet_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        return jet_sub(self, other)

    def __rsub__(self, other):
        return jet_sub(_lift(other, self.order), self)

    def __neg__(self):
        return Jet(-self._c)

    def __mul__(self, other):
        if isinstance(other, Jet):
            return jet_mul(self, other)
        return jet_scale(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Jet):
            return jet_div(self, other)
        return jet_scale(self, 1.0 / other)

    def __rtruediv__(self, other):
        return jet_div(_lift(other, self.order), self)


def _lift(value, order: int) -> Jet:
    if isinstance(value, Jet):
        return value
    return Jet.constant(float(value), order)


def _check_orders(lhs: Jet, rhs: Jet) -> None:
    if lhs.order != rhs.order:
        raise OrderMismatch(f"jets of order {lhs.order} and {rhs.order}")


def jet_add(lhs: Jet, rhs) -> Jet:
    rhs = _lift(rhs, lhs.order)
    _check_orders(lhs, rhs)
    return Jet(lhs.coeffs + rhs.coeffs)


def jet_sub(lhs: Jet, rhs) -> Jet:
    rhs = _lift(rhs, lhs.order)
    _check_orders(lhs, rhs)
    return Jet(lhs.coeffs - rhs.coeffs)


def jet_mul(lhs: Jet, rhs: Jet) -> Jet:
    _check_orders(lhs, rhs)
    return Jet(np.convolve(lhs.coeffs, rhs.coeffs)[: lhs.order + 1])


def jet_scale(jet: Jet, factor: float) -> Jet:
    return Jet(jet.coeffs * float(factor))


def _series_div(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    # b[0] != 0, len(a) == len(b)
    q = np.zeros_like(a)
    for k in range(a.size):
        q[k] = (a[k] - np.dot(q[:k], b[k:0:-1])) / b[0]
    return q


def jet_div(num: Jet, den: Jet) -> Jet:
    """Series of ``num / den``, cancelling a common zero of order z at t = 0.

    The result has order ``n - z``.  A coefficient counts as zero when its
    magnitude is below 1e-300.

    Raises
    ------
    PoleError
        if ``num`` vanishes to lower order than ``den``, or ``den`` is
        identically zero.
    """
    _check_orders(num, den)
    z = den.valuation()
    if z is None:
        raise PoleError("division by a jet that vanishes to all orders")
    zn = num.valuation()
    if zn is not None and zn < z:
        raise PoleError(f"numerator vanishes to order {zn} < denominator order {z}")
    return Jet(_series_div(num.coeffs[z:], den.coeffs[z:]))


# ---------------------------------------------------------------------------
# elementary functions
# ---------------------------------------------------------------------------

def exp(g: Jet) -> Jet:
    c = g.coeffs
    y = np.zeros_like(c)
    y[0] = math.exp(c[0])
    k = np.arange(1, c.size)
    for n in range(1, c.size):
        y[n] = np.dot(k[:n] * c[1 : n + 1], y[n - 1 :: -1][:n]) / n
    return Jet(y)


def log(g: Jet) -> Jet:
    c = g.coeffs
    if not c[0] > 0.0:
        raise DomainError(f"log needs a positive constant term, got {c[0]!r}")
    y = np.zeros_like(c)
    y[0] = math.log(c[0])
    for n in range(1, c.size):
        j = np.arange(1, n)
        y[n] = (c[n] - np.dot(j * y[1:n], c[n - 1 : 0 : -1]) / n) / c[0]
    return Jet(y)


def sqrt(g: Jet) -> Jet:
    c = g.coeffs
    if not c[0] > 0.0:
        raise DomainError(f"sqrt needs a positive constant term, got {c[0]!r}")
    y = np.zeros_like(c)
    y[0] = math.sqrt(c[0])
    for n in range(1, c.size):
        y[n] = (c[n] - np.dot(y[1:n], y[n - 1 : 0 : -1])) / (2.0 * y[0])
    return Jet(y)


def _integrate_derivative(g: Jet, value0: float, dfdg) -> Jet:
    """f(g) from f(g0) and the series of f'(g), via y' = f'(g) g'."""
    if g.order == 0:
        return Jet([value0])
    low = g.truncate(g.order - 1)
    return (dfdg(low) * g.derivative()).integral(value0)


def arcsin(g: Jet) -> Jet:
    g0 = g.coeffs[0]
    if not -1.0 < g0 < 1.0:
        raise DomainError(f"arcsin needs |constant term| < 1, got {g0!r}")
    return _integrate_derivative(g, math.asin(g0), lambda h: 1.0 / sqrt(1.0 - h * h))


def arctan(g: Jet) -> Jet:
    return _integrate_derivative(g, math.atan(g.coeffs[0]), lambda h: 1.0 / (1.0 + h * h))


def arcsinh(g: Jet) -> Jet:
    return _integrate_derivative(g, math.asinh(g.coeffs[0]),
                                 lambda h: 1.0 / sqrt(1.0 + h * h))


def pow_real(g: Jet, q: float) -> Jet:
    """``g ** q`` as ``exp(q log g)``; needs a positive constant term."""
    return exp(float(q) * log(g))


def jet_compose_elementary(f: str, g: Jet, q: float | None = None) -> Jet:
    """Apply the elementary function named ``f`` to ``g``.

    ``f`` is one of ``exp``, ``log``, ``log1p`` (meaning log(1 + g)),
    ``sqrt``, ``arcsin``, ``arctan``, ``arcsinh``, ``pow_real`` (needs ``q``).
    """
    if f == "pow_real":
        if q is None:
            raise ValueError("pow_real needs an exponent q")
        return pow_real(g, q)
    if f == "log1p":
        return log(1.0 + g)
    table = {"exp": exp, "log": log, "sqrt": sqrt, "arcsin": arcsin,
             "arctan": arctan, "arcsinh": arcsinh}
    try:
        return table[f](g)
    except KeyError:
        raise ValueError(f"unknown elementary function {f!r}") from None


# ---------------------------------------------------------------------------
# means on jets
# ---------------------------------------------------------------------------

# quotients inside the means shift out at most t**2 (Y)
_PAD = 3


def mean_of_jet(kind: MeanKind | str, x: Jet) -> Jet:
    """Series of ``M(x, 1)`` where ``x`` is a jet with constant term exactly 1.

    The result loses up to two orders to removable singularities; callers
    pad and truncate.
    """
    kind = MeanKind.parse(kind)
    if kind is MeanKind.A:
        return (x + 1.0) * 0.5
    if kind is MeanKind.G:
        return sqrt(x)
    if kind is MeanKind.He:
        return (x + sqrt(x) + 1.0) * (1.0 / 3.0)
    xm1 = x - 1.0
    if kind is MeanKind.L:
        return xm1 / log(x)
    if kind is MeanKind.P:
        return xm1 / (2.0 * arcsin(xm1 / (x + 1.0)))
    if kind is MeanKind.T:
        return xm1 / (2.0 * arctan(xm1 / (x + 1.0)))
    if kind is MeanKind.N:
        return xm1 / (2.0 * arcsinh(xm1 / (x + 1.0)))
    if kind is MeanKind.Z:
        return exp(x * log(x) / (x + 1.0))
    log_identric = (x * log(x)) / xm1 - 1.0
    if kind is MeanKind.I:
        return exp(log_identric)
    if kind is MeanKind.Y:
        lx = log(x)
        g2_over_l2 = (x * lx * lx) / (xm1 * xm1)
        n = g2_over_l2.order
        return exp(log_identric.truncate(n)) * exp(1.0 - g2_over_l2)
    raise AssertionError(kind)


def _check_order(order: int) -> int:
    order = int(order)
    if order < 2:
        raise ValueError(f"series order must be >= 2, got {order}")
    return order


def mean_series(kind: MeanKind | str, order: int = DEFAULT_ORDER) -> Jet:
    """Taylor series of ``x -> M(x, 1)`` about x = 1, in t = x - 1."""
    order = _check_order(order)
    x = Jet.variable(order + _PAD, at=1.0)
    return mean_of_jet(kind, x).truncate(order)


def power_type_series(spec: PowerTypeSpec, order: int = DEFAULT_ORDER) -> Jet:
    """Taylor series of ``x -> M_p(x, 1) = M(x**p, 1) ** (1/p)`` about x = 1."""
    order = _check_order(order)
    if spec.p == 0.0:
        raise ValueError("order p = 0 has no power-type series; use the G series")
    xp = pow_real(Jet.variable(order + _PAD, at=1.0), spec.p)
    m = mean_of_jet(spec.kind, xp)
    return pow_real(m, 1.0 / spec.p).truncate(order)


@lru_cache(maxsize=64)
def log_phi_series(kind: MeanKind, order: int = 24) -> Jet:
    """Series in m of ``ln M(e^m, e^-m)`` (only even powers survive)."""
    x = exp(2.0 * Jet.variable(order + _PAD))
    lm = log(mean_of_jet(kind, x))
    return (lm - Jet.variable(lm.order)).truncate(order)
