"""50-digit reference implementation of the means, straight from their
defining formulas.  Used only to produce expected values for the tests."""

import mpmath as mp

mp.mp.dps = 60


def _base(kind, a, b):
    a = mp.mpf(a)
    b = mp.mpf(b)
    if a == b:
        return a
    if kind == "A":
        return (a + b) / 2
    if kind == "G":
        return mp.sqrt(a * b)
    if kind == "He":
        return (a + b + mp.sqrt(a * b)) / 3
    if kind == "L":
        return (a - b) / (mp.log(a) - mp.log(b))
    if kind == "I":
        return mp.e ** -1 * mp.exp((a * mp.log(a) - b * mp.log(b)) / (a - b))
    if kind == "P":
        return (a - b) / (2 * mp.asin((a - b) / (a + b)))
    if kind == "T":
        return (a - b) / (2 * mp.atan((a - b) / (a + b)))
    if kind == "N":
        return (a - b) / (2 * mp.asinh((a - b) / (a + b)))
    if kind == "Z":
        return mp.exp((a * mp.log(a) + b * mp.log(b)) / (a + b))
    if kind == "Y":
        g2 = a * b
        el = _base("L", a, b)
        return _base("I", a, b) * mp.exp(1 - g2 / el ** 2)
    raise ValueError(kind)


def mean(kind, a, b, p=1):
    """M_p(a, b) at working precision."""
    a = mp.mpf(a)
    b = mp.mpf(b)
    p = mp.mpf(p)
    if p == 0:
        return mp.sqrt(a * b)
    return _base(kind, a ** p, b ** p) ** (1 / p)


def endpoint(kind, p=1):
    """lim_{x->0+} M_p(x, 1) in closed form."""
    table = {
        "A": mp.mpf(1) / 2,
        "He": mp.mpf(1) / 3,
        "I": 1 / mp.e,
        "P": 1 / mp.pi,
        "T": 2 / mp.pi,
        "N": 1 / (2 * mp.log(1 + mp.sqrt(2))),
        "Z": mp.mpf(1),
        "Y": mp.mpf(1),
        "G": mp.mpf(0),
        "L": mp.mpf(0),
    }
    return table[kind] ** (1 / mp.mpf(p))


def taylor_coeffs(kind, n, p=1):
    """Coefficients of t^k in M_p(1 + t, 1), k = 0..n, by mpmath's
    numerical differentiation at high precision."""
    with mp.workdps(80):
        f = lambda t: mean(kind, 1 + t, 1, p)  # noqa: E731
        return [c for c in mp.taylor(f, 0, n)]


def divided_difference_coeffs(f, n, h=0.08, levels=2):
    """Taylor coefficients c_0..c_n of a double-precision function f at 1,
    from central k-th differences with Richardson extrapolation in h.

    Each central difference has an error series in h**2, so level l removes
    the h**(2l) term with the factor 4**l.
    """
    from math import comb, factorial

    def central(k, step):
        total = 0.0
        for j in range(k + 1):
            total += (-1) ** j * comb(k, j) * f(1.0 + (k / 2 - j) * step)
        return total / step ** k

    out = []
    for k in range(n + 1):
        if k == 0:
            out.append(f(1.0))
            continue
        table = [central(k, h / 2 ** i) for i in range(levels + 1)]
        for lev in range(1, levels + 1):
            fac = 4.0 ** lev
            table = [(fac * table[i + 1] - table[i]) / (fac - 1) for i in range(len(table) - 1)]
        out.append(table[0] / factorial(k))
    return out
