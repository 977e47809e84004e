"""Pure-Python polynomial kernels (fallback for the compiled ``_kernels``).

Both backends implement the same algorithms with error-free transformations,
so for finite inputs they return bit-identical results.
"""
import math

_SPLITTER = 134217729.0  # 2**27 + 1


def _two_prod(a, b):
    p = a * b
    t = _SPLITTER * a
    ah = t - (t - a)
    al = a - ah
    t = _SPLITTER * b
    bh = t - (t - b)
    bl = b - bh
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def horner_comp(c, x):
    """Compensated Horner evaluation of sum(c[k] * x**k)."""
    n = len(c) - 1
    s = c[n]
    err = 0.0
    for i in range(n - 1, -1, -1):
        # TwoProduct(s, x), inlined
        p = s * x
        t = _SPLITTER * s
        sh = t - (t - s)
        sl = s - sh
        t = _SPLITTER * x
        xh = t - (t - x)
        xl = x - xh
        pi = ((sh * xh - p) + sh * xl + sl * xh) + sl * xl
        # TwoSum(p, c[i])
        ci = c[i]
        s = p + ci
        z = s - p
        sigma = (p - (s - z)) + (ci - z)
        err = err * x + (pi + sigma)
    return s + err


def horner_comp_many(c, xs):
    return [horner_comp(c, x) for x in xs]


def horner_plain(c, x):
    s = c[-1]
    for i in range(len(c) - 2, -1, -1):
        s = s * x + c[i]
    return s


def _dive(c, d, a, b, da, db, depth):
    m = 0.5 * (a + b)
    if horner_comp(c, m) <= 0.0:
        return a, m
    if depth <= 1:
        return None
    dm = horner_comp(d, m)
    if da < 0.0 < dm:
        hit = _dive(c, d, a, m, da, dm, depth - 1)
        if hit is not None:
            return hit
    if dm < 0.0 < db:
        return _dive(c, d, m, b, dm, db, depth - 1)
    return None


def first_sign_change(c, d, x_max, step, levels):
    """First cell [a, b] in (0, x_max] with p(a) > 0 >= p(b), else None.

    Cells whose endpoint slopes show a local minimum are halved up to
    ``levels`` times looking for a hidden dip below zero.
    """
    n_steps = int(math.ceil(x_max / step))
    a = 0.0
    pa = horner_comp(c, a)
    if pa <= 0.0:
        return None
    da = horner_comp(d, a)
    for i in range(1, n_steps + 1):
        b = i * step
        if b > x_max:
            b = x_max
        pb = horner_comp(c, b)
        if pb <= 0.0:
            return a, b
        db = horner_comp(d, b)
        if levels > 0 and da < 0.0 < db:
            hit = _dive(c, d, a, b, da, db, levels)
            if hit is not None:
                return hit
        a, da = b, db
    return None


def bisect(c, lo, hi, tol, max_iter):
    """Bisection keeping p(lo) > 0 >= p(hi); returns (lo, hi, iterations)."""
    it = 0
    while hi - lo > tol and it < max_iter:
        m = 0.5 * (lo + hi)
        if m <= lo or m >= hi:
            break
        if horner_comp(c, m) > 0.0:
            lo = m
        else:
            hi = m
        it += 1
    return lo, hi, it
