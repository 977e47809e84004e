"""High-precision reference computations, independent of the package code.

Everything here runs in mpmath with its own Gamma function; nothing is
imported from fracbuckle.
"""
import mpmath as mp

DPS = 60


def coeffs(alpha, n, dps=DPS):
    with mp.workdps(dps):
        al = mp.mpf(alpha)
        out = [mp.mpf(1)]
        for k in range(1, n + 1):
            out.append(out[-1] * mp.gamma(2 * k + 1 - al) / mp.gamma(2 * k + 2))
        return out


def poly(alpha, n, x, dps=DPS):
    with mp.workdps(dps):
        c = coeffs(alpha, n, dps)
        x = mp.mpf(x)
        acc = mp.mpf(0)
        for k in range(n, -1, -1):
            acc = acc * x + (-1) ** k * c[k]
        return acc


def smallest_root(alpha, n, x_max, step=0.05, tol=1e-20, dps=DPS):
    """First sign change on a fixed grid, bisected at ``dps`` digits."""
    with mp.workdps(dps):
        c = [(-1) ** k * v for k, v in enumerate(coeffs(alpha, n, dps))]

        def p(x):
            acc = mp.mpf(0)
            for ck in reversed(c):
                acc = acc * x + ck
            return acc

        step = mp.mpf(step)
        lo = mp.mpf(0)
        i = 1
        while lo < x_max:
            hi = i * step
            if p(hi) <= 0:
                break
            lo = hi
            i += 1
        else:
            return None
        if lo >= x_max:
            return None
        tol = mp.mpf(tol)
        while hi - lo > tol:
            mid = (lo + hi) / 2
            if p(mid) > 0:
                lo = mid
            else:
                hi = mid
        return (lo + hi) / 2
