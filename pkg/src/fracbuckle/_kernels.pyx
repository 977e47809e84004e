# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled polynomial kernels; see ``_kernels_py`` for the reference version."""
from libc.math cimport ceil, fma


cdef inline double _horner(const double[::1] c, double x) noexcept nogil:
    cdef Py_ssize_t n = c.shape[0] - 1
    cdef Py_ssize_t i
    cdef double s = c[n]
    cdef double err = 0.0
    cdef double p, pi, ci, z, sigma
    for i in range(n - 1, -1, -1):
        p = s * x
        pi = fma(s, x, -p)
        ci = c[i]
        s = p + ci
        z = s - p
        sigma = (p - (s - z)) + (ci - z)
        err = err * x + (pi + sigma)
    return s + err


def horner_comp(const double[::1] c, double x):
    return _horner(c, x)


def horner_comp_many(const double[::1] c, xs):
    cdef list out = []
    cdef double x
    for x in xs:
        out.append(_horner(c, x))
    return out


def horner_plain(const double[::1] c, double x):
    cdef Py_ssize_t i
    cdef double s = c[c.shape[0] - 1]
    for i in range(c.shape[0] - 2, -1, -1):
        s = s * x + c[i]
    return s


cdef bint _dive(const double[::1] c, const double[::1] d, double a, double b,
                double da, double db, int depth, double* out) noexcept nogil:
    cdef double m = 0.5 * (a + b)
    cdef double dm
    if _horner(c, m) <= 0.0:
        out[0] = a
        out[1] = m
        return True
    if depth <= 1:
        return False
    dm = _horner(d, m)
    if da < 0.0 < dm:
        if _dive(c, d, a, m, da, dm, depth - 1, out):
            return True
    if dm < 0.0 < db:
        return _dive(c, d, m, b, dm, db, depth - 1, out)
    return False


def first_sign_change(const double[::1] c, const double[::1] d, double x_max,
                      double step, int levels):
    cdef Py_ssize_t n_steps = <Py_ssize_t>ceil(x_max / step)
    cdef Py_ssize_t i
    cdef double a = 0.0, b, pa, pb, da, db
    cdef double out[2]
    cdef bint found = False
    with nogil:
        pa = _horner(c, a)
        if pa > 0.0:
            da = _horner(d, a)
            for i in range(1, n_steps + 1):
                b = i * step
                if b > x_max:
                    b = x_max
                pb = _horner(c, b)
                if pb <= 0.0:
                    out[0] = a
                    out[1] = b
                    found = True
                    break
                db = _horner(d, b)
                if levels > 0 and da < 0.0 < db:
                    if _dive(c, d, a, b, da, db, levels, out):
                        found = True
                        break
                a = b
                da = db
    if found:
        return out[0], out[1]
    return None


def bisect(const double[::1] c, double lo, double hi, double tol, int max_iter):
    cdef int it = 0
    cdef double m
    with nogil:
        while hi - lo > tol and it < max_iter:
            m = 0.5 * (lo + hi)
            if m <= lo or m >= hi:
                break
            if _horner(c, m) > 0.0:
                lo = m
            else:
                hi = m
            it += 1
    return lo, hi, it
