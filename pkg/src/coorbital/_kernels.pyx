# cython: language_level=3, boundscheck=False, cdivision=True
"""Compiled kernel core.

Expression-for-expression twin of ``_kernels_py``; compiled with
-ffp-contract=off so results are bit-identical to the pure fallback.
Keep the two files in sync.
"""

from libc.math cimport sin, cos, M_PI

cdef double TWO_PI = 2.0 * M_PI


cdef inline double _f(double theta) noexcept nogil:
    cdef double s = sin(0.5 * theta)
    if s < 0.0:
        s = -s
    cdef double c = 8.0 * (s * s * s)
    return sin(theta) * (1.0 - 1.0 / c)


cdef inline double _fp(double theta) noexcept nogil:
    cdef double s = sin(0.5 * theta)
    if s < 0.0:
        s = -s
    cdef double ct = cos(theta)
    return ct + (3.0 + ct) / (16.0 * (s * s * s))


cdef inline double _fpp(double theta) noexcept nogil:
    cdef double s = sin(0.5 * theta)
    if s < 0.0:
        s = -s
    cdef double s2 = s * s
    return -sin(theta) - (11.0 + cos(theta)) * cos(0.5 * theta) / (32.0 * (s2 * s2))


cdef inline double _curve(double theta1, double theta2) noexcept nogil:
    cdef double f1 = _f(theta1)
    cdef double f12 = _f(theta1 + theta2)
    return f1 * f1 - f12 * f12 - _f(theta2) * _f(TWO_PI - 2.0 * theta1 - theta2)


def f_eval(double theta):
    return _f(theta)


def f_prime(double theta):
    return _fp(theta)


def f_double_prime(double theta):
    return _fpp(theta)


def curve_eval(double theta1, double theta2):
    return _curve(theta1, theta2)


def curve_scan(double theta2, double lo, double hi, int n_cells):
    """Curve-function values at the n_cells+1 uniform nodes of [lo, hi]."""
    cdef double step = (hi - lo) / n_cells
    cdef int k
    cdef double x
    out = []
    for k in range(n_cells + 1):
        x = lo + k * step
        out.append(_curve(x, theta2))
    return out
