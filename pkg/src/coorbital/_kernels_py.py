"""Pure Python twin of the compiled kernel core.

Every expression here mirrors ``_kernels.pyx`` operation for operation
(same association, ``s*s*s`` instead of powers) so that both backends
produce bit-identical doubles. Keep the two files in sync.

No domain checking happens at this level; callers guarantee arguments
stay inside the open interval (0, 2*pi) and the admissible strip.
"""

import math

TWO_PI = 2.0 * math.pi


def f_eval(theta):
    s = math.sin(0.5 * theta)
    if s < 0.0:
        s = -s
    c = 8.0 * (s * s * s)
    return math.sin(theta) * (1.0 - 1.0 / c)


def f_prime(theta):
    s = math.sin(0.5 * theta)
    if s < 0.0:
        s = -s
    ct = math.cos(theta)
    return ct + (3.0 + ct) / (16.0 * (s * s * s))


def f_double_prime(theta):
    s = math.sin(0.5 * theta)
    if s < 0.0:
        s = -s
    s2 = s * s
    return -math.sin(theta) - (11.0 + math.cos(theta)) * math.cos(0.5 * theta) / (32.0 * (s2 * s2))


def curve_eval(theta1, theta2):
    f1 = f_eval(theta1)
    f12 = f_eval(theta1 + theta2)
    return f1 * f1 - f12 * f12 - f_eval(theta2) * f_eval(TWO_PI - 2.0 * theta1 - theta2)


def curve_scan(theta2, lo, hi, n_cells):
    """Curve-function values at the n_cells+1 uniform nodes of [lo, hi]."""
    step = (hi - lo) / n_cells
    out = []
    for k in range(n_cells + 1):
        x = lo + k * step
        out.append(curve_eval(x, theta2))
    return out
