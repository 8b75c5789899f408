"""One-dimensional golden-section search helpers.

Used for the t-minimizations over [0, 1] (objectives of the form
t -> ||t X + (1-t) Y|| are convex, so a coarse grid plus local refinement is
exact) and, through negation, for refining support-function maxima.
"""

import math

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def golden_min(f, lo: float, hi: float, tol: float = 1e-10):
    """Golden-section minimization on [lo, hi].

    Returns (x_best, f_best) over every point evaluated, so the result never
    exceeds the true minimum by more than the final bracket allows.
    """
    a, b = float(lo), float(hi)
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = f(c), f(d)
    best_x, best_f = (c, fc) if fc <= fd else (d, fd)
    while (b - a) > tol:
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = f(c)
            if fc < best_f:
                best_x, best_f = c, fc
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = f(d)
            if fd < best_f:
                best_x, best_f = d, fd
    return best_x, best_f
