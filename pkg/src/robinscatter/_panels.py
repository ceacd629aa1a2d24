"""Cumulative panel quadrature with exponential kernels on uniform grids.

The Volterra-type iterations all reduce to running integrals of the form

    int e^{w y} f(y) dy

where f is smooth on the scale of the potential and w = 0, +-i*zeta or
+-2i*zeta.  Each grid interval carries the cubic through its four nearest
nodes; that cubic is integrated against e^{w u} in closed form, so the grid
only has to resolve f, never the oscillation or growth of the kernel.
Global accuracy is O(h^4) uniformly in w.

All kernels used by the solvers have Re(w*h) <= 0 or mildly positive; the
suffix scan additionally guards the growing back-multiplier against
overflow (the discarded values are bounded by integral tails the caller
has already made negligible).
"""

from __future__ import annotations

import numpy as np

# Coefficients of v^p (rows) over the four stencil values (columns) for the
# interpolating cubic on an interval at offset o within its stencil.
_A0 = np.array([
    [1.0, 0.0, 0.0, 0.0],
    [-11.0 / 6.0, 3.0, -1.5, 1.0 / 3.0],
    [1.0, -2.5, 2.0, -0.5],
    [-1.0 / 6.0, 0.5, -0.5, 1.0 / 6.0],
])
_A1 = np.array([
    [0.0, 1.0, 0.0, 0.0],
    [-1.0 / 3.0, -0.5, 1.0, -1.0 / 6.0],
    [0.5, -1.0, 0.5, 0.0],
    [-1.0 / 6.0, 0.5, -0.5, 1.0 / 6.0],
])
_A2 = np.array([
    [0.0, 0.0, 1.0, 0.0],
    [1.0 / 6.0, -1.0, 0.5, 1.0 / 3.0],
    [0.0, 0.5, -1.0, 0.5],
    [-1.0 / 6.0, 0.5, -0.5, 1.0 / 6.0],
])

_EXP_GUARD = 600.0  # max real exponent fed to np.exp in scaled scans


def exp_moments(alpha: complex) -> np.ndarray:
    """Return m_p(alpha) = int_0^1 e^{alpha v} v^p dv for p = 0..3."""
    if abs(alpha) <= 4.0:
        # Taylor series; terms alpha^q / (q! (p+q+1)), converged well below
        # double precision at |alpha| <= 4 with 40 terms.
        m = np.zeros(4, dtype=complex)
        term = 1.0 + 0.0j  # alpha^q / q!
        for q in range(40):
            denom = q + 1.0
            m += term / np.array([denom, denom + 1, denom + 2, denom + 3])
            term = term * alpha / (q + 1.0)
            if abs(term) < 1e-20:
                break
        return m
    ea = np.exp(alpha)
    m = np.empty(4, dtype=complex)
    m[0] = (ea - 1.0) / alpha
    for p in range(1, 4):
        m[p] = (ea - p * m[p - 1]) / alpha
    return m


def cubic_coeffs(f: np.ndarray) -> np.ndarray:
    """Per-interval cubic coefficients, shape (4, n_intervals).

    f holds node values on a uniform grid (n_intervals + 1 points,
    n_intervals >= 3); coefficient p multiplies v^p with v in [0, 1] the
    local coordinate of the interval.
    """
    f = np.asarray(f)
    m = f.shape[0] - 1
    if m < 3:
        raise ValueError("need at least 4 grid points")
    c = np.empty((4, m), dtype=np.result_type(f.dtype, np.float64))
    for p in range(4):
        c[p, 1:m - 1] = (_A1[p, 0] * f[0:m - 2] + _A1[p, 1] * f[1:m - 1]
                         + _A1[p, 2] * f[2:m] + _A1[p, 3] * f[3:m + 1])
        c[p, 0] = _A0[p] @ f[0:4]
        c[p, m - 1] = _A2[p] @ f[m - 3:m + 1]
    return c


def panel_integrals(f: np.ndarray, h: float, w: complex = 0.0) -> np.ndarray:
    """P_i = int_0^h e^{w u} f(x_i + u) du for every interval i."""
    c = cubic_coeffs(f)
    mom = exp_moments(w * h)
    return h * (mom[0] * c[0] + mom[1] * c[1] + mom[2] * c[2] + mom[3] * c[3])


def forward_cumulative(f: np.ndarray, h: float, w: complex = 0.0) -> np.ndarray:
    """F_j = int_{x_0}^{x_j} e^{w (y - x_0)} f(y) dy on all grid points.

    Caller must keep Re(w) * span below the overflow guard; phases are
    referenced to the grid start.
    """
    p = panel_integrals(f, h, w)
    m = p.shape[0]
    out = np.zeros(m + 1, dtype=complex)
    if w == 0.0:
        np.cumsum(p, out=out[1:])
        return out
    expo = w * h * np.arange(m)
    np.cumsum(np.exp(expo) * p, out=out[1:])
    return out


def suffix_cumulative(f: np.ndarray, h: float, w: complex = 0.0) -> np.ndarray:
    """K_j = int_{x_j}^{x_end} e^{w (y - x_j)} f(y) dy on all grid points.

    Requires Re(w) <= 0 (decaying or oscillatory kernel).  Entries whose
    back-multiplier would overflow are set to zero; they are bounded by
    integral tails of |f| that the solvers keep negligible.
    """
    p = panel_integrals(f, h, w)
    m = p.shape[0]
    out = np.zeros(m + 1, dtype=complex)
    if w == 0.0:
        out[:m] = np.cumsum(p[::-1])[::-1]
        return out
    if w.real > 1e-15:
        raise ValueError("suffix scan needs Re(w) <= 0")
    expo = w * h * np.arange(m)
    scaled = np.zeros(m, dtype=complex)
    dec = expo.real > -_EXP_GUARD
    scaled[dec] = np.exp(expo[dec]) * p[dec]
    s = np.cumsum(scaled[::-1])[::-1]
    back = -w * h * np.arange(m + 1)
    safe = back.real < _EXP_GUARD
    out[:m][safe[:m]] = np.exp(back[:m][safe[:m]]) * s[safe[:m]]
    return out


def integrate(f: np.ndarray, h: float) -> complex:
    """Integral of f over the whole grid."""
    return panel_integrals(f, h).sum()
