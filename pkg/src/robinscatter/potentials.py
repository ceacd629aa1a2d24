"""Analytic catalog of decaying potentials on the half-line.

Every potential carries exact (or high-precision) derivatives at any order,
closed-form moments where available, and monotone upper bounds for the
absolute tail integrals.  Solvers use the tail bounds for truncation
control; the high-energy expansion needs the derivatives at the origin
exactly, which is why the catalog is analytic rather than sampled.

Instances are immutable after construction and safe to share across
workers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum
from typing import Callable

import numpy as np
from numpy.polynomial.hermite import hermval
from scipy import integrate
from scipy.interpolate import CubicSpline
from scipy.special import erfc

from .errors import ValidationError

__all__ = [
    "DecayClass",
    "Moments",
    "Potential",
    "RobinParameter",
    "make_exponential",
    "make_gaussian",
    "make_compact_bump",
    "scale",
    "add",
    "parse_potential",
]


class DecayClass(IntEnum):
    """Certified decay of the potential; stronger classes imply weaker ones.

    INTEGRABLE:   int |V| < infinity
    FIRST_MOMENT: int (1+x)|V| < infinity
    SMOOTH_RAPID: smooth with rapidly decaying derivatives of all orders
    """

    INTEGRABLE = 1
    FIRST_MOMENT = 2
    SMOOTH_RAPID = 3


@dataclass(frozen=True)
class Moments:
    """Moment record; *_err fields are absolute error bounds (0 = exact)."""

    int_V: float
    int_V2: float
    V0: float
    dV0: float
    d2V0: float
    int_V_err: float = 0.0
    int_V2_err: float = 0.0


@dataclass(frozen=True)
class Potential:
    """Decaying potential V on [0, inf) with derivative and tail data.

    Attributes
    ----------
    eval : callable (x, j) -> V^(j)(x)
        Vectorized over x; j is the derivative order (j >= 0).
    decay_class : DecayClass
        Which decay condition the instance certifies.
    tail_abs : callable x -> upper bound for int_x^inf |V(y)| dy
    tail_abs_moment : callable x -> upper bound for int_x^inf y |V(y)| dy
    moments : Moments
    spec : str
        Normalized grammar string, e.g. ``exp:1,1``.
    sup_abs : float
        Upper bound for sup |V| (used by eigenvalue bracket heuristics).
    """

    eval: Callable[[np.ndarray, int], np.ndarray]
    decay_class: DecayClass
    tail_abs: Callable[[np.ndarray], np.ndarray]
    tail_abs_moment: Callable[[np.ndarray], np.ndarray]
    moments: Moments
    spec: str
    sup_abs: float

    def __call__(self, x, j: int = 0):
        return self.eval(x, j)

    def __repr__(self) -> str:  # keep reprs short; callables are noise
        return f"Potential({self.spec!r}, {self.decay_class.name})"


@dataclass(frozen=True)
class RobinParameter:
    """Boundary coupling gamma in u'(0) = gamma * u(0).

    Negative gamma is an attractive interaction with the boundary,
    positive gamma a repulsive one.
    """

    gamma: float

    def __post_init__(self):
        if not math.isfinite(self.gamma):
            raise ValidationError("gamma must be finite")


def gamma_value(gamma) -> float:
    """Accept a RobinParameter or a plain real number."""
    g = gamma.gamma if isinstance(gamma, RobinParameter) else float(gamma)
    if not math.isfinite(g):
        raise ValidationError("gamma must be finite")
    return g


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValidationError(f"{name} must be finite, got {value!r}")
    return value


def _fmt(value: float) -> str:
    return f"{value:.17g}"


def make_exponential(c: float, mu: float) -> Potential:
    """V(x) = c * exp(-mu x) with mu > 0."""
    c = _check_finite("c", c)
    mu = _check_finite("mu", mu)
    if mu <= 0.0:
        raise ValidationError(f"mu must be positive, got {mu}")

    def ev(x, j=0):
        x = np.asarray(x, dtype=float)
        return c * (-mu) ** j * np.exp(-mu * x)

    def tail(x):
        x = np.asarray(x, dtype=float)
        return (abs(c) / mu) * np.exp(-mu * x)

    def tail_moment(x):
        x = np.asarray(x, dtype=float)
        return abs(c) * np.exp(-mu * x) * (x / mu + 1.0 / mu**2)

    moments = Moments(int_V=c / mu, int_V2=c * c / (2.0 * mu),
                      V0=c, dV0=-c * mu, d2V0=c * mu * mu)
    return Potential(ev, DecayClass.SMOOTH_RAPID, tail, tail_moment,
                     moments, f"exp:{_fmt(c)},{_fmt(mu)}", abs(c))


def make_gaussian(c: float, sigma: float) -> Potential:
    """V(x) = c * exp(-(x/sigma)^2) with sigma > 0."""
    c = _check_finite("c", c)
    sigma = _check_finite("sigma", sigma)
    if sigma <= 0.0:
        raise ValidationError(f"sigma must be positive, got {sigma}")

    def ev(x, j=0):
        t = np.asarray(x, dtype=float) / sigma
        base = c * np.exp(-t * t)
        if j == 0:
            return base
        # d^j/dt^j e^{-t^2} = (-1)^j H_j(t) e^{-t^2}, physicists' Hermite
        coeffs = np.zeros(j + 1)
        coeffs[j] = 1.0
        return (-1.0) ** j * sigma ** (-j) * hermval(t, coeffs) * base

    half_gauss = 0.5 * sigma * math.sqrt(math.pi)

    def tail(x):
        t = np.asarray(x, dtype=float) / sigma
        return abs(c) * half_gauss * erfc(t)

    def tail_moment(x):
        t = np.asarray(x, dtype=float) / sigma
        return abs(c) * 0.5 * sigma * sigma * np.exp(-t * t)

    moments = Moments(int_V=c * half_gauss,
                      int_V2=c * c * sigma * math.sqrt(2.0 * math.pi) / 4.0,
                      V0=c, dV0=0.0, d2V0=-2.0 * c / sigma**2)
    return Potential(ev, DecayClass.SMOOTH_RAPID, tail, tail_moment,
                     moments, f"gauss:{_fmt(c)},{_fmt(sigma)}", abs(c))


# ---------------------------------------------------------------------------
# Smooth compactly supported bump, profile g(t) = exp(1 - 1/(1-t^2)) on [0, 1).
# Derivatives of g come from symbolic differentiation (cached per order);
# the scaled-coordinate tail integrals are potential-independent and cached.

_BUMP_EDGE = 1.0 - 1e-6  # g and all derivatives are below 1e-200000 here
_bump_deriv_cache: dict[int, Callable] = {}
_bump_tail_cache: dict = {}


def _bump_deriv(j: int) -> Callable:
    fn = _bump_deriv_cache.get(j)
    if fn is None:
        import sympy as sp

        t = sp.Symbol("t")
        expr = sp.exp(1 - 1 / (1 - t**2))
        fn = sp.lambdify(t, sp.diff(expr, t, j), "numpy")
        _bump_deriv_cache[j] = fn
    return fn


def _bump_profile(t: np.ndarray, j: int) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    out = np.zeros_like(t)
    inside = np.abs(t) < _BUMP_EDGE
    if np.any(inside):
        vals = _bump_deriv(j)(t[inside])
        out[inside] = np.broadcast_to(vals, t[inside].shape)
    return out


def _bump_tables():
    """Scaled-coordinate integrals of the bump profile (computed once)."""
    if not _bump_tail_cache:
        g = lambda t: float(_bump_profile(np.asarray([t]), 0)[0])
        i_g, i_g_err = integrate.quad(g, 0.0, 1.0, epsabs=1e-14, epsrel=1e-13,
                                      limit=200)
        i_g2, i_g2_err = integrate.quad(lambda t: g(t) ** 2, 0.0, 1.0,
                                        epsabs=1e-14, epsrel=1e-13, limit=200)
        ts = np.linspace(0.0, 1.0, 4097)
        gs = _bump_profile(ts, 0)
        cum = CubicSpline(ts, gs).antiderivative()
        cum_t = CubicSpline(ts, ts * gs).antiderivative()
        _bump_tail_cache.update(i_g=i_g, i_g_err=i_g_err, i_g2=i_g2,
                                i_g2_err=i_g2_err, cum=cum, cum_t=cum_t,
                                cum_total=float(cum(1.0)),
                                cum_t_total=float(cum_t(1.0)))
    return _bump_tail_cache


def make_compact_bump(c: float, a: float) -> Potential:
    """Smooth bump V(x) = c * exp(1 - 1/(1-(x/a)^2)) on [0, a), zero beyond.

    V(0) = c, V'(0) = 0 and every derivative vanishes at x = a.
    """
    c = _check_finite("c", c)
    a = _check_finite("a", a)
    if a <= 0.0:
        raise ValidationError(f"a must be positive, got {a}")
    tab = _bump_tables()

    def ev(x, j=0):
        t = np.asarray(x, dtype=float) / a
        return c * a ** (-j) * _bump_profile(t, j)

    def tail(x):
        t = np.clip(np.asarray(x, dtype=float) / a, 0.0, 1.0)
        rest = np.maximum(tab["cum_total"] - tab["cum"](t), 0.0)
        return abs(c) * a * (rest + 1e-14)

    def tail_moment(x):
        t = np.clip(np.asarray(x, dtype=float) / a, 0.0, 1.0)
        rest = np.maximum(tab["cum_t_total"] - tab["cum_t"](t), 0.0)
        return abs(c) * a * a * (rest + 1e-14)

    moments = Moments(int_V=c * a * tab["i_g"],
                      int_V2=c * c * a * tab["i_g2"],
                      V0=c, dV0=0.0, d2V0=-2.0 * c / a**2,
                      int_V_err=abs(c) * a * tab["i_g_err"],
                      int_V2_err=c * c * a * tab["i_g2_err"])
    return Potential(ev, DecayClass.SMOOTH_RAPID, tail, tail_moment,
                     moments, f"bump:{_fmt(c)},{_fmt(a)}", abs(c))


def scale(p: Potential, factor: float) -> Potential:
    """Potential factor * V; moments of V scale linearly, int V^2 by factor^2."""
    factor = _check_finite("factor", factor)
    af = abs(factor)
    m = p.moments

    def ev(x, j=0):
        return factor * p.eval(x, j)

    moments = Moments(int_V=factor * m.int_V, int_V2=factor**2 * m.int_V2,
                      V0=factor * m.V0, dV0=factor * m.dV0,
                      d2V0=factor * m.d2V0,
                      int_V_err=af * m.int_V_err,
                      int_V2_err=factor**2 * m.int_V2_err)
    return Potential(ev, p.decay_class,
                     lambda x: af * p.tail_abs(x),
                     lambda x: af * p.tail_abs_moment(x),
                     moments, f"scale:{_fmt(factor)}*{p.spec}",
                     af * p.sup_abs)


def add(p1: Potential, p2: Potential) -> Potential:
    """Sum potential; tail bounds combine by the triangle inequality."""

    def ev(x, j=0):
        return p1.eval(x, j) + p2.eval(x, j)

    m1, m2 = p1.moments, p2.moments
    # int (V1+V2)^2 has a cross term; recompute by quadrature.
    int_v2, int_v2_err = integrate.quad(
        lambda y: float(ev(np.asarray([y]))[0]) ** 2, 0.0, np.inf,
        epsabs=1e-13, epsrel=1e-12, limit=400)
    moments = Moments(int_V=m1.int_V + m2.int_V, int_V2=int_v2,
                      V0=m1.V0 + m2.V0, dV0=m1.dV0 + m2.dV0,
                      d2V0=m1.d2V0 + m2.d2V0,
                      int_V_err=m1.int_V_err + m2.int_V_err,
                      int_V2_err=int_v2_err + 1e-14 * abs(int_v2))
    return Potential(ev, min(p1.decay_class, p2.decay_class),
                     lambda x: p1.tail_abs(x) + p2.tail_abs(x),
                     lambda x: p1.tail_abs_moment(x) + p2.tail_abs_moment(x),
                     moments, f"sum:{p1.spec}+{p2.spec}",
                     p1.sup_abs + p2.sup_abs)


# ---------------------------------------------------------------------------
# Grammar: exp:c,mu | gauss:c,sigma | bump:c,a | sum:<spec>+<spec>
#          | scale:<factor>*<spec>     (case-insensitive)

def _split_sum(body: str) -> list[str]:
    """Split on '+' at top level; a '+' after e/E belongs to an exponent."""
    parts, start = [], 0
    for i, ch in enumerate(body):
        if ch == "+" and i > 0 and body[i - 1] not in "eE":
            parts.append(body[start:i])
            start = i + 1
    parts.append(body[start:])
    return parts


def _parse_real(token: str, context: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ValidationError(f"bad real {token!r} in {context!r}") from None


def parse_potential(spec: str) -> Potential:
    """Parse a potential grammar string into a Potential."""
    s = spec.strip().lower()
    if ":" not in s:
        raise ValidationError(f"bad potential spec {spec!r}")
    head, body = s.split(":", 1)
    if head == "sum":
        parts = _split_sum(body)
        if len(parts) < 2:
            raise ValidationError(f"sum needs at least two terms: {spec!r}")
        total = parse_potential(parts[0])
        for part in parts[1:]:
            total = add(total, parse_potential(part))
        return total
    if head == "scale":
        if "*" not in body:
            raise ValidationError(f"scale needs factor*<spec>: {spec!r}")
        factor, rest = body.split("*", 1)
        return scale(parse_potential(rest), _parse_real(factor, spec))
    args = body.split(",")
    if len(args) != 2:
        raise ValidationError(f"{head} needs two parameters: {spec!r}")
    x1, x2 = (_parse_real(t, spec) for t in args)
    if head == "exp":
        return make_exponential(x1, x2)
    if head == "gauss":
        return make_gaussian(x1, x2)
    if head == "bump":
        return make_compact_bump(x1, x2)
    raise ValidationError(f"unknown potential kind {head!r} in {spec!r}")


def x_for_tail(p: Potential, eps: float, x_min: float = 1.0) -> float:
    """Smallest grid-friendly x with tail_abs(x) <= eps (doubling search)."""
    x = max(x_min, 1.0)
    for _ in range(60):
        if float(p.tail_abs(x)) <= eps:
            return x
        x *= 2.0
    return x
