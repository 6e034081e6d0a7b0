"""Lifetime distributions and their evaluators.

A :class:`LifetimeDistribution` bundles the evaluators every information
measure consumes: pdf, log-pdf, cdf, survival, hazard, cumulative hazard and
quantile.  The module provides the closed-form parametric families used
throughout the measure computations, an adapter that turns a bare pdf into a
full distribution by numerical integration, and finite discrete distributions
for the discrete entropy/varentropy.

All evaluators are pure and the distribution objects are immutable, so they
are safe to share between any number of workers.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq
from scipy.special import gammaincc, gammaln, log_ndtr, ndtr

from .quadrature import DEFAULT_CONFIG, QuadConfig, integrate

_LOG_2PI = math.log(2.0 * math.pi)


class ParameterError(ValueError):
    """A family was constructed with parameters outside its domain."""


class DomainError(ValueError):
    """An evaluator was queried outside the domain where it is defined."""


class DensityMassError(ValueError):
    """A numerically wrapped pdf does not integrate to one."""

    def __init__(self, message, mass):
        super().__init__(message)
        self.mass = mass


def _require(condition: bool, constraint: str):
    if not condition:
        raise ParameterError(f"parameter constraint violated: {constraint}")


def _exp(log_value: float) -> float:
    """exp without OverflowError; singular densities map to math.inf."""
    if log_value > 709.0:
        return math.inf
    if log_value < -745.0:
        return 0.0
    return math.exp(log_value)


@dataclass(frozen=True)
class LifetimeDistribution:
    """A continuous distribution on ``[support_low, support_high)``.

    The log-pdf and log-survival are first-class evaluators rather than logs
    of the linear ones, so integrands such as ``f (log f)^2`` remain accurate
    deep in the tails.  ``cheap_quantile`` marks closed-form quantiles, which
    lets the measure code integrate in probability space.
    """

    name: str
    support_low: float
    support_high: float
    _pdf: Callable[[float], float]
    _log_pdf: Callable[[float], float]
    _cdf: Callable[[float], float]
    _survival: Callable[[float], float]
    _log_survival: Callable[[float], float]
    _quantile: Callable[[float], float]
    log_concave: bool = False
    cheap_quantile: bool = False

    def pdf(self, x: float) -> float:
        if x < self.support_low or x > self.support_high:
            return 0.0
        return self._pdf(x)

    def log_pdf(self, x: float) -> float:
        if x < self.support_low or x > self.support_high:
            return -math.inf
        return self._log_pdf(x)

    def cdf(self, x: float) -> float:
        if x <= self.support_low:
            return 0.0
        if x >= self.support_high:
            return 1.0
        return min(1.0, max(0.0, self._cdf(x)))

    def survival(self, x: float) -> float:
        if x <= self.support_low:
            return 1.0
        if x >= self.support_high:
            return 0.0
        return min(1.0, max(0.0, self._survival(x)))

    def cumulative_hazard(self, x: float) -> float:
        if x <= self.support_low:
            return 0.0
        if x >= self.support_high:
            return math.inf
        return -self._log_survival(x)

    def hazard(self, x: float) -> float:
        s = self.survival(x)
        if s <= 0.0:
            raise DomainError(f"hazard undefined at x={x}: survival is zero")
        lp = self.log_pdf(x)
        if lp == -math.inf:
            return 0.0
        return math.exp(lp - self._log_survival(x))

    def quantile(self, u: float) -> float:
        if not 0.0 <= u <= 1.0:
            raise DomainError(f"quantile argument must lie in [0, 1], got {u}")
        if u == 0.0:
            return self.support_low
        if u == 1.0:
            return self.support_high
        return self._quantile(u)

    def effective_interval(self, tail_cut: float = DEFAULT_CONFIG.tail_cut):
        """Support clipped to finite bounds via extreme quantiles."""
        lo = self.support_low
        if not math.isfinite(lo):
            lo = self.quantile(tail_cut)
        hi = self.support_high
        if not math.isfinite(hi):
            hi = self.quantile(1.0 - tail_cut)
        return lo, hi


def generalized_hazard(d: LifetimeDistribution, t: float, alpha: float) -> float:
    """Failure rate with tilted survival weight, ``f(t) / survival(t)^(1+alpha)``.

    ``alpha = 0`` reduces to the ordinary hazard rate.
    """
    if d.survival(t) <= 0.0:
        raise DomainError(f"generalized hazard undefined at t={t}: survival is zero")
    lp = d.log_pdf(t)
    if lp == -math.inf:
        return 0.0
    return math.exp(lp + (1.0 + alpha) * d.cumulative_hazard(t))


# ---------------------------------------------------------------------------
# numeric quantile: bisection bracket + derivative-free refinement
# ---------------------------------------------------------------------------

def _numeric_quantile(cdf, survival, lo, hi, u, scale=1.0):
    """Solve F(x) = u to ~1e-12 in probability.

    Works in survival space for u > 1/2 so extreme upper quantiles do not
    suffer the 1 - F cancellation.
    """
    if u > 0.5:
        s = 1.0 - u
        g = lambda x: survival(x) - s
    else:
        g = lambda x: cdf(x) - u

    a = lo if math.isfinite(lo) else None
    b = hi if math.isfinite(hi) else None
    if a is None:
        # left bracket end: g > 0 in survival space, g < 0 in cdf space
        a = -scale
        for _ in range(2000):
            ga = g(a)
            if (u > 0.5 and ga >= 0.0) or (u <= 0.5 and ga <= 0.0):
                break
            a *= 2.0
        else:
            raise DomainError("quantile bracketing failed toward -inf")
    if b is None:
        b = scale
        for _ in range(2000):
            gb = g(b)
            if (u > 0.5 and gb <= 0.0) or (u <= 0.5 and gb >= 0.0):
                break
            b *= 2.0
        else:
            raise DomainError("quantile bracketing failed toward +inf")
    if a == b:
        return a
    ga, gb = g(a), g(b)
    if ga == 0.0:
        return a
    if gb == 0.0:
        return b
    if ga * gb > 0.0:
        # the target sits within roundoff of an endpoint
        return a if abs(ga) < abs(gb) else b
    return brentq(g, a, b, xtol=1e-300, rtol=8.9e-16)


# ---------------------------------------------------------------------------
# parametric families
# ---------------------------------------------------------------------------

def uniform(theta: float) -> LifetimeDistribution:
    """Uniform on (0, theta)."""
    _require(theta > 0, "uniform requires theta > 0")
    log_inv = -math.log(theta)
    return LifetimeDistribution(
        name=f"uniform(theta={theta:g})",
        support_low=0.0, support_high=theta,
        _pdf=lambda x: 1.0 / theta,
        _log_pdf=lambda x: log_inv,
        _cdf=lambda x: x / theta,
        _survival=lambda x: 1.0 - x / theta,
        _log_survival=lambda x: math.log1p(-x / theta),
        _quantile=lambda u: u * theta,
        log_concave=True, cheap_quantile=True)


def exponential(lam: float) -> LifetimeDistribution:
    _require(lam > 0, "exponential requires lambda > 0")
    log_lam = math.log(lam)
    return LifetimeDistribution(
        name=f"exponential(lambda={lam:g})",
        support_low=0.0, support_high=math.inf,
        _pdf=lambda x: lam * math.exp(-lam * x),
        _log_pdf=lambda x: log_lam - lam * x,
        _cdf=lambda x: -math.expm1(-lam * x),
        _survival=lambda x: math.exp(-lam * x),
        _log_survival=lambda x: -lam * x,
        _quantile=lambda u: -math.log1p(-u) / lam,
        log_concave=True, cheap_quantile=True)


def triangular() -> LifetimeDistribution:
    """Density 2(1 - x) on (0, 1)."""
    return LifetimeDistribution(
        name="triangular",
        support_low=0.0, support_high=1.0,
        _pdf=lambda x: 2.0 * (1.0 - x),
        _log_pdf=lambda x: math.log(2.0) + math.log1p(-x) if x < 1.0 else -math.inf,
        _cdf=lambda x: x * (2.0 - x),
        _survival=lambda x: (1.0 - x) ** 2,
        _log_survival=lambda x: 2.0 * math.log1p(-x),
        _quantile=lambda u: 1.0 - math.sqrt(1.0 - u),
        log_concave=True, cheap_quantile=True)


def weibull(lam: float, k: float) -> LifetimeDistribution:
    _require(lam > 0, "weibull requires lambda > 0")
    _require(k > 0, "weibull requires k > 0")
    log_k_lam = math.log(k / lam)

    def log_pdf(x):
        if x <= 0.0:
            return math.inf if k < 1.0 else (log_k_lam if k == 1.0 else -math.inf)
        z = x / lam
        return log_k_lam + (k - 1.0) * math.log(z) - z ** k

    return LifetimeDistribution(
        name=f"weibull(lambda={lam:g},k={k:g})",
        support_low=0.0, support_high=math.inf,
        _pdf=lambda x: _exp(log_pdf(x)),
        _log_pdf=log_pdf,
        _cdf=lambda x: -math.expm1(-((x / lam) ** k)),
        _survival=lambda x: math.exp(-((x / lam) ** k)),
        _log_survival=lambda x: -((x / lam) ** k),
        _quantile=lambda u: lam * (-math.log1p(-u)) ** (1.0 / k),
        log_concave=k >= 1.0, cheap_quantile=True)


def gamma(r: float, theta: float) -> LifetimeDistribution:
    """Shape ``r``, scale ``theta``; pdf (t/theta)^(r-1) exp(-t/theta) / (theta Gamma(r))."""
    _require(r > 0, "gamma requires r > 0")
    _require(theta > 0, "gamma requires theta > 0")
    log_norm = -math.log(theta) - gammaln(r)

    def log_pdf(x):
        if x <= 0.0:
            return math.inf if r < 1.0 else (log_norm if r == 1.0 else -math.inf)
        z = x / theta
        return log_norm + (r - 1.0) * math.log(z) - z

    def survival(x):
        return float(gammaincc(r, x / theta))

    def cdf(x):
        return 1.0 - survival(x)

    dist = LifetimeDistribution(
        name=f"gamma(r={r:g},theta={theta:g})",
        support_low=0.0, support_high=math.inf,
        _pdf=lambda x: _exp(log_pdf(x)),
        _log_pdf=log_pdf,
        _cdf=cdf,
        _survival=survival,
        _log_survival=lambda x: math.log(max(survival(x), 5e-324)),
        _quantile=lambda u: _numeric_quantile(cdf, survival, 0.0, math.inf, u,
                                              scale=r * theta),
        log_concave=r >= 1.0, cheap_quantile=False)
    return dist


def lognormal(mu: float, sigma: float) -> LifetimeDistribution:
    _require(sigma > 0, "lognormal requires sigma > 0")

    def z(x):
        return (math.log(x) - mu) / sigma

    def log_pdf(x):
        if x <= 0.0:
            return -math.inf
        return -math.log(x) - math.log(sigma) - 0.5 * _LOG_2PI - 0.5 * z(x) ** 2

    def survival(x):
        return float(ndtr(-z(x))) if x > 0.0 else 1.0

    def cdf(x):
        return float(ndtr(z(x))) if x > 0.0 else 0.0

    def log_survival(x):
        return float(log_ndtr(-z(x))) if x > 0.0 else 0.0

    return LifetimeDistribution(
        name=f"lognormal(mu={mu:g},sigma={sigma:g})",
        support_low=0.0, support_high=math.inf,
        _pdf=lambda x: _exp(log_pdf(x)),
        _log_pdf=log_pdf,
        _cdf=cdf,
        _survival=survival,
        _log_survival=log_survival,
        _quantile=lambda u: _numeric_quantile(cdf, survival, 0.0, math.inf, u,
                                              scale=math.exp(mu)),
        log_concave=False, cheap_quantile=False)


def generalized_pareto(a: float, b: float) -> LifetimeDistribution:
    """Survival ``(b / (a t + b))^(1/a + 1)``; mean residual life ``a t + b``.

    ``a = 0`` is the exponential limit; ``-1 < a < 0`` has bounded support
    ``(0, -b/a)``; ``a > 0`` has a heavy (Pareto) tail.
    """
    _require(a > -1, "generalized pareto requires a > -1")
    _require(b > 0, "generalized pareto requires b > 0")
    if a == 0.0:
        d = exponential(1.0 / b)
        return LifetimeDistribution(
            name=f"genpareto(a=0,b={b:g})",
            support_low=0.0, support_high=math.inf,
            _pdf=d._pdf, _log_pdf=d._log_pdf, _cdf=d._cdf,
            _survival=d._survival, _log_survival=d._log_survival,
            _quantile=d._quantile,
            log_concave=True, cheap_quantile=True)

    high = math.inf if a > 0 else -b / a
    inv_a = 1.0 / a
    log_f0 = math.log1p(a) + (inv_a + 1.0) * math.log(b)

    def log_pdf(x):
        return log_f0 - (inv_a + 2.0) * math.log(a * x + b)

    def log_survival(x):
        return -(inv_a + 1.0) * math.log1p(a * x / b)

    def quantile(u):
        # survival = 1-u  =>  a x + b = b (1-u)^(-a/(1+a))
        return (b / a) * (math.pow(1.0 - u, -a / (1.0 + a)) - 1.0)

    # log f is concave iff the exponent 1/a + 2 is <= 0, i.e. -1/2 <= a < 0
    return LifetimeDistribution(
        name=f"genpareto(a={a:g},b={b:g})",
        support_low=0.0, support_high=high,
        _pdf=lambda x: _exp(log_pdf(x)),
        _log_pdf=log_pdf,
        _cdf=lambda x: -math.expm1(log_survival(x)),
        _survival=lambda x: math.exp(log_survival(x)),
        _log_survival=log_survival,
        _quantile=quantile,
        log_concave=-0.5 <= a < 0.0, cheap_quantile=True)


def modified_pareto(lam: float) -> LifetimeDistribution:
    """First arrival of a geometric counting process: survival 1/(1 + lam t)."""
    _require(lam > 0, "modified pareto requires lambda > 0")
    log_lam = math.log(lam)
    return LifetimeDistribution(
        name=f"modpareto(lambda={lam:g})",
        support_low=0.0, support_high=math.inf,
        _pdf=lambda x: lam / (1.0 + lam * x) ** 2,
        _log_pdf=lambda x: log_lam - 2.0 * math.log1p(lam * x),
        _cdf=lambda x: lam * x / (1.0 + lam * x),
        _survival=lambda x: 1.0 / (1.0 + lam * x),
        _log_survival=lambda x: -math.log1p(lam * x),
        _quantile=lambda u: u / (lam * (1.0 - u)),
        log_concave=False, cheap_quantile=True)


def generalized_exponential(lam: float, b: float) -> LifetimeDistribution:
    """Survival ``1 - (1 - exp(-lam t))^b``."""
    _require(lam > 0, "generalized exponential requires lambda > 0")
    _require(b > 0, "generalized exponential requires b > 0")
    log_blam = math.log(b * lam)

    def log_pdf(x):
        if x <= 0.0:
            return math.inf if b < 1.0 else (log_blam if b == 1.0 else -math.inf)
        return log_blam - lam * x + (b - 1.0) * math.log(-math.expm1(-lam * x))

    def survival(x):
        return -math.expm1(b * math.log(-math.expm1(-lam * x)))

    return LifetimeDistribution(
        name=f"genexp(lambda={lam:g},b={b:g})",
        support_low=0.0, support_high=math.inf,
        _pdf=lambda x: _exp(log_pdf(x)),
        _log_pdf=log_pdf,
        _cdf=lambda x: math.exp(b * math.log(-math.expm1(-lam * x))) if x > 0 else 0.0,
        _survival=survival,
        _log_survival=lambda x: math.log(max(survival(x), 5e-324)),
        _quantile=lambda u: -math.log1p(-u ** (1.0 / b)) / lam,
        log_concave=b >= 1.0, cheap_quantile=True)


def gaussian_mixture3(p: float, q: float, h: float) -> LifetimeDistribution:
    """Three unit-variance normal components at ``h, 0, -h`` with weights ``p, 1-p-q, q``.

    Supported on the whole real line; admitted for the unconditioned measures.
    """
    _require(0 <= q <= 1 - p <= 1, "mixture requires 0 <= q <= 1 - p <= 1")
    _require(h > 0, "mixture requires h > 0")
    comps = [(w, m) for w, m in ((p, h), (1.0 - p - q, 0.0), (q, -h)) if w > 0.0]
    log_ws = [math.log(w) for w, _ in comps]

    def log_pdf(x):
        exps = [lw - 0.5 * (x - m) ** 2 for lw, (_, m) in zip(log_ws, comps)]
        top = max(exps)
        return top + math.log(sum(math.exp(e - top) for e in exps)) - 0.5 * _LOG_2PI

    def cdf(x):
        return float(sum(w * ndtr(x - m) for w, m in comps))

    def survival(x):
        return float(sum(w * ndtr(m - x) for w, m in comps))

    return LifetimeDistribution(
        name=f"gaussmix3(p={p:g},q={q:g},h={h:g})",
        support_low=-math.inf, support_high=math.inf,
        _pdf=lambda x: _exp(log_pdf(x)),
        _log_pdf=log_pdf,
        _cdf=cdf,
        _survival=survival,
        _log_survival=lambda x: math.log(max(survival(x), 5e-324)),
        _quantile=lambda u: _numeric_quantile(cdf, survival, -math.inf, math.inf, u,
                                              scale=h + 2.0),
        log_concave=False, cheap_quantile=False)


# ---------------------------------------------------------------------------
# family-spec string grammar: name(param=value,...), case-insensitive
# ---------------------------------------------------------------------------

_FAMILIES = {
    "uniform": (uniform, ("theta",)),
    "exponential": (exponential, ("lambda",)),
    "exp": (exponential, ("lambda",)),
    "triangular": (triangular, ()),
    "weibull": (weibull, ("lambda", "k")),
    "gamma": (gamma, ("r", "theta")),
    "lognormal": (lognormal, ("mu", "sigma")),
    "genpareto": (generalized_pareto, ("a", "b")),
    "generalizedpareto": (generalized_pareto, ("a", "b")),
    "modpareto": (modified_pareto, ("lambda",)),
    "modifiedpareto": (modified_pareto, ("lambda",)),
    "genexp": (generalized_exponential, ("lambda", "b")),
    "generalizedexponential": (generalized_exponential, ("lambda", "b")),
    "gaussmix3": (gaussian_mixture3, ("p", "q", "h")),
    "gaussianmixture3": (gaussian_mixture3, ("p", "q", "h")),
}


def parse_spec_params(body: str) -> dict:
    """Parse the ``param=value,...`` body of a spec string."""
    params = {}
    body = body.strip()
    if not body:
        return params
    for part in body.split(","):
        if "=" not in part:
            raise ParameterError(f"malformed parameter {part!r}; expected name=value")
        key, _, value = part.partition("=")
        key = key.strip().lower()
        try:
            params[key] = float(value.strip())
        except ValueError:
            raise ParameterError(f"non-numeric value for parameter {key!r}: {value!r}")
    return params


def split_spec(spec: str):
    """Split ``name(body)`` into a lowercase name and parameter dict."""
    spec = spec.strip()
    open_idx = spec.find("(")
    if open_idx < 0 or not spec.endswith(")"):
        raise ParameterError(f"malformed distribution spec {spec!r}; expected name(param=value,...)")
    name = spec[:open_idx].strip().lower()
    return name, parse_spec_params(spec[open_idx + 1:-1])


def make_distribution(spec: str) -> LifetimeDistribution:
    """Build a parametric family from its spec string, e.g. ``weibull(lambda=1,k=3.5)``."""
    name, params = split_spec(spec)
    if name not in _FAMILIES:
        raise ParameterError(f"unknown distribution family {name!r}")
    ctor, param_names = _FAMILIES[name]
    unknown = set(params) - set(param_names)
    if unknown:
        raise ParameterError(f"unknown parameters for {name!r}: {sorted(unknown)}")
    missing = set(param_names) - set(params)
    if missing:
        raise ParameterError(f"missing parameters for {name!r}: {sorted(missing)}")
    args = [params[p] for p in param_names]
    return ctor(*args)


# ---------------------------------------------------------------------------
# numeric density: a bare pdf promoted to a full distribution
# ---------------------------------------------------------------------------

class _NumericCore:
    """Quadrature-built cdf over a graded grid, with a lazily built inverse.

    The inverse interpolant powering the quantile is created on first use and
    exactly once, also under concurrent access.
    """

    def __init__(self, pdf, lo, hi, panels):
        self.pdf = pdf
        self.lo = lo
        self.hi = hi
        nodes = _graded_grid(lo, hi, panels)
        masses = _panel_masses(pdf, nodes)
        cdf_nodes = np.concatenate([[0.0], np.cumsum(masses)])
        self.mass = float(cdf_nodes[-1])
        self.nodes = nodes
        self.cdf_nodes = cdf_nodes
        self._cdf_interp = None
        self._inv_interp = None
        self._lock = threading.Lock()

    def _ensure_cdf(self):
        if self._cdf_interp is None:
            with self._lock:
                if self._cdf_interp is None:
                    self._cdf_interp = PchipInterpolator(
                        self.nodes, self.cdf_nodes / self.mass)
        return self._cdf_interp

    def _ensure_inverse(self):
        if self._inv_interp is None:
            with self._lock:
                if self._inv_interp is None:
                    u = self.cdf_nodes / self.mass
                    keep = np.concatenate([[True], np.diff(u) > 0.0])
                    self._inv_interp = PchipInterpolator(u[keep], self.nodes[keep])
        return self._inv_interp

    def cdf(self, x):
        if x <= self.lo:
            return 0.0
        if x >= self.hi:
            return 1.0
        return float(np.clip(self._ensure_cdf()(x), 0.0, 1.0))

    def quantile(self, u):
        x = float(np.clip(self._ensure_inverse()(u), self.lo, self.hi))
        # Newton polish on the interpolated cdf against the true pdf
        for _ in range(6):
            r = self.cdf(x) - u
            if abs(r) <= 1e-13:
                break
            slope = self.pdf(x) / self.mass
            if slope <= 0.0:
                break
            x = float(np.clip(x - r / slope, self.lo, self.hi))
        return x


def _graded_grid(lo, hi, panels):
    """Geometric refinement near the lower end, uniform beyond."""
    span = hi - lo
    n_geo = panels // 2
    geo = lo + span * np.geomspace(1e-8, 0.1, n_geo + 1)
    uni = np.linspace(lo + 0.1 * span, hi, panels - n_geo + 1)
    return np.unique(np.concatenate([[lo], geo, uni]))


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(5)


def _panel_masses(pdf, nodes):
    a = nodes[:-1]
    b = nodes[1:]
    half = 0.5 * (b - a)
    mid = 0.5 * (a + b)
    masses = np.zeros(len(a))
    for w, xi in zip(_GL_WEIGHTS, _GL_NODES):
        pts = mid + half * xi
        masses += w * np.array([pdf(float(x)) for x in pts])
    return masses * half


def from_pdf(pdf: Callable[[float], float], support: tuple[float, float],
             eps_mass: float = 1e-6, panels: int = 4000,
             name: str = "numeric") -> LifetimeDistribution:
    """Promote a bare pdf on a finite interval to a full distribution.

    The survival evaluator is built once by composite Gauss-Legendre
    quadrature over a graded grid; the quantile inverts the cached cdf.
    Construction is rejected when the total mass of ``pdf`` deviates from one
    by more than ``eps_mass``.  The evaluators are normalized by the computed
    mass so they stay mutually consistent.
    """
    lo, hi = support
    if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
        raise ParameterError("from_pdf requires a finite support interval")
    core = _NumericCore(pdf, lo, hi, panels)
    if abs(core.mass - 1.0) > eps_mass:
        raise DensityMassError(
            f"pdf mass {core.mass:.12g} deviates from 1 beyond eps_mass={eps_mass:g}",
            mass=core.mass)
    mass = core.mass

    def log_pdf(x):
        v = pdf(x)
        if v <= 0.0:
            return -math.inf
        return math.log(v) - math.log(mass)

    def survival(x):
        return 1.0 - core.cdf(x)

    return LifetimeDistribution(
        name=name,
        support_low=lo, support_high=hi,
        _pdf=lambda x: pdf(x) / mass,
        _log_pdf=log_pdf,
        _cdf=core.cdf,
        _survival=survival,
        _log_survival=lambda x: math.log(max(survival(x), 5e-324)),
        _quantile=core.quantile,
        log_concave=False, cheap_quantile=True)


# ---------------------------------------------------------------------------
# discrete distributions
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DiscreteDistribution:
    """Finite support points with probabilities summing to one."""

    points: tuple
    probs: tuple

    def __post_init__(self):
        if len(self.points) != len(self.probs):
            raise ParameterError("points and probs must have equal length")
        if any(p < 0 for p in self.probs):
            raise ParameterError("probabilities must be nonnegative")
        if abs(sum(self.probs) - 1.0) > 1e-12:
            raise ParameterError(f"probabilities sum to {sum(self.probs)!r}, not 1")
        if len(set(self.points)) != len(self.points):
            raise ParameterError("support points must be distinct")

    def without_null_atoms(self) -> "DiscreteDistribution":
        """Drop zero-probability atoms (the 0 log 0 = 0 convention)."""
        kept = [(x, p) for x, p in zip(self.points, self.probs) if p > 0.0]
        return DiscreteDistribution(tuple(x for x, _ in kept),
                                    tuple(p for _, p in kept))


def three_point(p: float, q: float, h: float = 1.0) -> DiscreteDistribution:
    """Atoms at ``h, 0, -h`` with probabilities ``p, 1-p-q, q``."""
    _require(0 <= q <= 1 - p <= 1, "three-point law requires 0 <= q <= 1 - p <= 1")
    _require(h > 0, "three-point law requires h > 0")
    return DiscreteDistribution((h, 0.0, -h), (p, 1.0 - p - q, q))


def bernoulli(theta: float) -> DiscreteDistribution:
    _require(0 <= theta <= 1, "bernoulli requires 0 <= theta <= 1")
    return DiscreteDistribution((0.0, 1.0), (1.0 - theta, theta))
