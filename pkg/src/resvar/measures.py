"""Unconditioned information measures.

Information content, differential entropy and varentropy of a continuous
lifetime, and the entropy/varentropy of finite discrete distributions,
including the three-point law whose varentropy vanishes at seven points of
the probability simplex.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distributions import DiscreteDistribution, DomainError, LifetimeDistribution
from .quadrature import DEFAULT_CONFIG, QuadConfig, tail_expectation


def information_content(d: LifetimeDistribution, x: float) -> float:
    """The surprise ``-log f(x)`` in nats; undefined where the density vanishes."""
    lp = d.log_pdf(x)
    if lp == -math.inf:
        raise DomainError(f"information content undefined at x={x}: density is zero")
    return -lp


def _neg_log_pdf(d):
    log_pdf = d.log_pdf

    def g(x):
        lp = log_pdf(x)
        if not math.isfinite(lp):
            return 0.0  # 0 log 0 = 0 convention
        return -lp

    return g


def _sq_log_pdf(d):
    log_pdf = d.log_pdf

    def g(x):
        lp = log_pdf(x)
        if not math.isfinite(lp):
            return 0.0
        return lp * lp

    return g


def entropy(d: LifetimeDistribution, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """Differential entropy ``-E[log f(X)]`` in nats."""
    res = tail_expectation(_neg_log_pdf(d), d, d.support_low, cfg)
    if not math.isfinite(res.value):
        return math.inf if res.value > 0 else -math.inf
    return res.value


def varentropy(d: LifetimeDistribution, cfg: QuadConfig = DEFAULT_CONFIG) -> float:
    """Variance of the information content, ``E[(log f)^2] - H^2``, in nats^2.

    Like the entropy, a functional of the density alone.
    """
    h = entropy(d, cfg)
    m2 = tail_expectation(_sq_log_pdf(d), d, d.support_low, cfg).value
    return m2 - h * h


# ---------------------------------------------------------------------------
# discrete measures
# ---------------------------------------------------------------------------

def discrete_entropy(d: DiscreteDistribution) -> float:
    """Shannon entropy ``-sum p_i log p_i`` in nats, with 0 log 0 = 0."""
    return -sum(p * math.log(p) for p in d.without_null_atoms().probs)


def discrete_varentropy(d: DiscreteDistribution) -> float:
    """``sum p_i (log p_i)^2 - H^2``; zero-probability atoms contribute nothing."""
    probs = d.without_null_atoms().probs
    h = -sum(p * math.log(p) for p in probs)
    m2 = sum(p * math.log(p) ** 2 for p in probs)
    return m2 - h * h


def three_point_varentropy(p: float, q: float) -> float:
    """Varentropy of the three-point law as a function of ``(p, q)``."""
    probs = [w for w in (p, 1.0 - p - q, q) if w > 0.0]
    h = -sum(w * math.log(w) for w in probs)
    return sum(w * math.log(w) ** 2 for w in probs) - h * h


def _three_point_varentropy_grid(P, Q):
    """Vectorized three-point varentropy over numpy grids of (p, q)."""
    R = 1.0 - P - Q
    parts = []
    for W in (P, Q, R):
        logw = np.where(W > 0.0, np.log(np.where(W > 0.0, W, 1.0)), 0.0)
        parts.append((W * logw, W * logw * logw))
    h = -(parts[0][0] + parts[1][0] + parts[2][0])
    m2 = parts[0][1] + parts[1][1] + parts[2][1]
    return m2 - h * h


# the seven points of the simplex where the three-point varentropy vanishes
VANISHING_POINTS = (
    (0.0, 0.0), (0.0, 1.0), (1.0, 0.0),
    (0.5, 0.5), (0.5, 0.0), (0.0, 0.5),
    (1.0 / 3.0, 1.0 / 3.0),
)


@dataclass(frozen=True)
class VarentropyExtremesReport:
    zeros: tuple          # ((p, q, V), ...) at the seven vanishing points
    zeros_ok: bool
    maximizer: tuple      # canonical (p, q) with the two smallest weights first
    max_value: float


def discrete_varentropy_zeros_and_max(h: float = 1.0,
                                      grid: int = 400) -> VarentropyExtremesReport:
    """Verify the seven zeros of the three-point varentropy and locate its maximum.

    The spacing ``h`` does not enter the discrete law's varentropy; it is kept
    for interface symmetry with the mixture construction.  The maximizer is
    found on a ``grid x grid`` sweep of the simplex followed by local
    refinement, and reported canonically as the two smallest weights of the
    maximizing probability multiset.
    """
    zeros = tuple((p, q, three_point_varentropy(p, q)) for p, q in VANISHING_POINTS)
    zeros_ok = all(abs(v) <= 1e-12 for _, _, v in zeros)

    # coarse sweep
    s = np.linspace(0.0, 1.0, grid + 1)
    P, Q = np.meshgrid(s, s, indexing="ij")
    mask = P + Q <= 1.0
    V = np.where(mask, _three_point_varentropy_grid(P, Q), -np.inf)
    i, j = np.unravel_index(np.argmax(V), V.shape)
    best_p, best_q, best_v = float(P[i, j]), float(Q[i, j]), float(V[i, j])

    # local refinement: shrinking window grids around the incumbent
    width = 2.0 / grid
    for _ in range(6):
        ps = np.linspace(max(0.0, best_p - width), min(1.0, best_p + width), 41)
        qs = np.linspace(max(0.0, best_q - width), min(1.0, best_q + width), 41)
        PP, QQ = np.meshgrid(ps, qs, indexing="ij")
        mm = PP + QQ <= 1.0
        VV = np.where(mm, _three_point_varentropy_grid(PP, QQ), -np.inf)
        ii, jj = np.unravel_index(np.argmax(VV), VV.shape)
        best_p, best_q, best_v = float(PP[ii, jj]), float(QQ[ii, jj]), float(VV[ii, jj])
        width /= 8.0

    weights = sorted((best_p, best_q, 1.0 - best_p - best_q))
    return VarentropyExtremesReport(
        zeros=zeros, zeros_ok=zeros_ok,
        maximizer=(weights[0], weights[1]), max_value=best_v)
