"""Closed-form Hilbert distances and infinitesimal norms at the origin."""

from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .config import TOL
from .domains import as_point
from .group_actions import NormalForm, normal_form_iv, normalize_pair
from .numerics import svd

__all__ = [
    "MetricReport",
    "disc_distance",
    "distance_from_normal_form",
    "hilbert_distance",
    "tangent_invariants",
    "finsler_norm",
    "caratheodory_norm",
    "bergman_norm",
    "metric_report",
]


def _log_ratio(x):
    """``ln((1 + x) / (1 - x))`` computed without cancellation."""
    return np.log1p(x) - np.log1p(-x)


def disc_distance(x):
    """Hyperbolic distance from 0 to ``x`` in the unit disc, in the ``ln((1+x)/(1-x))`` scale."""
    x = float(x)
    if not 0.0 <= x < 1.0:
        raise ValueError(f"disc distance needs 0 <= x < 1, got {x}")
    return float(_log_ratio(x))


def distance_from_normal_form(domain, sigma):
    """Distance from 0 to the normal-form point with invariants ``sigma``."""
    sigma = np.asarray(sigma, dtype=float)
    if np.any(sigma < 0):
        raise ValueError("normal form values must be nonnegative")
    if domain.family == "IV":
        s1, s2 = sigma
        c = 0.5 * (s1 ** 2 - s2 ** 2)
        r = np.sqrt(2.0) * s1
        if 1.0 + c - r <= TOL.boundary:
            raise ValueError("point is on or beyond the boundary")
        return float(np.log1p(c + r) - np.log1p(c - r))
    if sigma.size and sigma.max() >= 1.0 - TOL.boundary:
        raise ValueError(f"singular value {sigma.max():.15g} too close to 1; point is not interior")
    return float(np.sum(_log_ratio(sigma)))


def _log_margin(domain, z):
    """``ln`` of the boundary margin: ``det(I - Z Z^*)``, or ``1 - |z|^2 + |z^T z / 2|^2`` for type IV."""
    if domain.family == "IV":
        z = z.ravel()
        return float(np.log(1.0 - np.sum(np.abs(z) ** 2) + abs(0.5 * np.sum(z * z)) ** 2))
    return float(np.linalg.slogdet(np.eye(z.shape[0]) - z @ z.conj().T)[1])


def _log_abs_kernel(domain, z1, z2):
    if domain.family == "IV":
        a, b = z1.ravel(), z2.ravel()
        return float(np.log(abs(1.0 - np.sum(a * b.conj())
                                + 0.5 * np.sum(a * a) * np.conj(0.5 * np.sum(b * b)))))
    return float(np.linalg.slogdet(np.eye(z1.shape[0]) - z1 @ z2.conj().T)[1])


def hilbert_distance(domain, z1, z2):
    """Generalized Hilbert distance between two interior points.

    Near the boundary the small factor ``prod(1 - sigma)`` (``1 + c - r`` for
    type IV) is recovered from the margins of the original points, which
    avoids the cancellation of forming it from the normal form.
    """
    _, nf = normalize_pair(domain, z1, z2)
    z1, z2 = as_point(domain, z1), as_point(domain, z2)
    if np.array_equal(z1, z2):
        return 0.0
    sigma = nf.sigma
    if domain.family == "IV":
        s1, s2 = sigma
        c = 0.5 * (s1 ** 2 - s2 ** 2)
        big, small = 1.0 + c + np.sqrt(2.0) * s1, 1.0 + c - np.sqrt(2.0) * s1
    else:
        big, small = np.prod(1.0 + sigma), np.prod(1.0 - sigma)
    if small >= 0.25:
        return distance_from_normal_form(domain, sigma)
    # small * big is the margin of the normalized second point
    log_margin = (_log_margin(domain, z1) + _log_margin(domain, z2)
                  - 2.0 * _log_abs_kernel(domain, z1, z2))
    return float(2.0 * np.log(big) - log_margin)


def tangent_invariants(domain, xi):
    """Singular values of a tangent vector at 0 (types I-III) or its pair ``(s1, s2)`` (type IV)."""
    xi = as_point(domain, xi, "tangent vector")
    if domain.family == "IV":
        return normal_form_iv(xi)
    return svd(xi).sigma


def finsler_norm(domain, xi):
    s = tangent_invariants(domain, xi)
    if domain.family == "IV":
        return float(2.0 * np.sqrt(2.0) * s.max())
    return float(2.0 * s.sum())


def caratheodory_norm(domain, xi) -> Optional[float]:
    """Caratheodory (= Kobayashi) norm at 0; None where no formula is available (types II, III)."""
    if domain.family in ("II", "III"):
        return None
    s = tangent_invariants(domain, xi)
    if domain.family == "IV":
        return float(s.sum() / np.sqrt(2.0))
    return float(s.max())


def bergman_norm(domain, xi) -> Optional[float]:
    """Bergman norm at 0 for type I, normalized with constant 1; None otherwise."""
    if domain.family != "I":
        return None
    s = tangent_invariants(domain, xi)
    return float(np.sqrt(np.sum(s ** 2)))


@dataclass
class MetricReport:
    distance: float
    normal_form: NormalForm
    finsler: Optional[float] = None
    caratheodory: Optional[float] = None
    bergman: Optional[float] = None
    oracle: Optional[dict] = field(default=None)

    def to_dict(self):
        out = {"distance": self.distance, "sigma": [float(s) for s in self.normal_form.sigma]}
        for key in ("finsler", "caratheodory", "bergman", "oracle"):
            val = getattr(self, key)
            if val is not None:
                out[key] = val
        return out


def metric_report(domain, z1, z2, xi=None):
    _, nf = normalize_pair(domain, z1, z2)
    rep = MetricReport(distance_from_normal_form(domain, nf.sigma), nf)
    if xi is not None:
        rep.finsler = finsler_norm(domain, xi)
        rep.caratheodory = caratheodory_norm(domain, xi)
        rep.bergman = bergman_norm(domain, xi)
    return rep
