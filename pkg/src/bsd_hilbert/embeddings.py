"""Dual pairing between Shilov boundary forms and interior points, and the cross-ratio.

For types I-III the pairing of the form attached to ``xi`` with the point
``x`` is ``det(I_p - x xi^*)``. For type IV points are lifted to the isotropic
vector ``(z, z^T z / 2, 1)`` and paired by
``-(conj(xi_{n+1}) + x_{n+1}) + sum_k conj(xi_k) x_k``.
No exterior-power coordinates are ever formed.
"""

import numpy as np

from .config import TOL
from .domains import as_point

__all__ = ["pairing", "pairing_batch", "cross_ratio", "log_abs_cross_ratio",
           "lift_iv", "pairing_lifts", "cross_ratio_lifts"]


def lift_iv(z):
    """Homogeneous vector ``(z_1, ..., z_n, z^T z / 2, 1)`` of a type IV point (rows batched)."""
    z = np.asarray(z, dtype=complex)
    z = z.reshape(*z.shape[:-2], z.shape[-1]) if z.ndim >= 2 else z
    quad = 0.5 * np.sum(z * z, axis=-1)
    return np.concatenate([z, quad[..., None], np.ones_like(quad)[..., None]], axis=-1)


def pairing_lifts(xi_lift, x_lift):
    """Pairing on homogeneous type IV vectors; antilinear in ``xi_lift``, linear in ``x_lift``."""
    xi_lift = np.asarray(xi_lift, dtype=complex)
    x_lift = np.asarray(x_lift, dtype=complex)
    c = xi_lift.conj()
    return (np.sum(c[..., :-2] * x_lift[..., :-2], axis=-1)
            - c[..., -2] * x_lift[..., -1] - c[..., -1] * x_lift[..., -2])


def pairing_batch(domain, xis, x):
    """Pairing of a stack of boundary points ``xis`` (shape ``(..., *point_shape)``) with ``x``."""
    xis = np.asarray(xis, dtype=complex)
    if domain.family == "IV":
        return pairing_lifts(lift_iv(xis), lift_iv(x))
    p = domain.shape[0]
    m = np.eye(p) - x @ np.conj(np.swapaxes(xis, -1, -2))
    if p == 1:
        return m[..., 0, 0]
    return np.linalg.det(m)


def pairing(domain, xi, x):
    """Value of the form attached to ``xi`` at the point ``x`` (both in the closed domain)."""
    xi = as_point(domain, xi, "xi")
    x = as_point(domain, x, "x")
    return complex(pairing_batch(domain, xi, x))


def _cross(p11, p22, p12, p21):
    return (p11 * p22) / (p12 * p21)


def cross_ratio(domain, xi1, xi2, x1, x2, tol=TOL.interior):
    """``[xi1, xi2, x1, x2] = <xi1,x1><xi2,x2> / (<xi1,x2><xi2,x1>)``.

    Raises ValueError when a denominator pairing is below ``tol``, which
    happens only if one of the points is not interior.
    """
    p11 = pairing(domain, xi1, x1)
    p22 = pairing(domain, xi2, x2)
    p12 = pairing(domain, xi1, x2)
    p21 = pairing(domain, xi2, x1)
    if min(abs(p12), abs(p21)) <= tol:
        raise ValueError("vanishing pairing in cross-ratio denominator; a point is not interior")
    return _cross(p11, p22, p12, p21)


def log_abs_cross_ratio(domain, xi1, xi2, x1, x2):
    return float(np.log(abs(cross_ratio(domain, xi1, xi2, x1, x2))))


def cross_ratio_lifts(xi1, xi2, x1, x2):
    """Type IV cross-ratio computed directly from homogeneous lifts."""
    return _cross(pairing_lifts(xi1, x1), pairing_lifts(xi2, x2),
                  pairing_lifts(xi1, x2), pairing_lifts(xi2, x1))
