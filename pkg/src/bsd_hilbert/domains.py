"""The four classical bounded symmetric domains and their Shilov boundaries.

Points are complex arrays of the domain's point shape: ``p x q`` for type I,
``n x n`` for types II and III, and a ``1 x n`` row for type IV.
"""

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .numerics import as_matrix, ginibre, qr_unitary, svd

__all__ = [
    "TypeI",
    "TypeII",
    "TypeIII",
    "TypeIV",
    "parse_domain",
    "as_point",
    "contains",
    "membership_violation",
    "on_shilov",
    "sample_interior",
    "sample_shilov",
    "shilov_basepoints",
    "shilov_chart",
    "sigma_matrix",
    "skew_block",
    "z0",
]


@dataclass(frozen=True)
class TypeI:
    """Matrices ``Z`` (``p x q``) with ``I_q - Z^* Z`` positive definite."""

    p: int
    q: int
    family = "I"

    def __post_init__(self):
        if not (1 <= self.p <= self.q):
            raise ValueError(f"type I needs 1 <= p <= q, got p={self.p}, q={self.q}")

    @property
    def shape(self):
        return (self.p, self.q)

    @property
    def label(self):
        return f"type-i p={self.p} q={self.q}"


@dataclass(frozen=True)
class _Square:
    n: int

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"type {self.family} needs n >= 2, got n={self.n}")

    @property
    def shape(self):
        return (self.n, self.n) if self.family != "IV" else (1, self.n)

    @property
    def label(self):
        return f"type-{self.family.lower()} n={self.n}"


@dataclass(frozen=True)
class TypeII(_Square):
    """Antisymmetric ``n x n`` matrices in the type I ball."""

    family = "II"


@dataclass(frozen=True)
class TypeIII(_Square):
    """Symmetric ``n x n`` matrices in the type I ball."""

    family = "III"


@dataclass(frozen=True)
class TypeIV(_Square):
    """The Lie ball: rows ``z`` with ``|z|^2 < 2`` and ``|z|^2 < 1 + |z^T z / 2|^2``."""

    family = "IV"


def parse_domain(name, p=None, q=None, n=None):
    """Build a domain from a CLI-style name such as ``"type-iii"``."""
    key = name.lower().replace("_", "-")
    if key in ("type-i", "i"):
        if p is None or q is None:
            raise ValueError("type-i needs p and q")
        return TypeI(int(p), int(q))
    cls = {"type-ii": TypeII, "ii": TypeII, "type-iii": TypeIII, "iii": TypeIII,
           "type-iv": TypeIV, "iv": TypeIV}.get(key)
    if cls is None:
        raise ValueError(f"unknown domain {name!r}")
    if n is None:
        raise ValueError(f"{key} needs n")
    return cls(int(n))


def as_point(domain, z, name="point"):
    """Coerce ``z`` to the point shape of ``domain``.

    Scalars are accepted for 1 x 1 domains and flat vectors for type IV;
    anything else must already have the exact shape.
    """
    a = np.asarray(z, dtype=complex)
    if domain.family == "IV" and a.ndim == 1:
        a = a.reshape(1, -1)
    a = as_matrix(a, name)
    if a.shape != domain.shape:
        raise ValueError(f"{name} has shape {a.shape}, expected {domain.shape} for {domain.label}")
    return a


def skew_block(s):
    """The 2 x 2 block ``[[0, s], [-s, 0]]``."""
    return np.array([[0.0, s], [-s, 0.0]], dtype=complex)


def _skew_diag(n, values):
    z = np.zeros((n, n), dtype=complex)
    for k, s in enumerate(values):
        z[2 * k:2 * k + 2, 2 * k:2 * k + 2] = skew_block(s)
    return z


def z0(n):
    """Block-diagonal antisymmetric matrix of ``[[0, 1], [-1, 0]]`` blocks (last entry 0 for odd n)."""
    return _skew_diag(n, [1.0] * (n // 2))


def sigma_matrix(shape, values):
    """``Sigma_{p,q}(s_1, ..., s_r)``: ``values`` on the leading diagonal, zeros elsewhere."""
    z = np.zeros(shape, dtype=complex)
    k = len(values)
    z[np.arange(k), np.arange(k)] = values
    return z


def _sym_defect(domain, z):
    if domain.family == "II":
        return np.linalg.norm(z.T + z)
    if domain.family == "III":
        return np.linalg.norm(z.T - z)
    return 0.0


def membership_violation(domain, z, margin=TOL.interior, sym_tol=TOL.eq):
    """Describe the first interior condition ``z`` fails, or return None."""
    z = as_point(domain, z)
    if domain.family == "IV":
        s = float(np.sum(np.abs(z) ** 2))
        half = abs(0.5 * np.sum(z * z))
        if not s < 2.0 - margin:
            return f"z^*z < 2 fails (z^*z = {s:.12g})"
        if not s < 1.0 + half ** 2 - margin:
            return f"z^*z < 1 + |z^T z/2|^2 fails ({s:.12g} >= {1.0 + half ** 2:.12g})"
        return None
    gram = np.eye(z.shape[1]) - z.conj().T @ z
    lam = np.linalg.eigvalsh(gram).min()
    if not lam > margin:
        return f"I - Z^*Z > 0 fails (min eigenvalue {lam:.12g})"
    defect = _sym_defect(domain, z)
    if defect > sym_tol:
        rel = "Z^T = -Z" if domain.family == "II" else "Z^T = Z"
        return f"{rel} fails (defect {defect:.3g})"
    return None


def contains(domain, z, margin=TOL.interior, sym_tol=TOL.eq):
    """Strict interior membership with a safety margin."""
    return membership_violation(domain, z, margin, sym_tol) is None


def on_shilov(domain, z, tol=TOL.eq):
    z = as_point(domain, z)
    fam = domain.family
    if fam == "IV":
        zz = np.sum(z * z)
        if abs(zz) <= tol:
            return False
        theta = np.angle(zz) / 2.0
        r = np.exp(-1j * theta) * z
        if np.abs(r.imag).max() > tol:
            return False
        return abs(float(np.sum(r.real ** 2)) - 2.0) <= tol
    if fam == "II":
        if np.linalg.norm(z.T + z) > tol:
            return False
        target = np.ones(domain.n)
        if domain.n % 2:
            target[-1] = 0.0
        return np.abs(svd(z).sigma - target).max() <= tol
    p = z.shape[0]
    if np.linalg.norm(z @ z.conj().T - np.eye(p)) > tol:
        return False
    return fam == "I" or np.linalg.norm(z.T - z) <= tol


class ShilovChart:
    """Smooth parametrization of the Shilov boundary by unconstrained parameters.

    Types I-III use square complex Gaussian matrices pushed through the
    phase-corrected QR map; type IV uses a phase angle and a real direction.
    Gaussian parameters give the invariant (Haar-induced) distribution.
    Every method is vectorized over leading batch axes.
    """

    def __init__(self, domain):
        self.domain = domain
        fam = domain.family
        self.size = domain.q if fam == "I" else domain.n
        if fam == "II":
            self._z0 = z0(domain.n)

    def draw(self, rng, count=()):
        """Parameters of ``count`` independent invariant samples.

        Draws are prefix-stable: fewer samples from the same generator
        state are the leading entries of a larger draw.
        """
        if self.domain.family == "IV":
            shape = (*np.atleast_1d(count).astype(int).tolist(), self.size + 2) if np.size(count) \
                else (self.size + 2,)
            g = rng.standard_normal(shape)
            theta = np.mod(np.arctan2(g[..., 1], g[..., 0]), 2.0 * np.pi)
            return np.concatenate([theta[..., None], g[..., 2:]], axis=-1)
        return ginibre(rng, self.size, count)

    def points(self, params):
        fam = self.domain.family
        if fam == "IV":
            theta = params[..., 0]
            x = params[..., 1:]
            x = np.sqrt(2.0) * x / np.linalg.norm(x, axis=-1, keepdims=True)
            return (np.exp(1j * theta)[..., None] * x)[..., None, :]
        u = qr_unitary(params)
        if fam == "I":
            return u[..., :self.domain.p, :]
        ut = np.swapaxes(u, -1, -2)
        if fam == "III":
            return u @ ut
        return u @ self._z0 @ ut


def shilov_chart(domain):
    return ShilovChart(domain)


def _haar_orthogonal(rng, n):
    """Haar-random element of SO(n)."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    q = q * np.sign(np.diag(r))
    if np.linalg.det(q) < 0:
        q[:, 0] = -q[:, 0]
    return q


def sample_interior(domain, seed, radius=0.95):
    """Seeded interior point built from random singular values in ``[0, radius]``."""
    rng = np.random.default_rng(seed)
    fam = domain.family
    if fam == "I":
        p, q = domain.shape
        u = qr_unitary(ginibre(rng, p))
        v = qr_unitary(ginibre(rng, q))
        s = np.sort(rng.uniform(0.0, radius, p))[::-1]
        return u @ sigma_matrix((p, q), s) @ v.conj().T
    n = domain.n
    if fam == "III":
        v = qr_unitary(ginibre(rng, n))
        s = np.sort(rng.uniform(0.0, radius, n))[::-1]
        z = v @ np.diag(s) @ v.T
        return 0.5 * (z + z.T)
    if fam == "II":
        u = qr_unitary(ginibre(rng, n))
        s = np.sort(rng.uniform(0.0, radius, n // 2))[::-1]
        z = u @ _skew_diag(n, s) @ u.T
        return 0.5 * (z - z.T)
    while True:
        s = np.sort(rng.uniform(0.0, radius, 2))[::-1]
        x = np.zeros((1, n), dtype=complex)
        x[0, 0], x[0, 1] = s[0], 1j * s[1]
        if contains(domain, x):
            break
    phase = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi))
    return phase * (x @ _haar_orthogonal(rng, n).T)


def sample_shilov(domain, seed):
    """Seeded point of the Shilov boundary, drawn from the invariant distribution."""
    rng = np.random.default_rng(seed)
    chart = ShilovChart(domain)
    return chart.points(chart.draw(rng))


def shilov_basepoints(domain):
    """The extremal pair ``(Z_-, Z_+)`` for normal-form pairs ``(0, Sigma)``."""
    fam = domain.family
    if fam == "IV":
        zp = np.zeros((1, domain.n), dtype=complex)
        zp[0, 0] = np.sqrt(2.0)
    elif fam == "II":
        zp = z0(domain.n)
    else:
        p = domain.shape[0]
        zp = sigma_matrix(domain.shape, np.ones(p))
    return -zp, zp
