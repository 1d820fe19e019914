"""Automorphisms of the classical domains.

Types I-III are acted on by block matrices ``[[A, B], [C, D]]`` preserving the
Hermitian form ``diag(I_p, -I_q)``, through ``Z -> (AZ + B)(CZ + D)^{-1}``.
Type IV is acted on by real ``(n+2) x (n+2)`` matrices preserving
``diag(I_n, -1, -1)``, through the projective action on isotropic lifts.
"""

from dataclasses import dataclass

import numpy as np

from .config import TOL
from .domains import as_point, contains, sample_interior, _haar_orthogonal
from .embeddings import lift_iv
from .numerics import ginibre, qr_unitary, svd

__all__ = [
    "Moebius",
    "PseudoOrtho",
    "NormalForm",
    "identity",
    "compose",
    "act",
    "mobius_act",
    "mobius_derivative",
    "act_iv",
    "normalize_to_origin",
    "normalize_pair",
    "random_automorphism",
    "stabilizer_element",
    "normal_form_iv",
]


@dataclass(frozen=True)
class Moebius:
    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    @classmethod
    def from_matrix(cls, m, p):
        m = np.asarray(m, dtype=complex)
        return cls(m[:p, :p], m[:p, p:], m[p:, :p], m[p:, p:])

    @property
    def p(self):
        return self.a.shape[0]

    @property
    def matrix(self):
        return np.block([[self.a, self.b], [self.c, self.d]])

    def form_defect(self):
        """``|| g^* J g - J ||`` for ``J = diag(I_p, -I_q)``."""
        g = self.matrix
        j = np.diag(np.r_[np.ones(self.p), -np.ones(self.d.shape[0])])
        return np.linalg.norm(g.conj().T @ j @ g - j)

    def is_member(self, tol=TOL.eq):
        return self.form_defect() <= tol


@dataclass(frozen=True)
class PseudoOrtho:
    m: np.ndarray

    @property
    def n(self):
        return self.m.shape[0] - 2

    def form_defect(self):
        q = _q_form(self.n)
        return np.linalg.norm(self.m.T @ q @ self.m - q)

    def in_identity_component(self):
        n = self.n
        return np.linalg.det(self.m[:n, :n]) > 0 and np.linalg.det(self.m[n:, n:]) > 0

    def is_member(self, tol=TOL.eq):
        return self.form_defect() <= tol and self.in_identity_component()


@dataclass(frozen=True)
class NormalForm:
    """Complete invariant of a pair of points: descending values in ``[0, 1)``."""

    sigma: np.ndarray

    def is_zero(self):
        return not np.any(self.sigma)


def _q_form(n):
    return np.diag(np.r_[np.ones(n), -1.0, -1.0])


def identity(domain):
    if domain.family == "IV":
        return PseudoOrtho(np.eye(domain.n + 2))
    p, q = domain.shape
    return Moebius(np.eye(p, dtype=complex), np.zeros((p, q), complex),
                   np.zeros((q, p), complex), np.eye(q, dtype=complex))


def compose(g, h):
    """The element acting as ``g`` after ``h``."""
    if isinstance(g, PseudoOrtho) and isinstance(h, PseudoOrtho):
        return PseudoOrtho(g.m @ h.m)
    if isinstance(g, Moebius) and isinstance(h, Moebius):
        return Moebius.from_matrix(g.matrix @ h.matrix, g.p)
    raise TypeError("cannot compose elements of different groups")


def _solve_right(x, m):
    """``x @ inv(m)`` without forming the inverse."""
    return np.linalg.solve(m.T, x.T).T


def _check_invertible(m):
    if np.linalg.cond(m) > 1e12:
        raise ValueError("CZ + D is numerically singular; the point is not interior")


def mobius_act(g, z):
    """``(AZ + B)(CZ + D)^{-1}``."""
    z = np.asarray(z, dtype=complex)
    den = g.c @ z + g.d
    _check_invertible(den)
    return _solve_right(g.a @ z + g.b, den)


def mobius_derivative(g, z, xi):
    """Differential of ``mobius_act(g, .)`` at ``z`` applied to ``xi``."""
    z = np.asarray(z, dtype=complex)
    den = g.c @ z + g.d
    _check_invertible(den)
    image = _solve_right(g.a @ z + g.b, den)
    return _solve_right((g.a - image @ g.c) @ np.asarray(xi, dtype=complex), den)


# Type IV: columns of _basis are e_1..e_n, (e_{n+1} - i e_{n+2})/sqrt 2, (e_{n+1} + i e_{n+2})/sqrt 2
# in the real basis, so real coordinates = _basis(n) @ homogeneous coordinates.
def _basis(n):
    b = np.eye(n + 2, dtype=complex)
    b[n:, n:] = np.array([[1.0, 1.0], [-1j, 1j]]) / np.sqrt(2.0)
    return b


def _basis_inv(n):
    b = np.eye(n + 2, dtype=complex)
    b[n:, n:] = np.array([[1.0, 1j], [1.0, -1j]]) / np.sqrt(2.0)
    return b


def act_iv(g, z, tol=TOL.eq):
    """Action of a real pseudo-orthogonal matrix on a type IV point (row vector)."""
    z = np.asarray(z, dtype=complex).reshape(1, -1)
    n = z.shape[1]
    w = _basis_inv(n) @ (g.m @ (_basis(n) @ lift_iv(z)))
    if abs(w[-1]) < 1e-14 * np.linalg.norm(w):
        raise ValueError("image has vanishing last coordinate; element is not an automorphism")
    w = w / w[-1]
    out = w[:n].reshape(1, n)
    quad = 0.5 * np.sum(out * out)
    if abs(w[n] - quad) > tol * max(1.0, abs(quad)):
        raise ValueError("image left the isotropic quadric; element does not preserve the form")
    return out


def act(domain, g, z):
    z = as_point(domain, z)
    return act_iv(g, z) if domain.family == "IV" else mobius_act(g, z)


def _require_interior(domain, z, name="point"):
    z = as_point(domain, z, name)
    if not contains(domain, z):
        raise ValueError(f"{name} is not in the interior of {domain.label}")
    return z


def _normalizer_block(z):
    """The block element sending ``z`` to 0, built from its SVD."""
    p, q = z.shape
    res = svd(z)
    tau = np.sqrt(1.0 - res.sigma ** 2)
    t = (res.u / tau) @ res.u.conj().T
    inv_tau = np.ones(q)
    inv_tau[:p] = 1.0 / tau
    tp = (res.v * inv_tau) @ res.v.conj().T
    return Moebius(t, -t @ z, -tp @ z.conj().T, tp)


def _normalizer_iv(z):
    n = z.shape[1]
    qf = _q_form(n)
    v = _basis(n) @ lift_iv(z)
    a, b = v.real, v.imag
    a = a / np.sqrt(-(a @ qf @ a))
    b = b - (b @ qf @ a) / (a @ qf @ a) * a
    b = b / np.sqrt(-(b @ qf @ b))
    frame = []
    for k in range(n):
        e = np.zeros(n + 2)
        e[k] = 1.0
        for _ in range(2):
            for f, sign in [(a, -1.0), (b, -1.0)] + [(c, 1.0) for c in frame]:
                e = e - sign * (e @ qf @ f) * f
        frame.append(e / np.sqrt(e @ qf @ e))
    f = np.column_stack(frame + [a, b])
    if np.linalg.det(f[:n, :n]) < 0:
        f[:, 0] = -f[:, 0]
    if np.linalg.det(f[n:, n:]) < 0:
        raise ValueError("point lies in the conjugate component; not in the type IV domain")
    return PseudoOrtho(qf @ f.T @ qf)


def normalize_to_origin(domain, z):
    """An automorphism sending the interior point ``z`` to 0."""
    z = _require_interior(domain, z)
    if domain.family == "IV":
        return _normalizer_iv(z)
    return _normalizer_block(z)


def normal_form_iv(w):
    """Invariant pair ``(s1, s2)`` with ``w ~ (s1, i s2, 0, ...)`` under the origin stabilizer."""
    w = np.asarray(w, dtype=complex).ravel()
    s = float(np.sum(np.abs(w) ** 2))
    a = abs(np.sum(w * w))
    s1 = np.sqrt(max(s + a, 0.0) / 2.0)
    s2 = np.sqrt(max(s - a, 0.0) / 2.0)
    return np.array([s1, s2])


def normalize_pair(domain, z1, z2):
    """``(g, NormalForm)`` with ``g`` sending ``z1`` to 0 and the invariant of ``g . z2``."""
    z2 = _require_interior(domain, z2, "second point")
    g = normalize_to_origin(domain, z1)
    w = act(domain, g, z2)
    sigma = normal_form_iv(w) if domain.family == "IV" else svd(w).sigma
    return g, NormalForm(sigma)


def stabilizer_element(domain, rng):
    """Random element fixing the origin."""
    fam = domain.family
    if fam == "IV":
        n = domain.n
        th = rng.uniform(0.0, 2.0 * np.pi)
        m = np.eye(n + 2)
        m[:n, :n] = _haar_orthogonal(rng, n)
        m[n:, n:] = [[np.cos(th), -np.sin(th)], [np.sin(th), np.cos(th)]]
        return PseudoOrtho(m)
    p, q = domain.shape
    u = qr_unitary(ginibre(rng, p))
    if fam == "I":
        v = qr_unitary(ginibre(rng, q))
    else:
        v = u.conj()
    return Moebius(u, np.zeros((p, q), complex), np.zeros((q, p), complex), v)


def random_automorphism(domain, seed):
    """Stabilizer element composed with the normalizer of a random interior point."""
    rng = np.random.default_rng(seed)
    k = stabilizer_element(domain, rng)
    center = sample_interior(domain, int(rng.integers(2 ** 63)))
    return compose(k, normalize_to_origin(domain, center))
