"""Dense complex linear algebra used throughout the package.

Matrices are plain ``complex128`` numpy arrays. The SVD is a one-sided
(Hestenes) Jacobi iteration, which is accurate for the small matrices
that appear here and returns descending singular values.
"""

from dataclasses import dataclass

import numpy as np

from .config import TOL

__all__ = [
    "ConvergenceError",
    "SvdResult",
    "as_matrix",
    "svd",
    "singular_values",
    "det",
    "random_unitary",
    "haar_unitary",
    "qr_unitary",
    "matmul",
    "adjoint",
    "add",
    "scale",
]


class ConvergenceError(ArithmeticError):
    """Raised when the Jacobi sweeps fail to converge."""

    def __init__(self, message, residual):
        super().__init__(f"{message} (residual {residual:.3e})")
        self.residual = residual


@dataclass(frozen=True)
class SvdResult:
    u: np.ndarray
    sigma: np.ndarray
    v: np.ndarray

    def reconstruct(self):
        r, c = self.u.shape[0], self.v.shape[0]
        s = np.zeros((r, c))
        k = len(self.sigma)
        s[:k, :k] = np.diag(self.sigma)
        return self.u @ s @ self.v.conj().T


def as_matrix(m, name="matrix"):
    """Return ``m`` as a finite 2-D complex array, raising ValueError otherwise."""
    a = np.asarray(m, dtype=complex)
    if a.ndim == 0:
        a = a.reshape(1, 1)
    if a.ndim != 2 or 0 in a.shape:
        raise ValueError(f"{name} must be a non-empty 2-D array, got shape {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError(f"{name} has non-finite entries")
    return a


def _jacobi_columns(g, max_sweeps=60):
    """Orthogonalize the columns of tall ``g`` by right rotations.

    Returns ``(w, v)`` with ``g @ v == w`` and pairwise orthogonal columns of ``w``.
    """
    w = g.copy()
    m, n = w.shape
    v = np.eye(n, dtype=complex)
    tol = np.finfo(float).eps * m
    # columns this small relative to the whole matrix are numerically zero
    floor = (np.finfo(float).eps * np.linalg.norm(g)) ** 2
    for _ in range(max_sweeps):
        rotated = False
        for i in range(n - 1):
            for j in range(i + 1, n):
                wi, wj = w[:, i], w[:, j]
                alpha = np.vdot(wi, wi).real
                beta = np.vdot(wj, wj).real
                gamma = np.vdot(wi, wj)
                mag = abs(gamma)
                if min(alpha, beta) <= floor or mag <= tol * np.sqrt(alpha) * np.sqrt(beta):
                    continue
                rotated = True
                phase = gamma / mag
                zeta = (beta - alpha) / (2.0 * mag)
                t = np.copysign(1.0, zeta) / (abs(zeta) + np.hypot(1.0, zeta))
                c = 1.0 / np.hypot(1.0, t)
                s = c * t
                # make the inner product real, then rotate in the real plane
                wj = wj * np.conj(phase)
                vi, vj = v[:, i].copy(), v[:, j] * np.conj(phase)
                w[:, i], w[:, j] = c * wi - s * wj, s * wi + c * wj
                v[:, i], v[:, j] = c * vi - s * vj, s * vi + c * vj
        if not rotated:
            return w, v
    gram = w.conj().T @ w
    off = np.abs(gram - np.diag(np.diag(gram))).max()
    raise ConvergenceError("one-sided Jacobi did not converge", off)


def _complete_basis(q, valid):
    """Extend the valid orthonormal columns of ``q`` to a full unitary."""
    m = q.shape[0]
    basis = [q[:, k] for k in range(q.shape[1]) if valid[k]]
    out = np.zeros((m, m), dtype=complex)
    slots = [k for k in range(q.shape[1]) if valid[k]]
    for k, col in zip(slots, basis):
        out[:, k] = col
    missing = [k for k in range(m) if k not in slots]
    eye = np.eye(m, dtype=complex)
    for k in missing:
        best, best_norm = None, -1.0
        for e in eye:
            r = e.copy()
            for _ in range(2):
                for b in basis:
                    r -= np.vdot(b, r) * b
            nr = np.linalg.norm(r)
            if nr > best_norm:
                best, best_norm = r, nr
        best = best / best_norm
        basis.append(best)
        out[:, k] = best
    return out


def svd(m):
    """Singular value decomposition ``m = u @ diag(sigma) @ v^*``.

    ``u`` and ``v`` are square unitaries, ``sigma`` has length ``min(rows, cols)``
    and is sorted in descending order.
    """
    a = as_matrix(m)
    rows, cols = a.shape
    tall = rows >= cols
    g = a if tall else a.conj().T
    # rescale by a power of two so Gram entries neither underflow nor overflow
    peak = np.abs(g).max()
    exp = int(np.frexp(peak)[1]) if peak > 0 else 0
    w, right = _jacobi_columns(np.ldexp(g.real, -exp) + 1j * np.ldexp(g.imag, -exp))
    sigma = np.linalg.norm(w, axis=0)
    order = np.argsort(-sigma, kind="stable")
    sigma, w, right = sigma[order], w[:, order], right[:, order]
    floor = 1e-13 * max(sigma[0], np.finfo(float).tiny) if sigma.size else 0.0
    valid = sigma > floor
    left = np.zeros_like(w)
    left[:, valid] = w[:, valid] / sigma[valid]
    left = _complete_basis(left, valid)
    sigma = np.ldexp(sigma, exp)
    res = SvdResult(left, sigma, right) if tall else SvdResult(right, sigma, left)
    resid = np.linalg.norm(res.reconstruct() - a)
    if resid > TOL.svd_residual * max(1.0, np.linalg.norm(a)):
        raise ConvergenceError("SVD reconstruction check failed", resid)
    return res


def singular_values(m):
    return svd(m).sigma


def det(m):
    """Determinant of a square matrix (LU with partial pivoting)."""
    a = as_matrix(m)
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"determinant needs a square matrix, got shape {a.shape}")
    if a.shape == (1, 1):
        return complex(a[0, 0])
    return complex(np.linalg.det(a))


def qr_unitary(g):
    """Unitary factor of a QR decomposition with positive-real R diagonal.

    Works on stacks of square matrices; applied to complex Ginibre matrices the
    result is Haar distributed.
    """
    q, r = np.linalg.qr(g)
    d = np.diagonal(r, axis1=-2, axis2=-1)
    mag = np.abs(d)
    ph = np.where(mag > 0, d / np.where(mag > 0, mag, 1.0), 1.0)
    return q * ph[..., None, :]


def ginibre(rng, n, size=()):
    """Complex Gaussian matrices with unit-variance entries, stacked as ``size``.

    Real and imaginary parts are interleaved in the random stream, so a
    smaller batch drawn from the same generator state is a prefix of a
    larger one.
    """
    shape = (*np.atleast_1d(size).astype(int).tolist(), n, n) if np.size(size) else (n, n)
    g = rng.standard_normal((*shape, 2))
    return (g[..., 0] + 1j * g[..., 1]) / np.sqrt(2.0)


def haar_unitary(rng, n, size=()):
    return qr_unitary(ginibre(rng, n, size))


def random_unitary(n, seed):
    """Haar-random ``n x n`` unitary, deterministic in ``seed``."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return haar_unitary(np.random.default_rng(seed), n)


def _check_conform(a, b, inner):
    if inner and a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    if not inner and a.shape != b.shape:
        raise ValueError(f"shape mismatch {a.shape} vs {b.shape}")


def matmul(a, b):
    a, b = as_matrix(a), as_matrix(b)
    _check_conform(a, b, inner=True)
    return a @ b


def adjoint(a):
    return as_matrix(a).conj().T


def add(a, b):
    a, b = as_matrix(a), as_matrix(b)
    _check_conform(a, b, inner=False)
    return a + b


def scale(c, a):
    return complex(c) * as_matrix(a)
