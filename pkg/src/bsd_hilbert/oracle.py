"""Brute-force checks of the closed forms.

``oracle_distance`` estimates the Hilbert distance directly from its
definition, as ``ln max |[xi, xi', x1, x2]|`` over pairs of Shilov boundary
points, by random sampling followed by local optimization in coordinates
that keep every iterate exactly on the boundary. It only ever produces lower bounds of the true value.

The log-modulus of the cross-ratio splits as ``g(xi') - g(xi)`` with
``g(xi) = ln|<xi, x2>| - ln|<xi, x1>|``, so the two boundary points are
optimized independently and every pair of sampled points is effectively
scored.
"""

from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import minimize

from .domains import as_point, sample_interior, shilov_chart, z0
from .embeddings import log_abs_cross_ratio, pairing_batch
from .group_actions import act, random_automorphism, stabilizer_element
from .metrics import hilbert_distance
from .numerics import qr_unitary

__all__ = [
    "OracleResult",
    "VerificationReport",
    "oracle_distance",
    "value_at",
    "verify_semimetric",
    "verify_invariance",
    "verify_oracle_agreement",
]

CHUNK = 4096


@dataclass
class OracleResult:
    best_value: float
    argmax: tuple
    samples_used: int
    refined: bool


@dataclass
class VerificationReport:
    name: str
    passed: bool
    trials: int
    worst: float
    tolerance: float
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return asdict(self)


def _g(domain, pts, x1, x2):
    return (np.log(np.abs(pairing_batch(domain, pts, x2)))
            - np.log(np.abs(pairing_batch(domain, pts, x1))))


def _cayley(a):
    eye = np.eye(a.shape[-1])
    return np.linalg.solve(eye - a / 2, eye + a / 2)


class _LocalChart:
    """Coordinates on a neighbourhood of a Shilov boundary point.

    For types I-III a state is a unitary matrix ``U`` (the boundary point is
    read off exactly as in the sampler) and a coordinate vector ``x`` moves it
    to ``U @ cayley(A(x))`` with ``A(x)`` skew-Hermitian; type III only needs
    ``A = iS`` with ``S`` real symmetric. For type IV a state is a phase and a
    unit real direction, moved along the phase and the tangent space of the
    sphere. Every state maps exactly onto the boundary.
    """

    def __init__(self, domain):
        self.domain = domain
        fam = domain.family
        self.size = n = domain.q if fam == "I" else domain.n
        if fam == "III":
            self._iu = np.triu_indices(n)
            self.dim = len(self._iu[0])
        elif fam == "IV":
            self.dim = n
        else:
            self._iu = np.triu_indices(n, 1)
            self.dim = n * n
        if fam == "II":
            self._z0 = z0(n)

    def state(self, params):
        """State of a single sampler parameter array."""
        if self.domain.family == "IV":
            y = params[1:]
            return float(params[0]), y / np.linalg.norm(y)
        return qr_unitary(params)

    def _generator(self, x):
        n, m = self.size, x.shape[0]
        if self.domain.family == "III":
            s = np.zeros((m, n, n))
            s[:, self._iu[0], self._iu[1]] = x
            s = s + np.swapaxes(s, 1, 2) - s * np.eye(n)
            return 1j * s
        k = len(self._iu[0])
        a = np.zeros((m, n, n), dtype=complex)
        a[:, self._iu[0], self._iu[1]] = x[:, :k] + 1j * x[:, k:2 * k]
        a = a - np.conj(np.swapaxes(a, 1, 2))
        a[:, np.arange(n), np.arange(n)] = 1j * x[:, 2 * k:]
        return a

    def move(self, state, x):
        """Batch of states at chart coordinates ``x`` (shape ``(m, dim)``)."""
        if self.domain.family == "IV":
            theta, y = state
            q, _ = np.linalg.qr(np.column_stack([y, np.eye(len(y))]))
            yy = y[None] + x[:, 1:] @ q[:, 1:len(y)].T
            return theta + x[:, 0], yy / np.linalg.norm(yy, axis=1, keepdims=True)
        return state[None] @ _cayley(self._generator(x))

    def pick(self, states, i):
        if self.domain.family == "IV":
            return float(states[0][i]), states[1][i]
        return qr_unitary(states[i])

    def points(self, states):
        fam = self.domain.family
        if fam == "IV":
            theta, y = states
            return (np.exp(1j * theta)[:, None] * np.sqrt(2.0) * y)[:, None, :]
        if fam == "I":
            return states[:, :self.domain.p, :]
        ut = np.swapaxes(states, 1, 2)
        if fam == "III":
            return states @ ut
        return states @ self._z0 @ ut


def _refine(domain, chart, state, sign, x1, x2, steps, rounds=4, h=1e-6):
    """Maximize ``sign * g`` near ``state``.

    Quasi-Newton iterations on chart coordinates with central-difference
    gradients, re-centring the chart after each round. Only values of ``g``
    are used. Returns the final state, which is never worse than the start.
    """
    dim = chart.dim
    shifts = np.eye(dim) * h

    def objective(st):
        return -sign * _g(domain, chart.points(st), x1, x2)

    best = objective(chart.move(state, np.zeros((1, dim))))[0]
    for _ in range(rounds):
        def fun(x, state=state):
            vals = objective(chart.move(state, np.vstack([x, x + shifts, x - shifts])))
            return vals[0], (vals[1:dim + 1] - vals[dim + 1:]) / (2 * h)

        res = minimize(fun, np.zeros(dim), jac=True, method="BFGS",
                       options={"gtol": 1e-10, "maxiter": steps})
        if not res.fun < best:
            break
        best = res.fun
        state = chart.pick(chart.move(state, res.x[None]), 0)
        if np.linalg.norm(res.x) < 1e-9:
            break
    return state


def value_at(domain, xi_a, xi_b, x1, x2):
    """``ln|cross-ratio|`` at a boundary pair, taking the better of the two orderings."""
    return abs(log_abs_cross_ratio(domain, xi_a, xi_b, x1, x2))


def oracle_distance(domain, z1, z2, n_samples=2 ** 14, refine_steps=200, seed=0):
    """Lower bound for the Hilbert distance from sampling the Shilov boundary.

    ``n_samples`` i.i.d. boundary pairs are drawn from the invariant
    distribution and the best pair is kept. Each of its two points is then
    improved by local optimization in a boundary chart, with at most
    ``refine_steps`` iterations per round; ``refine_steps=0`` disables it.
    """
    if n_samples < 1:
        raise ValueError("n_samples must be >= 1")
    z1 = as_point(domain, z1, "z1")
    z2 = as_point(domain, z2, "z2")
    rng = np.random.default_rng(seed)
    sampler = shilov_chart(domain)
    lo_val, hi_val, lo_par, hi_par = np.inf, -np.inf, None, None
    total = 2 * n_samples
    for start in range(0, total, CHUNK):
        params = sampler.draw(rng, min(CHUNK, total - start))
        vals = _g(domain, sampler.points(params), z1, z2)
        i, j = int(np.argmin(vals)), int(np.argmax(vals))
        if vals[i] < lo_val:
            lo_val, lo_par = vals[i], params[i]
        if vals[j] > hi_val:
            hi_val, hi_par = vals[j], params[j]
    chart = _LocalChart(domain)
    lo, hi = chart.state(lo_par), chart.state(hi_par)
    refined = refine_steps > 0 and lo_val != hi_val
    if refined:
        lo = _refine(domain, chart, lo, -1.0, z1, z2, refine_steps)
        hi = _refine(domain, chart, hi, 1.0, z1, z2, refine_steps)
    xi_a = chart.points(chart.move(lo, np.zeros((1, chart.dim))))[0]
    xi_b = chart.points(chart.move(hi, np.zeros((1, chart.dim))))[0]
    best = log_abs_cross_ratio(domain, xi_a, xi_b, z1, z2)
    return OracleResult(float(best), (xi_a, xi_b), n_samples, bool(refined))


def _pairs(domain, rng, count):
    for _ in range(count):
        yield [sample_interior(domain, int(rng.integers(2 ** 63))) for _ in range(2)]


def verify_semimetric(domain, n_triples=1000, seed=0, tol=1e-9):
    """Reflexivity, symmetry and the triangle inequality on random triples."""
    rng = np.random.default_rng(seed)
    worst_sym, worst_slack, worst_refl = 0.0, np.inf, 0.0
    for _ in range(n_triples):
        x, y, z = (sample_interior(domain, int(rng.integers(2 ** 63))) for _ in range(3))
        dxy, dyx = hilbert_distance(domain, x, y), hilbert_distance(domain, y, x)
        dyz, dxz = hilbert_distance(domain, y, z), hilbert_distance(domain, x, z)
        worst_refl = max(worst_refl, abs(hilbert_distance(domain, x, x)))
        worst_sym = max(worst_sym, abs(dxy - dyx))
        worst_slack = min(worst_slack, dxy + dyz - dxz, dxy + dxz - dyz, dxz + dyz - dxy)
    passed = worst_refl == 0.0 and worst_sym <= tol and worst_slack >= -tol
    return VerificationReport("semimetric", bool(passed), n_triples, float(worst_slack), tol,
                              {"worst_symmetry": float(worst_sym),
                               "worst_reflexivity": float(worst_refl)})


def verify_invariance(domain, n_trials=100, seed=0, tol=1e-8, stabilizer_only=False):
    """``|d(g z1, g z2) - d(z1, z2)|`` over random automorphisms ``g``."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for z1, z2 in _pairs(domain, rng, n_trials):
        if stabilizer_only:
            g = stabilizer_element(domain, rng)
        else:
            g = random_automorphism(domain, int(rng.integers(2 ** 63)))
        d0 = hilbert_distance(domain, z1, z2)
        d1 = hilbert_distance(domain, act(domain, g, z1), act(domain, g, z2))
        worst = max(worst, abs(d1 - d0))
    return VerificationReport("invariance", bool(worst <= tol), n_trials, float(worst), tol)


def verify_oracle_agreement(domain, n_pairs=20, seed=0, n_samples=2 ** 14, refine_steps=200,
                            upper=1e-5, lower=1e-9):
    """Closed form minus oracle value must lie in ``[-lower, upper]``."""
    rng = np.random.default_rng(seed)
    gaps = []
    for z1, z2 in _pairs(domain, rng, n_pairs):
        closed = hilbert_distance(domain, z1, z2)
        res = oracle_distance(domain, z1, z2, n_samples, refine_steps, int(rng.integers(2 ** 63)))
        gaps.append(closed - res.best_value)
    gaps = np.array(gaps)
    passed = bool(gaps.min() >= -lower and gaps.max() <= upper)
    return VerificationReport("oracle_agreement", passed, n_pairs, float(gaps.max()), upper,
                              {"min_gap": float(gaps.min())})
