"""Finsler, Caratheodory and Bergman norms at the origin of a type I domain.

All three are functions of the singular values of the tangent vector: the
Finsler norm of the Hilbert metric is twice their sum, the Caratheodory norm
is the largest one and the Bergman norm is their Euclidean length. For
rank-one tangents the three agree up to constant factors; in higher rank no
constant relates them.
"""

import numpy as np

from bsd_hilbert import TypeI, bergman_norm, caratheodory_norm, finsler_norm, hilbert_distance

d = TypeI(2, 2)
print(f"{'sigma':<14}{'finsler':>10}{'carath.':>10}{'bergman':>10}{'F/C':>8}{'F/B':>8}")
for s in [(0.6, 0.0), (0.6, 0.3), (0.6, 0.6), (0.3, 0.2)]:
    xi = np.diag(s)
    f, c, b = finsler_norm(d, xi), caratheodory_norm(d, xi), bergman_norm(d, xi)
    print(f"{str(s):<14}{f:10.6f}{c:10.6f}{b:10.6f}{f / c:8.4f}{f / b:8.4f}")

# The Finsler norm is the derivative of the distance from the origin.
xi = np.array([[0.2, 0.1j], [0.05, -0.3]])
for t in (1e-2, 1e-4, 1e-6):
    print(f"t={t:.0e}: d(0, t xi)/t = {hilbert_distance(d, np.zeros((2, 2)), t * xi) / t:.10f}"
          f"  finsler = {finsler_norm(d, xi):.10f}")
