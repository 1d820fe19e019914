"""The smallest cases: the unit disc, and the bidisc seen as a type IV domain.

On the disc the generalized Hilbert metric is the hyperbolic distance
ln((1 + x) / (1 - x)). The type IV domain with n = 2 is biholomorphic to the
bidisc, and the metric turns into the sum of the two disc distances.
"""

import numpy as np

from bsd_hilbert import TypeI, TypeIV, disc_distance, hilbert_distance

disc = TypeI(1, 1)
# The right column forms 1 - x directly; the library uses log1p, so the two can
# differ in the last digits close to the boundary.
print("disc: d(0, x) against ln((1+x)/(1-x))")
for x in (0.1, 0.5, 0.9, 0.999):
    print(f"  x={x:<6} {hilbert_distance(disc, 0.0, x):.15f}  {np.log((1 + x) / (1 - x)):.15f}")

# Moving both points by the same disc automorphism leaves the distance alone.
a, b = 0.3 + 0.4j, -0.2 + 0.1j
phi = lambda z: (z - 0.6) / (1 - 0.6 * z)
print(f"\ninvariance: {hilbert_distance(disc, a, b):.15f} vs {hilbert_distance(disc, phi(a), phi(b)):.15f}")

lie = TypeIV(2)
print("\nbidisc (x, y) against type IV n=2 at ((x+y)/sqrt2, i(x-y)/sqrt2)")
for x, y in [(0.0, 0.0), (0.5, 0.5), (0.5, 0.2), (0.9, 0.1)]:
    image = [(x + y) / np.sqrt(2), 1j * (x - y) / np.sqrt(2)]
    lhs = disc_distance(x) + disc_distance(y)
    rhs = hilbert_distance(lie, [0, 0], image)
    print(f"  ({x}, {y}): {lhs:.12f}  {rhs:.12f}  diff={rhs - lhs:.1e}")
