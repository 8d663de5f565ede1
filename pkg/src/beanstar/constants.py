"""Closed-form constants attached to the bean function B(z) = sqrt(1 + tanh z).

All values are plain floats computed from ``math.e``; they are the reference
values that the numerical routines are checked against.
"""

import math

E = math.e

#: B(-1) = sqrt(2 / (1 + e^2)), the leftmost real point of B(D).
LEFT_END = math.sqrt(2.0 / (1.0 + E * E))

#: B(1) = e * sqrt(2 / (1 + e^2)), the rightmost real point of B(D).
R0 = E * LEFT_END

#: Real center where both inscribed-disk arms coincide, (1 + e) / sqrt(2 (1 + e^2)).
ALPHA0 = (1.0 + E) / math.sqrt(2.0 * (1.0 + E * E))

#: Radius of the largest disk inside B(D) centered on the real axis.
R_ALPHA0 = (E - 1.0) / math.sqrt(2.0 * (1.0 + E * E))

#: k-starlike threshold 2e / (2e - sqrt(2 (1 + e^2))).
KST_K = 2.0 * E / (2.0 * E - math.sqrt(2.0 * (1.0 + E * E)))

#: Cassinian-oval threshold (e^2 - 1) / (e^2 + 1) = tanh 1.
CASSINIAN_C = (E * E - 1.0) / (E * E + 1.0)
