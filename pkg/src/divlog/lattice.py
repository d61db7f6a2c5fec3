"""Meet and join of the divisibility lattice: gcd and lcm.

The hot path is plain Euclid-backed arithmetic; factorization-based
cross-checks live in the test suite and the oracle module.
"""

from __future__ import annotations

import math

from .errors import PreconditionViolated
from .factorization import as_natural, divides


def meet(a, b) -> int:
    """Greatest common divisor: the infimum under divisibility."""
    return math.gcd(as_natural(a), as_natural(b))


def join(a, b) -> int:
    """Least common multiple: the supremum under divisibility."""
    a = as_natural(a)
    b = as_natural(b)
    return a * b // math.gcd(a, b)


def meet_euclid(a, b) -> int:
    """gcd by the bare remainder loop.

    Kept independent of ``meet`` (and of factorization) so the two can
    be checked against each other.
    """
    a = as_natural(a)
    b = as_natural(b)
    while b:
        a, b = b, a % b
    return a


def projective_identity_holds(x, y, z) -> bool:
    """Check ``meet(x, join(z, y)) == join(meet(x, z), y)`` for y | x.

    The identity always holds when y divides x, so a False return
    would indicate a defect in meet/join.
    """
    x = as_natural(x)
    y = as_natural(y)
    z = as_natural(z)
    if not divides(y, x):
        raise PreconditionViolated(f"{y} does not divide {x}")
    return meet(x, join(z, y)) == join(meet(x, z), y)
