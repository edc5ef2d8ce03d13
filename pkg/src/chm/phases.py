"""Unimodular phases, stored exactly as rational turns or approximately as radians.

An exact phase is e^{2*pi*i*num/den} with the fraction num/den reduced and
0 <= num < den.  All roots of unity appearing in the built-in matrices are
exact; sampling a family at an irrational angle produces float phases.
Products and conjugates of exact phases stay exact, and any operation that
touches a float phase yields a float phase.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from math import gcd

TWO_PI = 2.0 * math.pi


class Phase:
    """A complex number of modulus one."""

    __slots__ = ("num", "den", "theta")

    def __init__(self, num: int | None, den: int, theta: float | None):
        # Use Phase.exact / Phase.radians instead of calling this directly.
        self.num = num
        self.den = den
        self.theta = theta

    @classmethod
    def exact(cls, num: int, den: int) -> "Phase":
        """Phase e^{2*pi*i*num/den}, reduced so gcd(num, den) == 1."""
        if den <= 0:
            raise ValueError(f"denominator must be positive, got {den}")
        num %= den
        g = gcd(num, den)
        if num == 0:
            return cls(0, 1, None)
        return cls(num // g, den // g, None)

    @classmethod
    def from_turns(cls, turns: Fraction | int) -> "Phase":
        f = Fraction(turns)
        return cls.exact(f.numerator % f.denominator, f.denominator)

    @classmethod
    def radians(cls, theta: float) -> "Phase":
        return cls(None, 1, float(theta) % TWO_PI)

    @property
    def is_exact(self) -> bool:
        return self.num is not None

    @property
    def turns(self) -> Fraction:
        """Angle as a fraction of a full turn (exact phases only)."""
        if self.num is None:
            raise ValueError("float phase has no exact turn fraction")
        return Fraction(self.num, self.den)

    @property
    def angle(self) -> float:
        """Angle in radians, in [0, 2*pi)."""
        if self.num is not None:
            return TWO_PI * self.num / self.den
        return self.theta

    def to_complex(self) -> complex:
        if self.num is not None:
            if self.den == 1:
                return 1 + 0j
            if self.den == 2:
                return -1 + 0j
            if self.den == 4:
                return 1j if self.num == 1 else -1j
        return cmath.exp(1j * self.angle)

    def __mul__(self, other: "Phase") -> "Phase":
        if not isinstance(other, Phase):
            return NotImplemented
        if self.num is not None and other.num is not None:
            den = self.den * other.den // gcd(self.den, other.den)
            num = self.num * (den // self.den) + other.num * (den // other.den)
            return Phase.exact(num, den)
        return Phase.radians(self.angle + other.angle)

    def conj(self) -> "Phase":
        if self.num is not None:
            return Phase.exact(-self.num, self.den)
        return Phase.radians(-self.theta)

    def __pow__(self, k: int) -> "Phase":
        if self.num is not None:
            return Phase.exact(self.num * k, self.den)
        return Phase.radians(self.theta * k)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Phase):
            return NotImplemented
        if self.num is not None and other.num is not None:
            return self.num == other.num and self.den == other.den
        if self.num is None and other.num is None:
            return self.theta == other.theta
        return False

    def __hash__(self) -> int:
        if self.num is not None:
            return hash((self.num, self.den))
        return hash(self.theta)

    def __repr__(self) -> str:
        if self.num is not None:
            return f"Phase.exact({self.num}, {self.den})"
        return f"Phase.radians({self.theta})"

    def is_one(self) -> bool:
        return self.num == 0

    def is_minus_one(self) -> bool:
        return self.num == 1 and self.den == 2

    def real_sign(self, tol: float) -> int | None:
        """Return +1/-1 if this phase equals +-1 (exactly, or within tol
        in the complex plane for float phases); otherwise None."""
        if self.num is not None:
            if self.is_one():
                return 1
            if self.is_minus_one():
                return -1
            return None
        z = self.to_complex()
        if abs(z - 1) <= tol:
            return 1
        if abs(z + 1) <= tol:
            return -1
        return None


ONE = Phase.exact(0, 1)
MINUS_ONE = Phase.exact(1, 2)
I = Phase.exact(1, 4)
MINUS_I = Phase.exact(3, 4)


def phase_mul(a: Phase, b: Phase) -> Phase:
    """Product of two phases; exact inputs give an exact result."""
    return a * b


def angle_distance(a: float, b: float) -> float:
    """Distance between two angles on the circle, in [0, pi]."""
    diff = (a - b) % TWO_PI
    return min(diff, TWO_PI - diff)
