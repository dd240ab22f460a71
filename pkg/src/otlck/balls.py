"""Light midpoint-radius (ball) arithmetic on top of mpmath.

Each value is a center plus an error radius.  After every operation the
radius is inflated by a few ulps of the center to absorb mpmath's rounding,
so enclosures stay valid as long as computations run at the precision the
caller set via mp.workdps/workprec.  This is the error-tracking substrate
for every certified decision in the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from mpmath import mp, mpc, mpf

from .errors import PrecisionExhausted


def _slack():
    # a handful of guard ulps at the current working precision
    return mpf(2) ** (-mp.prec + 6)


def _bump(rad, mid_abs):
    return rad * (1 + _slack()) + mid_abs * _slack()


@dataclass(frozen=True)
class RealBall:
    mid: object
    rad: object

    @classmethod
    def exact(cls, value) -> "RealBall":
        if isinstance(value, Fraction):
            m = mpf(value.numerator) / mpf(value.denominator)
            return cls(m, _bump(mpf(0), abs(m)))
        return cls(mpf(value), mpf(0))

    @property
    def lo(self):
        return self.mid - self.rad

    @property
    def hi(self):
        return self.mid + self.rad

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self):
        """+1 / -1 if the ball certifies a sign, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    def __add__(self, other: "RealBall") -> "RealBall":
        m = self.mid + other.mid
        return RealBall(m, _bump(self.rad + other.rad, abs(m)))

    def __neg__(self):
        return RealBall(-self.mid, self.rad)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "RealBall") -> "RealBall":
        m = self.mid * other.mid
        r = (
            abs(self.mid) * other.rad
            + abs(other.mid) * self.rad
            + self.rad * other.rad
        )
        return RealBall(m, _bump(r, abs(m)))

    def scale(self, q) -> "RealBall":
        qa = mpf(q.numerator) / mpf(q.denominator) if isinstance(q, Fraction) else mpf(q)
        m = self.mid * qa
        return RealBall(m, _bump(self.rad * abs(qa), abs(m)))

    def log(self) -> "RealBall":
        """Natural log; requires a ball strictly right of zero."""
        if self.lo <= 0:
            raise PrecisionExhausted("log of a ball touching (-inf, 0]")
        lo = mp.log(self.lo)
        hi = mp.log(self.hi)
        m = (lo + hi) / 2
        return RealBall(m, _bump((hi - lo) / 2, abs(m)))


@dataclass(frozen=True)
class ComplexBall:
    mid: object
    rad: object

    @classmethod
    def exact(cls, value) -> "ComplexBall":
        if isinstance(value, Fraction):
            m = mpc(mpf(value.numerator) / mpf(value.denominator))
            return cls(m, _bump(mpf(0), abs(m)))
        return cls(mpc(value), mpf(0))

    def __add__(self, other: "ComplexBall") -> "ComplexBall":
        m = self.mid + other.mid
        return ComplexBall(m, _bump(self.rad + other.rad, abs(m)))

    def __neg__(self):
        return ComplexBall(-self.mid, self.rad)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "ComplexBall") -> "ComplexBall":
        m = self.mid * other.mid
        r = (
            abs(self.mid) * other.rad
            + abs(other.mid) * self.rad
            + self.rad * other.rad
        )
        return ComplexBall(m, _bump(r, abs(m)))

    def inverse(self) -> "ComplexBall":
        d = abs(self.mid) - self.rad
        if d <= 0:
            raise PrecisionExhausted("inverting a ball containing zero")
        m = 1 / self.mid
        # |1/z - 1/c| <= r / (|c| (|c| - r))
        r = self.rad / (abs(self.mid) * d)
        return ComplexBall(m, _bump(r, abs(m)))

    def __truediv__(self, other: "ComplexBall") -> "ComplexBall":
        return self * other.inverse()

    def conj(self) -> "ComplexBall":
        return ComplexBall(self.mid.conjugate(), self.rad)

    def abs_ball(self) -> RealBall:
        m = abs(self.mid)
        return RealBall(m, _bump(self.rad, m))

    def sq_modulus(self) -> RealBall:
        """|z|^2 as a real ball."""
        a = self.abs_ball()
        lo = max(mpf(0), a.lo)
        lo2, hi2 = lo * lo, a.hi * a.hi
        m = (lo2 + hi2) / 2
        return ComplexBall._mk_real(m, (hi2 - lo2) / 2)

    @staticmethod
    def _mk_real(m, r):
        return RealBall(m, _bump(r, abs(m)))

    def real_ball(self) -> RealBall:
        return RealBall(self.mid.real, _bump(self.rad, abs(self.mid.real)))

    def imag_ball(self) -> RealBall:
        return RealBall(self.mid.imag, _bump(self.rad, abs(self.mid.imag)))


def horner_ball(coeffs, z: ComplexBall) -> ComplexBall:
    """Evaluate a polynomial with exact (int/Fraction) ascending coefficients
    at a complex ball."""
    acc = ComplexBall.exact(Fraction(0))
    for c in reversed(list(coeffs)):
        acc = acc * z + ComplexBall.exact(Fraction(c))
    return acc
