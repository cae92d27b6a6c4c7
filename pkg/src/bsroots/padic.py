"""Exact arithmetic in Z_(p): p-adic digits, truncations, and base-p expansions.

Elements are rationals with denominator coprime to p, kept as exact
`fractions.Fraction` values.  Truncations are computed with modular inverses,
so they are defined for every element of Z_(p); the two-case periodic formula
is kept as a separate cross-check operation restricted to eventually periodic
inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def is_prime(n: int) -> bool:
    """Deterministic primality test for word-sized n (trial division)."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_prime(p: int) -> int:
    # p must fit a machine word; powers p^e may exceed it and stay exact ints.
    if not isinstance(p, int) or not is_prime(p):
        raise ValueError(f"p must be prime, got {p!r}")
    if p >= 2**31:
        raise ValueError(f"p must be < 2^31, got {p}")
    return p


@dataclass(frozen=True)
class PAdicRational:
    """A rational number lying in Z_(p): denominator coprime to p."""

    value: Fraction
    p: int

    def __post_init__(self):
        check_prime(self.p)
        value = Fraction(self.value)
        if value.denominator % self.p == 0:
            raise ValueError(f"{value} is not p-integral for p={self.p}")
        object.__setattr__(self, "value", value)

    @property
    def numerator(self) -> int:
        return self.value.numerator

    @property
    def denominator(self) -> int:
        return self.value.denominator

    def truncation(self, e: int) -> int:
        """The unique n in [0, p^e) congruent to this element mod p^e."""
        if e < 0:
            raise ValueError("level e must be >= 0")
        if e == 0:
            return 0
        q = self.p**e
        inv = pow(self.denominator, -1, q)
        return (self.numerator * inv) % q

    def digit(self, i: int) -> int:
        """The i-th p-adic digit, an integer in [0, p-1]."""
        if i < 0:
            raise ValueError("digit index must be >= 0")
        return (self.truncation(i + 1) - self.truncation(i)) // self.p**i

    def digits(self, count: int) -> list[int]:
        return [self.digit(i) for i in range(count)]

    def expn_truncation(self, e: int, a: int) -> int:
        """Truncation mod p^(e*a) via the closed periodic-expansion formula.

        Requires (p^e - 1) * alpha to be an integer, and `a` large enough that
        the formula output lands in [0, p^(e*a)); validity is checked on the
        computed value (this is equivalent to the two inequalities that make
        the formula correct).  Kept independent of `truncation` so the two can
        cross-check each other.
        """
        if e <= 0 or a <= 0:
            raise ValueError("e and a must be positive")
        alpha = self.value
        if ((self.p**e - 1) * alpha).denominator != 1:
            raise ValueError(f"(p^e - 1)*{alpha} is not an integer at e={e}")
        q = self.p ** (a * e)
        if alpha.denominator == 1 and alpha < 0:
            n = q + alpha.numerator
        else:
            ceil_alpha = -((-alpha.numerator) // alpha.denominator)
            # (p^e - 1) | (p^(ae) - 1), so this is an exact integer.
            n = int((1 - q) * (alpha - ceil_alpha) + ceil_alpha)
        if not 0 <= n < q:
            raise ValueError(f"a={a} too small for the expansion formula at alpha={alpha}")
        return n

    def __str__(self) -> str:
        return format_rational(self.value)


@dataclass(frozen=True)
class BasePFraction:
    """A real number in (0, 1] together with its non-terminating base-p expansion."""

    value: Fraction
    p: int

    def __post_init__(self):
        check_prime(self.p)
        value = Fraction(self.value)
        if not 0 < value <= 1:
            raise ValueError(f"value must lie in (0, 1], got {value}")
        object.__setattr__(self, "value", value)

    def truncation(self, e: int) -> Fraction:
        """The e-th base-p truncation (ceil(p^e x) - 1) / p^e; strictly below x."""
        if e < 1:
            raise ValueError("level e must be >= 1")
        q = self.p**e
        scaled = self.value * q
        ceil_scaled = -((-scaled.numerator) // scaled.denominator)
        return Fraction(ceil_scaled - 1, q)

    def digit(self, e: int) -> int:
        """The e-th digit of the non-terminating base-p expansion (e >= 1)."""
        if e < 1:
            raise ValueError("digit index must be >= 1")
        prev = self.truncation(e - 1) if e > 1 else Fraction(0)
        return int((self.truncation(e) - prev) * self.p**e)


def parse_rational(text: str) -> Fraction:
    """Parse "num/den" (den omitted when 1) into an exact Fraction."""
    text = text.strip()
    try:
        if "/" in text:
            num, den = text.split("/")
            return Fraction(int(num.strip()), int(den.strip()))
        return Fraction(int(text))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse rational {text!r}") from exc


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def in_z_p(value: Fraction, p: int) -> bool:
    """True when the reduced denominator is coprime to p."""
    return gcd(value.denominator, p) == 1
