#!/usr/bin/env python3
"""Exact p-adic arithmetic: truncations, digits and base-p expansions.

Every detector in this library reduces questions about a rational number
alpha (with denominator coprime to p) to its residues mod p^e.  This script
walks through the three basic gadgets on small examples.
"""

from fractions import Fraction

from bsroots import BasePFraction, PAdicRational, enumerate_candidates

p = 3
alpha = PAdicRational(Fraction(-5, 4), p)

print(f"alpha = {alpha} as a {p}-adic integer")
print("truncations mod p^e:", [alpha.truncation(e) for e in range(1, 6)])
print("digits:             ", alpha.digits(8))
print()

# The digit stream of -5/4 is eventually periodic because (3^2 - 1) * 5/4 is an
# integer: the closed two-case formula gives the same truncations as the
# extended-Euclid modular inverse.
for a in (1, 2, 3):
    closed = alpha.expn_truncation(2, a)
    direct = alpha.truncation(2 * a)
    print(f"closed-form truncation at e=2, a={a}: {closed}  (modular inverse: {direct})")
print()

# Negative integers become p^(ae) + alpha once the modulus clears them.
beta = PAdicRational(Fraction(-3), 5)
print("-3 mod 5^2 via the closed form:", beta.expn_truncation(1, 2))
print()

# Numbers in (0, 1] use the non-terminating base-p expansion instead.
lam = BasePFraction(Fraction(1, 2), 3)
print("1/2 in base 3:", [lam.digit(e) for e in range(1, 8)], "(all ones)")
print("truncations:  ", [str(lam.truncation(e)) for e in range(1, 5)])
print()

# Root candidates are exactly the rationals with (p^b - 1) * alpha integral.
candidates = enumerate_candidates(5, 1, (Fraction(-1), Fraction(0)))
print("candidates of period 1 in [-1, 0] at p=5:", [str(c) for c in candidates])
