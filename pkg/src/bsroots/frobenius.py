"""Frobenius-side kernels for polynomial rings over F_p.

`eth_root` extracts the ideal of p^e-th root coefficients (the Cartier image
C^e * a); `diff_closure` is its Frobenius power, the smallest level-e
differential ideal containing a; `cartier_preimage` is the adjoint.

`eth_root_power` computes C^e * a^n without materializing a^n: one Frobenius
level is peeled at a time through the factorization
a^m = (a^q)^[p] * a^(m0)  (valid once m0 >= (r-1)(p-1))
together with the projection formula C^1(b^[p] c) = b * C^1(c).
"""

from __future__ import annotations

from .polyring import Ideal, Polynomial


def poly_root_coefficients(f: Polynomial, e: int) -> list[Polynomial]:
    """The p^e-th root coefficients of f over the monomial basis of R over R^(p^e).

    Writing f = sum_mu g_mu^(p^e) * x^mu with mu ranging over [0, p^e)^n,
    returns the nonzero g_mu.  Scalars ride along unchanged since c^(p^e) = c
    in F_p.
    """
    q = f.ring.p**e
    buckets: dict[tuple, dict] = {}
    for mono, coeff in f.terms:
        mu = tuple(a % q for a in mono)
        root = tuple(a // q for a in mono)
        buckets.setdefault(mu, {})[root] = coeff
    return [f.ring.polynomial(terms) for terms in buckets.values()]


def eth_root(a: Ideal, e: int) -> Ideal:
    """The Cartier image C^e * a: the smallest b with a contained in b^[p^e].

    Root extraction is applied to the cached reduced basis (any generating set
    gives the same ideal; the reduced one keeps coefficient counts small).
    """
    if e < 0:
        raise ValueError("level e must be >= 0")
    if e == 0 or a.is_zero():
        return a
    basis = a.groebner()
    coefficients = []
    for g in basis:
        coefficients.extend(poly_root_coefficients(g, e))
    return Ideal(a.ring, coefficients)


def eth_root_power(a: Ideal, n: int, e: int) -> Ideal:
    """C^e * a^n by exponent peeling; avoids building a^n for large n."""
    if n < 0:
        raise ValueError("power must be >= 0")
    if a.is_zero() and n > 0:
        return a
    ring = a.ring
    p = ring.p
    r = max(1, len(a.generators))
    unit = Ideal(ring, (ring.one(),), declared_r=1)
    extra = unit
    m = n
    for _ in range(e):
        base = (r - 1) * (p - 1)
        if m > base + p - 1:
            m0 = base + (m - base) % p
        else:
            m0 = m
        quotient = (m - m0) // p
        extra = eth_root(a.power(m0).product(extra), 1)
        m = quotient
    return a.power(m).product(extra)


def diff_closure(a: Ideal, e: int) -> Ideal:
    """The smallest D^(e)-stable ideal containing a.

    Over a polynomial ring every level-e differential ideal is a Frobenius
    power, so the closure is (C^e * a)^[p^e]; no differential operators are
    ever materialized.
    """
    return eth_root(a, e).frobenius_power(e)


def diff_closure_power(a: Ideal, n: int, e: int) -> Ideal:
    """diff_closure(a^n, e) through the peeled root."""
    return eth_root_power(a, n, e).frobenius_power(e)


def cartier_preimage(b: Ideal, e: int) -> Ideal:
    """I_e(b) = {f : C^e * f in b}, which for a polynomial ring is b^[p^e]."""
    if e < 0:
        raise ValueError("level e must be >= 0")
    return b.frobenius_power(e)


def root_label(a: Ideal, n: int, e: int):
    """Canonical hashable form of C^e * a^n, used for jump comparisons."""
    return eth_root_power(a, n, e).canonical_label()
