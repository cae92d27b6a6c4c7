"""Shared property checks, used by both the hypothesis suite and the seeded
random sweep in the acceptance tests."""

from __future__ import annotations

from fractions import Fraction

from bsroots import (
    Ideal,
    PAdicRational,
    PolyRing,
    eth_root,
    jump_engine,
)
from bsroots.frobenius import diff_closure
from bsroots.thresholds import test_ideal, verify_threshold


def random_polynomial(rng, ring: PolyRing, max_degree: int = 4, max_terms: int = 3):
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        mono = []
        remaining = max_degree
        for _ in range(ring.nvars):
            e = rng.randint(0, remaining)
            mono.append(e)
            remaining -= e
        terms[tuple(mono)] = rng.randint(1, ring.p - 1) if ring.p > 2 else 1
    return ring.polynomial(terms)


def random_ideal(rng, ring: PolyRing, max_gens: int = 3, max_degree: int = 4) -> Ideal:
    gens = [
        random_polynomial(rng, ring, max_degree)
        for _ in range(rng.randint(1, max_gens))
    ]
    gens = [g for g in gens if not g.is_zero()] or [ring.variable(ring.variables[0])]
    return Ideal(ring, gens)


def random_proper_monomial_ideal(rng, ring: PolyRing, max_degree: int = 4) -> Ideal:
    gens = []
    for _ in range(rng.randint(1, 3)):
        mono = [rng.randint(0, max_degree // ring.nvars + 1) for _ in range(ring.nvars)]
        if not any(mono):
            mono[rng.randrange(ring.nvars)] = 1
        gens.append(ring.monomial(tuple(mono)))
    return Ideal(ring, gens)


# -- individual properties --------------------------------------------------------


def check_adjunction(a: Ideal, b: Ideal, e: int) -> None:
    """eth_root(a, e) in b  <=>  a in b^[p^e]."""
    left = b.contains_ideal(eth_root(a, e))
    right = b.frobenius_power(e).contains_ideal(a)
    assert left == right, (a, b, e)


def check_root_of_frobenius_power(b: Ideal, e: int) -> None:
    """eth_root(b^[p^e], e) recovers b."""
    assert eth_root(b.frobenius_power(e), e) == b, (b, e)


def check_root_kills_diff_closure(a: Ideal, e: int) -> None:
    """C^e applied to the level-e differential closure changes nothing."""
    assert eth_root(diff_closure(a, e), e) == eth_root(a, e), (a, e)


def check_diff_closure_monotone_in_level(a: Ideal, e: int) -> None:
    assert diff_closure(a, e + 1).contains_ideal(diff_closure(a, e)), (a, e)


def check_frobenius_level_shift(a: Ideal, b: Ideal, e: int) -> None:
    """D^(e)-closure equality transfers across one Frobenius power (F-split)."""
    small = Ideal(a.ring, a.generators + b.generators)  # b' := a + b contains a
    lhs = diff_closure(a, e) == diff_closure(small, e)
    rhs = diff_closure(a.frobenius_power(1), e + 1) == diff_closure(
        small.frobenius_power(1), e + 1
    )
    assert lhs == rhs, (a, b, e)


def check_nesting(presentation, ideal, e: int) -> None:
    """Level-(e+1) jumps, reduced into the level-e window, are level-e jumps."""
    engine = jump_engine(presentation, ideal)
    q = engine.p**e
    window = engine.r * q
    for n in engine.jump_set(e + 1):
        reduced = n
        while reduced >= window:
            reduced -= q
        assert engine.is_jump(reduced, e), (ideal, e, n)


def check_subtract_pe(presentation, ideal, e: int) -> None:
    """A jump at n >= r(p^e - 1) + 1 forces one at n - p^e."""
    engine = jump_engine(presentation, ideal)
    q = engine.p**e
    lo = engine.r * (q - 1) + 1
    for n in range(lo, engine.r * q + q):
        if engine.is_jump(n, e):
            assert engine.is_jump(n - q, e), (ideal, e, n)


def check_propagation(presentation, ideal, e: int) -> None:
    """F-split only: a jump at n spawns one in [np, np + r(p-1)] at level e+1."""
    engine = jump_engine(presentation, ideal)
    p, r = engine.p, engine.r
    for n in engine.jump_set(e):
        assert any(
            engine.is_jump(m, e + 1) for m in range(n * p, n * p + r * (p - 1) + 1)
        ), (ideal, e, n)


def check_gap_propagation(presentation, ideal, e: int) -> None:
    """F-split only: a jump-free [n-r+1, m-1] forces jump-free [np-r+1, mp-1]."""
    engine = jump_engine(presentation, ideal)
    p, r = engine.p, engine.r
    window = engine.r * p**e
    jumps = set(engine.jump_set(e))
    for n in range(0, window - 1):
        m = n + r  # smallest nontrivial gap width
        if m > window:
            break
        if any(j in jumps for j in range(max(0, n - r + 1), m)):
            continue
        assert not any(
            engine.is_jump(k, e + 1) for k in range(max(0, n * p - r + 1), m * p)
        ), (ideal, e, n)


def check_tau_monotone(a: Ideal, lam1: Fraction, lam2: Fraction, e_max: int = 3) -> None:
    if lam1 > lam2:
        lam1, lam2 = lam2, lam1
    t1 = test_ideal(a, lam1, e_max)
    t2 = test_ideal(a, lam2, e_max)
    assert t1.ideal.contains_ideal(t2.ideal), (a, lam1, lam2)


def check_expansion_formula(value: Fraction, p: int, e: int, a: int) -> None:
    """Lemma-style closed-form truncation agrees with the modular inverse."""
    alpha = PAdicRational(value, p)
    if ((p**e - 1) * value).denominator != 1:
        return
    try:
        via_formula = alpha.expn_truncation(e, a)
    except ValueError:
        return  # a below the validity bound; nothing to compare
    assert via_formula == alpha.truncation(e * a), (value, p, e, a)


def check_skoda_certificate(presentation, ideal, levels: int = 2) -> None:
    """If lam > r is certified, lam - 1 is certified at the same level."""
    engine = jump_engine(presentation, ideal)
    r = engine.r
    for k in range(1, 3):
        lam = Fraction(r + k)
        cert = verify_threshold(engine, lam, levels)
        if cert is not None:
            assert verify_threshold(engine, lam - 1, levels) is not None, (ideal, lam)


def check_multiplication_by_p(presentation, ideal, lam: Fraction, levels: int = 3) -> None:
    """F-split: lam certified to E implies p*lam certified to E - 1."""
    engine = jump_engine(presentation, ideal)
    cert = verify_threshold(engine, lam, levels)
    if cert is not None:
        assert verify_threshold(engine, lam * engine.p, levels - 1) is not None, (
            ideal,
            lam,
        )
