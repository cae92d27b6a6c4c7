"""Differential jump tables and the nu-style containment invariants.

A level-e differential jump of an ideal a is an n with D^(e)*a^n strictly
containing D^(e)*a^(n+1); the fundamental window [0, r*p^e) determines the
rest through subtraction of p^e.  `nu_invariant` is the companion quantity
max{n : a^n not contained in c^[p^e]} used by the threshold detectors.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from . import frobenius
from .polyring import Ideal, RowSpan
from .rings import JumpEngine, Presentation, jump_engine


@dataclass
class JumpTable:
    """Per-level jump sets of one (presentation, ideal) pair."""

    p: int
    r: int
    producer: str
    levels: dict[int, tuple[int, ...]] = field(default_factory=dict)

    def window(self, e: int) -> int:
        return self.r * self.p**e

    def check_nesting(self) -> None:
        """Jumps at a deeper level reduce (by p^e-subtraction) into shallower sets.

        Raises AssertionError when the stored levels violate the nesting; the
        reduction into the window is licensed exactly when n >= r*p^e.
        """
        levels = sorted(self.levels)
        for shallow, deep in zip(levels, levels[1:]):
            q = self.p**shallow
            window = self.window(shallow)
            allowed = set(self.levels[shallow])
            for n in self.levels[deep]:
                reduced = n
                while reduced >= window:
                    reduced -= q
                assert reduced in allowed, (shallow, deep, n)

    def to_json(self) -> str:
        payload = {
            "p": self.p,
            "r": self.r,
            "levels": {str(e): list(jumps) for e, jumps in sorted(self.levels.items())},
        }
        return json.dumps(payload, separators=(",", ":"), sort_keys=True)


def jump_set(presentation: Presentation, ideal, e: int) -> tuple[int, ...]:
    """Sorted level-e jumps inside the fundamental window [0, r*p^e)."""
    return jump_engine(presentation, ideal).jump_set(e)


def jump_table(presentation: Presentation, ideal, levels) -> JumpTable:
    engine = jump_engine(presentation, ideal)
    table = JumpTable(p=engine.p, r=engine.r, producer=engine.producer)
    for e in levels:
        table.levels[e] = engine.jump_set(e)
    return table


def is_jump(presentation: Presentation, ideal, e: int, n: int) -> bool:
    """Whether n (any non-negative integer) is a level-e jump; direct engine test.

    Subtracting p^e while n >= r(p^e - 1) + 1 is a sound refutation shortcut
    (a jump at n forces one at n - p^e) but the direct comparison is always
    available and is what is used here.
    """
    return jump_engine(presentation, ideal).is_jump(n, e)


def engine_for(presentation: Presentation, ideal) -> JumpEngine:
    return jump_engine(presentation, ideal)


# -- nu invariants ---------------------------------------------------------------


def nu_invariant(a: Ideal, c: Ideal, e: int, radical_power_bound: int = 24) -> int:
    """max{n >= 0 : a^n not contained in c^[p^e]} for ideals of a polynomial ring.

    Requires c proper and a inside the radical of c (otherwise no maximum
    exists); radical membership is tested generator-by-generator up to the
    configured power bound.
    """
    if a.ring != c.ring:
        raise ValueError("a and c must live in the same ring")
    if c.is_unit():
        raise ValueError("c must be a proper ideal")
    if a.is_zero():
        return 0
    for g in a.generators:
        if not c.radical_contains(g, radical_power_bound):
            raise ValueError(
                f"generator {g} of a not detected in the radical of c"
                f" (power bound {radical_power_bound})"
            )
    frob = c.frobenius_power(e)

    def contained(n: int) -> bool:
        return frob.contains_ideal(a.power(n))

    # a^0 = (1) is never inside the proper ideal; grow until containment holds,
    # then binary-search the boundary (containment is monotone in n).
    lo = 0
    hi = 1
    while not contained(hi):
        lo = hi
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if contained(mid):
            hi = mid
        else:
            lo = mid
    return lo


# -- Groebner-free route, used as an independent oracle --------------------------


def jump_set_via_oracle(a: Ideal, e: int, window: int | None = None) -> tuple[int, ...]:
    """Level-e jumps of a polynomial-ring ideal without Groebner bases.

    n is a jump iff a^n is not contained in D^(e)*a^(n+1) = (C^e*a^(n+1))^[p^e].
    Powers are raw generator products, root coefficients are read off the raw
    generators, and every membership goes through degree-bounded row reduction.
    """
    ring = a.ring
    q = ring.p**e
    r = max(1, len(a.generators))
    hi = r * q if window is None else window

    def raw_power(n: int):
        gens = [ring.one()]
        for _ in range(n):
            gens = list({g * h for g in gens for h in a.generators})
        return gens

    powers = {n: raw_power(n) for n in range(hi + 2)}
    jumps = []
    for n in range(hi):
        roots = []
        for g in powers[n + 1]:
            roots.extend(frobenius.poly_root_coefficients(g, e))
        closure_gens = [h.frobenius(e) for h in roots if not h.is_zero()]
        members = [g for g in powers[n] if not g.is_zero()]
        if not closure_gens:
            if members:
                jumps.append(n)
            continue
        cap = max((g.total_degree() for g in members), default=0)
        span = RowSpan(ring, closure_gens, cap)
        if not all(span.contains(g) for g in members):
            jumps.append(n)
    return tuple(jumps)
