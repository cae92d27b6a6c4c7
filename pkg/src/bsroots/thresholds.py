"""Differential thresholds, F-thresholds, test ideals and F-jumping numbers.

A differential threshold is a limit of jumps scaled by p^-e.  For F-split
presentations the per-level witness condition is a jump inside
[p^e*lam - r, p^e*lam]; for the non-F-split engines the detector falls back to
the definition and asks for jumps within a fixed slack K of p^e*lam (the
witnessed sequence then converges at rate (r+K)/p^e).  Surviving candidates
closer than the level-E resolution are merged and the simplest member reported.

F-thresholds and Cartier thresholds are computed on polynomial rings through
two deliberately different routes (direct Frobenius-power containments versus
peeled Cartier roots) so they can cross-check each other.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import frobenius
from .jumps import nu_invariant
from .padic import format_rational
from .polyring import Ideal
from .rings import JumpEngine, Presentation, jump_engine
from .roots import RootCertificate


@dataclass(frozen=True)
class ThresholdWitness:
    e: int
    jump: int  # a level-e jump within the certification window around p^e*lam


@dataclass(frozen=True)
class ThresholdCertificate:
    value: Fraction
    p: int
    certified_level: int
    witnesses: tuple[ThresholdWitness, ...]
    slack: int  # 0 means the strict F-split window [p^e*lam - r, p^e*lam]
    merged: tuple[Fraction, ...] = ()  # indistinguishable survivors folded in

    def __str__(self) -> str:
        return f"{format_rational(self.value)} (certified to level {self.certified_level})"


def _ceil(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def _floor(x: Fraction) -> int:
    return x.numerator // x.denominator


def verify_threshold(
    engine: JumpEngine, lam: Fraction, levels: int
) -> ThresholdCertificate | None:
    """Per-level witness check for a threshold candidate; None when refuted."""
    lam = Fraction(lam)
    if lam < 0:
        return None
    K = engine.threshold_slack
    witnesses = []
    for e in range(1, levels + 1):
        target = lam * engine.p**e
        lo = max(0, _ceil(target - engine.r - K))
        hi = _floor(target + K)
        found = None
        best_distance = None
        for k in range(lo, hi + 1):
            if engine.is_jump(k, e):
                distance = abs(Fraction(k) - target)
                if best_distance is None or distance < best_distance:
                    found, best_distance = k, distance
        if found is None:
            return None
        witnesses.append(ThresholdWitness(e=e, jump=found))
    return ThresholdCertificate(
        value=lam,
        p=engine.p,
        certified_level=levels,
        witnesses=tuple(witnesses),
        slack=K,
    )


def threshold_candidates(
    engine: JumpEngine,
    levels: int,
    interval: tuple[Fraction, Fraction],
    c_max: int | None = None,
    b_max: int | None = None,
) -> list[Fraction]:
    """Candidate rationals spawned from the top-level jump set.

    Each level-E jump nu supports a threshold in [nu/p^E, (nu+r)/p^E]; the
    spawn window is widened by the slack and filled with every rational of
    denominator dividing p^c (p^b - 1).  Integer translates cover the part of
    the requested interval above the fundamental window.
    """
    p, r = engine.p, engine.r
    E = levels
    if c_max is None:
        c_max = E
    if b_max is None:
        b_max = max(1, (E + 1) // 2)
    lo_cap, hi_cap = Fraction(interval[0]), Fraction(interval[1])
    q = p**E
    width = Fraction(r + engine.threshold_slack)
    spawn_ranges = []
    for nu in engine.jump_set(E):
        lo = max(Fraction(0), Fraction(nu, q) - width / q)
        hi = Fraction(nu, q) + width / q
        spawn_ranges.append((lo, hi))

    denominators = sorted(
        {p**c * (p**b - 1) for c in range(c_max + 1) for b in range(1, b_max + 1)}
    )
    base: set[Fraction] = set()
    for lo, hi in spawn_ranges:
        for d in denominators:
            for k in range(_ceil(lo * d), _floor(hi * d) + 1):
                base.add(Fraction(k, d))
    # Integer translates sweep candidates across the requested interval.
    out: set[Fraction] = set()
    if base:
        max_shift = _floor(hi_cap - min(base)) + 1
        for lam in base:
            for shift in range(0, max(1, max_shift) + 1):
                value = lam + shift
                if lo_cap <= value <= hi_cap:
                    out.add(value)
    return sorted(out)


def differential_thresholds(
    presentation: Presentation,
    ideal,
    levels: int = 3,
    interval: tuple[Fraction, Fraction] | None = None,
    c_max: int | None = None,
    b_max: int | None = None,
) -> list[ThresholdCertificate]:
    """Certified differential thresholds in the interval, merged at resolution.

    Survivors closer together than 2(r + K)/p^E cannot be distinguished at
    certification level E; each such cluster is reported once, through its
    smallest-denominator member.
    """
    engine = jump_engine(presentation, ideal)
    if interval is None:
        interval = (Fraction(0), Fraction(engine.r))
    survivors = []
    for lam in threshold_candidates(engine, levels, interval, c_max, b_max):
        certificate = verify_threshold(engine, lam, levels)
        if certificate is not None:
            survivors.append(certificate)
    merge_gap = Fraction(2 * (engine.r + engine.threshold_slack), engine.p**levels)
    return _merge_clusters(survivors, merge_gap)


def _merge_clusters(
    certificates: list[ThresholdCertificate], merge_gap: Fraction
) -> list[ThresholdCertificate]:
    if not certificates:
        return []
    certificates = sorted(certificates, key=lambda c: c.value)
    clusters: list[list[ThresholdCertificate]] = [[certificates[0]]]
    for cert in certificates[1:]:
        if cert.value - clusters[-1][-1].value <= merge_gap:
            clusters[-1].append(cert)
        else:
            clusters.append([cert])
    merged = []
    for cluster in clusters:
        head = min(cluster, key=lambda c: (c.value.denominator, c.value))
        others = tuple(c.value for c in cluster if c.value != head.value)
        merged.append(
            ThresholdCertificate(
                value=head.value,
                p=head.p,
                certified_level=head.certified_level,
                witnesses=head.witnesses,
                slack=head.slack,
                merged=others,
            )
        )
    return merged


def fpt(
    presentation: Presentation, ideal, levels: int = 3
) -> ThresholdCertificate | None:
    """The smallest certified differential threshold (None for the unit ideal)."""
    engine = jump_engine(presentation, ideal)
    certificates = differential_thresholds(
        presentation, ideal, levels, interval=(Fraction(0), Fraction(engine.r))
    )
    return certificates[0] if certificates else None


# -- F-thresholds and Cartier thresholds ------------------------------------------


@dataclass
class ThresholdSequence:
    """nu-values per level with an exact limit when the recurrence locks in."""

    nu: dict[int, int]
    limit: Fraction | None
    bracket: tuple[Fraction, Fraction]
    pattern: tuple[int, int] | None  # (b, const) with nu_{e+b} = p^b nu_e + const

    def csv(self, p: int) -> str:
        lines = ["e,nu,nu_over_pe"]
        for e in sorted(self.nu):
            lines.append(f"{e},{self.nu[e]},{format_rational(Fraction(self.nu[e], p**e))}")
        return "\n".join(lines) + "\n"


def _detect_limit(nu: dict[int, int], p: int, r: int) -> ThresholdSequence:
    levels = sorted(nu)
    E = levels[-1]
    bracket = (Fraction(nu[E], p**E), Fraction(nu[E] + r, p**E))
    for b in range(1, len(levels)):
        pairs = [(e, e + b) for e in levels if e + b in nu]
        if len(pairs) < 2:
            continue
        consts = {nu[hi] - p**b * nu[lo] for lo, hi in pairs}
        if len(consts) == 1:
            const = consts.pop()
            e0 = levels[0]
            limit = Fraction(nu[e0] * (p**b - 1) + const, p**e0 * (p**b - 1))
            return ThresholdSequence(nu=nu, limit=limit, bracket=bracket, pattern=(b, const))
    return ThresholdSequence(nu=nu, limit=None, bracket=bracket, pattern=None)


def _check_threshold_preconditions(a: Ideal, c: Ideal, radical_power_bound: int = 24):
    if c.is_unit():
        raise ValueError("c must be a proper ideal")
    for g in a.generators:
        if not c.radical_contains(g, radical_power_bound):
            raise ValueError(f"generator {g} of a not detected in the radical of c")


def f_threshold(a: Ideal, c: Ideal, levels: int = 3) -> ThresholdSequence:
    """The F-threshold data of a with respect to c: nu_e = max{n : a^n not in c^[p^e]}."""
    _check_threshold_preconditions(a, c)
    nu = {e: nu_invariant(a, c, e) for e in range(1, levels + 1)}
    return _detect_limit(nu, a.ring.p, a.declared_r)


def cartier_threshold(a: Ideal, c: Ideal, levels: int = 3) -> ThresholdSequence:
    """Cartier-threshold data: max{n : C^e * a^n not contained in c} per level.

    Computed through the Cartier-preimage reformulation with peeled roots;
    on a polynomial ring it agrees with `f_threshold` level by level.
    """
    _check_threshold_preconditions(a, c)
    p = a.ring.p
    nu = {}
    for e in range(1, levels + 1):

        def outside(n: int) -> bool:
            return not c.contains_ideal(frobenius.eth_root_power(a, n, e))

        lo, hi = 0, 1
        while outside(hi):
            lo = hi
            hi *= 2
        while hi - lo > 1:
            mid = (lo + hi) // 2
            if outside(mid):
                lo = mid
            else:
                hi = mid
        nu[e] = lo
    return _detect_limit(nu, p, a.declared_r)


# -- test ideals and F-jumping numbers ---------------------------------------------


@dataclass
class TestIdealResult:
    ideal: Ideal
    stabilization_level: int
    stabilized: bool

    def __str__(self) -> str:
        flag = "stabilized" if self.stabilized else "NOT stabilized"
        return f"({', '.join(str(g) for g in self.ideal.groebner())}) [{flag} at e={self.stabilization_level}]"


def test_ideal(a: Ideal, lam: Fraction, e_max: int = 4) -> TestIdealResult:
    """tau(a^lam) as the ascending chain C^e * a^(ceil(p^e lam)), e <= e_max.

    The reported ideal is always the top of the computed chain (the chain
    ascends, so that is the sharpest lower bound for tau).  `stabilized` is a
    conservative flag: the last two chain terms agree and the agreement starts
    at a level covering the p-part of the denominator of lam.  An early
    agreement alone is not trusted; the chain can plateau for a step and grow
    again (e.g. the exponent 29/20 on (x^2yz, xy^2z, xyz^2) at p = 5 plateaus
    at levels 1-2 before jumping at level 3).
    """
    lam = Fraction(lam)
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    ring = a.ring
    unit = Ideal(ring, (ring.one(),), declared_r=1)
    if lam == 0 or a.is_unit():
        return TestIdealResult(ideal=unit, stabilization_level=0, stabilized=True)
    p = ring.p
    c_part = 0
    den = lam.denominator
    while den % p == 0:
        den //= p
        c_part += 1
    chain = []
    for e in range(1, e_max + 1):
        n = _ceil(lam * p**e)
        chain.append(frobenius.eth_root_power(a, n, e))
    for prev, nxt in zip(chain, chain[1:]):
        if not nxt.contains_ideal(prev):
            raise AssertionError("test-ideal chain failed to ascend")
    top = chain[-1]
    level = e_max
    while level > 1 and chain[level - 2] == top:
        level -= 1
    agreements = e_max - level
    # Two agreements at the top, or one that starts beyond the p-part of the
    # denominator (where the ceiling sequence is periodic), count as evidence;
    # a single early agreement can be a plateau and is not trusted.
    stabilized = agreements >= 2 or (agreements >= 1 and level >= c_part + 1)
    return TestIdealResult(ideal=top, stabilization_level=level, stabilized=stabilized)


def f_jumping_numbers(
    a: Ideal,
    interval: tuple[Fraction, Fraction],
    e_max: int = 4,
    b_max: int = 1,
    grid_c_max: int | None = None,
) -> list[Fraction]:
    """F-jumping numbers of a in the closed interval, at grid resolution.

    The candidate grid holds every rational with denominator dividing
    p^c (p^b - 1), c <= grid_c_max, b <= b_max; tau is piecewise constant
    between consecutive true jumping numbers, so whenever the grid contains
    them all, a jump is reported exactly where tau differs from the previous
    grid point.  A grid point with p-part c in its denominator needs roughly
    c + 3 levels of chain to certify (c to enter the periodic ceiling regime,
    two for agreement, one of slack next to a jump), so the default grid
    resolution is e_max - 3; pass grid_c_max to override.
    """
    lo, hi = Fraction(interval[0]), Fraction(interval[1])
    if lo < 0 or hi < lo:
        raise ValueError("interval must satisfy 0 <= lo <= hi")
    if grid_c_max is None:
        grid_c_max = max(0, e_max - 3)
    p = a.ring.p
    denominators = sorted(
        {p**c * (p**b - 1) for c in range(grid_c_max + 1) for b in range(1, b_max + 1)}
    )
    grid: set[Fraction] = set()
    for d in denominators:
        for k in range(_ceil(lo * d), _floor(hi * d) + 1):
            grid.add(Fraction(k, d))
    if lo > 0:
        # One comparison point just below the interval.
        grid.add(max((Fraction(_ceil(lo * d) - 1, d)) for d in denominators))
    points = sorted(grid)
    jumps = []
    # tau(a^0) = (1) seeds the comparison when the interval starts at zero.
    previous_ideal = Ideal(a.ring, (a.ring.one(),), declared_r=1) if lo == 0 else None
    for lam in points:
        tau = test_ideal(a, lam, e_max)
        if not tau.stabilized:
            raise ValueError(f"tau(a^{lam}) did not stabilize by e={e_max}; raise e_max")
        if previous_ideal is not None and lo <= lam <= hi and lam > 0:
            if tau.ideal != previous_ideal:
                jumps.append(lam)
        previous_ideal = tau.ideal
    return jumps


# -- comparison between roots and thresholds ---------------------------------------


@dataclass
class CosetReport:
    passed: bool
    failures: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def __str__(self) -> str:
        status = "pass" if self.passed else "FAIL"
        body = "".join(f"\n  - {line}" for line in self.failures + self.notes)
        return f"coset correspondence: {status}{body}"


def coset_correspondence_check(
    root_values,
    threshold_values,
    r: int,
    p: int,
    f_split: bool = True,
) -> CosetReport:
    """Roots and thresholds determine each other in Z_(p)/Z with bounded offsets.

    Every root alpha must admit a threshold lam with alpha - ceil(alpha) + lam
    in {0..r-1} (alpha not a negative integer) or {1..r} (alpha a negative
    integer); conversely every p-integral threshold must admit a root with
    alpha + lam - floor(lam) in {1-r..0} (lam not an integer) or {-r..0}.
    Valid for F-split presentations only.
    """
    if not f_split:
        raise ValueError(
            "the coset correspondence assumes an F-split presentation"
        )
    roots = sorted(Fraction(v) for v in root_values)
    thresholds = sorted(Fraction(v) for v in threshold_values)
    report = CosetReport(passed=True)
    if not roots and not thresholds:
        report.notes.append("both lists empty; vacuously true")
        return report

    for alpha in roots:
        negative_integer = alpha.denominator == 1 and alpha < 0
        offsets = range(1, r + 1) if negative_integer else range(0, r)
        shift = alpha - _ceil(alpha)
        ok = any(
            (shift + lam).denominator == 1 and int(shift + lam) in offsets
            for lam in thresholds
        )
        if not ok:
            report.passed = False
            report.failures.append(
                f"root {format_rational(alpha)} has no matching threshold"
                f" (offsets {list(offsets)}); raise the level or widen the interval cap"
            )

    for lam in thresholds:
        if lam < 0 or lam.denominator % p == 0:
            report.notes.append(
                f"threshold {format_rational(lam)} is not p-integral; part (2) does not apply"
            )
            continue
        integer = lam.denominator == 1
        offsets = range(-r, 1) if integer else range(1 - r, 1)
        shift = lam - _floor(lam)
        ok = any(
            (alpha + shift).denominator == 1 and int(alpha + shift) in offsets
            for alpha in roots
        )
        if not ok:
            report.passed = False
            report.failures.append(
                f"threshold {format_rational(lam)} has no matching root"
                f" (offsets {list(offsets)}); raise the level or widen the interval cap"
            )
    return report


def certificates_to_values(certificates) -> list[Fraction]:
    """Convenience: pull the rational values out of root/threshold certificates."""
    out = []
    for cert in certificates:
        if isinstance(cert, (RootCertificate, ThresholdCertificate)):
            out.append(cert.value if isinstance(cert, ThresholdCertificate) else cert.candidate)
        else:
            out.append(Fraction(cert))
    return out
