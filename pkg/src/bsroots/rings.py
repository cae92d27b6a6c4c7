"""Ring presentations and their differential-jump engines.

Four kinds of presentation are supported:

* polynomial rings over F_p (the regular engine: Cartier-root comparisons);
* monomial subalgebras that are level-differentially extensible direct
  summands of a polynomial ring (computations run on the lifted ideal in the
  ambient ring and are exactly equal; the built-in whitelist holds the full
  Veronese subrings, anything else needs an explicit caller assertion);
* numerical semigroup rings K[x^s : s in S] (graded endomorphism enumeration
  over the subring of p^e-th powers);
* a small catalog of rings with closed-form jump sets (K[x,y]/(xy) with f = x,
  the cusp K[x^2,x^3] with f = x^2, and the artinian K[x]/(x^(n+1)) with
  f = x).

Every engine exposes canonical labels for the ideals D^(e) * a^n, from which
jump sets and single-jump queries are derived.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from . import frobenius
from .padic import check_prime
from .polyring import Ideal, ParseError, PolyRing


# -- numerical semigroups -------------------------------------------------------


class NumericalSemigroup:
    """A cofinite additive subsemigroup of Z>=0, given by generators with gcd 1."""

    def __init__(self, generators):
        gens = sorted(set(int(g) for g in generators))
        if not gens or gens[0] <= 0:
            raise ValueError("semigroup generators must be positive integers")
        g = 0
        for x in gens:
            g = gcd(g, x)
        if g != 1:
            raise ValueError(f"generators {gens} have gcd {g}; no finite conductor")
        self.generators = tuple(gens)
        # Grow the reachability table until a full run of gens[0] consecutive
        # representable values appears; everything beyond such a run is
        # representable, so the conductor is certified without number theory.
        bound = gens[0] * gens[-1] + 1
        while True:
            table = [False] * (bound + 1)
            table[0] = True
            for s in range(1, bound + 1):
                table[s] = any(s >= g and table[s - g] for g in gens)
            conductor = 0
            for s in range(bound, -1, -1):
                if not table[s]:
                    conductor = s + 1
                    break
            if conductor + gens[0] <= bound and all(
                table[conductor + i] for i in range(gens[0])
            ):
                break
            bound *= 2
        self._table = table
        self.conductor = conductor

    def __contains__(self, s: int) -> bool:
        if s < 0:
            return False
        if s >= self.conductor:
            return True
        return self._table[s]

    def gaps(self) -> list[int]:
        return [s for s in range(self.conductor) if not self._table[s]]

    def apery(self, q: int) -> list[int]:
        """The least element of S in each residue class mod q."""
        out = []
        for j in range(q):
            s = j
            while s not in self:
                s += q
            out.append(s)
        return out

    def __repr__(self) -> str:
        return f"NumericalSemigroup{self.generators}"


def minimal_semigroup_exponents(S: NumericalSemigroup, exponents) -> frozenset:
    """Minimal generators of the semigroup ideal spanned by the exponents."""
    exps = sorted(set(exponents))
    kept: list[int] = []
    for t in exps:
        if not any((t - k) in S for k in kept):
            kept.append(t)
    return frozenset(kept)


@dataclass(frozen=True)
class SemigroupIdeal:
    """A monomial ideal of K[x^s : s in S], stored by minimal exponents."""

    semigroup: NumericalSemigroup
    exponents: frozenset

    @staticmethod
    def from_exponents(S: NumericalSemigroup, exponents) -> "SemigroupIdeal":
        exps = tuple(int(x) for x in exponents)
        for x in exps:
            if x not in S:
                raise ValueError(f"exponent {x} is not in the semigroup {S}")
        return SemigroupIdeal(S, minimal_semigroup_exponents(S, exps))

    @property
    def declared_r(self) -> int:
        return max(1, len(self.exponents))

    def is_unit(self) -> bool:
        return 0 in self.exponents


# -- presentations --------------------------------------------------------------


@lru_cache(maxsize=None)
def _ring(p: int, variables: tuple[str, ...]) -> PolyRing:
    return PolyRing(p, variables)


@dataclass(frozen=True)
class PolynomialRingPresentation:
    p: int
    variables: tuple[str, ...]

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "variables", tuple(self.variables))

    @property
    def ring(self) -> PolyRing:
        return _ring(self.p, self.variables)

    def parse_ideal(self, text: str) -> Ideal:
        return self.ring.parse_ideal(text)

    def describe(self) -> str:
        return f"poly p={self.p} vars={','.join(self.variables)}"


@dataclass(frozen=True)
class MonomialSubalgebraPresentation:
    """A monomial subalgebra R of S = F_p[vars], assumed to be a split summand.

    `assumed_level_diff_extensible` must be set (or the subalgebra must be on
    the built-in whitelist, i.e. a full Veronese) before jump computations are
    allowed: only level-differential extensibility makes the lifted jump sets
    exactly equal rather than merely containing the original ones.
    """

    p: int
    variables: tuple[str, ...]
    subalgebra_monomials: tuple[tuple, ...]
    assumed_level_diff_extensible: bool = False

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(
            self,
            "subalgebra_monomials",
            tuple(tuple(m) for m in self.subalgebra_monomials),
        )

    @property
    def ambient(self) -> PolyRing:
        return _ring(self.p, self.variables)

    def is_whitelisted_veronese(self) -> bool:
        degrees = {sum(m) for m in self.subalgebra_monomials}
        if len(degrees) != 1:
            return False
        (d,) = degrees
        expected = {
            m
            for m in _monomials_of_degree(len(self.variables), d)
        }
        return set(self.subalgebra_monomials) == expected

    def extensible(self) -> bool:
        return self.assumed_level_diff_extensible or self.is_whitelisted_veronese()

    def label(self) -> str:
        return "veronese" if self.is_whitelisted_veronese() else "assumed-extensible"

    def contains_monomial(self, exponents) -> bool:
        """Membership of x^exponents in the monomial subalgebra (bounded search)."""
        target = tuple(exponents)
        if not any(target):
            return True
        seen = {target}
        stack = [target]
        while stack:
            cur = stack.pop()
            for m in self.subalgebra_monomials:
                nxt = tuple(a - b for a, b in zip(cur, m))
                if any(a < 0 for a in nxt):
                    continue
                if not any(nxt):
                    return True
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return False

    def parse_ideal(self, text: str) -> Ideal:
        ideal = self.ambient.parse_ideal(text)
        for g in ideal.generators:
            for mono, _ in g.terms:
                if not self.contains_monomial(mono):
                    raise ParseError(
                        f"monomial {mono} of {g} lies outside the subalgebra"
                    )
        return ideal

    def describe(self) -> str:
        return f"monomial-subalgebra p={self.p} vars={','.join(self.variables)}"


def _monomials_of_degree(nvars: int, degree: int):
    if nvars == 1:
        yield (degree,)
        return
    for head in range(degree + 1):
        for tail in _monomials_of_degree(nvars - 1, degree - head):
            yield (head,) + tail


def veronese_presentation(p: int, variables, degree: int) -> MonomialSubalgebraPresentation:
    monomials = tuple(_monomials_of_degree(len(tuple(variables)), degree))
    return MonomialSubalgebraPresentation(p, tuple(variables), monomials)


@dataclass(frozen=True)
class SemigroupRingPresentation:
    p: int
    semigroup_generators: tuple[int, ...]

    def __post_init__(self):
        check_prime(self.p)
        object.__setattr__(
            self, "semigroup_generators", tuple(int(g) for g in self.semigroup_generators)
        )
        self.semigroup  # validate eagerly

    @property
    def semigroup(self) -> NumericalSemigroup:
        return _semigroup(self.semigroup_generators)

    def parse_ideal(self, text: str) -> SemigroupIdeal:
        exps = []
        for part in text.split(","):
            part = part.strip()
            if not part:
                continue
            exps.append(_parse_power_of_x(part))
        if not exps:
            raise ParseError("empty semigroup ideal text")
        return SemigroupIdeal.from_exponents(self.semigroup, exps)

    def describe(self) -> str:
        return f"semigroup p={self.p} gens={','.join(map(str, self.semigroup_generators))}"


@lru_cache(maxsize=None)
def _semigroup(generators: tuple[int, ...]) -> NumericalSemigroup:
    return NumericalSemigroup(generators)


def _parse_power_of_x(text: str) -> int:
    text = text.replace(" ", "")
    if text == "x":
        return 1
    if text.startswith("x^"):
        try:
            return int(text[2:])
        except ValueError as exc:
            raise ParseError(f"bad monomial {text!r}") from exc
    if text == "1":
        return 0
    raise ParseError(f"expected a power of x, got {text!r}")


CATALOG_KINDS = ("cross_xy", "cusp_semigroup", "artinian_x_pow")


@dataclass(frozen=True)
class CatalogPresentation:
    """A ring with a closed-form jump-set description.

    cross_xy:        K[x,y]/(xy), fixed element x
    cusp_semigroup:  K[x^2,x^3], fixed element x^2
    artinian_x_pow:  K[x]/(x^(n+1)), fixed element x (parameter n)
    """

    p: int
    kind: str
    n: int | None = None

    def __post_init__(self):
        check_prime(self.p)
        if self.kind not in CATALOG_KINDS:
            raise ValueError(f"unknown catalog ring {self.kind!r}")
        if self.kind == "artinian_x_pow":
            if self.n is None or self.n < 1:
                raise ValueError("artinian_x_pow needs a parameter n >= 1")
        elif self.n is not None:
            raise ValueError(f"{self.kind} takes no parameter")

    def canonical_element(self) -> str:
        return {"cross_xy": "x", "cusp_semigroup": "x^2", "artinian_x_pow": "x"}[self.kind]

    def parse_ideal(self, text: str | None) -> str:
        expected = self.canonical_element()
        if text is not None and text.replace(" ", "") not in (expected, ""):
            raise ParseError(
                f"catalog ring {self.kind} is tabulated for the element {expected!r} only"
            )
        return expected

    def describe(self) -> str:
        kind = self.kind if self.n is None else f"{self.kind}({self.n})"
        return f"catalog {kind} p={self.p}"


Presentation = (
    PolynomialRingPresentation
    | MonomialSubalgebraPresentation
    | SemigroupRingPresentation
    | CatalogPresentation
)


def parse_ring_declaration(text: str) -> Presentation:
    """Parse declarations like `poly p=5 vars=x,y` or `catalog cross_xy p=3`."""
    parts = text.split()
    if not parts:
        raise ParseError("empty ring declaration")
    head, rest = parts[0], parts[1:]
    kv = {}
    positional = []
    for item in rest:
        if "=" in item:
            key, _, value = item.partition("=")
            kv[key] = value
        else:
            positional.append(item)

    def need(key):
        if key not in kv:
            raise ParseError(f"ring declaration {text!r} is missing {key}=")
        return kv[key]

    try:
        if head == "poly":
            return PolynomialRingPresentation(int(need("p")), tuple(need("vars").split(",")))
        if head == "veronese":
            return veronese_presentation(
                int(need("p")), tuple(need("vars").split(",")), int(need("degree"))
            )
        if head == "semigroup":
            return SemigroupRingPresentation(
                int(need("p")), tuple(int(g) for g in need("gens").split(","))
            )
        if head == "catalog":
            if not positional:
                raise ParseError("catalog declaration needs an identifier")
            ident = positional[0]
            n = None
            if "(" in ident:
                base, _, arg = ident.partition("(")
                ident = base
                arg = arg.rstrip(")")
                if arg.startswith("n="):
                    arg = arg[2:]
                n = int(arg)
            return CatalogPresentation(int(need("p")), ident, n)
    except (ValueError, ParseError) as exc:
        raise ParseError(f"bad ring declaration {text!r}: {exc}") from exc
    raise ParseError(f"unknown ring declaration {head!r}")


# -- lifting into the ambient polynomial ring ------------------------------------


def lift_ideal(presentation: MonomialSubalgebraPresentation, ideal: Ideal) -> Ideal:
    """The extension aS of an ideal of R to the ambient polynomial ring S.

    Only allowed for level-differentially extensible presentations, where the
    jump sets of (R, a) and (S, aS) coincide exactly; for a mere split summand
    only one containment would hold, which is refused.
    """
    if not presentation.extensible():
        raise ValueError(
            "subalgebra is not certified level-differentially extensible;"
            " pass assumed_level_diff_extensible=True to assert it"
        )
    if ideal.ring != presentation.ambient:
        raise ValueError("ideal must be written in the ambient coordinates")
    return Ideal(presentation.ambient, ideal.generators, declared_r=ideal.declared_r)


# -- semigroup differential closure ----------------------------------------------


class _SemigroupLevelData:
    """Per-level admissible-shift tables for End_{R^(p^e)}(R) on K[x^S]."""

    def __init__(self, S: NumericalSemigroup, q: int):
        self.S = S
        self.q = q
        self.min_in_class = S.apery(q)
        self._shift_gens: dict[int, tuple[int, ...]] = {}

    def _admissible(self, j: int, d: int) -> bool:
        # x^s -> x^(s+d) on the class of j extends to an R^(p^e)-endomorphism
        # iff s + d lands in S for every s in the class; beyond the conductor
        # (plus slack for negative d) this is automatic.
        S, q = self.S, self.q
        limit = S.conductor + max(0, -d)
        s = self.min_in_class[j]
        while s < limit:
            if s in S and (s + d) not in S:
                return False
            s += q
        return True

    def shift_generators(self, j: int) -> tuple[int, ...]:
        """Minimal admissible degree shifts for the residue class j."""
        cached = self._shift_gens.get(j)
        if cached is not None:
            return cached
        S = self.S
        lo = -self.min_in_class[j]
        first = None
        admissible = []
        d = lo
        while True:
            if self._admissible(j, d):
                if first is None:
                    first = d
                admissible.append(d)
            if first is not None and d >= first + S.conductor:
                break
            d += 1
        gens = []
        for d in admissible:
            if not any(d == g or (d - g) in S for g in gens):
                gens.append(d)
        result = tuple(gens)
        self._shift_gens[j] = result
        return result


def semigroup_diff_closure(
    S: NumericalSemigroup, ideal: SemigroupIdeal, e: int, p: int
) -> SemigroupIdeal:
    """D^(e) * ideal as a semigroup ideal (union over the minimal exponents)."""
    if e < 0:
        raise ValueError("level must be >= 0")
    data = _semigroup_level_data(S, p**e)
    out = []
    for m in ideal.exponents:
        for d in data.shift_generators(m % data.q):
            if m + d >= 0:
                out.append(m + d)
    return SemigroupIdeal(S, minimal_semigroup_exponents(S, out))


_LEVEL_DATA_CACHE: dict[tuple, _SemigroupLevelData] = {}


def _semigroup_level_data(S: NumericalSemigroup, q: int) -> _SemigroupLevelData:
    key = (S.generators, q)
    data = _LEVEL_DATA_CACHE.get(key)
    if data is None:
        data = _SemigroupLevelData(S, q)
        _LEVEL_DATA_CACHE[key] = data
    return data


# -- jump engines ----------------------------------------------------------------


class JumpEngine:
    """Canonical labels for D^(e)*a^n plus jump queries derived from them."""

    p: int
    r: int
    f_split_certified: bool
    threshold_slack: int
    producer: str

    def d_label(self, n: int, e: int):
        raise NotImplementedError

    def is_jump(self, n: int, e: int) -> bool:
        if n < 0:
            return False
        return self.d_label(n, e) != self.d_label(n + 1, e)

    def jump_set(self, e: int, window: int | None = None) -> tuple[int, ...]:
        hi = self.r * self.p**e if window is None else window
        labels = [self.d_label(n, e) for n in range(hi + 1)]
        return tuple(n for n in range(hi) if labels[n] != labels[n + 1])

    def default_root_interval(self) -> tuple[Fraction, Fraction]:
        if self.f_split_certified:
            return (Fraction(-self.r), Fraction(0))
        return (Fraction(-self.r), Fraction(self.r))


class RegularJumpEngine(JumpEngine):
    """Polynomial-ring engine: D-ideal comparisons via Cartier roots.

    For a regular ring, D^(e)*a = D^(e)*b exactly when C^e*a = C^e*b, so the
    canonical label of D^(e)*a^n is the reduced basis of C^e*a^n.
    """

    producer = "regular"
    f_split_certified = True
    threshold_slack = 0

    def __init__(self, ideal: Ideal, producer: str = "regular"):
        self.ideal = ideal
        self.p = ideal.ring.p
        self.r = ideal.declared_r
        self.producer = producer
        self._labels: dict[tuple[int, int], object] = {}

    def d_label(self, n: int, e: int):
        key = (n, e)
        label = self._labels.get(key)
        if label is None:
            a = self.ideal
            # Materializing a^n pays off only while its generator count stays
            # linear in n (principal ideals, monomial ideals in <= 2
            # variables, small n); otherwise peel Frobenius levels.
            materialize = (
                n <= 64
                or len(a.generators) == 1
                or (a.is_monomial_ideal() and a.ring.nvars <= 2)
            )
            if materialize:
                root = frobenius.eth_root(a.power(n), e)
            else:
                root = frobenius.eth_root_power(a, n, e)
            label = root.canonical_label()
            self._labels[key] = label
        return label


class SemigroupJumpEngine(JumpEngine):
    producer = "semigroup"

    def __init__(self, presentation: SemigroupRingPresentation, ideal: SemigroupIdeal):
        self.presentation = presentation
        self.S = presentation.semigroup
        self.ideal = ideal
        self.p = presentation.p
        self.r = ideal.declared_r
        # F-split would force all Bernstein-Sato roots into [-r, 0]; the only
        # semigroup ring certified here is the polynomial ring S = <1>.
        self.f_split_certified = self.S.conductor == 0
        self.threshold_slack = 0 if self.f_split_certified else max(1, self.S.conductor)
        self._powers: dict[int, frozenset] = {0: frozenset({0})}

    def _power_exponents(self, n: int) -> frozenset:
        cached = self._powers.get(n)
        if cached is not None:
            return cached
        start = max(k for k in self._powers if k <= n)
        current = self._powers[start]
        for k in range(start + 1, n + 1):
            exps = {a + b for a in current for b in self.ideal.exponents}
            current = minimal_semigroup_exponents(self.S, exps)
            self._powers[k] = current
        return current

    def d_label(self, n: int, e: int):
        power = SemigroupIdeal(self.S, self._power_exponents(n))
        return semigroup_diff_closure(self.S, power, e, self.p).exponents


class CrossXYEngine(JumpEngine):
    """K[x,y]/(xy) with a = (x): D^(e)*x^m is (x^(aq)) or (x^(aq+1))."""

    producer = "catalog"
    f_split_certified = True  # Stanley-Reisner rings are F-split
    threshold_slack = 0
    r = 1

    def __init__(self, p: int):
        self.p = p

    def d_label(self, n: int, e: int):
        q = self.p**e
        a, j = divmod(n, q)
        return a * q if j == 0 else a * q + 1


class CuspCatalogEngine(JumpEngine):
    """Closed-form jump sets of x^2 in K[x^2,x^3]; periodic with period p^e."""

    producer = "catalog"
    f_split_certified = False
    threshold_slack = 2  # conductor of <2,3>
    r = 1

    def __init__(self, p: int):
        self.p = p

    def _window_jumps(self, q: int) -> tuple[int, ...]:
        if self.p == 2:
            return (q // 2 - 1, q - 1)
        return ((q + 1) // 2, q - 1)

    def is_jump(self, n: int, e: int) -> bool:
        if n < 0:
            return False
        q = self.p**e
        return n % q in self._window_jumps(q)

    def d_label(self, n: int, e: int):
        # Piecewise-constant between jumps; count the jumps strictly below n.
        q = self.p**e
        a, j = divmod(n, q)
        return a * len(self._window_jumps(q)) + sum(1 for w in self._window_jumps(q) if w < j)

    def jump_set(self, e: int, window: int | None = None) -> tuple[int, ...]:
        q = self.p**e
        hi = self.r * q if window is None else window
        return tuple(n for n in range(hi) if n % q in self._window_jumps(q))


class ArtinianEngine(JumpEngine):
    """K[x]/(x^(n+1)) with a = (x): exact D^(e)-labels at every level.

    D^(e) = End over the subring of p^e-th powers; each residue class mod p^e
    is a cyclic module, and a degree shift between classes exists iff the
    annihilator condition k + (N_k - N_j + u) q > n is avoided.  For p^e > n
    this yields the jump set {n}.
    """

    producer = "catalog"
    f_split_certified = False
    r = 1

    def __init__(self, p: int, n: int):
        self.p = p
        self.n = n
        self.threshold_slack = n

    def default_root_interval(self) -> tuple[Fraction, Fraction]:
        # The sole root is the integer n itself (jump sets stabilize to {n}).
        return (Fraction(0), Fraction(self.n))

    def d_label(self, m: int, e: int):
        n, q = self.n, self.p**e
        if m > n:
            return "zero"
        j, u = m % q, m // q
        nj = (n - j) // q
        best = None
        for k in range(min(q, n + 1)):
            nk = (n - k) // q
            exponent = k + (max(0, nk - nj) + u) * q
            if exponent <= n and (best is None or exponent < best):
                best = exponent
        return best if best is not None else "zero"


def jump_engine(presentation: Presentation, ideal) -> JumpEngine:
    """Dispatch a presentation/ideal pair to its jump engine."""
    if isinstance(presentation, PolynomialRingPresentation):
        if not isinstance(ideal, Ideal):
            raise TypeError("polynomial presentations need an Ideal")
        return RegularJumpEngine(ideal)
    if isinstance(presentation, MonomialSubalgebraPresentation):
        lifted = lift_ideal(presentation, ideal)
        return RegularJumpEngine(lifted, producer="summand")
    if isinstance(presentation, SemigroupRingPresentation):
        if not isinstance(ideal, SemigroupIdeal):
            raise TypeError("semigroup presentations need a SemigroupIdeal")
        return SemigroupJumpEngine(presentation, ideal)
    if isinstance(presentation, CatalogPresentation):
        if presentation.kind == "cross_xy":
            return CrossXYEngine(presentation.p)
        if presentation.kind == "cusp_semigroup":
            return CuspCatalogEngine(presentation.p)
        return ArtinianEngine(presentation.p, presentation.n)
    raise TypeError(f"unsupported presentation {presentation!r}")


def catalog_jump_set(presentation: CatalogPresentation, e: int) -> tuple[int, ...]:
    """The closed-form level-e jump set of a catalog ring, within [0, r*p^e)."""
    return jump_engine(presentation, None).jump_set(e)
