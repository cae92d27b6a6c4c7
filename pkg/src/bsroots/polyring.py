"""Sparse multivariate polynomials over F_p, ideals and Groebner bases.

The term order is fixed globally to degrevlex with the variable order taken
from the ring declaration, so every ideal has one reduced Groebner basis and
every printed object is byte-stable.  Monomial ideals short-circuit Buchberger:
their reduced basis is the minimal monomial generating set.

A degree-bounded linear-algebra membership routine (`linear_membership`) is
kept alongside the Groebner route as an independent cross-check.
"""

from __future__ import annotations

from itertools import product as cartesian_product

from .padic import check_prime

Monomial = tuple  # exponent vector, one entry per ring variable
Term = tuple  # (Monomial, coefficient)


class ParseError(ValueError):
    """Raised for malformed polynomial / ideal / ring text."""


class PolyRing:
    """F_p[x_1, ..., x_n] with the degrevlex order on the declared variables."""

    __slots__ = ("p", "variables", "nvars")

    def __init__(self, p: int, variables: tuple[str, ...] | list[str]):
        self.p = check_prime(p)
        variables = tuple(variables)
        if not variables:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        for name in variables:
            if not name.isidentifier():
                raise ValueError(f"bad variable name {name!r}")
        self.variables = variables
        self.nvars = len(variables)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolyRing)
            and self.p == other.p
            and self.variables == other.variables
        )

    def __hash__(self) -> int:
        return hash((self.p, self.variables))

    def __repr__(self) -> str:
        return f"PolyRing(p={self.p}, vars={','.join(self.variables)})"

    def monomial_key(self, m: Monomial):
        # degrevlex: higher total degree wins; ties broken so that the last
        # nonzero entry of the difference is negative for the larger monomial.
        return (sum(m), tuple(-e for e in reversed(m)))

    def polynomial(self, terms: dict[Monomial, int]) -> "Polynomial":
        reduced = {}
        for mono, coeff in terms.items():
            c = coeff % self.p
            if c:
                reduced[tuple(mono)] = c
        ordered = tuple(
            sorted(reduced.items(), key=lambda t: self.monomial_key(t[0]), reverse=True)
        )
        return Polynomial(self, ordered)

    def zero(self) -> "Polynomial":
        return self.polynomial({})

    def one(self) -> "Polynomial":
        return self.polynomial({(0,) * self.nvars: 1})

    def variable(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        expo = [0] * self.nvars
        expo[i] = 1
        return self.polynomial({tuple(expo): 1})

    def monomial(self, exponents) -> "Polynomial":
        return self.polynomial({tuple(exponents): 1})

    def gens(self) -> list["Polynomial"]:
        return [self.variable(v) for v in self.variables]

    # -- text grammar: identifiers, ^, optional *, +/-, integer coefficients --

    def parse(self, text: str) -> "Polynomial":
        """Parse e.g. "x^2*y*z + 3*x - 2" into a canonical polynomial."""
        tokens = _tokenize(text)
        if not tokens:
            raise ParseError("empty polynomial")
        terms: dict[Monomial, int] = {}
        pos = 0
        sign = 1
        while pos < len(tokens):
            sign = 1
            while pos < len(tokens) and tokens[pos] in ("+", "-"):
                if tokens[pos] == "-":
                    sign = -sign
                pos += 1
            coeff, expo, pos = self._parse_term(tokens, pos)
            mono = tuple(expo)
            terms[mono] = terms.get(mono, 0) + sign * coeff
        return self.polynomial(terms)

    def _parse_term(self, tokens, pos):
        coeff = 1
        expo = [0] * self.nvars
        saw_factor = False
        while pos < len(tokens):
            tok = tokens[pos]
            if tok in ("+", "-"):
                break
            if tok == "*":
                pos += 1
                continue
            if tok.isdigit():
                coeff *= int(tok)
                pos += 1
            elif tok.isidentifier():
                if tok not in self.variables:
                    raise ParseError(f"unknown variable {tok!r}")
                power = 1
                pos += 1
                if pos + 1 < len(tokens) and tokens[pos] == "^":
                    if not tokens[pos + 1].isdigit():
                        raise ParseError(f"bad exponent after {tok}^")
                    power = int(tokens[pos + 1])
                    pos += 2
                expo[self.variables.index(tok)] += power
            else:
                raise ParseError(f"unexpected token {tok!r}")
            saw_factor = True
        if not saw_factor:
            raise ParseError("empty term")
        return coeff, expo, pos

    def parse_ideal(self, text: str, declared_r: int | None = None) -> "Ideal":
        gens = [self.parse(part) for part in text.split(",") if part.strip()]
        if not gens:
            raise ParseError("empty ideal text")
        return Ideal(self, gens, declared_r=declared_r)


def _tokenize(text: str) -> list[str]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
        elif ch in "+-*^":
            tokens.append(ch)
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(text[i:j])
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}")
    return tokens


class Polynomial:
    """Immutable sparse polynomial; terms stored in descending degrevlex order."""

    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: PolyRing, ordered_terms: tuple[Term, ...]):
        self.ring = ring
        self.terms = ordered_terms
        self._hash = None

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return (
            len(self.terms) == 1
            and self.terms[0][1] == 1
            and not any(self.terms[0][0])
        )

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def total_degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m, _ in self.terms)

    def leading_monomial(self) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return self.terms[0][0]

    def leading_coefficient(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.terms[0][1]

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        inv = pow(self.terms[0][1], -1, self.ring.p)
        if inv == 1:
            return self
        return self.scale(inv)

    def scale(self, c: int) -> "Polynomial":
        c %= self.ring.p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        p = self.ring.p
        return Polynomial(self.ring, tuple((m, (k * c) % p) for m, k in self.terms))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) + c
        return self.ring.polynomial(acc)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        acc = dict(self.terms)
        for m, c in other.terms:
            acc[m] = acc.get(m, 0) - c
        return self.ring.polynomial(acc)

    def __neg__(self) -> "Polynomial":
        return self.scale(self.ring.p - 1)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        p = self.ring.p
        acc: dict[Monomial, int] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                m = tuple(a + b for a, b in zip(m1, m2))
                acc[m] = (acc.get(m, 0) + c1 * c2) % p
        return self.ring.polynomial(acc)

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def term_multiple(self, mono: Monomial, coeff: int) -> "Polynomial":
        p = self.ring.p
        coeff %= p
        return Polynomial(
            self.ring,
            tuple(
                (tuple(a + b for a, b in zip(m, mono)), (c * coeff) % p)
                for m, c in self.terms
            ),
        )

    def frobenius(self, e: int) -> "Polynomial":
        """The p^e-th power, computed term-by-term (c^(p^e) = c over F_p)."""
        q = self.ring.p**e
        return Polynomial(
            self.ring, tuple((tuple(a * q for a in m), c) for m, c in self.terms)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, self.terms))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in self.terms:
            factors = []
            if coeff != 1 or not any(mono):
                factors.append(str(coeff))
            for name, e in zip(self.ring.variables, mono):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _divides(m1: Monomial, m2: Monomial) -> bool:
    return all(a <= b for a, b in zip(m1, m2))


def _mono_lcm(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(max(a, b) for a, b in zip(m1, m2))


def _mono_quot(m1: Monomial, m2: Monomial) -> Monomial:
    return tuple(a - b for a, b in zip(m1, m2))


def minimal_monomials(monos) -> list[Monomial]:
    """Minimal elements under divisibility (the minimal monomial generators).

    A divisor of strictly smaller degree is the only way to dominate (equal
    degree forces equality), so candidates are only checked against the
    already-kept monomials of lower degree.
    """
    by_degree = sorted(set(monos), key=sum)
    kept: list[Monomial] = []
    smaller_end = 0
    current_degree = None
    for m in by_degree:
        d = sum(m)
        if d != current_degree:
            smaller_end = len(kept)
            current_degree = d
        if not any(_divides(k, m) for k in kept[:smaller_end]):
            kept.append(m)
    return kept


class Ideal:
    """An ideal with a cached reduced Groebner basis and a declared generator count.

    The declared count `r` is the length of the generating list as given (it
    feeds the jump-set window [0, r*p^e) downstream); it is deliberately not
    minimized.
    """

    __slots__ = ("ring", "generators", "declared_r", "_gb", "_power_cache")

    def __init__(self, ring: PolyRing, generators, declared_r: int | None = None):
        self.ring = ring
        gens = tuple(g for g in generators if not g.is_zero())
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
        self.generators = gens
        self.declared_r = declared_r if declared_r is not None else max(1, len(tuple(generators)))
        self._gb = None
        self._power_cache: dict[int, Ideal] = {}

    # -- basic structure ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return any(g.is_constant() and not g.is_zero() for g in self.generators) or (
            bool(self.generators) and any(b.is_constant() for b in self.groebner())
        )

    def is_monomial_ideal(self) -> bool:
        return all(g.is_monomial() for g in self.generators)

    # -- Groebner machinery ---------------------------------------------------

    def groebner(self) -> tuple[Polynomial, ...]:
        """The reduced Groebner basis, cached; unique for the fixed order."""
        if self._gb is None:
            if not self.generators:
                self._gb = ()
            elif self.is_monomial_ideal():
                monos = minimal_monomials(g.leading_monomial() for g in self.generators)
                monos.sort(key=self.ring.monomial_key, reverse=True)
                self._gb = tuple(self.ring.monomial(m) for m in monos)
            else:
                self._gb = _buchberger(self.ring, self.generators)
        return self._gb

    def normal_form(self, f: Polynomial) -> Polynomial:
        return _reduce_full(f, self.groebner())

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if self.is_zero():
            return False
        basis = self.groebner()
        if all(b.is_monomial() for b in basis) and f.is_monomial():
            lead = f.leading_monomial()
            return any(_divides(b.leading_monomial(), lead) for b in basis)
        return self.normal_form(f).is_zero()

    def contains_ideal(self, other: "Ideal") -> bool:
        return all(self.contains(g) for g in other.generators)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Ideal) or self.ring != other.ring:
            return NotImplemented
        return self.groebner() == other.groebner()

    def __hash__(self) -> int:
        return hash((self.ring, self.groebner()))

    def canonical_label(self):
        """Hashable canonical form (the reduced basis as term tuples)."""
        return tuple(b.terms for b in self.groebner())

    # -- constructions ------------------------------------------------------

    def product(self, other: "Ideal") -> "Ideal":
        if self.is_zero() or other.is_zero():
            return Ideal(self.ring, (), declared_r=1)
        if self.is_one_ideal_fast():
            return other
        if other.is_one_ideal_fast():
            return self
        gens = [g * h for g in self.generators for h in other.generators]
        return Ideal(self.ring, _interreduce_generators(self.ring, gens))

    def is_one_ideal_fast(self) -> bool:
        return len(self.generators) == 1 and self.generators[0].is_one()

    def power(self, n: int, e_hint: int = 1) -> "Ideal":
        """Generators of the n-th power (a^0 = (1) by convention).

        Monomial ideals enumerate exponent combinations directly; principal
        ideals use fast polynomial powering; otherwise an incremental chain
        from the largest cached power, with factorization through Frobenius
        powers when n is deep enough past the pigeonhole bound.
        """
        if n < 0:
            raise ValueError("ideal power must be >= 0")
        if n == 0:
            return Ideal(self.ring, (self.ring.one(),), declared_r=1)
        if n == 1:
            return self
        if self.is_zero():
            return self
        cached = self._power_cache.get(n)
        if cached is not None:
            return cached
        if len(self.generators) == 1:
            result = Ideal(self.ring, (self.generators[0] ** n,), declared_r=1)
        elif self.is_monomial_ideal():
            prev = self._power_cache.get(n - 1)
            # Sweeps walk n upward; one product step beats re-enumeration.
            if prev is not None:
                result = prev.product(self)
            else:
                result = self._monomial_power(n)
        else:
            result = self._chain_power(n, e_hint)
        self._power_cache[n] = result
        return result

    def _monomial_power(self, n: int) -> "Ideal":
        vectors = [g.leading_monomial() for g in self.generators]
        sums: set[Monomial] = set()

        def rec(idx, remaining, acc):
            if idx == len(vectors) - 1:
                v = vectors[idx]
                sums.add(tuple(a + remaining * b for a, b in zip(acc, v)))
                return
            v = vectors[idx]
            for c in range(remaining + 1):
                rec(idx + 1, remaining - c, tuple(a + c * b for a, b in zip(acc, v)))

        rec(0, n, (0,) * self.ring.nvars)
        if len({sum(v) for v in vectors}) == 1:
            # Equigenerated: all power generators share one degree, so the
            # distinct sums already form an antichain.
            monos = sorted(sums, key=self.ring.monomial_key, reverse=True)
        else:
            monos = minimal_monomials(sums)
        return Ideal(self.ring, [self.ring.monomial(m) for m in monos])

    def _chain_power(self, n: int, e_hint: int) -> "Ideal":
        r = len(self.generators)
        q = self.ring.p**e_hint
        # a^n = a^(n - m q) * (a^[q])^m once n >= m q + (r-1)(q-1)  (pigeonhole)
        m = (n - (r - 1) * (q - 1)) // q if n >= q + (r - 1) * (q - 1) else 0
        if m >= 2:
            rest = self.power(n - m * q, e_hint)
            frob = self.frobenius_power(e_hint).power(m)
            result = rest.product(frob)
            return result
        best = max((k for k in self._power_cache if k < n), default=1)
        current = self._power_cache.get(best, self)
        for _ in range(n - best):
            current = current.product(self)
        return current

    def frobenius_power(self, e: int) -> "Ideal":
        """The Frobenius power a^[p^e], generated by p^e-th powers of generators."""
        if e < 0:
            raise ValueError("Frobenius level must be >= 0")
        if e == 0:
            return self
        return Ideal(
            self.ring,
            [g.frobenius(e) for g in self.generators],
            declared_r=self.declared_r,
        )

    def radical_contains(self, f: Polynomial, power_bound: int = 24) -> bool:
        """Whether f lies in the radical, tested up to f^power_bound.

        Exact for monomial ideals (radical membership of a monomial is
        detected at exponent <= power_bound for the sizes used here); a
        documented bounded search otherwise.
        """
        if self.contains(f):
            return True
        acc = f
        for _ in range(power_bound):
            acc = acc * f
            if self.contains(acc):
                return True
        return False

    def __repr__(self) -> str:
        inside = ", ".join(str(g) for g in self.generators) or "0"
        return f"Ideal({inside})"


def _interreduce_generators(ring: PolyRing, gens) -> list[Polynomial]:
    """Drop generators whose normal form vanishes against the others."""
    gens = [g for g in gens if not g.is_zero()]
    if all(g.is_monomial() for g in gens):
        monos = minimal_monomials(g.leading_monomial() for g in gens)
        monos.sort(key=ring.monomial_key, reverse=True)
        return [ring.monomial(m) for m in monos]
    kept: list[Polynomial] = []
    for g in sorted(gens, key=lambda h: ring.monomial_key(h.leading_monomial())):
        if not _reduce_full(g, kept).is_zero():
            kept.append(g)
    return kept


# -- Buchberger ---------------------------------------------------------------


def _reduce_full(f: Polynomial, basis) -> Polynomial:
    """Full reduction (every term) of f against the basis."""
    if f.is_zero() or not basis:
        return f
    ring = f.ring
    p = ring.p
    remainder: dict[Monomial, int] = {}
    work = dict(f.terms)
    leads = [(b.leading_monomial(), b) for b in basis if not b.is_zero()]
    while work:
        mono = max(work, key=ring.monomial_key)
        coeff = work[mono] % p
        if coeff == 0:
            del work[mono]
            continue
        for lead, b in leads:
            if _divides(lead, mono):
                factor = (coeff * pow(b.leading_coefficient(), -1, p)) % p
                shift = _mono_quot(mono, lead)
                # The lead term of b cancels work[mono] exactly.
                for m2, c2 in b.terms:
                    m = tuple(a + s for a, s in zip(m2, shift))
                    val = (work.get(m, 0) - factor * c2) % p
                    if val:
                        work[m] = val
                    else:
                        work.pop(m, None)
                break
        else:
            remainder[mono] = coeff
            del work[mono]
    return ring.polynomial(remainder)


def _buchberger(ring: PolyRing, generators) -> tuple[Polynomial, ...]:
    """Buchberger with the coprimality and chain criteria, then inter-reduction."""
    basis = [g.monic() for g in generators if not g.is_zero()]
    if any(g.is_constant() for g in basis):
        return (ring.one(),)
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    while pairs:
        i, j = min(
            pairs,
            key=lambda ij: ring.monomial_key(
                _mono_lcm(
                    basis[ij[0]].leading_monomial(), basis[ij[1]].leading_monomial()
                )
            ),
        )
        pairs.discard((i, j))
        fi, fj = basis[i], basis[j]
        lm_i, lm_j = fi.leading_monomial(), fj.leading_monomial()
        lcm = _mono_lcm(lm_i, lm_j)
        # Buchberger's first criterion: coprime leading monomials.
        if all(a + b == c for a, b, c in zip(lm_i, lm_j, lcm)):
            continue
        # Chain criterion: some k with lm_k | lcm and both pairs already done.
        if any(
            k not in (i, j)
            and _divides(basis[k].leading_monomial(), lcm)
            and (max(i, k), min(i, k)) not in pairs
            and (max(j, k), min(j, k)) not in pairs
            for k in range(len(basis))
        ):
            continue
        s_poly = fi.term_multiple(_mono_quot(lcm, lm_i), 1) - fj.term_multiple(
            _mono_quot(lcm, lm_j), 1
        )
        remainder = _reduce_full(s_poly, basis)
        if remainder.is_zero():
            continue
        remainder = remainder.monic()
        if remainder.is_constant():
            return (ring.one(),)
        basis.append(remainder)
        new = len(basis) - 1
        pairs.update((new, k) for k in range(new))
    # Minimalize: drop members whose lead is divisible by another lead.
    leads = [g.leading_monomial() for g in basis]
    keep = []
    for idx, g in enumerate(basis):
        if not any(
            k != idx
            and _divides(leads[k], leads[idx])
            and (leads[k] != leads[idx] or k < idx)
            for k in range(len(basis))
        ):
            keep.append(g)
    # Tail-reduce each survivor against the others for the reduced basis.
    reduced = []
    for idx, g in enumerate(keep):
        others = keep[:idx] + keep[idx + 1 :]
        reduced.append(_reduce_full(g, others).monic())
    reduced.sort(key=lambda g: ring.monomial_key(g.leading_monomial()), reverse=True)
    return tuple(reduced)


# -- independent membership route ----------------------------------------------


def monomials_up_to_degree(nvars: int, degree: int) -> list[Monomial]:
    out = []
    for combo in cartesian_product(range(degree + 1), repeat=nvars):
        if sum(combo) <= degree:
            out.append(combo)
    return out


class RowSpan:
    """Row space of all monomial multiples of the generators up to a degree cap.

    Built once by incremental Gauss over F_p (rows as sparse {column: coeff});
    membership queries then reduce against the stored pivots.  No Groebner
    machinery is involved, which makes this the independent route for
    cross-checking `Ideal.contains`.  Complete for monomial ideals; a
    documented bounded check otherwise.
    """

    def __init__(self, ring: PolyRing, generators, cap: int):
        self.ring = ring
        self.cap = cap
        p = ring.p
        columns = sorted(
            monomials_up_to_degree(ring.nvars, cap), key=ring.monomial_key, reverse=True
        )
        self._col_index = {m: i for i, m in enumerate(columns)}
        self._pivots: dict[int, dict[int, int]] = {}
        for g in generators:
            if g.is_zero() or g.total_degree() > cap:
                continue
            for shift in monomials_up_to_degree(ring.nvars, cap - g.total_degree()):
                vec = {}
                for m, c in g.terms:
                    mono = tuple(a + b for a, b in zip(m, shift))
                    if mono in self._col_index:
                        vec[self._col_index[mono]] = c
                vec = self._eliminate(vec)
                if vec:
                    self._pivots[min(vec)] = vec

    def _eliminate(self, vec: dict[int, int]) -> dict[int, int]:
        p = self.ring.p
        while vec:
            lead = min(vec)
            row = self._pivots.get(lead)
            if row is None:
                return vec
            factor = (vec[lead] * pow(row[lead], -1, p)) % p
            for col, c in row.items():
                val = (vec.get(col, 0) - factor * c) % p
                if val:
                    vec[col] = val
                else:
                    vec.pop(col, None)
        return vec

    def contains(self, f: Polynomial) -> bool:
        if f.is_zero():
            return True
        if f.total_degree() > self.cap:
            raise ValueError("query degree exceeds the span cap")
        target = {self._col_index[m]: c for m, c in f.terms}
        return not self._eliminate(target)


def linear_membership(f: Polynomial, generators, degree_cap: int | None = None) -> bool:
    """Degree-bounded membership by row reduction, no Groebner bases involved."""
    if f.is_zero():
        return True
    generators = [g for g in generators if not g.is_zero()]
    if not generators:
        return False
    cap = max(f.total_degree(), degree_cap or 0)
    return RowSpan(f.ring, generators, cap).contains(f)
