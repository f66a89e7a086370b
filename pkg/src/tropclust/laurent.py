"""Exact multivariate Laurent polynomials over the integers.

A polynomial keeps a fixed tuple of variable names and a dict mapping
exponent vectors (tuples of ints, one per variable, negatives allowed) to
nonzero integer coefficients.  All arithmetic is exact; nothing here ever
touches floats.

Tropicalization drops coefficients: each exponent vector becomes a linear
form, and the function evaluates as the maximum of those forms.  That is
only meaningful for polynomials with positive coefficients, and
``tropicalize`` enforces it.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DimensionMismatch,
    InvariantViolation,
    NotDivisible,
    NotPositive,
)


def _grlex_key(exps: tuple[int, ...]) -> tuple:
    return (sum(exps), exps)


class LaurentPolynomial:
    """Integer Laurent polynomial in a fixed ordered set of variables."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple[int, ...], int]):
        vars_t = tuple(variables)
        if len(set(vars_t)) != len(vars_t):
            raise InvariantViolation(f"duplicate variable names in {vars_t}")
        clean: dict[tuple[int, ...], int] = {}
        for exps, coeff in terms.items():
            exps = tuple(exps)
            if len(exps) != len(vars_t):
                raise DimensionMismatch(
                    f"exponent vector {exps} does not match {len(vars_t)} variables"
                )
            if not all(isinstance(e, int) for e in exps):
                raise InvariantViolation(f"non-integer exponent in {exps}")
            if not isinstance(coeff, int):
                raise InvariantViolation(f"non-integer coefficient {coeff!r}")
            if coeff != 0:
                clean[exps] = clean.get(exps, 0) + coeff
                if clean[exps] == 0:
                    del clean[exps]
        object.__setattr__(self, "vars", vars_t)
        object.__setattr__(self, "terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPolynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "LaurentPolynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], c: int) -> "LaurentPolynomial":
        return cls(variables, {(0,) * len(tuple(variables)): c})

    @classmethod
    def one(cls, variables: Sequence[str]) -> "LaurentPolynomial":
        return cls.constant(variables, 1)

    @classmethod
    def monomial(
        cls, variables: Sequence[str], exps: Sequence[int], coeff: int = 1
    ) -> "LaurentPolynomial":
        return cls(variables, {tuple(exps): coeff})

    @classmethod
    def variable(cls, variables: Sequence[str], name: str, power: int = 1) -> "LaurentPolynomial":
        vars_t = tuple(variables)
        if name not in vars_t:
            raise DimensionMismatch(f"{name} not among variables {vars_t}")
        exps = [0] * len(vars_t)
        exps[vars_t.index(name)] = power
        return cls.monomial(vars_t, exps)

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_positive(self) -> bool:
        """All coefficients strictly positive (vacuously true for zero)."""
        return all(c > 0 for c in self.terms.values())

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def terms_sorted(self) -> list[tuple[tuple[int, ...], int]]:
        return sorted(self.terms.items(), key=lambda t: _grlex_key(t[0]), reverse=True)

    # -- ring operations ---------------------------------------------------

    def _check_vars(self, other: "LaurentPolynomial") -> None:
        if self.vars != other.vars:
            raise DimensionMismatch(f"variable mismatch: {self.vars} vs {other.vars}")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.vars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_vars(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial(self.vars, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial.constant(self.vars, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPolynomial(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        self._check_vars(other)
        out: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial(self.vars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"exponent must be a nonnegative integer, got {k!r}")
        result = LaurentPolynomial.one(self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            h = hash((self.vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return self._hash

    # -- division ----------------------------------------------------------

    def exact_div(self, divisor: "LaurentPolynomial") -> "LaurentPolynomial":
        """Return Q with self == Q * divisor, or raise NotDivisible.

        Shift both operands into the polynomial range, run single-divisor
        division in graded-lex order (a well-order on nonnegative exponent
        vectors, so the loop terminates), and shift back.
        """
        self._check_vars(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if self.is_zero():
            return LaurentPolynomial.zero(self.vars)

        def min_exps(p: LaurentPolynomial) -> tuple[int, ...]:
            its = list(p.terms)
            return tuple(min(e[i] for e in its) for i in range(len(p.vars)))

        s_f = min_exps(self)
        s_g = min_exps(divisor)
        f_terms = {tuple(a - b for a, b in zip(e, s_f)): c for e, c in self.terms.items()}
        g_terms = {tuple(a - b for a, b in zip(e, s_g)): c for e, c in divisor.terms.items()}

        g_lead = max(g_terms, key=_grlex_key)
        g_lead_coeff = g_terms[g_lead]
        quot: dict[tuple[int, ...], int] = {}
        rem = dict(f_terms)
        while rem:
            e = max(rem, key=_grlex_key)
            c = rem[e]
            d = tuple(a - b for a, b in zip(e, g_lead))
            if any(x < 0 for x in d):
                raise NotDivisible("leading term not divisible")
            q, r = divmod(c, g_lead_coeff)
            if r != 0:
                raise NotDivisible("coefficient not divisible over the integers")
            quot[d] = quot.get(d, 0) + q
            for ge, gc in g_terms.items():
                key = tuple(a + b for a, b in zip(d, ge))
                rem[key] = rem.get(key, 0) - q * gc
                if rem[key] == 0:
                    del rem[key]
        shift = tuple(a - b for a, b in zip(s_f, s_g))
        out = {tuple(a + b for a, b in zip(e, shift)): c for e, c in quot.items()}
        return LaurentPolynomial(self.vars, out)

    # -- tropical side -----------------------------------------------------

    def tropicalize(self) -> "TropicalFunction":
        """Drop coefficients, one linear form per exponent vector."""
        if self.is_zero():
            raise NotPositive("the zero polynomial has no tropicalization")
        if not self.is_positive():
            raise NotPositive("tropicalization needs positive coefficients")
        return TropicalFunction(len(self.vars), frozenset(self.terms))

    # -- formatting --------------------------------------------------------

    def __str__(self):
        if self.is_zero():
            return "0"
        chunks = []
        for exps, coeff in self.terms_sorted():
            factors = [
                f"{v}^{e}" if e != 1 else v
                for v, e in zip(self.vars, exps)
                if e != 0
            ]
            body = "*".join(factors)
            if not body:
                chunk = str(abs(coeff))
            elif abs(coeff) == 1:
                chunk = body
            else:
                chunk = f"{abs(coeff)}*{body}"
            chunks.append(("- " if coeff < 0 else "+ ") + chunk)
        text = " ".join(chunks)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]

    def __repr__(self):
        return f"LaurentPolynomial({self.vars!r}, {self.terms!r})"

    # -- JSON --------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "vars": list(self.vars),
            "terms": [[list(e), c] for e, c in self.terms_sorted()],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "LaurentPolynomial":
        return cls(tuple(doc["vars"]), {tuple(e): c for e, c in doc["terms"]})


@dataclass(frozen=True)
class TropicalFunction:
    """Max of finitely many integer linear forms on n variables."""

    nvars: int
    forms: frozenset[tuple[int, ...]] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.forms:
            raise InvariantViolation("a tropical function needs at least one form")
        for f in self.forms:
            if len(f) != self.nvars:
                raise DimensionMismatch(f"form {f} does not have {self.nvars} entries")

    def eval(self, point: Sequence[int | Fraction]):
        pt = tuple(point)
        if len(pt) != self.nvars:
            raise DimensionMismatch(f"point has {len(pt)} coordinates, need {self.nvars}")
        return max(sum(a * x for a, x in zip(form, pt)) for form in self.forms)

    def sorted_forms(self) -> list[tuple[int, ...]]:
        return sorted(self.forms)


def tropicalize(poly: LaurentPolynomial) -> TropicalFunction:
    return poly.tropicalize()


def eval_tropical(fn: TropicalFunction, point: Sequence[int | Fraction]):
    return fn.eval(point)


def exact_div(f: LaurentPolynomial, g: LaurentPolynomial) -> LaurentPolynomial:
    return f.exact_div(g)


def is_positive(f: LaurentPolynomial) -> bool:
    return f.is_positive()


def product(polys: Iterable[LaurentPolynomial], variables: Sequence[str]) -> LaurentPolynomial:
    out = LaurentPolynomial.one(variables)
    for p in polys:
        out = out * p
    return out


class RationalFunction:
    """Quotient of two Laurent polynomials, kept unreduced.

    Laurent polynomials over the integers form a domain, so equality can be
    decided by cross-multiplication and no gcd machinery is needed.  Used for
    the subtraction-free substitution maps between charts, whose values are
    rational but not Laurent.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPolynomial, den: LaurentPolynomial):
        if num.vars != den.vars:
            raise DimensionMismatch(f"variable mismatch: {num.vars} vs {den.vars}")
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def from_poly(cls, p: LaurentPolynomial) -> "RationalFunction":
        return cls(p, LaurentPolynomial.one(p.vars))

    @classmethod
    def variable(cls, variables: Sequence[str], name: str, power: int = 1) -> "RationalFunction":
        return cls.from_poly(LaurentPolynomial.variable(variables, name, power))

    @property
    def vars(self) -> tuple[str, ...]:
        return self.num.vars

    def __add__(self, other):
        if isinstance(other, int):
            other = RationalFunction.from_poly(LaurentPolynomial.constant(self.vars, other))
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(
            self.num * other.den + other.num * self.den, self.den * other.den
        )

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, int):
            return RationalFunction(self.num * other, self.den)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise ValueError(f"exponent must be an integer, got {k!r}")
        base = self
        if k < 0:
            if base.num.is_zero():
                raise ZeroDivisionError("negative power of zero")
            base, k = RationalFunction(base.den, base.num), -k
        out = RationalFunction.from_poly(LaurentPolynomial.one(self.vars))
        for _ in range(k):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction.from_poly(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num * other.den == other.num * self.den

    __hash__ = None

    def as_laurent(self) -> LaurentPolynomial:
        """Carry out the division; NotDivisible if the value is not Laurent."""
        return self.num.exact_div(self.den)

    def __repr__(self):
        return f"RationalFunction({self.num!r}, {self.den!r})"

    def __str__(self):
        return f"({self.num}) / ({self.den})"


def evaluate_at(
    poly: LaurentPolynomial, assignment: Sequence[RationalFunction]
) -> RationalFunction:
    """Plug rational values into a Laurent polynomial, one per variable."""
    values = list(assignment)
    if len(values) != len(poly.vars):
        raise DimensionMismatch(
            f"{len(values)} values for {len(poly.vars)} variables"
        )
    target_vars = values[0].vars if values else ()
    out = RationalFunction.from_poly(LaurentPolynomial.zero(target_vars))
    for exps, coeff in poly.terms_sorted():
        term = RationalFunction.from_poly(
            LaurentPolynomial.constant(target_vars, coeff)
        )
        for val, e in zip(values, exps):
            if e != 0:
                term = term * val**e
        out = out + term
    return out
