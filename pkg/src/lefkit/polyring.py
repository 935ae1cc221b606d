"""Sparse multivariate polynomials over exact rationals.

A polynomial in the dual variables doubles as a constant-coefficient
differential operator through :func:`contract`: variable i of the operator
acts as weights[i] * d/dx_i, with true derivatives (so contracting x^2
against x^2 gives 2, not 1).  Monomials are exponent tuples ordered
graded-lex throughout, which keeps every matrix and report deterministic.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import comb, perm
from typing import Iterator, Sequence

from .errors import VarMismatchError

Monomial = tuple[int, ...]


def _as_coeff(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"coefficient must be an exact rational, got {x!r}")


class Poly:
    """Immutable sparse polynomial: exponent tuple -> nonzero Fraction."""

    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: dict | None = None):
        self.nvars = nvars
        cleaned: dict[Monomial, Fraction] = {}
        for expo, coeff in (terms or {}).items():
            expo = tuple(int(e) for e in expo)
            if len(expo) != nvars or any(e < 0 for e in expo):
                raise ValueError(f"bad exponent tuple {expo} for {nvars} variables")
            coeff = _as_coeff(coeff)
            if coeff:
                cleaned[expo] = cleaned.get(expo, Fraction(0)) + coeff
                if not cleaned[expo]:
                    del cleaned[expo]
        self._terms = cleaned

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Poly":
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value) -> "Poly":
        return cls(nvars, {tuple([0] * nvars): _as_coeff(value)})

    @classmethod
    def one(cls, nvars: int) -> "Poly":
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars: int, index: int) -> "Poly":
        if not 0 <= index < nvars:
            raise ValueError(f"variable index {index} out of range")
        expo = [0] * nvars
        expo[index] = 1
        return cls(nvars, {tuple(expo): Fraction(1)})

    @classmethod
    def monomial(cls, nvars: int, expo: Sequence[int], coeff=1) -> "Poly":
        return cls(nvars, {tuple(expo): _as_coeff(coeff)})

    # -- queries -------------------------------------------------------

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def term_count(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, expo: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(expo), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get(tuple([0] * self.nvars), Fraction(0))

    def degree(self) -> int | None:
        """Maximum total degree, or None for the zero polynomial."""
        if not self._terms:
            return None
        return max(sum(e) for e in self._terms)

    def homogeneous_degree(self) -> int | None:
        """The common total degree, or None if zero or inhomogeneous."""
        degrees = {sum(e) for e in self._terms}
        if len(degrees) == 1:
            return degrees.pop()
        return None

    def is_homogeneous_of(self, d: int) -> bool:
        return bool(self._terms) and self.homogeneous_degree() == d

    def evaluate(self, point: Sequence) -> Fraction:
        if len(point) != self.nvars:
            raise VarMismatchError("evaluation point has wrong length")
        values = [_as_coeff(p) for p in point]
        total = Fraction(0)
        for expo, coeff in self._terms.items():
            term = coeff
            for x, e in zip(values, expo):
                if e:
                    term *= x**e
            total += term
        return total

    def linear_coefficients(self) -> tuple[Fraction, ...]:
        """Coefficient vector of a homogeneous linear form."""
        out = [Fraction(0)] * self.nvars
        for expo, coeff in self._terms.items():
            if sum(expo) != 1:
                raise ValueError("not a linear form")
            out[expo.index(1)] = coeff
        return tuple(out)

    # -- arithmetic ----------------------------------------------------

    def _check_compatible(self, other: "Poly") -> None:
        if self.nvars != other.nvars:
            raise VarMismatchError(
                f"polynomials in {self.nvars} and {other.nvars} variables"
            )

    def __add__(self, other: "Poly") -> "Poly":
        self._check_compatible(other)
        terms = dict(self._terms)
        for expo, coeff in other._terms.items():
            s = terms.get(expo, Fraction(0)) + coeff
            if s:
                terms[expo] = s
            else:
                terms.pop(expo, None)
        return Poly(self.nvars, terms)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return poly_mul(self, other)

    __rmul__ = __mul__

    def scale(self, scalar) -> "Poly":
        scalar = _as_coeff(scalar)
        if not scalar:
            return Poly.zero(self.nvars)
        return Poly(self.nvars, {e: c * scalar for e, c in self._terms.items()})

    def __pow__(self, s: int) -> "Poly":
        return poly_pow(self, s)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in descending graded-lex order (leading term first)."""
        return sorted(
            self._terms.items(), key=lambda t: (sum(t[0]), t[0]), reverse=True
        )

    def __repr__(self) -> str:
        names = [f"x{i + 1}" for i in range(self.nvars)]
        return f"Poly({format_poly(self, names)})"


# ---------------------------------------------------------------------------
# spec operations


def poly_mul(a: Poly, b: Poly) -> Poly:
    """Exact product; degrees add for homogeneous inputs."""
    a._check_compatible(b)
    terms: dict[Monomial, Fraction] = {}
    for ea, ca in a._terms.items():
        for eb, cb in b._terms.items():
            expo = tuple(x + y for x, y in zip(ea, eb))
            s = terms.get(expo, Fraction(0)) + ca * cb
            if s:
                terms[expo] = s
            else:
                terms.pop(expo, None)
    return Poly(a.nvars, terms)


def poly_pow(a: Poly, s: int) -> Poly:
    """a**s by repeated squaring; a**0 is the constant 1."""
    if not isinstance(s, int) or s < 0:
        raise ValueError("exponent must be a non-negative integer")
    result = Poly.one(a.nvars)
    base = a
    while s:
        if s & 1:
            result = poly_mul(result, base)
        base_needed = s > 1
        s >>= 1
        if base_needed and s:
            base = poly_mul(base, base)
    return result


def contract(p: Poly, f: Poly, weights: Sequence | None = None) -> Poly:
    """Apply p as the differential operator p(w*d/dx) to f.

    Bilinear in both arguments; inhomogeneous inputs are handled term by
    term.  For homogeneous p, f the result is zero or homogeneous of degree
    deg f - deg p (and zero whenever deg p > deg f).
    """
    p._check_compatible(f)
    if weights is None:
        wts = None
    else:
        if len(weights) != p.nvars:
            raise VarMismatchError("weights length must match variable count")
        wts = [_as_coeff(w) for w in weights]
        if any(w <= 0 for w in wts):
            raise ValueError("contraction weights must be positive")
    terms: dict[Monomial, Fraction] = {}
    for ep, cp in p._terms.items():
        factor = cp
        if wts is not None:
            for w, e in zip(wts, ep):
                if e:
                    factor *= w**e
        for ef, cf in f._terms.items():
            coeff = factor * cf
            target = []
            for df, dp in zip(ef, ep):
                if dp:
                    if df < dp:
                        coeff = Fraction(0)
                        break
                    coeff *= perm(df, dp)  # falling factorial from d^k/dx^k
                target.append(df - dp)
            if not coeff:
                continue
            expo = tuple(target)
            s = terms.get(expo, Fraction(0)) + coeff
            if s:
                terms[expo] = s
            else:
                terms.pop(expo, None)
    return Poly(p.nvars, terms)


def _exponents(nvars: int, d: int) -> Iterator[Monomial]:
    # Descending lex directly: the leading variable takes d down to 0.
    if nvars == 1:
        yield (d,)
        return
    for e in range(d, -1, -1):
        for rest in _exponents(nvars - 1, d - e):
            yield (e,) + rest


def monomials_of_degree(nvars: int, d: int) -> list[Monomial]:
    """All C(nvars+d-1, d) exponent tuples of total degree d, graded-lex."""
    if nvars < 1 or d < 0:
        raise ValueError("need nvars >= 1 and d >= 0")
    out = list(_exponents(nvars, d))
    assert len(out) == comb(nvars + d - 1, d)
    return out


def dim_of_degree(nvars: int, d: int) -> int:
    """Dimension of the degree-d graded piece of the polynomial ring."""
    return comb(nvars + d - 1, d)


# ---------------------------------------------------------------------------
# text format: terms as "coeff * name^e name^e" joined by +/-


def format_poly(p: Poly, names: Sequence[str]) -> str:
    if len(names) != p.nvars:
        raise VarMismatchError("names length must match variable count")
    if p.is_zero():
        return "0"
    pieces: list[str] = []
    for expo, coeff in p.sorted_terms():
        factors = " ".join(
            names[i] if e == 1 else f"{names[i]}^{e}"
            for i, e in enumerate(expo)
            if e
        )
        magnitude = str(abs(coeff))
        body = f"{magnitude} * {factors}" if factors else magnitude
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"{'+' if coeff > 0 else '-'} {body}")
    return " ".join(pieces)


_NUMBER_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_poly(text: str, names: Sequence[str]) -> Poly:
    """Inverse of :func:`format_poly`; accepts integer and p/q coefficients,
    `*` or whitespace between factors, and an optional leading sign."""
    index = {name: i for i, name in enumerate(names)}
    nvars = len(names)
    stripped = text.strip()
    if stripped in ("", "0"):
        return Poly.zero(nvars)
    normalized = stripped.replace("-", "+-")
    result = Poly.zero(nvars)
    for chunk in normalized.split("+"):
        chunk = chunk.strip()
        if not chunk:
            continue
        negative = chunk.startswith("-")
        if negative:
            chunk = chunk[1:].strip()
        if not chunk:
            raise ValueError(f"dangling sign in polynomial text: {text!r}")
        coeff = Fraction(1)
        expo = [0] * nvars
        for factor in chunk.replace("*", " ").split():
            if _NUMBER_RE.match(factor):
                coeff *= Fraction(factor)
                continue
            name, _, power = factor.partition("^")
            if name not in index:
                raise ValueError(f"unknown variable {name!r}")
            expo[index[name]] += int(power) if power else 1
        if negative:
            coeff = -coeff
        result = result + Poly.monomial(nvars, expo, coeff)
    return result
