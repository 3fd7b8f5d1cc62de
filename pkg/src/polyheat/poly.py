"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial in ``n_vars`` variables is a map from exponent tuples to
``Fraction`` coefficients.  Zero coefficients are never stored, so equality
of polynomials is equality of the term maps.  All operations are pure and
the values are immutable after construction; they can be shared freely
between threads.

``TimePolynomial`` reserves variable slot 0 for a distinguished time
variable ``t``; slots ``1..n`` are spatial.  Substituting ``t = 0``
recovers an ordinary spatial polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence, Union

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]

# Degree of the zero polynomial.  A distinguished sentinel that compares
# below every honest degree.
NEG_INFINITY: float = float("-inf")


class StructureError(ValueError):
    """Structurally invalid input: mismatched variable counts or shapes."""


class DomainError(ValueError):
    """Input outside an operation's mathematical domain."""


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise StructureError(f"coefficient must be int or Fraction, got {type(value).__name__}")


def grlex_key(exponent: Exponent) -> tuple[int, Exponent]:
    """Graded lexicographic sort key: total degree first, then lex."""
    return (sum(exponent), exponent)


class Polynomial:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("n_vars", "_terms", "_hash")

    def __init__(self, n_vars: int, terms: Mapping[Exponent, Scalar] | Iterable[tuple[Exponent, Scalar]] = ()):
        if n_vars < 0:
            raise StructureError("variable count must be non-negative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, Fraction] = {}
        for exponent, coefficient in items:
            exponent = tuple(exponent)
            if len(exponent) != n_vars:
                raise StructureError(
                    f"exponent {exponent} has {len(exponent)} slots, expected {n_vars}")
            if any(e < 0 or not isinstance(e, int) for e in exponent):
                raise StructureError(f"exponent {exponent} must be non-negative integers")
            coefficient = _as_fraction(coefficient)
            if coefficient != 0:
                accumulated = clean.get(exponent, Fraction(0)) + coefficient
                if accumulated:
                    clean[exponent] = accumulated
                else:
                    clean.pop(exponent, None)
        object.__setattr__(self, "n_vars", n_vars)
        object.__setattr__(self, "_terms", clean)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n_vars: int) -> "Polynomial":
        return cls(n_vars, {})

    @classmethod
    def constant(cls, n_vars: int, value: Scalar) -> "Polynomial":
        return cls(n_vars, {(0,) * n_vars: _as_fraction(value)})

    @classmethod
    def variable(cls, n_vars: int, index: int) -> "Polynomial":
        if not 0 <= index < n_vars:
            raise StructureError(f"variable index {index} out of range for {n_vars} variables")
        exponent = [0] * n_vars
        exponent[index] = 1
        return cls(n_vars, {tuple(exponent): Fraction(1)})

    @classmethod
    def monomial(cls, exponent: Sequence[int], coefficient: Scalar = 1) -> "Polynomial":
        exponent = tuple(exponent)
        return cls(len(exponent), {exponent: _as_fraction(coefficient)})

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Mapping[Exponent, Fraction]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int | float:
        """Max total degree; NEG_INFINITY for the zero polynomial."""
        if not self._terms:
            return NEG_INFINITY
        return max(sum(exponent) for exponent in self._terms)

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.n_vars, Fraction(0))

    def sorted_terms(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in graded lexicographic order (the canonical ordering)."""
        return sorted(self._terms.items(), key=lambda item: grlex_key(item[0]))

    # -- ring operations ---------------------------------------------------

    def _check_compatible(self, other: "Polynomial") -> None:
        if self.n_vars != other.n_vars:
            raise StructureError(
                f"variable count mismatch: {self.n_vars} vs {other.n_vars}")

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n_vars, other)
        self._check_compatible(other)
        merged = dict(self._terms)
        for exponent, coefficient in other._terms.items():
            merged[exponent] = merged.get(exponent, Fraction(0)) + coefficient
        return Polynomial(self.n_vars, merged)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(self.n_vars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.constant(self.n_vars, other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return Polynomial.constant(self.n_vars, other) - self

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if not isinstance(other, Polynomial):
            scale = _as_fraction(other)
            return Polynomial(self.n_vars, {e: c * scale for e, c in self._terms.items()})
        self._check_compatible(other)
        product: dict[Exponent, Fraction] = {}
        for ea, ca in self._terms.items():
            for eb, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                product[key] = product.get(key, Fraction(0)) + ca * cb
        return Polynomial(self.n_vars, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise DomainError("negative powers are not polynomials")
        result = Polynomial.constant(self.n_vars, 1)
        base = self
        k = exponent
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.n_vars == other.n_vars and self._terms == other._terms

    def __hash__(self) -> int:
        cached = self._hash
        if cached is None:
            cached = hash((self.n_vars, frozenset(self._terms.items())))
            object.__setattr__(self, "_hash", cached)
        return cached

    # -- calculus and structure -------------------------------------------

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact value at a rational point."""
        if len(point) != self.n_vars:
            raise StructureError(
                f"point has {len(point)} coordinates, expected {self.n_vars}")
        values = [_as_fraction(v) for v in point]
        total = Fraction(0)
        for exponent, coefficient in self._terms.items():
            term = coefficient
            for e, v in zip(exponent, values):
                if e:
                    term *= v ** e
            total += term
        return total

    def partial(self, index: int) -> "Polynomial":
        """Partial derivative with respect to variable ``index``."""
        if not 0 <= index < self.n_vars:
            raise StructureError(f"variable index {index} out of range")
        out: dict[Exponent, Fraction] = {}
        for exponent, coefficient in self._terms.items():
            e = exponent[index]
            if e == 0:
                continue
            lowered = list(exponent)
            lowered[index] = e - 1
            out[tuple(lowered)] = coefficient * e
        return Polynomial(self.n_vars, out)

    def laplacian(self, weights: Sequence[Scalar] | None = None) -> "Polynomial":
        """Anisotropic Laplacian: sum of w_i * d^2/dx_i^2."""
        if weights is None:
            weights = [1] * self.n_vars
        if len(weights) != self.n_vars:
            raise StructureError(
                f"{len(weights)} weights for {self.n_vars} variables")
        scaled_weights = [_as_fraction(w) for w in weights]
        if any(w < 0 for w in scaled_weights):
            raise DomainError("Laplacian weights must be non-negative")
        out: dict[Exponent, Fraction] = {}
        for exponent, coefficient in self._terms.items():
            for i, w in enumerate(scaled_weights):
                e = exponent[i]
                if e < 2 or w == 0:
                    continue
                lowered = list(exponent)
                lowered[i] = e - 2
                key = tuple(lowered)
                out[key] = out.get(key, Fraction(0)) + coefficient * e * (e - 1) * w
        return Polynomial(self.n_vars, out)

    def homogeneous_part(self, k: int) -> "Polynomial":
        """Sum of the terms of total degree exactly ``k``."""
        if k < 0:
            raise DomainError("degree must be non-negative")
        return Polynomial(
            self.n_vars,
            {e: c for e, c in self._terms.items() if sum(e) == k})

    def translate(self, offsets: Sequence[Scalar]) -> "Polynomial":
        """Substitute x_i := x_i + offsets[i] (exact binomial expansion)."""
        if len(offsets) != self.n_vars:
            raise StructureError(
                f"{len(offsets)} offsets for {self.n_vars} variables")
        shifts = [_as_fraction(o) for o in offsets]
        result = Polynomial.zero(self.n_vars)
        for exponent, coefficient in self._terms.items():
            term = Polynomial.constant(self.n_vars, coefficient)
            for i, (e, shift) in enumerate(zip(exponent, shifts)):
                if e == 0:
                    continue
                if shift == 0:
                    term = term * Polynomial.monomial(
                        tuple(e if j == i else 0 for j in range(self.n_vars)))
                    continue
                axis = Polynomial.variable(self.n_vars, i) + shift
                term = term * axis ** e
            result = result + term
        return result

    def substitute_variable(self, index: int, value: Scalar) -> "Polynomial":
        """Fix variable ``index`` to a rational constant; drops that slot."""
        if not 0 <= index < self.n_vars:
            raise StructureError(f"variable index {index} out of range")
        value = _as_fraction(value)
        out: dict[Exponent, Fraction] = {}
        for exponent, coefficient in self._terms.items():
            scaled = coefficient * value ** exponent[index]
            if scaled == 0:
                continue
            key = exponent[:index] + exponent[index + 1:]
            total = out.get(key, Fraction(0)) + scaled
            if total:
                out[key] = total
            else:
                out.pop(key, None)
        return Polynomial(self.n_vars - 1, out)

    # -- formatting --------------------------------------------------------

    def __str__(self) -> str:
        return self.to_text()

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = default_variable_names(self.n_vars)
        if not self._terms:
            return "0"
        pieces = []
        for exponent, coefficient in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(names, exponent) if e
            ]
            body = "*".join(factors)
            if not body:
                pieces.append(str(coefficient))
            elif coefficient == 1:
                pieces.append(body)
            elif coefficient == -1:
                pieces.append(f"-{body}")
            else:
                pieces.append(f"{coefficient}*{body}")
        text = " + ".join(pieces)
        return text.replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Polynomial({self.n_vars}, {dict(self.sorted_terms())!r})"


def default_variable_names(n_vars: int) -> list[str]:
    if n_vars <= 3:
        return ["x", "y", "z"][:n_vars]
    return [f"x{i+1}" for i in range(n_vars)]


class TimePolynomial(Polynomial):
    """Polynomial whose slot 0 is the time variable t; slots 1..n spatial."""

    __slots__ = ()

    def __init__(self, n_spatial: int, terms: Mapping[Exponent, Scalar] | Iterable[tuple[Exponent, Scalar]] = ()):
        super().__init__(n_spatial + 1, terms)

    @property
    def n_spatial(self) -> int:
        return self.n_vars - 1

    @classmethod
    def from_polynomial(cls, poly: Polynomial) -> "TimePolynomial":
        """Reinterpret a polynomial whose variable 0 is t."""
        if poly.n_vars < 1:
            raise StructureError("a time polynomial needs at least the t slot")
        return cls(poly.n_vars - 1, poly.terms)

    @classmethod
    def lift(cls, spatial: Polynomial, t_power: int = 0) -> "TimePolynomial":
        """Embed a spatial polynomial, optionally multiplied by t^t_power."""
        return cls(spatial.n_vars,
                   {(t_power,) + e: c for e, c in spatial.terms.items()})

    def at_time(self, time: Scalar) -> Polynomial:
        """Exact substitution t := time; returns a spatial polynomial."""
        return Polynomial.substitute_variable(self, 0, time)

    def initial(self) -> Polynomial:
        return self.at_time(0)

    def t_coefficient(self, power: int) -> Polynomial:
        """Spatial coefficient polynomial of t^power."""
        out = {e[1:]: c for e, c in self.terms.items() if e[0] == power}
        return Polynomial(self.n_spatial, out)

    def d_dt(self) -> "TimePolynomial":
        return TimePolynomial.from_polynomial(self.partial(0))

    def spatial_laplacian(self, weights: Sequence[Scalar] | None = None) -> "TimePolynomial":
        if weights is None:
            weights = [1] * self.n_spatial
        if len(weights) != self.n_spatial:
            raise StructureError(
                f"{len(weights)} weights for {self.n_spatial} spatial variables")
        return TimePolynomial.from_polynomial(self.laplacian([0, *weights]))

    def to_text(self, names: Sequence[str] | None = None) -> str:
        if names is None:
            names = ["t", *default_variable_names(self.n_spatial)]
        return super().to_text(names)

    def __repr__(self) -> str:
        return f"TimePolynomial({self.n_spatial}, {dict(self.sorted_terms())!r})"


def factorial(n: int) -> int:
    return math.factorial(n)
