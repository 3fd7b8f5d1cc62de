"""JSON serialization for polynomials and result objects.

The polynomial wire format is::

    {"vars": ["x", "y"], "terms": [{"coef": "-3", "exp": [2, 2]}, ...]}

Coefficients are decimal-integer strings or "p/q" rational strings, so the
round trip is bit-exact.  A time polynomial carries the reserved variable
name "t" in slot 0.  Term lists are emitted in graded lexicographic order,
which makes serialization deterministic byte-for-byte.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Sequence

from .poly import (Polynomial, StructureError, TimePolynomial,
                   default_variable_names)

TIME_VARIABLE = "t"


def fraction_to_str(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def fraction_from_str(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise StructureError(f"bad rational literal {text!r}: {exc}") from exc


def poly_to_dict(poly: Polynomial, names: Sequence[str] | None = None) -> dict[str, Any]:
    if names is None:
        if isinstance(poly, TimePolynomial):
            names = [TIME_VARIABLE, *default_variable_names(poly.n_spatial)]
        else:
            names = default_variable_names(poly.n_vars)
    if len(names) != poly.n_vars:
        raise StructureError(
            f"{len(names)} names for {poly.n_vars} variables")
    return {
        "vars": list(names),
        "terms": [
            {"coef": fraction_to_str(c), "exp": list(e)}
            for e, c in poly.sorted_terms()
        ],
    }


def poly_from_dict(doc: dict[str, Any]) -> Polynomial:
    if not isinstance(doc, dict) or "vars" not in doc or "terms" not in doc:
        raise StructureError("polynomial JSON needs 'vars' and 'terms'")
    names = doc["vars"]
    if not isinstance(names, list) or not all(isinstance(n, str) for n in names):
        raise StructureError("'vars' must be a list of strings")
    n_vars = len(names)
    terms: list[tuple[tuple[int, ...], Fraction]] = []
    for entry in doc["terms"]:
        exponent = entry.get("exp")
        if (not isinstance(exponent, list) or len(exponent) != n_vars
                or not all(isinstance(e, int) and e >= 0 for e in exponent)):
            raise StructureError(f"bad exponent entry {exponent!r}")
        terms.append((tuple(exponent), fraction_from_str(str(entry.get("coef")))))
    if names and names[0] == TIME_VARIABLE:
        return TimePolynomial(n_vars - 1, terms)
    return Polynomial(n_vars, terms)


def poly_to_json(poly: Polynomial, names: Sequence[str] | None = None) -> str:
    return dumps(poly_to_dict(poly, names))


def poly_from_json(text: str) -> Polynomial:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise StructureError(
            f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    return poly_from_dict(doc)


def dumps(doc: Any) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
