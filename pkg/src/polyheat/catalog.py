"""Classical non-negative polynomials that are not sums of squares.

These are the standard named examples from the real-algebraic-geometry
literature, built exactly over the rationals.  They drive the regression
suite: each is non-negative, fails to be a sum of squares at time zero,
and (except the homogeneous Motzkin form) enters the SOS cone under heat
flow at a known time.
"""

from __future__ import annotations

from fractions import Fraction

from .poly import Polynomial


def _bivariate(terms: dict[tuple[int, int], int | Fraction]) -> Polynomial:
    return Polynomial(2, terms)


def motzkin() -> Polynomial:
    """1 - 3x^2y^2 + x^4y^2 + x^2y^4, the first known Pos-not-SOS example."""
    return _bivariate({(0, 0): 1, (2, 2): -3, (4, 2): 1, (2, 4): 1})


def robinson() -> Polynomial:
    """Robinson's symmetric sextic."""
    return _bivariate({
        (0, 0): 1, (2, 0): -1, (0, 2): -1,
        (4, 0): -1, (2, 2): 3, (0, 4): -1,
        (6, 0): 1, (4, 2): -1, (2, 4): -1, (0, 6): 1,
    })


def choi_lam() -> Polynomial:
    """1 - 4xyz + x^2y^2 + x^2z^2 + y^2z^2 in three variables."""
    return Polynomial(3, {
        (0, 0, 0): 1, (1, 1, 1): -4,
        (2, 2, 0): 1, (2, 0, 2): 1, (0, 2, 2): 1,
    })


def schmudgen() -> Polynomial:
    """Schmuedgen's sextic, built from its factored form."""
    x = Polynomial.variable(2, 0)
    y = Polynomial.variable(2, 1)
    factored = (y * y - x * x) * x * (x + 2) * (x * (x - 2) + 2 * (y * y - 4))
    squares = (x ** 3 - 4 * x) ** 2 + (y ** 3 - 4 * y) ** 2
    return factored + 200 * squares


def berg_christensen_jensen() -> Polynomial:
    """1 - x^2y^2 + x^4y^2 + x^2y^4; the Motzkin polynomial plus 2x^2y^2."""
    return _bivariate({(0, 0): 1, (2, 2): -1, (4, 2): 1, (2, 4): 1})


def harris() -> Polynomial:
    """Harris's degree-10 symmetric example."""
    return _bivariate({
        (10, 0): 16, (8, 2): -36, (6, 4): 20, (4, 6): 20, (2, 8): -36, (0, 10): 16,
        (8, 0): -36, (6, 2): 57, (4, 4): -38, (2, 6): 57, (0, 8): -36,
        (6, 0): 20, (4, 2): -38, (2, 4): -38, (0, 6): 20,
        (4, 0): 20, (2, 2): 57, (0, 4): 20,
        (2, 0): -36, (0, 2): -36,
        (0, 0): 16,
    })


def homogeneous_motzkin() -> Polynomial:
    """z^6 - 3x^2y^2z^2 + x^4y^2 + x^2y^4: its top part blocks SOS forever."""
    return Polynomial(3, {
        (0, 0, 6): 1, (2, 2, 2): -3, (4, 2, 0): 1, (2, 4, 0): 1,
    })


NAMED = {
    "motzkin": motzkin,
    "robinson": robinson,
    "choi-lam": choi_lam,
    "schmudgen": schmudgen,
    "bcj": berg_christensen_jensen,
    "harris": harris,
    "homogeneous-motzkin": homogeneous_motzkin,
}
