"""Heat-equation evolution of polynomials.

The univariate building block is the family p_k(x, t) solving the heat
equation with monomial initial data x^k:

    p_{2d}(x,t)   = sum_j (2d)!/((2d-2j)! j!)   t^j x^{2d-2j}
    p_{2d+1}(x,t) = sum_j (2d+1)!/((2d+1-2j)! j!) t^j x^{2d+1-2j}

Multivariate initial data evolves by tensoring these per coordinate, with
an optional per-coordinate diffusivity (anisotropic case).  The Gaussian
convolution oracle recomputes the same flow from the moment expansion of
the heat kernel and never touches the basis, so the two routes check each
other exactly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Sequence

from .poly import DomainError, Polynomial, Scalar, StructureError, TimePolynomial, _as_fraction


@lru_cache(maxsize=None)
def heat_basis(k: int) -> TimePolynomial:
    """Heat evolution of x^k: a polynomial in (t, x) with p_k(x, 0) = x^k."""
    if k < 0:
        raise DomainError("basis index must be non-negative")
    terms = {}
    for j in range(k // 2 + 1):
        coefficient = Fraction(factorial(k), factorial(k - 2 * j) * factorial(j))
        terms[(j, k - 2 * j)] = coefficient
    return TimePolynomial(1, terms)


def _normalize_diffusivity(nu: Scalar | Sequence[Scalar], n_vars: int) -> list[Fraction]:
    if isinstance(nu, (int, Fraction)):
        weights = [_as_fraction(nu)] * n_vars
    else:
        weights = [_as_fraction(v) for v in nu]
        if len(weights) != n_vars:
            raise StructureError(
                f"{len(weights)} diffusivities for {n_vars} variables")
    if any(w < 0 for w in weights):
        raise DomainError("diffusivities must be non-negative")
    return weights


def _univariate_factor(k: int, weight: Fraction) -> list[tuple[int, int, Fraction]]:
    """Terms (t_power, x_power, coefficient) of p_k(x, weight * t)."""
    out = []
    for (j, xe), c in heat_basis(k).terms.items():
        scaled = c * weight ** j
        if scaled:
            out.append((j, xe, scaled))
    return out


def evolve(f0: Polynomial, nu: Scalar | Sequence[Scalar] = 1) -> TimePolynomial:
    """Evolve spatial initial data under d/dt f = sum_i nu_i d^2/dx_i^2 f.

    Returns the full time polynomial; substituting t = 0 recovers ``f0``
    and the heat equation holds exactly as a polynomial identity.
    """
    weights = _normalize_diffusivity(nu, f0.n_vars)
    accumulated: dict[tuple[int, ...], Fraction] = {}
    for exponent, coefficient in f0.terms.items():
        # tensor product of the per-coordinate univariate evolutions
        partial: dict[tuple[int, tuple[int, ...]], Fraction] = {(0, ()): coefficient}
        for k, weight in zip(exponent, weights):
            factor = _univariate_factor(k, weight)
            grown: dict[tuple[int, tuple[int, ...]], Fraction] = {}
            for (t_power, spatial), c in partial.items():
                for j, xe, fc in factor:
                    key = (t_power + j, spatial + (xe,))
                    grown[key] = grown.get(key, Fraction(0)) + c * fc
            partial = grown
        for (t_power, spatial), c in partial.items():
            key = (t_power, *spatial)
            accumulated[key] = accumulated.get(key, Fraction(0)) + c
    return TimePolynomial(f0.n_vars, accumulated)


def evolve_at(f0: Polynomial, time: Scalar,
              nu: Scalar | Sequence[Scalar] = 1) -> Polynomial:
    """Exact heat evolution evaluated at a rational time (any sign)."""
    return evolve(f0, nu).at_time(time)


def gaussian_convolution_oracle(f0: Polynomial, time: Scalar) -> Polynomial:
    """Convolve f0 with the heat kernel at a positive time, exactly.

    Independent of the basis route: expands f0(x - y) and integrates each
    y-monomial against the kernel using the even Gaussian moments
    (2j-1)!! (2t)^j per coordinate; odd moments vanish.
    """
    time = _as_fraction(time)
    if time <= 0:
        raise DomainError("the Gaussian kernel needs time > 0")
    two_t = 2 * time

    def gaussian_moment(order: int) -> Fraction:
        if order % 2:
            return Fraction(0)
        j = order // 2
        double_factorial = 1
        for odd in range(1, 2 * j, 2):
            double_factorial *= odd
        return double_factorial * two_t ** j

    from math import comb

    result: dict[tuple[int, ...], Fraction] = {}
    for exponent, coefficient in f0.terms.items():
        # expand prod_i (x_i - y_i)^{e_i}; only even y-powers survive
        expansions = []
        for e in exponent:
            axis = []
            for b in range(0, e + 1, 2):
                axis.append((e - b, Fraction(comb(e, b)) * gaussian_moment(b)))
            expansions.append(axis)
        stack = [((), coefficient)]
        for axis in expansions:
            stack = [
                (partial + (x_power,), c * weight)
                for partial, c in stack
                for x_power, weight in axis
            ]
        for key, c in stack:
            result[key] = result.get(key, Fraction(0)) + c
    return Polynomial(f0.n_vars, result)


@dataclass(frozen=True)
class DriftScaleSpec:
    """Constant-in-x drift and scaling data for the dual evolution.

    ``drift_integral`` holds the components of G(t) = integral of the drift
    and ``scale_integral`` holds H(t) = integral of the scaling, both as
    univariate polynomials in t with zero constant term.
    """

    nu: tuple[Fraction, ...]
    drift_integral: tuple[Polynomial, ...]
    scale_integral: Polynomial

    def __post_init__(self):
        for g in self.drift_integral:
            if g.n_vars != 1:
                raise StructureError("drift integrals must be univariate in t")
            if g.constant_term() != 0:
                raise StructureError("drift integral must vanish at t = 0")
        if self.scale_integral.n_vars != 1:
            raise StructureError("scale integral must be univariate in t")
        if self.scale_integral.constant_term() != 0:
            raise StructureError("scale integral must vanish at t = 0")
        if any(w < 0 for w in self.nu):
            raise DomainError("diffusivities must be non-negative")

    @classmethod
    def build(cls, n_vars: int, nu: Scalar | Sequence[Scalar] = 0,
              drift_integral: Sequence[Polynomial] | None = None,
              scale_integral: Polynomial | None = None) -> "DriftScaleSpec":
        weights = tuple(_normalize_diffusivity(nu, n_vars))
        if drift_integral is None:
            drift_integral = [Polynomial.zero(1) for _ in range(n_vars)]
        if scale_integral is None:
            scale_integral = Polynomial.zero(1)
        drift = tuple(drift_integral)
        if len(drift) != n_vars:
            raise StructureError(
                f"{len(drift)} drift components for {n_vars} variables")
        return cls(weights, drift, scale_integral)


def evolve_dual_const_coeff(p0: Polynomial, spec: DriftScaleSpec,
                            time: Scalar) -> tuple[Fraction, Polynomial]:
    """Dual evolution for x-independent drift g(t) and scaling h(t).

    Returns ``(H(time), q)`` with the evolved polynomial equal to
    exp(H(time)) * q; the exponential prefactor is kept symbolic as the
    exact rational exponent so that no precision is lost.  The polynomial
    part is the heat flow at the scaled time composed with the drift shift
    x -> x + G(time).
    """
    time = _as_fraction(time)
    if len(spec.nu) != p0.n_vars:
        raise StructureError(
            f"spec has {len(spec.nu)} coordinates, polynomial has {p0.n_vars}")
    if any(w > 0 for w in spec.nu) and time < 0:
        raise DomainError("diffusive dual evolution needs time >= 0")
    diffused = evolve(p0, spec.nu).at_time(time)
    shift = [g.evaluate([time]) for g in spec.drift_integral]
    shifted = diffused.translate(shift)
    h_value = spec.scale_integral.evaluate([time])
    return h_value, shifted


def evolve_waring_term(a: Sequence[Scalar], b: Scalar, d: int) -> TimePolynomial:
    """Heat evolution of the even power (a.x + b)^d of an affine form.

    The flow along the line spanned by ``a`` reduces to the univariate
    flow with diffusivity |a|^2, so the result is p_d(y, |a|^2 t) with
    y = a.x + b.  Every t-coefficient is a positive multiple of an even
    power of the same form, which exhibits the decomposition into even
    powers of affine forms constructively.
    """
    if d < 0 or d % 2:
        raise DomainError("the power must be even and non-negative")
    direction = [_as_fraction(v) for v in a]
    if all(v == 0 for v in direction):
        raise DomainError("direction vector must be non-zero")
    n_vars = len(direction)
    norm_sq = sum(v * v for v in direction)
    form = Polynomial.constant(n_vars, b)
    for i, v in enumerate(direction):
        if v:
            form = form + v * Polynomial.variable(n_vars, i)
    accumulated: dict[tuple[int, ...], Fraction] = {}
    for (j, x_power), c in heat_basis(d).terms.items():
        weight = c * norm_sq ** j
        for exponent, fc in (form ** x_power).terms.items():
            key = (j, *exponent)
            accumulated[key] = accumulated.get(key, Fraction(0)) + weight * fc
    return TimePolynomial(n_vars, accumulated)


def asymptotic_constant(f: Polynomial) -> Fraction:
    """Leading large-time coefficient: lim evolve(f)(x,t) / t^d for deg f = 2d.

    Equals Laplacian^d applied to the top homogeneous part, divided by d!,
    and is strictly positive for every non-zero non-negative polynomial.
    """
    degree = f.degree()
    if f.is_zero():
        raise DomainError("the zero polynomial has no asymptotic constant")
    if degree % 2:
        raise DomainError("degree must be even")
    d = int(degree) // 2
    top = f.homogeneous_part(int(degree))
    iterated = top
    for _ in range(d):
        iterated = iterated.laplacian()
    constant = iterated.constant_term()
    return constant / factorial(d)
