"""Renormalized Gegenbauer polynomials and their differential operators.

The classical Gegenbauer polynomial C_l^mu degenerates (vanishes
identically) at certain non-positive parameters mu.  Rescaling by
Gamma(mu)/Gamma(mu + [(l+1)/2]) removes the degeneration: the renormalized
polynomial is nonzero for every rational mu, because its lowest term
(-1)^[l/2]/[l/2]! * (2z)^(l-2[l/2]) carries no mu dependence at all.  By
convention the polynomial of negative degree is identically zero.

Coefficients are assembled from rising factorials rather than gamma values;
the quotient Gamma(mu+l-k)/Gamma(mu+[(l+1)/2]) is pole-free over the whole
summation range since l-k >= [(l+1)/2] there, so everything stays exact for
every rational parameter, including the negative integers where the
unnormalized polynomial collapses.

Two second-order operators act here.  The Gegenbauer operator

    G_l^mu f = (1-z^2) f'' - (2mu+1) z f' + l(l+2mu) f

annihilates the degree-l renormalized polynomial, and its even-parity
polynomial kernel is exactly one-dimensional.  Substituting z = it turns it
into the imaginary form

    S_l^mu f = -((1+t^2) f'' + (1+2mu) t f' - l(l+2mu) f)

whose kernel in the even space is spanned by the substituted polynomial.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .rational import GaussianRational, i_power, pochhammer, sign_pow
from .poly import Poly, ZERO_POLY, differentiate, euler_apply


class GegenParams(NamedTuple):
    """A (degree, parameter) pair; negative degree denotes the zero polynomial."""

    ell: int
    mu: Fraction


def gegenbauer(ell: int, mu: Fraction | int) -> Poly:
    """Renormalized Gegenbauer polynomial of degree ell in z."""
    if ell < 0:
        return ZERO_POLY
    mu = Fraction(mu)
    half_up = (ell + 1) // 2
    coeffs = [GaussianRational()] * (ell + 1)
    for k in range(ell // 2 + 1):
        ratio = pochhammer(mu + half_up, ell - k - half_up)
        value = ratio * sign_pow(k) * Fraction(2) ** (ell - 2 * k)
        value /= math.factorial(k) * math.factorial(ell - 2 * k)
        coeffs[ell - 2 * k] = GaussianRational(value)
    return Poly(coeffs)


def gegenbauer_it(ell: int, mu: Fraction | int) -> Poly:
    """The renormalized polynomial with z replaced by i*t."""
    base = gegenbauer(ell, mu)
    return Poly([base.coefficient(d) * i_power(d) for d in range(len(base.coeffs))])


def gamma_factor(mu: Fraction | int, ell: int) -> Fraction:
    """1 for odd ell, mu + ell/2 for even ell, valid for every integer ell."""
    if ell % 2:
        return Fraction(1)
    return Fraction(mu) + Fraction(ell, 2)


def apply_gegenbauer(ell: int, mu: Fraction | int, f: Poly) -> Poly:
    """(1-z^2) f'' - (2mu+1) z f' + l(l+2mu) f."""
    mu = Fraction(mu)
    ddf = differentiate(differentiate(f))
    # z^2 f'' = (theta^2 - theta) f with theta the Euler operator.
    out = ddf - (euler_apply(euler_apply(f)) - euler_apply(f))
    out = out - (2 * mu + 1) * euler_apply(f)
    return out + (ell * (ell + 2 * mu)) * f


def apply_imaginary_gegenbauer(ell: int, mu: Fraction | int, f: Poly) -> Poly:
    """-((1+t^2) f'' + (1+2mu) t f' - l(l+2mu) f)."""
    mu = Fraction(mu)
    ddf = differentiate(differentiate(f))
    t2ddf = euler_apply(euler_apply(f)) - euler_apply(f)
    inner = ddf + t2ddf + (2 * mu + 1) * euler_apply(f) - (ell * (ell + 2 * mu)) * f
    return -inner


def vanishing_set(ell: int, k: int) -> frozenset[Fraction]:
    """Parameters mu at which the z^(l-2k) coefficient vanishes.

    Empty for ell in {0, 1} and for k = floor(ell/2) (the lowest term never
    vanishes).
    """
    if ell < 0 or k < 0:
        raise ValueError("degree and coefficient index must be natural numbers")
    if k > ell // 2:
        raise ValueError(f"coefficient index {k} exceeds floor({ell}/2)")
    if ell <= 1 or k == ell // 2:
        return frozenset()
    half_up = (ell + 1) // 2
    return frozenset(Fraction(-half_up - d) for d in range(ell // 2 - k))
