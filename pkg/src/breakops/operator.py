"""Emission of the differential operator along two independent routes.

A ``DiffOperator`` is a finite sum of terms c * dz^p dzbar^q dx3^r acting on
the component addressed by the basis covector u_d; restriction to the plane
x3 = 0 is applied after differentiation and is implicit in the semantics.

Route one ("paper") expands the literal double-sum formulas: each summand is
a scalar Juhl block, the inflated Gegenbauer polynomial evaluated on
(-4 dz dzbar, dx3), composed with an explicit dz^. dzbar^. prefactor and an
exact constant.  Blocks whose Gegenbauer degree would be negative vanish by
the negative-degree convention.

Route two ("canonical") goes through the solution vector: inflate each
component, attach the harmonic factor (zeta1 + i zeta2)^k, and pull the
three-variable symbol back to derivatives.  The pull-back substitutes
w = zeta1 + i zeta2 and wbar = zeta1 - i zeta2, under which a monomial
w^al wbar^be zeta3^s corresponds to 2^(al+be) dz^be dzbar^al dx3^s; this is
the inverse symbol map combined with d/dx1 + i d/dx2 = 2 d/dzbar and the
Laplacian identity on the plane.  Negative m is reached by applying the
duality involution to the mirrored symbol before the pull-back.

The two routes agree up to a nonzero scalar; the scalar is reported, never
pinned to a closed form.
"""

from __future__ import annotations

from fractions import Fraction

from .closedform import classify, const_a, const_b, dual_solution
from .fsystem import NoSolutionError, SolutionVector, SystemParams, UnsupportedRegimeError, solve_xi
from .gegenbauer import gegenbauer
from .poly import MultiPoly, VectorSymbol, inflate
from .rational import GaussianRational, binomial, i_power, is_integer, sign_pow

TermKey = tuple[int, int, int, int]  # (component d, dz power, dzbar power, dx3 power)


class DiffOperator:
    """Finite sum of c * dz^p dzbar^q dx3^r tensored with a basis covector."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned: dict[TermKey, GaussianRational] = {}
        if terms:
            for key, value in terms.items():
                value = value if isinstance(value, GaussianRational) else GaussianRational(Fraction(value))
                if value:
                    cleaned[tuple(key)] = value
        self.terms = cleaned

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        return isinstance(other, DiffOperator) and self.terms == other.terms

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        out = dict(self.terms)
        for key, value in other.terms.items():
            new = out.get(key, GaussianRational()) + value
            if new:
                out[key] = new
            else:
                out.pop(key, None)
        return DiffOperator(out)

    def scaled(self, scalar) -> "DiffOperator":
        if not isinstance(scalar, GaussianRational):
            scalar = GaussianRational(Fraction(scalar))
        return DiffOperator({k: v * scalar for k, v in self.terms.items()})

    def sorted_terms(self) -> list[tuple[TermKey, GaussianRational]]:
        return sorted(self.terms.items())

    def orders(self) -> set[int]:
        """Total derivative orders p+q+r present across all terms."""
        return {p + q + r for (_, p, q, r) in self.terms}

    def to_json(self) -> list:
        return [
            {"d": k[0], "p": k[1], "q": k[2], "r": k[3], "coeff": v.to_json()}
            for k, v in self.sorted_terms()
        ]

    def latex(self) -> str:
        """Rendering in (d, p, q, r) lexicographic term order."""
        if self.is_zero():
            return "0"
        chunks = []
        for (d, p, q, r), coeff in self.sorted_terms():
            factors = [f"\\left({coeff}\\right)"]
            if p:
                factors.append(f"\\partial_z^{{{p}}}" if p > 1 else "\\partial_z")
            if q:
                factors.append(f"\\partial_{{\\bar z}}^{{{q}}}" if q > 1 else "\\partial_{\\bar z}")
            if r:
                factors.append(f"\\partial_{{x_3}}^{{{r}}}" if r > 1 else "\\partial_{x_3}")
            chunks.append(" ".join(factors) + f" \\otimes u_{{{d}}}^{{\\vee}}")
        return " + ".join(chunks)

    def __repr__(self) -> str:
        return f"DiffOperator({dict(self.sorted_terms())!r})"


def _juhl_blocks(lam: Fraction, nu: Fraction) -> dict[tuple[int, int, int], Fraction]:
    """Monomial content (p, q, r) -> coeff of the scalar Juhl block."""
    order = nu - lam
    if not (is_integer(order) and order >= 0):
        raise ValueError(f"Juhl block needs nu - lambda in N, got {order}")
    ell = int(order)
    source = gegenbauer(ell, lam - 1)
    blocks: dict[tuple[int, int, int], Fraction] = {}
    for k in range(ell // 2 + 1):
        c = source.coefficient(ell - 2 * k)
        if not c:
            continue
        blocks[(k, k, ell - 2 * k)] = c.re * Fraction(-4) ** k
    return blocks


def juhl_operator(lam: Fraction | int, nu: Fraction | int) -> DiffOperator:
    """The scalar factorization block as a single-component operator.

    The degree-(nu-lambda) Gegenbauer polynomial with parameter lambda-1 is
    inflated to two variables and evaluated at (-4 dz dzbar, dx3).
    """
    lam, nu = Fraction(lam), Fraction(nu)
    blocks = _juhl_blocks(lam, nu)
    return DiffOperator({(0, p, q, r): GaussianRational(c) for (p, q, r), c in blocks.items()})


def circle_power(k: int, conjugate: bool = False) -> MultiPoly:
    """(zeta1 + i zeta2)^k, or its zeta2-flipped twin when conjugate is set."""
    if k < 0:
        raise ValueError("harmonic factor exponent must be non-negative")
    out: dict[tuple, GaussianRational] = {}
    for j in range(k + 1):
        coeff = binomial(k, j) * i_power(j)
        if conjugate and j % 2:
            coeff = -coeff
        out[(k - j, j, 0)] = coeff
    return MultiPoly(out)


def symbol_psi(params: SystemParams, sol: SolutionVector) -> VectorSymbol:
    """Attach harmonic factors to the inflated solution components.

    Component d = k - m + N carries inflate(a-k, g_k) * (zeta1 + i zeta2)^k.
    """
    if params.m <= params.N:
        raise UnsupportedRegimeError("symbols are built in the m > N orientation")
    a = params.a
    components = []
    for k in range(params.m - params.N, params.m + params.N + 1):
        g = sol.g(k)
        if g.is_zero():
            components.append(MultiPoly())
            continue
        components.append(inflate(a - k, g) * circle_power(k))
    return VectorSymbol(tuple(components))


def symbol_to_operator(psi: VectorSymbol) -> DiffOperator:
    """Pull a polynomial symbol back to a constant-coefficient operator.

    Each component is rewritten in the basis w = zeta1 + i zeta2,
    wbar = zeta1 - i zeta2; the monomial w^al wbar^be zeta3^s maps to
    2^(al+be) dz^be dzbar^al dx3^s.  Expanding zeta1 = (w+wbar)/2 and
    zeta2 = -i(w-wbar)/2 makes the powers of 2 cancel exactly, leaving
    binomial weights and fourth roots of unity.
    """
    terms: dict[TermKey, GaussianRational] = {}
    for d, component in enumerate(psi.components):
        for (e1, e2, e3), coeff in component.terms.items():
            base = coeff * i_power(-e2)
            for i in range(e1 + 1):
                for j in range(e2 + 1):
                    alpha = i + j
                    beta = (e1 - i) + (e2 - j)
                    value = base * binomial(e1, i) * binomial(e2, j)
                    if (e2 - j) % 2:
                        value = -value
                    key = (d, beta, alpha, e3)
                    current = terms.get(key, GaussianRational()) + value
                    if current:
                        terms[key] = current
                    else:
                        terms.pop(key, None)
    return DiffOperator(terms)


def emit_operator(params: SystemParams, form: str) -> DiffOperator:
    """Emit the operator, either from the literal formulas or via the symbol."""
    outcome = classify(params.lam, params.nu, params.N, params.m)
    if outcome.dimension == 0:
        raise NoSolutionError("no operator exists at these parameters")
    if form == "paper":
        return _emit_literal(params)
    if form == "canonical":
        return _emit_canonical(params)
    raise ValueError(f"unknown form {form!r}")


def _emit_canonical(params: SystemParams) -> DiffOperator:
    oriented = params if params.m > params.N else params.mirrored()
    result = solve_xi(oriented)
    if result.generator is None:
        raise ArithmeticError("nullspace disagrees with the classification predicate")
    psi = symbol_psi(oriented, result.generator)
    if params.m <= params.N:
        psi = dual_solution(psi, oriented)
    return symbol_to_operator(psi)


def _emit_literal(params: SystemParams) -> DiffOperator:
    N, m = params.N, params.m
    lam, nu = params.lam, int(params.nu)
    out = DiffOperator()
    if m > N:
        for d in range(N):
            for r in range(d + 1):
                const = Fraction(2) ** (d + 2 * nu - 2 * r - 2) * const_a(d, r, params)
                out = out + _literal_term(
                    const, d, lam + N - r, Fraction(2 - nu - d - m + r),
                    N + nu - r - 1, m + d + nu - r - 1,
                )
        for d in range(N, 2 * N + 1):
            for r in range(2 * N - d + 1):
                const = Fraction(2) ** (2 * N - d - 2 * r) * const_b(d, r, params)
                out = out + _literal_term(
                    const, d, lam + N - r, Fraction(nu + d - m - 2 * N + r),
                    2 * N - d - r, N + m - r,
                )
    else:
        for d in range(N + 1):
            for r in range(d + 1):
                const = Fraction(2) ** (d - 2 * r) * sign_pow(d)
                const *= const_b(2 * N - d, r, params)
                out = out + _literal_term(
                    const, d, lam + N - r, Fraction(nu - d + m + r),
                    N - m - r, d - r,
                )
        for d in range(N + 1, 2 * N + 1):
            for r in range(2 * N - d + 1):
                const = Fraction(2) ** (2 * N - d + 2 * nu - 2 * r - 2) * sign_pow(d)
                const *= const_a(2 * N - d, r, params)
                out = out + _literal_term(
                    const, d, lam + N - r, Fraction(2 - nu + d - 2 * N + m + r),
                    -m + 2 * N - d + nu - r - 1, N + nu - r - 1,
                )
    if out.is_zero():
        raise ArithmeticError("literal emission produced the zero operator")
    return out


def _literal_term(const: Fraction, d: int, block_lam: Fraction, block_nu: Fraction,
                  dz: int, dzbar: int) -> DiffOperator:
    """One summand: constant * Juhl block * dz^dz dzbar^dzbar on component d."""
    if const == 0:
        return DiffOperator()
    if block_nu - block_lam < 0:
        return DiffOperator()  # negative-degree Gegenbauer block vanishes
    if dz < 0 or dzbar < 0:
        raise ArithmeticError("negative derivative power with a nonzero constant")
    blocks = _juhl_blocks(block_lam, block_nu)
    return DiffOperator(
        {(d, p + dz, q + dzbar, r): GaussianRational(const * c) for (p, q, r), c in blocks.items()}
    )


def compare_up_to_scalar(first: DiffOperator, second: DiffOperator) -> GaussianRational | None:
    """The unique scalar c with second = c * first, None when there is none."""
    if first.is_zero():
        return None
    key, value = first.sorted_terms()[0]
    scalar = second.terms.get(key, GaussianRational()) / value
    if second == first.scaled(scalar):
        return scalar
    return None
