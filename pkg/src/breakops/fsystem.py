"""The coupled second-order system on even-parity polynomial tuples.

For parameters (lambda, nu, N, m) with m > N and a := nu - lambda a natural
number, the unknown is a tuple of polynomials (g_k) indexed by
k = m-N, ..., m+N with g_k constrained to EvenSpace(a-k).  Writing
f_j := g_(m-j) for j = -N..N, the tuple must satisfy the 4N+2 equations

    A_j^+ :  S(a+m-j, lambda+j-1) f_j    - 2(N-j) f_(j+1)'  = 0     j = 0..N
    A_j^- :  S(a-m-j, lambda+j-1) f_(-j) + 2(N-j) f_(-j-1)' = 0     j = 0..N
    B_j^+ :  2(-m(lambda+a-1) + j(lambda-1+theta)) f_j
                 + (N-j) f_(j+1)' + (N+j) f_(j-1)'          = 0     j = 1..N
    B_j^- :  2( m(lambda+a-1) + j(lambda-1+theta)) f_(-j)
                 - (N+j) f_(-j+1)' - (N-j) f_(-j-1)'        = 0     j = 1..N

with S the imaginary Gegenbauer operator and theta the Euler operator.
Expanding every equation into monomial coefficients turns the system into an
exact rational matrix acting on the coefficient vector; its nullspace is
computed by fraction-free (Bareiss) elimination with a deterministic pivot
rule, so output is reproducible byte for byte.

Unknown ordering is fixed as: blocks in ascending k, degrees descending
inside each block.  Row ordering is fixed as: equations A^+ (j ascending),
A^- (j ascending), B^+ (j = 1..N), B^- (j = 1..N); inside one equation the
rows run over monomial degrees 0, 1, 2, ... of the expanded polynomial, with
no parity-based pruning.

The solver is only ever assembled for m > N; negative m is reached through
the component-reversing duality at the symbol level.  Non-integer rational
lambda is a legitimate input (the solution space is then zero).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .gegenbauer import apply_imaginary_gegenbauer
from .poly import EvenSpace, Poly, ZERO_POLY, differentiate, euler_apply, monomial
from .rational import GaussianRational, is_integer, parse_rational


class UnsupportedRegimeError(ValueError):
    """Parameters outside the |m| > N regime handled by this package."""


class NoSolutionError(ValueError):
    """A one-dimensional solution space was requested where none exists."""


@dataclass(frozen=True)
class SystemParams:
    """Validated parameter record (lambda, nu, N, m); rejects |m| <= N.

    (lambda, N) parametrize the source family (a 2N+1-dimensional fiber with
    spectral parameter lambda) and (m, nu) the scalar target family; those
    bundle-level objects are not modelled here, only their parameters.  The
    derived a = nu - lambda is the homogeneity degree of admissible symbols.
    """

    lam: Fraction
    nu: Fraction
    N: int
    m: int

    def __post_init__(self):
        object.__setattr__(self, "lam", Fraction(self.lam))
        object.__setattr__(self, "nu", Fraction(self.nu))
        if self.N < 0:
            raise ValueError("N must be a natural number")
        if abs(self.m) <= self.N:
            raise UnsupportedRegimeError(f"regime |m| <= N unsupported (m={self.m}, N={self.N})")

    @classmethod
    def of(cls, lam, nu, N: int, m: int) -> "SystemParams":
        if isinstance(lam, str):
            lam = parse_rational(lam)
        if isinstance(nu, str):
            nu = parse_rational(nu)
        return cls(Fraction(lam), Fraction(nu), int(N), int(m))

    @property
    def a(self) -> int | None:
        """nu - lambda when it is a non-negative integer, else None."""
        diff = self.nu - self.lam
        if is_integer(diff) and diff >= 0:
            return int(diff)
        return None

    @property
    def abs_m(self) -> int:
        return abs(self.m)

    def mirrored(self) -> "SystemParams":
        return SystemParams(self.lam, self.nu, self.N, -self.m)

    def to_json(self) -> dict:
        return {
            "lambda": str(self.lam),
            "nu": str(self.nu),
            "N": self.N,
            "m": self.m,
            "a": self.a,
        }


class SolutionVector:
    """The tuple (g_(m-N), ..., g_(m+N)) with the even-parity constraints.

    Solutions always satisfy g_k in EvenSpace(a-k); pass validate=False to
    hold a raw polynomial tuple (e.g. to apply the equation operators to an
    inadmissible probe vector).
    """

    __slots__ = ("params", "entries")

    def __init__(self, params: SystemParams, entries, validate: bool = True):
        entries = tuple(entries)
        if len(entries) != 2 * params.N + 1:
            raise ValueError(f"expected {2 * params.N + 1} components, got {len(entries)}")
        a = params.a
        if a is None:
            raise ValueError("solution vectors require nu - lambda to be a natural number")
        if validate:
            for offset, g in enumerate(entries):
                k = params.m - params.N + offset
                if not EvenSpace(a - k).contains(g):
                    raise ValueError(
                        f"component g_{k} violates its even-parity space of bound {a - k}"
                    )
        self.params = params
        self.entries = entries

    def g(self, k: int) -> Poly:
        """Component of index k; zero outside m-N..m+N."""
        offset = k - (self.params.m - self.params.N)
        if 0 <= offset < len(self.entries):
            return self.entries[offset]
        return ZERO_POLY

    def f(self, j: int) -> Poly:
        """Reflected view f_j = g_(m-j) used by the differential equations."""
        return self.g(self.params.m - j)

    def is_zero(self) -> bool:
        return all(g.is_zero() for g in self.entries)

    def scaled(self, scalar) -> "SolutionVector":
        return SolutionVector(self.params, tuple(g * scalar for g in self.entries))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SolutionVector)
            and self.params == other.params
            and self.entries == other.entries
        )

    def to_json(self) -> dict:
        return {
            "params": self.params.to_json(),
            "k_min": self.params.m - self.params.N,
            "components": [g.to_json() for g in self.entries],
        }


def k_support(N: int, m: int) -> tuple[int, ...]:
    """The index set {|m-l|, |m+l| : l = 0..N}; an interval when |m| > N."""
    if N < 0:
        raise ValueError("N must be a natural number")
    values = set()
    for ell in range(N + 1):
        values.add(abs(m - ell))
        values.add(abs(m + ell))
    return tuple(sorted(values))


def hom_dimension(params: SystemParams) -> int:
    """Dimension of the space of admissible tuples (no equations imposed)."""
    a = params.a
    if a is None:
        return 0
    support = k_support(params.N, params.m)
    if a < min(support):
        return 0
    return sum(EvenSpace(a - k).dimension for k in support)


def _lop(kind: str, sign: str, j: int, params: SystemParams, fget) -> Poly:
    """One equation's left-hand side, with components supplied by fget(j)."""
    lam, m, N = params.lam, params.m, params.N
    a = params.a
    if a is None:
        raise ValueError("the equations require nu - lambda to be a natural number")
    if kind == "A":
        if not 0 <= j <= N:
            raise ValueError(f"A-type index {j} out of range 0..{N}")
        if sign == "+":
            out = apply_imaginary_gegenbauer(a + m - j, lam + j - 1, fget(j))
            return out - (2 * (N - j)) * differentiate(fget(j + 1))
        out = apply_imaginary_gegenbauer(a - m - j, lam + j - 1, fget(-j))
        return out + (2 * (N - j)) * differentiate(fget(-j - 1))
    if kind == "B":
        if not 1 <= j <= N:
            raise ValueError(f"B-type index {j} out of range 1..{N}")
        if sign == "+":
            base = fget(j)
            out = (-2 * m * (lam + a - 1) + 2 * j * (lam - 1)) * base + (2 * j) * euler_apply(base)
            out = out + (N - j) * differentiate(fget(j + 1))
            return out + (N + j) * differentiate(fget(j - 1))
        base = fget(-j)
        out = (2 * m * (lam + a - 1) + 2 * j * (lam - 1)) * base + (2 * j) * euler_apply(base)
        out = out - (N + j) * differentiate(fget(-j + 1))
        return out - (N - j) * differentiate(fget(-j - 1))
    raise ValueError(f"unknown equation kind {kind!r}")


def apply_L(kind: str, sign: str, j: int, params: SystemParams, sol: SolutionVector) -> Poly:
    """Evaluate one of the 4N+2 equation operators on a solution vector."""
    if params.m <= params.N:
        raise UnsupportedRegimeError("equations are assembled in the m > N orientation only")
    return _lop(kind, sign, j, params, sol.f)


def equation_index(N: int) -> list[tuple[str, str, int]]:
    """Fixed enumeration of the 4N+2 equations."""
    index: list[tuple[str, str, int]] = []
    index += [("A", "+", j) for j in range(N + 1)]
    index += [("A", "-", j) for j in range(N + 1)]
    index += [("B", "+", j) for j in range(1, N + 1)]
    index += [("B", "-", j) for j in range(1, N + 1)]
    return index


def unknown_columns(params: SystemParams) -> list[tuple[int, int]]:
    """Fixed (k, degree) enumeration of the monomial unknowns."""
    a = params.a
    if a is None:
        raise ValueError("no unknowns: nu - lambda is not a natural number")
    columns: list[tuple[int, int]] = []
    for k in k_support(params.N, params.m):
        bound = a - k
        if bound < 0:
            continue
        for degree in range(bound, -1, -2):
            columns.append((k, degree))
    return columns


@dataclass(frozen=True)
class ExactMatrix:
    """Dense rational matrix with explicit shape."""

    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def to_json(self) -> dict:
        return {
            "rows": self.nrows,
            "cols": self.ncols,
            "entries": [[str(x) for x in row] for row in self.rows],
        }


def assemble_system(params: SystemParams) -> ExactMatrix:
    """Expand all equations into one exact coefficient matrix.

    Columns follow unknown_columns(params); rows follow equation_index with
    one row per monomial degree 0..D of the expanded equation, D being the
    largest degree any unknown can reach there.
    """
    if params.m <= params.N:
        raise UnsupportedRegimeError("direct assembly requires m > N")
    if params.a is None:
        raise ValueError("cannot assemble: nu - lambda is not a natural number")
    columns = unknown_columns(params)
    rows: list[tuple[Fraction, ...]] = []
    for kind, sign, j in equation_index(params.N):
        images: list[Poly] = []
        for k, degree in columns:
            fget = lambda jj, k0=k, d0=degree: monomial(d0) if params.m - jj == k0 else ZERO_POLY
            images.append(_lop(kind, sign, j, params, fget))
        top = max((len(p.coeffs) for p in images), default=0)
        for d in range(top):
            row = []
            for p in images:
                c = p.coefficient(d)
                if not c.is_real():
                    raise ArithmeticError("equation coefficients must be real rationals")
                row.append(c.re)
            rows.append(tuple(row))
    return ExactMatrix(tuple(rows), len(columns))


def nullspace(matrix: ExactMatrix) -> list[tuple[Fraction, ...]]:
    """Rational kernel basis via fraction-free Gaussian elimination.

    Pivots are chosen as the first nonzero entry in column order (rows are
    scanned top to bottom), and each basis vector is scaled so its first
    nonzero entry equals 1.  The basis is ordered by ascending free column.
    """
    ncols = matrix.ncols
    work: list[list[int]] = []
    for row in matrix.rows:
        if all(x == 0 for x in row):
            continue
        scale = lcm(*(x.denominator for x in row))
        work.append([int(x * scale) for x in row])

    pivots: list[tuple[int, int]] = []  # (row, col) in echelon order
    prev = 1
    pivot_row = 0
    for col in range(ncols):
        found = None
        for r in range(pivot_row, len(work)):
            if work[r][col] != 0:
                found = r
                break
        if found is None:
            continue
        if found != pivot_row:
            work[pivot_row], work[found] = work[found], work[pivot_row]
        lead = work[pivot_row][col]
        for r in range(pivot_row + 1, len(work)):
            entry = work[r][col]
            row_r = work[r]
            row_p = work[pivot_row]
            for c in range(col, ncols):
                numerator = lead * row_r[c] - entry * row_p[c]
                quotient, remainder = divmod(numerator, prev)
                if remainder:
                    raise ArithmeticError("fraction-free elimination lost exactness")
                row_r[c] = quotient
        pivots.append((pivot_row, col))
        prev = lead
        pivot_row += 1
        if pivot_row == len(work):
            break

    pivot_cols = [c for _, c in pivots]
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis: list[tuple[Fraction, ...]] = []
    for free in free_cols:
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, c in reversed(pivots):
            if c > free:
                continue
            acc = Fraction(0)
            for cc in range(c + 1, ncols):
                if vec[cc]:
                    acc += work[r][cc] * vec[cc]
            vec[c] = -acc / work[r][c]
        first = next(x for x in vec if x)
        if first != 1:
            vec = [x / first for x in vec]
        for row in matrix.rows:
            if sum(row[c] * vec[c] for c in range(ncols)) != 0:
                raise ArithmeticError("kernel vector fails verification against the matrix")
        basis.append(tuple(vec))
    return basis


@dataclass(frozen=True)
class XiResult:
    """Dimension of the solution space and, when it is 1, its generator."""

    dimension: int
    generator: SolutionVector | None


def solve_xi(params: SystemParams) -> XiResult:
    """Exact dimension and normalized generator of the solution space."""
    if params.m <= params.N:
        raise UnsupportedRegimeError(
            "solve in the m > N orientation; negative m is reached through the duality"
        )
    if params.a is None:
        return XiResult(0, None)
    matrix = assemble_system(params)
    basis = nullspace(matrix)
    if len(basis) != 1:
        return XiResult(len(basis), None)
    return XiResult(1, decode_vector(params, basis[0]))


def decode_vector(params: SystemParams, vector) -> SolutionVector:
    """Turn a coefficient vector in column order back into polynomials."""
    columns = unknown_columns(params)
    if len(vector) != len(columns):
        raise ValueError("coefficient vector does not match the unknown layout")
    a = params.a
    blocks: dict[int, list] = {}
    for (k, degree), value in zip(columns, vector):
        coeffs = blocks.setdefault(k, [GaussianRational()] * (a - k + 1))
        coeffs[degree] = coeffs[degree] + GaussianRational(Fraction(value))
    entries = []
    for k in range(params.m - params.N, params.m + params.N + 1):
        entries.append(Poly(blocks[k]) if k in blocks else ZERO_POLY)
    return SolutionVector(params, entries)


def proportionality(reference: SolutionVector, other: SolutionVector) -> GaussianRational | None:
    """The scalar c with other = c * reference, when one exists."""
    if reference.is_zero():
        return None
    scalar = None
    for g_ref, g_other in zip(reference.entries, other.entries):
        top = max(len(g_ref.coeffs), len(g_other.coeffs))
        for d in range(top):
            u, v = g_ref.coefficient(d), g_other.coefficient(d)
            if not u:
                if v:
                    return None
                continue
            ratio = v / u
            if scalar is None:
                scalar = ratio
            elif scalar != ratio:
                return None
    return scalar
