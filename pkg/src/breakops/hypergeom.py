"""Terminating generalized hypergeometric series over exact rationals.

Only the terminating case is supported: some upper parameter must be a
non-positive integer (or the argument must be zero), so that the series is a
finite sum and evaluates exactly in Q.  Convergence questions for infinite
series never arise here; every summation the closed-form constants depend on
terminates.

A lower parameter that is a non-positive integer can silently poison the sum
by putting a zero into a denominator before the series terminates, so that
situation is rejected rather than worked around.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rational import is_integer, pochhammer


@dataclass(frozen=True)
class HyperSpec:
    """Parameters (upper; lower; argument) of a hypergeometric sum."""

    upper: tuple[Fraction, ...]
    lower: tuple[Fraction, ...]
    arg: Fraction

    @classmethod
    def of(cls, upper, lower, arg) -> "HyperSpec":
        return cls(
            tuple(Fraction(a) for a in upper),
            tuple(Fraction(b) for b in lower),
            Fraction(arg),
        )

    def termination_index(self) -> int | None:
        """Smallest -a over non-positive-integer upper parameters a, else None."""
        stops = [-int(a) for a in self.upper if is_integer(a) and a <= 0]
        return min(stops) if stops else None


def hyper(spec: HyperSpec) -> Fraction:
    """Exact value of the terminating series sum_n prod(a_i)_n/prod(b_j)_n z^n/n!."""
    n_stop = spec.termination_index()
    if n_stop is None:
        if spec.arg != 0:
            raise ValueError("series does not terminate: no non-positive integer upper parameter")
        n_stop = 0
    for b in spec.lower:
        if pochhammer(b, n_stop) == 0:
            raise ValueError(f"lower parameter {b} hits a pole before the series terminates")
    total = Fraction(0)
    term = Fraction(1)
    for n in range(n_stop + 1):
        total += term
        if n == n_stop:
            break
        for a in spec.upper:
            term *= a + n
        for b in spec.lower:
            term /= b + n
        term *= spec.arg
        term /= n + 1
    return total
