"""Exact evaluation of the contributing-permutation sum and its reports.

For N = 2p monomial weights 1, x, ..., x^(N-1), the term of a contributing
permutation is a product of falling factorials of its running exponents, and
the signed sum of those terms over the whole contributing set is an exact
integer multiple of the monomial Wronskian 0! * 1! * ... * (N-1)!. The
quotient is the universal constant this package computes. Everything here is
arbitrary-precision integer arithmetic; a division that leaves a remainder is
an implementation bug, never valid data, and raises ``ExactDivisionError``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Sequence

from . import parallel
from .permutations import _require_length


class ExactDivisionError(ArithmeticError):
    """A division that must be exact left a remainder (internal bug)."""


def falling_factorial(a: int, p: int) -> int:
    """a * (a-1) * ... * (a-p+1) for a, p >= 0; empty product is 1.

    Zero whenever a < p, which is exactly the vanishing case of applying a
    p-th derivative to x^a.
    """
    return math.perm(a, p)


def exponent_sequence(perm: Sequence[int], p: int) -> tuple[int, ...] | None:
    """Running exponents (E_1, ..., E_{N-1}) seen by the p-th derivatives.

    E_1 is the degree of the innermost weight; each later weight raises the
    exponent by its degree while every derivative application lowers it by
    p: E_{k+1} = E_k - p + degree(next weight). Returns None (a vanishing
    term, not an error) as soon as some E_k < p, since from that point the
    term is identically zero and later values would be meaningless.
    """
    _require_length(perm, p)
    values = []
    e = 0
    for k, v in enumerate(perm[:0:-1]):
        e = v if k == 0 else e - p + v
        if e < p:
            return None
        values.append(e)
    return tuple(values)


def term_coefficient(perm: Sequence[int], p: int) -> int:
    """The falling-factorial product for one permutation; 0 if it vanishes.

    Strictly positive on contributing permutations, so all sign variation
    in the signed sum comes from permutation signs alone.
    """
    exponents = exponent_sequence(perm, p)
    if exponents is None:
        return 0
    return math.prod(math.perm(e, p) for e in exponents)


@lru_cache(maxsize=None)
def wronskian_of_monomials(n: int) -> int:
    """0! * 1! * ... * (n-1)!: the Wronskian of 1, x, ..., x^(n-1)."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return math.prod(math.factorial(k) for k in range(n))


@dataclass(frozen=True)
class ConstReport:
    """Everything computed for one p: counts, exact sums, and ratios."""

    p: int
    phi_size: int
    even_count: int
    odd_count: int
    wronskian: int
    signed_sum: int
    const_p: int
    ratio_p_factorial: Fraction
    ratio_N_factorial: Fraction

    def to_record(self) -> dict[str, object]:
        """Flat record; big integers as decimal strings, ratios as "n/d".

        Survives JSON and CSV round trips without precision loss.
        """
        return {
            "p": self.p,
            "phi_size": self.phi_size,
            "even_count": self.even_count,
            "odd_count": self.odd_count,
            "wronskian": str(self.wronskian),
            "signed_sum": str(self.signed_sum),
            "const_p": str(self.const_p),
            "ratio_p_factorial": _format_fraction(self.ratio_p_factorial),
            "ratio_N_factorial": _format_fraction(self.ratio_N_factorial),
        }

    @classmethod
    def from_record(cls, record: Mapping[str, object]) -> ConstReport:
        return cls(
            p=int(record["p"]),
            phi_size=int(record["phi_size"]),
            even_count=int(record["even_count"]),
            odd_count=int(record["odd_count"]),
            wronskian=int(record["wronskian"]),
            signed_sum=int(record["signed_sum"]),
            const_p=int(record["const_p"]),
            ratio_p_factorial=Fraction(record["ratio_p_factorial"]),
            ratio_N_factorial=Fraction(record["ratio_N_factorial"]),
        )


def _format_fraction(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def const_of_p(p: int, workers: int = 1, depth: int | None = None,
               progress: bool = False) -> ConstReport:
    """Compute the universal constant for 2p operators, with full statistics.

    Enumerates the contributing set with the pruned backtracking search
    (optionally split over ``workers`` processes; see ``parallel``),
    accumulates the signed sum exactly, and divides by the monomial
    Wronskian. The result is bit-identical for every worker count and
    split depth.
    """
    part = parallel.compute(p, workers=workers, depth=depth, progress=progress)
    wronskian = wronskian_of_monomials(2 * p)
    const, remainder = divmod(part.signed_sum, wronskian)
    if remainder:
        raise ExactDivisionError(
            f"signed sum {part.signed_sum} is not a multiple of the "
            f"Wronskian {wronskian} (p={p}); this is a bug"
        )
    return ConstReport(
        p=p,
        phi_size=part.terms_evaluated,
        even_count=part.even_count,
        odd_count=part.odd_count,
        wronskian=wronskian,
        signed_sum=part.signed_sum,
        const_p=const,
        ratio_p_factorial=Fraction(const, math.factorial(p)),
        ratio_N_factorial=Fraction(const, math.factorial(2 * p)),
    )


def ratios(report: ConstReport) -> tuple[Fraction, Fraction, tuple[str, str]]:
    """The two normalisations of the constant, exact plus display strings."""
    small = report.ratio_p_factorial
    large = report.ratio_N_factorial
    return small, large, (render_ratio(small), render_ratio(large))


def render_ratio(value: Fraction) -> str:
    """Display rendering: exact integers verbatim, otherwise short decimals.

    Values below 1 get three decimal places, values up to 10^5 two, both
    round-half-even with trailing zeros stripped; anything larger is shown
    as scientific notation with a single mantissa decimal.
    """
    if value.denominator == 1:
        return str(value.numerator)
    magnitude = abs(value)
    if magnitude >= 100_000:
        return _render_scientific(value)
    places = 3 if magnitude < 1 else 2
    return _render_fixed(value, places)


def _render_fixed(value: Fraction, places: int) -> str:
    quantum = round(value, places)  # Fraction; round-half-even
    scaled = quantum.numerator * 10**places // quantum.denominator
    sign = "-" if scaled < 0 else ""
    digits = f"{abs(scaled):0{places + 1}d}"
    whole, frac = digits[:-places], digits[-places:]
    frac = frac.rstrip("0") or "0"
    return f"{sign}{whole}.{frac}"


def _render_scientific(value: Fraction) -> str:
    magnitude = abs(value)
    exponent = len(str(magnitude.numerator // magnitude.denominator)) - 1
    mantissa_tenths = round(magnitude / Fraction(10**(exponent - 1)))
    if mantissa_tenths >= 100:
        mantissa_tenths //= 10
        exponent += 1
    sign = "-" if value < 0 else ""
    return f"{sign}{mantissa_tenths // 10}.{mantissa_tenths % 10}e{exponent}"
