"""Independent verification path built on literal operator algebra.

Instead of the pruned-permutation engine, this module composes weighted
derivative operators symbolically on exact polynomials, sums over the whole
symmetric group with signs, and compares against the Wronskian determinant.
Nothing here knows about the contributing-set construction or the
falling-factorial closed form, which is what makes it a genuine
cross-check of the fast engine.
"""

from __future__ import annotations

import itertools
import math
import random
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .engine import ExactDivisionError
from .permutations import sign
from .polynomial import ONE, Polynomial, monomial

# Full S_N sums cost N! compositions; warn once past this arity.
_COMFORTABLE_MAX_P = 4


def derivative(g: Polynomial, order: int = 1) -> Polynomial:
    """The order-th formal derivative of an exact polynomial."""
    return g.derivative(order)


@dataclass(frozen=True)
class WeightedOperator:
    """weight(x) * d^order/dx^order, applied as: differentiate, then weigh."""

    weight: Polynomial
    order: int

    def __post_init__(self):
        if self.order < 1:
            raise ValueError(f"order must be >= 1, got {self.order}")


def apply_weighted_operator(op: WeightedOperator, g: Polynomial) -> Polynomial:
    """Apply one weighted derivative operator to a polynomial.

    On monomials this is x^b d^p x^a = a!/(a-p)! * x^(a+b-p), including the
    vanishing case a < p.
    """
    return op.weight * g.derivative(op.order)


def alternating_composition(
    p: int, weights: Sequence[Polynomial], f: Polynomial
) -> Polynomial:
    """Signed sum over all orderings of the composed weighted operators.

    Every permutation of the 2p weights contributes the composition
    w_(1) d^p ( w_(2) d^p ( ... w_(2p) d^p (f) ... )) with the permutation's
    sign. Exact and brutally literal: all (2p)! orderings are evaluated.
    """
    n = _check_arity(p, weights)
    total = Polynomial()
    for order in itertools.permutations(range(n)):
        term = f
        for idx in reversed(order):
            term = weights[idx] * term.derivative(p)
        total = total + (term if sign(order) > 0 else -term)
    return total


def _check_arity(p: int, weights: Sequence[Polynomial]) -> int:
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    n = 2 * p
    if len(weights) != n:
        raise ValueError(f"expected {n} weights, got {len(weights)}")
    if p > _COMFORTABLE_MAX_P:
        warnings.warn(
            f"summing over {math.factorial(n)} operator compositions (p={p}); "
            "this will take a while",
            RuntimeWarning,
            stacklevel=3,
        )
    return n


def symbolic_wronskian(weights: Sequence[Polynomial]) -> Polynomial:
    """Determinant of the matrix whose row i holds the i-th derivatives.

    Cofactor expansion with memoisation on column subsets; exact over the
    polynomial ring. Fine for the small matrices used here (n <= 8 or so).
    """
    if not weights:
        raise ValueError("need at least one weight")
    n = len(weights)
    rows = [[w.derivative(i) for w in weights] for i in range(n)]
    memo: dict[tuple[int, ...], Polynomial] = {}

    def minor(cols: tuple[int, ...]) -> Polynomial:
        if not cols:
            return ONE
        cached = memo.get(cols)
        if cached is not None:
            return cached
        row = n - len(cols)
        total = Polynomial()
        for j, col in enumerate(cols):
            entry = rows[row][col]
            if not entry:
                continue
            rest = minor(cols[:j] + cols[j + 1:])
            contribution = entry * rest
            total = total + (contribution if j % 2 == 0 else -contribution)
        memo[cols] = total
        return total

    return minor(tuple(range(n)))


@dataclass(frozen=True)
class VerificationRecord:
    """Outcome of one proportionality check.

    ``extracted_const`` is the exact ratio between the alternating
    composition and Wronskian * p-th derivative of f; None when the check
    failed or when both sides vanish (indeterminate).
    """

    holds: bool
    extracted_const: Fraction | None


def verify_theorem(
    p: int, weights: Sequence[Polynomial], f: Polynomial | None = None
) -> VerificationRecord:
    """Check that the alternating composition is proportional to
    Wronskian(weights) * f^(p), and extract the exact ratio.

    The ratio is fitted from the leading coefficients and then confirmed
    across every coefficient by cross-multiplication, avoiding polynomial
    division. A default f = x^(3p) guarantees a nonzero p-th derivative.
    """
    n = _check_arity(p, weights)
    if f is None:
        f = monomial(p + n)
    lhs = alternating_composition(p, weights, f)
    rhs = symbolic_wronskian(weights) * f.derivative(p)
    if not rhs:
        return VerificationRecord(holds=not lhs, extracted_const=None)
    if not lhs:
        return VerificationRecord(holds=True, extracted_const=Fraction(0))
    if lhs.degree != rhs.degree:
        return VerificationRecord(holds=False, extracted_const=None)
    ratio = Fraction(lhs.leading_coefficient, rhs.leading_coefficient)
    if lhs * ratio.denominator == rhs * ratio.numerator:
        return VerificationRecord(holds=True, extracted_const=ratio)
    return VerificationRecord(holds=False, extracted_const=None)


def monomial_weights(n: int) -> list[Polynomial]:
    """The canonical weights 1, x, x^2, ..., x^(n-1)."""
    return [monomial(k) for k in range(n)]


def brute_force_const(p: int) -> int:
    """The universal constant by full symmetric-group expansion.

    Uses the monomial weights and f = x^p (so the p-th derivative of f is
    p!), evaluates all (2p)! operator compositions literally, and divides
    out the symbolic Wronskian exactly. No pruning, no per-term closed
    form: this is the slow path the fast engine is checked against.
    """
    n = 2 * p
    weights = monomial_weights(n)
    total = alternating_composition(p, weights, monomial(p))
    if total.degree not in (None, 0):
        raise ExactDivisionError(
            f"full alternating sum is not constant (degree {total.degree}); "
            "this is a bug"
        )
    wronskian = symbolic_wronskian(weights)
    denominator = math.factorial(p) * wronskian.coefficient(0)
    const, remainder = divmod(total.coefficient(0), denominator)
    if remainder:
        raise ExactDivisionError(
            f"alternating sum {total.coefficient(0)} is not a multiple of "
            f"p! * Wronskian = {denominator} (p={p}); this is a bug"
        )
    return const


def random_polynomial(
    rng: random.Random,
    max_degree: int = 5,
    min_degree: int = 0,
    coeff_bound: int = 9,
) -> Polynomial:
    """A random nonzero polynomial with small integer coefficients.

    The degree is chosen uniformly in [min_degree, max_degree] and the
    leading coefficient is forced nonzero, so the draw is never the zero
    polynomial. Deterministic for a fixed rng state.
    """
    degree = rng.randint(min_degree, max_degree)
    coeffs = {e: rng.randint(-coeff_bound, coeff_bound) for e in range(degree)}
    lead = 0
    while lead == 0:
        lead = rng.randint(-coeff_bound, coeff_bound)
    coeffs[degree] = lead
    return Polynomial(coeffs)


def random_weight_tuple(
    rng: random.Random, count: int, max_degree: int = 5, coeff_bound: int = 9
) -> list[Polynomial]:
    """Random weights with a nonzero Wronskian (linearly independent).

    Dependent tuples make both sides of the proportionality vanish, so the
    ratio could not be extracted; they are redrawn. Deterministic for a
    fixed rng state.
    """
    while True:
        weights = [
            random_polynomial(rng, max_degree=max_degree,
                              coeff_bound=coeff_bound)
            for _ in range(count)
        ]
        if symbolic_wronskian(weights):
            return weights
