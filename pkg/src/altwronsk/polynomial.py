"""Exact univariate polynomials with integer coefficients.

A polynomial is stored sparsely as a map from exponent to nonzero
coefficient; the zero polynomial stores nothing. All arithmetic is exact
(Python integers), so these polynomials are safe to use as the ground truth
in verification paths.

The text form writes terms in descending exponent order, "3*x^2 - x + 5".
``Polynomial.parse`` accepts the same plus bare forms like "1", "x", "x^3",
"-4*x^2", and tolerates a Unicode minus sign.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Mapping, Union

_TERM_RE = re.compile(
    r"""^(?P<coeff>\d+)?                       # optional integer coefficient
        (?:\*?(?P<var>x(\^(?P<exp>\d+))?))?$   # optional '*' then variable""",
    re.VERBOSE,
)

CoeffSource = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class Polynomial:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: CoeffSource = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[int, int] = {}
        for exp, c in items:
            if exp < 0:
                raise ValueError(f"negative exponent {exp}")
            acc[exp] = acc.get(exp, 0) + c
        self._coeffs = {e: c for e, c in acc.items() if c}

    # -- inspection ------------------------------------------------------

    @property
    def degree(self) -> int | None:
        """Largest exponent, or None for the zero polynomial."""
        return max(self._coeffs) if self._coeffs else None

    @property
    def leading_coefficient(self) -> int:
        """Coefficient of the largest exponent; 0 for the zero polynomial."""
        return self._coeffs[max(self._coeffs)] if self._coeffs else 0

    def coefficient(self, exponent: int) -> int:
        return self._coeffs.get(exponent, 0)

    def terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs in descending exponent order."""
        return sorted(self._coeffs.items(), reverse=True)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, int):
            return self._coeffs == ({0: other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self.terms()))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc = dict(self._coeffs)
        for e, c in other._coeffs.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(acc)

    def __neg__(self) -> Polynomial:
        return Polynomial({e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: Polynomial) -> Polynomial:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: Polynomial | int) -> Polynomial:
        if isinstance(other, int):
            return Polynomial({e: c * other for e, c in self._coeffs.items()})
        if not isinstance(other, Polynomial):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._coeffs.items():
            for e2, c2 in other._coeffs.items():
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(acc)

    __rmul__ = __mul__

    def derivative(self, order: int = 1) -> Polynomial:
        """The order-th formal derivative (exact; order >= 0)."""
        if order < 0:
            raise ValueError("derivative order must be >= 0")
        if order == 0:
            return self
        # d^k/dx^k x^e = e(e-1)...(e-k+1) x^(e-k); math.perm is that product.
        return Polynomial(
            {e - order: c * math.perm(e, order)
             for e, c in self._coeffs.items() if e >= order}
        )

    # -- text form -------------------------------------------------------

    @classmethod
    def parse(cls, text: str) -> Polynomial:
        """Parse the sparse text form, e.g. "3*x^2 - x + 5" or "-4*x^2"."""
        cleaned = text.replace("−", "-").replace(" ", "")
        # Break into signed terms; a leading sign belongs to the first term.
        chunks = re.split(r"(?=[+-])", cleaned)
        coeffs: list[tuple[int, int]] = []
        for chunk in chunks:
            if not chunk:
                continue
            sign, body = 1, chunk
            if body[0] in "+-":
                sign = -1 if body[0] == "-" else 1
                body = body[1:]
            m = _TERM_RE.match(body) if body else None
            if not m or (m.group("coeff") is None and m.group("var") is None):
                raise ValueError(f"malformed term {chunk!r} in {text!r}")
            coeff = sign * int(m.group("coeff") or "1")
            exp = 0 if m.group("var") is None else int(m.group("exp") or "1")
            coeffs.append((exp, coeff))
        if not coeffs:
            raise ValueError(f"empty polynomial text: {text!r}")
        return cls(coeffs)

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for e, c in self.terms():
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = "x" if e == 1 else f"x^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({dict(sorted(self._coeffs.items()))!r})"


def monomial(exponent: int, coefficient: int = 1) -> Polynomial:
    """The polynomial coefficient * x**exponent."""
    return Polynomial({exponent: coefficient})


ZERO = Polynomial()
ONE = monomial(0)
