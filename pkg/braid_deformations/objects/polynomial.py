"""
Exact integer polynomials in one variable `t`, and finite-field point counts.
"""

from itertools import zip_longest
from typing import Iterable

import sympy
from pydantic import Field, field_validator, model_validator

from .base import ImmutableModel


class IntPolynomial(ImmutableModel):
    """Polynomial with exact integer coefficients, lowest degree first.

    The leading coefficient is nonzero; the zero polynomial has no coefficients.
    """

    coeffs: tuple[int, ...] = Field(
        default=(), description="Coefficients in ascending degree.", examples=[[0, 7, -5, 1]]
    )

    @field_validator("coeffs")
    @classmethod
    def ensure_nonzero_leading_coefficient(cls, v: tuple[int, ...]):
        if v and v[-1] == 0:
            raise ValueError(f"Leading coefficient of {v} is zero; use IntPolynomial.new to strip it")
        return v

    @classmethod
    def new(cls, coeffs: Iterable[int]):
        trimmed = [int(c) for c in coeffs]
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return cls(coeffs=tuple(trimmed))

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1):
        return cls.new([0] * degree + [coefficient])

    @classmethod
    def from_roots(cls, roots: Iterable[int]):
        """Expand prod (t - r)."""
        result = cls.monomial(0)
        for r in roots:
            result = result * cls.new([-r, 1])
        return result

    @classmethod
    def from_sympy(cls, poly: sympy.Poly):
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]
        return cls.new(coeffs)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, t: int) -> int:
        value = 0
        for c in reversed(self.coeffs):
            value = value * t + c
        return value

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.new(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return IntPolynomial.new(a - b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial()
        product = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                product[i + j] += a * b
        return IntPolynomial.new(product)

    def shift(self, m: int) -> "IntPolynomial":
        """Multiply by t^m."""
        if self.is_zero:
            return self
        return IntPolynomial.new([0] * m + list(self.coeffs))

    def divide_linear(self, root: int) -> tuple["IntPolynomial", int]:
        """Synthetic division by (t - root): returns (quotient, remainder)."""
        if self.is_zero:
            return self, 0
        carry = 0
        quotient = []
        for c in reversed(self.coeffs):
            carry = carry * root + c
            quotient.append(carry)
        remainder = quotient.pop()
        return IntPolynomial.new(reversed(quotient)), remainder

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        terms: list[str] = []
        for degree in range(self.degree, -1, -1):
            c = self.coeffs[degree]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            magnitude = abs(c)
            if degree == 0:
                body = str(magnitude)
            else:
                power = "t" if degree == 1 else f"t^{degree}"
                body = power if magnitude == 1 else f"{magnitude}*{power}"
            if not terms:
                terms.append(body if sign == "+" else f"-{body}")
            else:
                terms.append(f"{sign} {body}")
        return " ".join(terms)


class PrimeEvaluation(ImmutableModel):
    """Number of points of F_q^dim lying on no hyperplane of an arrangement."""

    q: int = Field(..., ge=2, description="Prime field size.")
    dim: int = Field(..., ge=0)
    count: int = Field(..., ge=0)

    @field_validator("q")
    @classmethod
    def ensure_prime(cls, v: int):
        if not sympy.isprime(v):
            raise ValueError(f"{v} is not prime")
        return v

    @model_validator(mode="after")
    def ensure_count_fits_space(self):
        if self.count > self.q**self.dim:
            raise ValueError(f"Count {self.count} exceeds {self.q}^{self.dim}")
        return self


__all__ = [
    "IntPolynomial",
    "PrimeEvaluation",
]
