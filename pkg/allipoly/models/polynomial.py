"""
Exact integer polynomials shared by the alliance and comparison services.

This module defines:
- IntPolynomial: dense univariate polynomial with signed integer coefficients
- BivariatePoly: sparse bivariate polynomial keyed by exponent pairs
"""

from fractions import Fraction
from typing import Dict, List, Tuple, Union
from pydantic import BaseModel, Field, model_validator

Number = Union[int, Fraction]


def _render_power(variable: str, exponent: int) -> str:
    if exponent == 0:
        return ""
    if exponent == 1:
        return variable
    return f"{variable}^{exponent}"


class IntPolynomial(BaseModel):
    """Univariate polynomial, constant term first; the zero polynomial is []."""

    coefficients: Tuple[int, ...] = Field(default=(), description="Dense coefficients, constant term first")

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def validate_fields(self) -> 'IntPolynomial':
        if self.coefficients and self.coefficients[-1] == 0:
            raise ValueError('leading coefficient must be nonzero (use from_coefficients to trim)')
        return self

    @classmethod
    def from_coefficients(cls, coefficients: List[int]) -> 'IntPolynomial':
        """Create a polynomial from a possibly zero-padded coefficient list."""
        trimmed = list(coefficients)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        return cls(coefficients=tuple(trimmed))

    @classmethod
    def from_terms(cls, terms: Dict[int, int]) -> 'IntPolynomial':
        """Create a polynomial from an exponent -> coefficient map."""
        if not terms:
            return cls()
        dense = [0] * (max(terms) + 1)
        for exponent, value in terms.items():
            if exponent < 0:
                raise ValueError(f'negative exponent {exponent}')
            dense[exponent] += value
        return cls.from_coefficients(dense)

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coefficients) - 1

    def is_zero(self) -> bool:
        """Check if this is the zero polynomial."""
        return not self.coefficients

    def terms(self) -> Dict[int, int]:
        """Nonzero terms as exponent -> coefficient."""
        return {e: c for e, c in enumerate(self.coefficients) if c}

    def evaluate(self, x: Number) -> Number:
        """Evaluate exactly by Horner's rule."""
        result: Number = 0
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    def __add__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        size = max(len(self.coefficients), len(other.coefficients))
        dense = [0] * size
        for i, c in enumerate(self.coefficients):
            dense[i] += c
        for i, c in enumerate(other.coefficients):
            dense[i] += c
        return IntPolynomial.from_coefficients(dense)

    def __mul__(self, other: 'IntPolynomial') -> 'IntPolynomial':
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        dense = [0] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, a in enumerate(self.coefficients):
            if a:
                for j, b in enumerate(other.coefficients):
                    dense[i + j] += a * b
        return IntPolynomial.from_coefficients(dense)

    def render_text(self, variable: str = "x") -> str:
        """Render terms in increasing exponent order, e.g. "1 + 2x^2 + x^3"."""
        if self.is_zero():
            return "0"
        parts: List[str] = []
        for exponent, c in self.terms().items():
            power = _render_power(variable, exponent)
            magnitude = abs(c)
            if not power:
                body = str(magnitude)
            elif magnitude == 1:
                body = power
            else:
                body = f"{magnitude}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render_text()


class BivariatePoly(BaseModel):
    """Sparse bivariate polynomial: (i, j) -> coefficient of x^i y^j."""

    coefficients: Dict[Tuple[int, int], int] = Field(default_factory=dict, description="Nonzero coefficients keyed by exponent pair")

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def validate_fields(self) -> 'BivariatePoly':
        for (i, j), c in self.coefficients.items():
            if c == 0:
                raise ValueError(f'zero coefficient stored at ({i}, {j})')
            if i < 0 or j < 0:
                raise ValueError(f'negative exponent pair ({i}, {j})')
        return self

    def __hash__(self) -> int:
        return hash(tuple(sorted(self.coefficients.items())))

    @classmethod
    def from_terms(cls, terms: Dict[Tuple[int, int], int]) -> 'BivariatePoly':
        """Create from a map that may contain zero coefficients."""
        return cls(coefficients={key: c for key, c in terms.items() if c})

    def coefficient(self, i: int, j: int) -> int:
        """Coefficient of x^i y^j."""
        return self.coefficients.get((i, j), 0)

    def evaluate(self, x: Number, y: Number) -> Number:
        """Evaluate exactly at (x, y)."""
        return sum((c * x ** i * y ** j for (i, j), c in self.coefficients.items()), 0)

    def render_text(self) -> str:
        """Render terms sorted by (i, j), e.g. "x + x^2 + y"."""
        if not self.coefficients:
            return "0"
        parts: List[str] = []
        for (i, j), c in sorted(self.coefficients.items()):
            power = _render_power("x", i) + _render_power("y", j)
            magnitude = abs(c)
            if not power:
                body = str(magnitude)
            elif magnitude == 1:
                body = power
            else:
                body = f"{magnitude}{power}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render_text()
