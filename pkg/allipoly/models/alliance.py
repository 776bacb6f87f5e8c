"""
Pydantic models for alliance polynomials and their derived reports.

This module defines:
- AlliancePolynomial: counts A_k keyed by alliance index k, plus the graph order n
- SizeCounts: connected induced subgraphs by order and cut vertex sets by size
- JoinDecomposition: a join polynomial split into its two sides and the residual
- InvariantCheck / InvariantReport: named pass/fail results with witnesses
"""

import json
from math import comb
from typing import Any, Dict, List, Optional, Tuple
from pydantic import BaseModel, Field, model_validator

from allipoly.models.polynomial import IntPolynomial, Number


class AlliancePolynomial(BaseModel):
    """Alliance polynomial A(G;x) = sum_k A_k x^(n+k) with exact counts."""

    order: int = Field(..., ge=1, description="Order n of the graph")
    coefficients: Dict[int, int] = Field(default_factory=dict, description="Alliance index k -> A_k (> 0)")

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def validate_fields(self) -> 'AlliancePolynomial':
        n = self.order
        for k, count in self.coefficients.items():
            if count <= 0:
                raise ValueError(f'coefficient A_{k} must be positive (zero terms are absent keys)')
            if not -n < k <= n - 1:
                raise ValueError(f'alliance index {k} outside ({-n}, {n - 1}] for order {n}')

        if sum(self.coefficients.values()) >= 1 << n:
            raise ValueError(f'A(G;1) must be below 2^{n}')

        return self

    def __hash__(self) -> int:
        return hash(self.key())

    @classmethod
    def from_exponents(cls, order: int, terms: Dict[int, int]) -> 'AlliancePolynomial':
        """Create from an exponent -> coefficient map; zero coefficients are dropped."""
        return cls(
            order=order,
            coefficients={e - order: c for e, c in terms.items() if c},
        )

    def key(self) -> Tuple[int, Tuple[Tuple[int, int], ...]]:
        """Hashable structural identity (order plus sorted coefficients)."""
        return self.order, tuple(sorted(self.coefficients.items()))

    def coefficient(self, k: int) -> int:
        """A_k, zero when absent."""
        return self.coefficients.get(k, 0)

    def to_exponents(self) -> Dict[int, int]:
        """Terms as exponent n+k -> A_k, sorted by exponent."""
        return {self.order + k: c for k, c in sorted(self.coefficients.items())}

    @property
    def degree(self) -> int:
        """Largest exponent with a nonzero coefficient (Deg)."""
        return self.order + max(self.coefficients)

    @property
    def min_degree(self) -> int:
        """Smallest exponent with a nonzero coefficient (Deg_min)."""
        return self.order + min(self.coefficients)

    def evaluate(self, x: Number) -> Number:
        """Exact value sum_k A_k x^(n+k)."""
        return sum((c * x ** e for e, c in self.to_exponents().items()), 0)

    def total(self) -> int:
        """Sum of all coefficients, A(G;1)."""
        return sum(self.coefficients.values())

    def as_int_polynomial(self) -> IntPolynomial:
        """Same polynomial as a dense IntPolynomial in x (the order is dropped)."""
        return IntPolynomial.from_terms(self.to_exponents())

    def multiply_by_x_power(self, power: int, order: int) -> 'AlliancePolynomial':
        """x^power times this polynomial, read as a polynomial of a graph of the given order."""
        return AlliancePolynomial.from_exponents(
            order,
            {e + power: c for e, c in self.to_exponents().items()},
        )

    def add(self, other: 'AlliancePolynomial') -> 'AlliancePolynomial':
        """Coefficient-wise sum of two polynomials of the same order."""
        if other.order != self.order:
            raise ValueError(f'cannot add polynomials of orders {self.order} and {other.order}')
        merged = dict(self.coefficients)
        for k, c in other.coefficients.items():
            merged[k] = merged.get(k, 0) + c
        return AlliancePolynomial(order=self.order, coefficients=merged)

    def render_text(self) -> str:
        """Terms in increasing exponent order, e.g. "6x^3 + 33x^5 + 15x^7 + x^9"."""
        parts: List[str] = []
        for e, c in self.to_exponents().items():
            power = "x" if e == 1 else f"x^{e}"
            parts.append(power if c == 1 else f"{c}{power}")
        return " + ".join(parts) if parts else "0"

    def to_json_dict(self) -> Dict[str, Any]:
        """JSON form {"n": n, "coeffs": {"k": A_k}} with k as signed decimal strings."""
        return {
            "n": self.order,
            "coeffs": {str(k): c for k, c in sorted(self.coefficients.items())},
        }

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any]) -> 'AlliancePolynomial':
        """Inverse of to_json_dict."""
        return cls(
            order=int(data["n"]),
            coefficients={int(k): int(c) for k, c in data["coeffs"].items()},
        )

    def to_json(self) -> str:
        """Compact JSON text of to_json_dict."""
        return json.dumps(self.to_json_dict(), separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> 'AlliancePolynomial':
        """Parse JSON text produced by to_json."""
        return cls.from_json_dict(json.loads(text))

    def __str__(self) -> str:
        return self.render_text()


class SizeCounts(BaseModel):
    """Connected induced subgraphs by order and cut vertex sets by cardinality."""

    order: int = Field(..., ge=1, description="Order n of the graph")
    connected: List[int] = Field(..., description="connected[r-1] = s_r, connected induced subgraphs on r vertices")
    cut_sets: List[int] = Field(..., description="cut_sets[j] = c_j, cut vertex sets of cardinality j")

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def validate_fields(self) -> 'SizeCounts':
        n = self.order
        if len(self.connected) != n or len(self.cut_sets) != n:
            raise ValueError(f'expected {n} entries in both count lists')
        for r in range(1, n + 1):
            if self.cut_sets[n - r] + self.connected[r - 1] != comb(n, r):
                raise ValueError(f'c_{n - r} + s_{r} must equal C({n}, {r})')
        return self

    def s(self, r: int) -> int:
        """Number of connected induced subgraphs with r vertices (1 <= r <= n)."""
        return self.connected[r - 1]

    def c(self, j: int) -> int:
        """Number of cut vertex sets of cardinality j (0 <= j < n)."""
        return self.cut_sets[j]

    def total_connected(self) -> int:
        """Sum of s_r, equal to A(G;1)."""
        return sum(self.connected)


class JoinDecomposition(BaseModel):
    """A(G1 ⊎ G2) split as A(G1) + A(G2) + residual."""

    joined: AlliancePolynomial = Field(..., description="A(G1 ⊎ G2;x)")
    first: AlliancePolynomial = Field(..., description="A(G1;x)")
    second: AlliancePolynomial = Field(..., description="A(G2;x)")
    residual: IntPolynomial = Field(..., description="Connected sets meeting both sides")

    model_config = {"frozen": True}


class InvariantCheck(BaseModel):
    """Result of one named structural check."""

    name: str = Field(..., description="Check identifier")
    passed: bool = Field(..., description="Whether the check held")
    witness: Dict[str, Any] = Field(default_factory=dict, description="Values supporting the verdict")

    def render_text(self) -> str:
        """One line: NAME PASS/FAIL plus witnesses."""
        verdict = "PASS" if self.passed else "FAIL"
        details = ", ".join(f"{k}={v}" for k, v in self.witness.items())
        return f"{self.name}: {verdict}" + (f" ({details})" if details else "")


class InvariantReport(BaseModel):
    """All structural checks evaluated on one (graph, polynomial) pair."""

    order: int = Field(..., description="Order of the checked graph")
    polynomial: AlliancePolynomial = Field(..., description="Polynomial the checks were evaluated on")
    checks: List[InvariantCheck] = Field(default_factory=list, description="Check results in evaluation order")

    @model_validator(mode='after')
    def validate_fields(self) -> 'InvariantReport':
        names = [check.name for check in self.checks]
        if len(names) != len(set(names)):
            raise ValueError('every check name must appear exactly once')
        return self

    @property
    def all_passed(self) -> bool:
        """Check if every check passed."""
        return all(check.passed for check in self.checks)

    def failed(self) -> List[InvariantCheck]:
        """Checks that did not hold."""
        return [check for check in self.checks if not check.passed]

    def get(self, name: str) -> Optional[InvariantCheck]:
        """Look up a check by name."""
        for check in self.checks:
            if check.name == name:
                return check
        return None
