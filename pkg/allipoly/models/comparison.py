"""
Pydantic models for the classical comparison polynomials and their reports.

This module defines:
- CountVector: subset counts by size (matchings, independent sets, dominating sets)
- PolynomialComparison: equality verdict of one polynomial on two graphs
- DistinguishingItem / DistinguishingReport: fixture-pair results of the distinguishing suite
"""

from typing import Any, Dict, List, Optional
from pydantic import BaseModel, Field, model_validator

from allipoly.models.polynomial import IntPolynomial, Number


class CountVector(BaseModel):
    """Exact counts indexed by subset size, trailing zeros trimmed."""

    counts: List[int] = Field(..., description="counts[k] = number of qualifying subsets of size k")

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def validate_fields(self) -> 'CountVector':
        if not self.counts:
            raise ValueError('count vector must have at least one entry')
        if any(c < 0 for c in self.counts):
            raise ValueError('counts must be non-negative')
        if len(self.counts) > 1 and self.counts[-1] == 0:
            raise ValueError('trailing zero counts must be trimmed')
        return self

    @classmethod
    def from_counts(cls, counts: List[int]) -> 'CountVector':
        """Create a vector, trimming trailing zeros."""
        trimmed = list(counts)
        while len(trimmed) > 1 and trimmed[-1] == 0:
            trimmed.pop()
        return cls(counts=trimmed or [0])

    def as_polynomial(self) -> IntPolynomial:
        """Generating polynomial sum counts[k] x^k."""
        return IntPolynomial.from_coefficients(self.counts)

    def evaluate(self, x: Number) -> Number:
        """Value of the generating polynomial."""
        return self.as_polynomial().evaluate(x)

    def render_text(self) -> str:
        """Generating polynomial as text."""
        return self.as_polynomial().render_text()


class PolynomialComparison(BaseModel):
    """One polynomial evaluated on two graphs."""

    polynomial: str = Field(..., description="Polynomial name")
    first: str = Field(..., description="Rendering for the first graph")
    second: str = Field(..., description="Rendering for the second graph")
    equal: bool = Field(..., description="Whether the two polynomials are identical")

    def render_text(self) -> str:
        """One line: "name: EQUAL" or "name: UNEQUAL"."""
        return f"{self.polynomial}: {'EQUAL' if self.equal else 'UNEQUAL'}"


class DistinguishingItem(BaseModel):
    """A fixture pair sharing a classical polynomial but not the alliance polynomial."""

    item: int = Field(..., ge=1, le=7, description="Item number of the distinguishing result")
    polynomial: str = Field(..., description="Classical polynomial compared")
    fixtures: List[str] = Field(..., description="Identifiers of the two fixture graphs")
    classical: Optional[PolynomialComparison] = Field(None, description="Classical comparison; None when skipped")
    alliance: PolynomialComparison = Field(..., description="Alliance polynomial comparison")
    skipped: Optional[str] = Field(None, description="Reason the classical side was not computed")
    details: Dict[str, Any] = Field(default_factory=dict, description="Extra witnesses")

    @property
    def verified(self) -> bool:
        """Classical side equal (or skipped) and alliance side unequal."""
        classical_ok = self.classical is None or self.classical.equal
        return bool(classical_ok and not self.alliance.equal and self.details.get("pivot_independent", True))

    def render_text(self) -> str:
        """One line summarising the item."""
        classical = "SKIPPED" if self.classical is None else ("EQUAL" if self.classical.equal else "UNEQUAL")
        alliance = "EQUAL" if self.alliance.equal else "UNEQUAL"
        verdict = "VERIFIED" if self.verified else "FAILED"
        return f"({self.item}) {' vs '.join(self.fixtures)}: {self.polynomial} {classical}; alliance {alliance} -> {verdict}"


class DistinguishingReport(BaseModel):
    """All items of the distinguishing suite."""

    items: List[DistinguishingItem] = Field(default_factory=list, description="Items in numeric order")

    @property
    def all_verified(self) -> bool:
        """Check if every item was verified."""
        return all(item.verified for item in self.items)

    def to_json_dict(self) -> Dict[str, Any]:
        """JSON form with each item's comparisons and verdict."""
        return {
            "items": [
                {**item.model_dump(), "verified": item.verified}
                for item in self.items
            ],
            "all_verified": self.all_verified,
        }
