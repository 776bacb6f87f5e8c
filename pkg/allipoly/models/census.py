"""
Pydantic models for the small-graph census.

This module defines:
- CatalogEntry: one isomorphism class with its alliance polynomial (a JSON-lines record)
- CollisionGroup: non-isomorphic graphs sharing one alliance polynomial
- CharacterizationVerdict / CharacterizationReport: uniqueness of family polynomials
- CensusSummary: per-order counts, collisions and verdicts of a census run
"""

from typing import Any, Dict, List
from pydantic import BaseModel, Field, model_validator

from allipoly.models.alliance import AlliancePolynomial


class CatalogEntry(BaseModel):
    """An isomorphism class of the catalog."""

    canonical: str = Field(..., description="Canonical form as graph6 text")
    order: int = Field(..., ge=1, description="Order n")
    polynomial: AlliancePolynomial = Field(..., description="Alliance polynomial")
    degree_sequence: List[int] = Field(..., description="Degrees, non-increasing")
    connected: bool = Field(..., description="Whether the graph is connected")

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def validate_fields(self) -> 'CatalogEntry':
        if self.polynomial.order != self.order:
            raise ValueError(f'polynomial order {self.polynomial.order} does not match entry order {self.order}')
        if len(self.degree_sequence) != self.order:
            raise ValueError(f'degree sequence has {len(self.degree_sequence)} entries for order {self.order}')
        if self.degree_sequence != sorted(self.degree_sequence, reverse=True):
            raise ValueError('degree sequence must be non-increasing')
        return self

    def to_json_dict(self) -> Dict[str, Any]:
        """Record {"g6", "n", "poly", "degseq", "connected"}."""
        return {
            "g6": self.canonical,
            "n": self.order,
            "poly": self.polynomial.to_json_dict()["coeffs"],
            "degseq": list(self.degree_sequence),
            "connected": self.connected,
        }

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any]) -> 'CatalogEntry':
        """Inverse of to_json_dict."""
        order = int(data["n"])
        return cls(
            canonical=str(data["g6"]),
            order=order,
            polynomial=AlliancePolynomial.from_json_dict({"n": order, "coeffs": data["poly"]}),
            degree_sequence=[int(d) for d in data["degseq"]],
            connected=bool(data["connected"]),
        )


class CollisionGroup(BaseModel):
    """Catalog entries that share an alliance polynomial."""

    polynomial: AlliancePolynomial = Field(..., description="Shared polynomial, order included")
    members: List[str] = Field(..., description="Canonical forms of the colliding graphs")

    @model_validator(mode='after')
    def validate_fields(self) -> 'CollisionGroup':
        if len(self.members) < 2:
            raise ValueError('a collision needs at least two graphs')
        if len(set(self.members)) != len(self.members):
            raise ValueError('collision members must be pairwise non-isomorphic')
        return self


class CharacterizationVerdict(BaseModel):
    """Whether a family member's polynomial is attained by no other catalog graph."""

    family: str = Field(..., description="Family name")
    order: int = Field(..., description="Order of the family member")
    canonical: str = Field(..., description="Canonical form of the family member")
    passed: bool = Field(..., description="Whether the polynomial is unique in the catalog")
    others: List[str] = Field(default_factory=list, description="Other graphs sharing the polynomial")

    def render_text(self) -> str:
        """One line: family and order with PASS/FAIL."""
        line = f"{self.family} n={self.order}: {'PASS' if self.passed else 'FAIL'}"
        if self.others:
            line += f" (shared with {', '.join(self.others)})"
        return line


class CharacterizationReport(BaseModel):
    """All characterization verdicts of one catalog."""

    max_n: int = Field(..., description="Largest catalog order")
    verdicts: List[CharacterizationVerdict] = Field(default_factory=list, description="One verdict per family member")

    @property
    def all_passed(self) -> bool:
        """Check if every verdict passed."""
        return all(v.passed for v in self.verdicts)


class CensusSummary(BaseModel):
    """Outcome of a census run."""

    max_n: int = Field(..., description="Largest order enumerated")
    class_counts: Dict[int, int] = Field(..., description="Order -> number of isomorphism classes")
    entries: int = Field(..., description="Total catalog entries")
    collisions: List[CollisionGroup] = Field(default_factory=list, description="Collision groups found")
    characterizations: CharacterizationReport = Field(..., description="Family uniqueness verdicts")

    def to_json_dict(self) -> Dict[str, Any]:
        """JSON form of the summary."""
        return {
            "max_n": self.max_n,
            "class_counts": {str(n): c for n, c in sorted(self.class_counts.items())},
            "entries": self.entries,
            "collisions": [
                {"poly": group.polynomial.to_json_dict(), "members": group.members}
                for group in self.collisions
            ],
            "characterizations": [v.model_dump() for v in self.characterizations.verdicts],
            "all_characterizations_passed": self.characterizations.all_passed,
        }
