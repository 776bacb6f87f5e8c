"""
Pydantic models for simple undirected graphs and vertex subsets.

This module defines:
- Graph: order plus one neighbor bit pattern per vertex (bit u of adjacency[v] set iff u ~ v)
- VertexSet: a subset of a graph's vertex range as a bit pattern
"""

from typing import Iterator, List, Tuple
from pydantic import BaseModel, Field, model_validator


class Graph(BaseModel):
    """Simple undirected graph over vertices 0..order-1, immutable after construction."""

    order: int = Field(..., ge=0, description="Number of vertices n")
    adjacency: Tuple[int, ...] = Field(..., description="Per-vertex neighbor bit pattern")

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def validate_fields(self) -> 'Graph':
        if len(self.adjacency) != self.order:
            raise ValueError(f'adjacency has {len(self.adjacency)} rows for order {self.order}')

        full = (1 << self.order) - 1
        for v, row in enumerate(self.adjacency):
            if row < 0 or row & ~full:
                raise ValueError(f'vertex {v} has neighbors outside 0..{self.order - 1}')
            if row >> v & 1:
                raise ValueError(f'self-loop at vertex {v}')
            for u in iter_bits(row):
                if not self.adjacency[u] >> v & 1:
                    raise ValueError(f'adjacency is not symmetric for edge ({v}, {u})')

        return self

    @property
    def size(self) -> int:
        """Number of edges m."""
        return sum(row.bit_count() for row in self.adjacency) // 2

    @property
    def full_mask(self) -> int:
        """Bit pattern with every vertex set."""
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        """Check if u ~ v."""
        return bool(self.adjacency[u] >> v & 1)

    def edges(self) -> List[Tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, sorted."""
        result: List[Tuple[int, int]] = []
        for u in range(self.order):
            for offset in iter_bits(self.adjacency[u] >> (u + 1)):
                result.append((u, u + 1 + offset))
        return result

    def __str__(self) -> str:
        return f"Graph(n={self.order}, m={self.size})"


class VertexSet(BaseModel):
    """Subset of a graph's vertex range represented as a bit pattern."""

    bits: int = Field(..., ge=0, description="Membership bit pattern")
    universe: int = Field(..., ge=0, description="Order of the graph the set refers to")

    model_config = {"frozen": True}

    @model_validator(mode='after')
    def validate_fields(self) -> 'VertexSet':
        if self.bits >> self.universe:
            raise ValueError(f'vertex set has members outside 0..{self.universe - 1}')
        return self

    @classmethod
    def from_members(cls, universe: int, members: List[int]) -> 'VertexSet':
        """Create a VertexSet from an explicit list of vertices."""
        bits = 0
        for v in members:
            if not 0 <= v < universe:
                raise ValueError(f'vertex {v} outside 0..{universe - 1}')
            bits |= 1 << v
        return cls(bits=bits, universe=universe)

    @classmethod
    def full(cls, universe: int) -> 'VertexSet':
        """The whole vertex range."""
        return cls(bits=(1 << universe) - 1, universe=universe)

    def complement(self) -> 'VertexSet':
        """Vertices of the universe not in this set."""
        return VertexSet(bits=~self.bits & ((1 << self.universe) - 1), universe=self.universe)

    def contains(self, v: int) -> bool:
        """Check if v is a member."""
        return bool(self.bits >> v & 1)

    def is_empty(self) -> bool:
        """Check if the set has no members."""
        return self.bits == 0

    def members(self) -> List[int]:
        """Members in increasing order."""
        return list(iter_bits(self.bits))

    def cardinality(self) -> int:
        """Number of members |S|."""
        return self.bits.bit_count()


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the indices of set bits in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low
