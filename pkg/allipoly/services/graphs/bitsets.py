"""
Bit-pattern primitives over adjacency rows.

These work on the raw ``Tuple[int, ...]`` adjacency of a Graph so the hot loops
of the enumerations avoid model overhead. A subset is an int whose bit v is set
iff vertex v belongs to it.
"""

from typing import List, Sequence


def reach_within(adjacency: Sequence[int], start: int, subset: int) -> int:
    """Vertices of ``subset`` reachable from the ``start`` bits inside ``subset``."""
    reached = start & subset
    frontier = reached
    while frontier:
        grown = 0
        while frontier:
            low = frontier & -frontier
            grown |= adjacency[low.bit_length() - 1]
            frontier ^= low
        frontier = grown & subset & ~reached
        reached |= frontier
    return reached


def is_connected_subset(adjacency: Sequence[int], subset: int) -> bool:
    """True iff the nonempty ``subset`` induces a connected subgraph."""
    return reach_within(adjacency, subset & -subset, subset) == subset


def component_masks(adjacency: Sequence[int], subset: int) -> List[int]:
    """Connected components of the subgraph induced by ``subset``, lowest vertex first."""
    components: List[int] = []
    rest = subset
    while rest:
        component = reach_within(adjacency, rest & -rest, rest)
        components.append(component)
        rest &= ~component
    return components


def component_count(adjacency: Sequence[int], subset: int) -> int:
    """Number of connected components induced by ``subset`` (0 for the empty set)."""
    count = 0
    rest = subset
    while rest:
        rest &= ~reach_within(adjacency, rest & -rest, rest)
        count += 1
    return count
