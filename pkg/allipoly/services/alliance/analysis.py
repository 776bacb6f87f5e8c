"""
Evaluation and shape properties of alliance polynomials.

All functions are pure and exact: evaluation accepts ints or Fractions.
"""

from fractions import Fraction
from typing import Dict, List

from allipoly.core.errors import PolynomialError
from allipoly.models.alliance import AlliancePolynomial
from allipoly.models.graph import Graph
from allipoly.models.polynomial import Number


def parse_rational(text: str) -> Number:
    """Parse "p/q" or an integer into an exact value.

    Raises:
        PolynomialError: If the text is not a rational number
    """
    try:
        value = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise PolynomialError(f"Not a rational number: {text!r}") from e
    return value.numerator if value.denominator == 1 else value


def evaluate(p: AlliancePolynomial, x: Number) -> Number:
    """A(G;x) at an exact point."""
    value = p.evaluate(x)
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


def connected_count(p: AlliancePolynomial) -> int:
    """A(G;1): the number of connected induced subgraphs."""
    return p.total()


def cut_set_count(p: AlliancePolynomial) -> int:
    """Number of cut vertex sets, 2^n - 1 - A(G;1)."""
    return (1 << p.order) - 1 - p.total()


def defensive_alliance_count(p: AlliancePolynomial, k: int) -> int:
    """Number of connected defensive k-alliances, the sum of A_i over i >= k."""
    return sum(c for index, c in p.coefficients.items() if index >= k)


def alliance_terms(p: AlliancePolynomial) -> Dict[int, int]:
    """Exponent view n + k -> A_k."""
    return p.to_exponents()


def degree(p: AlliancePolynomial) -> int:
    """Deg(p)."""
    return p.degree


def min_degree(p: AlliancePolynomial) -> int:
    """Deg_min(p)."""
    return p.min_degree


def zero_multiplicity_at_origin(p: AlliancePolynomial) -> int:
    """Multiplicity of 0 as a root, n - δ_1 for a graph polynomial."""
    return p.min_degree


def max_alliance_index(p: AlliancePolynomial) -> int:
    """Largest k with a connected defensive k-alliance, Deg(p) - n."""
    return p.degree - p.order


def nonzero_coefficients(p: AlliancePolynomial) -> List[int]:
    """Nonzero coefficients in increasing exponent order."""
    return [c for _, c in sorted(p.coefficients.items())]


def is_unimodal(p: AlliancePolynomial) -> bool:
    """Check if the nonzero coefficients rise to a mode and then fall."""
    sequence = nonzero_coefficients(p)
    peak = 0
    while peak + 1 < len(sequence) and sequence[peak] <= sequence[peak + 1]:
        peak += 1
    return all(sequence[i] >= sequence[i + 1] for i in range(peak, len(sequence) - 1))


def parity_symmetric(p: AlliancePolynomial) -> bool:
    """Check if every exponent with a nonzero coefficient has the same parity."""
    return len({(p.order + k) % 2 for k in p.coefficients}) <= 1


def distinct_degree_terms_present(graph: Graph, p: AlliancePolynomial) -> bool:
    """Check that x^(n - c) is present for every degree value c, and x^(n + δ_n) too.

    Singletons of degree c are exact (-c)-alliances; a component holding a
    minimum-degree vertex is an exact δ_n-alliance.
    """
    degrees = {row.bit_count() for row in graph.adjacency}
    if not degrees:
        return True
    exponents = p.to_exponents()
    wanted = {graph.order - c for c in degrees} | {graph.order + min(degrees)}
    return all(exponents.get(e, 0) > 0 for e in wanted)
