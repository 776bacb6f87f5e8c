"""
Composition rules: disjoint unions and joins with complete/empty graphs.
"""

import logging
from collections import Counter
from math import comb
from typing import Optional, Sequence

from allipoly.core.errors import PolynomialError
from allipoly.models.alliance import AlliancePolynomial, JoinDecomposition
from allipoly.models.graph import Graph
from allipoly.models.polynomial import IntPolynomial
from allipoly.services.alliance.closed_forms import closed_form_complete
from allipoly.services.alliance.engine import alliance_polynomial
from allipoly.services.graphs.builders import join

logger = logging.getLogger(__name__)


def union_compose(parts: Sequence[AlliancePolynomial]) -> AlliancePolynomial:
    """A(G_1 ∪ ... ∪ G_r) = sum of x^(n - n_i) A(G_i), n = sum of n_i.

    Each part carries its own order n_i.

    Raises:
        PolynomialError: If no parts are given
    """
    if not parts:
        raise PolynomialError("union_compose needs at least one polynomial")

    n = sum(part.order for part in parts)
    total = parts[0].multiply_by_x_power(n - parts[0].order, n)
    for part in parts[1:]:
        total = total.add(part.multiply_by_x_power(n - part.order, n))
    return total


def tilde_A(m: int) -> IntPolynomial:
    """Ã_m(x) = sum over r = 0..m of C(m, r) x^min(2r, m+1)."""
    if m < 1:
        raise PolynomialError(f"tilde_A needs m >= 1, got {m}")
    terms: Counter = Counter()
    for r in range(m + 1):
        terms[min(2 * r, m + 1)] += comb(m, r)
    return IntPolynomial.from_terms(dict(terms))


def join_complete_empty(n: int, m: int) -> AlliancePolynomial:
    """A(K_n ⊎ E_m) = A(K_n) Ã_m(x) + m x^m."""
    if n < 1 or m < 1:
        raise PolynomialError(f"join_complete_empty needs n, m >= 1, got ({n}, {m})")
    product = closed_form_complete(n).as_int_polynomial() * tilde_A(m)
    result = product + IntPolynomial.from_terms({m: m})
    return AlliancePolynomial.from_exponents(n + m, result.terms())


def join_polynomial(
    g1: Graph,
    g2: Graph,
    force: bool = False,
    threads: Optional[int] = None,
    processes: bool = True,
    first: Optional[AlliancePolynomial] = None,
) -> JoinDecomposition:
    """Brute-force A(G1 ⊎ G2) together with the residual A(G1 ⊎ G2) - A(G1) - A(G2).

    A connected set inside one side keeps its exponent in the join, so the
    residual counts exactly the connected sets meeting both sides.
    A given first polynomial is used as A(G1) as is.
    """
    joined = alliance_polynomial(join(g1, g2), force=force, threads=threads, processes=processes)
    if first is None:
        first = alliance_polynomial(g1, force=force, processes=False)
    second = alliance_polynomial(g2, force=force, processes=False)

    residual = joined.as_int_polynomial() + IntPolynomial.from_terms(
        {e: -c for e, c in first.to_exponents().items()}
    ) + IntPolynomial.from_terms(
        {e: -c for e, c in second.to_exponents().items()}
    )
    logger.debug(f"Join of n={g1.order} and n={g2.order}: residual {residual.render_text()}")
    return JoinDecomposition(joined=joined, first=first, second=second, residual=residual)
