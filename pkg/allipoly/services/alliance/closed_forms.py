"""
Closed-form alliance polynomials of named graph families.

The polynomial families whose formulas are rational expressions in x
(complete graphs and complete graphs without an edge) are expanded exactly
with sympy; the others are sums of binomial terms accumulated by exponent.
"""

import logging
from collections import Counter
from math import comb
from typing import Callable, Dict, Optional

from sympy import Poly, symbols

from allipoly.core.errors import PolynomialError
from allipoly.models.alliance import AlliancePolynomial

logger = logging.getLogger(__name__)

x = symbols("x")


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise PolynomialError(message)


def _exact_quotient_by_x(numerator) -> Dict[int, int]:
    """Exponent -> coefficient of numerator / x, which must divide exactly."""
    quotient, remainder = Poly(numerator, x).div(Poly(x, x))
    if not remainder.is_zero:
        raise PolynomialError(f"{numerator} is not divisible by x")
    return {int(e): int(c) for (e,), c in quotient.as_dict().items()}


def closed_form_path(n: int) -> AlliancePolynomial:
    """(n-2)x^(n-2) + 2x^(n-1) + ((n-2)(n+1)/2)x^n + x^(n+1)."""
    _require(n >= 2, f"path closed form needs n >= 2, got {n}")
    terms: Counter = Counter()
    terms[n - 2] += n - 2
    terms[n - 1] += 2
    terms[n] += (n - 2) * (n + 1) // 2
    terms[n + 1] += 1
    return AlliancePolynomial.from_exponents(n, dict(terms))


def closed_form_cycle(n: int) -> AlliancePolynomial:
    """n x^(n-2) + n(n-2) x^n + x^(n+2)."""
    _require(n >= 3, f"cycle closed form needs n >= 3, got {n}")
    return AlliancePolynomial.from_exponents(n, {n - 2: n, n: n * (n - 2), n + 2: 1})


def closed_form_complete(n: int) -> AlliancePolynomial:
    """((x^2 + 1)^n - 1) / x."""
    _require(n >= 1, f"complete closed form needs n >= 1, got {n}")
    return AlliancePolynomial.from_exponents(n, _exact_quotient_by_x((x**2 + 1) ** n - 1))


def closed_form_complete_minus_edge(n: int) -> AlliancePolynomial:
    """((x^2+1)^n - (x^4-x^3)(x^2+1)^(n-2) + x^3 - 2x^2 - 1) / x."""
    _require(n >= 2, f"complete minus edge closed form needs n >= 2, got {n}")
    numerator = (x**2 + 1) ** n - (x**4 - x**3) * (x**2 + 1) ** (n - 2) + x**3 - 2 * x**2 - 1
    return AlliancePolynomial.from_exponents(n, _exact_quotient_by_x(numerator))


def closed_form_complete_bipartite(n: int, m: int) -> AlliancePolynomial:
    """n x^n + m x^m + sum over i, j >= 1 of C(n,i) C(m,j) x^(n+m+min(2i-n, 2j-m))."""
    _require(n >= 1 and m >= 1, f"complete bipartite closed form needs n, m >= 1, got ({n}, {m})")
    terms: Counter = Counter()
    terms[n] += n
    terms[m] += m
    for i in range(1, n + 1):
        for j in range(1, m + 1):
            terms[n + m + min(2 * i - n, 2 * j - m)] += comb(n, i) * comb(m, j)
    return AlliancePolynomial.from_exponents(n + m, dict(terms))


def closed_form_star(n: int) -> AlliancePolynomial:
    """Star S_n: leaf subsets, leaves alone, and the center with at least half the leaves."""
    _require(n >= 2, f"star closed form needs n >= 2, got {n}")
    terms: Counter = Counter()
    for k in range(0, (n - 1) // 2 + 1):
        terms[2 * k + 1] += comb(n - 1, k)
    terms[n - 1] += n - 1
    terms[n + 1] += sum(comb(n - 1, k) for k in range((n + 1) // 2, n))
    return AlliancePolynomial.from_exponents(n, dict(terms))


def closed_form_empty(n: int) -> AlliancePolynomial:
    """n x^n."""
    _require(n >= 1, f"empty closed form needs n >= 1, got {n}")
    return AlliancePolynomial.from_exponents(n, {n: n})


_SINGLE_PARAMETER: Dict[str, Callable[[int], AlliancePolynomial]] = {
    "path": closed_form_path,
    "cycle": closed_form_cycle,
    "complete": closed_form_complete,
    "empty": closed_form_empty,
    "star": closed_form_star,
    "complete-minus-edge": closed_form_complete_minus_edge,
}


def closed_form(family: str, n: int, m: Optional[int] = None) -> AlliancePolynomial:
    """Closed form by family name; "complete-bipartite" also needs m.

    Raises:
        PolynomialError: On an unknown family or a parameter below its bound
    """
    if family == "complete-bipartite":
        if m is None:
            raise PolynomialError("complete-bipartite needs both n and m")
        result = closed_form_complete_bipartite(n, m)
    elif family in _SINGLE_PARAMETER:
        result = _SINGLE_PARAMETER[family](n)
    else:
        known = ", ".join(sorted([*_SINGLE_PARAMETER, "complete-bipartite"]))
        raise PolynomialError(f"Unknown family {family!r}; expected one of {known}")

    logger.debug(f"Closed form {family} n={n} m={m}: {result.render_text()}")
    return result
