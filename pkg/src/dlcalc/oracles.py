"""Independent reference computations used to check the operator calculus.

Nothing here calls the divided-difference operators: characters come from the
Weyl character formula by exact polynomial division, dimensions from the Weyl
dimension formula, and L'_i from its defining quotient.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .laurent import V, TorusFunction, VPolynomial, _addto
from .rootsys import RootSystem


def divide_by_binomial(f: TorusFunction, beta: Sequence[int], c: int = 1) -> TorusFunction:
    """Exact quotient f / (1 - c z^beta) for c = +-1 and beta != 0.

    Terms are grouped along beta-strings; each string is a Laurent polynomial
    in x = z^beta divided by 1 - c x via synthetic division from the top.
    Raises ValueError if the division is not exact.
    """
    beta = tuple(beta)
    j = next(k for k, b in enumerate(beta) if b)
    strings: dict = {}
    for mu, coeff in f.terms.items():
        n = mu[j] // beta[j]
        base = tuple(m - n * b for m, b in zip(mu, beta))
        strings.setdefault(base, {})[n] = coeff
    terms: dict = {}
    zero = VPolynomial()
    for base, poly in strings.items():
        lo, hi = min(poly), max(poly)
        # x^n coefficient of f is q_n - c q_{n-1}; q vanishes above hi - 1
        qn = zero
        for n in range(hi, lo - 1, -1):
            prev = (qn - poly.get(n, zero)) * c
            if n - 1 < lo:
                if prev:
                    raise ValueError(f"not divisible by 1 - ({c}) z^{beta}")
                break
            if prev:
                _addto(terms, tuple(b + (n - 1) * x for b, x in zip(base, beta)), prev)
            qn = prev
    return TorusFunction._raw(f.rank, terms)


def weyl_character(R: RootSystem, lam: Sequence[int]) -> TorusFunction:
    """Character of the irreducible module of highest weight lam.

    Alternating sum over W of z^{w(lam+rho)} divided by the Weyl denominator
    z^rho prod_{alpha > 0} (1 - z^-alpha).
    """
    lam = tuple(lam)
    shifted = tuple(a + b for a, b in zip(lam, R.rho))
    num = TorusFunction.zero(R.rank)
    for w in R.elements():
        num = num + TorusFunction.monomial(w.apply(shifted), -1 if w.length % 2 else 1)
    num = num.shift(tuple(-x for x in R.rho))
    for root in R.positive_roots:
        neg = tuple(-x for x in R.root_to_weight(root))
        num = divide_by_binomial(num, neg)
    return num


def weyl_dimension(R: RootSystem, lam: Sequence[int]) -> int:
    """prod over positive coroots of <lam + rho, a^vee> / <rho, a^vee>."""
    shifted = tuple(a + b for a, b in zip(lam, R.rho))
    out = Fraction(1)
    for c in R.positive_coroots:
        out *= Fraction(R.pair_coroot(shifted, c), R.pair_coroot(R.rho, c))
    assert out.denominator == 1
    return int(out)


def lusztig_direct(R: RootSystem, i: int, lam: Sequence[int]) -> TorusFunction:
    """L'_i z^lam from the quotient

        (-v z^lam - z^{alpha + s lam} + v z^{s lam} + z^lam) / (z^alpha - 1).
    """
    lam = tuple(lam)
    alpha = R.simple_roots[i - 1]
    slam = R.reflect(i, lam)
    num = TorusFunction(R.rank)
    num = num + TorusFunction.monomial(lam, 1 - V)
    num = num + TorusFunction.monomial(slam, V)
    num = num - TorusFunction.monomial(tuple(a + s for a, s in zip(alpha, slam)))
    # z^alpha - 1 = -(1 - z^alpha)
    return -divide_by_binomial(num, alpha)
