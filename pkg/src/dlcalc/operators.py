"""Demazure and Demazure-Lusztig operators on the weight-lattice group algebra.

All operators act on exponents: the simple reflection s_i sends z^mu to
z^(s_i mu).  Words are composed outermost-first, so ``apply_word(fam, [i, j],
f)`` is ``op_i(op_j(f))``.
"""

from __future__ import annotations

from typing import Callable, Sequence

from .laurent import ONE, V, TorusFunction, _addto
from .rootsys import RootSystem, WeylElement


def _neg_alpha(R: RootSystem, i: int):
    return tuple(-a for a in R.simple_roots[i - 1])


def demazure(R: RootSystem, i: int, f: TorusFunction) -> TorusFunction:
    """Divided difference (f - z^-alpha_i s_i f) / (1 - z^-alpha_i).

    On z^mu with k = <mu, alpha_i^vee> this is the geometric sum
    z^mu + z^(mu - alpha) + ... + z^(mu - k alpha) for k >= 0, zero for
    k = -1, and minus the sum of z^(mu + j alpha), 1 <= j <= -k-1, otherwise.
    """
    R._check_index(i)
    alpha = R.simple_roots[i - 1]
    terms: dict = {}
    for mu, c in f.terms.items():
        k = mu[i - 1]
        if k >= 0:
            for j in range(k + 1):
                _addto(terms, tuple(m - j * a for m, a in zip(mu, alpha)), c)
        elif k <= -2:
            for j in range(1, -k):
                _addto(terms, tuple(m + j * a for m, a in zip(mu, alpha)), -c)
    return TorusFunction._raw(f.rank, terms)


def demazure_prime(R: RootSystem, i: int, f: TorusFunction) -> TorusFunction:
    """(f - z^alpha_i s_i f) / (1 - z^alpha_i), computed as theta d_i theta."""
    return demazure(R, i, f.invert_z()).invert_z()


def op_D(R: RootSystem, i: int, f: TorusFunction) -> TorusFunction:
    g = demazure(R, i, f)
    return g - g.shift(_neg_alpha(R, i)).scale(V)


def op_T(R: RootSystem, i: int, f: TorusFunction) -> TorusFunction:
    return op_D(R, i, f) - f


def op_D_prime(R: RootSystem, i: int, f: TorusFunction) -> TorusFunction:
    g = demazure_prime(R, i, f)
    return g - g.shift(R.simple_roots[i - 1]).scale(V)


def op_T_prime(R: RootSystem, i: int, f: TorusFunction) -> TorusFunction:
    return op_D_prime(R, i, f) - f


def lusztig_op(R: RootSystem, i: int, f: TorusFunction) -> TorusFunction:
    """Demazure-Lusztig operator L'_i = zeta^-rho (D_i - 1) zeta^rho.

    zeta^lambda multiplies by z^-lambda, so this is z^rho * T_i(z^-rho * f).
    """
    neg_rho = tuple(-x for x in R.rho)
    return op_T(R, i, f.shift(neg_rho)).shift(R.rho)


def s_twist(R: RootSystem, i: int, f: TorusFunction) -> TorusFunction:
    return f.map_weights(lambda mu: R.reflect(i, mu))


FAMILIES: dict[str, Callable[[RootSystem, int, TorusFunction], TorusFunction]] = {
    "partial": demazure,
    "partial_prime": demazure_prime,
    "D": op_D,
    "D_prime": op_D_prime,
    "T": op_T,
    "T_prime": op_T_prime,
    "L_prime": lusztig_op,
}


def apply_word(R: RootSystem, family: str, word: Sequence[int],
               f: TorusFunction) -> TorusFunction:
    try:
        op = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown operator family {family!r}; "
                         f"choose from {sorted(FAMILIES)}") from None
    for i in reversed(list(word)):
        f = op(R, i, f)
    return f


def demazure_character(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> TorusFunction:
    if not R.is_dominant(lam):
        raise ValueError(f"weight {tuple(lam)} is not dominant")
    return apply_word(R, "partial", R.reduced_word(w), TorusFunction.monomial(lam, ONE))
