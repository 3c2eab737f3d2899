"""Iwahori-Whittaker basis polynomials X_w, Y_w, Bott-Samelson invariants Z,
the Kazhdan-Lusztig variant C_w, and their specializations.

Two independent routes to X_w are provided: the Hecke route
X_w = sum_{u <= w} T_u . z^lambda and the correction-term recursion
X_{sw} = D_s X_w - v sum_u c_{w,s}(u) X_u.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Optional, Sequence

from .hecke import HeckeElement, kl_polynomials, module_act
from .laurent import ONE, V, TorusFunction, VPolynomial
from .operators import apply_word, demazure_character, op_D, op_T
from .rootsys import RootSystem, WeylElement
from .schubert import _require_ascent, correction_coeffs


class DominanceError(ValueError):
    pass


def _dominant(R: RootSystem, lam: Sequence[int]) -> tuple[int, ...]:
    lam = tuple(lam)
    if len(lam) != R.rank:
        raise DominanceError(f"weight {lam} has wrong length for rank {R.rank}")
    if not R.is_dominant(lam):
        raise DominanceError(f"weight {lam} is not dominant")
    return lam


@lru_cache(maxsize=None)
def _y_table(R: RootSystem, lam: tuple[int, ...]) -> dict[WeylElement, TorusFunction]:
    # T_w = T_s T_{sw} for s the first letter of w
    table = {}
    for w in R.elements():
        if w.length == 0:
            table[w] = TorusFunction.monomial(lam)
        else:
            s = R.left_descents(w)[0]
            table[w] = op_T(R, s, table[R.smul(s, w)])
    return table


@lru_cache(maxsize=None)
def _x_table(R: RootSystem, lam: tuple[int, ...]) -> dict[WeylElement, TorusFunction]:
    Y = _y_table(R, lam)
    return {w: sum((Y[u] for u in R.interval_below(w)), TorusFunction.zero(R.rank))
            for w in R.elements()}


def y_basis(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> TorusFunction:
    """Y_w(lambda) = T_w . z^lambda."""
    lam = _dominant(R, lam)
    R._check_member(w)
    return _y_table(R, lam)[w]


def x_basis_hecke(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> TorusFunction:
    """X_w(lambda) = sum over u <= w of T_u . z^lambda."""
    lam = _dominant(R, lam)
    R._check_member(w)
    return _x_table(R, lam)[w]


AscentChooser = Callable[[WeylElement, list[int]], int]


def x_table_recursive(R: RootSystem, lam: Sequence[int],
                      choose: Optional[AscentChooser] = None) -> dict[WeylElement, TorusFunction]:
    """All X_w by dynamic programming over W in length order.

    Each x != e is written as s w with s a left descent of x; ``choose``
    picks s from the list of left descents (default: the smallest index).
    """
    lam = _dominant(R, lam)
    X: dict[WeylElement, TorusFunction] = {}
    for x in R.elements():
        if x.length == 0:
            X[x] = TorusFunction.monomial(lam)
            continue
        descents = R.left_descents(x)
        s = choose(x, descents) if choose else descents[0]
        w = R.smul(s, x)
        val = op_D(R, s, X[w])
        for u, c in correction_coeffs(R, w, s).items():
            val = val - X[u].scale(V * c)
        X[x] = val
    return X


@lru_cache(maxsize=None)
def _x_recursive_default(R: RootSystem, lam: tuple[int, ...]):
    return x_table_recursive(R, lam)


def x_basis_recursive(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> TorusFunction:
    lam = _dominant(R, lam)
    R._check_member(w)
    return _x_recursive_default(R, lam)[w]


def z_word(R: RootSystem, word: Sequence[int], lam: Sequence[int]) -> TorusFunction:
    """Bott-Samelson invariant D_{h1} ... D_{hd} z^lambda (any word)."""
    lam = _dominant(R, lam)
    return apply_word(R, "D", word, TorusFunction.monomial(lam))


def z_partial(R: RootSystem, s: int, w: WeylElement, lam: Sequence[int]) -> TorusFunction:
    """Z_{s,w} = D_s X_w for s a left ascent of w."""
    _require_ascent(R, s, w)
    return op_D(R, s, x_basis_recursive(R, w, lam))


def dot(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> tuple[int, ...]:
    """The shifted action w(lambda + rho) - rho."""
    shifted = tuple(a + b for a, b in zip(lam, R.rho))
    return tuple(a - b for a, b in zip(w.apply(shifted), R.rho))


def leading_coefficient(R: RootSystem, w: WeylElement):
    """Coefficient (-v)^l(w) of z^{w(lambda+rho)-rho} in Y_w(lambda)."""
    return VPolynomial.monomial(w.length, -1 if w.length % 2 else 1)


def correction_from_residue(R: RootSystem, s: int, w: WeylElement,
                            lam: Sequence[int]) -> dict[WeylElement, int]:
    """Read off integers c(u) with Z_{s,w} - X_{sw} = v sum_u c(u) X_u.

    X comes from the Hecke route.  The monomial z^{u(lambda+rho)-rho} occurs
    only in Y_u, with coefficient (-v)^l(u), hence only in the X_x with x >= u.
    Peeling from the longest elements down therefore reads off each c(u);
    the remainder must vanish.  Raises ValueError otherwise.
    """
    lam = _dominant(R, lam)
    _require_ascent(R, s, w)
    X = _x_table(R, lam)
    residue = op_D(R, s, X[w]) - X[R.smul(s, w)]
    rest = residue.map_coeffs(_divide_by_v)
    out = {}
    for u in reversed(R.elements()):
        c = rest.coefficient(dot(R, u, lam))
        if not c:
            continue
        # divide by the unit (-v)^l(u)
        n = c.shift(-u.length) * (-1 if u.length % 2 else 1)
        if not n.is_constant():
            raise ValueError(f"non-integer coefficient {n} at {R.reduced_word(u)}")
        out[u] = n.constant_value()
        rest = rest - X[u].scale(n)
    if rest:
        raise ValueError("residue is not an integer combination of the X_u")
    return out


def _divide_by_v(c):
    if c and c.lo < 1:
        raise ValueError(f"residue coefficient {c} is not divisible by v")
    return c.shift(-1)


def check_v0(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> bool:
    """X_w at v = 0 equals the Demazure character."""
    lam = _dominant(R, lam)
    lhs = x_basis_hecke(R, w, lam).specialize_v(0)
    rhs = demazure_character(R, w, lam).specialize_v(0)
    return lhs == rhs


def permutahedron_sum(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> TorusFunction:
    """sum over u <= w of (-1)^l(u) z^{u(rho + lambda) - rho}."""
    out = TorusFunction.zero(R.rank)
    for u in R.interval_below(w):
        out = out + TorusFunction.monomial(dot(R, u, lam), -1 if u.length % 2 else 1)
    return out


def check_v1(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> bool:
    lam = _dominant(R, lam)
    return (x_basis_hecke(R, w, lam).specialize_v(1)
            == permutahedron_sum(R, w, lam).specialize_v(1))


def c_basis(R: RootSystem, w: WeylElement, lam: Sequence[int]) -> TorusFunction:
    """C_w(lambda) = sum_u P_{u,w}(v) T_u . z^lambda."""
    lam = _dominant(R, lam)
    return module_act(HeckeElement(R, kl_polynomials(R, w)), TorusFunction.monomial(lam))


def kl_trivial(R: RootSystem, w: WeylElement) -> bool:
    return all(p == ONE for p in kl_polynomials(R, w).values())


def smoothness_census(R: RootSystem, lam: Sequence[int]) -> dict[WeylElement, bool]:
    """Per element, whether X_w(lambda) = C_w(lambda).

    Raises ValueError if the flag disagrees anywhere with the KL criterion
    (all P_{u,w} = 1).
    """
    lam = _dominant(R, lam)
    if not R.is_regular_dominant(lam):
        raise DominanceError(f"weight {lam} is not regular")
    out = {}
    for w in R.elements():
        flag = x_basis_hecke(R, w, lam) == c_basis(R, w, lam)
        if flag != kl_trivial(R, w):
            raise ValueError(f"X = C disagrees with KL criterion at {R.reduced_word(w)}")
        out[w] = flag
    return out
