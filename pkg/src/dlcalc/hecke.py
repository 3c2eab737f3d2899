"""Finite Iwahori-Hecke algebra in the T-basis, its action on torus functions,
Kazhdan-Lusztig polynomials, and the Bernstein relation check.

Quadratic relation: T_i^2 = (v - 1) T_i + v.  T_i acts on TorusFunction by
D_i - 1, and T_w by composing along a reduced word with the leftmost letter
applied last, which makes the action a left module.
"""

from __future__ import annotations

from typing import Mapping, Sequence

from .laurent import ONE, V, ZERO, TorusFunction, VPolynomial
from .operators import apply_word, op_D
from .rootsys import RootSystem, RootSystemError, WeylElement

V_INV = VPolynomial.monomial(-1)


class HeckeElement:
    """Sum of c_w T_w, with c_w in Z[v, v^-1]; zero coefficients are dropped."""

    __slots__ = ("R", "terms")

    def __init__(self, R: RootSystem, terms: Mapping[WeylElement, object] | None = None):
        self.R = R
        self.terms: dict[WeylElement, VPolynomial] = {}
        for w, c in (terms or {}).items():
            R._check_member(w)
            self._add(w, VPolynomial.coerce(c))

    def _add(self, w: WeylElement, c: VPolynomial):
        new = self.terms.get(w, ZERO) + c
        if new:
            self.terms[w] = new
        else:
            self.terms.pop(w, None)

    @classmethod
    def basis(cls, R: RootSystem, w: WeylElement) -> "HeckeElement":
        return cls(R, {w: ONE})

    @classmethod
    def unit(cls, R: RootSystem) -> "HeckeElement":
        return cls.basis(R, R.identity)

    def _check(self, other: "HeckeElement"):
        if self.R != other.R:
            raise RootSystemError(f"mismatched systems {self.R} and {other.R}")

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.R == other.R and self.terms == other.terms

    def __add__(self, other):
        self._check(other)
        out = HeckeElement(self.R, self.terms)
        for w, c in other.terms.items():
            out._add(w, c)
        return out

    def __neg__(self):
        return HeckeElement(self.R, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "HeckeElement":
        c = VPolynomial.coerce(c)
        return HeckeElement(self.R, {w: a * c for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElement):
            return hecke_mul(self, other)
        if isinstance(other, (int, VPolynomial)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, VPolynomial)):
            return self.scale(other)
        return NotImplemented

    def coefficient(self, w: WeylElement) -> VPolynomial:
        return self.terms.get(w, ZERO)

    def items(self):
        R = self.R
        return sorted(self.terms.items(), key=lambda t: (t[0].length, R.reduced_word(t[0])))

    def __repr__(self):
        body = " + ".join(f"({c})*T{self.R.reduced_word(w)}" for w, c in self.items())
        return f"HeckeElement({body or '0'})"


def _left_T(R: RootSystem, i: int, a: HeckeElement) -> HeckeElement:
    """T_i * a."""
    out = HeckeElement(R)
    for x, c in a.terms.items():
        sx = R.smul(i, x)
        if sx.length > x.length:
            out._add(sx, c)
        else:
            out._add(x, c * (V - 1))
            out._add(sx, c * V)
    return out


def _left_T_inv(R: RootSystem, i: int, a: HeckeElement) -> HeckeElement:
    """T_i^-1 * a, using T_i^-1 = v^-1 T_i + (v^-1 - 1)."""
    return _left_T(R, i, a).scale(V_INV) + a.scale(V_INV - 1)


def hecke_mul(a: HeckeElement, b: HeckeElement) -> HeckeElement:
    a._check(b)
    R = a.R
    out = HeckeElement(R)
    for x, c in a.terms.items():
        prod = b
        for i in reversed(R.reduced_word(x)):
            prod = _left_T(R, i, prod)
        for w, d in prod.terms.items():
            out._add(w, c * d)
    return out


def hecke_inverse_basis(R: RootSystem, w: WeylElement) -> HeckeElement:
    """T_w^-1 in the T-basis."""
    out = HeckeElement.unit(R)
    # T_w = T_i1 ... T_ik, so T_w^-1 = T_ik^-1 ... T_i1^-1
    for i in R.reduced_word(w):
        out = _left_T_inv(R, i, out)
    return out


def bar_involution(a: HeckeElement) -> HeckeElement:
    """v -> v^-1 on coefficients and T_w -> (T_{w^-1})^-1."""
    R = a.R
    out = HeckeElement(R)
    for w, c in a.terms.items():
        img = hecke_inverse_basis(R, R.inverse(w))
        cb = c.bar()
        for x, d in img.terms.items():
            out._add(x, cb * d)
    return out


_KL_CACHE: dict = {}


def _kl_table(R: RootSystem) -> dict[WeylElement, dict[WeylElement, VPolynomial]]:
    """P_{u,w} for all u <= w, via the descent recursion on D_w = sum P_{u,w} T_u."""
    if R in _KL_CACHE:
        return _KL_CACHE[R]
    table: dict = {}
    for w in R.elements():
        if w.length == 0:
            table[w] = {w: ONE}
            continue
        s = R.left_descents(w)[0]
        vp = R.smul(s, w)
        Dvp = HeckeElement(R, table[vp])
        D = _left_T(R, s, Dvp) + Dvp
        for z, pz in table.items():
            gap = vp.length - z.length
            if gap <= 0 or gap % 2 == 0 or not R.is_left_descent(s, z):
                continue
            p = table[vp].get(z)
            if p is None:
                continue
            mu = p.to_dict().get((gap - 1) // 2, 0)
            if mu:
                shift = (w.length - z.length) // 2
                D = D - HeckeElement(R, pz).scale(VPolynomial.monomial(shift, mu))
        table[w] = dict(D.terms)
    _KL_CACHE[R] = table
    return table


def kl_polynomials(R: RootSystem, w: WeylElement) -> dict[WeylElement, VPolynomial]:
    R._check_member(w)
    return dict(_kl_table(R)[w])


def kl_element(R: RootSystem, w: WeylElement) -> HeckeElement:
    """D_w = v^{l(w)/2} C'_w = sum_u P_{u,w} T_u."""
    return HeckeElement(R, kl_polynomials(R, w))


def module_act(a: HeckeElement, f: TorusFunction) -> TorusFunction:
    R = a.R
    out = TorusFunction.zero(f.rank)
    for w, c in a.terms.items():
        out = out + apply_word(R, "T", R.reduced_word(w), f).scale(c)
    return out


def zeta_act(lam: Sequence[int], f: TorusFunction) -> TorusFunction:
    """zeta^lambda . f = z^-lambda f."""
    return f.shift(tuple(-x for x in lam))


def _geometric(R: RootSystem, i: int, k: int, rank: int) -> TorusFunction:
    # (1 - x^k) / (1 - x) with x = z^alpha_i, as a finite sum
    alpha = R.simple_roots[i - 1]
    exps = range(k) if k >= 0 else range(k, 0)
    sign = 1 if k >= 0 else -1
    out = TorusFunction.zero(rank)
    for j in exps:
        out = out + TorusFunction.monomial(tuple(j * a for a in alpha), sign)
    return out


def bernstein_residual(R: RootSystem, i: int, lam: Sequence[int],
                       mu: Sequence[int]) -> TorusFunction:
    """LHS - RHS of (T_i+1) zeta^lam - zeta^{s_i lam} (T_i+1)
    = ((v - zeta^-alpha_i) / (1 - zeta^-alpha_i)) (zeta^lam - zeta^{s_i lam})
    applied to z^mu.  Zero when the relation holds.
    """
    lam, mu = tuple(lam), tuple(mu)
    slam = R.reflect(i, lam)
    zmu = TorusFunction.monomial(mu)
    lhs = op_D(R, i, zeta_act(lam, zmu)) - zeta_act(slam, op_D(R, i, zmu))
    # zeta^lam - zeta^{s lam} multiplies by z^-lam (1 - z^{k alpha}), k = <lam, alpha^vee>
    k = lam[i - 1]
    alpha = R.simple_roots[i - 1]
    geo = _geometric(R, i, k, R.rank)
    factor = TorusFunction(R.rank, {R.zero: V, alpha: -1})
    rhs = (factor * geo).shift(tuple(m - l for m, l in zip(mu, lam)))
    return lhs - rhs
