"""Correction-term combinatorics in the Bruhat order and fibers of partial
Bott-Samelson maps Z_{s,w} -> X_{sw}.

Fibers are represented only through their Euler characteristic, which is the
number of torus-fixed points: 1 for a point and 2 for a projective line.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .rootsys import RootSystem, RootSystemError, WeylElement


class AscentError(RootSystemError):
    pass


def _require_ascent(R: RootSystem, s: int, w: WeylElement):
    if R.is_left_descent(s, w):
        raise AscentError(f"s_{s} is a left descent of {R.reduced_word(w)}; need an ascent")


def _require_descent(R: RootSystem, s: int, w: WeylElement):
    if not R.is_left_descent(s, w):
        raise AscentError(f"s_{s} is a left ascent of {R.reduced_word(w)}; need a descent")


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def h_set(R: RootSystem, w: WeylElement, s: int) -> set[WeylElement]:
    """H(w, s) = {u : u <= w and s u <= w}, for s a left ascent of w."""
    _require_ascent(R, s, w)
    return {u for u in R.interval_below(w) if R.bruhat_leq(R.smul(s, u), w)}


def h_prime_set(R: RootSystem, w: WeylElement, s: int) -> set[WeylElement]:
    """H'(w, s) = {u : u >= w and s u >= w}, for s a left descent of w."""
    _require_descent(R, s, w)
    return {u for u in R.elements()
            if R.bruhat_leq(w, u) and R.bruhat_leq(w, R.smul(s, u))}


def maximal_elements(R: RootSystem, S) -> list[WeylElement]:
    return [u for u in S if not any(t != u and R.bruhat_leq(u, t) for t in S)]


def minimal_elements(R: RootSystem, S) -> list[WeylElement]:
    return [u for u in S if not any(t != u and R.bruhat_leq(t, u) for t in S)]


def correction_coeffs(R: RootSystem, w: WeylElement, s: int) -> dict[WeylElement, int]:
    """c_{w,s}(u) = sum over t in H(w,s), t >= u of (-1)^(l(t) - l(u)); zeros omitted."""
    H = h_set(R, w, s)
    out = {}
    for u in H:
        c = sum(_sign(t.length - u.length) for t in H if R.bruhat_leq(u, t))
        if c:
            out[u] = c
    return out


def correction_coeffs_prime(R: RootSystem, w: WeylElement, s: int) -> dict[WeylElement, int]:
    """c'_{w,s}(u) = sum over t in H'(w,s), t <= u of (-1)^(l(t) - l(u)); zeros omitted."""
    Hp = h_prime_set(R, w, s)
    out = {}
    for u in Hp:
        c = sum(_sign(t.length - u.length) for t in Hp if R.bruhat_leq(t, u))
        if c:
            out[u] = c
    return out


def fiber_euler(R: RootSystem, s: int, w: WeylElement, t: WeylElement) -> int:
    """Euler characteristic of the fiber of Z_{s,w} -> X_{sw} over the cell of t."""
    _require_ascent(R, s, w)
    sw = R.smul(s, w)
    if not R.bruhat_leq(t, sw):
        raise RootSystemError(f"{R.reduced_word(t)} is not below {R.reduced_word(sw)}")
    if R.bruhat_leq(t, w) and R.bruhat_leq(R.smul(s, t), w):
        return 2
    return 1


def verify_fiber_decomposition(R: RootSystem, s: int, w: WeylElement) -> bool:
    """Check that sum_{u in H, t <= u} c(u) is the indicator of a P^1 fiber over t."""
    c = correction_coeffs(R, w, s)
    sw = R.smul(s, w)
    for t in R.interval_below(sw):
        total = sum(cu for u, cu in c.items() if R.bruhat_leq(t, u))
        if total != (1 if fiber_euler(R, s, w, t) == 2 else 0):
            return False
    return True


def ascent_pairs(R: RootSystem) -> list[tuple[int, WeylElement]]:
    return [(s, w) for w in R.elements() for s in range(1, R.rank + 1)
            if not R.is_left_descent(s, w)]


def descent_pairs(R: RootSystem) -> list[tuple[int, WeylElement]]:
    return [(s, w) for w in R.elements() for s in R.left_descents(w)]


@dataclass
class CensusRow:
    w: WeylElement
    s: int
    coeffs: dict[WeylElement, int]
    kind: str


def classify(coeffs: dict[WeylElement, int]) -> str:
    vals = sorted(coeffs.values())
    if not vals:
        return "zero"
    if vals == [1]:
        return "single"
    if vals == [-1, 1, 1]:
        return "triple"
    return "other"


def correction_census(R: RootSystem) -> tuple[list[CensusRow], Counter]:
    """c' for every left-descent pair (w, s), classified by its value pattern."""
    rows = []
    for s, w in descent_pairs(R):
        c = correction_coeffs_prime(R, w, s)
        rows.append(CensusRow(w, s, c, classify(c)))
    return rows, Counter(r.kind for r in rows)
