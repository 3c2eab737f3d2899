"""Finite root systems, their Weyl groups, and the Bruhat order.

Weights are integer tuples in the fundamental-weight basis, so the pairing of
a weight with the i-th simple coroot is just its i-th coordinate.  The Cartan
matrix follows the convention ``a[i][j] = <alpha_j, alpha_i^vee>``; column j
is the simple root alpha_j written in fundamental weights.

Simple reflections are indexed from 1 in every public function.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

Weight = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

DEFAULT_BOUND = 10000

_VALID_RANGES = "A_n (n>=1), B_n (n>=2), C_n (n>=2), D_n (n>=4), G_2, F_4"


class RootSystemError(ValueError):
    pass


def cartan_matrix(cartan_type: str, rank: int) -> Matrix:
    """Return the Cartan matrix of an irreducible finite type.

    Raises RootSystemError for an invalid (type, rank) pair.
    """
    t = cartan_type.upper()
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "G": rank == 2,
        "F": rank == 4,
    }.get(t, False)
    if not ok:
        raise RootSystemError(
            f"invalid root system {cartan_type}{rank}; valid: {_VALID_RANGES}")

    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j] = aij
        a[j][i] = aji

    if t == "G":
        link(0, 1, -1, -3)
    elif t == "F":
        link(0, 1)
        link(1, 2, -1, -2)
        link(2, 3)
    else:
        chain = rank - 1 if t == "D" else rank
        for i in range(chain - 1):
            link(i, i + 1)
        if t == "B":
            # alpha_n short
            link(rank - 2, rank - 1, -1, -2)
        elif t == "C":
            # alpha_n long
            link(rank - 2, rank - 1, -2, -1)
        elif t == "D":
            link(rank - 3, rank - 1)
    return tuple(tuple(row) for row in a)


def weyl_group_order(cartan_type: str, rank: int) -> int:
    t = cartan_type.upper()
    n = rank
    if t == "A":
        return factorial(n + 1)
    if t in "BC":
        return 2 ** n * factorial(n)
    if t == "D":
        return 2 ** (n - 1) * factorial(n)
    if t == "G":
        return 12
    if t == "F":
        return 1152
    raise RootSystemError(f"unknown type {cartan_type}")


_ORDER_FROM_PRODUCT = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element, identified by its matrix on weight coordinates.

    ``action[i][j]`` is the i-th coordinate of the image of the j-th
    fundamental weight.  Equality and hashing use the matrix and the system
    label only.
    """

    action: Matrix
    length: int
    system: tuple[str, int] = field(default=("", 0))

    def __eq__(self, other):
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.action == other.action and self.system == other.system

    def __hash__(self):
        return hash(self.action)

    def apply(self, weight: Sequence[int]) -> Weight:
        return tuple(sum(r * x for r, x in zip(row, weight)) for row in self.action)

    def __repr__(self):
        return f"WeylElement(length={self.length}, action={self.action})"


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


class RootSystem:
    """Cartan data plus a lazily enumerated Weyl group.

    Instances compare equal when they have the same type and rank.  The
    Weyl group, multiplication tables and Bruhat memo are built on first use
    and are never mutated afterwards except for memo growth.
    """

    def __init__(self, cartan_type: str, rank: int, bound: int = DEFAULT_BOUND):
        self.cartan_type = cartan_type.upper()
        self.rank = rank
        self.cartan_matrix = cartan_matrix(self.cartan_type, rank)
        self.bound = bound
        a = self.cartan_matrix
        self.simple_roots: tuple[Weight, ...] = tuple(
            tuple(a[i][j] for i in range(rank)) for j in range(rank))
        self.coxeter_orders: Matrix = tuple(
            tuple(1 if i == j else _ORDER_FROM_PRODUCT[a[i][j] * a[j][i]]
                  for j in range(rank))
            for i in range(rank))
        self.rho: Weight = (1,) * rank
        self.zero: Weight = (0,) * rank
        self._positive_coroots = None
        self._positive_roots = None
        self._elements = None
        self._by_action: dict = {}
        self._smul_memo: dict = {}
        self._bruhat_memo: dict = {}

    @property
    def label(self) -> tuple[str, int]:
        return (self.cartan_type, self.rank)

    def __eq__(self, other):
        return isinstance(other, RootSystem) and self.label == other.label

    def __hash__(self):
        return hash(self.label)

    def __repr__(self):
        return f"RootSystem({self.cartan_type}{self.rank})"

    def _check_index(self, i: int):
        if not 1 <= i <= self.rank:
            raise RootSystemError(f"simple index {i} out of range 1..{self.rank}")

    # -- weights ---------------------------------------------------------

    def reflect(self, i: int, weight: Sequence[int]) -> Weight:
        self._check_index(i)
        k = weight[i - 1]
        alpha = self.simple_roots[i - 1]
        return tuple(x - k * a for x, a in zip(weight, alpha))

    def fundamental_weight(self, i: int) -> Weight:
        self._check_index(i)
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def is_dominant(self, weight: Sequence[int]) -> bool:
        return all(x >= 0 for x in weight)

    def is_regular_dominant(self, weight: Sequence[int]) -> bool:
        return all(x >= 1 for x in weight)

    def _orbit_of_simples(self, pairing) -> list[tuple[int, ...]]:
        # Closure of the simple basis vectors under reflections, in simple
        # coordinates; s_i v = v - pairing(v, i) e_i.
        r = self.rank
        seen = set()
        frontier = [tuple(1 if j == i else 0 for j in range(r)) for i in range(r)]
        seen.update(frontier)
        while frontier:
            nxt = []
            for v in frontier:
                for i in range(r):
                    k = pairing(v, i)
                    u = tuple(x - (k if j == i else 0) for j, x in enumerate(v))
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return sorted(v for v in seen if all(x >= 0 for x in v))

    @property
    def positive_roots(self) -> list[tuple[int, ...]]:
        """Positive roots in simple-root coordinates."""
        if self._positive_roots is None:
            a = self.cartan_matrix
            self._positive_roots = self._orbit_of_simples(
                lambda v, i: sum(c * a[i][j] for j, c in enumerate(v)))
        return self._positive_roots

    @property
    def positive_coroots(self) -> list[tuple[int, ...]]:
        """Positive coroots in simple-coroot coordinates."""
        if self._positive_coroots is None:
            a = self.cartan_matrix
            self._positive_coroots = self._orbit_of_simples(
                lambda v, i: sum(c * a[j][i] for j, c in enumerate(v)))
        return self._positive_coroots

    def root_to_weight(self, root: Sequence[int]) -> Weight:
        return tuple(sum(c * self.simple_roots[j][i] for j, c in enumerate(root))
                     for i in range(self.rank))

    def pair_coroot(self, weight: Sequence[int], coroot: Sequence[int]) -> int:
        return sum(x * c for x, c in zip(weight, coroot))

    # -- group -----------------------------------------------------------

    def _length_of(self, action: Matrix) -> int:
        # l(w) counts positive coroots made negative by w^{-1}; detected by
        # the sign of <w rho, gamma^vee>.
        wrho = tuple(sum(row) for row in action)
        return sum(1 for c in self.positive_coroots if self.pair_coroot(wrho, c) < 0)

    def element(self, action: Matrix) -> WeylElement:
        hit = self._by_action.get(action)
        if hit is not None:
            return hit
        return WeylElement(action, self._length_of(action), self.label)

    @property
    def identity(self) -> WeylElement:
        r = self.rank
        return WeylElement(tuple(tuple(int(i == j) for j in range(r)) for i in range(r)),
                           0, self.label)

    def simple(self, i: int) -> WeylElement:
        self._check_index(i)
        cols = [self.reflect(i, self.fundamental_weight(j + 1)) for j in range(self.rank)]
        return WeylElement(tuple(zip(*cols)), 1, self.label)

    def mul(self, u: WeylElement, w: WeylElement) -> WeylElement:
        self._check_member(u, w)
        return self.element(_matmul(u.action, w.action))

    def inverse(self, w: WeylElement) -> WeylElement:
        return self.from_word(reversed(self.reduced_word(w)))

    def from_word(self, word: Iterable[int]) -> WeylElement:
        w = self.identity
        for i in word:
            w = self.mul(w, self.simple(i))
        return w

    def left_descents(self, w: WeylElement) -> list[int]:
        wrho = w.apply(self.rho)
        return [i + 1 for i, x in enumerate(wrho) if x < 0]

    def is_left_descent(self, i: int, w: WeylElement) -> bool:
        self._check_index(i)
        return w.apply(self.rho)[i - 1] < 0

    def smul(self, i: int, w: WeylElement) -> WeylElement:
        """s_i * w."""
        key = (i, w.action)
        hit = self._smul_memo.get(key)
        if hit is None:
            hit = self._smul_memo[key] = self.mul(self.simple(i), w)
        return hit

    def reduced_word(self, w: WeylElement) -> list[int]:
        self._check_member(w)
        word = []
        while True:
            d = self.left_descents(w)
            if not d:
                return word
            word.append(d[0])
            w = self.smul(d[0], w)

    def order(self) -> int:
        return weyl_group_order(self.cartan_type, self.rank)

    def elements(self) -> list[WeylElement]:
        if self._elements is None:
            n = self.order()
            if n > self.bound:
                raise RootSystemError(
                    f"|W({self.cartan_type}{self.rank})| = {n} exceeds bound {self.bound}")
            seen = {self.identity.action: self.identity}
            frontier = [self.identity]
            gens = [self.simple(i) for i in range(1, self.rank + 1)]
            while frontier:
                nxt = []
                for w in frontier:
                    for s in gens:
                        m = _matmul(s.action, w.action)
                        if m not in seen:
                            # BFS depth is the word length
                            u = WeylElement(m, w.length + 1, self.label)
                            seen[m] = u
                            nxt.append(u)
                frontier = nxt
            els = list(seen.values())
            els.sort(key=lambda w: (w.length, self.reduced_word(w)))
            self._elements = els
            self._by_action = {w.action: w for w in els}
        return self._elements

    @property
    def longest(self) -> WeylElement:
        return self.elements()[-1]

    def _check_member(self, *ws: WeylElement):
        for w in ws:
            if w.system != self.label:
                raise RootSystemError(
                    f"element of {w.system} used with {self.cartan_type}{self.rank}")

    def bruhat_leq(self, u: WeylElement, w: WeylElement) -> bool:
        self._check_member(u, w)
        return self._leq(u, w)

    def _leq(self, u: WeylElement, w: WeylElement) -> bool:
        if u.length > w.length:
            return False
        if u.length == w.length:
            return u == w
        if u.length == 0:
            return True
        key = (u.action, w.action)
        hit = self._bruhat_memo.get(key)
        if hit is not None:
            return hit
        # lifting property with s a left descent of w
        i = self.left_descents(w)[0]
        sw = self.smul(i, w)
        if self.is_left_descent(i, u):
            res = self._leq(self.smul(i, u), sw)
        else:
            res = self._leq(u, sw)
        self._bruhat_memo[key] = res
        return res

    def mobius(self, u: WeylElement, w: WeylElement) -> int:
        if not self.bruhat_leq(u, w):
            return 0
        return -1 if (w.length - u.length) % 2 else 1

    def interval_below(self, w: WeylElement) -> list[WeylElement]:
        return [u for u in self.elements() if self._leq(u, w)]


def build_root_system(cartan_type: str, rank: int, bound: int = DEFAULT_BOUND) -> RootSystem:
    return RootSystem(cartan_type, rank, bound)


def reflect_simple(R: RootSystem, i: int, weight: Sequence[int]) -> Weight:
    return R.reflect(i, weight)


def weyl_enumerate(R: RootSystem) -> list[WeylElement]:
    return R.elements()


def reduced_word(R: RootSystem, w: WeylElement) -> list[int]:
    return R.reduced_word(w)


def bruhat_leq(R: RootSystem, u: WeylElement, w: WeylElement) -> bool:
    return R.bruhat_leq(u, w)


def mobius(R: RootSystem, u: WeylElement, w: WeylElement) -> int:
    return R.mobius(u, w)
