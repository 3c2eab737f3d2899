"""Exact arithmetic in Z[v, v^-1] and in the group algebra of the weight lattice.

``VPolynomial`` is a Laurent polynomial in the single parameter v.
``TorusFunction`` is a finite sum of monomials z^lambda with VPolynomial
coefficients, lambda running over integer weights.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Weight = tuple[int, ...]
Scalar = Union[int, "VPolynomial"]


class VPolynomial:
    """Laurent polynomial sum(coeffs[k] * v**(lo + k)) with integer coefficients.

    Canonical form: no leading or trailing zeros; zero is ``lo=0, coeffs=()``.
    """

    __slots__ = ("lo", "coeffs")

    def __init__(self, coeffs: Iterable[int] = (), lo: int = 0):
        c = list(coeffs)
        start = 0
        while start < len(c) and c[start] == 0:
            start += 1
        end = len(c)
        while end > start and c[end - 1] == 0:
            end -= 1
        if start == end:
            self.lo, self.coeffs = 0, ()
        else:
            self.lo, self.coeffs = lo + start, tuple(c[start:end])

    @classmethod
    def const(cls, n: int) -> "VPolynomial":
        return cls((n,))

    @classmethod
    def monomial(cls, exp: int, c: int = 1) -> "VPolynomial":
        return cls((c,), exp)

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "VPolynomial":
        if not d:
            return cls()
        lo, hi = min(d), max(d)
        return cls([d.get(e, 0) for e in range(lo, hi + 1)], lo)

    @classmethod
    def coerce(cls, x: Scalar) -> "VPolynomial":
        if isinstance(x, VPolynomial):
            return x
        if isinstance(x, int):
            return cls((x,))
        raise TypeError(f"cannot use {type(x).__name__} as a v-polynomial")

    def to_dict(self) -> dict[int, int]:
        return {self.lo + k: c for k, c in enumerate(self.coeffs) if c}

    @property
    def hi(self) -> int:
        return self.lo + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self) -> bool:
        return not self.coeffs or (self.lo == 0 and len(self.coeffs) == 1)

    def constant_value(self) -> int:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return self.coeffs[0] if self.coeffs else 0

    def is_polynomial(self) -> bool:
        """True when there are no negative powers of v."""
        return not self.coeffs or self.lo >= 0

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero")
        return self.hi

    def __eq__(self, other):
        if isinstance(other, int):
            other = VPolynomial.const(other)
        if not isinstance(other, VPolynomial):
            return NotImplemented
        return self.lo == other.lo and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.lo, self.coeffs))

    def __add__(self, other):
        if isinstance(other, int):
            other = VPolynomial.const(other)
        elif not isinstance(other, VPolynomial):
            return NotImplemented
        if not self.coeffs:
            return other
        if not other.coeffs:
            return self
        lo = min(self.lo, other.lo)
        hi = max(self.hi, other.hi)
        out = [0] * (hi - lo + 1)
        for k, c in enumerate(self.coeffs):
            out[self.lo - lo + k] += c
        for k, c in enumerate(other.coeffs):
            out[other.lo - lo + k] += c
        return VPolynomial(out, lo)

    __radd__ = __add__

    def __neg__(self):
        return VPolynomial([-c for c in self.coeffs], self.lo)

    def __sub__(self, other):
        if isinstance(other, int):
            other = VPolynomial.const(other)
        elif not isinstance(other, VPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return VPolynomial([c * other for c in self.coeffs], self.lo)
        if not isinstance(other, VPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return VPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return VPolynomial(out, self.lo + other.lo)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = VPolynomial.const(1)
        for _ in range(n):
            out = out * self
        return out

    def shift(self, k: int) -> "VPolynomial":
        """Multiply by v**k."""
        return VPolynomial(self.coeffs, self.lo + k) if self.coeffs else self

    def bar(self) -> "VPolynomial":
        """Substitute v -> v^-1."""
        if not self.coeffs:
            return self
        return VPolynomial(reversed(self.coeffs), -self.hi)

    def evaluate(self, t) -> Fraction:
        t = Fraction(t)
        if t == 0:
            if self.coeffs and self.lo < 0:
                raise ZeroDivisionError(f"{self} has a pole at v=0")
            return Fraction(self.to_dict().get(0, 0))
        return sum((Fraction(c) * t ** (self.lo + k) for k, c in enumerate(self.coeffs)),
                   Fraction(0))

    def to_json(self) -> dict:
        return {"lo": self.lo, "coeffs": list(self.coeffs)}

    @classmethod
    def from_json(cls, d: Mapping) -> "VPolynomial":
        return cls(d["coeffs"], d["lo"])

    def __repr__(self):
        return f"VPolynomial({list(self.coeffs)!r}, lo={self.lo})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            e = self.lo + k
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}" + (f"*{mono}" if mono else "")
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first = parts[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


ZERO = VPolynomial()
ONE = VPolynomial.const(1)
V = VPolynomial.monomial(1)


def _addto(terms: dict, weight: Weight, c: VPolynomial):
    old = terms.get(weight)
    new = c if old is None else old + c
    if new:
        terms[weight] = new
    elif old is not None:
        del terms[weight]


class TorusFunction:
    """Finite linear combination of z^lambda with VPolynomial coefficients.

    Terms with zero coefficient are never stored, so two functions are equal
    exactly when their term maps are.  ``rank`` guards against mixing weight
    lattices of different systems.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms: Mapping[Weight, Scalar] | None = None):
        self.rank = rank
        self.terms: dict[Weight, VPolynomial] = {}
        if terms:
            for wt, c in terms.items():
                wt = tuple(wt)
                if len(wt) != rank:
                    raise ValueError(f"weight {wt} has wrong length for rank {rank}")
                _addto(self.terms, wt, VPolynomial.coerce(c))

    @classmethod
    def _raw(cls, rank: int, terms: dict) -> "TorusFunction":
        f = cls.__new__(cls)
        f.rank = rank
        f.terms = terms
        return f

    @classmethod
    def zero(cls, rank: int) -> "TorusFunction":
        return cls._raw(rank, {})

    @classmethod
    def monomial(cls, weight: Sequence[int], c: Scalar = 1) -> "TorusFunction":
        c = VPolynomial.coerce(c)
        weight = tuple(weight)
        return cls._raw(len(weight), {weight: c} if c else {})

    def _check(self, other: "TorusFunction"):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __eq__(self, other):
        if not isinstance(other, TorusFunction):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coefficient(self, weight: Sequence[int]) -> VPolynomial:
        return self.terms.get(tuple(weight), ZERO)

    def items(self):
        """Terms sorted lexicographically by weight."""
        return sorted(self.terms.items())

    def support(self) -> list[Weight]:
        return sorted(self.terms)

    def __add__(self, other):
        if not isinstance(other, TorusFunction):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for wt, c in other.terms.items():
            _addto(terms, wt, c)
        return TorusFunction._raw(self.rank, terms)

    def __neg__(self):
        return TorusFunction._raw(self.rank, {wt: -c for wt, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TorusFunction):
            return NotImplemented
        self._check(other)
        terms = dict(self.terms)
        for wt, c in other.terms.items():
            _addto(terms, wt, -c)
        return TorusFunction._raw(self.rank, terms)

    def __mul__(self, other):
        if isinstance(other, (int, VPolynomial)):
            return self.scale(other)
        if not isinstance(other, TorusFunction):
            return NotImplemented
        self._check(other)
        terms: dict = {}
        for a, ca in self.terms.items():
            for b, cb in other.terms.items():
                _addto(terms, tuple(x + y for x, y in zip(a, b)), ca * cb)
        return TorusFunction._raw(self.rank, terms)

    def __rmul__(self, other):
        if isinstance(other, (int, VPolynomial)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Scalar) -> "TorusFunction":
        c = VPolynomial.coerce(c)
        if not c:
            return TorusFunction.zero(self.rank)
        terms = {}
        for wt, a in self.terms.items():
            p = a * c
            if p:
                terms[wt] = p
        return TorusFunction._raw(self.rank, terms)

    def shift(self, weight: Sequence[int]) -> "TorusFunction":
        """Multiply by the monomial z^weight."""
        return TorusFunction._raw(
            self.rank,
            {tuple(x + y for x, y in zip(wt, weight)): c for wt, c in self.terms.items()})

    def invert_z(self) -> "TorusFunction":
        """The automorphism z -> z^-1, i.e. z^lambda -> z^-lambda."""
        return TorusFunction._raw(
            self.rank, {tuple(-x for x in wt): c for wt, c in self.terms.items()})

    def map_weights(self, fn) -> "TorusFunction":
        terms: dict = {}
        for wt, c in self.terms.items():
            _addto(terms, fn(wt), c)
        return TorusFunction._raw(self.rank, terms)

    def map_coeffs(self, fn) -> "TorusFunction":
        terms = {}
        for wt, c in self.terms.items():
            d = fn(c)
            if d:
                terms[wt] = d
        return TorusFunction._raw(self.rank, terms)

    def coefficient_sum(self) -> VPolynomial:
        return sum(self.terms.values(), ZERO)

    def specialize_v(self, t) -> dict[Weight, Fraction]:
        out = {}
        for wt, c in sorted(self.terms.items()):
            x = c.evaluate(t)
            if x:
                out[wt] = x
        return out

    def is_polynomial_in_v(self) -> bool:
        return all(c.is_polynomial() for c in self.terms.values())

    def to_json(self) -> list[dict]:
        return [{"weight": list(wt), "coeff": c.to_json()} for wt, c in self.items()]

    @classmethod
    def from_json(cls, rank: int, data: Sequence[Mapping]) -> "TorusFunction":
        return cls(rank, {tuple(d["weight"]): VPolynomial.from_json(d["coeff"]) for d in data})

    def __repr__(self):
        return f"TorusFunction({self.rank}, {dict(self.items())!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for wt, c in self.items():
            z = "z^(" + ",".join(map(str, wt)) + ")"
            if c == ONE:
                parts.append(z)
            elif c == -ONE:
                parts.append(f"-{z}")
            else:
                parts.append(f"({c})*{z}")
        return " + ".join(parts).replace("+ -", "- ")


def monomial(weight: Sequence[int], c: Scalar = 1) -> TorusFunction:
    return TorusFunction.monomial(weight, c)


def specialize_v(f: TorusFunction, t) -> dict[Weight, Fraction]:
    return f.specialize_v(t)


def invert_z(f: TorusFunction) -> TorusFunction:
    return f.invert_z()


def coefficient_sum(f: TorusFunction) -> VPolynomial:
    return f.coefficient_sum()


def weyl_twist(w, f: TorusFunction) -> TorusFunction:
    """Relabel z^lambda -> z^(w lambda); a left action of W by ring automorphisms."""
    return f.map_weights(w.apply)
