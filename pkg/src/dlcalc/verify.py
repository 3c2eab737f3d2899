"""Named verification suites.  Each suite returns a list of Check records;
a failed check carries a counterexample witness.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from . import operators as ops
from .hecke import (HeckeElement, bar_involution, bernstein_residual, hecke_mul,
                    kl_element, kl_polynomials, module_act, zeta_act)
from .laurent import ONE, V, TorusFunction, VPolynomial
from .oracles import lusztig_direct
from .rootsys import RootSystem
from .schubert import ascent_pairs, correction_coeffs, verify_fiber_decomposition
from .whittaker import (check_v0, check_v1, correction_from_residue, smoothness_census,
                        x_basis_hecke, x_table_recursive, y_basis)

BOX = 3


@dataclass
class Check:
    name: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        if self.passed:
            return f"PASS {self.name}"
        return f"FAIL {self.name}: {self.witness}"


@dataclass
class Options:
    seed: int = 0
    trials: int = 100
    weights: Optional[list[tuple[int, ...]]] = None


def random_weight(rng: random.Random, rank: int, box: int = BOX) -> tuple[int, ...]:
    return tuple(rng.randint(-box, box) for _ in range(rank))


def default_weights(R: RootSystem) -> list[tuple[int, ...]]:
    """Two regular dominant weights: rho and rho + omega_r."""
    second = tuple(1 + (j == R.rank - 1) for j in range(R.rank))
    return [R.rho, second]


def _first_failure(items, pred: Callable) -> Optional[str]:
    for item in items:
        if not pred(item):
            return repr(item)
    return None


def _check(name: str, items, pred) -> Check:
    bad = _first_failure(items, pred)
    return Check(name, bad is None, bad or "")


def _monomials(R: RootSystem, opts: Options, salt: str):
    rng = random.Random(f"{opts.seed}:{salt}")
    return [random_weight(rng, R.rank) for _ in range(opts.trials)]


def _rank2_pairs(R: RootSystem):
    return [(i, j, R.coxeter_orders[i - 1][j - 1])
            for i, j in itertools.combinations(range(1, R.rank + 1), 2)]


def suite_braid(R: RootSystem, opts: Options) -> list[Check]:
    out = []
    mons = _monomials(R, opts, "braid")
    for fam in ("T", "T_prime", "L_prime", "partial", "partial_prime"):
        for i, j, m in _rank2_pairs(R):
            left = [i if k % 2 == 0 else j for k in range(m)]
            right = [j if k % 2 == 0 else i for k in range(m)]

            def pred(mu, left=left, right=right, fam=fam):
                f = TorusFunction.monomial(mu)
                return ops.apply_word(R, fam, left, f) == ops.apply_word(R, fam, right, f)
            out.append(_check(f"braid {fam} s{i},s{j} (m={m})", mons, pred))
    # Hecke algebra side
    for i, j, m in _rank2_pairs(R):
        left = R.from_word([i if k % 2 == 0 else j for k in range(m)])
        right = R.from_word([j if k % 2 == 0 else i for k in range(m)])
        out.append(Check(f"braid hecke s{i},s{j} (m={m})", left == right))
    return out


def suite_quadratic(R: RootSystem, opts: Options) -> list[Check]:
    out = []
    mons = _monomials(R, opts, "quadratic")
    for i in range(1, R.rank + 1):
        for fam in ("T", "T_prime", "L_prime"):
            op = ops.FAMILIES[fam]

            def pred(mu, op=op, i=i):
                f = TorusFunction.monomial(mu)
                g = op(R, i, f)
                return op(R, i, g) == g.scale(V - 1) + f.scale(V)
            out.append(_check(f"quadratic {fam}_{i}^2 = (v-1){fam}_{i} + v", mons, pred))

        def dprime(mu, i=i):
            f = TorusFunction.monomial(mu)
            g = ops.op_D_prime(R, i, f)
            return ops.op_D_prime(R, i, g) == g.scale(1 + V)
        out.append(_check(f"quadratic D'_{i}^2 = (1+v) D'_{i}", mons, dprime))

        def idem(mu, i=i):
            g = ops.demazure(R, i, TorusFunction.monomial(mu))
            return ops.demazure(R, i, g) == g and ops.s_twist(R, i, g) == g
        out.append(_check(f"d_{i} idempotent and s_{i}-invariant", mons, idem))

        alpha = R.simple_roots[i - 1]

        def sandwich(mu, i=i, alpha=alpha):
            g = ops.demazure_prime(R, i, TorusFunction.monomial(mu))
            return ops.demazure_prime(R, i, g.shift(alpha)) == -g
        out.append(_check(f"d'_{i} z^alpha_{i} d'_{i} = -d'_{i}", mons, sandwich))
    return out


def _weights(R: RootSystem, opts: Options):
    return opts.weights or default_weights(R)


def suite_recursion_vs_hecke(R: RootSystem, opts: Options) -> list[Check]:
    out = []
    rng = random.Random(f"{opts.seed}:ascent")
    W = R.elements()
    for lam in _weights(R, opts):
        X = x_table_recursive(R, lam)
        out.append(_check(f"recursion = hecke, lambda={lam}", W,
                          lambda w: X[w] == x_basis_hecke(R, w, lam)))
        Xr = x_table_recursive(R, lam, choose=lambda x, d: rng.choice(d))
        out.append(_check(f"ascent independence, lambda={lam}", W, lambda w: Xr[w] == X[w]))

        def mobius(w):
            total = TorusFunction.zero(R.rank)
            for u in R.interval_below(w):
                total = total + X[u].scale(R.mobius(u, w))
            return total == y_basis(R, w, lam)
        out.append(_check(f"mobius X -> Y, lambda={lam}", W, mobius))
        out.append(_check(f"X, Y polynomial in v, lambda={lam}", W,
                          lambda w: X[w].is_polynomial_in_v()
                          and y_basis(R, w, lam).is_polynomial_in_v()))
    return out


def suite_v0(R: RootSystem, opts: Options) -> list[Check]:
    return [_check(f"X_w(v=0) = d_w z^lambda, lambda={lam}", R.elements(),
                   lambda w, lam=lam: check_v0(R, w, lam)) for lam in _weights(R, opts)]


def suite_v1(R: RootSystem, opts: Options) -> list[Check]:
    return [_check(f"X_w(v=1) = permutahedron sum, lambda={lam}", R.elements(),
                   lambda w, lam=lam: check_v1(R, w, lam)) for lam in _weights(R, opts)]


def bernstein_weights(R: RootSystem) -> list[tuple[int, ...]]:
    lams = [R.fundamental_weight(j) for j in range(1, R.rank + 1)]
    lams.append(R.rho)
    lams.append(tuple(-x for x in R.fundamental_weight(1)))
    return lams


def suite_bernstein(R: RootSystem, opts: Options) -> list[Check]:
    out = []
    box = list(itertools.product(range(-2, 3), repeat=R.rank))
    for i in range(1, R.rank + 1):
        for lam in bernstein_weights(R):
            out.append(_check(f"bernstein i={i} lambda={lam}", box,
                              lambda mu, i=i, lam=lam: not bernstein_residual(R, i, lam, mu)))
    rng = random.Random(f"{opts.seed}:zeta")
    triples = [(random_weight(rng, R.rank), random_weight(rng, R.rank),
                random_weight(rng, R.rank)) for _ in range(opts.trials)]
    out.append(_check("zeta^lambda zeta^mu = zeta^(lambda+mu)", triples,
                      lambda t: zeta_act(t[0], zeta_act(t[1], TorusFunction.monomial(t[2])))
                      == zeta_act(tuple(a + b for a, b in zip(t[0], t[1])),
                                  TorusFunction.monomial(t[2]))))
    out.append(_check("zeta^0 = identity", [t[2] for t in triples],
                      lambda mu: zeta_act(R.zero, TorusFunction.monomial(mu))
                      == TorusFunction.monomial(mu)))
    return out


def suite_fibers(R: RootSystem, opts: Options) -> list[Check]:
    pairs = ascent_pairs(R)
    out = [_check("fiber decomposition", pairs,
                  lambda p: verify_fiber_decomposition(R, p[0], p[1]))]
    for lam in _weights(R, opts)[:1]:
        out.append(_check(f"algebraic correction = c_(w,s), lambda={lam}", pairs,
                          lambda p, lam=lam: correction_from_residue(R, p[0], p[1], lam)
                          == correction_coeffs(R, p[1], p[0])))
    return out


def suite_sign_rep(R: RootSystem, opts: Options) -> list[Check]:
    neg_rho = tuple(-x for x in R.rho)
    f = TorusFunction.monomial(neg_rho)
    idx = list(range(1, R.rank + 1))
    out = [
        _check("D_i z^-rho = 0", idx, lambda i: ops.op_D(R, i, f).is_zero()),
        _check("T_i z^-rho = -z^-rho", idx,
               lambda i: module_act(HeckeElement.basis(R, R.simple(i)), f) == -f),
    ]
    box = list(itertools.product(range(-2, 3), repeat=R.rank))
    out.append(_check("zeta^lambda z^-rho = z^(-lambda-rho)", box,
                      lambda lam: zeta_act(lam, f) == TorusFunction.monomial(
                          tuple(-a - b for a, b in zip(lam, R.rho)))))
    return out


def suite_lusztig(R: RootSystem, opts: Options) -> list[Check]:
    mons = _monomials(R, opts, "lusztig")
    out = []
    for i in range(1, R.rank + 1):
        out.append(_check(f"L'_{i} conjugation = quotient formula", mons,
                          lambda mu, i=i: ops.lusztig_op(R, i, TorusFunction.monomial(mu))
                          == lusztig_direct(R, i, mu)))
        out.append(_check(f"T_{i} = theta T'_{i} theta", mons,
                          lambda mu, i=i: ops.op_T_prime(
                              R, i, TorusFunction.monomial(mu).invert_z()).invert_z()
                          == ops.op_T(R, i, TorusFunction.monomial(mu))))
    return out


def random_hecke(R: RootSystem, rng: random.Random, support: int = 3) -> HeckeElement:
    W = R.elements()
    terms = {}
    for _ in range(support):
        c = VPolynomial([rng.randint(-2, 2) for _ in range(2)], rng.randint(-1, 1))
        terms[rng.choice(W)] = c
    return HeckeElement(R, terms)


def suite_kl(R: RootSystem, opts: Options) -> list[Check]:
    W = R.elements()
    out = [
        _check("bar(D_w) = v^-l(w) D_w", W,
               lambda w: bar_involution(kl_element(R, w))
               == kl_element(R, w).scale(VPolynomial.monomial(-w.length))),
        _check("P_(w,w) = 1", W, lambda w: kl_polynomials(R, w)[w] == ONE),
        _check("deg P_(u,w) <= (l(w)-l(u)-1)/2", W,
               lambda w: all(2 * p.degree() <= w.length - u.length - 1
                             for u, p in kl_polynomials(R, w).items() if u != w)),
        _check("P_(u,w) nonnegative", W,
               lambda w: all(c >= 0 for p in kl_polynomials(R, w).values() for c in p.coeffs)),
    ]
    rng = random.Random(f"{opts.seed}:hecke")
    trials = max(1, opts.trials // 10)
    cases = [(random_hecke(R, rng), random_hecke(R, rng), random_weight(rng, R.rank))
             for _ in range(trials)]
    out.append(_check("module axiom (ab).f = a.(b.f)", cases,
                      lambda c: module_act(hecke_mul(c[0], c[1]), TorusFunction.monomial(c[2]))
                      == module_act(c[0], module_act(c[1], TorusFunction.monomial(c[2])))))
    lam = _weights(R, opts)[0]
    if R.is_regular_dominant(lam):
        try:
            smoothness_census(R, lam)
            out.append(Check(f"X_w = C_w iff all P_(u,w) = 1, lambda={lam}", True))
        except ValueError as exc:
            out.append(Check(f"X_w = C_w iff all P_(u,w) = 1, lambda={lam}", False, str(exc)))
    return out


SUITES: dict[str, Callable[[RootSystem, Options], list[Check]]] = {
    "braid": suite_braid,
    "quadratic": suite_quadratic,
    "recursion-vs-hecke": suite_recursion_vs_hecke,
    "v0": suite_v0,
    "v1": suite_v1,
    "bernstein": suite_bernstein,
    "fibers": suite_fibers,
    "sign-rep": suite_sign_rep,
    "lusztig-conjugation": suite_lusztig,
    "kl": suite_kl,
}


def run_suite(name: str, R: RootSystem, opts: Options) -> list[Check]:
    if name == "all":
        return [c for suite in SUITES.values() for c in suite(R, opts)]
    try:
        suite = SUITES[name]
    except KeyError:
        raise ValueError(f"unknown suite {name!r}; choose from "
                         f"{', '.join(list(SUITES) + ['all'])}") from None
    return suite(R, opts)
