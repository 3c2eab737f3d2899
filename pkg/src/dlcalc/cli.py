"""Command-line front end: tables, verification suites, the correction census
and Kazhdan-Lusztig polynomials.  All output is deterministic.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Optional, Sequence

from .hecke import kl_polynomials
from .laurent import TorusFunction, VPolynomial
from .operators import demazure_character
from .rootsys import RootSystem, RootSystemError
from .schubert import correction_census
from .verify import SUITES, Options, run_suite
from .whittaker import smoothness_census, x_basis_hecke, y_basis, z_word

BASES = ("X", "Y", "Z", "demazure")


class UsageError(ValueError):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, choices=list("ABCDGF"), dest="type_")
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--weight", type=_int_list)
    common.add_argument("--word", type=_int_list)
    common.add_argument("--v-at", type=_rational, dest="v_at")
    common.add_argument("--format", choices=("json", "csv", "latex"), default="json")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=100)

    p = argparse.ArgumentParser(prog="dlcalc", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)
    t = sub.add_parser("table", parents=[common], help="X, Y, Z or Demazure character table")
    t.add_argument("--basis", choices=BASES, default="X")
    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("--suite", default="all", choices=list(SUITES) + ["all"])
    sub.add_parser("census", parents=[common], help="correction census and smoothness census")
    sub.add_parser("kl", parents=[common], help="Kazhdan-Lusztig polynomials")
    return p


def _system(args) -> RootSystem:
    return RootSystem(args.type_, args.rank)


def _weight(R: RootSystem, args, default=None) -> tuple[int, ...]:
    if args.weight is None:
        if default is None:
            raise UsageError("--weight is required")
        return tuple(default)
    lam = tuple(args.weight)
    if len(lam) != R.rank:
        raise UsageError(f"--weight needs {R.rank} entries, got {len(lam)}")
    return lam


def rational_json(x: Fraction) -> dict:
    # integers keep the polynomial schema as a constant; other rationals use num/den
    if x.denominator == 1:
        return {"lo": 0, "coeffs": [int(x)]}
    return {"num": x.numerator, "den": x.denominator}


def value_json(f: TorusFunction, v_at: Optional[Fraction]) -> list[dict]:
    if v_at is None:
        return f.to_json()
    return [{"weight": list(wt), "coeff": rational_json(x)}
            for wt, x in f.specialize_v(v_at).items()]


def _coeff_text(coeff: dict) -> str:
    if "num" in coeff:
        return f"{coeff['num']}/{coeff['den']}"
    return str(VPolynomial.from_json(coeff))


def table_data(R: RootSystem, basis: str, lam: tuple[int, ...], word=None,
               v_at: Optional[Fraction] = None) -> dict:
    if basis == "Z" and word is not None:
        entries = [(list(word), len(word), z_word(R, word, lam))]
    else:
        fn = {"X": x_basis_hecke, "Y": y_basis, "Z": lambda R, w, lam: z_word(
            R, R.reduced_word(w), lam), "demazure": demazure_character}[basis]
        elements = R.elements()
        if word is not None:
            elements = [R.from_word(word)]
        entries = [(list(R.reduced_word(w)), w.length, fn(R, w, lam)) for w in elements]
    return {
        "system": {"type": R.cartan_type, "rank": R.rank},
        "weight": list(lam),
        "rows": [{"w": w, "length": n, "value": value_json(f, v_at)} for w, n, f in entries],
    }


def _latex_coeff(text: str) -> str:
    return text.replace("*", "")


def render_table(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["w", "length", "weight", "coeff"])
        for row in data["rows"]:
            word = " ".join(map(str, row["w"]))
            for term in row["value"]:
                out.writerow([word, row["length"], " ".join(map(str, term["weight"])),
                              _coeff_text(term["coeff"])])
        return buf.getvalue()
    lines = []
    for row in data["rows"]:
        word = "".join(f"s_{{{i}}}" for i in row["w"]) or "e"
        terms = []
        for term in row["value"]:
            z = "z^{(" + ",".join(map(str, term["weight"])) + ")}"
            terms.append(f"({_latex_coeff(_coeff_text(term['coeff']))}){z}")
        body = " + ".join(terms) or "0"
        lines.append(f"${word}$ & {row['length']} & ${body}$ \\\\")
    return "\n".join(lines) + "\n"


def cmd_table(args, out) -> int:
    R = _system(args)
    lam = _weight(R, args)
    if args.basis == "Z" and args.word is not None:
        w = R.from_word(args.word)
        if w.length != len(args.word):
            print(f"warning: word {args.word} is not reduced", file=sys.stderr)
    data = table_data(R, args.basis, lam, args.word, args.v_at)
    out.write(render_table(data, args.format))
    return 0


def cmd_verify(args, out) -> int:
    R = _system(args)
    weights = [_weight(R, args)] if args.weight is not None else None
    checks = run_suite(args.suite, R, Options(seed=args.seed, trials=args.trials, weights=weights))
    for c in checks:
        out.write(c.line() + "\n")
    failed = sum(not c.passed for c in checks)
    out.write(f"{len(checks) - failed}/{len(checks)} passed\n")
    return 1 if failed else 0


def census_data(R: RootSystem, lam: tuple[int, ...]) -> dict:
    rows, counts = correction_census(R)
    word = R.reduced_word
    rows = sorted(rows, key=lambda r: (r.w.length, word(r.w), r.s))
    smooth = smoothness_census(R, lam)
    return {
        "system": {"type": R.cartan_type, "rank": R.rank},
        "summary": {k: counts.get(k, 0) for k in ("zero", "single", "triple", "other")},
        "rows": [{"w": list(word(r.w)), "s": r.s, "kind": r.kind,
                  "coeffs": [{"u": list(word(u)), "c": c}
                             for u, c in sorted(r.coeffs.items(),
                                                key=lambda t: (t[0].length, word(t[0])))]}
                 for r in rows],
        "smoothness": {"weight": list(lam),
                       "singular": [list(word(w)) for w in R.elements() if not smooth[w]]},
    }


def render_census(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"

    def fmt_coeffs(cs):
        return "; ".join(f"{c['c']:+d} [{' '.join(map(str, c['u']))}]" for c in cs)
    if fmt == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["w", "s", "kind", "coeffs"])
        for r in data["rows"]:
            out.writerow([" ".join(map(str, r["w"])), r["s"], r["kind"], fmt_coeffs(r["coeffs"])])
        return buf.getvalue()
    lines = []
    for r in data["rows"]:
        w = "".join(f"s_{{{i}}}" for i in r["w"]) or "e"
        cs = " ".join(f"{c['c']:+d}\\,{''.join(f's_{{{i}}}' for i in c['u']) or 'e'}"
                      for c in r["coeffs"]) or "0"
        lines.append(f"${w}$ & $s_{{{r['s']}}}$ & {r['kind']} & ${cs}$ \\\\")
    return "\n".join(lines) + "\n"


def cmd_census(args, out) -> int:
    R = _system(args)
    lam = _weight(R, args, default=R.rho)
    out.write(render_census(census_data(R, lam), args.format))
    return 0


def kl_data(R: RootSystem, word=None) -> dict:
    ws = [R.from_word(word)] if word is not None else R.elements()
    rows = []
    for w in ws:
        for u, p in sorted(kl_polynomials(R, w).items(),
                           key=lambda t: (t[0].length, R.reduced_word(t[0]))):
            rows.append({"w": list(R.reduced_word(w)), "u": list(R.reduced_word(u)),
                         "P": p.to_json()})
    return {"system": {"type": R.cartan_type, "rank": R.rank}, "rows": rows}


def render_kl(data: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(data, indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["w", "u", "P"])
        for r in data["rows"]:
            out.writerow([" ".join(map(str, r["w"])), " ".join(map(str, r["u"])),
                          str(VPolynomial.from_json(r["P"]))])
        return buf.getvalue()
    lines = []
    for r in data["rows"]:
        w = "".join(f"s_{{{i}}}" for i in r["w"]) or "e"
        u = "".join(f"s_{{{i}}}" for i in r["u"]) or "e"
        p = _latex_coeff(str(VPolynomial.from_json(r["P"])))
        lines.append(f"${w}$ & ${u}$ & ${p}$ \\\\")
    return "\n".join(lines) + "\n"


def cmd_kl(args, out) -> int:
    R = _system(args)
    out.write(render_kl(kl_data(R, args.word), args.format))
    return 0


COMMANDS = {"table": cmd_table, "verify": cmd_verify, "census": cmd_census, "kl": cmd_kl}


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = out or sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, RootSystemError, ValueError) as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
