"""Command-line front end.

Exit status: 0 on success, 1 on invalid or infeasible input, 2 when a proven
identity fails on concrete data (a counterexample or an oracle mismatch).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import numtheory, qsp, trinomial
from .errors import LinsplitError, TheoremViolation
from .ff_core import make_field, split_prime_power
from .linpoly import LinearizedPoly, kernel_basis, nullity_bruteforce, nullity_fast

EXIT_OK, EXIT_INPUT, EXIT_VIOLATION = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_int_list(text: str) -> list[int]:
    """``"2,4,5"`` or ``"3:7"`` (inclusive) or a mix such as ``"2,5:7"``."""
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            lo, hi = part.split(":")
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    if not out:
        raise argparse.ArgumentTypeError(f"empty list: {text!r}")
    return out


def parse_coeffs(text: str, d: int) -> dict[int, int]:
    """``"a0=1,a2=5"`` -> ``{0: 1, 2: 5}``."""
    coeffs: dict[int, int] = {}
    for item in filter(None, (s.strip() for s in text.split(","))):
        key, _, value = item.partition("=")
        if not key.startswith("a") or not value:
            raise LinsplitError(f"bad coefficient {item!r}; expected aI=CODE")
        i = int(key[1:])
        if not 0 <= i <= d:
            raise LinsplitError(f"coefficient index {i} outside 0..{d}")
        coeffs[i] = int(value)
    return coeffs


def _sign(text: str) -> int:
    if text in ("+", "+1", "1"):
        return 1
    if text in ("-", "-1"):
        return -1
    raise argparse.ArgumentTypeError(f"sign must be + or -, got {text!r}")


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(text)


def _field_from(args):
    if getattr(args, "q", None) is not None:
        p, s = split_prime_power(args.q)
    else:
        p, s = args.p, args.s
    return make_field(p, s, args.n)


# -- subcommands ------------------------------------------------------------------


def cmd_nullity(args) -> int:
    F = _field_from(args)
    given = parse_coeffs(args.coeffs, args.d)
    coeffs = [given.get(i, 0) for i in range(args.d)] + [given.get(args.d, 1)]
    L = LinearizedPoly(F, tuple(coeffs))
    k = nullity_fast(L)
    payload = {"field": F.to_json(), "d": L.d, "coeffs": list(L.coeffs), "nullity": k}
    lines = [f"nullity {k}"]
    if args.bruteforce:
        kb = nullity_bruteforce(L)
        payload["nullity_bruteforce"] = kb
        lines.append(f"nullity_bruteforce {kb}")
        if kb != k:
            _emit(args, payload, "\n".join(lines))
            raise TheoremViolation(f"fast nullity {k} != brute-force nullity {kb}")
    if args.kernel:
        basis = kernel_basis(L)
        payload["kernel_basis"] = basis
        lines.append("kernel_basis " + " ".join(map(str, basis)))
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_search(args) -> int:
    F = _field_from(args)
    pairs = trinomial.enumerate_splitting(F, args.d, args.mode, args.workers)
    payload = {
        "field": F.to_json(),
        "d": args.d,
        "mode": args.mode,
        "count": len(pairs),
        "pairs": [list(p) for p in pairs],
    }
    text = "\n".join([f"{len(pairs)} pairs (mode {args.mode})"] + [f"{a}\t{b}" for a, b in pairs])
    _emit(args, payload, text)
    return EXIT_OK


def cmd_verify(args) -> int:
    reports = trinomial.verify_theorem(args.part, args.q, args.d, args.n, args.workers)
    lines = []
    for r in reports:
        census = " ".join(f"{k}={v}" for k, v in r.census.items())
        lines.append(
            f"q={r.q} d={r.d} n={r.n} part={r.part}: {r.splitting_count} splitting, "
            f"{len(r.counterexamples)} counterexamples [{census}]"
        )
    _emit(args, [r.to_json() for r in reports], "\n".join(lines))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_VIOLATION


def cmd_gcd(args) -> int:
    A = numtheory.SignedPowerPoly(args.k, args.k_sign)
    B = numtheory.SignedPowerPoly(args.l, args.l_sign)
    closed = numtheory.gcd_power_polys(A, B)
    oracle = numtheory.gcd_power_polys_oracle(A, B)
    payload = {
        "a": str(A),
        "b": str(B),
        "gcd": str(closed),
        "oracle": str(oracle),
        "agree": closed == oracle,
    }
    _emit(args, payload, f"gcd({A}, {B}) = {closed}  (oracle: {oracle})")
    return EXIT_OK if closed == oracle else EXIT_VIOLATION


def cmd_binom(args) -> int:
    if args.i is not None:
        r = numtheory.binom_mod(args.n, args.i, args.p)
        _emit(args, {"n": args.n, "i": args.i, "p": args.p, "binom_mod": r},
              f"C({args.n},{args.i}) mod {args.p} = {r}")
        return EXIT_OK
    zero = numtheory.all_inner_binoms_zero(args.n, args.p)
    power = numtheory.is_power_of(args.n, args.p)
    payload = {"n": args.n, "p": args.p, "all_inner_binoms_zero": zero, "is_power_of": power}
    _emit(args, payload, f"all_inner_binoms_zero={zero} is_power_of={power}")
    return EXIT_OK if zero == power else EXIT_VIOLATION


def cmd_expos(args) -> int:
    e = numtheory.exponents(args.q, args.d)
    div = numtheory.expos_divides(args.q, args.d)
    cover = numtheory.exponent_coverage(args.d)
    payload = {"q": args.q, "d": args.d, "n": args.d * (args.d - 1) + 1,
               "e1": e.e1, "e2": e.e2, "divides": div, "coverage": cover}
    _emit(args, payload, f"e1={e.e1} e2={e.e2} divides={div} coverage={cover}")
    return EXIT_OK if div and cover else EXIT_VIOLATION


def cmd_qsp(args) -> int:
    est = qsp.complexity_log2(qsp.QspParams(args.q, args.n, args.d, args.deg_lambda, args.m))
    if args.json:
        print(json.dumps(est.to_json()))
    else:
        print(qsp.to_tsv([est]), end="")
        print(f"# {est.note}")
    return EXIT_OK


def cmd_scan(args) -> int:
    rows = qsp.scan_parameters(args.q, args.n, args.d, args.m, args.deg_lambda)
    if args.json:
        print(json.dumps([r.to_json() for r in rows]))
    else:
        print(qsp.to_tsv(rows), end="")
        print(f"# {qsp.POLYLOG_NOTE}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="linsplit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def field_args(sp):
        sp.add_argument("--p", type=int, default=2, help="characteristic")
        sp.add_argument("--s", type=int, default=1, help="q = p^s")
        sp.add_argument("--n", type=int, required=True, help="extension degree over GF(q)")

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable output")

    sp = sub.add_parser("nullity", help="nullity of a linearized polynomial")
    field_args(sp)
    sp.add_argument("--d", type=int, required=True, help="q-degree")
    sp.add_argument("--coeffs", default="", help="aI=CODE list; a_d defaults to 1, others to 0")
    sp.add_argument("--bruteforce", action="store_true", help="also run the GF(p)-matrix oracle")
    sp.add_argument("--kernel", action="store_true", help="print a GF(q)-basis of the roots")
    common(sp)
    sp.set_defaults(func=cmd_nullity)

    sp = sub.add_parser("search", help="all (a, b) with x^(q^d) - b x^q - a x splitting")
    field_args(sp)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--mode", choices=("theorem", "exhaustive", "both"), default="both")
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_search)

    sp = sub.add_parser("verify", help="exhaustive check of one part of the characterization")
    sp.add_argument("--part", type=int, choices=(1, 2, 3), required=True)
    sp.add_argument("--q", type=int, required=True, help="prime power q")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--n", type=parse_int_list, required=True, help="e.g. 2,4,5 or 2:7")
    sp.add_argument("--workers", type=int, default=1)
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("gcd", help="gcd of x^k +- 1 and x^l +- 1")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--k-sign", type=_sign, default=1)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--l-sign", type=_sign, default=1)
    common(sp)
    sp.set_defaults(func=cmd_gcd)

    sp = sub.add_parser("binom", help="binomial coefficients mod p")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--i", type=int, default=None, help="omit to test all 0 < i < n")
    sp.add_argument("--p", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_binom)

    sp = sub.add_parser("expos", help="exponent divisibility for n = d(d-1)+1")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_expos)

    sp = sub.add_parser("qsp", help="log2 cost of the quasi-subfield ECDLP attack")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--deg-lambda", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_qsp)

    sp = sub.add_parser("scan", help="rank (d, m) choices by estimated cost")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=parse_int_list, required=True, help="e.g. 5:15")
    sp.add_argument("--m", type=parse_int_list, required=True, help="e.g. 2:5")
    sp.add_argument("--deg-lambda", type=int, required=True)
    common(sp)
    sp.set_defaults(func=cmd_scan)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (LinsplitError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
