"""Command-line front end.

Exit codes: 0 success, 1 usage or input error, 2 mathematical failure
(non-divisible character, invariant violated by the data, theorem violated).
"""

from __future__ import annotations

import argparse
import json
import sys

from .charring import decompose_weyl_basis
from .linkage import LinkageError, dominant_chain, linkage_chain, linkage_down_set
from .rootdata import RootDataError, build_root_datum, weyl_orbit
from .sources import SourceError, load_character_file, sl2_tilting_character, source_from_character
from .steinberg import (
    NotDivisibleError,
    QuotientError,
    compare_pim_vs_tilting,
    hom_character,
    is_plausible_module_character,
    is_plausible_tilting_character,
    make_quotient,
    restricted_weights,
    tilting_lower_bounds,
    verify_theorem,
)

EXIT_OK, EXIT_INPUT, EXIT_MATH = 0, 1, 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors share exit code 1 with input errors; 2 is reserved for math failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def fmt_weight(w) -> str:
    return ",".join(map(str, w))


def parse_weight(text: str, rank: int, allow_negative: bool = False):
    try:
        w = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise InputError(f"cannot parse weight {text!r}: expected comma-separated integers") from None
    if len(w) != rank:
        raise InputError(f"weight {text!r} has {len(w)} coordinates, rank is {rank}")
    if not allow_negative and any(x < 0 for x in w):
        raise InputError(f"weight {text!r} must be dominant (nonnegative coordinates)")
    return w


def _datum_and_p(args):
    try:
        datum = build_root_datum(args.group)
    except RootDataError as exc:
        raise InputError(str(exc)) from None
    p = args.p
    if p > 2**20:
        raise InputError(f"p={p} too large for the primality check (limit 2^20)")
    if not is_prime(p):
        raise InputError(f"p={p} is not prime")
    return datum, p


def _entries(mapping, datum):
    items = sorted(mapping.items(), key=lambda kv: datum.sort_key(kv[0]), reverse=True)
    return [{"weight": list(w), "coeff": c} for w, c in items]


def _load_source(datum, p, args, path, lam):
    """Return (source, quotient) for a file, or for the builtin SL2 formula."""
    if path is None:
        if not getattr(args, "builtin", False):
            raise InputError("give --input FILE or --builtin")
        if datum.type_label != "A1":
            raise InputError("--builtin is only available for --group A1")
        if lam is None:
            raise InputError("--builtin needs --lambda")
        if not datum.is_restricted(lam, p):
            raise InputError(f"lambda={fmt_weight(lam)} is not p-restricted")
        ch = sl2_tilting_character(p, p - 1 + lam[0])
        src = source_from_character(datum, p, ch, "tilting",
                                    provenance="builtin SL2 tilting character")
    else:
        src = load_character_file(path, datum)
        if src.p != p:
            raise SourceError(f"{path}: file is for p={src.p}, not p={p}")
        if lam is not None and src.lam != lam:
            raise SourceError(
                f"{path}: file describes lambda={fmt_weight(src.lam)}, not {fmt_weight(lam)}"
            )
    sq = make_quotient(datum, p, src.character, src.lam, src.module_kind)
    return src, sq


def cmd_quotient(args) -> int:
    datum, p = _datum_and_p(args)
    lam = parse_weight(args.lam, datum.rank) if args.lam else None
    src, sq = _load_source(datum, p, args, args.input, lam)
    predicted = set(linkage_down_set(datum, p, sq.lam))
    rows = sq.orbit_coeffs.sorted_items()
    if args.format == "json":
        out = src.to_json()
        out["lambda"] = list(sq.lam)
        out["quotient"] = _entries(dict(sq.quotient.items()), datum)
        out["orbit_coeffs"] = _entries(sq.orbit_coeffs.coeffs, datum)
        print(json.dumps(out, indent=1))
        return EXIT_OK
    print(f"{datum.type_label} p={p} lambda=({fmt_weight(sq.lam)}) kind={sq.kind}")
    for mu, c in rows:
        size = len(weyl_orbit(datum, mu))
        flag = "linked" if mu in predicted else "NOT-linked"
        print(f"s({fmt_weight(mu)}): {c}    orbit={size}  {flag}")
    return EXIT_OK


def _report_json(sq, report):
    return {
        "lambda": list(sq.lam),
        "kind": sq.kind,
        "status": report.status,
        "support_ok": report.support_ok,
        "monotonicity_ok": report.monotonicity_ok,
        "predicted_support": [list(m) for m in report.predicted_support],
        "orbit_coeffs": _entries(sq.orbit_coeffs.coeffs, sq.datum),
        "violations": [[list(x) if isinstance(x, tuple) else x for x in v] for v in report.violations],
    }


def cmd_check(args) -> int:
    datum, p = _datum_and_p(args)
    lam = parse_weight(args.lam, datum.rank) if args.lam else None
    targets = []
    if args.input:
        for path in args.input:
            targets.append(_load_source(datum, p, args, path, lam)[1])
    elif args.builtin and lam is None:
        for n in restricted_weights(datum, p):
            targets.append(_load_source(datum, p, args, None, n)[1])
    else:
        targets.append(_load_source(datum, p, args, None, lam)[1])

    failed = False
    results = []
    for sq in targets:
        report = verify_theorem(datum, p, sq)
        results.append(_report_json(sq, report))
        if not report.ok and sq.kind != "pim":
            failed = True
        if args.format != "json":
            sup = "support OK" if report.support_ok else "support FAILED"
            mono = "monotone OK" if report.monotonicity_ok else "monotone FAILED"
            print(f"lambda=({fmt_weight(sq.lam)}) [{sq.kind}] {sup}, {mono}: {report.status}")
            if sq.kind == "pim" and not report.ok:
                print("*** CONJECTURE-VIOLATION: orbit coefficients of a G1T-PIM break the pattern ***")
            for v in report.violations:
                print(f"    violation: {v}")
    if args.format == "json":
        print(json.dumps(results, indent=1))
    return EXIT_MATH if failed else EXIT_OK


def cmd_linkage(args) -> int:
    datum, p = _datum_and_p(args)
    lam = parse_weight(args.src, datum.rank, allow_negative=True)
    mu = parse_weight(args.dst, datum.rank, allow_negative=True)
    if args.dominant:
        chain = dominant_chain(datum, p, lam, mu)
    else:
        chain = linkage_chain(datum, p, lam, mu)
    if args.format == "json":
        out = {"from": list(lam), "to": list(mu), "linked": chain is not None}
        if chain is not None:
            out["chain"] = [list(w) for w in chain.weights]
            out["reflections"] = [
                {"root": list(datum.positive_roots[r.alpha]), "root_index": r.alpha, "n": r.n,
                 "shift": r.n * p}
                for r in chain.reflections
            ]
        print(json.dumps(out, indent=1))
        return EXIT_OK
    if chain is None:
        print("not linked")
        return EXIT_OK
    print(chain.format(p))
    for r in chain.reflections:
        print(f"    a{r.alpha} = ({fmt_weight(datum.positive_roots[r.alpha])}), n = {r.n}")
    return EXIT_OK


def cmd_downset(args) -> int:
    datum, p = _datum_and_p(args)
    lam = parse_weight(args.lam, datum.rank)
    down = linkage_down_set(datum, p, lam)
    if args.format == "json":
        print(json.dumps({"lambda": list(lam), "downset": [list(m) for m in down]}))
    else:
        for mu in down:
            print(f"({fmt_weight(mu)})")
    return EXIT_OK


def cmd_hom(args) -> int:
    datum, p = _datum_and_p(args)
    lam = parse_weight(args.lam, datum.rank) if args.lam else None
    mu = parse_weight(args.mu, datum.rank) if args.mu else None
    _, sq1 = _load_source(datum, p, args, args.input1, lam)
    _, sq2 = _load_source(datum, p, args, args.input2, mu)
    h = hom_character(datum, p, sq1, sq2)
    dec = decompose_weyl_basis(h)
    check = is_plausible_tilting_character if sq1.kind == sq2.kind == "tilting" else \
        is_plausible_module_character
    verdict = check(h)
    label = "plausible-tilting" if check is is_plausible_tilting_character else "plausible-module"
    if args.format == "json":
        print(json.dumps({
            "lambda": list(sq1.lam), "mu": list(sq2.lam),
            "hom_character": _entries(dict(h.items()), datum),
            "weyl_basis": _entries(dec.coeffs, datum),
            label: verdict,
        }, indent=1))
    else:
        print(f"pi_{p}(q({fmt_weight(sq1.lam)}) q({fmt_weight(sq2.lam)})) = {h}")
        weyl = ", ".join(f"{fmt_weight(w)}:{c}" for w, c in dec.sorted_items())
        print(f"Weyl basis {{{weyl}}}")
        print(f"{label}: {'yes' if verdict else 'NO'}")
    return EXIT_OK if verdict else EXIT_MATH


def cmd_compare(args) -> int:
    datum, p = _datum_and_p(args)
    _, pim = _load_source(datum, p, args, args.pim, None)
    bounds = tilting_lower_bounds(datum, p, pim)
    if args.tilting is None:
        print(f"lambda=({fmt_weight(pim.lam)}): lower bounds on tilting coefficients "
              "(from a <= b and monotonicity; no upper bounds known)")
        for mu, b in bounds.items():
            print(f"    b({fmt_weight(mu)}) >= {b}")
        return EXIT_OK
    _, tilt = _load_source(datum, p, args, args.tilting, None)
    rep = compare_pim_vs_tilting(datum, p, pim, tilt)
    for mu, a, b in rep.rows:
        rel = "=" if a == b else ("<" if a < b else ">")
        print(f"s({fmt_weight(mu)}): a={a} {rel} b={b}")
    if rep.violations:
        print("a > b somewhere: the two inputs cannot be a PIM and the tilting module over it")
        return EXIT_MATH
    print("equal" if rep.equal else "strict inequality at " +
          ", ".join(f"({fmt_weight(m)})" for m in rep.strict))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="steinquot",
        description="Steinberg quotients of tilting and G1T-PIM characters.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--group", required=True, help="root system, e.g. A1, A2, B2, G2")
        sp.add_argument("--p", type=int, required=True, help="the characteristic")
        sp.add_argument("--format", choices=("text", "json"), default="text")

    sp = sub.add_parser("quotient", help="Steinberg quotient and orbit table")
    common(sp)
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--input")
    sp.add_argument("--builtin", action="store_true", help="closed-form SL2 tilting character")
    sp.set_defaults(func=cmd_quotient)

    sp = sub.add_parser("check", help="support and monotonicity of orbit coefficients")
    common(sp)
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--input", nargs="+")
    sp.add_argument("--builtin", action="store_true",
                    help="SL2 closed form; without --lambda sweeps all restricted weights")
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("linkage", help="decide lam ^ mu and print a chain")
    common(sp)
    sp.add_argument("--from", dest="src", required=True, help="use --from=-1,0 for negative weights")
    sp.add_argument("--to", dest="dst", required=True)
    sp.add_argument("--dominant", action="store_true", help="chain inside X+ - rho")
    sp.set_defaults(func=cmd_linkage)

    sp = sub.add_parser("downset", help="dominant mu with mu - rho ^ lam - rho")
    common(sp)
    sp.add_argument("--lambda", dest="lam", required=True)
    sp.set_defaults(func=cmd_downset)

    sp = sub.add_parser("hom", help="pi_p of a product of quotients")
    common(sp)
    sp.add_argument("--lambda", dest="lam")
    sp.add_argument("--mu")
    sp.add_argument("--input1")
    sp.add_argument("--input2")
    sp.add_argument("--builtin", action="store_true")
    sp.set_defaults(func=cmd_hom)

    sp = sub.add_parser("compare", help="PIM vs tilting coefficients, or tilting lower bounds")
    common(sp)
    sp.add_argument("--pim", required=True)
    sp.add_argument("--tilting")
    sp.set_defaults(func=cmd_compare)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotDivisibleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH
    except QuotientError as exc:
        print(f"error: invariant violated by the data: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (InputError, SourceError, RootDataError, LinkageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
