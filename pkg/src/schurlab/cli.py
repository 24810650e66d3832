"""``schurlab`` command line: ``verify`` runs identity checks, ``show`` prints objects.

Exit status: 0 when every check passes, 1 when any check fails, 2 on usage
or sampling errors.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .errors import SamplingError, SchurlabError, UsageError
from .exact import as_rational, render
from .identities import (
    CATALOG,
    DEFAULT_SUITE,
    CheckSpec,
    SuiteConfig,
    catalog_text,
    load_config,
    parse_config,
    reports_to_json,
    reports_to_text,
    run_suite,
)
from .identities.engine import unknown_id_message
from .partitions import Partition
from .strips import StripPair, enumerate_B, incompatible_rows, render_triple, triple_weight
from .symfunc import schur, schur_ssyt
from .weights import beta, f_ab, f_ab_oracle, f_abc, f_abc_oracle, parse_signs

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad arguments already; keep its message
    # but route it through our own error type so main() decides the output.
    def error(self, message: str):
        raise UsageError(message)


def _partition(text: str) -> Partition:
    return Partition.parse(text)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _rational_list(text: str) -> list:
    try:
        return [as_rational(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


def _rational(text: str):
    try:
        return as_rational(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"expected a rational number, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schurlab", description="Exact checks of Schur-function identities.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    v = sub.add_parser("verify", help="run identity checks")
    src = v.add_mutually_exclusive_group()
    src.add_argument("--id", help="one identity from the catalog")
    src.add_argument("--suite", help="suite JSON file, or 'default'")
    src.add_argument("--list", action="store_true", help="print the identity catalog")
    v.add_argument("--n", type=int)
    v.add_argument("--m", type=int)
    v.add_argument("--D", type=int)
    v.add_argument("--trials", type=int)
    v.add_argument("--seed", type=int)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--timings", action="store_true", help="include wall-clock times (reports stop being reproducible)")
    v.add_argument("--threads", type=int, help="worker threads (overrides SCHURLAB_THREADS)")

    s = sub.add_parser("show", help="print polynomials, enumerations or coefficients")
    targets = s.add_subparsers(dest="target", parser_class=_Parser)

    sc = targets.add_parser("schur", help="expand a Schur polynomial")
    sc.add_argument("--lambda", dest="lam", required=True)
    sc.add_argument("--n", type=int, required=True)
    sc.add_argument("--route", choices=("jt", "ssyt"), default="jt")

    w = targets.add_parser("weight", help="print f_lam(a,b) or f_lam(a,b,c)")
    w.add_argument("--lambda", dest="lam", required=True)
    w.add_argument("--kind", choices=("ab", "abc", "oracle", "oracle-abc"), default="ab")

    st = targets.add_parser("strips", help="enumerate the pair families B, B_J, B_p or C")
    st.add_argument("--lambda", dest="lam", required=True)
    st.add_argument("--family", choices=("B", "C", "BJ", "Bp"), default="B")
    st.add_argument("--J", default="", help="row set for BJ, e.g. 1,2")
    st.add_argument("--p", type=int, default=0, help="minimum number of incompatible rows for Bp")
    st.add_argument("--count", action="store_true", help="print only the number of pairs")

    b = targets.add_parser("beta", help="evaluate the sign-vector coefficient")
    b.add_argument("--xi", required=True, help="signs such as +-+ (write --xi=-+ when it starts with -)")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--a", default=None)
    b.add_argument("--b", default=None)
    b.add_argument("--x", required=True, help="comma-separated rational coordinates")
    b.add_argument("--tag", choices=("generic", "1,0", "1,-1", "0,0"), default="generic")
    return p


# -- verify ------------------------------------------------------------------------

def _config_from_args(args) -> SuiteConfig:
    if args.suite:
        if args.suite == "default":
            return parse_config(DEFAULT_SUITE, args.seed)
        return load_config(args.suite, args.seed)
    if not args.id:
        raise UsageError("give --id, --suite or --list")
    if args.id not in CATALOG:
        raise UsageError(unknown_id_message(args.id) + "\n\n" + catalog_text())
    spec = CheckSpec(args.id, args.n, args.m, args.D, args.trials)
    return SuiteConfig((spec,), args.seed or 0)


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    if args.list:
        out.write(catalog_text() + "\n")
        return EXIT_OK
    config = _config_from_args(args)
    reports = run_suite(config, threads=args.threads)
    render_fn = reports_to_json if args.format == "json" else reports_to_text
    text = render_fn(reports, timings=args.timings)
    if args.out:
        Path(args.out).write_text(text)
    else:
        out.write(text)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


# -- show --------------------------------------------------------------------------

def _show_strips(args, out) -> int:
    lam = _partition(args.lam)
    fam = args.family
    if fam == "B":
        pairs = enumerate_B(lam, "all")
    elif fam == "C":
        pairs = enumerate_B(lam, "compatible")
    elif fam == "BJ":
        J = _int_list(args.J)
        if any(j < 1 or j > len(lam) for j in J):
            raise UsageError(f"rows in J must lie in 1..{len(lam)}")
        pairs = enumerate_B(lam, "rows", J=J)
    else:
        if args.p < 0:
            raise UsageError("p must be nonnegative")
        pairs = enumerate_B(lam, "min_incompatible", p=args.p)
    pairs = list(pairs)
    if args.count:
        out.write(f"{len(pairs)}\n")
        return EXIT_OK
    for k, pair in enumerate(pairs, 1):
        out.write(_pair_block(lam, pair, k))
    out.write(f"{len(pairs)} pairs\n")
    return EXIT_OK


def _pair_block(lam: Partition, pair: StripPair, k: int) -> str:
    ea, eb, ec = triple_weight(lam, pair)
    bad = sorted(incompatible_rows(pair.nu))
    heights = ",".join(map(str, pair.nu.heights))
    head = f"#{k} mu={pair.mu} nu-columns=({heights}) weight=a^{ea} b^{eb} c^{ec}"
    if bad:
        head += f" incompatible rows={bad}"
    art = render_triple(lam, pair.mu, pair.nu) if lam else "(empty)"
    return head + "\n" + art + "\n\n"


def cmd_show(args, out=None) -> int:
    out = out or sys.stdout
    t = args.target
    if t is None:
        raise UsageError("show needs a target: schur, weight, strips or beta")
    if t == "schur":
        if args.n < 1:
            raise UsageError("--n must be at least 1")
        lam = _partition(args.lam)
        poly = schur(lam, args.n) if args.route == "jt" else schur_ssyt(lam, args.n)
        out.write(render(poly) + "\n")
    elif t == "weight":
        lam = _partition(args.lam)
        fn = {"ab": f_ab, "abc": f_abc, "oracle": f_ab_oracle, "oracle-abc": f_abc_oracle}[args.kind]
        out.write(render(fn(lam)) + "\n")
    elif t == "strips":
        return _show_strips(args, out)
    elif t == "beta":
        xi = parse_signs(args.xi)
        x = _rational_list(args.x)
        if len(x) != len(xi):
            raise UsageError("--x needs one coordinate per sign")
        if args.m < 0:
            raise UsageError("--m must be nonnegative")
        if args.tag == "generic":
            if args.a is None or args.b is None:
                raise UsageError("generic beta needs --a and --b")
            value = beta(xi, args.m, _rational(args.a), _rational(args.b), x)
        else:
            value = beta(xi, args.m, x=x, tag=args.tag)
        out.write(f"{as_rational(value)}\n")
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "show":
            return cmd_show(args)
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    except (UsageError, SamplingError, SchurlabError) as exc:
        print(f"schurlab: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
