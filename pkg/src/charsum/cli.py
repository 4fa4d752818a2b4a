"""Command-line driver: point-count verification, identity suites, and evaluation.

Exit codes: 0 all reports match, 1 at least one mismatch, 2 invalid input.
JSON output is line-delimited with the fixed key set
{q, e, d, a, b, formula_re, formula_im, oracle, match, disc, ms};
verify streams add a leading "case" key naming the checked identity/config.
CSV uses the same columns in the same order.  The "table" format is for
humans and not schema-stable.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import random
import sys
import time

from . import apps, chars, curves, hyperf, sums
from .field import DEFAULT_SIZE_CAP, DEFAULT_TOL, FieldError, factor_prime_power, make_field
from .report import VerifyReport

VERIFY_SUITES = (
    "lemmas",
    "davenport-hasse",
    "binom-props",
    "special-values",
    "cubic-transform",
    "edwards",
    "lennon",
    "e34",
)

_COLUMNS = ["q", "e", "d", "a", "b", "formula_re", "formula_im", "oracle", "match", "disc", "ms"]


class CliError(Exception):
    """Invalid command-line input (exit code 2)."""


def _build_field(args):
    size_cap = args.size_cap
    if size_cap is None:
        size_cap = int(os.environ.get("CHARSUM_SIZE_CAP", DEFAULT_SIZE_CAP))
    try:
        if args.q is not None:
            p, n = factor_prime_power(args.q)
        else:
            if args.p is None:
                raise CliError("need --q or --p (with optional --n)")
            p, n = args.p, args.n
        return make_field(p, n, size_cap=size_cap, tol=args.tol)
    except FieldError as exc:
        raise CliError(str(exc)) from exc


def _parse_element(ctx, text: str, label: str) -> int:
    try:
        coeffs = [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise CliError(f"bad element literal for {label}: {text!r}") from exc
    if ctx.n == 1:
        if len(coeffs) != 1:
            raise CliError(f"{label} must be a single residue for a prime field")
        return coeffs[0] % ctx.p
    if len(coeffs) > ctx.n:
        raise CliError(f"{label} has more than {ctx.n} coefficients")
    return ctx.from_coeffs(coeffs + [0] * (ctx.n - len(coeffs)))


def _parse_exponents(text: str, label: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",")]
    except ValueError as exc:
        raise CliError(f"bad exponent list for {label}: {text!r}") from exc


class _Emitter:
    """Serializes report rows in a fixed, deterministic column order."""

    def __init__(self, fmt: str, stream):
        self.fmt = fmt
        self.stream = stream
        self._csv = None
        self._wrote_header = False
        self.all_match = True

    def emit(self, row: dict, case: str | None = None):
        if not row.get("match", False):
            self.all_match = False
        ordered = {}
        if case is not None:
            ordered["case"] = case
        for key in _COLUMNS:
            ordered[key] = row.get(key)
        if self.fmt == "json":
            self.stream.write(json.dumps(ordered) + "\n")
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.writer(self.stream)
            if not self._wrote_header:
                self._csv.writerow(ordered.keys())
                self._wrote_header = True
            self._csv.writerow(ordered.values())
        else:  # table
            if not self._wrote_header:
                self.stream.write("  ".join(f"{k:>11}" for k in ordered) + "\n")
                self._wrote_header = True
            cells = []
            for v in ordered.values():
                if isinstance(v, float):
                    cells.append(f"{v:>11.4g}")
                else:
                    cells.append(f"{str(v):>11}")
            self.stream.write("  ".join(cells) + "\n")


def _report_row(report: VerifyReport) -> dict:
    return report.to_row()


# ---------------------------------------------------------------------------
# count
# ---------------------------------------------------------------------------

def _count_cases(ctx, args):
    if args.sweep:
        for a in ctx.units():
            for b in ctx.units():
                yield a, b
    elif args.random:
        rng = random.Random(args.seed)
        for _ in range(args.random):
            yield rng.randrange(1, ctx.q), rng.randrange(1, ctx.q)
    else:
        if args.a is None or args.b is None:
            raise CliError("need --a and --b (or --sweep / --random N)")
        a = _parse_element(ctx, args.a, "--a")
        b = _parse_element(ctx, args.b, "--b")
        if a == 0 or b == 0:
            raise CliError("a and b must be nonzero")
        yield a, b


def cmd_count(args, emitter: _Emitter) -> None:
    ctx = _build_field(args)
    if args.e < 1 or args.d < 2:
        raise CliError("need e >= 1 and d >= 2")
    probe = curves.CurveSpec(ctx, args.e, args.d, 1, 1)
    try:
        curves.require_congruence(probe)
    except curves.CongruenceError as exc:
        raise CliError(str(exc)) from exc
    for a, b in _count_cases(ctx, args):
        spec = curves.CurveSpec(ctx, args.e, args.d, a, b)
        t0 = time.perf_counter()
        oracle = curves.count_bruteforce(spec)
        try:
            formula = curves.count_theorem(spec)
            disc = float(abs(formula - oracle))
            formula_re = float(formula)
        except curves.RoundingGuardError:
            formula_re = float("nan")
            disc = float("inf")
        ms = (time.perf_counter() - t0) * 1e3
        emitter.emit(
            {
                "q": ctx.q,
                "e": args.e,
                "d": args.d,
                "a": a,
                "b": b,
                "formula_re": formula_re,
                "formula_im": 0.0,
                "oracle": oracle,
                "match": disc == 0.0,
                "disc": disc,
                "ms": ms,
            }
        )


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------

def _suite_lemmas(ctx, args):
    for name in sums.IDENTITY_NAMES:
        report = sums.verify_identity(ctx, name, seed=args.seed)
        yield name, report


def _suite_davenport_hasse(ctx, args):
    if args.d is None:
        raise CliError("davenport-hasse needs --d")
    for t in (1, -1):
        try:
            report = sums.davenport_hasse(ctx, args.d, t=t)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
        yield f"davenport-hasse(t={t})", report


def _suite_binom_props(ctx, args):
    for name in ("binom-translate", "binom-absorb", "binom-complement", "binom-transpose"):
        yield name, sums.verify_identity(ctx, name)


def _suite_special_values(ctx, args):
    ran = 0
    for which in ("half", "frac-1323-1331"):
        try:
            report = apps.special_value_check(ctx, which)
        except ValueError:
            continue
        ran += 1
        yield f"special-{which}", report
    if not ran:
        raise CliError(f"no special-value identity is admissible at q = {ctx.q}")


def _suite_cubic_transform(ctx, args):
    if (ctx.q - 1) % 12:
        raise CliError(f"q = {ctx.q} is not 1 mod 12")
    ran = 0
    for b in ctx.units():
        if chars.legendre(ctx, b) != 1:
            continue
        for a in ctx.units():
            for branch in (0, 1):
                try:
                    report = apps.cubic_transform_check(ctx, a, b, branch=branch)
                except ValueError:
                    continue
                ran += 1
                yield f"cubic-transform(branch={branch})", report
    if not ran:
        raise CliError("no admissible (a, b) pairs")


def _random_unit_pairs(ctx, rng, count, distinct=False):
    out = []
    while len(out) < count:
        a = rng.randrange(1, ctx.q)
        b = rng.randrange(1, ctx.q)
        if distinct and a == b:
            continue
        out.append((a, b))
    return out


def _suite_edwards(ctx, args):
    # the closed form does not cover alpha == beta (series argument 1);
    # sampling sticks to the off-diagonal where it is an identity
    rng = random.Random(args.seed)
    for alpha, beta in _random_unit_pairs(ctx, rng, args.count, distinct=True):
        t0 = time.perf_counter()
        oracle = apps.edwards_count_bruteforce(ctx, alpha, beta)
        formula = apps.edwards_count_formula(ctx, alpha, beta)
        ms = (time.perf_counter() - t0) * 1e3
        report = VerifyReport(
            name="edwards",
            q=ctx.q,
            a=alpha,
            b=beta,
            formula=complex(formula),
            oracle=oracle,
            match=formula == oracle,
            disc=float(abs(formula - oracle)),
            cases=1,
            ms=ms,
        )
        yield "edwards", report


def _trace_suite(ctx, args, label, congruence, trace_fn, curve_ed):
    if (ctx.q - 1) % congruence:
        raise CliError(f"q = {ctx.q} is not 1 mod {congruence}")
    rng = random.Random(args.seed)
    pairs = _random_unit_pairs(ctx, rng, args.count)
    e, d = curve_ed
    for a, b in pairs:
        t0 = time.perf_counter()
        spec = curves.CurveSpec(ctx, e, d, a, b)
        oracle = ctx.q - curves.count_bruteforce(spec)
        formula = trace_fn(ctx, a, b)
        ms = (time.perf_counter() - t0) * 1e3
        yield label, VerifyReport(
            name=label,
            q=ctx.q,
            e=e,
            d=d,
            a=a,
            b=b,
            formula=complex(formula),
            oracle=oracle,
            match=formula == oracle,
            disc=float(abs(formula - oracle)),
            cases=1,
            ms=ms,
        )


def _suite_lennon(ctx, args):
    yield from _trace_suite(ctx, args, "lennon", 12, apps.lennon_trace, (2, 3))


def _suite_e34(ctx, args):
    yield from _trace_suite(ctx, args, "e34", 36, apps.e34_trace, (3, 4))


_SUITE_RUNNERS = {
    "lemmas": _suite_lemmas,
    "davenport-hasse": _suite_davenport_hasse,
    "binom-props": _suite_binom_props,
    "special-values": _suite_special_values,
    "cubic-transform": _suite_cubic_transform,
    "edwards": _suite_edwards,
    "lennon": _suite_lennon,
    "e34": _suite_e34,
}


def cmd_verify(args, emitter: _Emitter) -> None:
    if args.suite not in _SUITE_RUNNERS:
        raise CliError(
            f"unknown suite {args.suite!r}; known: {', '.join(VERIFY_SUITES)}"
        )
    ctx = _build_field(args)
    for case, report in _SUITE_RUNNERS[args.suite](ctx, args):
        row = _report_row(report)
        emitter.emit(row, case=case)


# ---------------------------------------------------------------------------
# eval
# ---------------------------------------------------------------------------

def _format_value(value: complex) -> str:
    if abs(value.imag) < 1e-12:
        return f"{value.real:.12g}"
    return f"{value.real:.12g}{value.imag:+.12g}j"


def cmd_eval(args, emitter: _Emitter) -> None:
    ctx = _build_field(args)
    if args.what == "gauss":
        if args.m is None:
            raise CliError("eval gauss needs --m")
        value = sums.gauss_sum(ctx, args.m)
    elif args.what == "jacobi":
        if args.exps is None:
            raise CliError("eval jacobi needs --exps m1,m2,...")
        exps = _parse_exponents(args.exps, "--exps")
        value = sums.jacobi_sum(ctx, *exps) if len(exps) == 2 else sums.jacobi_multi(ctx, exps)
    elif args.what == "binom":
        if args.top is None or args.bottom is None:
            raise CliError("eval binom needs --top and --bottom")
        value = sums.greene_binom(ctx, args.top, args.bottom)
    elif args.what == "hf":
        if args.upper is None or args.lower is None or args.x is None:
            raise CliError("eval hf needs --upper, --lower and --x")
        upper = _parse_exponents(args.upper, "--upper")
        lower = _parse_exponents(args.lower, "--lower")
        x = _parse_element(ctx, args.x, "--x")
        try:
            value = hyperf.hf_eval(ctx, upper, lower, x)
        except ValueError as exc:
            raise CliError(str(exc)) from exc
    else:  # pragma: no cover - argparse restricts choices
        raise CliError(f"unknown eval target {args.what!r}")
    if args.format == "json":
        print(json.dumps({"value_re": value.real, "value_im": value.imag}))
    else:
        print(_format_value(value))


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _add_field_args(parser):
    parser.add_argument("--q", type=int, help="field size (prime power)")
    parser.add_argument("--p", type=int, help="characteristic (alternative to --q)")
    parser.add_argument("--n", type=int, default=1, help="extension degree (with --p)")
    parser.add_argument("--tol", type=float, default=DEFAULT_TOL,
                        help="base per-summand tolerance")
    parser.add_argument("--size-cap", type=int, default=None,
                        help="max permitted q (env CHARSUM_SIZE_CAP)")
    parser.add_argument("--format", choices=("json", "csv", "table"), default="table")
    parser.add_argument("--seed", type=int, default=0, help="seed for random sweeps")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="charsum",
        description="Finite-field character sums, hypergeometric series, and "
        "curve point-count verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", help="compare closed-form and brute-force counts")
    _add_field_args(p_count)
    p_count.add_argument("--e", type=int, required=True)
    p_count.add_argument("--d", type=int, required=True)
    p_count.add_argument("--a", type=str, help="element literal")
    p_count.add_argument("--b", type=str, help="element literal")
    p_count.add_argument("--sweep", action="store_true", help="all (a, b) pairs")
    p_count.add_argument("--random", type=int, default=0, metavar="N",
                         help="N seeded random (a, b) pairs")
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", help="run an identity/formula suite")
    _add_field_args(p_verify)
    p_verify.add_argument("--suite", required=True,
                          help=f"one of: {', '.join(VERIFY_SUITES)}")
    p_verify.add_argument("--d", type=int, default=None,
                          help="section order for davenport-hasse")
    p_verify.add_argument("--count", type=int, default=100,
                          help="sample size for randomized suites")
    p_verify.set_defaults(func=cmd_verify)

    p_eval = sub.add_parser("eval", help="evaluate one sum/series value")
    p_eval.add_argument("what", choices=("gauss", "jacobi", "binom", "hf"))
    _add_field_args(p_eval)
    p_eval.add_argument("--m", type=int, help="character exponent (gauss)")
    p_eval.add_argument("--exps", type=str, help="exponent list (jacobi)")
    p_eval.add_argument("--top", type=int, help="top exponent (binom)")
    p_eval.add_argument("--bottom", type=int, help="bottom exponent (binom)")
    p_eval.add_argument("--upper", type=str, help="upper exponent list (hf)")
    p_eval.add_argument("--lower", type=str, help="lower exponent list (hf)")
    p_eval.add_argument("--x", type=str, help="series argument element (hf)")
    p_eval.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    emitter = _Emitter(args.format, sys.stdout)
    try:
        args.func(args, emitter)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if emitter.all_match else 1


if __name__ == "__main__":
    sys.exit(main())
