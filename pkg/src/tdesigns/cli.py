"""Command line front end.

Exit codes: 0 design (or success), 1 non-design, 2 input error,
3 disagreement between verification methods, 4 a built-in fixture failed.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__
from .admissibility import steiner_half_report
from .boolfn import anf, walsh_full
from .codes import code_weight_distribution
from .delsarte import johnson_design_check, oa_strength, outer_distribution_hamming, relative_design_check
from .design import IncidenceStructure, lambda_as_fraction, verify_bruteforce
from .errors import BudgetExceeded, InconsistencyError
from .exactmath import krawtchouk
from .fileio import (
    DesignFormatError,
    parse_design,
    parse_vectors,
    render_design,
    spectrum_csv,
    weight_distribution_csv,
)
from .fixtures import FIXTURE_NAMES, FixtureError, load_fixture
from .spectral import verify_spectral, weight_class_spectrum

EXIT_DESIGN, EXIT_NOT_DESIGN, EXIT_INPUT, EXIT_DISAGREE, EXIT_FIXTURE = range(5)
METHODS = ("spectral", "bruteforce", "johnson", "relative")


class InputError(Exception):
    pass


def _exact(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def _load_structure(args) -> IncidenceStructure:
    if getattr(args, "fixture", None):
        return load_fixture(args.fixture).structure
    if not args.design:
        raise InputError("one of --design FILE or --fixture NAME is required")
    try:
        text = Path(args.design).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.design}: {exc.strerror}") from None
    try:
        return parse_design(text)
    except DesignFormatError as exc:
        raise InputError(f"{args.design}: {exc}") from None


def _emit(args, text: str):
    if getattr(args, "output", None):
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)


def _run_method(method: str, D: IncidenceStructure, t: int) -> tuple[bool, dict]:
    if method == "bruteforce":
        params = verify_bruteforce(D, t)
        return params is not None, {} if params is None else {"lambda": params.lam}
    if method == "spectral":
        v = verify_spectral(D, t)
        if v.is_design:
            return True, {"lambda": v.lam}
        w = v.first_violation
        return False, {"witness": {"w": list(w.w.points), "expected": _exact(w.expected), "actual": w.actual}}
    if method == "johnson":
        return johnson_design_check(D, t), {}
    return relative_design_check(D, t), {}


def cmd_verify(args) -> int:
    D = _load_structure(args)
    t = args.t
    if not 1 <= t <= D.k:
        raise InputError(f"--t must lie in [1, k={D.k}], got {t}")
    methods = METHODS if args.method == "all" else (args.method,)
    results = {m: _run_method(m, D, t) for m in methods}
    verdicts = {m: r[0] for m, r in results.items()}
    out = {"n": D.n, "k": D.k, "b": D.b, "t": t, "method": args.method}
    for m, (_, extra) in results.items():
        for key, val in extra.items():
            out.setdefault(key, val)
    if len(set(verdicts.values())) > 1:
        out["disagreement"] = verdicts
        _emit(args, json.dumps(out) + "\n")
        return EXIT_DISAGREE
    is_design = next(iter(verdicts.values()))
    out["is_design"] = is_design
    if len(methods) > 1:
        out["methods"] = verdicts
    if is_design:
        out.setdefault("lambda", _exact(lambda_as_fraction(t, D.n, D.k, D.b)))
        out["params"] = f"{t}-({D.n},{D.k},{out['lambda']})"
    _emit(args, json.dumps(out) + "\n")
    return EXIT_DESIGN if is_design else EXIT_NOT_DESIGN


def cmd_spectrum(args) -> int:
    D = _load_structure(args)
    f = D.characteristic_function()
    if args.weights == "all":
        by_weight = walsh_full(f).by_weight()
    else:
        try:
            top = int(args.weights)
        except ValueError:
            raise InputError(f"--weights takes 'all' or an integer, got {args.weights!r}") from None
        if not 0 <= top <= D.n:
            raise InputError(f"--weights must lie in [0, {D.n}]")
        by_weight = weight_class_spectrum(f, range(top + 1))
    if args.format == "json":
        rows = [{"weight": h, "value": v, "multiplicity": m}
                for h in sorted(by_weight) for v, m in sorted(by_weight[h].items())]
        _emit(args, json.dumps(rows) + "\n")
    else:
        _emit(args, spectrum_csv(by_weight))
    return 0


def cmd_anf(args) -> int:
    D = _load_structure(args)
    form = anf(D.characteristic_function())
    hist = {str(d): c for d, c in sorted(form.degree_histogram.items())}
    if args.format == "json":
        terms = form.render().splitlines()
        _emit(args, json.dumps({"terms": terms, "degree_histogram": hist}) + "\n")
    else:
        _emit(args, form.render() + "\n" + json.dumps({"degree_histogram": hist}) + "\n")
    return 0


def cmd_krawtchouk(args) -> int:
    n = args.n
    if n < 1:
        raise InputError("n must be positive")
    ks = range(n + 1) if args.k is None else [args.k]
    xs = range(n + 1) if args.x is None else [args.x]
    for v in (*ks, *xs):
        if not 0 <= v <= n:
            raise InputError(f"index {v} outside [0, {n}]")
    rows = ["k,x,value"] + [f"{k},{x},{krawtchouk(n, k, x)}" for k in ks for x in xs]
    _emit(args, "\n".join(rows) + "\n")
    return 0


def cmd_admissible(args) -> int:
    lo = args.min if args.min is not None else args.lo
    hi = args.max if args.max is not None else args.hi
    if lo is None or hi is None:
        raise InputError("give a range as 'MIN MAX' or '--min N --max N'")
    if lo < 4 or lo > hi:
        raise InputError(f"need 4 <= min <= max, got {lo}, {hi}")
    lines = []
    for n in range(lo + lo % 2, hi + 1, 2):
        lines.append(json.dumps(steiner_half_report(n).as_json()))
    _emit(args, "\n".join(lines) + ("\n" if lines else ""))
    return 0


def cmd_code(args) -> int:
    D = _load_structure(args)
    dist = code_weight_distribution(D.characteristic_function())
    if args.format == "json":
        out = {"length": dist.length, "dimension": dist.dimension,
               "minimum_distance": dist.minimum_distance,
               "counts": {str(w): c for w, c in dist.rows()}}
        _emit(args, json.dumps(out) + "\n")
    else:
        _emit(args, weight_distribution_csv(dist.counts))
    return 0


def cmd_oa(args) -> int:
    if not args.design:
        raise InputError("--design FILE is required")
    try:
        text = Path(args.design).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.design}: {exc.strerror}") from None
    try:
        f = parse_vectors(text) if args.rows_as_vectors else parse_design(text).characteristic_function()
    except DesignFormatError as exc:
        raise InputError(f"{args.design}: {exc}") from None
    outer = outer_distribution_hamming(f)
    out = {"n": f.n, "rows": f.weight, "strength": oa_strength(f),
           "outer_distribution": [_exact(x) for x in outer.Bp]}
    _emit(args, json.dumps(out) + "\n")
    return 0


def cmd_gen_fixtures(args) -> int:
    outdir = Path(args.output or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    for name in FIXTURE_NAMES:
        fx = load_fixture(name)
        path = outdir / f"{name}.design"
        path.write_text(render_design(fx.structure))
        print(f"{path} {fx.expected_params or 'not a design'}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tdesigns", description="Exact t-design verification and Walsh spectra.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    def with_design(sp, fixture=True):
        sp.add_argument("--design", metavar="FILE")
        if fixture:
            sp.add_argument("--fixture", choices=FIXTURE_NAMES, help="use a built-in structure instead of a file")
        sp.add_argument("--output", metavar="FILE")

    sp = sub.add_parser("verify", help="decide whether a structure is a t-design")
    with_design(sp)
    sp.add_argument("--t", type=int, required=True)
    sp.add_argument("--method", choices=(*METHODS, "all"), default="spectral")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("spectrum", help="Walsh spectrum by weight class")
    with_design(sp)
    sp.add_argument("--weights", default="all", help="'all' or T for weights 0..T")
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_spectrum)

    sp = sub.add_parser("anf", help="algebraic normal form of the characteristic function")
    with_design(sp)
    sp.add_argument("--format", choices=("csv", "json"), default="csv",
                    help="csv: one term per line then a histogram line")
    sp.set_defaults(func=cmd_anf)

    sp = sub.add_parser("krawtchouk", help="table of P_k(x) for length n")
    sp.add_argument("n", type=int)
    sp.add_argument("--k", type=int)
    sp.add_argument("--x", type=int)
    sp.add_argument("--output", metavar="FILE")
    sp.set_defaults(func=cmd_krawtchouk)

    sp = sub.add_parser("admissible", help="filters for (n-2)/2-(n, n/2, 1) over even n")
    sp.add_argument("lo", type=int, nargs="?")
    sp.add_argument("hi", type=int, nargs="?")
    sp.add_argument("--min", type=int)
    sp.add_argument("--max", type=int)
    sp.add_argument("--output", metavar="FILE")
    sp.set_defaults(func=cmd_admissible)

    sp = sub.add_parser("code", help="weight distribution of the code C_f")
    with_design(sp)
    sp.add_argument("--format", choices=("csv", "json"), default="csv")
    sp.set_defaults(func=cmd_code)

    sp = sub.add_parser("oa", help="orthogonal-array strength of a set of rows")
    with_design(sp, fixture=False)
    sp.add_argument("--rows-as-vectors", action="store_true", help="rows may have any weight ('-' is the zero row)")
    sp.set_defaults(func=cmd_oa)

    sp = sub.add_parser("gen-fixtures", help="write the built-in fixtures as design files")
    sp.add_argument("--output", metavar="DIR", help="target directory (default: current)")
    sp.set_defaults(func=cmd_gen_fixtures)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except FixtureError as exc:
        print(f"fixture failure: {exc}", file=sys.stderr)
        return EXIT_FIXTURE
    except InconsistencyError as exc:
        print(f"internal disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except (InputError, BudgetExceeded, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
