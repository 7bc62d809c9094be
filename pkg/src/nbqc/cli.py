"""Command-line front-end: construct, verify, simulate, schedule, route
and cost commands with deterministic, scriptable output.

Exit codes: 0 success, 1 domain/validation error, 2 I/O or parse error.
A config file of key=value lines may supply any flag; explicit flags
override it.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import codefile
from .cost import CATEGORIES, VARIANTS, CostParams, cost as cost_breakdown, render_report, savings
from .construct import CLASS_I, CLASS_II, CodeSpec, build_code, recover_base_region
from .decode import LAYER_I, LAYER_II, DecoderConfig, SimResultRow, build_layer_schedule, run_monte_carlo
from .shuffle import route_schedule, layer_transitions, transition_permutation, _single_row_transition
from .verify import PropertyReport, verify_class1, verify_class2


class CliError(Exception):
    def __init__(self, message: str, code: int = 1):
        super().__init__(message)
        self.code = code


def _spec_from_args(args) -> CodeSpec:
    try:
        if args.code_class == 1:
            if args.c is None or args.n is None:
                raise ValueError("Class-I construction requires --c and --n")
            return CodeSpec.class1(
                args.m, args.c, args.n, args.gamma, args.rho,
                primitive_poly=args.poly,
                surjective_seed=args.random_surjective,
            )
        if args.t is None:
            raise ValueError("Class-II construction requires --t")
        return CodeSpec.class2(
            args.m, args.t, args.gamma, args.rho,
            primitive_poly=args.poly,
            surjective_seed=args.random_surjective,
        )
    except ValueError as exc:
        raise CliError(str(exc), 1)


def cmd_construct(args) -> int:
    spec = _spec_from_args(args)
    h, _, _, fld = build_code(spec)
    codefile.write_code(args.output, spec, h, fld)
    density = h.nnz() / (h.rows * h.cols)
    print(f"wrote {args.output}: H is {h.rows}x{h.cols}, nnz={h.nnz()}, density={density:.6f}")
    return 0


def _read_code(path: str):
    try:
        return codefile.read_code(path)
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", 2)
    except codefile.CodeFileError as exc:
        raise CliError(f"parse error in {path}: {exc}", 2)


def cmd_verify(args) -> int:
    spec, h, fld = _read_code(args.code)
    try:
        region = recover_base_region(h, fld)
    except ValueError as exc:
        raise CliError(f"CPM structure violated: {exc}", 1)
    if spec.code_class == CLASS_I:
        report = verify_class1(
            fld, region, spec.c, spec.n, region_rows=spec.gamma, region_cols=spec.rho
        )
    else:
        indexing = None
        if spec.rho == spec.dim:
            from .construct import SubgroupIndexing

            beta = tuple(int(region[0, l]) for l in range(spec.n))
            delta = tuple(int(region[0, j * spec.n]) for j in range(spec.c))
            indexing = SubgroupIndexing(beta, delta)
        report = verify_class2(
            fld, region, spec.c, spec.n, indexing,
            region_rows=spec.gamma, region_cols=spec.rho,
        )
    print(report.render())
    return 0 if report.all_passed else 1


def _parse_quant(text: str | None):
    if text is None:
        return None
    try:
        b_q, b_f = (int(x) for x in text.split(","))
        return (b_q, b_f)
    except ValueError:
        raise CliError(f"bad --quant value {text!r}; expected BQ,BF", 1)


def cmd_simulate(args) -> int:
    spec, h, fld = _read_code(args.code)
    partition = LAYER_I if args.partition == "layer1" else LAYER_II
    schedule = build_layer_schedule(h, partition)
    try:
        snrs = [float(s) for s in args.snr_list.split(",") if s.strip()]
    except ValueError:
        raise CliError(f"bad --snr-list value {args.snr_list!r}", 1)
    if not snrs:
        raise CliError("empty SNR list", 1)
    config = DecoderConfig(
        max_iter=args.max_iter, quant=_parse_quant(args.quant), rng_seed=args.seed
    )
    rows = run_monte_carlo(h, schedule, fld, snrs, args.trials, config, workers=args.workers)
    print(SimResultRow.CSV_HEADER)
    for row in rows:
        print(row.csv())
    return 0


def cmd_schedule(args) -> int:
    spec, h, fld = _read_code(args.code)
    qm1 = fld.q - 1
    if args.partition == "layer1":
        pairs = layer_transitions(spec)
        perms = [(s, d, transition_permutation(spec, s, d)) for s, d in pairs]
    else:
        total = spec.gamma * qm1
        perms = [
            (r, (r + 1) % total, _single_row_transition(spec, r, (r + 1) % total))
            for r in range(total)
        ]
    for s, d, perm in perms:
        moved = ", ".join(f"{src} -> {dst}" for src, dst in enumerate(perm.map))
        print(f"transition layer {s} to layer {d}: {moved}")
    return 0


def cmd_route(args) -> int:
    spec, h, fld = _read_code(args.code)
    partition = LAYER_I if args.partition == "layer1" else LAYER_II
    report = route_schedule(spec, partition)
    print(report.render())
    if any(not t.realized for t in report.transitions):
        raise CliError("internal error: a scheduled permutation failed to route", 1)
    return 0


def _parse_weights(text: str):
    if text == "wires":
        return None  # library default
    if text == "all":
        return {cat: 1.0 for cat in CATEGORIES}
    try:
        out = {}
        for part in text.split(","):
            cat, _, w = part.partition("=")
            out[cat.strip()] = float(w)
        return out
    except ValueError:
        raise CliError(f"bad --weights value {text!r}", 1)


def cmd_cost(args) -> int:
    try:
        params = CostParams(
            b_q=args.bq, n_m=args.nm, d_c=args.dc, q=args.q,
            gamma=args.gamma, rho=args.rho, p=args.p,
        )
        weights = _parse_weights(args.weights)
        print(render_report(params, as_csv=args.format == "csv"))
        breakdowns = {v: cost_breakdown(v, params) for v in VARIANTS}
        for prop in ("P1", "P2", "P3", "P4"):
            for ref in ("Ref4", "Ref5"):
                s = savings(breakdowns[prop], breakdowns[ref], weights)
                print(f"savings[{prop} vs {ref}, weights={args.weights}] = {s:.4f}")
    except (ValueError, ZeroDivisionError) as exc:
        raise CliError(str(exc), 1)
    return 0


def _apply_config(argv: list[str]) -> list[str]:
    """Expand `--config FILE` into key=value flags placed before the
    explicit ones, so explicit flags win."""
    if "--config" not in argv:
        return argv
    i = argv.index("--config")
    if i + 1 >= len(argv):
        raise CliError("--config requires a path", 1)
    path = argv[i + 1]
    try:
        with open(path) as f:
            lines = [ln.strip() for ln in f if ln.strip() and not ln.strip().startswith("#")]
    except OSError as exc:
        raise CliError(f"cannot read config {path}: {exc}", 2)
    extra: list[str] = []
    for ln in lines:
        key, sep, val = ln.partition("=")
        if not sep:
            raise CliError(f"bad config line {ln!r}; expected key=value", 2)
        extra.append(f"--{key.strip()}")
        if val.strip():
            extra.append(val.strip())
    rest = argv[:i] + argv[i + 2 :]
    # subcommand first, then config-derived flags, then explicit flags
    return rest[:1] + extra + rest[1:]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nbqc", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", help="build a code and write it to disk")
    p.add_argument("--class", dest="code_class", type=int, choices=(1, 2), required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--c", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--poly", type=lambda s: int(s, 16), default=None, metavar="HEX")
    p.add_argument("--random-surjective", type=int, default=None, metavar="SEED")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", help="run structure checks on a code file")
    p.add_argument("code")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("simulate", help="Monte-Carlo FER/BER sweep")
    p.add_argument("--code", required=True)
    p.add_argument("--snr-list", required=True, help="comma-separated Eb/N0 values in dB")
    p.add_argument("--trials", type=int, default=1000)
    p.add_argument("--max-iter", type=int, default=10)
    p.add_argument("--partition", choices=("layer1", "layer2"), default="layer1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--quant", default=None, metavar="BQ,BF")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("schedule", help="print inter-layer routing maps")
    p.add_argument("--code", required=True)
    p.add_argument("--partition", choices=("layer1", "layer2"), default="layer1")
    p.set_defaults(func=cmd_schedule)

    p = sub.add_parser("route", help="route schedules through the network model")
    p.add_argument("--code", required=True)
    p.add_argument("--partition", choices=("layer1", "layer2"), default="layer1")
    p.set_defaults(func=cmd_route)

    p = sub.add_parser("cost", help="hardware complexity comparison table")
    p.add_argument("--bq", type=int, required=True)
    p.add_argument("--nm", type=int, required=True)
    p.add_argument("--dc", type=int, required=True)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--rho", type=int, required=True)
    p.add_argument("--weights", default="wires")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.set_defaults(func=cmd_cost)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        argv = _apply_config(argv)
        args = build_parser().parse_args(argv)
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
