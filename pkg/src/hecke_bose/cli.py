"""Command-line interface: verification suites, Bethe solving, wave-function
tables, and Hall-Littlewood evaluation, with machine-readable output."""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction

from . import bethe, hamiltonian, verify, weyl
from .bethe import BetheSolverError, bethe_wave_function
from .weyl import Params


def _fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as err:
        raise argparse.ArgumentTypeError("invalid rational %r: %s" % (text, err))


def _fraction_list(text):
    return tuple(_fraction(part) for part in text.split(","))


def _int_list(text):
    return tuple(int(part) for part in text.split(","))


def _threads():
    raw = os.environ.get("HECKE_BOSE_THREADS")
    if raw is None:
        return None
    n = int(raw)
    if n < 1:
        raise SystemExit("HECKE_BOSE_THREADS must be a positive integer")
    return n


def _emit(payload, out, fmt="json"):
    if fmt == "json":
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        text = payload  # already rendered
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _scalar_cell(value):
    if isinstance(value, Fraction):
        return "%d/%d" % (value.numerator, value.denominator)
    if isinstance(value, complex):
        return [value.real, value.imag]
    return value


def cmd_verify(args):
    params = Params(args.k, args.L, args.alpha, args.beta)
    _threads()
    report = verify.run_suite(args.suite, params, args.window, args.seed)
    _emit(report, args.out)
    return 0 if not report["failures"] else 1


def cmd_bethe(args):
    params = Params(args.k, args.L, args.alpha, args.beta)
    _threads()
    t0 = time.perf_counter()
    try:
        root = bethe.solve_bethe(params, args.seeds, homotopy_steps=args.steps)
    except BetheSolverError as err:
        _emit(
            {
                "schema": 1,
                "error": str(err),
                "failing_s": err.s,
                "params": _params_dict(params),
            },
            args.out,
        )
        return 1

    h = bethe_wave_function(root, params)
    lam = sum(root.p)
    pi = weyl.pi_element(params.k, params.L)
    eig_defect = 0.0
    pi_defect = 0.0
    for x in verify.window_points(params.k, args.window):
        hx = h(x)
        scale = 1.0 + abs(hx)
        eig_defect = max(
            eig_defect, abs(hamiltonian.apply_H(h, x, params) - lam * hx) / scale
        )
        pi_defect = max(pi_defect, abs(h(weyl.act(pi, x)) - hx) / scale)

    report = {
        "schema": 1,
        "params": _params_dict(params),
        "seeds": list(args.seeds),
        "steps": args.steps,
        "window": args.window,
        "roots": [[v.real, v.imag] for v in root.p],
        "residual": root.residual,
        "eigenvalue": [lam.real, lam.imag],
        "eigenfunction_defect": eig_defect,
        "pi_invariance_defect": pi_defect,
        "elapsed_ms": round(1000 * (time.perf_counter() - t0), 3),
    }
    _emit(report, args.out)
    return 0


def _params_dict(params):
    return {
        "k": params.k,
        "L": params.L,
        "alpha": str(params.alpha),
        "beta": str(params.beta),
    }


def cmd_wavefunction(args):
    params = Params(args.k, args.L, args.alpha, args.beta)
    _threads()
    if args.p_file:
        with open(args.p_file) as fh:
            data = json.load(fh)
        p = tuple(complex(re, im) for re, im in data["roots"])
    elif args.p:
        p = args.p
    else:
        raise SystemExit("wavefunction requires --p or --p-file")
    if len(p) != params.k:
        raise SystemExit("need exactly k spectral parameters")

    h = bethe_wave_function(p, params)
    rows = [(list(x), _scalar_cell(h(x))) for x in verify.window_points(params.k, args.window)]

    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        header = ["x%d" % (i + 1) for i in range(params.k)]
        complex_mode = rows and isinstance(rows[0][1], list)
        writer.writerow(header + (["re", "im"] if complex_mode else ["value"]))
        for x, value in rows:
            writer.writerow(x + (value if complex_mode else [value]))
        _emit(buf.getvalue(), args.out, fmt="csv")
    else:
        _emit(
            {
                "schema": 1,
                "params": _params_dict(params),
                "window": args.window,
                "rows": [{"x": x, "value": value} for x, value in rows],
            },
            args.out,
        )
    return 0


def cmd_hall_littlewood(args):
    lam = bethe.Partition(args.lam)
    value = bethe.hall_littlewood_P(lam, args.z, args.t)
    _emit(
        {
            "schema": 1,
            "lam": list(lam.parts),
            "z": [str(v) for v in args.z],
            "t": str(args.t),
            "value": _scalar_cell(value),
        },
        args.out,
    )
    return 0


def _add_params(parser):
    parser.add_argument("--k", type=int, required=True, help="particle number (>= 2)")
    parser.add_argument("--L", type=int, required=True, help="system size (>= 1)")
    parser.add_argument("--alpha", type=_fraction, default=Fraction(0), help="coupling alpha, as a/b")
    parser.add_argument("--beta", type=_fraction, default=Fraction(1), help="coupling beta, as a/b")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="hecke-bose",
        description="Exact verification and computation for the discrete periodic "
        "delta Bose gas and its integral-reflection operators.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="run a named identity suite")
    p_verify.add_argument("suite", choices=verify.SUITES)
    _add_params(p_verify)
    p_verify.add_argument("--window", type=int, default=3)
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--out", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_bethe = sub.add_parser("bethe", help="solve the Bethe equations by continuation")
    _add_params(p_bethe)
    p_bethe.add_argument(
        "--seeds", type=_int_list, required=True,
        help="comma-separated indices of L-th roots of unity (k distinct values)",
    )
    p_bethe.add_argument("--steps", type=int, default=40)
    p_bethe.add_argument("--window", type=int, default=4)
    p_bethe.add_argument("--out", default=None)
    p_bethe.set_defaults(func=cmd_bethe)

    p_wave = sub.add_parser("wavefunction", help="tabulate a Bethe wave function")
    _add_params(p_wave)
    p_wave.add_argument("--p", type=_fraction_list, default=None,
                        help="comma-separated rational spectral parameters")
    p_wave.add_argument("--p-file", default=None,
                        help="JSON file with complex roots (output of the bethe command)")
    p_wave.add_argument("--window", type=int, default=2)
    p_wave.add_argument("--format", choices=("json", "csv"), default="json")
    p_wave.add_argument("--out", default=None)
    p_wave.set_defaults(func=cmd_wavefunction)

    p_hl = sub.add_parser("hall-littlewood", help="evaluate a Hall-Littlewood polynomial")
    p_hl.add_argument("--lam", type=_int_list, required=True, help="partition, e.g. 2,1")
    p_hl.add_argument("--z", type=_fraction_list, required=True, help="variables, e.g. 1/2,3,-1")
    p_hl.add_argument("--t", type=_fraction, required=True)
    p_hl.add_argument("--out", default=None)
    p_hl.set_defaults(func=cmd_hall_littlewood)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
