"""Command-line front end.

Subcommands:

* ``sweep``     — CSV of information versus memory degree for one channel.
* ``threshold`` — analytic vs. bisected crossing of the product/Bell curves.
* ``info``      — closed-form vs. numeric output spectrum at one point.

Exit codes: 0 success, 2 usage error, 1 numerical or I/O failure. All output
is deterministic for identical arguments.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from .channels import DepolarizingSpec, apply_channel, eta_from_p, two_use_kraus
from .info import (
    mutual_information,
    signal_information,
    signal_output_eigenvalues,
    signal_states,
    threshold_memory,
)
from .optimize import locate_threshold, optimize_signal_angle

_QUARTER_PI = np.pi / 4.0
_CSV_HEADER = "mu,I2_product,I2_bell,I2_opt,theta_opt"
_THRESHOLD_MATCH_TOL = 1e-6


class _UsageError(Exception):
    """Invalid argument values; reported on stderr with exit code 2."""


def _fmt(x: float) -> str:
    return format(float(x), ".12g")


def _add_channel_args(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--eta", type=float, help="shrinking factor of the depolarizing channel")
    group.add_argument("--p", type=float, help="single-use Pauli error probability (eta = 1 - 4p/3)")


def _resolve_eta(args: argparse.Namespace) -> float:
    if args.p is not None:
        try:
            return eta_from_p(args.p)
        except ValueError as exc:
            raise _UsageError(str(exc)) from exc
    return float(args.eta)


def _require_range(value: float, lo: float, hi: float, name: str, lo_open: bool = False) -> float:
    ok = (lo < value if lo_open else lo <= value) and value <= hi
    if not np.isfinite(value) or not ok:
        bracket = "(" if lo_open else "["
        raise _UsageError(f"{name} must lie in {bracket}{lo:g}, {hi:g}], got {value!r}")
    return float(value)


def cmd_sweep(args: argparse.Namespace) -> int:
    eta = _require_range(_resolve_eta(args), 0.0, 1.0, "eta", lo_open=True)
    mu_min = _require_range(args.mu_min, 0.0, 1.0, "--mu-min")
    mu_max = _require_range(args.mu_max, 0.0, 1.0, "--mu-max")
    if mu_min > mu_max:
        raise _UsageError(f"--mu-min ({mu_min!r}) must not exceed --mu-max ({mu_max!r})")
    if args.steps < 2:
        raise _UsageError(f"--steps must be at least 2, got {args.steps}")
    if not args.tol > 0.0:
        raise _UsageError(f"--tol must be positive, got {args.tol!r}")

    lines = [_CSV_HEADER]
    previous = None
    for mu in np.linspace(mu_min, mu_max, args.steps):
        mu = float(mu)
        if previous is not None and mu <= previous:
            continue  # collapsed grid (mu_min == mu_max): keep rows strictly increasing
        previous = mu
        product = signal_information(eta, mu, 0.0)
        bell = signal_information(eta, mu, _QUARTER_PI)
        best = optimize_signal_angle(eta, mu, tol=args.tol)
        lines.append(
            ",".join(_fmt(v) for v in (mu, product, bell, best.information, best.theta))
        )
    text = "\n".join(lines) + "\n"

    if args.out == "-":
        sys.stdout.write(text)
    else:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    return 0


def cmd_threshold(args: argparse.Namespace) -> int:
    eta = _require_range(_resolve_eta(args), 0.0, 1.0, "eta", lo_open=True)
    if not args.tol > 0.0:
        raise _UsageError(f"--tol must be positive, got {args.tol!r}")
    analytic = threshold_memory(eta)
    numeric = locate_threshold(eta, tol=args.tol)
    diff = abs(analytic - numeric)
    sys.stdout.write(
        f"eta {_fmt(eta)}\n"
        f"threshold_analytic {_fmt(analytic)}\n"
        f"threshold_numeric {_fmt(numeric)}\n"
        f"abs_difference {_fmt(diff)}\n"
    )
    return 0 if diff <= _THRESHOLD_MATCH_TOL else 1


def cmd_info(args: argparse.Namespace) -> int:
    eta = _require_range(_resolve_eta(args), -1.0 / 3.0, 1.0, "eta")
    mu = _require_range(args.mu, 0.0, 1.0, "--mu")
    if not np.isfinite(args.theta):
        raise _UsageError(f"--theta must be finite, got {args.theta!r}")
    theta = float(args.theta)

    spec = DepolarizingSpec(eta=eta, memory=mu)
    analytic_eigs = signal_output_eigenvalues(eta, mu, theta)
    first_state = signal_states(theta)[0][1]
    numeric_eigs = np.linalg.eigvalsh(apply_channel(two_use_kraus(spec.to_channel_spec()), first_state))
    analytic_info = signal_information(eta, mu, theta)
    numeric_info = mutual_information(signal_states(theta), spec)
    discrepancy = max(
        float(np.abs(analytic_eigs - numeric_eigs).max()),
        abs(analytic_info - numeric_info),
    )
    sys.stdout.write(
        f"eta {_fmt(eta)}\n"
        f"mu {_fmt(mu)}\n"
        f"theta {_fmt(theta)}\n"
        f"eigenvalues_analytic {','.join(_fmt(v) for v in analytic_eigs)}\n"
        f"eigenvalues_numeric {','.join(_fmt(v) for v in numeric_eigs)}\n"
        f"I2_analytic {_fmt(analytic_info)}\n"
        f"I2_numeric {_fmt(numeric_info)}\n"
        f"max_abs_discrepancy {_fmt(discrepancy)}\n"
    )
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="memchannel",
        description="Classical information over two uses of a depolarizing "
        "channel with Markov-correlated noise.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser(
        "sweep",
        help="CSV of product/Bell/optimized information versus memory degree",
    )
    _add_channel_args(sweep)
    sweep.add_argument("--mu-min", type=float, default=0.0, help="first memory degree (default 0)")
    sweep.add_argument("--mu-max", type=float, default=1.0, help="last memory degree (default 1)")
    sweep.add_argument("--steps", type=int, default=101, help="grid points in memory (default 101)")
    sweep.add_argument("--out", default="-", help="output path, '-' for stdout (default)")
    sweep.add_argument("--tol", type=float, default=1e-8, help="angle refinement width (default 1e-8)")
    sweep.add_argument(
        "--seed", type=int, default=0,
        help="random seed; accepted for interface stability, the sweep itself is deterministic",
    )
    sweep.set_defaults(handler=cmd_sweep)

    threshold = sub.add_parser(
        "threshold",
        help="compare the analytic memory threshold against bisection",
    )
    _add_channel_args(threshold)
    threshold.add_argument("--tol", type=float, default=1e-8, help="bisection width (default 1e-8)")
    threshold.set_defaults(handler=cmd_threshold)

    info = sub.add_parser(
        "info",
        help="closed-form vs. numeric output spectrum and information at one point",
    )
    _add_channel_args(info)
    info.add_argument("--mu", type=float, required=True, help="memory degree in [0, 1]")
    info.add_argument("--theta", type=float, required=True, help="signal angle in radians")
    info.set_defaults(handler=cmd_info)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except _UsageError as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
