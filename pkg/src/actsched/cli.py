"""Command-line front-end.

Subcommands: ``gramian``, ``metrics``, ``schedule``, ``leverage``,
``epsilon-surface``, and ``reproduce``.  Exit codes: 0 on success, 2 on an
infeasible sparsity budget, 3 on an uncontrollable system, 1 on any other
error.
"""

from __future__ import annotations

import argparse
import sys as _sys

import numpy as np

from . import fileio, greedy, leverage, models, unweighted, weighted
from .errors import ActschedError, InvalidBudget, SingularGramian
from .metrics import ALL_METRICS, MetricKind, evaluate
from .system import (
    LtiSystem,
    controllability_matrix,
    gramian,
    is_eps_d_approximation,
    scheduled_gramian,
)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_BUDGET = 2
EXIT_SINGULAR = 3


def _metric_block(W: np.ndarray, pool: np.ndarray, label: str) -> list[str]:
    lines = [f"{label}:"]
    for metric in ALL_METRICS:
        try:
            value = evaluate(metric, W, pool)
            lines.append(f"  {metric.name.lower():14s} {value:.10g}")
        except SingularGramian:
            lines.append(f"  {metric.name.lower():14s} inf (singular)")
    return lines


def _load(args) -> LtiSystem:
    if args.system == "example1":
        return models.example1_system("identity")
    if args.system == "example1-minimal":
        return models.example1_system("minimal")
    return fileio.load_system(args.system)


def _cmd_gramian(args) -> int:
    sys = _load(args)
    W = gramian(sys, args.t)
    np.savetxt(args.out if args.out else _sys.stdout, W, fmt="%.17g", delimiter=",")
    return EXIT_OK


def _cmd_metrics(args) -> int:
    sys = _load(args)
    W = gramian(sys, args.t)
    pool = controllability_matrix(sys, args.t)
    if args.metric:
        metric = MetricKind.parse(args.metric)
        print(f"{metric.name.lower()} {evaluate(metric, W, pool):.10g}")
    else:
        print("\n".join(_metric_block(W, pool, f"metrics at t={args.t}")))
    return EXIT_OK


def _run_algo(args, sys: LtiSystem, pool: np.ndarray):
    """Return (schedule, result-or-None) for the selected algorithm."""
    algo = args.algo
    metric = MetricKind.parse(args.metric) if args.metric else MetricKind.A_OPTIMALITY
    if algo == "two-sided":
        res = weighted.schedule_two_sided(sys, args.t, args.d)
    elif algo == "max-ratio":
        res = weighted.schedule_max_ratio(sys, args.t, args.d)
    elif algo == "per-input":
        res = weighted.schedule_per_input(sys, args.t, args.d)
    elif algo == "per-time":
        res = weighted.schedule_per_time(sys, args.t, args.d)
    elif algo == "unweighted":
        res = unweighted.schedule_unweighted(sys, args.t, args.d)
    elif algo == "leverage":
        return leverage.sample_schedule(sys, args.t, args.d, args.seed), None
    elif algo == "greedy-static":
        out = greedy.greedy_static(sys, args.t, int(args.d), metric, pool, args.alpha)
        return out.schedule, out
    elif algo == "greedy-tv":
        out = greedy.greedy_time_varying(sys, args.t, args.d, metric, pool, args.alpha)
        return out.schedule, out
    elif algo == "brute-force":
        return unweighted.brute_force_schedule(sys, args.t, args.d, metric, pool), None
    else:
        raise ValueError(f"unknown algorithm {algo!r}")
    return res.schedule, res


def _cmd_schedule(args) -> int:
    sys = _load(args)
    pool = controllability_matrix(sys, args.t)
    sched, res = _run_algo(args, sys, pool)

    W = gramian(sys, args.t)
    W_s = scheduled_gramian(sys, sched, args.t)
    lines = [f"algo {args.algo}  t {args.t}  d {args.d}",
             f"d_avg {sched.d_avg:.10g}  support {sched.support_size}"]
    if res is not None and getattr(res, "epsilon", None) is not None:
        eps = res.epsilon
        ok = is_eps_d_approximation(W, W_s, eps)
        lines.append(f"epsilon {eps:.10g}  sandwich_check {'pass' if ok else 'FAIL'}")
    if res is not None and getattr(res, "rho_bound_factor", None) is not None:
        lines.append(f"rho_bound_factor {res.rho_bound_factor:.10g}")
    if res is not None and getattr(res, "gamma", None) is not None:
        lines.append(f"gamma {res.gamma:.10g}")
    lines += _metric_block(W, pool, "metrics (full Gramian)")
    lines += _metric_block(W_s, pool, "metrics (scheduled Gramian)")
    print("\n".join(lines))

    if args.out:
        params = {"t": args.t, "d": args.d}
        if args.metric:
            params["metric"] = args.metric
        fileio.save_schedule(sched, args.out, algo=args.algo,
                             params=params, seed=args.seed)
    if args.heatmap:
        fileio.emit_heatmap(sched, args.heatmap)
    return EXIT_OK


def _cmd_leverage(args) -> int:
    sys = _load(args)
    table = leverage.leverage_scores(sys, args.t)
    print(f"total {table.total:.10g}")
    rows = []
    for i in range(sys.m):
        rows.append(",".join(repr(float(v)) for v in table.scores[i]))
    text = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def _grid(spec: str) -> np.ndarray:
    return np.array([float(x) for x in spec.split(",") if x.strip()])


def _cmd_epsilon_surface(args) -> int:
    fileio.epsilon_surface(_grid(args.d_grid), _grid(args.ratio_grid), args.out)
    return EXIT_OK


def _reproduce_example1() -> None:
    t = 8
    for label, b in (("B_min", "minimal"), ("fully actuated", "identity")):
        sys = models.example1_system(b)
        W = gramian(sys, t)
        print(f"{label:16s} tr(W^-1) = {evaluate(MetricKind.A_OPTIMALITY, W):.6g}")
    sys = models.example1_system("identity")
    for d in (1.125, 1.875):
        res = unweighted.schedule_unweighted(sys, t, d)
        W_s = scheduled_gramian(sys, res.schedule, t)
        val = evaluate(MetricKind.A_OPTIMALITY, W_s)
        print(f"unweighted d={d:<6g} support {res.schedule.support_size:2d}  "
              f"tr(W_s^-1) = {val:.6g}")


def _reproduce_example2(seed: int) -> None:
    n, radius, d = 200, 0.125, 40.0
    graph = models.random_geometric_graph(n, radius, seed)
    sys = models.consensus_system(graph)
    t = n
    W = gramian(sys, t)
    print(f"fully actuated    d=200  tr(W^-1) = "
          f"{evaluate(MetricKind.A_OPTIMALITY, W):.6g}")
    sched = leverage.sample_schedule(sys, t, d, seed)
    W_s = scheduled_gramian(sys, sched, t)
    print(f"randomized        d={d:<4g} tr(W_s^-1) = "
          f"{evaluate(MetricKind.A_OPTIMALITY, W_s):.6g}")
    out = greedy.greedy_static(sys, t, 160, MetricKind.A_OPTIMALITY)
    val = "inf (uncontrollable)" if out.value is None else f"{out.value:.6g}"
    print(f"static greedy     d=160  tr(W_s^-1) = {val}")


def _reproduce_example3() -> None:
    params = models.default_swing_parameters()
    sys = models.swing_system(params)
    t = 20
    W = gramian(sys, t)
    print(f"fully actuated  tr(W^-1) = {evaluate(MetricKind.A_OPTIMALITY, W):.6g}")
    for d in (2.30, 3.10, 3.95, 4.60, 5.25, 5.75, 6.35):
        res = weighted.schedule_max_ratio(sys, t, d)
        W_s = scheduled_gramian(sys, res.schedule, t)
        print(f"max-ratio d={d:<5g} d_avg {res.schedule.d_avg:<6g} "
              f"tr(W_s^-1) = {evaluate(MetricKind.A_OPTIMALITY, W_s):.6g}")


def _cmd_reproduce(args) -> int:
    if args.case == "example1":
        _reproduce_example1()
    elif args.case == "example2":
        _reproduce_example2(args.seed)
    else:
        _reproduce_example3()
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="actsched",
        description="Sparse actuator scheduling for discrete-time linear systems.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, need_t=True):
        p.add_argument("--system", required=True,
                       help="system JSON file, or example1 / example1-minimal")
        if need_t:
            p.add_argument("--t", type=int, required=True, help="time horizon")

    p = sub.add_parser("gramian", help="print the controllability Gramian")
    common(p)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_gramian)

    p = sub.add_parser("metrics", help="evaluate the six systemic metrics")
    common(p)
    p.add_argument("--metric", help="one of a, d, t, e, v, g (default: all)")
    p.set_defaults(func=_cmd_metrics)

    p = sub.add_parser("schedule", help="compute a sparse actuator schedule")
    common(p)
    p.add_argument("--algo", required=True,
                   choices=["two-sided", "max-ratio", "per-input", "per-time",
                            "unweighted", "leverage", "greedy-static",
                            "greedy-tv", "brute-force"])
    p.add_argument("--d", type=float, required=True, help="average budget per step")
    p.add_argument("--metric", help="metric for greedy/brute-force algorithms")
    p.add_argument("--alpha", type=float, help="ridge for greedy algorithms")
    p.add_argument("--seed", type=int, default=0, help="seed for leverage sampling")
    p.add_argument("--out", help="write the schedule JSON here")
    p.add_argument("--heatmap", help="write the scaling grid CSV here")
    p.set_defaults(func=_cmd_schedule)

    p = sub.add_parser("leverage", help="print the column leverage-score table")
    common(p)
    p.add_argument("--out", help="write the m-by-t score grid CSV here")
    p.set_defaults(func=_cmd_leverage)

    p = sub.add_parser("epsilon-surface",
                       help="tabulate the two-sided bound over a (d, t/n) grid")
    p.add_argument("--d-grid", required=True, help="comma-separated d values")
    p.add_argument("--ratio-grid", required=True, help="comma-separated t/n values")
    p.add_argument("--out", required=True)
    p.set_defaults(func=_cmd_epsilon_surface)

    p = sub.add_parser("reproduce", help="rerun one of the bundled experiments")
    p.add_argument("case", choices=["example1", "example2", "example3"])
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_reproduce)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InvalidBudget as exc:
        print(f"error: infeasible budget: {exc}", file=_sys.stderr)
        return EXIT_BUDGET
    except SingularGramian as exc:
        print(f"error: uncontrollable system: {exc}", file=_sys.stderr)
        return EXIT_SINGULAR
    except (ActschedError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=_sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    _sys.exit(main())
