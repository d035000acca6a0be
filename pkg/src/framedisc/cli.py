"""Batch command-line front end.

Subcommands: gen-weaver, verify-weaver, reduce, search, net-check,
banaszczyk-radius. Every command emits a self-checking verification report
(JSON by default, CSV on request) and exits 0 on pass, 1 on claim failure,
2 on usage or input errors, 3 on budget refusals. All randomness flows from
the explicit --seed; identical (input, seed, budget) reproduce the report
byte for byte apart from the wall-time field.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
import time
from pathlib import Path

import numpy as np

from . import counterexample as cx
from . import engines, frames, reductions
from .errors import BudgetExceededError, FrameDiscError
from .linalg import diagonal_delta, is_projection, opnorm, rank_one
from .reports import (
    Claim,
    canonical_json,
    finish_report,
    format_float,
    report_to_dict,
    report_to_json,
)
from .serialize import (
    load_json,
    matrix_from_dict,
    matrix_to_dict,
    partition_to_dict,
    signs_to_dict,
    system_from_dict,
    system_to_dict,
)

EXIT_PASS = 0
EXIT_CLAIM_FAILURE = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_report(report, fmt: str, out: str | None) -> int:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "computed", "bound", "tolerance", "relation", "passed"])
        for c in report.claims:
            writer.writerow([c.name, format_float(float(c.computed)),
                             format_float(float(c.bound)), format_float(float(c.tolerance)),
                             c.relation, c.passed])
        _write(buf.getvalue(), out)
    else:
        _write(report_to_json(report), out)
    return EXIT_PASS if report.passed else EXIT_CLAIM_FAILURE


# ---------------------------------------------------------------------------
# subcommands


def cmd_gen_weaver(args) -> int:
    inst = cx.counterexample_vectors(args.k)
    outdir = Path(args.out or ".")
    outdir.mkdir(parents=True, exist_ok=True)
    instance = {
        "k": inst.k,
        "alpha": inst.alpha,
        "beta": inst.beta,
        "delta": inst.delta,
        "N": inst.N,
        "primed": system_to_dict(inst.primed),
    }
    (outdir / f"weaver_instance_k{inst.k}.json").write_text(canonical_json(instance) + "\n")
    (outdir / f"weaver_vectors_k{inst.k}.json").write_text(
        canonical_json(system_to_dict(inst.normalized)) + "\n"
    )
    return EXIT_PASS


def cmd_verify_weaver(args) -> int:
    started = time.perf_counter()
    inst = cx.counterexample_vectors(args.k)
    report = cx.verify_counterexample(inst, mode=args.mode, seed=args.seed,
                                      budget=args.budget)
    report.wall_time_s = time.perf_counter() - started
    if args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "alpha", "beta", "delta", "N", "lower_bound",
                         "min_signed_norm_or_bound", "mode"])
        writer.writerow([inst.k] + [format_float(v) for v in
                                    (inst.alpha, inst.beta, inst.delta, inst.N,
                                     report.extra["lower_bound"],
                                     report.extra["min_signed_norm_or_bound"])] + [args.mode])
        _write(buf.getvalue(), args.out)
        return EXIT_PASS if report.passed else EXIT_CLAIM_FAILURE
    return _emit_report(report, args.format, args.out)


def cmd_reduce(args) -> int:
    started = time.perf_counter()
    n_bound = args.n_bound
    data = load_json(args.input)
    outprefix = args.out
    if args.direction == "proj2vec":
        p = matrix_from_dict(data)
        vs = reductions.projection_to_vectors(p, n_bound)
        payload = canonical_json(system_to_dict(vs)) + "\n"
        claims = [
            Claim("max_vector_norm_squared", computed=float(np.max(vs.norms_squared())),
                  bound=1.0, tolerance=args.tol or 1e-9, relation="le"),
            Claim("frame_bound_equals_N", computed=frames.frame_bound(vs),
                  bound=n_bound, tolerance=args.tol or 1e-8, relation="abs"),
        ]
    else:
        vs = system_from_dict(data)
        trace = reductions.vectors_to_projection(vs, n_bound)
        payload = canonical_json(matrix_to_dict(trace.P)) + "\n"
        proj_residual = float(np.linalg.norm(trace.P @ trace.P - trace.P))
        tight_residual = float(np.linalg.norm(
            frames.frame_operator(trace.w) - np.eye(vs.k)))
        claims = [
            Claim("projection_residual", computed=proj_residual, bound=0.0,
                  tolerance=args.tol or 1e-8, relation="abs"),
            Claim("diagonal_delta_le_1_over_N", computed=diagonal_delta(trace.P),
                  bound=1.0 / n_bound, tolerance=1e-10, relation="le"),
            Claim("completed_frame_tightness", computed=tight_residual, bound=0.0,
                  tolerance=args.tol or 1e-9, relation="abs"),
            Claim("zero_diagonal_opnorm", computed=opnorm(trace.A),
                  bound=1.0 + 1.0 / n_bound, tolerance=args.tol or 1e-8, relation="le"),
        ]
    if outprefix:
        Path(str(outprefix) + ".object.json").write_text(payload)
    report = finish_report(f"reduce-{args.direction}", data, claims, started=started)
    out = str(outprefix) + ".report.json" if outprefix else None
    return _emit_report(report, args.format, out)


def _paving_search(a: np.ndarray, r: int, limit: int):
    """Exhaustive min over r^n partitions of max_j ||Q_j A Q_j||."""
    import itertools

    n = a.shape[0]
    if r**n > limit:
        raise BudgetExceededError(f"paving search refuses r^n = {r}^{n} > {limit}")
    best_val, best_assign = np.inf, None
    for assign in itertools.product(range(r), repeat=n):
        part = frames.partition(r, np.array(assign))
        val = reductions.paving_quality(a, part)
        if val < best_val:
            best_val, best_assign = val, assign
    return frames.partition(r, np.array(best_assign)), float(best_val)


def cmd_search(args) -> int:
    started = time.perf_counter()
    data = load_json(args.input)
    seed, budget = args.seed, args.budget
    extra: dict = {}
    if args.kind == "signs":
        vs = system_from_dict(data)
        if 2 ** (vs.n - 1) > args.limit:
            raise BudgetExceededError(
                f"exhaustive sign search needs 2^{vs.n - 1} evaluations, "
                f"over the limit {args.limit}"
            )
        witness, value = engines.exhaustive_sign_search(vs, limit=vs.n)
        claims = [Claim("min_signed_opnorm", computed=value, bound=value,
                        tolerance=0.0, relation="abs")]
        extra = {"witness": signs_to_dict(witness), "exact": True}
    elif args.kind == "partition":
        vs = system_from_dict(data)
        if args.r ** vs.n <= min(args.limit, budget):
            cert = engines.exhaustive_partition_search(vs, args.r, args.n_bound,
                                                       limit=args.limit)
            exact = True
        else:
            cert = engines.anneal_partition_search(vs, args.r, args.n_bound, seed=seed)
            exact = False
        claims = [Claim("max_part_frame_bound", computed=float(np.max(cert.per_part_bound)),
                        bound=args.n_bound, tolerance=0.0, relation="le")]
        extra = {"witness": partition_to_dict(cert.partition),
                 "slack": cert.slack, "exact": exact}
    elif args.kind == "pave":
        a = matrix_from_dict(data)
        part, value = _paving_search(a, args.r, args.limit)
        claims = [Claim("paving_quality", computed=value, bound=opnorm(a),
                        tolerance=1e-12, relation="le")]
        extra = {"witness": partition_to_dict(part), "exact": True}
    elif args.kind == "matroid":
        vs = system_from_dict(data)
        result = engines.matroid_spanning_partition(vs, args.r)
        if isinstance(result, frames.Partition):
            claims = [Claim("spanning_parts", computed=float(args.r), bound=float(args.r),
                            tolerance=0.0, relation="abs")]
            extra = {"witness": partition_to_dict(result), "feasible": True}
        else:
            claims = [Claim("violation_deficiency", computed=float(result.deficiency()),
                            bound=1.0, tolerance=0.0, relation="ge")]
            extra = {"violating_set": [i + 1 for i in result.indices],
                     "complement_rank": result.complement_rank, "feasible": False}
    elif args.kind == "banaszczyk":
        vs = system_from_dict(data)
        ctx = engines.gaussian_median_radius(vs.k, samples=max(budget, 1000), seed=seed)
        mats = [rank_one(v) / 5.0 for v in vs.vectors]
        result = engines.banaszczyk_sign_search(mats, M=ctx.M, budget=budget, seed=seed)
        if isinstance(result, engines.SignVector):
            signed = np.tensordot(result.signs, np.stack(mats), axes=1)
            claims = [Claim("signed_opnorm_le_M", computed=opnorm(signed),
                            bound=ctx.M, tolerance=1e-9, relation="le")]
            extra = {"witness": signs_to_dict(result), "R_hat": ctx.R_hat, "M": ctx.M}
        else:
            claims = [Claim("signed_opnorm_le_M", computed=result.best_value,
                            bound=ctx.M, tolerance=1e-9, relation="le")]
            extra = {"witness": signs_to_dict(result.best_signs),
                     "R_hat": ctx.R_hat, "M": ctx.M, "exhausted_budget": True}
    else:  # pragma: no cover - argparse restricts choices
        raise FrameDiscError(f"unknown search kind {args.kind!r}")
    report = finish_report(f"search-{args.kind}", data, claims, seed=seed,
                           budget=budget, extra=extra, started=started)
    return _emit_report(report, args.format, args.out)


def cmd_net_check(args) -> int:
    started = time.perf_counter()
    if args.epsilon <= 0:
        raise FrameDiscError(f"epsilon must be positive, got {args.epsilon}")
    data = load_json(args.input)
    vs = system_from_dict(data)
    if vs.k > 3 and not args.heuristic_net:
        raise FrameDiscError(
            f"certified nets stop at k = 3; pass --heuristic-net for k = {vs.k}"
        )
    n_bound = args.n_bound
    mesh = args.epsilon / (4.0 * n_bound)
    subset = [int(i) - 1 for i in args.subset.split(",")] if args.subset else list(range(vs.n))
    net = engines.build_epsilon_net(vs.k, mesh, seed=args.seed)
    net_max, certified = engines.net_certified_bound(vs, subset, net, n_bound)
    oracle = frames.subset_frame_bound(vs, subset)
    claims = [
        Claim("net_max_below_oracle", computed=net_max, bound=oracle,
              tolerance=args.tol or 1e-9, relation="le"),
        Claim("oracle_below_certified", computed=oracle, bound=certified,
              tolerance=args.tol or 1e-9, relation="le"),
    ]
    extra = {"net_max": net_max, "certified_sup_bound": certified,
             "eigenvalue_oracle": oracle, "mesh": mesh,
             "net_points": int(net.points.shape[0]), "certified_net": net.certified}
    report = finish_report("net-check", data, claims, seed=args.seed,
                           budget=args.budget, extra=extra, started=started)
    return _emit_report(report, args.format, args.out)


def cmd_banaszczyk_radius(args) -> int:
    started = time.perf_counter()
    ctx = engines.gaussian_median_radius(args.k, samples=args.samples, seed=args.seed)
    claims = [Claim("median_radius_positive", computed=ctx.R_hat, bound=0.0,
                    tolerance=0.0, relation="ge")]
    extra = {"k": ctx.k, "R_hat": ctx.R_hat, "M": ctx.M, "samples": ctx.samples}
    report = finish_report("banaszczyk-radius", {"k": args.k, "samples": args.samples},
                           claims, seed=args.seed, extra=extra, started=started)
    return _emit_report(report, args.format, args.out)


# ---------------------------------------------------------------------------
# parser / entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="framedisc",
        description="Frame-discrepancy toolkit: generation, verification and search.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0, help="64-bit seed for all randomness")
        p.add_argument("--budget", type=int, default=20000, help="evaluation cap")
        p.add_argument("--out", default=None, help="output path (default: stdout)")
        p.add_argument("--format", choices=["json", "csv"], default="json")
        p.add_argument("--tol", type=float, default=None, help="tolerance override")

    p = sub.add_parser("gen-weaver", help="generate a counterexample-family instance")
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_gen_weaver)

    p = sub.add_parser("verify-weaver", help="verify the family's closed forms and floor")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--mode", choices=["exhaustive", "heuristic"], default="exhaustive")
    common(p)
    p.set_defaults(func=cmd_verify_weaver)

    p = sub.add_parser("reduce", help="projection <-> vector-system bridge")
    p.add_argument("--direction", choices=["proj2vec", "vec2proj"], required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--n-bound", type=float, required=True, dest="n_bound",
                   help="the level N of the construction")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("search", help="sign/partition/paving/matroid/balancing searches")
    p.add_argument("--kind", choices=["signs", "partition", "pave", "matroid", "banaszczyk"],
                   required=True)
    p.add_argument("--input", required=True)
    p.add_argument("--r", type=int, default=2)
    p.add_argument("--n-bound", type=float, default=2.0, dest="n_bound")
    p.add_argument("--limit", type=int, default=2**24, help="exhaustive enumeration cap")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("net-check", help="epsilon-net certification of a subset bound")
    p.add_argument("--input", required=True)
    p.add_argument("--subset", default=None, help="comma-separated 1-based indices")
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--n-bound", type=float, required=True, dest="n_bound")
    p.add_argument("--heuristic-net", action="store_true", dest="heuristic_net")
    common(p)
    p.set_defaults(func=cmd_net_check)

    p = sub.add_parser("banaszczyk-radius", help="Gaussian median operator-norm radius")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--samples", type=int, default=100000)
    common(p)
    p.set_defaults(func=cmd_banaszczyk_radius)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0,) else 0
    try:
        return args.func(args)
    except BudgetExceededError as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (FrameDiscError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
