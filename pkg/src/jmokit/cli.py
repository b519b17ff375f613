"""Single command-line entry point exposing every problem module.

Subcommand groups: pins (lattice-triangle moves), gcdset (gcd-perfect sets),
pack (triangle packings), cyclic (the 2n-equation system), funceq (function
tables), rect (rectangle concurrency certificates).

Every run produces a report envelope; --json prints it as canonical JSON
(sorted keys, no timestamps), so identical inputs give byte-identical
output.  Wall-clock timings are filled in only with --timings.  Exit codes:
0 for success verdicts (an empty search result is a result, not an error),
1 for checked failures (violations found, certification failed), 2 for
usage errors, malformed inputs, and exhausted budgets.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time
from dataclasses import asdict
from fractions import Fraction

from . import __version__, cyclic, funceq, gcdperfect, pinopt, rectconcur, scan, tripack
from .svg import Scene


def _envelope(args: argparse.Namespace, inputs: dict, **fields) -> dict:
    env = {
        "tool": "jmokit",
        "version": __version__,
        "subcommand": f"{args.group} {args.action}",
        "inputs": inputs,
        "timings": None,
    }
    env.update(fields)
    return env


def _emit(env: dict, args: argparse.Namespace, human: list[str], started: float) -> None:
    if args.timings:
        env["timings"] = {"wall_s": round(time.perf_counter() - started, 6)}
    if args.json:
        print(json.dumps(env, sort_keys=True, indent=2))
    else:
        for line in human:
            print(line)
        if args.timings:
            print(f"elapsed: {env['timings']['wall_s']} s")


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


class UsageError(Exception):
    pass


def _int_list(raw: str) -> list[int]:
    try:
        return [int(part) for part in raw.split(",") if part.strip() != ""]
    except ValueError as exc:
        raise UsageError(f"expected comma-separated integers, got {raw!r}") from exc


# -- pins ----------------------------------------------------------------


def _cmd_pins_solve(args) -> tuple[int, dict, list[str]]:
    cert = pinopt.min_moves(args.doubled_area, budget_cap=args.cap)
    witness = [list(cert.witness.a_pin), list(cert.witness.b_pin), list(cert.witness.c_pin)]
    env_fields = {
        "lower_bound": cert.lower_bound,
        "cost": cert.witness.move_cost,
        "status": cert.status,
        "gap": cert.gap,
        "witness": witness,
        "witness_doubled_area": cert.witness.doubled_area,
        "scan_backend": scan.backend_name(),
    }
    human = [
        f"doubled area {args.doubled_area}: cost {cert.witness.move_cost} "
        f"({cert.status}, lower bound {cert.lower_bound})",
        f"witness pins: {witness[0]} {witness[1]} {witness[2]}",
    ]
    return 0, env_fields, human


def _cmd_pins_oracle(args) -> tuple[int, dict, list[str]]:
    cost = pinopt.oracle_min_moves(args.doubled_area, args.radius)
    env_fields = {
        "cost": cost,
        "radius": args.radius,
        "scan_backend": scan.backend_name(),
    }
    return 0, env_fields, [f"exhaustive minimum cost: {cost}"]


# -- gcdset ---------------------------------------------------------------


def _cmd_gcdset_check(args) -> tuple[int, dict, list[str]]:
    s = gcdperfect.GcdSet(_int_list(args.elements))
    report = gcdperfect.is_gcd_perfect(s)
    env_fields = {
        "elements": list(s.elements),
        "verdict": report.verdict,
        "witness_failure": list(report.witness_failure) if report.witness_failure else None,
    }
    if report.verdict:
        human = [f"gcd-perfect: yes (size {report.size})"]
        if len(s):
            structure = gcdperfect.structure_report(s)
            env_fields["prime_count"] = structure.prime_count
            human.append(f"structure: squarefree, k = {structure.prime_count}")
        return 0, env_fields, human
    s_, d_, c_ = report.witness_failure
    return 1, env_fields, [
        f"gcd-perfect: no; divisor {d_} of {s_} is hit by {c_} elements (expected 1)"
    ]


def _cmd_gcdset_construct(args) -> tuple[int, dict, list[str]]:
    s = gcdperfect.construct(args.k, _int_list(args.p) if args.p else [],
                             _int_list(args.q) if args.q else [])
    report = gcdperfect.is_gcd_perfect(s)
    env_fields = {"elements": list(s.elements), "verdict": report.verdict}
    return (0 if report.verdict else 1), env_fields, [
        f"constructed {list(s.elements)} (gcd-perfect: {'yes' if report.verdict else 'NO'})"
    ]


def _cmd_gcdset_search(args) -> tuple[int, dict, list[str]]:
    budget = args.budget or int(os.environ.get("JMOKIT_NODE_BUDGET", 10**6))
    try:
        sets = gcdperfect.search_size(args.size, args.max, node_budget=budget)
    except gcdperfect.BudgetExceeded as exc:
        raise UsageError(str(exc)) from exc
    env_fields = {
        "count": len(sets),
        "sets": [list(s.elements) for s in sets],
        "node_budget": budget,
    }
    human = [f"found {len(sets)} gcd-perfect set(s) of size {args.size} within [1..{args.max}]"]
    human += [f"  {list(s.elements)}" for s in sets[:50]]
    if len(sets) > 50:
        human.append(f"  ... ({len(sets) - 50} more)")
    return 0, env_fields, human


# -- pack -----------------------------------------------------------------


def _pack_report_fields(report: tripack.PackingReport) -> dict:
    return {
        "count": report.count,
        "side": str(report.side_len),
        "all_inside": report.all_inside,
        "first_outside": report.first_outside,
        "disjoint": report.disjoint,
        "first_overlap": list(report.first_overlap) if report.first_overlap else None,
        "bound_ok": report.bound_ok,
        "bound_is_warning": report.bound_is_warning,
        "density": report.density,
        "valid": report.valid,
    }


def _pack_human(report: tripack.PackingReport) -> list[str]:
    lines = [
        f"packing: {report.count} triangle(s) in Delta of side {report.side_len}",
        f"  containment: {'ok' if report.all_inside else f'anchor {report.first_outside} outside'}",
        f"  disjointness: {'ok' if report.disjoint else f'anchors {report.first_overlap} overlap'}",
        f"  count bound (n <= 2/3 L^2): {'ok' if report.bound_ok else 'VIOLATED'}"
        + (" [warning only: L < 2]" if report.bound_is_warning else ""),
        f"  density n/L^2 = {report.density:.4f}",
        f"  verdict: {'valid' if report.valid else 'INVALID'}",
    ]
    return lines


def _cmd_pack_build(args) -> tuple[int, dict, list[str]]:
    try:
        side = Fraction(args.side)
        margin = Fraction(args.margin)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational: {exc}") from exc
    instance = tripack.tessellate(side, margin)
    report = tripack.validate_packing(instance)
    if args.out:
        _write(args.out, tripack.dump_packing(instance))
    env_fields = {"report": _pack_report_fields(report), "out": args.out}
    human = _pack_human(report)
    if args.out:
        human.append(f"wrote {args.out}")
    return (0 if report.valid else 1), env_fields, human


def _cmd_pack_validate(args) -> tuple[int, dict, list[str]]:
    try:
        instance = tripack.parse_packing(_read(args.input))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad packing file: {exc}") from exc
    report = tripack.validate_packing(instance)
    return (0 if report.valid else 1), {"report": _pack_report_fields(report)}, _pack_human(report)


def _cmd_pack_render(args) -> tuple[int, dict, list[str]]:
    try:
        instance = tripack.parse_packing(_read(args.input))
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad packing file: {exc}") from exc
    scene = Scene()
    side = float(instance.side_len)
    scene.polygon([(0.0, 0.0), (side, 0.0), (side / 2, side * 3**0.5 / 2)],
                  stroke="#333333", width=2.0)
    for anchor in instance.anchors:
        tri = [(float(x), float(y)) for x, y in tripack.triangle_vertices(anchor)]
        scene.polygon(tri, stroke="#884400", fill="#ddaa77", width=1.0, opacity=0.6)
        hexagon = tripack.HexGauge(center=anchor, radius=Fraction(1, 2))
        hex_pts = [(float(x), float(y)) for x, y in hexagon.vertices()]
        scene.polygon(hex_pts, stroke="#118811", width=1.0)
    _write(args.svg, scene.to_svg())
    human = [f"wrote {args.svg} ({instance.count} triangle(s) with green hexagons)"]
    return 0, {"svg": args.svg, "count": instance.count}, human


# -- cyclic ---------------------------------------------------------------


def _cyclic_report_fields(v: cyclic.CycleVector, tol: float) -> dict:
    res = cyclic.residuals(v)
    fields = {"residual_max_abs": res.max_abs}
    if res.max_abs <= tol:
        ident = cyclic.identity_checks(v, tol)
        mm = cyclic.minmax_certificate(v, tol)
        fields["identities"] = asdict(ident)
        fields["minmax"] = asdict(mm)
    return fields


def _cmd_cyclic_solve(args) -> tuple[int, dict, list[str]]:
    init = None
    if args.init:
        init = cyclic.parse_entries(_read(args.init))
    elif args.seed is not None:
        init = args.seed
    solution, record = cyclic.solve(args.n, init, tol=args.tol, max_iter=args.max_iter)
    env_fields = {
        "entries": list(solution.entries),
        "converged": record.converged,
        "iterations": record.iterations,
        "residual": record.residual,
    }
    human = [
        f"n = {args.n}: {'converged' if record.converged else 'DID NOT CONVERGE'} "
        f"in {record.iterations} iteration(s), residual {record.residual:.3e}",
    ]
    if record.converged:
        env_fields.update(_cyclic_report_fields(solution, args.tol))
        human.append("entries: " + " ".join(f"{e:.6f}" for e in solution.entries))
    if args.out:
        _write(args.out, cyclic.dump_entries(solution))
        human.append(f"wrote {args.out}")
        env_fields["out"] = args.out
    return (0 if record.converged else 1), env_fields, human


def _cmd_cyclic_verify(args) -> tuple[int, dict, list[str]]:
    try:
        v = cyclic.parse_entries(_read(args.input))
    except ValueError as exc:
        raise UsageError(f"bad entries file: {exc}") from exc
    res = cyclic.residuals(v)
    env_fields = {"n": v.n, "residual_max_abs": res.max_abs}
    ok = res.max_abs <= args.tol
    human = [f"n = {v.n}: residual max |.| = {res.max_abs:.3e} "
             f"({'within' if ok else 'EXCEEDS'} tol {args.tol:.1e})"]
    if ok:
        env_fields.update(_cyclic_report_fields(v, args.tol))
        ident = env_fields["identities"]
        human.append(
            f"identity defects: sums {ident['sum_vs_reciprocal_defect']:.3e}, "
            f"squares {ident['squared_pair_sum_defect']:.3e}, "
            f"total {ident['even_sum_defect']:.3e}"
        )
        human.append(f"min/max spread: {env_fields['minmax']['spread']:.3e}")
    return (0 if ok else 1), env_fields, human


# -- funceq ---------------------------------------------------------------


def _cmd_funceq_check(args) -> tuple[int, dict, list[str]]:
    try:
        table = funceq.parse_table(_read(args.input))
    except ValueError as exc:
        raise UsageError(f"bad table file: {exc}") from exc
    violations = funceq.check_table(table)
    env_fields = {
        "limit": table.limit,
        "violation_count": len(violations),
        "violations": [
            {"kind": v.kind, "witnesses": list(v.witnesses), "lhs": v.lhs, "rhs": v.rhs}
            for v in violations[:1000]
        ],
    }
    human = [f"table up to {table.limit}: {len(violations)} violation(s)"]
    for v in violations[:20]:
        human.append(f"  {v.kind} at {v.witnesses}: {v.lhs} != {v.rhs}")
    if len(violations) > 20:
        human.append(f"  ... ({len(violations) - 20} more)")
    return (0 if not violations else 1), env_fields, human


def _cmd_funceq_trace(args) -> tuple[int, dict, list[str]]:
    trace = funceq.forced_trace(args.limit)
    rules = {}
    for step in trace:
        rules[step.rule] = rules.get(step.rule, 0) + 1
    env_fields = {"limit": args.limit, "steps": len(trace), "rule_counts": rules}
    human = [f"forced derivation of f(1..{args.limit}) = 1: {len(trace)} step(s) {rules}"]
    if not args.no_replay:
        result = funceq.replay_trace(trace)
        env_fields["replay_ok"] = result.ok
        env_fields["replay_failure"] = (
            None if result.ok else {"index": result.failed_index, "reason": result.reason}
        )
        human.append(f"replay: {'pass' if result.ok else f'FAIL at step {result.failed_index}: {result.reason}'}")
        return (0 if result.ok else 1), env_fields, human
    return 0, env_fields, human


# -- rect -----------------------------------------------------------------


def _cmd_rect_batch(args) -> tuple[int, dict, list[str]]:
    rng = random.Random(args.seed)
    rows = []
    all_pass = True
    threshold = args.rel_tol
    for index in range(args.count):
        config = rectconcur.random_config(rng)
        if args.perturb != 1.0:
            config = rectconcur.build_config_with_heights(
                config.triangle, config.h_a, config.h_b, config.h_c * args.perturb
            )
        report = rectconcur.certify_concurrency(config)
        passed = report.passes(threshold)
        all_pass = all_pass and passed
        rows.append({
            "index": index,
            "line_defect_rel": report.line_defect / report.scale,
            "circle_residuals_rel": [r / report.scale for r in report.circle_residuals],
            "passes": passed,
        })
    env_fields = {
        "count": args.count,
        "seed": args.seed,
        "perturb": args.perturb,
        "rel_tol": threshold,
        "all_pass": all_pass,
        "rows": rows,
    }
    human = [
        f"{args.count} configuration(s), seed {args.seed}, perturb x{args.perturb}: "
        f"{'all pass' if all_pass else 'FAILURES'} at rel tol {threshold:.1e}"
    ]
    worst = max(rows, key=lambda r: r["line_defect_rel"])
    human.append(f"worst relative line defect: {worst['line_defect_rel']:.3e} (instance {worst['index']})")
    return (0 if all_pass else 1), env_fields, human


def _cmd_rect_render(args) -> tuple[int, dict, list[str]]:
    rng = random.Random(args.seed)
    config = rectconcur.random_config(rng)
    report = rectconcur.certify_concurrency(config)
    t = config.triangle
    scene = Scene()
    scene.polygon([t.a_pt, t.b_pt, t.c_pt], stroke="#000000", width=2.0)
    scene.polygon([t.b_pt, t.c_pt, config.c1, config.b2], stroke="#555555", width=1.0)
    scene.polygon([t.c_pt, t.a_pt, config.a1, config.c2], stroke="#555555", width=1.0)
    scene.polygon([t.a_pt, t.b_pt, config.b1, config.a2], stroke="#555555", width=1.0)
    for center, radius in rectconcur.circumcircles(config):
        scene.circle(center, radius, stroke="#2255cc", width=1.2)
    scene.line(config.b1, config.c2, stroke="#cc2222", width=1.0)
    scene.line(config.c1, config.a2, stroke="#cc2222", width=1.0)
    scene.line(config.a1, config.b2, stroke="#cc2222", width=1.0)
    scene.dot(report.p_point, fill="#cc2222", size=3.5)
    _write(args.svg, scene.to_svg())
    human = [
        f"wrote {args.svg} (seed {args.seed}, relative line defect "
        f"{report.line_defect / report.scale:.3e})"
    ]
    return 0, {"svg": args.svg, "seed": args.seed}, human


# -- parser ----------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jmokit",
        description="Solvers, exact checkers, and brute-force oracles "
                    "for the six USAJMO 2021 problems.",
    )
    parser.add_argument("--version", action="version", version=f"jmokit {__version__}")
    groups = parser.add_subparsers(dest="group", required=True)

    def common(sub):
        sub.add_argument("--json", action="store_true", help="emit a JSON report envelope")
        sub.add_argument("--timings", action="store_true", help="include wall-clock timings")

    pins = groups.add_parser("pins", help="minimum pin moves for a target lattice-triangle area")
    pins_actions = pins.add_subparsers(dest="action", required=True)
    p = pins_actions.add_parser("solve", help="witness plus optimality certificate")
    p.add_argument("--doubled-area", type=int, required=True, dest="doubled_area")
    p.add_argument("--cap", type=int, default=None, help="budget cap for the family search")
    p.set_defaults(handler=_cmd_pins_solve)
    common(p)
    p = pins_actions.add_parser("oracle", help="exhaustive scan near the origin")
    p.add_argument("--doubled-area", type=int, required=True, dest="doubled_area")
    p.add_argument("--radius", type=int, required=True)
    p.set_defaults(handler=_cmd_pins_oracle)
    common(p)

    gcd = groups.add_parser("gcdset", help="gcd-perfect set checking, construction, search")
    gcd_actions = gcd.add_subparsers(dest="action", required=True)
    p = gcd_actions.add_parser("check", help="decide gcd-perfection")
    p.add_argument("--elements", required=True, help="comma-separated positive integers")
    p.set_defaults(handler=_cmd_gcdset_check)
    common(p)
    p = gcd_actions.add_parser("construct", help="2^k witness from prime lists")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--p", default="", help="comma-separated primes (k of them)")
    p.add_argument("--q", default="", help="comma-separated primes (k of them)")
    p.set_defaults(handler=_cmd_gcdset_construct)
    common(p)
    p = gcd_actions.add_parser("search", help="exhaustive search for a given size")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--budget", type=int, default=None, help="node budget (default env JMOKIT_NODE_BUDGET or 1e6)")
    p.set_defaults(handler=_cmd_gcdset_search)
    common(p)

    pack = groups.add_parser("pack", help="inverted-triangle packings in Delta")
    pack_actions = pack.add_subparsers(dest="action", required=True)
    p = pack_actions.add_parser("build", help="near-optimal tessellation packing")
    p.add_argument("--side", required=True, help="side length L (exact rational, >= 4)")
    p.add_argument("--margin", default="0", help="extra rational inset from the boundary")
    p.add_argument("--out", default=None, help="write the packing file here")
    p.set_defaults(handler=_cmd_pack_build)
    common(p)
    p = pack_actions.add_parser("validate", help="exact validation of a packing file")
    p.add_argument("--input", required=True)
    p.set_defaults(handler=_cmd_pack_validate)
    common(p)
    p = pack_actions.add_parser("render", help="SVG of triangles and their hexagons")
    p.add_argument("--input", required=True)
    p.add_argument("--svg", required=True)
    p.set_defaults(handler=_cmd_pack_render)
    common(p)

    cyc = groups.add_parser("cyclic", help="the cyclic 2n-equation system")
    cyc_actions = cyc.add_subparsers(dest="action", required=True)
    p = cyc_actions.add_parser("solve", help="damped Newton from a chosen start")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=None, help="random log-uniform start")
    p.add_argument("--init", default=None, help="entries file to start from")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--max-iter", type=int, default=100, dest="max_iter")
    p.add_argument("--out", default=None, help="write the solution entries here")
    p.set_defaults(handler=_cmd_cyclic_solve)
    common(p)
    p = cyc_actions.add_parser("verify", help="residuals and identities of an entries file")
    p.add_argument("--input", required=True)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(handler=_cmd_cyclic_verify)
    common(p)

    feq = groups.add_parser("funceq", help="function tables against the two conditions")
    feq_actions = feq.add_subparsers(dest="action", required=True)
    p = feq_actions.add_parser("check", help="all violations within a table file")
    p.add_argument("--input", required=True, help="text file of 'n value' lines")
    p.set_defaults(handler=_cmd_funceq_check)
    common(p)
    p = feq_actions.add_parser("trace", help="forced derivation f(1..N) = 1, with replay")
    p.add_argument("--limit", type=int, required=True)
    p.add_argument("--no-replay", action="store_true", dest="no_replay")
    p.set_defaults(handler=_cmd_funceq_trace)
    common(p)

    rect = groups.add_parser("rect", help="rectangle concurrency certificates")
    rect_actions = rect.add_subparsers(dest="action", required=True)
    p = rect_actions.add_parser("batch", help="certify random configurations")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--perturb", type=float, default=1.0,
                   help="scale the solved third height (1.0 = constraint holds)")
    p.add_argument("--rel-tol", type=float, default=rectconcur.DEFAULT_REL_TOL, dest="rel_tol")
    p.set_defaults(handler=_cmd_rect_batch)
    common(p)
    p = rect_actions.add_parser("render", help="SVG of one certified configuration")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--svg", required=True)
    p.set_defaults(handler=_cmd_rect_render)
    common(p)

    return parser


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.perf_counter()
    try:
        code, fields, human = args.handler(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    env = _envelope(args, _echo_inputs(args), **fields)
    _emit(env, args, human, started)
    return code


def _echo_inputs(args: argparse.Namespace) -> dict:
    skip = {"handler", "group", "action", "json", "timings"}
    return {k: v for k, v in vars(args).items() if k not in skip}


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
