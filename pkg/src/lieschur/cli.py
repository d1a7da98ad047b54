"""Command-line driver: ``verify``, ``witness`` and ``cartan-weyl``."""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import checks
from .config import build_instance, bundled_names, load_config
from .errors import LieSchurError
from .multiplicator import (CONVENTION, case1_kernel_check, degree_growth_check,
                            family_images, family_rank)

SCHEMA = "lieschur.report/1"
DEFAULT_SEED = 20240101


def _instance_block(inst) -> dict:
    return {"name": inst.config.name, "field": str(inst.field), "n": inst.witness.n,
            "echo": inst.config.to_text()}


def run_verify(inst, seed: int) -> dict:
    rng = random.Random(seed)
    F, A, pres = inst.field, inst.alphabet, inst.pres
    results = []
    results += checks.scalar_suite(F, rng, 100)
    results += checks.freealg_suite(A, F, rng, 50)
    results += checks.freelie_suite(A, F, rng, 50)
    results.append(checks.dynkin_refusal(A, F))
    results += checks.quotient_suite(pres, rng, 50)
    results += checks.hopf_suite(pres, rng, 200, 4)
    results += checks.collapse_kill_suite(pres, rng, 100)
    results += checks.magnus_suite(pres, inst.ideal_generators, rng, 100)
    results += checks.cartan_weyl_suite(5, F)
    results += checks.pipeline_consistency_suite(inst.witness_for, pres, rng, (2, 3, 4), 10)
    results += checks.eps_slot_suite(pres, rng, range(2, 6), 20)
    results += checks.closed_f_suite(pres, rng, (2, 3, 4, 5), 20)
    if inst.witness.case == "I":
        results += checks.case1_suite(pres, rng, (inst.witness.n,), 200)
    if inst.witness.case == "IV":
        results += checks.remark_suite(pres, inst.ideal_generators, inst.witness.slots, rng, 10)
    return {
        "schema": SCHEMA,
        "command": "verify",
        "seed": seed,
        "instance": _instance_block(inst),
        "case": inst.witness.case,
        "checks": [r.to_dict() for r in results],
        "passed": all(r.passed for r in results),
    }


def run_witness(inst, seed: int, use_pipeline: bool = True) -> dict:
    w = inst.witness
    images = family_images(w, use_pipeline)
    rank = family_rank(w, use_pipeline, images)
    out_checks = [{"name": "rank", "passed": rank.passed, "detail": rank.verdict}]
    case = w.case
    if case in ("II", "III"):
        growth = degree_growth_check(w, use_pipeline, images)
        out_checks.append({"name": "degree growth", "passed": growth.passed,
                           "detail": growth.message})
    elif case == "I":
        for (l, _), label in zip(w.family, w.labels):
            v = case1_kernel_check(l, w.n)
            out_checks.append({"name": f"case I kernel check l={label}", "passed": v.nonzero,
                               "detail": v.diagnostic})
    else:
        rng = random.Random(seed)
        for r in checks.remark_suite(inst.pres, inst.ideal_generators, w.slots, rng, 10):
            out_checks.append(r.to_dict())
    return {
        "schema": SCHEMA,
        "command": "witness",
        "seed": seed,
        "convention": CONVENTION,
        "instance": _instance_block(inst),
        "case": case,
        "rank_report": rank.to_dict(),
        "checks": out_checks,
        "passed": all(c["passed"] for c in out_checks),
    }


def run_cartan_weyl(n_max: int) -> dict:
    results = checks.cartan_weyl_suite(n_max)
    coefficients = {str(n): checks.cartan_weyl_coefficients(n) for n in range(2, n_max + 1)}
    return {
        "schema": SCHEMA,
        "command": "cartan-weyl",
        "n_max": n_max,
        "coefficients": coefficients,
        "checks": [r.to_dict() for r in results],
        "passed": all(r.passed for r in results),
    }


def render_text(report: dict) -> str:
    lines = [f"# {report['command']}"]
    if "instance" in report:
        inst = report["instance"]
        lines.append(f"instance {inst['name']} over {inst['field']}, n = {inst['n']}, "
                     f"case {report['case']}")
    if "convention" in report:
        lines.append(f"convention: {report['convention']}")
    if "coefficients" in report:
        for n, coefs in report["coefficients"].items():
            lines.append(f"n={n}: coefficients {coefs}")
    rr = report.get("rank_report")
    if rr:
        lines.append(f"mode {rr['mode']}; family size {rr['family_size']}; "
                     f"matrix {rr['matrix'][0]}x{rr['matrix'][1]}; rank {rr['rank']}")
        lines.append("degrees: " + ", ".join("undefined" if d is None else str(d)
                                             for d in rr["degrees"]))
        for k, img in enumerate(rr["images"]):
            lines.append(f"  image[{k}] = {img}")
        lines.append(f"verdict: {rr['verdict']}")
    for c in report["checks"]:
        mark = "PASS" if c["passed"] else "FAIL"
        extra = f" ({c['samples']} samples)" if "samples" in c else ""
        detail = f": {c['detail']}" if c.get("detail") else ""
        lines.append(f"{mark} {c['name']}{extra}{detail}")
    if "elapsed_seconds" in report:
        lines.append(f"elapsed {report['elapsed_seconds']} s")
    lines.append("ALL CHECKS PASSED" if report["passed"] else "SOME CHECKS FAILED")
    return "\n".join(lines)


def dump_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized checks (default %(default)s)")
    common.add_argument("--json", metavar="PATH", help="write the JSON report here ('-' = stdout)")
    common.add_argument("--max-degree", type=int, metavar="D",
                        help="degree cap for U(L/I) (overrides the config)")
    common.add_argument("--timing", action="store_true",
                        help="record elapsed time in the report (breaks byte-identical output)")

    parser = argparse.ArgumentParser(
        prog="lieschur",
        description="Exact witnesses for the Schur multiplicator of L/I^n.")
    sub = parser.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run every invariant suite on an instance")
    v.add_argument("config", help=f"config path or bundled name ({', '.join(bundled_names())})")

    w = sub.add_parser("witness", parents=[common], help="rank-certify the witness family")
    w.add_argument("config")
    mode = w.add_mutually_exclusive_group()
    mode.add_argument("--pipeline", dest="pipeline", action="store_true", default=True,
                      help="compute images through the full pipeline (default)")
    mode.add_argument("--closed-form", dest="pipeline", action="store_false",
                      help="compute images with the closed-form f(l)")
    w.add_argument("--max-family", type=int, metavar="N", help="use the first N family members")

    c = sub.add_parser("cartan-weyl", parents=[common],
                       help="compare bracket expansion with the Cartan-Weyl formula")
    c.add_argument("--n-max", type=int, required=True, metavar="K")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    start = time.perf_counter()
    json_path = args.json
    try:
        if args.command == "cartan-weyl":
            if args.n_max < 2:
                parser.error("--n-max must be at least 2")
            report = run_cartan_weyl(args.n_max)
        else:
            cfg = load_config(args.config)
            inst = build_instance(cfg, max_degree=args.max_degree,
                                  max_family=getattr(args, "max_family", None))
            json_path = json_path or cfg.json
            if args.command == "verify":
                report = run_verify(inst, args.seed)
            else:
                report = run_witness(inst, args.seed, args.pipeline)
    except LieSchurError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.timing:
        report["elapsed_seconds"] = round(time.perf_counter() - start, 3)
    print(render_text(report))
    if json_path == "-":
        sys.stdout.write(dump_json(report))
    elif json_path:
        with open(json_path, "w", encoding="utf-8") as fh:
            fh.write(dump_json(report))
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
