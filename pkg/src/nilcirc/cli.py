"""Command-line front end: decide, scan, lemma1, identities.

Exit codes: 0 success/agreement, 1 mathematical disagreement, 2 usage error,
3 invalid mathematical input (the error kind is named on stderr).
"""

from __future__ import annotations

import argparse
import csv
import dataclasses
import io
import json
import os
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import circring, congruence, nilpotence, oracle
from .errors import InputError, InvalidPrime
from .numutil import is_prime

EXIT_OK = 0
EXIT_DISAGREE = 1
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3


@dataclass
class ScanReport:
    parameters: dict
    cells: list[dict]
    summary: dict = field(default_factory=dict)

    def finish(self) -> None:
        nilpotent = sum(1 for c in self.cells if c["nilpotent"])
        disagreements = [
            {"n": c["n"], "m": c["m"]} for c in self.cells if c.get("agree") is False
        ]
        self.summary = {
            "cells": len(self.cells),
            "nilpotent": nilpotent,
            "disagreements": disagreements,
        }
        if self.parameters["verify"]:
            self.summary["agreements"] = sum(
                1 for c in self.cells if c.get("agree") is True
            )

    def to_json_dict(self) -> dict:
        return {
            "parameters": self.parameters,
            "cells": self.cells,
            "summary": self.summary,
        }


# ---------------------------------------------------------------------------
# scan cell workers (top level so a process pool can pickle them)


def _eval_zp_cell(task) -> dict:
    n, m, p, verify = task
    verdict = nilpotence.decide_zp(n, m, p)
    cell = {"n": n, "m": m, "nilpotent": verdict.nilpotent, "index": verdict.index}
    if verify:
        report = oracle.verify_theorem1(n, m, p)
        cell["oracle_index"] = report.oracle_index
        cell["agree"] = report.agree
    return cell


def _eval_zm_cell(task) -> dict:
    n, m, verify = task
    verdict = nilpotence.decide_zm(n, m)
    cell = {
        "n": n,
        "m": m,
        "nilpotent": verdict.nilpotent,
        "clause": verdict.clause.value,
    }
    if verify:
        report = oracle.verify_corollary1(n, m)
        cell["oracle_index"] = report.oracle_index
        cell["agree"] = report.agree
    return cell


def _run_cells(worker, tasks: list, jobs: int) -> list[dict]:
    if jobs > 1 and len(tasks) > 1:
        chunk = max(1, len(tasks) // (jobs * 4))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(worker, tasks, chunksize=chunk))
    return [worker(t) for t in tasks]


# ---------------------------------------------------------------------------
# rendering


def _bool_str(v) -> str:
    return "" if v is None else ("true" if v else "false")


def _opt_str(v) -> str:
    return "" if v is None else str(v)


def _render_csv(report: ScanReport, zm: bool) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if zm:
        writer.writerow(["n", "m", "nilpotent", "clause", "oracle_index", "agree"])
        for c in report.cells:
            writer.writerow([
                c["n"], c["m"], _bool_str(c["nilpotent"]), c["clause"],
                _opt_str(c.get("oracle_index")), _bool_str(c.get("agree")),
            ])
    else:
        writer.writerow(["n", "m", "nilpotent", "index", "agree"])
        for c in report.cells:
            writer.writerow([
                c["n"], c["m"], _bool_str(c["nilpotent"]),
                _opt_str(c.get("index")), _bool_str(c.get("agree")),
            ])
    return out.getvalue()


def _render_scan_human(report: ScanReport) -> str:
    par = report.parameters
    mode = par["mode"]
    head = f"scan mode={mode}"
    if mode == "zp":
        head += f" p={par['p']}"
    head += (
        f" n=[{par['n_range'][0]},{par['n_range'][1]}]"
        f" m=[{par['m_range'][0]},{par['m_range'][1]}]"
        f" verify={'yes' if par['verify'] else 'no'}"
    )
    lines = [head]
    s = report.summary
    lines.append(f"cells {s['cells']}, nilpotent {s['nilpotent']}")
    if par["verify"]:
        lines.append(
            f"agreements {s['agreements']}, disagreements {len(s['disagreements'])}"
        )
        for d in s["disagreements"]:
            lines.append(f"DISAGREE at n={d['n']} m={d['m']}")
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path: Optional[str]) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# subcommands


def cmd_decide(args) -> int:
    if args.zm:
        verdict = nilpotence.decide_zm(args.n, args.m)
        if args.json:
            routed = dataclasses.replace(
                verdict,
                per_prime=nilpotence.decide_zm_via_primes(args.n, args.m).per_prime,
            )
            print(json.dumps(routed.to_json_dict(), indent=2))
        elif verdict.nilpotent:
            print(
                f"T(n={args.n}, m={args.m}): nilpotent over Z_{args.m}"
                f" ({verdict.clause.value})"
            )
        else:
            print(f"T(n={args.n}, m={args.m}): not nilpotent over Z_{args.m}")
        return EXIT_OK

    verdict = nilpotence.decide_zp(args.n, args.m, args.p)
    if args.json:
        print(json.dumps(verdict.to_json_dict(), indent=2))
    else:
        derived = (
            f"a={verdict.a}, b={verdict.b},"
            f" n*={verdict.n_star}, m*={verdict.m_star}"
        )
        if verdict.nilpotent:
            print(
                f"T(n={args.n}, m={args.m}) over Z_{args.p}: nilpotent,"
                f" index {verdict.index} ({derived})"
            )
        else:
            print(
                f"T(n={args.n}, m={args.m}) over Z_{args.p}:"
                f" not nilpotent ({derived})"
            )
    return EXIT_OK


def cmd_scan(args) -> int:
    zm = args.zm
    n_lo, m_lo = 1, (2 if zm else 1)
    parameters = {
        "mode": "zm" if zm else "zp",
        "n_range": [n_lo, args.n_max],
        "m_range": [m_lo, args.m_max],
        "verify": args.verify,
    }
    if not zm:
        parameters["p"] = args.p
    jobs = args.jobs if args.jobs else (os.cpu_count() or 1)
    if zm:
        tasks = [
            (n, m, args.verify)
            for n in range(n_lo, args.n_max + 1)
            for m in range(m_lo, args.m_max + 1)
        ]
        cells = _run_cells(_eval_zm_cell, tasks, jobs)
    else:
        if not is_prime(args.p):
            raise InvalidPrime(f"{args.p} is not prime")
        tasks = [
            (n, m, args.p, args.verify)
            for n in range(n_lo, args.n_max + 1)
            for m in range(m_lo, args.m_max + 1)
        ]
        cells = _run_cells(_eval_zp_cell, tasks, jobs)
    cells.sort(key=lambda c: (c["n"], c["m"]))
    report = ScanReport(parameters, cells)
    report.finish()

    if args.format == "csv":
        _emit(_render_csv(report, zm), args.out)
    elif args.format == "json":
        _emit(json.dumps(report.to_json_dict(), indent=2) + "\n", args.out)
    else:
        _emit(_render_scan_human(report), args.out)
    if args.verify and report.summary["disagreements"]:
        return EXIT_DISAGREE
    return EXIT_OK


def cmd_lemma1(args) -> int:
    inst = congruence.validate(
        args.d, args.m_star, args.n_star, args.q, c=(args.c if args.c is not None else 0)
    )
    closed = congruence.count_closed_form(inst)
    targets = [inst.c] if args.c is not None else list(range(inst.n))
    hist = None
    if args.enumerate:
        hist = congruence.counts_by_target(inst)

    reports = []
    for c in targets:
        inst_c = dataclasses.replace(inst, c=c)
        rec = congruence.count_recursive(inst_c)
        entry = {
            "instance": inst_c.to_json_dict(),
            "closed_form": closed,
            "recursive": rec,
        }
        agree = rec == closed
        if hist is not None:
            entry["enumerated"] = hist[c]
            agree = agree and hist[c] == closed
        entry["agree"] = agree
        reports.append(entry)
    all_agree = all(r["agree"] for r in reports)

    if args.json:
        payload = reports[0] if args.c is not None else reports
        print(json.dumps(payload, indent=2))
    else:
        print(
            f"instance d={inst.d} m*={inst.m_star} n*={inst.n_star} q={inst.qvars}"
            f" (m={inst.m}, n={inst.n}): closed form {closed}"
        )
        for r in reports:
            parts = [f"c={r['instance']['c']}: recursive {r['recursive']}"]
            if "enumerated" in r:
                parts.append(f"enumerated {r['enumerated']}")
            parts.append("agree" if r["agree"] else "DISAGREE")
            print(", ".join(parts))
        print("all agree" if all_agree else "DISAGREEMENT detected")
    return EXIT_OK if all_agree else EXIT_DISAGREE


def _identities_point(args) -> int:
    verdict = nilpotence.decide_zp(args.n, args.m, args.p)
    if not verdict.nilpotent:
        print(
            f"not applicable: T(n={args.n}, m={args.m}) is not nilpotent"
            f" over Z_{args.p}",
            file=sys.stderr,
        )
        return EXIT_BAD_INPUT
    if verdict.a < verdict.b:
        print(
            f"not applicable: a={verdict.a} < b={verdict.b}, T is already zero"
            f" and the expansion is bypassed",
            file=sys.stderr,
        )
        return EXIT_BAD_INPUT

    results = []
    _, _, expanded = nilpotence.index_expansion(verdict.a, verdict.b, args.p)
    results.append(("expansion", expanded == verdict.index))
    elem, matches = nilpotence.witness_nonvanishing(args.n, args.m, args.p)
    results.append(("witness", matches and not circring.is_zero(elem)))
    results.append(("annihilation", nilpotence.annihilation_check(args.n, args.m, args.p)))
    rng = random.Random(args.seed)
    frob_ok = all(
        oracle.frobenius_check(
            _random_elem(rng, args.n, args.p), _random_elem(rng, args.n, args.p), k
        )
        for k in (1, 2)
        for _ in range(3)
    )
    results.append(("frobenius", frob_ok))
    results.append(("geometric", oracle.geometric_identity_check(args.n, args.m, args.p)))

    for name, ok in results:
        print(f"{name:<13}{'pass' if ok else 'FAIL'}")
    return EXIT_OK if all(ok for _, ok in results) else EXIT_DISAGREE


def _random_elem(rng: random.Random, n: int, q: int) -> circring.CirculantElem:
    return circring.CirculantElem(n, q, tuple(rng.randrange(q) for _ in range(n)))


def _identities_random(args) -> int:
    if not is_prime(args.p):
        raise InvalidPrime(f"{args.p} is not prime")
    rng = random.Random(args.seed)
    trials = args.random_trials
    frob_pass = geo_pass = 0
    for _ in range(trials):
        a = _random_elem(rng, args.n, args.p)
        b = _random_elem(rng, args.n, args.p)
        if oracle.frobenius_check(a, b, rng.choice((1, 2))):
            frob_pass += 1
        if oracle.geometric_identity_check(args.n, rng.randrange(1, 2 * args.n + 1), args.p):
            geo_pass += 1
    print(f"frobenius    {'pass' if frob_pass == trials else 'FAIL'} ({frob_pass}/{trials})")
    print(f"geometric    {'pass' if geo_pass == trials else 'FAIL'} ({geo_pass}/{trials})")
    return EXIT_OK if frob_pass == geo_pass == trials else EXIT_DISAGREE


def cmd_identities(args) -> int:
    if args.random_trials is not None:
        return _identities_random(args)
    return _identities_point(args)


# ---------------------------------------------------------------------------
# parser and entry point


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nilcirc",
        description=(
            "Decide nilpotence of the circulant step sum I + S + ... + S^(m-1)"
            " over Z_p and Z_m, and verify the closed forms against brute force."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_dec = sub.add_parser("decide", help="decide one (n, m) point")
    p_dec.add_argument("--n", type=int, required=True)
    p_dec.add_argument("--m", type=int, required=True)
    mode = p_dec.add_mutually_exclusive_group(required=True)
    mode.add_argument("--p", type=int, help="prime modulus (Z_p mode)")
    mode.add_argument("--zm", action="store_true", help="use modulus m (Z_m mode)")
    p_dec.add_argument("--json", action="store_true")
    p_dec.set_defaults(func=cmd_decide)

    p_scan = sub.add_parser("scan", help="scan a grid of (n, m) points")
    mode = p_scan.add_mutually_exclusive_group(required=True)
    mode.add_argument("--p", type=int)
    mode.add_argument("--zm", action="store_true")
    p_scan.add_argument("--n-max", type=int, default=32)
    p_scan.add_argument("--m-max", type=int, default=32)
    p_scan.add_argument("--verify", action="store_true", help="attach oracle checks")
    p_scan.add_argument("--format", choices=("human", "json", "csv"), default="human")
    p_scan.add_argument("--jobs", type=int, default=None)
    p_scan.add_argument("--out", default=None, help="write output to a file")
    p_scan.set_defaults(func=cmd_scan)

    p_lem = sub.add_parser("lemma1", help="count congruence solutions")
    p_lem.add_argument("--d", type=int, required=True)
    p_lem.add_argument("--m-star", type=int, required=True)
    p_lem.add_argument("--n-star", type=int, required=True)
    p_lem.add_argument("--q", type=int, required=True, help="number of variables")
    p_lem.add_argument("--c", type=int, default=None, help="target (default: all)")
    p_lem.add_argument("--enumerate", action="store_true", help="run the brute-force count")
    p_lem.add_argument("--json", action="store_true")
    p_lem.set_defaults(func=cmd_lemma1)

    p_id = sub.add_parser("identities", help="run the executable proof identities")
    p_id.add_argument("--n", type=int, required=True)
    p_id.add_argument("--m", type=int, default=None)
    p_id.add_argument("--p", type=int, required=True)
    p_id.add_argument("--random-trials", type=int, default=None)
    p_id.add_argument("--seed", type=int, default=0)
    p_id.set_defaults(func=cmd_identities)

    return parser


def _validate_ranges(args) -> Optional[str]:
    if args.command == "scan":
        if args.n_max < 1:
            return "--n-max must be >= 1"
        if args.m_max < (2 if args.zm else 1):
            return f"--m-max leaves the m range empty (got {args.m_max})"
        if args.jobs is not None and args.jobs < 1:
            return "--jobs must be >= 1"
    if args.command == "identities":
        if args.n < 1:
            return "--n must be >= 1"
        if args.random_trials is not None:
            if args.random_trials < 1:
                return "--random-trials must be >= 1"
            if args.m is not None:
                return "--m and --random-trials are mutually exclusive"
        elif args.m is None:
            return "--m is required unless --random-trials is given"
    return None


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse reports usage errors as exit 2
        return int(exc.code or 0)
    problem = _validate_ranges(args)
    if problem is not None:
        print(f"error: {problem}", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
