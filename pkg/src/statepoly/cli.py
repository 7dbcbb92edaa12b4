"""Command-line front end. Every command prints one JSON report on stdout.

Exit codes: 0 pass, 1 verification failed, 2 input error, 3 budget exceeded,
4 chain hypothesis violated.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
import time
from fractions import Fraction
from pathlib import Path

from .arith import ParseError
from .chain import (ChainAssemblyError, ChainConfig, ChainConfigError, VARIANTS, assemble,
                    verify_polytope_decomposition, verify_state_decomposition,
                    verify_vertex_sharpness)
from .hm import OneParamSubgroup, mu, mu_decomposition_check, mu_dual
from .ideal import gotzmann_representation, graded_piece, read_ideal
from .polytope import fmt_rational, hull_vertices
from .states import BudgetExceeded, default_budget, states

EXIT_PASS, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET, EXIT_HYPOTHESIS = 0, 1, 2, 3, 4

CHECKS = ("states", "polytope", "vertices", "mu")


class InputError(ValueError):
    pass


def _digest(*parts) -> str:
    h = hashlib.sha256()
    for part in parts:
        h.update(part if isinstance(part, bytes) else str(part).encode())
        h.update(b"\0")
    return h.hexdigest()


def _int_list(text: str, what: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise InputError(f"{what} must be comma-separated integers, got {text!r}") from None


def _read(path: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def cmd_states(args) -> tuple[str, dict, bytes]:
    raw = _read(args.file)
    ideal = read_ideal(raw.decode())
    if args.m < 0:
        raise InputError("m must be nonnegative")
    piece = graded_piece(ideal, args.m)
    st = states(piece, args.budget, args.jobs)
    poly = hull_vertices(st.points)
    payload = {"m": args.m, "n_vars": ideal.n_vars, "Q": piece.Q, "P": piece.P,
               "states": [list(p) for p in st.sorted_points()], "state_count": len(st),
               "polytope": poly.to_json(), "vertex_count": len(poly),
               "note": "saturation of the ideal is assumed, not verified"}
    return "value", payload, raw


def cmd_mu(args) -> tuple[str, dict, bytes]:
    raw = _read(args.file)
    ideal = read_ideal(raw.decode())
    if args.m < 0:
        raise InputError("m must be nonnegative")
    weights = _int_list(args.weights, "--weights")
    if len(weights) != ideal.n_vars:
        raise InputError(f"--weights has {len(weights)} entries, ideal has {ideal.n_vars} variables")
    rho = OneParamSubgroup(weights)
    piece = graded_piece(ideal, args.m)
    value = mu(piece, rho, args.budget)
    payload = {"m": args.m, "weights": weights,
               "normalized_weights": [fmt_rational(x) for x in rho.normalized],
               "mu": fmt_rational(value), "Q": piece.Q, "P": piece.P}
    if len(set(weights)) == 1:
        payload["note"] = "constant weights: the normalized 1-PS is trivial"
    outcome = "value"
    if args.dual:
        dual = mu_dual(piece, rho, args.budget, check=False)
        payload["mu_dual"] = fmt_rational(dual)
        payload["dual_equal"] = dual == value
        outcome = "pass" if dual == value else "fail"
    return outcome, payload, raw


def _sample_weights(n_vars: int, count: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    return [[rng.randint(-6, 6) for _ in range(n_vars)] for _ in range(count)]


def cmd_verify_chain(args) -> tuple[str, dict, bytes]:
    raw = _read(args.file)
    config = ChainConfig.loads(raw.decode())
    inst = assemble(config, args.m, args.variant)
    wanted = CHECKS if args.check == "all" else (args.check,)
    results = {}
    if "states" in wanted:
        results["states"] = verify_state_decomposition(inst, args.budget, args.jobs).to_json()
    if "polytope" in wanted:
        results["polytope"] = verify_polytope_decomposition(inst, args.budget, args.jobs).to_json()
    if "vertices" in wanted:
        results["vertices"] = verify_vertex_sharpness(inst, args.budget, args.jobs).to_json()
    if "mu" in wanted:
        if args.mu_weights:
            samples = [_int_list(w, "--mu-weights") for w in args.mu_weights]
        else:
            samples = _sample_weights(config.n_vars, args.mu_samples, args.seed)
        for w in samples:
            if len(w) != config.n_vars:
                raise InputError(f"--mu-weights {w} needs {config.n_vars} entries")
        reports = [mu_decomposition_check(inst, OneParamSubgroup(w), args.budget).to_json()
                   for w in samples]
        results["mu"] = {"check": "mu", "passed": all(r["passed"] for r in reports),
                         "details": {"samples": reports}}
    passed = all(r["passed"] for r in results.values())
    payload = {"instance": inst.summary(), "checks": results}
    return ("pass" if passed else "fail"), payload, raw


def cmd_gotzmann(args) -> tuple[str, dict, bytes]:
    try:
        coeffs = [Fraction(x.strip()) for x in args.hilbert.split(",")]
    except ValueError:
        raise InputError(f"--hilbert must be comma-separated rationals, got {args.hilbert!r}") from None
    try:
        rep = gotzmann_representation(coeffs)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = {"hilbert_coefficients": [fmt_rational(c) for c in coeffs],
               "gotzmann_number": len(rep), "representation": rep}
    return "value", payload, args.hilbert.encode()


COMMANDS = {"states": cmd_states, "mu": cmd_mu, "verify-chain": cmd_verify_chain,
            "gotzmann": cmd_gotzmann}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="statepoly",
                                     description="State polytopes and Hilbert-Mumford indices "
                                                 "of Hilbert points.")
    parser.add_argument("--budget", type=int, default=None,
                        help="cap on basis-enumeration nodes (default 10^7, or $STATEPOLY_BUDGET)")
    parser.add_argument("--jobs", type=int, default=1, help="worker processes for state enumeration")
    parser.add_argument("--timing", action="store_true",
                        help="include wall-clock timing (makes output non-reproducible)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("states", help="states and state polytope of an ideal's m-th Hilbert point")
    p.add_argument("file")
    p.add_argument("m", type=int, help="degree of the graded piece")

    p = sub.add_parser("mu", help="Hilbert-Mumford index for a diagonal 1-PS")
    p.add_argument("file")
    p.add_argument("m", type=int, help="degree of the graded piece")
    p.add_argument("--weights", required=True, help="r0,...,rn (use --weights=-1,1 for a leading minus)")
    p.add_argument("--dual", action="store_true", help="also compute the dual index and compare")

    p = sub.add_parser("verify-chain", help="decomposition checks for a chain of varieties")
    p.add_argument("file")
    p.add_argument("m", type=int, help="degree of the graded piece")
    p.add_argument("--variant", choices=VARIANTS, default="proof")
    p.add_argument("--check", choices=CHECKS + ("all",), default="all")
    p.add_argument("--mu-weights", action="append", default=None,
                   help="weight vector for the index check; repeatable")
    p.add_argument("--mu-samples", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("gotzmann", help="Gotzmann number of a Hilbert polynomial")
    p.add_argument("--hilbert", required=True, help="coefficients in ascending powers of u, e.g. 1,2")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.budget is None:
        args.budget = default_budget()
    start = time.perf_counter()
    report = {"command": args.command}
    code = EXIT_PASS
    try:
        outcome, payload, raw = COMMANDS[args.command](args)
        extra = {k: v for k, v in sorted(vars(args).items()) if k not in ("budget", "jobs", "timing")}
        report.update(inputs_digest=_digest(raw, json.dumps(extra, sort_keys=True, default=str)),
                      outcome=outcome, payload=payload)
        if outcome == "fail":
            code = EXIT_FAIL
    except (InputError, ParseError, ChainConfigError) as exc:
        code = EXIT_INPUT
        report.update(outcome="error", payload={"error": str(exc)})
    except BudgetExceeded as exc:
        code = EXIT_BUDGET
        report.update(outcome="error", payload={"error": str(exc)})
    except ChainAssemblyError as exc:
        code = EXIT_HYPOTHESIS
        report.update(outcome="error", payload={"error": str(exc)})
    if args.timing:
        report["timing_seconds"] = round(time.perf_counter() - start, 6)
    report["exit_code"] = code
    json.dump(report, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")
    if code in (EXIT_INPUT, EXIT_BUDGET, EXIT_HYPOTHESIS):
        print(f"statepoly: {report['payload']['error']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
