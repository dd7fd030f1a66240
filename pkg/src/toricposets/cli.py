"""Command-line interface.

Exit status: 0 success, 1 failed verification or internal invariant, 2 bad
input or unmet precondition, 3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import extensions as ext
from .errors import InputError, InvariantViolation, PreconditionError, ResourceError
from .greene import psi_poset, psi_tor
from .io import load
from .quiver import iter_linear_extensions
from .ratfun import rf_to_json, rf_to_string, set_default_seed
from .toric import DEFAULT_CAP, flip_sequence, same_toric_poset
from .verify import SUITES, SuiteConfig, run_suite


def _word(w: Sequence[int]) -> str:
    return "(" + ",".join(map(str, w)) + ")"


def cmd_extensions(args, out) -> int:
    q = load(args.file).quiver
    if args.toric:
        words = ext.ltor(q, args.method, v=args.source or 1, cap=args.cap).words()
    else:
        if args.method != "recursive" or args.source is not None:
            raise InputError("--method and --source apply only with --toric")
        words = list(iter_linear_extensions(q))
    if args.count:
        print(len(words), file=out)
    elif args.json:
        print(json.dumps({"toric": args.toric, "count": len(words), "words": [list(w) for w in words]}), file=out)
    else:
        for w in words:
            print(_word(w), file=out)
    return 0


def cmd_psi(args, out) -> int:
    q = load(args.file).quiver
    r = psi_tor(q, args.method) if args.toric else psi_poset(q)
    print(json.dumps(rf_to_json(r)) if args.json else rf_to_string(r), file=out)
    return 0


def cmd_verify(args, out) -> int:
    cfg = SuiteConfig(max_n=args.max_n, max_k=args.max_k, max_j=args.max_j, max_total=args.max_total,
                      count=args.count, seed=args.seed, method=args.method)
    rep = run_suite(args.suite, cfg)
    if args.json:
        print(json.dumps(rep.to_json(), indent=1), file=out)
    else:
        status = "PASS" if rep.passed else "FAIL"
        print(f"{rep.suite}: {status} ({rep.checked} checked, {len(rep.failures)} failed)", file=out)
        for r in rep.failures:
            print(json.dumps(r.to_json()), file=out)
    return 0 if rep.passed else 1


def cmd_flip(args, out) -> int:
    q1 = load(args.file1).quiver
    q2 = load(args.file2).quiver
    if q1.graph != q2.graph:
        raise InputError("quivers have different underlying graphs")
    forbidden: set[int] = set()
    if args.fix_source is not None:
        v = args.fix_source
        if not 1 <= v <= q1.n:
            raise InputError(f"vertex {v} outside 1..{q1.n}")
        if not (q1.is_source(v) and q2.is_source(v)):
            raise PreconditionError(f"vertex {v} must be a source of both quivers")
        forbidden = {v} | set(q1.graph.adjacency[v])
    if not same_toric_poset(q1, q2):
        print("not equivalent", file=out)
        return 0
    seq = flip_sequence(q1, q2, forbidden, cap=args.cap)
    if seq is None:
        print(f"equivalent but unreachable without flipping {sorted(forbidden)}", file=out)
        return 1
    print(" ".join(map(str, seq)), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="toricposets", description="Toric posets and Greene-type rational functions.")
    ap.add_argument("--seed", type=int, default=0, help="seed for randomized identity checks (default 0)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("extensions", help="list linear or toric total extensions")
    p.add_argument("file")
    p.add_argument("--toric", action="store_true")
    p.add_argument("--method", choices=ext.METHODS, default="recursive")
    p.add_argument("--source", type=int, help="vertex used by the partition method (default 1)")
    p.add_argument("--count", action="store_true", help="print only the number of extensions")
    p.add_argument("--json", action="store_true")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_extensions)

    p = sub.add_parser("psi", help="Greene's rational function or its toric analogue")
    p.add_argument("file")
    p.add_argument("--toric", action="store_true")
    p.add_argument("--method", choices=ext.METHODS, default="recursive")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_psi)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("suite", choices=SUITES)
    p.add_argument("--max-n", type=int)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--max-j", type=int, default=3)
    p.add_argument("--max-total", type=int, default=5)
    p.add_argument("--count", type=int, help="number of random instances")
    p.add_argument("--method", choices=ext.METHODS, default="recursive")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("flip", help="shortest flip sequence between two quivers")
    p.add_argument("file1")
    p.add_argument("file2")
    p.add_argument("--fix-source", type=int, help="never flip this vertex or its neighbours")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_flip)
    return ap


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    set_default_seed(args.seed)
    try:
        return args.func(args, out)
    except (InputError, PreconditionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 3
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
