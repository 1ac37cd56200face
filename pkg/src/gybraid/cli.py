"""Command line interface: ``gybraid {check,eval,image,witness}``.

Exit codes: 0 all checks pass, 1 a mathematical check failed, 2 invalid
input, 3 a resource bound (``--max-elements``) was hit.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor

from .braidrep import (BraidWord, RepContext, check_braid_relation, check_far_commutativity,
                       check_gyb, check_unitarity, eval_word)
from .gates import (ParameterError, build_r_decomposed, build_r_direct, check_m, check_n,
                    comm_identities_check, not_identities_check)
from .image_group import (enumerate_image, witness_state, witness_words,
                          symbolic_to_matrix, witness_distinctness, witness_variant,
                          word_to_symbolic)
from .qlinalg import KEY_GRID, TOL_EQ, export_matrix, max_entry_distance
from .reports import CheckReport, stopwatch

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


def _context(args) -> RepContext:
    return RepContext(args.n, args.m, tol_eq=args.tol, grid=args.grid)


def _emit(args, human: list[str], records: list[str]) -> None:
    text = "\n".join(records if args.format == "json" else human) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _decomposition_report(m: int, tol: float) -> CheckReport:
    clock = stopwatch()
    res = max_entry_distance(build_r_decomposed(m), build_r_direct(m))
    rep = CheckReport.from_residuals("r_decomposition", None, m, [("R", res)], tol)
    rep.elapsed_ms = clock()
    return rep


def cmd_check(args) -> int:
    ctx = _context(args)
    jobs = {
        "gyb_equation": lambda: check_gyb(build_r_direct(ctx.m), args.tol, m=ctx.m),
        "r_decomposition": lambda: _decomposition_report(ctx.m, args.tol),
        "far_commutativity": lambda: check_far_commutativity(ctx, args.tol),
        "braid_relation": lambda: check_braid_relation(ctx, args.tol),
        "unitarity": lambda: check_unitarity(ctx),
        "comm_identities": lambda: comm_identities_check(ctx.n, args.tol),
        "not_identities": lambda: not_identities_check(ctx.n, args.tol),
    }
    with ThreadPoolExecutor(max_workers=max(1, args.threads)) as pool:
        futures = {name: pool.submit(fn) for name, fn in jobs.items()}
        reports = [futures[name].result() for name in sorted(futures)]
    _emit(args, [r.summary() for r in reports], [r.to_text() for r in reports])
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def normal_form_record(g) -> dict:
    return {
        "exponents": {f"{a},{b}": e for (a, b), e in g.v.items()},
        "perm": list(g.perm.images),
    }


def cmd_eval(args) -> int:
    ctx = _context(args)
    word = BraidWord.parse(args.word, ctx.n)
    mat = eval_word(word, ctx)
    g = word_to_symbolic(word, ctx)
    residual = max_entry_distance(symbolic_to_matrix(g, ctx), mat)
    ok = residual < ctx.tol_eq
    record = {"n": ctx.n, "m": ctx.m, "check_name": "eval", "word": str(word), "pass": ok,
              "residual_max": residual, "normal_form": normal_form_record(g)}
    structured = json.dumps(record)[:-1] + ', "matrix": ' + export_matrix(mat) + "}"
    human = [
        f"word: [{word}]  (n={ctx.n}, m={ctx.m})",
        f"exponents: {g.v}",
        f"permutation: {g.perm}",
        f"symbolic vs matrix residual: {residual:.3e}  ({'ok' if ok else 'MISMATCH'})",
        "matrix: " + export_matrix(mat),
    ]
    _emit(args, human, [structured])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_image(args) -> int:
    ctx = _context(args)
    backends = ["matrix", "symbolic"] if args.backend == "both" else [args.backend]
    reports = [enumerate_image(ctx, args.max_elements, b) for b in backends]
    _emit(args, [r.summary() for r in reports], [r.to_text() for r in reports])
    if any(r.truncated for r in reports):
        return EXIT_BOUND
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def cmd_witness(args) -> int:
    n = args.n
    check_n(n)
    check_m(args.m)
    if args.words is not None:
        sets = [[w.strip() for w in args.words.split(";") if w.strip()]]
    else:
        if n not in (3, 4):
            raise ParameterError(f"witness sets exist for n = 3 and 4, not {n}")
        sets = [witness_words(n, "plain"),
                witness_words(n, witness_variant(args.m))]
    state = args.state or witness_state(n)
    reports = [witness_distinctness(words, state, n) for words in sets]
    _emit(args, [r.summary() for r in reports], [json.dumps(r.to_record()) for r in reports])
    return EXIT_OK if all(r.distinct for r in reports) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=3, help="strand count (default 3)")
    common.add_argument("--m", type=int, default=3, help="odd integer >= 3 (default 3)")
    common.add_argument("--tol", type=float, default=TOL_EQ,
                        help=f"equality tolerance (default {TOL_EQ:g})")
    common.add_argument("--grid", type=float, default=KEY_GRID,
                        help=f"canonical key rounding grid (default {KEY_GRID:g})")
    common.add_argument("--format", choices=("human", "json"), default="human")
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="gybraid", description="Qubit braid group representations from gYB matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="verify R and the gate identities")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("eval", parents=[common], help="evaluate a braid word both ways")
    p.add_argument("--word", default="", help='signed generator indices, e.g. "1 2 -1"')
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("image", parents=[common], help="enumerate the image and count it")
    p.add_argument("--backend", choices=("matrix", "symbolic", "both"), default="both")
    p.add_argument("--max-elements", type=int, default=10 ** 6)
    p.set_defaults(func=cmd_image)

    p = sub.add_parser("witness", parents=[common], help="distinctness witnesses for S_n")
    p.add_argument("--words", help='custom words separated by ";", e.g. "NOT2; Z1 Z3 NOT2"')
    p.add_argument("--state", help="basis label, e.g. 0100")
    p.set_defaults(func=cmd_witness)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.tol <= 0 or args.grid <= 0:
            raise ParameterError("--tol and --grid must be positive")
        return args.func(args)
    except (ParameterError, ValueError) as exc:
        print(f"gybraid: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
