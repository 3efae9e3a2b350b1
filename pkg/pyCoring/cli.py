"""Command-line surface of pyCoring."""


from __future__ import annotations

__all__ = ["build_parser", "run_command", "main", "EXIT_OK", "EXIT_FAIL",
    "EXIT_INPUT"]

import argparse
import logging
import os
import sys
import time
from typing import Callable, Dict, List, Optional, Sequence, TextIO, Tuple

from .base import (Field, QQ_FIELD, SIDES, ShapeError, PreconditionError,
    AxiomError)
from .components import (Coalgebra, CORPUS, THEOREM_LEGS, DEFAULT_SEED,
    DEFAULT_TRIALS, build_corpus, validate_coalgebra, solve_cointegral,
    check_cointegral, check_retraction, cointegral_to_retraction,
    induce_coring, solve_counit, verify_counit, induced_multiplication,
    build_dorroh, validate_coring, check_coideal_embedding,
    check_unit_embedding, check_projection, regular_comodule,
    lift_right_comodule, validate_comodule, forget_comodule,
    balanced_battery, theorem_pipeline)
from .utils import SpecError, Report, load, dump_spec, input_hash
from .utils.report import matrix_strings


EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

SEED_VAR = "COALG_SEED"


### Commands ###

def _validate(args: argparse.Namespace, c: Coalgebra, report: Report) -> None:
    report.add_validation("coalgebra", validate_coalgebra(c))


def _cosep(args: argparse.Namespace, c: Coalgebra, report: Report) -> None:
    solved = solve_cointegral(c)
    if not report.add_solver("coseparable", solved):
        return
    g = solved.certificate
    report.add_validation("cointegral", check_cointegral(c, g)) # type: ignore
    report.certificates["cointegral"] = matrix_strings(g.matrix(), c.field) # type: ignore
    p = cointegral_to_retraction(g, c) # type: ignore
    report.add_validation("retraction", check_retraction(c, p))
    report.certificates["retraction"] = matrix_strings(p.matrix(c.dim), c.field)


def _counit(args: argparse.Namespace, c: Coalgebra, report: Report) -> None:
    side = args.side
    cr = induce_coring(c)
    solved = solve_counit(cr, side)
    if not report.add_solver(f"{side}-counital", solved):
        return
    eps = solved.certificate.map # type: ignore
    report.add_validation(f"{side}-counit", verify_counit(cr, side, eps))
    report.certificates[f"{side}-counit"] = matrix_strings(
        eps.matrix(c.keys(), cr.algebra.keys()), c.field)
    if side == "left":
        induced = induced_multiplication(c, solved.certificate, cr) # type: ignore
        report.add_validation("induced-algebra", induced.report)


def _dorroh(args: argparse.Namespace, c: Coalgebra, report: Report) -> None:
    cr = induce_coring(c)
    d = build_dorroh(cr)
    report.add_validation("coring", validate_coring(d.coring, d.counit))
    report.add_validation("coideal", check_coideal_embedding(d))
    report.add_validation("unit-embedding", check_unit_embedding(d))
    report.add_validation("projection", check_projection(d))
    regular = regular_comodule(cr, "right")
    lifted = lift_right_comodule(regular, d)
    report.add_validation("lifted-comodule", validate_comodule(lifted, d.counit))
    report.verdicts["forget-lift"] = forget_comodule(lifted, d) == regular.coaction
    report.dimensions["dorroh"] = {
        "carrier": d.coring.dim,
        "algebra": cr.algebra.dim,
        "tensor": d.coring.tensor.dim,
    }


def _balanced(args: argparse.Namespace, c: Coalgebra, report: Report) -> None:
    result = balanced_battery(c, args.seed, args.trials)
    report.verdicts["agree"] = result.agree
    if result.disagreements:
        report.witnesses["disagreements"] = result.disagreements
    report.dimensions["balanced"] = {
        "seed": result.seed,
        "trials": result.trials,
        "true": result.true_count,
        "false": result.false_count,
    }


def _theorem(args: argparse.Namespace, c: Coalgebra, report: Report) -> None:
    result = theorem_pipeline(c, max_workers=args.workers)
    for leg in THEOREM_LEGS:
        report.add_solver(leg, result.legs[leg])
    report.verdicts["agree"] = result.agree
    report.verdicts.update(result.cross)
    if not result.coseparable:
        return
    keys = c.keys()
    for leg in THEOREM_LEGS:
        cert = result.legs[leg].certificate
        if leg.endswith("coseparable"):
            rows = cert.matrix()
        else:
            rows = cert.map.matrix(keys, keys)
        report.certificates[leg] = matrix_strings(rows, c.field)


FILE_COMMANDS: Dict[str, Callable[[argparse.Namespace, Coalgebra, Report], None]] = {
    "validate": _validate,
    "cosep": _cosep,
    "counit": _counit,
    "dorroh": _dorroh,
    "balanced": _balanced,
    "theorem": _theorem,
}


### Parser ###

def _seed_default() -> int:
    raw = os.environ.get(SEED_VAR)
    if raw is None:
        return DEFAULT_SEED
    try:
        return int(raw)
    except ValueError as e:
        raise SpecError(f"{SEED_VAR} must be an integer, got '{raw}'") from e


def build_parser(seed: int = DEFAULT_SEED) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const",
        const="json", help="Render the report as JSON (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const",
        const="text", help="Render the report as text")
    common.add_argument("--no-time", dest="timed", action="store_false",
        help="Omit wall time from the report")
    common.add_argument("-v", "--verbose", action="store_true",
        help="Log debug output to stderr")

    parser = argparse.ArgumentParser(prog="pycoring",
        description="Exact coseparability checks for finite coalgebras")
    sub = parser.add_subparsers(dest="command", required=True)

    for name, text in (
        ("validate", "Check the coalgebra axioms"),
        ("cosep", "Solve for a cointegral"),
        ("dorroh", "Build and check the Dorroh coring"),
    ):
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("file", help="Coalgebra presentation (JSON)")

    p = sub.add_parser("counit", parents=[common],
        help="Solve for a one-sided counit of the induced coring")
    p.add_argument("file", help="Coalgebra presentation (JSON)")
    p.add_argument("--side", choices=SIDES, default="left")

    p = sub.add_parser("balanced", parents=[common],
        help="Compare the balanced-form conditions on random forms")
    p.add_argument("file", help="Coalgebra presentation (JSON)")
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)

    p = sub.add_parser("theorem", parents=[common],
        help="Decide the four coseparability conditions")
    p.add_argument("file", help="Coalgebra presentation (JSON)")
    p.add_argument("--workers", type=int, default=None,
        help="Run the solvers on a thread pool of this size")

    p = sub.add_parser("corpus", parents=[common],
        help="Emit a built-in coalgebra presentation")
    p.add_argument("name", help=f"One of {', '.join(CORPUS)}")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--field", type=Field.parse, default=QQ_FIELD,
        help="'Q' or 'Fp:<p>'")

    p = sub.add_parser("report", parents=[common],
        help="Render a saved JSON report")
    p.add_argument("file", help="Report (JSON)")

    return parser


def _render(report: Report, args: argparse.Namespace) -> str:
    if args.fmt == "text":
        return report.to_text(timed=args.timed)
    return report.to_json(timed=args.timed)


### Entry Points ###

def run_command(
    argv: Sequence[str], out: Optional[TextIO] = None
) -> Tuple[Optional[Report], int]:
    """
    Run one command, writing its output to out.

    Returns the report (None for commands that emit no report) and the exit
    code: 0 when every verdict holds, 1 when a problem is infeasible or a
    check fails, 2 on bad input.
    """
    out = sys.stdout if out is None else out
    argv = list(argv)
    try:
        parser = build_parser(_seed_default())
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return None, EXIT_INPUT
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return None, EXIT_INPUT if e.code else EXIT_OK

    logging.basicConfig(stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s:%(name)s: %(message)s")

    try:
        if args.command == "corpus":
            out.write(dump_spec(build_corpus(args.name, args.n, args.field)))
            return None, EXIT_OK
        if args.command == "report":
            try:
                with open(args.file, encoding="utf-8") as f:
                    report = Report.from_json(f.read())
            except OSError as e:
                raise SpecError(f"Cannot read '{args.file}': {e}") from e
            out.write(_render(report, args))
            return report, EXIT_OK

        start = time.perf_counter()
        c = load(args.file, validate=args.command != "validate")
        report = Report(" ".join(argv), input_hash(c))
        FILE_COMMANDS[args.command](args, c, report)
        report.wall_time = f"{time.perf_counter() - start:.3f}s"
    except (SpecError, ShapeError, PreconditionError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return None, EXIT_INPUT
    except AxiomError as e:
        print(f"error: {e}", file=sys.stderr)
        return None, EXIT_FAIL

    out.write(_render(report, args))
    logging.debug(f"Command '{args.command}' verdicts: {report.verdicts}")
    return report, EXIT_OK if report.ok else EXIT_FAIL


def main(argv: Optional[List[str]] = None) -> int:
    _, code = run_command(sys.argv[1:] if argv is None else argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
