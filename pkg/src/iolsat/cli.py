"""Command line front end.

    iolsat problem.p [--timeout S] [--print-basis] [--solver PATH]

Exit status: 0 on Success or when every conjecture is a Theorem, 1 when
some conjecture is CounterSatisfiable, 2 on input errors, 3 on timeout.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import signal
import sys
import warnings
from dataclasses import dataclass
from typing import Optional, Sequence

from .reasoner import reason
from .sat import ExternalSolver, using_solver
from .szs import status_line, write_results
from .tptp import InputError, read_problem

EXIT_OK, EXIT_COUNTERSAT, EXIT_INPUT_ERROR, EXIT_TIMEOUT = 0, 1, 2, 3


class ReasoningTimeout(Exception):
    pass


@dataclass
class RunConfig:
    input_path: str
    timeout: Optional[float] = None
    print_basis: bool = False
    solver_path: Optional[str] = None

    def __post_init__(self) -> None:
        if self.timeout is not None and self.timeout <= 0:
            raise ValueError("timeout must be positive")


@contextlib.contextmanager
def _deadline(seconds: Optional[float]):
    if not seconds:
        yield
        return

    def _expire(signum, frame):
        raise ReasoningTimeout()

    previous = signal.signal(signal.SIGALRM, _expire)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        yield
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, previous)


def run(config: RunConfig, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    source = os.path.basename(config.input_path)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            problem = read_problem(config.input_path)
        for w in caught:
            print(f"% Warning: {w.message}", file=err)
    except (OSError, UnicodeDecodeError) as exc:
        print(status_line("InputError", source, str(exc)), file=err)
        return EXIT_INPUT_ERROR
    except InputError as exc:
        print(status_line("InputError", source, str(exc)), file=err)
        return EXIT_INPUT_ERROR

    solver = ExternalSolver(config.solver_path) if config.solver_path else None
    try:
        with _deadline(config.timeout), (
            using_solver(solver) if solver else contextlib.nullcontext()
        ):
            outcome = reason(problem)
    except ReasoningTimeout:
        print(status_line("Timeout", source), file=out)
        return EXIT_TIMEOUT

    out.write(write_results(problem, outcome, config.print_basis))
    if any(not proved for _, proved in outcome.verdicts):
        return EXIT_COUNTERSAT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="iolsat",
        description="Compute output bases for input/output logic problems (TPTP NXF).",
    )
    parser.add_argument("problem", help="problem file (.p)")
    parser.add_argument("--timeout", type=float, metavar="S", help="give up after S seconds")
    parser.add_argument(
        "--print-basis",
        action="store_true",
        help="also print the output basis when the problem has conjectures",
    )
    parser.add_argument(
        "--solver", metavar="PATH", help="external DIMACS SAT solver executable"
    )
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.timeout is not None and args.timeout <= 0:
        print("iolsat: --timeout must be positive", file=sys.stderr)
        return EXIT_INPUT_ERROR
    config = RunConfig(args.problem, args.timeout, args.print_basis, args.solver)
    return run(config)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
