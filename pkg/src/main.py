#!/usr/bin/env python3
"""
Cartier Kernel
Command-line entry point for test modules, jumping numbers and V-filtrations.
"""

import argparse
import json
import sys
from fractions import Fraction
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator

from .algebra.parser import parse_polynomial
from .algebra.poly import Polynomial
from .algebra.ring import RingSpec
from .cartier.modules import CartierModuleDesc, FractionalSubmodule, parse_rational
from .output.formatter import FORMATS, ResultFormatter
from .testmod.jumps import f_pure_threshold, jumping_numbers
from .testmod.models import fractional_model, pushforward_model
from .testmod.test_module import gr_tau, test_module
from .utils.config import get_settings
from .utils.errors import KernelError, UsageError
from .utils.limits import limits_override
from .utils.logger import get_logger, setup_logger
from .verify.acceptance import run_suite
from .vfilt.axioms import check_v_axioms
from .vfilt.compare import compare_v_tau
from .vfilt.graph import graph_counterexample_check, graph_embedding_table
from .vfilt.stadnik import TameDescriptor, stadnik_v, stadnik_v_direct, trivial_v


logger = get_logger("cli")

COMMANDS = [
    "tau",
    "jumps",
    "fpt",
    "gr",
    "vfilt",
    "axioms",
    "compare",
    "counterexample",
    "verify-paper",
]
TABLES = ["stadnik", "direct", "trivial", "graph"]
Pair = Tuple[Fraction, Fraction]


class KernelArgumentParser(argparse.ArgumentParser):
    """argparse that raises UsageError instead of exiting with status 2."""

    def error(self, message: str):
        raise UsageError(message)


def _pair(text: Optional[str]) -> Optional[Pair]:
    if text is None:
        return None
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"expected 'a,b', got {text!r}")
    return parse_rational(parts[0]), parse_rational(parts[1])


class JobSpec(BaseModel):
    """Validated command line."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    command: str
    char: Optional[int] = None
    vars: List[str] = ["x"]
    filtvar: Optional[str] = None
    carrier_shift: Optional[int] = None
    twist: str = "1"
    model: bool = False
    f: Optional[str] = None
    t: Optional[Fraction] = None
    interval: Optional[Pair] = None
    window: Optional[Pair] = None
    n: int = 1
    s: int = 0
    table: str = "stadnik"
    emax: Optional[int] = None
    denom_bound: Optional[int] = None
    budget: Optional[int] = None
    format: str = "json"
    log_level: Optional[str] = None

    @field_validator("vars", mode="before")
    @classmethod
    def split_vars(cls, value):
        if isinstance(value, str):
            return [name.strip() for name in value.split(",") if name.strip()]
        return value

    @field_validator("t", mode="before")
    @classmethod
    def exact_t(cls, value):
        return parse_rational(value) if isinstance(value, str) else value

    @field_validator("interval", "window", mode="before")
    @classmethod
    def exact_pair(cls, value):
        return _pair(value) if isinstance(value, str) else value

    def require(self, *names: str) -> None:
        missing = [name for name in names if getattr(self, name) is None]
        if missing:
            flags = ", ".join(f"--{name.replace('_', '-')}" for name in missing)
            raise UsageError(f"{self.command} needs {flags}")

    def ring(self) -> RingSpec:
        self.require("char")
        return RingSpec.from_names(self.char, self.vars, self.filtvar)

    def module(self, ring: RingSpec) -> CartierModuleDesc:
        twist = parse_polynomial(self.twist, ring)
        if self.model:
            if self.carrier_shift:
                return fractional_model(ring, self.carrier_shift, twist)
            return pushforward_model(ring, twist)
        return CartierModuleDesc(
            carrier=FractionalSubmodule.unit(ring, self.carrier_shift or 0),
            twist=twist,
        )

    def element(self, ring: RingSpec) -> Polynomial:
        self.require("f")
        return parse_polynomial(self.f, ring)


def build_parser() -> KernelArgumentParser:
    parser = KernelArgumentParser(
        prog="cartier-kernel",
        description="Exact test modules and V-filtrations over F_p",
        epilog="Negative rationals need the '=' form, e.g. --t=-1/2 or --window=-1,2.",
    )
    parser.add_argument("command", choices=COMMANDS, help="Computation to run")
    parser.add_argument("--char", type=int, help="Characteristic p (prime, 3..97)")
    parser.add_argument("--vars", help="Comma-separated variable names (default: x)")
    parser.add_argument("--filtvar", help="Filtration variable (default: first variable)")
    parser.add_argument("--carrier-shift", type=int, help="Carrier x^-n R")
    parser.add_argument("--twist", help="Structure map kappa * twist (default: 1)")
    parser.add_argument(
        "--model",
        action="store_true",
        help="Treat the module as a coherent model of its pushforward",
    )
    parser.add_argument("--f", help="Filtration element")
    parser.add_argument("--t", help="Exact parameter a/b")
    parser.add_argument("--interval", help="Jump search interval a,b")
    parser.add_argument("--window", help="Filtration window a,b (default: -1,2)")
    parser.add_argument("--n", type=int, help="Kummer degree")
    parser.add_argument("--s", type=int, help="Character, or the graph exponent")
    parser.add_argument("--table", choices=TABLES, help="Filtration checked by 'axioms'")
    parser.add_argument("--emax", type=int, help="Frobenius level bound")
    parser.add_argument("--denom-bound", type=int, help="Jump search denominator bound")
    parser.add_argument("--budget", type=int, help="Level budget of the stabilization loops")
    parser.add_argument("--format", choices=FORMATS, help="Output format")
    parser.add_argument("--log-level", help="Override log level")
    return parser


def _window(job: JobSpec) -> Pair:
    return job.window or (Fraction(-1), Fraction(2))


def _filtration_table(job: JobSpec):
    if job.table == "graph":
        job.require("char")
        table = graph_embedding_table(job.char, job.s)
        return table, Polynomial.variable(table.ring, "x")
    ring = job.ring()
    if job.table == "trivial":
        table = trivial_v(ring, _window(job))
    elif job.table == "direct":
        table = stadnik_v_direct(TameDescriptor(job.n, job.s), ring, _window(job))
    else:
        table = stadnik_v(TameDescriptor(job.n, job.s), ring, _window(job))
    return table, Polynomial.filtvar_power(ring, 1)


def execute(job: JobSpec, formatter: ResultFormatter) -> Tuple[str, int]:
    """Run one job; returns the rendered result and the exit code."""
    if job.command == "counterexample":
        job.require("char")
        return formatter.format_counterexample(graph_counterexample_check(job.char, job.s)), 0

    if job.command == "verify-paper":
        report = run_suite(job.char)
        return formatter.format_suite(report), 0 if report.passed else 3

    if job.command in ("vfilt", "axioms", "compare"):
        if job.command == "axioms":
            table, f = _filtration_table(job)
            return formatter.format_axioms(check_v_axioms(table, f)), 0
        ring = job.ring()
        d = TameDescriptor(job.n, job.s)
        if job.command == "vfilt":
            return formatter.format_table(stadnik_v(d, ring, _window(job))), 0
        return formatter.format_compare(compare_v_tau(d, ring, _window(job))), 0

    ring = job.ring()
    M = job.module(ring)
    f = job.element(ring)
    if job.command == "tau":
        job.require("t")
        return formatter.format_submodule(test_module(M, f, job.t)), 0
    if job.command == "jumps":
        job.require("interval")
        a, b = job.interval
        return formatter.format_jumps(jumping_numbers(M, f, a, b, job.denom_bound)), 0
    if job.command == "fpt":
        return formatter.format_fpt(f_pure_threshold(M, f, job.denom_bound), f), 0
    job.require("t")
    return formatter.format_graded(gr_tau(M, f, job.t)), 0


def run(argv: Optional[List[str]] = None) -> int:
    """Parse, compute and print; every failure becomes one JSON line on stderr."""
    try:
        args = build_parser().parse_args(argv)
        options = {key: value for key, value in vars(args).items() if value is not None}
        try:
            job = JobSpec(**options)
        except ValidationError as exc:
            raise UsageError(exc.errors()[0]["msg"]) from None

        settings = get_settings()
        setup_logger(
            log_level=job.log_level or settings.logging.level,
            log_dir=settings.logging.dir,
        )
        logger.info(f"Starting Cartier Kernel - command: {job.command}")

        formatter = ResultFormatter(job.format)
        with limits_override(
            emax=job.emax, denominator_bound=job.denom_bound, level_budget=job.budget
        ):
            output, code = execute(job, formatter)
    except ValidationError as exc:
        # out-of-range --emax, --denom-bound or --budget
        error = UsageError(exc.errors()[0]["msg"])
        print(json.dumps(error.to_dict(), sort_keys=True), file=sys.stderr)
        return error.exit_code
    except KernelError as exc:
        print(json.dumps(exc.to_dict(), sort_keys=True), file=sys.stderr)
        return exc.exit_code

    print(output)
    logger.info(f"Finished {job.command} with exit code {code}")
    return code


def main():
    """Main entry point."""
    sys.exit(run())


if __name__ == "__main__":
    main()
