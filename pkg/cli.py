# cli.py
"""
contextcut command line.

    python cli.py generate ncycle:5
    python cli.py check --scenario ncycle:4 --behavior pr-box:4 --test ncycle
    python cli.py derive --ineq i3322 --op extend --scenario bell:3 --verify
    python cli.py validate --scenario scenario.json --behavior behavior.json

Exit codes: 0 noncontextual or undecided, 2 invalid input, 3 contextual,
4 an internal certificate failed its exact re-check.
"""

import argparse
import sys
from typing import List, Optional

from config import Limits
from context import new_run_id
from exceptions import CertificateError
from handlers import check, derive, generate, validate
from logger import StructuredLogger
from models import CheckTest, Command, DeriveOperation, ErrorReport, ExitCode, RunConfig
from scenario.serialization import canonical_json

logger = StructuredLogger("contextcut")

HANDLERS = {
    Command.GENERATE: generate,
    Command.CHECK: check,
    Command.DERIVE: derive,
    Command.VALIDATE: validate,
}

INEQ_TEST_PREFIX = "ineq:"


def _add_limits(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--limit-vertices",
        type=int,
        default=None,
        help="Cap on enumerated vertices (overrides CONTEXTCUT_LIMIT)",
    )
    parser.add_argument(
        "--oracle-columns",
        type=int,
        default=None,
        help="Cap on oracle LP columns (overrides CONTEXTCUT_ORACLE_COLUMNS)",
    )
    parser.add_argument("--out", default=None, help="Write JSON here instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="contextcut",
        description="Extended noncontextuality: catalog, checks and inequality derivations",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser(Command.GENERATE.value, help="Emit a catalog scenario, inequality or behavior")
    p.add_argument("selector", help="e.g. ncycle:5, bell:3, i3322, chained:4, pr-box:4")
    _add_limits(p)

    p = sub.add_parser(Command.CHECK.value, help="Run a contextuality test on a behavior")
    p.add_argument("--scenario", required=True, help="Scenario JSON or catalog selector")
    p.add_argument("--behavior", required=True, help="Behavior JSON or catalog selector")
    p.add_argument(
        "--test",
        default=None,
        help="ncycle, pm, oracle, ineq or ineq:<file>; default ncycle on cycles, oracle otherwise",
    )
    p.add_argument("--ineq", default=None, help="Inequality JSON or selector for --test ineq")
    _add_limits(p)

    p = sub.add_parser(Command.DERIVE.value, help="Apply one derivation step to an inequality")
    p.add_argument("--ineq", required=True, help="Inequality JSON or catalog selector")
    p.add_argument("--op", choices=[op.value for op in DeriveOperation], default=None)
    p.add_argument("--to-zo", action="store_true", help="Shorthand for --op convert --to zo")
    p.add_argument("--to-pm1", action="store_true", help="Shorthand for --op convert --to pm1")
    p.add_argument("--to", default=None, help="Target convention for --op convert")
    p.add_argument("--edges", default=None, help="te: comma separated edge keys u|v")
    p.add_argument("--extra-edges", default=None, help="te: additional edges at new vertices")
    p.add_argument("--multipliers", default=None, help='te: JSON {"u|v": [m1, m2, m3, m4]}')
    p.add_argument("--names", default=None, help='te: JSON {"u|v": "new vertex"}')
    p.add_argument("--vertex", default=None, help="split: vertex to split")
    p.add_argument("--S", dest="S", default=None, help="split: neighbors kept by s")
    p.add_argument("--T", dest="T", default=None, help="split: neighbors moved to t")
    p.add_argument("--B", dest="B", default=None, help="split: neighbors shared by s and t")
    p.add_argument("--s-name", default=None)
    p.add_argument("--t-name", default=None)
    p.add_argument("--edge", default=None, help="contract: edge key u|v")
    p.add_argument("--name", default=None, help="contract: merged vertex id")
    p.add_argument("--scenario", default=None, help="extend: scenario JSON or selector")
    p.add_argument("--verify", action="store_true", help="Check the result on every cut")
    _add_limits(p)

    p = sub.add_parser(Command.VALIDATE.value, help="Report scenario and behavior violations")
    p.add_argument("--scenario", required=True)
    p.add_argument("--behavior", default=None)
    _add_limits(p)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    limits = Limits.from_env(
        vertices=args.limit_vertices,
        soundness_vertices=args.limit_vertices,
        oracle_columns=args.oracle_columns,
    )
    data = dict(command=command, limits=limits, out=args.out)
    if command == Command.GENERATE:
        data["selector"] = args.selector
    elif command in (Command.CHECK, Command.VALIDATE):
        data["scenario"] = args.scenario
        data["behavior"] = args.behavior
    if command == Command.CHECK:
        test = args.test
        data["inequality"] = args.ineq
        if test and test.startswith(INEQ_TEST_PREFIX):
            data["inequality"] = test[len(INEQ_TEST_PREFIX) :]
            test = CheckTest.INEQ.value
        data["test"] = CheckTest(test) if test else None
    if command == Command.DERIVE:
        op, to = args.op, args.to
        if args.to_zo or args.to_pm1:
            op, to = DeriveOperation.CONVERT.value, "zo" if args.to_zo else "pm1"
        data.update(
            inequality=args.ineq,
            scenario=args.scenario,
            operation=DeriveOperation(op) if op else None,
            verify=args.verify,
            params={
                "to": to,
                "edges": args.edges,
                "extra_edges": args.extra_edges,
                "multipliers": args.multipliers,
                "names": args.names,
                "vertex": args.vertex,
                "S": args.S,
                "T": args.T,
                "B": args.B,
                "s_name": args.s_name,
                "t_name": args.t_name,
                "edge": args.edge,
                "name": args.name,
            },
        )
    return RunConfig(**data)


def _emit(data: dict, out: Optional[str]):
    text = canonical_json(data)
    if out:
        with open(out, "w") as f:
            f.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    run_id = new_run_id()
    child_logger = logger.child(command=args.command, run_id=run_id)
    out = getattr(args, "out", None)
    try:
        config = config_from_args(args)
        data, code = HANDLERS[config.command](config)
    except CertificateError as e:
        child_logger.error("Certificate verification failed")
        report = ErrorReport(errorType=type(e).__name__, errorMessage=str(e))
        _emit(report.model_dump(mode="json", exclude_none=True), out)
        return int(ExitCode.CERTIFICATE)
    except (ValueError, OSError) as e:
        # ContextcutError, pydantic ValidationError and JSON errors are all ValueErrors
        child_logger.warn("Invalid input", error=str(e), type=type(e).__name__)
        report = ErrorReport(errorType=type(e).__name__, errorMessage=str(e))
        _emit(report.model_dump(mode="json", exclude_none=True), out)
        return int(ExitCode.INVALID)
    except Exception:
        child_logger.error("Unexpected failure")
        raise
    _emit(data, config.out and str(config.out))
    return int(code)


if __name__ == "__main__":
    sys.exit(main())
