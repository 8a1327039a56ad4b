# -------------------------------------------------------------------------
# Copyright (c) twoofn-orders contributors. All rights reserved.
# Licensed under the MIT License. See License.txt in the project root for
# license information.
# --------------------------------------------------------------------------
"""Command line entry point: evaluate second-largest lifetimes, check ordering theorems on
fixtures and scenario files, and run randomized property suites.
"""

import argparse
import logging
import sys
import numpy as np
from twoofn import constant, orderstats, scenario as scenario_module
from twoofn.common import evaluation_thread
from twoofn.common.errors import (
    OrderingError,
    ScenarioError,
    DegenerateDenominator,
    EXIT_OK,
    EXIT_INCONSISTENT,
    exit_code_from_error,
)
from twoofn.models.grid import GridSpec
from twoofn.models.reports import ST, RH
from twoofn.theorems import fixtures, policies, registry, suite

logger = logging.getLogger(__name__)


def _configure_logging(verbosity):
    level = logging.WARNING
    if verbosity == 1:
        level = logging.INFO
    elif verbosity > 1:
        level = logging.DEBUG
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


def _grid_arg(text):
    try:
        return GridSpec.parse(text)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _load(args):
    """Return the Scenario selected by --fixture or --scenario, with overrides applied"""
    if args.fixture:
        scenario = scenario_module.scenario_from_fixture(args.fixture)
    elif args.scenario:
        scenario = scenario_module.load_scenario(args.scenario)
    else:
        raise ScenarioError("Invalid arguments - one of --fixture or --scenario is required")
    if getattr(args, "baseline", None):
        scenario = scenario.with_baseline(scenario_module.parse_baseline_spec(args.baseline))
    if getattr(args, "grid", None):
        scenario = scenario.replace(grid=args.grid)
    if getattr(args, "theorem", None):
        scenario = scenario.replace(theorem=args.theorem, order=None)
    if getattr(args, "order", None):
        scenario = scenario.replace(order=args.order)
    return scenario


def _write(path, lines):
    with open(path, "w") as fh:
        for line in lines:
            fh.write(line + "\n")
    logger.info("Wrote {}".format(path))


def _rh_or_none(cfg, x):
    try:
        return orderstats.rh_second_largest(cfg, x)
    except DegenerateDenominator:
        return None


def cmd_eval(args, out):
    scenario = _load(args)
    if args.at is not None:
        x = args.at
        values = [
            ("F_X", orderstats.cdf_second_largest(scenario.cfgX, x)),
            ("F_Y", orderstats.cdf_second_largest(scenario.cfgY, x)),
            ("rh_X", _rh_or_none(scenario.cfgX, x)),
            ("rh_Y", _rh_or_none(scenario.cfgY, x)),
        ]
        out.write("x={!r}\n".format(float(x)))
        for name, value in values:
            out.write("{}={}\n".format(name, "undefined" if value is None else repr(value)))
        return EXIT_OK

    csv_path = args.csv or scenario.outputs.get(scenario_module.CSV)
    if csv_path:
        written = orderstats.write_order_csv(
            csv_path, scenario.cfgX, scenario.cfgY, scenario.order, scenario.grid
        )
        out.write(
            "wrote {} rows on {:g}:{:g} to {}\n".format(
                written.points, written.lo, written.hi, csv_path
            )
        )
        return EXIT_OK

    xs, values_x, values_y, diff = orderstats.order_table(
        scenario.cfgX, scenario.cfgY, scenario.order, scenario.grid
    )
    out.write(",".join(orderstats.csv_headers[scenario.order]) + "\n")
    for row in zip(xs, values_x, values_y, diff):
        out.write(",".join(repr(float(value)) for value in row) + "\n")
    return EXIT_OK


def _full_report(verdict):
    lines = [verdict.to_record()]
    for result in verdict.hypothesis_results:
        lines.append(
            "  {}: {} ({})".format(result.name, "pass" if result.passed else "fail", result.detail)
        )
    report = verdict.conclusion_report
    lines.append("  conclusion: {!r} violation_x={}".format(report, report.violation_x))
    if verdict.companion_report is not None:
        lines.append("  companion: {!r}".format(verdict.companion_report))
    return lines


def _run_suite(theorem, trials, seed, variant, grid, report_path, out):
    policy = policies.policy_for(theorem, variant)
    result = suite.property_suite(theorem, policy, trials, seed, grid)
    out.write(
        "{}: {}/{} consistent ({} inconclusive, {} rejected)\n".format(
            result.theorem,
            result.consistent_count,
            result.trials,
            result.inconclusive_count,
            result.rejected,
        )
    )
    for index, verdict, dump in result.inconsistencies:
        out.write("INCONSISTENT trial {}: {} {}\n".format(index, verdict.to_record(), dump))
    if report_path:
        _write(report_path, [result.to_record()] + [v.to_record() for v in result.verdicts])
    return EXIT_OK if result.consistent else EXIT_INCONSISTENT


def cmd_check(args, out):
    if args.suite:
        if not args.theorem:
            raise ScenarioError("Invalid arguments - --suite needs --theorem")
        return _run_suite(
            args.theorem, args.suite, args.seed, args.policy, args.grid, args.report, out
        )
    scenario = _load(args)
    if scenario.theorem is None:
        raise ScenarioError("Invalid Scenario - no theorem to check", field="theorem")
    verdict = registry.run_theorem(scenario.theorem, scenario.cfgX, scenario.cfgY, scenario.grid)
    out.write(verdict.summary() + "\n")
    report_path = args.report or scenario.outputs.get(scenario_module.REPORT)
    if report_path:
        _write(report_path, _full_report(verdict))
    csv_path = args.csv or scenario.outputs.get(scenario_module.CSV)
    if csv_path:
        spec = registry.resolve(scenario.theorem)
        orderstats.write_order_csv(
            csv_path, scenario.cfgX, scenario.cfgY, spec.order, scenario.grid
        )
    return EXIT_OK if verdict.consistent else EXIT_INCONSISTENT


def cmd_suite(args, out):
    return _run_suite(
        args.theorem, args.trials, args.seed, args.policy, args.grid, args.report, out
    )


def cmd_fixtures(args, out):
    for name in fixtures.fixture_names():
        fixture = fixtures.get_fixture(name)
        out.write(
            "{:<10} {:<7} {} {:<5} {}\n".format(
                name, fixture.theorem, fixture.order, fixture.direction, fixture.description
            )
        )
    return EXIT_OK


def cmd_version(args, out):
    out.write("twoofn {} (numpy {})\n".format(constant.VERSION, np.__version__))
    return EXIT_OK


def _add_source(parser):
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--fixture", choices=fixtures.fixture_names(), help="Compiled-in fixture")
    source.add_argument("--scenario", help="Path of a scenario file")
    parser.add_argument(
        "--baseline", help='Baseline replacing the scenario\'s, e.g. "family=Loglog"'
    )
    parser.add_argument("--grid", type=_grid_arg, help="Evaluation grid lo:hi[:points]")


def build_parser():
    parser = argparse.ArgumentParser(
        "twoofn", description="Stochastic comparisons of 2-out-of-n system lifetimes"
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for progress, -vv for detail"
    )
    subparsers = parser.add_subparsers(dest="command")

    eval_parser = subparsers.add_parser("eval", help="Evaluate F and rh of both systems")
    _add_source(eval_parser)
    eval_parser.add_argument("--at", type=float, help="Single evaluation point")
    eval_parser.add_argument("--csv", help="Write the table to this CSV file")
    eval_parser.add_argument("--order", choices=[ST, RH], help="Quantity to tabulate")
    eval_parser.set_defaults(func=cmd_eval)

    check_parser = subparsers.add_parser("check", help="Check a theorem on two configurations")
    _add_source(check_parser)
    check_parser.add_argument("--theorem", help="Theorem id, e.g. T3_1")
    check_parser.add_argument("--csv", help="Write the conclusion data to this CSV file")
    check_parser.add_argument("--report", help="Write the full verdict to this file")
    check_parser.add_argument("--suite", type=int, help="Run a property suite of N trials")
    check_parser.add_argument("--seed", type=int, default=0, help="Suite seed (default 0)")
    check_parser.add_argument("--policy", default=policies.DEFAULT, help="Suite policy variant")
    check_parser.set_defaults(func=cmd_check)

    suite_parser = subparsers.add_parser("suite", help="Run a randomized property suite")
    suite_parser.add_argument("--theorem", required=True, help="Theorem id, e.g. T3_4")
    suite_parser.add_argument("--trials", type=int, default=100, help="Number of trials")
    suite_parser.add_argument("--seed", type=int, default=0, help="Seed (default 0)")
    suite_parser.add_argument("--policy", default=policies.DEFAULT, help="Policy variant")
    suite_parser.add_argument("--grid", type=_grid_arg, help="Fixed grid lo:hi[:points]")
    suite_parser.add_argument("--report", help="Write one record per trial to this file")
    suite_parser.set_defaults(func=cmd_suite)

    fixtures_parser = subparsers.add_parser("fixtures", help="List the compiled-in fixtures")
    fixtures_parser.set_defaults(func=cmd_fixtures)

    version_parser = subparsers.add_parser("version", help="Print the version")
    version_parser.set_defaults(func=cmd_version)
    return parser


def main(argv=None, out=None):
    """Run the command line and return its exit status"""
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    _configure_logging(args.verbose)
    if not getattr(args, "func", None):
        parser.print_usage(sys.stderr)
        return exit_code_from_error(ScenarioError("no command given"))
    try:
        return args.func(args, out)
    except (OrderingError, ValueError) as e:
        logger.debug("Command {} failed".format(args.command), exc_info=True)
        sys.stderr.write("error: {}\n".format(e))
        return exit_code_from_error(e)
    finally:
        evaluation_thread.shutdown_executors()


if __name__ == "__main__":
    sys.exit(main())
