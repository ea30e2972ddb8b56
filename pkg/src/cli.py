# Copyright 2024 Canonical Ltd.
# See LICENSE file for licensing details.

"""Command line front end of the permutation 2-group toolkit.

Exit codes: 0 split (or every check passed), 3 non-split, 4 inconclusive, 2 any error.
Reports go to stdout, logs to stderr.
"""

import argparse
import logging
import pathlib
import sys
import time
import typing

from autos import exact_four_sequence
from checks import SUITES, run_suites
from cohomology import is_coboundary
from exceptions import BudgetExceededError, ToolkitError
from expressions import FAMILIES, parse_group
from groupoid import assemble_invariants, is_split_finite_type, parse_groupoid
from groups import FiniteGroup
from perm_two_group import is_permutationally_split, sym_invariants
from schemas import (
    AnalysisReport,
    CheckReport,
    ComponentModel,
    GroupFacts,
    InvariantsModel,
    TableReport,
    TableRow,
    VerdictModel,
)
from state import METHODS, Limits, State
from two_group import (
    TwoGroupPresentation,
    abelian,
    describe_group,
    describe_presentation,
    discrete,
    presentations_equivalent,
    product_presentation,
)
from types_ import SplitnessVerdict

logger = logging.getLogger(__name__)

EXIT_SPLIT = 0
EXIT_ERROR = 2
EXIT_NON_SPLIT = 3
EXIT_INCONCLUSIVE = 4
LOG_LEVELS = (logging.WARNING, logging.INFO, logging.DEBUG)

Report = typing.Union[AnalysisReport, TableReport, CheckReport]


def exit_code(split: typing.Optional[bool]) -> int:
    """Exit code of a splitness verdict.

    Args:
        split: the verdict.

    Returns:
        0, 3 or 4.
    """
    if split is None:
        return EXIT_INCONCLUSIVE
    return EXIT_SPLIT if split else EXIT_NON_SPLIT


def group_facts(group: FiniteGroup, limits: Limits) -> GroupFacts:
    """Orders of the exact 4-sequence of a group.

    Args:
        group: the group.
        limits: active limits.

    Returns:
        The facts.
    """
    return GroupFacts.from_report(exact_four_sequence(group, limits))


def summarize(presentation: TwoGroupPresentation, limits: Limits) -> InvariantsModel:
    """Summary of an invariant triple.

    Args:
        presentation: the 2-group.
        limits: active limits.

    Returns:
        The summary.
    """
    return InvariantsModel(
        pi0=describe_group(presentation.pi0),
        pi1=describe_group(presentation.pi1.coeff),
        pi0_order=presentation.pi0.order,
        pi1_order=presentation.pi1.coeff.order,
        trivial_action=presentation.pi1.is_trivial_action,
        class_trivial=is_coboundary(presentation.z, limits) is not None,
        description=describe_presentation(presentation, limits),
    )


def identify(presentation: TwoGroupPresentation, limits: Limits) -> typing.Optional[str]:
    """Confirm a split, trivially acting 2-group is equivalent to pi1[1] x pi0[0].

    Args:
        presentation: the 2-group.
        limits: active limits.

    Returns:
        The description of the product model, or None when it is not equivalent or too large
        for the equivalence search.
    """
    if not presentation.pi1.is_trivial_action:
        return None
    model = product_presentation(
        [abelian(presentation.pi1.coeff), discrete(presentation.pi0)], limits
    )
    try:
        found = presentations_equivalent(presentation, model, limits)
    except BudgetExceededError as exc:
        logger.warning("Equivalence not confirmed: %s", exc.msg)
        return None
    return describe_presentation(model, limits) if found is not None else None


def cmd_analyze(args: argparse.Namespace, state: State) -> typing.Tuple[AnalysisReport, int]:
    """Analyze Sym(G) for a group expression.

    Args:
        args: parsed arguments.
        state: the command state.

    Returns:
        The report and the exit code.
    """
    group = parse_group(args.expression, state.limits)
    presentation = sym_invariants(group, state.limits)
    verdict = is_permutationally_split(group, state.method, state.limits)
    report = AnalysisReport(
        command="analyze",
        input=args.expression,
        facts=group_facts(group, state.limits),
        invariants=summarize(presentation, state.limits),
        verdict=VerdictModel.from_verdict(verdict),
    )
    return report, exit_code(verdict.split)


def cmd_groupoid(args: argparse.Namespace, state: State) -> typing.Tuple[AnalysisReport, int]:
    """Analyze Sym of a finite type groupoid.

    Args:
        args: parsed arguments.
        state: the command state.

    Returns:
        The report and the exit code.
    """
    spec = parse_groupoid(args.spec, state.limits)
    presentation = assemble_invariants(spec, state.limits)
    result = is_split_finite_type(spec, state.method, state.limits, presentation)
    components = [
        ComponentModel(
            multiplicity=component.multiplicity,
            group=component.group,
            facts=group_facts(group, state.limits),
            verdict=VerdictModel.from_verdict(component.verdict),
        )
        for component, (_, group) in zip(result.components, spec.components)
    ]
    verdict = SplitnessVerdict(split=result.split, method=state.method, witness=None)
    report = AnalysisReport(
        command="groupoid",
        input=args.spec,
        invariants=summarize(presentation, state.limits),
        verdict=VerdictModel.from_verdict(verdict),
        components=components,
        truncation=spec.truncation,
        equivalent_to=identify(presentation, state.limits),
    )
    return report, exit_code(result.split)


def parse_range(text: str) -> typing.Tuple[int, int]:
    """Parse ``a..b`` (or a single integer).

    Args:
        text: the range.

    Returns:
        The inclusive bounds.

    Raises:
        argparse.ArgumentTypeError: on malformed ranges.
    """
    first, _, last = text.partition("..")
    try:
        low, high = int(first), int(last or first)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected a range a..b, got {text!r}") from exc
    if low > high:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return low, high


def cmd_table(args: argparse.Namespace, state: State) -> typing.Tuple[TableReport, int]:
    """Tabulate a group family.

    Args:
        args: parsed arguments.
        state: the command state.

    Returns:
        The report and exit code 0.
    """
    low, high = args.range
    rows = []
    for n in range(low, high + 1, args.step):
        group = FAMILIES[args.family](n, state.limits)
        verdict = is_permutationally_split(group, state.method, state.limits)
        rows.append(
            TableRow(
                n=n,
                facts=group_facts(group, state.limits),
                invariants=summarize(sym_invariants(group, state.limits), state.limits),
                verdict=VerdictModel.from_verdict(verdict),
            )
        )
    return TableReport(family=args.family, rows=rows), EXIT_SPLIT


def cmd_check(args: argparse.Namespace, state: State) -> typing.Tuple[CheckReport, int]:
    """Run the randomized property suites.

    Args:
        args: parsed arguments.
        state: the command state.

    Returns:
        The report and exit code 0 on success, 2 on failure.
    """
    trials = args.trials or state.limits.random_trials
    passed = run_suites(state.seed, trials, state.limits)
    failures = [
        f"{name}: {trials - count} of {trials} instances failed"
        for name, count in passed.items()
        if count != trials
    ]
    report = CheckReport(
        seed=state.seed, trials=trials, suites=passed, ok=not failures, failures=failures
    )
    return report, EXIT_SPLIT if report.ok else EXIT_ERROR


def _verdict_line(verdict: VerdictModel) -> str:
    """Render a verdict.

    Args:
        verdict: the verdict.

    Returns:
        One line of text.
    """
    word = {True: "split", False: "non-split", None: "inconclusive"}[verdict.split]
    line = f"verdict: {word} (method {verdict.method})"
    if verdict.witness and verdict.witness.get("kind") == "nonsplit-certificate":
        line += f", witness class {verdict.witness['outer_class']}"
    return line


def _facts_line(facts: GroupFacts) -> str:
    """Render group facts.

    Args:
        facts: the facts.

    Returns:
        One line of text.
    """
    return (
        f"|G|={facts.order} |Z|={facts.center} |Aut|={facts.aut} |Inn|={facts.inn} "
        f"|Out|={facts.out} exact={facts.exact}"
    )


def render(report: Report) -> str:
    """Human readable rendering of a report.

    Args:
        report: any report.

    Returns:
        The text.
    """
    lines = []
    if isinstance(report, AnalysisReport):
        lines.append(f"{report.command}: {report.input}")
        if report.facts:
            lines.append(_facts_line(report.facts))
        for component in report.components:
            lines.append(
                f"  {component.multiplicity}×{component.group}: "
                + _verdict_line(component.verdict)
            )
        invariants = report.invariants
        lines.append(
            f"pi0={invariants.pi0} pi1={invariants.pi1} "
            f"class={'trivial' if invariants.class_trivial else 'nontrivial'} "
            f"~ {invariants.description}"
        )
        if report.truncation is not None:
            lines.append(f"truncated at cardinality {report.truncation}")
        if report.equivalent_to:
            lines.append(f"equivalent to {report.equivalent_to}")
        lines.append(_verdict_line(report.verdict))
    elif isinstance(report, TableReport):
        lines.append(f"family {report.family}")
        for row in report.rows:
            lines.append(
                f"{row.n:>4}  {row.invariants.description:<24} {_verdict_line(row.verdict)}"
            )
    else:
        lines.append(f"seed {report.seed}, {report.trials} instances per suite")
        lines.extend(f"{name}: {count}/{report.trials}" for name, count in report.suites.items())
        lines.extend(report.failures)
    if report.timing is not None:
        lines.append(f"timing: {report.timing:.3f}s")
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser.

    Returns:
        The parser with every subcommand.
    """
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--method", choices=METHODS, default="coboundary")
    common.add_argument("--json", action="store_true", help="emit the JSON report")
    common.add_argument("--cap-order", type=int, default=None, help="override max_group_order")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--config", type=pathlib.Path, default=None)
    common.add_argument("-v", "--verbose", action="count", default=0)
    common.add_argument("--timing", action="store_true", help="include wall clock timings")

    parser = argparse.ArgumentParser(
        prog="perm2grp", description="Invariants and splitness of permutation 2-groups."
    )
    commands = parser.add_subparsers(dest="command", required=True)
    analyze = commands.add_parser("analyze", parents=[common], help="analyze Sym(G)")
    analyze.add_argument("expression", help="e.g. dihedral:8 or product(cyclic:2,symmetric:3)")
    analyze.set_defaults(handler=cmd_analyze)
    groupoid = commands.add_parser("groupoid", parents=[common], help="analyze a groupoid")
    groupoid.add_argument("spec", help="e.g. '2×dihedral:4, 1×symmetric:3' or JSON")
    groupoid.set_defaults(handler=cmd_groupoid)
    table = commands.add_parser("table", parents=[common], help="tabulate a group family")
    table.add_argument("family", choices=sorted(FAMILIES))
    table.add_argument("range", type=parse_range, help="a..b")
    table.add_argument("--step", type=int, default=1)
    table.set_defaults(handler=cmd_table)
    check = commands.add_parser(
        "check", parents=[common], help="randomized property suites: " + ", ".join(SUITES)
    )
    check.add_argument("--trials", type=int, default=None)
    check.set_defaults(handler=cmd_check)
    return parser


def configure_logging(verbosity: int) -> None:
    """Send logs to stderr at a level picked by the number of ``-v`` flags.

    Args:
        verbosity: number of ``-v`` flags.
    """
    logging.basicConfig(
        stream=sys.stderr,
        level=LOG_LEVELS[min(verbosity, len(LOG_LEVELS) - 1)],
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )


def main(argv: typing.Optional[typing.Sequence[str]] = None) -> int:
    """Run one command.

    Args:
        argv: arguments, sys.argv when omitted.

    Returns:
        The exit code.
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)
    if args.command == "table" and args.step < 1:
        parser.error("--step must be positive")
    start = time.perf_counter()
    try:
        state = State.from_config(
            args.config,
            overrides={"max_group_order": args.cap_order},
            method=args.method,
            seed=args.seed,
            timing=args.timing,
        )
        report, code = args.handler(args, state)
    except ToolkitError as exc:
        logger.error("%s failed: %s", args.command, exc.msg)
        print(f"error: {exc.msg}", file=sys.stderr)
        return exc.exit_code
    if state.timing:
        report.timing = round(time.perf_counter() - start, 6)
    print(report.dumps() if args.json else render(report))
    return code


if __name__ == "__main__":  # pragma: nocover
    sys.exit(main())
