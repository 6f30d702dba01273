"""
Command line interface.

    braid-deformations analyze --input <file|inline-json> --k <int> [--json]
    braid-deformations verify prop-char --n <int> [--allow-long]
    braid-deformations verify lemma --k-max <int>
    braid-deformations verify factorization --n <int> --k <int>
    braid-deformations verify localization --n <int> --k <int> [--exhaustive | --sample <int> --seed <int>]
    braid-deformations verify coning --n <int> --k <int>
    braid-deformations verify lifting-cases
    braid-deformations enumerate --n <int> [--filter a1a2|forbidden|eliminable]

Exit codes: 0 success, 1 violations or internal error, 2 invalid input,
3 resource limit exceeded.
"""

import argparse
import logging
from typing import Optional, get_args

from pydantic import ValidationError

from braid_deformations.digraph import enumerate_digraphs
from braid_deformations.errors import BraidDeformationError, InputError, ResourceLimitError
from braid_deformations.formats import format_digraph_text, load_digraph
from .base import VerificationSummary
from .config import HarnessConfig
from .harness import (
    DEFAULT_LOCALIZATION_SAMPLE,
    DigraphFilterLiteral,
    classify_lifting_cases,
    matches_filter,
    verify_coning_identity,
    verify_factorization,
    verify_lemma_vectors,
    verify_localization,
    verify_proposition_char,
)
from .report import analyze, format_report

LOGGER = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATIONS = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braid-deformations",
        description="Digraph-indexed deformations of the braid arrangement: analysis and verification harnesses.",
    )
    parser.add_argument("--workers", type=int, help="Worker processes (default: BRAID_WORKERS or all cores).")
    parser.add_argument("--progress", action="store_true", help="Show progress bars.")
    parser.add_argument(
        "--log-level", default="WARNING", choices=["DEBUG", "INFO", "WARNING", "ERROR"], type=str.upper
    )
    commands = parser.add_subparsers(dest="command", required=True)

    analyze_parser = commands.add_parser("analyze", help="Analyze a single digraph.")
    analyze_parser.add_argument("--input", required=True, help="Digraph file (text or JSON) or inline JSON.")
    analyze_parser.add_argument("--k", type=int, required=True)
    analyze_parser.add_argument("--json", action="store_true")

    verify_parser = commands.add_parser("verify", help="Run a verification harness.")
    checks = verify_parser.add_subparsers(dest="check", required=True)

    prop_char = checks.add_parser("prop-char")
    prop_char.add_argument("--n", type=int, required=True)
    prop_char.add_argument("--allow-long", action="store_true", help="Required for n=5.")

    lemma = checks.add_parser("lemma")
    lemma.add_argument("--k-max", type=int, required=True)

    for name in ("factorization", "coning"):
        check = checks.add_parser(name)
        check.add_argument("--n", type=int, required=True)
        check.add_argument("--k", type=int, required=True)

    localization = checks.add_parser("localization")
    localization.add_argument("--n", type=int, required=True)
    localization.add_argument("--k", type=int, required=True)
    localization.add_argument("--exhaustive", action="store_true")
    localization.add_argument("--sample", type=int, default=DEFAULT_LOCALIZATION_SAMPLE)
    localization.add_argument("--seed", type=int, default=0)

    checks.add_parser("lifting-cases")

    for check in checks.choices.values():
        check.add_argument("--json", action="store_true")

    enumerate_parser = commands.add_parser("enumerate", help="Print digraphs in the text format.")
    enumerate_parser.add_argument("--n", type=int, required=True)
    enumerate_parser.add_argument("--filter", choices=get_args(DigraphFilterLiteral))
    return parser


def _format_summary(summary: VerificationSummary) -> str:
    lines = []
    for name, value in summary.model_dump(mode="json", exclude={"violations"}).items():
        if isinstance(value, list):
            lines.append(f"{name}:")
            lines.extend(f"  {item}" for item in value)
        else:
            lines.append(f"{name}: {value}")
    violations = summary.violations
    lines.append(f"violations: {len(violations)}")
    for v in violations:
        where = "" if v.index is None else f" (index {v.index})"
        lines.append(f"  {v.detail}{where}")
        lines.extend(f"    {line}" for line in v.subject.splitlines())
    return "\n".join(lines)


def _run_verify(args: argparse.Namespace, config: HarnessConfig) -> VerificationSummary:
    if args.check == "prop-char":
        return verify_proposition_char(args.n, allow_long=args.allow_long, config=config)
    if args.check == "lemma":
        return verify_lemma_vectors(args.k_max)
    if args.check == "factorization":
        return verify_factorization(args.n, args.k, config=config)
    if args.check == "coning":
        return verify_coning_identity(args.n, args.k, config=config)
    if args.check == "localization":
        return verify_localization(
            args.n, args.k, exhaustive=args.exhaustive, sample=args.sample, seed=args.seed, config=config
        )
    return classify_lifting_cases()


def _dispatch(args: argparse.Namespace) -> int:
    if args.command == "analyze":
        report = analyze(load_digraph(args.input), args.k)
        print(report.model_dump_json(indent=2) if args.json else format_report(report))
        return EXIT_OK

    if args.command == "enumerate":
        for g in enumerate_digraphs(args.n):
            if args.filter is None or matches_filter(g, args.filter):
                print(format_digraph_text(g))
                print()
        return EXIT_OK

    config = HarnessConfig.from_env(workers=args.workers, progress=args.progress)
    summary = _run_verify(args, config)
    print(summary.model_dump_json(indent=2) if args.json else _format_summary(summary))
    return EXIT_OK if summary.ok else EXIT_VIOLATIONS


def main(argv: Optional[list[str]] = None) -> int:
    args = _build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level, format="%(name)s:%(levelname)s:%(message)s")
    try:
        return _dispatch(args)
    except (InputError, ValidationError) as e:
        LOGGER.error("Invalid input: %s", e)
        return EXIT_INPUT
    except ResourceLimitError as e:
        LOGGER.error("Resource limit: %s", e)
        return EXIT_RESOURCE
    except BraidDeformationError as e:
        LOGGER.error("%s: %s", type(e).__name__, e)
        return EXIT_VIOLATIONS


if __name__ == "__main__":
    raise SystemExit(main())
