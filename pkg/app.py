#!/usr/bin/env python3
"""
HNN Order Lab - Command Line Entry Point
🚀 Britton reduction, cone search and certificate checks from the shell

    python app.py run data/scenarios/free_rank2_hnn.scn
    python app.py verify --n 13
    python app.py fold --alphabet a,b --gens "a^2; a^3" --queries words.txt
    python app.py gamma canon 12 "s^11 x s"
    python app.py gamma cmp 12 "x" "s"
"""

import argparse
import logging
import os
import sys
import traceback
from typing import Any, Dict, List, Optional

# Import our custom modules
try:
    from components.report_view import render, render_claims_text, render_fold_text, render_scenario_text
    from utils.claims import verify_claims
    from utils.exceptions import HnnLabError, NotAMemberError
    from utils.file_handler import FileHandler
    from utils.gamma_group import gamma_compare, gamma_eval
    from utils.groups import GammaGroup
    from utils.scenario_runner import EXIT_INPUT_ERROR, EXIT_OK, EXIT_VERIFICATION_FAILED, REPORT_FORMAT, run_scenario
    from utils.settings import FORMATS, Settings, load_settings
    from utils.stallings import build_subgroup_graph
    from utils.words import Alphabet
except ImportError as e:
    print(f"❌ Import Error: {e}", file=sys.stderr)
    print("Please ensure all utils files are in place and requirements are installed.", file=sys.stderr)
    sys.exit(3)

logger = logging.getLogger(__name__)

COMPARISON_SYMBOLS = {-1: "<", 0: "=", 1: ">"}


def configure_logging(level: str):
    """Logs go to stderr so report bytes on stdout stay clean"""
    logging.basicConfig(
        level=getattr(logging, level.upper(), logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--depth", type=int, help="search depth (default from settings)")
    common.add_argument("--threads", type=int, help="worker threads for cone search")
    common.add_argument("--format", choices=FORMATS, help="report format")
    common.add_argument("--seed", type=int, help="seed for sampled checks")
    common.add_argument("--output", help="write the report to this file instead of stdout")
    common.add_argument("--env-file", help="settings file (default .env)")

    parser = argparse.ArgumentParser(prog="hnnlab", description="HNN Order Lab")
    commands = parser.add_subparsers(dest="command", required=True)

    run = commands.add_parser("run", parents=[common], help="execute a scenario file")
    run.add_argument("scenario")
    run.add_argument("--csv", help="also export the per-assignment table as CSV")

    verify = commands.add_parser("verify", parents=[common], help="run the full claim suite")
    verify.add_argument("--n", type=int, default=12, help="modulus for the Γₙ claims (>= 12)")
    verify.add_argument("--samples", type=int, default=10000, help="samples per randomized claim")

    fold = commands.add_parser("fold", parents=[common], help="subgroup graph of a free-group subgroup")
    fold.add_argument("--alphabet", default="a,b", help="comma separated generator names")
    fold.add_argument("--gens", required=True, help="subgroup generators separated by ';'")
    fold.add_argument("--queries", help="file with one word per line to test for membership")

    gamma = commands.add_parser("gamma", help="arithmetic in Γₙ")
    gamma_commands = gamma.add_subparsers(dest="gamma_command", required=True)
    canon = gamma_commands.add_parser("canon", parents=[common], help="canonical form of a word")
    canon.add_argument("n", type=int)
    canon.add_argument("word")
    cmp_parser = gamma_commands.add_parser("cmp", parents=[common], help="compare two words in the left order")
    cmp_parser.add_argument("n", type=int)
    cmp_parser.add_argument("w1")
    cmp_parser.add_argument("w2")
    return parser


def emit(payload: Dict[str, Any], text: str, settings: Settings, output: Optional[str]):
    content = render(payload, text, settings.format)
    if output:
        directory = os.path.dirname(output)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(output, "w", encoding="utf-8") as file:
            file.write(content)
        logger.info(f"✅ Report written to {output}")
    else:
        sys.stdout.write(content)


def command_run(args, settings: Settings) -> int:
    handler = FileHandler()
    report = run_scenario(args.scenario, depth=args.depth, threads=settings.threads,
                          default_depth=settings.depth, handler=handler)
    emit(report.to_dict(), render_scenario_text(report), settings, args.output)
    if args.csv and report.cone is not None:
        handler.export_assignments_csv(report.cone.to_frame(), args.csv)
    return report.exit_code


def command_verify(args, settings: Settings) -> int:
    if args.n < 12:
        raise HnnLabError(f"--n must be at least 12, got {args.n}")
    result = verify_claims(n=args.n, seed=settings.seed, depth=settings.depth,
                           threads=settings.threads, samples=args.samples)
    emit(result, render_claims_text(result), settings, args.output)
    return EXIT_OK if result["summary"]["failed"] == 0 else EXIT_VERIFICATION_FAILED


def _read_queries(path: str) -> List[str]:
    if not os.path.exists(path):
        raise HnnLabError(f"{path}: file not found")
    with open(path, "r", encoding="utf-8") as file:
        return [line.split("#", 1)[0].strip() for line in file if line.split("#", 1)[0].strip()]


def command_fold(args, settings: Settings) -> int:
    alphabet = Alphabet(tuple(name.strip() for name in args.alphabet.split(",") if name.strip()))
    generators = [alphabet.parse(part) for part in args.gens.split(";") if part.strip()]
    graph = build_subgroup_graph(generators)
    answers = []
    for text in _read_queries(args.queries) if args.queries else []:
        word = alphabet.parse(text)
        try:
            answers.append((text, True, str(graph.express(word))))
        except NotAMemberError:
            answers.append((text, False, ""))
    payload = {
        "format": REPORT_FORMAT,
        "generators": [str(g) for g in graph.generators],
        "rank": graph.rank(),
        "vertices": len(graph.vertices),
        "edges": len(graph.edges),
        "queries": [{"word": text, "member": member, "coords": coords or None}
                    for text, member, coords in answers],
    }
    emit(payload, render_fold_text(graph, answers), settings, args.output)
    return EXIT_OK


def command_gamma(args, settings: Settings) -> int:
    group = GammaGroup(args.n)
    if args.gamma_command == "canon":
        g = gamma_eval(args.n, args.word)
        payload = {"format": REPORT_FORMAT, "n": args.n, "word": args.word, "shift": g.shift,
                   "exps": list(g.exps), "canonical": group.format(g)}
        text = f"{g}\n{group.format(g)}\n"
    else:
        g, h = gamma_eval(args.n, args.w1), gamma_eval(args.n, args.w2)
        symbol = COMPARISON_SYMBOLS[gamma_compare(g, h)]
        payload = {"format": REPORT_FORMAT, "n": args.n, "w1": str(g), "w2": str(h), "comparison": symbol}
        text = f"{g} {symbol} {h}\n"
    emit(payload, text, settings, args.output)
    return EXIT_OK


COMMANDS = {"run": command_run, "verify": command_verify, "fold": command_fold, "gamma": command_gamma}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        settings = load_settings(args.env_file).override(
            depth=args.depth, threads=args.threads, format=args.format, seed=args.seed)
    except ValueError as e:
        print(f"❌ Invalid settings: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    configure_logging(settings.log_level)
    try:
        return COMMANDS[args.command](args, settings)
    except (HnnLabError, ValueError) as e:
        logger.error(f"❌ {e}")
        logger.debug(traceback.format_exc())
        return EXIT_INPUT_ERROR
    except OSError as e:
        logger.error(f"❌ {e}")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
