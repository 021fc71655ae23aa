from __future__ import annotations

import argparse
import logging
import sys
from collections.abc import Sequence
from dataclasses import replace
from pathlib import Path

from src.config import Settings
from src.load import build_dataset, save_image_set
from src.logger import configure_logging
from src.report import (
    TableFormat,
    emit_shade_plot,
    emit_table,
    load_dataset_spec,
    load_experiment,
    load_report,
    run_experiment,
)

logger = logging.getLogger(__name__)


def _positive_int(value: str) -> int:
    parsed = int(value)
    if parsed < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {parsed}")
    return parsed


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qir-classify",
        description="Train and evaluate quantum image classifiers on FRQI/MCQI encoded data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run an experiment config and write its CSV report")
    run.add_argument("config", type=Path, help="experiment config file")
    run.add_argument("--seed", type=int, help="override dataset and training seeds")
    run.add_argument("--out", type=Path, help="report path (default: the config's output)")
    run.add_argument("--parallel", type=_positive_int, help="sweep cells run concurrently (default: QIR_PARALLEL)")

    table = sub.add_parser("table", help="render a report as CSV or markdown")
    table.add_argument("report", type=Path)
    table.add_argument("--format", dest="fmt", choices=[f.value for f in TableFormat], default=TableFormat.MARKDOWN.value)
    table.add_argument("--out", type=Path, help="output file (default: stdout)")

    plot = sub.add_parser("plot", help="plot accuracy against shade as SVG")
    plot.add_argument("report", type=Path)
    plot.add_argument("--out", type=Path, help="SVG path (default: report path with .svg)")

    gen = sub.add_parser("gen-data", help="generate or sample a dataset into an .npz file")
    gen.add_argument("spec", type=Path, help="dataset spec file with a [dataset] section")
    gen.add_argument("--seed", type=int, help="override the spec seed")
    gen.add_argument("--out", type=Path, help="archive path (default: spec path with .npz)")
    return parser


def cmd_run(args: argparse.Namespace, settings: Settings) -> None:
    cfg = load_experiment(args.config)
    if args.seed is not None:
        cfg = cfg.with_seed(args.seed)
    report = run_experiment(cfg, settings, out=args.out, parallel=args.parallel)
    sys.stdout.write(emit_table(report, TableFormat.MARKDOWN))


def cmd_table(args: argparse.Namespace, settings: Settings) -> None:
    text = emit_table(load_report(args.report), args.fmt, args.out)
    if args.out is None:
        sys.stdout.write(text)


def cmd_plot(args: argparse.Namespace, settings: Settings) -> None:
    target = emit_shade_plot(load_report(args.report), args.out or args.report.with_suffix(".svg"))
    sys.stdout.write(f"{target}\n")


def cmd_gen_data(args: argparse.Namespace, settings: Settings) -> None:
    spec = load_dataset_spec(args.spec)
    if args.seed is not None:
        spec = replace(spec, seed=args.seed)
    dataset = build_dataset(spec, settings)
    target = save_image_set(dataset, args.out or args.spec.with_suffix(".npz"))
    logger.info("Dataset written", extra={"path": str(target), "kind": spec.kind.value, "samples": len(dataset)})
    sys.stdout.write(f"{target}\n")


COMMANDS = {
    "run": cmd_run,
    "table": cmd_table,
    "plot": cmd_plot,
    "gen-data": cmd_gen_data,
}


def main(argv: Sequence[str] | None = None) -> int:
    """
    Parse arguments, dispatch the subcommand and map failures to exit status 1.
    """
    args = build_parser().parse_args(argv)
    try:
        settings = Settings.from_env()
        COMMANDS[args.command](args, settings)
    except KeyboardInterrupt:
        logger.info("Interrupted")
        return 1
    except Exception as exc:
        logger.exception("Command failed", extra={"command": args.command, "error": str(exc)})
        return 1
    return 0


def run() -> None:
    configure_logging()
    sys.exit(main())


if __name__ == "__main__":
    run()
