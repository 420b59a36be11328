import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from ..config import config
from ..errors import ComputationError, InputError
from ..projection import SCHEMES
from ..utils import configure_logging
from .commands import cmd_analyze, cmd_ego, cmd_synth, cmd_threshold
from .run_config import RunConfig
from .synth import SynthParams

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_COMPUTATION = 2


def _schemes(value: str) -> tuple[str, ...]:
    return tuple(part.strip() for part in value.split(",") if part.strip())


def _add_input(parser: argparse.ArgumentParser, required: bool = True):
    parser.add_argument("--input", type=Path, required=required, metavar="FILE", help="Corpus file")
    parser.add_argument(
        "--format",
        choices=["long-csv", "jsonl", "json-lines"],
        default="long-csv",
        help="Corpus format (default: %(default)s)",
    )


def _add_threshold(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--coverage",
        type=float,
        default=config.coverage,
        help="Share of papers the cumulative cutoff must cover (default: %(default)s)",
    )
    parser.add_argument(
        "--cutoff",
        type=float,
        default=None,
        help="Use this cutoff instead of detecting one; 'inf' keeps every paper",
    )


def _add_metrics(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--schemes",
        type=_schemes,
        default=SCHEMES,
        help=f"Comma-separated weighting schemes (default: {','.join(SCHEMES)})",
    )
    parser.add_argument(
        "--betweenness-sample",
        type=int,
        default=config.betweenness_sample_size,
        help="Pivot sources for betweenness (default: %(default)s)",
    )
    parser.add_argument("--seed", type=int, default=None, help="Master seed")
    parser.add_argument(
        "--jobs", type=int, default=config.n_jobs, help="Worker threads (default: %(default)s)"
    )


def get_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperauthorship",
        description="Measure how hyperauthored papers change a co-authorship network.",
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v info, -vv debug")
    commands = parser.add_subparsers(dest="command", required=True)

    synth = commands.add_parser("synth", help="Generate a synthetic corpus")
    synth.add_argument("--out", type=Path, required=True, metavar="FILE", help="Corpus file to write")
    synth.add_argument("--format", choices=["long-csv", "jsonl", "json-lines"], default="long-csv")
    defaults = SynthParams()
    synth.add_argument("--papers", type=int, default=defaults.n_papers)
    synth.add_argument("--authors", type=int, default=defaults.n_authors)
    synth.add_argument("--mu", type=float, default=defaults.mu)
    synth.add_argument("--sigma", type=float, default=defaults.sigma)
    synth.add_argument("--hyper-rate", type=float, default=defaults.hyper_rate)
    synth.add_argument("--hyper-min", type=int, default=defaults.hyper_min)
    synth.add_argument("--hyper-max", type=int, default=defaults.hyper_max)
    synth.add_argument("--novelty", type=float, default=defaults.novelty)
    synth.add_argument(
        "--collaboration", type=int, default=None, help="Authors sharing the hyperauthored papers"
    )
    synth.add_argument("--seed", type=int, default=defaults.seed)

    threshold = commands.add_parser("threshold", help="Detect the hyperauthorship cutoff")
    _add_input(threshold)
    _add_threshold(threshold)
    threshold.add_argument("--out", type=Path, required=True, metavar="DIR")

    analyze = commands.add_parser("analyze", help="Compare the networks without and with hyperauthored papers")
    _add_input(analyze)
    _add_threshold(analyze)
    _add_metrics(analyze)
    analyze.add_argument("--omega-niter", type=int, default=config.omega_niter)
    analyze.add_argument("--omega-nrand", type=int, default=config.omega_nrand)
    analyze.add_argument(
        "--omega-max-nodes",
        type=int,
        default=config.omega_max_nodes,
        help="Skip omega above this giant component size (default: %(default)s)",
    )
    analyze.add_argument("--out", type=Path, required=True, metavar="DIR")

    ego = commands.add_parser("ego", help="Egonetwork case studies on analyzed networks")
    _add_input(ego)
    _add_metrics(ego)
    ego.add_argument("--cutoff", type=float, default=None, help="Cutoff used by `analyze`, if overridden")
    ego.add_argument("--ego", action="append", default=[], metavar="AUTHOR", help="Author id (repeatable)")
    ego.add_argument("--auto-grid", action="store_true", help="Pick one author per case-study quadrant")
    ego.add_argument(
        "--quantile",
        type=float,
        default=config.case_study_quantile,
        help="Rank quantile that counts as high centrality (default: %(default)s)",
    )
    ego.add_argument("--out", type=Path, required=True, metavar="DIR", help="Directory `analyze` wrote to")

    return parser


def _run_config(args: argparse.Namespace) -> RunConfig:
    fields = {
        name: getattr(args, name)
        for name in (
            "input",
            "out",
            "format",
            "coverage",
            "cutoff",
            "schemes",
            "betweenness_sample",
            "omega_niter",
            "omega_nrand",
            "omega_max_nodes",
            "seed",
            "jobs",
            "quantile",
            "auto_grid",
        )
        if hasattr(args, name)
    }
    if hasattr(args, "ego"):
        fields["egos"] = tuple(args.ego)
    return RunConfig(**fields)


def _origin(error: BaseException) -> str:
    """Module of the innermost frame the error passed through."""
    traceback = error.__traceback__
    if traceback is None:
        return "hyperauthorship"
    while traceback.tb_next is not None:
        traceback = traceback.tb_next
    return traceback.tb_frame.f_globals.get("__name__", "hyperauthorship")


def run(args: argparse.Namespace) -> int:
    if args.command == "synth":
        params = SynthParams(
            n_papers=args.papers,
            n_authors=args.authors,
            mu=args.mu,
            sigma=args.sigma,
            hyper_rate=args.hyper_rate,
            hyper_min=args.hyper_min,
            hyper_max=args.hyper_max,
            novelty=args.novelty,
            collaboration=args.collaboration,
            seed=args.seed,
        )
        cmd_synth(params, args.out, args.format)
        return EXIT_OK

    run_config = _run_config(args)
    if args.command == "threshold":
        cmd_threshold(run_config)
    elif args.command == "analyze":
        cmd_analyze(run_config)
    elif args.command == "ego":
        cmd_ego(run_config)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    args = get_parser().parse_args(argv)
    configure_logging(args.verbose)
    try:
        return run(args)
    except (InputError, OSError) as error:
        print(f"error [{_origin(error)}]: {error}", file=sys.stderr)
        return EXIT_INPUT
    except (ComputationError, ValueError) as error:
        print(f"error [{_origin(error)}]: {error}", file=sys.stderr)
        return EXIT_COMPUTATION


if __name__ == "__main__":
    sys.exit(main())
