from .run_config import RunConfig
from .synth import SynthParams, generate_corpus
from .commands import CutoffDecision, cmd_synth, cmd_threshold, cmd_analyze, cmd_ego
from .main import main, get_parser

__all__ = [
    "RunConfig",
    "SynthParams",
    "generate_corpus",
    "CutoffDecision",
    "cmd_synth",
    "cmd_threshold",
    "cmd_analyze",
    "cmd_ego",
    "main",
    "get_parser",
]
