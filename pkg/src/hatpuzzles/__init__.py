"""Hat-guessing strategies, exhaustive verification, epistemic puzzles and strategy search."""

from .core import (
    ColorGuess,
    DistinctColors,
    DontKnow,
    Know,
    LimitedSupply,
    Palette,
    PuzzleError,
    RepeatedColors,
    Transcript,
    Visibility,
    enumerate_assignments,
    visible_hats,
)
from .strategies import STRATEGIES, Strategy, get_strategy
from .verifier import run_transcript, verify_exhaustive, verify_sampled

__all__ = [
    "ColorGuess", "DistinctColors", "DontKnow", "Know", "LimitedSupply", "Palette",
    "PuzzleError", "RepeatedColors", "STRATEGIES", "Strategy", "Transcript", "Visibility",
    "enumerate_assignments", "get_strategy", "run_transcript", "verify_exhaustive",
    "verify_sampled", "visible_hats",
]
