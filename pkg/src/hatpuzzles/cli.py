"""Command-line front end: verify, synth, epistemic and joke.

Exit codes: 0 when the guarantee holds or a result was produced, 1 when a
guarantee fails, no strategy exists or a transcript is inconsistent, 2 on
invalid input.

Positions are 0-based from the front of the line; speakers are numbered
from 1 in the order they talk, so output reads "speaker 1 (position 4)".
In the epistemic puzzles logician k is position k - 1 and speaks k-th by
default.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Optional, Sequence

from .core import (
    DEFAULT_CAP,
    DEFAULT_COLOR_NAMES,
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
)
from .epistemic import InconsistentHistory, deduce, simulate
from .strategies import STRATEGIES, get_strategy
from .synth import min_guaranteed_mistakes
from .verifier import run_transcript, verify_exhaustive, verify_sampled

NUMBER_WORDS = (
    "zero", "one", "two", "three", "four", "five", "six", "seven", "eight",
    "nine", "ten", "eleven", "twelve",
)
ORDINALS = (
    "zeroth", "first", "second", "third", "fourth", "fifth", "sixth", "seventh",
    "eighth", "ninth", "tenth", "eleventh", "twelfth",
)
KNOW_QUESTION = "Do you know the color of your own hat?"
GUESS_QUESTION = "What is the color of your hat?"


@dataclass
class RunConfig:
    subcommand: str
    puzzle: Optional[str] = None
    n: Optional[int] = None
    colors: int = 2
    supply: Optional[str] = None
    visibility: str = "complete"
    strategy: Optional[str] = None
    assignment: Optional[str] = None
    transcript: Optional[str] = None
    query: Optional[int] = None
    order: Optional[str] = None
    max_mistakes: Optional[int] = None
    expect: Optional[int] = None
    samples: Optional[int] = None
    seed: int = 0
    cap: int = DEFAULT_CAP
    workers: int = 1
    names: Optional[str] = None
    question: Optional[str] = None
    source: Optional[str] = None
    format: str = "text"
    out: Optional[str] = None

    @classmethod
    def from_args(cls, ns: argparse.Namespace) -> RunConfig:
        known = {k: v for k, v in vars(ns).items() if k in cls.__dataclass_fields__}
        if getattr(ns, "from_file", None):
            known["source"] = ns.from_file
        return cls(**known)


# -- joke rendering --------------------------------------------------------

def _count_word(n: int) -> str:
    return NUMBER_WORDS[n] if n < len(NUMBER_WORDS) else str(n)


def _ordinal(k: int) -> str:
    if k < len(ORDINALS):
        return ORDINALS[k]
    suffix = "th" if 10 <= k % 100 <= 20 else {1: "st", 2: "nd", 3: "rd"}.get(k % 10, "th")
    return f"{k}{suffix}"


def render_joke(
    transcript: Transcript, palette: Palette, question: Optional[str] = None
) -> str:
    """The transcript told as a bar joke, one answer per line."""
    if question is None:
        guessing = any(isinstance(e.announcement, ColorGuess) for e in transcript)
        question = GUESS_QUESTION if guessing else KNOW_QUESTION
    n = len(transcript)
    who = "logician walks" if n == 1 else "logicians walk"
    lines = [f'{_count_word(n).capitalize()} {who} into a bar. The waitress asks, "{question}"']
    for k, entry in enumerate(transcript, start=1):
        a = entry.announcement
        if isinstance(a, DontKnow):
            answer = "I do not know."
        elif isinstance(a, Know):
            answer = "Yes."
        else:
            answer = f"{palette.display(a.color)}."
        lines.append(f'The {_ordinal(k)} logician answers, "{answer}"')
    return "\n".join(lines) + "\n"


# -- input parsing ---------------------------------------------------------

def _palette(size: int, names: Optional[str]) -> Palette:
    if names:
        return Palette(size, tuple(x.strip() for x in names.split(",")))
    return Palette(size)


def _line_puzzle(cfg: RunConfig):
    if cfg.n is None:
        raise PuzzleError("--n is required")
    if cfg.puzzle == "repeated":
        return RepeatedColors(cfg.n, cfg.colors)
    if cfg.puzzle == "distinct":
        return DistinctColors(cfg.n)
    raise PuzzleError("--puzzle must be repeated or distinct")


def parse_supply(text: str) -> tuple[tuple[int, ...], tuple[str, ...]]:
    """``"R:3,B:2"`` -> counts (3, 2) and names ("red", "blue")."""
    counts, names = [], []
    for item in text.split(","):
        label, sep, num = item.partition(":")
        label = label.strip()
        if not sep or not label or not num.strip().isdigit():
            raise PuzzleError(f"bad supply item {item!r}; expected NAME:COUNT")
        name = label.lower()
        if name not in DEFAULT_COLOR_NAMES:
            name = next((c for c in DEFAULT_COLOR_NAMES if c[0] == name), name)
        if name in names:
            raise PuzzleError(f"color {label!r} listed twice in supply")
        names.append(name)
        counts.append(int(num))
    return tuple(counts), tuple(names)


def _supply_puzzle(cfg: RunConfig):
    if not cfg.supply or cfg.n is None:
        raise PuzzleError("--supply and --logicians are required")
    counts, names = parse_supply(cfg.supply)
    spec = LimitedSupply(cfg.n, counts, Visibility(cfg.visibility))
    palette = _palette(len(counts), cfg.names) if cfg.names else Palette(len(counts), names)
    return spec, palette


def _order(cfg: RunConfig, n: int) -> Optional[tuple[int, ...]]:
    if not cfg.order:
        return None
    try:
        order = tuple(int(x) - 1 for x in cfg.order.split(","))
    except ValueError:
        raise PuzzleError(f"--order must be comma-separated logician numbers, got {cfg.order!r}") from None
    if sorted(order) != list(range(n)):
        raise PuzzleError(f"--order must list logicians 1..{n} once each")
    return order


def parse_statuses(text: str) -> list[bool]:
    out = []
    for tok in text.split(","):
        tok = tok.strip().lower()
        if tok in ("idk", "dontknow", "no"):
            out.append(False)
        elif tok in ("know", "yes"):
            out.append(True)
        else:
            raise PuzzleError(f"bad transcript token {tok!r}; use idk or know")
    return out


def _speaker_label(k: int, pos: int) -> str:
    return f"speaker {k} (position {pos})"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands -----------------------------------------------------------

def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    spec = _line_puzzle(cfg)
    strategy = get_strategy(cfg.strategy, spec)
    palette = _palette(spec.palette_size, cfg.names)
    bound = strategy.guarantee if cfg.expect is None else cfg.expect

    if cfg.assignment:
        hats = palette.parse_assignment(cfg.assignment)
        result = run_transcript(spec, strategy, hats)
        ok = len(result.mistakes) <= bound and result.violations == 0
        if cfg.format == "json":
            return (0 if ok else 1), _dump({
                "puzzle": spec.describe(),
                "strategyId": strategy.id,
                "assignment": palette.format_assignment(hats),
                "mistakes": sorted(result.mistakes),
                "violations": result.violations,
                "transcript": result.transcript.to_json(palette),
            })
        lines = [f"assignment {palette.format_assignment(hats)} (front to back)"]
        lines += _transcript_lines(result.transcript, palette, hats)
        lines.append(f"mistakes {len(result.mistakes)}, violations {result.violations}")
        return (0 if ok else 1), "\n".join(lines) + "\n"

    if cfg.samples is not None:
        report = verify_sampled(spec, strategy, cfg.samples, cfg.seed)
    else:
        report = verify_exhaustive(spec, strategy, cap=cfg.cap, workers=cfg.workers)
    ok = report.worst_case_mistakes <= bound and report.violations_total == 0
    cx = report.counterexample
    cx_transcript = run_transcript(spec, strategy, cx).transcript if cx else None

    if cfg.format == "json":
        obj = report.to_json(palette)
        obj["transcript"] = cx_transcript.to_json(palette) if cx_transcript else None
        return (0 if ok else 1), _dump(obj)

    guaranteed = sorted(report.guaranteed_correct_positions)
    lines = [
        f"puzzle          {spec.describe()['variant']} n={spec.n} colors={spec.palette_size}",
        f"strategy        {strategy.id}",
        f"mode            {report.mode}"
        + (f" (seed {report.seed}, {report.samples} samples)" if report.mode == "sampled" else ""),
        f"assignments     {report.assignments_checked}",
        f"worst case      {report.worst_case_mistakes} wrong",
        f"always correct  positions {','.join(map(str, guaranteed)) or 'none'}",
        f"violations      {report.violations_total}",
        f"guarantee       <= {bound} wrong: {'holds' if ok else 'VIOLATED'}",
        f"elapsed         {report.elapsed_ms} ms",
    ]
    if cx:
        lines.append(f"counterexample  {palette.format_assignment(cx)} (front to back)")
        lines += _transcript_lines(cx_transcript, palette, cx)
    return (0 if ok else 1), "\n".join(lines) + "\n"


def _transcript_lines(transcript, palette, hats=None):
    out = []
    for k, e in enumerate(transcript, start=1):
        a = e.announcement
        if isinstance(a, DontKnow):
            said = "I do not know"
        elif isinstance(a, Know):
            said = f"I know ({palette.display(a.color)})"
        else:
            said = palette.display(a.color)
        mark = ""
        if hats is not None and isinstance(a, ColorGuess):
            mark = "  ok" if a.color == hats[e.speaker] else "  WRONG"
        out.append(f"  {_speaker_label(k, e.speaker)}: {said}{mark}")
    return out


def cmd_synth(cfg: RunConfig) -> tuple[int, str]:
    spec = _line_puzzle(cfg)
    palette = _palette(spec.palette_size, cfg.names)
    result = min_guaranteed_mistakes(spec, max_k=cfg.max_mistakes)
    if result is None:
        msg = f"no strategy keeps every assignment within {cfg.max_mistakes} wrong"
        if cfg.format == "json":
            return 1, _dump({"puzzle": spec.describe(), "maxMistakes": cfg.max_mistakes,
                             "minGuaranteedMistakes": None, "witness": None})
        return 1, msg + "\n"
    if cfg.format == "json":
        return 0, _dump(result.to_json())
    syms = palette.symbols
    lines = [
        f"puzzle                   {spec.describe()['variant']} n={spec.n} colors={spec.palette_size}",
        f"min guaranteed mistakes  {result.min_guaranteed_mistakes}",
        f"nodes explored           {result.nodes_explored}",
        f"witness ({len(result.witness)} rows)",
        f"  {'position':>8}  {'seen':<16} {'heard':<16} announce",
    ]
    for (pos, seen, heard), color in result.witness.entries:
        lines.append(
            f"  {pos:>8}  {','.join(syms[c] for c in seen) or '-':<16} "
            f"{','.join(syms[c] for c in heard) or '-':<16} {palette.display(color)}"
        )
    return 0, "\n".join(lines) + "\n"


def cmd_epistemic(cfg: RunConfig) -> tuple[int, str]:
    spec, palette = _supply_puzzle(cfg)
    order = _order(cfg, spec.n)
    if cfg.assignment:
        hats = palette.parse_assignment(cfg.assignment)
        transcript = simulate(spec, hats, order)
        if cfg.format == "json":
            return 0, _dump({
                "puzzle": spec.describe(),
                "assignment": palette.format_assignment(hats),
                "transcript": transcript.to_json(palette),
            })
        lines = [f"assignment {palette.format_assignment(hats)}"]
        for e in transcript:
            a = e.announcement
            said = f"I know: {palette.display(a.color)}" if isinstance(a, Know) else "I do not know"
            lines.append(f"  logician {e.speaker + 1}: {said}")
        return 0, "\n".join(lines) + "\n"

    if cfg.transcript is None or cfg.query is None:
        raise PuzzleError("epistemic needs --assignment, or --transcript with --query")
    statuses = parse_statuses(cfg.transcript)
    if not 1 <= cfg.query <= spec.n:
        raise PuzzleError(f"--query must be between 1 and {spec.n}")
    try:
        colors = sorted(deduce(spec, statuses, order, cfg.query - 1))
    except InconsistentHistory as exc:
        if cfg.format == "json":
            return 1, _dump({"puzzle": spec.describe(), "query": cfg.query,
                             "colors": None, "error": str(exc)})
        return 1, f"inconsistent transcript: {exc}\n"
    names = [palette.display(c) for c in colors]
    if cfg.format == "json":
        return 0, _dump({
            "puzzle": spec.describe(),
            "transcript": ["know" if s else "idk" for s in statuses],
            "query": cfg.query,
            "colors": names,
        })
    return 0, ", ".join(names) + "\n"


def _load_transcript(path: str) -> tuple[Transcript, Palette]:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise PuzzleError(f"cannot read transcript file {path}: {exc}") from exc
    if isinstance(obj, dict) and isinstance(obj.get("transcript"), dict):
        obj = obj["transcript"]
    if not isinstance(obj, dict):
        raise PuzzleError(f"{path} holds no transcript object")
    return Transcript.from_json(obj)


def cmd_joke(cfg: RunConfig) -> tuple[int, str]:
    if cfg.source:
        transcript, palette = _load_transcript(cfg.source)
    elif cfg.supply:
        spec, palette = _supply_puzzle(cfg)
        if not cfg.assignment:
            raise PuzzleError("joke needs --assignment with --supply")
        transcript = simulate(spec, palette.parse_assignment(cfg.assignment), _order(cfg, spec.n))
    elif cfg.strategy:
        spec = _line_puzzle(cfg)
        palette = _palette(spec.palette_size, cfg.names)
        if not cfg.assignment:
            raise PuzzleError("joke needs --assignment with --strategy")
        hats = palette.parse_assignment(cfg.assignment)
        transcript = run_transcript(spec, get_strategy(cfg.strategy, spec), hats).transcript
    else:
        raise PuzzleError("joke needs --from FILE, a --strategy run, or a --supply puzzle")
    if not len(transcript):
        raise PuzzleError("cannot tell a joke about an empty transcript")
    text = render_joke(transcript, palette, cfg.question)
    if cfg.format == "json":
        return 0, _dump({"joke": text.splitlines()})
    return 0, text


COMMANDS = {
    "verify": cmd_verify,
    "synth": cmd_synth,
    "epistemic": cmd_epistemic,
    "joke": cmd_joke,
}


def _add_common(p):
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out", metavar="FILE", help="write output here instead of stdout")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, help="sample this many assignments instead of all")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="exhaustive enumeration cap")
    p.add_argument("--names", help="comma-separated color names by index")


def _add_line(p):
    p.add_argument("--puzzle", choices=("repeated", "distinct"))
    p.add_argument("--n", type=int)
    p.add_argument("--colors", type=int, default=2)


def _add_supply(p):
    p.add_argument("--supply", help='hat supply, e.g. "R:3,B:2"')
    p.add_argument("--logicians", dest="n", type=int)
    p.add_argument("--visibility", choices=("complete", "line"), default="complete")
    p.add_argument("--order", help="speaking order as logician numbers, e.g. 1,2,3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hats", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("verify", help="check a strategy's worst case")
    _add_common(p)
    _add_line(p)
    p.add_argument("--strategy", required=True, choices=sorted(STRATEGIES))
    p.add_argument("--assignment", help="run one assignment, front to back, e.g. R,R,B")
    p.add_argument("--expect", type=int, help="mistake bound to check instead of the documented one")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("synth", help="search for an optimal strategy")
    _add_common(p)
    _add_line(p)
    p.add_argument("--max-mistakes", type=int)

    p = sub.add_parser("epistemic", help="I know / I don't know puzzles")
    _add_common(p)
    _add_supply(p)
    p.add_argument("--assignment", help="actual hats, e.g. R,R,R")
    p.add_argument("--transcript", help="observed answers, e.g. idk,idk,know")
    p.add_argument("--query", type=int, help="logician number whose hat to deduce")

    p = sub.add_parser("joke", help="tell a transcript as a bar joke")
    _add_common(p)
    _add_line(p)
    _add_supply(p)
    p.add_argument("--from", dest="from_file", metavar="FILE", help="JSON from verify or epistemic")
    p.add_argument("--question")
    p.add_argument("--assignment")
    p.add_argument("--strategy", choices=sorted(STRATEGIES))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    cfg = RunConfig.from_args(ns)
    try:
        status, text = COMMANDS[cfg.subcommand](cfg)
    except PuzzleError as exc:
        print(f"hats {cfg.subcommand}: error: {exc}", file=sys.stderr)
        return 2
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
