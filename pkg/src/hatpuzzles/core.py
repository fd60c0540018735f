"""Puzzle variants, hat assignments, announcements and transcripts.

Positions are 0-based from the front of the line: position 0 sees nobody,
position ``n - 1`` (the back) sees everyone ahead. Built-in strategies speak
back to front. An assignment is a plain tuple of color indices in the same
front-to-back order.
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass, field
from typing import Iterator, Sequence, Union

DEFAULT_CAP = 10**7

# Unique initials so the short "R,B,G" form stays unambiguous.
DEFAULT_COLOR_NAMES = (
    "red", "blue", "green", "yellow", "purple", "orange", "white", "cyan",
    "magenta", "navy", "teal", "lime", "indigo", "khaki", "silver", "amber",
)


class PuzzleError(ValueError):
    """Invalid puzzle parameters, assignment or textual input."""


class EnumerationCapExceeded(PuzzleError):
    """The legal assignment set is too large to enumerate exhaustively."""


class Visibility(enum.Enum):
    LINE_FORWARD = "line"
    COMPLETE = "complete"


@dataclass(frozen=True)
class Palette:
    size: int
    names: tuple[str, ...] = ()

    def __post_init__(self):
        if self.size < 1:
            raise PuzzleError("palette needs at least one color")
        if not self.names:
            if self.size <= len(DEFAULT_COLOR_NAMES):
                names = DEFAULT_COLOR_NAMES[: self.size]
            else:
                names = tuple(f"c{i}" for i in range(self.size))
            object.__setattr__(self, "names", names)
        names = tuple(self.names)
        object.__setattr__(self, "names", names)
        if len(names) != self.size:
            raise PuzzleError(f"palette of size {self.size} got {len(names)} names")
        if len({name.lower() for name in names}) != len(names):
            raise PuzzleError(f"palette names must be distinct: {names}")

    @property
    def symbols(self) -> tuple[str, ...]:
        """Short forms used in canonical assignment strings."""
        initials = tuple(name[0].upper() for name in self.names)
        if len(set(initials)) == len(initials):
            return initials
        return tuple(str(i) for i in range(self.size))

    def display(self, color: int) -> str:
        return self.names[color].capitalize()

    def parse_color(self, token: str) -> int:
        token = token.strip()
        if not token:
            raise PuzzleError("empty color token")
        if token.isdigit():
            color = int(token)
            if color >= self.size:
                raise PuzzleError(f"color {color} outside palette of size {self.size}")
            return color
        lowered = token.lower()
        for i, name in enumerate(self.names):
            if name.lower() == lowered:
                return i
        for i, sym in enumerate(self.symbols):
            if sym.lower() == lowered:
                return i
        raise PuzzleError(f"unknown color {token!r}; palette is {', '.join(self.names)}")

    def format_assignment(self, hats: Sequence[int]) -> str:
        syms = self.symbols
        return ",".join(syms[c] for c in hats)

    def parse_assignment(self, text: str) -> tuple[int, ...]:
        return tuple(self.parse_color(tok) for tok in text.split(","))


@dataclass(frozen=True)
class RepeatedColors:
    """Unlimited supply of ``colors`` colors, line-forward view, any guesses."""

    n: int
    colors: int

    def __post_init__(self):
        if self.n < 1:
            raise PuzzleError("need at least one logician")
        if self.colors < 2:
            raise PuzzleError("need at least two colors")

    @property
    def palette_size(self) -> int:
        return self.colors

    visibility = Visibility.LINE_FORWARD
    no_repeat = False

    def describe(self) -> dict:
        return {"variant": "repeated", "n": self.n, "colors": self.colors}


@dataclass(frozen=True)
class DistinctColors:
    """``n + 1`` distinct hats, one left over; announced colors may not repeat."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise PuzzleError("need at least one logician")

    @property
    def palette_size(self) -> int:
        return self.n + 1

    visibility = Visibility.LINE_FORWARD
    no_repeat = True

    def describe(self) -> dict:
        return {"variant": "distinct", "n": self.n, "colors": self.n + 1}


@dataclass(frozen=True)
class LimitedSupply:
    """Hats drawn from a finite multiset; ``counts[c]`` hats of color ``c``."""

    n: int
    counts: tuple[int, ...]
    visibility: Visibility = Visibility.COMPLETE
    no_repeat = False

    def __post_init__(self):
        object.__setattr__(self, "counts", tuple(self.counts))
        if self.n < 1:
            raise PuzzleError("need at least one logician")
        if not self.counts or any(c < 0 for c in self.counts):
            raise PuzzleError("supply counts must be non-negative")
        if sum(self.counts) < self.n:
            raise PuzzleError(
                f"supply of {sum(self.counts)} hats cannot cover {self.n} logicians"
            )

    @property
    def palette_size(self) -> int:
        return len(self.counts)

    def describe(self) -> dict:
        return {
            "variant": "supply",
            "n": self.n,
            "counts": list(self.counts),
            "visibility": self.visibility.value,
        }


PuzzleSpec = Union[RepeatedColors, DistinctColors, LimitedSupply]
Assignment = tuple[int, ...]


@dataclass(frozen=True)
class ColorGuess:
    color: int


@dataclass(frozen=True)
class Know:
    color: int


@dataclass(frozen=True)
class DontKnow:
    pass


Announcement = Union[ColorGuess, Know, DontKnow]


@dataclass(frozen=True)
class Entry:
    speaker: int
    announcement: Announcement


@dataclass(frozen=True)
class Transcript:
    entries: tuple[Entry, ...] = field(default=())
    _guesses: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)
    _speakers: tuple[int, ...] = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))
        speakers = [e.speaker for e in self.entries]
        if len(set(speakers)) != len(speakers):
            raise PuzzleError(f"speaker repeated in transcript: {speakers}")
        guesses = tuple(
            e.announcement.color for e in self.entries
            if isinstance(e.announcement, ColorGuess)
        )
        object.__setattr__(self, "_guesses", guesses)
        object.__setattr__(self, "_speakers", tuple(speakers))

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Entry]:
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def then(self, speaker: int, announcement: Announcement) -> Transcript:
        if speaker in self._speakers:
            raise PuzzleError(f"speaker {speaker} already announced")
        # append without re-validating the existing prefix
        nxt = object.__new__(Transcript)
        object.__setattr__(nxt, "entries", self.entries + (Entry(speaker, announcement),))
        guesses = self._guesses
        if isinstance(announcement, ColorGuess):
            guesses = guesses + (announcement.color,)
        object.__setattr__(nxt, "_guesses", guesses)
        object.__setattr__(nxt, "_speakers", self._speakers + (speaker,))
        return nxt

    def guessed_colors(self) -> tuple[int, ...]:
        return self._guesses

    def to_json(self, palette: Palette) -> dict:
        rows = []
        for e in self.entries:
            a = e.announcement
            if isinstance(a, ColorGuess):
                rows.append({"speaker": e.speaker, "kind": "guess", "color": a.color})
            elif isinstance(a, Know):
                rows.append({"speaker": e.speaker, "kind": "know", "color": a.color})
            else:
                rows.append({"speaker": e.speaker, "kind": "dontknow", "color": None})
        return {"palette": list(palette.names), "entries": rows}

    @classmethod
    def from_json(cls, obj: dict) -> tuple[Transcript, Palette]:
        try:
            names = tuple(obj["palette"])
            palette = Palette(len(names), names)
            entries = []
            for row in obj["entries"]:
                kind = row["kind"]
                if kind == "guess":
                    ann = ColorGuess(int(row["color"]))
                elif kind == "know":
                    ann = Know(int(row["color"]))
                elif kind == "dontknow":
                    ann = DontKnow()
                else:
                    raise PuzzleError(f"unknown announcement kind {kind!r}")
                if getattr(ann, "color", 0) >= palette.size:
                    raise PuzzleError(f"color {ann.color} outside palette")
                entries.append(Entry(int(row["speaker"]), ann))
        except (KeyError, TypeError) as exc:
            raise PuzzleError(f"malformed transcript object: {exc}") from exc
        return cls(tuple(entries)), palette


def count_assignments(spec: PuzzleSpec) -> int:
    if isinstance(spec, RepeatedColors):
        return spec.colors**spec.n
    if isinstance(spec, DistinctColors):
        return math.perm(spec.n + 1, spec.n)
    # ways[r] = sequences of length r over the colors handled so far
    ways = [1] + [0] * spec.n
    for cap in spec.counts:
        nxt = [0] * (spec.n + 1)
        for used in range(spec.n + 1):
            if ways[used]:
                for k in range(min(cap, spec.n - used) + 1):
                    nxt[used + k] += ways[used] * math.comb(used + k, k)
        ways = nxt
    return ways[spec.n]


def is_legal(spec: PuzzleSpec, hats: Sequence[int]) -> bool:
    if len(hats) != spec.n or any(not 0 <= c < spec.palette_size for c in hats):
        return False
    if isinstance(spec, DistinctColors):
        return len(set(hats)) == len(hats)
    if isinstance(spec, LimitedSupply):
        return all(hats.count(c) <= k for c, k in enumerate(spec.counts))
    return True


def check_assignment(spec: PuzzleSpec, hats: Sequence[int]) -> Assignment:
    hats = tuple(hats)
    if not is_legal(spec, hats):
        raise PuzzleError(f"assignment {hats} is not legal for {spec}")
    return hats


def enumerate_assignments(spec: PuzzleSpec, cap: int = DEFAULT_CAP) -> Iterator[Assignment]:
    """Every legal assignment once, in lexicographic order of the hat tuple."""
    total = count_assignments(spec)
    if total > cap:
        raise EnumerationCapExceeded(
            f"{total} assignments exceed the exhaustive cap of {cap}; use sampled mode"
        )
    return _enumerate(spec)


def _enumerate(spec: PuzzleSpec) -> Iterator[Assignment]:
    colors = range(spec.palette_size)
    if isinstance(spec, RepeatedColors):
        yield from itertools.product(colors, repeat=spec.n)
    elif isinstance(spec, DistinctColors):
        # permutations() of a sorted pool is already lexicographic
        yield from itertools.permutations(colors, spec.n)
    else:
        for hats in itertools.product(colors, repeat=spec.n):
            if all(hats.count(c) <= k for c, k in enumerate(spec.counts)):
                yield hats


def visible_hats(spec: PuzzleSpec, hats: Sequence[int], position: int) -> dict[int, int]:
    if not 0 <= position < spec.n:
        raise PuzzleError(f"position {position} out of range for n={spec.n}")
    if spec.visibility is Visibility.LINE_FORWARD:
        return {i: hats[i] for i in range(position)}
    return {i: hats[i] for i in range(spec.n) if i != position}
