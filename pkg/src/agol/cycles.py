"""Closed-form Agol cycles for the torus family and the sphere family.

Both families are indexed by the same parameter words.  A cycle is described
by its maximal-splitting type word over ``{L, R, M}``, its length and its total
splitting number; the simulator in :mod:`agol.tracksim` checks these
independently.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .cfrac import dilatation, normalized_eigenvector
from .quad import QuadExt
from .words import ParamWord, concatenate, is_symmetric

__all__ = [
    "Surface",
    "BlockType",
    "SplitWord",
    "CycleDescriptor",
    "block_type",
    "torus_cycle",
    "sphere_cycle",
    "cycle",
    "check_additivity",
]


class Surface(str, enum.Enum):
    TORUS = "torus"
    SPHERE = "sphere"

    @classmethod
    def parse(cls, text: str) -> "Surface":
        try:
            return cls(text.strip().lower())
        except ValueError:
            raise ValueError(f"surface must be 'torus' or 'sphere', got {text!r}") from None


class BlockType(str, enum.Enum):
    A = "A"
    A_PRIME = "A'"
    B = "B"


_STEPS = frozenset("LRM")


@dataclass(frozen=True)
class SplitWord:
    steps: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))
        bad = [s for s in self.steps if s not in _STEPS]
        if bad:
            raise ValueError(f"split steps must be L, R or M, got {bad[0]!r}")

    @classmethod
    def from_runs(cls, runs) -> "SplitWord":
        """Build from ``(letter, count)`` pairs; zero counts contribute nothing."""
        return cls(tuple(letter for letter, k in runs for _ in range(k)))

    @classmethod
    def parse(cls, text: str) -> "SplitWord":
        return cls(tuple(text.strip()))

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return "".join(self.steps)

    def count(self, letter: str) -> int:
        return self.steps.count(letter)


@dataclass(frozen=True)
class CycleDescriptor:
    surface: Surface
    word: ParamWord
    length: int
    total: int
    split_word: SplitWord
    dilatation: QuadExt
    eigenvector: tuple[QuadExt, QuadExt, QuadExt]
    start_track_label: str

    def __post_init__(self):
        if self.length != len(self.split_word):
            raise ValueError("cycle length differs from the split word length")
        if not 0 < self.length <= self.total:
            raise ValueError("need 0 < length <= total splitting number")

    def to_json(self) -> dict:
        return {
            "surface": self.surface.value,
            "word": str(self.word),
            "length": self.length,
            "total": self.total,
            "split_word": str(self.split_word),
            "dilatation": str(self.dilatation),
            "eigenvector": [str(x) for x in self.eigenvector],
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CycleDescriptor":
        surface = Surface(obj["surface"])
        return cls(
            surface,
            ParamWord.parse(obj["word"]),
            int(obj["length"]),
            int(obj["total"]),
            SplitWord.parse(obj["split_word"]),
            QuadExt.parse(obj["dilatation"]),
            tuple(QuadExt.parse(x) for x in obj["eigenvector"]),
            _START[surface],
        )


_START = {Surface.TORUS: "b", Surface.SPHERE: "b_L"}


def block_type(triple) -> BlockType:
    p, pp, _ = triple
    if pp == 0:
        return BlockType.A
    if p == 0:
        return BlockType.A_PRIME
    return BlockType.B


def _sphere_block_size(triple) -> int:
    """``A_i``: twice the nonzero twist count for A/A' blocks, ``p + p' + 2`` for B."""
    p, pp, _ = triple
    if block_type(triple) is BlockType.B:
        return p + pp + 2
    return 2 * (p + pp)


def _descriptor(surface: Surface, w: ParamWord, runs, total: int) -> CycleDescriptor:
    sw = SplitWord.from_runs(runs)
    return CycleDescriptor(
        surface, w, len(sw), total, sw, dilatation(w), normalized_eigenvector(w), _START[surface]
    )


def torus_cycle(w: ParamWord) -> CycleDescriptor:
    runs = []
    if is_symmetric(w):
        for p, _, q in w.triples:
            runs += [("R", p), ("L", 2 * q)]
    else:
        for p, pp, q in w.triples:
            runs += [("R", p + pp), ("L", 3 * q)]
    total = sum(p + pp + 4 * q for p, pp, q in w.triples)
    return _descriptor(Surface.TORUS, w, runs, total)


def sphere_cycle(w: ParamWord) -> CycleDescriptor:
    runs = []
    sym = is_symmetric(w)
    for t in w.triples:
        p, pp, q = t
        if sym:
            runs += [("R", 1), ("L", 1), ("R", p - 1), ("L", 1), ("R", 1), ("L", 2 * q - 1)]
        elif block_type(t) is BlockType.B:
            runs += [("R", 1), ("L", 1), ("R", p + pp - 2), ("L", 2), ("R", 1), ("L", 3 * q - 1)]
        else:
            runs += [("M", 1), ("R", 2 * (p + pp) - 1), ("L", 3 * q)]
    # symmetric blocks have p = p' > 0, so they are type B here too
    total = sum(_sphere_block_size(t) + 4 * t[2] for t in w.triples)
    return _descriptor(Surface.SPHERE, w, runs, total)


def cycle(surface: Surface | str, w: ParamWord) -> CycleDescriptor:
    s = Surface.parse(surface) if isinstance(surface, str) else surface
    return torus_cycle(w) if s is Surface.TORUS else sphere_cycle(w)


def check_additivity(p: ParamWord, t: ParamWord, surface: Surface | str | None = None) -> bool:
    """Whether ``N(pt) = N(p) + N(t)``; both surfaces unless one is named."""
    if surface is None:
        surfaces = list(Surface)
    else:
        surfaces = [Surface.parse(surface) if isinstance(surface, str) else surface]
    pt = concatenate(p, t)
    return all(
        cycle(s, pt).total == cycle(s, p).total + cycle(s, t).total for s in surfaces
    )
