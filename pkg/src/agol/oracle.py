"""Run the splitting simulator on a word and compare it with the closed forms."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cfrac import dilatation, normalized_eigenvector
from .cycles import CycleDescriptor, Surface, cycle
from .matrices import verify_eigenpair
from .quad import QuadExt
from .tracksim import RibbonTrack, StepRecord, build_start_track, find_cycle
from .words import ParamWord

__all__ = ["Simulation", "Check", "simulate", "verify"]


@dataclass(frozen=True)
class Simulation:
    surface: Surface
    word: ParamWord
    start: RibbonTrack
    length: int
    scale: QuadExt
    records: tuple[StepRecord, ...]

    @property
    def split_word(self) -> str:
        return "".join(r.type for r in self.records)

    @property
    def total(self) -> int:
        return sum(r.splitting_number for r in self.records)

    def to_json(self) -> dict:
        return {
            "surface": self.surface.value,
            "word": str(self.word),
            "length": self.length,
            "scale": str(self.scale),
            "split_word": self.split_word,
            "total": self.total,
        }


def simulate(surface: Surface | str, w: ParamWord, max_steps: int | None = None,
             tracks_path=None) -> Simulation:
    """Split from the start track carrying ``lambda * v`` until it recurs at scale ``1/lambda``.

    The default budget is four times the closed-form cycle length.
    """
    s = Surface.parse(surface) if isinstance(surface, str) else surface
    lam = dilatation(w)
    weights = [lam * x for x in normalized_eigenvector(w)]
    start = build_start_track(s.value, weights, tracks_path)
    if max_steps is None:
        max_steps = 4 * cycle(s, w).length
    m, scale, records = find_cycle(start, max_steps, scale=1 / lam)
    return Simulation(s, w, start, m, scale, tuple(records))


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    detail: str = field(default="")


def verify(surface: Surface | str, w: ParamWord, max_steps: int | None = None,
           tracks_path=None) -> tuple[list[Check], CycleDescriptor, Simulation]:
    """Closed form against simulator: type word, length, total, scale and eigenpair."""
    s = Surface.parse(surface) if isinstance(surface, str) else surface
    desc = cycle(s, w)
    sim = simulate(s, w, max_steps, tracks_path)
    lam = desc.dilatation
    checks = [
        Check("split_word", sim.split_word == str(desc.split_word),
              f"{sim.split_word} vs {desc.split_word}"),
        Check("length", sim.length == desc.length, f"{sim.length} vs {desc.length}"),
        Check("total", sim.total == desc.total, f"{sim.total} vs {desc.total}"),
        Check("scale", sim.scale == 1 / lam, f"{sim.scale} vs {1 / lam}"),
        Check("eigenpair", verify_eigenpair(w), f"lambda = {lam}"),
    ]
    return checks, desc, sim
