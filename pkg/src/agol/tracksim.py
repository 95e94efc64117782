"""Measured train tracks as ribbon graphs, and maximal splitting.

A track has trivalent switches.  Every switch owns three slots::

    SINGLE = 0, RIGHT = 1, LEFT = 2

Standing on the single side and looking into the double side, ``RIGHT`` and
``LEFT`` are the two double-side branches.  Counterclockwise around a switch
the slots read SINGLE, RIGHT, LEFT, which is all the ribbon structure there
is.  Half-edges ``2b`` and ``2b + 1`` are the two ends of branch ``b``.

Splitting a large branch ``e`` from switch ``u`` to switch ``v``: put ``u``
on the west, ``v`` on the east.  The four flanking branches are
``NW = u.RIGHT``, ``SW = u.LEFT``, ``NE = v.LEFT`` and ``SE = v.RIGHT``.
If ``NW > NE`` the new diagonal runs from the north-west to the south-east,
turning right whichever way it is travelled; that is a right split.  The
mirror case is a left split and ``NW == NE`` is a central split, which is
refused.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .errors import DegenerateSplit, EncodingError, NoCycleFound, NonPositiveWeight
from .quad import QuadExt

__all__ = [
    "SINGLE",
    "RIGHT",
    "LEFT",
    "RibbonTrack",
    "StepRecord",
    "TrackEncoding",
    "load_encodings",
    "encoding_path",
    "build_track",
    "build_start_track",
    "large_branches",
    "maximal_split",
    "run",
    "iso_measured",
    "find_cycle",
    "trace_lines",
    "relabel",
    "ribbon_automorphisms",
    "branch_map",
    "push_weights",
]

SINGLE, RIGHT, LEFT = 0, 1, 2
_NEXT_CCW = {SINGLE: RIGHT, RIGHT: LEFT, LEFT: SINGLE}

TORUS, SPHERE = "torus", "sphere"
_SURFACE_TOPOLOGY = {TORUS: (1, 2), SPHERE: (0, 5)}  # (genus, punctures)
_START_LABEL = {TORUS: "b", SPHERE: "b_L"}


@dataclass(frozen=True)
class RibbonTrack:
    """An immutable measured trivalent track.

    ``slots[s]`` holds the half-edges at switch ``s`` in slot order and
    ``weights[b]`` the weight of branch ``b``.  ``names`` are optional branch
    labels carried along by splitting.
    """

    slots: tuple[tuple[int, int, int], ...]
    weights: tuple[QuadExt, ...]
    names: tuple[str, ...] = ()
    label: str = ""

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(f"e{i}" for i in range(len(self.weights))))

    @property
    def n_switches(self) -> int:
        return len(self.slots)

    @property
    def n_branches(self) -> int:
        return len(self.weights)

    @property
    def where(self) -> dict[int, tuple[int, int]]:
        """half-edge -> (switch, slot)."""
        return _where(self.slots)

    def weight_of(self, name: str) -> QuadExt:
        return self.weights[self.names.index(name)]

    def scaled(self, c) -> "RibbonTrack":
        return RibbonTrack(self.slots, tuple(c * w for w in self.weights), self.names, self.label)

    # -- invariants ------------------------------------------------------
    def switch_defects(self) -> list[int]:
        """Switches where the single-side weight differs from the double-side sum."""
        bad = []
        for s, (h0, h1, h2) in enumerate(self.slots):
            w = self.weights
            if w[h0 // 2] != w[h1 // 2] + w[h2 // 2]:
                bad.append(s)
        return bad

    def faces(self) -> list[list[int]]:
        """Boundary walks of the ribbon graph, as lists of half-edges."""
        where = self.where
        seen: set[int] = set()
        out = []
        for start in range(2 * self.n_branches):
            if start in seen:
                continue
            walk = []
            h = start
            while h not in seen:
                seen.add(h)
                walk.append(h)
                s, k = where[h ^ 1]
                h = self.slots[s][_NEXT_CCW[k]]
            out.append(walk)
        return out

    def euler_characteristic(self) -> int:
        return self.n_switches - self.n_branches

    def topology(self) -> tuple[int, int]:
        """``(genus, punctures)`` assuming one puncture per complementary region."""
        f = len(self.faces())
        chi_closed = self.n_switches - self.n_branches + f
        if chi_closed % 2:
            raise EncodingError("odd closed Euler characteristic")
        return (2 - chi_closed) // 2, f

    def check(self, topology: tuple[int, int] | None = None) -> None:
        """Raise :class:`EncodingError` unless every invariant holds."""
        seen = sorted(h for row in self.slots for h in row)
        if seen != list(range(2 * self.n_branches)):
            raise EncodingError("every half-edge must occupy exactly one slot")
        if self.switch_defects():
            raise EncodingError(f"switch condition fails at {self.switch_defects()}")
        if any(w <= 0 for w in self.weights):
            raise NonPositiveWeight("all branch weights must be positive")
        if topology is not None and self.topology() != topology:
            raise EncodingError(f"topology {self.topology()} != {topology}")

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "slots": [list(s) for s in self.slots],
            "names": list(self.names),
            "weights": [str(w) for w in self.weights],
        }


@lru_cache(maxsize=4096)
def _where(slots) -> dict[int, tuple[int, int]]:
    return {h: (s, k) for s, row in enumerate(slots) for k, h in enumerate(row)}


@dataclass(frozen=True)
class StepRecord:
    step_index: int
    type: str
    splitting_number: int
    max_weight: QuadExt
    kinds: tuple[str, ...] = field(default=(), compare=False)

    def to_json(self) -> dict:
        return {
            "step_index": self.step_index,
            "type": self.type,
            "splitting_number": self.splitting_number,
            "max_weight": str(self.max_weight),
        }


# -- encodings -------------------------------------------------------------

@dataclass(frozen=True)
class TrackEncoding:
    """A stored track: named switches and branches plus the x, y, z placement."""

    label: str
    surface: str
    switches: tuple[tuple[str, str, str, str], ...]  # (id, single, right, left)
    parameters: tuple[str, str, str]  # branch names carrying x, y, z

    def branch_names(self) -> list[str]:
        names: list[str] = []
        for _, *ends in self.switches:
            for b in ends:
                if b not in names:
                    names.append(b)
        return names

    def weight_forms(self) -> dict[str, tuple[Fraction, Fraction, Fraction]]:
        """Each branch weight as rational coefficients of ``(x, y, z)``.

        The switch conditions form a linear system in the non-parameter
        weights; it must have exactly one solution.
        """
        names = self.branch_names()
        for b in names:
            count = sum(ends.count(b) for _, *ends in self.switches)
            if count != 2:
                raise EncodingError(f"branch {b!r} has {count} ends")
        if len(set(self.parameters)) != 3 or not set(self.parameters) <= set(names):
            raise EncodingError(f"bad parameter branches {self.parameters}")
        unknown = [b for b in names if b not in self.parameters]
        col = {b: i for i, b in enumerate(unknown)}
        width = len(unknown)
        # row = [coefficients of unknowns | minus coefficients of x, y, z]
        rows = []
        for _, single, right, left in self.switches:
            row = [Fraction(0)] * (width + 3)
            for b, sign in ((single, 1), (right, -1), (left, -1)):
                if b in col:
                    row[col[b]] += sign
                else:
                    row[width + self.parameters.index(b)] -= sign
            rows.append(row)
        pivots = []
        r = 0
        for c in range(width):
            pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
            if pivot is None:
                raise EncodingError(f"switch conditions do not determine {unknown[c]!r}")
            rows[r], rows[pivot] = rows[pivot], rows[r]
            lead = rows[r][c]
            rows[r] = [v / lead for v in rows[r]]
            for i in range(len(rows)):
                if i != r and rows[i][c]:
                    f = rows[i][c]
                    rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
            pivots.append(c)
            r += 1
        if any(any(row[width:]) for row in rows[r:]):
            raise EncodingError("switch conditions are inconsistent")
        forms = {b: tuple(Fraction(int(i == j)) for j in range(3)) for i, b in enumerate(self.parameters)}
        for i, c in enumerate(pivots):
            forms[unknown[c]] = tuple(rows[i][width:])
        return forms

    def build(self, weights: Sequence) -> RibbonTrack:
        x = [QuadExt.coerce(v) for v in weights]
        if len(x) != 3:
            raise ValueError("exactly three parameter weights required")
        if any(v <= 0 for v in x):
            raise NonPositiveWeight("parameter weights must be positive")
        forms = self.weight_forms()
        names = self.branch_names()
        index = {b: i for i, b in enumerate(names)}
        used = [0] * len(names)
        slots = []
        for _, *ends in self.switches:
            row = []
            for b in ends:
                row.append(2 * index[b] + used[index[b]])
                used[index[b]] += 1
            slots.append(tuple(row))
        w = tuple(sum((c * v for c, v in zip(forms[b], x)), QuadExt(0)) for b in names)
        for b, val in zip(names, w):
            if val <= 0:
                raise NonPositiveWeight(f"branch {b!r} gets weight {val}")
        track = RibbonTrack(tuple(slots), w, tuple(names), self.label)
        track.check(_SURFACE_TOPOLOGY.get(self.surface))
        return track


_DATA_FILE = "tracks.json"


def encoding_path() -> Path:
    override = os.environ.get("AGOL_TRACKS")
    if override:
        return Path(override)
    return Path(str(resources.files("agol") / "data" / _DATA_FILE))


def load_encodings(path: str | os.PathLike | None = None) -> dict[str, TrackEncoding]:
    """Read the versioned track file (``AGOL_TRACKS`` overrides the default)."""
    p = Path(path) if path is not None else encoding_path()
    try:
        raw = json.loads(p.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise EncodingError(f"cannot read track encodings from {p}: {exc}") from exc
    if raw.get("version") != 1:
        raise EncodingError(f"unsupported track file version {raw.get('version')!r}")
    out = {}
    try:
        for label, entry in raw["tracks"].items():
            switches = tuple(
                (s["id"], s["single"], s["double"][0], s["double"][1]) for s in entry["switches"]
            )
            params = tuple(entry["parameters"])
            if len(params) != 3:
                raise EncodingError(f"track {label!r} needs three parameter branches")
            out[label] = TrackEncoding(label, entry["surface"], switches, params)
    except (KeyError, TypeError, IndexError) as exc:
        raise EncodingError(f"malformed track file {p}: {exc}") from exc
    return out


def build_track(label: str, weights: Sequence, path=None) -> RibbonTrack:
    encs = load_encodings(path)
    if label not in encs:
        raise EncodingError(f"no track {label!r} in encoding file")
    return encs[label].build(weights)


def build_start_track(surface: str, weights: Sequence, path=None) -> RibbonTrack:
    """``b`` on the torus, ``b_L`` on the sphere, with parameter weights ``x, y, z``."""
    if surface not in _START_LABEL:
        raise ValueError(f"unknown surface {surface!r}")
    return build_track(_START_LABEL[surface], weights, path)


# -- splitting ---------------------------------------------------------------

def large_branches(track: RibbonTrack) -> list[int]:
    where = track.where
    return [
        b for b in range(track.n_branches)
        if where[2 * b][1] == SINGLE and where[2 * b + 1][1] == SINGLE
    ]


def _split_one(track: RibbonTrack, b: int, slots: list[list[int]], weights: list[QuadExt]) -> str:
    where = track.where
    u, _ = where[2 * b]
    v, _ = where[2 * b + 1]
    nw, sw = track.slots[u][RIGHT], track.slots[u][LEFT]
    ne, se = track.slots[v][LEFT], track.slots[v][RIGHT]
    a, c = track.weights[nw // 2], track.weights[ne // 2]
    if a > c:
        slots[u] = [nw, 2 * b, ne]
        slots[v] = [se, 2 * b + 1, sw]
        weights[b] = a - c
        return "L"
    if c > a:
        slots[u] = [ne, nw, 2 * b]
        slots[v] = [sw, se, 2 * b + 1]
        weights[b] = c - a
        return "R"
    raise DegenerateSplit(f"central split at branch {track.names[b]!r} (flanking weights {a})")


def maximal_split(track: RibbonTrack, step_index: int = 0) -> tuple[RibbonTrack, StepRecord]:
    large = large_branches(track)
    if not large:
        raise ValueError("track has no large branch")
    top = max(track.weights[b] for b in large)
    chosen = [b for b in large if track.weights[b] == top]
    slots = [list(row) for row in track.slots]
    weights = list(track.weights)
    kinds = tuple(_split_one(track, b, slots, weights) for b in chosen)
    kind = kinds[0] if len(set(kinds)) == 1 else "M"
    new = RibbonTrack(tuple(tuple(r) for r in slots), tuple(weights), track.names, track.label)
    return new, StepRecord(step_index, kind, len(chosen), top, kinds)


def run(track: RibbonTrack, max_steps: int, check: bool = True) -> list[tuple[RibbonTrack, StepRecord]]:
    """Apply ``max_steps`` maximal splittings.

    Entry ``i`` pairs the track produced by step ``i`` with its record.  Tracks
    are immutable, so the snapshots share nothing mutable.  With ``check`` the
    switch condition, positivity and topology are asserted after every step.
    """
    if max_steps < 1:
        raise ValueError("max_steps >= 1 required")
    topo = track.topology() if check else None
    trace = []
    cur = track
    for i in range(max_steps):
        cur, rec = maximal_split(cur, i)
        if check:
            cur.check(topo)
        trace.append((cur, rec))
    return trace


def trace_lines(trace: Iterable[tuple[RibbonTrack, StepRecord]], snapshots: bool = False) -> list[str]:
    """One JSON object per step, optionally carrying the resulting track."""
    out = []
    for t, rec in trace:
        obj = rec.to_json()
        if snapshots:
            obj["track"] = t.to_json()
        out.append(json.dumps(obj, ensure_ascii=False))
    return out


# -- isomorphism -----------------------------------------------------------

def _iso_from(t1: RibbonTrack, t2: RibbonTrack, s1: int, s2: int) -> dict[int, int] | None:
    """Slot-preserving switch bijection sending ``s1`` to ``s2``, if any."""
    w1, w2 = t1.where, t2.where
    smap = {s1: s2}
    stack = [s1]
    while stack:
        s = stack.pop()
        t = smap[s]
        for k in range(3):
            h, g = t1.slots[s][k], t2.slots[t][k]
            o1, k1 = w1[h ^ 1]
            o2, k2 = w2[g ^ 1]
            if k1 != k2:
                return None
            if o1 in smap:
                if smap[o1] != o2:
                    return None
            else:
                smap[o1] = o2
                stack.append(o1)
    if len(smap) != t1.n_switches or len(set(smap.values())) != t1.n_switches:
        return None
    return smap


def iso_measured(t1: RibbonTrack, t2: RibbonTrack) -> QuadExt | None:
    """Scale ``c`` with ``t2 = c * phi(t1)`` for an orientation-preserving ribbon
    isomorphism ``phi``, or ``None``."""
    if t1.n_switches != t2.n_switches or t1.n_branches != t2.n_branches:
        return None
    if not t1.n_switches:
        return None
    for s2 in range(t2.n_switches):
        smap = _iso_from(t1, t2, 0, s2)
        if smap is None:
            continue
        ratio = None
        ok = True
        for s, t in smap.items():
            for k in range(3):
                b1 = t1.slots[s][k] // 2
                b2 = t2.slots[t][k] // 2
                r = t2.weights[b2] / t1.weights[b1]
                if ratio is None:
                    ratio = r
                elif r != ratio:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return ratio
    return None


def find_cycle(
    track: RibbonTrack,
    max_steps: int,
    scale: QuadExt | None = None,
    check: bool = True,
) -> tuple[int, QuadExt, list[StepRecord]]:
    """Smallest ``m <= max_steps`` whose track is measured-isomorphic to the start.

    When ``scale`` is given only isomorphisms with that rescaling count.  This
    matters for words fixed by a shift-flip: the track then recurs after a
    fraction of the cycle under a root of the map, at a larger scale.
    """
    topo = track.topology() if check else None
    cur = track
    records = []
    for m in range(1, max_steps + 1):
        cur, rec = maximal_split(cur, m - 1)
        if check:
            cur.check(topo)
        records.append(rec)
        c = iso_measured(track, cur)
        if c is not None and (scale is None or c == scale):
            return m, c, records
    raise NoCycleFound(f"no measured isomorphism with the start within {max_steps} steps")


# -- relabelling -------------------------------------------------------------

def relabel(track: RibbonTrack, switch_perm: Sequence[int], branch_perm: Sequence[int]) -> RibbonTrack:
    """Rename switch ``s`` to ``switch_perm[s]`` and branch ``b`` to ``branch_perm[b]``.

    The two ends of a branch keep their order, so the result is the same
    measured track written down differently.
    """
    slots: list = [None] * track.n_switches
    for s, row in enumerate(track.slots):
        slots[switch_perm[s]] = tuple(2 * branch_perm[h // 2] + h % 2 for h in row)
    weights: list = [None] * track.n_branches
    names: list = [None] * track.n_branches
    for b in range(track.n_branches):
        weights[branch_perm[b]] = track.weights[b]
        names[branch_perm[b]] = track.names[b]
    return RibbonTrack(tuple(slots), tuple(weights), tuple(names), track.label)


def ribbon_automorphisms(track: RibbonTrack) -> list[dict[int, int]]:
    """Slot-preserving switch permutations of the unweighted ribbon graph."""
    if not track.n_switches:
        return []
    out = []
    for s in range(track.n_switches):
        smap = _iso_from(track, track, 0, s)
        if smap is not None:
            out.append(smap)
    return out


def branch_map(t1: RibbonTrack, t2: RibbonTrack, smap: dict[int, int]) -> dict[int, int]:
    """Branch correspondence induced by a slot-preserving switch bijection."""
    return {t1.slots[s][k] // 2: t2.slots[t][k] // 2 for s, t in smap.items() for k in range(3)}


def push_weights(track: RibbonTrack, smap: dict[int, int]) -> RibbonTrack:
    """Move every weight along an automorphism: the image branch gets the weight."""
    bmap = branch_map(track, track, smap)
    weights: list = [None] * track.n_branches
    for b, c in bmap.items():
        weights[c] = track.weights[b]
    return RibbonTrack(track.slots, tuple(weights), track.names, track.label)
