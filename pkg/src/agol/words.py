"""Parameter words ``p = (p_n, p_n', q_n, ..., p_1, p_1', q_1)`` in I_n.

A word is stored in the order it is written: the leftmost triple is
``(p_n, p_n', q_n)``, whose twists are applied *last* as a mapping class.
The text form separates triples with ``;`` and entries with ``,``::

    >>> ParamWord.parse("1,0,1;0,1,1").flat()
    (1, 0, 1, 0, 1, 1)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotInIn

__all__ = [
    "ParamWord",
    "validate",
    "shift",
    "flip",
    "is_symmetric",
    "canonical_form",
    "are_equivalent",
    "equivalence_certificate",
    "concatenate",
]

Triple = tuple[int, int, int]


@dataclass(frozen=True)
class ParamWord:
    """A validated point of I_n; build through :func:`validate` or :meth:`parse`."""

    triples: tuple[Triple, ...]

    def __post_init__(self):
        _check(self.triples)

    @property
    def n(self) -> int:
        return len(self.triples)

    def flat(self) -> tuple[int, ...]:
        return tuple(v for t in self.triples for v in t)

    def __iter__(self):
        return iter(self.triples)

    def __len__(self):
        return len(self.triples)

    def __str__(self):
        return ";".join(",".join(str(v) for v in t) for t in self.triples)

    def __repr__(self):
        return f"ParamWord({self})"

    @classmethod
    def parse(cls, text: str, reverse: bool = False) -> "ParamWord":
        """Parse ``"p,p',q;..."``; with ``reverse`` the triples are read as
        ``(p_1, p_1', q_1); ...; (p_n, p_n', q_n)``."""
        chunks = [c for c in text.strip().split(";") if c.strip()]
        if not chunks:
            raise NotInIn("empty word")
        raw: list[int] = []
        for chunk in chunks:
            parts = [s.strip() for s in chunk.split(",")]
            if len(parts) != 3:
                raise NotInIn(f"triple {chunk!r} does not have 3 entries")
            try:
                raw.extend(int(s) for s in parts)
            except ValueError:
                raise NotInIn(f"non-integer entry in {chunk!r}") from None
        word = validate(raw)
        if reverse:
            word = ParamWord(tuple(reversed(word.triples)))
        return word

    def to_json(self) -> list[list[int]]:
        return [list(t) for t in self.triples]

    @classmethod
    def from_json(cls, obj) -> "ParamWord":
        if isinstance(obj, str):
            obj = json.loads(obj)
        return validate([v for t in obj for v in t])


def _check(triples: Sequence[Triple]) -> None:
    if not triples:
        raise NotInIn("n >= 1 required")
    for idx, t in enumerate(triples):
        if len(t) != 3:
            raise NotInIn(f"block {idx} is not a triple")
        if any((not isinstance(v, int)) or isinstance(v, bool) or v < 0 for v in t):
            raise NotInIn(f"block {idx} has a negative or non-integer entry")
    n = len(triples)
    for idx, (p, pp, q) in enumerate(triples):
        i = n - idx
        if p + pp <= 0:
            raise NotInIn(f"clause p_i + p_i' > 0 fails at i = {i}")
        if q <= 0:
            raise NotInIn(f"clause q_i > 0 fails at i = {i}")
    if not any(t[0] > 0 for t in triples):
        raise NotInIn("clause 'exists j with p_j > 0' fails")
    if not any(t[1] > 0 for t in triples):
        raise NotInIn("clause 'exists k with p_k' > 0' fails")


def validate(raw: Iterable[int]) -> ParamWord:
    """Turn ``3n`` nonnegative integers (written order) into a :class:`ParamWord`."""
    vals = list(raw)
    if len(vals) == 0 or len(vals) % 3:
        raise NotInIn(f"length {len(vals)} is not a positive multiple of 3")
    return ParamWord(tuple(tuple(vals[i:i + 3]) for i in range(0, len(vals), 3)))


def shift(w: ParamWord) -> ParamWord:
    """Cyclic block rotation T: the leading triple moves to the end."""
    return ParamWord(w.triples[1:] + w.triples[:1])


def flip(w: ParamWord) -> ParamWord:
    return ParamWord(tuple((pp, p, q) for p, pp, q in w.triples))


def is_symmetric(w: ParamWord) -> bool:
    return all(p == pp for p, pp, _ in w.triples)


def _orbit(w: ParamWord):
    """Yield ``(k, flipped, word)`` for ``T^k(w)`` and ``T^k(f(w))``."""
    for flipped, base in ((False, w), (True, flip(w))):
        cur = base
        for k in range(w.n):
            yield k, flipped, cur
            cur = shift(cur)


def canonical_form(w: ParamWord) -> ParamWord:
    return min((word for _, _, word in _orbit(w)), key=ParamWord.flat)


def are_equivalent(w1: ParamWord, w2: ParamWord) -> bool:
    return w1.n == w2.n and canonical_form(w1) == canonical_form(w2)


def equivalence_certificate(p: ParamWord, t: ParamWord) -> tuple[int, bool] | None:
    """Smallest ``(k, flipped)`` with ``T^k(p) == t`` (``flipped=False``) or
    ``T^k(p) == f(t)`` (``flipped=True``); ``None`` if ``p`` and ``t`` are
    not related."""
    if p.n != t.n:
        return None
    ft = flip(t)
    cur = p
    for k in range(p.n):
        if cur == t:
            return k, False
        if cur == ft:
            return k, True
        cur = shift(cur)
    return None


def concatenate(p: ParamWord, t: ParamWord) -> ParamWord:
    return ParamWord(p.triples + t.triples)
