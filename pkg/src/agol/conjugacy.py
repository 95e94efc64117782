"""Deciding conjugacy of two family members, with exact evidence either way.

Words related by shifts and flips give conjugate maps.  Otherwise either the
cyclic sequences of block profiles ``(p + p', q)`` differ, or they agree after
some shift and the split ratios tell the words apart: at every aligning shift
``s_p != s_t`` and ``s_p + s_t != 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cfrac import split_ratio
from .quad import QuadExt
from .words import ParamWord, are_equivalent, equivalence_certificate, shift

__all__ = ["RatioWitness", "Verdict", "profile", "aligning_shifts", "compare"]


def profile(w: ParamWord) -> tuple[tuple[int, int], ...]:
    return tuple((p + pp, q) for p, pp, q in w.triples)


def aligning_shifts(p: ParamWord, t: ParamWord) -> list[int]:
    """All ``k`` with ``profile(T^k(t)) == profile(p)``."""
    if p.n != t.n:
        return []
    target = profile(p)
    out = []
    cur = t
    for k in range(t.n):
        if profile(cur) == target:
            out.append(k)
        cur = shift(cur)
    return out


@dataclass(frozen=True)
class RatioWitness:
    shift: int
    s_p: QuadExt
    s_t: QuadExt

    @property
    def distinct(self) -> bool:
        return self.s_p != self.s_t

    @property
    def not_complementary(self) -> bool:
        return self.s_p + self.s_t != 1

    def to_json(self) -> dict:
        return {
            "shift": self.shift,
            "s_p": str(self.s_p),
            "s_t": str(self.s_t),
            "s_p != s_t": self.distinct,
            "s_p + s_t != 1": self.not_complementary,
        }


@dataclass(frozen=True)
class Verdict:
    equivalent: bool
    certificate: tuple[int, bool] | None
    profiles_match: bool
    witnesses: tuple[RatioWitness, ...] = ()

    @property
    def separated_by_ratios(self) -> bool:
        """True when the split ratios alone rule out every alignment."""
        return bool(self.witnesses) and all(
            w.distinct and w.not_complementary for w in self.witnesses
        )

    def to_json(self) -> dict:
        out: dict = {"equivalent": self.equivalent, "profiles_match": self.profiles_match}
        if self.certificate is not None:
            k, flipped = self.certificate
            out["certificate"] = {"shift": k, "flip": flipped}
        if self.witnesses:
            out["witnesses"] = [w.to_json() for w in self.witnesses]
        return out


def compare(p: ParamWord, t: ParamWord) -> Verdict:
    cert = equivalence_certificate(p, t)
    if cert is not None:
        return Verdict(True, cert, True)
    assert not are_equivalent(p, t)
    shifts = aligning_shifts(p, t)
    if not shifts:
        return Verdict(False, None, False)
    sp = split_ratio(p)
    witnesses = []
    for k in shifts:
        tk = t
        for _ in range(k):
            tk = shift(tk)
        witnesses.append(RatioWitness(k, sp, split_ratio(tk)))
    return Verdict(False, None, True, tuple(witnesses))
