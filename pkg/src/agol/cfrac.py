"""Periodic continued fractions and the partitioned-rectangle recursion.

For a word ``p`` the rectangle of width 1 and height
``h_0 = [0; overline(p_n+p_n', q_n, ..., p_1+p_1', q_1)]`` is cut into
squares block by block.  Peeling one block gives the next width and height

    w_j = w_{j-1} - (p + p') * h_{j-1},    h_j = h_{j-1} - q * w_j,

and after ``n`` blocks the dilatation is ``1 / w_n``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidCF
from .quad import QuadExt, qsqrt
from .words import ParamWord

__all__ = [
    "PeriodicCF",
    "RectangleData",
    "eval_periodic_cf",
    "convergent_matrix",
    "height_cf",
    "rectangle_data",
    "split_ratio",
    "split_ratio_series",
    "normalized_eigenvector",
    "dilatation",
]


@dataclass(frozen=True)
class PeriodicCF:
    """``[a_0; a_1, ..., overline(b_0, ..., b_{t-1})]``."""

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "preperiod", tuple(self.preperiod))
        object.__setattr__(self, "period", tuple(self.period))
        if not self.period:
            raise InvalidCF("period must be nonempty")
        if any(b < 1 for b in self.period):
            raise InvalidCF(f"nonpositive period entry in {self.period}")
        if any(a < 1 for a in self.preperiod[1:]):
            raise InvalidCF(f"nonpositive preperiod entry in {self.preperiod}")

    def terms(self, count: int) -> list[int]:
        out = list(self.preperiod)
        i = 0
        while len(out) < count:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out[:count]


def convergent_matrix(entries) -> tuple[tuple[int, int], tuple[int, int]]:
    """Product of ``[[a, 1], [1, 0]]`` over ``entries``; it maps the tail
    ``t`` to ``[a_0; ..., a_k, t] = (P t + P') / (Q t + Q')``."""
    P, Pp, Q, Qp = 1, 0, 0, 1
    for a in entries:
        P, Pp, Q, Qp = a * P + Pp, P, a * Q + Qp, Q
    return (P, Pp), (Q, Qp)


def _purely_periodic(period: tuple[int, ...]) -> QuadExt:
    (P, Pp), (Q, Qp) = convergent_matrix(period)
    # fixed point of t -> (P t + P') / (Q t + Q'):  Q t^2 + (Q' - P) t - P' = 0
    disc = (Qp - P) ** 2 + 4 * Q * Pp
    root = qsqrt(disc)
    r_plus = (QuadExt(P - Qp) + root) / (2 * Q)
    r_minus = (QuadExt(P - Qp) - root) / (2 * Q)
    lo, hi = period[0], period[0] + 1
    inside = lambda r: lo < r < hi
    if not inside(r_plus) or inside(r_minus):
        raise AssertionError(f"root selection failed for period {period}")
    return r_plus


def eval_periodic_cf(cf: PeriodicCF) -> QuadExt:
    """Exact value of an eventually periodic continued fraction."""
    value = _purely_periodic(cf.period)
    for a in reversed(cf.preperiod):
        value = a + 1 / value
    return value


def height_cf(p: ParamWord) -> PeriodicCF:
    period: list[int] = []
    for pi, ppi, qi in p.triples:
        period += [pi + ppi, qi]
    return PeriodicCF((0,), tuple(period))


@dataclass(frozen=True)
class RectangleData:
    heights: tuple[QuadExt, ...]
    widths: tuple[QuadExt, ...]
    split_ratio: QuadExt
    dilatation: QuadExt

    def to_json(self) -> dict:
        return {
            "heights": [str(h) for h in self.heights],
            "widths": [str(w) for w in self.widths],
            "split_ratio": str(self.split_ratio),
            "dilatation": str(self.dilatation),
        }


def _heights_widths(p: ParamWord) -> tuple[list[QuadExt], list[QuadExt]]:
    h = [eval_periodic_cf(height_cf(p))]
    w = [QuadExt(1)]
    # triples are stored as (p_n, p_n', q_n), ..., so block j uses index j-1
    for pi, ppi, qi in p.triples:
        w.append(w[-1] - (pi + ppi) * h[-1])
        h.append(h[-1] - qi * w[-1])
    return h, w


def _ratio(p: ParamWord, h: list[QuadExt]) -> QuadExt:
    num = sum((pi * h[j] for j, (pi, _, _) in enumerate(p.triples)), QuadExt(0))
    den = sum((((pi + ppi) * h[j]) for j, (pi, ppi, _) in enumerate(p.triples)), QuadExt(0))
    return num / den


def rectangle_data(p: ParamWord) -> RectangleData:
    h, w = _heights_widths(p)
    return RectangleData(tuple(h), tuple(w), _ratio(p, h), 1 / w[-1])


def split_ratio(p: ParamWord) -> QuadExt:
    h, _ = _heights_widths(p)
    return _ratio(p, h)


def dilatation(p: ParamWord) -> QuadExt:
    return rectangle_data(p).dilatation


def normalized_eigenvector(p: ParamWord) -> tuple[QuadExt, QuadExt, QuadExt]:
    """``(s_p, h_0, 1 - s_p)``."""
    h, _ = _heights_widths(p)
    s = _ratio(p, h)
    return (s, h[0], 1 - s)


def split_ratio_series(p: ParamWord, terms: int) -> QuadExt:
    """Partial sum ``sum_{i < terms} p_{-i} h_i`` of the left-hand square widths.

    Exact; the tail after ``terms`` squares is ``O(lambda^(-terms / n))``.
    """
    h = eval_periodic_cf(height_cf(p))
    w = QuadExt(1)
    total = QuadExt(0)
    n = p.n
    for j in range(terms):
        pi, ppi, qi = p.triples[j % n]
        total += pi * h
        w = w - (pi + ppi) * h
        h = h - qi * w
    return total
