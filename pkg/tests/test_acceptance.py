"""Acceptance criteria, one test each.

Every test prints a single PASS/FAIL line.  Run standalone with
``python3 tests/test_acceptance.py`` for the same lines without pytest.
"""

from __future__ import annotations

import random
import sys
import time
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from agol.cfrac import dilatation, normalized_eigenvector, rectangle_data, split_ratio
from agol.conjugacy import compare
from agol.cycles import Surface, check_additivity, cycle, sphere_cycle, torus_cycle
from agol.matrices import compare_13, verify_eigenpair
from agol.oracle import simulate, verify
from agol.quad import Ordering, QuadExt, cmp
from agol.tracksim import run
from agol.words import (
    ParamWord,
    are_equivalent,
    canonical_form,
    concatenate,
    flip,
    is_symmetric,
    shift,
)

from conftest import random_word, word_corpus

W = ParamWord.parse
TORUS, SPHERE = Surface.TORUS, Surface.SPHERE

TORUS_EXAMPLES = {"1,1,1": (3, 6, "RLL"), "1,2,1": (6, 7, "RRRLLL")}
SPHERE_EXAMPLES = {"1,2,1": (8, 9, "RLRLLRLL"), "1,0,1;0,1,1": (10, 12, "MRLLLMRLLL")}


@lru_cache(maxsize=None)
def simulated(surface: Surface, text: str):
    return simulate(surface, W(text))


def oracle_corpus() -> list[ParamWord]:
    words = [W(t) for t in list(TORUS_EXAMPLES) + list(SPHERE_EXAMPLES)]
    return words + word_corpus(seed=2025, count=100, max_n=3, max_entry=3)


# -- criteria -----------------------------------------------------------------

def criterion_1():
    rd = rectangle_data(W("1,0,1;0,1,1"))
    lam_ok = rd.dilatation == QuadExt(7, 3, 2, 5)
    h_ok = rd.heights[0] == QuadExt(-1, 1, 2, 5)
    return lam_ok and h_ok, f"lambda = {rd.dilatation}, h0 = {rd.heights[0]}"


def criterion_2():
    fixed = [W("1,1,1"), W("1,2,1"), W("1,0,1;0,1,1")]
    corpus = fixed + word_corpus(seed=7, count=200, max_n=4, max_entry=3)
    bad = [str(w) for w in corpus if not verify_eigenpair(w)]
    return not bad, f"{len(corpus) - len(bad)}/{len(corpus)} eigenpairs exact" + (f"; failed {bad[:3]}" if bad else "")


def _regression(surface, table):
    problems = []
    for text, (length, total, word) in table.items():
        d = cycle(surface, W(text))
        s = simulated(surface, text)
        for route, got in (("closed form", (d.length, d.total, str(d.split_word))),
                           ("simulator", (s.length, s.total, s.split_word))):
            if got != (length, total, word):
                problems.append(f"{text} {route} gave {got}")
    return problems


def criterion_3():
    problems = _regression(TORUS, TORUS_EXAMPLES)
    numbers = [r.splitting_number for r in simulated(TORUS, "1,1,1").records]
    if numbers != [2, 2, 2]:
        problems.append(f"(1,1,1) splitting numbers {numbers}")
    return not problems, "; ".join(problems) or "RLL (N=6, all steps 2) and RRRLLL (N=7) on both routes"


def criterion_4():
    problems = _regression(SPHERE, SPHERE_EXAMPLES)
    return not problems, "; ".join(problems) or "RLRLLRLL (N=9) and MRLLLMRLLL (N=12) on both routes"


def criterion_5():
    t0 = time.perf_counter()
    failures = []
    count = 0
    for w in oracle_corpus():
        for surface in Surface:
            checks, _, _ = verify(surface, w)
            count += 1
            bad = [c.name for c in checks if not c.ok]
            if bad:
                failures.append(f"{surface.value} {w}: {bad}")
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 60
    detail = f"{count - len(failures)}/{count} runs agree in {elapsed:.1f}s"
    if failures:
        detail += f"; e.g. {failures[:2]}"
    return ok, detail


def criterion_6():
    rng = random.Random(99)
    pairs = [(random_word(rng, 2, 3), random_word(rng, 2, 3)) for _ in range(100)]
    closed = sum(check_additivity(p, t) for p, t in pairs)
    # second route: totals realized by the simulator
    sim_good = 0
    for p, t in pairs:
        good = True
        for surface in Surface:
            n = [simulate(surface, w).total for w in (p, t, concatenate(p, t))]
            good &= n[2] == n[0] + n[1]
        sim_good += good
    ok = closed == len(pairs) and sim_good == len(pairs)
    return ok, f"closed form {closed}/100 pairs, simulator {sim_good}/100 pairs, both surfaces"


def _conjugacy_corpus() -> list[ParamWord]:
    rng = random.Random(314)
    base = [random_word(rng, 3, 3) for _ in range(120)]
    extra = []
    while len(extra) < 80:
        w = rng.choice(base)
        for _ in range(rng.randrange(w.n)):
            w = shift(w)
        if rng.random() < 0.5:
            w = flip(w)
        extra.append(w)
    return base + extra


def _same_profile_variant(w: ParamWord, rng: random.Random) -> ParamWord | None:
    triples = []
    for p, pp, q in w.triples:
        s = p + pp
        a = rng.randint(0, s)
        triples.append((a, s - a, q))
    try:
        return ParamWord(tuple(triples))
    except ValueError:
        return None


def criterion_7():
    corpus = _conjugacy_corpus()
    inv = {}
    for w in corpus:
        if w not in inv:
            tc, sc = torus_cycle(w), sphere_cycle(w)
            inv[w] = (tc.dilatation, tc.length, tc.total, sc.length, sc.total, canonical_form(w))
    disagreements = 0
    positives = 0
    for i, a in enumerate(corpus):
        for b in corpus[i + 1:]:
            eq = are_equivalent(a, b)
            positives += eq
            if eq != (inv[a] == inv[b]):
                disagreements += 1
    problems = []
    if disagreements:
        problems.append(f"{disagreements} pair disagreements")
    if not compare(W("1,1,2;2,1,1"), W("2,1,1;1,1,2")).equivalent:
        problems.append("shift pair not equivalent")
    if not all(compare(w, flip(w)).equivalent for w in corpus):
        problems.append("a flip pair not equivalent")
    rng = random.Random(27)
    separated = 0
    for w in corpus:
        t = _same_profile_variant(w, rng)
        if t is None or are_equivalent(w, t):
            continue
        v = compare(w, t)
        if v.equivalent or not v.profiles_match or not v.separated_by_ratios:
            problems.append(f"{w} vs {t} lacks a ratio certificate")
            continue
        separated += 1
    if separated < 20:
        problems.append(f"only {separated} same-profile pairs exercised")
    detail = (f"{len(corpus)} words, {positives} equivalent pairs, "
              f"{separated} same-profile pairs separated by exact split ratios")
    return not problems, "; ".join(problems) or detail


def _quad_samples(rng, count):
    out = []
    for _ in range(count):
        d = rng.choice([2, 3, 5, 21])
        out.append(tuple(QuadExt(rng.randint(-40, 40), rng.randint(-40, 40), rng.randint(1, 25), d)
                         for _ in range(3)))
    return out


def _check_quad(x, y, z) -> bool:
    try:
        ring = (x + y == y + x and x * y == y * x and (x + y) + z == x + (y + z)
                and (x * y) * z == x * (y * z) and x * (y + z) == x * y + x * z
                and x - x == 0 and (not x or x * (1 / x) == 1))
        fx, fy = x.to_decimal(40), y.to_decimal(40)
        order = cmp(x, y) == Ordering((fx > fy) - (fx < fy))
        total = (x <= y or y <= x) and (not (x <= y <= z) or x <= z)
        monotone = not x < y or (x + z < y + z and (z <= 0 or x * z < y * z))
        return ring and order and total and monotone
    except ArithmeticError:
        return False


def criterion_8():
    rng = random.Random(8)
    problems = []

    quad_ok = sum(_check_quad(*s) for s in _quad_samples(rng, 1000))
    if quad_ok != 1000:
        problems.append(f"quad {quad_ok}/1000")

    steps = 0
    for w in oracle_corpus():
        for surface in Surface:
            sim = simulate(surface, w)
            start = sim.start
            faces, chi = len(start.faces()), start.euler_characteristic()
            for after, _ in run(start, sim.length, check=False):
                steps += 1
                if after.switch_defects() or len(after.faces()) != faces \
                        or after.euler_characteristic() != chi or any(x <= 0 for x in after.weights):
                    problems.append(f"invariant broken in {surface.value} {w}")
                    break

    samples = word_corpus(seed=500, count=500, max_n=3, max_entry=4)
    flip_bad = sum(split_ratio(w) + split_ratio(flip(w)) != 1 for w in samples)
    lex_bad = 0
    for w in samples:
        t = _same_profile_variant(w, rng)
        if t is None:
            continue
        pw, pt = [x[0] for x in w.triples], [x[0] for x in t.triples]
        sw, st = split_ratio(w), split_ratio(t)
        if dilatation(w) != dilatation(t) or (pw < pt) != (sw < st) or (pw == pt) != (sw == st):
            lex_bad += 1
    sym_bad = sum((v[0] == v[2]) != is_symmetric(w)
                  for w in samples for v in [normalized_eigenvector(w)])
    compare_bad = 0
    for _ in range(500):
        p, pp, q = rng.randint(0, 4), rng.randint(0, 4), rng.randint(1, 4)
        x = [QuadExt.coerce(Fraction(rng.randint(1, 60), rng.randint(1, 9))) for _ in range(3)]
        got = compare_13(p, pp, q, x)
        if p == pp:
            want = cmp(x[0], x[2])
        else:
            want = Ordering.GT if p > pp else Ordering.LT
        compare_bad += got != want
    for name, bad in (("flip ratio", flip_bad), ("lex order", lex_bad),
                      ("outer coordinates", sym_bad), ("coordinate comparison", compare_bad)):
        if bad:
            problems.append(f"{name}: {bad} failures")
    detail = f"1000 quad samples, {steps} simulator steps, 4 x 500 predicate samples"
    return not problems, "; ".join(problems) or detail


CRITERIA = [
    (1, "dilatation exactness", criterion_1),
    (2, "eigenpair exactness", criterion_2),
    (3, "torus cycle regression", criterion_3),
    (4, "sphere cycle regression", criterion_4),
    (5, "oracle agreement", criterion_5),
    (6, "additivity", criterion_6),
    (7, "conjugacy", criterion_7),
    (8, "property suites", criterion_8),
]


def _line(num, name, ok, detail):
    return f"[{'PASS' if ok else 'FAIL'}] criterion {num} ({name}): {detail}"


def _run(num, report):
    _, name, fn = CRITERIA[num - 1]
    ok, detail = fn()
    report(_line(num, name, ok, detail))
    assert ok, detail


def test_criterion_1_dilatation_exactness(report):
    _run(1, report)


def test_criterion_2_eigenpair_exactness(report):
    _run(2, report)


def test_criterion_3_torus_cycles(report):
    _run(3, report)


def test_criterion_4_sphere_cycles(report):
    _run(4, report)


def test_criterion_5_oracle_agreement(report):
    _run(5, report)


def test_criterion_6_additivity(report):
    _run(6, report)


def test_criterion_7_conjugacy(report):
    _run(7, report)


def test_criterion_8_property_suites(report):
    _run(8, report)


if __name__ == "__main__":
    failed = 0
    for num, name, fn in CRITERIA:
        ok, detail = fn()
        failed += not ok
        print(_line(num, name, ok, detail))
    sys.exit(1 if failed else 0)
