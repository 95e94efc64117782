"""``agol`` command line.

Words are written ``p,p',q;p,p',q;...`` with the leftmost triple applied last
as a map.  ``--reverse`` reads the triples in the opposite order.
"""

from __future__ import annotations

import argparse
import json
import sys
from decimal import ROUND_HALF_EVEN, Decimal

from . import __version__
from .cfrac import dilatation, normalized_eigenvector
from .conjugacy import compare
from .cycles import Surface, cycle, sphere_cycle, torus_cycle
from .errors import AgolError, DegenerateSplit, EncodingError, NoCycleFound, NotInIn
from .oracle import simulate, verify
from .quad import QuadExt
from .tracksim import run, trace_lines
from .words import ParamWord, canonical_form, is_symmetric

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_SIMULATION = 3
EXIT_ENCODING = 4

_APPROX_DIGITS = 12


def approx(x: QuadExt, digits: int = _APPROX_DIGITS) -> str:
    q = Decimal(1).scaleb(-digits)
    return str(x.to_decimal(digits + 5).quantize(q, rounding=ROUND_HALF_EVEN))


def poly_text(coeffs, var: str = "t") -> str:
    """Render integer coefficients (highest degree first) as a polynomial."""
    deg = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        e = deg - i
        mag = abs(c)
        body = "" if (mag == 1 and e) else str(mag)
        if e >= 1:
            body += var + (f"^{e}" if e > 1 else "")
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def _emit(obj, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(obj, ensure_ascii=False))
    else:
        for line in lines:
            print(line)


def _word(args, text: str) -> ParamWord:
    return ParamWord.parse(text, reverse=args.reverse)


# -- subcommands --------------------------------------------------------------

def cmd_dilatation(args) -> int:
    w = _word(args, args.word)
    lam = dilatation(w)
    poly = lam.minimal_polynomial()
    report = {
        "word": str(w),
        "dilatation": str(lam),
        "minimal_polynomial": list(poly),
        "approx": approx(lam),
    }
    _emit(report, args.json, [
        f"lambda   = {lam}",
        f"min poly = {poly_text(poly)}",
        f"approx   ~ {approx(lam)}  (approximate)",
    ])
    return EXIT_OK


def cmd_eigenvector(args) -> int:
    w = _word(args, args.word)
    v = normalized_eigenvector(w)
    report = {"word": str(w), "eigenvector": [str(x) for x in v],
              "approx": [approx(x) for x in v]}
    lines = [f"v{i + 1} = {x}  ~ {approx(x)}" for i, x in enumerate(v)]
    _emit(report, args.json, lines)
    return EXIT_OK


def cmd_cycle(args) -> int:
    w = _word(args, args.word)
    d = cycle(Surface.parse(args.surface), w)
    _emit(d.to_json(), args.json, [
        f"surface     {d.surface.value}",
        f"word        {d.word}",
        f"length      {d.length}",
        f"total       {d.total}",
        f"split word  {d.split_word}",
        f"dilatation  {d.dilatation}",
        "eigenvector " + ", ".join(str(x) for x in d.eigenvector),
    ])
    return EXIT_OK


def cmd_simulate(args) -> int:
    w = _word(args, args.word)
    sim = simulate(args.surface, w, args.max_steps)
    if args.trace:
        # replay the cycle so each line can carry the resulting track
        for line in trace_lines(run(sim.start, sim.length), snapshots=args.snapshots):
            print(line)
    report = sim.to_json()
    report["splitting_numbers"] = [r.splitting_number for r in sim.records]
    _emit(report, args.json, [
        f"steps       {' '.join(f'{r.type}{r.splitting_number}' for r in sim.records)}",
        f"cycle m     {sim.length}",
        f"split word  {sim.split_word}",
        f"total N     {sim.total}",
        f"scale       {sim.scale}",
    ])
    return EXIT_OK


def cmd_conjugate(args) -> int:
    p, t = _word(args, args.word1), _word(args, args.word2)
    v = compare(p, t)
    lines = [f"equivalent  {'yes' if v.equivalent else 'no'}"]
    if v.certificate is not None:
        k, flipped = v.certificate
        lines.append(f"certificate T^{k}(p) = {'f(t)' if flipped else 't'}")
    elif not v.profiles_match:
        lines.append("reason      block profiles (p+p', q) differ up to shift")
    else:
        for wit in v.witnesses:
            lines.append(
                f"shift {wit.shift}: s_p = {wit.s_p}, s_t = {wit.s_t}, "
                f"s_p != s_t: {wit.distinct}, s_p + s_t != 1: {wit.not_complementary}"
            )
    _emit(v.to_json(), args.json, lines)
    return EXIT_OK


def cmd_canonical(args) -> int:
    w = _word(args, args.word)
    c = canonical_form(w)
    _emit({"word": str(w), "canonical": str(c)}, args.json, [str(c)])
    return EXIT_OK


def cmd_verify(args) -> int:
    w = _word(args, args.word)
    checks, _, _ = verify(args.surface, w, args.max_steps)
    ok = all(c.ok for c in checks)
    report = {"surface": args.surface, "word": str(w), "pass": ok,
              "checks": [{"name": c.name, "pass": c.ok, "detail": c.detail} for c in checks]}
    lines = [f"{'PASS' if c.ok else 'FAIL'}  {c.name:<10} {c.detail}" for c in checks]
    lines.append("PASS" if ok else "FAIL")
    _emit(report, args.json, lines)
    return EXIT_OK if ok else EXIT_MISMATCH


BATCH_COLUMNS = ("canonical", "dilatation", "l_torus", "N_torus", "l_sphere", "N_sphere", "symmetric")


def batch_row(w: ParamWord) -> dict:
    tc, sc = torus_cycle(w), sphere_cycle(w)
    return {
        "canonical": str(canonical_form(w)),
        "dilatation": str(tc.dilatation),
        "l_torus": tc.length,
        "N_torus": tc.total,
        "l_sphere": sc.length,
        "N_sphere": sc.total,
        "symmetric": is_symmetric(w),
    }


def cmd_batch(args) -> int:
    try:
        with open(args.file, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    rows, errors = [], []
    for lineno, text in enumerate(lines, 1):
        if not text.strip() or text.lstrip().startswith("#"):
            continue
        try:
            rows.append(batch_row(_word(args, text)))
        except (NotInIn, ValueError) as exc:
            errors.append({"line": lineno, "text": text, "error": str(exc)})
            print(f"line {lineno}: {exc}", file=sys.stderr)
    if args.json:
        print(json.dumps({"rows": rows, "errors": errors}, ensure_ascii=False))
    else:
        print("\t".join(BATCH_COLUMNS))
        for r in rows:
            print("\t".join(str(r[c]).lower() if isinstance(r[c], bool) else str(r[c])
                            for c in BATCH_COLUMNS))
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--reverse", action="store_true",
                        help="read triples as (p_1,p_1',q_1);...;(p_n,p_n',q_n)")

    parser = argparse.ArgumentParser(
        prog="agol",
        description="Dilatations and Agol cycles of the torus and sphere braid families.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    def surface(p):
        p.add_argument("surface", choices=[s.value for s in Surface])

    p = add("dilatation", cmd_dilatation, "exact dilatation and minimal polynomial")
    p.add_argument("word")
    p = add("eigenvector", cmd_eigenvector, "normalized eigenvector (s, h0, 1 - s)")
    p.add_argument("word")
    p = add("cycle", cmd_cycle, "closed-form Agol cycle")
    surface(p)
    p.add_argument("word")
    p = add("simulate", cmd_simulate, "run maximal splittings until the cycle closes")
    surface(p)
    p.add_argument("word")
    p.add_argument("--max-steps", type=int, default=None,
                   help="step budget (default: four times the closed-form length)")
    p.add_argument("--trace", action="store_true", help="print one JSON line per step")
    p.add_argument("--snapshots", action="store_true", help="include tracks in --trace lines")
    p = add("conjugate", cmd_conjugate, "decide whether two words give conjugate maps")
    p.add_argument("word1")
    p.add_argument("word2")
    p = add("canonical", cmd_canonical, "lexicographically least word under shift and flip")
    p.add_argument("word")
    p = add("verify", cmd_verify, "compare closed forms with the simulator")
    surface(p)
    p.add_argument("word")
    p.add_argument("--max-steps", type=int, default=None)
    p = add("batch", cmd_batch, "invariant table for a file of words, one per line")
    p.add_argument("file")
    return parser


def main(argv=None) -> int:
    if hasattr(sys.stdout, "reconfigure"):
        sys.stdout.reconfigure(encoding="utf-8")
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NotInIn as exc:
        print(f"error: invalid word: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EncodingError as exc:
        print(f"error: track encoding: {exc}", file=sys.stderr)
        return EXIT_ENCODING
    except (NoCycleFound, DegenerateSplit) as exc:
        print(f"error: simulation: {exc}", file=sys.stderr)
        return EXIT_SIMULATION
    except (AgolError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
