"""Watch maximal splittings close up into an Agol cycle.

The closed-form cycle is printed first, then the simulator splits the start
track step by step until it sees the start track again, shrunk by 1/lambda.

    python3 demos/agol_cycles.py sphere 1,2,1
"""

import sys

from agol import ParamWord, cycle, dilatation, normalized_eigenvector
from agol.tracksim import build_start_track, iso_measured, maximal_split

surface = sys.argv[1] if len(sys.argv) > 1 else "sphere"
word = ParamWord.parse(sys.argv[2] if len(sys.argv) > 2 else "1,2,1")

d = cycle(surface, word)
print(f"{surface} {word}: predicted {d.split_word} (length {d.length}, N = {d.total})")

lam = dilatation(word)
start = build_start_track(surface, [lam * x for x in normalized_eigenvector(word)])
print(f"start track: {start.n_switches} switches, {start.n_branches} branches, "
      f"genus/punctures {start.topology()}")

track = start
for step in range(4 * d.length):
    track, rec = maximal_split(track, step)
    print(f"  {step + 1:3d}  {rec.type}  x{rec.splitting_number}  max weight ~{float(rec.max_weight):.6f}")
    scale = iso_measured(start, track)
    if scale is not None and scale == 1 / lam:
        print(f"back to the start track after {step + 1} steps, scaled by {scale}")
        break
