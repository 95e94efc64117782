"""Group a handful of words into conjugacy classes and explain the splits.

    python3 demos/conjugacy_classes.py
"""

from itertools import combinations

from agol import ParamWord, canonical_form, torus_cycle
from agol.conjugacy import compare

texts = ["1,1,2;2,1,1", "2,1,1;1,1,2", "1,2,1;1,1,2", "1,2,1;1,1,1", "2,1,1;0,2,1", "1,1,1;2,1,1"]
words = [ParamWord.parse(t) for t in texts]

classes: dict = {}
for w in words:
    classes.setdefault(canonical_form(w), []).append(str(w))
for rep, members in classes.items():
    d = torus_cycle(rep)
    print(f"class of {rep}: {members}  lambda = {d.dilatation}, l = {d.length}, N = {d.total}")

print()
for a, b in combinations(words, 2):
    v = compare(a, b)
    if v.equivalent:
        k, flipped = v.certificate
        why = f"T^{k}{' then flip' if flipped else ''}"
    elif v.profiles_match:
        w = v.witnesses[0]
        why = f"same dilatation, but split ratios {w.s_p} and {w.s_t}"
    else:
        why = "block profiles differ"
    print(f"{a}  vs  {b}: {'conjugate' if v.equivalent else 'not conjugate'} ({why})")
