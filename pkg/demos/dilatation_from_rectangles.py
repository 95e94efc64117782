"""Dilatation of a braid word three ways: squares, matrices, and floats.

    python3 demos/dilatation_from_rectangles.py 1,0,1;0,1,1
"""

import sys

import numpy as np

from agol import ParamWord, normalized_eigenvector, rectangle_data, word_matrix
from agol.matrices import char_poly, matvec

word = ParamWord.parse(sys.argv[1] if len(sys.argv) > 1 else "1,0,1;0,1,1")
print(f"word {word}")

# Cut the 1 x h0 rectangle into squares, one block at a time.
rd = rectangle_data(word)
for j, (h, w) in enumerate(zip(rd.heights, rd.widths)):
    print(f"  step {j}: height {h}, width {w}")
lam = rd.dilatation
print(f"lambda = 1/w_n = {lam}  (~{float(lam):.10f})")

# The same number is the Perron-Frobenius root of the word's transition matrix.
M = word_matrix(word)
v = normalized_eigenvector(word)
print(f"M = {M}")
print(f"char poly coefficients {char_poly(M)}")
print("M v == lambda v:", matvec(M, v) == tuple(lam * x for x in v))

# And a floating-point sanity check.
print("numpy spectral radius:", max(abs(np.linalg.eigvals(np.array(M, dtype=float)))))
