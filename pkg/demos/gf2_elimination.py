"""
Gaussian elimination over GF(2) with a row-operation log
=========================================================

Rows are Python integers used as bit vectors.  The elimination records every
row addition, and replaying the log on another matrix applies the same
sequence of operations to it.
"""

from gflowkit.gf2 import GF2Matrix, eliminate, replay, solve

# a 4x5 frontier matrix; rows are strings, leftmost character is column 0
m = GF2Matrix.from_strings(["11000", "00110", "01110", "11011"])
reduced, log, rank = eliminate(m)
print("reduced:")
print("\n".join(reduced.to_strings()))
print("rank", rank)

# each entry (s, t) means "add row s to row t"
print("log", log)
assert replay(log, m) == reduced

# replaying on the identity gives the matrix of the whole sequence
ops = replay(log, GF2Matrix.identity(4))
print("accumulated row operations:")
print("\n".join(ops.to_strings()))

# solve A x = b; free variables come back as 0
a = GF2Matrix.from_strings(["110", "011"])
print("solution of x0+x1=1, x1+x2=0:", solve(a, [1, 0]))
print("inconsistent system:", solve(GF2Matrix.from_strings(["11", "11"]), [1, 0]))
