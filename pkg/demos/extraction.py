"""
Extracting circuits from diagrams
=================================

Any unitary diagram with gflow can be turned back into a circuit without
ancillas.  Simplifying first usually shrinks the result.
"""

import random

from gflowkit.circuit import Circuit, Gate, circuit_to_pattern, eval_circuit
from gflowkit.extract import ExtractionStats, extract_circuit, permutation_to_swaps
from gflowkit.gflow import find_gflow
from gflowkit.oracle import equivalent_up_to_scalar
from gflowkit.rewrite import reduce_diagram

rng = random.Random(7)
c = Circuit(3)
for _ in range(20):
    k = rng.choice(["h", "cz", "cnot", "rz"])
    if k == "h":
        c.append(Gate.h(rng.randrange(3)))
    elif k == "rz":
        c.append(Gate.rz(rng.choice(["1/4", "1/2", "3/4", "1"]), rng.randrange(3)))
    else:
        c.append(Gate(k, tuple(rng.sample(range(3), 2))))

d, _ = circuit_to_pattern(c)
f = find_gflow(d.graph)
print("pattern vertices:", len(d.graph))

plain = extract_circuit(d, f)
rd, rf, _ = reduce_diagram(d, f)
print("reduced vertices:", len(rd.graph))
stats = ExtractionStats()
small = extract_circuit(rd, rf, stats)
print(stats)

for name, e in (("original", c), ("extracted", plain), ("reduce+extract", small)):
    same = equivalent_up_to_scalar(eval_circuit(c), eval_circuit(e))[0]
    print(f"{name:>15}: {len(e):3d} gates, T count {e.t_count()}, 2-qubit {e.count('cz') + e.count('cnot')}, same {same}")

# the final wire permutation becomes a SWAP network
print(permutation_to_swaps([2, 0, 1]))
