"""
From circuits to measurement patterns
=====================================

Circuits use a small text format.  circuit_to_pattern turns one into a
diagram of XY-measured vertices with a causal flow.
"""

import numpy as np

from gflowkit.circuit import circuit_to_pattern, eval_circuit, parse_circuit, print_circuit
from gflowkit.gflow import find_causal_flow, verify_gflow
from gflowkit.oracle import equivalent_up_to_scalar, eval_diagram

text = """
# a small three-qubit program
qubits 3
h q0
cnot q0 q1
rz(1/4) q1
cz q1 q2
rx(3/4) q2
"""
c = parse_circuit(text)
print(print_circuit(c), end="")
print("gates", len(c), "T count", c.t_count())

u = eval_circuit(c)
print("unitary:", np.allclose(u.conj().T @ u, np.eye(8)))

d, flow = circuit_to_pattern(c)
g = d.graph
print("pattern:", len(g), "vertices,", g.num_edges(), "edges")
print("inputs", g.inputs, "outputs", g.outputs)
print("gflow valid:", verify_gflow(g, flow)[0])
print("causal flow:", find_causal_flow(g) is not None)
ok, z = equivalent_up_to_scalar(u, eval_diagram(d, max_vertices=len(g)))
print("pattern implements the circuit:", ok, "scalar", np.round(z, 6))

# errors name the offending line
try:
    parse_circuit("h q0\nrz(0.25) q1\n")
except ValueError as exc:
    print("error:", exc)
