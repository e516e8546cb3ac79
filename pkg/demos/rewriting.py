"""
Rewriting diagrams while keeping a gflow
========================================

Every rule returns a new diagram together with an updated gflow.  The dense
oracle confirms that each step keeps the linear map up to a scalar.
"""

import random

from gflowkit.circuit import Circuit, Gate, circuit_to_pattern
from gflowkit.gflow import find_gflow, verify_gflow
from gflowkit.oracle import equivalent_up_to_scalar, eval_diagram
from gflowkit.rewrite import (
    is_phase_gadget_form,
    lc_on_diagram,
    pivot_on_diagram,
    reduce_diagram,
    reduced_form_violations,
    remove_all_cliffords,
    to_phase_gadget_form,
)

rng = random.Random(1)
c = Circuit(2)
for _ in range(8):
    c.append(rng.choice([Gate.h(0), Gate.h(1), Gate.cz(0, 1), Gate.rz("1/4", 0), Gate.rz("1/2", 1)]))
d, f = circuit_to_pattern(c)
f = find_gflow(d.graph)
ref = eval_diagram(d)
print("start:", len(d.graph), "vertices")


def check(label, d2, f2):
    same = equivalent_up_to_scalar(ref, eval_diagram(d2))[0]
    print(f"{label:>14}: {len(d2.graph):2d} vertices, gflow {verify_gflow(d2.graph, f2)[0]}, same map {same}")


# local complementation at an internal vertex
u = next(v for v in d.graph.internal() if v not in d.graph.input_set())
d1, f1 = lc_on_diagram(d, f, u)
check("lc", d1, f1)

# pivot along an internal edge
edge = next((x, y) for x, y in d.graph.edges() if x in d.graph.plane and y in d.graph.plane
            and x not in d.graph.input_set() and y not in d.graph.input_set())
d2, f2 = pivot_on_diagram(d, f, *edge)
check("pivot", d2, f2)

d3, f3, trace = remove_all_cliffords(d, f)
check("no cliffords", d3, f3)
print("rules used:", sorted({entry["rule"] for entry in trace.entries}))

d4, f4 = to_phase_gadget_form(d3, f3)
check("phase gadgets", d4, f4)
print("phase-gadget form:", is_phase_gadget_form(d4))

d5, f5, _ = reduce_diagram(d, f)
check("reduced", d5, f5)
print("reduced-form violations:", reduced_form_violations(d5))
