"""
Finding and checking generalised flow
=====================================

A labelled open graph has a measurement plane on every non-output vertex.
find_gflow returns a maximally delayed gflow (or None), verify_gflow lists
every broken condition.
"""

from fractions import Fraction

from gflowkit import GFlow, LabelledOpenGraph, Plane, find_gflow, verify_gflow
from gflowkit.gflow import focus_gflow, is_focused, reverse_focused_gflow, reverse_graph

# vertices a..f are 0..5; a is the input, e and f are outputs
a, b, c, d, e, f = range(6)
g = LabelledOpenGraph(
    range(6),
    [(a, b), (b, c), (b, d), (b, e), (c, d), (c, f)],
    inputs=[a],
    outputs=[e, f],
    planes={a: Plane.XY, b: Plane.XY, c: Plane.XZ, d: Plane.YZ},
    angles={a: Fraction(1, 4), b: Fraction(1, 3), c: Fraction(3, 8), d: Fraction(5, 4)},
)

flow = find_gflow(g)
print("corrections:", flow.correction)
print("layers:", flow.layers())
print("valid:", verify_gflow(g, flow)[0])

# the odd neighbourhood of a correction set decides which vertices it flips
for v in (a, b, c, d):
    print(v, "g =", sorted(flow.correction[v]), "Odd =", sorted(g.odd_neighbourhood(flow.correction[v])))

# a hand-written candidate that gets the order wrong
bad = GFlow({a: {b}, b: {c}, c: {c, d}, d: {d, e, f}}, {a: 1, b: 2, c: 3, d: 4, e: 0, f: 0})
ok, violations = verify_gflow(g, bad)
for viol in violations:
    print("violation:", viol.vertex, viol.condition, viol.detail)

# focusing makes every correction set touch only outputs outside itself
focused = focus_gflow(g, flow)
print("focused:", is_focused(g, focused), focused.correction)

# a unitary pattern can be run backwards
line = LabelledOpenGraph(range(3), [(0, 1), (1, 2)], [0], [2])
lf = focus_gflow(line, find_gflow(line))
back = reverse_graph(line)
print("reversed inputs/outputs:", back.inputs, back.outputs)
print("reversed gflow valid:", verify_gflow(back, reverse_focused_gflow(line, lf))[0])

# the complete bipartite graph on two inputs and two outputs has no gflow
k22 = LabelledOpenGraph(range(4), [(0, 2), (0, 3), (1, 2), (1, 3)], [0, 1], [2, 3])
print("K22 gflow:", find_gflow(k22))
