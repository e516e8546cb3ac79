"""
Determinism of measurement patterns
===================================

run_branches evaluates a pattern for every combination of measurement
outcomes, applying the corrections prescribed by a gflow, and reports how
far each branch is from the all-zero one.
"""

from fractions import Fraction

from gflowkit import GFlow, LabelledOpenGraph, MbqcDiagram, Plane, find_gflow
from gflowkit.oracle import eval_diagram, run_branches

a, b, c, d, e, f = range(6)
g = LabelledOpenGraph(
    range(6),
    [(a, b), (b, c), (b, d), (b, e), (c, d), (c, f)],
    inputs=[a],
    outputs=[e, f],
    planes={a: Plane.XY, b: Plane.XY, c: Plane.XZ, d: Plane.YZ},
    angles={a: Fraction(1, 4), b: Fraction(1, 3), c: Fraction(3, 8), d: Fraction(5, 4)},
)
diagram = MbqcDiagram(g)
print("map shape:", eval_diagram(diagram).shape)

report = run_branches(diagram, find_gflow(g))
print("measurement order:", report.order)
print("branches:", len(report.outcomes), "max residual:", report.max_residual)

# a correction set that flips the wrong vertices breaks determinism
wrong = GFlow({a: {b}, b: {c}, c: {d}, d: {d, e, f}}, {a: 4, b: 3, c: 2, d: 1, e: 0, f: 0})
bad = run_branches(diagram, wrong)
print("with a broken correction, max residual:", round(bad.max_residual, 3))
