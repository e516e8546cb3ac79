"""Brute-force dense semantics for diagrams and measurement branches.

Matrices have one row per output basis state and one column per input basis
state.  The first vertex of a boundary list is the most significant bit.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .diagram import MbqcDiagram, Plane

__all__ = [
    "OracleCapError",
    "MAX_DIAGRAM_VERTICES",
    "MAX_BRANCH_MEASUREMENTS",
    "effect",
    "eval_diagram",
    "equivalent_up_to_scalar",
    "phase_residual",
    "BranchReport",
    "run_branches",
]

MAX_DIAGRAM_VERTICES = 20
MAX_BRANCH_MEASUREMENTS = 12
MAX_BRANCH_AXES = 24

_CZ = np.array([[1, 1], [1, -1]], dtype=complex)
_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)
_PLUS = np.array([1, 1], dtype=complex) / np.sqrt(2)


class OracleCapError(ValueError):
    """A size cap of the dense oracle was exceeded."""


def effect(plane: Plane, theta: float, outcome: int = 0) -> np.ndarray:
    """Components ``(<e|0>, <e|1>)`` of the measurement effect for one outcome."""
    plane = Plane(plane)
    c, s = np.cos(theta / 2), np.sin(theta / 2)
    if plane is Plane.XY:
        ph = np.exp(-1j * theta)
        vec = [1, ph] if outcome == 0 else [1, -ph]
        return np.array(vec, dtype=complex) / np.sqrt(2)
    if plane is Plane.XZ:
        return np.array([c, s] if outcome == 0 else [s, -c], dtype=complex)
    return np.array([c, -1j * s] if outcome == 0 else [s, 1j * c], dtype=complex)


def _apply_out(t: np.ndarray, axis: int, mat: np.ndarray) -> np.ndarray:
    return np.moveaxis(np.tensordot(mat, t, axes=([1], [axis])), 0, axis)


def _apply_in(t: np.ndarray, axis: int, mat: np.ndarray) -> np.ndarray:
    return np.moveaxis(np.tensordot(t, mat, axes=([axis], [0])), -1, axis)


def _finish(d: MbqcDiagram, t: np.ndarray) -> np.ndarray:
    """Apply boundary Cliffords to a tensor with output axes then input axes."""
    g = d.graph
    nout = len(g.outputs)
    for k, v in enumerate(g.outputs):
        if v in d.output_clifford:
            t = _apply_out(t, k, d.output_clifford[v].matrix())
    for k, v in enumerate(g.inputs):
        if v in d.input_clifford:
            t = _apply_in(t, nout + k, d.input_clifford[v].matrix())
    return t.reshape(2 ** nout, 2 ** len(g.inputs))


def eval_diagram(d: MbqcDiagram, max_vertices: int = MAX_DIAGRAM_VERTICES) -> np.ndarray:
    """Dense linear map of ``d`` by contracting the graph-state tensor network.

    Inputs are identity wires, every other vertex starts in ``|+>``, each edge
    contributes a CZ, every non-output is closed with its outcome-0 effect, and
    finally the boundary Cliffords are applied.

    The contraction never forms the full state, so long thin diagrams (such
    as translated circuits) stay cheap; ``max_vertices`` lifts the default
    cap for them.
    """
    g = d.graph
    if len(g) > max_vertices:
        raise OracleCapError(f"diagram has {len(g)} vertices; the dense oracle cap is {max_vertices}")
    label = {v: i for i, v in enumerate(g.vertices)}
    nxt = len(label)
    inputs, outputs = g.input_set(), g.output_set()
    operands: list = []
    for v in g.vertices:
        if v not in outputs:
            operands += [effect(g.plane[v], g.angle[v].radians()), [label[v]]]
        elif v not in inputs:
            operands += [np.ones(2, dtype=complex), [label[v]]]
    for u, w in g.edges():
        operands += [_CZ, [label[u], label[w]]]
    in_label = {}
    for v in g.inputs:
        if v in outputs:
            in_label[v] = nxt
            operands += [np.eye(2, dtype=complex), [label[v], nxt]]
            nxt += 1
        else:
            in_label[v] = label[v]
    out_sub = [label[v] for v in g.outputs] + [in_label[v] for v in g.inputs]
    if operands:
        t = np.einsum(*operands, out_sub, optimize="greedy")
    else:
        t = np.ones((), dtype=complex)
    t = np.asarray(t, dtype=complex) * (1 / np.sqrt(2)) ** (len(g) - len(inputs))
    return _finish(d, t.reshape((2,) * len(out_sub)))


def equivalent_up_to_scalar(a: np.ndarray, b: np.ndarray, tol: float = 1e-8) -> tuple[bool, complex]:
    """Decide whether ``b = z a`` for a nonzero complex ``z``.

    ``z`` is read off the largest-magnitude entry of ``b``; the maps are
    equivalent when ``max|a - b / z| < tol * max|a|``.

    Returns
    -------
    (bool, complex)
        Verdict and the scalar ``z`` (``0`` when no candidate exists).
    """
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    amax = float(np.max(np.abs(a))) if a.size else 0.0
    bmax = float(np.max(np.abs(b))) if b.size else 0.0
    if bmax == 0.0:
        if amax == 0.0:
            return True, 1.0 + 0j
        raise ValueError("reference map is identically zero while the other is not")
    if amax == 0.0:
        return False, 0j
    k = np.unravel_index(int(np.argmax(np.abs(b))), b.shape)
    if a[k] == 0:
        return False, 0j
    z = complex(b[k] / a[k])
    return bool(np.max(np.abs(a - b / z)) < tol * amax), z


def phase_residual(a: np.ndarray, b: np.ndarray) -> float:
    """Elementwise max of ``|a - e^{i t} b|`` with ``t`` aligning ``b`` to ``a``."""
    inner = np.vdot(b, a)
    ph = inner / abs(inner) if abs(inner) > 1e-300 else 1.0
    return float(np.max(np.abs(a - ph * b))) if a.size else 0.0


@dataclass
class BranchReport:
    """Every outcome branch, with residuals against the all-zero branch.

    ``order`` lists the measured vertices in the order they are measured, and
    bit ``i`` of each outcome tuple belongs to ``order[i]``.
    """

    order: list[int]
    outcomes: list[tuple[int, ...]]
    maps: list[np.ndarray]
    residuals: list[float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals, default=0.0)

    def branch(self, outcome: dict[int, int]) -> np.ndarray:
        key = tuple(outcome.get(v, 0) for v in self.order)
        return self.maps[self.outcomes.index(key)]


def run_branches(d: MbqcDiagram, f) -> BranchReport:
    """Simulate every measurement branch of the corrected pattern.

    Vertices are measured deepest layer first (ties by id).  After an outcome
    of 1 at ``i``, X is applied on ``g(i) - {i}`` and Z on ``Odd(g(i)) - {i}``,
    skipping qubits that have already been measured.
    """
    g = d.graph
    order = sorted(g.non_outputs(), key=lambda v: (-f.depth[v], v))
    if len(order) > MAX_BRANCH_MEASUREMENTS:
        raise OracleCapError(
            f"{len(order)} measured vertices; the branch cap is {MAX_BRANCH_MEASUREMENTS}"
        )
    if len(g) + len(g.inputs) > MAX_BRANCH_AXES:
        raise OracleCapError(f"state would need more than {MAX_BRANCH_AXES} qubit axes")
    inputs = g.input_set()
    label = {v: i for i, v in enumerate(g.vertices)}
    nxt = len(label)
    operands: list = []
    for v in g.vertices:
        if v not in inputs:
            operands += [_PLUS, [label[v]]]
    for u, w in g.edges():
        operands += [_CZ, [label[u], label[w]]]
    in_labels = []
    for v in g.inputs:
        operands += [np.eye(2, dtype=complex), [label[v], nxt]]
        in_labels.append(nxt)
        nxt += 1
    sub = [label[v] for v in g.vertices] + in_labels
    state = np.asarray(np.einsum(*operands, sub, optimize="greedy"), dtype=complex)
    axes: list = list(g.vertices) + [("in", k) for k in range(len(g.inputs))]

    odd_sets = {v: g.odd_neighbourhood(f.correction[v]) - {v} for v in order}
    results: dict[tuple[int, ...], np.ndarray] = {}

    def recurse(t: np.ndarray, axes: list, step: int, bits: tuple[int, ...]) -> None:
        if step == len(order):
            perm = [axes.index(v) for v in g.outputs] + [axes.index(("in", k)) for k in range(len(g.inputs))]
            results[bits] = _finish(d, np.transpose(t, perm) if perm else t)
            return
        v = order[step]
        ax = axes.index(v)
        rest = axes[:ax] + axes[ax + 1 :]
        for s in (0, 1):
            e = effect(g.plane[v], g.angle[v].radians(), s)
            u = np.tensordot(e, t, axes=([0], [ax]))
            if s:
                for w in sorted(f.correction[v] - {v}):
                    if w in rest:
                        u = _apply_out(u, rest.index(w), _X)
                for w in sorted(odd_sets[v]):
                    if w in rest:
                        u = _apply_out(u, rest.index(w), _Z)
            recurse(u, rest, step + 1, bits + (s,))

    recurse(state, axes, 0, ())
    outcomes = sorted(results)
    maps = [results[k] for k in outcomes]
    ref = maps[0]
    return BranchReport(order, outcomes, maps, [phase_residual(ref, m) for m in maps])
