"""Independent reference implementations used only by the tests."""

from __future__ import annotations

from itertools import combinations, product

import numpy as np

from gflowkit.diagram import LabelledOpenGraph, MbqcDiagram, Plane
from gflowkit.gflow import GFlow
from gflowkit.oracle import effect

PLANES = (Plane.XY, Plane.XZ, Plane.YZ)


def all_open_graphs(max_n: int):
    """Yield ``(n, nbr_masks, in_mask, out_mask)`` for every labelled open graph on ``0..n-1``."""
    for n in range(1, max_n + 1):
        pairs = list(combinations(range(n), 2))
        for emask in range(1 << len(pairs)):
            nbr = [0] * n
            for k, (u, v) in enumerate(pairs):
                if emask >> k & 1:
                    nbr[u] |= 1 << v
                    nbr[v] |= 1 << u
            for im in range(1 << n):
                for om in range(1 << n):
                    yield n, nbr, im, om


def touches_boundary(n: int, nbr: list[int], boundary: int) -> bool:
    """True iff every connected component meets ``boundary``."""
    seen = 0
    for s in range(n):
        if seen >> s & 1:
            continue
        comp, frontier = 1 << s, 1 << s
        while frontier:
            nxt = 0
            for v in range(n):
                if frontier >> v & 1:
                    nxt |= nbr[v]
            frontier = nxt & ~comp
            comp |= nxt
        seen |= comp
        if not comp & boundary:
            return False
    return True


def feasible_plane_table(n: int, nbr: list[int], im: int, om: int) -> dict[tuple[int, int], int]:
    """For each non-output ``v`` and set ``E`` of vertices measured before it, a 3-bit mask of
    planes for which some correction set ``S`` (no inputs) keeps ``S`` and ``Odd(S)`` away from ``E``."""
    full = (1 << n) - 1
    non_in = full & ~im
    odd = {}
    s = non_in
    while True:
        o = 0
        for v in range(n):
            if s >> v & 1:
                o ^= nbr[v]
        odd[s] = o
        if s == 0:
            break
        s = (s - 1) & non_in
    non_out = [v for v in range(n) if not om >> v & 1]
    table = {}
    for v in non_out:
        bit = 1 << v
        others = [w for w in non_out if w != v]
        for r in range(len(others) + 1):
            for before in combinations(others, r):
                e = sum(1 << w for w in before)
                mask = 0
                for s_, o in odd.items():
                    if (s_ | o) & ~bit & e:
                        continue
                    in_s, in_o = bool(s_ & bit), bool(o & bit)
                    if not in_s and in_o:
                        mask |= 1
                    if in_s and in_o:
                        mask |= 2
                    if in_s and not in_o:
                        mask |= 4
                table[v, e] = mask
    return table


def gflow_exists_exhaustive(n: int, table: dict, om: int, planes: dict[int, Plane]) -> bool:
    """Search every measurement order (as prefix sets) with the per-vertex table."""
    non_out = [v for v in range(n) if not om >> v & 1]
    code = {Plane.XY: 1, Plane.XZ: 2, Plane.YZ: 4}
    reach = {0}
    for _ in non_out:
        nxt = set()
        for e in reach:
            for v in non_out:
                if not e >> v & 1 and table[v, e] & code[planes[v]]:
                    nxt.add(e | 1 << v)
        reach = nxt
    return bool(reach) or not non_out


def statevector_eval(d: MbqcDiagram) -> np.ndarray:
    """Dense map by explicit state-vector simulation, vertices processed in reverse id order.

    Independent of the einsum contraction in the library: it builds the full
    ``|V| + |I|`` qubit state, applies CZ phases as a diagonal, projects each
    measured vertex and finally applies the boundary Cliffords.
    """
    g = d.graph
    verts = sorted(g.vertices, reverse=True)
    ins = list(g.inputs)
    axes = verts + [("in", v) for v in ins]
    n = len(axes)
    state = np.zeros((2,) * n, dtype=complex)
    # inputs are Bell-paired with an input reference axis; others start in |+>
    for bits in product((0, 1), repeat=n):
        val = {a: b for a, b in zip(axes, bits)}
        amp = 1.0
        for v in ins:
            if val[v] != val[("in", v)]:
                amp = 0.0
        if amp == 0.0:
            continue
        sign = 1
        for u, w in g.edges():
            if val[u] and val[w]:
                sign = -sign
        state[bits] = sign
    # each non-input vertex starts in |+>, normalised
    state *= 2 ** (-(len(verts) - len(ins)) / 2)
    cur_axes = list(axes)
    for v in verts:
        if v in g.plane:
            e = effect(g.plane[v], g.angle[v].radians())
            k = cur_axes.index(v)
            state = np.tensordot(e, state, axes=([0], [k]))
            cur_axes.pop(k)
    perm = [cur_axes.index(v) for v in g.outputs] + [cur_axes.index(("in", v)) for v in ins]
    state = np.transpose(state, perm) if perm else state
    for k, v in enumerate(g.outputs):
        if v in d.output_clifford:
            m = d.output_clifford[v].matrix()
            state = np.moveaxis(np.tensordot(m, state, axes=([1], [k])), 0, k)
    nout = len(g.outputs)
    for k, v in enumerate(ins):
        if v in d.input_clifford:
            m = d.input_clifford[v].matrix()
            state = np.moveaxis(np.tensordot(state, m, axes=([nout + k], [0])), -1, nout + k)
    return state.reshape(2 ** nout, 2 ** len(ins))


def correctable(g: LabelledOpenGraph, v: int, allowed: set[int]) -> bool:
    """Some correction set inside ``allowed | {v}`` keeps ``v``'s side effects inside ``allowed``."""
    cands = sorted((allowed | {v}) - g.input_set())
    for bits in product((0, 1), repeat=len(cands)):
        s = {w for w, b in zip(cands, bits) if b}
        odd = g.odd_neighbourhood(s)
        if (s | odd) - {v} - allowed:
            continue
        p = g.plane[v]
        if p is Plane.XY and v not in s and v in odd:
            return True
        if p is Plane.XZ and v in s and v in odd:
            return True
        if p is Plane.YZ and v in s and v not in odd:
            return True
    return False


def is_layer_minimal(g: LabelledOpenGraph, f: GFlow) -> bool:
    """Every vertex sits in the earliest round in which it becomes correctable."""
    for v in g.non_outputs():
        d = f.depth[v]
        if not correctable(g, v, {w for w in g.vertices if f.depth[w] < d}):
            return False
        if d >= 2 and correctable(g, v, {w for w in g.vertices if f.depth[w] < d - 1}):
            return False
    return True
