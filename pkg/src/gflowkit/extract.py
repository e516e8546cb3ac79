"""Ancilla-free circuit extraction from diagrams with gflow.

Extraction peels gates off the output side.  The outputs of the residual
diagram form the frontier; qubit ``q`` of the circuit ends on
``graph.outputs[q]``.  Each round:

1. output Cliffords become single-qubit gates and edges between outputs
   become CZs; a frontier vertex that is also an input but still has
   measured neighbours gets a fresh input vertex in front of it;
2. the biadjacency matrix between the frontier and its measured neighbours is Gauss-reduced, every row operation being emitted as a CNOT;
3. every frontier vertex left with a single XY neighbour ``v`` is replaced by
   ``v``, emitting ``H`` and a Z phase;
4. if nothing could be extracted, each YZ vertex next to the frontier is
   pivoted with a frontier neighbour, which turns it into an XY vertex.

When only the frontier is left it is a permutation of the inputs; input
Cliffords and a SWAP network finish the circuit.  Gates are collected in
reverse and flipped once at the end.
"""

from __future__ import annotations

from .circuit import Circuit, Gate
from .clifford import LocalClifford
from .diagram import MbqcDiagram, Plane
from .gf2 import GF2Matrix, eliminate
from .gflow import GFlow, verify_gflow
from .rewrite import _Rewriter

__all__ = [
    "extract_circuit",
    "permutation_to_swaps",
    "clifford_gates",
    "row_operation_gate",
    "ExtractionStats",
]


class ExtractionStats:
    """Counters filled in by :func:`extract_circuit` when one is passed."""

    def __init__(self) -> None:
        self.rounds = 0
        self.pivot_rounds = 0
        self.extracted = 0
        self.row_operations = 0

    def __repr__(self) -> str:
        return (
            f"ExtractionStats(rounds={self.rounds}, pivot_rounds={self.pivot_rounds}, "
            f"extracted={self.extracted}, row_operations={self.row_operations})"
        )


def clifford_gates(c: LocalClifford, q: int) -> list[Gate]:
    """Gates for ``c`` on qubit ``q`` in application order (its Euler form, right to left)."""
    a, b, k = c.triple
    out = []
    if k:
        out.append(Gate.rz(f"{k}/2", q))
    if b:
        out.append(Gate.rx(f"{b}/2", q))
    if a:
        out.append(Gate.rz(f"{a}/2", q))
    return out


def permutation_to_swaps(perm: list[int]) -> list[Gate]:
    """SWAPs moving the state on wire ``i`` to wire ``perm[i]``; at most ``n - 1`` gates."""
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise ValueError(f"{perm} is not a permutation of 0..{n - 1}")
    source = [0] * n  # source[j] = wire whose state must end on j
    for i, j in enumerate(perm):
        source[j] = i
    where = list(range(n))  # where[i] = current wire of the state that started on i
    held = list(range(n))  # held[w] = which original state wire w holds now
    gates = []
    for j in range(n):
        k = where[source[j]]
        if k != j:
            gates.append(Gate.swap(j, k))
            a, b = held[j], held[k]
            held[j], held[k] = b, a
            where[a], where[b] = k, j
    return gates


def row_operation_gate(source: int, target: int) -> Gate:
    """Gate that undoes adding frontier row ``source`` to row ``target``.

    Frontier wires carry X-basis parities of their neighbourhoods, so the
    addition is undone by a CNOT whose control is the target row's wire.
    """
    return Gate.cnot(target, source)


def extract_circuit(d: MbqcDiagram, f: GFlow, stats: ExtractionStats | None = None) -> Circuit:
    """Extract a circuit equal to ``d`` up to a nonzero scalar.

    The gflow certifies that extraction succeeds; the loop itself never reads
    the correction sets.
    """
    g0 = d.graph
    if len(g0.inputs) != len(g0.outputs):
        raise ValueError(f"extraction needs |I| = |O|, got {len(g0.inputs)} and {len(g0.outputs)}")
    ok, violations = verify_gflow(g0, f)
    if not ok:
        v = violations[0]
        raise ValueError(f"not a gflow: vertex {v.vertex} breaks {v.condition} ({v.detail})")
    stats = stats if stats is not None else ExtractionStats()

    r = _Rewriter(d.copy(), f.copy())
    r.to_phase_gadget_form()
    r.f = None  # the rest of the loop does not maintain the gflow
    g, dd = r.g, r.d
    width = len(g.outputs)
    rev: list[Gate] = []  # gates in reverse application order

    budget = 4 * (len(g) + 1) ** 2
    while True:
        stats.rounds += 1
        budget -= 1
        if budget < 0:  # pragma: no cover
            raise RuntimeError("extraction did not terminate")
        outs = g.output_set()
        ins = g.input_set()
        pos = {v: q for q, v in enumerate(g.outputs)}

        # 1. boundary Cliffords and CZs between frontier vertices
        for q, v in enumerate(g.outputs):
            c = dd.out_clifford(v)
            if not c.is_identity():
                rev.extend(reversed(clifford_gates(c, q)))
                dd.set_out_clifford(v, LocalClifford.identity())
        for v in g.outputs:
            for w in sorted(g.adj[v]):
                if w in outs and pos[v] < pos[w]:
                    rev.append(Gate.cz(pos[v], pos[w]))
                    g.remove_edge(v, w)

        # isolated gadgets only contribute a scalar
        for v in [v for v in g.internal() if not g.adj[v] and g.plane[v] is not Plane.XY]:
            r.drop_isolated(v)
        if all(v in outs for v in g.adj):
            break
        # a frontier vertex that is also an input cannot be extracted through;
        # move its input one step back so it can
        for v in list(g.outputs):
            if v in ins and any(w not in outs for w in g.adj[v]):
                r.input_extension(v, 0)
        ins = g.input_set()

        # 2. Gauss-reduce the frontier biadjacency matrix
        rows = [v for v in g.outputs if v not in ins]
        cols = sorted({w for v in rows for w in g.adj[v]})
        col_index = {w: j for j, w in enumerate(cols)}
        words = []
        for v in rows:
            word = 0
            for w in g.adj[v]:
                word |= 1 << col_index[w]
            words.append(word)
        reduced, log, _ = eliminate(GF2Matrix(words, len(cols)))
        for s, t in log:
            rev.append(row_operation_gate(pos[rows[s]], pos[rows[t]]))
        stats.row_operations += len(log)
        for i, v in enumerate(rows):
            word = reduced.rows[i]
            for j, w in enumerate(cols):
                want = bool(word >> j & 1)
                if want != (w in g.adj[v]):
                    g.toggle_edge(v, w)

        # 3. extract frontier vertices with a single XY neighbour
        progress = False
        for i, v in enumerate(rows):
            word = reduced.rows[i]
            if word == 0 or word & (word - 1):
                continue
            u = cols[word.bit_length() - 1]
            if g.plane[u] is not Plane.XY:
                continue
            q = pos[v]
            rev.append(Gate.h(q))
            if g.angle[u] != 0:
                rev.append(Gate.rz(-g.angle[u], q))
            g.outputs[q] = u
            del g.plane[u]
            del g.angle[u]
            g.remove_vertex(v)
            progress = True
            stats.extracted += 1
        if progress:
            continue

        # 4. pivot YZ vertices next to the frontier into XY vertices
        stats.pivot_rounds += 1
        while True:
            outs = g.output_set()
            cand = None
            for u in sorted(g.plane):
                if g.plane[u] is Plane.YZ and u not in ins:
                    nbrs = sorted(w for w in g.adj[u] if w in outs and w not in ins)
                    if nbrs:
                        cand = (u, nbrs[0])
                        break
            if cand is None:
                break
            r.pivot(*cand)
            progress = True
        if not progress:
            raise ValueError("extraction is stuck; the diagram has no gflow")

    # 5. the frontier is now a permutation of the inputs
    ins_index = {v: p for p, v in enumerate(g.inputs)}
    head: list[Gate] = []
    perm = [0] * width
    for q, v in enumerate(g.outputs):
        p = ins_index[v]
        perm[p] = q
        c = dd.in_clifford(v)
        if not c.is_identity():
            head.extend(clifford_gates(c, p))
    head.extend(permutation_to_swaps(perm))
    return Circuit(width, head + rev[::-1])

