"""Labelled open graphs and MBQC+LC diagrams.

A labelled open graph is a simple graph with ordered input and output lists
(which may overlap) and a measurement plane and angle on every non-output.
An :class:`MbqcDiagram` adds a single-qubit Clifford on each input and each
output wire.  The input Clifford acts before the graph, the output Clifford
after it.
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping
from enum import Enum

from .angle import Angle, AngleLike
from .clifford import LocalClifford

__all__ = [
    "Plane",
    "LabelledOpenGraph",
    "MbqcDiagram",
    "odd_neighbourhood",
    "local_complement",
    "pivot",
    "identity_removal",
    "is_mbqc_form",
    "diagram_to_json",
    "diagram_from_json",
]


class Plane(str, Enum):
    XY = "XY"
    XZ = "XZ"
    YZ = "YZ"

    def __str__(self) -> str:
        return self.value


class LabelledOpenGraph:
    """Simple undirected graph with ordered inputs/outputs and measurement labels.

    Parameters
    ----------
    vertices : iterable of int
    edges : iterable of (int, int)
    inputs, outputs : iterable of int
        Ordered boundary lists; they may share vertices.
    planes : mapping int -> Plane or str
        Measurement plane of each non-output.
    angles : mapping int -> angle
        Measurement angle (multiple of pi) of each non-output; missing entries are 0.
    """

    def __init__(
        self,
        vertices: Iterable[int] = (),
        edges: Iterable[tuple[int, int]] = (),
        inputs: Iterable[int] = (),
        outputs: Iterable[int] = (),
        planes: Mapping[int, Plane | str] | None = None,
        angles: Mapping[int, AngleLike] | None = None,
    ) -> None:
        self.adj: dict[int, set[int]] = {}
        for v in vertices:
            self._require_id(v)
            if v in self.adj:
                raise ValueError(f"duplicate vertex {v}")
            self.adj[v] = set()
        for u, v in edges:
            self.add_edge(u, v)
        self.inputs: list[int] = list(inputs)
        self.outputs: list[int] = list(outputs)
        self.plane: dict[int, Plane] = {v: Plane(p) for v, p in (planes or {}).items()}
        self.angle: dict[int, Angle] = {v: Angle(a) for v, a in (angles or {}).items()}
        for v in self.non_outputs():
            self.plane.setdefault(v, Plane.XY)
            self.angle.setdefault(v, Angle(0))
        self._next_id = max(self.adj, default=-1) + 1
        self.validate()

    @staticmethod
    def _require_id(v: object) -> None:
        if not isinstance(v, int) or isinstance(v, bool) or v < 0:
            raise ValueError(f"vertex ids must be non-negative integers, got {v!r}")

    # structure -----------------------------------------------------------------

    def validate(self) -> None:
        """Raise ``ValueError`` if an invariant is broken."""
        for name, lst in (("inputs", self.inputs), ("outputs", self.outputs)):
            if len(set(lst)) != len(lst):
                raise ValueError(f"repeated vertex in {name}")
            for v in lst:
                if v not in self.adj:
                    raise ValueError(f"{name} mention unknown vertex {v}")
        for u, nbrs in self.adj.items():
            if u in nbrs:
                raise ValueError(f"self-loop at {u}")
            for w in nbrs:
                if u not in self.adj.get(w, ()):
                    raise ValueError(f"asymmetric adjacency between {u} and {w}")
        non_out = set(self.non_outputs())
        if set(self.plane) != non_out or set(self.angle) != non_out:
            raise ValueError("planes and angles must be defined exactly on the non-outputs")

    @property
    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    def __contains__(self, v: object) -> bool:
        return v in self.adj

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, w) for u, nbrs in self.adj.items() for w in nbrs if u < w)

    def num_edges(self) -> int:
        return sum(len(n) for n in self.adj.values()) // 2

    def neighbours(self, v: int) -> set[int]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def add_edge(self, u: int, v: int) -> None:
        if u == v:
            raise ValueError(f"self-loop at {u}")
        if u not in self.adj or v not in self.adj:
            raise KeyError(f"unknown vertex in edge ({u}, {v})")
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].remove(v)
        self.adj[v].remove(u)

    def toggle_edge(self, u: int, v: int) -> None:
        if v in self.adj[u]:
            self.remove_edge(u, v)
        else:
            self.add_edge(u, v)

    def fresh_id(self) -> int:
        """Reserve and return an id never used before in this graph."""
        v = max(self._next_id, max(self.adj, default=-1) + 1)
        self._next_id = v + 1
        return v

    def add_vertex(self, plane: Plane | str | None = None, angle: AngleLike = 0, vid: int | None = None) -> int:
        """Add a vertex; pass ``plane=None`` for a vertex that will become an output."""
        if vid is None:
            vid = self.fresh_id()
        else:
            self._require_id(vid)
            if vid in self.adj:
                raise ValueError(f"vertex {vid} already exists")
            self._next_id = max(self._next_id, vid + 1)
        self.adj[vid] = set()
        if plane is not None:
            self.plane[vid] = Plane(plane)
            self.angle[vid] = Angle(angle)
        return vid

    def remove_vertex(self, v: int) -> None:
        if v in self.inputs or v in self.outputs:
            raise ValueError(f"cannot delete boundary vertex {v}")
        for w in self.adj.pop(v):
            self.adj[w].discard(v)
        self.plane.pop(v, None)
        self.angle.pop(v, None)

    def input_set(self) -> set[int]:
        return set(self.inputs)

    def output_set(self) -> set[int]:
        return set(self.outputs)

    def non_outputs(self) -> list[int]:
        outs = set(self.outputs)
        return sorted(v for v in self.adj if v not in outs)

    def non_inputs(self) -> list[int]:
        ins = set(self.inputs)
        return sorted(v for v in self.adj if v not in ins)

    def internal(self) -> list[int]:
        """Vertices that are neither inputs nor outputs."""
        bnd = set(self.inputs) | set(self.outputs)
        return sorted(v for v in self.adj if v not in bnd)

    def copy(self) -> LabelledOpenGraph:
        g = LabelledOpenGraph.__new__(LabelledOpenGraph)
        g.adj = {v: set(n) for v, n in self.adj.items()}
        g.inputs = list(self.inputs)
        g.outputs = list(self.outputs)
        g.plane = dict(self.plane)
        g.angle = dict(self.angle)
        g._next_id = self._next_id
        return g

    def odd_neighbourhood(self, k: Iterable[int]) -> set[int]:
        return odd_neighbourhood(self, k)

    def connected_components(self) -> list[set[int]]:
        seen: set[int] = set()
        comps = []
        for s in sorted(self.adj):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(comp)
        return comps

    def same_structure(self, other: LabelledOpenGraph) -> bool:
        """Equality of graph, boundary lists, planes and angles."""
        return (
            self.adj == other.adj
            and self.inputs == other.inputs
            and self.outputs == other.outputs
            and self.plane == other.plane
            and self.angle == other.angle
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LabelledOpenGraph):
            return NotImplemented
        return self.same_structure(other)

    def __repr__(self) -> str:
        return (
            f"LabelledOpenGraph(|V|={len(self.adj)}, |E|={self.num_edges()}, "
            f"inputs={self.inputs}, outputs={self.outputs})"
        )


def odd_neighbourhood(g: LabelledOpenGraph, k: Iterable[int]) -> set[int]:
    """Vertices having an odd number of neighbours in ``k``."""
    out: set[int] = set()
    for v in k:
        if v not in g.adj:
            raise KeyError(f"unknown vertex {v}")
        out ^= g.adj[v]
    return out


def _complement_inplace(g: LabelledOpenGraph, u: int) -> None:
    nbrs = sorted(g.adj[u])
    for i, a in enumerate(nbrs):
        for b in nbrs[i + 1 :]:
            g.toggle_edge(a, b)


def _pivot_inplace(g: LabelledOpenGraph, u: int, v: int) -> None:
    if v not in g.adj[u]:
        raise ValueError(f"pivot needs adjacent vertices, {u} and {v} are not")
    nu = g.adj[u] - {v}
    nv = g.adj[v] - {u}
    both = nu & nv
    only_u = nu - both
    only_v = nv - both
    for x, y in ((both, only_u), (both, only_v), (only_u, only_v)):
        for a in x:
            for b in y:
                g.toggle_edge(a, b)
    # exchange the neighbourhoods of u and v
    for w in nu:
        g.adj[w].discard(u)
    for w in nv:
        g.adj[w].discard(v)
    g.adj[u] = {v} | nv
    g.adj[v] = {u} | nu
    for w in nv:
        g.adj[w].add(u)
    for w in nu:
        g.adj[w].add(v)


def local_complement(g: LabelledOpenGraph, u: int) -> LabelledOpenGraph:
    """Return ``G * u``: edges among the neighbours of ``u`` toggled, labels untouched."""
    if u not in g.adj:
        raise KeyError(f"unknown vertex {u}")
    h = g.copy()
    _complement_inplace(h, u)
    return h


def pivot(g: LabelledOpenGraph, u: int, v: int) -> LabelledOpenGraph:
    """Return the pivot of ``g`` along the edge ``u``-``v``; labels untouched."""
    if u not in g.adj or v not in g.adj:
        raise KeyError(f"unknown vertex in ({u}, {v})")
    h = g.copy()
    _pivot_inplace(h, u, v)
    return h


def identity_removal(g: LabelledOpenGraph, v: int, w: int) -> LabelledOpenGraph:
    """Remove the degree-2 vertex ``v`` and fuse its other neighbour into ``w``.

    Requires ``N(v) = {u, w}`` with ``u`` not adjacent to ``w``.  Returns the
    pivot along ``u``-``v`` with ``u`` and ``v`` deleted.
    """
    nv = g.adj[v]
    if len(nv) != 2 or w not in nv:
        raise ValueError(f"vertex {v} must have exactly two neighbours, one of them {w}")
    (u,) = nv - {w}
    if w in g.adj[u]:
        raise ValueError(f"neighbours {u} and {w} of {v} are adjacent")
    h = pivot(g, u, v)
    for x in (u, v):
        for y in h.adj.pop(x):
            h.adj[y].discard(x)
        h.plane.pop(x, None)
        h.angle.pop(x, None)
    h.inputs = [x for x in h.inputs if x not in (u, v)]
    h.outputs = [x for x in h.outputs if x not in (u, v)]
    return h


class MbqcDiagram:
    """A labelled open graph with local Cliffords on its input and output wires."""

    def __init__(
        self,
        graph: LabelledOpenGraph,
        input_clifford: Mapping[int, LocalClifford] | None = None,
        output_clifford: Mapping[int, LocalClifford] | None = None,
    ) -> None:
        self.graph = graph
        self.input_clifford: dict[int, LocalClifford] = {}
        self.output_clifford: dict[int, LocalClifford] = {}
        for v, c in (input_clifford or {}).items():
            if v not in graph.inputs:
                raise ValueError(f"input Clifford on non-input {v}")
            if not c.is_identity():
                self.input_clifford[v] = c
        for v, c in (output_clifford or {}).items():
            if v not in graph.outputs:
                raise ValueError(f"output Clifford on non-output {v}")
            if not c.is_identity():
                self.output_clifford[v] = c

    def in_clifford(self, v: int) -> LocalClifford:
        return self.input_clifford.get(v, LocalClifford.identity())

    def out_clifford(self, v: int) -> LocalClifford:
        return self.output_clifford.get(v, LocalClifford.identity())

    def set_in_clifford(self, v: int, c: LocalClifford) -> None:
        if c.is_identity():
            self.input_clifford.pop(v, None)
        else:
            self.input_clifford[v] = c

    def set_out_clifford(self, v: int, c: LocalClifford) -> None:
        if c.is_identity():
            self.output_clifford.pop(v, None)
        else:
            self.output_clifford[v] = c

    def is_mbqc_form(self) -> bool:
        return not self.input_clifford and not self.output_clifford

    def copy(self) -> MbqcDiagram:
        d = MbqcDiagram.__new__(MbqcDiagram)
        d.graph = self.graph.copy()
        d.input_clifford = dict(self.input_clifford)
        d.output_clifford = dict(self.output_clifford)
        return d

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MbqcDiagram):
            return NotImplemented
        return (
            self.graph == other.graph
            and self.input_clifford == other.input_clifford
            and self.output_clifford == other.output_clifford
        )

    def __repr__(self) -> str:
        return f"MbqcDiagram({self.graph!r}, cliffords={len(self.input_clifford) + len(self.output_clifford)})"


def is_mbqc_form(d: MbqcDiagram) -> bool:
    return d.is_mbqc_form()


# JSON ------------------------------------------------------------------------


def diagram_to_dict(d: MbqcDiagram) -> dict:
    g = d.graph
    verts = []
    for v in g.vertices:
        entry: dict = {"id": v}
        if v in g.plane:
            entry["plane"] = g.plane[v].value
            entry["angle"] = str(g.angle[v])
        verts.append(entry)
    return {
        "vertices": verts,
        "edges": [list(e) for e in g.edges()],
        "inputs": list(g.inputs),
        "outputs": list(g.outputs),
        "input_cliffords": {str(v): list(d.input_clifford[v].triple) for v in sorted(d.input_clifford)},
        "output_cliffords": {str(v): list(d.output_clifford[v].triple) for v in sorted(d.output_clifford)},
    }


def diagram_to_json(d: MbqcDiagram) -> str:
    return json.dumps(diagram_to_dict(d), separators=(",", ":"))


def diagram_from_dict(data: Mapping) -> MbqcDiagram:
    try:
        verts = data["vertices"]
        ids = [int(x["id"]) for x in verts]
        outputs = [int(x) for x in data.get("outputs", [])]
        planes, angles = {}, {}
        for x in verts:
            v = int(x["id"])
            if "plane" in x:
                planes[v] = Plane(x["plane"])
                if isinstance(x.get("angle", "0"), float):
                    raise ValueError(f"vertex {v}: floating-point angle; use a string such as \"1/4\"")
                angles[v] = Angle(str(x.get("angle", "0")))
            elif v not in outputs:
                raise ValueError(f"vertex {v} is not an output but has no plane")
        for v in outputs:
            if v in planes:
                raise ValueError(f"output vertex {v} must not carry a plane")
        g = LabelledOpenGraph(
            ids,
            [(int(a), int(b)) for a, b in data.get("edges", [])],
            [int(x) for x in data.get("inputs", [])],
            outputs,
            planes,
            angles,
        )
        inc = {int(k): LocalClifford(*v) for k, v in data.get("input_cliffords", {}).items()}
        outc = {int(k): LocalClifford(*v) for k, v in data.get("output_cliffords", {}).items()}
        return MbqcDiagram(g, inc, outc)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph document: {exc}") from exc


def diagram_from_json(text: str) -> MbqcDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValueError(f"line {exc.lineno}: {exc.msg}") from exc
    return diagram_from_dict(data)
