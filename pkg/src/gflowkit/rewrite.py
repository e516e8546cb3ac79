"""Gflow-preserving rewrites of MBQC+LC diagrams.

Every label change goes through one rule: a single-qubit Clifford ``C`` that
lands on a vertex between the graph state and the vertex's measurement is
absorbed into the measurement effect (``<e| C`` is again a measurement effect
up to phase) or, for an output, composed into the output Clifford.  The
plane/angle table for that rule is derived once from the effect vectors.

Local complementation at ``u`` uses the identity
``|G> = X(-pi/2)_u Z(pi/2)_{N(u)} |G * u>``.  A pivot is three local
complementations followed by the stabiliser ``X_u Z_N(u) X_v Z_N(v)`` of the
pivoted graph, which leaves only the common neighbours of ``u`` and ``v`` with
a ``Z(pi)``: XY and YZ swap at ``u``/``v`` with the angle negated, XZ goes to
``pi/2 - a``, and a common neighbour gets XY: a+pi, XZ/YZ: -a.
"""

from __future__ import annotations

import json
from collections.abc import Iterable
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from itertools import product

import numpy as np

from .angle import Angle, AngleLike
from .clifford import LocalClifford
from .diagram import MbqcDiagram, Plane, _complement_inplace, odd_neighbourhood
from .gflow import GFlow, delete_vertex_update
from .oracle import effect

__all__ = [
    "RewriteTrace",
    "absorb_rule",
    "lc_on_diagram",
    "pivot_on_diagram",
    "input_extension",
    "output_extension",
    "to_mbqc_form",
    "remove_parity_gadget",
    "remove_clifford_vertex",
    "remove_all_cliffords",
    "to_phase_gadget_form",
    "fuse_leaf_gadget",
    "merge_gadgets",
    "reduce_diagram",
    "is_phase_gadget_form",
    "reduced_form_violations",
    "clifford_vertices",
]

_Z1 = LocalClifford.z(1)
_Z2 = LocalClifford.z(2)
_X2 = LocalClifford.x(2)
_X3 = LocalClifford.x(3)
_H = LocalClifford.hadamard()


# absorption table --------------------------------------------------------------


def _proportional(a: np.ndarray, b: np.ndarray) -> bool:
    k = int(np.argmax(np.abs(b)))
    z = a[k] / b[k]
    return abs(abs(z) - 1) < 1e-9 and bool(np.allclose(a, z * b, atol=1e-9))


@lru_cache(maxsize=None)
def absorb_rule(c: LocalClifford, plane: Plane) -> tuple[Plane, int, int]:
    """Return ``(plane', sign, k)`` with ``<e(plane, a)| C ~ <e(plane', sign*a + k*pi/2)|``."""
    m = c.matrix()
    samples = (0.37, 1.1)
    for p2, sign, k in product(Plane, (1, -1), range(4)):
        if all(
            _proportional(effect(plane, a) @ m, effect(p2, sign * a + k * np.pi / 2)) for a in samples
        ):
            return p2, sign, k
    raise AssertionError(f"no absorption rule for {c} on {plane}")  # pragma: no cover


# trace -----------------------------------------------------------------------


@dataclass
class RewriteTrace:
    """Ordered record of primitive rewrites; one JSON object per line when saved."""

    entries: list[dict] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def to_jsonl(self) -> str:
        return "".join(json.dumps(e, separators=(",", ":")) + "\n" for e in self.entries)

    @classmethod
    def from_jsonl(cls, text: str) -> RewriteTrace:
        entries = []
        for lineno, line in enumerate(text.splitlines(), 1):
            if not line.strip():
                continue
            try:
                entries.append(json.loads(line))
            except json.JSONDecodeError as exc:
                raise ValueError(f"line {lineno}: {exc.msg}") from exc
        return cls(entries)

    def replay(self, d: MbqcDiagram, f: GFlow | None = None) -> tuple[MbqcDiagram, GFlow | None]:
        """Re-apply every recorded rule, starting from ``d``."""
        r = _Rewriter(d.copy(), f.copy() if f is not None else None)
        for e in self.entries:
            rule, vs, params = e["rule"], e["vertices"], e.get("params", {})
            if rule == "lc":
                r.lc(vs[0])
            elif rule == "pivot":
                r.pivot(vs[0], vs[1])
            elif rule == "remove_gadget":
                r.remove_gadget(vs[0])
            elif rule == "input_extension":
                r.input_extension(vs[0], Angle(params["angle"]))
            elif rule == "output_extension":
                r.output_extension(vs[0], Angle(params["angle"]))
            elif rule == "fuse_leaf":
                r.fuse_leaf(vs[0])
            elif rule == "merge_gadgets":
                r.merge(vs[0], vs[1])
            elif rule == "drop_isolated":
                r.drop_isolated(vs[0])
            else:
                raise ValueError(f"unknown rule {rule!r}")
        return r.d, r.f


# the in-place engine -------------------------------------------------------------


class _Rewriter:
    """Mutates one diagram/gflow pair; ``f`` may be ``None`` when no gflow is tracked."""

    def __init__(self, d: MbqcDiagram, f: GFlow | None, trace: RewriteTrace | None = None) -> None:
        self.d = d
        self.f = f
        self.trace = trace if trace is not None else RewriteTrace()

    @property
    def g(self):
        return self.d.graph

    def _labels(self, vs: Iterable[int]) -> dict[str, list[str] | str]:
        g = self.g
        out: dict[str, list[str] | str] = {}
        for v in sorted(set(vs)):
            if v in g.plane:
                out[str(v)] = [g.plane[v].value, str(g.angle[v])]
            elif v in g.adj:
                out[str(v)] = "output"
        return out

    def _record(self, rule: str, vs: list[int], before: dict, touched: Iterable[int], **params) -> None:
        entry = {"rule": rule, "vertices": vs}
        if params:
            entry["params"] = {k: str(v) for k, v in params.items()}
        entry["before"] = before
        entry["after"] = self._labels(touched)
        self.trace.entries.append(entry)

    # label plumbing

    def absorb(self, v: int, c: LocalClifford) -> None:
        """A Clifford ``c`` now acts on ``v`` right after the graph state."""
        g, d = self.g, self.d
        if v in g.plane:
            p2, sign, k = absorb_rule(c, g.plane[v])
            g.plane[v] = p2
            g.angle[v] = Angle(sign * g.angle[v].value + Fraction(k, 2))
        else:
            d.set_out_clifford(v, d.out_clifford(v) @ c)

    # primitives

    def lc(self, u: int) -> None:
        g = self.g
        if u in g.inputs:
            raise ValueError(f"vertex {u} is an input; extend the input first")
        nbrs = sorted(g.adj[u])
        before = self._labels([u, *nbrs])
        if self.f is not None:
            self.f = _lc_gflow(self.d, self.f, u)
        _complement_inplace(g, u)
        self.absorb(u, _X3)
        for w in nbrs:
            self.absorb(w, _Z1)
        self._record("lc", [u], before, [u, *nbrs])

    def pivot(self, u: int, v: int) -> None:
        g = self.g
        if v not in g.adj[u]:
            raise ValueError(f"pivot needs adjacent vertices, {u} and {v} are not")
        if u in g.inputs or v in g.inputs:
            raise ValueError("pivot vertices must not be inputs")
        touched = [u, v, *g.adj[u], *g.adj[v]]
        before = self._labels(touched)
        # the three complementations are recorded as one pivot entry
        n = len(self.trace.entries)
        self.lc(u)
        self.lc(v)
        self.lc(u)
        del self.trace.entries[n:]
        # multiply in the stabiliser X_u Z_N(u) X_v Z_N(v) of the new graph so
        # that u, v keep their angles and only common neighbours pick up Z(pi)
        zs = g.adj[u] ^ g.adj[v]
        for a in (u, v):
            self.absorb(a, _X2)
        for w in sorted(zs):
            self.absorb(w, _Z2)
        self._record("pivot", [u, v], before, touched)

    def remove_gadget(self, u: int) -> None:
        g = self.g
        if u in g.inputs or u not in g.plane:
            raise ValueError(f"vertex {u} must be a measured non-input")
        if g.plane[u] is Plane.XY or not g.angle[u].is_pauli():
            raise ValueError(f"vertex {u} is not a YZ/XZ vertex with angle 0 or pi")
        nbrs = sorted(g.adj[u])
        before = self._labels([u, *nbrs])
        if self.f is not None:
            self.f = delete_vertex_update(g, self.f, u)
        if g.angle[u] == 1:
            for w in nbrs:
                self.absorb(w, _Z2)
        g.remove_vertex(u)
        self._record("remove_gadget", [u], before, nbrs)

    def input_extension(self, u: int, angle: AngleLike = 0) -> int:
        g, d = self.g, self.d
        if u not in g.inputs:
            raise ValueError(f"vertex {u} is not an input")
        angle = Angle(angle)
        if not angle.is_clifford():
            raise ValueError("extension angle must be a multiple of pi/2")
        before = self._labels([u])
        new = g.add_vertex(Plane.XY, angle)
        g.add_edge(new, u)
        g.inputs[g.inputs.index(u)] = new
        c_old = d.in_clifford(u)
        d.input_clifford.pop(u, None)
        d.set_in_clifford(new, LocalClifford.z(angle.quarter_turns()) @ _H @ c_old)
        if self.f is not None:
            f = self.f
            f.correction[new] = {u}
            f.depth[new] = 1 + max(f.depth[w] for w in (g.adj[u] - {new}) | {u})
        self._record("input_extension", [u, new], before, [u, new], angle=angle)
        return new

    def output_extension(self, u: int, angle: AngleLike = 0) -> int:
        g, d = self.g, self.d
        if u not in g.outputs:
            raise ValueError(f"vertex {u} is not an output")
        angle = Angle(angle)
        if not angle.is_clifford():
            raise ValueError("extension angle must be a multiple of pi/2")
        before = self._labels([u])
        new = g.add_vertex(None)
        g.add_edge(u, new)
        g.outputs[g.outputs.index(u)] = new
        g.plane[u] = Plane.XY
        g.angle[u] = angle
        c_old = d.out_clifford(u)
        d.output_clifford.pop(u, None)
        d.set_out_clifford(new, c_old @ LocalClifford.z(angle.quarter_turns()) @ _H)
        if self.f is not None:
            f = self.f
            for v in f.correction:
                f.depth[v] += 1
            f.correction[u] = {new}
            f.depth[u] = 1
            f.depth[new] = 0
        self._record("output_extension", [u, new], before, [u, new], angle=angle)
        return new

    def fuse_leaf(self, u: int) -> None:
        """Remove an internal YZ vertex with a single neighbour into that neighbour."""
        g = self.g
        if u in g.inputs or u not in g.plane or g.plane[u] is not Plane.YZ:
            raise ValueError(f"vertex {u} must be an internal YZ vertex")
        if len(g.adj[u]) != 1:
            raise ValueError(f"vertex {u} must have exactly one neighbour")
        (v,) = g.adj[u]
        if v in g.outputs:
            self.output_extension(v, 0)
        if g.plane[v] is not Plane.XY:
            raise ValueError(f"neighbour {v} of {u} is not XY-measured")
        before = self._labels([u, v])
        if self.f is not None:
            self.f = delete_vertex_update(g, self.f, u)
        # the gadget acts as the phase Z(angle(u)) on v
        g.angle[v] = g.angle[v] - g.angle[u]
        g.remove_vertex(u)
        self._record("fuse_leaf", [u, v], before, [v])

    def merge(self, u: int, v: int) -> None:
        """Merge YZ gadget ``u`` into YZ gadget ``v`` with the same neighbourhood."""
        g = self.g
        for x in (u, v):
            if x in g.inputs or x not in g.plane or g.plane[x] is not Plane.YZ:
                raise ValueError(f"vertex {x} must be an internal YZ vertex")
        if u == v or g.adj[u] != g.adj[v]:
            raise ValueError("gadgets must be distinct with equal neighbourhoods")
        before = self._labels([u, v])
        if self.f is not None:
            self.f = delete_vertex_update(g, self.f, u)
        g.angle[v] = g.angle[v] + g.angle[u]
        g.remove_vertex(u)
        self._record("merge_gadgets", [u, v], before, [v])

    def drop_isolated(self, u: int) -> None:
        """Delete an isolated internal YZ/XZ vertex; it only contributes a nonzero scalar."""
        g = self.g
        if u in g.inputs or u not in g.plane or g.adj[u] or g.plane[u] is Plane.XY:
            raise ValueError(f"vertex {u} must be an isolated internal YZ/XZ vertex")
        if g.plane[u] is Plane.XZ and g.angle[u] == 1:
            raise ValueError(f"vertex {u} contributes a zero scalar")  # pragma: no cover
        before = self._labels([u])
        if self.f is not None:
            self.f = delete_vertex_update(g, self.f, u)
        g.remove_vertex(u)
        self._record("drop_isolated", [u], before, [])

    # composite steps

    def remove_clifford(self, u: int) -> None:
        g = self.g
        if u in g.inputs or u not in g.plane or not g.angle[u].is_clifford():
            raise ValueError(f"vertex {u} is not a measured non-input Clifford vertex")
        plane, k = g.plane[u], g.angle[u].quarter_turns()
        if plane is not Plane.XY and k % 2 == 0:
            self.remove_gadget(u)
        elif plane is not Plane.XZ and k % 2 == 1:
            self.lc(u)
            self.remove_gadget(u)
        else:
            partner = self._pivot_partner(u)
            self.pivot(u, partner)
            self.remove_gadget(u)

    def _pivot_partner(self, u: int) -> int:
        g = self.g
        ins, outs = g.input_set(), g.output_set()
        internal = sorted(w for w in g.adj[u] if w not in ins and w not in outs)
        if internal:
            return internal[0]
        boundary = sorted(w for w in g.adj[u] if w in outs and w not in ins)
        if boundary:
            return boundary[0]
        raise ValueError(f"vertex {u} has no neighbour that can serve as pivot partner")

    def _first(self, pred) -> int | None:
        g = self.g
        ins = g.input_set()
        for v in sorted(g.plane):
            if v not in ins and pred(v):
                return v
        return None

    def remove_all_cliffords(self) -> None:
        g = self.g

        def lc_shape(v):
            return g.plane[v] in (Plane.XY, Plane.YZ) and g.angle[v].is_clifford() and not g.angle[v].is_pauli()

        def gadget_shape(v):
            return g.plane[v] in (Plane.YZ, Plane.XZ) and g.angle[v].is_pauli()

        def pivot_shape(v):
            a = g.angle[v]
            return (g.plane[v] is Plane.XY and a.is_pauli()) or (
                g.plane[v] is Plane.XZ and a.is_clifford() and not a.is_pauli()
            )

        def has_internal_nbr(v):
            bnd = g.input_set() | g.output_set()
            return any(w not in bnd for w in g.adj[v])

        budget = len(g) + 1
        while True:
            while (u := self._first(lc_shape)) is not None:
                self.remove_clifford(u)
            while (u := self._first(gadget_shape)) is not None:
                self.remove_gadget(u)
            removed = False
            while (u := self._first(lambda v: pivot_shape(v) and has_internal_nbr(v))) is not None:
                self.remove_clifford(u)
                removed = True
            if removed:
                continue
            u = self._first(pivot_shape)
            if u is None:
                break
            self.remove_clifford(u)
            budget -= 1
            if budget < 0:  # pragma: no cover
                raise RuntimeError("Clifford removal did not terminate")

    def to_phase_gadget_form(self) -> None:
        g = self.g
        budget = 4 * len(g) * len(g) + 8
        while budget > 0:
            budget -= 1
            pair = None
            for u in sorted(g.plane):
                if g.plane[u] is Plane.YZ:
                    for w in sorted(g.adj[u]):
                        if w in g.plane and g.plane[w] is Plane.YZ:
                            pair = (u, w)
                            break
                if pair:
                    break
            if pair:
                self.pivot(*pair)
                continue
            xz = next((u for u in sorted(g.plane) if g.plane[u] is Plane.XZ), None)
            if xz is not None:
                self.lc(xz)
                continue
            return
        raise RuntimeError("phase-gadget normalisation did not terminate")  # pragma: no cover

    def reduce(self) -> None:
        g = self.g
        if len(g.inputs) != len(g.outputs):
            raise ValueError("reduction needs as many inputs as outputs")
        while True:
            self.remove_all_cliffords()
            self.to_phase_gadget_form()
            while True:
                internal_yz = [v for v in g.internal() if g.plane[v] is Plane.YZ]
                iso = next((v for v in internal_yz if not g.adj[v]), None)
                if iso is not None:
                    self.drop_isolated(iso)
                    continue
                leaf = next((v for v in internal_yz if len(g.adj[v]) == 1), None)
                if leaf is None:
                    break
                self.fuse_leaf(leaf)
            groups: dict[frozenset[int], list[int]] = {}
            for v in g.internal():
                if g.plane[v] is Plane.YZ:
                    groups.setdefault(frozenset(g.adj[v]), []).append(v)
            for vs in groups.values():
                keep = vs[0]
                for other in vs[1:]:
                    self.merge(other, keep)
            if not any(g.angle[v].is_clifford() for v in g.internal()):
                return

    def to_mbqc_form(self) -> None:
        g, d = self.g, self.d
        for u in list(g.inputs):
            c = d.in_clifford(u)
            if c.is_identity():
                continue
            a, betas = _input_decomposition(c)
            # the leading Z(a) commutes with the CZs and lands on u itself
            d.set_in_clifford(u, LocalClifford.z(-a) @ c)
            if a:
                self.absorb(u, LocalClifford.z(a))
            cur = u
            for b in betas:
                cur = self.input_extension(cur, Angle(Fraction(b, 2)))
        for u in list(g.outputs):
            c = d.out_clifford(u)
            cur = u
            for b in _output_decomposition(c):
                cur = self.output_extension(cur, Angle(Fraction(b, 2)))


def _gadget(b: int) -> LocalClifford:
    """The map ``H Z(-b*pi/2)`` realised by an XY(b*pi/2) vertex hung on a wire."""
    return _H @ LocalClifford.z(-b)


@lru_cache(maxsize=None)
def _input_decomposition(c: LocalClifford) -> tuple[int, tuple[int, ...]]:
    """Shortest ``(a, (b1, ..))`` with ``c = Z(a) F(b1) F(b2) ..`` where ``F(b) = H Z(-b)``."""
    for length in range(3):
        for a in range(4):
            for bs in product(range(4), repeat=length):
                m = LocalClifford.z(a)
                for b in bs:
                    m = m @ _gadget(b)
                if m == c:
                    return a, bs
    raise AssertionError("Euler form covers every Clifford")  # pragma: no cover


@lru_cache(maxsize=None)
def _output_decomposition(c: LocalClifford) -> tuple[int, ...]:
    """Shortest ``(b1, .., bk)`` with ``c = F(bk) .. F(b1)``; ``b1`` is hung on the wire first."""
    for length in range(5):
        for bs in product(range(4), repeat=length):
            m = LocalClifford.identity()
            for b in bs:
                m = _gadget(b) @ m
            if m == c:
                return bs
    raise AssertionError("four gadgets reach every Clifford")  # pragma: no cover


def _lc_gflow(d: MbqcDiagram, f: GFlow, u: int) -> GFlow:
    """Correction sets after complementing at ``u`` (computed on the graph before the change)."""
    g = d.graph
    corr: dict[int, set[int]] = {}
    if u in g.plane:
        gu = f.correction[u]
        gu2 = gu ^ {u} if g.plane[u] is not Plane.YZ else set(gu)
        for v, gv in f.correction.items():
            if v == u:
                corr[v] = gu2
            elif u in odd_neighbourhood(g, gv):
                corr[v] = gv ^ gu2 ^ {u}
            else:
                corr[v] = set(gv)
    else:
        for v, gv in f.correction.items():
            corr[v] = gv ^ {u} if u in odd_neighbourhood(g, gv) else set(gv)
    return GFlow(corr, dict(f.depth))


# public API ------------------------------------------------------------------


def _start(d: MbqcDiagram, f: GFlow | None) -> _Rewriter:
    return _Rewriter(d.copy(), f.copy() if f is not None else None)


def lc_on_diagram(d: MbqcDiagram, f: GFlow, u: int) -> tuple[MbqcDiagram, GFlow]:
    """Locally complement at the non-input ``u`` and restore MBQC+LC form.

    ``u`` absorbs ``X(-pi/2)`` and each neighbour absorbs ``Z(pi/2)``.  On
    measured vertices that means: ``u`` XY(a) -> XZ(pi/2 - a), XZ(a) -> XY(a - pi/2),
    YZ(a) -> YZ(a - pi/2); a neighbour XY(a) -> XY(a - pi/2), XZ(a) -> YZ(-a),
    YZ(a) -> XZ(a).
    """
    r = _start(d, f)
    r.lc(u)
    return r.d, r.f


def pivot_on_diagram(d: MbqcDiagram, f: GFlow, u: int, v: int) -> tuple[MbqcDiagram, GFlow]:
    """Pivot along the edge ``u``-``v`` (neither an input), as three local complementations."""
    r = _start(d, f)
    r.pivot(u, v)
    return r.d, r.f


def input_extension(d: MbqcDiagram, f: GFlow, u: int, angle: AngleLike = 0) -> tuple[MbqcDiagram, GFlow]:
    """Move input ``u`` onto a fresh XY-measured vertex joined to ``u``."""
    r = _start(d, f)
    r.input_extension(u, angle)
    return r.d, r.f


def output_extension(d: MbqcDiagram, f: GFlow, u: int, angle: AngleLike = 0) -> tuple[MbqcDiagram, GFlow]:
    """Measure output ``u`` in the XY plane and hang a fresh output vertex on it."""
    r = _start(d, f)
    r.output_extension(u, angle)
    return r.d, r.f


def to_mbqc_form(d: MbqcDiagram, f: GFlow) -> tuple[MbqcDiagram, GFlow]:
    """Absorb every boundary Clifford into new measured vertices.

    Each input costs at most two new vertices, each output at most four.
    """
    r = _start(d, f)
    r.to_mbqc_form()
    return r.d, r.f


def remove_parity_gadget(d: MbqcDiagram, f: GFlow, u: int) -> tuple[MbqcDiagram, GFlow]:
    """Delete a non-input YZ/XZ vertex measured at angle 0 or pi."""
    r = _start(d, f)
    r.remove_gadget(u)
    return r.d, r.f


def remove_clifford_vertex(d: MbqcDiagram, f: GFlow, u: int) -> tuple[MbqcDiagram, GFlow]:
    """Eliminate one measured non-input Clifford vertex."""
    r = _start(d, f)
    r.remove_clifford(u)
    return r.d, r.f


def remove_all_cliffords(d: MbqcDiagram, f: GFlow) -> tuple[MbqcDiagram, GFlow, RewriteTrace]:
    """Eliminate every measured non-input Clifford vertex."""
    r = _start(d, f)
    r.remove_all_cliffords()
    return r.d, r.f, r.trace


def to_phase_gadget_form(d: MbqcDiagram, f: GFlow) -> tuple[MbqcDiagram, GFlow]:
    """Remove XZ vertices and adjacent YZ pairs."""
    r = _start(d, f)
    r.to_phase_gadget_form()
    return r.d, r.f


def fuse_leaf_gadget(d: MbqcDiagram, f: GFlow, u: int) -> tuple[MbqcDiagram, GFlow]:
    r = _start(d, f)
    r.fuse_leaf(u)
    return r.d, r.f


def merge_gadgets(d: MbqcDiagram, f: GFlow, u: int, v: int) -> tuple[MbqcDiagram, GFlow]:
    r = _start(d, f)
    r.merge(u, v)
    return r.d, r.f


def reduce_diagram(d: MbqcDiagram, f: GFlow) -> tuple[MbqcDiagram, GFlow, RewriteTrace]:
    """Bring a unitary diagram into reduced form."""
    r = _start(d, f)
    r.reduce()
    return r.d, r.f, r.trace


# predicates --------------------------------------------------------------------


def clifford_vertices(d: MbqcDiagram, include_inputs: bool = False) -> list[int]:
    g = d.graph
    ins = g.input_set()
    return [v for v in sorted(g.plane) if g.angle[v].is_clifford() and (include_inputs or v not in ins)]


def is_phase_gadget_form(d: MbqcDiagram) -> bool:
    g = d.graph
    for v, p in g.plane.items():
        if p is Plane.XZ:
            return False
        if p is Plane.YZ and any(g.plane.get(w) is Plane.YZ for w in g.adj[v]):
            return False
    return True


def reduced_form_violations(d: MbqcDiagram) -> list[str]:
    """Names of the reduced-form conditions that ``d`` breaks (empty when reduced)."""
    g = d.graph
    bad = []
    if not is_phase_gadget_form(d):
        bad.append("phase-gadget form")
    internal = g.internal()
    if any(g.angle[v].is_clifford() for v in internal):
        bad.append("internal Clifford vertex")
    if any(len(g.adj[v]) < 2 for v in internal):
        bad.append("internal vertex with fewer than two neighbours")
    seen: dict[tuple[Plane, frozenset[int]], int] = {}
    for v in internal:
        key = (g.plane[v], frozenset(g.adj[v]))
        if key in seen:
            bad.append("same-plane vertices with equal neighbourhoods")
            break
        seen[key] = v
    return bad
