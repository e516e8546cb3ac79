"""Circuits over the gate set CZ, CNOT, H, Z-phase, X-phase and SWAP.

Text format, one gate per line::

    qubits 3
    h q0
    cz q0 q1
    cnot q1 q2        # control q1, target q2
    rz(1/4) q2        # Z phase of pi/4
    rx(3/2) q0
    swap q0 q2

``#`` starts a comment and blank lines are ignored.  The ``qubits`` header is
optional when parsing (the width then defaults to one more than the largest
index used) and always written when printing, so that idle wires survive a
round trip.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .angle import Angle, AngleLike
from .clifford import HADAMARD, xphase_matrix, zphase_matrix
from .diagram import LabelledOpenGraph, MbqcDiagram, Plane
from .gflow import GFlow, depths_from_corrections

__all__ = [
    "Gate",
    "Circuit",
    "parse_circuit",
    "print_circuit",
    "eval_circuit",
    "circuit_to_pattern",
    "MAX_CIRCUIT_WIDTH",
]

MAX_CIRCUIT_WIDTH = 12

_ONE_QUBIT = {"h", "rz", "rx"}
_TWO_QUBIT = {"cz", "cnot", "swap"}
_PHASED = {"rz", "rx"}

_CNOT = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex)
_CZ = np.diag([1, 1, 1, -1]).astype(complex)
_SWAP = np.array([[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex)


@dataclass(frozen=True)
class Gate:
    """One gate.  For ``cnot`` the first qubit is the control."""

    kind: str
    qubits: tuple[int, ...]
    angle: Angle | None = None

    def __post_init__(self) -> None:
        if self.kind not in _ONE_QUBIT | _TWO_QUBIT:
            raise ValueError(f"unknown gate {self.kind!r}")
        arity = 1 if self.kind in _ONE_QUBIT else 2
        if len(self.qubits) != arity:
            raise ValueError(f"{self.kind} takes {arity} qubit(s), got {len(self.qubits)}")
        if arity == 2 and self.qubits[0] == self.qubits[1]:
            raise ValueError(f"{self.kind} needs two distinct qubits")
        if (self.kind in _PHASED) != (self.angle is not None):
            raise ValueError(f"{self.kind} {'needs' if self.kind in _PHASED else 'takes no'} angle")

    @classmethod
    def h(cls, q: int) -> Gate:
        return cls("h", (q,))

    @classmethod
    def cz(cls, a: int, b: int) -> Gate:
        return cls("cz", (a, b))

    @classmethod
    def cnot(cls, control: int, target: int) -> Gate:
        return cls("cnot", (control, target))

    @classmethod
    def swap(cls, a: int, b: int) -> Gate:
        return cls("swap", (a, b))

    @classmethod
    def rz(cls, angle: AngleLike, q: int) -> Gate:
        return cls("rz", (q,), Angle(angle))

    @classmethod
    def rx(cls, angle: AngleLike, q: int) -> Gate:
        return cls("rx", (q,), Angle(angle))

    def __str__(self) -> str:
        qs = " ".join(f"q{q}" for q in self.qubits)
        if self.angle is not None:
            return f"{self.kind}({self.angle}) {qs}"
        return f"{self.kind} {qs}"


@dataclass
class Circuit:
    """A width and a gate list; ``gates[0]`` is applied first."""

    width: int
    gates: list[Gate] = field(default_factory=list)

    def __post_init__(self) -> None:
        if self.width < 0:
            raise ValueError("width must be non-negative")
        for g in self.gates:
            self._check(g)

    def _check(self, g: Gate) -> None:
        for q in g.qubits:
            if not 0 <= q < self.width:
                raise ValueError(f"qubit q{q} out of range for width {self.width}")

    def append(self, g: Gate) -> None:
        self._check(g)
        self.gates.append(g)

    def __len__(self) -> int:
        return len(self.gates)

    def count(self, kind: str) -> int:
        return sum(g.kind == kind for g in self.gates)

    def t_count(self) -> int:
        """Number of phase gates whose angle is not a multiple of pi/2."""
        return sum(g.angle is not None and not g.angle.is_clifford() for g in self.gates)


# text format ---------------------------------------------------------------------

_LINE = re.compile(r"^([a-z]+)(?:\(([^)]*)\))?((?:\s+q\d+)+)?$")


def parse_circuit(text: str) -> Circuit:
    """Parse the text format; errors name the offending line."""
    width = None
    gates: list[tuple[int, Gate]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "qubits":
            if width is not None or gates:
                raise ValueError(f"line {lineno}: 'qubits' must come once, before any gate")
            if len(parts) != 2 or not parts[1].isdigit():
                raise ValueError(f"line {lineno}: expected 'qubits N'")
            width = int(parts[1])
            continue
        m = _LINE.match(line)
        if not m:
            raise ValueError(f"line {lineno}: cannot parse {line!r}")
        kind, arg, qs = m.group(1), m.group(2), m.group(3) or ""
        qubits = tuple(int(q[1:]) for q in qs.split())
        angle = None
        if arg is not None:
            if kind not in _PHASED:
                raise ValueError(f"line {lineno}: {kind} takes no angle")
            try:
                angle = Angle(arg.strip())
            except (TypeError, ValueError) as exc:
                raise ValueError(f"line {lineno}: malformed angle {arg!r}: {exc}") from exc
        elif kind in _PHASED:
            raise ValueError(f"line {lineno}: {kind} needs an angle, as in {kind}(1/4)")
        try:
            gates.append((lineno, Gate(kind, qubits, angle)))
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    if width is None:
        width = 1 + max((q for _, g in gates for q in g.qubits), default=-1)
    c = Circuit(width)
    for lineno, g in gates:
        try:
            c.append(g)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from exc
    return c


def print_circuit(c: Circuit) -> str:
    return "".join([f"qubits {c.width}\n"] + [f"{g}\n" for g in c.gates])


# dense semantics -----------------------------------------------------------------


def _gate_matrix(g: Gate) -> np.ndarray:
    if g.kind == "h":
        return HADAMARD
    if g.kind == "rz":
        return zphase_matrix(g.angle.radians())
    if g.kind == "rx":
        return xphase_matrix(g.angle.radians())
    return {"cz": _CZ, "cnot": _CNOT, "swap": _SWAP}[g.kind]


def eval_circuit(c: Circuit) -> np.ndarray:
    """The ``2^w x 2^w`` unitary of ``c``; qubit 0 is the most significant bit."""
    if c.width > MAX_CIRCUIT_WIDTH:
        raise ValueError(f"circuit width {c.width} exceeds the oracle cap of {MAX_CIRCUIT_WIDTH}")
    n = c.width
    t = np.eye(2 ** n, dtype=complex).reshape((2,) * n + (2 ** n,))
    for g in c.gates:
        m = _gate_matrix(g)
        k = len(g.qubits)
        m = m.reshape((2,) * (2 * k))
        t = np.tensordot(m, t, axes=(list(range(k, 2 * k)), list(g.qubits)))
        t = np.moveaxis(t, list(range(k)), list(g.qubits))
    return t.reshape(2 ** n, 2 ** n)


# circuit to pattern --------------------------------------------------------------


def _expand(c: Circuit) -> list[tuple[str, tuple[int, ...], Fraction]]:
    """Rewrite into H, CZ and Z phases only."""
    out: list[tuple[str, tuple[int, ...], Fraction]] = []
    zero = Fraction(0)

    def cnot(a: int, b: int) -> None:
        out.extend([("h", (b,), zero), ("cz", (a, b), zero), ("h", (b,), zero)])

    for g in c.gates:
        if g.kind == "h":
            out.append(("h", g.qubits, zero))
        elif g.kind == "cz":
            out.append(("cz", g.qubits, zero))
        elif g.kind == "rz":
            out.append(("rz", g.qubits, g.angle.value))
        elif g.kind == "rx":
            q = g.qubits
            out.extend([("h", q, zero), ("rz", q, g.angle.value), ("h", q, zero)])
        elif g.kind == "cnot":
            cnot(*g.qubits)
        else:
            a, b = g.qubits
            cnot(a, b)
            cnot(b, a)
            cnot(a, b)
    return out


def circuit_to_pattern(c: Circuit) -> tuple[MbqcDiagram, GFlow]:
    """Translate ``c`` into an XY-only MBQC-form diagram with causal flow.

    Each qubit has a frontier vertex carrying the Z phase accumulated since its
    last Hadamard.  CZ toggles the edge between two frontiers, and H measures
    the frontier in the XY plane at minus the accumulated phase (the vertex
    then implements ``H Z(phase)``) and starts a new frontier.  A nonzero phase
    left on a wire at the end is flushed through ``H H``.  The returned gflow
    is the causal flow ``g(v) = {next vertex on the wire}``.
    """
    g = LabelledOpenGraph([], [], [], [], {}, {})
    frontier = []
    phase = []
    for _ in range(c.width):
        v = g.add_vertex(None)
        frontier.append(v)
        phase.append(Fraction(0))
    inputs = list(frontier)
    g.inputs = list(inputs)
    successor: dict[int, int] = {}

    def hadamard(q: int) -> None:
        v = frontier[q]
        g.plane[v] = Plane.XY
        g.angle[v] = Angle(-phase[q])
        w = g.add_vertex(None)
        g.add_edge(v, w)
        successor[v] = w
        frontier[q] = w
        phase[q] = Fraction(0)

    for kind, qs, a in _expand(c):
        if kind == "h":
            hadamard(qs[0])
        elif kind == "rz":
            phase[qs[0]] += a
        else:
            g.toggle_edge(frontier[qs[0]], frontier[qs[1]])
    for q in range(c.width):
        if phase[q] % 2:
            hadamard(q)
            hadamard(q)
    g.outputs = list(frontier)
    g.validate()
    correction = {v: {w} for v, w in successor.items()}
    depth = depths_from_corrections(g, correction)
    assert depth is not None
    return MbqcDiagram(g), GFlow(correction, depth)
