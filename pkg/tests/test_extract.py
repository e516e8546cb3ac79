import random

import numpy as np
import pytest

import gflowkit.extract as extract_module
from randgen import random_circuit, random_diagram_with_gflow
from gflowkit.circuit import Circuit, Gate, circuit_to_pattern, eval_circuit, parse_circuit
from gflowkit.clifford import LocalClifford
from gflowkit.diagram import LabelledOpenGraph, MbqcDiagram
from gflowkit.gf2 import GF2Matrix, eliminate
from gflowkit.gflow import GFlow, find_gflow
from gflowkit.oracle import equivalent_up_to_scalar, eval_diagram
from gflowkit.extract import (
    ExtractionStats,
    clifford_gates,
    extract_circuit,
    permutation_to_swaps,
    row_operation_gate,
)
from gflowkit.rewrite import reduce_diagram


def round_trip(c, reduce=True):
    d, _ = circuit_to_pattern(c)
    f = find_gflow(d.graph)
    if reduce:
        d, f, _ = reduce_diagram(d, f)
    return extract_circuit(d, f)


def apply_swaps(gates, n):
    wires = list(range(n))  # wires[w] = which original state sits on wire w
    for g in gates:
        a, b = g.qubits
        wires[a], wires[b] = wires[b], wires[a]
    return wires


# permutations -----------------------------------------------------------------------


def test_identity_permutation_needs_no_swaps():
    assert permutation_to_swaps([0, 1, 2]) == []


def test_transposition_is_one_swap():
    assert permutation_to_swaps([1, 0]) == [Gate.swap(0, 1)]


def test_random_permutations_are_realised():
    rng = random.Random(6)
    for _ in range(100):
        perm = list(range(6))
        rng.shuffle(perm)
        gates = permutation_to_swaps(perm)
        assert len(gates) <= 5
        wires = apply_swaps(gates, 6)
        # the state that started on wire i ends on wire perm[i]
        assert all(wires[perm[i]] == i for i in range(6))


def test_non_permutation_is_rejected():
    with pytest.raises(ValueError):
        permutation_to_swaps([0, 0, 1])


# small helpers --------------------------------------------------------------------------


def test_clifford_gates_reproduce_every_clifford():
    for c in LocalClifford.all():
        circ = Circuit(1, clifford_gates(c, 0))
        assert equivalent_up_to_scalar(c.matrix(), eval_circuit(circ))[0]


def test_row_operation_orientation():
    assert row_operation_gate(0, 1) == Gate.cnot(1, 0)


def test_worked_frontier_row_operations():
    m = GF2Matrix.from_strings(["11000", "00110", "01110", "11011"])
    reduced, log, _ = eliminate(m)
    single = [i for i, r in enumerate(reduced.rows) if r and not r & (r - 1)]
    assert single == [0, 1]
    gates = [row_operation_gate(s, t) for s, t in log]
    assert gates == [Gate.cnot(3, 0), Gate.cnot(1, 2), Gate.cnot(0, 1), Gate.cnot(2, 1), Gate.cnot(2, 3)]


# extraction -------------------------------------------------------------------------


def test_identity_circuit_extracts_to_identity():
    for w in range(1, 4):
        e = round_trip(Circuit(w), reduce=False)
        assert e.count("swap") == 0
        assert equivalent_up_to_scalar(np.eye(2**w), eval_circuit(e))[0]


def test_single_gate_circuits():
    for text in ["h q0", "cz q0 q1", "cnot q0 q1", "cnot q1 q0", "swap q0 q1", "rz(1/4) q1", "rx(3/4) q0"]:
        c = parse_circuit("qubits 2\n" + text)
        for reduce in (False, True):
            e = round_trip(c, reduce)
            assert equivalent_up_to_scalar(eval_circuit(c), eval_circuit(e))[0], (text, reduce)


def test_random_three_qubit_round_trips():
    rng = random.Random(33)
    for _ in range(100):
        c = random_circuit(rng, 3, 12)
        e = round_trip(c)
        assert e.width == 3
        assert {g.kind for g in e.gates} <= {"h", "cz", "cnot", "rz", "rx", "swap"}
        assert equivalent_up_to_scalar(eval_circuit(c), eval_circuit(e))[0]


def test_random_diagrams_with_gflow_extract_exactly():
    rng = random.Random(34)
    for _ in range(200):
        d, f = random_diagram_with_gflow(rng, max_vertices=10, unitary=True, with_cliffords=True)
        e = extract_circuit(d, f)
        assert equivalent_up_to_scalar(eval_diagram(d), eval_circuit(e))[0]


def test_t_count_is_not_increased_by_reduction_and_extraction():
    rng = random.Random(35)
    for _ in range(50):
        c = random_circuit(rng, 3, 15)
        assert round_trip(c).t_count() <= c.t_count()


def test_wrong_cnot_orientation_is_caught(monkeypatch):
    # regression for the calibrated orientation: the swapped one breaks round trips
    monkeypatch.setattr(extract_module, "row_operation_gate", lambda s, t: Gate.cnot(s, t))
    rng = random.Random(36)
    failures = 0
    for _ in range(40):
        c = random_circuit(rng, 3, 12)
        failures += not equivalent_up_to_scalar(eval_circuit(c), eval_circuit(round_trip(c)))[0]
    assert failures > 0


def test_stats_are_filled_in():
    rng = random.Random(37)
    total = ExtractionStats()
    for _ in range(30):
        c = random_circuit(rng, 3, 15)
        d, _ = circuit_to_pattern(c)
        f = find_gflow(d.graph)
        d, f, _ = reduce_diagram(d, f)
        yz = sum(p.value == "YZ" for p in d.graph.plane.values())
        stats = ExtractionStats()
        extract_circuit(d, f, stats)
        assert stats.pivot_rounds <= yz + 1
        total.extracted += stats.extracted
        total.rounds += stats.rounds
    assert total.extracted > 0 and total.rounds >= 30
    assert "extracted=" in repr(total)


def test_extraction_leaves_input_untouched():
    c = random_circuit(random.Random(38), 3, 10)
    d, _ = circuit_to_pattern(c)
    f = find_gflow(d.graph)
    snapshot = d.copy()
    extract_circuit(d, f)
    assert d == snapshot


def test_errors():
    g = LabelledOpenGraph(range(2), [(0, 1)], [], [1], {0: "XY"}, {0: "1/4"})
    f = find_gflow(g)
    with pytest.raises(ValueError, match=r"\|I\| = \|O\|"):
        extract_circuit(MbqcDiagram(g), f)
    g = LabelledOpenGraph(range(3), [(0, 1), (1, 2)], [0], [2])
    with pytest.raises(ValueError, match="not a gflow"):
        extract_circuit(MbqcDiagram(g), GFlow({0: {2}, 1: {2}}, {0: 1, 1: 1, 2: 0}))
