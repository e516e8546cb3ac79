import random
from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gflowkit.gf2 import GF2Matrix, eliminate, multiply, replay, solve, solve_many

WORKED = ["11000", "00110", "01110", "11011"]
WORKED_REDUCED = ["10000", "01000", "00101", "00011"]


def _matrices(max_rows=6, max_cols=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(
                st.lists(st.integers(0, 1), min_size=c, max_size=c), min_size=r, max_size=r
            )
        )
    )


def _row_space_dimension(rows: list[list[int]]) -> int:
    """Rank by enumerating every XOR combination of rows."""
    span = set()
    for coeffs in product((0, 1), repeat=len(rows)):
        v = tuple(sum(c * r[j] for c, r in zip(coeffs, rows)) % 2 for j in range(len(rows[0])))
        span.add(v)
    return len(span).bit_length() - 1


def test_worked_example_reduces_exactly():
    m = GF2Matrix.from_strings(WORKED)
    reduced, log, rank = eliminate(m)
    assert reduced.to_strings() == WORKED_REDUCED
    assert rank == 4
    assert replay(log, m) == reduced


def test_worked_example_log_is_frozen():
    _, log, _ = eliminate(GF2Matrix.from_strings(WORKED))
    assert log == [(0, 3), (2, 1), (1, 0), (1, 2), (3, 2)]


def test_zero_matrix():
    m = GF2Matrix.zeros(3, 4)
    reduced, log, rank = eliminate(m)
    assert reduced == m and log == [] and rank == 0


def test_invertible_matrix_reduces_to_identity_and_log_gives_inverse():
    rng = random.Random(7)
    n = 6
    while True:
        m = GF2Matrix.from_array(np.array([[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]))
        if m.rank() == n:
            break
    reduced, log, rank = eliminate(m)
    assert rank == n
    assert reduced == GF2Matrix.identity(n)
    inv = replay(log, GF2Matrix.identity(n))
    prod = (m.to_array() @ inv.to_array()) % 2
    assert (prod == np.eye(n, dtype=int)).all()
    prod = (inv.to_array() @ m.to_array()) % 2
    assert (prod == np.eye(n, dtype=int)).all()


def test_solve_identity():
    assert solve(GF2Matrix.identity(3), [1, 0, 1]) == [1, 0, 1]


def test_solve_inconsistent():
    assert solve(GF2Matrix.from_strings(["11", "11"]), [1, 0]) is None


def test_solve_dimension_mismatch():
    with pytest.raises(ValueError):
        solve(GF2Matrix.identity(3), [1, 0])


def test_solve_free_variables_are_zero():
    # x0 + x1 = 1 has solutions 10 and 01; free x1 is fixed to 0
    assert solve(GF2Matrix.from_strings(["11"]), [1]) == [1, 0]


def test_solve_on_example_graph_biadjacency():
    # example graph a-b, b-c, b-d, b-e, c-d, c-f; columns e, f; rows the non-outputs a, b, c, d
    names = "abcd"
    nbr = {"a": "b", "b": "acde", "c": "bdf", "d": "bc"}
    cols = "ef"
    a = GF2Matrix.from_strings(["".join("1" if c in nbr[r] else "0" for c in cols) for r in names])
    b = [1 if r == "d" else 0 for r in names]
    # brute force over subsets of {e, f}
    brute = [
        list(x)
        for x in product((0, 1), repeat=2)
        if all(sum(x[j] * int(c in nbr[r]) for j, c in enumerate(cols)) % 2 == bi for r, bi in zip(names, b))
    ]
    # d is adjacent to neither output, so no subset of {e, f} has odd neighbourhood {d}
    assert brute == []
    assert solve(a, b) is None
    # Odd({f}) restricted to the rows is {c}
    b2 = [1 if r == "c" else 0 for r in names]
    assert solve(a, b2) == [0, 1]


def test_multiply_examples():
    assert multiply(GF2Matrix.identity(3), [1, 1, 0]) == [1, 1, 0]
    assert multiply(GF2Matrix.from_strings(["11", "01"]), [1, 1]) == [0, 1]
    with pytest.raises(ValueError):
        multiply(GF2Matrix.identity(2), [1])


def test_matrix_accessors():
    m = GF2Matrix.from_strings(["101", "011"])
    assert m.shape == (2, 3)
    assert m[0, 2] == 1 and m[1, 0] == 0
    assert m.transpose().to_strings() == ["10", "01", "11"]
    assert m.hstack(GF2Matrix.identity(2)).to_strings() == ["10110", "01101"]
    with pytest.raises(ValueError):
        GF2Matrix.from_strings(["10", "1"])


@settings(max_examples=200, deadline=None)
@given(_matrices())
def test_replay_reproduces_elimination(rows):
    m = GF2Matrix.from_array(np.array(rows))
    reduced, log, _ = eliminate(m)
    assert replay(log, m) == reduced


@settings(max_examples=200, deadline=None)
@given(_matrices())
def test_elimination_is_rref_and_idempotent(rows):
    m = GF2Matrix.from_array(np.array(rows))
    reduced, _, rank = eliminate(m)
    a = reduced.to_array()
    last = -1
    for i in range(a.shape[0]):
        nz = np.flatnonzero(a[i])
        if i >= rank:
            assert nz.size == 0
            continue
        p = nz[0]
        assert p > last
        last = p
        assert a[:, p].sum() == 1
    assert eliminate(reduced)[0] == reduced


@settings(max_examples=200, deadline=None)
@given(_matrices(), st.data())
def test_solutions_satisfy_system(rows, data):
    a = GF2Matrix.from_array(np.array(rows))
    x_true = data.draw(st.lists(st.integers(0, 1), min_size=a.ncols, max_size=a.ncols))
    b = multiply(a, x_true)
    x = solve(a, b)
    assert x is not None
    assert multiply(a, x) == b


@settings(max_examples=100, deadline=None)
@given(_matrices(max_rows=6, max_cols=5))
def test_rank_matches_row_space_enumeration(rows):
    m = GF2Matrix.from_array(np.array(rows))
    r = _row_space_dimension(rows)
    assert m.rank() == r
    assert m.transpose().rank() == r


@settings(max_examples=100, deadline=None)
@given(_matrices(), st.data())
def test_multiply_is_column_xor(rows, data):
    a = GF2Matrix.from_array(np.array(rows))
    x = data.draw(st.lists(st.integers(0, 1), min_size=a.ncols, max_size=a.ncols))
    expect = [0] * a.nrows
    for j, bit in enumerate(x):
        if bit:
            expect = [e ^ rows[i][j] for i, e in enumerate(expect)]
    assert multiply(a, x) == expect


def test_solve_many_matches_single_solves():
    rng = random.Random(3)
    for _ in range(50):
        r, c = rng.randint(1, 6), rng.randint(1, 6)
        a = GF2Matrix.from_array(np.array([[rng.randint(0, 1) for _ in range(c)] for _ in range(r)]))
        rhs = [[rng.randint(0, 1) for _ in range(r)] for _ in range(4)]
        assert solve_many(a, rhs) == [solve(a, b) for b in rhs]


def test_solve_many_reports_inconsistency_per_rhs():
    a = GF2Matrix.from_strings(["1", "1"])
    assert solve_many(a, [[1, 1], [1, 0], [0, 0]]) == [[1], None, [0]]


def test_all_subsets_solver_agrees_with_brute_force():
    rng = random.Random(11)
    for _ in range(100):
        r, c = rng.randint(1, 5), rng.randint(1, 5)
        rows = [[rng.randint(0, 1) for _ in range(c)] for _ in range(r)]
        a = GF2Matrix.from_array(np.array(rows))
        b = [rng.randint(0, 1) for _ in range(r)]
        exists = any(
            all(sum(x[j] * rows[i][j] for j in range(c)) % 2 == b[i] for i in range(r))
            for k in range(c + 1)
            for cols in combinations(range(c), k)
            for x in [[int(j in cols) for j in range(c)]]
        )
        assert (solve(a, b) is not None) == exists
