import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from gflowkit.angle import Angle
from gflowkit.clifford import HADAMARD, LocalClifford, xphase_matrix, zphase_matrix

fractions = st.fractions(min_value=-10, max_value=10, max_denominator=16)


def same_up_to_phase(m, n, tol=1e-9):
    k = np.unravel_index(np.argmax(np.abs(n)), n.shape)
    z = m[k] / n[k]
    return abs(abs(z) - 1) < 1e-9 and np.max(np.abs(m - z * n)) < tol


# angles ------------------------------------------------------------------------------


def test_normalisation_into_zero_two():
    assert Angle(Fraction(-1, 2)).value == Fraction(3, 2)
    assert Angle(5).value == 1
    assert Angle("-3/2").value == Fraction(1, 2)
    assert Angle("4/8") == Fraction(1, 2)


def test_string_form_is_reduced():
    assert str(Angle("2/8")) == "1/4"
    assert str(Angle(0)) == "0/1"


def test_clifford_and_pauli_predicates():
    assert Angle("1/2").is_clifford() and not Angle("1/2").is_pauli()
    assert Angle(1).is_pauli() and Angle(0).is_pauli()
    assert not Angle("1/4").is_clifford()
    assert Angle("3/2").quarter_turns() == 3
    with pytest.raises(ValueError):
        Angle("1/4").quarter_turns()


@pytest.mark.parametrize("bad", [0.25, "0.25", "1e-3", "", "abc", "1/0", True])
def test_floating_and_malformed_angles_are_refused(bad):
    with pytest.raises((TypeError, ValueError)):
        Angle(bad)


@given(fractions, fractions)
def test_arithmetic_is_modular(a, b):
    assert (Angle(a) + Angle(b)).value == (a + b) % 2
    assert (Angle(a) - b).value == (a - b) % 2
    assert (-Angle(a)).value == (-a) % 2
    assert 0 <= Angle(a).value < 2


@given(fractions)
def test_string_round_trip(a):
    x = Angle(a)
    assert Angle(str(x)) == x
    assert hash(Angle(str(x))) == hash(x)


def test_radians():
    assert Angle("1/2").radians() == pytest.approx(np.pi / 2)


# local Cliffords -----------------------------------------------------------------------


def test_exactly_24_elements_with_unique_triples():
    elements = LocalClifford.all()
    assert len(elements) == 24
    assert len({c.triple for c in elements}) == 24
    assert LocalClifford.identity().triple == (0, 0, 0)


def test_closed_under_composition_and_inverse():
    elements = set(LocalClifford.all())
    for p in elements:
        assert p @ p.inverse() == LocalClifford.identity()
        for q in elements:
            assert p @ q in elements


def test_composition_matches_matrices():
    rng = random.Random(5)
    cl = LocalClifford.all()
    for _ in range(100):
        p, q = rng.choice(cl), rng.choice(cl)
        assert same_up_to_phase((p @ q).matrix(), p.matrix() @ q.matrix())


def test_matrix_is_euler_product():
    for c in LocalClifford.all():
        a, b, k = c.triple
        m = zphase_matrix(a * np.pi / 2) @ xphase_matrix(b * np.pi / 2) @ zphase_matrix(k * np.pi / 2)
        assert same_up_to_phase(c.matrix(), m)


def test_named_elements():
    assert same_up_to_phase(LocalClifford.hadamard().matrix(), HADAMARD)
    assert same_up_to_phase(LocalClifford.z(1).matrix(), np.diag([1, 1j]))
    assert same_up_to_phase(LocalClifford.x(2).matrix(), np.array([[0, 1], [1, 0]]))
    h = LocalClifford.hadamard()
    assert h @ LocalClifford.z(2) @ h == LocalClifford.x(2)
    assert h @ h == LocalClifford.identity()


def test_from_matrix_rejects_non_clifford():
    with pytest.raises(ValueError):
        LocalClifford.from_matrix(zphase_matrix(np.pi / 4))


def test_triples_are_normalised_modulo_four():
    assert LocalClifford(5, 4, 0) == LocalClifford(1, 0, 0)
