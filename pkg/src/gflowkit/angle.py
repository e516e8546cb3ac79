"""Exact angles stored as rational multiples of pi, reduced modulo 2*pi."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

__all__ = ["Angle", "AngleLike"]

AngleLike = Union["Angle", Fraction, int, str]


class Angle:
    """An angle ``value * pi`` with ``value`` a fraction in ``[0, 2)``.

    Accepts ints, ``Fraction`` objects and strings such as ``"1/4"``, ``"-3/2"``
    or ``"1"``.  Floats are refused so that Clifford detection stays exact.
    """

    __slots__ = ("_value",)

    def __init__(self, value: AngleLike = 0) -> None:
        if isinstance(value, Angle):
            frac = value._value
        elif isinstance(value, bool):
            raise TypeError("angles must be rational, got bool")
        elif isinstance(value, (int, Fraction)):
            frac = Fraction(value)
        elif isinstance(value, str):
            frac = _parse(value)
        else:
            raise TypeError(f"angles must be rational multiples of pi, got {type(value).__name__}")
        self._value = frac % 2

    @property
    def value(self) -> Fraction:
        """The angle divided by pi."""
        return self._value

    @property
    def numerator(self) -> int:
        return self._value.numerator

    @property
    def denominator(self) -> int:
        return self._value.denominator

    def is_clifford(self) -> bool:
        return 2 % self._value.denominator == 0

    def is_pauli(self) -> bool:
        return self._value.denominator == 1

    def quarter_turns(self) -> int:
        """Number of pi/2 steps; only valid for Clifford angles."""
        if not self.is_clifford():
            raise ValueError(f"{self} is not a multiple of pi/2")
        return int(self._value * 2) % 4

    def radians(self) -> float:
        return float(self._value) * 3.141592653589793

    def __add__(self, other: AngleLike) -> Angle:
        return Angle(self._value + Angle(other)._value)

    __radd__ = __add__

    def __sub__(self, other: AngleLike) -> Angle:
        return Angle(self._value - Angle(other)._value)

    def __rsub__(self, other: AngleLike) -> Angle:
        return Angle(Angle(other)._value - self._value)

    def __neg__(self) -> Angle:
        return Angle(-self._value)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Angle):
            return self._value == other._value
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._value == Fraction(other) % 2
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("Angle", self._value))

    def __str__(self) -> str:
        return f"{self._value.numerator}/{self._value.denominator}"

    def __repr__(self) -> str:
        return f"Angle('{self}')"


def _parse(text: str) -> Fraction:
    s = text.strip()
    if not s:
        raise ValueError("empty angle")
    if any(ch in s for ch in ".eE"):
        raise ValueError(f"floating-point angle {text!r}; give a fraction such as 1/4")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed angle {text!r}") from exc
