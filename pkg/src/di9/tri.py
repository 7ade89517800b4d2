"""The three semantic values. ``O`` is the absence of a truth value."""

from __future__ import annotations

import enum


class Tri(enum.Enum):
    T = "T"
    F = "F"
    O = "O"

    @classmethod
    def of(cls, value: bool) -> "Tri":
        return cls.T if value else cls.F

    @property
    def is_truth_value(self) -> bool:
        return self is not Tri.O

    def negate(self) -> "Tri":
        if self is Tri.T:
            return Tri.F
        if self is Tri.F:
            return Tri.T
        return Tri.O

    def __str__(self) -> str:
        return self.value
