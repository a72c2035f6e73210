"""The 2x2 discrete phase space of a qubit.

Points are ``(j, k)`` with ``j, k`` in ``{0, 1}``. The three striations and the
basis attached to each are

    rows       (fixed j)        -> |0>, |1>
    columns    (fixed k)        -> |+> on k = 0, |-> on k = 1
    diagonals  (fixed j xor k)  -> |+i> on 0, |-i> on 1,  |+-i> = (|0> +- i|1>)/sqrt 2

A phase-point operator is the sum of the projectors of the three lines through
the point, minus the identity. Variant ``"B"`` is the transpose of variant
``"A"``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache
from typing import Literal

import numpy as np

from .errors import DomainError

Variant = Literal["A", "B"]
VARIANTS: tuple[Variant, ...] = ("A", "B")


@dataclass(frozen=True, order=True)
class PhasePoint:
    j: int
    k: int

    def __post_init__(self):
        if self.j not in (0, 1) or self.k not in (0, 1):
            raise DomainError(f"phase point ({self.j}, {self.k}) is not in Z2 x Z2")

    @property
    def label(self) -> str:
        return f"{self.j}{self.k}"


POINTS: tuple[PhasePoint, ...] = tuple(PhasePoint(j, k) for j in (0, 1) for k in (0, 1))


class StriationKind(enum.Enum):
    ROWS = "Z-rows"
    COLUMNS = "X-columns"
    DIAGONALS = "Y-diagonals"

    def label_of(self, p: PhasePoint) -> int:
        if self is StriationKind.ROWS:
            return p.j
        if self is StriationKind.COLUMNS:
            return p.k
        return p.j ^ p.k


_S = 1 / np.sqrt(2)
_BASIS_KETS = {
    StriationKind.ROWS: (np.array([1, 0], dtype=complex), np.array([0, 1], dtype=complex)),
    StriationKind.COLUMNS: (np.array([_S, _S], dtype=complex), np.array([_S, -_S], dtype=complex)),
    StriationKind.DIAGONALS: (np.array([_S, 1j * _S]), np.array([_S, -1j * _S])),
}


@dataclass(frozen=True)
class Line:
    striation: StriationKind
    index: int

    @property
    def points(self) -> frozenset[PhasePoint]:
        return frozenset(p for p in POINTS if self.striation.label_of(p) == self.index)

    def __contains__(self, p: PhasePoint) -> bool:
        return self.striation.label_of(p) == self.index


@dataclass(frozen=True)
class Striation:
    kind: StriationKind
    lines: tuple[Line, Line]
    kets: tuple[np.ndarray, np.ndarray]


def striations() -> list[Striation]:
    return [
        Striation(kind, (Line(kind, 0), Line(kind, 1)), _BASIS_KETS[kind])
        for kind in StriationKind
    ]


def all_lines() -> list[Line]:
    return [line for s in striations() for line in s.lines]


def lines_through(p: PhasePoint) -> list[Line]:
    """The three lines containing ``p``, one from each striation."""
    return [Line(kind, kind.label_of(p)) for kind in StriationKind]


_PAULI = {
    StriationKind.ROWS: np.array([[1, 0], [0, -1]], dtype=complex),
    StriationKind.COLUMNS: np.array([[0, 1], [1, 0]], dtype=complex),
    StriationKind.DIAGONALS: np.array([[0, -1j], [1j, 0]], dtype=complex),
}


def line_state(line: Line) -> np.ndarray:
    """Rank-1 projector onto the basis state assigned to ``line``.

    Built as ``(I +- P) / 2`` rather than from the kets so entries are exact.
    """
    sign = 1 if line.index == 0 else -1
    return (np.eye(2) + sign * _PAULI[line.striation]) / 2


def _check_variant(variant: str) -> None:
    if variant not in VARIANTS:
        raise DomainError(f"variant must be 'A' or 'B', got {variant!r}")


@lru_cache(maxsize=None)
def _operator_cached(j: int, k: int, variant: str) -> np.ndarray:
    p = PhasePoint(j, k)
    a = sum(line_state(line) for line in lines_through(p)) - np.eye(2)
    if variant == "B":
        a = a.T
    a = np.array(a, dtype=complex)
    a.flags.writeable = False
    return a


def phase_point_operator(p: PhasePoint | tuple[int, int], variant: Variant = "A") -> np.ndarray:
    """The Hermitian, unit-trace operator attached to phase point ``p``."""
    _check_variant(variant)
    if not isinstance(p, PhasePoint):
        p = PhasePoint(*p)
    return _operator_cached(p.j, p.k, variant)


def phase_point_operators(variant: Variant = "A") -> np.ndarray:
    """All four operators stacked in ``POINTS`` order, shape ``(4, 2, 2)``."""
    return np.stack([phase_point_operator(p, variant) for p in POINTS])
