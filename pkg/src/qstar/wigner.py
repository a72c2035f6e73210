"""One-qubit discrete Wigner functions in the A and B operator variants."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, PhysicalityError, ShapeError
from .linalg import DensityMatrix, as_matrix, validate_density
from .phase_space import POINTS, VARIANTS, PhasePoint, Variant, phase_point_operators

NORMALIZATION_TOL = 1e-10
VALUE_BOUNDS = ((1 - np.sqrt(3)) / 4, (1 + np.sqrt(3)) / 4)


@dataclass(frozen=True, eq=False)
class WignerFunction:
    """Four quasi-probabilities in ``POINTS`` order ``(00, 01, 10, 11)``."""

    variant: Variant
    values: np.ndarray

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise DomainError(f"variant must be 'A' or 'B', got {self.variant!r}")
        v = np.array(self.values, dtype=float)
        if v.shape != (4,):
            raise ShapeError(f"a Wigner function has 4 values, got shape {v.shape}")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __getitem__(self, point) -> float:
        if not isinstance(point, PhasePoint):
            point = PhasePoint(*point)
        return float(self.values[2 * point.j + point.k])

    def total(self) -> float:
        return float(np.sum(self.values))

    def to_dict(self) -> dict:
        return {
            "variant": self.variant,
            "values": {p.label: float(v) for p, v in zip(POINTS, self.values)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, obj: dict) -> WignerFunction:
        return cls(obj["variant"], [obj["values"][p.label] for p in POINTS])


def wigner(rho, variant: Variant = "A") -> WignerFunction:
    """``W(j, k) = Tr(rho A_jk) / 2``."""
    m = rho.matrix if isinstance(rho, DensityMatrix) else as_matrix(rho, "rho")
    if m.shape != (2, 2):
        raise ShapeError(f"one-qubit Wigner function needs a 2x2 state, got {m.shape}")
    ops = phase_point_operators(variant)
    return WignerFunction(variant, np.einsum("ij,nji->n", m, ops).real / 2)


@dataclass(frozen=True, eq=False)
class Reconstruction:
    """Matrix rebuilt from a Wigner quadruple; ``physical`` is False when it is not PSD."""

    matrix: np.ndarray
    physical: bool
    state: DensityMatrix | None = None


def reconstruct_operator(w: WignerFunction) -> np.ndarray:
    return np.einsum("n,nij->ij", w.values, phase_point_operators(w.variant))


def density_from_wigner(w: WignerFunction) -> Reconstruction:
    """``rho = sum_jk W(j, k) A_jk``.

    Quadruples summing to one always give a Hermitian unit-trace matrix; those
    outside the state space come back flagged with ``physical=False``.
    """
    if abs(w.total() - 1.0) > NORMALIZATION_TOL:
        raise DomainError(f"Wigner values sum to {w.total():.17g}, expected 1")
    m = reconstruct_operator(w)
    try:
        state = validate_density(m)
    except PhysicalityError:
        return Reconstruction(m, False)
    return Reconstruction(state.matrix, True, state)


def _overlap(source: Variant, target: Variant) -> np.ndarray:
    """``T[i, l] = Tr(O^target_i O^source_l) / 2``."""
    a = phase_point_operators(target)
    b = phase_point_operators(source)
    return np.einsum("aij,bji->ab", a, b).real / 2


def convert_basis(w: WignerFunction, target: Variant) -> WignerFunction:
    """``W^A(i, j) = 1/2 sum_{l,k} W^B(l, k) Tr(A_ij B_lk)``, and symmetrically."""
    if target not in VARIANTS:
        raise DomainError(f"variant must be 'A' or 'B', got {target!r}")
    if target == w.variant:
        return w
    return WignerFunction(target, _overlap(w.variant, target) @ w.values)
