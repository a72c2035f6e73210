"""Spin-1/2 tomographic dequantizers, quantizers and tomograms.

With ``M(theta, psi) = [[cos t, sin t e^{-i psi}], [sin t e^{i psi}, -cos t]]``
the operators are

    Q(m, n) = I/2 + m M        (dequantizer, a rank-1 projector)
    D(m, n) = I/2 + 3 m M      (quantizer)

for ``m = +1/2, -1/2``. Integrals over directions use the normalized measure
``dOmega / 4pi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Union

import numpy as np

from . import closed_forms
from .errors import DomainError, ShapeError
from .linalg import DensityMatrix, as_matrix, validate_density
from .quadrature import SphereQuadrature, build_sphere_quadrature

SPIN_PROJECTIONS = (0.5, -0.5)
_KETS = {0.5: np.array([1, 0], dtype=complex), -0.5: np.array([0, 1], dtype=complex)}


@dataclass(frozen=True)
class Direction:
    """Quantization axis ``(sin t sin psi, sin t cos psi, cos t)``.

    ``phi`` only enters the full SU(2) matrix and cancels in every projector.
    """

    theta: float
    psi: float
    phi: float = 0.0

    def __post_init__(self):
        if not (0.0 <= self.theta <= np.pi):
            raise DomainError(f"theta={self.theta} outside [0, pi]")
        if not (0.0 <= self.psi < 2 * np.pi):
            raise DomainError(f"psi={self.psi} outside [0, 2pi)")

    @property
    def unit_vector(self) -> np.ndarray:
        st = np.sin(self.theta)
        return np.array([st * np.sin(self.psi), st * np.cos(self.psi), np.cos(self.theta)])


DirectionLike = Union[Direction, tuple]
TomogramLike = Callable[[float, float, float], float]


def _angles(d: DirectionLike) -> tuple[float, float]:
    if isinstance(d, Direction):
        return d.theta, d.psi
    theta, psi = d[:2]
    return theta, psi


def check_projection(m: float) -> float:
    if m not in _KETS:
        raise DomainError(f"spin projection must be +1/2 or -1/2, got {m!r}")
    return float(m)


def axis_matrix(theta, psi) -> np.ndarray:
    """``M(theta, psi)``, broadcasting over array arguments to shape ``(..., 2, 2)``."""
    theta, psi = np.broadcast_arrays(np.asarray(theta, float), np.asarray(psi, float))
    c, s = np.cos(theta), np.sin(theta)
    out = np.empty(theta.shape + (2, 2), dtype=complex)
    out[..., 0, 0] = c
    out[..., 0, 1] = s * np.exp(-1j * psi)
    out[..., 1, 0] = s * np.exp(1j * psi)
    out[..., 1, 1] = -c
    return out


def su2_matrix(theta: float, phi: float, psi: float) -> np.ndarray:
    ch, sh = np.cos(theta / 2), np.sin(theta / 2)
    return np.array(
        [
            [ch * np.exp(1j * (phi + psi) / 2), sh * np.exp(1j * (phi - psi) / 2)],
            [-sh * np.exp(1j * (-phi + psi) / 2), ch * np.exp(-1j * (phi + psi) / 2)],
        ]
    )


def dequantizer(m: float, d: DirectionLike) -> np.ndarray:
    m = check_projection(m)
    return np.eye(2) / 2 + m * axis_matrix(*_angles(d))


def quantizer(m: float, d: DirectionLike) -> np.ndarray:
    m = check_projection(m)
    return np.eye(2) / 2 + 3 * m * axis_matrix(*_angles(d))


def dequantizer_from_unitary(m: float, d: Direction) -> np.ndarray:
    """``U^dag |m><m| U`` with ``|+1/2> = |0>``; equal to :func:`dequantizer`."""
    ket = _KETS[check_projection(m)]
    u = su2_matrix(d.theta, d.phi, d.psi)
    return u.conj().T @ np.outer(ket, ket.conj()) @ u


def _state_matrix(rho, dim: int) -> np.ndarray:
    m = rho.matrix if isinstance(rho, DensityMatrix) else as_matrix(rho, "rho")
    if m.shape != (dim, dim):
        raise ShapeError(f"expected a {dim}x{dim} state, got {m.shape}")
    return m


def tomogram(rho, m: float, d: DirectionLike) -> float:
    """Probability of spin projection ``m`` along ``d``: ``Tr(rho Q(m, n))``."""
    mat = _state_matrix(rho, 2)
    theta, psi = _angles(d)
    value = float(np.einsum("ij,ji->", mat, dequantizer(m, (theta, psi))).real)
    if __debug__:
        x, y, z = 2 * mat[0, 1].real, 2 * mat[0, 1].imag, (mat[0, 0] - mat[1, 1]).real
        expected = closed_forms.tomogram_bloch(x, y, z, m, theta, psi)
        assert abs(value - expected) <= 1e-12, (value, expected)
    return value


@dataclass(frozen=True, eq=False)
class Tomogram:
    """The function ``w(m, theta, psi)`` of a fixed one-qubit state."""

    state: DensityMatrix

    def __call__(self, m: float, theta, psi):
        m = check_projection(m)
        q = np.eye(2) / 2 + m * axis_matrix(theta, psi)
        w = np.einsum("ij,...ji->...", self.state.matrix, q).real
        return float(w) if np.ndim(w) == 0 else w

    def table(self, quad: SphereQuadrature) -> np.ndarray:
        """Values at every node, shape ``(2, len(quad))``, rows ordered ``+1/2, -1/2``."""
        return np.stack([self(m, quad.theta, quad.psi) for m in SPIN_PROJECTIONS])


def tomogram_table(t: TomogramLike, quad: SphereQuadrature) -> np.ndarray:
    """Evaluate any tomogram-like callable on the quadrature nodes in fixed order."""
    if isinstance(t, Tomogram):
        return t.table(quad)
    return np.array(
        [[float(t(m, th, ps)) for th, ps in zip(quad.theta, quad.psi)] for m in SPIN_PROJECTIONS]
    )


def density_from_tomogram(t: TomogramLike, quad: SphereQuadrature | None = None) -> DensityMatrix:
    """Rebuild the state as ``sum_m int w(m, n) D(m, n) dOmega/4pi``."""
    quad = quad or build_sphere_quadrature()
    quad.require_degree(2)
    table = tomogram_table(t, quad)
    rho = np.zeros((2, 2), dtype=complex)
    for row, m in zip(table, SPIN_PROJECTIONS):
        d = np.eye(2) / 2 + 3 * m * axis_matrix(quad.theta, quad.psi)
        rho += np.einsum("n,nij->ij", row * quad.weights, d)
    return validate_density(rho)


def two_qubit_scheme_operators(
    m1: float, m2: float, d1: DirectionLike, d2: DirectionLike
) -> tuple[np.ndarray, np.ndarray]:
    """Kronecker-product dequantizer and quantizer for a pair of qubits."""
    return (
        np.kron(dequantizer(m1, d1), dequantizer(m2, d2)),
        np.kron(quantizer(m1, d1), quantizer(m2, d2)),
    )


def two_qubit_tomogram(rho, m1: float, m2: float, d1: DirectionLike, d2: DirectionLike) -> float:
    mat = _state_matrix(rho, 4)
    q, _ = two_qubit_scheme_operators(m1, m2, d1, d2)
    return float(np.einsum("ij,ji->", mat, q).real)
