"""Small dense complex matrices and qubit density matrices.

Matrices are plain ``numpy`` complex arrays. The one structured type is
:class:`DensityMatrix`, which only exists after validation.

Bloch coordinates follow the convention

    rho = 1/2 [[1 + z, x + i y], [x - i y, 1 - z]]

so the ``(0, 1)`` entry carries ``+i y``. This is the opposite sign of ``y``
from ``rho = (I + r . sigma) / 2`` and every closed form in the package is
written against it.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DomainError,
    HermiticityError,
    PositivityError,
    ShapeError,
    TraceError,
)

HERMITIAN_TOL = 1e-12
TRACE_TOL = 1e-12
PSD_TOL = 1e-10
NORM_TOL = 1e-12

I2 = np.eye(2, dtype=complex)
SIGMA_X = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI_BASIS = (I2, SIGMA_X, SIGMA_Y, SIGMA_Z)


def as_matrix(a, name: str = "matrix") -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2:
        raise ShapeError(f"{name} must be 2-D, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise DomainError(f"{name} has non-finite entries")
    return m


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a, dtype=complex)
    a.flags.writeable = False
    return a


def trace_product(a, b) -> complex:
    """``Tr(A B)`` without forming the product."""
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    if a.shape[1] != b.shape[0] or b.shape[1] != a.shape[0]:
        raise ShapeError(f"cannot form Tr(AB) for shapes {a.shape} and {b.shape}")
    return complex(np.sum(a * b.T))


def tensor_product(a, b) -> np.ndarray:
    a = as_matrix(a, "A")
    b = as_matrix(b, "B")
    if a.shape[0] != a.shape[1] or b.shape[0] != b.shape[1]:
        raise ShapeError("tensor_product expects square matrices")
    return np.kron(a, b)


def partial_trace(rho, keep: int) -> np.ndarray:
    """Reduce a 4x4 two-qubit operator to qubit ``keep`` (0 or 1)."""
    rho = as_matrix(rho, "rho")
    if rho.shape != (4, 4):
        raise ShapeError(f"partial_trace expects a 4x4 matrix, got {rho.shape}")
    if keep not in (0, 1):
        raise DomainError("keep must be 0 or 1")
    t = rho.reshape(2, 2, 2, 2)
    if keep == 0:
        return np.einsum("ajbj->ab", t)
    return np.einsum("jajb->ab", t)


def is_hermitian(m, tol: float = HERMITIAN_TOL) -> bool:
    m = as_matrix(m)
    return m.shape[0] == m.shape[1] and float(np.max(np.abs(m - m.conj().T))) <= tol


def eigenvalues(m) -> np.ndarray:
    """Ascending eigenvalues of a Hermitian 2x2 or 4x4 matrix.

    The 2x2 case uses the closed form ``t/2 -+ sqrt(((a - d)/2)^2 + |b|^2)``.
    """
    m = as_matrix(m)
    if m.shape == (2, 2):
        a, d = m[0, 0].real, m[1, 1].real
        half_gap = np.hypot((a - d) / 2, abs(m[0, 1]))
        centre = (a + d) / 2
        return np.array([centre - half_gap, centre + half_gap])
    return np.linalg.eigvalsh(m)


@dataclass(frozen=True, eq=False)
class DensityMatrix:
    """A validated density matrix (2x2 or 4x4)."""

    matrix: np.ndarray
    bloch: tuple[float, float, float] | None = None

    def __post_init__(self):
        object.__setattr__(self, "matrix", _frozen(self.matrix))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def purity(self) -> float:
        return trace_product(self.matrix, self.matrix).real

    def __array__(self, dtype=None, copy=None):
        return np.array(self.matrix, dtype=dtype)


def validate_density(m, bloch: tuple[float, float, float] | None = None) -> DensityMatrix:
    """Check Hermiticity, unit trace and positivity, in that order."""
    m = as_matrix(m)
    if m.shape not in ((2, 2), (4, 4)):
        raise ShapeError(f"density matrices must be 2x2 or 4x4, got {m.shape}")
    herm_err = float(np.max(np.abs(m - m.conj().T)))
    if herm_err > HERMITIAN_TOL:
        raise HermiticityError(f"matrix is not Hermitian (max deviation {herm_err:.3g})")
    tr = np.trace(m).real
    if abs(tr - 1.0) > TRACE_TOL:
        raise TraceError(f"trace is {tr:.17g}, expected 1")
    lam_min = float(eigenvalues(m)[0])
    if lam_min < -PSD_TOL:
        raise PositivityError(f"minimum eigenvalue {lam_min:.3g} is negative")
    return DensityMatrix(m, bloch)


def density_from_bloch(x: float, y: float, z: float) -> DensityMatrix:
    x, y, z = float(x), float(y), float(z)
    norm = np.sqrt(x * x + y * y + z * z)
    if not np.isfinite(norm):
        raise DomainError("Bloch components must be finite")
    if norm * norm > 1.0 + NORM_TOL:
        raise PositivityError(f"Bloch vector norm {norm:.17g} exceeds 1")
    m = 0.5 * np.array([[1 + z, x + 1j * y], [x - 1j * y, 1 - z]])
    return DensityMatrix(m, (x, y, z))


def density_from_polar(a: float, c: float, xi: float) -> DensityMatrix:
    """``[[a, c e^{i xi}], [c e^{-i xi}, 1 - a]]`` with ``b = 1 - a``."""
    a, c, xi = float(a), float(c), float(xi)
    if not (0.0 <= a <= 1.0):
        raise PositivityError(f"diagonal entry a={a} outside [0, 1]")
    if c < 0.0:
        raise DomainError(f"modulus c={c} is negative")
    if c * c > a * (1.0 - a) + NORM_TOL:
        raise PositivityError(f"c^2 = {c * c:.17g} exceeds a(1-a) = {a * (1 - a):.17g}")
    off = c * np.exp(1j * xi)
    m = np.array([[a, off], [np.conj(off), 1.0 - a]])
    return DensityMatrix(m, (2 * off.real, 2 * off.imag, 2 * a - 1.0))


def bloch_from_density(rho) -> tuple[float, float, float]:
    m = rho.matrix if isinstance(rho, DensityMatrix) else as_matrix(rho, "rho")
    if m.shape != (2, 2):
        raise ShapeError(f"Bloch coordinates need a 2x2 matrix, got {m.shape}")
    return (2 * m[0, 1].real, 2 * m[0, 1].imag, (m[0, 0] - m[1, 1]).real)


def operator_basis(dim: int) -> list[np.ndarray]:
    """Pauli basis for ``dim == 2``; all 16 Pauli products for ``dim == 4``."""
    if dim == 2:
        return list(PAULI_BASIS)
    if dim == 4:
        return [np.kron(p, q) for p in PAULI_BASIS for q in PAULI_BASIS]
    raise ShapeError(f"no operator basis for dimension {dim}")


def random_bloch_vectors(rng: np.random.Generator, n: int) -> np.ndarray:
    """``n`` points drawn uniformly from the closed unit ball, shape ``(n, 3)``."""
    v = rng.normal(size=(n, 3))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v * rng.uniform(0.0, 1.0, size=(n, 1)) ** (1.0 / 3.0)


def random_density(rng: np.random.Generator, dim: int = 2) -> DensityMatrix:
    """A random full-rank state from the Hilbert-Schmidt (Ginibre) ensemble."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    m = (m + m.conj().T) / 2
    return validate_density(m / np.trace(m).real)
