"""Product quadrature for the normalized sphere measure ``dOmega / 4pi``."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError, QuadratureError

DEFAULT_N_THETA = 3
DEFAULT_N_PSI = 8


@dataclass(frozen=True, eq=False)
class SphereQuadrature:
    """Nodes ``(theta_i, psi_i)`` with weights summing to one.

    ``degree`` is the largest ``L`` for which every spherical harmonic of
    degree ``<= L`` is integrated exactly.
    """

    theta: np.ndarray
    psi: np.ndarray
    weights: np.ndarray
    degree: int
    n_theta: int
    n_psi: int

    def __len__(self) -> int:
        return len(self.weights)

    def integrate(self, values) -> float:
        """Weighted sum over the last axis, in node order."""
        return np.asarray(values) @ self.weights

    def require_degree(self, degree: int) -> None:
        if self.degree < degree:
            raise QuadratureError(
                f"quadrature ({self.n_theta}, {self.n_psi}) is exact to degree {self.degree}, "
                f"need {degree}"
            )


def build_sphere_quadrature(n_theta: int = DEFAULT_N_THETA, n_psi: int = DEFAULT_N_PSI) -> SphereQuadrature:
    """Gauss-Legendre in ``cos(theta)`` times a uniform grid in ``psi``.

    Odd-``m`` harmonics carry a ``sin(theta)`` factor and are only killed by
    the ``psi`` sum, so exactness is ``min(2*n_theta - 1, n_psi - 1)``.
    """
    if int(n_theta) != n_theta or int(n_psi) != n_psi or n_theta < 1 or n_psi < 1:
        raise DomainError(f"node counts must be positive integers, got ({n_theta}, {n_psi})")
    n_theta, n_psi = int(n_theta), int(n_psi)
    u, gl_w = np.polynomial.legendre.leggauss(n_theta)
    psi_grid = 2 * np.pi * np.arange(n_psi) / n_psi
    theta = np.repeat(np.arccos(u), n_psi)
    psi = np.tile(psi_grid, n_theta)
    weights = np.repeat(gl_w / 2, n_psi) / n_psi
    for a in (theta, psi, weights):
        a.flags.writeable = False
    return SphereQuadrature(
        theta=theta,
        psi=psi,
        weights=weights,
        degree=min(2 * n_theta - 1, n_psi - 1),
        n_theta=n_theta,
        n_psi=n_psi,
    )
