"""Kernels between spin tomograms and one-qubit Wigner functions.

    Ker(m, n; j, k)  = Tr(Q(m, n) O_jk)         tomogram  <- Wigner
    Ker~(m, n; j, k) = Tr(D(m, n) O_jk) / 2     Wigner    <- tomogram

with ``O`` the A or B phase-point operators. Kernels are always evaluated from
these trace definitions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .phase_space import POINTS, Variant, phase_point_operators
from .quadrature import SphereQuadrature, build_sphere_quadrature
from .tomography import (
    SPIN_PROJECTIONS,
    TomogramLike,
    axis_matrix,
    check_projection,
    tomogram_table,
)
from .wigner import WignerFunction

__all__ = [
    "KernelTable",
    "SphereQuadrature",
    "build_sphere_quadrature",
    "kernel_grid",
    "kernel_value",
    "tomogram_from_wigner",
    "wigner_from_tomogram",
]


def _kernel_array(variant: Variant, dual: bool, m: float, theta, psi) -> np.ndarray:
    """Kernel values at all four phase points, shape ``(..., 4)``."""
    m = check_projection(m)
    scale = 3 * m if dual else m
    op = np.eye(2) / 2 + scale * axis_matrix(theta, psi)
    vals = np.einsum("...ij,nji->...n", op, phase_point_operators(variant)).real
    return vals / 2 if dual else vals


def kernel_value(variant: Variant, dual: bool, m: float, theta: float, psi: float, j: int, k: int) -> float:
    return float(_kernel_array(variant, dual, m, theta, psi)[2 * j + k])


@dataclass(frozen=True)
class KernelTable:
    """One kernel family, callable as ``table(m, theta, psi, j, k)``."""

    variant: Variant
    dual: bool = False

    def __call__(self, m: float, theta: float, psi: float, j: int, k: int) -> float:
        return kernel_value(self.variant, self.dual, m, theta, psi, j, k)

    def rows(self, quad: SphereQuadrature):
        """``(variant, dual, m, theta, psi, j, k, value)`` over ``m`` x nodes x points."""
        for m in SPIN_PROJECTIONS:
            vals = _kernel_array(self.variant, self.dual, m, quad.theta, quad.psi)
            for n, (th, ps) in enumerate(zip(quad.theta, quad.psi)):
                for i, p in enumerate(POINTS):
                    yield (self.variant, self.dual, m, float(th), float(ps), p.j, p.k, float(vals[n, i]))


def kernel_grid(variant: Variant, dual: bool, quad: SphereQuadrature) -> np.ndarray:
    """Kernel values on every node, shape ``(2, len(quad), 4)``."""
    return np.stack([_kernel_array(variant, dual, m, quad.theta, quad.psi) for m in SPIN_PROJECTIONS])


def tomogram_from_wigner(w: WignerFunction, m: float, theta: float, psi: float) -> float:
    """``w(m, n) = sum_jk Ker(m, n; j, k) W(j, k)`` in the variant of ``w``."""
    return float(_kernel_array(w.variant, False, m, theta, psi) @ w.values)


def wigner_from_tomogram(
    t: TomogramLike, variant: Variant = "A", quad: SphereQuadrature | None = None
) -> WignerFunction:
    """``W(j, k) = sum_m int w(m, n) Ker~(m, n; j, k) dOmega/4pi``."""
    quad = quad or build_sphere_quadrature()
    quad.require_degree(2)
    table = tomogram_table(t, quad)
    kern = kernel_grid(variant, True, quad)
    values = np.einsum("mn,mnp->p", table * quad.weights, kern)
    return WignerFunction(variant, values)
