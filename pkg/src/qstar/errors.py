"""Exception hierarchy shared by every qstar module."""

from __future__ import annotations


class QStarError(Exception):
    """Base class for all qstar errors."""


class ShapeError(QStarError, ValueError):
    """Matrix dimensions are incompatible with the requested operation."""


class DomainError(QStarError, ValueError):
    """An argument lies outside the domain where the operation is defined."""


class PhysicalityError(DomainError):
    """A matrix fails one of the density-matrix conditions."""


class HermiticityError(PhysicalityError):
    pass


class TraceError(PhysicalityError):
    pass


class PositivityError(PhysicalityError):
    pass


class SchemeConsistencyError(QStarError):
    """A quantizer/dequantizer family does not reproduce symbols."""


class QuadratureError(SchemeConsistencyError):
    """A sphere quadrature is not exact enough for the requested integral."""
