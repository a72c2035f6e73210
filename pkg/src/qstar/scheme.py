"""Quantizer/dequantizer schemes and the symbol calculus built on them.

A scheme is a finite family of points ``x`` with weights ``w(x)``, a
dequantizer ``Q(x)`` and a quantizer ``D(x)``. Continuous measures are carried
by the weights, so every integral over ``x`` is a weighted sum in point order.

    symbol          f_A(x)   = Tr(A Q(x))
    dual symbol     f^d_A(x) = Tr(A D(x))
    reconstruction  A = sum_x w(x) f_A(x) D(x) = sum_x w(x) f^d_A(x) Q(x)
    star kernel     K(x', x'', x) = Tr(D(x') D(x'') Q(x))
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import DomainError, SchemeConsistencyError, ShapeError
from .linalg import DensityMatrix, as_matrix, is_hermitian, operator_basis
from .phase_space import POINTS, Variant, phase_point_operators
from .quadrature import SphereQuadrature, build_sphere_quadrature
from .tomography import SPIN_PROJECTIONS, axis_matrix

EXACT_SCHEME_TOL = 1e-10


@dataclass(frozen=True)
class SchemePoint:
    """One point ``x``: a discrete label, an optional ``(theta, psi)`` node and a weight.

    Points of a product scheme keep their factor points in ``factors``.
    """

    index: tuple
    node: tuple[float, float] | None
    weight: float
    factors: tuple[SchemePoint, ...] = ()

    def __post_init__(self):
        if not self.weight > 0:
            raise DomainError(f"scheme weight must be positive, got {self.weight}")
        if self.node is not None:
            theta, psi = self.node
            if not (0.0 <= theta <= np.pi and 0.0 <= psi < 2 * np.pi):
                raise DomainError(f"node {self.node} outside [0, pi] x [0, 2pi)")


@dataclass(frozen=True, eq=False)
class Scheme:
    name: str
    points: tuple[SchemePoint, ...]
    dequantizers: np.ndarray
    quantizers: np.ndarray

    def __post_init__(self):
        n = len(self.points)
        for attr in ("dequantizers", "quantizers"):
            ops = np.array(getattr(self, attr), dtype=complex)
            if ops.ndim != 3 or ops.shape[0] != n or ops.shape[1] != ops.shape[2]:
                raise ShapeError(f"{attr} must have shape ({n}, d, d), got {ops.shape}")
            ops.flags.writeable = False
            object.__setattr__(self, attr, ops)
        if self.dequantizers.shape != self.quantizers.shape:
            raise ShapeError("dequantizers and quantizers differ in shape")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def dim(self) -> int:
        return self.dequantizers.shape[1]

    @cached_property
    def weights(self) -> np.ndarray:
        w = np.array([p.weight for p in self.points])
        w.flags.writeable = False
        return w

    @cached_property
    def star_tensor(self) -> np.ndarray:
        """``K[x', x'', x] = Tr(D(x') D(x'') Q(x))``."""
        d, q = self.quantizers, self.dequantizers
        return np.einsum("aij,bjk,cki->abc", d, d, q, optimize=True)

    def tensor(self, other: Scheme) -> Scheme:
        """Product scheme with Kronecker-product operators and product weights."""
        points = tuple(
            SchemePoint((p.index, q.index), None, p.weight * q.weight, (p, q))
            for p in self.points
            for q in other.points
        )
        n, d = len(points), self.dim * other.dim
        deq = np.einsum("aij,bkl->abikjl", self.dequantizers, other.dequantizers)
        qua = np.einsum("aij,bkl->abikjl", self.quantizers, other.quantizers)
        return Scheme(f"{self.name}*{other.name}", points, deq.reshape(n, d, d), qua.reshape(n, d, d))


@dataclass(frozen=True, eq=False)
class Symbol:
    """Values of ``Tr(A Q(x))`` (or ``Tr(A D(x))`` when ``dual``) on a scheme."""

    scheme: Scheme
    values: np.ndarray
    dual: bool = False

    def __post_init__(self):
        v = np.array(self.values, dtype=complex)
        if v.shape != (len(self.scheme),):
            raise ShapeError(f"symbol needs {len(self.scheme)} values, got shape {v.shape}")
        v.flags.writeable = False
        object.__setattr__(self, "values", v)

    def __len__(self) -> int:
        return len(self.values)

    @property
    def real(self) -> np.ndarray:
        return self.values.real


def _operator(op, s: Scheme) -> np.ndarray:
    m = op.matrix if isinstance(op, DensityMatrix) else as_matrix(op, "operator")
    if m.shape != (s.dim, s.dim):
        raise ShapeError(f"operator shape {m.shape} does not match scheme dimension {s.dim}")
    return m


def _traces(op: np.ndarray, family: np.ndarray) -> np.ndarray:
    return np.einsum("ij,nji->n", op, family)


def symbol(op, s: Scheme) -> Symbol:
    return Symbol(s, _traces(_operator(op, s), s.dequantizers))


def dual_symbol(op, s: Scheme) -> Symbol:
    return Symbol(s, _traces(_operator(op, s), s.quantizers), dual=True)


def reconstruct(f: Symbol) -> np.ndarray:
    """Weighted sum of quantizers (dequantizers for a dual symbol)."""
    family = f.scheme.dequantizers if f.dual else f.scheme.quantizers
    return np.einsum("n,nij->ij", f.scheme.weights * f.values, family)


def consistency_residual(s: Scheme, basis: list[np.ndarray] | None = None) -> float:
    """Largest violation of ``sum_x' w Tr(Q(x) D(x')) Tr(A Q(x')) = Tr(A Q(x))``."""
    basis = operator_basis(s.dim) if basis is None else basis
    gram = np.einsum("xij,yji->xy", s.dequantizers, s.quantizers)
    sym = np.array([_traces(a, s.dequantizers) for a in basis])
    lhs = (sym * s.weights) @ gram.T
    return float(np.max(np.abs(lhs - sym)))


def check_consistency(s: Scheme, tol: float = EXACT_SCHEME_TOL) -> Scheme:
    res = consistency_residual(s)
    if res > tol:
        raise SchemeConsistencyError(f"scheme {s.name!r} fails self-consistency: residual {res:.3g} > {tol:g}")
    return s


def wigner_scheme(variant: Variant = "A") -> Scheme:
    """Dequantizer ``A_jk / 2`` and quantizer ``A_jk`` on the four phase points, unit weights."""
    ops = phase_point_operators(variant)
    points = tuple(SchemePoint((p.j, p.k), None, 1.0) for p in POINTS)
    return check_consistency(Scheme(f"wigner-{variant}", points, ops / 2, ops))


def tomographic_scheme(quad: SphereQuadrature | None = None) -> Scheme:
    """Spin-1/2 tomography over ``{+1/2, -1/2} x nodes``, ``m`` outermost."""
    quad = quad or build_sphere_quadrature()
    quad.require_degree(2)
    m_axis = axis_matrix(quad.theta, quad.psi)
    points, deq, qua = [], [], []
    for m in SPIN_PROJECTIONS:
        for th, ps, w in zip(quad.theta, quad.psi, quad.weights):
            points.append(SchemePoint((m,), (float(th), float(ps)), float(w)))
        deq.append(np.eye(2) / 2 + m * m_axis)
        qua.append(np.eye(2) / 2 + 3 * m * m_axis)
    s = Scheme(
        f"tomographic-{quad.n_theta}x{quad.n_psi}",
        tuple(points),
        np.concatenate(deq),
        np.concatenate(qua),
    )
    return check_consistency(s)


def two_qubit_tomographic_scheme(quad: SphereQuadrature | None = None) -> Scheme:
    """Tensor square of the one-qubit tomographic scheme."""
    one = tomographic_scheme(quad)
    return check_consistency(one.tensor(one))


@dataclass(frozen=True, eq=False)
class IntertwiningKernel:
    """``K[y, x] = Tr(Q~(y) D(x))`` carrying symbols of ``source`` to ``target``."""

    source: Scheme
    target: Scheme
    values: np.ndarray

    def apply(self, f: Symbol) -> Symbol:
        if f.scheme is not self.source or f.dual:
            raise DomainError("kernel applies to plain symbols of its source scheme")
        return Symbol(self.target, self.values @ (self.source.weights * f.values))


def intertwining_kernel(source: Scheme, target: Scheme) -> IntertwiningKernel:
    if source.dim != target.dim:
        raise ShapeError(f"schemes act on dimensions {source.dim} and {target.dim}")
    values = np.einsum("yij,xji->yx", target.dequantizers, source.quantizers)
    return IntertwiningKernel(source, target, values)


def star_kernel(s: Scheme, x1: int, x2: int, x: int) -> complex:
    d, q = s.quantizers, s.dequantizers
    return complex(np.trace(d[x1] @ d[x2] @ q[x]))


def star_multiply(fa: Symbol, fb: Symbol) -> Symbol:
    """``(fa * fb)(x) = sum_{x', x''} w' w'' fa(x') fb(x'') K(x', x'', x)``."""
    s = fa.scheme
    if fb.scheme is not s:
        raise DomainError("star product of symbols on different schemes")
    if fa.dual or fb.dual:
        raise DomainError("star product is defined on plain symbols")
    wa, wb = s.weights * fa.values, s.weights * fb.values
    return Symbol(s, np.einsum("a,b,abc->c", wa, wb, s.star_tensor, optimize=True))


def mean_value(rho, obs, s: Scheme) -> float:
    """``<obs> = sum_x w(x) w_rho(x) f^d_obs(x)``."""
    obs = _operator(obs, s)
    if not is_hermitian(obs):
        raise DomainError("observable is not Hermitian")
    w_rho = symbol(rho, s).values
    f_obs = dual_symbol(obs, s).values
    return float(np.sum(s.weights * w_rho * f_obs).real)
