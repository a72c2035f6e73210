"""Self-verification suite behind ``qstar verify``.

Every check compares a library computation with an independent route (printed
closed form, explicit fixture, direct trace, brute-force enumeration) and
reports the largest residual. ``labels`` name the identities a check covers so
coverage can be audited from the report.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable

import numpy as np

from . import closed_forms as cf
from .kernels import KernelTable, kernel_grid, tomogram_from_wigner, wigner_from_tomogram
from .linalg import (
    PAULI_BASIS,
    bloch_from_density,
    density_from_bloch,
    density_from_polar,
    partial_trace,
    random_bloch_vectors,
    random_density,
    tensor_product,
    trace_product,
)
from .phase_space import POINTS, VARIANTS, all_lines, lines_through, phase_point_operators, striations
from .quadrature import build_sphere_quadrature
from .scheme import (
    consistency_residual,
    dual_symbol,
    intertwining_kernel,
    mean_value,
    reconstruct,
    star_multiply,
    symbol,
    tomographic_scheme,
    two_qubit_tomographic_scheme,
    wigner_scheme,
)
from .tomography import (
    SPIN_PROJECTIONS,
    Direction,
    Tomogram,
    density_from_tomogram,
    dequantizer,
    dequantizer_from_unitary,
    quantizer,
    su2_matrix,
    tomogram,
    two_qubit_scheme_operators,
    two_qubit_tomogram,
)
from .wigner import WignerFunction, convert_basis, density_from_wigner, wigner

SEED = 20130501
N_DRAWS = 200


@dataclass(frozen=True)
class CheckResult:
    name: str
    labels: tuple[str, ...]
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tolerance)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "labels": list(self.labels),
            "residual": self.residual,
            "tolerance": self.tolerance,
            "passed": self.passed,
        }


_CHECKS: list[tuple[str, tuple[str, ...], float, Callable[[np.random.Generator], float]]] = []


def check(name: str, labels: tuple[str, ...], tol: float):
    def register(fn):
        _CHECKS.append((name, labels, tol, fn))
        return fn

    return register


def _random_direction(rng):
    return Direction(rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi), rng.uniform(0, 2 * np.pi))


def _random_states(rng, n=N_DRAWS):
    return [density_from_bloch(*v) for v in random_bloch_vectors(rng, n)]


def _random_operator(rng, dim=2):
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


def _maxabs(a) -> float:
    return float(np.max(np.abs(a)))


# -- discrete phase space -----------------------------------------------------


@check("phase-point operators reproduce the explicit matrices", ("J1", "A-matrices", "B-matrices"), 1e-14)
def _fixtures(rng):
    return max(
        _maxabs(phase_point_operators(v)[i] - cf.fixture_matrix(v, p.j, p.k))
        for v in VARIANTS
        for i, p in enumerate(POINTS)
    )


@check("lines: three per point, one shared line per point pair", ("J1",), 0.0)
def _line_geometry(rng):
    bad = 0
    for p in POINTS:
        through = lines_through(p)
        bad += len(through) != 3 or len({line.striation for line in through}) != 3
        bad += any(p not in line.points for line in through)
    for p, q in combinations(POINTS, 2):
        bad += sum(p in line and q in line for line in all_lines()) != 1
    for s1, s2 in combinations(striations(), 2):
        bad += any(len(a.points & b.points) != 1 for a in s1.lines for b in s2.lines)
    for s in striations():
        bad += bool(s.lines[0].points & s.lines[1].points)
    return float(bad)


@check("striation bases are mutually unbiased", ("J1", "MUB"), 1e-12)
def _mub(rng):
    res = 0.0
    for s1, s2 in combinations(striations(), 2):
        for e, f in product(s1.kets, s2.kets):
            res = max(res, abs(abs(np.vdot(e, f)) ** 2 - 0.5))
    return res


@check("phase-point operator algebra: trace 1, sum 2I, Tr(A A') = 2 delta", ("J1",), 1e-12)
def _operator_algebra(rng):
    res = 0.0
    for v in VARIANTS:
        ops = phase_point_operators(v)
        res = max(res, _maxabs(np.trace(ops, axis1=1, axis2=2) - 1))
        res = max(res, _maxabs(ops.sum(axis=0) - 2 * np.eye(2)))
        gram = np.einsum("aij,bji->ab", ops, ops)
        res = max(res, _maxabs(gram - 2 * np.eye(4)))
    return res


# -- density parametrizations -------------------------------------------------


@check("polar and Bloch forms agree; Bloch roundtrip", ("W1", "W2"), 1e-14)
def _parametrizations(rng):
    res = 0.0
    for v in random_bloch_vectors(rng, N_DRAWS):
        rho = density_from_bloch(*v)
        res = max(res, _maxabs(np.array(bloch_from_density(rho)) - v))
        a = (1 + v[2]) / 2
        off = (v[0] + 1j * v[1]) / 2
        polar = density_from_polar(a, abs(off), np.angle(off))
        res = max(res, _maxabs(polar.matrix - rho.matrix))
    return res


# -- Wigner functions -----------------------------------------------------------


@check("trace Wigner function matches the closed forms", ("wigner", "W3", "BW3"), 1e-12)
def _wigner_closed(rng):
    res = 0.0
    for rho in _random_states(rng):
        for v in VARIANTS:
            res = max(res, _maxabs(wigner(rho, v).values - np.array(cf.wigner_bloch(*rho.bloch, v))))
    return res


@check("Wigner reconstruction of the state", ("W5",), 1e-12)
def _wigner_reconstruction(rng):
    res = 0.0
    for rho in _random_states(rng):
        for v in VARIANTS:
            rec = density_from_wigner(wigner(rho, v))
            res = max(res, _maxabs(rec.matrix - rho.matrix), float(not rec.physical))
    return res


@check("A/B basis change", ("ABW5",), 1e-12)
def _basis_change(rng):
    res = 0.0
    for rho in _random_states(rng):
        wa, wb = wigner(rho, "A"), wigner(rho, "B")
        res = max(res, _maxabs(convert_basis(wb, "A").values - wa.values))
        res = max(res, _maxabs(convert_basis(wa, "B").values - wb.values))
    y1 = density_from_bloch(0, 1, 0)
    res = max(res, _maxabs(convert_basis(WignerFunction("B", [0.5, 0, 0, 0.5]), "A").values - [0, 0.5, 0.5, 0]))
    res = max(res, _maxabs(wigner(y1, "A").values - [0, 0.5, 0.5, 0]))
    return res


@check("purity 2 sum W^2 = Tr(rho^2)", ("W5", "J1"), 1e-12)
def _purity(rng):
    return max(
        abs(2 * np.sum(wigner(rho, v).values ** 2) - rho.purity())
        for rho in _random_states(rng)
        for v in VARIANTS
    )


# -- spin tomography ------------------------------------------------------------


@check("U^dag |m><m| U equals the explicit dequantizer; U unitary", ("DO", "UMU", "W8"), 1e-12)
def _unitary(rng):
    res = 0.0
    for _ in range(N_DRAWS):
        d = _random_direction(rng)
        u = su2_matrix(d.theta, d.phi, d.psi)
        res = max(res, _maxabs(u.conj().T @ u - np.eye(2)))
        for m in SPIN_PROJECTIONS:
            res = max(res, _maxabs(dequantizer_from_unitary(m, d) - dequantizer(m, d)))
    return res


@check("dequantizers are projectors resolving I; quantizers have trace 1", ("deq-one-qubit", "W8", "W9"), 1e-12)
def _tomographic_operators(rng):
    res = 0.0
    for _ in range(N_DRAWS):
        d = _random_direction(rng)
        qs = [dequantizer(m, d) for m in SPIN_PROJECTIONS]
        ds = [quantizer(m, d) for m in SPIN_PROJECTIONS]
        res = max(res, _maxabs(qs[0] + qs[1] - np.eye(2)), _maxabs(ds[0] + ds[1] - np.eye(2)))
        for q, dq in zip(qs, ds):
            res = max(res, _maxabs(q @ q - q), abs(np.trace(dq) - 1))
            res = max(res, _maxabs((dq - np.eye(2) / 2) - 3 * (q - np.eye(2) / 2)))
    return res


@check("trace tomogram matches the closed forms; probabilities", ("W14",), 1e-12)
def _tomogram_closed(rng):
    res = 0.0
    for rho in _random_states(rng):
        d = _random_direction(rng)
        x, y, z = rho.bloch
        a = (1 + z) / 2
        off = (x + 1j * y) / 2
        ws = [tomogram(rho, m, d) for m in SPIN_PROJECTIONS]
        res = max(res, abs(sum(ws) - 1), max(0.0, -min(ws)))
        for m, w in zip(SPIN_PROJECTIONS, ws):
            res = max(res, abs(w - cf.tomogram_bloch(x, y, z, m, d.theta, d.psi)))
            res = max(res, abs(w - cf.tomogram_polar(a, abs(off), np.angle(off), m, d.theta, d.psi)))
    return res


@check("state from tomogram", ("reconstruct", "W9"), 1e-10)
def _tomographic_reconstruction(rng):
    quad = build_sphere_quadrature()
    return max(
        _maxabs(density_from_tomogram(Tomogram(rho), quad).matrix - rho.matrix) for rho in _random_states(rng)
    )


@check("two-qubit tomograms: normalization, product states, Bell state, marginals", ("TP1", "TP2"), 1e-12)
def _two_qubit(rng):
    res = 0.0
    bell = np.zeros((4, 4))
    bell[np.ix_([0, 3], [0, 3])] = 0.5
    z = Direction(0.0, 0.0)
    expected = {(0.5, 0.5): 0.5, (0.5, -0.5): 0.0, (-0.5, 0.5): 0.0, (-0.5, -0.5): 0.5}
    for (m1, m2), p in expected.items():
        res = max(res, abs(two_qubit_tomogram(bell, m1, m2, z, z) - p))
    for _ in range(N_DRAWS // 4):
        ra, rb = random_density(rng), random_density(rng)
        r12 = random_density(rng, 4)
        d1, d2 = _random_direction(rng), _random_direction(rng)
        prod_state = tensor_product(ra.matrix, rb.matrix)
        total = 0.0
        for m1, m2 in product(SPIN_PROJECTIONS, SPIN_PROJECTIONS):
            w = two_qubit_tomogram(r12, m1, m2, d1, d2)
            total += w
            wp = two_qubit_tomogram(prod_state, m1, m2, d1, d2)
            res = max(res, abs(wp - tomogram(ra, m1, d1) * tomogram(rb, m2, d2)))
            dq, dd = two_qubit_scheme_operators(m1, m2, d1, d2)
            res = max(res, abs(np.trace(dd) - 1))
        res = max(res, abs(total - 1))
        for m1 in SPIN_PROJECTIONS:
            marg = sum(two_qubit_tomogram(r12, m1, m2, d1, d2) for m2 in SPIN_PROJECTIONS)
            res = max(res, abs(marg - tomogram(partial_trace(r12.matrix, 0), m1, d1)))
            marg = sum(two_qubit_tomogram(r12, m2, m1, d1, d2) for m2 in SPIN_PROJECTIONS)
            res = max(res, abs(marg - tomogram(partial_trace(r12.matrix, 1), m1, d2)))
    return res


# -- star-product schemes ---------------------------------------------------------


@check("scheme self-consistency", ("operat",), 1e-10)
def _consistency(rng):
    schemes = [wigner_scheme("A"), wigner_scheme("B")]
    schemes += [tomographic_scheme(build_sphere_quadrature(*nq)) for nq in ((2, 5), (3, 8))]
    schemes.append(two_qubit_tomographic_scheme(build_sphere_quadrature(2, 3)))
    return max(consistency_residual(s) for s in schemes)


@check("symbols, dual symbols, reconstruction and mean values", ("symbol", "dual-symbol", "reconstruct", "mean-value"), 1e-10)
def _symbols(rng):
    res = 0.0
    for s in (wigner_scheme("A"), wigner_scheme("B"), tomographic_scheme()):
        for _ in range(20):
            a = _random_operator(rng)
            res = max(res, _maxabs(reconstruct(symbol(a, s)) - a))
            res = max(res, _maxabs(reconstruct(dual_symbol(a, s)) - a))
            rho = random_density(rng)
            obs = a + a.conj().T
            res = max(res, abs(mean_value(rho, obs, s) - trace_product(rho.matrix, obs).real))
    return res


@check("intertwining kernels carry Wigner symbols to tomograms and back", ("MA1", "MA2"), 1e-10)
def _intertwining(rng):
    tomo = tomographic_scheme()
    res = 0.0
    for v in VARIANTS:
        wig = wigner_scheme(v)
        forward = intertwining_kernel(wig, tomo)
        backward = intertwining_kernel(tomo, wig)
        for _ in range(20):
            a = _random_operator(rng)
            res = max(res, _maxabs(forward.apply(symbol(a, wig)).values - symbol(a, tomo).values))
            res = max(res, _maxabs(backward.apply(symbol(a, tomo)).values - symbol(a, wig).values))
    return res


@check("star product is the symbol of the operator product and is associative", ("kernel", "star-product"), 1e-10)
def _star(rng):
    res = 0.0
    for s in (wigner_scheme("A"), wigner_scheme("B"), tomographic_scheme()):
        for _ in range(10):
            a, b, c = (_random_operator(rng) for _ in range(3))
            fa, fb, fc = symbol(a, s), symbol(b, s), symbol(c, s)
            res = max(res, _maxabs(star_multiply(fa, fb).values - symbol(a @ b, s).values))
            left = star_multiply(star_multiply(fa, fb), fc)
            right = star_multiply(fa, star_multiply(fb, fc))
            res = max(res, _maxabs(left.values - right.values))
    return res


# -- kernels ---------------------------------------------------------------------


def _kernel_check(variant: str, dual: bool):
    def run(rng):
        table = KernelTable(variant, dual)
        res = 0.0
        for _ in range(N_DRAWS):
            t, s = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
            for m, p in product(SPIN_PROJECTIONS, POINTS):
                res = max(res, abs(table(m, t, s, p.j, p.k) - cf.kernel(variant, dual, m, t, s, p.j, p.k)))
        return res

    return run


for _label, _variant, _dual in (("W11", "A", False), ("W13", "A", True), ("BW11", "B", False), ("BW13", "B", True)):
    check(f"kernel {_variant}{' dual' if _dual else ''} matches closed forms", (_label,), 1e-12)(
        _kernel_check(_variant, _dual)
    )


@check("tomogram from Wigner function, both variants", ("W15",), 1e-12)
def _w15(rng):
    res = 0.0
    for rho in _random_states(rng, 100):
        d = _random_direction(rng)
        for m in SPIN_PROJECTIONS:
            direct = tomogram(rho, m, d)
            for v in VARIANTS:
                res = max(res, abs(tomogram_from_wigner(wigner(rho, v), m, d.theta, d.psi) - direct))
    return res


@check("Wigner function from tomogram on (2, 5) and (3, 8) quadratures", ("W16",), 1e-10)
def _w16(rng):
    quads = [build_sphere_quadrature(2, 5), build_sphere_quadrature(3, 8)]
    res = 0.0
    for rho in _random_states(rng):
        for v in VARIANTS:
            direct = wigner(rho, v).values
            got = [wigner_from_tomogram(Tomogram(rho), v, q).values for q in quads]
            res = max(res, _maxabs(got[0] - direct), _maxabs(got[1] - direct), _maxabs(got[0] - got[1]))
    return res


@check("quadrature weights normalized and low harmonics integrated exactly", ("W16",), 1e-12)
def _quadrature(rng):
    res = 0.0
    for nq in ((2, 5), (3, 8)):
        q = build_sphere_quadrature(*nq)
        u = np.cos(q.theta)
        st = np.sin(q.theta)
        res = max(res, abs(q.weights.sum() - 1), abs(q.integrate(u**2) - 1 / 3))
        for f in (u, st * np.cos(q.psi), st * np.sin(q.psi), u * st * np.cos(q.psi), st**2 * np.cos(2 * q.psi)):
            res = max(res, abs(q.integrate(f)))
    return res


@check("kernel bounds", ("W11", "W13", "BW11", "BW13"), 0.0)
def _kernel_bounds(rng):
    q = build_sphere_quadrature(6, 24)
    over = 0.0
    for v in VARIANTS:
        over = max(over, float(np.max(np.abs(kernel_grid(v, False, q)))) - 1.91)
        over = max(over, float(np.max(np.abs(kernel_grid(v, True, q)))) - 2.6)
    return max(over, 0.0)


def all_labels() -> list[str]:
    return sorted({label for _, labels, _, _ in _CHECKS for label in labels})


def run_checks(seed: int = SEED) -> list[CheckResult]:
    results = []
    for name, labels, tol, fn in _CHECKS:
        rng = np.random.default_rng(seed)
        results.append(CheckResult(name, labels, float(fn(rng)), tol))
    return results
