from itertools import product

import numpy as np
import pytest

from qstar.errors import DomainError, QuadratureError, SchemeConsistencyError, ShapeError
from qstar.linalg import SIGMA_X, SIGMA_Z, density_from_bloch, random_density, trace_product
from qstar.phase_space import phase_point_operator
from qstar.quadrature import build_sphere_quadrature
from qstar.scheme import (
    Scheme,
    SchemePoint,
    Symbol,
    check_consistency,
    consistency_residual,
    dual_symbol,
    intertwining_kernel,
    mean_value,
    reconstruct,
    star_kernel,
    star_multiply,
    symbol,
    tomographic_scheme,
    two_qubit_tomographic_scheme,
    wigner_scheme,
)
from qstar.tomography import dequantizer, quantizer, tomogram

RHO0 = np.diag([1.0, 0.0])


def random_operator(rng, dim=2):
    return rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))


@pytest.fixture(scope="module")
def schemes():
    return {"A": wigner_scheme("A"), "B": wigner_scheme("B"), "T": tomographic_scheme()}


class TestWignerScheme:
    def test_operators(self):
        s = wigner_scheme("A")
        a00 = phase_point_operator((0, 0), "A")
        np.testing.assert_array_equal(s.dequantizers[0], a00 / 2)
        np.testing.assert_array_equal(s.quantizers[0], a00)
        assert s.points[0].index == (0, 0)
        np.testing.assert_array_equal(s.weights, np.ones(4))

    @pytest.mark.parametrize("variant", ["A", "B"])
    def test_consistency(self, variant):
        assert consistency_residual(wigner_scheme(variant)) <= 1e-12


class TestTomographicScheme:
    def test_operators_follow_nodes(self, schemes):
        s = schemes["T"]
        for i, p in enumerate(s.points):
            (m,) = p.index
            np.testing.assert_allclose(s.dequantizers[i], dequantizer(m, p.node), atol=1e-15)
            np.testing.assert_allclose(s.quantizers[i], quantizer(m, p.node), atol=1e-15)

    def test_weights_per_projection(self, schemes):
        s = schemes["T"]
        for m in (0.5, -0.5):
            assert abs(sum(p.weight for p in s.points if p.index == (m,)) - 1) <= 1e-14

    @pytest.mark.parametrize("nq", [(2, 5), (3, 8), (2, 3)])
    def test_consistency(self, nq):
        assert consistency_residual(tomographic_scheme(build_sphere_quadrature(*nq))) <= 1e-10

    def test_insufficient_degree_rejected(self):
        with pytest.raises(SchemeConsistencyError):
            tomographic_scheme(build_sphere_quadrature(1, 4))
        with pytest.raises(QuadratureError):
            tomographic_scheme(build_sphere_quadrature(2, 2))

    def test_underresolved_scheme_is_inconsistent(self):
        q = build_sphere_quadrature(1, 4)
        good = tomographic_scheme()
        pts = [SchemePoint((m,), (float(t), float(p)), float(w)) for m in (0.5, -0.5) for t, p, w in zip(q.theta, q.psi, q.weights)]
        deq = np.stack([dequantizer(pt.index[0], pt.node) for pt in pts])
        qua = np.stack([quantizer(pt.index[0], pt.node) for pt in pts])
        bad = Scheme("bad", tuple(pts), deq, qua)
        assert consistency_residual(bad) > 1e-2
        with pytest.raises(SchemeConsistencyError):
            check_consistency(bad)
        assert consistency_residual(good) <= 1e-10

    def test_two_qubit_scheme(self, rng):
        s = two_qubit_tomographic_scheme(build_sphere_quadrature(2, 3))
        assert s.dim == 4 and len(s) == 144
        assert consistency_residual(s) <= 1e-10
        rho = random_density(rng, 4)
        np.testing.assert_allclose(reconstruct(symbol(rho, s)), rho.matrix, atol=1e-10)


class TestSymbols:
    def test_symbol_examples(self, schemes):
        np.testing.assert_allclose(symbol(np.eye(2), schemes["A"]).values, [0.5] * 4, atol=1e-15)
        np.testing.assert_allclose(symbol(np.eye(2) / 2, schemes["T"]).values, 0.5, atol=1e-15)
        np.testing.assert_allclose(dual_symbol(np.eye(2), schemes["A"]).values, [1] * 4, atol=1e-15)
        np.testing.assert_allclose(dual_symbol(np.eye(2) / 2, schemes["T"]).values, 0.5, atol=1e-15)

    def test_tomographic_symbol_is_tomogram(self, schemes, random_states):
        s = schemes["T"]
        rho = random_states(1)[0]
        expected = [tomogram(rho, p.index[0], p.node) for p in s.points]
        np.testing.assert_allclose(symbol(rho, s).values, expected, atol=1e-15)

    def test_dual_symbol_is_twice_wigner(self, schemes, random_states):
        rho = random_states(1)[0]
        np.testing.assert_allclose(dual_symbol(rho, schemes["A"]).values, 2 * symbol(rho, schemes["A"]).values, atol=1e-15)

    def test_linearity(self, schemes, rng):
        for s in schemes.values():
            a, b = random_operator(rng), random_operator(rng)
            al, be = 0.3 - 1.1j, 2.0
            lhs = symbol(al * a + be * b, s).values
            rhs = al * symbol(a, s).values + be * symbol(b, s).values
            assert np.max(np.abs(lhs - rhs)) <= 1e-14

    def test_dimension_mismatch(self, schemes):
        with pytest.raises(ShapeError):
            symbol(np.eye(4), schemes["A"])

    def test_symbol_length(self, schemes):
        with pytest.raises(ShapeError):
            Symbol(schemes["A"], [1, 2, 3])


class TestReconstruction:
    def test_uniform_wigner_symbol(self, schemes):
        out = reconstruct(Symbol(schemes["A"], [0.25] * 4))
        np.testing.assert_allclose(out, np.eye(2) / 2, atol=1e-15)

    def test_projector_roundtrip_exact(self, schemes):
        np.testing.assert_array_equal(reconstruct(symbol(RHO0, schemes["A"])), RHO0)

    def test_roundtrips(self, schemes, rng):
        for s in schemes.values():
            for _ in range(50):
                a = random_operator(rng)
                assert np.max(np.abs(reconstruct(symbol(a, s)) - a)) <= 1e-10
                assert np.max(np.abs(reconstruct(dual_symbol(a, s)) - a)) <= 1e-10


class TestIntertwining:
    def test_wigner_to_itself_is_identity(self, schemes):
        k = intertwining_kernel(schemes["A"], schemes["A"])
        np.testing.assert_allclose(k.values, np.eye(4), atol=1e-15)

    def test_wigner_to_tomographic_value(self):
        # single node at the north pole; consistency is irrelevant for this table entry
        pole = Scheme(
            "pole",
            (SchemePoint((0.5,), (0.0, 0.0), 1.0),),
            dequantizer(0.5, (0.0, 0.0))[None],
            quantizer(0.5, (0.0, 0.0))[None],
        )
        k = intertwining_kernel(wigner_scheme("A"), pole)
        assert abs(k.values[0, 0] - 1) <= 1e-15

    def test_transport(self, schemes, rng):
        for v in ("A", "B"):
            fwd = intertwining_kernel(schemes[v], schemes["T"])
            back = intertwining_kernel(schemes["T"], schemes[v])
            rho0 = density_from_bloch(0, 0, 1)
            direct = [tomogram(rho0, p.index[0], p.node) for p in schemes["T"].points]
            assert np.max(np.abs(fwd.apply(symbol(rho0, schemes[v])).values - direct)) <= 1e-12
            for _ in range(50):
                a = random_operator(rng)
                assert np.max(np.abs(fwd.apply(symbol(a, schemes[v])).values - symbol(a, schemes["T"]).values)) <= 1e-10
                assert np.max(np.abs(back.apply(symbol(a, schemes["T"])).values - symbol(a, schemes[v]).values)) <= 1e-10

    def test_between_wigner_variants(self, schemes, random_states):
        k = intertwining_kernel(schemes["B"], schemes["A"])
        rho = random_states(1)[0]
        out = k.apply(symbol(rho, schemes["B"])).values
        assert np.max(np.abs(out - symbol(rho, schemes["A"]).values)) <= 1e-12

    def test_dimension_mismatch(self, schemes):
        s4 = two_qubit_tomographic_scheme(build_sphere_quadrature(2, 3))
        with pytest.raises(ShapeError):
            intertwining_kernel(schemes["A"], s4)


class TestStarProduct:
    def test_kernel_brute_force(self, schemes):
        a = phase_point_operator((0, 0), "A")
        expected = 0
        prod = a @ a @ (a / 2)
        for i in range(2):
            expected += prod[i, i]
        assert abs(star_kernel(schemes["A"], 0, 0, 0) - expected) <= 1e-15

    def test_scalar_scheme(self):
        s = Scheme("scalar", (SchemePoint((0,), None, 1.0),), np.full((1, 1, 1), 0.5), np.full((1, 1, 1), 0.5))
        assert star_kernel(s, 0, 0, 0) == pytest.approx(1 / 8)

    def test_kernel_matches_tensor(self, schemes, rng):
        s = schemes["T"]
        for x1, x2, x in rng.integers(0, len(s), size=(20, 3)):
            assert abs(star_kernel(s, x1, x2, x) - s.star_tensor[x1, x2, x]) <= 1e-15

    def test_kernel_not_symmetric(self, schemes):
        s = schemes["A"]
        assert abs(star_kernel(s, 0, 1, 2) - star_kernel(s, 1, 0, 2)) > 1e-3

    def test_examples(self, schemes):
        for s in schemes.values():
            f_i = symbol(np.eye(2), s)
            assert np.max(np.abs(star_multiply(f_i, f_i).values - f_i.values)) <= 1e-10
            f0 = symbol(RHO0, s)
            assert np.max(np.abs(star_multiply(f0, f0).values - symbol(RHO0 @ RHO0, s).values)) <= 1e-10

    def test_homomorphism_and_associativity(self, schemes, rng):
        for s in schemes.values():
            for _ in range(100):
                a, b = random_operator(rng), random_operator(rng)
                fa, fb = symbol(a, s), symbol(b, s)
                assert np.max(np.abs(star_multiply(fa, fb).values - symbol(a @ b, s).values)) <= 1e-10
            for _ in range(20):
                fa, fb, fc = (symbol(random_operator(rng), s) for _ in range(3))
                left = star_multiply(star_multiply(fa, fb), fc)
                right = star_multiply(fa, star_multiply(fb, fc))
                assert np.max(np.abs(left.values - right.values)) <= 1e-10

    def test_scheme_mismatch(self, schemes):
        with pytest.raises(DomainError):
            star_multiply(symbol(np.eye(2), schemes["A"]), symbol(np.eye(2), schemes["B"]))

    def test_bit_reproducible(self, rng):
        a, b = random_operator(rng), random_operator(rng)
        runs = []
        for _ in range(2):
            s = tomographic_scheme()
            runs.append(star_multiply(symbol(a, s), symbol(b, s)).values.tobytes())
        assert runs[0] == runs[1]


class TestMeanValue:
    def test_examples(self, schemes):
        mixed = density_from_bloch(0, 0, 0)
        up = density_from_bloch(0, 0, 1)
        for s in schemes.values():
            assert mean_value(up, np.eye(2), s) == pytest.approx(1, abs=1e-12)
            assert mean_value(up, SIGMA_Z, s) == pytest.approx(1, abs=1e-12)
            assert mean_value(mixed, SIGMA_X, s) == pytest.approx(0, abs=1e-12)

    def test_random(self, schemes, rng):
        for s in schemes.values():
            for _ in range(100):
                rho = random_density(rng)
                g = random_operator(rng)
                obs = g + g.conj().T
                assert abs(mean_value(rho, obs, s) - trace_product(rho.matrix, obs).real) <= 1e-10

    def test_non_hermitian(self, schemes):
        with pytest.raises(DomainError):
            mean_value(density_from_bloch(0, 0, 0), np.array([[0, 1], [0, 0]]), schemes["A"])


def test_scheme_point_validation():
    with pytest.raises(DomainError):
        SchemePoint((0,), None, 0.0)
    with pytest.raises(DomainError):
        SchemePoint((0,), (4.0, 0.0), 1.0)
