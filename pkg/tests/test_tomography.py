from itertools import product

import numpy as np
import pytest

from qstar import closed_forms as cf
from qstar.errors import DomainError, QuadratureError, ShapeError
from qstar.linalg import density_from_bloch, partial_trace, random_density, tensor_product
from qstar.quadrature import build_sphere_quadrature
from qstar.tomography import (
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

from .conftest import random_angles

HALF = 0.5


def random_directions(rng, n):
    return [
        Direction(t, p, f)
        for t, p, f in zip(*random_angles(rng, n), rng.uniform(0, 2 * np.pi, n))
    ]


class TestDirection:
    def test_unit_vector(self, rng):
        for d in random_directions(rng, 100):
            assert abs(np.linalg.norm(d.unit_vector) - 1) <= 1e-14

    @pytest.mark.parametrize("bad", [(-0.1, 0), (4.0, 0), (1.0, 2 * np.pi), (1.0, -0.1)])
    def test_range(self, bad):
        with pytest.raises(DomainError):
            Direction(*bad)


class TestSU2:
    def test_identity(self):
        np.testing.assert_allclose(su2_matrix(0, 0, 0), np.eye(2), atol=1e-16)

    def test_unitary(self, rng):
        for t, f, p in rng.uniform(-7, 7, size=(100, 3)):
            u = su2_matrix(t, f, p)
            assert np.max(np.abs(u.conj().T @ u - np.eye(2))) <= 1e-12

    def test_projector_conjugation_matches_explicit_form(self, rng):
        for d in random_directions(rng, 100):
            for m in SPIN_PROJECTIONS:
                assert np.max(np.abs(dequantizer_from_unitary(m, d) - dequantizer(m, d))) <= 1e-12

    def test_phi_cancels(self):
        a = dequantizer_from_unitary(HALF, Direction(1.0, 2.0, 0.0))
        b = dequantizer_from_unitary(HALF, Direction(1.0, 2.0, 5.0))
        np.testing.assert_allclose(a, b, atol=1e-15)


class TestOperators:
    def test_dequantizer_examples(self):
        np.testing.assert_allclose(dequantizer(HALF, Direction(0, 0)), np.diag([1, 0]), atol=1e-16)
        np.testing.assert_allclose(dequantizer(HALF, Direction(np.pi / 2, 0)), np.full((2, 2), 0.5), atol=1e-16)
        np.testing.assert_allclose(dequantizer(-HALF, Direction(0, 0)), np.diag([0, 1]), atol=1e-16)

    def test_quantizer_example(self):
        np.testing.assert_allclose(quantizer(HALF, Direction(0, 0)), np.diag([2, -1]), atol=1e-16)

    def test_properties(self, rng):
        for d in random_directions(rng, 100):
            qs = [dequantizer(m, d) for m in SPIN_PROJECTIONS]
            ds = [quantizer(m, d) for m in SPIN_PROJECTIONS]
            np.testing.assert_allclose(qs[0] + qs[1], np.eye(2), atol=1e-15)
            np.testing.assert_allclose(ds[0] + ds[1], np.eye(2), atol=1e-15)
            for q, dq in zip(qs, ds):
                assert np.max(np.abs(q @ q - q)) <= 1e-12
                np.testing.assert_allclose(np.linalg.eigvalsh(q), [0, 1], atol=1e-12)
                assert abs(np.trace(dq) - 1) <= 1e-14
                assert np.max(np.abs(dq - dq.conj().T)) <= 1e-15
                np.testing.assert_allclose(dq - np.eye(2) / 2, 3 * (q - np.eye(2) / 2), atol=1e-15)

    def test_bad_projection(self):
        with pytest.raises(DomainError):
            dequantizer(1.0, Direction(0, 0))


class TestTomogram:
    def test_examples(self):
        z_up = density_from_bloch(0, 0, 1)
        assert tomogram(z_up, HALF, Direction(0, 0)) == pytest.approx(1, abs=1e-15)
        mixed = density_from_bloch(0, 0, 0)
        for m in SPIN_PROJECTIONS:
            assert tomogram(mixed, m, Direction(1.1, 2.2)) == pytest.approx(0.5, abs=1e-15)
        x_up = density_from_bloch(1, 0, 0)
        assert tomogram(x_up, HALF, Direction(np.pi / 2, 0)) == pytest.approx(1, abs=1e-15)

    def test_closed_forms_1000(self, rng, random_states):
        for rho in random_states(1000):
            d = Direction(*[a[0] for a in random_angles(rng, 1)])
            x, y, z = rho.bloch
            off = (x + 1j * y) / 2
            ws = []
            for m in SPIN_PROJECTIONS:
                w = tomogram(rho, m, d)
                ws.append(w)
                assert abs(w - cf.tomogram_bloch(x, y, z, m, d.theta, d.psi)) <= 1e-12
                assert abs(w - cf.tomogram_polar((1 + z) / 2, abs(off), np.angle(off), m, d.theta, d.psi)) <= 1e-12
                assert -1e-12 <= w <= 1 + 1e-12
            assert abs(sum(ws) - 1) <= 1e-12

    def test_vectorized_matches_scalar(self, rng, random_states):
        rho = random_states(1)[0]
        t, p = random_angles(rng, 20)
        vec = Tomogram(rho)(HALF, t, p)
        assert np.max(np.abs(vec - [tomogram(rho, HALF, (a, b)) for a, b in zip(t, p)])) <= 1e-15

    def test_shape_error(self):
        with pytest.raises(ShapeError):
            tomogram(np.eye(4) / 4, HALF, Direction(0, 0))


class TestReconstruction:
    def test_constant_tomogram(self):
        rho = density_from_tomogram(lambda m, t, p: 0.5)
        assert np.max(np.abs(rho.matrix - np.eye(2) / 2)) <= 1e-14

    def test_z_up(self):
        rho = density_from_tomogram(Tomogram(density_from_bloch(0, 0, 1)))
        assert np.max(np.abs(rho.matrix - np.diag([1, 0]))) <= 1e-12

    def test_roundtrip_1000(self, random_states):
        for nq in ((2, 5), (3, 8)):
            q = build_sphere_quadrature(*nq)
            for rho in random_states(1000):
                assert np.max(np.abs(density_from_tomogram(Tomogram(rho), q).matrix - rho.matrix)) <= 1e-10

    def test_generic_callable_matches_tomogram(self, random_states):
        rho = random_states(1)[0]
        a = density_from_tomogram(Tomogram(rho)).matrix
        b = density_from_tomogram(lambda m, t, p: tomogram(rho, m, (t, p))).matrix
        assert np.max(np.abs(a - b)) <= 1e-15

    def test_insufficient_quadrature(self):
        with pytest.raises(QuadratureError):
            density_from_tomogram(lambda m, t, p: 0.5, build_sphere_quadrature(1, 1))


class TestTwoQubit:
    def test_scheme_operators(self, rng):
        z = Direction(0, 0)
        deq, qua = two_qubit_scheme_operators(HALF, HALF, z, z)
        np.testing.assert_allclose(deq, np.diag([1, 0, 0, 0]), atol=1e-16)
        d1, d2 = random_directions(rng, 2)
        total = sum(two_qubit_scheme_operators(m1, m2, d1, d2)[0] for m1, m2 in product(SPIN_PROJECTIONS, repeat=2))
        np.testing.assert_allclose(total, np.eye(4), atol=1e-15)
        for m1, m2 in product(SPIN_PROJECTIONS, repeat=2):
            assert abs(np.trace(two_qubit_scheme_operators(m1, m2, d1, d2)[1]) - 1) <= 1e-14

    def test_bell_state(self):
        psi = np.array([1, 0, 0, 1]) / np.sqrt(2)
        bell = np.outer(psi, psi)
        z = Direction(0, 0)
        expected = {(HALF, HALF): 0.5, (-HALF, -HALF): 0.5, (HALF, -HALF): 0.0, (-HALF, HALF): 0.0}
        for (m1, m2), p in expected.items():
            assert abs(two_qubit_tomogram(bell, m1, m2, z, z) - p) <= 1e-15

    def test_maximally_mixed(self, rng):
        d1, d2 = random_directions(rng, 2)
        for m1, m2 in product(SPIN_PROJECTIONS, repeat=2):
            assert two_qubit_tomogram(np.eye(4) / 4, m1, m2, d1, d2) == pytest.approx(0.25, abs=1e-15)

    def test_product_normalization_marginals(self, rng):
        for _ in range(100):
            ra, rb, r12 = random_density(rng), random_density(rng), random_density(rng, 4)
            d1, d2 = random_directions(rng, 2)
            ab = tensor_product(ra.matrix, rb.matrix)
            table = {
                (m1, m2): two_qubit_tomogram(r12, m1, m2, d1, d2) for m1, m2 in product(SPIN_PROJECTIONS, repeat=2)
            }
            assert abs(sum(table.values()) - 1) <= 1e-12
            assert all(-1e-12 <= w <= 1 + 1e-12 for w in table.values())
            for m1, m2 in product(SPIN_PROJECTIONS, repeat=2):
                w = two_qubit_tomogram(ab, m1, m2, d1, d2)
                assert abs(w - tomogram(ra, m1, d1) * tomogram(rb, m2, d2)) <= 1e-12
            r1, r2 = partial_trace(r12.matrix, 0), partial_trace(r12.matrix, 1)
            for m in SPIN_PROJECTIONS:
                assert abs(table[m, HALF] + table[m, -HALF] - tomogram(r1, m, d1)) <= 1e-12
                assert abs(table[HALF, m] + table[-HALF, m] - tomogram(r2, m, d2)) <= 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ShapeError):
            two_qubit_tomogram(np.eye(2) / 2, HALF, HALF, Direction(0, 0), Direction(0, 0))
