"""Printed closed-form expressions used as independent oracles.

Nothing here is computed from operators: every function is a transcription of
an explicit formula in Bloch or angle variables. The library computes the same
quantities from trace definitions and the test suite and ``qstar verify``
compare the two.
"""

from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import numpy as np

_cos, _sin = np.cos, np.sin


def tomogram_bloch(x, y, z, m, theta, psi):
    """``w(+-1/2) = (1 +- (z cos t + x sin t cos psi - y sin t sin psi)) / 2``."""
    s = z * _cos(theta) + x * _sin(theta) * _cos(psi) - y * _sin(theta) * _sin(psi)
    return 0.5 * (1 + s) if m > 0 else 0.5 * (1 - s)


def tomogram_polar(a, c, xi, m, theta, psi):
    """``w(+-1/2) = 1/2 +- ((a - b)/2 cos t + c sin t cos(psi + xi))`` with ``b = 1 - a``."""
    b = 1 - a
    s = (a - b) / 2 * _cos(theta) + c * _sin(theta) * _cos(psi + xi)
    return 0.5 + s if m > 0 else 0.5 - s


def wigner_bloch(x, y, z, variant):
    """Wigner components ordered ``(00, 01, 10, 11)``."""
    if variant == "A":
        return (
            (1 + z + x - y) / 4,
            (1 + z - x + y) / 4,
            (1 - z + x + y) / 4,
            (1 - z - x - y) / 4,
        )
    return (
        (1 + z + x + y) / 4,
        (1 + z - x - y) / 4,
        (1 - z + x - y) / 4,
        (1 - z - x + y) / 4,
    )


def _p(t, s):
    return _sin(t) * (_cos(s) + _sin(s))


def _q(t, s):
    return _sin(t) * (_cos(s) - _sin(s))


# Keyed by (variant, dual, m, j, k).
KERNELS = {
    ("A", False, +0.5, 0, 0): lambda t, s: (1 + _cos(t) + _p(t, s)) / 2,
    ("A", False, -0.5, 0, 0): lambda t, s: (1 - _cos(t) - _p(t, s)) / 2,
    ("A", False, +0.5, 0, 1): lambda t, s: (1 + _cos(t) - _p(t, s)) / 2,
    ("A", False, -0.5, 0, 1): lambda t, s: (1 - _cos(t) + _p(t, s)) / 2,
    ("A", False, +0.5, 1, 0): lambda t, s: (1 - _cos(t) + _q(t, s)) / 2,
    ("A", False, -0.5, 1, 0): lambda t, s: (1 + _cos(t) - _q(t, s)) / 2,  # printed without /2
    ("A", False, +0.5, 1, 1): lambda t, s: (1 - _cos(t) - _q(t, s)) / 2,
    ("A", False, -0.5, 1, 1): lambda t, s: (1 + _cos(t) + _q(t, s)) / 2,
    ("A", True, +0.5, 0, 0): lambda t, s: (1 + 3 * _cos(t) + 3 * _p(t, s)) / 4,
    ("A", True, -0.5, 0, 0): lambda t, s: (1 - 3 * _cos(t) - 3 * _p(t, s)) / 4,
    ("A", True, +0.5, 0, 1): lambda t, s: (1 + 3 * _cos(t) - 3 * _p(t, s)) / 4,
    ("A", True, -0.5, 0, 1): lambda t, s: (1 - 3 * _cos(t) + 3 * _p(t, s)) / 4,
    ("A", True, +0.5, 1, 0): lambda t, s: (1 - 3 * _cos(t) + 3 * _q(t, s)) / 4,
    ("A", True, -0.5, 1, 0): lambda t, s: (1 + 3 * _cos(t) - 3 * _q(t, s)) / 4,
    ("A", True, +0.5, 1, 1): lambda t, s: (1 - 3 * _cos(t) - 3 * _q(t, s)) / 4,
    ("A", True, -0.5, 1, 1): lambda t, s: (1 + 3 * _cos(t) + 3 * _q(t, s)) / 4,
    ("B", False, +0.5, 0, 0): lambda t, s: (1 + _cos(t) + _q(t, s)) / 2,
    ("B", False, -0.5, 0, 0): lambda t, s: (1 - _cos(t) - _q(t, s)) / 2,
    ("B", False, +0.5, 0, 1): lambda t, s: (1 + _cos(t) - _q(t, s)) / 2,
    ("B", False, -0.5, 0, 1): lambda t, s: (1 - _cos(t) + _q(t, s)) / 2,
    ("B", False, +0.5, 1, 0): lambda t, s: (1 - _cos(t) + _p(t, s)) / 2,
    ("B", False, -0.5, 1, 0): lambda t, s: (1 + _cos(t) - _p(t, s)) / 2,
    ("B", False, +0.5, 1, 1): lambda t, s: (1 - _cos(t) - _p(t, s)) / 2,
    ("B", False, -0.5, 1, 1): lambda t, s: (1 + _cos(t) + _p(t, s)) / 2,
    ("B", True, +0.5, 0, 0): lambda t, s: (1 + 3 * _cos(t) + 3 * _q(t, s)) / 4,
    ("B", True, -0.5, 0, 0): lambda t, s: (1 - 3 * _cos(t) - 3 * _q(t, s)) / 4,
    ("B", True, +0.5, 0, 1): lambda t, s: (1 + 3 * _cos(t) - 3 * _q(t, s)) / 4,
    ("B", True, -0.5, 0, 1): lambda t, s: (1 - 3 * _cos(t) + 3 * _q(t, s)) / 4,
    ("B", True, +0.5, 1, 0): lambda t, s: (1 - 3 * _cos(t) + 3 * _p(t, s)) / 4,
    ("B", True, -0.5, 1, 0): lambda t, s: (1 + 3 * _cos(t) - 3 * _p(t, s)) / 4,
    ("B", True, +0.5, 1, 1): lambda t, s: (1 - 3 * _cos(t) - 3 * _p(t, s)) / 4,
    ("B", True, -0.5, 1, 1): lambda t, s: (1 + 3 * _cos(t) + 3 * _p(t, s)) / 4,
}

# Lines whose printed form differs from the tabulated (corrected) one.
PRINTED_TYPOS = {
    ("A", False, -0.5, 1, 0): lambda t, s: 1 + _cos(t) - _q(t, s),
}


def kernel(variant, dual, m, theta, psi, j, k):
    return KERNELS[(variant, bool(dual), float(m), j, k)](theta, psi)


def matrix_from_json(obj) -> np.ndarray:
    """Decode ``{"dim": n, "re": [[...]], "im": [[...]]}``."""
    re = np.asarray(obj["re"], dtype=float)
    im = np.asarray(obj.get("im", np.zeros_like(re)), dtype=float)
    m = re + 1j * im
    if m.shape != (obj["dim"], obj["dim"]):
        raise ValueError(f"matrix shape {m.shape} does not match dim={obj['dim']}")
    return m


def matrix_to_json(m) -> dict:
    m = np.asarray(m, dtype=complex)
    return {"dim": m.shape[0], "re": m.real.tolist(), "im": m.imag.tolist()}


@lru_cache(maxsize=None)
def _fixtures() -> dict:
    text = resources.files("qstar").joinpath("data/phase_point_operators.json").read_text()
    return json.loads(text)


def fixture_matrix(variant: str, j: int, k: int) -> np.ndarray:
    """The explicitly printed phase-point matrix for ``(j, k)``."""
    return matrix_from_json(_fixtures()["operators"][f"{variant}{j}{k}"])
