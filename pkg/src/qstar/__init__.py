"""Discrete Wigner functions, spin tomograms and the kernels between them for qubits."""

from .errors import (
    DomainError,
    HermiticityError,
    PhysicalityError,
    PositivityError,
    QStarError,
    QuadratureError,
    SchemeConsistencyError,
    ShapeError,
    TraceError,
)
from .kernels import KernelTable, kernel_value, tomogram_from_wigner, wigner_from_tomogram
from .linalg import (
    DensityMatrix,
    bloch_from_density,
    density_from_bloch,
    density_from_polar,
    tensor_product,
    trace_product,
    validate_density,
)
from .phase_space import PhasePoint, line_state, lines_through, phase_point_operator, striations
from .quadrature import SphereQuadrature, build_sphere_quadrature
from .scheme import (
    Scheme,
    Symbol,
    dual_symbol,
    intertwining_kernel,
    mean_value,
    reconstruct,
    star_kernel,
    star_multiply,
    symbol,
    tomographic_scheme,
    wigner_scheme,
)
from .tomography import (
    Direction,
    Tomogram,
    density_from_tomogram,
    dequantizer,
    quantizer,
    su2_matrix,
    tomogram,
    two_qubit_scheme_operators,
    two_qubit_tomogram,
)
from .wigner import WignerFunction, convert_basis, density_from_wigner, wigner

__version__ = "0.1.0"
