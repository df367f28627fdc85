"""peridisp: a numerical laboratory for 1-D nonlocal wave dispersion.

Computes the dispersion relation of the linear peridynamic wave equation and
its derivatives in closed form, evolves Gaussian data by the exact per-mode
spectral solution, tracks the conserved energy/momentum functionals and decay
bounds, and reproduces the reference numerical experiments as CSV artifacts
with rendered figures.
"""

from .dispersion import (
    DispersionAsymptotics,
    SecondDerivativeTail,
    classical_limit_ratio,
    count_sign_changes,
    dispersion_asymptotics,
    log_line_deviation,
    omega,
    omega_prime,
    omega_second,
    omega_sq,
    omega_sq_upper_bound,
)
from .observables import (
    NonIntegrableDataError,
    ObservableSeries,
    angular_momentum,
    energy,
    energy_closed_form,
    kinetic_energy,
    l2_decay_bound,
    l2_norm,
    momentum,
    nonlocal_seminorm,
    nonlocal_seminorm_direct,
    sup_bound,
    track_series,
)
from .params import PeridynamicParams
from .solver import (
    FieldSnapshot,
    GaussianData,
    NonHermitianModesError,
    SpectralGrid,
    SpectralResidueError,
    SpectralState,
    boundary_amplitude_ratio,
    build_grid,
    classical_evolve,
    evolve,
    forward_transform,
    gaussian_initial_data,
    inverse_transform,
    parseval_mismatch,
    prepare_state,
)
from .specfun import (
    AlphaOrder,
    DomainError,
    gamma_reflection_value,
    improper_sine_integral_J,
    partial_cosine_integral_C,
    partial_sine_integral_S,
    partial_trig_integral_F,
    trig_integral_I,
)

__version__ = "0.1.0"

__all__ = [
    "AlphaOrder",
    "DispersionAsymptotics",
    "DomainError",
    "FieldSnapshot",
    "GaussianData",
    "NonHermitianModesError",
    "NonIntegrableDataError",
    "ObservableSeries",
    "PeridynamicParams",
    "SecondDerivativeTail",
    "SpectralGrid",
    "SpectralResidueError",
    "SpectralState",
    "angular_momentum",
    "boundary_amplitude_ratio",
    "build_grid",
    "classical_evolve",
    "classical_limit_ratio",
    "count_sign_changes",
    "dispersion_asymptotics",
    "energy",
    "energy_closed_form",
    "evolve",
    "forward_transform",
    "gamma_reflection_value",
    "gaussian_initial_data",
    "improper_sine_integral_J",
    "inverse_transform",
    "kinetic_energy",
    "l2_decay_bound",
    "l2_norm",
    "log_line_deviation",
    "momentum",
    "nonlocal_seminorm",
    "nonlocal_seminorm_direct",
    "omega",
    "omega_prime",
    "omega_second",
    "omega_sq",
    "omega_sq_upper_bound",
    "parseval_mismatch",
    "partial_cosine_integral_C",
    "partial_sine_integral_S",
    "partial_trig_integral_F",
    "prepare_state",
    "sup_bound",
    "track_series",
    "trig_integral_I",
]
