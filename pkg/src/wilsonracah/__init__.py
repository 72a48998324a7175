"""Wilson-Racah quantum system: orthogonal-polynomial machinery, operator
band matrices in a scaled oscillator basis, and numerical reconstruction
of the configuration-space potential."""

__version__ = "0.1.0"

from .oscillator import (
    MatrixKind,
    OscillatorBasis,
    Parity,
    TridiagonalMatrix,
    kinetic_matrix,
    position_sq_matrix,
)
from .operators import (
    GridFunction,
    SystemSpec,
    eigen_spectrum,
    fd_schrodinger_spectrum,
    hamiltonian_matrix,
    potential_matrix,
    recursion_to_hamiltonian_check,
)
from .racah import RacahParams, racah_orthonormal, racah_sequence, racah_tilde, racah_weights, racah_to_wilson, wilson_to_racah
from .reconstruct import (
    Method,
    PotentialCurve,
    ReconstructionRequest,
    assemble_wavefunction,
    default_grid,
    full_potential,
    reconstruct,
    reconstruct_method1,
    reconstruct_method2,
    stability_scan,
)
from .wilson import (
    SpectralPoint,
    WilsonParams,
    bound_state_energies,
    phase_shift,
    phase_shift_curve,
    scattering_amplitude,
    scattering_amplitude_abs,
    weight_continuous,
    wilson_orthonormal,
    wilson_orthonormal_sequence,
    wilson_sequence,
    wilson_tilde,
)

__all__ = [
    "GridFunction",
    "MatrixKind",
    "Method",
    "OscillatorBasis",
    "Parity",
    "PotentialCurve",
    "RacahParams",
    "ReconstructionRequest",
    "SpectralPoint",
    "SystemSpec",
    "TridiagonalMatrix",
    "WilsonParams",
    "assemble_wavefunction",
    "bound_state_energies",
    "default_grid",
    "eigen_spectrum",
    "fd_schrodinger_spectrum",
    "full_potential",
    "hamiltonian_matrix",
    "kinetic_matrix",
    "phase_shift",
    "phase_shift_curve",
    "position_sq_matrix",
    "potential_matrix",
    "racah_orthonormal",
    "racah_sequence",
    "racah_tilde",
    "racah_to_wilson",
    "racah_weights",
    "reconstruct",
    "reconstruct_method1",
    "reconstruct_method2",
    "recursion_to_hamiltonian_check",
    "scattering_amplitude",
    "scattering_amplitude_abs",
    "stability_scan",
    "weight_continuous",
    "wilson_orthonormal",
    "wilson_orthonormal_sequence",
    "wilson_sequence",
    "wilson_tilde",
    "wilson_to_racah",
]
