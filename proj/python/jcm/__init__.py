"""Jaynes-Cummings entanglement dynamics.

Closed-form evolution of a two-level atom coupled to a single quantized field
mode (mixed atomic initial state, pure field), with negativity, von Neumann
entropies and quantum mutual entropy as time series, plus an independent
brute-force propagator for cross-checking.
"""

from ._core import (
    ChiQuad,
    ConfigError,
    IoError,
    JointDensity,
    MeasureRecord,
    OracleMismatchError,
    SweepConfig,
    SystemParams,
    TruncationPolicy,
    assemble_joint_density,
    atom_marginal,
    brute_force_state,
    build_hamiltonian,
    chi_vectors,
    choose_truncation,
    coherent_coefficients,
    dressed_energies,
    eigenvalues_hermitian,
    emit_csv,
    field_marginal,
    format_csv,
    matrix_exponential_action,
    measure_oracle_point,
    measure_sweep_point,
    mixing_angle,
    mutual_entropy,
    negativity,
    partial_transpose_atom,
    preset_config,
    rabi_frequency,
    reduced_atom,
    reduced_field,
    run_sweep,
    trace_norm,
    von_neumann_entropy,
)

__all__ = [
    "ChiQuad",
    "ConfigError",
    "IoError",
    "JointDensity",
    "MeasureRecord",
    "OracleMismatchError",
    "SweepConfig",
    "SystemParams",
    "TruncationPolicy",
    "assemble_joint_density",
    "atom_marginal",
    "brute_force_state",
    "build_hamiltonian",
    "chi_vectors",
    "choose_truncation",
    "coherent_coefficients",
    "dressed_energies",
    "eigenvalues_hermitian",
    "emit_csv",
    "field_marginal",
    "format_csv",
    "matrix_exponential_action",
    "measure_oracle_point",
    "measure_sweep_point",
    "mixing_angle",
    "mutual_entropy",
    "negativity",
    "partial_transpose_atom",
    "preset_config",
    "rabi_frequency",
    "reduced_atom",
    "reduced_field",
    "run_sweep",
    "trace_norm",
    "von_neumann_entropy",
]

__version__ = "0.1.0"
