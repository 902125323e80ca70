"""Structure-preserving Eulerian thermo-visco-elastoplasticity toolkit.

Thin re-export of the compiled core. Fields carry a variance Kind that selects
their transport rule; states are (pi, F, Fp, tau) on a periodic torus grid.
"""

from ._eulgen import (
    DissipationSpec,
    Grid,
    Kind,
    MaterialModel,
    Scheme,
    State,
    StateTangent,
    TauRole,
    TensorField,
    advisory_dt,
    commutator,
    constant_field,
    fourier_random_field,
    identity_matrix_field,
    l2_norm,
    lie_derivative,
    max_abs,
    rhs,
    simulate,
    step,
    strain_rate,
    total_energy,
    total_entropy,
    v_diss,
    v_ham,
    validate_state,
    verify_suite,
)

__all__ = [
    "DissipationSpec",
    "Grid",
    "Kind",
    "MaterialModel",
    "Scheme",
    "State",
    "StateTangent",
    "TauRole",
    "TensorField",
    "advisory_dt",
    "commutator",
    "constant_field",
    "fourier_random_field",
    "identity_matrix_field",
    "l2_norm",
    "lie_derivative",
    "max_abs",
    "rhs",
    "simulate",
    "step",
    "strain_rate",
    "total_energy",
    "total_entropy",
    "v_diss",
    "v_ham",
    "validate_state",
    "verify_suite",
]
