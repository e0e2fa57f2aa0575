"""sodelab: disentanglement speed of multiqubit states under local noise.

Computes |dN/dt| at t = 0 (N the one-vs-rest negativity) under qubit-wise
depolarizing or dephasing noise, via an exact eigendecomposition-based
perturbation solver, closed-form speed laws, and seeded Monte Carlo
scenario datasets.
"""

from ._backend import active_backend
from .channels import CHANNEL_KINDS, DEPHASING, DEPOLARIZING, apply_channel, generator
from .experiments import ScenarioConfig, ScenarioResult, emit_dataset, run_scenario
from .linalg import (
    EigenSystem,
    hermitian_eigendecompose,
    kron,
    partial_trace,
    partial_transpose,
    trace_norm,
)
from .measures import (
    InvariantSet,
    concurrence2,
    invariants3,
    linear_entropy,
    mutual_information,
    negativity,
    negativity_pure_schmidt,
    pure_bipartite_concurrence,
)
from .sode import (
    SodeReport,
    delta_eta_phase,
    eta_bounds2,
    eta_dephasing_ghz_k,
    eta_formula,
    eta_g3,
    eta_gen3,
    eta_ghz_k,
    eta_j3,
    eta_pure2,
    eta_rho_c,
    eta_sym3,
    eta_w_k,
    robustness,
    sode_finite_difference,
    sode_perturbative,
)
from .states import (
    QuantumState,
    build,
    from_amplitudes,
    from_density,
    mix,
    random_local_unitary,
    random_mixed2,
    random_pure,
)

__version__ = "0.1.0"

__all__ = [
    "CHANNEL_KINDS",
    "DEPHASING",
    "DEPOLARIZING",
    "EigenSystem",
    "InvariantSet",
    "QuantumState",
    "ScenarioConfig",
    "ScenarioResult",
    "SodeReport",
    "active_backend",
    "apply_channel",
    "build",
    "concurrence2",
    "delta_eta_phase",
    "emit_dataset",
    "eta_bounds2",
    "eta_dephasing_ghz_k",
    "eta_formula",
    "eta_g3",
    "eta_gen3",
    "eta_ghz_k",
    "eta_j3",
    "eta_pure2",
    "eta_rho_c",
    "eta_sym3",
    "eta_w_k",
    "from_amplitudes",
    "from_density",
    "generator",
    "hermitian_eigendecompose",
    "invariants3",
    "kron",
    "linear_entropy",
    "mix",
    "mutual_information",
    "negativity",
    "negativity_pure_schmidt",
    "partial_trace",
    "partial_transpose",
    "pure_bipartite_concurrence",
    "random_local_unitary",
    "random_mixed2",
    "random_pure",
    "robustness",
    "run_scenario",
    "sode_finite_difference",
    "sode_perturbative",
    "trace_norm",
]
