"""Entropy operators of a qubit dispersively coupled to a field mode.

Closed-form atomic and field entropy operators, the partial-trace identities
linking their powers, and the Wigner function of the field entropy operator.
"""

from .errors import NearPureError, NotDensityMatrixError, TruncationError
from .fock import (
    Tolerances,
    coherent_state,
    coherent_tail_mass,
    default_dim,
    displaced_number_state,
    displaced_number_states,
    inner,
    op_from_dyad,
)
from .bipartite import (
    JointState,
    ModelParams,
    build_joint,
    field_power,
    reduce_atom,
    reduce_field,
    weighted_atom_trace,
    weighted_field_trace,
)
from .qubit import (
    AtomSpectralData,
    EntropyCoefficients,
    atom_entropy_fluctuation,
    atom_entropy_operator,
    atom_inverse,
    atom_power,
    entropy_coeffs,
    g_coeff,
    mean_atom_entropy,
    spectral_data,
)
from .field import (
    OverlapSet,
    analytic_overlaps,
    field_entropy,
    field_entropy_from_dyads,
    field_entropy_from_expansion,
    field_entropy_from_polynomial,
    field_entropy_from_spin_flip,
    field_entropy_from_trace,
    mean_field_entropy,
)
from .spectral import Spectrum, eig_hermitian, matrix_neg_log, von_neumann_entropy
from .wigner import WignerGrid, wigner_closed_form, wigner_grid, wigner_series

__version__ = "0.1.0"
