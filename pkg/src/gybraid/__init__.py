"""Qubit braid group representations from generalized Yang-Baxter matrices.

For odd ``m >= 3`` the 8x8 matrix ``R`` gives a representation ``rho_R`` of
the braid group ``B_n`` on ``n + 1`` qubits whose image is
``Z_m^(n(n-1)/2) x| S_n``.  This package builds the representation, checks
the identities behind that result, and enumerates the image both as a
matrix group and in an exact normal form.
"""
from .braidrep import (BraidWord, RepContext, check_braid_relation, check_far_commutativity,
                       check_gyb, eval_word, operator_order, rho_sigma, rho_sigma_inv)
from .gates import (GateParams, NotAnInvolutionError, ParameterError, PauliWord,
                    build_r_decomposed, build_r_direct, comm_identities_check, exp_involution,
                    h_generator, not_i, not_identities_check, pauli_x, pauli_z, s_kl,
                    xor_controlled_not)
from .qlinalg import (DimensionError, PlacementError, apply_local, approx_eq, canonical_key,
                      embed_local, export_matrix, kron, matmul, matpow, max_entry_distance)
from .reports import CheckReport, EnumerationReport

__version__ = "0.1.0"
