"""The image of rho_R as the semidirect product Z_m^(n(n-1)/2) x| S_n."""
from .checks import (conjugation_case, conjugation_table_check, faithfulness_check,
                     gamma_skl_independence_check,
                     factorization_check, witness_state, witness_words,
                     parse_gate_word, witness_distinctness, witness_variant)
from .enumeration import (closure_order, enumerate_image, enumerate_symbolic_reference,
                          gamma_not_order, not_group_order)
from .matrices import (gamma_not_generator_matrix, gamma_skl_generator_matrix,
                       pair_generator_matrix, permutation_matrix, symbolic_to_matrix)
from .permutation import Permutation
from .symbolic import (ExponentVector, ImageElement, all_elements, braid_gen_symbolic, identity, inv,
                       interval_to_pair, mul, pair_action, pair_to_interval, pairs,
                       theoretical_order, word_to_symbolic)
