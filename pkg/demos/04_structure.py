"""
Structure of the image
======================

The image splits into an abelian part, generated by exponentiated Pauli
strings, and a copy of S_n generated by dressed NOT gates.  Conjugating by
the symmetric part moves abelian generators around, which is what makes the
product semidirect.
"""
from gybraid import RepContext
from gybraid.image_group import (conjugation_table_check, faithfulness_check,
                                 gamma_not_order, gamma_skl_independence_check,
                                 factorization_check, not_group_order)

ctx = RepContext(n=4, m=5)

###############################################################################
# Each rho(sigma) is an abelian generator times a symmetric generator.
print(factorization_check(ctx).summary())

###############################################################################
# The abelian generators commute, have order m, and are independent.
report = gamma_skl_independence_check(ctx)
print(report.summary(), report.notes)

###############################################################################
# The symmetric generators act by the expected conjugation table.
print(conjugation_table_check(ctx).summary())
print("|<NOT_2..NOT_4>| =", not_group_order(4), " |Gamma_not| =", gamma_not_order(ctx))

###############################################################################
# Distinct normal forms give distinct matrices (checked exhaustively).
print(faithfulness_check(RepContext(3, 5)).summary())
