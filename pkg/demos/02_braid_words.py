"""
Evaluating braid words two ways
===============================

A braid word can be multiplied out as 2^(n+1)-dimensional matrices, or
reduced to an exact normal form (exponent vector, permutation) and then
turned into a matrix.  The two must agree.
"""
import random

import numpy as np

from gybraid import BraidWord, RepContext, eval_word, operator_order, rho_sigma
from gybraid.image_group import symbolic_to_matrix, word_to_symbolic

ctx = RepContext(n=4, m=5)

###############################################################################
# The braid relation holds for the matrices and for the normal forms.
a, b = BraidWord.parse("1 2 1", 4), BraidWord.parse("2 1 2", 4)
print("matrix gap:", np.abs(eval_word(a, ctx) - eval_word(b, ctx)).max())
print("normal form of 1 2 1:", word_to_symbolic(a, ctx))
print("normal form of 2 1 2:", word_to_symbolic(b, ctx))

###############################################################################
# Each generator has order 2m.
print("order of rho(sigma_2):", operator_order(rho_sigma(2, ctx)))

###############################################################################
# Random words: the exact normal form reproduces the dense product.
rnd = random.Random(1)
worst = 0.0
for _ in range(200):
    w = BraidWord.random(4, rnd.randint(0, 30), rnd)
    dense = eval_word(w, ctx)
    via_normal_form = symbolic_to_matrix(word_to_symbolic(w, ctx), ctx)
    worst = max(worst, np.abs(dense - via_normal_form).max())
print(f"worst disagreement over 200 words: {worst:.2e}")
