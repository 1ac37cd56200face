"""
Telling NOT words apart on a basis state
========================================

One way to see that NOT words are distinct is to apply them to a single
basis state.  This works for n = 3.  For n = 4 the published seven-word set
does not separate on any five-qubit basis state, although the operators
themselves are all different.
"""
from gybraid.image_group import (witness_state, witness_words,
                                 witness_distinctness)

###############################################################################
# n = 3 on |0100>: all three variants separate.
for variant in ("plain", "dressed", "negated"):
    print(variant, witness_distinctness(witness_words(3, variant), "0100").summary())

###############################################################################
# n = 4 on the padded state |01100>.
words = witness_words(4)
print(witness_distinctness(words, witness_state(4), 4).summary())

###############################################################################
# Scan every five-qubit basis state.
best = max(range(32), key=lambda s: -len(
    witness_distinctness(words, format(s, "05b"), 4).collisions))
report = witness_distinctness(words, format(best, "05b"), 4)
print("fewest collisions:", format(best, "05b"), len(report.collisions))
