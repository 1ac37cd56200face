"""
Counting the image
==================

Breadth-first closure over rho(sigma_i) and their inverses, compared with
the predicted order m^(n(n-1)/2) * n!.
"""
from gybraid import RepContext
from gybraid.image_group import enumerate_image

###############################################################################
# The matrix backend hashes every 2^(n+1)-dimensional element.
for n, m in [(2, 3), (3, 3), (3, 5)]:
    print(enumerate_image(RepContext(n, m), backend="matrix").summary())

###############################################################################
# The symbolic backend works on packed integer codes and reaches n = 5.
for n, m in [(4, 5), (5, 3)]:
    report = enumerate_image(RepContext(n, m), max_elements=10 ** 7, backend="symbolic")
    print(report.summary())

###############################################################################
# A bound smaller than the group stops the search and says so.
print(enumerate_image(RepContext(4, 5), max_elements=1000, backend="symbolic").summary())
