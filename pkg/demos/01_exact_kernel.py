"""Exact signs of nested radicals.

Every length in the geometry is a square root of a rational squared
distance, so predicates hinge on deciding the sign of radical expressions.
This script shows the kernel deciding a few such signs exactly.
"""

from equalfigures.exact import from_rational, general_path_only, sqrt

r2, r3, r6 = sqrt(2), sqrt(3), sqrt(6)

zero = r2 + r3 - sqrt(5 + 2 * r6)
print("sqrt2 + sqrt3 - sqrt(5 + 2 sqrt6) has sign", zero.sign())

tiny = from_rational(1, 10**30)
print("... plus 1/10^30 has sign", (zero + tiny).sign())
print("... minus 1/10^30 has sign", (zero - tiny).sign())

# quotients of a + b sqrt(s) stay in closed form
q = (1 + r2) / (1 - r2)
print("(1 + sqrt2) / (1 - sqrt2) =", q.to_literal())

# the same question answered by interval refinement alone
with general_path_only():
    slow = sqrt(2) * sqrt(3) - sqrt(6)
    print("general path: sqrt2 sqrt3 - sqrt6 has sign", slow.sign())
    print("cached interval width after deciding it:", float(slow.cached_width()))
