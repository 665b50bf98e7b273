"""Normal forms in quantum matrices, Plucker relations, and a Laplace expansion that fails.

Run: python demos/plucker_relations.py
"""

from qgrass.laurent import LaurentInt
from qgrass.qmatrix import QMatrixAlgebra, full_algebra, muir_lift, plucker
from qgrass.shapes import Partition

q = LaurentInt.q(1)

# Products are rewritten into ordered monomials.  The only relation that
# produces an extra term is the one between x[1,1] and x[2,2].
A = full_algebra(2, 2)
x = A.gen
print("x[2,2] x[1,1] =", x(2, 2) * x(1, 1))
print("x[1,2] x[1,1] =", x(1, 2) * x(1, 1))

# The maximal minors of a 2x4 generic matrix satisfy a three-term relation.
p = lambda cols: plucker(2, 4, cols)  # noqa: E731
relation = p((1, 2)) * p((3, 4)) - q * (p((1, 3)) * p((2, 4))) + LaurentInt.q(2) * (p((1, 4)) * p((2, 3)))
print("\n[12][34] - q[13][24] + q^2[14][23] =", relation)
print("[12] =", p((1, 2)))

# Appending a common column to every index set lifts the relation to 3x5.
terms = [(LaurentInt.q(0), (1, 2), (3, 4)), (-q, (1, 3), (2, 4)), (LaurentInt.q(2), (1, 4), (2, 3))]
print("lifted with column 5:", muir_lift(terms, (5,), 3, 5))

# In a proper partition shape, generators outside the shape are set to zero.
# Most Laplace expansions survive this, but expanding the first row on the
# right (with q inverted) does not.
S = QMatrixAlgebra(2, 2, Partition((2, 1)))
print("\nin shape (2,1):")
print("  minor [12|12]             =", S.minor((1, 2), (1, 2)))
print("  first-row-left expansion  =", S.laplace_expand((1, 2), (1, 2), "row-first-left"))
print("  first-row-right expansion =", S.laplace_expand((1, 2), (1, 2), "row-first-right"))
