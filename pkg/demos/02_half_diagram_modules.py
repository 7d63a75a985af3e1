"""Half-diagrams, the module action, and standard-module dimensions.

A half-diagram is a set partition of {1..n} with some blocks labeled
(marked * below).  Diagrams act by stacking; a label survives on every
top block connected to a labeled block, the action vanishes when the
label count drops, and trapped components contribute powers of delta.
"""

from diagalg import (
    HalfDiagram,
    SetPartitionDiagram,
    act,
    bell,
    dim_standard,
    enumerate_basis,
)
from diagalg.halfdiag import partitions_up_to

# The (6, 2) pair whose action contributes one delta.
d = SetPartitionDiagram(6, [[1, 2, -2], [3, -3], [4], [5, -4], [6, -5], [-1], [-6]])
v = HalfDiagram(6, [[1, 3], [2], [4], [5], [6]], labeled=[0, 3])
print("d   =", d.render())
print("v   =", v.render())
print("d.v =", act(d, v).render())

# Drop a strand and the labeled block {1,3} dies in the middle: zero.
d0 = SetPartitionDiagram(6, [[1, 2, -2], [3, 4], [5, -4], [6, -5], [-1], [-3], [-6]])
print("d0.v =", act(d0, v).render())
print()

# Basis enumeration and the dimension count behind it.
print("(2, 1) basis:", [hd.render() for hd in enumerate_basis(2, 1)])
for n in range(1, 5):
    dims = {nu: dim_standard(n, nu) for nu in partitions_up_to(n)}
    total = sum(d * d for d in dims.values())
    print(f"degree {n}: sum of squared dimensions = {total} = Bell({2 * n}) = {bell(2 * n)}")
