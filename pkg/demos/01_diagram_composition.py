"""Composing set-partition diagrams with exact delta bookkeeping.

A diagram of degree n is a set partition of 2n dots, written with signed
integers: +k for the k-th top dot, -k for the k-th bottom dot.  Stacking
two diagrams merges their middle rows; every component trapped in the
middle contributes one power of the loop parameter delta.
"""

from diagalg import SetPartitionDiagram, compose, generator, propagating_number

# A worked degree-6 pair: stacking traps two middle components.
d1 = SetPartitionDiagram(6, [[1, 2, -2], [3], [4, 6, -6], [5], [-1], [-3], [-4], [-5]])
d2 = SetPartitionDiagram(6, [[1], [2], [3, 4, 5], [6, -4, -6], [-1, -2, -3], [-5]])

t, product = compose(d1, d2)
print("d1      =", d1.render())
print("d2      =", d2.render())
print(f"d1 ∘ d2 = δ^{t} ·", product.render())
print("propagating numbers:", propagating_number(d1), propagating_number(d2), "->", propagating_number(product))
print()

# The three generator families and their relations.
n = 4
e = generator("E", 1, 2, n)   # merge strands 1 and 2
p = generator("P", 3, None, n)  # cut strand 3
s = generator("S", 2, 4, n)   # swap strands 2 and 4

for name, g in [("e[1,2]", e), ("p[3]", p), ("s[2,4]", s)]:
    t, square = compose(g, g)
    delta = "" if t == 0 else f"δ^{t} · " if t > 1 else "δ · "
    print(f"{name}^2 = {delta}{square.render()}")
