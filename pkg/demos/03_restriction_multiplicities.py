"""The restriction multiplicity computed four independent ways.

For label counts p, q, r the multiplicity is the number of non-negative
integer solutions (T, U, L, R) of

    T + L + R = r,    L + T + U = p,    R + U + T = q.

The four routes: a piecewise closed form, brute-force enumeration of the
system, a lattice-point count on the line x + 2y = p + q - r, and the
general standard-module coefficient sum (Littlewood-Richardson and
Kronecker coefficients), which also covers multi-row indices.
"""

from diagalg import bvo_multiplicity, e2_lattice, e_closed, e_lattice, symmetry_suite
from diagalg.multiplicity import admissible_degree_pairs, one_part

for p, q, r in [(2, 2, 2), (5, 3, 4), (1, 1, 3), (6, 6, 4)]:
    count, solutions = e_lattice(p, q, r)
    (m, n), _ = admissible_degree_pairs(p, q, r)
    coeff_sum = bvo_multiplicity(one_part(r), one_part(p), one_part(q), m, n)
    print(f"(p, q, r) = ({p}, {q}, {r})")
    print(f"  closed form {e_closed(p, q, r)}, system {count}, "
          f"lattice {e2_lattice(p, q, r)}, coefficient sum {coeff_sum}")
    for s in solutions:
        print(f"  solution: T={s.through_labeled} U={s.through_unlabeled} "
              f"L={s.left_labeled} R={s.right_labeled}")

# Multi-row indices go through the same coefficient sum.
print()
print("two-row index (1,1) against single labels:",
      bvo_multiplicity((1, 1), (1,), (1,), 1, 1))

# The five standing identities at one triple.
report = symmetry_suite(5, 3, 4)
print()
print(f"symmetry report at (5, 3, 4): ok = {report.ok}")
for item, detail in report.details.items():
    print(f"  {item}: {detail}")
