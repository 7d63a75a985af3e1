"""Reading the multiplicity off a triangle and off a conic.

Treat p, q, r as triangle side lengths.  Concentric circles around the
incenter that cut all three sides into integer segments are counted by
the floor of the tangent length at the vertex opposite the largest side,
plus one.  Inside the strict-triangle regime the same number is
floor(|a - c|) + 1 for the conic with focal half-distance c = r/2 and
vertex half-length a = (p + q)/2 (ellipse, r largest) or |p - q|/2
(hyperbola, otherwise).
"""

from diagalg import (
    conic_eccentricity_count,
    conic_parameters,
    e_closed,
    geometric_multiplicity,
    parity_tangency,
    tangent_lengths,
)

for p, q, r in [(3, 4, 5), (2, 2, 2), (5, 3, 4), (3, 3, 4), (2, 2, 3), (1, 1, 3)]:
    tangents = tangent_lengths(p, q, r)
    circles = geometric_multiplicity(p, q, r)
    print(f"sides ({p}, {q}, {r}): tangents {tuple(str(t) for t in tangents)}, "
          f"circles {circles}, closed form {e_closed(p, q, r)}")
    if p and q and abs(p - q) < r < p + q:
        a, c, kind = conic_parameters(p, q, r)
        print(f"  {kind}: a = {a}, c = {c}, floor|a - c| + 1 = "
              f"{conic_eccentricity_count(p, q, r)}")
    if abs(p - q) <= r <= p + q:
        integral, even = parity_tangency(p, q, r)
        print(f"  tangent cuts integral: {integral}; side sum even: {even}")
