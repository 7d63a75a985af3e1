"""The restriction multiplicity of half-diagram modules, by several routes.

For one-part labels p, q, r the multiplicity counts the non-negative
integer solutions of the linear system

    T + L + R = r,    L + T + U = p,    R + U + T = q,

and this module computes it four independent ways: a closed piecewise
formula, direct enumeration of the system, a lattice-point count on a
half-integer line, and the general standard-module coefficient sum over
Littlewood-Richardson and Kronecker coefficients.  A symmetry checker
bundles the boundary and reflection identities the value satisfies.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cache
from typing import NamedTuple

from .halfdiag import dim_standard
from .symfunc import (
    Partition,
    check_partition,
    kronecker_coeff,
    lr_coeff,
    partitions_of,
)


class E1Solution(NamedTuple):
    """One solution of the three-equation system, by block-count meaning."""

    through_labeled: int
    through_unlabeled: int
    left_labeled: int
    right_labeled: int

    def to_json(self) -> dict[str, int]:
        return {
            "through_labeled": self.through_labeled,
            "through_unlabeled": self.through_unlabeled,
            "left_labeled": self.left_labeled,
            "right_labeled": self.right_labeled,
        }


def _check_count(value: int, name: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ValueError(f"{name} must be a non-negative integer, got {value!r}")
    return value


def e_closed(p: int, q: int, r: int) -> int:
    """Closed form of the multiplicity.

    Zero outside the (degenerate) triangle band; inside, the floor of half
    the tangent gap plus one, with the middle branch owning the boundary
    where r ties the largest of p and q.
    """
    p, q, r = (_check_count(v, name) for v, name in ((p, "p"), (q, "q"), (r, "r")))
    gap = abs(p - q)
    if p + q < r or r < gap:
        return 0
    if 2 * r <= p + q + gap:
        return (r - gap) // 2 + 1
    return (p + q - r) // 2 + 1


def e_lattice(p: int, q: int, r: int) -> tuple[int, list[E1Solution]]:
    """Exhaustive enumeration of the system's non-negative solutions."""
    p, q, r = (_check_count(v, name) for v, name in ((p, "p"), (q, "q"), (r, "r")))
    solutions: list[E1Solution] = []
    for t in range(r + 1):
        for u in range(min(p, q) + 1):
            left = p - t - u
            right = q - t - u
            if left >= 0 and right >= 0 and t + left + right == r:
                solutions.append(E1Solution(t, u, left, right))
    return len(solutions), solutions


def lattice_line_count(s: int, h: int) -> int:
    """Lattice points on x + 2y = h with x, y >= 0 and x + y <= s.

    Walked as an L-shaped traversal from (h, 0): two steps left, one step
    up, counting the points that stay inside the triangular region.
    """
    if h < 0:
        return 0
    count = 0
    x, y = h, 0
    while x >= 0:
        if x + y <= s:
            count += 1
        x -= 2
        y += 1
    return count


def e2_lattice(p: int, q: int, r: int) -> int:
    """Multiplicity as a lattice count with h = p + q - r and s = min(p, q)."""
    p, q, r = (_check_count(v, name) for v, name in ((p, "p"), (q, "q"), (r, "r")))
    return lattice_line_count(min(p, q), p + q - r)


@cache
def _three_part_table(
    nu: Partition, s1: int, s2: int, s3: int
) -> dict[tuple[Partition, Partition, Partition], int]:
    """Non-zero three-part coefficients of ``nu`` over all shapes of the given sizes.

    Built by splitting twice: nu restricts over (xi, eta) pairs, then xi
    over (alpha, beta) pairs.
    """
    out: dict[tuple[Partition, Partition, Partition], int] = {}
    if s1 + s2 + s3 != sum(nu):
        return out
    for eta in partitions_of(s3):
        for xi in partitions_of(s1 + s2):
            c_outer = lr_coeff(xi, eta, nu)
            if not c_outer:
                continue
            for alpha in partitions_of(s1):
                for beta in partitions_of(s2):
                    c_inner = lr_coeff(alpha, beta, xi)
                    if c_inner:
                        key = (alpha, beta, eta)
                        out[key] = out.get(key, 0) + c_outer * c_inner
    return out


def bvo_multiplicity(nu: Partition, lam: Partition, mu: Partition, m: int, n: int) -> int:
    """Standard-module restriction multiplicity for general indices.

    The double sum over strand bookkeeping (l1, l2) with
    l1 + 2*l2 = (m + n - |nu|) - (m - |lam|) - (n - |mu|), and over shape
    tuples weighted by three-part Littlewood-Richardson coefficients and a
    Kronecker coefficient.  Exact integers throughout.
    """
    nu = check_partition(nu)
    lam = check_partition(lam)
    mu = check_partition(mu)
    if sum(nu) > m + n:
        raise ValueError(f"|nu| = {sum(nu)} exceeds total degree {m + n}")
    if sum(lam) > m:
        raise ValueError(f"|lam| = {sum(lam)} exceeds left degree {m}")
    if sum(mu) > n:
        raise ValueError(f"|mu| = {sum(mu)} exceeds right degree {n}")
    budget = sum(lam) + sum(mu) - sum(nu)
    if budget < 0:
        return 0
    total = 0
    for l2 in range(budget // 2 + 1):
        l1 = budget - 2 * l2
        a_size = sum(lam) - l1 - l2
        b_size = sum(mu) - l1 - l2
        if a_size < 0 or b_size < 0:
            continue
        table_nu = _three_part_table(nu, a_size, b_size, l1)   # (alpha, beta, pi)
        if not table_nu:
            continue
        table_lam = _three_part_table(lam, a_size, l1, l2)     # (alpha, rho, gamma)
        table_mu = _three_part_table(mu, l2, l1, b_size)       # (gamma, sigma, beta)
        by_gamma: dict[Partition, list[tuple[Partition, Partition, int]]] = {}
        for (gamma, sigma, beta), c in table_mu.items():
            by_gamma.setdefault(gamma, []).append((sigma, beta, c))
        for (alpha, rho, gamma), c_lam in table_lam.items():
            for sigma, beta, c_mu in by_gamma.get(gamma, ()):
                for pi in partitions_of(l1):
                    c_nu = table_nu.get((alpha, beta, pi))
                    if not c_nu:
                        continue
                    g = kronecker_coeff(pi, rho, sigma)
                    if g:
                        total += c_nu * c_lam * c_mu * g
    return total


def admissible_degree_pairs(p: int, q: int, r: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Two degree pairs (m, n) with m >= p, n >= q and m + n >= r."""
    m = max(p, r - q, 1)
    n = max(q, 1)
    return (m, n), (m + 1, n + 2)


@dataclass
class SymmetryReport:
    """Outcome of the five boundary and symmetry assertions for one triple."""

    p: int
    q: int
    r: int
    results: dict[str, bool] = field(default_factory=dict)
    details: dict[str, str] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "q": self.q,
            "r": self.r,
            "items": self.results,
            "details": self.details,
            "ok": self.ok,
        }


def symmetry_suite(p: int, q: int, r: int) -> SymmetryReport:
    """Check the five standing identities of the multiplicity at one triple.

    1. vanishing above the band: value 0 whenever p + q < r;
    2. value 1 on the band boundary (p + q = r or |p - q| = r);
    3. with a zero parameter, value 1 exactly when the other two agree;
    4. independence from the algebra degrees, sampled at two admissible pairs;
    5. reflection symmetry r -> p + q + |p - q| - r.
    """
    report = SymmetryReport(p, q, r)
    closed = e_closed(p, q, r)
    count, _ = e_lattice(p, q, r)

    if p + q < r:
        report.results["vanishing"] = closed == 0 and count == 0
    else:
        report.results["vanishing"] = True
    report.details["vanishing"] = f"value {closed}"

    if p + q == r or abs(p - q) == r:
        report.results["boundary_one"] = closed == 1 and count == 1
    else:
        report.results["boundary_one"] = True
    report.details["boundary_one"] = f"value {closed}"

    if 0 in (p, q, r):
        rest = [p, q, r]
        rest.remove(0)
        expected = 1 if rest[0] == rest[1] else 0
        report.results["zero_parameter"] = closed == expected and count == expected
        report.details["zero_parameter"] = f"value {closed}, expected {expected}"
    else:
        report.results["zero_parameter"] = True
        report.details["zero_parameter"] = "no zero parameter"

    pairs = admissible_degree_pairs(p, q, r)
    values = [bvo_multiplicity(one_part(r), one_part(p), one_part(q), m, n) for m, n in pairs]
    report.results["degree_independence"] = values[0] == values[1] == count
    report.details["degree_independence"] = f"values {values} at degrees {pairs}"

    mirror = p + q + abs(p - q) - r
    if mirror < 0:
        # r lies beyond the whole band, so its mirror image does too
        report.results["reflection"] = closed == 0 and count == 0
        report.details["reflection"] = f"value {closed}, mirror position {mirror} out of range"
    else:
        mirrored_closed = e_closed(p, q, mirror)
        mirrored_count, _ = e_lattice(p, q, mirror)
        report.results["reflection"] = closed == mirrored_closed and count == mirrored_count
        report.details["reflection"] = f"value {closed} vs {mirrored_closed} at r'={mirror}"

    return report


def one_part(k: int) -> Partition:
    """The one-row partition of size k (empty for k = 0)."""
    return (k,) if k else ()


def restriction_dimension_total(m: int, n: int, r: int) -> int:
    """Weighted dimension sum over all index pairs of the two factors.

    Sums multiplicity(nu=(r), lam, mu) * dim(m, lam) * dim(n, mu) over all
    partitions lam of size at most m and mu of size at most n; a correct
    coefficient engine makes this the number of (m + n, r)-half-diagrams.
    """
    from .halfdiag import partitions_up_to

    total = 0
    for lam in partitions_up_to(m):
        for mu in partitions_up_to(n):
            coeff = bvo_multiplicity(one_part(r), lam, mu, m, n)
            if coeff:
                total += coeff * dim_standard(m, lam) * dim_standard(n, mu)
    return total
