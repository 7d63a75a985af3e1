"""Planar half-diagrams and the fusion ring of their module classes.

The planar (Temperley-Lieb) half-diagram on n dots has two kinds of
blocks: labeled single dots and unlabeled non-crossing caps, with no
labeled dot strictly inside a cap.  The count with r labels is the ballot
number C(n, (n-r)/2) - C(n, (n-r)/2 - 1).  Module classes [degree, labels]
generate a ring whose structure constants are 0/1 and detect exactly the
degenerate-triangle condition |p - q| <= r <= p + q.
"""

from __future__ import annotations

from functools import cache
from math import comb

from .diagrams import InvariantViolation
from .halfdiag import HalfDiagram
from .walled import WalledHalfDiagram, WalledIndex, index_of


class TLHalfDiagram:
    """A planar half-diagram: non-crossing caps plus labeled single dots."""

    __slots__ = ("n", "caps", "labels")

    def __init__(self, n: int, caps):
        if not isinstance(n, int) or n < 0:
            raise InvariantViolation("degree must be a non-negative integer")
        seen: set[int] = set()
        clean: list[tuple[int, int]] = []
        for cap in caps:
            pair = tuple(sorted(cap))
            if len(pair) != 2 or pair[0] == pair[1]:
                raise InvariantViolation(f"cap {cap!r} must join two distinct dots")
            for dot in pair:
                if not isinstance(dot, int) or not 1 <= dot <= n:
                    raise InvariantViolation(f"dot {dot!r} out of range for degree {n}")
                if dot in seen:
                    raise InvariantViolation(f"dot {dot} appears in more than one cap")
                seen.add(dot)
            clean.append(pair)
        clean.sort()
        for i in range(len(clean)):
            for j in range(i + 1, len(clean)):
                (a1, b1), (a2, b2) = clean[i], clean[j]
                if a1 < a2 < b1 < b2:
                    raise InvariantViolation(f"caps {clean[i]} and {clean[j]} cross")
        labels = tuple(dot for dot in range(1, n + 1) if dot not in seen)
        for a, b in clean:
            for dot in labels:
                if a < dot < b:
                    raise InvariantViolation(f"labeled dot {dot} sits inside cap ({a}, {b})")
        self.n = n
        self.caps = tuple(clean)
        self.labels = labels

    @property
    def r(self) -> int:
        return len(self.labels)

    def to_half_diagram(self) -> HalfDiagram:
        """The same object as a labeled set partition."""
        blocks = [list(cap) for cap in self.caps] + [[dot] for dot in self.labels]
        hd = HalfDiagram(self.n, blocks)
        labeled = [i for i, block in enumerate(hd.blocks) if len(block) == 1 and block[0] in self.labels]
        return HalfDiagram(self.n, hd.blocks, labeled)

    def to_json(self) -> dict:
        return {"n": self.n, "caps": [list(c) for c in self.caps], "labels": list(self.labels)}

    def render(self) -> str:
        pieces = ["{" + f"{a},{b}" + "}" for a, b in self.caps]
        pieces += ["{" + str(dot) + "}*" for dot in self.labels]
        return "{" + ",".join(pieces) + "}"

    def __eq__(self, other) -> bool:
        return isinstance(other, TLHalfDiagram) and self.n == other.n and self.caps == other.caps

    def __hash__(self) -> int:
        return hash((self.n, self.caps))

    def __repr__(self) -> str:
        return f"TLHalfDiagram({self.n}, {self.render()})"


@cache
def tl_basis(n: int, r: int) -> tuple[TLHalfDiagram, ...]:
    """All degree-n planar half-diagrams with r labeled dots.

    Scans the dots left to right with a stack of open caps: a dot may
    carry a label only when no cap is open around it, open a new cap, or
    close the innermost open cap.
    """
    if r < 0 or r > n or (n - r) % 2:
        return ()
    results: list[TLHalfDiagram] = []
    caps: list[tuple[int, int]] = []
    stack: list[int] = []
    label_count = 0

    def go(pos: int) -> None:
        nonlocal label_count
        if pos > n:
            if not stack and label_count == r:
                results.append(TLHalfDiagram(n, tuple(caps)))
            return
        if len(stack) > n - pos + 1:
            return
        if not stack and label_count < r:
            label_count += 1
            go(pos + 1)
            label_count -= 1
        stack.append(pos)
        go(pos + 1)
        stack.pop()
        if stack:
            caps.append((stack[-1], pos))
            opened = stack.pop()
            go(pos + 1)
            stack.append(opened)
            caps.pop()

    go(1)
    return tuple(results)


def tl_basis_count(n: int, r: int) -> int:
    """Ballot-number count of planar half-diagrams: C(n, c) - C(n, c - 1)."""
    if r < 0 or r > n or (n - r) % 2:
        return 0
    c = (n - r) // 2
    return comb(n, c) - (comb(n, c - 1) if c >= 1 else 0)


class GrothElement:
    """Integer combination of half-diagram module classes, graded by degree.

    Keys are (degree, labels) with matching parity; zero coefficients are
    dropped.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        merged: dict[tuple[int, int], int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for (degree, labels), coeff in items:
            if not 0 <= labels <= degree or (degree - labels) % 2:
                raise InvariantViolation(
                    f"class ({degree}, {labels}) needs 0 <= labels <= degree with equal parity"
                )
            merged[(degree, labels)] = merged.get((degree, labels), 0) + coeff
        self.terms = {k: c for k, c in sorted(merged.items()) if c != 0}

    @classmethod
    def module_class(cls, degree: int, labels: int) -> "GrothElement":
        return cls({(degree, labels): 1})

    def __add__(self, other: "GrothElement") -> "GrothElement":
        merged = dict(self.terms)
        for k, c in other.terms.items():
            merged[k] = merged.get(k, 0) + c
        return GrothElement(merged)

    def __eq__(self, other) -> bool:
        return isinstance(other, GrothElement) and self.terms == other.terms

    def to_json(self) -> dict:
        return {
            "terms": [
                {"n": degree, "r": labels, "coeff": coeff}
                for (degree, labels), coeff in self.terms.items()
            ]
        }

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for (degree, labels), coeff in self.terms.items():
            body = f"[V_{degree}({labels})]"
            pieces.append(body if coeff == 1 else f"{coeff}·{body}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"GrothElement({self.render()})"


def groth_multiply(a: GrothElement, b: GrothElement) -> GrothElement:
    """Bilinear class product.

    Two classes expand over every label count of matching parity inside
    the degenerate-triangle band, each with coefficient one.
    """
    out: dict[tuple[int, int], int] = {}
    for (m, p), cm in a.terms.items():
        for (n, q), cn in b.terms.items():
            for r in range(abs(p - q), p + q + 1, 2):
                key = (m + n, r)
                out[key] = out.get(key, 0) + cm * cn
    return GrothElement(out)


def tl_e(p: int, q: int, r: int, m: int, n: int) -> int:
    """0/1 multiplicity for planar half-diagram modules.

    With no through-labeled blocks available, the solution of the count
    system is pinned: U = (p + q - r) / 2, L = p - U, R = q - U; the value
    is 1 exactly when all three are non-negative integers.  The input
    modules must exist (p, q with the parities of m, n); a target label
    count r off the parity of m + n names a class absent from degree
    m + n, so its multiplicity is 0.
    """
    if p % 2 != m % 2:
        raise ValueError(f"label count p={p} must have the parity of m = {m}")
    if q % 2 != n % 2:
        raise ValueError(f"label count q={q} must have the parity of n = {n}")
    if r % 2 != (m + n) % 2:
        return 0
    doubled_u = p + q - r
    if doubled_u < 0 or doubled_u % 2:
        return 0
    u = doubled_u // 2
    return 1 if p - u >= 0 and q - u >= 0 else 0


def tl_walled_dim_check(
    m: int, n: int, crossing_caps: int, left_labels: int, right_labels: int
) -> tuple[int, int]:
    """Walled planar census slice against its two-sided factorization.

    Left side: the number of planar walled half-diagrams on (m | n) whose
    index is (crossing_caps; 0, left_labels, right_labels).  Right side:
    the product of the one-sided basis counts at crossing_caps + side
    labels.  The through-labeled count is asserted to vanish on every
    enumerated diagram rather than assumed.
    """
    if (crossing_caps + left_labels) % 2 != m % 2 or (crossing_caps + right_labels) % 2 != n % 2:
        raise ValueError("index is not realizable: side parities do not match")
    r = left_labels + right_labels
    wanted = WalledIndex(crossing_caps, 0, left_labels, right_labels)
    lhs = 0
    for diagram in tl_basis(m + n, r):
        walled = WalledHalfDiagram(m, n, diagram.to_half_diagram())
        idx = index_of(walled)
        assert idx.through_labeled == 0, "a labeled single dot cannot cross the wall"
        if idx == wanted:
            lhs += 1
    rhs = tl_basis_count(m, crossing_caps + left_labels) * tl_basis_count(n, crossing_caps + right_labels)
    return lhs, rhs
