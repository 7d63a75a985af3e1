"""Half-diagrams: one-row set partitions carrying labeled blocks.

A half-diagram of degree n is a set partition of {1..n} with a chosen
subset of blocks marked as labeled.  The span of all half-diagrams with r
labels is a module over the degree-n diagram algebra: a diagram acts by
stacking, the surviving top row inherits a label on every block connected
to a labeled block below, and the result is zero whenever a label is lost.
"""

from __future__ import annotations

from functools import cache
from itertools import combinations
from math import comb

from .diagrams import (
    DeltaPolynomial,
    InvariantViolation,
    SetPartitionDiagram,
    _UnionFind,
)
from .symfunc import Partition, check_partition, partitions_of, syt_count


class HalfDiagram:
    """A labeled set partition of {1..n}.

    Blocks are kept sorted by least element; ``labeled`` holds the indices
    of the labeled blocks within that canonical order.
    """

    __slots__ = ("n", "blocks", "labeled")

    def __init__(self, n: int, blocks, labeled=()):
        if not isinstance(n, int) or n < 0:
            raise InvariantViolation("degree must be a non-negative integer")
        seen: set[int] = set()
        clean: list[tuple[int, ...]] = []
        for block in blocks:
            bl = tuple(block)
            if not bl:
                raise InvariantViolation("blocks must be non-empty")
            for dot in bl:
                if not isinstance(dot, int) or not 1 <= dot <= n:
                    raise InvariantViolation(f"dot {dot!r} out of range for degree {n}")
                if dot in seen:
                    raise InvariantViolation(f"dot {dot} appears in more than one block")
                seen.add(dot)
            clean.append(tuple(sorted(bl)))
        if len(seen) != n:
            raise InvariantViolation("blocks must cover 1..n exactly once")
        labels = set(labeled)
        for idx in labels:
            if not isinstance(idx, int) or not 0 <= idx < len(clean):
                raise InvariantViolation(f"labeled index {idx!r} does not point at a block")
        order = sorted(range(len(clean)), key=lambda i: clean[i][0])
        self.n = n
        self.blocks = tuple(clean[i] for i in order)
        self.labeled = frozenset(order.index(i) for i in labels)

    @property
    def r(self) -> int:
        return len(self.labeled)

    def labeled_blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.blocks[i] for i in sorted(self.labeled))

    @classmethod
    def from_json(cls, data) -> "HalfDiagram":
        if not isinstance(data, dict) or "n" not in data or "blocks" not in data:
            raise ValueError("half-diagram JSON must be an object with 'n' and 'blocks'")
        return cls(data["n"], data["blocks"], data.get("labeled", ()))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "blocks": [list(b) for b in self.blocks],
            "labeled": sorted(self.labeled),
        }

    def render(self) -> str:
        pieces = []
        for i, block in enumerate(self.blocks):
            text = "{" + ",".join(str(x) for x in block) + "}"
            pieces.append(text + "*" if i in self.labeled else text)
        return "{" + ",".join(pieces) + "}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, HalfDiagram)
            and self.n == other.n
            and self.blocks == other.blocks
            and self.labeled == other.labeled
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blocks, self.labeled))

    def __repr__(self) -> str:
        return f"HalfDiagram({self.n}, {self.render()})"


class ScaledHalfDiagram:
    """A half-diagram scaled by a delta polynomial, or the zero value."""

    __slots__ = ("coeff", "diagram")

    def __init__(self, coeff: DeltaPolynomial, diagram: HalfDiagram | None):
        if not coeff or diagram is None:
            coeff, diagram = DeltaPolynomial.zero(), None
        self.coeff = coeff
        self.diagram = diagram

    @classmethod
    def zero(cls) -> "ScaledHalfDiagram":
        return cls(DeltaPolynomial.zero(), None)

    @property
    def is_zero(self) -> bool:
        return self.diagram is None

    def scaled(self, poly: DeltaPolynomial) -> "ScaledHalfDiagram":
        if self.is_zero:
            return self
        return ScaledHalfDiagram(self.coeff * poly, self.diagram)

    def render(self) -> str:
        if self.is_zero:
            return "0"
        text = self.coeff.render()
        return self.diagram.render() if text == "1" else f"{text} · {self.diagram.render()}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ScaledHalfDiagram)
            and self.coeff == other.coeff
            and self.diagram == other.diagram
        )

    def __hash__(self) -> int:
        return hash((self.coeff, self.diagram))

    def __repr__(self) -> str:
        return f"ScaledHalfDiagram({self.render()})"


def act_top(d: SetPartitionDiagram, v: HalfDiagram) -> tuple[int, HalfDiagram]:
    """Stack ``d`` above ``v`` and read off the top row before any zero test.

    Returns the count of components not connected to the top row together
    with the top-row half-diagram, whose blocks carry a label exactly when
    their component touches a labeled block of ``v``.  Callers that need
    the module action should use :func:`act`, which applies the
    label-count test.
    """
    if d.n != v.n:
        raise InvariantViolation("action requires equal degrees")
    n = d.n
    uf = _UnionFind(2 * n)  # 0..n-1 top row, n..2n-1 the fused middle row
    for block in d.blocks:
        nodes = [k - 1 if k > 0 else n - k - 1 for k in block]
        for a, b in zip(nodes, nodes[1:]):
            uf.union(a, b)
    for block in v.blocks:
        nodes = [n + dot - 1 for dot in block]
        for a, b in zip(nodes, nodes[1:]):
            uf.union(a, b)
    labeled_middle = {
        n + dot - 1 for i in v.labeled for dot in v.blocks[i]
    }
    t = 0
    blocks: list[list[int]] = []
    flags: list[bool] = []
    for members in uf.components().values():
        tops = [m + 1 for m in members if m < n]
        if not tops:
            t += 1
            continue
        blocks.append(tops)
        flags.append(any(m in labeled_middle for m in members))
    labeled = [i for i, f in enumerate(flags) if f]
    return t, HalfDiagram(n, blocks, labeled)


def act(d: SetPartitionDiagram, v: HalfDiagram) -> ScaledHalfDiagram:
    """Module action of a diagram on a half-diagram.

    The label count never increases under stacking; the action is zero as
    soon as it drops (a label merged with another or trapped in a
    component that misses the top row), and otherwise every trapped
    component contributes a power of delta.
    """
    t, top = act_top(d, v)
    if top.r < v.r:
        return ScaledHalfDiagram.zero()
    return ScaledHalfDiagram(DeltaPolynomial.delta_power(t), top)


class HalfDiagramSum:
    """Formal combination of equal-degree half-diagrams; delta-linear closure of act."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        self.n = n
        merged: dict[HalfDiagram, DeltaPolynomial] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for hd, coeff in items:
            if hd.n != n:
                raise InvariantViolation("all half-diagrams in a sum must share one degree")
            acc = merged.get(hd, DeltaPolynomial.zero()) + coeff
            if acc:
                merged[hd] = acc
            elif hd in merged:
                del merged[hd]
        self.terms = merged

    @classmethod
    def from_scaled(cls, n: int, scaled: ScaledHalfDiagram) -> "HalfDiagramSum":
        if scaled.is_zero:
            return cls(n)
        return cls(n, {scaled.diagram: scaled.coeff})

    def __add__(self, other: "HalfDiagramSum") -> "HalfDiagramSum":
        if self.n != other.n:
            raise InvariantViolation("sum requires equal degrees")
        out = HalfDiagramSum(self.n, dict(self.terms))
        for hd, c in other.terms.items():
            acc = out.terms.get(hd, DeltaPolynomial.zero()) + c
            if acc:
                out.terms[hd] = acc
            elif hd in out.terms:
                del out.terms[hd]
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, HalfDiagramSum) and self.n == other.n and self.terms == other.terms

    def __repr__(self) -> str:
        if not self.terms:
            return "HalfDiagramSum(0)"
        body = " + ".join(
            f"{c.render()} · {hd.render()}" for hd, c in sorted(self.terms.items(), key=lambda kv: kv[0].blocks)
        )
        return f"HalfDiagramSum({body})"


def act_sum(ds, vs: HalfDiagramSum) -> HalfDiagramSum:
    """Bilinear extension of the action to diagram sums and half-diagram sums."""
    out = HalfDiagramSum(vs.n)
    for d, cd in ds.terms.items():
        for hd, cv in vs.terms.items():
            scaled = act(d, hd).scaled(cd * cv)
            out = out + HalfDiagramSum.from_scaled(vs.n, scaled)
    return out


@cache
def set_partitions(n: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    """Set partitions of {1..n} as block tuples, in restricted-growth order."""
    if n == 0:
        return ((),)
    out: list[tuple[tuple[int, ...], ...]] = []
    rgs = [0] * n

    def emit() -> None:
        count = max(rgs) + 1
        blocks: list[list[int]] = [[] for _ in range(count)]
        for dot, value in enumerate(rgs, start=1):
            blocks[value].append(dot)
        out.append(tuple(tuple(b) for b in blocks))

    def go(i: int, mx: int) -> None:
        if i == n:
            emit()
            return
        for v in range(mx + 2):
            rgs[i] = v
            go(i + 1, max(mx, v))

    go(1, 0)
    return tuple(out)


def enumerate_basis(n: int, r: int) -> list[HalfDiagram]:
    """All (n, r)-half-diagrams in a reproducible order.

    Set partitions come in restricted-growth order; for each, the r-subsets
    of blocks to label come in lexicographic order.
    """
    if r < 0 or r > n:
        return []
    out: list[HalfDiagram] = []
    for blocks in set_partitions(n):
        if len(blocks) < r:
            continue
        for labels in combinations(range(len(blocks)), r):
            out.append(HalfDiagram(n, blocks, labels))
    return out


@cache
def stirling2(n: int, k: int) -> int:
    """Number of set partitions of an n-set into k blocks."""
    if n == 0 and k == 0:
        return 1
    if n == 0 or k == 0 or k > n:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def bell(n: int) -> int:
    """Number of set partitions of an n-set."""
    return sum(stirling2(n, k) for k in range(n + 1))


def half_diagram_count(n: int, r: int) -> int:
    """Number of (n, r)-half-diagrams: sum over k of S(n, k) * C(k, r)."""
    if r < 0 or r > n:
        return 0
    if n == 0:
        return 1 if r == 0 else 0
    return sum(stirling2(n, k) * comb(k, r) for k in range(r, n + 1))


def dim_standard(n: int, nu: Partition) -> int:
    """Dimension of the degree-n standard module indexed by ``nu``.

    The free-module factorization: half-diagram count at r = |nu| times
    the standard tableau count of ``nu``.
    """
    nu = check_partition(nu)
    r = sum(nu)
    if r > n:
        raise ValueError(f"standard module needs |index| <= degree, got {r} > {n}")
    return half_diagram_count(n, r) * syt_count(nu)


def partitions_up_to(n: int):
    """All partitions of every size 0..n (the standard-module index set)."""
    for size in range(n + 1):
        yield from partitions_of(size)
