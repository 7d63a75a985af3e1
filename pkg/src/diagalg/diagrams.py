"""Set-partition diagrams of degree n with exact delta-power composition.

A diagram is a set partition of the 2n boundary dots of a rectangle, with
n dots on the top edge and n on the bottom.  Composition stacks two
diagrams and removes the components trapped in the middle, each of which
contributes one power of the loop parameter delta.  Delta stays symbolic:
coefficients live in the integer polynomial ring.
"""

from __future__ import annotations

from functools import cache


class InvariantViolation(ValueError):
    """An input value breaks a structural invariant; the message names it."""


class DeltaPolynomial:
    """Integer-coefficient polynomial in the symbolic loop parameter delta.

    Immutable; stored as sorted (exponent, coefficient) pairs with no zero
    entries.  The zero polynomial has no terms.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms=()):
        merged: dict[int, int] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for exp, coeff in items:
            if not isinstance(exp, int) or exp < 0:
                raise InvariantViolation("delta exponents must be non-negative integers")
            merged[exp] = merged.get(exp, 0) + coeff
        self._terms = tuple(sorted((e, c) for e, c in merged.items() if c != 0))

    @classmethod
    def zero(cls) -> "DeltaPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "DeltaPolynomial":
        return cls(((0, 1),))

    @classmethod
    def delta_power(cls, exp: int, coeff: int = 1) -> "DeltaPolynomial":
        return cls(((exp, coeff),))

    def terms(self) -> tuple[tuple[int, int], ...]:
        return self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, DeltaPolynomial) and self._terms == other._terms

    def __hash__(self) -> int:
        return hash(self._terms)

    def __add__(self, other: "DeltaPolynomial") -> "DeltaPolynomial":
        return DeltaPolynomial(self._terms + other._terms)

    def __mul__(self, other) -> "DeltaPolynomial":
        if isinstance(other, int):
            return DeltaPolynomial(tuple((e, c * other) for e, c in self._terms))
        out: dict[int, int] = {}
        for e1, c1 in self._terms:
            for e2, c2 in other._terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return DeltaPolynomial(out)

    __rmul__ = __mul__

    def render(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exp, coeff in reversed(self._terms):
            if exp == 0:
                parts.append(str(coeff))
            else:
                power = "δ" if exp == 1 else f"δ^{exp}"
                parts.append(power if coeff == 1 else f"{coeff}·{power}")
        return " + ".join(parts)

    def to_json(self) -> list[dict[str, int]]:
        return [{"delta_pow": e, "coeff": c} for e, c in reversed(self._terms)]

    def __repr__(self) -> str:
        return f"DeltaPolynomial({self.render()!r})"


def _node_text(node: int) -> str:
    return str(node) if node > 0 else f"{-node}'"


class SetPartitionDiagram:
    """A set partition of the 2n dots on a degree-n diagram boundary.

    Dots are signed integers: +k is the k-th top dot, -k the k-th bottom
    dot.  Blocks are held in a canonical form (nodes sorted by the boundary
    order 1 < ... < n < n' < ... < 1', blocks by least node) so equality
    and hashing are structural.
    """

    __slots__ = ("n", "blocks")

    def __init__(self, n: int, blocks):
        if not isinstance(n, int) or n < 0:
            raise InvariantViolation("degree must be a non-negative integer")
        seen: set[int] = set()
        clean: list[tuple[int, ...]] = []
        for block in blocks:
            bl = tuple(block)
            if not bl:
                raise InvariantViolation("blocks must be non-empty")
            for node in bl:
                if not isinstance(node, int) or node == 0 or abs(node) > n:
                    raise InvariantViolation(f"dot {node!r} out of range for degree {n}")
                if node in seen:
                    raise InvariantViolation(f"dot {_node_text(node)} appears in more than one block")
                seen.add(node)
            clean.append(bl)
        if len(seen) != 2 * n:
            raise InvariantViolation("blocks must cover all 2n dots exactly once")
        key = self._order_key
        self.n = n
        inner = [tuple(sorted(b, key=key)) for b in clean]
        self.blocks = tuple(sorted(inner, key=lambda b: key(b[0])))

    def _order_key(self, node: int) -> int:
        # 1..n map to 0..n-1; k' maps to 2n-k, giving 1 < ... < n < n' < ... < 1'
        return node - 1 if node > 0 else 2 * self.n + node

    @classmethod
    def identity(cls, n: int) -> "SetPartitionDiagram":
        return cls(n, [(k, -k) for k in range(1, n + 1)])

    @classmethod
    def from_json(cls, data) -> "SetPartitionDiagram":
        if not isinstance(data, dict) or "n" not in data or "blocks" not in data:
            raise ValueError("diagram JSON must be an object with 'n' and 'blocks'")
        return cls(data["n"], data["blocks"])

    def to_json(self) -> dict:
        return {"n": self.n, "blocks": [list(b) for b in self.blocks]}

    def render(self) -> str:
        body = ",".join("{" + ",".join(_node_text(x) for x in b) + "}" for b in self.blocks)
        return "{" + body + "}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SetPartitionDiagram)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return hash((self.n, self.blocks))

    def __repr__(self) -> str:
        return f"SetPartitionDiagram({self.n}, {self.render()})"


class _UnionFind:
    """Disjoint sets over 0..size-1 with path compression and union by size."""

    def __init__(self, size: int):
        self.parent = list(range(size))
        self.size = [1] * size

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]

    def components(self) -> dict[int, list[int]]:
        comps: dict[int, list[int]] = {}
        for x in range(len(self.parent)):
            comps.setdefault(self.find(x), []).append(x)
        return comps


def compose(d1: SetPartitionDiagram, d2: SetPartitionDiagram) -> tuple[int, SetPartitionDiagram]:
    """Stack ``d1`` above ``d2``; return (interior component count, result diagram).

    Union-find runs over three rows of dots: d1's top row, the identified
    middle row (d1's bottom fused with d2's top), and d2's bottom row.
    Components made of middle dots only are interior; each contributes one
    power of delta.
    """
    if d1.n != d2.n:
        raise InvariantViolation("composition requires equal degrees")
    n = d1.n
    uf = _UnionFind(3 * n)
    for block in d1.blocks:
        nodes = [k - 1 if k > 0 else n - k - 1 for k in block]
        for a, b in zip(nodes, nodes[1:]):
            uf.union(a, b)
    for block in d2.blocks:
        nodes = [n + k - 1 if k > 0 else 2 * n - k - 1 for k in block]
        for a, b in zip(nodes, nodes[1:]):
            uf.union(a, b)
    t = 0
    blocks = []
    for members in uf.components().values():
        outer = [m for m in members if m < n or m >= 2 * n]
        if not outer:
            t += 1
            continue
        blocks.append([m + 1 if m < n else -(m - 2 * n + 1) for m in outer])
    return t, SetPartitionDiagram(n, blocks)


def generator(kind: str, i: int, j: int | None, n: int) -> SetPartitionDiagram:
    """Build one of the standard generator diagrams of degree ``n``.

    "E" merges the strands at i and j into a single block with a top arc
    and a bottom arc; "P" cuts the strand at i into two singletons; "S"
    crosses the strands at i and j.  "E" and "S" need 1 <= i < j <= n,
    "P" needs 1 <= i <= n and no j.
    """
    if kind not in ("E", "P", "S"):
        raise ValueError(f"unknown generator kind {kind!r}")
    if kind == "P":
        if j is not None:
            raise ValueError("generator P takes a single index")
        if not 1 <= i <= n:
            raise ValueError(f"index {i} out of range for degree {n}")
        others = [(k, -k) for k in range(1, n + 1) if k != i]
        return SetPartitionDiagram(n, others + [(i,), (-i,)])
    if j is None or not 1 <= i < j <= n:
        raise ValueError(f"generator {kind} needs 1 <= i < j <= n, got i={i}, j={j}")
    others = [(k, -k) for k in range(1, n + 1) if k not in (i, j)]
    if kind == "E":
        return SetPartitionDiagram(n, others + [(i, j, -i, -j)])
    return SetPartitionDiagram(n, others + [(i, -j), (j, -i)])


def propagating_number(d: SetPartitionDiagram) -> int:
    """Number of blocks joining the top row to the bottom row."""
    return sum(
        1
        for block in d.blocks
        if any(x > 0 for x in block) and any(x < 0 for x in block)
    )


def _blocks_cross(keys_a: list[int], keys_b: list[int]) -> bool:
    # Two blocks cross when their order keys interleave as ABAB or BABA.
    merged = sorted((k, 0) for k in keys_a) + sorted((k, 1) for k in keys_b)
    merged.sort()
    runs = 1
    for (_, s1), (_, s2) in zip(merged, merged[1:]):
        if s1 != s2:
            runs += 1
    return runs >= 4


def is_noncrossing(d: SetPartitionDiagram) -> bool:
    """True when no two blocks interleave under the boundary order."""
    keyed = [[d._order_key(x) for x in block] for block in d.blocks]
    for a in range(len(keyed)):
        for b in range(a + 1, len(keyed)):
            if _blocks_cross(keyed[a], keyed[b]):
                return False
    return True


def is_tl_diagram(d: SetPartitionDiagram) -> bool:
    """True when every block pairs exactly two dots and the diagram is planar."""
    return all(len(block) == 2 for block in d.blocks) and is_noncrossing(d)


class DiagramSum:
    """Formal combination of equal-degree diagrams with polynomial coefficients."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=()):
        self.n = n
        merged: dict[SetPartitionDiagram, DeltaPolynomial] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for diagram, coeff in items:
            if diagram.n != n:
                raise InvariantViolation("all diagrams in a sum must share one degree")
            acc = merged.get(diagram, DeltaPolynomial.zero()) + coeff
            if acc:
                merged[diagram] = acc
            elif diagram in merged:
                del merged[diagram]
        self.terms = merged

    @classmethod
    def from_diagram(cls, d: SetPartitionDiagram, coeff: DeltaPolynomial | None = None) -> "DiagramSum":
        return cls(d.n, {d: coeff if coeff is not None else DeltaPolynomial.one()})

    def __add__(self, other: "DiagramSum") -> "DiagramSum":
        if self.n != other.n:
            raise InvariantViolation("sum requires equal degrees")
        merged = dict(self.terms)
        out = DiagramSum(self.n, merged)
        for d, c in other.terms.items():
            acc = out.terms.get(d, DeltaPolynomial.zero()) + c
            if acc:
                out.terms[d] = acc
            elif d in out.terms:
                del out.terms[d]
        return out

    def scaled(self, poly: DeltaPolynomial) -> "DiagramSum":
        return DiagramSum(self.n, {d: c * poly for d, c in self.terms.items()})

    def compose(self, other: "DiagramSum") -> "DiagramSum":
        """Bilinear extension of diagram composition."""
        if self.n != other.n:
            raise InvariantViolation("composition requires equal degrees")
        out = DiagramSum(self.n)
        for d1, c1 in self.terms.items():
            for d2, c2 in other.terms.items():
                t, d = compose(d1, d2)
                coeff = c1 * c2 * DeltaPolynomial.delta_power(t)
                acc = out.terms.get(d, DeltaPolynomial.zero()) + coeff
                if acc:
                    out.terms[d] = acc
                elif d in out.terms:
                    del out.terms[d]
        return out

    def __eq__(self, other) -> bool:
        return isinstance(other, DiagramSum) and self.n == other.n and self.terms == other.terms

    def render(self) -> str:
        if not self.terms:
            return "0"
        pieces = []
        for d in sorted(self.terms, key=lambda x: x.blocks):
            coeff = self.terms[d]
            text = coeff.render()
            pieces.append(d.render() if text == "1" else f"{text} · {d.render()}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"DiagramSum({self.render()})"


@cache
def _one_sided_generators(n: int) -> tuple[SetPartitionDiagram, ...]:
    """Every generator diagram of degree ``n`` (all kinds, all index choices)."""
    gens = [generator("P", i, None, n) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            gens.append(generator("E", i, j, n))
            gens.append(generator("S", i, j, n))
    return tuple(gens)
