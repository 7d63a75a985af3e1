"""Self-contained verification suites over the whole library.

Each suite sweeps a bounded grid of inputs, collects failures as readable
strings, and reports deterministically.  The random suites draw from a
fixed seed so reports are reproducible byte for byte.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from math import comb

from . import diagrams, geometry, halfdiag, multiplicity, tl, walled
from .diagrams import DeltaPolynomial, DiagramSum, SetPartitionDiagram, compose, generator
from .halfdiag import HalfDiagram, ScaledHalfDiagram, act, act_top, enumerate_basis
from .multiplicity import one_part
from .walled import TransitionCase, WalledIndex

_SEED = 20260810


@dataclass
class VerifyReport:
    """One suite's outcome: case count, failures, wall-clock duration."""

    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    duration: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def check(self, condition: bool, message: str) -> None:
        self.cases += 1
        if not condition:
            self.failures.append(message)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": self.failures,
            "duration_seconds": round(self.duration, 3),
            "ok": self.ok,
        }

    def summary(self) -> str:
        status = "PASS" if self.ok else f"FAIL ({len(self.failures)} failures)"
        return f"{self.suite}: {status} [{self.cases} cases, {self.duration:.2f}s]"


def _random_diagram(rng: random.Random, n: int) -> SetPartitionDiagram:
    """A uniform-ish random set-partition of the 2n dots."""
    nodes = [k for k in range(1, n + 1)] + [-k for k in range(1, n + 1)]
    blocks: list[list[int]] = []
    for node in nodes:
        choice = rng.randint(0, len(blocks))
        if choice == len(blocks):
            blocks.append([node])
        else:
            blocks[choice].append(node)
    return SetPartitionDiagram(n, blocks)


def _random_half_diagram(rng: random.Random, n: int) -> HalfDiagram:
    blocks: list[list[int]] = []
    for dot in range(1, n + 1):
        choice = rng.randint(0, len(blocks))
        if choice == len(blocks):
            blocks.append([dot])
        else:
            blocks[choice].append(dot)
    labels = [i for i in range(len(blocks)) if rng.random() < 0.5]
    return HalfDiagram(n, blocks, labels)


# The worked composition example: two degree-6 diagrams whose product
# carries delta^2, with the merged diagram written out.
GOLDEN_COMPOSE_LEFT = {
    "n": 6,
    "blocks": [[1, 2, -2], [3], [4, 6, -6], [5], [-1], [-3], [-4], [-5]],
}
GOLDEN_COMPOSE_RIGHT = {
    "n": 6,
    "blocks": [[1], [2], [3, 4, 5], [6, -4, -6], [-1, -2, -3], [-5]],
}
GOLDEN_COMPOSE_RESULT = {
    "n": 6,
    "blocks": [[1, 2], [3], [4, 6, -4, -6], [5], [-1, -2, -3], [-5]],
}
GOLDEN_COMPOSE_T = 2

# The worked action examples: a degree-6 diagram on a 2-label half-diagram,
# once with result delta^1 times a half-diagram and once vanishing.
GOLDEN_ACT_DIAGRAM = {
    "n": 6,
    "blocks": [[1, 2, -2], [3, -3], [4], [5, -4], [6, -5], [-1], [-6]],
}
GOLDEN_ACT_INPUT = {
    "n": 6,
    "blocks": [[1, 3], [2], [4], [5], [6]],
    "labeled": [0, 3],
}
GOLDEN_ACT_RESULT = {
    "n": 6,
    "blocks": [[1, 2], [3], [4], [5], [6]],
    "labeled": [1, 4],
}
GOLDEN_ACT_T = 1
GOLDEN_ACT_ZERO_DIAGRAM = {
    "n": 6,
    "blocks": [[1, 2, -2], [3, 4], [5, -4], [6, -5], [-1], [-3], [-6]],
}


def verify_compose_assoc(limit: int | None = None) -> VerifyReport:
    """Golden composition, generator relations, and associativity samples."""
    report = VerifyReport("compose-assoc")
    start = time.perf_counter()

    d1 = SetPartitionDiagram.from_json(GOLDEN_COMPOSE_LEFT)
    d2 = SetPartitionDiagram.from_json(GOLDEN_COMPOSE_RIGHT)
    t, d = compose(d1, d2)
    report.check(t == GOLDEN_COMPOSE_T, f"golden composition gave t={t}")
    report.check(
        d == SetPartitionDiagram.from_json(GOLDEN_COMPOSE_RESULT),
        f"golden composition gave {d.render()}",
    )

    max_degree = limit or 5
    for n in range(1, max_degree + 1):
        identity = SetPartitionDiagram.identity(n)
        for i in range(1, n + 1):
            p = generator("P", i, None, n)
            t, result = compose(p, p)
            report.check(
                (t, result) == (1, p), f"p[{i}] squared in degree {n} gave delta^{t}"
            )
            for j in range(i + 1, n + 1):
                e = generator("E", i, j, n)
                s = generator("S", i, j, n)
                report.check(compose(e, e) == (0, e), f"e[{i},{j}] not idempotent in degree {n}")
                report.check(
                    compose(s, s) == (0, identity), f"s[{i},{j}] squared is not the identity"
                )

    rng = random.Random(_SEED)
    for _ in range(500):
        n = rng.randint(1, 4)
        a, b, c = (_random_diagram(rng, n) for _ in range(3))
        left = DiagramSum.from_diagram(a).compose(DiagramSum.from_diagram(b)).compose(
            DiagramSum.from_diagram(c)
        )
        right = DiagramSum.from_diagram(a).compose(
            DiagramSum.from_diagram(b).compose(DiagramSum.from_diagram(c))
        )
        report.check(left == right, f"associativity failed for {a.render()}, {b.render()}, {c.render()}")

    # propagating number never increases under composition
    rng = random.Random(_SEED + 1)
    for _ in range(200):
        n = rng.randint(1, 4)
        a, b = _random_diagram(rng, n), _random_diagram(rng, n)
        _, d = compose(a, b)
        bound = min(diagrams.propagating_number(a), diagrams.propagating_number(b))
        report.check(
            diagrams.propagating_number(d) <= bound,
            f"propagating number grew composing {a.render()} with {b.render()}",
        )

    report.duration = time.perf_counter() - start
    return report


def verify_action_assoc(limit: int | None = None) -> VerifyReport:
    """Golden actions, label monotonicity, and stack-then-act associativity."""
    report = VerifyReport("action-assoc")
    start = time.perf_counter()

    d = SetPartitionDiagram.from_json(GOLDEN_ACT_DIAGRAM)
    v = HalfDiagram.from_json(GOLDEN_ACT_INPUT)
    result = act(d, v)
    expected = ScaledHalfDiagram(
        DeltaPolynomial.delta_power(GOLDEN_ACT_T), HalfDiagram.from_json(GOLDEN_ACT_RESULT)
    )
    report.check(result == expected, f"golden action gave {result.render()}")

    zero = act(SetPartitionDiagram.from_json(GOLDEN_ACT_ZERO_DIAGRAM), v)
    report.check(zero.is_zero, f"vanishing golden action gave {zero.render()}")

    rng = random.Random(_SEED + 2)
    for _ in range(500):
        n = rng.randint(1, 4)
        d1, d2 = _random_diagram(rng, n), _random_diagram(rng, n)
        vv = _random_half_diagram(rng, n)
        t, d12 = compose(d1, d2)
        lhs = act(d12, vv).scaled(DeltaPolynomial.delta_power(t))
        inner = act(d2, vv)
        rhs = ScaledHalfDiagram.zero() if inner.is_zero else act(d1, inner.diagram).scaled(inner.coeff)
        report.check(
            lhs == rhs,
            f"action associativity failed for {d1.render()}, {d2.render()} on {vv.render()}",
        )
        _, top = act_top(d1, vv)
        report.check(top.r <= vv.r, f"label count grew acting {d1.render()} on {vv.render()}")

    identity = SetPartitionDiagram.identity(3)
    for vv in enumerate_basis(3, 1):
        got = act(identity, vv)
        report.check(
            got == ScaledHalfDiagram(DeltaPolynomial.one(), vv),
            f"identity action moved {vv.render()}",
        )

    report.duration = time.perf_counter() - start
    return report


def verify_census_factorization(limit: int | None = None) -> VerifyReport:
    """Walled census against its closed-form factorization, plus totals."""
    report = VerifyReport("census-factorization")
    start = time.perf_counter()
    top = limit or 4
    for m in range(1, top + 1):
        for n in range(1, top + 1):
            for r in range(m + n + 1):
                tally = walled.census(m, n, r)
                total = sum(tally.values())
                report.check(
                    total == halfdiag.half_diagram_count(m + n, r),
                    f"census total at ({m}|{n}, {r}) is {total}",
                )
                for u in range(min(m, n) + 1):
                    for t in range(r + 1):
                        for left in range(r - t + 1):
                            right = r - t - left
                            if u + t + left > m or u + t + right > n:
                                continue
                            idx = WalledIndex(u, t, left, right)
                            expected = walled.index_count_formula(m, n, idx)
                            got = tally.get(idx, 0)
                            report.check(
                                got == expected,
                                f"census({m},{n},{r})[{idx.render()}] = {got}, expected {expected}",
                            )
    report.duration = time.perf_counter() - start
    return report


def verify_transition_lemma(limit: int | None = None) -> VerifyReport:
    """Every generator move lands in the five cases and lowers the index."""
    report = VerifyReport("transition-lemma")
    start = time.perf_counter()
    top = limit or 3
    for m in range(1, top + 1):
        for n in range(1, top + 1):
            gens = walled.tensor_generators(m, n)
            for r in range(m + n + 1):
                for w in walled.enumerate_walled(m, n, r):
                    for name, g in gens:
                        try:
                            move = walled.transition(g, w)
                        except walled.TransitionClassificationError as exc:
                            report.check(False, f"{name} on {w.render()}: {exc}")
                            continue
                        if move.case is TransitionCase.UNCHANGED:
                            report.check(move.new == move.old, f"{name} misreported unchanged")
                        else:
                            report.check(
                                move.new < move.old,
                                f"{name} on {w.render()} moved index up: "
                                f"{move.old.render()} -> {move.new.render()}",
                            )
    report.duration = time.perf_counter() - start
    return report


def verify_bell_identity(limit: int | None = None) -> VerifyReport:
    """Squared standard dimensions sum to the Bell number of 2n."""
    report = VerifyReport("bell-identity")
    start = time.perf_counter()
    top = limit or 4
    for n in range(1, top + 1):
        total = sum(
            halfdiag.dim_standard(n, nu) ** 2 for nu in halfdiag.partitions_up_to(n)
        )
        expected = halfdiag.bell(2 * n)
        report.check(total == expected, f"degree {n}: sum of squares {total} != {expected}")
    for n in range(7):
        for r in range(n + 1):
            report.check(
                len(enumerate_basis(n, r)) == halfdiag.half_diagram_count(n, r),
                f"basis count mismatch at ({n}, {r})",
            )
    report.duration = time.perf_counter() - start
    return report


def verify_restriction_dimension(limit: int | None = None) -> VerifyReport:
    """Coefficient-weighted dimension sums match the half-diagram census."""
    report = VerifyReport("restriction-dimension")
    start = time.perf_counter()
    top = limit or 3
    for m in range(1, top + 1):
        for n in range(1, top + 1):
            for r in range(m + n + 1):
                total = multiplicity.restriction_dimension_total(m, n, r)
                expected = halfdiag.half_diagram_count(m + n, r)
                report.check(
                    total == expected,
                    f"restriction sum at ({m}, {n}, r={r}) is {total}, expected {expected}",
                )
    report.duration = time.perf_counter() - start
    return report


def verify_four_way_agreement(limit: int | None = None) -> VerifyReport:
    """Closed form, system count, lattice count and coefficient sum agree."""
    report = VerifyReport("four-way-agreement")
    start = time.perf_counter()
    top = limit or 8
    for p in range(top + 1):
        for q in range(top + 1):
            for r in range(top + 1):
                closed = multiplicity.e_closed(p, q, r)
                count, solutions = multiplicity.e_lattice(p, q, r)
                lattice = multiplicity.e2_lattice(p, q, r)
                report.check(
                    closed == count == lattice,
                    f"({p},{q},{r}): closed {closed}, system {count}, lattice {lattice}",
                )
                for sol in solutions:
                    shared = sol.through_labeled + sol.through_unlabeled
                    report.check(
                        shared + sol.left_labeled == p and shared + sol.right_labeled == q,
                        f"({p},{q},{r}): solution {sol} fails the side sums",
                    )
                for m, n in multiplicity.admissible_degree_pairs(p, q, r):
                    value = multiplicity.bvo_multiplicity(
                        one_part(r), one_part(p), one_part(q), m, n
                    )
                    report.check(
                        value == closed,
                        f"({p},{q},{r}) at degrees ({m},{n}): coefficient sum {value} != {closed}",
                    )
    report.duration = time.perf_counter() - start
    return report


def verify_geometry_agreement(limit: int | None = None) -> VerifyReport:
    """Circle and conic counts reproduce the closed form on their regimes."""
    report = VerifyReport("geometry-agreement")
    start = time.perf_counter()
    top = limit or 30
    for p in range(top + 1):
        for q in range(top + 1):
            for r in range(top + 1):
                closed = multiplicity.e_closed(p, q, r)
                circles = geometry.geometric_multiplicity(p, q, r)
                report.check(
                    circles == closed, f"({p},{q},{r}): circle count {circles} != {closed}"
                )
                if p > 0 and q > 0 and abs(p - q) < r < p + q:
                    conic = geometry.conic_eccentricity_count(p, q, r)
                    report.check(
                        conic == closed, f"({p},{q},{r}): conic count {conic} != {closed}"
                    )
    report.duration = time.perf_counter() - start
    return report


def verify_parity(limit: int | None = None) -> VerifyReport:
    """Integral tangent cuts happen exactly at even side sums."""
    report = VerifyReport("parity")
    start = time.perf_counter()
    top = limit or 30
    for p in range(top + 1):
        for q in range(top + 1):
            for r in range(abs(p - q), min(p + q, top) + 1):
                integral, even = geometry.parity_tangency(p, q, r)
                report.check(
                    integral == even,
                    f"({p},{q},{r}): tangents integral {integral} but side sum even {even}",
                )
    report.duration = time.perf_counter() - start
    return report


def verify_tl_suite(limit: int | None = None) -> VerifyReport:
    """Planar basis counts, the class product, and the walled factorization."""
    report = VerifyReport("tl-suite")
    start = time.perf_counter()
    top = limit or 12

    for n in range(top + 1):
        for r in range(n + 1):
            count = len(tl.tl_basis(n, r))
            report.check(
                count == tl.tl_basis_count(n, r),
                f"planar basis count at ({n}, {r}) is {count}",
            )
        total = sum(tl.tl_basis_count(n, r) for r in range(n % 2, n + 1, 2))
        report.check(
            total == comb(n, n // 2), f"degree {n}: planar total {total} != C(n, n//2)"
        )

    v11 = tl.GrothElement.module_class(1, 1)
    product = tl.groth_multiply(v11, v11)
    expected = tl.GrothElement({(2, 0): 1, (2, 2): 1})
    report.check(product == expected, f"[V_1(1)]^2 expanded to {product.render()}")
    v22 = tl.GrothElement.module_class(2, 2)
    report.check(
        tl.groth_multiply(v22, v22) == tl.GrothElement({(4, 0): 1, (4, 2): 1, (4, 4): 1}),
        "[V_2(2)]^2 expansion is wrong",
    )
    report.check(
        tl.groth_multiply(tl.GrothElement.module_class(2, 0), tl.GrothElement.module_class(3, 3))
        == tl.GrothElement.module_class(5, 3),
        "a zero-label class must act as a degree shift",
    )

    rng = random.Random(_SEED + 3)
    classes = [(deg, lab) for deg in range(5) for lab in range(deg % 2, deg + 1, 2)]
    for _ in range(60):
        def sample() -> tl.GrothElement:
            picks = rng.sample(classes, k=rng.randint(1, 2))
            return tl.GrothElement({key: rng.randint(1, 3) for key in picks})

        a, b, c = sample(), sample(), sample()
        report.check(
            tl.groth_multiply(a, b) == tl.groth_multiply(b, a),
            f"product not commutative on {a.render()} and {b.render()}",
        )
        left = tl.groth_multiply(tl.groth_multiply(a, b), c)
        right = tl.groth_multiply(a, tl.groth_multiply(b, c))
        report.check(left == right, f"product not associative on {a.render()}, {b.render()}, {c.render()}")

    wall_top = min(limit or 5, 5)
    for m in range(1, wall_top + 1):
        for n in range(1, wall_top + 1):
            for u in range(min(m, n) + 1):
                for left in range(m - u + 1):
                    if (u + left) % 2 != m % 2:
                        continue
                    for right in range(n - u + 1):
                        if (u + right) % 2 != n % 2:
                            continue
                        lhs, rhs = tl.tl_walled_dim_check(m, n, u, left, right)
                        report.check(
                            lhs == rhs,
                            f"walled planar count at ({m}|{n}, {u};0,{left},{right}): {lhs} != {rhs}",
                        )

    for m in range(1, 5):
        for n in range(1, 5):
            for p in range(m % 2, m + 1, 2):
                for q in range(n % 2, n + 1, 2):
                    for r in range((m + n) % 2, m + n + 1, 2):
                        value = tl.tl_e(p, q, r, m, n)
                        triangle = 1 if abs(p - q) <= r <= p + q else 0
                        _, solutions = multiplicity.e_lattice(p, q, r)
                        pinned = [s for s in solutions if s.through_labeled == 0]
                        report.check(
                            value == triangle == min(1, len(pinned)),
                            f"planar multiplicity at ({p},{q},{r}) deg ({m},{n}): "
                            f"{value}, triangle {triangle}, pinned {len(pinned)}",
                        )
    report.duration = time.perf_counter() - start
    return report


def verify_symmetry_lemma(limit: int | None = None) -> VerifyReport:
    """The five boundary and symmetry identities across a grid."""
    report = VerifyReport("symmetry-lemma")
    start = time.perf_counter()
    top = limit or 12
    for p in range(top + 1):
        for q in range(top + 1):
            for r in range(top + 1):
                outcome = multiplicity.symmetry_suite(p, q, r)
                for item, passed in outcome.results.items():
                    report.check(
                        passed,
                        f"({p},{q},{r}) item {item}: {outcome.details.get(item, '')}",
                    )
                count_pq, _ = multiplicity.e_lattice(p, q, r)
                count_qp, _ = multiplicity.e_lattice(q, p, r)
                report.check(count_pq == count_qp, f"({p},{q},{r}): not symmetric in p, q")
    report.duration = time.perf_counter() - start
    return report


SUITES = {
    "compose-assoc": verify_compose_assoc,
    "action-assoc": verify_action_assoc,
    "census-factorization": verify_census_factorization,
    "transition-lemma": verify_transition_lemma,
    "bell-identity": verify_bell_identity,
    "restriction-dimension": verify_restriction_dimension,
    "four-way-agreement": verify_four_way_agreement,
    "geometry-agreement": verify_geometry_agreement,
    "parity": verify_parity,
    "tl-suite": verify_tl_suite,
    "symmetry-lemma": verify_symmetry_lemma,
}


def run_suite(name: str, limit: int | None = None) -> VerifyReport:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or 'all'")
    return SUITES[name](limit)


def run_all(limit: int | None = None) -> list[VerifyReport]:
    return [run_suite(name, limit) for name in SUITES]
