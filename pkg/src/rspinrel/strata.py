"""Divisor classes on moduli of stable curves and the graphs behind them.

Degree-2 cohomology of the moduli space of genus-g curves with n markings is
generated by the cotangent classes psi_1..psi_n, the kappa_1 class, the
irreducible boundary divisor, and the separating boundary divisors
delta_{h,S} (genus h component carrying the marking subset S).  Separating
divisors are stored canonically with respect to the symmetry
(h, S) ~ (g-h, complement of S).

The enumeration half of the module lists the decorated one-vertex and
one-edge graphs whose reconstruction term can land in codimension 1; higher
codimension families are excluded with a recorded reason.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations, product

from .cohft import RSpinTheory

PSI = "psi"
KAPPA1 = "kappa1"
DELTA_IRR = "delta_irr"
DELTA_SEP = "delta_sep"


class StabilityError(ValueError):
    """A requested vertex or divisor violates 2g - 2 + n > 0."""


class UnsupportedGenusError(ValueError):
    """Genus outside the range this library enumerates."""


@dataclass(frozen=True)
class DivisorClass:
    kind: str
    index: int | None = None            # psi only
    h: int | None = None                # delta_sep only
    markings: frozenset[int] | None = None  # delta_sep only

    def render(self) -> str:
        if self.kind == PSI:
            return f"psi_{self.index}"
        if self.kind == KAPPA1:
            return "kappa_1"
        if self.kind == DELTA_IRR:
            return "delta_irr"
        inner = ",".join(str(i) for i in sorted(self.markings))
        return f"delta_{{{self.h},{{{inner}}}}}"

    def sort_key(self):
        if self.kind == PSI:
            return (0, self.index, 0, ())
        if self.kind == KAPPA1:
            return (1, 0, 0, ())
        if self.kind == DELTA_IRR:
            return (2, 0, 0, ())
        return (3, 0, self.h, tuple(sorted(self.markings)))

    def __repr__(self) -> str:
        return self.render()


def psi(i: int) -> DivisorClass:
    if i < 1:
        raise ValueError("marking indices start at 1")
    return DivisorClass(kind=PSI, index=i)


def kappa1() -> DivisorClass:
    return DivisorClass(kind=KAPPA1)


def delta_irr() -> DivisorClass:
    return DivisorClass(kind=DELTA_IRR)


def delta_sep(h: int, markings) -> DivisorClass:
    return DivisorClass(kind=DELTA_SEP, h=h, markings=frozenset(markings))


def canonical_divisor(d: DivisorClass, g: int, n: int) -> DivisorClass:
    """Canonical representative of a divisor class on the (g, n) space.

    Separating classes are normalized to h < g-h, or h = g-h with S the
    lexicographically smaller of S and its complement; this also enforces the
    identification delta_h = delta_{g-h} in higher genus.  Idempotent.
    """
    if g < 1:
        raise UnsupportedGenusError("genus must be at least 1")
    if 2 * g - 2 + n <= 0:
        raise StabilityError(f"(g, n) = ({g}, {n}) is unstable")
    if d.kind == PSI:
        if not 1 <= d.index <= n:
            raise ValueError(f"psi index {d.index} out of range 1..{n}")
        return d
    if d.kind in (KAPPA1, DELTA_IRR):
        return d
    h, S = d.h, d.markings
    marks = frozenset(range(1, n + 1))
    if not 0 <= h <= g:
        raise ValueError(f"component genus {h} out of range 0..{g}")
    if not S <= marks:
        raise ValueError("markings outside 1..n")
    Sc = marks - S
    # Stability of both sides of the node.
    if 2 * h - 2 + len(S) + 1 <= 0:
        raise StabilityError(f"unstable side (h={h}, |S|={len(S)})")
    if 2 * (g - h) - 2 + len(Sc) + 1 <= 0:
        raise StabilityError(f"unstable side (h={g - h}, |S|={len(Sc)})")
    key, key_c = tuple(sorted(S)), tuple(sorted(Sc))
    if (h, key) <= (g - h, key_c):
        return delta_sep(h, S)
    return delta_sep(g - h, Sc)


def divisor_generators(g: int, n: int) -> list[DivisorClass]:
    """Ordered generators of degree-2 cohomology: psi's, kappa_1, the
    irreducible boundary, then canonical separating classes sorted by
    (h, subset)."""
    if g < 1:
        raise UnsupportedGenusError("genus-0 generators are out of scope")
    if 2 * g - 2 + n <= 0:
        raise StabilityError(f"(g, n) = ({g}, {n}) is unstable")
    gens = [psi(i) for i in range(1, n + 1)]
    gens.append(kappa1())
    gens.append(delta_irr())
    seps = set()
    marks = list(range(1, n + 1))
    for h in range(0, g + 1):
        for size in range(0, n + 1):
            for S in combinations(marks, size):
                try:
                    seps.add(canonical_divisor(delta_sep(h, S), g, n))
                except StabilityError:
                    continue
    gens.extend(sorted(seps, key=DivisorClass.sort_key))
    return gens


@dataclass(frozen=True)
class Vertex:
    genus: int
    markings: frozenset[int]
    half_edges: tuple[int, ...] = ()
    dilaton_legs: int = 0

    @property
    def valence(self) -> int:
        return len(self.markings) + len(self.half_edges) + self.dilaton_legs


@dataclass(frozen=True)
class StableGraph:
    """Decorated dual graph: vertices with genus/markings/half-edges, edges
    as unordered pairs of half-edge ids (loops allowed)."""

    vertices: tuple[Vertex, ...]
    edges: tuple[tuple[int, int], ...] = ()

    def total_genus(self) -> int:
        # Connected graphs only: g = sum g(v) + #edges - #vertices + 1.
        return sum(v.genus for v in self.vertices) + len(self.edges) - len(self.vertices) + 1

    def markings(self) -> frozenset[int]:
        out: set[int] = set()
        for v in self.vertices:
            out |= v.markings
        return frozenset(out)

    def validate(self) -> None:
        seen: list[int] = []
        for v in self.vertices:
            if v.genus < 0:
                raise ValueError("negative vertex genus")
            if 2 * v.genus - 2 + v.valence <= 0:
                raise StabilityError(f"unstable vertex {v}")
            seen.extend(v.half_edges)
        if sorted(seen) != sorted(h for e in self.edges for h in e):
            raise ValueError("half-edges do not match the edge list")
        marks: list[int] = []
        for v in self.vertices:
            marks.extend(v.markings)
        if len(marks) != len(set(marks)):
            raise ValueError("a marking appears on two vertices")
        if not self._connected():
            raise ValueError("graph is not connected")

    def _connected(self) -> bool:
        if len(self.vertices) <= 1:
            return True
        owner = {}
        for vi, v in enumerate(self.vertices):
            for h in v.half_edges:
                owner[h] = vi
        adjacency = {i: set() for i in range(len(self.vertices))}
        for a, b in self.edges:
            adjacency[owner[a]].add(owner[b])
            adjacency[owner[b]].add(owner[a])
        seen = {0}
        frontier = [0]
        while frontier:
            current = frontier.pop()
            for nxt in adjacency[current]:
                if nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen) == len(self.vertices)


def automorphism_order(graph: StableGraph) -> int:
    """Order of the automorphism group, by brute force over vertex
    permutations and half-edge bijections (graphs here are tiny)."""
    n_vertices = len(graph.vertices)
    edge_set = {frozenset(e) for e in graph.edges}
    count = 0
    for perm in permutations(range(n_vertices)):
        ok = all(
            graph.vertices[i].genus == graph.vertices[perm[i]].genus
            and graph.vertices[i].markings == graph.vertices[perm[i]].markings
            and graph.vertices[i].dilaton_legs == graph.vertices[perm[i]].dilaton_legs
            and len(graph.vertices[i].half_edges) == len(graph.vertices[perm[i]].half_edges)
            for i in range(n_vertices)
        )
        if not ok:
            continue
        # All ways to map each vertex's half-edges onto the image vertex's.
        per_vertex = [
            list(permutations(graph.vertices[perm[i]].half_edges))
            for i in range(n_vertices)
        ]
        for assignment in product(*per_vertex):
            mapping = {}
            for i in range(n_vertices):
                for src, dst in zip(graph.vertices[i].half_edges, assignment[i]):
                    mapping[src] = dst
            mapped = {frozenset((mapping[a], mapping[b])) for a, b in graph.edges}
            if mapped == edge_set:
                count += 1
    return count


@dataclass(frozen=True)
class GraphContribution:
    """A graph family contributing to the codimension-1 part of a relation.

    psi_budget lists (slot, max psi power) pairs: marking slots on the smooth
    graph, the dilaton slot, or edge halves (power 0 = constant term only).
    pushforward_degree is the degree of the gluing map onto the boundary
    divisor; for one-edge graphs it always equals automorphism_order, and the
    two cancel in the assembled coefficient.
    """

    graph: StableGraph
    kind: str  # "leg_psi" | "dilaton_kappa" | "loop_edge" | "separating_edge"
    automorphism_order: int
    pushforward_degree: int
    psi_budget: tuple[tuple[object, int], ...] = ()

    @property
    def placements(self) -> int:
        """Number of codimension-1 decoration placements this family holds."""
        if self.kind == "leg_psi":
            return len(self.psi_budget)
        return 1


@dataclass(frozen=True)
class ExcludedFamily:
    description: str
    reason: str


def _smooth_vertex(g: int, n: int, dilaton: int = 0) -> Vertex:
    return Vertex(genus=g, markings=frozenset(range(1, n + 1)), dilaton_legs=dilaton)


def enumerate_contributing_graphs(
    g: int, n: int, theory: RSpinTheory
) -> list[GraphContribution]:
    """All decorated stable graphs that can contribute in codimension 1.

    These are: the smooth graph with one psi power on a leg, the smooth graph
    with a single dilaton leg (the kappa_1 source), the one-loop graph, and
    the one-edge separating graphs, each taken once per isomorphism class.
    """
    if g not in (1, 2, 3):
        raise UnsupportedGenusError(f"genus {g} enumeration is not supported")
    if 2 * g - 2 + n <= 0:
        raise StabilityError(f"(g, n) = ({g}, {n}) is unstable")
    out: list[GraphContribution] = []

    if n >= 1:
        smooth = StableGraph(vertices=(_smooth_vertex(g, n),))
        smooth.validate()
        out.append(
            GraphContribution(
                graph=smooth,
                kind="leg_psi",
                automorphism_order=automorphism_order(smooth),
                pushforward_degree=1,
                psi_budget=tuple((i, 1) for i in range(1, n + 1)),
            )
        )

    dilaton = StableGraph(vertices=(_smooth_vertex(g, n, dilaton=1),))
    dilaton.validate()
    out.append(
        GraphContribution(
            graph=dilaton,
            kind="dilaton_kappa",
            automorphism_order=automorphism_order(dilaton),
            pushforward_degree=1,
            # psi^2 on the dilaton leg pushes forward to kappa_1.
            psi_budget=(("dilaton", 2),),
        )
    )

    loop = StableGraph(
        vertices=(
            Vertex(genus=g - 1, markings=frozenset(range(1, n + 1)), half_edges=(0, 1)),
        ),
        edges=((0, 1),),
    )
    loop.validate()
    out.append(
        GraphContribution(
            graph=loop,
            kind="loop_edge",
            automorphism_order=automorphism_order(loop),
            pushforward_degree=2,
            psi_budget=((0, 0), (1, 0)),
        )
    )

    marks = list(range(1, n + 1))
    seen: set[tuple[int, tuple[int, ...]]] = set()
    for h in range(0, g + 1):
        for size in range(0, n + 1):
            for S in combinations(marks, size):
                Sc = tuple(sorted(set(marks) - set(S)))
                label = min((h, tuple(S)), (g - h, Sc))
                if label in seen:
                    continue
                try:
                    sep = StableGraph(
                        vertices=(
                            Vertex(genus=h, markings=frozenset(S), half_edges=(0,)),
                            Vertex(genus=g - h, markings=frozenset(Sc), half_edges=(1,)),
                        ),
                        edges=((0, 1),),
                    )
                    sep.validate()
                except (StabilityError, ValueError):
                    continue
                seen.add(label)
                aut = automorphism_order(sep)
                out.append(
                    GraphContribution(
                        graph=sep,
                        kind="separating_edge",
                        automorphism_order=aut,
                        pushforward_degree=aut,
                        psi_budget=((0, 0), (1, 0)),
                    )
                )
    return out


def excluded_contributions(g: int, n: int) -> tuple[ExcludedFamily, ...]:
    """Graph families dropped from the codimension-1 enumeration, with reasons."""
    return (
        ExcludedFamily(
            "two or more dilaton legs",
            "each dilaton leg carries psi^2 or higher, total degree at least 4",
        ),
        ExcludedFamily(
            "one edge together with a dilaton leg",
            "edge plus kappa decoration has codimension at least 2",
        ),
        ExcludedFamily(
            "two or more edges",
            "each edge contributes codimension 1, total at least 2",
        ),
        ExcludedFamily(
            "positive psi power on an edge or on a leg of a nodal graph",
            "divisor class plus psi decoration has codimension at least 2",
        ),
    )


def placement_count(contributions: list[GraphContribution]) -> int:
    return sum(c.placements for c in contributions)


def divisor_class_of(
    graph: StableGraph, g: int, n: int, psi_leg: int | None = None
) -> DivisorClass:
    """Canonical divisor class of a codimension-1 decorated graph.

    One-edge graphs map to their boundary divisor; the smooth graph maps to
    kappa_1 when it carries a dilaton leg and to psi_i when a leg is named.
    """
    if len(graph.edges) > 1:
        raise ValueError("graph has codimension at least 2")
    if len(graph.edges) == 1:
        if len(graph.vertices) == 1:
            return delta_irr()
        v0 = graph.vertices[0]
        return canonical_divisor(delta_sep(v0.genus, v0.markings), g, n)
    total_dilaton = sum(v.dilaton_legs for v in graph.vertices)
    if total_dilaton == 1:
        return kappa1()
    if total_dilaton > 1:
        raise ValueError("graph has codimension at least 2")
    if psi_leg is not None:
        return canonical_divisor(psi(psi_leg), g, n)
    raise ValueError("smooth graph with no decoration has codimension 0")
