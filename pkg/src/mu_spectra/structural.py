"""Certified bounds on interval-vertex counts without exhaustive search.

Each operation checks its own preconditions and, when they hold, emits a
BoundEvidence whose ``value`` caps or floors f over a stated range of t.
The arguments mechanized here:

* a regular graph admits a coloring with every spectrum an interval iff
  its chromatic index equals its degree; failing that, f <= |V|-1 always;
* at t = |E| all edge colors are distinct, so interval vertices induce a
  disjoint union of paths, capping f by the largest path-forest subset;
* on a cubic graph whose every vertex deletion has chromatic index 4,
  f = |V|-1 is impossible at any t: the spectra at |V|-1 interval vertices
  would reduce mod 3 to a proper 3-edge-coloring of a deleted subgraph;
* on a cubic graph with chromatic index 4 whose perfect matchings pairwise
  intersect, f <= 1 at t = 4 would force color classes 1 and 4 to be
  disjoint perfect matchings, so f >= 2.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum

from .coloring import EdgeColoring, Violation, require_valid, analyze
from .graphs import (
    Graph,
    GraphError,
    InducedSubgraph,
    all_perfect_matchings,
    chromatic_index,
    delete_vertex,
    induced_subgraph,
    is_path_forest,
    vertex_set,
)

# 2^|V| subset scans stay fast up to here
_SUBSET_SCAN_LIMIT = 20


class EvidenceKind(Enum):
    NOT_INTERVAL_COLORABLE = "not-interval-colorable"
    PATH_FOREST_CAP = "path-forest-cap"
    MOD_REDUCTION = "mod-reduction"
    MATCHING_INTERSECTION = "matching-intersection"
    CERTIFICATE_LOWER_BOUND = "certificate-lower-bound"


@dataclass(frozen=True)
class BoundEvidence:
    """A certified bound on f with its justification.

    ``applies_t`` is the single t the bound is valid at, or None when it
    holds at every legal t. Caps bound f from above, floors from below;
    which one is fixed by ``kind``.
    """

    kind: EvidenceKind
    value: int
    detail: str
    applies_t: int | None = None
    payload: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        doc = {"kind": self.kind.value, "value": self.value, "detail": self.detail}
        if self.applies_t is not None:
            doc["t"] = self.applies_t
        if self.payload:
            doc["payload"] = self.payload
        return doc


def is_interval_colorable_regular(g: Graph) -> bool:
    """Whether a regular graph has a coloring making every spectrum an interval.

    For regular graphs this is equivalent to chromatic_index(g) == degree:
    with t = degree every vertex sees all colors [1,t], and conversely an
    all-interval coloring of a regular graph forces t = degree.
    """
    if not g.is_regular():
        raise GraphError(f"{g.name} is not regular")
    return chromatic_index(g) == g.max_degree()


def mu22_cap_from_noninterval(g: Graph) -> BoundEvidence:
    """Cap f <= |V|-1 at every t for regular g with chromatic index > degree."""
    if is_interval_colorable_regular(g):
        raise GraphError(
            f"{g.name} admits an all-interval coloring; no cap follows")
    chi = chromatic_index(g)
    delta = g.max_degree()
    return BoundEvidence(
        kind=EvidenceKind.NOT_INTERVAL_COLORABLE,
        value=g.n - 1,
        detail=(f"chromatic index {chi} exceeds degree {delta}, so no proper "
                f"coloring makes all {g.n} spectra intervals; f <= {g.n - 1} "
                f"at every t"),
        payload={"chromatic_index": chi, "degree": delta},
    )


def _max_path_forest_with_witness(g: Graph) -> tuple[int, tuple[str, ...]]:
    if g.min_degree() < 2:
        raise GraphError(f"{g.name} has a vertex of degree < 2")
    if g.n > _SUBSET_SCAN_LIMIT:
        raise GraphError(
            f"subset scan limited to {_SUBSET_SCAN_LIMIT} vertices, "
            f"{g.name} has {g.n}")
    for size in range(g.n, 0, -1):
        for combo in itertools.combinations(range(g.n), size):
            mask = 0
            for v in combo:
                mask |= 1 << v
            if is_path_forest(induced_subgraph(g, mask)):
                return size, tuple(g.vertices[v] for v in combo)
    return 0, ()  # unreachable: any single vertex induces a path forest


def max_path_forest_subset(g: Graph) -> int:
    """Largest vertex subset inducing a disjoint union of paths.

    Brute force over subsets, largest first with early exit.
    """
    return _max_path_forest_with_witness(g)[0]


def mu2_top_cap(g: Graph) -> BoundEvidence:
    """Cap f at t = |E| by the path-forest bound.

    When all edge colors are distinct, every spectrum is a set of distinct
    values whose interval vertices must induce a path forest (a vertex of
    induced degree >= 3 or an induced cycle would force two incident edges
    to repeat a color or break consecutiveness). Valid only at t = |E|.
    """
    size, witness = _max_path_forest_with_witness(g)
    return BoundEvidence(
        kind=EvidenceKind.PATH_FOREST_CAP,
        value=size,
        applies_t=g.m,
        detail=(f"at t={g.m} interval vertices induce a path forest; the "
                f"largest path-forest subset of {g.name} has {size} vertices"),
        payload={"witness_subset": list(witness)},
    )


@dataclass(frozen=True)
class ModReduction:
    """Residue coloring of an induced subgraph, with properness report.

    ``colors`` maps parent edge ids inside the subgraph to ((color mod 3)
    or 3), i.e. values in {1,2,3}. At any interval vertex of degree 3 the
    three incident colors are consecutive, so their residues are {1,2,3}
    by construction; properness anywhere else is checked, not guaranteed.
    """

    subgraph: InducedSubgraph
    colors: dict[int, int]
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def mod_reduction(g: Graph, c: EdgeColoring, s) -> ModReduction:
    """Reduce a coloring mod 3 on the subgraph induced by interval vertices.

    ``s`` must consist of interval vertices of c (the reduction is only
    meaningful there); g must be cubic. Used as a contradiction engine: if
    the result were proper on a subgraph with chromatic index 4, no valid
    coloring could make all of s interval.
    """
    if not g.is_cubic():
        raise GraphError(f"{g.name} is not cubic")
    require_valid(g, c)
    mask = vertex_set(g, s)
    report = analyze(g, c)
    if mask & ~report.v_int:
        bad = [g.vertices[i] for i in range(g.n) if (mask & ~report.v_int) >> i & 1]
        raise GraphError(f"not interval vertices of the coloring: {', '.join(bad)}")
    view = induced_subgraph(g, mask)
    colors = {ei: (c.colors[ei] - 1) % 3 + 1 for ei in view.edge_ids}
    violations = []
    for vi in view.vertex_ids:
        seen: dict[int, int] = {}
        for _, ei in g.adjacency[vi]:
            if ei not in colors:
                continue
            res = colors[ei]
            if res in seen:
                a1, b1 = g.edge_labels[seen[res]]
                a2, b2 = g.edge_labels[ei]
                violations.append(Violation(
                    "properness", g.vertices[vi],
                    f"residue {res} repeats at {g.vertices[vi]} on "
                    f"({a1},{b1}) and ({a2},{b2})"))
            else:
                seen[res] = ei
    return ModReduction(subgraph=view, colors=colors, violations=tuple(violations))


def mu22_cap_cubic(g: Graph) -> BoundEvidence:
    """Cap f <= |V|-2 at every t for suitable cubic graphs.

    Needs: g cubic, chromatic index 4, and chromatic index still 4 after
    deleting any one vertex. Then f = |V|-1 at any t is contradictory:
    the deleted-vertex subgraph induced by the |V|-1 interval vertices is
    cubic except at the deleted vertex's neighbors, and reducing the
    coloring mod 3 at its interval vertices would 3-color a subgraph that
    has no proper 3-coloring.
    """
    problems = []
    if not g.is_cubic():
        problems.append(f"{g.name} is not cubic")
    elif chromatic_index(g) != 4:
        problems.append(f"chromatic index of {g.name} is {chromatic_index(g)}, not 4")
    deletions: dict[str, int] = {}
    if not problems:
        for label in g.vertices:
            try:
                chi = chromatic_index(delete_vertex(g, label))
            except GraphError as exc:
                problems.append(f"cannot check deletion of {label}: {exc}")
                continue
            deletions[label] = chi
            if chi != 4:
                problems.append(
                    f"deleting {label} leaves chromatic index {chi}, not 4")
    if problems:
        raise GraphError("; ".join(problems))
    return BoundEvidence(
        kind=EvidenceKind.MOD_REDUCTION,
        value=g.n - 2,
        detail=(f"f = {g.n - 1} would reduce mod 3 to a proper 3-edge-coloring "
                f"of some vertex-deleted subgraph, but all {g.n} deletions "
                f"have chromatic index 4"),
        payload={"deletion_chromatic_indices": deletions},
    )


def mu1_floor_from_matchings(g: Graph) -> BoundEvidence:
    """Floor f >= 2 at t = 4 for cubic g whose perfect matchings all meet.

    If f <= 1, color classes 1 and 4 each miss at most one vertex; a
    matching covering an odd number of vertices is impossible, so both are
    perfect matchings, and distinct color classes are edge-disjoint. That
    contradicts pairwise intersection, hence f >= 2 at t = 4.
    """
    problems = []
    if not g.is_cubic():
        problems.append(f"{g.name} is not cubic")
    elif chromatic_index(g) != 4:
        problems.append(f"chromatic index of {g.name} is {chromatic_index(g)}, not 4")
    matchings = all_perfect_matchings(g) if not problems else ()
    pairs = 0
    if not problems:
        for m1, m2 in itertools.combinations(matchings, 2):
            pairs += 1
            if not m1 & m2:
                e1 = min(m1 - m2)
                problems.append(
                    f"disjoint perfect matchings exist (one contains edge "
                    f"{g.edge_labels[e1]})")
                break
    if problems:
        raise GraphError("; ".join(problems))
    return BoundEvidence(
        kind=EvidenceKind.MATCHING_INTERSECTION,
        value=2,
        applies_t=4,
        detail=(f"f <= 1 at t=4 would make color classes 1 and 4 disjoint "
                f"perfect matchings, but all {pairs} pairs of the "
                f"{len(matchings)} perfect matchings intersect"),
        payload={
            "perfect_matchings": [
                sorted(f"{a}-{b}" for a, b in
                       (g.edge_labels[ei] for ei in m))
                for m in matchings
            ],
            "pairs_checked": pairs,
        },
    )


def mu2_caps(g: Graph, t: int) -> list[BoundEvidence]:
    """All structural caps on f applicable to colorings with exactly t colors."""
    out = []
    if g.is_regular():
        try:
            out.append(mu22_cap_from_noninterval(g))
        except GraphError:
            pass
    try:
        out.append(mu22_cap_cubic(g))
    except GraphError:
        pass
    if t == g.m and g.min_degree() >= 2 and g.n <= _SUBSET_SCAN_LIMIT:
        out.append(mu2_top_cap(g))
    return out


def mu1_floors(g: Graph, t: int) -> list[BoundEvidence]:
    """All structural floors on f applicable at exactly t colors."""
    out = []
    if t == 4:
        try:
            out.append(mu1_floor_from_matchings(g))
        except GraphError:
            pass
    return out
