"""Small immutable graphs with labeled vertices and dense edge indices.

Vertices carry string labels; edges are stored as a fixed-order tuple of
index pairs, so an edge coloring is just a flat array over edge indices.
All graphs here are simple, connected, and capped at 64 vertices / 64
edges, which keeps vertex subsets representable as plain int bitmasks.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

MAX_VERTICES = 64
MAX_EDGES = 64


class GraphError(ValueError):
    """Raised for malformed graph definitions or illegal graph arguments."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected graph.

    ``edges[i]`` is the pair of vertex indices of edge ``i`` with the lower
    index first; the tuple order defines the edge indexing used everywhere
    else (colorings, matchings, certificates).
    """

    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    @classmethod
    def from_labels(cls, name: str, vertices: Sequence[str],
                    edges: Iterable[tuple[str, str]]) -> "Graph":
        """Build and fully validate a graph from labeled edges."""
        vertices = tuple(vertices)
        if not vertices:
            raise GraphError("graph needs at least one vertex")
        if len(vertices) > MAX_VERTICES:
            raise GraphError(f"at most {MAX_VERTICES} vertices supported")
        if len(set(vertices)) != len(vertices):
            raise GraphError("duplicate vertex labels")
        index = {label: i for i, label in enumerate(vertices)}
        pairs: list[tuple[int, int]] = []
        seen: set[tuple[int, int]] = set()
        for a, b in edges:
            if a not in index or b not in index:
                raise GraphError(f"edge ({a},{b}) references unknown vertex")
            u, v = index[a], index[b]
            if u == v:
                raise GraphError(f"loop at {a}")
            if u > v:
                u, v = v, u
            if (u, v) in seen:
                raise GraphError(f"duplicate edge ({a},{b})")
            seen.add((u, v))
            pairs.append((u, v))
        if not pairs:
            raise GraphError("graph needs at least one edge")
        if len(pairs) > MAX_EDGES:
            raise GraphError(f"at most {MAX_EDGES} edges supported")
        g = cls(name=name, vertices=vertices, edges=tuple(pairs))
        if not g.is_connected():
            raise GraphError("graph must be connected")
        return g

    @cached_property
    def index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.vertices)}

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per vertex: tuple of (neighbor index, edge index)."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for ei, (u, v) in enumerate(self.edges):
            adj[u].append((v, ei))
            adj[v].append((u, ei))
        return tuple(tuple(a) for a in adj)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    @cached_property
    def edge_labels(self) -> tuple[tuple[str, str], ...]:
        return tuple((self.vertices[u], self.vertices[v]) for u, v in self.edges)

    @cached_property
    def edge_index(self) -> dict[frozenset[str], int]:
        """Label pair (order-insensitive) -> edge index."""
        return {frozenset(pair): i for i, pair in enumerate(self.edge_labels)}

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, label: str) -> int:
        return self.degrees[self.vertex_index(label)]

    def vertex_index(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise GraphError(f"unknown vertex {label!r} in {self.name}") from None

    def has_edge(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self.edge_index

    def min_degree(self) -> int:
        return min(self.degrees)

    def max_degree(self) -> int:
        return max(self.degrees)

    def is_regular(self) -> bool:
        return self.min_degree() == self.max_degree()

    def is_cubic(self) -> bool:
        return self.is_regular() and self.max_degree() == 3

    def is_connected(self) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            u = stack.pop()
            for v, _ in self.adjacency[u]:
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return len(seen) == self.n

    def summary(self) -> dict:
        return {"name": self.name, "vertices": self.n, "edges": self.m,
                "min_degree": self.min_degree(), "max_degree": self.max_degree()}


# ---------------------------------------------------------------------------
# vertex subsets as bitmasks

def vertex_set(g: Graph, items) -> int:
    """Normalize a vertex subset to an int bitmask.

    Accepts an int mask, vertex labels, or vertex indices.
    """
    if isinstance(items, int):
        if items < 0 or items >> g.n:
            raise GraphError("vertex mask has bits outside the graph")
        return items
    mask = 0
    for item in items:
        i = g.vertex_index(item) if isinstance(item, str) else int(item)
        if not 0 <= i < g.n:
            raise GraphError(f"vertex index {i} out of range")
        mask |= 1 << i
    return mask

def set_labels(g: Graph, mask: int) -> tuple[str, ...]:
    return tuple(g.vertices[i] for i in range(g.n) if mask >> i & 1)

def full_set(g: Graph) -> int:
    return (1 << g.n) - 1


# ---------------------------------------------------------------------------
# catalog graphs

#: Vertex labels and edge list of the Petersen graph, in the fixed order the
#: rest of the package (fixtures, certificates) relies on.
PETERSEN_VERTICES = ("x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5")
PETERSEN_EDGES = (
    ("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x5"), ("x1", "x5"),
    ("x1", "y1"), ("x2", "y2"), ("x3", "y3"), ("x4", "y4"), ("x5", "y5"),
    ("y1", "y3"), ("y1", "y4"), ("y2", "y4"), ("y2", "y5"), ("y3", "y5"),
)


@lru_cache(maxsize=1)
def petersen() -> Graph:
    """The Petersen graph: outer 5-cycle x1..x5, spokes, inner pentagram."""
    return Graph.from_labels("petersen", PETERSEN_VERTICES, PETERSEN_EDGES)


def path(n: int) -> Graph:
    if n < 2:
        raise GraphError("path needs n >= 2")
    labels = [f"v{i}" for i in range(n)]
    return Graph.from_labels(f"path:{n}", labels,
                             [(labels[i], labels[i + 1]) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    labels = [f"v{i}" for i in range(n)]
    edges = [(labels[i], labels[i + 1]) for i in range(n - 1)] + [(labels[0], labels[-1])]
    return Graph.from_labels(f"cycle:{n}", labels, edges)


def complete(n: int) -> Graph:
    if n < 3:
        raise GraphError("complete needs n >= 3")
    labels = [f"v{i}" for i in range(n)]
    return Graph.from_labels(f"complete:{n}", labels,
                             list(itertools.combinations(labels, 2)))


def from_spec(spec: str) -> Graph:
    """Resolve a catalog graph name: petersen, path:<n>, cycle:<n>, complete:<n>."""
    if spec == "petersen":
        return petersen()
    kind, sep, arg = spec.partition(":")
    makers = {"path": path, "cycle": cycle, "complete": complete}
    if sep and kind in makers:
        try:
            n = int(arg)
        except ValueError:
            raise GraphError(f"bad size in graph spec {spec!r}") from None
        return makers[kind](n)
    raise GraphError(f"unknown graph spec {spec!r}")


def is_petersen_labeled(g: Graph) -> bool:
    """True when g is the Petersen graph under its catalog labeling."""
    return (set(g.vertices) == set(PETERSEN_VERTICES)
            and {frozenset(e) for e in g.edge_labels}
            == {frozenset(e) for e in PETERSEN_EDGES})


# ---------------------------------------------------------------------------
# induced subgraphs

@dataclass(frozen=True)
class InducedSubgraph:
    """View of the subgraph induced by a vertex subset.

    Unlike Graph, a view may be disconnected and may have no edges.
    Vertex and edge ids refer to the parent graph's indices.
    """

    parent: Graph
    mask: int

    @cached_property
    def vertex_ids(self) -> tuple[int, ...]:
        return tuple(i for i in range(self.parent.n) if self.mask >> i & 1)

    @cached_property
    def edge_ids(self) -> tuple[int, ...]:
        m = self.mask
        return tuple(i for i, (u, v) in enumerate(self.parent.edges)
                     if m >> u & 1 and m >> v & 1)

    @property
    def n(self) -> int:
        return len(self.vertex_ids)

    @property
    def m(self) -> int:
        return len(self.edge_ids)

    def labels(self) -> tuple[str, ...]:
        return tuple(self.parent.vertices[i] for i in self.vertex_ids)

    def edge_pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(self.parent.edges[i] for i in self.edge_ids)

    def degree_of(self, vid: int) -> int:
        m = self.mask
        return sum(1 for w, _ in self.parent.adjacency[vid] if m >> w & 1)


def induced_subgraph(g: Graph, s) -> InducedSubgraph:
    mask = vertex_set(g, s)
    if mask == 0:
        raise GraphError("induced subgraph needs a nonempty vertex set")
    return InducedSubgraph(parent=g, mask=mask)


def _components(vertex_ids: Sequence[int], pairs: Sequence[tuple[int, int]]):
    """Connected components as (vertices, edge_count) over arbitrary vertex ids."""
    adj: dict[int, list[int]] = {v: [] for v in vertex_ids}
    for u, v in pairs:
        adj[u].append(v)
        adj[v].append(u)
    seen: set[int] = set()
    out = []
    for start in vertex_ids:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            u = stack.pop()
            for v in adj[u]:
                if v not in comp:
                    comp.add(v)
                    stack.append(v)
        seen |= comp
        ecount = sum(1 for u, v in pairs if u in comp)
        out.append((comp, ecount))
    return out


def is_path_forest(view: "InducedSubgraph | Graph") -> bool:
    """True iff every connected component is a simple path.

    An isolated vertex counts as a trivial path; any vertex of degree >= 3
    or any cycle disqualifies.
    """
    if isinstance(view, Graph):
        vids: Sequence[int] = range(view.n)
        pairs: Sequence[tuple[int, int]] = view.edges
    else:
        vids = view.vertex_ids
        pairs = view.edge_pairs()
    deg: dict[int, int] = {v: 0 for v in vids}
    for u, v in pairs:
        deg[u] += 1
        deg[v] += 1
    if any(d > 2 for d in deg.values()):
        return False
    # with max degree 2, a component is a path iff it is acyclic
    return all(ecount == len(comp) - 1 for comp, ecount in _components(vids, pairs))


def contains_induced_claw(g: Graph, s) -> bool:
    """True iff some 4 vertices of s induce a star K_{1,3} (and nothing else)."""
    mask = vertex_set(g, s)
    ids = [i for i in range(g.n) if mask >> i & 1]
    if len(ids) < 4:
        return False
    for quad in itertools.combinations(ids, 4):
        qm = 0
        for i in quad:
            qm |= 1 << i
        deg = {i: 0 for i in quad}
        ecount = 0
        for u, v in g.edges:
            if qm >> u & 1 and qm >> v & 1:
                ecount += 1
                deg[u] += 1
                deg[v] += 1
        if ecount == 3 and sorted(deg.values()) == [1, 1, 1, 3]:
            return True
    return False


def contains_induced_c6(g: Graph, s) -> bool:
    """True iff some 6 vertices of s induce a chordless 6-cycle."""
    mask = vertex_set(g, s)
    ids = [i for i in range(g.n) if mask >> i & 1]
    if len(ids) < 6:
        return False
    for six in itertools.combinations(ids, 6):
        sm = 0
        for i in six:
            sm |= 1 << i
        pairs = [(u, v) for u, v in g.edges if sm >> u & 1 and sm >> v & 1]
        if len(pairs) != 6:
            continue
        deg = {i: 0 for i in six}
        for u, v in pairs:
            deg[u] += 1
            deg[v] += 1
        if all(d == 2 for d in deg.values()):
            comps = _components(six, pairs)
            if len(comps) == 1:
                return True
    return False


# ---------------------------------------------------------------------------
# matchings

@lru_cache(maxsize=None)
def all_perfect_matchings(g: Graph) -> tuple[frozenset[int], ...]:
    """Every perfect matching, as a frozenset of edge indices.

    Backtracks over vertices in index order (always extending from the
    lowest-index unmatched vertex), so the output order is deterministic.
    Odd vertex count yields an empty tuple.
    """
    if g.n % 2:
        return ()
    out: list[frozenset[int]] = []
    matched = [False] * g.n
    chosen: list[int] = []

    def extend() -> None:
        try:
            v = matched.index(False)
        except ValueError:
            out.append(frozenset(chosen))
            return
        matched[v] = True
        for u, ei in g.adjacency[v]:
            if not matched[u]:
                matched[u] = True
                chosen.append(ei)
                extend()
                chosen.pop()
                matched[u] = False
        matched[v] = False

    extend()
    return tuple(out)


# ---------------------------------------------------------------------------
# chromatic index

def _proper_coloring_exists(n: int, edges: Sequence[tuple[int, int]], t: int) -> bool:
    """Backtracking existence check for a proper edge coloring in [1,t]."""
    m = len(edges)
    full = (1 << t) - 1
    used = [0] * n
    cnt = [0] * n
    eu = [e[0] for e in edges]
    ev = [e[1] for e in edges]
    colored = [False] * m

    def rec(remaining: int) -> bool:
        if remaining == 0:
            return True
        # most-constrained edge first keeps the tree small
        bi, bscore = -1, -1
        for i in range(m):
            if not colored[i]:
                s = cnt[eu[i]] + cnt[ev[i]]
                if s > bscore:
                    bi, bscore = i, s
        u, v = eu[bi], ev[bi]
        avail = full & ~(used[u] | used[v])
        colored[bi] = True
        cnt[u] += 1
        cnt[v] += 1
        while avail:
            bit = avail & -avail
            avail ^= bit
            used[u] |= bit
            used[v] |= bit
            if rec(remaining - 1):
                return True
            used[u] ^= bit
            used[v] ^= bit
        colored[bi] = False
        cnt[u] -= 1
        cnt[v] -= 1
        return False

    return rec(m)


@lru_cache(maxsize=None)
def chromatic_index(g: Graph) -> int:
    """Least t admitting a proper edge coloring with colors [1,t].

    Tries t = max degree, then max degree + 1; one of the two always works.
    """
    d = g.max_degree()
    if _proper_coloring_exists(g.n, g.edges, d):
        return d
    return d + 1


# ---------------------------------------------------------------------------
# vertex deletion / girth

def delete_vertex(g: Graph, label: str) -> Graph:
    """Remove a vertex and its incident edges; edge indices re-densify.

    Rejects deletions that disconnect the graph or empty its edge set.
    """
    vi = g.vertex_index(label)
    vertices = [lab for i, lab in enumerate(g.vertices) if i != vi]
    edges = [(a, b) for (a, b) in g.edge_labels if a != label and b != label]
    if not edges:
        raise GraphError(f"deleting {label} leaves no edges")
    try:
        return Graph.from_labels(f"{g.name}-del-{label}", vertices, edges)
    except GraphError as exc:
        raise GraphError(f"deleting {label} from {g.name}: {exc}") from None


def girth(g: Graph) -> int:
    """Length of a shortest cycle, by BFS from every vertex; 0 if acyclic."""
    best = 0
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        while queue:
            nxt = []
            for u in queue:
                for v, _ in g.adjacency[u]:
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        nxt.append(v)
                    elif v != parent[u]:
                        cyc = dist[u] + dist[v] + 1
                        if best == 0 or cyc < best:
                            best = cyc
            queue = nxt
    return best


# ---------------------------------------------------------------------------
# JSON interchange

def graph_to_dict(g: Graph) -> dict:
    return {"name": g.name,
            "vertices": list(g.vertices),
            "edges": [[a, b] for a, b in g.edge_labels]}


def graph_from_dict(d: dict) -> Graph:
    if not isinstance(d, dict):
        raise GraphError("graph document must be a JSON object")
    for key in ("name", "vertices", "edges"):
        if key not in d:
            raise GraphError(f"graph document missing {key!r}")
    edges = []
    for e in d["edges"]:
        if not (isinstance(e, (list, tuple)) and len(e) == 2):
            raise GraphError(f"bad edge entry {e!r}")
        edges.append((str(e[0]), str(e[1])))
    return Graph.from_labels(str(d["name"]), [str(v) for v in d["vertices"]], edges)


def load_graph(path: str) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path}: invalid JSON ({exc})") from None
    return graph_from_dict(doc)
