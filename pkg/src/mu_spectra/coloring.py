"""Proper edge colorings, vertex spectra, and serializable certificates.

A coloring assigns a color from [1,t] to every edge index of a graph; it is
valid when adjacent edges differ and every one of the t colors occurs. The
spectrum of a vertex is the set of colors on its incident edges, and the
quantity of interest everywhere is f = the number of vertices whose spectrum
is an interval of consecutive integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .graphs import Graph, GraphError, from_spec, graph_from_dict, graph_to_dict


class InvalidColoringError(ValueError):
    """Raised when an operation requires a valid coloring and got violations."""

    def __init__(self, violations: tuple["Violation", ...]):
        self.violations = violations
        super().__init__("; ".join(v.message for v in violations))


@dataclass(frozen=True)
class EdgeColoring:
    """Total color assignment: ``colors[i]`` is the color of edge ``i``."""

    t: int
    colors: tuple[int, ...]

    @classmethod
    def of(cls, t: int, colors: Iterable[int]) -> "EdgeColoring":
        return cls(t=t, colors=tuple(int(c) for c in colors))


@dataclass(frozen=True)
class Violation:
    kind: str      # "shape" | "range" | "properness" | "surjectivity"
    where: str     # vertex label, edge description, or color
    message: str


def is_interval(colors) -> bool:
    """True iff the set is a nonempty run of consecutive integers."""
    s = set(colors)
    if not s:
        raise ValueError("interval test needs a nonempty set")
    return max(s) - min(s) == len(s) - 1


def spectrum(g: Graph, c: EdgeColoring, label: str) -> frozenset[int]:
    """Colors on the edges incident to a vertex."""
    vi = g.vertex_index(label)
    return frozenset(c.colors[ei] for _, ei in g.adjacency[vi])


def validate(g: Graph, c: EdgeColoring) -> tuple[Violation, ...]:
    """All violations of properness, surjectivity, and color range.

    Empty result means the coloring is a member of alpha(g, t). Reports
    every violation rather than the first, so hand-edited certificates get
    full diagnostics. Never raises.
    """
    if len(c.colors) != g.m:
        return (Violation("shape", g.name,
                          f"expected {g.m} edge colors, got {len(c.colors)}"),)
    out: list[Violation] = []
    for ei, col in enumerate(c.colors):
        if not 1 <= col <= c.t:
            a, b = g.edge_labels[ei]
            out.append(Violation("range", f"({a},{b})",
                                 f"color {col} on edge ({a},{b}) outside [1,{c.t}]"))
    for vi, label in enumerate(g.vertices):
        seen: dict[int, int] = {}
        for _, ei in g.adjacency[vi]:
            col = c.colors[ei]
            if col in seen:
                a1, b1 = g.edge_labels[seen[col]]
                a2, b2 = g.edge_labels[ei]
                out.append(Violation(
                    "properness", label,
                    f"edges ({a1},{b1}) and ({a2},{b2}) at {label} share color {col}"))
            else:
                seen[col] = ei
    missing = sorted(set(range(1, c.t + 1)) - set(c.colors))
    for col in missing:
        out.append(Violation("surjectivity", str(col), f"color {col} unused"))
    return tuple(out)


def is_valid(g: Graph, c: EdgeColoring) -> bool:
    return not validate(g, c)


def require_valid(g: Graph, c: EdgeColoring) -> None:
    violations = validate(g, c)
    if violations:
        raise InvalidColoringError(violations)


@dataclass(frozen=True)
class SpectrumReport:
    """Per-vertex spectra and interval flags for one valid coloring."""

    spectra: tuple[frozenset[int], ...]
    interval_flags: tuple[bool, ...]
    f: int
    v_int: int  # bitmask over vertex indices

    def interval_vertices(self, g: Graph) -> tuple[str, ...]:
        return tuple(lab for i, lab in enumerate(g.vertices) if self.v_int >> i & 1)


def analyze(g: Graph, c: EdgeColoring) -> SpectrumReport:
    """Spectra, interval flags, and f for a valid coloring."""
    require_valid(g, c)
    spectra = []
    flags = []
    v_int = 0
    for vi in range(g.n):
        s = frozenset(c.colors[ei] for _, ei in g.adjacency[vi])
        spectra.append(s)
        flag = is_interval(s)
        flags.append(flag)
        if flag:
            v_int |= 1 << vi
    return SpectrumReport(spectra=tuple(spectra), interval_flags=tuple(flags),
                          f=sum(flags), v_int=v_int)


def reflect(c: EdgeColoring) -> EdgeColoring:
    """Replace each color k by t+1-k.

    An involution on valid colorings; it maps intervals to intervals, so
    every spectrum keeps its interval status and f is unchanged.
    """
    return EdgeColoring(t=c.t, colors=tuple(c.t + 1 - k for k in c.colors))


# ---------------------------------------------------------------------------
# certificates

def _edge_key(a: str, b: str) -> str:
    return f"{a}-{b}"


def _parse_edge_key(key: str, g: Graph) -> int:
    """Resolve 'a-b' to an edge index, accepting either endpoint order."""
    for pos in range(1, len(key)):
        if key[pos] != "-":
            continue
        a, b = key[:pos], key[pos + 1:]
        if a in g.index and b in g.index:
            pair = frozenset((a, b))
            if pair in g.edge_index:
                return g.edge_index[pair]
            raise GraphError(f"{key!r} is not an edge of {g.name}")
    raise GraphError(f"edge key {key!r} does not name two vertices of {g.name}")


@dataclass(frozen=True)
class Certificate:
    """A (graph, t, coloring, claims) bundle for independent re-verification.

    ``colors`` is aligned with the graph's edge indices. ``source`` records
    the catalog name when the graph was referenced by name, so serialization
    round-trips without inlining.
    """

    graph: Graph
    t: int
    colors: tuple[int, ...]
    claim_f: int | None = None
    claim_intervals: tuple[tuple[str, bool], ...] | None = None
    source: str | None = None

    def coloring(self) -> EdgeColoring:
        return EdgeColoring(t=self.t, colors=self.colors)

    def to_dict(self) -> dict:
        colors = {_edge_key(a, b): self.colors[i]
                  for i, (a, b) in enumerate(self.graph.edge_labels)}
        doc: dict = {
            "graph": self.source if self.source else graph_to_dict(self.graph),
            "t": self.t,
            "colors": colors,
        }
        claims: dict = {}
        if self.claim_f is not None:
            claims["f"] = self.claim_f
        if self.claim_intervals is not None:
            claims["interval"] = dict(self.claim_intervals)
        if claims:
            doc["claims"] = claims
        return doc

    @classmethod
    def from_dict(cls, doc: dict) -> "Certificate":
        if not isinstance(doc, dict):
            raise GraphError("certificate must be a JSON object")
        for key in ("graph", "t", "colors"):
            if key not in doc:
                raise GraphError(f"certificate missing {key!r}")
        gfield = doc["graph"]
        if isinstance(gfield, str):
            graph = from_spec(gfield)
            source: str | None = gfield
        else:
            graph = graph_from_dict(gfield)
            source = None
        t = int(doc["t"])
        raw = doc["colors"]
        if not isinstance(raw, Mapping):
            raise GraphError("certificate colors must be an object")
        colors = [0] * graph.m
        seen = [False] * graph.m
        for key, value in raw.items():
            ei = _parse_edge_key(str(key), graph)
            if seen[ei]:
                raise GraphError(f"edge {key!r} colored twice")
            seen[ei] = True
            colors[ei] = int(value)
        if not all(seen):
            missing = [f"{a}-{b}" for i, (a, b) in enumerate(graph.edge_labels)
                       if not seen[i]]
            raise GraphError(f"certificate misses edges: {', '.join(missing)}")
        claims = doc.get("claims", {}) or {}
        claim_f = claims.get("f")
        claim_intervals = None
        if "interval" in claims:
            claim_intervals = tuple(sorted(
                (str(k), bool(v)) for k, v in claims["interval"].items()))
        return cls(graph=graph, t=t, colors=tuple(colors),
                   claim_f=None if claim_f is None else int(claim_f),
                   claim_intervals=claim_intervals, source=source)


@dataclass(frozen=True)
class CertificateCheck:
    """Outcome of re-verifying a certificate against its own claims."""

    violations: tuple[Violation, ...]
    f: int | None
    mismatches: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations and not self.mismatches


def check_certificate(cert: Certificate) -> CertificateCheck:
    """Validate the coloring and recompute everything the certificate claims."""
    c = cert.coloring()
    violations = validate(cert.graph, c)
    if violations:
        return CertificateCheck(violations=violations, f=None)
    report = analyze(cert.graph, c)
    mismatches: list[str] = []
    if cert.claim_f is not None and report.f != cert.claim_f:
        mismatches.append(f"claimed f={cert.claim_f}, recomputed f={report.f}")
    if cert.claim_intervals is not None:
        for label, expected in cert.claim_intervals:
            actual = report.interval_flags[cert.graph.vertex_index(label)]
            if actual != expected:
                mismatches.append(
                    f"claimed interval[{label}]={expected}, recomputed {actual}")
    return CertificateCheck(violations=(), f=report.f, mismatches=tuple(mismatches))


def rebind(cert: Certificate, g: Graph) -> EdgeColoring:
    """Carry a certificate's coloring onto a graph with the same labeled edges.

    Matching is by label pair, so the target's edge indexing may differ.
    """
    colors = [0] * g.m
    for i, pair in enumerate(cert.graph.edge_labels):
        key = frozenset(pair)
        if key not in g.edge_index:
            raise GraphError(f"{g.name} lacks edge {pair}")
        colors[g.edge_index[key]] = cert.colors[i]
    if len(cert.graph.edges) != g.m:
        raise GraphError("edge sets differ")
    return EdgeColoring(t=cert.t, colors=tuple(colors))
