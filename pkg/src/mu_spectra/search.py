"""Exact branch-and-bound for the extremal interval-vertex counts.

``solve`` computes mu1(G,t) = min f and mu2(G,t) = max f over all valid
t-colorings of G by depth-first search over edges with color bitmasks.
Pruning rules:

* properness: only colors absent at both endpoints are branched on;
* surjectivity feasibility: a branch dies when fewer uncolored edges
  remain than unused colors; when the two are equal, only unused colors
  may be assigned;
* commitment bound: once all edges at a vertex are colored its interval
  status is final, so with ci committed-interval vertices, cn committed
  non-interval and the rest open, mu2 search prunes when ci + open cannot
  beat the incumbent and mu1 search prunes when ci alone already matches it;
* reflection: the involution k -> t+1-k preserves validity and f, so the
  first assigned edge may be restricted to colors <= ceil(t/2). This is
  the only sound color symmetry here: arbitrary permutations of colors
  change which spectra are intervals.

Runs may be seeded with catalog colorings and structural bounds; when the
resulting lower and upper bounds meet, the outcome is exact without any
search. ``profile`` sweeps every legal t, then aggregates the four
extremal values by interval arithmetic over the per-t bounds, so a profile
can certify an aggregate exactly even when middle rows stay open.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field, replace
from enum import Enum

from .coloring import EdgeColoring, analyze, require_valid, rebind
from .graphs import Graph, GraphError, chromatic_index, is_petersen_labeled
from .structural import BoundEvidence, EvidenceKind, mu1_floors, mu2_caps


class Objective(Enum):
    MU1 = "mu1"
    MU2 = "mu2"


class EdgeOrder(Enum):
    DECLARED = "declared"
    MOST_CONSTRAINED = "most-constrained"


class SolveStatus(Enum):
    EXACT = "exact"
    BOUNDS_ONLY = "bounds-only"


@dataclass(frozen=True)
class SearchConfig:
    """Budget and strategy knobs for solve/profile/sample.

    ``node_limit`` applies to a single solve; ``profile_node_limit`` is the
    per-(t, objective) budget used inside profile, kept separate so a full
    sweep stays fast while individual solves default to a deep budget.
    ``threads`` is accepted for interface stability; branches are explored
    sequentially regardless, which keeps outcomes bit-identical.
    """

    node_limit: int = 10**8
    time_limit_ms: int | None = None
    edge_order: EdgeOrder = EdgeOrder.MOST_CONSTRAINED
    use_reflection_symmetry: bool = True
    initial_bound: int | None = None
    seed_fixtures: bool = True
    use_structural_bounds: bool = True
    threads: int = 1
    profile_node_limit: int = 200_000

    def __post_init__(self):
        if self.node_limit < 1:
            raise ValueError("node_limit must be >= 1")
        if self.profile_node_limit < 1:
            raise ValueError("profile_node_limit must be >= 1")
        if self.threads < 1:
            raise ValueError("threads must be >= 1")
        if self.time_limit_ms is not None and self.time_limit_ms < 1:
            raise ValueError("time_limit_ms must be >= 1")


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one solve: exact value or certified bounds.

    ``lo <= mu <= hi`` always; status exact means lo == hi. For mu1 the
    witness (when present) attains hi, for mu2 it attains lo; either way a
    witness is a valid coloring whose f equals the bound it certifies.
    ``closed_by`` records how the run ended: bounds-closed (no search
    needed), bound-met (a witness hit a structural bound), exhausted
    (search space emptied), or budget.
    """

    objective: Objective
    t: int
    status: SolveStatus
    lo: int
    hi: int
    witness: EdgeColoring | None
    nodes_visited: int
    closed_by: str
    evidence: tuple[BoundEvidence, ...] = ()

    @property
    def is_exact(self) -> bool:
        return self.status is SolveStatus.EXACT

    @property
    def value(self) -> int | None:
        return self.lo if self.is_exact else None

    def to_dict(self, g: Graph) -> dict:
        doc: dict = {
            "objective": self.objective.value,
            "t": self.t,
            "status": self.status.value,
            "lo": self.lo,
            "hi": self.hi,
            "value": self.value,
            "nodes_visited": self.nodes_visited,
            "closed_by": self.closed_by,
        }
        if self.witness is not None:
            doc["witness"] = {f"{a}-{b}": self.witness.colors[i]
                              for i, (a, b) in enumerate(g.edge_labels)}
            doc["witness_f"] = self.lo if self.objective is Objective.MU2 else self.hi
        if self.evidence:
            doc["evidence"] = [e.to_dict() for e in self.evidence]
        return doc


def legal_t_range(g: Graph) -> range:
    """Every t admitting a valid coloring: chromatic index up to |E|."""
    return range(chromatic_index(g), g.m + 1)


def _require_legal_t(g: Graph, t: int) -> None:
    r = legal_t_range(g)
    if t not in r:
        raise GraphError(
            f"t={t} outside [{r.start}, {r.stop - 1}] for {g.name}")


def _interval_mask(mask: int) -> bool:
    m = mask >> ((mask & -mask).bit_length() - 1)
    return (m & (m + 1)) == 0


def _branch_and_bound(g: Graph, t: int, maximize: bool, best: int,
                      floor: int, cap: int, cfg: SearchConfig,
                      node_limit: int):
    """Core DFS. Returns (best, witness_colors, nodes, outcome_tag).

    ``best`` enters as the seeded incumbent and leaves as the optimum over
    the explored space and the seed. outcome_tag: "exhausted", "bound-met",
    or "budget".
    """
    n, m = g.n, g.m
    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    deg = list(g.degrees)
    full = (1 << t) - 1
    used = [0] * n
    cnt = [0] * n
    colors = [0] * m
    ccnt = [0] * (t + 1)
    declared_order = cfg.edge_order is EdgeOrder.DECLARED
    use_sym = cfg.use_reflection_symmetry
    sym_mask = (1 << ((t + 1) // 2)) - 1
    deadline = (time.monotonic() + cfg.time_limit_ms / 1000.0
                if cfg.time_limit_ms is not None else None)

    witness: list[int] | None = None
    nodes = 0
    aborted: str | None = None

    def rec(remaining: int, ci: int, cn: int, unused: int, depth: int) -> None:
        nonlocal best, witness, nodes, aborted
        if aborted:
            return
        if remaining == 0:
            # proper by construction; surjective because unused hit 0
            if maximize:
                if ci > best:
                    best, witness = ci, colors[:]
                    if best >= cap:
                        aborted = "bound-met"
            else:
                if ci < best:
                    best, witness = ci, colors[:]
                    if best <= floor:
                        aborted = "bound-met"
            return
        openv = n - ci - cn
        if maximize:
            if ci + openv <= best:
                return
        elif ci >= best:
            return
        if declared_order:
            bi = colors.index(0)
        else:
            bi, score = -1, -1
            for i in range(m):
                if colors[i] == 0:
                    s = cnt[eu[i]] + cnt[ev[i]]
                    if s > score:
                        score, bi = s, i
        u, v = eu[bi], ev[bi]
        avail = full & ~(used[u] | used[v])
        if unused == remaining:
            unused_mask = 0
            for c in range(1, t + 1):
                if ccnt[c] == 0:
                    unused_mask |= 1 << (c - 1)
            avail &= unused_mask
        if use_sym and depth == 0:
            avail &= sym_mask
        while avail:
            bit = avail & -avail
            avail ^= bit
            c = bit.bit_length()
            nodes += 1
            if nodes >= node_limit or (
                    deadline is not None and nodes % 2048 == 0
                    and time.monotonic() > deadline):
                aborted = "budget"
                return
            colors[bi] = c
            used[u] |= bit
            used[v] |= bit
            cnt[u] += 1
            cnt[v] += 1
            nci, ncn = ci, cn
            if cnt[u] == deg[u]:
                if _interval_mask(used[u]):
                    nci += 1
                else:
                    ncn += 1
            if cnt[v] == deg[v]:
                if _interval_mask(used[v]):
                    nci += 1
                else:
                    ncn += 1
            was_new = ccnt[c] == 0
            ccnt[c] += 1
            nu = unused - 1 if was_new else unused
            if nu <= remaining - 1:
                rec(remaining - 1, nci, ncn, nu, depth + 1)
            ccnt[c] -= 1
            cnt[u] -= 1
            cnt[v] -= 1
            used[u] ^= bit
            used[v] ^= bit
            colors[bi] = 0
            if aborted:
                return

    rec(m, 0, 0, t, 0)
    return best, witness, nodes, aborted or "exhausted"


def _fixture_seeds(g: Graph, t: int) -> list[tuple[str, EdgeColoring, int]]:
    """Catalog colorings applicable to this graph at this t, with their f."""
    if not is_petersen_labeled(g):
        return []
    from .fixtures import fixtures

    out = []
    for name, cert in fixtures().items():
        if cert.t != t or name in ("psi0", "lambda0"):
            continue
        c = rebind(cert, g)
        out.append((name, c, analyze(g, c).f))
    return out


def solve(g: Graph, t: int, objective: Objective,
          cfg: SearchConfig = SearchConfig()) -> SearchOutcome:
    """Compute mu1(g,t) or mu2(g,t), exactly when the budget allows.

    Bounds from catalog colorings and structural arguments are installed
    first; if they already meet, no search runs. Otherwise branch-and-bound
    refines the open side until it closes or the budget runs out, in which
    case the outcome carries the tightest (lo, hi) established.
    """
    _require_legal_t(g, t)
    maximize = objective is Objective.MU2
    n = g.n
    evidence: list[BoundEvidence] = []

    best = -1 if maximize else n + 1
    witness: EdgeColoring | None = None
    if cfg.seed_fixtures:
        for name, c, f in _fixture_seeds(g, t):
            better = f > best if maximize else f < best
            if better:
                best, witness = f, c
                evidence.append(BoundEvidence(
                    kind=EvidenceKind.CERTIFICATE_LOWER_BOUND,
                    value=f,
                    applies_t=t,
                    detail=f"catalog coloring {name} achieves f={f} at t={t}"))
    if cfg.initial_bound is not None:
        b = cfg.initial_bound
        if not 0 <= b <= n:
            raise ValueError(f"initial_bound {b} outside [0, {n}]")
        if (maximize and b > best) or (not maximize and b < best):
            best, witness = b, None

    floor, cap = 0, n
    if cfg.use_structural_bounds:
        if maximize:
            for ev in mu2_caps(g, t):
                evidence.append(ev)
                cap = min(cap, ev.value)
        else:
            for ev in mu1_floors(g, t):
                evidence.append(ev)
                floor = max(floor, ev.value)

    # entering bounds: mu2 in [max(best,0), cap], mu1 in [floor, min(best,n)]
    if maximize:
        lo, hi = max(best, 0), cap
    else:
        lo, hi = floor, min(best, n)
    if lo > hi:
        raise ValueError(
            f"inconsistent bounds [{lo}, {hi}] for {objective.value} at t={t}; "
            f"is the initial_bound achievable?")

    if lo == hi:
        outcome = SearchOutcome(
            objective=objective, t=t, status=SolveStatus.EXACT,
            lo=lo, hi=hi, witness=witness, nodes_visited=0,
            closed_by="bounds-closed", evidence=tuple(evidence))
        return _checked(g, outcome)

    best, wcolors, nodes, tag = _branch_and_bound(
        g, t, maximize, best, floor, cap, cfg, cfg.node_limit)
    if wcolors is not None:
        witness = EdgeColoring(t=t, colors=tuple(wcolors))

    if tag == "budget":
        if maximize:
            lo = max(best, 0)
        else:
            hi = min(best, n)
        status = SolveStatus.BOUNDS_ONLY if lo < hi else SolveStatus.EXACT
        outcome = SearchOutcome(
            objective=objective, t=t, status=status, lo=lo, hi=hi,
            witness=witness, nodes_visited=nodes,
            closed_by="budget" if lo < hi else "bounds-closed",
            evidence=tuple(evidence))
    else:
        # exhausted or bound-met: best is the optimum
        outcome = SearchOutcome(
            objective=objective, t=t, status=SolveStatus.EXACT,
            lo=best, hi=best, witness=witness, nodes_visited=nodes,
            closed_by=tag, evidence=tuple(evidence))
    return _checked(g, outcome)


def _checked(g: Graph, outcome: SearchOutcome) -> SearchOutcome:
    """Final guard: any witness must validate and attain its bound."""
    w = outcome.witness
    if w is not None:
        require_valid(g, w)
        f = analyze(g, w).f
        expect = outcome.lo if outcome.objective is Objective.MU2 else outcome.hi
        if f != expect:
            raise RuntimeError(
                f"witness f={f} does not match reported bound {expect}")
    return outcome


@dataclass(frozen=True)
class AggregateBound:
    """Interval for an aggregate extremal value.

    Aggregating min over rows [lo_i, hi_i] gives [min lo_i, min hi_i];
    max gives [max lo_i, max hi_i]. Exact when the interval collapses,
    which can happen even when individual rows stay open.
    """

    lo: int
    hi: int

    @property
    def status(self) -> SolveStatus:
        return SolveStatus.EXACT if self.lo == self.hi else SolveStatus.BOUNDS_ONLY

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    @property
    def value(self) -> int | None:
        return self.lo if self.is_exact else None

    def to_dict(self) -> dict:
        return {"lo": self.lo, "hi": self.hi, "status": self.status.value,
                "value": self.value}


def _agg_min(rows: list[SearchOutcome]) -> AggregateBound:
    return AggregateBound(lo=min(r.lo for r in rows), hi=min(r.hi for r in rows))


def _agg_max(rows: list[SearchOutcome]) -> AggregateBound:
    return AggregateBound(lo=max(r.lo for r in rows), hi=max(r.hi for r in rows))


@dataclass(frozen=True)
class ProfileRow:
    t: int
    mu1: SearchOutcome
    mu2: SearchOutcome


@dataclass(frozen=True)
class MuProfile:
    """Per-t outcomes for both objectives plus the four aggregates."""

    graph: Graph
    rows: tuple[ProfileRow, ...]
    mu11: AggregateBound = field(init=False)
    mu12: AggregateBound = field(init=False)
    mu21: AggregateBound = field(init=False)
    mu22: AggregateBound = field(init=False)

    def __post_init__(self):
        mu1s = [r.mu1 for r in self.rows]
        mu2s = [r.mu2 for r in self.rows]
        object.__setattr__(self, "mu11", _agg_min(mu1s))
        object.__setattr__(self, "mu12", _agg_max(mu1s))
        object.__setattr__(self, "mu21", _agg_min(mu2s))
        object.__setattr__(self, "mu22", _agg_max(mu2s))

    def row(self, t: int) -> ProfileRow:
        for r in self.rows:
            if r.t == t:
                return r
        raise KeyError(f"no row for t={t}")

    def to_dict(self) -> dict:
        return {
            "graph": self.graph.name,
            "t_range": [self.rows[0].t, self.rows[-1].t],
            "rows": [{"t": r.t,
                      "mu1": r.mu1.to_dict(self.graph),
                      "mu2": r.mu2.to_dict(self.graph)} for r in self.rows],
            "aggregates": {"mu11": self.mu11.to_dict(),
                           "mu12": self.mu12.to_dict(),
                           "mu21": self.mu21.to_dict(),
                           "mu22": self.mu22.to_dict()},
        }


def profile(g: Graph, cfg: SearchConfig = SearchConfig()) -> MuProfile:
    """Solve both objectives at every legal t and aggregate.

    Each run gets cfg.profile_node_limit nodes. Rows left open by the
    budget still contribute their bounds, and the aggregate intervals often
    collapse anyway.
    """
    per_run = replace(cfg, node_limit=cfg.profile_node_limit)
    rows = []
    for t in legal_t_range(g):
        rows.append(ProfileRow(
            t=t,
            mu1=solve(g, t, Objective.MU1, per_run),
            mu2=solve(g, t, Objective.MU2, per_run)))
    return MuProfile(graph=g, rows=tuple(rows))


def _random_coloring(g: Graph, t: int, rng: random.Random,
                     node_cap: int) -> EdgeColoring | None:
    """One randomized-order backtracking attempt; None when capped out."""
    n, m = g.n, g.m
    eu = [u for u, _ in g.edges]
    ev = [v for _, v in g.edges]
    full = (1 << t) - 1
    used = [0] * n
    colors = [0] * m
    ccnt = [0] * (t + 1)
    order = list(range(m))
    rng.shuffle(order)
    nodes = 0

    def rec(pos: int, unused: int) -> bool:
        nonlocal nodes
        if pos == m:
            return unused == 0
        ei = order[pos]
        u, v = eu[ei], ev[ei]
        avail = full & ~(used[u] | used[v])
        if unused == m - pos:
            unused_mask = 0
            for c in range(1, t + 1):
                if ccnt[c] == 0:
                    unused_mask |= 1 << (c - 1)
            avail &= unused_mask
        bits = []
        while avail:
            bit = avail & -avail
            avail ^= bit
            bits.append(bit)
        rng.shuffle(bits)
        for bit in bits:
            nodes += 1
            if nodes > node_cap:
                return False
            c = bit.bit_length()
            colors[ei] = c
            used[u] |= bit
            used[v] |= bit
            was_new = ccnt[c] == 0
            ccnt[c] += 1
            nu = unused - 1 if was_new else unused
            if nu <= m - pos - 1 and rec(pos + 1, nu):
                return True
            ccnt[c] -= 1
            used[u] ^= bit
            used[v] ^= bit
            colors[ei] = 0
            if nodes > node_cap:
                return False
        return False

    if rec(0, t):
        return EdgeColoring(t=t, colors=tuple(colors))
    return None


class _Unshuffler(random.Random):
    """Random that leaves sequences alone: reuses the attempt machinery
    for a deterministic, exhaustive fallback pass."""

    def shuffle(self, x):
        pass


def sample(g: Graph, t: int, seed: int = 0, count: int = 1) -> list[EdgeColoring]:
    """Pseudo-random valid t-colorings, deterministic per seed.

    Randomized-order backtracking with restarts; falls back to a plain
    deterministic first-solution search if every randomized attempt caps
    out (possible only on adversarial instances, never observed on the
    test corpus).
    """
    _require_legal_t(g, t)
    rng = random.Random(seed)
    out: list[EdgeColoring] = []
    for _ in range(count):
        c: EdgeColoring | None = None
        for _attempt in range(32):
            c = _random_coloring(g, t, rng, node_cap=100_000)
            if c is not None:
                break
        if c is None:
            c = _random_coloring(g, t, _Unshuffler(), node_cap=2**63)
            if c is None:
                raise RuntimeError(f"no valid coloring found for t={t}")
        require_valid(g, c)
        out.append(c)
    return out
