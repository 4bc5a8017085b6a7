"""Exact 0/1 rounding of rational edge weights.

Given a weight ``z(e)`` in ``[0, 1]`` per edge, produces ``x(e)`` in ``{0, 1}``
with, writing ``S_z(v)`` and ``S_x(v)`` for the incident weight sums:

(i)   ``S_z(v) - 1 < S_x(v) <= S_z(v) + 1`` at every vertex;
(ii)  no edge ``uv`` has ``x(uv) = 0`` while both ``S_x(u) < S_z(u)`` and
      ``S_x(v) < S_z(v)``;
(iii) the vertices with ``S_x(v) = S_z(v) + 1`` are exactly the designated
      vertices of the returned ledger; each lies on an odd cycle whose every
      vertex has an integer weight sum, and the ledger's cycles are pairwise
      independent (vertex-disjoint, with no graph edge joining them).

The construction keeps fractional values alive as a "support" subgraph and
repeatedly moves them along zero-sum directions of the incidence system until
only isolated edges and odd cycles remain; those are finished off directly.
All arithmetic is exact over :class:`fractions.Fraction`.  Every result is
re-certified against (i)-(iii) before being returned; a certification failure
raises :class:`~kmajority.errors.InternalInvariantError`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Optional, Sequence

from .errors import InputError, InternalInvariantError
from .graph import Graph

HALF = Fraction(1, 2)

# Edge coefficients of a zero-sum move; integers are used where the
# construction stays integral, halves appear on lollipop and merge cycles.
Direction = dict[int, "Fraction | int"]


@dataclass(frozen=True)
class RoundingResult:
    """0/1 value per edge plus the exceptional-vertex ledger.

    ``exceptional`` holds ``(vertex, cycle)`` pairs where ``cycle`` is the odd
    cycle's edge sequence in traversal order, certifying condition (iii).
    """

    x: tuple[int, ...]
    exceptional: tuple[tuple[int, tuple[int, ...]], ...]


def _as_weight(value, e: int) -> Fraction:
    if type(value) is not Fraction:
        if isinstance(value, float):
            raise InputError(f"weight for edge {e} is a float; use exact rationals")
        try:
            value = Fraction(value)
        except (TypeError, ValueError):
            raise InputError(f"weight for edge {e} is not rational: {value!r}") from None
    if not 0 <= value <= 1:
        raise InputError(f"weight {value} for edge {e} is outside [0, 1]")
    return value


def vertex_sums(graph: Graph, values: Sequence[Fraction]) -> list[Fraction]:
    sums: list = [0] * graph.vertex_count
    for e, (u, v) in enumerate(graph.edges):
        value = values[e]
        sums[u] += value
        sums[v] += value
    return sums


# ---------------------------------------------------------------------------
# Support views and direction construction
# ---------------------------------------------------------------------------


def _support_adjacency(
    graph: Graph, support: Sequence[bool], vertices: Iterable[int]
) -> dict[int, list[tuple[int, int]]]:
    vset = set(vertices)
    adj: dict[int, list[tuple[int, int]]] = {}
    for v in vset:
        adj[v] = [(u, e) for u, e in graph.adjacency[v] if support[e] and u in vset]
    return adj


def _split_components(adj: Mapping[int, list[tuple[int, int]]]) -> list[list[int]]:
    """Connected pieces with at least one edge, ordered by least vertex."""
    seen: set[int] = set()
    out = []
    for root in sorted(adj):
        if root in seen or not adj[root]:
            continue
        seen.add(root)
        block = [root]
        stack = [root]
        while stack:
            v = stack.pop()
            for u, _ in adj[v]:
                if u not in seen:
                    seen.add(u)
                    block.append(u)
                    stack.append(u)
        block.sort()
        out.append(block)
    return out


class _Tree:
    """BFS spanning tree of one support component, plus its chords."""

    def __init__(self, adj: Mapping[int, list[tuple[int, int]]], root: int):
        self.parent = {root: -1}
        self.parent_edge = {root: -1}
        self.depth = {root: 0}
        self.chords: list[tuple[int, int, int]] = []  # (edge, u, v) with u seen first
        chord_seen: set[int] = set()
        tree_edges: set[int] = set()
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u, e in adj[v]:
                if u not in self.parent:
                    self.parent[u] = v
                    self.parent_edge[u] = e
                    self.depth[u] = self.depth[v] + 1
                    tree_edges.add(e)
                    queue.append(u)
                elif e not in tree_edges and e not in chord_seen:
                    chord_seen.add(e)
                    self.chords.append((e, v, u))
        self.chords.sort()

    def fundamental_cycle(self, chord: tuple[int, int, int]) -> tuple[list[int], list[int]]:
        """Cycle (vertex sequence, edge sequence) closed by ``chord``."""
        e, u, v = chord
        left_v, left_e, right_v, right_e = [u], [], [v], []
        a, b = u, v
        while self.depth[a] > self.depth[b]:
            left_e.append(self.parent_edge[a])
            a = self.parent[a]
            left_v.append(a)
        while self.depth[b] > self.depth[a]:
            right_e.append(self.parent_edge[b])
            b = self.parent[b]
            right_v.append(b)
        while a != b:
            left_e.append(self.parent_edge[a])
            a = self.parent[a]
            left_v.append(a)
            right_e.append(self.parent_edge[b])
            b = self.parent[b]
            right_v.append(b)
        vseq = left_v + right_v[-2::-1]
        eseq = left_e + right_e[::-1] + [e]
        return vseq, eseq


def _rotate_cycle(
    vseq: Sequence[int], eseq: Sequence[int], start: int
) -> tuple[tuple[list[int], list[int]], tuple[list[int], list[int]]]:
    """Both traversals of a cycle starting at ``start``; lower first-edge id first."""
    i = vseq.index(start)
    fwd_v = list(vseq[i:]) + list(vseq[:i])
    fwd_e = list(eseq[i:]) + list(eseq[:i])
    rev_v = [fwd_v[0]] + fwd_v[:0:-1]
    rev_e = fwd_e[::-1]
    if fwd_e[0] <= rev_e[0]:
        return (fwd_v, fwd_e), (rev_v, rev_e)
    return (rev_v, rev_e), (fwd_v, fwd_e)


def _cycle_direction(eseq: Sequence[int]) -> Direction:
    """+1/-1 alternation around an even simple cycle (edges never repeat)."""
    return {e: 1 if i % 2 == 0 else -1 for i, e in enumerate(eseq)}


def _alternating_direction(walk: Sequence[int]) -> Direction:
    """Accumulate +1/-1 along a closed walk; zero net coefficients are dropped."""
    direction: dict[int, int] = {}
    for i, e in enumerate(walk):
        direction[e] = direction.get(e, 0) + (1 if i % 2 == 0 else -1)
    return {e: c for e, c in direction.items() if c}


def _bfs_path(
    adj: Mapping[int, list[tuple[int, int]]], sources: Iterable[int], targets: set[int]
) -> tuple[list[int], list[int]]:
    """Shortest path from the source set to the target set, deterministic."""
    parent: dict[int, tuple[int, int]] = {}
    seen = set(sources)
    queue = deque(sorted(seen))
    hit = None
    while queue and hit is None:
        v = queue.popleft()
        if v in targets:
            hit = v
            break
        for u, e in adj[v]:
            if u not in seen:
                seen.add(u)
                parent[u] = (v, e)
                if u in targets:
                    hit = u
                    queue.clear()
                    break
                queue.append(u)
    if hit is None:
        raise InternalInvariantError("no path between cycle pair inside one component")
    vpath, epath = [hit], []
    v = hit
    while v in parent:
        v, e = parent[v]
        vpath.append(v)
        epath.append(e)
    vpath.reverse()
    epath.reverse()
    return vpath, epath


def _two_odd_cycles_direction(
    adj: Mapping[int, list[tuple[int, int]]],
    c1: tuple[list[int], list[int]],
    c2: tuple[list[int], list[int]],
) -> Direction:
    """Zero-sum direction from an even closed walk through two odd cycles.

    The walk traverses the first cycle, reaches the second (directly when they
    share a vertex, otherwise via a connecting path used once in each
    direction), traverses it, and returns.  Alternating signs along the walk
    vanish at every vertex; the second cycle's chord keeps the result nonzero.
    """
    v1, e1 = c1
    v2, e2 = c2
    shared = sorted(set(v1) & set(v2))
    if shared:
        a = shared[0]
        (w1v, w1e), _ = _rotate_cycle(v1, e1, a)
        first, second = _rotate_cycle(v2, e2, a)
        for _, w2e in (first, second):
            if w2e[0] != w1e[-1] and w2e[-1] != w1e[0]:
                return _alternating_direction(w1e + w2e)
        raise InternalInvariantError("no admissible junction between shared odd cycles")
    pv, pe = _bfs_path(adj, v1, set(v2))
    (_, w1e), _ = _rotate_cycle(v1, e1, pv[0])
    (_, w2e), _ = _rotate_cycle(v2, e2, pv[-1])
    return _alternating_direction(w1e + pe + w2e + pe[::-1])


def _iter_live_kernel_directions(
    adj: Mapping[int, list[tuple[int, int]]], comp: Sequence[int], support: Sequence[bool]
):
    """Kernel directions from one spanning tree, skipping stale ones.

    Even fundamental cycles alternate individually; odd ones combine in
    pairs.  A direction built from this tree stays valid while all its edges
    remain fractional, so one tree build serves many saturations: liveness is
    re-read from ``support`` each time the generator resumes.
    """
    tree = _Tree(adj, comp[0])
    odds = []
    for chord in tree.chords:
        vseq, eseq = tree.fundamental_cycle(chord)
        if len(eseq) % 2 == 0:
            if all(support[e] for e in eseq):
                yield _cycle_direction(eseq)
        else:
            odds.append((vseq, eseq))
    for c1, c2 in zip(odds[0::2], odds[1::2]):
        if all(support[e] for e in c1[1]) and all(support[e] for e in c2[1]):
            direction = _two_odd_cycles_direction(adj, c1, c2)
            if all(support[e] for e in direction):
                yield direction


def _two_core(adj: Mapping[int, list[tuple[int, int]]], comp: Sequence[int]) -> set[int]:
    degree = {v: len(adj[v]) for v in comp}
    queue = deque(v for v in comp if degree[v] == 1)
    dead: set[int] = set()
    while queue:
        v = queue.popleft()
        dead.add(v)
        for u, _ in adj[v]:
            if u not in dead:
                degree[u] -= 1
                if degree[u] == 1:
                    queue.append(u)
    return {v for v in comp if v not in dead}


def _pendant_direction(
    adj: Mapping[int, list[tuple[int, int]]], comp: Sequence[int]
) -> Direction:
    leaves = sorted(v for v in comp if len(adj[v]) == 1)
    if not leaves or all(len(adj[v]) <= 1 for v in comp):
        raise InternalInvariantError("pendant direction needs a leaf and an internal vertex")
    if len(leaves) >= 2:
        _, epath = _bfs_path(adj, [leaves[0]], {leaves[1]})
        return {e: 1 if i % 2 == 0 else -1 for i, e in enumerate(epath)}
    # One leaf hanging off an odd cycle: alternate along the stem, then close
    # the cycle with halved alternating coefficients so the junction cancels.
    core = _two_core(adj, comp)
    vpath, epath = _bfs_path(adj, [leaves[0]], core)
    direction: Direction = {e: 1 if i % 2 == 0 else -1 for i, e in enumerate(epath)}
    junction = vpath[-1]
    stem_sign = 1 if (len(epath) - 1) % 2 == 0 else -1
    cyc_v, cyc_e = _trace_cycle(adj, junction, core)
    if len(cyc_e) % 2 == 0:
        raise InternalInvariantError("pendant component core should be an odd cycle")
    for i, e in enumerate(cyc_e):
        direction[e] = Fraction(-stem_sign, 2) if i % 2 == 0 else Fraction(stem_sign, 2)
    return direction


def _trace_cycle(
    adj: Mapping[int, list[tuple[int, int]]], start: int, core: set[int]
) -> tuple[list[int], list[int]]:
    """Walk a 2-regular core from ``start``, preferring the lower edge id."""
    vseq, eseq = [start], []
    prev_edge = -1
    v = start
    while True:
        u, e = next((u, e) for u, e in adj[v] if u in core and e != prev_edge)
        eseq.append(e)
        if u == start:
            return vseq, eseq
        vseq.append(u)
        prev_edge = e
        v = u


# ---------------------------------------------------------------------------
# Public direction API
# ---------------------------------------------------------------------------


def find_kernel_direction(
    graph: Graph, support: Iterable[int], component: Iterable[int]
) -> Optional[Direction]:
    """Zero-sum direction on a support component, or ``None``.

    A direction exists exactly when the component contains an even cycle or
    two distinct cycles: an even fundamental cycle alternates +1/-1, and two
    odd cycles combine through an even closed walk.  Vertex sums of the
    result vanish everywhere, so adding any multiple to the edge values
    leaves all weight sums unchanged.
    """
    flags = _as_support_flags(graph, support)
    comp = sorted(component)
    adj = _support_adjacency(graph, flags, comp)
    if _split_components(adj) != [comp]:
        raise InputError("component is not connected in the given support")
    direction = next(_iter_live_kernel_directions(adj, comp, flags), None)
    if direction is not None:
        _assert_zero_sums(graph, direction, constrained=None)
    return direction


def pendant_direction(
    graph: Graph, support: Iterable[int], component: Iterable[int]
) -> Direction:
    """Direction whose sums vanish at every degree->=2 vertex of the component.

    Requires the component (a tree, or a tree plus one odd cycle) to contain
    both a leaf and an internal vertex; realised as a leaf-to-leaf alternating
    path or as a leaf-to-cycle "lollipop".
    """
    flags = _as_support_flags(graph, support)
    comp = sorted(component)
    adj = _support_adjacency(graph, flags, comp)
    if _split_components(adj) != [comp]:
        raise InternalInvariantError("component is not connected in the given support")
    direction = _pendant_direction(adj, comp)
    internal = {v for v in comp if len(adj[v]) >= 2}
    _assert_zero_sums(graph, direction, constrained=internal)
    return direction


def _as_support_flags(graph: Graph, support: Iterable[int]) -> list[bool]:
    flags = [False] * graph.edge_count
    for e in support:
        flags[e] = True
    return flags


def _assert_zero_sums(graph: Graph, direction: Direction, constrained: Optional[set[int]]) -> None:
    sums: dict[int, Fraction] = {}
    for e, coeff in direction.items():
        u, v = graph.edges[e]
        sums[u] = sums.get(u, Fraction(0)) + coeff
        sums[v] = sums.get(v, Fraction(0)) + coeff
    broken = {
        v: s for v, s in sums.items() if s and (constrained is None or v in constrained)
    }
    if broken:
        raise InternalInvariantError(f"direction does not cancel at vertices {broken}")
    if not direction:
        raise InternalInvariantError("direction has empty support")


# ---------------------------------------------------------------------------
# Saturation
# ---------------------------------------------------------------------------


def _saturate(x: list[Fraction], support: list[bool], direction: Direction) -> None:
    """Move along ``direction`` until an edge value hits 0 or 1.

    Of the two signs, the one integralising more edges wins; remaining ties
    go to the lower newly-integral edge index, then to the positive sign.
    """
    items = list(direction.items())
    cpos = cneg = None
    for e, a in items:
        xe = x[e]
        if a == 1:
            up, down = 1 - xe, xe
        elif a == -1:
            up, down = xe, 1 - xe
        elif a > 0:
            up, down = (1 - xe) / a, xe / a
        else:
            up, down = xe / -a, (1 - xe) / -a
        if cpos is None or up < cpos:
            cpos = up
        if cneg is None or down < cneg:
            cneg = down
    cneg = -cneg
    if not (cpos > 0 > cneg):
        raise InternalInvariantError("degenerate saturation step")

    def lands(c: Fraction) -> list[int]:
        out = []
        for e, a in items:
            if a == 1:
                value = x[e] + c
            elif a == -1:
                value = x[e] - c
            else:
                value = x[e] + c * a
            if value.denominator == 1:
                out.append(e)
        return out

    spos, sneg = lands(cpos), lands(cneg)
    if len(spos) != len(sneg):
        c = cpos if len(spos) > len(sneg) else cneg
    elif min(spos) != min(sneg):
        c = cpos if min(spos) < min(sneg) else cneg
    else:
        c = cpos
    for e, a in items:
        if a == 1:
            value = x[e] + c
        elif a == -1:
            value = x[e] - c
        else:
            value = x[e] + c * a
        if not 0 <= value <= 1:
            raise InternalInvariantError(f"saturation pushed edge {e} to {value}")
        x[e] = value
        if value.denominator == 1:
            support[e] = False


# ---------------------------------------------------------------------------
# Odd-cycle resolution
# ---------------------------------------------------------------------------


def cycle_vertices(graph: Graph, eseq: Sequence[int]) -> list[int]:
    """Vertex order of a closed edge sequence (cycle), starting opposite eseq[1]."""
    if len(eseq) < 3:
        raise InputError("cycles in a simple graph have at least 3 edges")
    a, b = set(graph.edges[eseq[0]]), set(graph.edges[eseq[1]])
    first = (a - b).pop()
    order = [first]
    for e in eseq[:-1]:
        u, v = graph.edges[e]
        order.append(v if order[-1] == u else u)
    return order


def resolve_cycles(
    graph: Graph, x: Sequence[Fraction], cycles: Iterable[Sequence[int]]
) -> tuple[list[Fraction], list[tuple[int, tuple[int, ...]]]]:
    """Finish the rounding on disjoint odd support cycles.

    First merges pairs of bad cycles (every edge exactly 1/2) that are joined
    by an edge of the graph - flipping that edge and shifting both cycles by
    alternating halves keeps all vertex sums intact.  The surviving cycles are
    then rounded to nearest with the per-vertex tie rule; each remaining bad
    cycle contributes one designated vertex, rounded up on both sides, to the
    returned ledger.
    """
    x = list(x)
    if not cycles:
        return x, []
    cycs: list[tuple[list[int], list[int]]] = []
    for eseq in cycles:
        eseq = list(eseq)
        if len(eseq) % 2 == 0:
            raise InternalInvariantError(f"cycle {eseq} has even length")
        cycs.append((cycle_vertices(graph, eseq), eseq))
    cycs.sort(key=lambda c: min(c[0]))

    bad = {
        i for i, (_, eseq) in enumerate(cycs) if all(x[e] == HALF for e in eseq)
    }
    retired: set[int] = set()
    while True:
        owner: dict[int, int] = {}
        for i in bad - retired:
            for v in cycs[i][0]:
                owner[v] = i
        joining = None
        for e0, (u, v) in enumerate(graph.edges):
            iu, iv = owner.get(u), owner.get(v)
            if iu is not None and iv is not None and iu != iv:
                joining = (e0, u, v, iu, iv)
                break
        if joining is None:
            break
        e0, u, v, iu, iv = joining
        if x[e0].denominator != 1:
            raise InternalInvariantError(f"joining edge {e0} is not integral")
        direction: Direction = {e0: 2}
        for cyc_index, anchor in ((iu, u), (iv, v)):
            vseq, eseq = cycs[cyc_index]
            (_, walk_e), _ = _rotate_cycle(vseq, eseq, anchor)
            for i, e in enumerate(walk_e):
                direction[e] = -1 if i % 2 == 0 else 1
        _assert_zero_sums(graph, direction, constrained=None)
        c = HALF if x[e0] == 0 else -HALF
        for e, a in direction.items():
            x[e] += c * a
            if x[e].denominator != 1:
                raise InternalInvariantError("bad-cycle merge left a fractional edge")
        retired.update((iu, iv))

    ledger: list[tuple[int, tuple[int, ...]]] = []
    for i, (vseq, eseq) in enumerate(cycs):
        if i in retired:
            continue
        if i in bad:
            anchor = min(vseq)
            (walk_v, walk_e), _ = _rotate_cycle(vseq, eseq, anchor)
            for j, e in enumerate(walk_e):
                x[e] = Fraction(1 if j % 2 == 0 else 0)
            ledger.append((anchor, tuple(walk_e)))
        else:
            _round_mixed_cycle(x, eseq)
    return x, ledger


def _round_mixed_cycle(x: list[Fraction], eseq: Sequence[int]) -> None:
    """Nearest-integer rounding; runs of 1/2 alternate, anchored at the least edge id."""
    length = len(eseq)
    halves = [x[e] == HALF for e in eseq]
    for pos, e in enumerate(eseq):
        if not halves[pos]:
            x[e] = Fraction(0 if x[e] < HALF else 1)
    if not any(halves):
        return
    if all(halves):
        raise InternalInvariantError("bad cycle reached the mixed rounding path")
    starts = [p for p in range(length) if halves[p] and not halves[p - 1]]
    for start in starts:
        run = []
        p = start
        while halves[p]:
            run.append(p)
            p = (p + 1) % length
        anchor = min(range(len(run)), key=lambda idx: eseq[run[idx]])
        for idx, p in enumerate(run):
            x[eseq[p]] = Fraction(1 if (idx - anchor) % 2 == 0 else 0)


# ---------------------------------------------------------------------------
# Condition (ii)
# ---------------------------------------------------------------------------


def _scaled_weights(z: Sequence[Fraction]) -> tuple[int, list[int]]:
    """Common denominator and integer numerators: z[e] = zl[e] / scale."""
    scale = 1
    for w in z:
        d = w.denominator
        scale = scale * d // gcd(scale, d)
    return scale, [w.numerator * (scale // w.denominator) for w in z]


def _int_sums(graph: Graph, values: Sequence[int]) -> list[int]:
    sums = [0] * graph.vertex_count
    for e, (u, v) in enumerate(graph.edges):
        value = values[e]
        sums[u] += value
        sums[v] += value
    return sums


def enforce_condition_ii(
    graph: Graph, z: Sequence[Fraction], x: Sequence[Fraction]
) -> list[Fraction]:
    """Flip edges between strictly deficient endpoints to 1 until none remain.

    Each flip raises both endpoint sums by one, so (i) keeps holding strictly
    there and no new deficiency appears; the violating-edge count strictly
    decreases, bounding the loop by the edge count.
    """
    scale, zl = _scaled_weights([_as_weight(w, e) for e, w in enumerate(z)])
    for e, value in enumerate(x):
        if value not in (0, 1):
            raise InputError(f"x({e}) = {value} is not 0/1; repair runs after rounding")
    xi = [int(value) for value in x]
    _enforce_ii_int(graph, scale, zl, xi)
    return [Fraction(value) for value in xi]


def _enforce_ii_int(graph: Graph, scale: int, zl: Sequence[int], xi: list[int]) -> list[int]:
    """In-place condition (ii) repair over integral values (x scaled by 1)."""
    sums_z = _int_sums(graph, zl)
    sums_x = _int_sums(graph, xi)
    deficient = [sums_x[v] * scale < sums_z[v] for v in range(graph.vertex_count)]
    while True:
        flipped = False
        for e, (u, v) in enumerate(graph.edges):
            if xi[e] == 0 and deficient[u] and deficient[v]:
                xi[e] = 1
                for w in (u, v):
                    sums_x[w] += 1
                    deficient[w] = sums_x[w] * scale < sums_z[w]
                flipped = True
                break
        if not flipped:
            return sums_x


# ---------------------------------------------------------------------------
# The rounding pipeline
# ---------------------------------------------------------------------------


def round_weights(graph: Graph, weights: Sequence) -> RoundingResult:
    """Round rational edge weights to a certified 0/1 assignment.

    Pipeline: fix already-integral weights; exhaust zero-sum (kernel)
    directions, then pendant directions, so every support component shrinks
    to an isolated edge or an odd cycle; set isolated edges to 1; merge
    adjacent bad cycles; round the remaining cycles (designating one
    exceptional vertex per bad cycle); finally repair condition (ii).
    """
    if len(weights) != graph.edge_count:
        raise InputError(
            f"{len(weights)} weights for {graph.edge_count} edges"
        )
    z = [_as_weight(w, e) for e, w in enumerate(weights)]
    x = list(z)
    support = [value.denominator != 1 for value in x]

    active = sorted({v for e in range(graph.edge_count) if support[e] for v in graph.edges[e]})
    isolated: list[int] = []
    cycles: list[list[int]] = []
    stack = [
        comp for comp in _split_components(_support_adjacency(graph, support, active))
    ]
    while stack:
        comp = stack.pop()
        adj = _support_adjacency(graph, support, comp)
        pieces = _split_components(adj)
        if not pieces:
            continue
        if len(pieces) > 1:
            stack.extend(pieces)
            continue
        comp = pieces[0]
        if comp != sorted(adj):
            adj = {v: adj[v] for v in comp}
        progress = False
        for direction in _iter_live_kernel_directions(adj, comp, support):
            _saturate(x, support, direction)
            progress = True
        if progress:
            stack.append(comp)
            continue
        degrees = [len(adj[v]) for v in comp]
        if 1 in degrees and any(d >= 2 for d in degrees):
            _saturate(x, support, _pendant_direction(adj, comp))
            stack.append(comp)
            continue
        edges = sorted({e for v in comp for _, e in adj[v]})
        if len(edges) == 1:
            isolated.append(edges[0])
        else:
            if any(len(adj[v]) != 2 for v in comp):
                raise InternalInvariantError("terminal support component is not a cycle")
            vseq, eseq = _trace_cycle(adj, comp[0], set(comp))
            cycles.append(eseq)

    for e in sorted(isolated):
        x[e] = Fraction(1)

    x, ledger = resolve_cycles(graph, x, cycles)
    for e, value in enumerate(x):
        if value.denominator != 1:
            raise InternalInvariantError(f"edge {e} left fractional at {value}")
    xi = [int(value) for value in x]
    scale, zl = _scaled_weights(z)
    sums_x = _enforce_ii_int(graph, scale, zl, xi)
    _certify_int(graph, scale, zl, xi, ledger, sums_x)
    return RoundingResult(
        tuple(xi),
        tuple((v, tuple(cycle)) for v, cycle in ledger),
    )


def certify_rounding(
    graph: Graph,
    z: Sequence[Fraction],
    x: Sequence,
    ledger: Sequence[tuple[int, Sequence[int]]],
) -> None:
    """Exact post-hoc check of conditions (i)-(iii); raises on any breach."""
    scale, zl = _scaled_weights([_as_weight(w, e) for e, w in enumerate(z)])
    for e, value in enumerate(x):
        if value not in (0, 1):
            raise InternalInvariantError(f"edge {e} rounded to {value}")
    xi = [int(value) for value in x]
    _certify_int(graph, scale, zl, xi, ledger, _int_sums(graph, xi))


def _certify_int(
    graph: Graph,
    scale: int,
    zl: Sequence[int],
    xi: Sequence[int],
    ledger: Sequence[tuple[int, Sequence[int]]],
    sums_x: Sequence[int],
) -> None:
    """Conditions (i)-(iii) over integers: weights are zl/scale, x is 0/1."""
    for e, value in enumerate(xi):
        if value not in (0, 1):
            raise InternalInvariantError(f"edge {e} rounded to {value}")
    sums_z = _int_sums(graph, zl)
    for v in range(graph.vertex_count):
        sx = sums_x[v] * scale
        if not (sums_z[v] - scale < sx <= sums_z[v] + scale):
            raise InternalInvariantError(
                f"(i) fails at vertex {v}: x-sum {sums_x[v]}, z-sum {Fraction(sums_z[v], scale)}"
            )
    for e, (u, v) in enumerate(graph.edges):
        if xi[e] == 0 and sums_x[u] * scale < sums_z[u] and sums_x[v] * scale < sums_z[v]:
            raise InternalInvariantError(f"(ii) fails at edge {e} = ({u}, {v})")
    excess = {
        v for v in range(graph.vertex_count) if sums_x[v] * scale == sums_z[v] + scale
    }
    listed = [v for v, _ in ledger]
    if len(set(listed)) != len(listed) or set(listed) != excess:
        raise InternalInvariantError(
            f"(iii) ledger vertices {sorted(listed)} != excess vertices {sorted(excess)}"
        )
    cycle_vertex_sets: list[set[int]] = []
    for v, eseq in ledger:
        if len(eseq) % 2 == 0 or len(eseq) < 3:
            raise InternalInvariantError(f"(iii) ledger cycle for {v} is not odd")
        vseq = cycle_vertices(graph, eseq)
        if v not in vseq:
            raise InternalInvariantError(f"(iii) cycle for {v} does not pass through it")
        for u in vseq:
            if sums_z[u] % scale:
                raise InternalInvariantError(
                    f"(iii) cycle vertex {u} has non-integral z-sum"
                )
        cycle_vertex_sets.append(set(vseq))
    for i in range(len(cycle_vertex_sets)):
        for j in range(i + 1, len(cycle_vertex_sets)):
            if cycle_vertex_sets[i] & cycle_vertex_sets[j]:
                raise InternalInvariantError("(iii) ledger cycles share a vertex")
    if len(cycle_vertex_sets) > 1:
        membership: dict[int, int] = {}
        for i, vs in enumerate(cycle_vertex_sets):
            for u in vs:
                membership[u] = i
        for u, v in graph.edges:
            iu, iv = membership.get(u), membership.get(v)
            if iu is not None and iv is not None and iu != iv:
                raise InternalInvariantError("(iii) an edge joins two ledger cycles")
