"""Lower-bound constructions, random test graphs, and the exhaustive oracle.

The two constructions witness that the schemes' degree thresholds cannot be
relaxed much: a complete bipartite graph minus one edge (minimum degree
k^2 - k - 1) defeats any (k+1)-colouring by a pigeonhole count, and a
complete graph minus a Hamilton cycle plus an apex (minimum degree k^2 - 1)
defeats it by a parity argument.  The backtracking oracle certifies such
infeasibility exactly at desk scale.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .colouring import EdgeColouring, check_majority
from .errors import InputError, InternalInvariantError
from .graph import Graph, build_graph


def bipartite_lower_bound(k: int) -> Graph:
    """K_{k^2-k, k^2-k} minus one edge; minimum degree k^2 - k - 1.

    Vertices with degree k^2 - k - 1 admit at most k - 2 same-coloured edges,
    so k + 1 colours cover at most k^2 - k - 2 of their edges: too few.
    """
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    a = k * k - k
    edges = [
        (left, a + right)
        for left in range(a)
        for right in range(a)
        if not (left == 0 and right == 0)
    ]
    return build_graph(2 * a, edges)


def general_lower_bound(k: int) -> Graph:
    """Complete graph on k^2 + 1 vertices minus a Hamilton cycle, plus an apex.

    Yields k^2 + 1 vertices of degree k^2 - 1 and one of degree k^2 + 1.  In
    any valid colouring some colour class would have odd degree sum
    (k^2+1)(k-1) + k, which is impossible.
    """
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    core = k * k + 1
    apex = core
    edges = []
    for u in range(core):
        for v in range(u + 1, core):
            if v - u == 1 or (u == 0 and v == core - 1):
                continue  # Hamilton cycle 0-1-...-core-1-0 removed
            edges.append((u, v))
    edges.extend((v, apex) for v in range(core))
    return build_graph(core + 1, edges)


def random_min_degree_graph(
    n: int,
    min_degree: int,
    bipartite: bool = False,
    seed: int = 0,
    extra_edges: int = 0,
) -> Graph:
    """Random simple graph with minimum degree >= ``min_degree``.

    Bipartite graphs take ``n/2`` vertices per side (n must be even, each
    side at least ``min_degree``) and overlay ``min_degree`` random perfect
    matchings, so the base is exactly regular.  General graphs pair stubs of
    a configuration model, rejecting loops and duplicates.  ``extra_edges``
    random non-edges are added on top.  Deterministic in ``seed``.
    """
    if min_degree < 0 or extra_edges < 0:
        raise InputError("min_degree and extra_edges must be nonnegative")
    rng = random.Random(seed)
    if bipartite:
        if n % 2:
            raise InputError(f"bipartite generation needs an even vertex count, got {n}")
        a = n // 2
        if a < min_degree:
            raise InputError(f"side size {a} below requested minimum degree {min_degree}")
        edges = {(u, a + w) for u, w in _bipartite_regular(a, min_degree, rng)}
        for _ in range(extra_edges):
            for _attempt in range(500):
                u = rng.randrange(a)
                v = a + rng.randrange(a)
                if (u, v) not in edges:
                    edges.add((u, v))
                    break
        return build_graph(n, sorted(edges))

    if n <= min_degree:
        raise InputError(f"need more than {min_degree} vertices, got {n}")
    pairs = _configuration_model(n, min_degree, rng)
    for _ in range(extra_edges):
        for _attempt in range(500):
            u = rng.randrange(n)
            v = rng.randrange(n)
            key = (min(u, v), max(u, v))
            if u != v and key not in pairs:
                pairs.add(key)
                break
    return build_graph(n, sorted(pairs))


def _bipartite_regular(a: int, d: int, rng: random.Random) -> set[tuple[int, int]]:
    """Exactly d-regular bipartite pairing of two sides of size a (local ids)."""
    if d == 0:
        return set()
    if d > a - d:
        sparse = _bipartite_regular(a, a - d, rng)
        return {(u, w) for u in range(a) for w in range(a) if (u, w) not in sparse}
    left = [v for v in range(a) for _ in range(d)]
    right = [v for v in range(a) for _ in range(d)]
    while True:
        rng.shuffle(left)
        rng.shuffle(right)
        edges: set[tuple[int, int]] = set()
        lo: list[int] = []
        ro: list[int] = []
        for u, w in zip(left, right):
            if (u, w) in edges:
                lo.append(u)
                ro.append(w)
            else:
                edges.add((u, w))
        for _round in range(50):
            if not lo:
                return edges
            rng.shuffle(ro)
            still_l: list[int] = []
            still_r: list[int] = []
            for u, w in zip(lo, ro):
                if (u, w) in edges:
                    still_l.append(u)
                    still_r.append(w)
                else:
                    edges.add((u, w))
            lo, ro = still_l, still_r
        # Dead end: resample wholesale.


def _configuration_model(n: int, d: int, rng: random.Random) -> set[tuple[int, int]]:
    """Random d-regular-ish edge set (vertex 0 takes one extra stub if n*d is odd).

    Dense targets (d above half the graph) are built as complements of sparse
    ones; random pairing would mostly collide otherwise.
    """
    if d > n - 1 - d:
        sparse = _pair_stubs(n, n - 1 - d, rng, drop_on_odd=True)
        return {
            (u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in sparse
        }
    return _pair_stubs(n, d, rng, drop_on_odd=False)


def _pair_stubs(n: int, d: int, rng: random.Random, drop_on_odd: bool) -> set[tuple[int, int]]:
    """Pair d stubs per vertex into distinct edges, rejecting loops/duplicates.

    An odd stub total either drops one stub of vertex 0 (complement use: its
    final degree rises by one) or adds one there (direct use, same effect).
    """
    stubs = [v for v in range(n) for _ in range(d)]
    if len(stubs) % 2:
        if drop_on_odd:
            stubs.remove(0)
        else:
            stubs.append(0)
    if not stubs:
        return set()
    while True:
        rng.shuffle(stubs)
        edges: set[tuple[int, int]] = set()
        leftover: list[int] = []
        it = iter(stubs)
        for u, v in zip(it, it):
            key = (min(u, v), max(u, v))
            if u == v or key in edges:
                leftover.extend((u, v))
            else:
                edges.add(key)
        for _round in range(50):
            if not leftover:
                return edges
            rng.shuffle(leftover)
            still: list[int] = []
            it = iter(leftover)
            for u, v in zip(it, it):
                key = (min(u, v), max(u, v))
                if u == v or key in edges:
                    still.extend((u, v))
                else:
                    edges.add(key)
            leftover = still
        # Rare dead end (e.g. last two stubs on one vertex): resample wholesale.


@dataclass(frozen=True)
class SearchOutcome:
    """Oracle result: a verified colouring, or exhaustion evidence.

    ``colouring is None`` means no colouring was found; with
    ``limit_hit=False`` that certifies none exists for the given colour
    count.  ``node_count`` counts applied edge-colour assignments.
    """

    colouring: Optional[EdgeColouring]
    node_count: int
    limit_hit: bool

    @property
    def found(self) -> bool:
        return self.colouring is not None


def exhaustive_search(
    graph: Graph, k: int, colour_count: int, node_limit: int = 10**8
) -> SearchOutcome:
    """Backtracking search for a 1/k-majority colouring with ``colour_count`` colours.

    Edges are assigned in non-increasing order of min-endpoint degree (ties by
    index); per-vertex per-colour counters prune against the caps
    ``floor(d/k)``, and the first edge is fixed to colour 1 (colours are
    interchangeable).  If ``colour_count * floor(delta/k) < delta`` the
    minimum-degree vertex cannot cover its edges and the search is settled
    immediately with ``node_count = 0``.
    """
    if colour_count < 1:
        raise InputError(f"colour count must be positive, got {colour_count}")
    if k < 2:
        raise InputError(f"k must be at least 2, got {k}")
    m = graph.edge_count
    if m == 0:
        return SearchOutcome(EdgeColouring((), colour_count), 0, False)
    delta = graph.min_degree()
    caps = [graph.degree(v) // k for v in range(graph.vertex_count)]
    if colour_count * (delta // k) < delta:
        return SearchOutcome(None, 0, False)

    order = sorted(
        range(m), key=lambda e: (-min(graph.degree(graph.edges[e][0]),
                                      graph.degree(graph.edges[e][1])), e)
    )
    counts = [[0] * colour_count for _ in range(graph.vertex_count)]
    chosen = [0] * m  # colour currently applied at each position, 0 = none
    nodes = 0
    pos = 0
    while True:
        if pos == m:
            colours = [0] * m
            for p, e in enumerate(order):
                colours[e] = chosen[p]
            colouring = EdgeColouring(tuple(colours), colour_count)
            verdict = check_majority(graph, colouring, k)
            if not verdict.passed:
                raise InternalInvariantError(f"oracle produced invalid colouring: {verdict.witness}")
            return SearchOutcome(colouring, nodes, False)
        e = order[pos]
        u, v = graph.edges[e]
        limit = 1 if pos == 0 else colour_count
        advanced = False
        for colour in range(chosen[pos] + 1, limit + 1):
            if counts[u][colour - 1] < caps[u] and counts[v][colour - 1] < caps[v]:
                if nodes >= node_limit:
                    return SearchOutcome(None, nodes, True)
                nodes += 1
                counts[u][colour - 1] += 1
                counts[v][colour - 1] += 1
                chosen[pos] = colour
                pos += 1
                advanced = True
                break
        if advanced:
            continue
        chosen[pos] = 0
        pos -= 1
        if pos < 0:
            return SearchOutcome(None, nodes, False)
        e = order[pos]
        u, v = graph.edges[e]
        counts[u][chosen[pos] - 1] -= 1
        counts[v][chosen[pos] - 1] -= 1
