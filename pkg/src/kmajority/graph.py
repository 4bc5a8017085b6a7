"""Simple-graph core: construction, components, bipartiteness, Euler circuits.

Graphs are immutable values with dense integer vertex and edge indices.
Every traversal below iterates vertices in increasing index order and
incident edges in increasing edge-index order, so all derived structures
(components, witnesses, circuits) are reproducible byte for byte.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import BuildError, InputError, PreconditionError

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``adjacency[v]`` holds ``(neighbour, edge_index)`` pairs in increasing
    edge-index order.  Instances are safe to share between concurrent tasks;
    all operations in this package treat them as read-only.
    """

    vertex_count: int
    edges: tuple[Edge, ...]
    adjacency: tuple[tuple[tuple[int, int], ...], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adjacency)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)


def build_graph(vertex_count: int, edge_pairs: Iterable[Edge]) -> Graph:
    """Validate ``edge_pairs`` and assemble a :class:`Graph`.

    Raises :class:`BuildError` naming the offending pair on a self-loop,
    a duplicate edge, or a vertex index out of range.
    """
    if vertex_count < 0:
        raise BuildError(f"vertex count must be nonnegative, got {vertex_count}")
    edges: list[Edge] = []
    seen: set[Edge] = set()
    adjacency: list[list[tuple[int, int]]] = [[] for _ in range(vertex_count)]
    for u, v in edge_pairs:
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise BuildError(f"edge ({u}, {v}) has a vertex index outside 0..{vertex_count - 1}")
        if u == v:
            raise BuildError(f"self-loop ({u}, {v}) is not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise BuildError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        e = len(edges)
        edges.append((u, v))
        adjacency[u].append((v, e))
        adjacency[v].append((u, e))
    return Graph(vertex_count, tuple(edges), tuple(tuple(a) for a in adjacency))


def components(graph: Graph) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted vertex tuples, ordered by least vertex."""
    seen = [False] * graph.vertex_count
    out: list[tuple[int, ...]] = []
    for root in range(graph.vertex_count):
        if seen[root]:
            continue
        seen[root] = True
        block = [root]
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u, _ in graph.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    block.append(u)
                    queue.append(u)
        out.append(tuple(sorted(block)))
    return tuple(out)


@dataclass(frozen=True)
class BipartiteCheck:
    """Either a proper 2-side labelling or an odd-cycle witness.

    ``sides[v]`` is 0/1 when the graph is bipartite, else ``odd_cycle`` holds
    an odd closed edge sequence (consecutive edges share a vertex).
    """

    sides: Optional[tuple[int, ...]]
    odd_cycle: Optional[tuple[int, ...]]

    @property
    def bipartite(self) -> bool:
        return self.sides is not None


def is_bipartite(graph: Graph) -> BipartiteCheck:
    """BFS 2-colouring; on failure returns an odd cycle through the conflict edge."""
    side = [-1] * graph.vertex_count
    parent_edge: list[int] = [-1] * graph.vertex_count
    parent: list[int] = [-1] * graph.vertex_count
    depth = [0] * graph.vertex_count
    for root in range(graph.vertex_count):
        if side[root] >= 0:
            continue
        side[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for u, e in graph.adjacency[v]:
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    parent[u] = v
                    parent_edge[u] = e
                    depth[u] = depth[v] + 1
                    queue.append(u)
                elif side[u] == side[v] and e != parent_edge[v]:
                    return BipartiteCheck(None, _odd_cycle(v, u, e, parent, parent_edge, depth))
    return BipartiteCheck(tuple(side), None)


def _odd_cycle(v: int, u: int, conflict_edge: int, parent, parent_edge, depth) -> tuple[int, ...]:
    # Walk both endpoints up to their lowest common ancestor in the BFS forest.
    left, right = [], []
    a, b = v, u
    while depth[a] > depth[b]:
        left.append(parent_edge[a])
        a = parent[a]
    while depth[b] > depth[a]:
        right.append(parent_edge[b])
        b = parent[b]
    while a != b:
        left.append(parent_edge[a])
        right.append(parent_edge[b])
        a, b = parent[a], parent[b]
    # Edge sequence v..lca, lca..u, then the closing conflict edge.
    return tuple(left + right[::-1] + [conflict_edge])


def hierholzer_circuit(
    adjacency: Sequence[Sequence[tuple[int, int]]], start: int, edge_count: int
) -> list[int]:
    """Eulerian circuit over a prebuilt adjacency structure.

    Returns the edge ids in traversal order starting (and ending) at ``start``,
    always taking the unused incident edge with the least id.  The caller
    guarantees the even-degree and connectivity preconditions.
    """
    pointer = [0] * len(adjacency)
    used = [False] * edge_count
    vertex_stack = [start]
    edge_stack: list[int] = []
    out: list[int] = []
    while vertex_stack:
        v = vertex_stack[-1]
        adj = adjacency[v]
        i = pointer[v]
        while i < len(adj) and used[adj[i][1]]:
            i += 1
        pointer[v] = i
        if i == len(adj):
            vertex_stack.pop()
            if edge_stack:
                out.append(edge_stack.pop())
        else:
            u, e = adj[i]
            used[e] = True
            vertex_stack.append(u)
            edge_stack.append(e)
    out.reverse()
    return out


def eulerian_circuit(graph: Graph, start: Optional[int] = None) -> tuple[int, ...]:
    """Closed trail through every edge exactly once, as an edge-index sequence.

    Requires at least one edge, all degrees even, and all edges in one
    component; otherwise raises :class:`PreconditionError`.
    """
    if graph.edge_count == 0:
        raise PreconditionError("eulerian circuit needs at least one edge")
    odd = [v for v in range(graph.vertex_count) if graph.degree(v) % 2]
    if odd:
        raise PreconditionError(f"odd-degree vertices present: {odd[:4]}")
    active = [v for v in range(graph.vertex_count) if graph.degree(v) > 0]
    comp_of_first = next(c for c in components(graph) if active[0] in c)
    if any(v not in comp_of_first for v in active):
        raise PreconditionError("graph edges are not connected")
    if start is None:
        start = active[0]
    elif graph.degree(start) == 0:
        raise InputError(f"start vertex {start} has no incident edges")
    circuit = hierholzer_circuit(graph.adjacency, start, graph.edge_count)
    assert len(circuit) == graph.edge_count
    return tuple(circuit)


def edge_subgraph(graph: Graph, edge_indices: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on the same vertex set keeping ``edge_indices``.

    Returns the subgraph and the map new edge index -> original edge index
    (edges kept in increasing original order).
    """
    kept = sorted(set(edge_indices))
    sub = build_graph(graph.vertex_count, [graph.edges[e] for e in kept])
    return sub, tuple(kept)


def circuit_vertices(graph: Graph, circuit: Sequence[int]) -> list[int]:
    """Vertex sequence visited by an edge circuit (first vertex repeated last)."""
    if not circuit:
        return []
    if len(circuit) == 1:
        raise InputError("a closed trail in a simple graph has at least 3 edges")
    a = set(graph.edges[circuit[0]])
    b = set(graph.edges[circuit[1]])
    shared = a & b
    first = (a - shared).pop() if a - shared else shared.pop()
    order = [first]
    for e in circuit:
        u, v = graph.edges[e]
        order.append(v if order[-1] == u else u)
    return order
