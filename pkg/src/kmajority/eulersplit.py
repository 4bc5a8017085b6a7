"""Balanced two-colourings of edges via Euler circuits.

Per connected component, each colour lands on at most ``ceil(d(u)/2)`` of the
edges at every vertex ``u``.  A component whose degrees are all even but whose
edge count is odd cannot avoid one lopsided vertex: its designated "bad
vertex" ends with ``d/2 + 1`` red and ``d/2 - 1`` blue edges, and every other
vertex splits exactly evenly.

The construction joins one auxiliary vertex to all odd-degree vertices of a
component, walks an Euler circuit from it (or from the bad vertex), and
colours the traversal alternately; the auxiliary edges only consume parity
slots and are discarded.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .errors import SelectorExhaustedError
from .graph import Graph, components, hierholzer_circuit

BLUE = 0
RED = 1

#: Given a component's sorted vertex tuple, return the chosen bad vertex or
#: ``None`` when no listed vertex is admissible.
BadSelector = Callable[[tuple[int, ...]], Optional[int]]


@dataclass(frozen=True)
class Bicolouring:
    """Edge sides (0 = blue, 1 = red) and the designated bad vertices."""

    side: tuple[int, ...]
    bad_vertices: tuple[int, ...]


def balanced_bicolouring(graph: Graph, bad_selector: Optional[BadSelector] = None) -> Bicolouring:
    """Split every component's edges into blue and red, balanced per vertex.

    ``bad_selector`` is consulted only for components that force a bad vertex
    (all degrees even, odd edge count); returning ``None`` raises
    :class:`SelectorExhaustedError`, which callers treat as a breach of their
    theorem's hypotheses.  Without a selector the least vertex is designated.
    The bad vertex always receives its surplus edge in red.
    """
    side: list[int] = [-1] * graph.edge_count
    bad: list[int] = []
    aux = graph.vertex_count
    for comp in components(graph):
        comp_edges = sorted({e for v in comp for _, e in graph.adjacency[v]})
        if not comp_edges:
            continue
        odd = [v for v in comp if graph.degree(v) % 2 == 1]
        adjacency: list[list[tuple[int, int]]] = [[] for _ in range(aux + 1)]
        for v in comp:
            adjacency[v] = list(graph.adjacency[v])
        edge_total = graph.edge_count
        if odd:
            for j, v in enumerate(odd):
                e = edge_total + j
                adjacency[aux].append((v, e))
                adjacency[v].append((aux, e))
            edge_total += len(odd)
            start = aux
        elif len(comp_edges) % 2 == 1:
            if bad_selector is None:
                u = comp[0]
            else:
                u = bad_selector(tuple(comp))
                if u is None:
                    raise SelectorExhaustedError(
                        f"no admissible bad vertex in component starting at {comp[0]}"
                    )
            bad.append(u)
            start = u
        else:
            start = comp[0]
        circuit = hierholzer_circuit(adjacency, start, edge_total)
        for pos, e in enumerate(circuit):
            if e < graph.edge_count:
                side[e] = RED if pos % 2 == 0 else BLUE
    return Bicolouring(tuple(side), tuple(sorted(bad)))


def side_counts(graph: Graph, bicolouring: Bicolouring) -> list[list[int]]:
    """Per-vertex [blue, red] incidence counts."""
    counts = [[0, 0] for _ in range(graph.vertex_count)]
    for e, s in enumerate(bicolouring.side):
        u, v = graph.edges[e]
        counts[u][s] += 1
        counts[v][s] += 1
    return counts


def assert_balanced(graph: Graph, bicolouring: Bicolouring) -> None:
    """Check the split invariants; used by callers after recolouring passes."""
    from .errors import InternalInvariantError

    counts = side_counts(graph, bicolouring)
    bad = set(bicolouring.bad_vertices)
    for v in range(graph.vertex_count):
        d = graph.degree(v)
        blue, red = counts[v]
        if blue + red != d:
            raise InternalInvariantError(f"vertex {v}: {blue}+{red} != degree {d}")
        if v in bad:
            if d % 2 or red != d // 2 + 1:
                raise InternalInvariantError(
                    f"bad vertex {v}: degree {d}, red {red} (expected {d // 2 + 1})"
                )
        elif max(blue, red) > (d + 1) // 2:
            raise InternalInvariantError(
                f"vertex {v}: colour count {max(blue, red)} exceeds ceil({d}/2)"
            )
