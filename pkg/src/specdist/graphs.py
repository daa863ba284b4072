"""Graph families P_n, C_n, Z_n, W_n and the coalescence operation.

Vertex labeling convention: spine (path) vertices come first as 0..m-1 in
path order, pendant vertices are appended after them.  This keeps adjacency
matrices bit-reproducible across runs.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import OrderTooSmallError


class Family(str, Enum):
    PATH = "p"
    CYCLE = "c"
    Z_TREE = "z"
    W_TREE = "w"


MIN_ORDER = {
    Family.PATH: 1,
    Family.CYCLE: 3,
    Family.Z_TREE: 4,
    Family.W_TREE: 6,
}

_FAMILY_LABEL = {
    Family.PATH: "P",
    Family.CYCLE: "C",
    Family.Z_TREE: "Z",
    Family.W_TREE: "W",
}


@dataclass(frozen=True)
class FamilySpec:
    """A graph family together with its order."""

    family: Family
    n: int

    def __post_init__(self):
        family = Family(self.family)
        object.__setattr__(self, "family", family)
        minimum = MIN_ORDER[family]
        if self.n < minimum:
            raise OrderTooSmallError(
                f"{_FAMILY_LABEL[family]} requires n >= {minimum}"
            )


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: vertex count plus a set of (i, j) pairs, i < j."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={self.n}")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)


def build_path(n: int) -> Graph:
    """Path P_n on vertices 0..n-1 in order."""
    if n < 1:
        raise OrderTooSmallError("P requires n >= 1")
    return Graph(n, frozenset((i, i + 1) for i in range(n - 1)))


def build_cycle(n: int) -> Graph:
    """Cycle C_n: the path edges plus the closing edge {n-1, 0}."""
    if n < 3:
        raise OrderTooSmallError("C requires n >= 3")
    edges = set((i, i + 1) for i in range(n - 1))
    edges.add((0, n - 1))
    return Graph(n, frozenset(edges))


def coalesce(g: Graph, u: int, h: Graph, v: int) -> Graph:
    """Identify vertex u of g with vertex v of h.

    Vertices of g keep their labels; the remaining vertices of h are
    relabeled g.n, g.n+1, ... in increasing original order.
    """
    if not 0 <= u < g.n:
        raise IndexError(f"vertex {u} out of range for graph on {g.n} vertices")
    if not 0 <= v < h.n:
        raise IndexError(f"vertex {v} out of range for graph on {h.n} vertices")
    relabel = {}
    nxt = g.n
    for w in range(h.n):
        if w == v:
            relabel[w] = u
        else:
            relabel[w] = nxt
            nxt += 1
    edges = set(g.edges)
    edges.update((relabel[a], relabel[b]) for a, b in h.edges)
    return Graph(g.n + h.n - 1, frozenset(edges))


def build_z(n: int) -> Graph:
    """Snake Z_n: path on n-2 vertices with two pendants on its last vertex.

    Vertices 0..n-3 form the spine; pendants n-2 and n-1 attach to n-3.
    """
    if n < 4:
        raise OrderTooSmallError("Z requires n >= 4")
    edges = set((i, i + 1) for i in range(n - 3))
    edges.add((n - 3, n - 2))
    edges.add((n - 3, n - 1))
    return Graph(n, frozenset(edges))


def build_z_coalesced(n: int) -> Graph:
    """Z_n as the coalescence of an end of P_{n-2} with the center of P_3."""
    if n < 4:
        raise OrderTooSmallError("Z requires n >= 4")
    return coalesce(build_path(n - 2), n - 3, build_path(3), 1)


def build_w(n: int) -> Graph:
    """Double snake W_n: path on n-4 vertices with two pendants on each end.

    Vertices 0..n-5 form the spine; pendants n-4, n-3 attach to vertex 0 and
    pendants n-2, n-1 attach to vertex n-5.  Built structurally because the
    coalescence route degenerates at n=6.
    """
    if n < 6:
        raise OrderTooSmallError("W requires n >= 6")
    edges = set((i, i + 1) for i in range(n - 5))
    edges.add((0, n - 4))
    edges.add((0, n - 3))
    edges.add((n - 5, n - 2))
    edges.add((n - 5, n - 1))
    return Graph(n, frozenset(edges))


def build_w_coalesced(n: int) -> Graph:
    """W_n as the coalescence of Z_{n-2} and P_3, valid only for n >= 7.

    The identified vertex of Z_{n-2} is its degree-1 spine end (vertex 0),
    the only degree-1 vertex adjacent to a degree-2 vertex.  At n=6 that
    vertex does not exist (Z_4 is a star), hence the stricter minimum.
    """
    if n < 7:
        raise OrderTooSmallError("coalescence form of W requires n >= 7")
    return coalesce(build_z(n - 2), 0, build_path(3), 1)


def build_family(spec: FamilySpec) -> Graph:
    builders = {
        Family.PATH: build_path,
        Family.CYCLE: build_cycle,
        Family.Z_TREE: build_z,
        Family.W_TREE: build_w,
    }
    return builders[spec.family](spec.n)


def adjacency_matrix(g: Graph) -> np.ndarray:
    """Dense 0/1 adjacency matrix with zero diagonal."""
    m = np.zeros((g.n, g.n))
    for u, v in g.edges:
        m[u, v] = 1.0
        m[v, u] = 1.0
    return m


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees, sorted descending."""
    degs = [0] * g.n
    for u, v in g.edges:
        degs[u] += 1
        degs[v] += 1
    return sorted(degs, reverse=True)


def _adjacency_lists(g: Graph) -> list[list[int]]:
    adj = [[] for _ in range(g.n)]
    for u, v in g.edges:
        adj[u].append(v)
        adj[v].append(u)
    return adj


def is_connected(g: Graph) -> bool:
    adj = _adjacency_lists(g)
    seen = {0}
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return len(seen) == g.n


def is_bipartite(g: Graph) -> bool:
    """BFS 2-coloring over every component."""
    adj = _adjacency_lists(g)
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def to_edge_list_text(g: Graph) -> str:
    """Edge-list format: header "n <vertex count>", then one "i j" per line."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(g.edges))
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines or not lines[0].startswith("n "):
        raise ValueError('edge list must start with a header line "n <count>"')
    n = int(lines[0].split()[1])
    edges = set()
    for ln in lines[1:]:
        u, v = (int(tok) for tok in ln.split())
        edges.add((u, v))
    return Graph(n, frozenset(edges))
