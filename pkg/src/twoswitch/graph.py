"""Small simple graphs stored as per-vertex bit rows.

A :class:`Graph` on ``n`` vertices keeps one integer per vertex whose bit
``j`` is set when the vertex is adjacent to ``j``. Everything here is an
immutable value; operations return new graphs.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence

MAX_VERTICES = 32


class GraphError(ValueError):
    """Invalid graph construction or vertex reference."""


class CapacityError(GraphError):
    """Requested size exceeds what an operation supports."""


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int] | None = None, *, check: bool = True):
        if rows is None:
            rows = (0,) * n
        rows = tuple(rows)
        if check:
            if not 0 <= n <= MAX_VERTICES:
                raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
            if len(rows) != n:
                raise GraphError(f"expected {n} rows, got {len(rows)}")
            full = (1 << n) - 1
            for v, r in enumerate(rows):
                if r & ~full:
                    raise GraphError(f"row {v} references a vertex >= {n}")
                if r >> v & 1:
                    raise GraphError(f"loop at vertex {v}")
                for w in _bits(r):
                    if not rows[w] >> v & 1:
                        raise GraphError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.n, self.rows))
            object.__setattr__(self, "_hash", h)
        return h

    def __repr__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"

    def __reduce__(self):
        return (_restore, (self.n, self.rows))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.rows[v]))

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def edges(self) -> list[tuple[int, int]]:
        return [(u, w) for u, r in enumerate(self.rows) for w in _bits(r >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1


def _restore(n, rows):
    return Graph(n, rows, check=False)


def _check_vertex(G: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < G.n):
        raise GraphError(f"vertex {v!r} out of range for graph on {G.n} vertices")


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from vertex pairs; duplicate pairs collapse."""
    if not 0 <= n <= MAX_VERTICES:
        raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for {n} vertices")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows, check=False)


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def complement(G: Graph) -> Graph:
    full = G.vertex_mask
    return Graph(G.n, [full ^ r ^ (1 << v) for v, r in enumerate(G.rows)], check=False)


def induced_subgraph(G: Graph, S: Iterable[int]) -> Graph:
    """Subgraph induced on ``S``, relabelled ``0..|S|-1`` in increasing order."""
    verts = sorted(set(S))
    for v in verts:
        _check_vertex(G, v)
    pos = {v: i for i, v in enumerate(verts)}
    mask = 0
    for v in verts:
        mask |= 1 << v
    rows = []
    for v in verts:
        r = 0
        for w in _bits(G.rows[v] & mask):
            r |= 1 << pos[w]
        rows.append(r)
    return Graph(len(verts), rows, check=False)


def delete_vertices(G: Graph, X: Iterable[int]) -> Graph:
    """``G - X``, relabelled like :func:`induced_subgraph`."""
    X = set(X)
    return induced_subgraph(G, [v for v in range(G.n) if v not in X])


def disjoint_union(G: Graph, H: Graph) -> Graph:
    n = G.n + H.n
    if n > MAX_VERTICES:
        raise CapacityError(f"union has {n} vertices, limit is {MAX_VERTICES}")
    return Graph(n, list(G.rows) + [r << G.n for r in H.rows], check=False)


def join(G: Graph, H: Graph) -> Graph:
    n = G.n + H.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} vertices, limit is {MAX_VERTICES}")
    gmask = G.vertex_mask
    hmask = H.vertex_mask << G.n
    rows = [r | hmask for r in G.rows] + [(r << G.n) | gmask for r in H.rows]
    return Graph(n, rows, check=False)


def relabel(G: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    if sorted(perm) != list(range(G.n)):
        raise GraphError("relabelling is not a permutation of the vertices")
    rows = [0] * G.n
    for v, r in enumerate(G.rows):
        img = 0
        for w in _bits(r):
            img |= 1 << perm[w]
        rows[perm[v]] = img
    return Graph(G.n, rows, check=False)


def degree_sequence(G: Graph) -> tuple[int, ...]:
    return tuple(sorted((r.bit_count() for r in G.rows), reverse=True))


def neighborhood_list(G: Graph, a: int) -> tuple[int, ...]:
    """Sorted multiset of the degrees of ``a``'s neighbours."""
    _check_vertex(G, a)
    return tuple(sorted(G.rows[w].bit_count() for w in _bits(G.rows[a])))


def neighborhood_profile(G: Graph) -> tuple[tuple[int, ...], ...]:
    """The multiset of all vertices' neighbourhood lists; an isomorphism invariant."""
    return tuple(sorted(neighborhood_list(G, v) for v in range(G.n)))


def is_isomorphism_map(G: Graph, H: Graph, f: Sequence[int]) -> bool:
    """True when ``u ~ v`` in ``G`` exactly when ``f[u] ~ f[v]`` in ``H``."""
    if G.n != H.n:
        raise GraphError("graphs have different vertex counts")
    if len(f) != G.n or sorted(f) != list(range(G.n)):
        raise GraphError("map is not a bijection on the vertex set")
    for u in range(G.n):
        img = 0
        for w in _bits(G.rows[u]):
            img |= 1 << f[w]
        if img != H.rows[f[u]]:
            return False
    return True


def is_automorphism(G: Graph, f: Sequence[int]) -> bool:
    return is_isomorphism_map(G, G, f)
