"""Alternating 4-cycles, 2-switches, modules and vertex-swap maps."""

from __future__ import annotations

from collections.abc import Iterable
from typing import NamedTuple

from .canon import are_isomorphic
from .graph import Graph, GraphError, _bits, is_isomorphism_map


class SwitchError(GraphError):
    """A 4-tuple that is not an alternating 4-cycle of the graph."""


class AlternatingFourCycle(NamedTuple):
    """``<a,b:c,d>``: ``ab`` and ``cd`` are edges, ``bc`` and ``ad`` are not.

    Instances compare by their orbit representative; build them with
    :meth:`of` to normalise.
    """

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def of(cls, a: int, b: int, c: int, d: int) -> AlternatingFourCycle:
        return cls(*min((a, b, c, d), (b, a, d, c), (c, d, a, b), (d, c, b, a)))

    def writings(self) -> tuple[tuple[int, int, int, int], ...]:
        a, b, c, d = self
        return ((a, b, c, d), (b, a, d, c), (c, d, a, b), (d, c, b, a))

    def reverse(self) -> AlternatingFourCycle:
        """The switch undoing this one, valid in the switched graph."""
        a, b, c, d = self
        return AlternatingFourCycle.of(a, d, c, b)

    def __str__(self):
        a, b, c, d = self
        return f"<{a},{b}:{c},{d}>"


def is_alternating(G: Graph, a: int, b: int, c: int, d: int) -> bool:
    if len({a, b, c, d}) != 4 or not all(0 <= v < G.n for v in (a, b, c, d)):
        return False
    rows = G.rows
    return bool(rows[a] >> b & 1 and rows[c] >> d & 1 and not rows[b] >> c & 1 and not rows[a] >> d & 1)


def _validate(G: Graph, s) -> AlternatingFourCycle:
    if not is_alternating(G, *s):
        raise SwitchError(f"<{s[0]},{s[1]}:{s[2]},{s[3]}> is not an alternating 4-cycle of the graph")
    return AlternatingFourCycle.of(*s)


def alternating_four_cycles(G: Graph) -> list[AlternatingFourCycle]:
    """Every alternating 4-cycle once, sorted by orbit representative."""
    rows = G.rows
    edges = G.edges()
    found = set()
    for i, (a, b) in enumerate(edges):
        for c, d in edges[i + 1 :]:
            if c == a or c == b or d == a or d == b:
                continue
            # two pairings of the disjoint edges ab, cd
            if not rows[b] >> c & 1 and not rows[a] >> d & 1:
                found.add(AlternatingFourCycle.of(a, b, c, d))
            if not rows[b] >> d & 1 and not rows[a] >> c & 1:
                found.add(AlternatingFourCycle.of(a, b, d, c))
    return sorted(found)


def two_switch(G: Graph, s) -> Graph:
    """Delete ``ab``, ``cd``; add ``bc``, ``ad``."""
    a, b, c, d = _validate(G, s)
    rows = list(G.rows)
    rows[a] ^= 1 << b | 1 << d
    rows[b] ^= 1 << a | 1 << c
    rows[c] ^= 1 << d | 1 << b
    rows[d] ^= 1 << c | 1 << a
    return Graph(G.n, rows, check=False)


def is_module(G: Graph, M: Iterable[int], exclude: Iterable[int] = ()) -> bool:
    """Whether ``M`` is a module of ``G - exclude``."""
    mask = 0
    for v in M:
        mask |= 1 << v
    skip = mask
    for v in exclude:
        skip |= 1 << v
    for v in _bits(G.vertex_mask & ~skip):
        t = G.rows[v] & mask
        if t and t != mask:
            return False
    return True


def module_hypothesis(G: Graph, s) -> bool:
    """``{a,c}`` is a module of ``G-{b,d}`` or ``{b,d}`` one of ``G-{a,c}``."""
    a, b, c, d = s
    return is_module(G, (a, c), (b, d)) or is_module(G, (b, d), (a, c))


def changes_isomorphism_class(G: Graph, s) -> bool:
    return not are_isomorphic(G, two_switch(G, s))


def transposition_map(n: int, *pairs: tuple[int, int]) -> list[int]:
    f = list(range(n))
    for u, v in pairs:
        f[u], f[v] = f[v], f[u]
    return f


def swap_map(G: Graph, s, kind: str) -> list[int]:
    """``phi_ac`` (swap a,c), ``phi_bd`` (swap b,d) or ``rho`` (both)."""
    a, b, c, d = s
    if kind == "phi_ac":
        return transposition_map(G.n, (a, c))
    if kind == "phi_bd":
        return transposition_map(G.n, (b, d))
    if kind == "rho":
        return transposition_map(G.n, (a, c), (b, d))
    raise ValueError(f"unknown swap kind {kind!r}")


def swap_map_is_isomorphism(G: Graph, s, kind: str) -> bool:
    """Whether the swap map carries ``G`` onto the switched graph."""
    if kind not in ("phi_ac", "phi_bd"):
        raise ValueError(f"unknown swap kind {kind!r}")
    H = two_switch(G, s)
    return is_isomorphism_map(G, H, swap_map(G, s, kind))


def rho_is_automorphism(G: Graph, s) -> bool:
    _validate(G, s)
    return is_isomorphism_map(G, G, swap_map(G, s, "rho"))


class TraceCensus(NamedTuple):
    A: int
    B: int
    C: int
    D: int

    def triangles_destroyed(self) -> int:
        return self.A + self.C + 2 * self.D

    def triangles_created(self) -> int:
        return self.B + self.C + 2 * self.D


def trace_census(G: Graph, s) -> TraceCensus:
    """Classify outside vertices by their neighbourhood trace on ``{p,q,r,s}``.

    ``s`` is read in the order given, as ``<p,q:r,s>``.
    """
    p, q, r, t = s
    _validate(G, s)
    quad = 1 << p | 1 << q | 1 << r | 1 << t
    edge_pairs = (1 << p | 1 << q, 1 << r | 1 << t)
    non_pairs = (1 << q | 1 << r, 1 << p | 1 << t)
    A = B = C = D = 0
    for v in _bits(G.vertex_mask & ~quad):
        tr = G.rows[v] & quad
        k = tr.bit_count()
        if k == 4:
            D += 1
        elif k == 3:
            C += 1
        elif tr in edge_pairs:
            A += 1
        elif tr in non_pairs:
            B += 1
    return TraceCensus(A, B, C, D)


def triangles_through(G: Graph, pairs: Iterable[tuple[int, int]]) -> int:
    """Number of triangles of ``G`` containing at least one of ``pairs`` as an edge."""
    tris = set()
    for u, v in pairs:
        if not G.has_edge(u, v):
            continue
        for w in _bits(G.rows[u] & G.rows[v]):
            tris.add(frozenset((u, v, w)))
    return len(tris)
