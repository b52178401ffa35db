"""Canonical labelling by partition refinement plus backtracking.

The search individualizes vertices of the first non-singleton cell of an
equitable ordered partition, refines, and keeps the lexicographically
largest relabelled adjacency over all leaves. Two cheap prunings keep the
tree small at the sizes used here: twins inside a target cell are explored
once, and automorphisms discovered between equal leaves merge orbits of the
root cell.
"""

from __future__ import annotations

from .formats import to_graph6
from .graph import Graph, _bits

_CACHE: dict[tuple[int, tuple[int, ...]], tuple[tuple[int, ...], tuple[int, ...]]] = {}
_CACHE_LIMIT = 200_000


def _refine(rows, cells):
    n = len(rows)
    while len(cells) < n:
        masks = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            masks.append(m)
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            keyed = sorted((tuple((rows[v] & m).bit_count() for m in masks), v) for v in c)
            group = [keyed[0][1]]
            for (k0, _), (k1, v) in zip(keyed, keyed[1:]):
                if k1 != k0:
                    new.append(group)
                    group = []
                group.append(v)
            new.append(group)
        if len(new) == len(cells):
            break
        cells = new
    return cells


def _leaf(rows, order):
    pos = [0] * len(order)
    for i, v in enumerate(order):
        pos[v] = i
    code = []
    for v in order:
        r = 0
        for w in _bits(rows[v]):
            r |= 1 << pos[w]
        code.append(r)
    return tuple(code)


def _search(rows):
    n = len(rows)
    best_code = None
    best_order = None
    # union-find over vertices, fed by automorphisms found at leaves
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def visit(cells, depth):
        nonlocal best_code, best_order
        if len(cells) == n:
            order = [c[0] for c in cells]
            code = _leaf(rows, order)
            if best_code is None or code > best_code:
                best_code, best_order = code, order
            elif code == best_code:
                for a, b in zip(order, best_order):
                    ra, rb = find(a), find(b)
                    if ra != rb:
                        parent[max(ra, rb)] = min(ra, rb)
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        tried = []
        for v in target:
            bv = 1 << v
            skip = False
            for u in tried:
                excl = ~(bv | 1 << u)
                if (rows[u] ^ rows[v]) & excl == 0:
                    skip = True
                    break
                if depth == 0 and find(u) == find(v):
                    skip = True
                    break
            if skip:
                continue
            tried.append(v)
            rest = [w for w in target if w != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1 :]
            visit(_refine(rows, child), depth + 1)

    visit(_refine(rows, [list(range(n))]), 0)
    return best_code, tuple(best_order)


def canonical_labeling(G: Graph) -> tuple[int, ...]:
    """Vertex order ``order`` such that ``order[i]`` becomes canonical vertex ``i``."""
    return _canon(G)[1]


def _canon(G: Graph):
    key = (G.n, G.rows)
    hit = _CACHE.get(key)
    if hit is not None:
        return hit
    if G.n == 0:
        res = ((), ())
    else:
        res = _search(G.rows)
    if len(_CACHE) >= _CACHE_LIMIT:
        _CACHE.clear()
    _CACHE[key] = res
    return res


def canonical_graph(G: Graph) -> Graph:
    return Graph(G.n, _canon(G)[0], check=False)


def canonical_form(G: Graph) -> bytes:
    """Byte string equal for two graphs exactly when they are isomorphic."""
    return to_graph6(canonical_graph(G)).encode("ascii")


def are_isomorphic(G: Graph, H: Graph) -> bool:
    if G.n != H.n or G.num_edges() != H.num_edges():
        return False
    if sorted(G.degrees()) != sorted(H.degrees()):
        return False
    return _canon(G)[0] == _canon(H)[0]


def find_isomorphism(G: Graph, H: Graph) -> list[int] | None:
    """A map ``f`` with ``f[v]`` in ``H`` for ``v`` in ``G``, or ``None``."""
    if not are_isomorphic(G, H):
        return None
    og = _canon(G)[1]
    oh = _canon(H)[1]
    f = [0] * G.n
    for v, w in zip(og, oh):
        f[v] = w
    return f
