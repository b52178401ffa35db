"""Degree sequences: graphicality, realizations, all small graphs, transition graphs."""

from __future__ import annotations

import itertools
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_form, canonical_graph
from .formats import to_graph6
from .graph import CapacityError, Graph, GraphError, degree_sequence, relabel
from .switches import alternating_four_cycles, two_switch

MAX_REALIZATION_LENGTH = 9
MAX_ENUMERATION_N = 8


class NotGraphicalError(GraphError):
    pass


def is_graphical(d: Sequence[int]) -> bool:
    """Erdős–Gallai test."""
    d = sorted(d, reverse=True)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    n = len(d)
    total = 0
    for k in range(1, n + 1):
        total += d[k - 1]
        tail = sum(min(x, k) for x in d[k:])
        if total > k * (k - 1) + tail:
            return False
    return True


def _sorted_sequence(d: Sequence[int]) -> tuple[int, ...]:
    return tuple(sorted((int(x) for x in d), reverse=True))


def construct_realization(d: Sequence[int]) -> Graph:
    """Havel–Hakimi: vertex ``i`` of the result has degree ``sorted(d)[i]``."""
    d = _sorted_sequence(d)
    if not is_graphical(d):
        raise NotGraphicalError(f"{d} is not graphical")
    n = len(d)
    if n > 32:
        raise CapacityError("sequence longer than 32")
    res = list(d)
    rows = [0] * n
    while n:
        order = sorted(range(n), key=lambda v: (-res[v], v))
        v = order[0]
        if res[v] == 0:
            break
        k = res[v]
        res[v] = 0
        for w in order[1 : k + 1]:
            rows[v] |= 1 << w
            rows[w] |= 1 << v
            res[w] -= 1
    return Graph(n, rows, check=False)


def _labeled_realizations(d: tuple[int, ...]):
    """Labelled realizations of ``d`` with vertex ``i`` of degree ``d[i]``, up to
    interchanging not-yet-processed vertices that are indistinguishable so far."""
    n = len(d)
    rows = [0] * n
    res = list(d)

    def rec(i):
        if i == n:
            yield tuple(rows)
            return
        need = res[i]
        # later vertices with equal residual and equal adjacency to processed
        # vertices are interchangeable: only how many of each class is chosen matters
        classes: dict[tuple[int, int], list[int]] = {}
        for j in range(i + 1, n):
            if res[j] > 0:
                classes.setdefault((res[j], rows[j]), []).append(j)
        groups = list(classes.values())

        def choose(gi, remaining, chosen):
            if remaining == 0:
                yield chosen
                return
            if gi == len(groups):
                return
            cap = sum(len(g) for g in groups[gi:])
            if cap < remaining:
                return
            g = groups[gi]
            for m in range(min(len(g), remaining), -1, -1):
                yield from choose(gi + 1, remaining - m, chosen + g[:m])

        for nbrs in choose(0, need, []):
            for j in nbrs:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
                res[j] -= 1
            res[i] = 0
            if is_graphical(res[i + 1 :]):
                yield from rec(i + 1)
            res[i] = need
            for j in nbrs:
                rows[i] &= ~(1 << j)
                rows[j] &= ~(1 << i)
                res[j] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _realizations_cached(d: tuple[int, ...]) -> tuple[Graph, ...]:
    n = len(d)
    seen = {}
    for rows in _labeled_realizations(d):
        G = Graph(n, rows, check=False)
        code = canonical_form(G)
        if code not in seen:
            seen[code] = canonical_graph(G)
    return tuple(seen[c] for c in sorted(seen))


def enumerate_realizations(d: Sequence[int]) -> list[Graph]:
    """One canonical graph per isomorphism class realizing ``d``, sorted by code."""
    d = _sorted_sequence(d)
    if len(d) > MAX_REALIZATION_LENGTH:
        raise CapacityError(f"realization enumeration limited to length {MAX_REALIZATION_LENGTH}")
    if not is_graphical(d):
        return []
    return list(_realizations_cached(d))


def count_realizations(d: Sequence[int]) -> int:
    return len(enumerate_realizations(d))


def graphical_sequences(n: int) -> list[tuple[int, ...]]:
    """All graphical non-increasing sequences of length ``n``, lexicographically."""
    out = []
    top = max(n - 1, 0)
    for d in itertools.combinations_with_replacement(range(top, -1, -1), n):
        if is_graphical(d):
            out.append(d)
    return sorted(out)


def _by_realizations(n):
    out = []
    for d in graphical_sequences(n):
        out.extend(enumerate_realizations(d))
    return out


def _by_extension(n):
    if n == 0:
        return [Graph(0)]
    found = {}
    for G in enumerate_graphs(n - 1, method="extend"):
        for nb in range(1 << (n - 1)):
            rows = [r | ((nb >> v & 1) << (n - 1)) for v, r in enumerate(G.rows)] + [nb]
            H = Graph(n, rows, check=False)
            code = canonical_form(H)
            if code not in found:
                found[code] = canonical_graph(H)
    return list(found.values())


def _by_labeled(n):
    pairs = list(itertools.combinations(range(n), 2))
    found = {}
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b, (u, v) in enumerate(pairs):
            if mask >> b & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        H = Graph(n, rows, check=False)
        code = canonical_form(H)
        if code not in found:
            found[code] = canonical_graph(H)
    return list(found.values())


@lru_cache(maxsize=None)
def _graphs_cached(n, method):
    build = {"realizations": _by_realizations, "extend": _by_extension, "labeled": _by_labeled}[method]
    gs = build(n)
    return tuple(sorted(gs, key=canonical_form))


def enumerate_graphs(n: int, method: str = "realizations") -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    ``method`` is ``"realizations"`` (union over graphical sequences),
    ``"extend"`` (add a vertex to every graph on ``n-1`` vertices) or
    ``"labeled"`` (canonicalize all ``2**C(n,2)`` labelled graphs; n <= 7).
    """
    if n < 0 or n > MAX_ENUMERATION_N:
        raise CapacityError(f"graph enumeration limited to 0 <= n <= {MAX_ENUMERATION_N}")
    if method == "labeled" and n > 7:
        raise CapacityError("labelled enumeration limited to n <= 7")
    if method not in ("realizations", "extend", "labeled"):
        raise ValueError(f"unknown enumeration method {method!r}")
    return list(_graphs_cached(n, method))


@dataclass(frozen=True)
class TransitionGraph:
    sequence: tuple[int, ...]
    nodes: tuple[bytes, ...]
    edges: tuple[tuple[int, int], ...]
    representatives: tuple[Graph, ...]

    def to_json(self) -> dict:
        return {
            "sequence": list(self.sequence),
            "nodes": [to_graph6(g) for g in self.representatives],
            "edges": [list(e) for e in self.edges],
        }

    def to_dot(self) -> str:
        lines = [f'graph "{",".join(map(str, self.sequence))}" {{']
        for i, g in enumerate(self.representatives):
            label = to_graph6(g).replace("\\", "\\\\").replace('"', '\\"')
            lines.append(f'  {i} [label="{label}"];')
        for i, j in self.edges:
            lines.append(f"  {i} -- {j};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def _switch_targets(G: Graph, index: dict[bytes, int]) -> set[int]:
    out = set()
    for s in alternating_four_cycles(G):
        out.add(index[canonical_form(two_switch(G, s))])
    return out


def transition_graph(d: Sequence[int], *, check_representatives: bool = True) -> TransitionGraph:
    """Isomorphism classes of realizations joined when one 2-switch connects them."""
    d = _sorted_sequence(d)
    if not is_graphical(d):
        raise NotGraphicalError(f"{d} is not graphical")
    reps = enumerate_realizations(d)
    codes = [canonical_form(g) for g in reps]
    index = {c: i for i, c in enumerate(codes)}
    edges = set()
    for i, g in enumerate(reps):
        targets = _switch_targets(g, index)
        if check_representatives and len(reps) <= 20 and g.n > 1:
            alt = relabel(g, list(range(g.n - 1, -1, -1)))
            if _switch_targets(alt, index) != targets:
                raise AssertionError(f"transition edges depend on the representative of class {i} of {d}")
        for j in targets:
            if j != i:
                edges.add((min(i, j), max(i, j)))
    return TransitionGraph(d, tuple(codes), tuple(sorted(edges)), tuple(reps))


def components(num_nodes: int, edges) -> list[list[int]]:
    parent = list(range(num_nodes))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in edges:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)
    groups: dict[int, list[int]] = {}
    for v in range(num_nodes):
        groups.setdefault(find(v), []).append(v)
    return sorted(groups.values())


def is_connected(t: TransitionGraph) -> bool:
    return len(components(len(t.nodes), t.edges)) <= 1


def realizations_by_sequence(graphs) -> dict[tuple[int, ...], list[Graph]]:
    out: dict[tuple[int, ...], list[Graph]] = {}
    for g in graphs:
        out.setdefault(degree_sequence(g), []).append(g)
    return out
