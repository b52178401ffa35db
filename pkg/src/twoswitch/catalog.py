"""Named small graphs and the 16-member forbidden family for hereditary unigraphs.

Names accepted by :func:`catalog`::

    P5, C4, K3, K(2,3) or K2,3, house, 4-pan, co-4-pan, U, R, Rbar, S, Sbar,
    F1..F16 (forbidden-family members in listed order), and expressions built
    with ``+`` (disjoint union, binds tighter), ``v`` (join), integer
    multiples and parentheses, e.g. ``2K2``, ``(K2+K1)v(K2+K1)``, ``2K1vP4``.
"""

from __future__ import annotations

import re

from .graph import (
    Graph,
    GraphError,
    complement,
    complete_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    join,
)


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycles need at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def complete_bipartite(m: int, n: int) -> Graph:
    return from_edge_list(m + n, [(i, m + j) for i in range(m) for j in range(n)])


def multiple(k: int, G: Graph) -> Graph:
    out = empty_graph(0)
    for _ in range(k):
        out = disjoint_union(out, G)
    return out


def four_pan() -> Graph:
    # 4-cycle 0-1-2-3 with pendant 4 on vertex 0
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4)])


def unigraph_u() -> Graph:
    """Triangle 0-1-2 and 4-cycle 0-3-4-5 sharing vertex 0; sequence (4,2,2,2,2,2)."""
    return from_edge_list(6, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 5), (5, 0)])


# Six-vertex graphs on roles p,q,r,s,t,u = 0..5 that realize the
# (c)-type configuration once r is tied to p and u: the version with
# t~u is named R, the version without it is the complement of S.
_RS_BASE = [(0, 1), (2, 3), (4, 0), (5, 1), (0, 2), (0, 5), (2, 5)]
R_HAS_TU = True


def graph_r() -> Graph:
    return from_edge_list(6, _RS_BASE + ([(4, 5)] if R_HAS_TU else []))


def graph_sbar() -> Graph:
    return from_edge_list(6, _RS_BASE + ([] if R_HAS_TU else [(4, 5)]))


FORBIDDEN_NAMES = (
    "P5",
    "house",
    "K2+K3",
    "K2,3",
    "4-pan",
    "co-4-pan",
    "2P3",
    "(K2+K1)v(K2+K1)",
    "K2+P4",
    "2K1vP4",
    "K2+C4",
    "2K1v2K2",
    "R",
    "Rbar",
    "S",
    "Sbar",
)

_NAMED = {
    "house": lambda: complement(path(5)),
    "4-pan": four_pan,
    "co-4-pan": lambda: complement(four_pan()),
    "U": unigraph_u,
    "R": graph_r,
    "Rbar": lambda: complement(graph_r()),
    "Sbar": graph_sbar,
    "S": lambda: complement(graph_sbar()),
}

_TOKEN = re.compile(
    r"\s*(?:(?P<name>co-4-pan|4-pan|house|Rbar|Sbar|F\d+|[URS])|(?P<num>\d+)"
    r"|(?P<kmn>K\(\d+,\d+\)|K\d+,\d+)|(?P<atom>[PCK]\d+)|(?P<op>[+v()]))"
)


def _tokenize(text: str) -> list[tuple[str, str]]:
    out = []
    pos = 0
    text = text.replace("∨", "v").replace("_", "").replace("{", "(").replace("}", ")")
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise GraphError(f"unknown graph name {text!r} (at position {pos})")
        kind = m.lastgroup
        out.append((kind, m.group(kind)))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.i = 0

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self):
        tok = self.peek()
        self.i += 1
        return tok

    def parse(self) -> Graph:
        g = self.join()
        if self.i != len(self.toks):
            raise GraphError(f"unexpected token {self.peek()[1]!r}")
        return g

    def join(self):
        g = self.union()
        while self.peek() == ("op", "v"):
            self.take()
            g = join(g, self.union())
        return g

    def union(self):
        g = self.term()
        while self.peek() == ("op", "+"):
            self.take()
            g = disjoint_union(g, self.term())
        return g

    def term(self):
        kind, val = self.peek()
        count = 1
        if kind == "num":
            self.take()
            count = int(val)
            kind, val = self.peek()
        self.take()
        if (kind, val) == ("op", "("):
            g = self.join()
            if self.take() != ("op", ")"):
                raise GraphError("unbalanced parentheses")
        elif kind == "kmn":
            m, n = map(int, re.findall(r"\d+", val))
            g = complete_bipartite(m, n)
        elif kind == "atom":
            k = int(val[1:])
            g = {"P": path, "C": cycle, "K": complete_graph}[val[0]](k)
        elif kind == "name":
            if val.startswith("F"):
                idx = int(val[1:])
                if not 1 <= idx <= len(FORBIDDEN_NAMES):
                    raise GraphError(f"forbidden-family index {idx} outside 1..16")
                g = catalog(FORBIDDEN_NAMES[idx - 1])
            else:
                g = _NAMED[val]()
        else:
            raise GraphError(f"unexpected token {val!r}")
        return multiple(count, g) if count != 1 else g


def catalog(name: str) -> Graph:
    """Look up a named graph or evaluate a small union/join expression."""
    return _Parser(_tokenize(name)).parse()


def forbidden_family() -> list[Graph]:
    """The 16 minimal forbidden induced subgraphs for hereditary unigraphs."""
    return [catalog(name) for name in FORBIDDEN_NAMES]
