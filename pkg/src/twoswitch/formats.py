"""graph6 and plain edge-list text formats."""

from __future__ import annotations

from .graph import MAX_VERTICES, CapacityError, Graph, GraphError, from_edge_list

HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    """Malformed graph6 input; ``position`` is the offending character index."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def to_graph6(G: Graph) -> str:
    n = G.n
    if n > 62:
        raise CapacityError("graph6 short header only covers n <= 62")
    bits = []
    rows = G.rows
    for j in range(1, n):
        rj = rows[j]
        for i in range(j):
            bits.append(rj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        b = bits[k : k + 6]
        out.append(chr(63 + (b[0] << 5 | b[1] << 4 | b[2] << 3 | b[3] << 2 | b[4] << 1 | b[5])))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    s = text.strip()
    offset = len(text) - len(text.lstrip())
    if s.startswith(HEADER):
        offset += len(HEADER)
        s = s[len(HEADER) :]
    if not s:
        raise Graph6Error("empty graph6 string", offset)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", offset + i)
    if s[0] == "~":
        raise CapacityError(f"graph6 input declares more than 62 vertices; limit is {MAX_VERTICES}")
    n = ord(s[0]) - 63
    if n > MAX_VERTICES:
        raise CapacityError(f"graph6 input has {n} vertices; limit is {MAX_VERTICES}")
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    body = s[1:]
    if len(body) != need:
        pos = offset + 1 + min(len(body), need)
        raise Graph6Error(f"expected {need} data bytes for n={n}, found {len(body)}", pos)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (ord(body[k // 6]) - 63) >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if npairs % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - npairs % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", offset + len(s) - 1)
    return Graph(n, rows, check=False)


def to_edge_list_text(G: Graph) -> str:
    lines = [str(G.n)] + [f"{u} {v}" for u, v in G.edges()]
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise GraphError("empty edge-list input")
    try:
        n = int(lines[0])
        edges = []
        for ln in lines[1:]:
            u, v = ln.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise GraphError(f"malformed edge-list line: {exc}") from None
    return from_edge_list(n, edges)
