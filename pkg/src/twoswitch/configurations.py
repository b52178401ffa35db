"""Configurations: required edges and non-edges over abstract vertices.

A configuration lists ``k`` named roles, pairs that must be edges and pairs
that must be non-edges; every other pair is free. Roles that carry an
alternating 4-cycle are recorded in ``cycle`` so an embedding can be turned
back into the 2-switch it sits on.
"""

from __future__ import annotations

import json
from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_form, canonical_graph
from .graph import CapacityError, Graph, GraphError, _bits
from .switches import AlternatingFourCycle

MAX_REALIZATION_K = 8


class ConfigurationError(GraphError):
    pass


def _pair(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Configuration:
    name: str
    roles: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    nonedges: tuple[tuple[int, int], ...]
    cycle: tuple[int, int, int, int] | None = None

    def __post_init__(self):
        k = len(self.roles)
        E = {_pair(*e) for e in self.edges}
        F = {_pair(*e) for e in self.nonedges}
        for i, j in E | F:
            if i == j or not (0 <= i < k and 0 <= j < k):
                raise ConfigurationError(f"{self.name}: bad pair ({i}, {j})")
        if E & F:
            raise ConfigurationError(f"{self.name}: pairs both required and forbidden: {sorted(E & F)}")
        object.__setattr__(self, "edges", tuple(sorted(E)))
        object.__setattr__(self, "nonedges", tuple(sorted(F)))

    @classmethod
    def build(cls, name: str, roles: str | Sequence[str], edges: Sequence[str], nonedges: Sequence[str],
              cycle: str | None = None) -> Configuration:
        """Build from role names, e.g. ``build("A4C", "pqrs", ["pq","rs"], ["qr","ps"], cycle="pqrs")``."""
        roles = tuple(roles)
        idx = {r: i for i, r in enumerate(roles)}

        def pairs(items):
            out = []
            for item in items:
                u, v = item if not isinstance(item, str) or len(item) == 2 else item.split("-")
                out.append((idx[u], idx[v]))
            return out

        cyc = tuple(idx[r] for r in cycle) if cycle else None
        return cls(name, roles, tuple(pairs(edges)), tuple(pairs(nonedges)), cyc)

    @property
    def k(self) -> int:
        return len(self.roles)

    @property
    def variants(self) -> tuple[Configuration, ...]:
        return (self,)

    def with_edge(self, i: int, j: int) -> Configuration:
        return Configuration(self.name + "+edge", self.roles, self.edges + (_pair(i, j),), self.nonedges, self.cycle)

    def with_nonedge(self, i: int, j: int) -> Configuration:
        return Configuration(self.name + "+nonedge", self.roles, self.edges, self.nonedges + (_pair(i, j),), self.cycle)

    def without(self, i: int, j: int) -> Configuration:
        p = _pair(i, j)
        return Configuration(self.name + "-pair", self.roles, tuple(e for e in self.edges if e != p),
                             tuple(e for e in self.nonedges if e != p), self.cycle)

    def complement(self) -> Configuration:
        return Configuration("co-" + self.name, self.roles, self.nonedges, self.edges,
                             None if self.cycle is None else _complement_cycle(self.cycle))

    def to_json(self) -> dict:
        d = {"name": self.name, "k": self.k, "E": [list(e) for e in self.edges],
             "F": [list(e) for e in self.nonedges], "roles": list(self.roles)}
        if self.cycle is not None:
            d["cycle"] = list(self.cycle)
        return d

    @classmethod
    def from_json(cls, data: Mapping | str) -> Configuration:
        """Parse ``{k, E, F, roles}``; pairs may use indices or role names."""
        if isinstance(data, str):
            data = json.loads(data)
        roles = tuple(data.get("roles") or [str(i) for i in range(data["k"])])
        if "k" in data and data["k"] != len(roles):
            raise ConfigurationError(f"k={data['k']} but {len(roles)} roles given")
        idx = {r: i for i, r in enumerate(roles)}

        def conv(x):
            if isinstance(x, int):
                return x
            if x in idx:
                return idx[x]
            raise ConfigurationError(f"unknown role {x!r}")

        E = tuple((conv(u), conv(v)) for u, v in data.get("E", []))
        F = tuple((conv(u), conv(v)) for u, v in data.get("F", []))
        cyc = data.get("cycle")
        cyc = tuple(conv(x) for x in cyc) if cyc else None
        return cls(data.get("name", "custom"), roles, E, F, cyc)


def _complement_cycle(cyc):
    # <p,q:r,s> in G is <q,r:s,p> in the complement
    p, q, r, s = cyc
    return (q, r, s, p)


@dataclass(frozen=True)
class ConfigurationFamily:
    """Contained when any variant is contained."""

    name: str
    variants: tuple[Configuration, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if not self.variants:
            raise ConfigurationError(f"{self.name}: family needs at least one variant")
        ks = {v.k for v in self.variants}
        if len(ks) != 1:
            raise ConfigurationError(f"{self.name}: variants differ in size")

    @property
    def k(self) -> int:
        return self.variants[0].k

    @property
    def roles(self) -> tuple[str, ...]:
        return self.variants[0].roles

    def replace_variant(self, i: int, new: Configuration) -> ConfigurationFamily:
        vs = list(self.variants)
        vs[i] = new
        return ConfigurationFamily(self.name, tuple(vs))


@dataclass(frozen=True)
class Embedding:
    config: Configuration
    mapping: tuple[int, ...]
    variant: int = 0

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def __getitem__(self, role: str) -> int:
        return self.mapping[self.config.roles.index(role)]


# -- built-in configurations --------------------------------------------------

A4C = Configuration.build("A4C", "pqrs", ["pq", "rs"], ["qr", "ps"], cycle="pqrs")

# t joined to both ends of the non-edge ps
FIG2_A = Configuration.build("FIG2_A", "pqrst", ["pq", "rs", "tp", "ts"], ["qr", "ps", "tq", "tr"], cycle="pqrs")
# t joined to both ends of the edge pq
FIG2_B = Configuration.build("FIG2_B", "pqrst", ["pq", "rs", "tp", "tq"], ["qr", "ps", "tr", "ts"], cycle="pqrs")
FIG2_C = Configuration.build("FIG2_C", "pqrszy", ["pq", "rs", "zp", "yq"], ["qr", "ps", "zr", "ys"], cycle="pqrs")
FIG2_D = Configuration.build("FIG2_D", "pqrszy", ["pq", "rs", "zp", "ys"], ["qr", "ps", "zr", "yq"], cycle="pqrs")
FIG2 = (FIG2_A, FIG2_B, FIG2_C, FIG2_D)

_F5A_ROLES = ("u", "v", "w", "x", "alpha", "beta")


def _fig5a_variant(alpha_trace: str, beta_trace: str) -> Configuration:
    edges = [("u", "v"), ("w", "x")]
    nonedges = [("v", "w"), ("x", "u")]
    for role, trace in (("alpha", alpha_trace), ("beta", beta_trace)):
        for c in "uvwx":
            (edges if c in trace else nonedges).append((role, c))
    return Configuration.build(f"FIG5_A[{alpha_trace},{beta_trace}]", _F5A_ROLES, edges, nonedges, cycle="uvwx")


FIG5_A = ConfigurationFamily(
    "FIG5_A", tuple(_fig5a_variant(a, b) for a in ("uv", "wx") for b in ("vw", "ux"))
)

_F5B_ROLES = ("p", "q", "r", "s", "z", "y", "t")
_F5B_E = [("p", "q"), ("r", "s"), ("z", "p"), ("y", "q")]
_F5B_F = [("q", "r"), ("p", "s"), ("z", "r"), ("y", "s")]
FIG5_B = ConfigurationFamily(
    "FIG5_B",
    (
        Configuration.build("FIG5_B[t~r]", _F5B_ROLES, _F5B_E + [("t", "r")], _F5B_F + [("t", "p")], cycle="pqrs"),
        Configuration.build("FIG5_B[t~s]", _F5B_ROLES, _F5B_E + [("t", "s")], _F5B_F + [("t", "q")], cycle="pqrs"),
    ),
)
FIG5 = (FIG5_A, FIG5_B)

FIG6 = Configuration.build("FIG6", "abcdu", ["ab", "cd", "ua"], ["bc", "ad", "uc"], cycle="abcd")

BUILTINS: dict[str, Configuration | ConfigurationFamily] = {
    c.name: c for c in (A4C, FIG2_A, FIG2_B, FIG2_C, FIG2_D, FIG5_A, FIG5_B, FIG6)
}


# -- embedding search ---------------------------------------------------------

def _plan(C: Configuration, fixed: Sequence[int]):
    """Role order for backtracking: fixed roles first, then most-constrained."""
    k = C.k
    cons = {i: [] for i in range(k)}
    for i, j in C.edges:
        cons[i].append((j, True))
        cons[j].append((i, True))
    for i, j in C.nonedges:
        cons[i].append((j, False))
        cons[j].append((i, False))
    order = list(fixed)
    rest = [i for i in range(k) if i not in order]
    while rest:
        placed = set(order)
        best = max(rest, key=lambda i: (sum(1 for j, _ in cons[i] if j in placed), len(cons[i]), -i))
        order.append(best)
        rest.remove(best)
    steps = []
    for pos, role in enumerate(order):
        earlier = set(order[:pos])
        steps.append((role, [(j, e) for j, e in cons[role] if j in earlier]))
    return steps


def _iter_config(G: Graph, C: Configuration, fixed: Mapping[int, int] | None = None) -> Iterator[tuple[int, ...]]:
    if C.k > G.n:
        return
    fixed = dict(fixed or {})
    steps = _plan(C, sorted(fixed))
    rows = G.rows
    full = G.vertex_mask
    assign = [-1] * C.k
    k = C.k

    def rec(pos, used):
        if pos == k:
            yield tuple(assign)
            return
        role, checks = steps[pos]
        cand = full & ~used
        if role in fixed:
            cand &= 1 << fixed[role]
        for j, is_edge in checks:
            w = assign[j]
            if is_edge:
                cand &= rows[w]
            else:
                cand &= ~rows[w]
        for v in _bits(cand):
            assign[role] = v
            yield from rec(pos + 1, used | 1 << v)
        assign[role] = -1

    yield from rec(0, 0)


def iter_embeddings(G: Graph, C: Configuration | ConfigurationFamily,
                    fixed: Mapping[str, int] | None = None) -> Iterator[Embedding]:
    """Lazily yield embeddings; ``fixed`` pins roles (by name) to host vertices."""
    for vi, var in enumerate(C.variants):
        fx = None
        if fixed:
            fx = {var.roles.index(r): v for r, v in fixed.items()}
        for m in _iter_config(G, var, fx):
            yield Embedding(var, m, vi)


def find_embeddings(G: Graph, C: Configuration | ConfigurationFamily) -> list[Embedding]:
    """All embeddings, sorted by (variant, role-indexed mapping)."""
    return sorted(iter_embeddings(G, C), key=lambda e: (e.variant, e.mapping))


def contains(G: Graph, C: Configuration | ConfigurationFamily) -> bool:
    return next(iter_embeddings(G, C), None) is not None


def embeddings_on_cycle(G: Graph, C: Configuration | ConfigurationFamily, s) -> list[Embedding]:
    """Embeddings whose cycle roles realize the switch ``s`` (any of its four writings)."""
    inst = AlternatingFourCycle.of(*s)
    seen = {}
    for vi, var in enumerate(C.variants):
        if var.cycle is None:
            raise ConfigurationError(f"{var.name} has no alternating-cycle roles")
        for w in inst.writings():
            for m in _iter_config(G, var, dict(zip(var.cycle, w))):
                seen.setdefault((vi, m), Embedding(var, m, vi))
    return [seen[key] for key in sorted(seen)]


def contains_on_cycle(G: Graph, C: Configuration | ConfigurationFamily, s) -> bool:
    inst = AlternatingFourCycle.of(*s)
    for var in C.variants:
        for w in inst.writings():
            if next(_iter_config(G, var, dict(zip(var.cycle, w))), None) is not None:
                return True
    return False


def switch_of_embedding(e: Embedding) -> AlternatingFourCycle:
    if e.config.cycle is None:
        raise ConfigurationError(f"{e.config.name} has no alternating-cycle roles")
    return AlternatingFourCycle.of(*(e.mapping[i] for i in e.config.cycle))


def realizations(C: Configuration | ConfigurationFamily) -> list[Graph]:
    """All ``k``-vertex graphs containing ``C``, one canonical graph per class."""
    k = C.k
    if k > MAX_REALIZATION_K:
        raise CapacityError(f"realizations limited to k <= {MAX_REALIZATION_K}")
    out = {}
    for var in C.variants:
        base = [0] * k
        for i, j in var.edges:
            base[i] |= 1 << j
            base[j] |= 1 << i
        fixed = set(var.edges) | set(var.nonedges)
        free = [p for p in combinations(range(k), 2) if p not in fixed]
        for mask in range(1 << len(free)):
            rows = list(base)
            for b in _bits(mask):
                i, j = free[b]
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            G = Graph(k, rows, check=False)
            code = canonical_form(G)
            if code not in out:
                out[code] = G
    return [canonical_graph(out[c]) for c in sorted(out)]
