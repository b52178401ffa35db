"""Threshold, matrogenic, unigraph and hereditary-unigraph recognition.

Every class has more than one characterization available; the ``*_routes``
functions compute them all and :class:`RouteDisagreement` is raised when
they differ, since agreement is a theorem rather than a tolerance.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .canon import canonical_form
from .catalog import FORBIDDEN_NAMES, catalog, forbidden_family
from .configurations import FIG2, FIG6, Configuration, contains, find_embeddings
from .enumeration import count_realizations
from .graph import CapacityError, Graph, degree_sequence, induced_subgraph
from .switches import alternating_four_cycles, rho_is_automorphism, swap_map_is_isomorphism

UNIGRAPH_MAX_N = 9


class RouteDisagreement(AssertionError):
    """Two characterizations of the same class gave different answers."""


class _PatternSet:
    """Induced-subgraph matcher for a fixed list of small patterns."""

    def __init__(self, patterns: Iterable[Graph]):
        self.patterns = list(patterns)
        self.by_size: dict[int, dict[tuple[int, ...], dict[bytes, int]]] = {}
        for i, P in enumerate(self.patterns):
            slot = self.by_size.setdefault(P.n, {}).setdefault(degree_sequence(P), {})
            slot.setdefault(canonical_form(P), i)

    def find(self, G: Graph) -> tuple[int, tuple[int, ...]] | None:
        """First ``(pattern index, vertex subset)`` inducing a pattern, or ``None``."""
        rows = G.rows
        for k in sorted(self.by_size):
            if k > G.n:
                break
            seqs = self.by_size[k]
            for S in combinations(range(G.n), k):
                mask = 0
                for v in S:
                    mask |= 1 << v
                ds = tuple(sorted(((rows[v] & mask).bit_count() for v in S), reverse=True))
                codes = seqs.get(ds)
                if codes is None:
                    continue
                hit = codes.get(canonical_form(induced_subgraph(G, S)))
                if hit is not None:
                    return hit, S
        return None


@lru_cache(maxsize=None)
def _pattern_set(key: tuple[Graph, ...]) -> _PatternSet:
    return _PatternSet(key)


def find_induced(G: Graph, patterns: Sequence[Graph]):
    return _pattern_set(tuple(patterns)).find(G)


def is_free_of(G: Graph, patterns: Sequence[Graph]) -> bool:
    return find_induced(G, patterns) is None


_THRESHOLD_FORBIDDEN = tuple(catalog(x) for x in ("2K2", "C4", "P4"))
FORBIDDEN = tuple(forbidden_family())


# -- threshold -----------------------------------------------------------------

def threshold_routes(G: Graph) -> dict[str, bool]:
    return {
        "no_alternating_cycle": not alternating_four_cycles(G),
        "2K2_C4_P4_free": is_free_of(G, _THRESHOLD_FORBIDDEN),
    }


def is_threshold(G: Graph, *, cross_check: bool = True) -> bool:
    if not cross_check:
        return not alternating_four_cycles(G)
    return _agree("threshold", G, threshold_routes(G))


# -- matrogenic ----------------------------------------------------------------

def matrogenic_routes(G: Graph, fig6: Configuration = FIG6) -> dict[str, bool]:
    cycles = alternating_four_cycles(G)
    return {
        "fig6_free": not contains(G, fig6),
        "swap_maps_isomorphisms": all(
            swap_map_is_isomorphism(G, s, "phi_ac") and swap_map_is_isomorphism(G, s, "phi_bd") for s in cycles
        ),
        "rho_automorphisms": all(rho_is_automorphism(G, s) for s in cycles),
    }


def is_matrogenic(G: Graph, *, cross_check: bool = True) -> bool:
    if not cross_check:
        return not contains(G, FIG6)
    return _agree("matrogenic", G, matrogenic_routes(G))


# -- unigraphs -----------------------------------------------------------------

def is_unigraph(G: Graph) -> bool:
    """Exactly one isomorphism class realizes the degree sequence of ``G``."""
    if G.n > UNIGRAPH_MAX_N:
        raise CapacityError(f"unigraph test limited to n <= {UNIGRAPH_MAX_N}")
    return count_realizations(degree_sequence(G)) == 1


def _all_induced_unigraphs(G: Graph) -> bool:
    rows = G.rows
    seqs = set()
    for mask in range(1 << G.n):
        seqs.add(tuple(sorted(((rows[v] & mask).bit_count() for v in range(G.n) if mask >> v & 1), reverse=True)))
    return all(count_realizations(d) == 1 for d in seqs)


def hereditary_unigraph_routes(
    G: Graph,
    routes: Iterable[str] = ("i", "ii", "iii"),
    *,
    forbidden: Sequence[Graph] = FORBIDDEN,
    configs: Sequence[Configuration] = FIG2,
) -> dict[str, bool]:
    """(i) every induced subgraph is a unigraph, (ii) no isomorphism-changing
    configuration, (iii) free of the 16 forbidden graphs."""
    out = {}
    for r in routes:
        if r == "i":
            if G.n > UNIGRAPH_MAX_N:
                raise CapacityError(f"route (i) limited to n <= {UNIGRAPH_MAX_N}")
            out[r] = _all_induced_unigraphs(G)
        elif r == "ii":
            out[r] = not any(contains(G, C) for C in configs)
        elif r == "iii":
            out[r] = is_free_of(G, forbidden)
        else:
            raise ValueError(f"unknown route {r!r}")
    return out


def is_hereditary_unigraph(G: Graph, *, cross_check: bool = True) -> bool:
    if not cross_check:
        return is_free_of(G, FORBIDDEN)
    routes = ("iii", "ii", "i") if G.n <= 7 else ("iii", "ii")
    return _agree("hereditary unigraph", G, hereditary_unigraph_routes(G, routes))


def unigraph_producing(gset: Iterable[Graph], forbidden: Sequence[Graph] = FORBIDDEN) -> bool:
    """Every forbidden-family member induces some member of ``gset``.

    Equivalently, every ``gset``-free graph is a unigraph.
    """
    gset = [g for g in gset]
    for g in gset:
        if g.n > 8:
            raise CapacityError("candidate graphs limited to 8 vertices")
    return all(find_induced(F, gset) is not None for F in forbidden)


# -- profile -------------------------------------------------------------------

@dataclass
class ClassProfile:
    threshold: bool
    matrogenic: bool
    unigraph: bool | None
    hereditary_unigraph: bool
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        chain = [self.threshold, self.matrogenic, self.hereditary_unigraph, self.unigraph]
        for weaker, stronger in zip(chain[1:], chain):
            if stronger and weaker is False:
                raise RouteDisagreement(f"class chain violated: {chain}")

    def to_json(self) -> dict:
        return {
            "threshold": self.threshold,
            "matrogenic": self.matrogenic,
            "unigraph": self.unigraph,
            "hereditary_unigraph": self.hereditary_unigraph,
            "witnesses": self.witnesses,
        }

    @classmethod
    def from_json(cls, data: dict) -> ClassProfile:
        return cls(data["threshold"], data["matrogenic"], data["unigraph"], data["hereditary_unigraph"],
                   data.get("witnesses", {}))


def classify(G: Graph) -> ClassProfile:
    threshold = is_threshold(G)
    matrogenic = is_matrogenic(G)
    hered = is_hereditary_unigraph(G)
    if G.n <= UNIGRAPH_MAX_N:
        uni = is_unigraph(G)
    else:
        uni = True if hered else None
    wit = {}
    cycles = alternating_four_cycles(G)
    if cycles:
        wit["threshold"] = {"alternating_cycle": list(cycles[0])}
    if not matrogenic:
        e = find_embeddings(G, FIG6)[0]
        wit["matrogenic"] = {"FIG6": dict(zip(e.config.roles, e.mapping))}
    if not hered:
        idx, S = find_induced(G, FORBIDDEN)
        wit["hereditary_unigraph"] = {"forbidden": FORBIDDEN_NAMES[idx], "vertices": list(S)}
    if uni is False:
        wit["unigraph"] = {"realizations": count_realizations(degree_sequence(G))}
    return ClassProfile(threshold, matrogenic, uni, hered, wit)


def _agree(label: str, G: Graph, routes: dict[str, bool]) -> bool:
    vals = set(routes.values())
    if len(vals) != 1:
        raise RouteDisagreement(f"{label} characterizations disagree on {G!r}: {routes}")
    return vals.pop()

