"""Exhaustive checks of the 2-switch and unigraph theorems over small graphs.

Each claim is checked on one representative per isomorphism class (every
claim is isomorphism invariant). The objects a claim depends on (switch
pattern, configurations, forbidden family, module pairs) live in a
:class:`Definitions` bundle so a deliberately corrupted bundle can show that
each checker is able to fail.
"""

from __future__ import annotations

import json
import time
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace

from .canon import canonical_form
from .catalog import FORBIDDEN_NAMES, catalog
from .classifiers import (
    FORBIDDEN,
    hereditary_unigraph_routes,
    is_free_of,
    is_unigraph,
    matrogenic_routes,
    unigraph_producing,
)
from .configurations import (
    A4C,
    FIG2,
    FIG5,
    FIG6,
    Configuration,
    ConfigurationFamily,
    contains,
    contains_on_cycle,
    embeddings_on_cycle,
    iter_embeddings,
    realizations,
    switch_of_embedding,
)
from .enumeration import components, enumerate_graphs, enumerate_realizations, graphical_sequences
from .formats import from_graph6, to_graph6
from .graph import Graph, complement
from .switches import alternating_four_cycles, is_alternating, is_module, two_switch

CLAIMS = (
    "thm1.1",
    "lem2.1",
    "thm2.2",
    "thm2.5",
    "cor2.6",
    "cor3.1",
    "lem3.2",
    "thm3.3",
    "thm4.2",
    "cor4.3",
    "realization-sets",
)
MAX_N = 8


class VerificationError(ValueError):
    pass


@dataclass(frozen=True)
class Definitions:
    a4c: Configuration = A4C
    fig2: tuple[Configuration, ...] = FIG2
    fig5: tuple[ConfigurationFamily, ...] = FIG5
    fig6: Configuration = FIG6
    forbidden: tuple[Graph, ...] = FORBIDDEN
    forbidden_names: tuple[str, ...] = FORBIDDEN_NAMES
    # (module pair, removed pair) as positions in <a,b:c,d>
    module_pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...] = (((0, 2), (1, 3)), ((1, 3), (0, 2)))
    label: str = "standard"


STANDARD = Definitions()


@dataclass(frozen=True)
class Counterexample:
    graph6: str
    cycle: list[int] | None
    detail: str

    def to_json(self) -> dict:
        return {"graph6": self.graph6, "cycle": self.cycle, "detail": self.detail}


@dataclass
class VerificationReport:
    claim: str
    max_n: int
    checked: int
    counterexamples: list[Counterexample] = field(default_factory=list)
    elapsed: float = 0.0
    definitions: str = "standard"

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "max_n": self.max_n,
            "checked": self.checked,
            "counterexamples": [c.to_json() for c in self.counterexamples],
            "pass": self.passed,
            "definitions": self.definitions,
            "elapsed_seconds": round(self.elapsed, 3),
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return (f"{self.claim}: {status} (n <= {self.max_n}, {self.checked} checked, "
                f"{len(self.counterexamples)} counterexamples, {self.elapsed:.1f}s)")


# -- negative controls ---------------------------------------------------------

def negative_control(claim: str) -> Definitions:
    """A one-constraint corruption of the definitions that ``claim`` depends on."""
    d = STANDARD
    role = FIG6.roles.index
    if claim == "thm1.1":
        # switches only allowed when p and r are also non-adjacent
        return replace(d, a4c=A4C.with_nonedge(0, 2), label="A4C + non-edge pr")
    if claim == "lem2.1":
        # pairs each cycle vertex with its partner along an edge instead of across
        return replace(d, module_pairs=(((0, 1), (2, 3)), ((2, 3), (0, 1))), label="module pairs {a,b}/{c,d}")
    if claim in ("thm2.2", "thm2.5", "cor2.6"):
        if claim == "thm2.2":
            fig2 = (FIG2[0], FIG2[1], FIG2[2].with_edge(4, 5), FIG2[3])
            return replace(d, fig2=fig2, label="FIG2_C + edge zy")
        fig5a = ConfigurationFamily("FIG5_A*", tuple(v.with_edge(4, 5) for v in FIG5[0].variants))
        return replace(d, fig5=(fig5a, FIG5[1]), label="FIG5_A + edge alpha-beta")
    if claim == "cor3.1":
        return replace(d, fig6=FIG6.with_edge(role("u"), role("b")), label="FIG6 + edge ub")
    if claim in ("lem3.2", "thm3.3"):
        return replace(d, fig6=FIG6.without(role("u"), role("c")), label="FIG6 - non-edge uc")
    if claim in ("thm4.2", "cor4.3"):
        keep = [i for i, nm in enumerate(FORBIDDEN_NAMES) if nm != "Sbar"]
        return replace(d, forbidden=tuple(FORBIDDEN[i] for i in keep),
                       forbidden_names=tuple(FORBIDDEN_NAMES[i] for i in keep), label="F without Sbar")
    if claim == "realization-sets":
        return replace(d, fig2=(FIG2[0].without(4, 1),) + FIG2[1:], label="FIG2_A - non-edge tq")
    raise VerificationError(f"unknown claim {claim!r}")


# -- per-unit checks -----------------------------------------------------------

def _cex(G: Graph, s, detail: str) -> Counterexample:
    return Counterexample(to_graph6(G), None if s is None else list(s), detail)


def _switch_sites(G: Graph, defs: Definitions):
    if defs.a4c == A4C:
        return alternating_four_cycles(G)
    sites = {switch_of_embedding(e) for e in iter_embeddings(G, defs.a4c)}
    return sorted(s for s in sites if is_alternating(G, *s))


def _changes(G: Graph, code: bytes, s) -> bool:
    return canonical_form(two_switch(G, s)) != code


def _roles(e) -> str:
    return ",".join(f"{r}={v}" for r, v in zip(e.config.roles, e.mapping))


def _check_graph(claim: str, G: Graph, defs: Definitions):
    checked = 0
    out = []
    code = canonical_form(G)
    if claim == "lem2.1":
        for s in alternating_four_cycles(G):
            hyp = any(is_module(G, [s[i] for i in m], [s[i] for i in x]) for m, x in defs.module_pairs)
            if hyp:
                checked += 1
                if _changes(G, code, s):
                    out.append(_cex(G, s, "module hypothesis holds but the switch changes the class"))
    elif claim == "thm2.2":
        for s in alternating_four_cycles(G):
            if _changes(G, code, s):
                checked += 1
                if not any(contains_on_cycle(G, C, s) for C in defs.fig2):
                    out.append(_cex(G, s, "class-changing switch lies in no (a)-(d) configuration"))
    elif claim == "thm2.5":
        for s in alternating_four_cycles(G):
            if _changes(G, code, s):
                continue
            embs = [e for C in defs.fig2 for e in embeddings_on_cycle(G, C, s)]
            if not embs:
                continue
            covers = [f.vertices for F in defs.fig5 for f in embeddings_on_cycle(G, F, s)]
            for e in embs:
                checked += 1
                if not any(e.vertices <= V for V in covers):
                    out.append(_cex(G, s, f"class-preserving switch; {e.config.name} embedding "
                                          f"{_roles(e)} lies in no overlay configuration"))
    elif claim == "cor2.6":
        if not any(contains(G, F) for F in defs.fig5):
            for s in alternating_four_cycles(G):
                checked += 1
                ext = any(contains_on_cycle(G, C, s) for C in defs.fig2)
                ch = _changes(G, code, s)
                if ext != ch:
                    out.append(_cex(G, s, f"in (a)-(d) configuration: {ext}; changes class: {ch}"))
    elif claim == "cor3.1":
        if not contains(G, defs.fig6):
            checked += 1
            if not is_unigraph(G):
                out.append(_cex(G, None, "FIG6-free graph is not a unigraph"))
    elif claim in ("lem3.2", "thm3.3"):
        checked += 1
        r = matrogenic_routes(G, defs.fig6)
        other = "swap_maps_isomorphisms" if claim == "lem3.2" else "rho_automorphisms"
        if r["fig6_free"] != r[other]:
            out.append(_cex(G, None, f"fig6_free={r['fig6_free']} but {other}={r[other]}"))
    elif claim == "thm4.2":
        checked += 1
        r = hereditary_unigraph_routes(G, ("i", "ii", "iii"), forbidden=defs.forbidden, configs=defs.fig2)
        if len(set(r.values())) != 1:
            out.append(_cex(G, None, f"routes disagree: {r}"))
    else:
        raise VerificationError(f"{claim} is not a per-graph claim")
    return checked, out


def _check_sequence(d: tuple[int, ...], defs: Definitions):
    reps = enumerate_realizations(d)
    if len(reps) <= 1:
        return 1, []
    index = {canonical_form(g): i for i, g in enumerate(reps)}
    parent = list(range(len(reps)))
    ncomp = len(reps)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    edges = []
    for i, g in enumerate(reps):
        if ncomp == 1:
            break
        for s in _switch_sites(g, defs):
            j = index[canonical_form(two_switch(g, s))]
            edges.append((i, j))
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
                ncomp -= 1
    if ncomp == 1:
        return 1, []
    comps = components(len(reps), edges)
    return 1, [_cex(reps[comps[1][0]], None,
                    f"sequence {list(d)}: {len(reps)} realizations fall into {len(comps)} switch components")]


def _battery(defs: Definitions) -> dict[str, list[Graph]]:
    return {
        "R(A4C)": realizations(defs.a4c),
        "R(FIG2_A)": realizations(defs.fig2[0]),
        "R(FIG2_B)": realizations(defs.fig2[1]),
        "F": list(defs.forbidden),
        "{K3}": [catalog("K3")],
        "{2K2}": [catalog("2K2")],
    }


def _check_candidate(name: str, max_n: int, defs: Definitions):
    gset = _battery(defs)[name]
    left = unigraph_producing(gset, defs.forbidden)
    witness = None
    for n in range(max_n + 1):
        for G in enumerate_graphs(n):
            if is_free_of(G, gset) and not is_unigraph(G):
                witness = G
                break
        if witness is not None:
            break
    right = witness is None
    if left == right:
        return 1, []
    g6 = to_graph6(witness) if witness is not None else ""
    return 1, [Counterexample(g6, None, f"candidate {name}: every forbidden graph induces a member = {left}; "
                                        f"all free graphs up to n={max_n} are unigraphs = {right}")]


def _names(graphs: Sequence[Graph]) -> set[bytes]:
    return {canonical_form(g) for g in graphs}


def _check_realization_unit(name: str, defs: Definitions):
    cat = lambda *names: _names([catalog(x) for x in names])  # noqa: E731
    if name == "R(A4C)":
        got, want = _names(realizations(defs.a4c)), cat("2K2", "C4", "P4")
    elif name == "R(FIG2_A)":
        got, want = _names(realizations(defs.fig2[0])), cat("P5", "K2,3", "4-pan")
    elif name == "R(FIG2_B)":
        got, want = _names(realizations(defs.fig2[1])), cat("house", "K2+K3", "co-4-pan")
    elif name == "|R(FIG6)|":
        k = len(realizations(defs.fig6))
        return 1, ([] if k == 10 else [Counterexample("", None, f"|R(FIG6)| = {k}, expected 10")])
    elif name == "R(FIG2_C) members":
        got = _names(realizations(defs.fig2[2]))
        want = cat("K2+P4", "K2+C4", "(K2+K1)v(K2+K1)", "R", "Sbar")
        missing = want - got
        return 1, [Counterexample(g.decode(), None, f"{name}: missing from R(FIG2_C)") for g in sorted(missing)]
    elif name == "R(FIG2_D) complements":
        got = _names(realizations(defs.fig2[3]))
        want = _names([complement(g) for g in realizations(defs.fig2[2])])
    elif name == "R(FIG2) not hereditary unigraphs":
        bad = [g for C in defs.fig2 for g in realizations(C)
               if hereditary_unigraph_routes(g, ("i",), forbidden=defs.forbidden)["i"]]
        return 1, [Counterexample(to_graph6(g), None, "realization of an (a)-(d) configuration is a hereditary unigraph")
                   for g in bad]
    else:
        raise VerificationError(f"unknown realization check {name!r}")
    if got == want:
        return 1, []
    return 1, [Counterexample(g.decode(), None, f"{name}: {'unexpected' if g in got else 'missing'}")
               for g in sorted(got ^ want)]


REALIZATION_UNITS = ("R(A4C)", "R(FIG2_A)", "R(FIG2_B)", "|R(FIG6)|", "R(FIG2_C) members",
                     "R(FIG2_D) complements", "R(FIG2) not hereditary unigraphs")


def _units(claim: str, max_n: int) -> list:
    if claim == "thm1.1":
        return [d for n in range(1, max_n + 1) for d in graphical_sequences(n)]
    if claim == "cor4.3":
        return list(_battery(STANDARD))
    if claim == "realization-sets":
        return list(REALIZATION_UNITS)
    return [to_graph6(G) for n in range(max_n + 1) for G in enumerate_graphs(n)]


def _run_chunk(args):
    claim, max_n, units, defs = args
    checked = 0
    cex = []
    for unit in units:
        if claim == "thm1.1":
            c, o = _check_sequence(unit, defs)
        elif claim == "cor4.3":
            c, o = _check_candidate(unit, max_n, defs)
        elif claim == "realization-sets":
            c, o = _check_realization_unit(unit, defs)
        else:
            c, o = _check_graph(claim, from_graph6(unit), defs)
        checked += c
        cex.extend(o)
    return checked, cex


def verify(claim: str, max_n: int, *, jobs: int = 1, defs: Definitions = STANDARD) -> VerificationReport:
    """Check ``claim`` over every graph (or degree sequence) with at most ``max_n`` vertices."""
    if claim not in CLAIMS:
        raise VerificationError(f"unknown claim {claim!r}; choose from {', '.join(CLAIMS)}")
    if not 0 <= max_n <= MAX_N:
        raise VerificationError(f"max_n must be in 0..{MAX_N}")
    start = time.perf_counter()
    units = _units(claim, max_n)
    if jobs <= 1 or len(units) < 2:
        results = [_run_chunk((claim, max_n, units, defs))]
    else:
        size = max(1, len(units) // (jobs * 8))
        chunks = [(claim, max_n, units[i : i + size], defs) for i in range(0, len(units), size)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_chunk, chunks))
    checked = sum(r[0] for r in results)
    cex = [c for r in results for c in r[1]]
    return VerificationReport(claim, max_n, checked, cex, time.perf_counter() - start, defs.label)
