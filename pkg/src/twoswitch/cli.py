"""Command-line entry point: ``twoswitch <subcommand> ...``.

Exit status is 0 on success, 1 when a verified claim has counterexamples,
2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import __version__
from .canon import canonical_graph, canonical_labeling
from .catalog import catalog
from .classifiers import ClassProfile, classify
from .configurations import BUILTINS, Configuration, find_embeddings, switch_of_embedding
from .enumeration import NotGraphicalError, enumerate_realizations, is_graphical, transition_graph
from .formats import from_graph6, to_edge_list_text, to_graph6
from .graph import GraphError, degree_sequence
from .switches import AlternatingFourCycle, alternating_four_cycles, changes_isomorphism_class, two_switch
from .verifier import CLAIMS, VerificationError, negative_control, verify

CACHE_ENV = "TWOSWITCH_CACHE_DIR"
CACHE_FILE = "profiles.tsv"


class UsageError(Exception):
    pass


class ProfileCache:
    """Append-only ``code<TAB>json`` file of classification results.

    Every ``spot_check_every``-th hit is recomputed and compared.
    """

    def __init__(self, directory: str | os.PathLike, spot_check_every: int = 100):
        self.path = Path(directory) / CACHE_FILE
        self.every = spot_check_every
        self.hits = 0
        self.entries: dict[str, dict] = {}
        if self.path.exists():
            for line in self.path.read_text().splitlines():
                key, _, payload = line.partition("\t")
                if payload:
                    self.entries[key] = json.loads(payload)

    @classmethod
    def from_env(cls) -> ProfileCache | None:
        d = os.environ.get(CACHE_ENV)
        return cls(d) if d else None

    def profile(self, G) -> ClassProfile:
        """Profile of ``G``; entries are stored for the canonical graph and
        witnesses are translated back to the labels of ``G``."""
        order = canonical_labeling(G)
        Gc = canonical_graph(G)
        key = to_graph6(Gc)
        data = self.entries.get(key)
        if data is not None:
            self.hits += 1
            if self.hits % self.every == 0 and classify(Gc).to_json() != data:
                raise RuntimeError(f"cache entry for {key} disagrees with recomputation")
        else:
            data = classify(Gc).to_json()
            self.entries[key] = data
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a") as fh:
                fh.write(f"{key}\t{json.dumps(data)}\n")
        prof = ClassProfile.from_json(data)
        prof.witnesses = _relabel_witnesses(prof.witnesses, order)
        return prof


def _relabel_witnesses(wit: dict, order) -> dict:
    out = {}
    for cls, w in wit.items():
        w = dict(w)
        if "alternating_cycle" in w:
            w["alternating_cycle"] = list(AlternatingFourCycle.of(*(order[v] for v in w["alternating_cycle"])))
        if "FIG6" in w:
            w["FIG6"] = {r: order[v] for r, v in w["FIG6"].items()}
        if "vertices" in w:
            w["vertices"] = sorted(order[v] for v in w["vertices"])
        out[cls] = w
    return out


def _graph(text: str):
    return from_graph6(text)


def _sequence(text: str) -> tuple[int, ...]:
    try:
        d = tuple(int(x) for x in text.replace(" ", "").split(",") if x)
    except ValueError:
        raise UsageError(f"malformed degree sequence {text!r}") from None
    if not is_graphical(d):
        raise UsageError(f"degree sequence {text} is not graphical")
    return d


def _profile_record(G, prof: ClassProfile) -> dict:
    rec = {"graph6": to_graph6(G), "n": G.n, "degree_sequence": list(degree_sequence(G))}
    rec.update(prof.to_json())
    return rec


def cmd_classify(args, out):
    if args.graph == "-":
        items = [ln.strip() for ln in sys.stdin if ln.strip()]
    else:
        items = [args.graph]
    cache = ProfileCache.from_env()
    for item in items:
        G = _graph(item)
        prof = cache.profile(G) if cache is not None else classify(G)
        rec = _profile_record(G, prof)
        if args.json:
            out.write(json.dumps(rec) + "\n")
        else:
            flags = " ".join(f"{k}={'yes' if rec[k] else ('no' if rec[k] is False else '?')}"
                             for k in ("threshold", "matrogenic", "hereditary_unigraph", "unigraph"))
            out.write(f"{rec['graph6']} {flags}\n")
    return 0


def cmd_a4c(args, out):
    G = _graph(args.graph)
    for s in alternating_four_cycles(G):
        out.write(f"{s}\n")
    return 0


def cmd_switch(args, out):
    G = _graph(args.graph)
    try:
        cyc = tuple(int(x) for x in args.cycle.split(","))
    except ValueError:
        raise UsageError(f"malformed cycle {args.cycle!r}") from None
    if len(cyc) != 4:
        raise UsageError("--cycle needs four vertices a,b,c,d")
    H = two_switch(G, cyc)
    out.write(to_graph6(H) + "\n")
    if args.check_iso:
        out.write("changes isomorphism class\n" if changes_isomorphism_class(G, cyc) else "isomorphic\n")
    return 0


def cmd_configs(args, out):
    G = _graph(args.graph)
    configs = []
    if args.config:
        for path in args.config:
            configs.append(Configuration.from_json(Path(path).read_text()))
    names = args.which.split(",") if args.which else ([] if args.config else list(BUILTINS))
    for nm in names:
        if nm not in BUILTINS:
            raise UsageError(f"unknown configuration {nm!r}; choose from {', '.join(BUILTINS)}")
        configs.append(BUILTINS[nm])
    for C in configs:
        embs = find_embeddings(G, C)
        out.write(f"{C.name}: {len(embs)} embeddings\n")
        for e in embs:
            roles = " ".join(f"{r}={v}" for r, v in zip(e.config.roles, e.mapping))
            cyc = f"  switch {switch_of_embedding(e)}" if e.config.cycle is not None else ""
            out.write(f"  [{e.config.name}] {roles}{cyc}\n")
    return 0


def cmd_realizations(args, out):
    d = _sequence(args.sequence)
    reps = enumerate_realizations(d)
    if args.count or not args.list:
        out.write(f"{len(reps)}\n")
    if args.list:
        for g in reps:
            out.write(to_graph6(g) + "\n")
    return 0


def cmd_transition(args, out):
    d = _sequence(args.sequence)
    t = transition_graph(d)
    if args.format == "dot":
        out.write(t.to_dot())
    else:
        out.write(json.dumps(t.to_json()) + "\n")
    return 0


def cmd_verify(args, out):
    defs = negative_control(args.claim) if args.negative_control else None
    kwargs = {"jobs": args.jobs}
    if defs is not None:
        kwargs["defs"] = defs
    report = verify(args.claim, args.max_n, **kwargs)
    if args.report:
        Path(args.report).write_text(report.dumps() + "\n")
    out.write(report.summary() + "\n")
    for c in report.counterexamples[:10]:
        out.write(f"  {c.graph6} cycle={c.cycle} {c.detail}\n")
    return 0 if report.passed else 1


def cmd_catalog(args, out):
    G = catalog(args.name)
    out.write(to_graph6(G) + "\n" if args.g6 else to_edge_list_text(G))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="twoswitch", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("classify", help="threshold / matrogenic / unigraph flags")
    s.add_argument("graph", help="graph6 string, or - for newline-separated graph6 on stdin")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("a4c", help="list alternating 4-cycles")
    s.add_argument("graph")
    s.set_defaults(func=cmd_a4c)

    s = sub.add_parser("switch", help="apply a 2-switch")
    s.add_argument("graph")
    s.add_argument("--cycle", required=True, help="a,b,c,d with ab, cd edges and bc, ad non-edges")
    s.add_argument("--check-iso", action="store_true")
    s.set_defaults(func=cmd_switch)

    s = sub.add_parser("configs", help="embeddings of built-in or JSON configurations")
    s.add_argument("graph")
    s.add_argument("--which", help="comma-separated built-in names")
    s.add_argument("--config", action="append", help="JSON file {k, E, F, roles}")
    s.set_defaults(func=cmd_configs)

    s = sub.add_parser("realizations", help="isomorphism classes realizing a degree sequence")
    s.add_argument("sequence", help="comma-separated degrees")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--count", action="store_true")
    g.add_argument("--list", action="store_true")
    s.set_defaults(func=cmd_realizations)

    s = sub.add_parser("transition", help="2-switch transition graph of a degree sequence")
    s.add_argument("sequence")
    s.add_argument("--format", choices=("dot", "json"), default="json")
    s.set_defaults(func=cmd_transition)

    s = sub.add_parser("verify", help="exhaustively check a claim")
    s.add_argument("claim", choices=CLAIMS)
    s.add_argument("--max-n", type=int, default=7)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--report", help="write the JSON report here")
    s.add_argument("--negative-control", action="store_true",
                   help="run against a deliberately corrupted definition; expect failure")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("catalog", help="print a named graph")
    s.add_argument("name")
    s.add_argument("--g6", action="store_true", help="graph6 instead of edge list")
    s.set_defaults(func=cmd_catalog)
    return p


def run(argv: list[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args, out)
    except (UsageError, GraphError, NotGraphicalError, VerificationError, OSError, ValueError) as exc:
        err.write(f"twoswitch {args.command}: error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
