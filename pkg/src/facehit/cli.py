"""Command-line front end.

Exit codes: 0 ok, 1 invalid embedding, 2 parse error, 3 precondition or
domain error, 4 oracle budget exceeded.  Every run emits a manifest (JSON)
to ``--manifest`` or, failing that, as one line on stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path

from . import __version__, generators, oracle, triangulation
from .augment import augment
from .domatic_poly import theorem_coloring
from .errors import (
    BadParameter,
    BudgetExceeded,
    FacehitError,
    InvalidEmbedding,
    ParseError,
    PreconditionViolated,
)
from .plane_core import PlaneMultigraph, check_embedding, dumps, parse, to_dot
from .rng import SplitMix64
from .verify import Side, audit_two_coloring

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_BUDGET = 4

log = logging.getLogger("facehit")


@dataclass
class RunManifest:
    command: str
    version: str = __version__
    input_sha256: str | None = None
    seeds: list[int] = field(default_factory=list)
    elapsed_s: float = 0.0
    exit_code: int = 0
    result: dict = field(default_factory=dict)


class _Run:
    def __init__(self, args):
        self.args = args
        self.manifest = RunManifest(command=args.command)

    def read(self, path: str) -> str:
        data = sys.stdin.buffer.read() if path == "-" else Path(path).read_bytes()
        self.manifest.input_sha256 = hashlib.sha256(data).hexdigest()
        return data.decode("utf-8")

    def load(self, path: str) -> PlaneMultigraph:
        vertices, edges, rotation, anchors, outer, _ = parse(self.read(path))
        return PlaneMultigraph(vertices, edges, rotation, anchors, outer)


def _out(text: str, path: str | None = None) -> None:
    if path and path != "-":
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _fmt(vs) -> str:
    return " ".join(str(v) for v in sorted(vs))


# -- subcommands ------------------------------------------------------------------


def cmd_validate(run: _Run) -> int:
    vertices, edges, rotation, anchors, outer, _ = parse(run.read(run.args.path))
    checks = check_embedding(vertices, edges, rotation, anchors, outer)
    for c in checks:
        print(f"{'ok  ' if c.ok else 'FAIL'} {c.name}" + (f": {c.detail}" if c.detail else ""))
    ok = all(c.ok for c in checks)
    run.manifest.result = {"valid": ok, "failed": [c.name for c in checks if not c.ok]}
    return EXIT_OK if ok else EXIT_INVALID


def cmd_color(run: _Run) -> int:
    G = run.load(run.args.path)
    col = theorem_coloring(G)
    audit = audit_two_coloring(G, col)
    V1 = sorted(v for v in G.vertices if col[v] is Side.A)
    V2 = sorted(v for v in G.vertices if col[v] is Side.B)
    result = {"V1": V1, "V2": V2, "audit": audit.to_dict()}
    if run.args.check:
        result["check"] = _cross_check(G, col)
    run.manifest.result = {"n": G.n, "sizes": [len(V1), len(V2)],
                           "domatic": audit.domatic, "polychromatic": audit.polychromatic}
    if run.args.json:
        print(json.dumps(result, sort_keys=True))
    else:
        print(f"V1 ({len(V1)}): {_fmt(V1)}")
        print(f"V2 ({len(V2)}): {_fmt(V2)}")
        print(f"domatic: {audit.domatic}")
        print(f"polychromatic: {audit.polychromatic}")
        print(f"polychromatic_3plus: {audit.polychromatic_3plus}")
        if "check" in result:
            for k, v in result["check"].items():
                print(f"check {k}: {v}")
    good = audit.domatic and audit.polychromatic
    if "check" in result:
        good = good and result["check"].get("agree", True)
    return EXIT_OK if good else EXIT_DOMAIN


def _cross_check(G: PlaneMultigraph, col) -> dict:
    if G.n > oracle.DEFAULT_BUDGET.max_vertices:
        return {"skipped": f"n={G.n} above oracle cap"}
    mask = oracle.coloring_to_mask(G, col)
    dom, poly = oracle.audit_masks(G, [mask])
    audit = audit_two_coloring(G, col)
    found = oracle.exists_dp_two_coloring(G) is not None
    return {
        "oracle_coloring_exists": found,
        "agree": bool(dom[0]) == audit.domatic and bool(poly[0]) == audit.polychromatic and found,
    }


def cmd_dominate(run: _Run) -> int:
    G = run.load(run.args.path)
    a = run.args
    if not triangulation.is_plane_triangulation(G):
        raise triangulation.NotATriangulation("input is not a simple plane triangulation")
    I = None
    if a.mis != "best":
        if a.mis == "exact":
            I = oracle.max_independent_exact(G)
        else:
            I = triangulation.greedy_mis(G, a.mis, a.seed)
    S, rep = triangulation.corollary_dominating_set(G, I, exact=a.exact, seed=a.seed)
    if a.exact and rep.gamma_exact is None:
        raise BudgetExceeded(f"--exact needs n <= {oracle.DEFAULT_BUDGET.max_vertices}")
    run.manifest.seeds = [a.seed]
    run.manifest.result = rep.to_dict()
    if a.json:
        d = rep.to_dict()
        d["S"] = sorted(S)
        print(json.dumps(d, sort_keys=True))
    else:
        print(f"S ({len(S)}): {_fmt(S)}")
        sys.stdout.write(triangulation.reports_to_csv([rep]))
    return EXIT_OK


def cmd_bench(run: _Run) -> int:
    a = run.args
    if a.count < 1 or a.n < 3:
        raise BadParameter("--count must be >= 1 and --n >= 3")
    rng = SplitMix64(a.seed)
    reports = []
    seeds = []
    for _ in range(a.count):
        s = rng.next_u64()
        seeds.append(s)
        G = generators.stacked_triangulation(a.n, s)
        _, rep = triangulation.corollary_dominating_set(G, exact=a.exact, seed=s)
        reports.append(rep)
    summary = triangulation.compare_bounds(reports)
    run.manifest.seeds = [a.seed]
    run.manifest.result = summary.to_dict()
    text = triangulation.reports_to_csv(reports)
    if a.csv:
        Path(a.csv).write_text(text)
    else:
        sys.stdout.write(text)
    for k, v in summary.to_dict().items():
        print(f"summary {k}: {v}")
    return EXIT_OK


def cmd_oracle(run: _Run) -> int:
    G = run.load(run.args.path)
    budget = oracle.OracleBudget(max_vertices=run.args.max_vertices)
    what = run.args.what
    if what == "gamma":
        size, w = oracle.min_dominating_exact(G, budget)
        res = {"gamma": size, "witness": sorted(w)}
    elif what == "beta":
        size, w = oracle.min_face_hitting_exact(G, budget)
        res = {"beta": size, "witness": sorted(w)}
    elif what == "mis":
        w = oracle.max_independent_exact(G, budget)
        res = {"alpha_size": len(w), "witness": sorted(w)}
    else:
        c = oracle.exists_dp_two_coloring(G, run.args.three_plus, budget)
        res = {"coloring": None if c is None else
               {"V1": sorted(v for v in c if c[v] is Side.A),
                "V2": sorted(v for v in c if c[v] is Side.B)}}
    run.manifest.result = res
    print(json.dumps(res, sort_keys=True))
    return EXIT_OK


GEN_KINDS = ("triangulation", "theorem", "edges", "paths", "cycles", "doubled-k4",
             "loop-gadget", "k4", "octahedron", "icosahedron", "kleetope")


def cmd_gen(run: _Run) -> int:
    a = run.args
    k = a.kind
    if k == "triangulation":
        G = generators.stacked_triangulation(a.n, a.seed)
    elif k == "theorem":
        G = generators.random_theorem_instance(a.n, a.seed)
    elif k in ("edges", "paths", "cycles"):
        G = generators.disjoint_family(k, a.k)
    elif k == "doubled-k4":
        G = generators.doubled_k4_family(a.k)
    elif k == "loop-gadget":
        G = generators.loop_gadget()
    elif k == "kleetope":
        G = generators.kleetope(generators.stacked_triangulation(a.n, a.seed))
    else:
        G = {"k4": generators.k4, "octahedron": generators.octahedron,
             "icosahedron": generators.icosahedron}[k]()
    run.manifest.seeds = [a.seed]
    run.manifest.result = {"kind": k, "n": G.n, "m": G.m}
    _out(dumps(G), a.output)
    return EXIT_OK


def cmd_render(run: _Run) -> int:
    G = run.load(run.args.path)
    fill = None
    if not run.args.plain:
        try:
            col = theorem_coloring(G)
            fill = {v: ("lightblue" if s is Side.A else "salmon") for v, s in col.items()}
        except PreconditionViolated as exc:
            log.warning("no colouring drawn: %s", exc)
    run.manifest.result = {"colored": fill is not None}
    _out(to_dot(G, fill), run.args.dot)
    return EXIT_OK


def cmd_augment(run: _Run) -> int:
    G = run.load(run.args.path)
    A = augment(G)
    run.manifest.result = {"dummies": len(A.dummy_edges), "unhappy": A.unhappy_vertices}
    _out(A.to_plg(), run.args.output)
    print(f"dummy edges: {len(A.dummy_edges)}; unhappy: {_fmt(A.unhappy_vertices) or '-'}",
          file=sys.stderr)
    return EXIT_OK


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="facehit", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"facehit {__version__}")
    p.add_argument("--manifest", help="write the run manifest JSON here")
    p.add_argument("--log-level", default="WARNING")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", help="check a PLG file")
    s.add_argument("path")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("color", help="two classes, each dominating and face-hitting")
    s.add_argument("path")
    s.add_argument("--check", action="store_true", help="cross-check with the oracle (n <= 20)")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_color)

    s = sub.add_parser("dominate", help="dominating set of a plane triangulation")
    s.add_argument("path")
    s.add_argument("--mis", default="best",
                   choices=["best", "exact", *triangulation.STRATEGIES])
    s.add_argument("--exact", action="store_true", help="also compute gamma (n <= 20)")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_dominate)

    s = sub.add_parser("bench", help="corollary pipeline over random triangulations")
    s.add_argument("--count", type=int, default=10)
    s.add_argument("--n", type=int, default=30)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--exact", action="store_true")
    s.add_argument("--csv", help="write rows here instead of stdout")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("oracle", help="exact answers for small graphs")
    s.add_argument("path")
    s.add_argument("--what", choices=["gamma", "beta", "coloring", "mis"], default="gamma")
    s.add_argument("--three-plus", action="store_true",
                   help="coloring: only faces of length >= 3 must be bichromatic")
    s.add_argument("--max-vertices", type=int, default=20)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("gen", help="write a generated instance as PLG")
    s.add_argument("kind", choices=GEN_KINDS)
    s.add_argument("--n", type=int, default=10)
    s.add_argument("--k", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("render", help="Graphviz DOT with colour classes as fills")
    s.add_argument("path")
    s.add_argument("--dot", default="-", help="output path (default stdout)")
    s.add_argument("--plain", action="store_true", help="skip the colouring")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("augment", help="write the augmented graph with edge kinds")
    s.add_argument("path")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_augment)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=args.log_level.upper(), format="%(levelname)s %(name)s: %(message)s")
    run = _Run(args)
    t0 = time.perf_counter()
    try:
        code = args.func(run)
    except ParseError as exc:
        print(f"error: parse: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    except InvalidEmbedding as exc:
        print(f"error: invalid embedding: {exc}", file=sys.stderr)
        code = EXIT_INVALID
    except PreconditionViolated as exc:
        print(f"error: precondition violated ({exc.reason}): {exc}", file=sys.stderr)
        code = EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"error: budget exceeded: {exc}", file=sys.stderr)
        code = EXIT_BUDGET
    except FacehitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        code = EXIT_PARSE
    run.manifest.elapsed_s = round(time.perf_counter() - t0, 6)
    run.manifest.exit_code = code
    text = json.dumps(asdict(run.manifest), sort_keys=True, default=str)
    if args.manifest:
        Path(args.manifest).write_text(text + "\n")
    else:
        print(text, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
