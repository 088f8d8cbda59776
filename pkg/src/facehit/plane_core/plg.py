"""PLG text format.

::

    plg 1
    v 0
    v 1
    v 2
    e 0 0 1
    e 1 1 2
    e 2 2 0
    rot 0 0+ 2-
    rot 1 1+ 0-
    rot 2 2+ 1-
    anchor 0 root

``e <id> <u> <v>`` declares an edge whose ``<id>+`` dart leaves ``u``.
``anchor <c> root`` or ``anchor <c> in <p> <f>`` places component ``c``;
an optional trailing ``outer <k>`` names which of its local faces faces
outward (default 0).  Augmented graphs add ``kind <id> true|dummy`` lines.
Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from .graph import ROOT, PlaneMultigraph, dart_name
from ..errors import ParseError


def _int(tok: str, lineno: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"line {lineno}: expected integer {what}, got {tok!r}") from None


def _dart(tok: str, lineno: int) -> int:
    if len(tok) < 2 or tok[-1] not in "+-":
        raise ParseError(f"line {lineno}: bad dart {tok!r} (want <edge>+ or <edge>-)")
    e = _int(tok[:-1], lineno, "edge id")
    if e < 0:
        raise ParseError(f"line {lineno}: negative edge id in {tok!r}")
    return 2 * e + (tok[-1] == "-")


def parse(text: str):
    """Parse PLG text into raw parts.

    Returns ``(vertices, edges, rotation, anchors, outer, kinds)``; no
    embedding validation is done here.
    """
    lines = text.splitlines()
    body = []
    for i, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            body.append((i, line.split()))
    if not body or body[0][1] != ["plg", "1"]:
        raise ParseError("first line must be 'plg 1'")

    vertices: list[int] = []
    vseen: set[int] = set()
    edges: dict[int, tuple[int, int]] = {}
    rotation: dict[int, list[int]] = {}
    anchors: dict = {}
    outer: dict[int, int] = {}
    kinds: dict[int, str] = {}
    for lineno, tok in body[1:]:
        kw, args = tok[0], tok[1:]
        if kw == "v":
            if len(args) != 1:
                raise ParseError(f"line {lineno}: 'v' takes one id")
            v = _int(args[0], lineno, "vertex id")
            if v in vseen:
                raise ParseError(f"line {lineno}: vertex {v} declared twice")
            vseen.add(v)
            vertices.append(v)
        elif kw == "e":
            if len(args) != 3:
                raise ParseError(f"line {lineno}: 'e' takes <edge-id> <u> <v>")
            e, u, w = (_int(a, lineno, "id") for a in args)
            if e < 0:
                raise ParseError(f"line {lineno}: negative edge id")
            if e in edges:
                raise ParseError(f"line {lineno}: edge {e} declared twice")
            for x in (u, w):
                if x not in vseen:
                    raise ParseError(f"line {lineno}: edge {e} uses undeclared vertex {x}")
            edges[e] = (u, w)
        elif kw == "rot":
            if not args:
                raise ParseError(f"line {lineno}: 'rot' needs a vertex")
            v = _int(args[0], lineno, "vertex id")
            if v in rotation:
                raise ParseError(f"line {lineno}: second rotation for vertex {v}")
            rotation[v] = [_dart(a, lineno) for a in args[1:]]
        elif kw == "anchor":
            rest = list(args)
            out = None
            if len(rest) >= 2 and rest[-2] == "outer":
                out = _int(rest[-1], lineno, "outer face index")
                rest = rest[:-2]
            if len(rest) == 2 and rest[1] == "root":
                c = _int(rest[0], lineno, "component index")
                target = ROOT
            elif len(rest) == 4 and rest[1] == "in":
                c = _int(rest[0], lineno, "component index")
                target = (_int(rest[2], lineno, "component index"),
                          _int(rest[3], lineno, "local face index"))
            else:
                raise ParseError(f"line {lineno}: malformed anchor line")
            if c in anchors:
                raise ParseError(f"line {lineno}: component {c} anchored twice")
            anchors[c] = target
            if out is not None:
                outer[c] = out
        elif kw == "kind":
            if len(args) != 2 or args[1] not in ("true", "dummy"):
                raise ParseError(f"line {lineno}: 'kind' takes <edge-id> true|dummy")
            kinds[_int(args[0], lineno, "edge id")] = args[1]
        else:
            raise ParseError(f"line {lineno}: unknown keyword {kw!r}")
    return vertices, edges, rotation, anchors, outer, kinds


def loads(text: str) -> PlaneMultigraph:
    vertices, edges, rotation, anchors, outer, _ = parse(text)
    return PlaneMultigraph(vertices, edges, rotation, anchors, outer)


def build_graph(spec: str) -> PlaneMultigraph:
    """Parse and validate PLG text (alias of :func:`loads`)."""
    return loads(spec)


def dumps(G: PlaneMultigraph, kinds: dict[int, str] | None = None) -> str:
    out = ["plg 1"]
    out += [f"v {v}" for v in G.vertices]
    out += [f"e {e} {u} {w}" for e, (u, w) in G.edges.items()]
    for v in G.vertices:
        rot = G.rotation[v]
        if rot:
            out.append(f"rot {v} " + " ".join(dart_name(d) for d in rot))
    for c in range(len(G.components)):
        a = G.anchors[c]
        line = f"anchor {c} root" if a is ROOT else f"anchor {c} in {a[0]} {a[1]}"
        if G.outer[c]:
            line += f" outer {G.outer[c]}"
        out.append(line)
    if kinds:
        out += [f"kind {e} {kinds[e]}" for e in G.edges]
    return "\n".join(out) + "\n"


def to_dot(G: PlaneMultigraph, fill: dict[int, str] | None = None) -> str:
    """Graphviz text of the abstract multigraph (no embedding data)."""
    out = ["graph G {"]
    for v in G.vertices:
        if fill and v in fill:
            out.append(f'  {v} [style=filled, fillcolor="{fill[v]}"];')
        else:
            out.append(f"  {v};")
    for e, (u, w) in G.edges.items():
        out.append(f'  {u} -- {w} [label="{e}"];')
    out.append("}")
    return "\n".join(out) + "\n"
