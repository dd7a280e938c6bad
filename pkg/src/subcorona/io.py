"""Text and JSON formats for graphs, plus the ``name:params`` family shorthand."""

from __future__ import annotations

import json
from pathlib import Path

from .errors import SpectraError
from .graph import FAMILIES, Graph, make_family


def format_edgelist(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def parse_edgelist(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise SpectraError("PARSE_ERROR", "first line must be 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError as exc:
        raise SpectraError("PARSE_ERROR", str(exc)) from None
    if len(pairs) != m:
        raise SpectraError("PARSE_ERROR", f"header says {m} edges, found {len(pairs)}")
    return Graph.from_edges(n, pairs)


def graph_to_json(g: Graph) -> dict:
    return {"n": g.n, "edges": [list(e) for e in g.edges]}


def graph_from_json(data: dict) -> Graph:
    try:
        return Graph.from_edges(int(data["n"]), data["edges"])
    except (KeyError, TypeError) as exc:
        raise SpectraError("PARSE_ERROR", f"bad graph JSON: {exc}") from None


def parse_family(text: str) -> Graph:
    """``complete:5``, ``complete_bipartite:3,3``, ``complement_of:path:4`` ..."""
    name, _, rest = text.partition(":")
    if name == "complement_of":
        return make_family("complement_of", parse_graph_arg(rest))
    if name not in FAMILIES:
        raise SpectraError("PARSE_ERROR", f"unknown family {name!r}")
    try:
        params = [int(p) for p in rest.split(",") if p.strip()]
    except ValueError:
        raise SpectraError("PARSE_ERROR", f"bad parameters in {text!r}") from None
    return make_family(name, params)


def parse_graph_arg(text: str) -> Graph:
    """A family shorthand or a path to an edge-list / JSON file."""
    head = text.split(":", 1)[0]
    if head in FAMILIES or head == "complement_of":
        return parse_family(text)
    path = Path(text)
    if not path.exists():
        raise SpectraError("PARSE_ERROR", f"{text!r} is neither a family nor a file")
    body = path.read_text()
    if body.lstrip().startswith("{"):
        return graph_from_json(json.loads(body))
    return parse_edgelist(body)
