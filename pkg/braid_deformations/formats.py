"""
Text and JSON forms of digraphs and signed graphs.

Digraph text format:

    # optional comments
    n 3
    0 1
    1 2

The first non-comment line is `n <count>`, followed by one `i j` line per arc.
The JSON form is the model dump: `{"n": 3, "edges": [[0, 1], [1, 2]]}`.

Signed graph text format: `n <count>`, then `i j +` or `i j -` per edge.
"""

from pathlib import Path
from typing import Union

from pydantic import ValidationError

from .errors import InputError
from .objects import Digraph, SignedGraph


def _content_lines(text: str) -> list[list[str]]:
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line.split())
    return lines


def _parse_header(lines: list[list[str]]) -> int:
    if not lines or len(lines[0]) != 2 or lines[0][0] != "n":
        raise InputError("Expected a header line `n <count>`")
    try:
        return int(lines[0][1])
    except ValueError:
        raise InputError(f"Vertex count {lines[0][1]!r} is not an integer") from None


def parse_digraph_text(text: str) -> Digraph:
    lines = _content_lines(text)
    n = _parse_header(lines)
    arcs = []
    for fields in lines[1:]:
        if len(fields) != 2:
            raise InputError(f"Expected an arc line `i j`, got {' '.join(fields)!r}")
        try:
            arcs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise InputError(f"Arc {' '.join(fields)!r} has non-integer labels") from None
    try:
        return Digraph.new(n, arcs)
    except ValidationError as e:
        raise InputError(str(e)) from e


def format_digraph_text(g: Digraph) -> str:
    return "\n".join([f"n {g.n}", *(f"{i} {j}" for i, j in sorted(g.edges))])


def parse_digraph_json(text: str) -> Digraph:
    try:
        return Digraph.model_validate_json(text)
    except ValidationError as e:
        raise InputError(str(e)) from e


def load_digraph(source: Union[str, Path]) -> Digraph:
    """Read a digraph from a file (text or JSON) or from an inline JSON string."""
    if isinstance(source, str) and source.lstrip().startswith("{"):
        return parse_digraph_json(source)
    path = Path(source)
    try:
        text = path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise InputError(f"No such file: {path}") from None
    except UnicodeDecodeError as e:
        raise InputError(f"{path} is not valid UTF-8: {e.reason} at byte {e.start}") from None
    except OSError as e:
        raise InputError(f"Cannot read {path}: {e.strerror or e}") from None
    if text.lstrip().startswith("{"):
        return parse_digraph_json(text)
    return parse_digraph_text(text)


def format_signed_graph_text(sg: SignedGraph) -> str:
    edges = sorted([(i, j, "+") for i, j in sg.plus] + [(i, j, "-") for i, j in sg.minus])
    return "\n".join([f"n {sg.n}", *(f"{i} {j} {s}" for i, j, s in edges)])


def parse_signed_graph_text(text: str) -> SignedGraph:
    lines = _content_lines(text)
    n = _parse_header(lines)
    plus, minus = [], []
    for fields in lines[1:]:
        if len(fields) != 3 or fields[2] not in ("+", "-"):
            raise InputError(f"Expected an edge line `i j +|-`, got {' '.join(fields)!r}")
        try:
            pair = (int(fields[0]), int(fields[1]))
        except ValueError:
            raise InputError(f"Edge {' '.join(fields)!r} has non-integer labels") from None
        (plus if fields[2] == "+" else minus).append(pair)
    try:
        return SignedGraph.new(n, plus=plus, minus=minus)
    except ValidationError as e:
        raise InputError(str(e)) from e


__all__ = [
    "parse_digraph_text",
    "format_digraph_text",
    "parse_digraph_json",
    "load_digraph",
    "format_signed_graph_text",
    "parse_signed_graph_text",
]
