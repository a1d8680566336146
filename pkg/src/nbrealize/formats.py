"""graph6 and JSON edge-list serialization.

graph6 follows McKay's format: N(n) followed by the upper triangle of the
adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
packed six bits per printable character. A file holds one graph per line
and may start with the optional ``>>graph6<<`` header.
"""

from __future__ import annotations

import json
import os
import tempfile
from collections.abc import Iterable
from pathlib import Path

from .errors import InputError
from .graph import Graph

HEADER = ">>graph6<<"


def _encode_n(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [(n >> s & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise InputError(f"graph too large for graph6: n={n}")


def _decode_n(data: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed)."""
    if not data:
        raise InputError("empty graph6 string")
    if not 63 <= data[0] <= 126:
        raise InputError(f"invalid graph6 size character {chr(data[0])!r}")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        digits, start = data[2:8], 2
    else:
        digits, start = data[1:4], 1
    if len(digits) != (6 if start == 2 else 3):
        raise InputError("truncated graph6 size field")
    n = 0
    for c in digits:
        if not 63 <= c <= 126:
            raise InputError(f"invalid graph6 character {chr(c)!r}")
        n = n << 6 | (c - 63)
    return n, start + len(digits)


def pack_bits(n: int, bits: int) -> bytes:
    """graph6 body from an integer holding the n(n-1)/2 triangle bits, first bit most significant."""
    total = n * (n - 1) // 2
    pad = -total % 6
    bits <<= pad
    nchars = (total + pad) // 6
    return bytes((bits >> (6 * (nchars - 1 - i)) & 63) + 63 for i in range(nchars))


def to_graph6_bytes(G: Graph) -> bytes:
    bits = 0
    for j in range(1, G.n):
        row = G.adj[j]
        for i in range(j):
            bits = bits << 1 | (row >> i & 1)
    return _encode_n(G.n) + pack_bits(G.n, bits)


def to_graph6(G: Graph) -> str:
    return to_graph6_bytes(G).decode("ascii")


def from_graph6(line: str | bytes) -> Graph:
    data = line.encode("ascii") if isinstance(line, str) else bytes(line)
    data = data.strip()
    if data.startswith(HEADER.encode()):
        data = data[len(HEADER):]
    if data.startswith(b":") or data.startswith(b";") or data.startswith(b"&"):
        raise InputError("sparse6/digraph6 input is not supported; expected graph6")
    n, off = _decode_n(data)
    body = data[off:]
    total = n * (n - 1) // 2
    need = (total + 5) // 6
    if len(body) != need:
        raise InputError(f"graph6 body has {len(body)} chars, expected {need} for n={n}")
    bits = 0
    for c in body:
        if not 63 <= c <= 126:
            raise InputError(f"invalid graph6 character {chr(c)!r}")
        bits = bits << 6 | (c - 63)
    pad = need * 6 - total
    if bits & ((1 << pad) - 1):
        raise InputError("graph6 padding bits are not zero")
    bits >>= pad
    rows = [0] * n
    k = total - 1
    for j in range(1, n):
        for i in range(j):
            if bits >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k -= 1
    return Graph._trusted(n, rows)


def parse_graph6_lines(text: str) -> list[Graph]:
    graphs = []
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if line.startswith(HEADER):
            line = line[len(HEADER):]
        if not line:
            continue
        try:
            graphs.append(from_graph6(line))
        except (InputError, UnicodeEncodeError) as exc:
            raise InputError(f"line {lineno}: {exc}") from None
    return graphs


def to_json_obj(G: Graph) -> dict:
    return {"n": G.n, "edges": [list(e) for e in G.edges()]}


def from_json_obj(obj) -> Graph:
    if not isinstance(obj, dict) or "n" not in obj:
        raise InputError('JSON graph must be an object with "n" and "edges"')
    n = obj["n"]
    edges = obj.get("edges", [])
    if not isinstance(n, int) or isinstance(n, bool):
        raise InputError('"n" must be an integer')
    if not isinstance(edges, list) or any(
        not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, int) for x in e)
        for e in edges
    ):
        raise InputError('"edges" must be a list of [u, v] integer pairs')
    return Graph.from_edges(n, edges)


def parse_json(text: str) -> list[Graph]:
    """A single graph object or a list of them."""
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON: {exc}") from None
    if isinstance(obj, list):
        return [from_json_obj(o) for o in obj]
    return [from_json_obj(obj)]


def dumps(graphs: Iterable[Graph], fmt: str = "g6") -> str:
    graphs = list(graphs)
    if fmt == "g6":
        return "".join(to_graph6(g) + "\n" for g in graphs)
    if fmt == "json":
        objs = [to_json_obj(g) for g in graphs]
        return json.dumps(objs[0] if len(objs) == 1 else objs) + "\n"
    raise InputError(f"unknown format {fmt!r}")


def loads(text: str, fmt: str | None = None) -> list[Graph]:
    """Parse graphs; ``fmt=None`` sniffs JSON by its leading bracket."""
    if fmt is None:
        fmt = "json" if text.lstrip()[:1] in ("{", "[") else "g6"
    if fmt == "json":
        return parse_json(text)
    if fmt == "g6":
        return parse_graph6_lines(text)
    raise InputError(f"unknown format {fmt!r}")


def read_graphs(path: str | os.PathLike, fmt: str | None = None) -> list[Graph]:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return loads(text, fmt)


def write_atomic(path: str | os.PathLike, text: str) -> None:
    """Write via a temporary file in the target directory, then rename over."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=f".{path.name}.", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except FileNotFoundError:
            pass
        raise


def write_graphs(path: str | os.PathLike, graphs: Iterable[Graph], fmt: str = "g6") -> None:
    write_atomic(path, dumps(graphs, fmt))
