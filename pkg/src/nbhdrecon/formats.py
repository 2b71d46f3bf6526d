"""Serialization: graph6, DOT export, and the JSON graph/family formats.

graph6 follows the standard printable encoding for undirected graphs on at
most 62 vertices: one size byte (n + 63), then the upper triangle of the
adjacency matrix read column by column, packed big-endian into 6-bit groups,
each offset by 63.

The JSON set-family format is ``{"universe": n, "sets": [[...], ...]}`` with
each set a sorted integer array; canonical output orders the sets by (size,
lexicographic), which keeps serialized families diff-stable.  Multisets use
the same shape with repeated arrays.  Graphs serialize as
``{"n": ..., "labels": [...], "adjacency": [[...], ...]}``.
"""

from __future__ import annotations

import json

from .errors import FormatError, InputError
from .families import NeighborhoodMultiset, SetFamily
from .graphs import Graph, mask_members

GRAPH6_MAX_VERTICES = 62
GRAPH6_HEADER = ">>graph6<<"


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (labels are not preserved)."""
    n = g.n
    if n > GRAPH6_MAX_VERTICES:
        raise InputError(
            f"graph6 supports at most {GRAPH6_MAX_VERTICES} vertices, got {n}")
    out = [chr(n + 63)]
    buf = 0
    filled = 0
    for col in range(1, n):
        for row in range(col):
            buf = (buf << 1) | (1 if g.has_edge(row, col) else 0)
            filled += 1
            if filled == 6:
                out.append(chr(buf + 63))
                buf = 0
                filled = 0
    if filled:
        buf <<= 6 - filled
        out.append(chr(buf + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header allowed)."""
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise FormatError("empty graph6 input")
    first = ord(s[0])
    if first == 126:
        raise FormatError("graph6 long-size encodings (>62 vertices) are not supported",
                          position=0)
    n = first - 63
    if not 1 <= n <= GRAPH6_MAX_VERTICES:
        raise FormatError(f"invalid graph6 size byte {s[0]!r}", position=0)
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = s[1:]
    if len(body) != need_bytes:
        raise FormatError(
            f"graph6 body for n={n} needs {need_bytes} bytes, got {len(body)}",
            position=1 + min(len(body), need_bytes))
    bits = []
    for i, ch in enumerate(body):
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise FormatError(f"invalid graph6 byte {ch!r}", position=1 + i)
        bits.extend((val >> (5 - b)) & 1 for b in range(6))
    if any(bits[need_bits:]):
        raise FormatError("nonzero padding bits in graph6 body", position=len(s) - 1)
    edges = []
    k = 0
    for col in range(1, n):
        for row in range(col):
            if bits[k]:
                edges.append((row, col))
            k += 1
    return Graph(n, edges)


def to_dot(g: Graph, name: str = "g") -> str:
    """GraphViz DOT text; isolated vertices get bare node statements."""
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if g.degree(v) == 0]
    for v in isolated:
        lines.append(f'  "{g.labels[v]}";')
    for u, v in g.edges():
        lines.append(f'  "{g.labels[u]}" -- "{g.labels[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# JSON graph format
# ---------------------------------------------------------------------------


def graph_to_json_dict(g: Graph) -> dict:
    return {
        "n": g.n,
        "labels": list(g.labels),
        "adjacency": [sorted(mask_members(g.adjacency_mask(v))) for v in range(g.n)],
    }


def graph_from_json_dict(obj: dict) -> Graph:
    if not isinstance(obj, dict):
        raise FormatError(f"expected a JSON object for a graph, got {type(obj).__name__}")
    if "n" not in obj:
        raise FormatError('graph JSON needs an "n" field')
    n = obj["n"]
    if not isinstance(n, int):
        raise FormatError('"n" must be an integer')
    labels = obj.get("labels")
    if "adjacency" in obj:
        adjacency = obj["adjacency"]
        if not isinstance(adjacency, list) or len(adjacency) != n:
            raise FormatError(f'"adjacency" must list neighbors for all {n} vertices')
        masks = [0] * n
        for u, nbrs in enumerate(adjacency):
            if not isinstance(nbrs, list):
                raise FormatError(f"adjacency entry for vertex {u} is not an array")
            for v in nbrs:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise FormatError(f"neighbor {v!r} of vertex {u} out of range")
                masks[u] |= 1 << v
        try:
            return Graph.from_adjacency_masks(masks, labels)
        except InputError as exc:
            raise FormatError(str(exc)) from exc
    if "edges" in obj:
        edges = []
        for pair in obj["edges"]:
            if (not isinstance(pair, (list, tuple)) or len(pair) != 2
                    or not all(isinstance(x, int) for x in pair)):
                raise FormatError(f"edge {pair!r} is not a pair of integers")
            edges.append((pair[0], pair[1]))
        try:
            return Graph(n, edges, labels)
        except InputError as exc:
            raise FormatError(str(exc)) from exc
    raise FormatError('graph JSON needs an "adjacency" or "edges" field')


# ---------------------------------------------------------------------------
# JSON set-family / multiset format
# ---------------------------------------------------------------------------


def family_to_json_dict(f: SetFamily) -> dict:
    return {"universe": f.universe,
            "sets": [list(mask_members(m)) for m in f.masks]}


def multiset_to_json_dict(m: NeighborhoodMultiset) -> dict:
    return {"universe": m.universe,
            "sets": [list(mask_members(mask)) for mask in m.expanded_masks()]}


def _sets_from_json(obj: dict) -> tuple[int, list[list[int]]]:
    if not isinstance(obj, dict):
        raise FormatError(f"expected a JSON object, got {type(obj).__name__}")
    if "universe" not in obj or "sets" not in obj:
        raise FormatError('set-family JSON needs "universe" and "sets" fields')
    universe = obj["universe"]
    sets = obj["sets"]
    if not isinstance(universe, int) or universe < 0:
        raise FormatError('"universe" must be a non-negative integer')
    if not isinstance(sets, list):
        raise FormatError('"sets" must be an array of integer arrays')
    for i, members in enumerate(sets):
        if not isinstance(members, list) or not all(isinstance(v, int) for v in members):
            raise FormatError(f'set #{i} is not an integer array')
        for v in members:
            if not 0 <= v < universe:
                raise FormatError(f"set #{i} member {v} outside universe {universe}")
    return universe, sets


def family_from_json_dict(obj: dict) -> SetFamily:
    """Parse a set family; repeated sets are deduplicated."""
    universe, sets = _sets_from_json(obj)
    masks = [sum(1 << v for v in members) for members in sets]
    return SetFamily(universe, masks)


def multiset_from_json_dict(obj: dict) -> NeighborhoodMultiset:
    """Parse a multiset; repeated arrays encode multiplicity."""
    universe, sets = _sets_from_json(obj)
    masks = [sum(1 << v for v in members) for members in sets]
    return NeighborhoodMultiset(universe, masks)


def parse_json(text: str):
    """``json.loads`` with position-bearing diagnostics."""
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc.msg}", position=exc.pos) from exc


def dumps_canonical(obj: dict) -> str:
    """Compact single-line JSON with stable key order."""
    return json.dumps(obj, separators=(",", ":"), sort_keys=True)
