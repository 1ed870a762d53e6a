"""graph6 text encoding (short form, n <= 62)."""

from __future__ import annotations

from .graphs import Graph, GraphError


class Graph6Error(GraphError):
    """Malformed graph6 input."""


MAX_G6_N = 62


def write_graph6(g: Graph) -> str:
    """Encode a graph in short-form graph6."""
    if g.n > MAX_G6_N:
        raise Graph6Error(f"short-form graph6 handles n <= {MAX_G6_N}, got {g.n}")
    out = [chr(g.n + 63)]
    bits = 0
    nbits = 0
    for v in range(1, g.n):
        for u in range(v):
            bits = bits << 1 | (1 if g.has_edge(u, v) else 0)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = 0
                nbits = 0
    if nbits:
        bits <<= 6 - nbits
        out.append(chr(bits + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string; strict about length and padding."""
    s = text.strip()
    if not s:
        raise Graph6Error("empty graph6 string")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    for i, ch in enumerate(s):
        if not (63 <= ord(ch) <= 126):
            raise Graph6Error(f"byte {ord(ch)} at position {i} outside graph6 range")
    n = ord(s[0]) - 63
    if n > MAX_G6_N:
        raise Graph6Error("long-form graph6 (n > 62) is not supported")
    npairs = n * (n - 1) // 2
    expect = 1 + (npairs + 5) // 6
    if len(s) != expect:
        raise Graph6Error(
            f"graph6 string for n={n} must be {expect} chars, got {len(s)}"
        )
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            char = ord(s[1 + idx // 6]) - 63
            if char >> (5 - idx % 6) & 1:
                edges.append((u, v))
            idx += 1
    # padding bits beyond the pair count must be zero
    if npairs % 6:
        last = ord(s[-1]) - 63
        pad = 6 - npairs % 6
        if last & ((1 << pad) - 1):
            raise Graph6Error("nonzero trailing padding bits")
    return Graph.from_edges(n, edges)
