"""graph6 encoding (short form only, up to 62 vertices)."""

from __future__ import annotations

from .graph import Graph, GraphError

MAX_SHORT_N = 62
_HEADER = ">>graph6<<"


class Graph6Error(GraphError):
    pass


def g6_encode(g: Graph) -> str:
    n = g.n
    if n > MAX_SHORT_N:
        raise Graph6Error(f"short graph6 form supports at most {MAX_SHORT_N} vertices")
    out = [chr(n + 63)]
    acc = nbits = 0
    adj = g.adj
    for j in range(1, n):
        row = adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def g6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise Graph6Error("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside graph6 range 63..126")
    n = ord(s[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 headers (n > 62) are not supported")
    if n == 0:
        raise Graph6Error("graph6 string encodes an empty graph; at least one vertex is required")
    nbits = n * (n - 1) // 2
    payload = s[1:]
    need = -(-nbits // 6)
    if len(payload) < need:
        raise Graph6Error(f"truncated payload: expected {need} bytes, got {len(payload)}")
    if len(payload) > need:
        raise Graph6Error(f"trailing data: expected {need} payload bytes, got {len(payload)}")
    value = 0
    for ch in payload:
        value = value << 6 | (ord(ch) - 63)
    pad = need * 6 - nbits
    if value & ((1 << pad) - 1):
        raise Graph6Error("non-zero padding bits")
    value >>= pad
    adj = [0] * n
    pos = nbits - 1
    for j in range(1, n):
        for i in range(j):
            if value >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(adj))
