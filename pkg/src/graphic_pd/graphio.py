"""Graph input/output: edge-list text, graph6, DOT."""

from __future__ import annotations

from .graphs import Graph, GraphError


class GraphParseError(ValueError):
    def __init__(self, message, line=None, column=None):
        loc = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(loc + message)
        self.line = line
        self.column = column


def parse_edge_list(text: str, n=None) -> Graph:
    """Parse "u v" lines (1-indexed); '#' starts a comment.

    A line holding a single integer declares the vertex count, which is
    otherwise the largest vertex label seen (or ``n``).
    """
    edges = []
    declared = n
    maxv = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        parts = line.split()
        cols = []
        col = 0
        for p in parts:
            col = raw.index(p, col)
            cols.append(col + 1)
            col += len(p)
        for p, c in zip(parts, cols):
            if not p.isdigit():
                raise GraphParseError(f"expected a positive integer, got {p!r}", lineno, c)
        if len(parts) == 1:
            if declared is not None and declared != int(parts[0]) and n is None:
                raise GraphParseError("vertex count declared twice", lineno, cols[0])
            declared = int(parts[0])
            continue
        if len(parts) != 2:
            raise GraphParseError(f"expected two vertices, got {len(parts)} fields", lineno, cols[2])
        u, v = int(parts[0]), int(parts[1])
        if u == 0 or v == 0:
            raise GraphParseError("vertices are numbered from 1", lineno, cols[0 if u == 0 else 1])
        if u == v:
            raise GraphParseError(f"self-loop at vertex {u}", lineno, cols[0])
        edges.append((u, v))
        maxv = max(maxv, u, v)
    nv = declared if declared is not None else maxv
    if maxv > nv:
        raise GraphParseError(f"vertex {maxv} exceeds declared count {nv}")
    return Graph.from_edges(nv, edges)


def to_edge_list(G: Graph) -> str:
    lines = [f"# n={G.n} m={len(G.edges)}", str(G.n)]
    lines += [f"{u} {v}" for u, v in G.sorted_edges()]
    return "\n".join(lines) + "\n"


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise GraphError("graph too large for graph6")


def to_graph6(G: Graph) -> str:
    bits = []
    for j in range(2, G.n + 1):
        for i in range(1, j):
            bits.append(1 if (i, j) in G.edges else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return _encode_n(G.n) + "".join(chars)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise GraphParseError("empty graph6 string", 1, 1)
    for col, ch in enumerate(s, start=1):
        if not 63 <= ord(ch) <= 126:
            raise GraphParseError(f"invalid graph6 character {ch!r}", 1, col)
    data = [ord(c) - 63 for c in s]
    if data[0] < 63:
        n, body = data[0], data[1:]
    elif len(data) >= 4 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise GraphParseError("unsupported graph6 size header", 1, 1)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphParseError(f"expected {need} data bytes for n={n}, got {len(body)}", 1, len(s) - len(body) + 1)
    bits = []
    for v in body:
        bits.extend((v >> s_) & 1 for s_ in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(2, n + 1):
        for i in range(1, j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    if any(bits[k:]):
        raise GraphParseError("non-zero padding bits", 1, len(s))
    return Graph.from_edges(n, edges)


def to_dot(G: Graph, name="G") -> str:
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in G.vertices]
    lines += [f"  {u} -- {v};" for u, v in G.sorted_edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
