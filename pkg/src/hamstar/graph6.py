"""graph6 encoding and decoding.

Layout: a size prefix, then the upper triangle of the adjacency matrix in
column order (0,1), (0,2), (1,2), (0,3), ... packed big-endian into 6-bit
groups.  Every byte is its 6-bit value plus 63.
"""
from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from .errors import Graph6Error
from .graph import MAX_VERTICES, Graph


def _size_bytes(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    return bytes([126, (n >> 12 & 63) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])


def to_graph6(g: Graph) -> str:
    out = bytearray(_size_bytes(g.n))
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return out.decode("ascii")


def parse_graph6(text: str | bytes, line: int | None = None) -> Graph:
    if isinstance(text, str):
        try:
            data = text.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error("non-ASCII character", offset=exc.start, line=line) from None
    else:
        data = bytes(text)
    data = data.rstrip(b"\r\n")
    if data.startswith(b">>graph6<<"):
        data = data[10:]
    if not data:
        raise Graph6Error("empty input", offset=0, line=line)
    for pos, byte in enumerate(data):
        if not 63 <= byte <= 126:
            raise Graph6Error(f"byte {byte!r} is outside the printable range 63..126", offset=pos, line=line)

    if data[0] != 126:
        n, start = data[0] - 63, 1
    else:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("8-byte size prefix is not supported (n > 258047)", offset=1, line=line)
        if len(data) < 4:
            raise Graph6Error("truncated size prefix", offset=len(data), line=line)
        n = (data[1] - 63) << 12 | (data[2] - 63) << 6 | (data[3] - 63)
        start = 4
        if n <= 62:
            raise Graph6Error(f"n={n} must use the short size prefix", offset=0, line=line)
    if n > MAX_VERTICES:
        raise Graph6Error(f"n={n} exceeds the {MAX_VERTICES}-vertex limit", offset=0, line=line)

    nbits = n * (n - 1) // 2
    expected = start + (nbits + 5) // 6
    if len(data) != expected:
        off = min(len(data), expected)
        raise Graph6Error(f"expected {expected} bytes for n={n}, got {len(data)}", offset=off, line=line)

    rows = [0] * n
    k = 0
    i, j = 0, 1
    for pos in range(start, expected):
        value = data[pos] - 63
        for shift in range(5, -1, -1):
            if k == nbits:
                if value & ((1 << (shift + 1)) - 1):
                    raise Graph6Error("nonzero padding bits", offset=pos, line=line)
                break
            if value >> shift & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
            i += 1
            if i == j:
                i, j = 0, j + 1
    return Graph(n, tuple(rows))


def read_graph6(lines: Iterable[str] | TextIO) -> Iterator[Graph]:
    """Parse one graph per nonblank line; errors carry 1-based line numbers."""
    for number, text in enumerate(lines, start=1):
        if not text.strip():
            continue
        yield parse_graph6(text.strip(), line=number)
