#!/usr/bin/env python3
"""Reference graph6 encoder used to generate test fixtures.

Implements the published graph6 format directly: one byte N(n) = 63 + n for
n <= 62 (the fixtures only need n <= 5), followed by the upper triangle of
the adjacency matrix in column-major order (x_{0,1}, x_{0,2}, x_{1,2},
x_{0,3}, ...), packed big-endian into 6-bit groups, each group printed as
its value + 63, zero-padded at the end.

Fixture line format:
    n <edge-mask-hex> <graph6>
where bit t of the edge mask corresponds to the t-th pair (u, v), u < v, in
lexicographic order ((0,1), (0,2), ..., (0,n-1), (1,2), ...).
"""

import sys


def encode(n, edges):
    adj = [[False] * n for _ in range(n)]
    for (u, v) in edges:
        adj[u][v] = adj[v][u] = True
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if adj[i][j] else 0)
    while len(bits) % 6 != 0:
        bits.append(0)
    out = [chr(63 + n)]
    for k in range(0, len(bits), 6):
        group = 0
        for b in bits[k:k + 6]:
            group = (group << 1) | b
        out.append(chr(63 + group))
    return "".join(out)


def pairs(n):
    return [(u, v) for u in range(n) for v in range(u + 1, n)]


def main():
    # Anchors with independently known encodings.
    assert encode(1, []) == "@"
    assert encode(3, [(0, 1), (0, 2), (1, 2)]) == "Bw"
    assert encode(3, [(0, 1), (1, 2)]) == "Bg"
    assert encode(4, pairs(4)) == "C~"
    assert encode(5, [(0, 2), (0, 4), (1, 3), (3, 4)]) == "DQc"

    lines = []
    for n in range(1, 6):
        ps = pairs(n)
        for mask in range(1 << len(ps)):
            edges = [ps[t] for t in range(len(ps)) if mask >> t & 1]
            lines.append(f"{n} {mask:x} {encode(n, edges)}")
    sys.stdout.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main()
