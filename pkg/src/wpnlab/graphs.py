"""Labeled simple graphs on at most 64 vertices, stored as per-vertex bitsets.

Everything downstream (family recognizers, witnessing-partition search, the
census) works on these immutable graphs.  Vertex sets are plain Python ints
used as bitmasks, so all set operations are single machine-word ops for the
graph sizes we care about (census n <= 10, cycles up to C14).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

MAX_VERTICES = 64


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of a mask, lowest first."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


@dataclass(frozen=True)
class Graph:
    """Simple labeled graph: vertex count and a tuple of adjacency bitmasks.

    Bit j of adj[i] is set iff ij is an edge.  Invariants (symmetry, no
    loops, no bits at positions >= n) are enforced at construction.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside [0, {MAX_VERTICES}]")
        if len(self.adj) != self.n:
            raise ValueError("adjacency row count does not match n")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond vertex range")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
        for i in range(self.n):
            for j in bits(self.adj[i]):
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"asymmetric adjacency at {i},{j}")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} outside vertex range")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(n, tuple(rows))

    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    # -- basic accessors ---------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def edge_count(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in bits(self.adj[i]) if i < j]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    # -- core operations ---------------------------------------------------

    def complement(self) -> "Graph":
        full = self.vertex_mask()
        return Graph(self.n, tuple((full ^ row ^ (1 << i)) & full
                                   for i, row in enumerate(self.adj)))

    def induced(self, s: int) -> "Graph":
        """Induced subgraph on the vertex bitmask ``s``, relabeled in
        increasing original order."""
        if s & ~self.vertex_mask():
            raise ValueError("vertex set outside graph range")
        verts = list(bits(s))
        pos = {v: i for i, v in enumerate(verts)}
        rows = []
        for v in verts:
            row = 0
            for u in bits(self.adj[v] & s):
                row |= 1 << pos[u]
            rows.append(row)
        return Graph(len(verts), tuple(rows))

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Relabeled copy where old vertex v becomes perm[v]."""
        rows = [0] * self.n
        for v in range(self.n):
            row = 0
            for u in bits(self.adj[v]):
                row |= 1 << perm[u]
            rows[perm[v]] = row
        return Graph(self.n, tuple(rows))

    def disjoint_union(self, other: "Graph") -> "Graph":
        rows = list(self.adj) + [row << self.n for row in other.adj]
        return Graph(self.n + other.n, tuple(rows))

    # -- connectivity ------------------------------------------------------

    def component_masks(self) -> list[int]:
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = self.adj[v] & ~comp
            while frontier:
                comp |= frontier
                nxt = 0
                for u in bits(frontier):
                    nxt |= self.adj[u]
                frontier = nxt & ~comp
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.component_masks()) == 1


# -- standard graphs --------------------------------------------------------


def empty(k: int) -> Graph:
    if k < 0:
        raise ValueError("negative vertex count")
    return Graph(k, (0,) * k)


def clique(k: int) -> Graph:
    if k < 0:
        raise ValueError("negative vertex count")
    full = (1 << k) - 1
    return Graph(k, tuple(full ^ (1 << i) for i in range(k)))


def path(k: int) -> Graph:
    if k < 0:
        raise ValueError("negative vertex count")
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k: int) -> Graph:
    if k < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}; vertex 0 is the center.  star(0) is K1."""
    if leaves < 0:
        raise ValueError("negative leaf count")
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


# -- induced subgraph containment and isomorphism ---------------------------


def contains_induced(g: Graph, h: Graph) -> bool:
    """True iff some vertex subset of g induces a copy of h.

    Backtracking injective map; pattern vertices ordered by decreasing
    degree (ties by index) so dense patterns prune early.
    """
    if h.n == 0:
        return True
    if h.n > g.n:
        return False
    order = sorted(range(h.n), key=lambda v: (-h.degree(v), v))
    hadj = h.adj
    gadj = g.adj
    image = [0] * h.n  # image[i] = g-vertex for pattern vertex order[i]

    def rec(i: int, used: int) -> bool:
        if i == h.n:
            return True
        pv = order[i]
        want = hadj[pv]
        for gv in range(g.n):
            if used >> gv & 1:
                continue
            ok = True
            for j in range(i):
                if (want >> order[j] & 1) != (gadj[gv] >> image[j] & 1):
                    ok = False
                    break
            if ok:
                image[i] = gv
                if rec(i + 1, used | 1 << gv):
                    return True
        return False

    return rec(0, 0)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g).adj == canonical_form(h).adj


# -- canonical form via refinement + individualization -----------------------


def _refine(g: Graph, colors: list[int]) -> list[int]:
    n = g.n
    while True:
        sigs = []
        for v in range(n):
            nb = sorted(colors[u] for u in bits(g.adj[v]))
            sigs.append((colors[v], tuple(nb)))
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [ranking[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _encode(g: Graph, colors: list[int]) -> tuple[int, ...]:
    # colors is discrete: vertex v gets label colors[v]
    rows = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in bits(g.adj[v]):
            row |= 1 << colors[u]
        rows[colors[v]] = row
    return tuple(rows)


def _canon_search(g: Graph) -> tuple[tuple[int, ...], int]:
    """Canonical adjacency rows and |Aut(g)|."""
    n = g.n
    if n == 0:
        return (), 1
    e = g.edge_count()
    if e == 0 or e == n * (n - 1) // 2:
        return g.adj, math.factorial(n)

    best: list[tuple[int, ...] | None] = [None]
    achievers: set[tuple[int, ...]] = set()

    def rec(colors: list[int]) -> None:
        colors = _refine(g, colors)
        cell_of: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cell_of.setdefault(c, []).append(v)
        target = None
        for c in sorted(cell_of):
            if len(cell_of[c]) > 1:
                target = cell_of[c]
                break
        if target is None:
            enc = _encode(g, colors)
            if best[0] is None or enc < best[0]:
                best[0] = enc
                achievers.clear()
                achievers.add(tuple(colors))
            elif enc == best[0]:
                achievers.add(tuple(colors))
            return
        for v in target:
            child = [2 * c for c in colors]
            child[v] -= 1
            rec(child)

    rec([0] * n)
    assert best[0] is not None
    return best[0], len(achievers)


@lru_cache(maxsize=200000)
def _canon_cached(n: int, adj: tuple[int, ...]) -> tuple[tuple[int, ...], int]:
    return _canon_search(Graph(n, adj))


def canonical_form(g: Graph) -> Graph:
    rows, _ = _canon_cached(g.n, g.adj)
    return Graph(g.n, rows)


def canonical_key(g: Graph) -> tuple[int, tuple[int, ...]]:
    rows, _ = _canon_cached(g.n, g.adj)
    return (g.n, rows)


def automorphism_count(g: Graph) -> int:
    _, aut = _canon_cached(g.n, g.adj)
    return aut


# -- graph6 ------------------------------------------------------------------


def emit_graph6(g: Graph) -> str:
    if g.n <= 62:
        header = chr(g.n + 63)
    else:
        header = chr(126) + "".join(
            chr(((g.n >> s) & 63) + 63) for s in (12, 6, 0)
        )
    bitstream = []
    for j in range(g.n):
        for i in range(j):
            bitstream.append(g.adj[i] >> j & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    body = []
    for k in range(0, len(bitstream), 6):
        val = 0
        for b in bitstream[k:k + 6]:
            val = val << 1 | b
        body.append(chr(val + 63))
    return header + "".join(body)


def parse_graph6(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise Graph6Error("MalformedHeader: empty graph6 string")
    data = [ord(c) for c in s]
    for c in data:
        if not 63 <= c <= 126:
            raise Graph6Error(f"OutOfRangeByte: byte {c} outside graph6 range 63..126")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            raise Graph6Error("MalformedHeader: 36-bit vertex counts unsupported (n <= 64)")
        if len(data) < 4:
            raise Graph6Error("MalformedHeader: truncated long-form vertex count")
        n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
        body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    if n > MAX_VERTICES:
        raise Graph6Error(f"MalformedHeader: {n} vertices exceeds cap {MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6Error(
            f"MalformedHeader: body length {len(body)} != {need} for n={n}")
    stream = []
    for c in body:
        v = c - 63
        stream.extend((v >> s) & 1 for s in (5, 4, 3, 2, 1, 0))
    if any(stream[nbits:]):
        raise Graph6Error("TrailingBits: padding bits past the edge data are nonzero")
    rows = [0] * n
    idx = 0
    for j in range(n):
        for i in range(j):
            if stream[idx]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            idx += 1
    return Graph(n, tuple(rows))


# -- human-readable adjacency text -------------------------------------------


def emit_adjacency_text(g: Graph) -> str:
    edges = " ".join(f"{u}-{v}" for u, v in g.edges())
    return f"n={g.n}; edges: {edges}".rstrip()


def parse_adjacency_text(text: str) -> Graph:
    s = text.strip()
    if not s.startswith("n="):
        raise ValueError("adjacency text must start with 'n='")
    head, _, rest = s.partition(";")
    n = int(head[2:])
    rest = rest.strip()
    edges = []
    if rest:
        if not rest.startswith("edges:"):
            raise ValueError("expected 'edges:' section")
        for tok in rest[len("edges:"):].split():
            u, _, v = tok.partition("-")
            edges.append((int(u), int(v)))
    return Graph.from_edges(n, edges)
