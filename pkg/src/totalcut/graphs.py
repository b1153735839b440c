"""Graphs and independent-set machinery.

Vertices are labelled 1..n in every public input and output.  Adjacency is
held as one bitmask row per vertex (bit v-1 of row u means u ~ v), which
makes an independence test a handful of AND operations.  Graphs are
immutable once built.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from .bitsets import mask_of, verts_of


class Graph:
    """Immutable finite simple graph on vertices {1, ..., n}."""

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, adj_rows: Iterable[int]):
        self.n = n
        self._adj = tuple(adj_rows)
        assert len(self._adj) == n
        assert all(not (self._adj[i] >> i) & 1 for i in range(n)), "self-loop"

    def check_vertex(self, v: int) -> None:
        if not isinstance(v, int) or not 1 <= v <= self.n:
            raise ValueError(f"vertex {v!r} outside ground set 1..{self.n}")

    def adjacent(self, u: int, v: int) -> bool:
        self.check_vertex(u)
        self.check_vertex(v)
        return bool((self._adj[u - 1] >> (v - 1)) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        self.check_vertex(v)
        return verts_of(self._adj[v - 1])

    def degree(self, v: int) -> int:
        self.check_vertex(v)
        return self._adj[v - 1].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(1, self.n + 1):
            row = self._adj[u - 1] >> u  # bits for v > u only
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self._adj) // 2

    def adjacency_mask(self, v: int) -> int:
        """Neighbour bitmask of v.  Exposed for in-package use."""
        self.check_vertex(v)
        return self._adj[v - 1]

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


def cycle_power(n: int, p: int) -> Graph:
    """The p-th power of the n-cycle: i ~ j iff circular distance <= p.

    cycle_power(n, 2) is the squared cycle; once 2p+1 >= n every pair is
    within distance p and the result is the complete graph.
    """
    if n < 3:
        raise ValueError(f"cycle power needs n >= 3, got {n}")
    if p < 1:
        raise ValueError(f"cycle power needs p >= 1, got {p}")
    rows = []
    for i in range(n):
        m = 0
        for d in range(1, p + 1):
            m |= 1 << ((i + d) % n)
            m |= 1 << ((i - d) % n)
        m &= ~(1 << i)  # d a multiple of n would wrap onto i itself
        rows.append(m)
    return Graph(n, rows)


def cycle(n: int) -> Graph:
    return cycle_power(n, 1)


def squared_cycle(n: int) -> Graph:
    return cycle_power(n, 2)


def complete(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"complete graph needs n >= 1, got {n}")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << i) for i in range(n)])


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from (possibly repeated) edge pairs; symmetric closure."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge ({u},{v}) outside ground set 1..{n}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u} rejected")
        rows[u - 1] |= 1 << (v - 1)
        rows[v - 1] |= 1 << (u - 1)
    return Graph(n, rows)


# ---------------------------------------------------------------------------
# graph spec strings and the edge-list file format

def parse_spec(spec: str) -> Graph:
    """Build a graph from a CLI spec string.

    Forms: "cycle:n", "cyclepow:n:p", "squaredcycle:n", "complete:n",
    and "file:PATH" for an edge-list file.
    """
    kind, _, rest = spec.partition(":")
    if kind == "file":
        if not rest:
            raise ValueError("file: spec needs a path")
        with open(rest, "r", encoding="utf-8") as fh:
            return read_edge_list(fh.read())
    try:
        args = [int(x) for x in rest.split(":")] if rest else []
    except ValueError:
        raise ValueError(f"bad graph spec {spec!r}") from None
    if kind == "cycle" and len(args) == 1:
        return cycle_power(args[0], 1)
    if kind == "squaredcycle" and len(args) == 1:
        return cycle_power(args[0], 2)
    if kind == "cyclepow" and len(args) == 2:
        return cycle_power(args[0], args[1])
    if kind == "complete" and len(args) == 1:
        return complete(args[0])
    raise ValueError(f"bad graph spec {spec!r}")


def read_edge_list(text: str) -> Graph:
    """Parse the edge-list format: first line "n m", then m lines "u v"."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise ValueError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line {lines[0]!r}, expected 'n m'")
    n, m = int(head[0]), int(head[1])
    if len(lines) - 1 != m:
        raise ValueError(f"header says {m} edges, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return from_edge_list(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# independence

def is_independent(g: Graph, vertices: Iterable[int]) -> bool:
    """True iff no two of the given vertices are adjacent."""
    vs = tuple(vertices)
    for v in vs:
        g.check_vertex(v)
    m = mask_of(vs)
    for v in vs:
        if g._adj[v - 1] & m:
            return False
    return True


def independent_sets(g: Graph, k: int) -> Iterator[tuple[int, ...]]:
    """Yield every size-k independent set, lexicographically, each once.

    Backtracking over vertices in increasing order with a forbidden
    neighbour mask, so the search never touches sets that already contain
    an edge.
    """
    if k < 0:
        raise ValueError(f"need k >= 0, got {k}")
    if k == 0:
        yield ()
        return
    n = g.n
    adj = g._adj
    chosen: list[int] = []

    def extend(lo: int, forbidden: int, need: int) -> Iterator[tuple[int, ...]]:
        for v in range(lo, n - need + 2):
            bit = 1 << (v - 1)
            if forbidden & bit:
                continue
            chosen.append(v)
            if need == 1:
                yield tuple(chosen)
            else:
                yield from extend(v + 1, forbidden | adj[v - 1] | bit, need - 1)
            chosen.pop()

    yield from extend(1, 0, k)


def has_independent_set(g: Graph, k: int) -> bool:
    """True iff g has k pairwise non-adjacent vertices."""
    return _has_independent_in_mask(g, k, (1 << g.n) - 1)


def _has_independent_in_mask(g: Graph, k: int, mask: int) -> bool:
    # Depth-k search restricted to the vertices of `mask`.
    if k <= 0:
        return True
    adj = g._adj

    def rec(cand: int, need: int) -> bool:
        while cand:
            if cand.bit_count() < need:
                return False
            low = cand & -cand
            cand ^= low
            if need == 1:
                return True
            if rec(cand & ~adj[low.bit_length() - 1], need - 1):
                return True
        return False

    return rec(mask, k)


def independence_number(g: Graph) -> int:
    """Maximum cardinality of an independent set (exact branch and bound)."""
    n = g.n
    adj = g._adj
    full = (1 << n) - 1

    # Greedy seed: repeatedly take a minimum-degree remaining vertex.
    avail, best = full, 0
    while avail:
        v_bit, v_deg = 0, n + 1
        m = avail
        while m:
            low = m & -m
            m ^= low
            d = (adj[low.bit_length() - 1] & avail).bit_count()
            if d < v_deg:
                v_bit, v_deg = low, d
        best += 1
        avail &= ~(adj[v_bit.bit_length() - 1] | v_bit)

    def bnb(avail: int, size: int) -> None:
        nonlocal best
        if size > best:
            best = size
        if size + avail.bit_count() <= best:
            return
        # Branch on a maximum-degree remaining vertex; include it first.
        v_bit, v_deg = 0, -1
        m = avail
        while m:
            low = m & -m
            m ^= low
            d = (adj[low.bit_length() - 1] & avail).bit_count()
            if d > v_deg:
                v_bit, v_deg = low, d
        bnb(avail & ~(adj[v_bit.bit_length() - 1] | v_bit), size + 1)
        bnb(avail & ~v_bit, size)

    bnb(full, 0)
    return best
