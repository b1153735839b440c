"""Simplicial complexes as facet antichains.

A complex is stored as its ground-set size plus the antichain of facet
bitmasks; faces are implicit (every subset of a facet).  Three kinds are
distinguished: the void complex (no faces at all, ``facets == ()``), the
empty complex (only the empty face, ``facets == (0,)``) and nonempty
complexes.  Reduced homology of the empty complex is Z in dimension -1;
the void complex has no homology at all.
"""

from __future__ import annotations

import json
from typing import Iterable, Iterator

from .bitsets import iter_low_bits, mask_of, verts_of
from .graphs import Graph, _has_independent_in_mask, has_independent_set, independent_sets


def _antichain(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and drop masks contained in another mask."""
    uniq = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    if uniq and uniq[0].bit_count() == uniq[-1].bit_count():
        return tuple(sorted(uniq))  # equal sizes cannot nest
    kept: list[int] = []
    for m in uniq:
        if not any(m & f == m for f in kept):
            kept.append(m)
    return tuple(sorted(kept))


class SimplicialComplex:
    """Ground-set size plus a facet antichain; immutable after construction."""

    __slots__ = ("n", "facets", "_faces")

    def __init__(self, n: int, facets: tuple[int, ...]):
        if n < 0:
            raise ValueError("ground set size must be nonnegative")
        self.n = n
        self.facets = facets
        self._faces: dict[int, list[int]] | None = None
        assert all(f < (1 << n) for f in facets), "facet outside ground set"
        assert facets == _antichain(facets), "facets must form an antichain"

    @classmethod
    def from_facet_masks(cls, n: int, masks: Iterable[int]) -> "SimplicialComplex":
        return cls(n, _antichain(masks))

    @classmethod
    def from_facets(cls, n: int, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        ms = []
        for f in facets:
            vs = tuple(f)
            for v in vs:
                if not 1 <= v <= n:
                    raise ValueError(f"vertex {v} outside ground set 1..{n}")
            ms.append(mask_of(vs))
        return cls.from_facet_masks(n, ms)

    @classmethod
    def void(cls, n: int) -> "SimplicialComplex":
        return cls(n, ())

    @classmethod
    def empty(cls, n: int) -> "SimplicialComplex":
        return cls(n, (0,))

    # -- basic queries --------------------------------------------------
    @property
    def kind(self) -> str:
        if not self.facets:
            return "void"
        if self.facets == (0,):
            return "empty"
        return "nonempty"

    @property
    def dim(self) -> int:
        if not self.facets:
            raise ValueError("void complex has no dimension")
        return max(f.bit_count() for f in self.facets) - 1

    def facet_sets(self) -> list[tuple[int, ...]]:
        return sorted(verts_of(f) for f in self.facets)

    def is_face_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facets)

    def is_face(self, vertices: Iterable[int]) -> bool:
        vs = tuple(vertices)
        for v in vs:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside ground set 1..{self.n}")
        return self.is_face_mask(mask_of(vs))

    # -- face enumeration -------------------------------------------------
    def face_masks_by_size(self) -> dict[int, list[int]]:
        """All faces, grouped by cardinality, each list sorted by mask.

        Breadth-first subset expansion from the facets with one dedup set
        per cardinality; cached (the complex is immutable).
        """
        if self._faces is None:
            layers: dict[int, set[int]] = {}
            for f in self.facets:
                layers.setdefault(f.bit_count(), set()).add(f)
            if layers:
                for s in range(max(layers), 0, -1):
                    below = layers.setdefault(s - 1, set())
                    for m in layers.get(s, ()):
                        for low in iter_low_bits(m):
                            below.add(m ^ low)
            self._faces = {s: sorted(ms) for s, ms in sorted(layers.items())}
        return self._faces

    def face_count(self) -> int:
        return sum(len(v) for v in self.face_masks_by_size().values())

    def faces_of_dim(self, d: int) -> Iterator[tuple[int, ...]]:
        """Faces of dimension d (cardinality d+1) in lexicographic order."""
        if self.kind == "void":
            raise ValueError("void complex has no faces")
        if not -1 <= d <= self.dim:
            raise ValueError(f"dimension {d} outside -1..{self.dim}")
        if d == -1:
            yield ()
            return
        masks = self.face_masks_by_size().get(d + 1, [])
        yield from sorted(verts_of(m) for m in masks)

    def f_vector(self) -> tuple[int, ...]:
        """(f_-1, f_0, ..., f_dim) with f_-1 = 1."""
        if self.kind == "void":
            raise ValueError("void complex has no f-vector")
        layers = self.face_masks_by_size()
        return tuple(len(layers.get(s, [])) for s in range(0, self.dim + 2))

    def reduced_euler_characteristic(self) -> int:
        fv = self.f_vector()
        # index s counts faces of cardinality s, i.e. dimension s - 1
        return sum(c if s % 2 else -c for s, c in enumerate(fv))

    # -- Def.-style operations -------------------------------------------
    def link(self, vertices: Iterable[int]) -> "SimplicialComplex":
        s = self._face_arg(vertices)
        return SimplicialComplex.from_facet_masks(
            self.n, [f ^ s for f in self.facets if f & s == s])

    def star(self, vertices: Iterable[int]) -> "SimplicialComplex":
        s = self._face_arg(vertices)
        return SimplicialComplex.from_facet_masks(
            self.n, [f for f in self.facets if f & s == s])

    def deletion(self, vertices: Iterable[int]) -> "SimplicialComplex":
        s = self._face_arg(vertices)
        out = []
        for f in self.facets:
            if f & s != s:
                out.append(f)
            else:
                out.extend(f ^ low for low in iter_low_bits(s))
        return SimplicialComplex.from_facet_masks(self.n, out)

    def _face_arg(self, vertices: Iterable[int]) -> int:
        vs = tuple(vertices)
        for v in vs:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside ground set 1..{self.n}")
        return mask_of(vs)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SimplicialComplex)
                and self.n == other.n and self.facets == other.facets)

    def __hash__(self) -> int:
        return hash((self.n, self.facets))

    def __repr__(self) -> str:
        if self.kind == "void":
            return f"SimplicialComplex(n={self.n}, void)"
        if self.kind == "empty":
            return f"SimplicialComplex(n={self.n}, empty)"
        return f"SimplicialComplex(n={self.n}, {len(self.facets)} facets, dim={self.dim})"


def full_simplex(n: int) -> SimplicialComplex:
    return SimplicialComplex(n, ((1 << n) - 1,))


# ---------------------------------------------------------------------------
# total cut complexes and their Alexander duals

def total_cut_complex(g: Graph, k: int) -> SimplicialComplex:
    """Complex whose facets are the complements of size-k independent sets.

    Void exactly when g has no independent set of size k (in particular
    whenever k > n); otherwise pure of dimension n-k-1.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got k={k}")
    full = (1 << g.n) - 1
    return SimplicialComplex.from_facet_masks(
        g.n, (full ^ mask_of(s) for s in independent_sets(g, k)))


def alexander_dual(c: SimplicialComplex) -> SimplicialComplex:
    """Combinatorial Alexander dual: faces are the complements of non-faces.

    Exhaustive over the 2^n subsets, so intended for small ground sets
    (oracle and test use); refuse n > 22 to avoid runaway scans.
    """
    if c.kind == "void":
        raise ValueError("void complex has no Alexander dual here")
    full = (1 << c.n) - 1
    if c.facets == (full,):
        raise ValueError("full simplex has no Alexander dual here")
    if c.n > 22:
        raise ValueError("exhaustive Alexander dual limited to n <= 22")

    def member(m: int) -> bool:
        return not c.is_face_mask(full ^ m)

    facets = []
    for m in range(1 << c.n):
        if member(m):
            rest = full ^ m
            if all(not member(m | low) for low in iter_low_bits(rest)):
                facets.append(m)
    return SimplicialComplex.from_facet_masks(c.n, facets)


def dual_of_total_cut(g: Graph, k: int) -> SimplicialComplex:
    """Alexander dual of total_cut_complex(g, k), built directly.

    A vertex set is a face of the dual iff it contains no k-independent
    set, a hereditary property; the facets (maximal such sets) are
    enumerated by Bron-Kerbosch-style branch and bound, never touching the
    2^n subset lattice.
    """
    if k < 1:
        raise ValueError(f"need k >= 1, got {k}")
    if k == 1:
        # Every vertex is a 1-independent set, so only the empty set survives.
        return SimplicialComplex.empty(g.n)
    if not has_independent_set(g, k):
        raise ValueError(f"k={k} exceeds the independence number of the graph")

    n = g.n

    def admissible(mask: int) -> bool:
        return not _has_independent_in_mask(g, k, mask)

    facets: list[int] = []

    def extend(r: int, cand: list[int], excl: list[int]) -> None:
        if not cand and not excl:
            facets.append(r)
            return
        processed = list(excl)
        for idx, v in enumerate(cand):
            rv = r | 1 << (v - 1)
            new_cand = [u for u in cand[idx + 1:] if admissible(rv | 1 << (u - 1))]
            new_excl = [u for u in processed if admissible(rv | 1 << (u - 1))]
            extend(rv, new_cand, new_excl)
            processed.append(v)

    extend(0, list(range(1, n + 1)), [])
    return SimplicialComplex.from_facet_masks(n, facets)


# ---------------------------------------------------------------------------
# facet file format and JSON

def read_facets(text: str) -> SimplicialComplex:
    """Parse the facet format: first line "n f", then f whitespace rows.

    A blank facet row denotes the empty face; f = 0 gives the void complex.
    """
    lines = text.splitlines()
    stripped = [ln.strip() for ln in lines]
    if not stripped or not stripped[0]:
        raise ValueError("empty facet input")
    head = stripped[0].split()
    if len(head) != 2:
        raise ValueError(f"bad header line {stripped[0]!r}, expected 'n f'")
    n, f = int(head[0]), int(head[1])
    rows = stripped[1:1 + f]
    if len(rows) < f:
        raise ValueError(f"header says {f} facets, found {len(rows)}")
    facets = [tuple(int(x) for x in row.split()) for row in rows]
    return SimplicialComplex.from_facets(n, facets)


def format_facets(c: SimplicialComplex) -> str:
    facets = c.facet_sets()
    lines = [f"{c.n} {len(facets)}"]
    lines.extend(" ".join(str(v) for v in f) for f in facets)
    return "\n".join(lines) + "\n"


def to_json_dict(c: SimplicialComplex) -> dict:
    return {
        "n": c.n,
        "facets": [list(f) for f in c.facet_sets()],
        "kind": c.kind,
    }


def to_json(c: SimplicialComplex) -> str:
    return json.dumps(to_json_dict(c), sort_keys=True)
