"""Element matchings on face posets and acyclicity certification.

The matching engine iterates element matchings in a given vertex order:
starting from all faces (the empty face included as a dimension -1 cell),
each step pairs sigma with sigma + {v} whenever both are still unremoved,
then removes every paired face.  Pairing within a step is forced (the map
sigma -> sigma + {v} is a bijection between candidates), so the whole run
is deterministic given the vertex order.

The acyclicity verifier is an independent check: it rebuilds the face set
from a matching result, orients matched covers upward and all other covers
downward, and looks for a directed cycle.  Such a cycle alternates inside
one dimension gap, so the search runs on the pair-to-pair step graph per
dimension and drains it Kahn-style.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator

from .bitsets import iter_low_bits, mask_of, verts_of
from .complexes import SimplicialComplex


@dataclass(frozen=True)
class MatchingResult:
    """A partial matching on the face poset plus its critical cells.

    Faces are sorted vertex tuples; () is the empty face.  `pairs` holds
    (lower, upper) cover pairs with upper = lower + {x}; `critical` lists
    the unmatched faces.  Pairs and critical cells partition the face set.
    """

    n: int
    order: tuple[int, ...]
    pairs: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    critical: tuple[tuple[int, ...], ...]

    def critical_counts(self) -> dict[int, int]:
        """Number of critical cells per dimension (dimension = size - 1)."""
        counts: dict[int, int] = {}
        for f in self.critical:
            d = len(f) - 1
            counts[d] = counts.get(d, 0) + 1
        return counts

    def face_count(self) -> int:
        return 2 * len(self.pairs) + len(self.critical)

    def empty_face_paired(self) -> bool:
        return any(lo == () for lo, _ in self.pairs)


def element_matching_sequence(c: SimplicialComplex,
                              vertices: list[int] | tuple[int, ...]) -> MatchingResult:
    """Run element matchings for `vertices` in order; aggregate the pairs."""
    if c.kind == "void":
        raise ValueError("cannot match on the void complex")
    order = tuple(vertices)
    if len(set(order)) != len(order):
        raise ValueError("duplicate vertex in matching order")
    for v in order:
        if not isinstance(v, int) or not 1 <= v <= c.n:
            raise ValueError(f"vertex {v!r} outside ground set 1..{c.n}")

    remaining: set[int] = set()
    for masks in c.face_masks_by_size().values():
        remaining.update(masks)

    pair_masks: list[tuple[int, int]] = []
    for v in order:
        bit = 1 << (v - 1)
        step = [(m, m | bit) for m in remaining
                if not m & bit and (m | bit) in remaining]
        for lo, hi in step:
            remaining.discard(lo)
            remaining.discard(hi)
        pair_masks.extend(step)

    pairs = tuple(sorted(
        ((verts_of(lo), verts_of(hi)) for lo, hi in pair_masks),
        key=lambda p: (len(p[0]), p[0])))
    critical = tuple(sorted((verts_of(m) for m in remaining),
                            key=lambda f: (len(f), f)))
    return MatchingResult(n=c.n, order=order, pairs=pairs, critical=critical)


def verify_acyclic(result: MatchingResult) -> bool:
    """Certify that a matching has no alternating directed cycle.

    Raises ValueError on a malformed matching (a pair that is not a cover
    relation, or a face used twice).  Shares no traversal code with the
    matching engine.
    """
    up: dict[int, int] = {}
    used: set[int] = set()
    for lo_v, hi_v in result.pairs:
        lo, hi = mask_of(lo_v), mask_of(hi_v)
        if lo & hi != lo or (hi ^ lo).bit_count() != 1:
            raise ValueError(f"pair ({lo_v}, {hi_v}) is not a cover relation")
        if lo in used or hi in used:
            raise ValueError("face used in more than one pair")
        used.add(lo)
        used.add(hi)
        up[lo] = hi
    for f in result.critical:
        m = mask_of(f)
        if m in used:
            raise ValueError("critical face also appears in a pair")
        used.add(m)

    # Step graph: matched lower sigma -> matched lower sigma' whenever
    # sigma' is a facet of up[sigma] other than sigma.  A directed cycle
    # here is exactly an alternating up/down cycle in the Hasse diagram.
    succ: dict[int, list[int]] = {lo: [] for lo in up}
    indeg: dict[int, int] = {lo: 0 for lo in up}
    for lo, hi in up.items():
        for low in iter_low_bits(hi):
            other = hi ^ low
            if other != lo and other in up:
                succ[lo].append(other)
                indeg[other] += 1

    queue = [lo for lo, d in indeg.items() if d == 0]
    seen = 0
    while queue:
        lo = queue.pop()
        seen += 1
        for nxt in succ[lo]:
            indeg[nxt] -= 1
            if indeg[nxt] == 0:
                queue.append(nxt)
    return seen == len(indeg)


@dataclass(frozen=True)
class HomotopySummary:
    """Per-dimension critical counts plus the homotopy consequence, if any."""

    counts: dict[int, int] = field(default_factory=dict)
    empty_paired: bool = False
    wedge: tuple[int, int] | None = None  # (dimension, sphere count)
    description: str = ""

    def to_json_dict(self) -> dict:
        return {
            "counts": {str(d): c for d, c in sorted(self.counts.items())},
            "empty_paired": self.empty_paired,
            "wedge": list(self.wedge) if self.wedge else None,
            "summary": self.description,
        }


def homotopy_summary(result: MatchingResult) -> HomotopySummary:
    """Summarize critical cells; claim a wedge of spheres only when licensed.

    Requires the acyclicity certificate.  With the empty face paired and
    all critical cells in one dimension d, the complex is homotopy
    equivalent to a wedge of c_d spheres of dimension d; with no critical
    cells at all it is contractible.  Otherwise only counts are reported.
    """
    if not verify_acyclic(result):
        raise ValueError("matching is not acyclic; no homotopy summary")
    counts = result.critical_counts()
    empty_paired = result.empty_face_paired()
    if empty_paired and not counts:
        return HomotopySummary(counts, True, None,
                               "contractible (no critical cells, empty face paired)")
    if empty_paired and len(counts) == 1:
        d, c = next(iter(counts.items()))
        desc = (f"sphere of dimension {d}" if c == 1
                else f"wedge of {c} spheres of dimension {d}")
        return HomotopySummary(counts, True, (d, c), desc)
    body = ", ".join(f"{d}: {c}" for d, c in sorted(counts.items()))
    return HomotopySummary(counts, empty_paired, None,
                           f"critical cells by dimension {{{body}}} (no homotopy claim)")


def unmatched_after_first(c: SimplicialComplex, v: int) -> Iterator[tuple[int, ...]]:
    """Faces fixed by the single element matching at v, lexicographically.

    These are the sigma with v not in sigma, sigma a face, and
    sigma + {v} not a face.
    """
    if c.kind == "void":
        raise ValueError("void complex has no faces")
    if not isinstance(v, int) or not 1 <= v <= c.n:
        raise ValueError(f"vertex {v!r} outside ground set 1..{c.n}")
    bit = 1 << (v - 1)
    faces: set[int] = set()
    for masks in c.face_masks_by_size().values():
        faces.update(masks)
    hits = [verts_of(m) for m in faces if not m & bit and (m | bit) not in faces]
    yield from sorted(hits)
