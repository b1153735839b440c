"""Block-word encoding of the faces fixed by the first element matching.

For a face sigma of a squared-cycle total cut complex that survives the
element matching at vertex 1, the complement [n] - sigma splits into k
blocks B_j = {i_j + t : t in I_j} with I_j a subset of {0, 1, 2} containing
0, anchors i_0 = 1 < i_1 < ... < i_{k-1}, consecutive anchors at least 3
apart, and i_{k-1} <= n - 2 (so the anchors are pairwise non-adjacent on
the cycle).  Words are decoded back to faces by complementation.

The inverse map `encode` is a greedy left-to-right decomposition: each
anchor is the smallest complement element not yet covered, its block grabs
everything within distance 2.  Greedy anchors are automatically >= 3
apart, so encoding fails (returns None) only when the block count differs
from k or the last anchor lands past n - 2.

`enumerate_m1_unmatched` generates every structurally valid word, decodes
it, and keeps exactly the faces sigma with sigma in the complex and
sigma + {1} not in the complex; no case analysis of offset patterns is
transcribed, membership is decided by direct complex queries.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .bitsets import mask_of, verts_of
from .complexes import SimplicialComplex, total_cut_complex
from .graphs import Graph, cycle_power

OFFSET_CHOICES: tuple[tuple[int, ...], ...] = ((0,), (0, 1), (0, 2), (0, 1, 2))


@dataclass(frozen=True)
class BlockWord:
    """k anchors with offset sets; denotes the complement of a face."""

    n: int
    anchors: tuple[int, ...]
    offsets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        k = len(self.anchors)
        if k == 0 or len(self.offsets) != k:
            raise ValueError("need one offset set per anchor, at least one block")
        if self.anchors[0] != 1:
            raise ValueError("first anchor must be 1")
        for j in range(1, k):
            if self.anchors[j] < self.anchors[j - 1] + 3:
                raise ValueError(
                    f"anchor {self.anchors[j]} closer than 3 to {self.anchors[j - 1]}")
        if self.anchors[-1] > self.n - 2:
            raise ValueError(f"last anchor {self.anchors[-1]} exceeds n-2 = {self.n - 2}")
        for off in self.offsets:
            if 0 not in off or not set(off) <= {0, 1, 2} or tuple(sorted(set(off))) != off:
                raise ValueError(f"offset set {off!r} must be a sorted subset of "
                                 "{0,1,2} containing 0")
        blocks = self.blocks()
        seen: set[int] = set()
        for b in blocks:
            for x in b:
                if not 1 <= x <= self.n or x in seen:
                    raise ValueError("blocks must be disjoint and inside 1..n")
                seen.add(x)

    @property
    def k(self) -> int:
        return len(self.anchors)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(i + t for t in off)
                     for i, off in zip(self.anchors, self.offsets))

    def complement_mask(self) -> int:
        m = 0
        for b in self.blocks():
            m |= mask_of(b)
        return m

    def decode(self) -> tuple[int, ...]:
        """The face [n] - (B_0 + ... + B_{k-1})."""
        return verts_of(((1 << self.n) - 1) ^ self.complement_mask())

    def __str__(self) -> str:
        body = "".join(f"({i}:{''.join(str(t) for t in off)})"
                       for i, off in zip(self.anchors, self.offsets))
        return f"b{body}@n={self.n}"


_WORD_RE = re.compile(r"^b((?:\(\d+:[012]+\))+)@n=(\d+)$")
_BLOCK_RE = re.compile(r"\((\d+):([012]+)\)")


def parse_word(text: str) -> BlockWord:
    m = _WORD_RE.match(text.strip())
    if not m:
        raise ValueError(f"bad block word {text!r}")
    blocks = _BLOCK_RE.findall(m.group(1))
    anchors = tuple(int(a) for a, _ in blocks)
    offsets = tuple(tuple(sorted(int(ch) for ch in off)) for _, off in blocks)
    return BlockWord(n=int(m.group(2)), anchors=anchors, offsets=offsets)


def encode(face: tuple[int, ...] | list[int], n: int, k: int) -> BlockWord | None:
    """Greedy decomposition of [n] - face into k blocks; None if it fails."""
    comp = sorted(set(range(1, n + 1)) - set(face))
    anchors: list[int] = []
    offsets: list[tuple[int, ...]] = []
    i = 0
    while i < len(comp):
        a = comp[i]
        off = []
        while i < len(comp) and comp[i] <= a + 2:
            off.append(comp[i] - a)
            i += 1
        anchors.append(a)
        offsets.append(tuple(off))
    if len(anchors) != k:
        return None
    try:
        return BlockWord(n=n, anchors=tuple(anchors), offsets=tuple(offsets))
    except ValueError:
        return None


def iter_words(n: int, k: int) -> Iterator[BlockWord]:
    """All structurally valid words, anchors ascending then offsets."""
    def anchor_tuples(prefix: tuple[int, ...], remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        lo = prefix[-1] + 3
        hi = n - 2 - 3 * (remaining - 1)
        for a in range(lo, hi + 1):
            yield from anchor_tuples(prefix + (a,), remaining - 1)

    for anchors in anchor_tuples((1,), k - 1):
        for offs in product(OFFSET_CHOICES, repeat=k):
            yield BlockWord(n=n, anchors=anchors, offsets=offs)


def enumerate_m1_unmatched(g: Graph, k: int) -> Iterator[tuple[BlockWord, tuple[int, ...]]]:
    """Faces fixed by the element matching at vertex 1, via block words.

    Only squared cycles are supported; the emitted face set must equal the
    brute-force stream of the matching engine, which is the module's
    oracle-checked contract.
    """
    n = g.n
    if g != cycle_power(n, 2):
        raise ValueError("block enumeration expects a squared cycle")
    if n < 3 * k:
        raise ValueError(f"need n >= 3k, got n={n}, k={k}")
    delta = total_cut_complex(g, k)
    full = (1 << n) - 1
    for word in iter_words(n, k):
        sigma = full ^ word.complement_mask()
        if delta.is_face_mask(sigma) and not delta.is_face_mask(sigma | 1):
            yield word, verts_of(sigma)
