"""Vertex sets packed into Python ints.

Bit ``v - 1`` of a mask stands for vertex ``v``; Python's arbitrary-width
ints give dynamic-width masks for free, so ground sets beyond 64 vertices
need no special handling.
"""

from __future__ import annotations

from typing import Iterable


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def verts_of(mask: int) -> tuple[int, ...]:
    """Sorted tuple of 1-indexed vertices of a mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def iter_low_bits(mask: int):
    """Yield the single-bit masks of ``mask``, lowest first."""
    while mask:
        low = mask & -mask
        yield low
        mask ^= low
