"""Independent brute-force oracles shared by the test modules.

Everything here recomputes expected values from definitions (subset
enumeration, minors, hand formulas) and deliberately shares no search or
elimination code with the library.
"""

from __future__ import annotations

import random
from itertools import combinations
from math import gcd

from totalcut.graphs import Graph, from_edge_list, is_independent


def brute_independent_sets(g: Graph, k: int) -> list[tuple[int, ...]]:
    return [s for s in combinations(range(1, g.n + 1), k) if is_independent(g, s)]


def brute_independence_number(g: Graph) -> int:
    best = 0
    for r in range(g.n, 0, -1):
        if any(is_independent(g, s) for s in combinations(range(1, g.n + 1), r)):
            best = r
            break
    return best


def brute_faces(facet_sets: list[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """All faces of a facet list by direct subset expansion."""
    faces: set[tuple[int, ...]] = set()
    for f in facet_sets:
        for r in range(len(f) + 1):
            faces.update(combinations(f, r))
    return faces


def random_graph(n: int, prob: float, seed: int) -> Graph:
    rng = random.Random(seed)
    edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)
             if rng.random() < prob]
    return from_edge_list(n, edges)


def snf_by_minors(dense: list[list[int]]) -> tuple[int, tuple[int, ...]]:
    """Smith data from determinantal divisors: d_k = gcd of all k x k minors.

    Exponential; intended for matrices of size at most about 5 x 5.
    """
    rows = len(dense)
    cols = len(dense[0]) if rows else 0

    def det(sub_rows: tuple[int, ...], sub_cols: tuple[int, ...]) -> int:
        k = len(sub_rows)
        if k == 1:
            return dense[sub_rows[0]][sub_cols[0]]
        total = 0
        sign = 1
        for idx, c in enumerate(sub_cols):
            total += sign * dense[sub_rows[0]][c] * det(
                sub_rows[1:], sub_cols[:idx] + sub_cols[idx + 1:])
            sign = -sign
        return total

    divisors = [1]
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for rs in combinations(range(rows), k):
            for cs in combinations(range(cols), k):
                g = gcd(g, det(rs, cs))
        if g == 0:
            break
        divisors.append(g)
    rank = len(divisors) - 1
    factors = tuple(divisors[i + 1] // divisors[i] for i in range(rank))
    return rank, factors
