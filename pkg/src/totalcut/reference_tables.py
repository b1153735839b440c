"""Published homology tables for total cut complexes of cycle powers.

Transcribed once from the source tables; each entry maps (p, n) to the
nonzero reduced homology {dimension: betti rank}.  All published entries
are torsion-free.  For the 2-cut table the printed grid is complete: a
cell missing from it means the complex is void (equivalently n < 2(p+1)).
The 3-cut and 4-cut tables list only selected rows, and within a row the
authors left cells blank that are NOT always void (e.g. p=4, n=16 for
3-cut is nonvoid but unlisted), so blank cells there carry no expectation.
"""

from __future__ import annotations

# 2-cut complexes of C_n^p; grid p = 3..6, n = 8..16.
TABLE_2CUT_P = (3, 4, 5, 6)
TABLE_2CUT_N = tuple(range(8, 17))
TABLE_2CUT: dict[tuple[int, int], dict[int, int]] = {
    # row p=3: dims 2,4,6 then n-4 from n=11 on; the n=9 cell has rank 2
    (3, 8): {2: 1}, (3, 9): {4: 2}, (3, 10): {6: 1}, (3, 11): {7: 1},
    (3, 12): {8: 1}, (3, 13): {9: 1}, (3, 14): {10: 1}, (3, 15): {11: 1},
    (3, 16): {12: 1},
    # row p=4: starts at n=10; the n=12 cell has rank 3
    (4, 10): {3: 1}, (4, 11): {5: 1}, (4, 12): {7: 3}, (4, 13): {9: 1},
    (4, 14): {10: 1}, (4, 15): {11: 1}, (4, 16): {12: 1},
    # row p=5: starts at n=12; the n=15 cell has rank 4
    (5, 12): {4: 1}, (5, 13): {7: 1}, (5, 14): {8: 1}, (5, 15): {10: 4},
    (5, 16): {12: 1},
    # row p=6: starts at n=14; the n=15 cell has rank 2
    (6, 14): {5: 1}, (6, 15): {8: 2}, (6, 16): {10: 1},
}

# 3-cut complexes; listed rows n = 11, 16, 21, 26, 31, 32, 33, cols p = 2..6.
TABLE_3CUT_P = (2, 3, 4, 5, 6)
TABLE_3CUT_N = (11, 16, 21, 26, 31, 32, 33)
TABLE_3CUT: dict[tuple[int, int], dict[int, int]] = {
    (2, 11): {5: 1},
    (2, 16): {10: 1}, (3, 16): {10: 1},
    (2, 21): {15: 1}, (3, 21): {15: 1}, (4, 21): {15: 1},
    (2, 26): {20: 1}, (3, 26): {20: 1}, (4, 26): {20: 1}, (5, 26): {20: 1},
    (2, 31): {25: 1}, (3, 31): {25: 1}, (4, 31): {25: 1}, (5, 31): {25: 1}, (6, 31): {25: 1},
    (2, 32): {26: 1}, (3, 32): {26: 1}, (4, 32): {26: 1}, (5, 32): {26: 1}, (6, 32): {26: 1},
    (2, 33): {27: 1}, (3, 33): {27: 1}, (4, 33): {27: 1}, (5, 33): {27: 1}, (6, 33): {27: 1},
}

# 4-cut complexes; listed rows n = 15, 16, 22, 29, 36, 43, 44, cols p = 2..6.
TABLE_4CUT_P = (2, 3, 4, 5, 6)
TABLE_4CUT_N = (15, 16, 22, 29, 36, 43, 44)
TABLE_4CUT: dict[tuple[int, int], dict[int, int]] = {
    (2, 15): {7: 1},
    (2, 16): {8: 1}, (3, 16): {2: 1},  # the (p=3, n=16) cell sits in dimension 2
    (2, 22): {14: 1}, (3, 22): {14: 1},
    (2, 29): {21: 1}, (3, 29): {21: 1}, (4, 29): {21: 1},
    (2, 36): {28: 1}, (3, 36): {28: 1}, (4, 36): {28: 1}, (5, 36): {28: 1},
    (2, 43): {35: 1}, (3, 43): {35: 1}, (4, 43): {35: 1}, (5, 43): {35: 1}, (6, 43): {35: 1},
    (2, 44): {36: 1}, (3, 44): {36: 1}, (4, 44): {36: 1}, (5, 44): {36: 1}, (6, 44): {36: 1},
}

_TABLES = {2: TABLE_2CUT, 3: TABLE_3CUT, 4: TABLE_4CUT}
_GRIDS = {
    2: (TABLE_2CUT_P, TABLE_2CUT_N),
    3: (TABLE_3CUT_P, TABLE_3CUT_N),
    4: (TABLE_4CUT_P, TABLE_4CUT_N),
}


def expected_cell(k: int, p: int, n: int) -> tuple[str, dict[int, int] | None]:
    """Expectation for one (k, p, n) cell.

    Returns ("profile", {dim: betti}), ("void", None) for blank cells of
    the complete 2-cut grid, or ("unchecked", None) when the tables say
    nothing about the cell.
    """
    table = _TABLES.get(k)
    if table is None:
        return ("unchecked", None)
    entry = table.get((p, n))
    if entry is not None:
        return ("profile", entry)
    if k == 2:
        ps, ns = _GRIDS[2]
        if p in ps and n in ns:
            return ("void", None)
    return ("unchecked", None)


def populated_cells(k: int) -> list[tuple[int, int]]:
    """(p, n) keys of the published entries for the k-cut table."""
    return sorted(_TABLES[k])


def grid_p(k: int) -> tuple[int, ...]:
    return _GRIDS[k][0]


def grid_n(k: int) -> tuple[int, ...]:
    return _GRIDS[k][1]
