"""Acceptance suite: one test per criterion, exact values, pinned budgets.

Each test prints a single PASS line on success (pytest shows it with -s);
a failed assertion is the FAIL signal.  All homology comparisons are exact
integer checks; the time limits are the stated budgets.
"""

import time
from itertools import combinations

from oracles import random_graph

from totalcut import reference_tables
from totalcut.blocks import enumerate_m1_unmatched
from totalcut.complexes import total_cut_complex
from totalcut.graphs import cycle_power, has_independent_set, squared_cycle
from totalcut.homology import (boundary_matrix, homology_via_dual,
                               is_sphere_profile, reduced_homology,
                               total_cut_homology)
from totalcut.morse import (element_matching_sequence, unmatched_after_first,
                            verify_acyclic)
from totalcut.verify import (check_forced_independent_subset, run_with_timeout,
                             table_sweep, _morse_payload)


def _report(criterion, detail):
    print(f"ACCEPTANCE {criterion} PASS  {detail}")


def test_criterion_01_facet_reproduction():
    t0 = time.perf_counter()
    facets = total_cut_complex(squared_cycle(9), 3).facet_sets()
    elapsed = time.perf_counter() - t0
    assert facets == [(1, 2, 4, 5, 7, 8), (1, 3, 4, 6, 7, 9), (2, 3, 5, 6, 8, 9)]
    assert elapsed < 1.0
    _report("criterion-01", f"W_9 facets reproduced in {elapsed:.3f}s")


def test_criterion_02_sphere_homology_k3():
    times = []
    for n in range(9, 17):
        t0 = time.perf_counter()
        profile, method = total_cut_homology(squared_cycle(n), 3, "auto")
        elapsed = time.perf_counter() - t0
        expected_dim = 2 * n - 17 if n <= 10 else n - 6
        assert is_sphere_profile(profile, expected_dim), (n, profile.nonzero())
        assert elapsed < 60.0, (n, elapsed)
        times.append(elapsed)
    _report("criterion-02",
            f"k=3 spheres for n=9..16, max instance {max(times):.1f}s")


def test_criterion_03_morse_critical_k3():
    for n in range(11, 16):
        t0 = time.perf_counter()
        c = total_cut_complex(squared_cycle(n), 3)
        r = element_matching_sequence(c, list(range(1, n)))
        expected = tuple(sorted(set(range(1, n + 1))
                                - {1, n - 7, n - 5, n - 3, n - 1}))
        assert r.critical == (expected,), (n, r.critical)
        assert r.empty_face_paired()
        assert verify_acyclic(r)
        assert time.perf_counter() - t0 < 120.0
    _report("criterion-03", "single critical cell [n]-{1,n-7,n-5,n-3,n-1} for n=11..15")


def test_criterion_04_w_3k_plus_1():
    for k in (3, 4, 5):
        n = 3 * k + 1
        t0 = time.perf_counter()
        profile, _ = total_cut_homology(squared_cycle(n), k, "auto")
        assert is_sphere_profile(profile, 3), (k, profile.nonzero())
        c = total_cut_complex(squared_cycle(n), k)
        r = element_matching_sequence(c, list(range(1, 8)))
        assert r.critical == ((2, 3, 5, 7),), (k, r.critical)
        assert r.empty_face_paired() and verify_acyclic(r)
        assert time.perf_counter() - t0 < 120.0
    _report("criterion-04", "W_{3k+1} ~ S^3 with critical {2,3,5,7}, k=3,4,5")


def test_criterion_05_w_3k_plus_2():
    morse_notes = []
    for k in (3, 4, 5):
        n = 3 * k + 2
        t0 = time.perf_counter()
        profile, _ = total_cut_homology(squared_cycle(n), k, "auto")
        assert is_sphere_profile(profile, 5), (k, profile.nonzero())
        budget = 300.0 - (time.perf_counter() - t0)
        status, payload = run_with_timeout(
            _morse_payload, (n, k, tuple(range(1, 12))), budget)
        if status == "timeout":
            assert k == 5, "only the k=5 Morse run may be skipped"
            morse_notes.append(f"k={k} morse skipped on timeout")
            continue
        assert status == "ok", payload
        assert payload["critical"] == [[2, 3, 5, 7, 9, 11]], (k, payload)
        assert payload["acyclic"] and payload["empty_paired"]
        assert time.perf_counter() - t0 < 300.0
    note = "; ".join(morse_notes) if morse_notes else "all Morse runs completed"
    _report("criterion-05", f"W_{{3k+2}} ~ S^5 with critical {{2,3,5,7,9,11}}; {note}")


def test_criterion_06_cycle_theorem():
    t0 = time.perf_counter()
    for k in (2, 3, 4):
        for n in range(3, 2 * k):
            g = cycle_power(n, 1)
            assert not has_independent_set(g, k), (k, n)
        for n in range(2 * k, 15):
            profile, _ = total_cut_homology(cycle_power(n, 1), k, "auto")
            assert is_sphere_profile(profile, n - 2 * k), (k, n, profile.nonzero())
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0
    _report("criterion-06", f"cycle spheres and voids, k=2..4, n<=14 in {elapsed:.1f}s")


def test_criterion_07_table1_reproduction():
    t0 = time.perf_counter()
    reports = table_sweep(2, reference_tables.TABLE_2CUT_P,
                          reference_tables.TABLE_2CUT_N, method="dual")
    elapsed = time.perf_counter() - t0
    by_cell = {(r.params["p"], r.params["n"]): r for r in reports}
    populated = reference_tables.populated_cells(2)
    for cell in populated:
        assert by_cell[cell].verdict == "pass", (cell, by_cell[cell])
    for cell, r in by_cell.items():
        assert r.verdict == "pass", (cell, r.expected, r.observed)
    for cell, want in [((3, 9), {"4": 2}), ((4, 12), {"7": 3}),
                       ((5, 15), {"10": 4}), ((6, 15), {"8": 2})]:
        assert by_cell[cell].observed == want
    assert elapsed < 600.0
    _report("criterion-07",
            f"all {len(populated)} populated cells of the 2-cut table "
            f"(22 required) in {elapsed:.1f}s")


def test_criterion_08_tables_2_and_3_spot_rows():
    checked = 0
    for k, rows in ((3, (11, 16, 21)), (4, (15, 16, 22))):
        published = [(p, n) for p, n in reference_tables.populated_cells(k)
                     if n in rows]
        assert published, (k, rows)
        for p, n in published:
            r = table_sweep(k, (p,), (n,), method="auto")[0]
            assert r.verdict == "pass", (k, p, n, r.expected, r.observed)
            checked += 1
    # unpublished cells of the spot rows and the stretch rows run under a
    # timeout: recorded pass or skipped with a reason, never silently dropped
    bounded = table_sweep(4, (4,), (22,), method="auto", timeout=20.0)
    bounded += table_sweep(3, (2, 3), (26,), method="auto", timeout=90.0)
    assert len(bounded) == 3
    for r in bounded:
        assert r.verdict in ("pass", "skipped"), r
        if r.verdict == "skipped":
            assert r.reason, "skip must carry a reason"
    _report("criterion-08",
            f"{checked} published spot cells of the 3-/4-cut tables match; "
            f"bounded cells handled as {[r.verdict for r in bounded]}")


def test_criterion_09_forced_independent_subsets():
    t0 = time.perf_counter()
    for k, ns in ((3, range(10, 16)), (4, range(13, 18))):
        for n in ns:
            assert check_forced_independent_subset(k, n).verdict == "pass", (k, n)
    elapsed = time.perf_counter() - t0
    assert elapsed < 60.0
    _report("criterion-09", f"subset brute force for both grids in {elapsed:.1f}s")


def _grid_instances():
    for n in range(4, 13):
        for p in (1, 2, 3, 4):
            for k in (1, 2, 3):
                g = cycle_power(n, p)
                if has_independent_set(g, k):
                    yield g, k


def test_criterion_10a_dual_vs_direct_homology():
    count = 0
    for g, k in _grid_instances():
        assert reduced_homology(total_cut_complex(g, k)) == homology_via_dual(g, k)
        count += 1
    for seed in range(25):
        g = random_graph(7 + seed % 4, 0.4, 1000 + seed)
        for k in (2, 3):
            if not has_independent_set(g, k):
                continue
            assert reduced_homology(total_cut_complex(g, k)) == homology_via_dual(g, k)
            count += 1
    _report("criterion-10a", f"dual == direct on {count} instances")


def test_criterion_10b_morse_inequalities():
    count = 0
    for g, k in _grid_instances():
        c = total_cut_complex(g, k)
        r = element_matching_sequence(c, list(range(1, g.n + 1)))
        counts = r.critical_counts()
        h = reduced_homology(c)
        for d, betti, _ in h.groups:
            assert counts.get(d, 0) >= betti, (g, k, d)
        count += 1
    _report("criterion-10b", f"c_i >= betti_i on {count} instances")


def test_criterion_10c_boundary_squared_zero():
    count = 0
    for g, k in _grid_instances():
        c = total_cut_complex(g, k)
        if c.kind != "nonempty" or c.dim < 1:
            continue
        for d in range(1, c.dim + 1):
            assert boundary_matrix(c, d - 1).multiply(boundary_matrix(c, d)).is_zero()
            count += 1
    _report("criterion-10c", f"boundary composition vanished for {count} operators")


def test_criterion_10d_block_word_oracle():
    for k, ns in ((3, range(9, 15)), (4, range(13, 17))):
        for n in ns:
            g = squared_cycle(n)
            emitted = {f for _, f in enumerate_m1_unmatched(g, k)}
            brute = set(unmatched_after_first(total_cut_complex(g, k), 1))
            assert emitted == brute, (k, n)
    _report("criterion-10d", "block words == brute force on {3}x{9..14} u {4}x{13..16}")


def test_criterion_10e_matchings_always_acyclic():
    count = 0
    for k in (2, 3, 4):
        for n in range(3 * k, 17):
            c = total_cut_complex(squared_cycle(n), k)
            if c.kind == "void":
                continue
            r = element_matching_sequence(c, list(range(1, n + 1)))
            assert verify_acyclic(r), (k, n)
            count += 1
    for seed in range(50):
        g = random_graph(5 + seed % 6, 0.4, 2000 + seed)
        for k in (2, 3):
            if not has_independent_set(g, k):
                continue
            r = element_matching_sequence(total_cut_complex(g, k),
                                          list(range(1, g.n + 1)))
            assert verify_acyclic(r), (seed, k)
            count += 1
    _report("criterion-10e", f"{count} matchings certified acyclic")


def test_criterion_11_void_boundary():
    for k in range(2, 6):
        for n in range(3, 21):
            is_void = total_cut_complex(squared_cycle(n), k).kind == "void"
            assert is_void == (n <= 3 * k - 1), (k, n)
    _report("criterion-11", "voidness boundary n <= 3k-1 exact for k=2..5, n=3..20")
