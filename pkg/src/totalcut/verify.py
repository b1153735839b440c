"""Named, reproducible checks tying the other modules together.

Every check produces a CheckReport with the parameters, the expected and
observed values, a pass/fail/skipped verdict and the wall time.  Skipped
is reserved for cells whose hypothesis fails or whose computation exceeds
a caller-supplied timeout; it is never a silent success.  Long-running
cells execute in a forked worker process so a timeout can actually kill
them.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
import time
from dataclasses import dataclass
from itertools import combinations

from . import reference_tables
from .bitsets import mask_of
from .blocks import enumerate_m1_unmatched
from .complexes import total_cut_complex
from .graphs import (cycle_power, has_independent_set, _has_independent_in_mask,
                     squared_cycle)
from .homology import is_sphere_profile, total_cut_homology
from .morse import element_matching_sequence, unmatched_after_first, verify_acyclic

DEFAULT_TIMEOUT = 300.0


@dataclass
class CheckReport:
    """Outcome of one named check; verdict is pass, fail or skipped."""

    name: str
    params: dict
    expected: object
    observed: object
    verdict: str
    reason: str = ""
    seconds: float = 0.0
    stretch: bool = False

    def to_json_dict(self) -> dict:
        return {
            "schema": "totalcut/1",
            "name": self.name,
            "params": self.params,
            "expected": self.expected,
            "observed": self.observed,
            "verdict": self.verdict,
            "reason": self.reason,
            "seconds": round(self.seconds, 3),
        }

    def one_line(self) -> str:
        ps = ",".join(f"{k}={v}" for k, v in self.params.items())
        tail = f" ({self.reason})" if self.reason else ""
        return (f"{self.verdict.upper():7s} {self.name}[{ps}] "
                f"expected={self.expected} observed={self.observed}"
                f" {self.seconds:.2f}s{tail}")


def reports_to_json_lines(reports: list[CheckReport]) -> str:
    return "\n".join(json.dumps(r.to_json_dict(), sort_keys=True) for r in reports)


def reports_to_csv(reports: list[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["name", "params", "expected", "observed", "verdict", "reason", "seconds"])
    for r in reports:
        w.writerow([r.name, json.dumps(r.params, sort_keys=True),
                    json.dumps(r.expected, sort_keys=True),
                    json.dumps(r.observed, sort_keys=True),
                    r.verdict, r.reason, f"{r.seconds:.3f}"])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# timeout runner

def _invoke(fn, args, queue):
    try:
        queue.put(("ok", fn(*args)))
    except Exception as exc:  # report, never hang the parent
        queue.put(("error", f"{type(exc).__name__}: {exc}"))


def run_with_timeout(fn, args=(), timeout: float | None = None):
    """Run fn(*args); returns (status, payload), status ok|error|timeout.

    With a timeout the call runs in a forked process that is terminated on
    expiry, since pure-Python computations cannot be interrupted in-thread.
    Arguments and results must be picklable.
    """
    if timeout is None:
        try:
            return "ok", fn(*args)
        except Exception as exc:
            return "error", f"{type(exc).__name__}: {exc}"
    ctx = multiprocessing.get_context("fork")
    queue = ctx.Queue()
    proc = ctx.Process(target=_invoke, args=(fn, args, queue), daemon=True)
    proc.start()
    proc.join(timeout)
    if proc.is_alive():
        proc.terminate()
        proc.join()
        return "timeout", None
    try:
        return queue.get(timeout=5.0)
    except Exception:
        return "error", f"worker died with exit code {proc.exitcode}"


# ---------------------------------------------------------------------------
# worker payloads (top level so they can cross a fork)

def _profile_payload(k: int, p: int, n: int, method: str) -> dict:
    g = cycle_power(n, p)
    if not has_independent_set(g, k):
        return {"void": True}
    profile, used = total_cut_homology(g, k, method)
    return {"profile": {str(d): b for d, b, _ in profile.groups if b},
            "torsion": {str(d): list(t) for d, _, t in profile.groups if t},
            "method": used}


def _morse_payload(n: int, k: int, order: tuple[int, ...]) -> dict:
    c = total_cut_complex(squared_cycle(n), k)
    r = element_matching_sequence(c, list(order))
    return {
        "critical": [list(f) for f in r.critical],
        "empty_paired": r.empty_face_paired(),
        "acyclic": verify_acyclic(r),
    }


# ---------------------------------------------------------------------------
# individual checks

def _finish(name, params, expected, observed, t0, ok, reason="", stretch=False):
    return CheckReport(name=name, params=params, expected=expected,
                       observed=observed, verdict="pass" if ok else "fail",
                       reason=reason, seconds=time.perf_counter() - t0,
                       stretch=stretch)


def check_forced_independent_subset(k: int, n: int) -> CheckReport:
    """Every (3k-2)-subset of W_n contains a k-independent set (n >= 3k+1)."""
    t0 = time.perf_counter()
    params = {"k": k, "n": n}
    if n < 3 * k + 1:
        return CheckReport("forced-independent-subset", params,
                           "hypothesis n >= 3k+1", None,
                           "skipped", reason="hypothesis not met",
                           seconds=time.perf_counter() - t0)
    g = squared_cycle(n)
    size = 3 * k - 2
    bad = None
    for sub in combinations(range(1, n + 1), size):
        if not _has_independent_in_mask(g, k, mask_of(sub)):
            bad = sub
            break
    return _finish("forced-independent-subset", params,
                   "all subsets contain a k-independent set",
                   "confirmed" if bad is None else {"counterexample": list(bad)},
                   t0, bad is None)


def check_cycle_theorem(k: int, n: int, method: str = "auto") -> CheckReport:
    """Cycle graphs: void below n = 2k, a single (n-2k)-sphere above."""
    if k < 2:
        raise ValueError("cycle theorem check needs k >= 2")
    t0 = time.perf_counter()
    params = {"k": k, "n": n}
    g = cycle_power(n, 1)
    if not has_independent_set(g, k):
        observed = "void"
    else:
        profile, _ = total_cut_homology(g, k, method)
        observed = {"profile": profile.nonzero()}
    if n < 2 * k:
        expected = "void"
        ok = observed == "void"
    else:
        expected = {"sphere_dim": n - 2 * k}
        ok = (observed != "void"
              and is_sphere_profile(total_cut_homology(g, k, method)[0], n - 2 * k))
    return _finish("cycle-theorem", params, expected, observed, t0, ok)


def _sphere_check(name: str, params: dict, n: int, k: int, sphere_dim: int,
                  morse_order: tuple[int, ...] | None,
                  morse_critical: tuple[int, ...] | None,
                  method: str = "auto",
                  timeout: float | None = None,
                  stretch: bool = False) -> CheckReport:
    """Shared body: homology sphere test plus an optional Morse check."""
    t0 = time.perf_counter()
    g = squared_cycle(n)
    profile, used = total_cut_homology(g, k, method)
    homology_ok = is_sphere_profile(profile, sphere_dim)
    observed: dict = {"profile": profile.nonzero(), "method": used}
    expected: dict = {"sphere_dim": sphere_dim}
    ok = homology_ok
    reason = ""
    if morse_order is not None:
        expected["critical"] = [list(morse_critical)]
        status, payload = run_with_timeout(
            _morse_payload, (n, k, tuple(morse_order)), timeout)
        if status == "timeout":
            observed["morse"] = "timeout"
            reason = f"morse half skipped after {timeout:.0f}s"
        elif status == "error":
            observed["morse"] = payload
            ok = False
        else:
            observed["morse"] = payload
            ok = ok and payload["acyclic"] and payload["empty_paired"] \
                and payload["critical"] == [list(morse_critical)]
    return _finish(name, params, expected, observed, t0, ok, reason, stretch)


def check_w_k3(n: int, method: str = "auto", timeout: float | None = None) -> CheckReport:
    """Squared cycle, k = 3: sphere of dimension 2n-17 (n = 9, 10) or n-6.

    For n >= 11 additionally runs the element matching [1..n-1] and demands
    the single critical cell [n] minus {1, n-7, n-5, n-3, n-1}.
    """
    if n < 9:
        raise ValueError("k=3 squared-cycle check needs n >= 9")
    sphere_dim = 2 * n - 17 if n <= 10 else n - 6
    order = critical = None
    if n >= 11:
        order = tuple(range(1, n))
        critical = tuple(sorted(set(range(1, n + 1))
                                - {1, n - 7, n - 5, n - 3, n - 1}))
    return _sphere_check("w-k3", {"k": 3, "n": n}, n, 3, sphere_dim,
                         order, critical, method, timeout)


def check_w_3k1(k: int, method: str = "auto", timeout: float | None = None) -> CheckReport:
    """n = 3k+1: a 3-sphere, and matching [1..7] leaves only {2,3,5,7}."""
    if k < 3:
        raise ValueError("needs k >= 3")
    n = 3 * k + 1
    return _sphere_check("w-3k+1", {"k": k, "n": n}, n, k, 3,
                         tuple(range(1, 8)), (2, 3, 5, 7), method, timeout)


def check_w_3k2(k: int, method: str = "auto", timeout: float | None = None) -> CheckReport:
    """n = 3k+2: a 5-sphere, and matching [1..11] leaves {2,3,5,7,9,11}.

    Verified computationally for k = 3 and 4 as well, where the published
    argument assumes k >= 5.
    """
    if k < 3:
        raise ValueError("needs k >= 3")
    n = 3 * k + 2
    return _sphere_check("w-3k+2", {"k": k, "n": n}, n, k, 5,
                         tuple(range(1, 12)), (2, 3, 5, 7, 9, 11), method, timeout)


def check_void(k: int, n: int) -> CheckReport:
    """Void boundary: the k-total cut complex of W_n is void iff n <= 3k-1."""
    t0 = time.perf_counter()
    g = squared_cycle(n)
    observed = "void" if not has_independent_set(g, k) else "nonvoid"
    expected = "void" if n // 3 < k else "nonvoid"
    return _finish("void-boundary", {"k": k, "n": n}, expected, observed,
                   t0, expected == observed)


def check_blocks(k: int, n: int) -> CheckReport:
    """Block-word stream equals the brute-force first-matching fixed faces."""
    t0 = time.perf_counter()
    g = squared_cycle(n)
    emitted = {face for _, face in enumerate_m1_unmatched(g, k)}
    brute = set(unmatched_after_first(total_cut_complex(g, k), 1))
    ok = emitted == brute
    observed = {"emitted": len(emitted), "brute": len(brute),
                "equal": ok}
    return _finish("blocks-oracle", {"k": k, "n": n}, "equal face sets",
                   observed, t0, ok)


def check_facets_w9() -> CheckReport:
    """The three facets of the 3-total cut complex of W_9."""
    t0 = time.perf_counter()
    got = total_cut_complex(squared_cycle(9), 3).facet_sets()
    want = [(1, 2, 4, 5, 7, 8), (1, 3, 4, 6, 7, 9), (2, 3, 5, 6, 8, 9)]
    return _finish("facets-w9", {"k": 3, "n": 9}, [list(f) for f in want],
                   [list(f) for f in got], t0, got == want)


# ---------------------------------------------------------------------------
# table sweeps

def _table_cell_worker(k: int, p: int, n: int, method: str) -> dict:
    return _profile_payload(k, p, n, method)


def _cell_report(k: int, p: int, n: int, status: str, payload, elapsed: float,
                 timeout: float | None, stretch: bool) -> CheckReport:
    params = {"k": k, "p": p, "n": n}
    kind, want = reference_tables.expected_cell(k, p, n)
    if kind == "profile":
        expected = {str(d): b for d, b in sorted(want.items())}
    elif kind == "void":
        expected = "void"
    else:
        expected = "unchecked"
    if status == "timeout":
        return CheckReport("table-cell", params, expected, None, "skipped",
                           reason=f"timeout after {timeout:.0f}s",
                           seconds=elapsed, stretch=stretch)
    if status == "error":
        return CheckReport("table-cell", params, expected, payload, "fail",
                           reason="worker error", seconds=elapsed, stretch=stretch)
    if payload.get("void"):
        observed = "void"
        ok = expected in ("void", "unchecked")
    else:
        observed = dict(sorted(payload["profile"].items(), key=lambda kv: int(kv[0])))
        if payload.get("torsion"):
            observed = {"betti": observed, "torsion": payload["torsion"]}
            ok = False if kind == "profile" else expected == "unchecked"
        elif kind == "profile":
            ok = observed == expected
        elif kind == "void":
            ok = False
        else:
            ok = True
    return CheckReport("table-cell", params, expected, observed,
                       "pass" if ok else "fail", seconds=elapsed, stretch=stretch)


def table_sweep(k: int, p_values, n_values, method: str = "auto",
                timeout: float | None = None, threads: int = 1,
                stretch_n: frozenset[int] = frozenset()) -> list[CheckReport]:
    """Homology profile per (p, n) cell, checked against the published table.

    A cell that exceeds the timeout is reported skipped, never dropped.
    With threads > 1 cells run in parallel worker processes.
    """
    cells = [(k, p, n) for n in n_values for p in p_values]
    if not cells:
        raise ValueError("empty sweep ranges")
    results: dict[tuple[int, int, int], tuple[str, object, float]] = {}

    if timeout is None and threads <= 1:
        for cell in cells:
            t0 = time.perf_counter()
            status, payload = run_with_timeout(_table_cell_worker, (*cell, method), None)
            results[cell] = (status, payload, time.perf_counter() - t0)
    else:
        ctx = multiprocessing.get_context("fork")
        pending = list(cells)
        active: dict = {}
        while pending or active:
            while pending and len(active) < max(1, threads):
                cell = pending.pop(0)
                queue = ctx.Queue()
                proc = ctx.Process(target=_invoke,
                                   args=(_table_cell_worker, (*cell, method), queue),
                                   daemon=True)
                proc.start()
                active[proc] = (cell, queue, time.perf_counter())
            time.sleep(0.02)
            for proc in list(active):
                cell, queue, t0 = active[proc]
                elapsed = time.perf_counter() - t0
                if not proc.is_alive():
                    try:
                        status, payload = queue.get(timeout=5.0)
                    except Exception:
                        status, payload = "error", f"worker exit {proc.exitcode}"
                    results[cell] = (status, payload, elapsed)
                    del active[proc]
                elif timeout is not None and elapsed > timeout:
                    proc.terminate()
                    proc.join()
                    results[cell] = ("timeout", None, elapsed)
                    del active[proc]

    reports = []
    for cell in cells:
        k_, p, n = cell
        status, payload, elapsed = results[cell]
        reports.append(_cell_report(k_, p, n, status, payload, elapsed,
                                    timeout, n in stretch_n))
    return reports


def render_markdown_table(k: int, reports: list[CheckReport]) -> str:
    """Markdown table mirroring the published layout; void cells stay blank.

    The 2-cut table is printed p-rows by n-columns, the others n-rows by
    p-columns.
    """
    cells = {}
    ps, ns = set(), set()
    for r in reports:
        if r.name != "table-cell" or r.params["k"] != k:
            continue
        p, n = r.params["p"], r.params["n"]
        ps.add(p)
        ns.add(n)
        if r.verdict == "skipped":
            text = "(skipped)"
        elif r.observed == "void":
            text = ""
        elif isinstance(r.observed, dict) and "betti" not in r.observed:
            text = "; ".join(f"{d}: Z" + (f"^{b}" if b > 1 else "")
                             for d, b in r.observed.items())
        else:
            text = json.dumps(r.observed)
        if r.verdict == "fail":
            text = f"FAIL {text} (expected {r.expected})"
        cells[(p, n)] = text
    ps_s, ns_s = sorted(ps), sorted(ns)
    if k == 2:
        header = ["p\\n"] + [str(n) for n in ns_s]
        rows = [[str(p)] + [cells.get((p, n), "") for n in ns_s] for p in ps_s]
    else:
        header = ["n\\p"] + [str(p) for p in ps_s]
        rows = [[str(n)] + [cells.get((p, n), "") for p in ps_s] for n in ns_s]
    lines = ["| " + " | ".join(header) + " |",
             "|" + "|".join("---" for _ in header) + "|"]
    lines.extend("| " + " | ".join(row) + " |" for row in rows)
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# the named suite

TABLE2_MANDATORY_N = (11, 16, 21)
TABLE2_STRETCH_N = (26, 31, 32, 33)
TABLE3_MANDATORY_N = (15, 16, 22)
TABLE3_STRETCH_N = (29, 36, 43, 44)


def suite_paper(timeout: float | None = DEFAULT_TIMEOUT, threads: int = 1,
                method: str = "auto", include_stretch: bool = True,
                only: str | None = None) -> list[CheckReport]:
    """Every published claim at the acceptance grids, as one report list.

    `only` restricts the run to jobs whose label contains the substring,
    so single checks can be reproduced without paying for the whole suite.
    """
    jobs: list[tuple[str, object]] = [("facets-w9", lambda: [check_facets_w9()])]

    def one(fn, *args, **kw):
        return lambda: [fn(*args, **kw)]

    for n in range(9, 17):
        jobs.append((f"w-k3[n={n}]", one(check_w_k3, n, method, timeout)))
    for k in (3, 4, 5):
        jobs.append((f"w-3k+1[k={k}]", one(check_w_3k1, k, method, timeout)))
    for k in (3, 4, 5):
        jobs.append((f"w-3k+2[k={k}]", one(check_w_3k2, k, method, timeout)))
    for k in (2, 3, 4):
        for n in range(3, 15):
            jobs.append((f"cycle-theorem[k={k},n={n}]",
                         one(check_cycle_theorem, k, n, method)))

    def sweep(k, ns, stretch, use_method):
        return lambda: table_sweep(k, reference_tables.grid_p(k), ns,
                                   method=use_method, timeout=timeout,
                                   threads=threads, stretch_n=frozenset(stretch))

    jobs.append(("table1", sweep(2, reference_tables.TABLE_2CUT_N, (), "dual")))
    for k, mandatory, stretch in ((3, TABLE2_MANDATORY_N, TABLE2_STRETCH_N),
                                  (4, TABLE3_MANDATORY_N, TABLE3_STRETCH_N)):
        for n in mandatory:
            jobs.append((f"table{k - 1}[n={n}]", sweep(k, (n,), (), method)))
        if include_stretch:
            for n in stretch:
                jobs.append((f"table{k - 1}[n={n},stretch]",
                             sweep(k, (n,), stretch, method)))
    for n in range(10, 16):
        jobs.append((f"forced-independent-subset[k=3,n={n}]",
                     one(check_forced_independent_subset, 3, n)))
    for n in range(13, 18):
        jobs.append((f"forced-independent-subset[k=4,n={n}]",
                     one(check_forced_independent_subset, 4, n)))
    for k in range(2, 6):
        for n in range(3, 21):
            jobs.append((f"void-boundary[k={k},n={n}]", one(check_void, k, n)))
    for n in range(9, 15):
        jobs.append((f"blocks-oracle[k=3,n={n}]", one(check_blocks, 3, n)))
    for n in range(13, 17):
        jobs.append((f"blocks-oracle[k=4,n={n}]", one(check_blocks, 4, n)))

    reports: list[CheckReport] = []
    for label, thunk in jobs:
        if only and only not in label:
            continue
        reports.extend(thunk())
    return reports
