import json

from totalcut.verify import (CheckReport, check_blocks, check_cycle_theorem,
                             check_facets_w9, check_forced_independent_subset,
                             check_void,
                             check_w_3k1, check_w_3k2, check_w_k3,
                             render_markdown_table, reports_to_csv,
                             reports_to_json_lines, run_with_timeout,
                             table_sweep)


def test_facets_check():
    assert check_facets_w9().verdict == "pass"


def test_w_k3_checks():
    assert check_w_k3(9).verdict == "pass"
    r = check_w_k3(11)
    assert r.verdict == "pass"
    assert r.observed["morse"]["critical"] == [[2, 3, 5, 7, 9, 11]]


def test_w_3k_checks():
    assert check_w_3k1(3).verdict == "pass"
    assert check_w_3k2(3).verdict == "pass"


def test_cycle_theorem_checks():
    assert check_cycle_theorem(2, 4).verdict == "pass"
    assert check_cycle_theorem(3, 5).verdict == "pass"
    assert check_cycle_theorem(2, 7).verdict == "pass"


def test_forced_subset_check_and_skip():
    assert check_forced_independent_subset(3, 10).verdict == "pass"
    skipped = check_forced_independent_subset(3, 9)
    assert skipped.verdict == "skipped" and "hypothesis" in skipped.reason


def test_void_checks():
    assert check_void(3, 8).verdict == "pass"
    assert check_void(3, 9).verdict == "pass"
    assert check_void(4, 12).observed == "nonvoid"


def test_blocks_check():
    assert check_blocks(3, 9).verdict == "pass"


def test_reports_are_reproducible():
    a = check_w_k3(10)
    b = check_w_k3(10)
    assert (a.verdict, a.expected, a.observed) == (b.verdict, b.expected, b.observed)


def test_table_sweep_cell_and_markdown():
    reports = table_sweep(2, (3,), (8, 9), method="dual")
    assert [r.verdict for r in reports] == ["pass", "pass"]
    md = render_markdown_table(2, reports)
    assert "4: Z^2" in md and md.startswith("| p\\n |")


def test_table_sweep_void_cells():
    reports = table_sweep(2, (5,), (8, 9, 10), method="dual")
    assert all(r.verdict == "pass" and r.observed == "void" for r in reports)


def test_table_sweep_unchecked_cell():
    # (k=3, p=4, n=16) is blank in the published table but nonvoid
    reports = table_sweep(3, (4,), (16,), method="auto")
    assert reports[0].expected == "unchecked"
    assert reports[0].verdict == "pass"
    assert reports[0].observed != "void"


def test_table_sweep_timeout_records_skipped():
    reports = table_sweep(4, (3,), (22,), method="auto", timeout=0.5)
    assert reports[0].verdict == "skipped"
    assert "timeout" in reports[0].reason


def test_table_sweep_parallel_matches_serial():
    serial = table_sweep(2, (3, 4), (8, 9, 10), method="dual")
    parallel = table_sweep(2, (3, 4), (8, 9, 10), method="dual",
                           timeout=120.0, threads=3)
    assert [(r.params["p"], r.params["n"], r.verdict, r.observed) for r in serial] == \
        [(r.params["p"], r.params["n"], r.verdict, r.observed) for r in parallel]


def test_run_with_timeout_paths():
    assert run_with_timeout(len, (["a", "b"],)) == ("ok", 2)
    status, _ = run_with_timeout(_spin, (), timeout=0.3)
    assert status == "timeout"
    status, msg = run_with_timeout(_boom, ())
    assert status == "error" and "RuntimeError" in msg


def _spin():
    while True:
        pass


def _boom():
    raise RuntimeError("no")


def test_report_serialization():
    r = CheckReport("demo", {"k": 1}, "x", "x", "pass", seconds=0.5)
    line = reports_to_json_lines([r])
    data = json.loads(line)
    assert data["schema"] == "totalcut/1" and data["verdict"] == "pass"
    csv_text = reports_to_csv([r])
    assert csv_text.splitlines()[0].startswith("name,")
    assert "demo" in csv_text
