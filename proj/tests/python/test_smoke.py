import math

import pytest

import rtlgauge as rg


def test_strip_comments():
    assert rg.strip_comments("assign y = a; // note") == "assign y = a; "
    assert rg.strip_comments('x = "//kept";') == 'x = "//kept";'


def test_resolve_top_module_helper_first():
    text = (
        "module helper(input a, output y); assign y = a; endmodule\n"
        "module top_module(input a, output y); helper h(.a(a), .y(y)); endmodule\n"
    )
    assert rg.resolve_top_module(text, "top_module") == "top_module"
    assert rg.resolve_top_module("module only(); endmodule", "top_module") == "only"


def test_list_modules_and_edges():
    mods = rg.list_modules("module a(); endmodule module b(); endmodule")
    assert [m[0] for m in mods] == ["a", "b"]
    assert rg.count_dependency_edges(
        "module m(input a, input b, output y); assign y = a & b; endmodule"
    ) == 2


def test_normalize_complexity():
    weights = rg.normalize_complexity({"t1": 0, "t2": 10, "t3": 20})
    assert weights["t1"] == pytest.approx(1.0)
    assert weights["t2"] == pytest.approx(12.5)
    assert weights["t3"] == pytest.approx(24.0)


def test_attempt_hqi():
    assert rg.attempt_hqi(100, 2, 1, 100, 2, 1) == pytest.approx(100.0)
    assert rg.attempt_hqi(200, 4, 1, 100, 2, 1) == pytest.approx(50.0)
    assert rg.attempt_hqi(100, 2, 8, 100, 2, 3) == pytest.approx(100 / 1.5)
    assert rg.attempt_hqi(50, 1, 0, 100, 2, 0) == 100.0


def test_judge_simulation_fail_first():
    ok, _ = rg.judge_simulation("ALL TESTS PASSED\n")
    assert ok
    bad, reason = rg.judge_simulation("Mismatch at t=1\nALL TESTS PASSED\n")
    assert not bad
    assert "Mismatch" in reason


def test_spearman():
    assert rg.spearman_rho([1, 2, 3, 4], [1, 2, 4, 3]) == pytest.approx(0.8)
    assert rg.spearman_rho([1, 2, 3], [3, 2, 1]) == pytest.approx(-1.0)


def test_classify_failure():
    diag = "ERROR: Module `\\sub' referenced in module `\\top' in cell `\\u0' is not part of the design."
    assert rg.classify_failure(diag) == "undefined_module"
    assert rg.classify_failure("", timeout=True) == "synthesis_timeout"
    assert rg.classify_failure("mystery text") == "unclassified"


def test_extract_code():
    got = rg.extract_code("prose\n```verilog\nmodule m; endmodule\n```\nmore prose")
    assert "module m" in got
    assert rg.extract_code("no code here at all") is None
