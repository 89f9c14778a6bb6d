import pytest

import monodyn

SWAP = "q 2 n 2\n0 1\n1 0\n"
MIXED_ZERO = "q 3 n 2\nzero\n0 2\n"


def test_reduce_exponent():
    assert monodyn.reduce_exponent(0, 3) == 0
    assert monodyn.reduce_exponent(3, 3) == 1
    assert monodyn.reduce_exponent(5, 3) == 1
    assert monodyn.reduce_exponent(4, 5) == 4
    assert monodyn.reduce_exponent(10**18, 7) == (10**18 - 1) % 6 + 1


def test_matrix_operations():
    swap = [[0, 1], [1, 0]]
    assert monodyn.multiply(swap, swap, 2) == [[1, 0], [0, 1]]
    assert monodyn.power(swap, 2, 2) == [[1, 0], [0, 1]]
    assert monodyn.power(swap, 3, 2) == swap
    assert monodyn.compose(swap, swap, 2) == [[1, 0], [0, 1]]


def test_evaluate_uses_digit_encoding():
    # f(x1, x2) = (x2, x1) just swaps the digits
    assert monodyn.evaluate([[0, 1], [1, 0]], 3, [0, 2]) == [2, 0]
    # 0^0 = 1: the empty product is the unit digit 1
    assert monodyn.evaluate([[0]], 3, [0]) == [1]


def test_walk_counts_are_exact_python_ints():
    counts = monodyn.walk_counts([[2, 1], [1, 2]], 3, 10)
    assert counts[0][0] == (3**10 + 1) // 2
    assert counts[0][1] == (3**10 - 1) // 2


def test_sccs():
    out = monodyn.sccs([[0, 1], [1, 0]], 2)
    assert out["components"] == [[0, 1]]
    assert out["trivial"] == [False]
    assert out["loop_numbers"] == [2]


def test_decide():
    assert monodyn.decide([[1, 0], [0, 1]], 2) is True
    assert monodyn.decide([[0, 1], [1, 0]], 2) is False
    assert monodyn.decide([[2, 1], [1, 2]], 3) is False


def test_classify_report():
    report = monodyn.classify(SWAP, method="all")
    assert report["fixed_point_system"] is False
    assert report["q"] == 2 and report["n"] == 2
    assert report["brute"]["states"] == 4
    names = [s["name"] for s in report["screens"]]
    assert "loop-numbers" in names


def test_classify_reduces_zero_components():
    report = monodyn.classify(MIXED_ZERO)
    assert report["fixed_point_system"] is True
    assert report["reduction"]["kept"] == [2]
    assert report["reduction"]["reduced"]["rows"] == [[2]]


def test_phase():
    out = monodyn.phase(SWAP)
    assert out["states"] == 4
    assert out["transient_count"] == 0
    assert out["fixed_count"] == 2
    assert out["cycles"] == [{"length": 2, "count": 1}]
    assert out["fixed_points"] == ["00", "11"]


def test_phase_state_cap():
    with pytest.raises(RuntimeError):
        monodyn.phase(SWAP, state_cap=3)


def test_reduce_system():
    out = monodyn.reduce_system("q 2 n 2\nzero\n1 0\n")
    assert out["empty"] is True
    assert out["kept"] == []
    assert out["reduced"] is None

    kept = monodyn.reduce_system(MIXED_ZERO)
    assert kept["empty"] is False
    assert kept["kept"] == [2]


def test_canonicalize():
    assert monodyn.canonicalize("# c\n q 2  n 2\n0   1\n1 0") == SWAP


def test_graph_dot():
    dot = monodyn.graph_dot(SWAP)
    assert dot.startswith("digraph dependency {")
    assert "x1 -> x2;" in dot


def test_parse_error_is_value_error():
    with pytest.raises(ValueError):
        monodyn.classify("q 6 n 2\n0 1\n1 0\n")
