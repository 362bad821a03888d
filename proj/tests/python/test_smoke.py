import json
from fractions import Fraction

import pytest

import selfsim

P5 = "5 4\n0 1\n1 2\n2 3\n3 4\n"
EXAMPLE = "5 5\n0 4\n0 1\n1 4\n1 2\n1 3\n"


def test_analyze_path():
    rec = selfsim.analyze(P5)
    assert rec["order"] == 5
    assert rec["s"]["s"] == [[0, 1, 0], [1, 0, 1], [0, 2, 0]]
    assert rec["omega"] == ["2/5", "2/5", "1/5"]
    assert rec["orbits"] == [[0, 4], [1, 3], [2]]
    assert rec["group_order"] == "2"
    assert rec["rho_adjacency"] == pytest.approx(3 ** 0.5, abs=1e-10)


def test_graph6_input():
    assert selfsim.analyze("DhC", format="graph6")["size"] == 4


def test_compare_homothetic_but_not_similar():
    doc = selfsim.compare(P5, EXAMPLE)
    assert doc["similar"] is False
    assert doc["homothetic"] is True
    assert doc["witness"] is None


def test_compare_cycles():
    c4 = selfsim.generate("cycle", n=4)
    c9 = selfsim.generate("cycle", n=9)
    doc = selfsim.compare(c4, c9)
    assert doc["similar"] is True
    assert doc["common_s"]["s"] == [[2]]


def test_generate_formats():
    assert selfsim.generate("path", n=5, format="graph6") == "DhC"
    text = selfsim.generate("loaded-torus", dims=[3, 3], q=2, m=2)
    assert text.splitlines()[0] == "45 54"
    assert "cycle" in selfsim.family_names()


def test_sequence_dict_and_string():
    report = selfsim.sequence({"family": "generalized-sun", "p": 3, "q": 2}, count=3, jobs=2)
    assert report["passed"] is True
    assert [t["order"] for t in report["terms"]] == [15, 20, 25]
    again = selfsim.sequence(json.dumps({"family": "generalized-sun", "p": 3, "q": 2}), count=3)
    assert again["terms"] == report["terms"]


def test_sequence_negative_control():
    report = selfsim.sequence({"family": "complete-graphs"}, count=3)
    assert report["passed"] is False
    assert report["verdict"]["similarity_ok"] is False


def test_entropy():
    assert selfsim.entropy(["1/4"] * 4) == pytest.approx(2.0)
    assert selfsim.entropy([Fraction(17, 20), Fraction(1, 10), Fraction(1, 20)]) == pytest.approx(0.7476, abs=5e-5)


def test_errors_map_to_python_exceptions():
    with pytest.raises(selfsim.DisconnectedError):
        selfsim.analyze("4 2\n0 1\n2 3\n")
    with pytest.raises(selfsim.ParseError):
        selfsim.analyze("3 2\n0 1\n1 x\n")
    with pytest.raises(selfsim.InvalidArgument):
        selfsim.generate("cycle", n=2)
    with pytest.raises(selfsim.ParseError):
        selfsim.sequence({"family": "cycles", "colour": 1})
    with pytest.raises(selfsim.SelfsimError):
        selfsim.entropy(["1/2"])
