"""Smoke tests for the python module."""

import pytest

import ttc


def test_field_arithmetic():
    f7 = ttc.Field.prime(7)
    assert f7.arith("5", "", "inv") == "3"
    assert f7.size == 7
    q = ttc.Field.rationals()
    assert q.arith("1/2", "1/3", "add") == "5/6"
    f8 = ttc.Field.extension(2, [1, 1, 0, 1])
    assert f8.size == 8
    assert f8.arith("0,1,0", "0,1,0", "mul") == "0,0,1"  # x * x = x^2
    with pytest.raises(ttc.TtcError):
        ttc.Field.prime(6)


def test_matrix_and_scan():
    l3 = ttc.pascal(2, lower=True)
    assert l3.to_lists() == [["1", "0", "0"], ["1", "1", "0"], ["1", "2", "1"]]
    assert ttc.nonsingularity_scan(l3, "lower") == {"holds": True, "minors_checked": 13}
    v = ttc.nonsingularity_scan(l3.mod_p(2), "lower")
    assert v["holds"] is False
    assert v["witness_rows"] == [3] and v["witness_cols"] == [2]


def test_pascal_identity():
    for n in range(6):
        p = ttc.pascal(n)
        l = ttc.pascal(n, lower=True)
        assert p == l * l.transpose()


def test_tree_code_roundtrip():
    f3 = ttc.Field.prime(3)
    t = ttc.Matrix(f3, [["1", "0"], ["1", "2"]])
    code = ttc.mds_generator(t)
    rep = ttc.min_rel_distance(code)
    assert rep["delta"] == "3/4"
    pc = ttc.interleave_pcheck(t)
    assert ttc.is_mds(pc)["mds"] is True
    ext = ttc.extract_triangular(pc)
    assert ext["t"] == t and ext["swapped_blocks"] == []


def test_growth_and_entropy():
    ent = ttc.entropy_bound(2, 6, "1/2")
    assert ent["satisfied"] is True
    r = ttc.grow_random(q=2, d=6, delta="1/2", n=3, seed=9)
    num, _, den = r["delta"].partition("/")
    assert int(num) * 2 > int(den or "1")
    again = ttc.grow_random(q=2, d=6, delta="1/2", n=3, seed=9)
    assert again["code"].generator == r["code"].generator


def test_birkhoff():
    q = ttc.Field.rationals()
    assert ttc.polya_condition([0, 1], [0]) is True
    assert ttc.polya_condition([1], [1]) is False
    coeffs = ttc.solve_birkhoff(q, "0", "1", [0, 1], ["0", "1"], [0], ["2"], hasse=False)
    assert coeffs == ["0", "1", "1"]
    rep = ttc.polya_mds_equiv(ttc.Field.prime(2), "1", "0", 2)
    assert rep["agree"] is True and rep["mds"] is False


def test_counterexample():
    r = ttc.counterexample_search(2024, 64)
    assert r["l_witness_rows"] == [3, 4]
    assert r["l_witness_cols"] == [1, 3]
    sub = r["lfactor"].submatrix([3, 4], [1, 3])
    assert sub.to_lists() == [["2", "2"], ["3", "3"]]


def test_matrix_file_io(tmp_path):
    f8 = ttc.Field.extension(2, [1, 1, 0, 1])
    m = ttc.Matrix(f8, [["1,0,1", "0,1,0"]])
    path = str(tmp_path / "m.mat")
    ttc.write_matrix(path, m)
    back = ttc.read_matrix(path)
    assert back == m
