import itertools

import pytest

import xorcount


def test_polynomials():
    assert xorcount.normalize_poly("1+x+x^4") == "x^4+x+1"
    assert xorcount.poly_weight("x^8+x^4+x^3+x+1") == 5
    assert xorcount.poly_mul("x^2+x+1", "x+1") == "x^3+1"
    assert xorcount.is_irreducible("x^4+x+1")
    assert not xorcount.is_irreducible("x^2+1")
    assert xorcount.smallest_factor("x^2+1") == "x+1"
    assert xorcount.irreducibles(3) == ["x^3+x+1", "x^3+x^2+1"]
    assert xorcount.irreducibles(8, max_weight=3) == []


def test_matrices():
    rows = xorcount.companion("x^2+x+1")
    assert rows == ["01", "11"]
    assert xorcount.char_poly(xorcount.companion("x^5+x^2+1")) == "x^5+x^2+1"
    assert xorcount.min_poly(["10", "01"]) == "x+1"
    cls = xorcount.element_class(xorcount.companion("x^4+x+1"))
    assert cls["d"] == 1
    assert xorcount.element_class(["10", "11"]) is None


def test_search_and_emit():
    r = xorcount.search("x^4+x+1", 4, timing=False)
    assert r["t"] == 1
    assert r["elapsed_ms"] == 0
    w = r["witness"]
    a = xorcount.realize(w["cycle_type"], w["factors"])
    assert xorcount.char_poly(a) == "x^4+x+1"
    assert xorcount.xor_count(a)["t"] == 1

    program = xorcount.emit(w["cycle_type"], w["factors"])
    assert len(program["steps"]) == 1
    for bits in itertools.product([0, 1], repeat=4):
        out = xorcount.simulate(program, bits)
        expected = [sum(int(a[i][j]) * bits[j] for j in range(4)) % 2 for i in range(4)]
        assert out == expected
    assert xorcount.netlist(w["cycle_type"], w["factors"]).startswith("x[1] ^= x[4]")


def test_errors():
    with pytest.raises(ValueError, match="reducible"):
        xorcount.search("x^2+1", 2)
    with pytest.raises(ValueError):
        xorcount.search("x^3+x+1", 9)
    with pytest.raises(ValueError):
        xorcount.verify("eq1", n_max=99)
    with pytest.raises(ValueError):
        xorcount.realize([2], [(1, 1)])


def test_table_and_verify():
    rows = xorcount.table(5, timing=False)
    assert [r["t"] for r in rows] == [1, 1, 2, 2, 2, 2]
    assert xorcount.verify("eq2", n_max=12)["violations"] == []
    assert xorcount.verify("conjecture", n_max=6, threads=2)["violations"] == []
    converse = xorcount.verify("converse")
    assert converse["violations"] == []
    assert converse["details"]["findings"]
