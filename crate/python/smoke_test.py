"""Smoke test for the horikawa extension module.

Build and run:
    maturin build --release -m crates/py/Cargo.toml -o dist
    pip install --force-reinstall dist/horikawa-*.whl
    python python/smoke_test.py
"""

import json
from fractions import Fraction
from math import gcd

import horikawa as h


def main():
    assert h.hj_expand(4, 1) == [4]
    assert h.hj_expand(12, 5) == [3, 2, 3]
    assert Fraction(h.hj_eval([2, 5])) == Fraction(9, 5)

    for n in range(2, 60):
        for q in range(1, n):
            if gcd(n, q) == 1:
                assert Fraction(h.hj_eval(h.hj_expand(n, q))) == Fraction(n, q)

    c = h.classify([4])
    assert (c["kind"], c["delta"], c["m"], c["a"], c["two_gorenstein"]) == ("T", 1, 2, 1, True)
    assert h.classify([3, 2])["kind"] == "NotT"
    assert h.classify_singularity(3, 2)["kind"] == "DuVal"
    assert h.grow([4], "left") == [2, 5]
    assert h.discrepancies([3, 2, 3]) == ["-1/2"] * 3
    assert h.k2_contribution([2, 5]) == 2

    chains = h.enumerate_t_chains(8)
    for r in range(1, 9):
        assert sum(1 for c in chains if len(c) == r) == 2 ** r - 1
    assert h.enumerate_t_chains(2, two_gorenstein=True) == [[4], [3, 3]]

    assert h.d_strata(20, 7) == (152, 151)
    assert h.d_strata(17, 10)[1] is None

    t = json.loads(h.tangent_report(14, 1, "D'"))
    assert t["h1"] + t["nu"] == 7 * 14 + 18

    table = json.loads(h.table_json("T2", 20, 20))
    assert table["table"] == "T2"
    assert any(r["d"] == 7 and r["value"] == "161" for r in table["rows"])

    ok, report = h.verify("all", 20, hj_n_max=40)
    assert ok, report
    assert len(json.loads(report)["checks"]) == 14

    try:
        h.hj_expand(4, 2)
    except ValueError:
        pass
    else:
        raise AssertionError("non-coprime pair accepted")

    print("smoke test passed")


if __name__ == "__main__":
    main()
