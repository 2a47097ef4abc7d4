"""Smoke test for the threeev extension module.

Build and install first, e.g. `maturin build -m crates/py/Cargo.toml --release`
and `pip install target/wheels/threeev-*.whl`.
"""

import threeev


def main():
    g = threeev.construct("petersen").cone()
    r = g.certify()
    assert r["three_eigenvalues"], r
    s = r["spectrum"]
    assert (s["theta0"], s["theta1"], s["theta2"], s["m1"], s["m2"]) == (5, 1, -2, 5, 5), s

    c6 = threeev.Graph(6, [(i, (i + 1) % 6) for i in range(6)])
    assert not c6.certify()["three_eigenvalues"]
    assert threeev.Graph.from_graph6(c6.to_graph6()) == c6
    assert c6.is_isomorphic(threeev.Graph(6, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 5), (5, 0)]))

    rows = threeev.feasible(100)
    assert len(rows) == 58, len(rows)
    assert rows[0].valency_array == (1, 10, 10, 4)

    comp = threeev.family_comp(1)
    assert comp.n == 48
    assert comp.predicted_complement_spectrum() == [("26", 1), ("2", 27), ("-4", 20)]
    ref = comp.refute()
    assert ref is not None and ref["method"] == "interlacing_decomposition"

    cs = threeev.cauchy_schwarz(50, 9, -3, 25)
    assert (cs["lhs"], cs["rhs"], cs["pass"]) == (4356, 3456, False)

    found = threeev.bundled_star_search("star30-smoke")
    assert len(found) == 1
    assert found[0].certify()["spectrum"]["theta0"] == 12

    assert threeev.table(14).count("\n") == 3
    print("ok")


if __name__ == "__main__":
    main()
