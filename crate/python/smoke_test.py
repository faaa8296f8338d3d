"""Smoke test for the pyordcone extension.

Build and install first:

    cd crates/py && maturin build --release -o dist && pip install dist/pyordcone-*.whl
"""

from pathlib import Path

import pyordcone as oc

DATA = Path(__file__).resolve().parent.parent / "data"


def main():
    w = oc.Weights(["2", "2", "2"], ["0.25", "0.25", "0.25"])
    assert w.k == 4 and w.is_pointed()
    a = w.facet_matrix()
    assert len(a) == w.facet_count() == 8
    assert a[0] == ["1", "2", "4", "8"]
    assert [label for label, _, _ in w.spanning_rays()] == ["u1", "u2", "u3", "g1", "g2", "g3"]

    assert oc.Weights.standard_ordinal(3).special_case() == "standard_ordinal"
    assert oc.dominates(oc.Weights(["10"], ["0"]), ["10", 0], [0, 1])
    assert not oc.dominates(oc.Weights.standard_ordinal(2), [0, 1], [9, 0])
    assert oc.dominates(w, [1, 2, 0, 0], [1, 2, 0, 0], strict=False)

    pts = [[1, 2], ["0.5", 3], [3, 0], [1, 2]]
    assert oc.filter_nondominated(oc.Weights.standard_ordinal(2), pts) == [2]
    assert oc.filter_nondominated(oc.Weights.pareto(2), pts) == [0, 1, 2, 3]

    d = oc.Weights(["2", "1"], ["0.5", "0.3"])
    assert d.degenerate_indices() == [1]
    m = d.merge()
    assert m["groups"] == [[1, 2], [3]]
    assert m["weights"].omega == ["2"] and m["weights"].gamma == ["0.15"]

    try:
        oc.Weights(["2"], ["0.6"])
    except ValueError:
        pass
    else:
        raise AssertionError("omega * gamma > 1 must be rejected")

    g = oc.Graph.from_json((DATA / "nine_green_vs_one_red.json").read_text())
    paths = oc.efficient_paths(g, "s", "t", oc.Weights.standard_ordinal(2))
    assert [p["counts"] for p in paths] == [["0", "1"], ["9", "0"]]
    assert paths[1]["nodes"][0] == "s" and len(paths[1]["edges"]) == 9

    g6 = oc.Graph.from_json((DATA / "six_green_vs_four_red.json").read_text())
    assert len(oc.efficient_paths(g6, "s", "t", oc.Weights(["2"], ["0"]))) == 1
    merged = oc.efficient_paths(g6, "s", "t", oc.Weights(["2"], ["0.5"]), merge=True)
    assert [p["counts"] for p in merged] == [["6", "0"]]

    tiny = oc.Graph(2, [("s", "a", 1, 4), ("a", "t", 1, "5"), ("s", "t", 2, 1)])
    assert len(tiny) == 3
    assert len(oc.efficient_paths(tiny, "s", "t", oc.Weights(["0"], ["0"]), mode="one_per_vector")) == 2
    try:
        oc.efficient_paths(g6, "s", "t", oc.Weights(["1"], ["0"]), cap=1)
    except RuntimeError:
        pass
    else:
        raise AssertionError("path cap must raise")

    print("smoke test passed")


if __name__ == "__main__":
    main()
