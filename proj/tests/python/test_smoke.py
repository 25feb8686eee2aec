import math

import pytest

import artstats


def test_linear_pair_is_maximally_correlated():
    x, y = artstats.generate("linear", n=400, noise=0.0, seed=1)
    stats = artstats.analyze_pair(x, y)
    assert stats["artmic"] == pytest.approx(1.0, abs=0.01)
    assert stats["pearson"] == pytest.approx(1.0, abs=1e-9)
    assert stats["artmcn"] == 0
    assert stats["n"] == 400


def test_independent_pair_scores_low():
    x, y = artstats.generate("independent", n=400, seed=2)
    stats = artstats.analyze_pair(x, y)
    assert stats["artmic"] < 0.35
    assert abs(stats["pearson"]) < 0.2


def test_depth_budget():
    assert artstats.depth_budget(10) == 2.0
    assert artstats.depth_budget(1 << 20) == pytest.approx(12.0)


def test_dp_on_explicit_counts():
    diag = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    value = artstats.max_restricted_divergence(diag, row_first=True, r=1, c=1)
    assert value == pytest.approx(math.log(2.0), abs=1e-9)


def test_errors_surface_as_value_error():
    with pytest.raises(ValueError):
        artstats.analyze_pair([1.0, 2.0], [1.0])
    with pytest.raises(ValueError):
        artstats.generate("spiral")


def test_mine_csv(tmp_path):
    xs, ys = artstats.generate("sine", n=300, noise=0.05, seed=3)
    _, noise = artstats.generate("independent", n=300, seed=4)
    path = tmp_path / "table.csv"
    rows = ["a,b,c"] + [f"{x},{y},{z}" for x, y, z in zip(xs, ys, noise)]
    path.write_text("\n".join(rows) + "\n")

    records = artstats.mine_csv(str(path))
    assert len(records) == 3
    by_pair = {(r["var_a"], r["var_b"]): r for r in records}
    assert by_pair[("a", "b")]["stats"]["artmic"] > 0.8
    assert by_pair[("a", "c")]["stats"]["artmic"] < 0.5
