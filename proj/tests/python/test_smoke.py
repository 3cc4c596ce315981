from fractions import Fraction
import json

import pytest

import tilingdet


def test_hexagon_counts_agree_across_methods():
    assert tilingdet.hexagon_count(2, 2) == 20
    for method in ("closed", "det", "oracle"):
        assert tilingdet.count("hexagon", k=2, q=2, method=method) == 20


def test_dented_regions():
    assert tilingdet.semihex_dented_count(2, 1, [0, 2]) == 2
    assert tilingdet.count("semihex", k=1, q=3, dents=[2]) == 1
    assert tilingdet.aztec_dented_count(2, 2, [0, 2]) == 4
    assert tilingdet.aztec_dented_count(2, 2, [1, 1]) == 0
    assert tilingdet.crossing_restricted_count(1, 2, [1]) == 1


def test_large_values_are_exact_ints():
    value = tilingdet.problem10(6)
    assert isinstance(value, int)
    assert value == 1372102275656318976000
    assert tilingdet.count("problem10", k=6) == value


def test_one_third():
    for n in range(1, 11):
        central = tilingdet.central_lozenge(n, n, "odd")
        total = tilingdet.hexagon_count(2 * n - 1, 2 * n)
        assert Fraction(central, total) == Fraction(1, 3)
    report = tilingdet.cross_check("problem1", n=1)
    assert report["agree"]
    assert report["ratio"] == Fraction(1, 3)
    assert [leg["value"] for leg in report["legs"]] == [1, 1, 1]


def test_cross_check_and_budget():
    report = tilingdet.cross_check("notri", k=1, n=1)
    assert report["agree"]
    assert [leg["value"] for leg in report["legs"]] == [2, 2, 2]
    starved = tilingdet.cross_check("hexagon", k=3, q=3, budget=10)
    assert starved["oracle_skipped"] and starved["agree"]
    with pytest.raises(tilingdet.BudgetExceeded):
        tilingdet.count("hexagon", k=3, q=3, method="oracle", budget=10)


def test_errors():
    with pytest.raises(ValueError):
        tilingdet.semihex_dented_count(2, 1, [2, 0])
    with pytest.raises(tilingdet.DomainError):
        tilingdet.count("dodecagon", k=1)
    with pytest.raises(ValueError):
        tilingdet.count("hexagon", k=1, q=1, colour="red")


def test_series_helpers():
    assert tilingdet.wz_sum(2) == Fraction(7, 3)
    assert tilingdet.zavrotsky(2, 2) == 1
    assert tilingdet.zavrotsky(1, 3) == 0


def test_identities():
    assert "wz" in tilingdet.identity_names()
    report = tilingdet.run_identity("wz", n_max=20)
    assert report["pass"] and report["cases"] > 0
    assert tilingdet.run_identity("g-recurrence", k_max=3, order=12)["pass"]


def test_regions_and_cli():
    region = json.loads(tilingdet.region_json("hexagon", k=1, q=1))
    assert region["cell_count"] == 6
    assert "^" in tilingdet.render("hexagon", k=1, q=1)
    code, out, err = tilingdet.run_cli(["--format", "json", "count", "hexagon", "--k", "2", "--q", "2"])
    assert code == 0 and err == ""
    assert json.loads(out)["value"] == "20"
    assert tilingdet.run_cli(["count", "hexagon", "--k", "2"])[0] == 2
    assert "missing-squares" in tilingdet.families()
