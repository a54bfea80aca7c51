import numpy as np
import pytest

from sbmtest import ConfigurationError, Scenario
from sbmtest.sim_harness import (
    density_samples_to_csv,
    null_density_experiment,
    profile_scenarios,
    run_power_experiment,
    run_size_experiment,
)


class TestScenario:
    def test_kind_validation(self):
        with pytest.raises(ConfigurationError):
            Scenario("bogus", 2, 2, 0.1, 10, community_size=50)
        with pytest.raises(ConfigurationError):
            Scenario("null", 2, 3, 0.1, 10, community_size=50)  # K mismatch
        with pytest.raises(ConfigurationError):
            Scenario("null", 2, 2, 0.3, 10, community_size=50)  # r too big
        with pytest.raises(ConfigurationError):
            Scenario("null", 2, 2, 0.1, 10)  # neither size given
        with pytest.raises(ConfigurationError):
            Scenario("null", 2, 2, 0.1, 10, community_size=50, n=100)

    def test_block_designs(self):
        s = Scenario("alt_B", 2, 2, 0.05, 10, community_size=50)
        bx, by = s.block_matrices()
        assert bx.entries[0, 0] == pytest.approx(0.05 * 3.5)
        assert bx.entries[0, 1] == pytest.approx(0.05 * 0.5)
        assert by.entries[0, 0] == pytest.approx(0.05 * 8.0)
        assert by.entries[0, 1] == pytest.approx(0.05 * 3.0)

        s = Scenario("alt_K", 2, 4, 0.05, 10, n=120)
        bx, by = s.block_matrices()
        assert bx.entries.shape == (2, 2)
        assert by.entries.shape == (4, 4)
        assert by.entries[0, 0] == pytest.approx(4 * 0.05)
        assert by.entries[0, 1] == pytest.approx(0.05)

    def test_num_nodes(self):
        assert Scenario("null", 3, 3, 0.1, 10, community_size=200).num_nodes == 600
        assert Scenario("alt_g", 3, 3, 0.1, 10, n=900).num_nodes == 900

    def test_alt_g_labels_differ_and_cover(self):
        s = Scenario("alt_g", 3, 3, 0.1, 10, n=300)
        gx, gy = s.draw_labelings(rep_seed=np.random.SeedSequence(1))
        assert gx.num_communities == gy.num_communities == 3
        assert np.unique(gy.labels).size == 3
        assert not np.array_equal(gx.labels, gy.labels)


class TestExperiments:
    def test_size_experiment_smoke(self):
        s = Scenario("null", 2, 2, 0.1, reps=5, seed=1, community_size=60)
        table = run_size_experiment(s, bootstrap_m=5)
        row = table.rows[0]
        assert row["reps"] == 5
        assert 0.0 <= row["rejection_rate_tn"] <= 1.0
        assert 0.0 <= row["rejection_rate_tnboot"] <= 1.0
        assert row["failures"] == 0

    def test_size_requires_null(self):
        s = Scenario("alt_B", 2, 2, 0.1, reps=5, community_size=60)
        with pytest.raises(ConfigurationError):
            run_size_experiment(s)

    def test_power_experiment_detects_alt_B(self):
        s = Scenario("alt_B", 2, 2, 0.1, reps=5, seed=2, community_size=100)
        table = run_power_experiment(s, bootstrap_m=None)
        assert table.rows[0]["rejection_rate_tn"] == 1.0

    def test_power_requires_alternative(self):
        s = Scenario("null", 2, 2, 0.1, reps=5, community_size=60)
        with pytest.raises(ConfigurationError):
            run_power_experiment(s)

    def test_reproducible_given_seed(self):
        s = Scenario("null", 2, 2, 0.1, reps=3, seed=9, community_size=60)
        a = run_size_experiment(s, bootstrap_m=5).rows[0]
        b = run_size_experiment(s, bootstrap_m=5).rows[0]
        for key in ("rejection_rate_tn", "rejection_rate_tnboot"):
            assert a[key] == b[key]

    def test_csv_emission(self):
        s = Scenario("null", 2, 2, 0.1, reps=3, seed=9, community_size=60)
        text = run_size_experiment(s, bootstrap_m=5).to_csv()
        header, data = text.strip().split("\n")
        assert "rejection_rate_tn" in header
        assert len(data.split(",")) == len(header.split(","))


class TestNullDensity:
    def test_smoke_run_emits_finite_pairs(self):
        samples = null_density_experiment(120, 100, seed=0, bootstrap_m=3)
        assert len(samples) == 100
        arr = np.array(samples)
        assert np.all(np.isfinite(arr))

    def test_preconditions(self):
        with pytest.raises(ConfigurationError):
            null_density_experiment(50, 100)
        with pytest.raises(ConfigurationError):
            null_density_experiment(200, 10)

    def test_csv_shape(self):
        samples = [(1.0, 2.0), (3.0, 4.0)]
        text = density_samples_to_csv(samples)
        lines = text.strip().split("\n")
        assert lines[0] == "t_n,t_n_boot"
        assert len(lines) == 3


class TestProfiles:
    def test_profile_grids(self):
        assert len(profile_scenarios("table1")) == 18
        assert len(profile_scenarios("table2")) == 18
        assert len(profile_scenarios("table3")) == 18
        assert len(profile_scenarios("table4")) == 18
        assert all(s.kind == "alt_K" for s in profile_scenarios("table4"))
        assert all(s.k_y == s.k_x + 2 for s in profile_scenarios("table4"))
        with pytest.raises(ConfigurationError):
            profile_scenarios("table9")

    def test_reps_override(self):
        assert all(s.reps == 7 for s in profile_scenarios("table1", reps=7))
