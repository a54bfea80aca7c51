"""Monte Carlo drivers for the size, power, and null-density studies.

Each experiment draws replicate network pairs from a named scenario,
runs the full two-sample pipeline on every pair, and reports rejection
rates for the raw and bootstrap-corrected statistics.  Tables are
bit-reproducible given (scenario, seed): every replicate derives its own
seed from the master seed and its index, and results are aggregated in
index order.
"""

import csv
import io
import time
from dataclasses import dataclass, field, replace

import numpy as np

from .errors import ConfigurationError, SbmTestError
from .graph_model import BlockProbabilityMatrix, CommunityLabeling, sample_sbm
from .seeds import Seed, rng, seed_sequence
from .two_sample_test import TestConfig, run_two_sample_test
from .tracy_widom import tw1_quantile

KINDS = ("null", "alt_B", "alt_g", "alt_K")
LABEL_SCHEMES = ("equal_blocks", "multinomial")


@dataclass(frozen=True)
class Scenario:
    kind: str
    k_x: int
    k_y: int
    r: float
    reps: int
    seed: int = 0
    community_size: int | None = None
    n: int | None = None
    label_scheme: str = "equal_blocks"

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ConfigurationError(f"unknown scenario kind: {self.kind}")
        if self.label_scheme not in LABEL_SCHEMES:
            raise ConfigurationError(f"unknown label scheme: {self.label_scheme}")
        if not 0.0 < self.r <= 0.25:
            raise ConfigurationError(f"r must be in (0, 0.25], got {self.r}")
        if (self.community_size is None) == (self.n is None):
            raise ConfigurationError("give exactly one of community_size or n")
        if self.kind != "alt_K" and self.k_x != self.k_y:
            raise ConfigurationError(f"{self.kind} requires K_x == K_y")

    @property
    def num_nodes(self) -> int:
        if self.n is not None:
            return self.n
        return self.community_size * self.k_x

    def block_matrices(self) -> tuple[BlockProbabilityMatrix, BlockProbabilityMatrix]:
        r = self.r
        if self.kind == "alt_B":
            bx = r * (0.5 + 3.0 * np.eye(self.k_x))
            by = r * (3.0 + 5.0 * np.eye(self.k_y))
        elif self.kind == "alt_K":
            bx = r * (1.0 + 3.0 * np.eye(self.k_x))
            by = r * (1.0 + 3.0 * np.eye(self.k_y))
        else:
            bx = r * (1.0 + 3.0 * np.eye(self.k_x))
            by = bx.copy()
        for b in (bx, by):
            if b.min() <= 0.0 or b.max() >= 1.0:
                raise ConfigurationError(
                    f"scenario probabilities leave (0,1): r={r}, kind={self.kind}"
                )
        return BlockProbabilityMatrix(bx), BlockProbabilityMatrix(by)

    def draw_labelings(self, rep_seed) -> tuple[CommunityLabeling, CommunityLabeling]:
        n = self.num_nodes
        gx = CommunityLabeling.equal_blocks(n, self.k_x)
        if self.kind == "alt_g" or self.label_scheme == "multinomial":
            gy = _multinomial_labels(n, self.k_y, seed_sequence(rep_seed, 17))
        elif self.kind in ("null", "alt_B"):
            gy = gx
        else:  # alt_K
            gy = CommunityLabeling.equal_blocks(n, self.k_y)
        return gx, gy


def _multinomial_labels(n, k, seed, max_tries=100):
    gen = rng(seed)
    for _ in range(max_tries):
        labels = gen.integers(1, k + 1, size=n)
        if np.unique(labels).size == k:
            return CommunityLabeling(labels, k)
    raise ConfigurationError(f"could not draw {k} nonempty communities on {n} nodes")


@dataclass
class ExperimentTable:
    rows: list[dict] = field(default_factory=list)

    def to_csv(self) -> str:
        if not self.rows:
            return ""
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=list(self.rows[0].keys()))
        writer.writeheader()
        writer.writerows(self.rows)
        return buf.getvalue()

    def write_csv(self, path) -> None:
        with open(path, "w", newline="") as fh:
            fh.write(self.to_csv())


def _run_replicate(scenario, rep, alpha, k_max, bootstrap_m):
    rep_seed = seed_sequence(scenario.seed, rep)
    gx, gy = scenario.draw_labelings(rep_seed)
    bx, by = scenario.block_matrices()
    X = sample_sbm(gx, bx, seed_sequence(rep_seed, 0))
    Y = sample_sbm(gy, by, seed_sequence(rep_seed, 1))
    config = TestConfig(
        alpha=alpha,
        k_max=k_max,
        bootstrap_m=bootstrap_m,
        seed=seed_sequence(rep_seed, 2),
    )
    return run_two_sample_test(X, Y, config)


def _experiment_row(scenario, alpha, k_max, bootstrap_m):
    start = time.time()
    critical = tw1_quantile(1.0 - alpha / 2.0)
    reject_tn = reject_boot = 0
    n_ok = n_boot = failures = 0
    for rep in range(scenario.reps):
        try:
            report = _run_replicate(scenario, rep, alpha, k_max, bootstrap_m)
        except SbmTestError:
            failures += 1
            continue
        n_ok += 1
        reject_tn += report.t_n >= critical
        if report.t_n_boot is not None:
            n_boot += 1
            reject_boot += report.t_n_boot >= critical
    return {
        "kind": scenario.kind,
        "k_x": scenario.k_x,
        "k_y": scenario.k_y,
        "r": scenario.r,
        "n": scenario.num_nodes,
        "label_scheme": scenario.label_scheme,
        "alpha": alpha,
        "reps": scenario.reps,
        "failures": failures,
        "rejection_rate_tn": reject_tn / n_ok if n_ok else float("nan"),
        "rejection_rate_tnboot": reject_boot / n_boot if n_boot else float("nan"),
        "seed": scenario.seed,
        "elapsed_s": round(time.time() - start, 3),
    }


def run_size_experiment(
    scenario: Scenario,
    alpha: float = 0.05,
    k_max: int = 10,
    bootstrap_m="auto",
) -> ExperimentTable:
    """Empirical size under the null: both networks drawn from the same
    (g, B) in every replicate."""
    if scenario.kind != "null":
        raise ConfigurationError("size experiment requires a null scenario")
    return ExperimentTable([_experiment_row(scenario, alpha, k_max, bootstrap_m)])


def run_power_experiment(
    scenario: Scenario,
    alpha: float = 0.05,
    k_max: int = 10,
    bootstrap_m="auto",
) -> ExperimentTable:
    """Empirical power under one of the three alternative designs."""
    if scenario.kind == "null":
        raise ConfigurationError("power experiment requires an alternative scenario")
    return ExperimentTable([_experiment_row(scenario, alpha, k_max, bootstrap_m)])


def null_density_experiment(
    n: int,
    reps: int,
    seed: Seed = 0,
    bootstrap_m: int = 50,
    k: int = 3,
    within: float = 0.5,
    between: float = 0.1,
) -> list[tuple[float, float]]:
    """Paired raw and bootstrap-corrected statistics under the null.

    Defaults reproduce the null-density study: three equal communities
    with within-probability 0.5 and between-probability 0.1.
    """
    if n < 100 or reps < 100:
        raise ConfigurationError("need n >= 100 and reps >= 100")
    b = np.full((k, k), between)
    np.fill_diagonal(b, within)
    B = BlockProbabilityMatrix(b)
    g = CommunityLabeling.equal_blocks(n, k)
    out = []
    for rep in range(reps):
        rep_seed = seed_sequence(seed, rep)
        X = sample_sbm(g, B, seed_sequence(rep_seed, 0))
        Y = sample_sbm(g, B, seed_sequence(rep_seed, 1))
        config = TestConfig(bootstrap_m=bootstrap_m, seed=seed_sequence(rep_seed, 2))
        report = run_two_sample_test(X, Y, config)
        out.append((report.t_n, report.t_n_boot))
    return out


def density_samples_to_csv(samples: list[tuple[float, float]]) -> str:
    lines = ["t_n,t_n_boot"]
    lines += [f"{a!r},{b!r}" for a, b in samples]
    return "\n".join(lines) + "\n"


def profile_scenarios(name: str, reps: int | None = None, seed: int = 0):
    """Named scenario grids for the standard size/power studies.

    table4 uses the r grid {0.01, 0.05, 0.1}; table4_alt covers the
    alternative grid {0.05, 0.1, 0.2} for the same third-alternative
    design.
    """
    ks = (2, 3, 4, 5, 6, 10)
    if name == "table1":
        cells = [
            Scenario("null", k, k, r, reps or 200, seed,
                     community_size=200)
            for k in ks for r in (0.05, 0.1, 0.2)
        ]
    elif name == "table2":
        cells = [
            Scenario("alt_B", k, k, r, reps or 200, seed,
                     community_size=200)
            for k in ks for r in (0.01, 0.05, 0.1)
        ]
    elif name == "table3":
        cells = [
            Scenario("alt_g", k, k, r, reps or 200, seed, n=1200)
            for k in ks for r in (0.01, 0.05, 0.1)
        ]
    elif name == "table4":
        cells = [
            Scenario("alt_K", k, k + 2, r, reps or 200, seed, n=1200)
            for k in (1, 2, 3, 4, 6, 10) for r in (0.01, 0.05, 0.1)
        ]
    elif name == "table4_alt":
        cells = [
            Scenario("alt_K", k, k + 2, r, reps or 200, seed, n=1200)
            for k in (1, 2, 3, 4, 6) for r in (0.05, 0.1, 0.2)
        ]
    else:
        raise ConfigurationError(f"unknown profile: {name}")
    return cells


def run_profile(name: str, reps: int | None = None, seed: int = 0,
                alpha: float = 0.05, bootstrap_m="auto", n: int = 600):
    """Run a named table profile cell by cell; 'figure1' emits density
    samples instead of a rejection table (run once per network size;
    typical choices are n = 600 and n = 1200)."""
    if name == "figure1":
        return null_density_experiment(n, reps or 1000, seed, bootstrap_m=50)
    table = ExperimentTable()
    for scenario in profile_scenarios(name, reps, seed):
        runner = run_size_experiment if scenario.kind == "null" else run_power_experiment
        table.rows += runner(scenario, alpha=alpha, bootstrap_m=bootstrap_m).rows
    return table
