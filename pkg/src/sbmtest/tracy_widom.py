"""Tracy-Widom(1) reference law: CDF, quantiles, and moments.

The distribution is loaded from a committed table (generated once by
scripts/generate_tw1_table.py from the Painleve II representation) and
interpolated with a monotone piecewise cubic.  Nothing is computed from
scratch at runtime.
"""

import os
from dataclasses import dataclass
from importlib import resources

import numpy as np
from scipy.interpolate import PchipInterpolator
from scipy.optimize import brentq

from .errors import ConfigurationError

ENV_TABLE_PATH = "SBMTEST_TW1_TABLE"


@dataclass(frozen=True)
class TracyWidom1Table:
    x: np.ndarray
    cdf: np.ndarray
    mean: float
    sd: float

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        c = np.asarray(self.cdf, dtype=float)
        if x.ndim != 1 or x.shape != c.shape or x.size < 2:
            raise ConfigurationError("table needs matching 1-d x and cdf columns")
        if np.any(np.diff(x) <= 0) or np.any(np.diff(c) <= 0):
            raise ConfigurationError("table must be strictly increasing")
        if c[0] <= 0.0 or c[-1] >= 1.0:
            raise ConfigurationError("cdf values must lie strictly in (0, 1)")
        if not (-1.3 < self.mean < -1.1 and 1.2 < self.sd < 1.35):
            raise ConfigurationError(
                f"implausible moments: mean={self.mean}, sd={self.sd}"
            )
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "cdf", c)
        object.__setattr__(self, "_interp", PchipInterpolator(x, c))

    @classmethod
    def from_text(cls, text: str) -> "TracyWidom1Table":
        """Parse the two-column "x cdf" format with '#' comments.

        Moment values may be carried in "# mean:" / "# sd:" comment lines;
        otherwise they are recomputed from the grid.
        """
        xs, cs = [], []
        mean = sd = None
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line.lstrip("#").strip()
                for name in ("mean", "sd"):
                    if body.startswith(name + ":"):
                        val = float(body.split(":", 1)[1])
                        mean, sd = (val, sd) if name == "mean" else (mean, val)
                continue
            parts = line.split()
            if len(parts) != 2:
                raise ConfigurationError(
                    f"table line {lineno}: expected 'x cdf', got {line!r}"
                )
            xs.append(float(parts[0]))
            cs.append(float(parts[1]))
        x = np.array(xs)
        c = np.array(cs)
        if mean is None or sd is None:
            interp = PchipInterpolator(x, c)
            dens = interp.derivative()(x)
            mean = float(np.trapezoid(x * dens, x))
            # a malformed grid can give a negative variance; the NaN is
            # rejected by the moment plausibility checks in __post_init__
            with np.errstate(invalid="ignore"):
                sd = float(np.sqrt(np.trapezoid(x**2 * dens, x) - mean**2))
        return cls(x, c, mean, sd)

    @classmethod
    def load(cls, path=None) -> "TracyWidom1Table":
        """Load from an explicit path, the env override, or the bundled copy."""
        if path is None:
            path = os.environ.get(ENV_TABLE_PATH)
        if path is not None:
            with open(path) as fh:
                return cls.from_text(fh.read())
        text = resources.files("sbmtest").joinpath("data/tw1_cdf.txt").read_text()
        return cls.from_text(text)

    def cdf_at(self, x: float) -> float:
        """CDF by monotone cubic interpolation, clamped to the grid
        endpoint values outside the tabulated range (never exactly 0/1)."""
        x = float(x)
        if x <= self.x[0]:
            return float(self.cdf[0])
        if x >= self.x[-1]:
            return float(self.cdf[-1])
        return float(self._interp(x))

    def quantile(self, p: float) -> float:
        p = float(p)
        if not 0.0 < p < 1.0:
            raise ConfigurationError(f"quantile level must be in (0,1), got {p}")
        if p <= self.cdf[0]:
            return float(self.x[0])
        if p >= self.cdf[-1]:
            return float(self.x[-1])
        return float(brentq(lambda t: self._interp(t) - p,
                            self.x[0], self.x[-1], xtol=1e-10))

    def moments(self) -> tuple[float, float]:
        return self.mean, self.sd


_default_table: TracyWidom1Table | None = None


def default_table() -> TracyWidom1Table:
    global _default_table
    if _default_table is None:
        _default_table = TracyWidom1Table.load()
    return _default_table


def tw1_cdf(x: float) -> float:
    return default_table().cdf_at(x)


def tw1_quantile(p: float) -> float:
    return default_table().quantile(p)


def tw1_moments() -> tuple[float, float]:
    return default_table().moments()
