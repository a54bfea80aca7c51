"""Command-line entry point and edge-list ingestion.

Subcommands:
  test      run the two-sample test on two edge-list files
  simulate  run a named Monte Carlo profile and emit CSV
  tw        query the Tracy-Widom(1) reference table

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical error.
"""

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from . import __version__
from .errors import (
    AlignmentError,
    ConfigurationError,
    EdgeListParseError,
    NumericalError,
    SbmTestError,
)
from .graph_model import AdjacencyMatrix
from .sim_harness import ExperimentTable, density_samples_to_csv, run_profile
from .tracy_widom import tw1_cdf, tw1_quantile
from .two_sample_test import TestConfig, TestReport, run_two_sample_test

_SEPARATORS = (",", "\t", " ")


@dataclass(frozen=True)
class EdgeList:
    node_ids: tuple[str, ...]
    edges: frozenset[tuple[str, str]]
    self_loops_dropped: int = 0
    duplicates_dropped: int = 0


def load_edge_list(path) -> EdgeList:
    """Parse a "u v" / "u,v" / tab-separated edge list; '#' comments
    allowed; self-loops dropped with a warning count; duplicate
    unordered pairs collapsed."""
    nodes: set[str] = set()
    edges: set[tuple[str, str]] = set()
    self_loops = 0
    duplicates = 0
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            for sep in _SEPARATORS:
                if sep in line:
                    parts = [p.strip() for p in line.split(sep) if p.strip()]
                    break
            else:
                parts = [line]
            if len(parts) != 2:
                raise EdgeListParseError(
                    f"{path}:{lineno}: expected 'u v', got {line!r}"
                )
            u, v = parts
            nodes.update((u, v))
            if u == v:
                self_loops += 1
                continue
            pair = (u, v) if u < v else (v, u)
            if pair in edges:
                duplicates += 1
            edges.add(pair)
    if not nodes:
        raise EdgeListParseError(f"{path}: no edges or nodes found")
    return EdgeList(
        tuple(sorted(nodes)), frozenset(edges), self_loops, duplicates
    )


def edge_list_to_adjacency(el: EdgeList) -> tuple[AdjacencyMatrix, dict]:
    id_map = {node: i for i, node in enumerate(el.node_ids)}
    n = len(el.node_ids)
    a = np.zeros((n, n), dtype=np.int8)
    for u, v in el.edges:
        a[id_map[u], id_map[v]] = 1
        a[id_map[v], id_map[u]] = 1
    return AdjacencyMatrix(a), id_map


def adjacency_to_edge_lines(A: AdjacencyMatrix, ids=None):
    """Serialize back to edge-list lines (round-trip partner of
    load_edge_list)."""
    n = A.n
    ids = ids or [str(i) for i in range(n)]
    iu = np.triu_indices(n, k=1)
    return [
        f"{ids[i]} {ids[j]}"
        for i, j in zip(*iu)
        if A.entries[i, j]
    ]


def align_networks(
    ex: EdgeList, ey: EdgeList, mode: str = "strict"
) -> tuple[AdjacencyMatrix, AdjacencyMatrix, dict]:
    """Map both edge lists onto one shared node index (sorted IDs).

    strict mode requires identical ID sets; intersection mode keeps the
    common nodes only.
    """
    sx, sy = set(ex.node_ids), set(ey.node_ids)
    if mode == "strict":
        if sx != sy:
            diff = sorted(sx.symmetric_difference(sy))
            raise AlignmentError(
                f"node sets differ in strict mode; symmetric difference "
                f"({len(diff)} ids): {diff[:20]}{'...' if len(diff) > 20 else ''}"
            )
        shared = sx
    elif mode == "intersection":
        shared = sx & sy
        if not shared:
            raise AlignmentError("node sets are disjoint")
    else:
        raise ConfigurationError(f"unknown alignment mode: {mode}")
    ids = sorted(shared)
    id_map = {node: i for i, node in enumerate(ids)}
    n = len(ids)

    def build(el):
        a = np.zeros((n, n), dtype=np.int8)
        for u, v in el.edges:
            if u in id_map and v in id_map:
                a[id_map[u], id_map[v]] = 1
                a[id_map[v], id_map[u]] = 1
        return AdjacencyMatrix(a)

    return build(ex), build(ey), id_map


def _report_json(report: TestReport) -> str:
    d = report.to_dict()
    d["tool_version"] = __version__
    return json.dumps(d, indent=2)


def _report_csv(report: TestReport) -> str:
    fields = [
        "n", "khat_x", "khat_y", "t_n", "t_n_boot", "critical", "alpha",
        "p_value_bound", "decision", "k_mismatch", "clamp_count",
    ]
    vals = [getattr(report, f) for f in fields]
    return ",".join(fields) + "\n" + ",".join(str(v) for v in vals) + "\n"


def _emit(text: str, out_path) -> None:
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _cmd_test(args) -> int:
    ex = load_edge_list(args.x)
    ey = load_edge_list(args.y)
    X, Y, _ = align_networks(ex, ey, args.align)
    fixed_k = None
    if args.fixed_k:
        try:
            kx, ky = (int(p) for p in args.fixed_k.split(","))
        except ValueError:
            raise ConfigurationError(
                f"--fixed-k expects 'KX,KY', got {args.fixed_k!r}"
            )
        fixed_k = (kx, ky)
    bootstrap = "auto"
    if args.bootstrap is not None:
        bootstrap = None if args.bootstrap == "off" else int(args.bootstrap)
    config = TestConfig(
        alpha=args.alpha,
        k_max=args.kmax,
        fixed_k=fixed_k,
        bootstrap_m=bootstrap,
        seed=args.seed,
    )
    report = run_two_sample_test(X, Y, config)
    text = _report_json(report) if args.format == "json" else _report_csv(report)
    _emit(text, args.out)
    return 0


def _cmd_simulate(args) -> int:
    result = run_profile(
        args.profile, reps=args.reps, seed=args.seed, n=args.n,
        bootstrap_m="auto" if args.bootstrap is None
        else (None if args.bootstrap == "off" else int(args.bootstrap)),
    )
    if isinstance(result, ExperimentTable):
        _emit(result.to_csv(), args.out)
    else:
        _emit(density_samples_to_csv(result), args.out)
    return 0


def _cmd_tw(args) -> int:
    if args.quantile is not None:
        print(f"{tw1_quantile(args.quantile):.6f}")
    elif args.cdf is not None:
        print(f"{tw1_cdf(args.cdf):.6f}")
    else:
        raise ConfigurationError("tw requires --quantile or --cdf")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sbmtest",
        description="Two-sample test for stochastic block models",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p_test = sub.add_parser("test", help="test two edge-list networks")
    p_test.add_argument("--x", required=True, help="edge list of network X")
    p_test.add_argument("--y", required=True, help="edge list of network Y")
    p_test.add_argument("--alpha", type=float, default=0.05)
    p_test.add_argument("--kmax", type=int, default=10)
    p_test.add_argument("--fixed-k", dest="fixed_k", default=None,
                        help="skip selection; e.g. --fixed-k 2,2")
    p_test.add_argument("--bootstrap", default=None,
                        help="replicate count or 'off' (default: auto)")
    p_test.add_argument("--seed", type=int, default=0)
    p_test.add_argument("--align", choices=("strict", "intersection"),
                        default="strict")
    p_test.add_argument("--format", choices=("json", "csv"), default="json")
    p_test.add_argument("--out", default=None)
    p_test.set_defaults(func=_cmd_test)

    p_sim = sub.add_parser("simulate", help="run a Monte Carlo profile")
    p_sim.add_argument("--profile", required=True,
                       choices=("table1", "table2", "table3", "table4",
                                "table4_alt", "figure1"))
    p_sim.add_argument("--reps", type=int, default=None)
    p_sim.add_argument("--seed", type=int, default=0)
    p_sim.add_argument("--n", type=int, default=600,
                       help="network size for the figure1 profile")
    p_sim.add_argument("--bootstrap", default=None,
                       help="replicate count or 'off' (default: auto)")
    p_sim.add_argument("--out", default=None)
    p_sim.set_defaults(func=_cmd_simulate)

    p_tw = sub.add_parser("tw", help="Tracy-Widom(1) table queries")
    p_tw.add_argument("--quantile", type=float, default=None)
    p_tw.add_argument("--cdf", type=float, default=None)
    p_tw.set_defaults(func=_cmd_tw)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (EdgeListParseError, AlignmentError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 3
    except ConfigurationError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except SbmTestError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
