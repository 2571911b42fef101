"""Single runs, benchmark sweeps, weight generation and count comparison."""

import csv
import io
import itertools
import logging
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .cnf import WeightFormat, WeightFunction, gaifman_graph, read_cnf
from .counter import ClusterKind, count
from .exceptions import CountOverflow, CountTimeout
from .mavc import compute_mavc
from .ordering import Heuristic, compute_order

log = logging.getLogger(__name__)

CSV_COLUMNS = ["file", "clusterKind", "clusterOrder", "diagramOrder", "seed",
               "status", "count", "mavc", "elapsedMs"]

TOLERANCE = 1e-3


@dataclass(frozen=True)
class RunConfig:
    input_path: str = ""
    weight_format: WeightFormat = WeightFormat.UNWEIGHTED
    cluster_kind: ClusterKind = ClusterKind.BM_TREE
    cluster_order: Heuristic = Heuristic.LEXP
    diagram_order: Heuristic = Heuristic.MCS
    seed: int = 0
    time_limit: float = None
    mode: str = "count"

    def __post_init__(self):
        object.__setattr__(self, "weight_format", WeightFormat.parse(self.weight_format))
        object.__setattr__(self, "cluster_kind", ClusterKind.parse(self.cluster_kind))
        object.__setattr__(self, "cluster_order", Heuristic.parse(self.cluster_order))
        object.__setattr__(self, "diagram_order", Heuristic.parse(self.diagram_order))
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time limit must be positive")
        if self.mode not in ("count", "mavc", "oracle", "genWeights", "bench"):
            raise ValueError(f"unknown mode {self.mode!r}")


@dataclass
class BenchRow:
    file: str
    cluster_kind: str
    cluster_order: str
    diagram_order: str
    seed: int
    status: str
    count: float = None
    mavc: int = None
    elapsed_ms: float = 0.0

    def as_list(self):
        return [self.file, self.cluster_kind, self.cluster_order, self.diagram_order,
                self.seed, self.status, format_count(self.count) if self.count is not None else "",
                "" if self.mavc is None else self.mavc, f"{self.elapsed_ms:.3f}"]


def format_count(value):
    """Scientific notation with 15 significant digits."""
    return f"{value:.14e}"


def counts_equal(a, b, tolerance=TOLERANCE):
    """Tolerant equality for non-negative counts.

    With ``a <= b``: absolute difference when ``a == 0`` or ``b <= 1``,
    otherwise the ratio ``b / a``.
    """
    if a < 0 or b < 0:
        raise ValueError("counts must be non-negative")
    a, b = min(a, b), max(a, b)
    if a == 0 or b <= 1:
        return b - a <= tolerance
    return b / a <= 1 + tolerance


def generate_weights(formula, seed=0):
    """Give each variable weights (0.5, 1.5) or (1.5, 0.5) by a fair coin."""
    rng = random.Random(seed)
    pos, neg = {}, {}
    for x in range(1, formula.num_vars + 1):
        if rng.random() < 0.5:
            pos[x], neg[x] = 0.5, 1.5
        else:
            pos[x], neg[x] = 1.5, 0.5
    return WeightFunction(pos, neg)


def orders_for(formula, cfg):
    graph = gaifman_graph(formula)
    rho = compute_order(cfg.cluster_order, graph, cfg.seed)
    pi = compute_order(cfg.diagram_order, graph, cfg.seed)
    return pi, rho


def run_count(cfg, formula=None, weights=None):
    """Parse (unless given a formula), count, and report one :class:`BenchRow`.

    Errors never escape; they become the row's status.
    """
    start = time.perf_counter()
    deadline = None if cfg.time_limit is None else start + cfg.time_limit
    row = BenchRow(cfg.input_path, cfg.cluster_kind.value, cfg.cluster_order.value,
                   cfg.diagram_order.value, cfg.seed, "error")
    try:
        if formula is None:
            formula, weights = read_cnf(cfg.input_path, cfg.weight_format)
        pi, rho = orders_for(formula, cfg)
        row.mavc = compute_mavc(formula, rho, cfg.cluster_kind).mavc
        if deadline is not None and time.perf_counter() > deadline:
            raise CountTimeout("deadline passed before counting")
        result = count(formula, weights, pi, rho, cfg.cluster_kind, deadline=deadline)
    except CountTimeout:
        row.status = "timeout"
    except CountOverflow:
        row.status = "overflow"
    except Exception as exc:  # recorded, sweep continues
        log.error("%s: %s", cfg.input_path, exc)
        row.status = "error"
    else:
        row.status = "solved"
        row.count = result.count
    row.elapsed_ms = (time.perf_counter() - start) * 1000
    return row


def parse_configs(spec):
    """Parse ``kind:clusterOrder:diagramOrder`` items separated by ``;`` or ``,``.

    ``all`` expands to the full 5 x 7 x 7 grid, and ``*`` is a wildcard in
    any position.
    """
    if spec.strip() == "all":
        spec = "*:*:*"
    out = []
    for item in filter(None, (s.strip() for s in spec.replace(",", ";").split(";"))):
        parts = item.split(":")
        if len(parts) != 3:
            raise ValueError(f"bad config {item!r}; expected kind:clusterOrder:diagramOrder")
        kinds = list(ClusterKind) if parts[0] == "*" else [ClusterKind.parse(parts[0])]
        cvs = list(Heuristic) if parts[1] == "*" else [Heuristic.parse(parts[1])]
        dvs = list(Heuristic) if parts[2] == "*" else [Heuristic.parse(parts[2])]
        out.extend(itertools.product(kinds, cvs, dvs))
    return out


def run_bench(directory, configs, *, weight_format=WeightFormat.UNWEIGHTED, seed=0,
              time_limit=None, jobs=1, weight_seed=None):
    """Run every config on every ``.cnf`` file in ``directory``.

    ``configs`` is a list of ``(kind, cluster_order, diagram_order)`` triples.
    With ``weight_seed`` set, unweighted inputs get generated weights.  Rows
    come back in (file, config) order whatever ``jobs`` is.
    """
    files = sorted(Path(directory).glob("*.cnf"))
    tasks = []
    for path in files:
        for kind, cv, dv in configs:
            tasks.append((RunConfig(str(path), weight_format, kind, cv, dv, seed, time_limit),
                          weight_seed))
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            return list(pool.map(_bench_task, tasks))
    return [_bench_task(t) for t in tasks]


def _bench_task(task):
    cfg, weight_seed = task
    if weight_seed is None:
        return run_count(cfg)
    try:
        formula, _ = read_cnf(cfg.input_path, cfg.weight_format)
    except Exception as exc:
        log.error("%s: %s", cfg.input_path, exc)
        return BenchRow(cfg.input_path, cfg.cluster_kind.value, cfg.cluster_order.value,
                        cfg.diagram_order.value, cfg.seed, "error")
    return run_count(cfg, formula, generate_weights(formula, weight_seed))


def write_csv(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.as_list())


def rows_to_csv(rows):
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()


def cactus(rows):
    """Per configuration, solve times in ascending order (one cactus-plot series)."""
    series = {}
    for r in rows:
        key = (r.cluster_kind, r.cluster_order, r.diagram_order)
        series.setdefault(key, [])
        if r.status == "solved":
            series[key].append(r.elapsed_ms)
    return {k: sorted(v) for k, v in series.items()}


def write_cactus_csv(rows, fh):
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow(["clusterKind", "clusterOrder", "diagramOrder", "solved", "elapsedMs"])
    for (kind, cv, dv), times in cactus(rows).items():
        for k, t in enumerate(times, 1):
            writer.writerow([kind, cv, dv, k, f"{t:.3f}"])
