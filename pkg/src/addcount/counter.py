"""Dynamic-programming weighted model counting over clause clusters.

Clauses are ranked into clusters by a cluster variable order.  Clusters are
processed in increasing rank: each one multiplies its member ADDs, sums out
the variables no later cluster mentions (after multiplying in their literal
weights), and hands the result on to a later cluster.  The last cluster ends
up holding a constant, the weighted model count.
"""

import math
import time
from dataclasses import dataclass, field
from enum import Enum

from .cnf import clause_add, weight_add
from .dd import Store, product, project
from .exceptions import CountOverflow, CountTimeout, InvariantViolation


class ClusterKind(str, Enum):
    MONO = "mono"
    BE_LIST = "belist"
    BE_TREE = "betree"
    BM_LIST = "bmlist"
    BM_TREE = "bmtree"

    @classmethod
    def parse(cls, name):
        if isinstance(name, cls):
            return name
        return cls(str(name).lower().replace("-", "").replace("_", ""))

    @property
    def rank_rule(self):
        return {"mono": "mono", "belist": "be", "betree": "be",
                "bmlist": "bm", "bmtree": "bm"}[self.value]

    @property
    def is_tree(self):
        return self in (ClusterKind.BE_TREE, ClusterKind.BM_TREE)


@dataclass
class ClusterPlan:
    """Clause partition and projection schedule.

    ``gamma[i]`` holds the clauses of rank ``i`` and ``project_at[i]`` the
    variables summed out while processing cluster ``i``, sorted by cluster rank.
    """

    m: int
    gamma: dict
    project_at: dict

    def projection_rank(self):
        """Map each variable to the cluster index where it is summed out."""
        return {x: i for i, xs in self.project_at.items() for x in xs}


@dataclass
class Trace:
    projections: list = field(default_factory=list)  # (var, cluster index)
    routes: list = field(default_factory=list)  # (from, to)
    cluster_var_counts: dict = field(default_factory=dict)


@dataclass
class CountResult:
    count: float
    max_live_vars: int = 0
    peak_node_count: int = 0
    elapsed: float = 0.0
    trace: Trace = None


def clause_rank(clause, rho, kind, m):
    rule = ClusterKind.parse(kind).rank_rule
    if rule == "mono":
        return m
    ranks = [rho[x] for x in clause.variables]
    return min(ranks) if rule == "be" else max(ranks)


def build_plan(formula, rho, kind):
    kind = ClusterKind.parse(kind)
    occurring = formula.variables
    m = max((rho[x] for x in occurring), default=0)
    gamma = {i: [] for i in range(1, m + 1)}
    for c in formula.clauses:
        gamma[clause_rank(c, rho, kind, m)].append(c)

    project_at = {}
    seen = set()
    for i in range(m, 0, -1):
        here = set()
        for c in gamma[i]:
            here.update(c.variables)
        project_at[i] = sorted(here - seen, key=rho.__getitem__)
        seen |= here
    return ClusterPlan(m, gamma, project_at)


def choose_cluster(variables, i, plan, kind):
    """Cluster that receives the result of cluster ``i``.

    List always passes to ``i + 1``.  Tree passes to the nearest later cluster
    that sums out one of ``variables``, or to ``m`` when nothing is left.
    """
    kind = ClusterKind.parse(kind)
    if not kind.is_tree:
        return i + 1
    if variables:
        for j in range(i + 1, plan.m + 1):
            if not variables.isdisjoint(plan.project_at[j]):
                return j
    return plan.m


def _check_routing(pending, proj_rank, i):
    # Every variable of a cluster j must be summed out at j or later.
    for j, members in pending.items():
        for _, dom in members:
            for x in dom:
                if proj_rank[x] < j:
                    raise InvariantViolation(
                        f"after step {i}: variable {x} is summed out at cluster "
                        f"{proj_rank[x]} but still occurs in cluster {j}")


def count(formula, weights, pi, rho, kind, *, check_invariants=False,
          deadline=None, chooser=choose_cluster):
    """Weighted model count of ``formula`` under literal ``weights``.

    ``pi`` is the diagram variable order and ``rho`` the cluster variable
    order.  With ``check_invariants`` the run records a :class:`Trace` and
    verifies the routing conditions at every step, raising
    :class:`InvariantViolation` on failure.  ``deadline`` is a
    ``time.perf_counter()`` value checked between clusters.
    """
    kind = ClusterKind.parse(kind)
    start = time.perf_counter()
    occurring = formula.variables
    unused = [x for x in range(1, formula.num_vars + 1) if x not in occurring]
    free_factor = math.prod(weights.total(x) for x in unused)

    if formula.has_empty_clause:
        return CountResult(0.0, elapsed=time.perf_counter() - start)
    if not formula.clauses:
        return _finish(free_factor, 0, 0, start, Trace() if check_invariants else None)

    store = Store(formula.num_vars, pi)

    plan = build_plan(formula, rho, kind)
    proj_rank = plan.projection_rank()
    trace = Trace() if check_invariants else None

    # Each cluster member is (add, domain) where domain is the variable set the
    # member ranges over; it may be larger than the ADD's support.
    clusters = {i: [] for i in range(1, plan.m + 1)}
    for i, clauses in plan.gamma.items():
        for c in clauses:
            clusters[i].append((clause_add(c, store), c.variables))
    if check_invariants:
        _check_routing(clusters, proj_rank, 0)

    max_live = max(len(c.variables) for c in formula.clauses)
    peak_nodes = 0
    result = None
    for i in range(1, plan.m + 1):
        if deadline is not None and time.perf_counter() > deadline:
            raise CountTimeout(f"deadline passed before cluster {i}")
        members = clusters[i]
        if not members:
            continue
        domain = frozenset().union(*(dom for _, dom in members))
        max_live = max(max_live, len(domain))
        if trace is not None:
            trace.cluster_var_counts[i] = len(domain)

        sized = sorted(members, key=lambda m: m[0].node_count())
        acc = sized[0][0]
        for add, _ in sized[1:]:
            acc = product(acc, add)
        peak_nodes = max(peak_nodes, acc.node_count())

        for x in plan.project_at[i]:
            acc = project(product(acc, weight_add(x, weights, store)), x)
            if trace is not None:
                trace.projections.append((x, i))
        domain = domain.difference(plan.project_at[i])

        size = acc.node_count()
        peak_nodes = max(peak_nodes, size)
        if any(not math.isfinite(v) for v in acc.terminal_values()):
            raise CountOverflow(f"non-finite value after cluster {i}")

        if i < plan.m:
            j = chooser(domain, i, plan, kind)
            if check_invariants:
                if not i < j <= plan.m:
                    raise InvariantViolation(f"cluster {i} routed to {j}, outside ({i}, {plan.m}]")
                for s in range(i + 1, j):
                    if not domain.isdisjoint(plan.project_at[s]):
                        raise InvariantViolation(
                            f"cluster {i} skips cluster {s}, which sums out "
                            f"{sorted(domain.intersection(plan.project_at[s]))}")
                trace.routes.append((i, j))
            clusters[j].append((acc, domain))
            if check_invariants:
                _check_routing({k: v for k, v in clusters.items() if k > i}, proj_rank, i)
        else:
            result = acc

    if check_invariants:
        projected = [x for x, _ in trace.projections]
        if sorted(projected) != sorted(occurring):
            raise InvariantViolation("some variable was not summed out exactly once")
    if result is None or not result.is_constant:
        raise InvariantViolation("final cluster did not reduce to a constant")
    return _finish(result.value * free_factor, max_live, peak_nodes, start, trace)


def _finish(value, max_live, peak_nodes, start, trace):
    if not math.isfinite(value):
        raise CountOverflow("weighted model count is not finite")
    return CountResult(value, max_live, peak_nodes, time.perf_counter() - start, trace)
