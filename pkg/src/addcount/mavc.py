"""Maximum ADD variable count, computed without building any ADD."""

from dataclasses import dataclass, field

from .counter import ClusterKind, build_plan, choose_cluster


@dataclass
class MavcReport:
    mavc: int
    per_cluster_var_counts: dict = field(default_factory=dict)


def compute_mavc(formula, rho, kind):
    """Replay the cluster schedule on variable sets alone.

    A cluster's set is the union of its members' sets; summing out its
    projection variables shrinks it before it is routed on.  The MAVC is the
    largest set seen, clause sets included.
    """
    kind = ClusterKind.parse(kind)
    clauses = [c for c in formula.clauses if len(c)]
    if not clauses:
        return MavcReport(0)
    plan = build_plan(formula, rho, kind)
    pending = {i: [c.variables for c in plan.gamma[i]] for i in range(1, plan.m + 1)}
    per_cluster = {}
    for i in range(1, plan.m + 1):
        if not pending[i]:
            continue
        live = set().union(*pending[i])
        per_cluster[i] = len(live)
        live.difference_update(plan.project_at[i])
        if i < plan.m:
            pending[choose_cluster(live, i, plan, kind)].append(live)
    mavc = max(max(per_cluster.values()), max(len(c) for c in clauses))
    return MavcReport(mavc, per_cluster)
