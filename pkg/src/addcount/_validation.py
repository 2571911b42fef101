"""Input checks shared by the estimator front end."""

from pathlib import Path

from .cnf import CnfFormula, WeightFunction, parse_cnf, read_cnf
from .counter import ClusterKind
from .ordering import Heuristic


def check_formula(X, weight_format="unweighted"):
    """Coerce ``X`` into ``(CnfFormula, WeightFunction or None)``.

    Accepts a formula, a ``(formula, weights)`` pair, a path to a DIMACS
    file, or DIMACS text.
    """
    if isinstance(X, CnfFormula):
        return X, None
    if isinstance(X, tuple) and len(X) == 2 and isinstance(X[0], CnfFormula):
        return X[0], X[1]
    if isinstance(X, Path):
        return read_cnf(X, weight_format)
    if isinstance(X, str):
        if "\n" not in X and Path(X).is_file():
            return read_cnf(X, weight_format)
        return parse_cnf(X, weight_format)
    raise TypeError(f"cannot interpret {type(X).__name__} as a CNF formula")


def check_weights(weights, formula):
    if weights is None:
        return WeightFunction.unit(formula.num_vars)
    if not isinstance(weights, WeightFunction):
        raise TypeError("weights must be a WeightFunction")
    missing = set(range(1, formula.num_vars + 1)) - set(weights.pos)
    if missing:
        raise ValueError(f"weights missing for variables {sorted(missing)[:10]}")
    return weights


def check_cluster_kind(kind):
    try:
        return ClusterKind.parse(kind)
    except ValueError:
        raise ValueError(f"unknown clustering {kind!r}; expected one of "
                         f"{[k.value for k in ClusterKind]}") from None


def check_heuristic(name):
    try:
        return Heuristic.parse(name)
    except ValueError:
        raise ValueError(f"unknown variable order {name!r}; expected one of "
                         f"{[h.value for h in Heuristic]}") from None


def check_time_limit(limit):
    if limit is not None and not limit > 0:
        raise ValueError("time_limit must be positive")
    return limit
