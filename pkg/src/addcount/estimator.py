"""Estimator-style front end.

:class:`WeightedModelCounter` and :class:`MavcPredictor` follow the
scikit-learn conventions (``get_params``/``set_params``, ``fit`` returning
``self``, batch ``predict``) so they can be cloned, grid-searched over
heuristic configurations, or dropped into pipelines.  Both are stateless:
``fit`` only validates hyper-parameters.
"""

import time

import numpy as np
from sklearn.base import BaseEstimator

from ._validation import (check_cluster_kind, check_formula, check_heuristic,
                          check_time_limit, check_weights)
from .cnf import gaifman_graph
from .counter import count
from .mavc import compute_mavc
from .ordering import compute_order


class _OrderedMixin:
    def _orders(self, formula):
        graph = gaifman_graph(formula)
        rho = compute_order(self.cluster_order, graph, self.seed)
        pi = compute_order(self.diagram_order, graph, self.seed)
        return pi, rho

    def _validate_params(self):
        check_cluster_kind(self.clustering)
        check_heuristic(self.cluster_order)
        check_heuristic(self.diagram_order)


class WeightedModelCounter(_OrderedMixin, BaseEstimator):
    """Exact weighted model counter.

    Parameters
    ----------
    clustering : {"mono", "belist", "betree", "bmlist", "bmtree"}
    cluster_order, diagram_order : {"random", "mcs", "invmcs", "lexp", "invlexp", "lexm", "invlexm"}
    seed : int
        Seed for the ``random`` order.
    weight_format : {"unweighted", "cachet", "litpairs"}
        Used when inputs are given as DIMACS text or paths.
    check_invariants : bool
        Verify the cluster routing invariants during every count.
    time_limit : float or None
        Seconds per formula, checked between clusters.

    Attributes
    ----------
    result_ : CountResult
        Diagnostics from the most recent :meth:`count` call.
    """

    def __init__(self, clustering="bmtree", cluster_order="lexp", diagram_order="mcs",
                 seed=0, weight_format="unweighted", check_invariants=False,
                 time_limit=None):
        self.clustering = clustering
        self.cluster_order = cluster_order
        self.diagram_order = diagram_order
        self.seed = seed
        self.weight_format = weight_format
        self.check_invariants = check_invariants
        self.time_limit = time_limit

    def fit(self, X=None, y=None):
        self._validate_params()
        check_time_limit(self.time_limit)
        return self

    def count(self, X, weights=None):
        self._validate_params()
        formula, parsed = check_formula(X, self.weight_format)
        weights = check_weights(weights if weights is not None else parsed, formula)
        pi, rho = self._orders(formula)
        limit = check_time_limit(self.time_limit)
        deadline = None if limit is None else time.perf_counter() + limit
        self.result_ = count(formula, weights, pi, rho, check_cluster_kind(self.clustering),
                             check_invariants=self.check_invariants, deadline=deadline)
        return self.result_.count

    def predict(self, X):
        """Counts for a sequence of formulas (or ``(formula, weights)`` pairs)."""
        return np.array([self.count(x) for x in X], dtype=np.float64)


class MavcPredictor(_OrderedMixin, BaseEstimator):
    """Maximum ADD variable count for a heuristic configuration.

    Cheap to evaluate and a useful proxy for how hard a formula will be.
    """

    def __init__(self, clustering="bmtree", cluster_order="lexp", diagram_order="mcs",
                 seed=0, weight_format="unweighted"):
        self.clustering = clustering
        self.cluster_order = cluster_order
        self.diagram_order = diagram_order
        self.seed = seed
        self.weight_format = weight_format

    def fit(self, X=None, y=None):
        self._validate_params()
        return self

    def predict(self, X):
        self._validate_params()
        out = []
        for x in X:
            formula, _ = check_formula(x, self.weight_format)
            _, rho = self._orders(formula)
            out.append(compute_mavc(formula, rho, check_cluster_kind(self.clustering)).mavc)
        return np.array(out, dtype=np.int64)
