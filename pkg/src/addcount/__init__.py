"""Exact literal-weighted model counting for CNF with algebraic decision diagrams."""

from .cnf import (Clause, CnfFormula, WeightFormat, WeightFunction, clause_add, gaifman_graph,
                  parse_cnf, read_cnf, to_dimacs, weight_add)
from .counter import (ClusterKind, ClusterPlan, CountResult, build_plan, choose_cluster,
                      clause_rank, count)
from .dd import Add, Store, evaluate, node_count, product, project, restrict, sum_, vars_
from .estimator import MavcPredictor, WeightedModelCounter
from .exceptions import (CnfParseError, CountOverflow, CountTimeout, InvariantViolation,
                         StoreMismatch, TooManyVariables, UnknownVariable)
from .harness import RunConfig, counts_equal, generate_weights, run_bench, run_count
from .mavc import MavcReport, compute_mavc
from .oracle import brute_force_count
from .ordering import (Heuristic, VarOrder, compute_order, invert, lexm_order, lexp_order,
                       mcs_order, random_order)

__version__ = "0.1.0"
