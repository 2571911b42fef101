import random

import pytest

from addcount import (ClusterKind, CnfFormula, TooManyVariables, VarOrder, WeightFunction,
                      brute_force_count, compute_mavc, count, gaifman_graph)
from addcount.ordering import compute_order

from conftest import random_formula


def test_mavc_mono_is_all_variables():
    f = CnfFormula(6, ((1, 2), (3, 4), (5, -1)))
    assert compute_mavc(f, VarOrder.identity(6), "mono").mavc == 5


def test_mavc_single_clause():
    f = CnfFormula(3, ((1, 2, 3),))
    for kind in ClusterKind:
        assert compute_mavc(f, VarOrder.identity(3), kind).mavc == 3


def test_mavc_chain_bucket_list():
    f = CnfFormula(10, tuple((i, i + 1) for i in range(1, 10)))
    report = compute_mavc(f, VarOrder.identity(10), "belist")
    assert report.mavc == 2
    assert report.per_cluster_var_counts == {**{i: 2 for i in range(1, 10)}, 10: 0}


def test_mavc_report_invariants():
    rng = random.Random(4)
    for _ in range(100):
        f = random_formula(rng)
        rho = compute_order("lexp", gaifman_graph(f))
        mono = compute_mavc(f, rho, "mono").mavc
        for kind in ClusterKind:
            r = compute_mavc(f, rho, kind)
            assert r.mavc == max(r.per_cluster_var_counts.values())
            assert r.mavc <= len(f.variables)
            assert r.mavc <= mono


def test_mavc_matches_counter_instrumentation():
    rng = random.Random(9)
    for _ in range(50):
        f = random_formula(rng)
        rho = compute_order("random", gaifman_graph(f), rng.randint(0, 50))
        for kind in ClusterKind:
            r = count(f, WeightFunction.unit(f.num_vars), VarOrder.identity(f.num_vars), rho,
                      kind, check_invariants=True)
            m = compute_mavc(f, rho, kind)
            assert m.mavc == r.max_live_vars
            assert m.per_cluster_var_counts == r.trace.cluster_var_counts


def test_oracle_examples():
    w = WeightFunction({1: 0.5, 2: 0.5}, {1: 1.5, 2: 1.5})
    assert brute_force_count(CnfFormula(2, ((1, 2),)), w) == 1.75
    assert brute_force_count(CnfFormula(1, ((1,), (-1,))), WeightFunction.unit(1)) == 0
    for n in range(0, 6):
        assert brute_force_count(CnfFormula(n, ()), WeightFunction.unit(n)) == 2 ** n


def test_oracle_guard():
    with pytest.raises(TooManyVariables):
        brute_force_count(CnfFormula(26, ()), WeightFunction.unit(26))


def test_oracle_against_hand_enumeration():
    # (x1 v -x2) & (x2 v x3) with distinct weights, summed term by term
    w = WeightFunction({1: 0.3, 2: 0.7, 3: 2.0}, {1: 1.1, 2: 0.4, 3: 0.5})
    f = CnfFormula(3, ((1, -2), (2, 3)))
    models = [(0, 0, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1)]
    expected = 0.0
    for bits in models:
        term = 1.0
        for x, b in zip((1, 2, 3), bits):
            term *= w.pos[x] if b else w.neg[x]
        expected += term
    assert brute_force_count(f, w) == pytest.approx(expected, rel=1e-15)


def test_oracle_chunked_enumeration():
    # 2^17 assignments spans two chunks; the all-free count is exact
    n = 17
    assert brute_force_count(CnfFormula(n, ((1, -1),)), WeightFunction.unit(n)) == 2 ** n
    f = CnfFormula(n, ((17,),))
    assert brute_force_count(f, WeightFunction.unit(n)) == 2 ** 16
