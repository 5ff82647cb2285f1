import json

import pytest

from mirahoric import BaseFieldParams, coset_degree, enumerate_mann_reps, gaussian_binomial, verify_partition
from mirahoric.cosets import LEVEL_ZERO, free_pair_count
from mirahoric.serialize import mann_reps_to_json


def test_n2_reps():
    params = BaseFieldParams(3)
    reps = enumerate_mann_reps(2, 1, params)
    mats = sorted(r.matrix(params) for r in reps)
    assert mats == [((3, z), (0, 1)) for z in range(3)]


def test_n3_reps_shape():
    params = BaseFieldParams(3)
    reps = enumerate_mann_reps(3, 1, params)
    assert len(reps) == 9 + 3
    by_subset = {}
    for r in reps:
        by_subset.setdefault(r.subset, []).append(r.matrix(params))
    # I = {1}: free entries at (1,2) and (1,3); I = {2}: free entry at (2,3)
    assert len(by_subset[(1,)]) == 9
    assert len(by_subset[(2,)]) == 3
    m = by_subset[(2,)][1]
    assert m[0] == (1, 0, 0) and m[1][1] == 3 and m[2] == (0, 0, 1)


def test_level_zero_counts():
    params = BaseFieldParams(3)
    assert len(enumerate_mann_reps(2, 1, params, LEVEL_ZERO)) == 4
    assert coset_degree(2, 1, params, LEVEL_ZERO).value == 4
    assert coset_degree(3, 1, params, LEVEL_ZERO).value == 13  # p^2+p+1


def test_degrees():
    assert coset_degree(2, 1, BaseFieldParams(3)).value == 3
    assert coset_degree(3, 1, BaseFieldParams(2)).value == 6
    assert coset_degree(3, 2, BaseFieldParams(2)).value == 4


def test_degree_monotone_in_q():
    for n in (2, 3, 4):
        for j in range(1, n):
            degs = [coset_degree(n, j, BaseFieldParams(q)).value for q in (2, 3, 5)]
            assert degs == sorted(degs) and degs[0] < degs[1] < degs[2]


def test_level_zero_gaussian_binomial():
    for q in (2, 3, 5):
        for n in range(1, 5):
            for j in range(1, n + 1):
                assert coset_degree(n, j, BaseFieldParams(q), LEVEL_ZERO).value == gaussian_binomial(n, j, q)


def test_j_out_of_range():
    with pytest.raises(ValueError):
        enumerate_mann_reps(2, 2, BaseFieldParams(3))
    with pytest.raises(ValueError):
        coset_degree(3, 4, BaseFieldParams(3), LEVEL_ZERO)


@pytest.mark.parametrize(
    "n,j,p,r,index",
    [(2, 1, 3, 1, 3), (3, 1, 2, 1, 6), (2, 1, 2, 2, 2)],
)
def test_partition_oracle(n, j, p, r, index):
    rep = verify_partition(n, j, BaseFieldParams(p), r)
    assert rep.pairwise_distinct
    assert rep.oracle_index == index
    assert rep.degree_matches


def test_partition_budget_guard():
    with pytest.raises(ValueError):
        verify_partition(3, 1, BaseFieldParams(5), 3, budget=10)


def test_reps_independent_of_r():
    # the enumeration carries no r; distinctness holds at several levels
    params = BaseFieldParams(2)
    for r in (1, 2, 3):
        rep = verify_partition(2, 1, params, r)
        assert rep.pairwise_distinct


def test_free_pair_count():
    assert free_pair_count((1,), 3) == 2
    assert free_pair_count((2,), 3) == 1
    assert free_pair_count((1, 2), 3) == 2


def test_json_serialization_roundtrip():
    params = BaseFieldParams(3)
    reps = enumerate_mann_reps(2, 1, params)
    blob = json.dumps(mann_reps_to_json(reps, params))
    data = json.loads(blob)
    assert len(data) == 3
    assert data[0]["matrix"][0][0] == "3"


def test_enumeration_deterministic():
    params = BaseFieldParams(2)
    a = enumerate_mann_reps(3, 1, params)
    b = enumerate_mann_reps(3, 1, params)
    assert a == b
