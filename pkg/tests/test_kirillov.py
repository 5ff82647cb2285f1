from fractions import Fraction

import pytest

from mirahoric import BaseFieldParams, TupleVector, apply_u_tuple, joint_kernel_tuples, w_infty
from mirahoric.cosets import free_pair_count
from mirahoric.fields import QQ, PrimeField
from mirahoric.kirillov import _subset_shifts, dominant_tuples


def test_dominant_cone():
    assert dominant_tuples(2, 3) == [(0,), (1,), (2,), (3,)]
    assert (2, 1) in dominant_tuples(3, 2)
    assert all(m[0] >= m[1] for m in dominant_tuples(3, 4))


def test_u1_shift_n2():
    params = BaseFieldParams(3)
    d1 = TupleVector(n=2, trunc=5, field=QQ, coeffs={(1,): Fraction(1)})
    out = apply_u_tuple(1, d1, params)
    assert out.coeffs == {(0,): Fraction(3)}
    assert apply_u_tuple(1, w_infty(2, 5, QQ), params).is_zero()


def test_u2_coefficient_n3():
    # j = 2 forces I = {1,2}, with q^2 = coefficient
    params = BaseFieldParams(3)
    v = TupleVector(n=3, trunc=4, field=QQ, coeffs={(2, 1): Fraction(1)})
    out = apply_u_tuple(2, v, params)
    assert out.coeffs == {(1, 0): Fraction(9)}


def test_u_j_range():
    with pytest.raises(ValueError):
        apply_u_tuple(2, w_infty(2, 3, QQ), BaseFieldParams(2))


def test_truncation_preserved():
    params = BaseFieldParams(2)
    v = TupleVector(n=3, trunc=3, field=QQ, coeffs={(3, 3): Fraction(1), (3, 0): Fraction(2)})
    out = apply_u_tuple(1, v, params)
    assert all(m[0] <= 3 for m in out.coeffs)


@pytest.mark.parametrize("n,trunc", [(2, 5), (3, 4), (4, 3)])
def test_joint_kernel_is_delta(n, trunc):
    params = BaseFieldParams(2)
    for field in (QQ, PrimeField(5)):
        ker = joint_kernel_tuples(n, params, trunc, field)
        assert len(ker) == 1
        zero = tuple([0] * (n - 1))
        (m, c), = ker[0].coeffs.items()
        assert m == zero and c != field.zero


def test_w_infty_killed_by_all():
    for n in (2, 3, 4):
        params = BaseFieldParams(3)
        w = w_infty(n, 4, QQ)
        for j in range(1, n):
            assert apply_u_tuple(j, w, params).is_zero()


def test_commutativity_on_interior():
    import random

    rng = random.Random(11)
    params = BaseFieldParams(3)
    trunc = 6
    cone = [m for m in dominant_tuples(3, trunc - 2)]
    coeffs = {m: Fraction(rng.randint(-4, 4)) for m in cone}
    v = TupleVector(n=3, trunc=trunc, field=QQ, coeffs=coeffs)
    a = apply_u_tuple(1, apply_u_tuple(2, v, params), params)
    b = apply_u_tuple(2, apply_u_tuple(1, v, params), params)
    assert a.coeffs == b.coeffs


def test_structure_constants_match_coset_counts():
    # every q-power in the tuple action equals the size of the matching B_I
    from mirahoric import enumerate_mann_reps

    for n in (2, 3, 4):
        params = BaseFieldParams(2)
        for j in range(1, n):
            reps = enumerate_mann_reps(n, j, params)
            counts = {}
            for rep in reps:
                counts[rep.subset] = counts.get(rep.subset, 0) + 1
            for shift, expo in _subset_shifts(n, j):
                subset = tuple(i + 1 for i, s in enumerate(shift) if s)
                assert counts[subset] == params.q**expo
                assert expo == free_pair_count(subset, n)
