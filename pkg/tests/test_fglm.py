"""Staircase extraction, multiplication matrices, lex change of ordering."""

import random

import numpy as np
import pytest

from wgb import (
    MonomialOrder,
    PolyRing,
    PolySystem,
    PrimeField,
    buchberger,
    fglm_lex,
    ideal_degree,
    multiplication_matrices,
    quotient_hilbert_series,
    staircase,
)
from wgb.errors import PositiveDimensionError
from wgb.structure import random_w_homogeneous_system


def ring(weights, names=None):
    return PolyRing(PrimeField(65521), weights, names=names)


def zero_dim_samples(count, rng):
    """Random regular strongly compatible zero-dimensional systems, n <= 3."""
    out = []
    seed = 0
    while len(out) < count:
        seed += 1
        n = rng.choice([1, 2, 3])
        W = tuple(rng.choice([1, 2, 3]) for _ in range(n))
        D = tuple(w * rng.choice([1, 2, 3]) for w in W)
        sys = random_w_homogeneous_system(W, D, seed)
        out.append((sys, W, D))
    return out


def test_staircase_examples():
    R = ring((1, 1, 1))
    gb = buchberger(PolySystem(R, list(R.gens())))
    assert staircase(gb) == [(0, 0, 0)]
    sys = random_w_homogeneous_system((2, 1), (4, 4), seed=21)
    gb2 = buchberger(sys)
    assert len(staircase(gb2)) == 8


def test_staircase_positive_dimension_error():
    R = ring((1, 1))
    x, y = R.gens()
    gb = buchberger(PolySystem(R, [x * y]))
    with pytest.raises(PositiveDimensionError):
        staircase(gb)


def test_staircase_matches_quotient_series_degree():
    rng = random.Random(6)
    for sys, W, D in zero_dim_samples(20, rng):
        gb = buchberger(sys)
        B = staircase(gb)
        assert len(B) == ideal_degree(quotient_hilbert_series(gb))


def test_multiplication_matrix_shift():
    R = ring((1,), names=("X",))
    x = R.gen(0)
    gb = buchberger(PolySystem(R, [x ** 2]))
    (M,) = multiplication_matrices(gb)
    assert M.tolist() == [[0, 0], [1, 0]]
    assert (np.linalg.matrix_power(M, 2) % 65521 == 0).all()


def test_multiplication_matrices_commute():
    rng = random.Random(9)
    for sys, W, D in zero_dim_samples(8, rng):
        if sys.n < 2:
            continue
        gb = buchberger(sys)
        mats = multiplication_matrices(gb)
        p = 65521
        for i in range(len(mats)):
            for j in range(i + 1, len(mats)):
                assert ((mats[i] @ mats[j]) % p == (mats[j] @ mats[i]) % p).all()


def test_multiplication_matrix_trace():
    # (X^2 - 1, Y - X): roots (1,1), (-1,-1): trace of M_X is 0
    R = ring((1, 1), names=("X", "Y"))
    X, Y = R.gens()
    gb = buchberger(PolySystem(R, [X ** 2 - R.one(), Y - X]))
    mats = multiplication_matrices(gb)
    assert int(mats[0].trace()) % 65521 == 0


def test_fglm_already_lex_shaped():
    R = ring((1, 1), names=("X", "Y"))
    X, Y = R.gens()
    sys = PolySystem(R, [X - R.const(1), Y - R.const(2)])
    gb = buchberger(sys)
    lex_gb = fglm_lex(gb)
    direct = buchberger(sys, order=MonomialOrder.lex((1, 1)))
    assert [g.terms for g in lex_gb.polys] == [g.terms for g in direct.polys]


def test_fglm_unit_ideal():
    R = ring((1,))
    gb = buchberger(PolySystem(R, [R.one()]))
    lex_gb = fglm_lex(gb)
    assert [str(g) for g in lex_gb.polys] == ["1"]


def test_fglm_matches_direct_lex():
    rng = random.Random(77)
    for sys, W, D in zero_dim_samples(25, rng):
        gb = buchberger(sys)
        lex_gb = fglm_lex(gb)
        direct = buchberger(sys, order=MonomialOrder.lex(W))
        assert [g.terms for g in lex_gb.polys] == [g.terms for g in direct.polys], (W, D)
        assert lex_gb.spolynomial_audit()
        assert len(staircase(lex_gb)) == len(staircase(gb))


def test_fglm_affine_system():
    # works on non-homogeneous zero-dimensional ideals too
    R = ring((1, 1), names=("X", "Y"))
    X, Y = R.gens()
    sys = PolySystem(R, [X ** 2 + Y - R.const(3), Y ** 2 - X])
    gb = buchberger(sys)
    lex_gb = fglm_lex(gb)
    direct = buchberger(sys, order=MonomialOrder.lex((1, 1)))
    assert [g.terms for g in lex_gb.polys] == [g.terms for g in direct.polys]


def test_fglm_cost_shape():
    # operation count grows no faster than c * n * degree^3 on a doubling
    # ladder of staircase sizes
    ops = {}
    for k in (3, 4, 5, 6):
        sys = random_w_homogeneous_system((1, 1), (2 ** (k // 2), 2 ** (k - k // 2)), seed=k)
        gb = buchberger(sys)
        lex_gb, stats = fglm_lex(gb, return_stats=True)
        assert stats.degree == 2 ** k
        ops[2 ** k] = stats.field_ops
    cs = {deg: ops[deg] / (2 * deg ** 3) for deg in ops}
    # the per-degree constants stay within a tame band across a 8x ladder
    assert max(cs.values()) / min(cs.values()) < 64, cs
