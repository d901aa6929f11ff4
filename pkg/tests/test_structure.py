"""Structural oracles, divisibility proposition, generators."""

import random
from itertools import product

import pytest

from wgb import (
    PolyRing,
    PolySystem,
    PrimeField,
    divisor_of_wdegree,
    expand_rational,
    froberg_sequence,
    inversion_system,
    is_noether_position,
    is_regular_sequence,
    is_reverse_chain_divisible,
    is_semiregular,
    is_snp,
    is_strongly_w_compatible,
    quotient_hilbert_series,
    random_affine_system,
    random_w_homogeneous_system,
    structure_report,
    truncate_semiregular,
    wdeg,
)
from wgb.engine import buchberger, elimination_gb
from wgb.errors import ArityError, EmptySupportError
from wgb.monomial import monomials_of_wdeg, monomials_of_wdeg_at_most


def ring(weights, names=None):
    return PolyRing(PrimeField(65521), weights, names=names)


def test_reverse_chain_divisible():
    assert is_reverse_chain_divisible((4, 2, 1))
    assert not is_reverse_chain_divisible((3, 2, 1))
    assert is_reverse_chain_divisible((5, 5, 5))


def test_strongly_w_compatible():
    assert is_strongly_w_compatible((3, 2, 1), (6, 6, 6))
    assert not is_strongly_w_compatible((2, 5), (4, 8))
    assert is_strongly_w_compatible((2, 5), ())
    with pytest.raises(ArityError):
        is_strongly_w_compatible((2,), (4, 4))


def test_divisor_of_wdegree_examples():
    assert divisor_of_wdegree((1, 2, 0), 6, (3, 2, 1)) is None
    m = (2, 3, 1)
    assert divisor_of_wdegree(m, wdeg(m, (4, 2, 1)), (4, 2, 1)) == m
    assert divisor_of_wdegree((0, 3, 0), 4, (4, 2, 1)) == (0, 2, 0)


def test_divisibility_proposition_equivalence():
    # for non-increasing weights: divisors of every admissible degree exist
    # at every admissible target iff the weights are reverse chain-divisible
    def has_violation(W):
        n = len(W)
        for d2 in range(1, 25):
            for m2 in monomials_of_wdeg(W, d2):
                i = next((j for j, a in enumerate(m2) if a), None)
                if i is None:
                    continue
                for d1 in range(W[i], d2 + 1, W[i]):
                    if divisor_of_wdegree(m2, d1, W) is None:
                        return True
        return False

    for n in (2, 3):
        seen_rcd = seen_non = 0
        for W in product(range(1, 7), repeat=n):
            if any(W[i] < W[i + 1] for i in range(n - 1)):
                continue  # keep non-increasing weights only
            violated = has_violation(W)
            if is_reverse_chain_divisible(W):
                seen_rcd += 1
                assert not violated, W
            else:
                seen_non += 1
                assert violated, W
        assert seen_rcd and seen_non


def test_regular_sequence_examples():
    R = ring((2, 5), names=("X", "Y"))
    X, Y = R.gens()
    assert not is_regular_sequence(PolySystem(R, [X ** 2, X ** 4])).regular
    # pure powers are regular for any strongly compatible degrees
    for W in [(2, 1), (3, 2, 1), (4, 2, 2)]:
        Rn = ring(W)
        for ks in product((1, 2), repeat=len(W)):
            polys = [g ** k for g, k in zip(Rn.gens(), ks)]
            assert is_regular_sequence(PolySystem(Rn, polys)).regular


def test_generic_systems_regular():
    for seed in range(20):
        sys = random_w_homogeneous_system((3, 2, 1), (6, 6, 6), seed)
        assert is_regular_sequence(sys).regular


def test_noether_position_examples():
    R = ring((3, 2), names=("X", "Y"))
    X, Y = R.gens()
    snp = is_snp(PolySystem(R, [X ** 2 + Y ** 3, X * Y]))
    assert snp.snp
    single = PolySystem(R, [X * Y])
    assert is_regular_sequence(single).regular
    assert not is_noether_position(single).regular
    # pure squares under trivial weights
    R3 = ring((1, 1, 1))
    sys = PolySystem(R3, [g ** 2 for g in R3.gens()])
    assert is_snp(sys).snp


def test_np_characterizations_agree():
    rng = random.Random(2)
    for seed in range(50):
        n = rng.choice([2, 3])
        W = tuple(rng.choice([1, 2]) for _ in range(n))
        m = rng.randrange(1, n + 1)
        D = tuple(w * rng.choice([1, 2]) for w in W[:m])
        sys = random_w_homogeneous_system(W, D, seed + 900)
        a = is_noether_position(sys, method="extend").regular
        b = is_noether_position(sys, method="substitute").regular
        assert a == b, (W, D, seed)


def test_semiregular_rank_counterexample():
    R = ring((1, 1), names=("X", "Y"))
    X, Y = R.gens()
    v = is_semiregular(PolySystem(R, [X ** 2, X * Y]), d_max=5)
    assert v.semiregular is False
    assert v.first_failure == (2, 1, 1)
    assert not v.series_ok


def test_regular_is_semiregular():
    for seed in range(5):
        sys = random_w_homogeneous_system((2, 1), (4, 4), seed)
        v = is_semiregular(sys)
        assert v.semiregular and v.rank_ok and v.series_ok


def test_froberg_example():
    fs = froberg_sequence((2, 1), (4, 4), 4)
    assert [str(f) for f in fs.polys] == [
        "X1^2",
        "X2^4",
        "X1^2 + 2*X1*X2^2 + X2^4",
    ]
    v = is_semiregular(fs)
    assert v.semiregular and v.rank_ok and v.series_ok and v.series_certifying
    gb = buchberger(fs)
    s = quotient_hilbert_series(gb)
    want = truncate_semiregular(expand_rational((4, 4, 4), (2, 1)))
    assert s.coeffs == want.coeffs


def test_froberg_homogeneous_case():
    fs = froberg_sequence((1, 1), (2, 2), 2)
    assert [str(f) for f in fs.polys] == ["X1^2", "X2^2", "X1^2 + 2*X1*X2 + X2^2"]


def test_froberg_last_poly_homogeneous():
    for W, D, dx in [((2, 1), (4, 4), 6), ((4, 2, 1), (4, 2, 3), 8), ((3, 3, 3), (6, 3, 9), 3)]:
        fs = froberg_sequence(W, D, dx)
        last = fs.polys[-1]
        assert last.is_w_homogeneous()
        assert last.wdeg() == dx
    with pytest.raises(ValueError):
        froberg_sequence((3, 2, 1), (6, 6, 6), 6)  # not reverse chain-divisible
    with pytest.raises(ValueError):
        froberg_sequence((2, 1), (4, 4), 3)  # top weight does not divide


def test_froberg_degenerate_corner_not_semiregular():
    # when every term of the mixed sum collapses into the pure-power
    # ideal the construction fails to be semi-regular (here the added
    # polynomial is literally the sum of the other three)
    fs = froberg_sequence((2, 1, 1), (2, 2, 2), 2)
    from wgb.poly import reduce_poly

    assert reduce_poly(fs.polys[-1], list(fs.polys[:-1])).is_zero
    v = is_semiregular(fs, d_max=5)
    assert v.semiregular is False
    assert v.first_failure == (4, 0, 1)


def test_semiregular_methods_agree_when_certifying():
    # on coprime reverse chain-divisible weights with degrees divisible by
    # the top weight, the rank and series verdicts coincide
    from itertools import product as iproduct

    for W in [(1,), (1, 1), (2, 1), (1, 1, 1), (2, 1, 1), (2, 2, 1)]:
        ds = [d for d in (W[0], 2 * W[0]) ]
        for D in iproduct(ds, repeat=len(W)):
            for dx in (W[0], 2 * W[0]):
                fs = froberg_sequence(W, D, dx)
                cap = max(sum(D) - sum(W), 0) + max(W)
                v = is_semiregular(fs, d_max=cap)
                assert v.series_certifying, (W, D, dx)
                assert v.rank_ok == v.series_ok, (W, D, dx)


def test_semiregular_inconclusive_window():
    fs = froberg_sequence((2, 1), (4, 4), 4)
    v = is_semiregular(fs, d_max=1)  # below the truncation degree 3
    assert v.semiregular is None


def test_random_homogeneous_support_and_determinism():
    a1 = random_w_homogeneous_system((3, 2, 1), (6, 6, 6), seed=1)
    a2 = random_w_homogeneous_system((3, 2, 1), (6, 6, 6), seed=1)
    b = random_w_homogeneous_system((3, 2, 1), (6, 6, 6), seed=2)
    assert [f.terms for f in a1.polys] == [f.terms for f in a2.polys]
    assert [f.terms for f in a1.polys] != [f.terms for f in b.polys]
    # same dense support, different coefficients
    assert [sorted(e for e, _ in f.terms) for f in a1.polys] == [
        sorted(e for e, _ in f.terms) for f in b.polys
    ]
    for f, d in zip(a1.polys, a1.degrees):
        assert f.is_w_homogeneous()
        assert len(f) == len(monomials_of_wdeg((3, 2, 1), d))


def test_random_affine_support():
    sys = random_affine_system((2, 1), (4, 3), seed=3)
    for f, d in zip(sys.polys, sys.degrees):
        assert len(f) == len(monomials_of_wdeg_at_most((2, 1), d))
        assert f.wdeg() == d


def test_empty_support_error():
    with pytest.raises(EmptySupportError):
        random_w_homogeneous_system((2, 5), (3,), seed=1)
    with pytest.raises(EmptySupportError):
        random_affine_system((2, 5), (3,), seed=1)
    sys = random_w_homogeneous_system((2, 5), (0,), seed=1)
    assert sys.polys[0].wdeg() == 0 and not sys.polys[0].is_zero


def test_inversion_system_shape():
    R = ring((1,), names=("X",))
    x = R.gen(0)
    inv = inversion_system([x])
    assert inv.ring.weights.weights == (1, 1)
    assert [str(f) for f in inv.polys] == ["T1 - X"] or [
        str(f) for f in inv.polys
    ] == ["65520*X + T1"]
    inv2 = inversion_system([x, x ** 2])
    gb, rel = elimination_gb(inv2, 1)
    assert len(rel) == 1
    r = rel[0]
    # the relation is T2 - T1^2 up to sign
    assert {e for e, _ in r.terms} == {(0, 2, 0), (0, 0, 1)}


def test_inversion_elementary_symmetric_independent():
    R = ring((1, 1), names=("X", "Y"))
    X, Y = R.gens()
    inv = inversion_system([X + Y, X * Y])
    gb, rel = elimination_gb(inv, 2)
    assert rel == []


def test_inversion_top_components_noether():
    # highest components are T_i - top(f_i); they are in Noether position
    # with respect to the tag variables, i.e. after moving the tags to the
    # front, substituting the trailing X's to zero leaves (T_1, T_2)
    R = ring((1, 1), names=("X", "Y"))
    X, Y = R.gens()
    fs = [X ** 2 + X * Y + Y, X ** 3 + X]
    inv = inversion_system(fs)
    from wgb.transform import top_component

    tops = [top_component(f) for f in inv.polys]
    n, m = 2, 2
    perm = list(range(n, n + m)) + list(range(n))  # tags first
    permuted_ring = ring(
        tuple(inv.ring.weights[i] for i in perm),
        names=tuple(inv.ring.names[i] for i in perm),
    )
    permuted = [
        permuted_ring.from_map({tuple(e[i] for i in perm): c for e, c in f.terms})
        for f in tops
    ]
    sysT = PolySystem(permuted_ring, permuted)
    assert is_noether_position(sysT, method="substitute").regular
    assert is_noether_position(sysT, method="extend").regular


def test_snp_implies_np_implies_regular():
    rng = random.Random(10)
    for seed in range(25):
        n = rng.choice([2, 3])
        W = tuple(sorted((rng.choice([1, 2]) for _ in range(n)), reverse=True))
        D = tuple(w * rng.choice([1, 2, 3]) for w in W)
        sys = random_w_homogeneous_system(W, D, seed + 300)
        snp = is_snp(sys).snp
        np_ = is_noether_position(sys).regular
        reg = is_regular_sequence(sys).regular
        if snp:
            assert np_
        if np_:
            assert reg


def test_structure_report_round():
    sys = random_w_homogeneous_system((3, 2, 1), (6, 6, 6), seed=1)
    rep = structure_report(sys)
    d = rep.as_dict()
    assert d["strongly_w_compatible"] is True
    assert d["reverse_chain_divisible"] is False
    assert d["regular"]["verdict"] is True
    assert d["snp"]["verdict"] is True
    assert d["semiregular"]["verdict"] is True
