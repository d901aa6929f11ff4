"""Structural oracles and system generators.

Regularity is decided by comparing the quotient Hilbert series against the
rational product form; Noether position through the characterization
"append the trailing variables and test regularity"; semi-regularity both
by graded multiplication-map ranks (the definition) and by prefix Hilbert
series truncation (certifying under reverse chain-divisible weights with
degrees divisible by the top weight, advisory otherwise).
"""

import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ArityError, EmptySupportError, InsufficientWindowError
from .field import PrimeField
from .monomial import (
    as_weights,
    divisors,
    mono_divides,
    monomials_of_wdeg,
    monomials_of_wdeg_at_most,
    wdeg,
)
from .order import MonomialOrder
from .poly import PolyRing, PolySystem, reduce_poly
from .engine import buchberger, matrix_staircase_data
from .series import (
    expand_rational,
    staircase_census,
    truncate_semiregular,
)


# ---------------------------------------------------------------------------
# weight-system predicates
# ---------------------------------------------------------------------------

def is_reverse_chain_divisible(weights):
    """w_{i+1} | w_i for every i."""
    W = as_weights(weights)
    return all(W[i + 1] != 0 and W[i] % W[i + 1] == 0 for i in range(len(W) - 1))


def is_strongly_w_compatible(weights, degrees):
    """d_i divisible by w_i, componentwise."""
    W = as_weights(weights)
    D = tuple(degrees)
    if len(D) > len(W):
        raise ArityError(f"{len(D)} degrees for {len(W)} weights")
    return all(d % w == 0 for d, w in zip(D, W))


def divisor_of_wdegree(m2, d1, weights):
    """Some divisor of m2 with weighted degree exactly d1, or None."""
    W = as_weights(weights)
    if wdeg(m2, W) < d1:
        raise ValueError("monomial degree below the requested divisor degree")
    for cand in divisors(m2):
        if wdeg(cand, W) == d1:
            return cand
    return None


# ---------------------------------------------------------------------------
# regularity / Noether position
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegularityVerdict:
    regular: bool
    certified: bool     # exact (zero-dimensional window closure) vs window-only
    window: int
    first_mismatch: Optional[tuple] = None  # (degree, got, expected)

    def __bool__(self):
        return self.regular


def _wgrevlex_system(sys):
    order = MonomialOrder.wgrevlex(sys.ring.weights)
    if sys.ring.order == order:
        return sys
    return sys.with_order(order)


def is_regular_sequence(sys, window=None):
    """Quotient Hilbert series against the rational product form.

    Exact for m = n (the comparison window closes the staircase); for
    m < n the verdict means "regular up to the window degree".
    """
    sys = _wgrevlex_system(sys)
    sys.require_w_homogeneous()
    W = sys.ring.weights
    D = sys.degrees
    m, n = sys.m, sys.n
    if m > n:
        raise ArityError("regularity is for m <= n systems")
    if any(f.is_zero for f in sys.polys):
        return RegularityVerdict(False, True, 0, (0, None, None))
    square = m == n
    if window is None:
        if square:
            window = max(0, sum(D) - W.total) + W.max + 1
        else:
            window = sum(D) + W.max + 1
    expected = expand_rational(D, W, window)
    gb = buchberger(sys)
    got = staircase_census(gb.lt_monomials(), W, window)
    want = expected.coeffs_upto(window)
    if got == want:
        return RegularityVerdict(True, square, window)
    d = next(i for i in range(window + 1) if got[i] != want[i])
    return RegularityVerdict(False, square, window, (d, got[d], want[d]))


def is_noether_position(sys, method="extend"):
    """Noether position w.r.t. the first m variables.

    method "extend": append the trailing variables and test regularity of
    the extended (zero-dimensional) sequence.  method "substitute": set
    the trailing variables to zero and test regularity in m variables.
    """
    sys = _wgrevlex_system(sys)
    sys.require_w_homogeneous()
    ring = sys.ring
    m, n = sys.m, sys.n
    if m > n:
        raise ArityError("Noether position is for m <= n systems")
    if method == "extend":
        if m == n:
            return is_regular_sequence(sys)
        polys = list(sys.polys) + [ring.gen(j) for j in range(m, n)]
        degrees = tuple(sys.degrees) + tuple(ring.weights[j] for j in range(m, n))
        return is_regular_sequence(PolySystem(ring, polys, degrees))
    if method == "substitute":
        Wm = as_weights(ring.weights.weights[:m])
        sub = PolyRing(ring.field, Wm, MonomialOrder.wgrevlex(Wm), ring.names[:m])
        polys = []
        for f in sys.polys:
            kept = {
                e[:m]: c for e, c in f.terms if all(a == 0 for a in e[m:])
            }
            polys.append(sub.from_map(kept))
        return is_regular_sequence(PolySystem(sub, polys, sys.degrees))
    raise ValueError(f"unknown method {method!r}")


@dataclass(frozen=True)
class SnpVerdict:
    snp: bool
    first_failing_prefix: Optional[int]
    prefix_verdicts: tuple

    def __bool__(self):
        return self.snp


def is_snp(sys):
    """Simultaneous Noether position: every prefix in Noether position."""
    sys = _wgrevlex_system(sys)
    verdicts = []
    failing = None
    for i in range(1, sys.m + 1):
        prefix = PolySystem(sys.ring, sys.polys[:i], sys.degrees[:i])
        v = is_noether_position(prefix)
        verdicts.append(v)
        if not v and failing is None:
            failing = i
    return SnpVerdict(failing is None, failing, tuple(verdicts))


# ---------------------------------------------------------------------------
# semi-regularity
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SemiregularVerdict:
    semiregular: Optional[bool]   # None when inconclusive
    rank_ok: Optional[bool]
    series_ok: bool
    series_certifying: bool
    window: int
    truncation_degree: Optional[int]
    first_failure: Optional[tuple] = None  # (i, d, rank deficiency)

    def __bool__(self):
        return bool(self.semiregular)


def _prefix_basis(sys, prefix_len, up_to):
    """Basis elements of the prefix ideal, exact for degrees <= up_to."""
    polys = sys.polys[:prefix_len]
    if all(len(f) == 1 for f in polys):
        return [f.monic() for f in polys]  # monomial ideal: already a basis
    subsys = PolySystem(sys.ring, polys, sys.degrees[:prefix_len])
    basis, _ = matrix_staircase_data(subsys, up_to)
    return basis


def _graded_staircase(lts, weights, order, d):
    out = [
        m
        for m in monomials_of_wdeg(weights.weights, d)
        if not any(mono_divides(g, m) for g in lts)
    ]
    out.sort(key=order.key)
    return out


def _matrix_rank_gf(rows, p):
    if not rows:
        return 0
    mat = np.array(rows, dtype=np.int64) % p
    rank = 0
    ncols = mat.shape[1]
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, mat.shape[0]):
            if mat[i, c] % p:
                piv = i
                break
        if piv is None:
            continue
        mat[[r, piv]] = mat[[piv, r]]
        inv = pow(int(mat[r, c]), p - 2, p)
        mat[r] = (mat[r] * inv) % p
        for i in range(mat.shape[0]):
            if i != r and mat[i, c]:
                mat[i] = (mat[i] - int(mat[i, c]) * mat[r]) % p
        r += 1
        rank += 1
        if r == mat.shape[0]:
            break
    return rank


def _truncation_degree(weights, degrees):
    window = None
    for _ in range(6):
        s = expand_rational(degrees, weights, window)
        try:
            return truncate_semiregular(s).degree
        except InsufficientWindowError:
            window = 2 * (s.window + 1)
    return None


def is_semiregular(sys, d_max=None):
    """Both semi-regularity tests: graded ranks and prefix series.

    Rank method (the definition): for every i and every degree d up to
    d_max, multiplication by f_i between the graded pieces of the prefix
    quotient is full rank.  Series method: every prefix quotient matches
    the truncation of its rational series; certifying for coprime reverse
    chain-divisible weights (w_n = 1) with d_1..d_n divisible by w_1,
    advisory otherwise.
    """
    sys = _wgrevlex_system(sys)
    sys.require_w_homogeneous()
    if any(f.is_zero for f in sys.polys):
        raise ValueError("zero polynomial in the sequence")
    W = sys.ring.weights
    D = sys.degrees
    m, n = sys.m, sys.n
    p = sys.ring.field.p
    order = sys.ring.order

    trunc = _truncation_degree(W, D)
    if d_max is None:
        base = trunc if trunc is not None else max(0, sum(D) - W.total)
        d_max = base + W.max
    inconclusive = trunc is not None and d_max < trunc

    rank_ok = True
    first_failure = None
    for i in range(1, m + 1):
        di = D[i - 1]
        upto = d_max + di
        basis = _prefix_basis(sys, i - 1, upto)
        lts = [g.lm for g in basis]
        census = staircase_census(lts, W, upto)
        fi = sys.polys[i - 1]
        for d in range(0, d_max + 1):
            dom_n = census[d]
            cod_n = census[d + di] if d + di <= upto else None
            if dom_n == 0 or cod_n == 0:
                continue
            dom = _graded_staircase(lts, W, order, d)
            cod = _graded_staircase(lts, W, order, d + di)
            cod_index = {mm: idx for idx, mm in enumerate(cod)}
            cols = []
            for b in dom:
                nf = reduce_poly(fi.mono_mul(b), basis)
                vec = [0] * len(cod)
                for e, c in nf.terms:
                    vec[cod_index[e]] = c
                cols.append(vec)
            rank = _matrix_rank_gf(cols, p)
            if rank < min(len(dom), len(cod)):
                rank_ok = False
                if first_failure is None:
                    first_failure = (i, d, min(len(dom), len(cod)) - rank)
                break
        if not rank_ok:
            break

    series_ok = True
    for i in range(1, m + 1):
        basis = _prefix_basis(sys, i, d_max)
        got = staircase_census([g.lm for g in basis], W, d_max)
        s = expand_rational(D[:i], W, max(d_max, 0))
        try:
            want = truncate_semiregular(s).coeffs_upto(d_max)
        except InsufficientWindowError:
            want = s.coeffs_upto(d_max)
        if got != want:
            series_ok = False
            break

    # the truncation comparison is a theorem only for coprime reverse
    # chain-divisible weights (w_n = 1) with the leading degrees divisible
    # by the top weight; otherwise structural zero coefficients make the
    # truncated series cut too early and the method is advisory
    certifying = (
        is_reverse_chain_divisible(W)
        and W[n - 1] == 1
        and m >= n
        and all(D[i] % W[0] == 0 for i in range(min(n, m)))
    )
    semiregular = None if (inconclusive and rank_ok) else rank_ok
    return SemiregularVerdict(
        semiregular=semiregular,
        rank_ok=rank_ok,
        series_ok=series_ok,
        series_certifying=certifying,
        window=d_max,
        truncation_degree=trunc,
        first_failure=first_failure,
    )


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------

def _make_ring(field, weights, names=None):
    W = as_weights(weights)
    field = field if isinstance(field, PrimeField) else PrimeField(field or 65521)
    return PolyRing(field, W, MonomialOrder.wgrevlex(W), names)


def random_w_homogeneous_system(weights, degrees, seed, field=None, names=None):
    """Dense support on all monomials of weighted degree exactly d_i,
    uniform nonzero coefficients, deterministic under (seed, W, D, p)."""
    ring = _make_ring(field, weights, names)
    W, p = ring.weights, ring.field.p
    D = tuple(degrees)
    rng = random.Random(f"wgb-hom|{p}|{W.weights}|{D}|{seed}")
    polys = []
    for d in D:
        support = sorted(monomials_of_wdeg(W.weights, d), key=ring.order.key, reverse=True)
        if not support:
            raise EmptySupportError(
                f"no monomials of weighted degree {d} for weights {W.weights} "
                f"(Sylvester denumerant 0)"
            )
        polys.append(ring.from_map({m: rng.randrange(1, p) for m in support}))
    return PolySystem(ring, polys, D)


def random_affine_system(weights, degrees, seed, field=None, names=None):
    """Dense support on all monomials of weighted degree <= d_i."""
    ring = _make_ring(field, weights, names)
    W, p = ring.weights, ring.field.p
    D = tuple(degrees)
    rng = random.Random(f"wgb-aff|{p}|{W.weights}|{D}|{seed}")
    polys = []
    for d in D:
        if not monomials_of_wdeg(W.weights, d):
            raise EmptySupportError(
                f"no monomials of weighted degree {d} for weights {W.weights} "
                f"(Sylvester denumerant 0)"
            )
        support = sorted(
            monomials_of_wdeg_at_most(W.weights, d), key=ring.order.key, reverse=True
        )
        polys.append(ring.from_map({m: rng.randrange(1, p) for m in support}))
    return PolySystem(ring, polys, D)


def froberg_sequence(weights, degrees, d_extra, field=None, names=None):
    """(X_1^(d_1/w_1), .., X_n^(d_n/w_n), (X_1 + X_2^(w_1/w_2) + .. + X_n^(w_1/w_n))^(d_extra/w_1)).

    Needs reverse chain-divisible weights, strongly compatible degrees and
    w_1 | d_extra.
    """
    ring = _make_ring(field, weights, names)
    W = ring.weights
    D = tuple(degrees)
    n = ring.n
    if len(D) != n:
        raise ArityError(f"need {n} degrees, got {len(D)}")
    if not is_reverse_chain_divisible(W):
        raise ValueError(f"weights {W.weights} are not reverse chain-divisible")
    if not is_strongly_w_compatible(W, D):
        raise ValueError(f"degrees {D} are not strongly compatible with {W.weights}")
    if d_extra % W[0]:
        raise ValueError(f"{d_extra} is not divisible by the top weight {W[0]}")
    polys = []
    for i in range(n):
        e = [0] * n
        e[i] = D[i] // W[i]
        polys.append(ring.monomial(e))
    mixed = ring.zero()
    for i in range(n):
        e = [0] * n
        e[i] = W[0] // W[i]
        mixed = mixed + ring.monomial(e)
    polys.append(mixed ** (d_extra // W[0]))
    return PolySystem(ring, polys, D + (d_extra,))


def inversion_system(f_list, tag_names=None):
    """Tagged system (T_i - f_i) with weights (1,..,1, deg f_1,.., deg f_m).

    The tag variables are appended after the original ones; by the weight
    choice each T_i joins the top weighted-degree component, which is in
    Noether position with respect to the tags.
    """
    if not f_list:
        raise ValueError("need at least one polynomial")
    base = f_list[0].ring
    n = base.n
    m = len(f_list)
    degs = []
    for f in f_list:
        d = max(sum(e) for e, _ in f.terms) if f.terms else -1
        if d < 1:
            raise ValueError("inversion inputs must have total degree >= 1")
        degs.append(d)
    names = base.names + tuple(
        tag_names[i] if tag_names else f"T{i+1}" for i in range(m)
    )
    W = as_weights((1,) * n + tuple(degs))
    ring = PolyRing(base.field, W, MonomialOrder.wgrevlex(W), names)
    polys = []
    for i, f in enumerate(f_list):
        terms = {tuple(e) + (0,) * m: -c for e, c in f.terms}
        tag = [0] * (n + m)
        tag[n + i] = 1
        terms[tuple(tag)] = terms.get(tuple(tag), 0) + 1
        polys.append(ring.from_map(terms))
    return PolySystem(ring, polys, tuple(degs))


# ---------------------------------------------------------------------------
# aggregate report
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StructureReport:
    weights: tuple
    degrees: tuple
    reverse_chain_divisible: bool
    strongly_w_compatible: bool
    hyp_degrees_vs_weights: bool   # d_j >= w_{j-1} for j >= 2
    hyp_top_weight_divides: bool   # w_1 | d_i
    hyp_last_weight_one: bool
    regular: Optional[RegularityVerdict]
    snp: Optional[SnpVerdict]
    semiregular: SemiregularVerdict

    def as_dict(self):
        return {
            "weights": list(self.weights),
            "degrees": list(self.degrees),
            "reverse_chain_divisible": self.reverse_chain_divisible,
            "strongly_w_compatible": self.strongly_w_compatible,
            "hypotheses": {
                "degrees_vs_weights": self.hyp_degrees_vs_weights,
                "top_weight_divides_degrees": self.hyp_top_weight_divides,
                "last_weight_one": self.hyp_last_weight_one,
            },
            "regular": None
            if self.regular is None
            else {
                "verdict": self.regular.regular,
                "certified": self.regular.certified,
                "window": self.regular.window,
            },
            "snp": None
            if self.snp is None
            else {
                "verdict": self.snp.snp,
                "first_failing_prefix": self.snp.first_failing_prefix,
            },
            "semiregular": {
                "verdict": self.semiregular.semiregular,
                "rank_ok": self.semiregular.rank_ok,
                "series_ok": self.semiregular.series_ok,
                "series_certifying": self.semiregular.series_certifying,
                "window": self.semiregular.window,
                "first_failure": self.semiregular.first_failure,
            },
        }


def structure_report(sys, d_max=None):
    sys = _wgrevlex_system(sys)
    W = sys.ring.weights
    D = sys.degrees
    m, n = sys.m, sys.n
    regular = is_regular_sequence(sys) if m <= n else None
    snp = is_snp(sys) if m <= n else None
    semi = is_semiregular(sys, d_max=d_max)
    return StructureReport(
        weights=W.weights,
        degrees=D,
        reverse_chain_divisible=is_reverse_chain_divisible(W),
        strongly_w_compatible=is_strongly_w_compatible(W, D[: min(m, n)]),
        hyp_degrees_vs_weights=all(D[j] >= W[j - 1] for j in range(1, min(m, n))),
        hyp_top_weight_divides=all(d % W[0] == 0 for d in D[: min(m, n)]),
        hyp_last_weight_one=W[n - 1] == 1,
        regular=regular,
        snp=snp,
        semiregular=semi,
    )
