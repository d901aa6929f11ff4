"""Groebner basis engines.

Two routes: a Buchberger loop with lowest-weighted-degree pair selection
and the two classical pair criteria, and a degree-by-degree Macaulay
matrix engine for weighted homogeneous input that applies the signature
criterion to skip rows reducible by earlier leading terms (eliminating the
trivial syzygies) and measures the observed degree of regularity as the
largest degree whose matrix was actually built and reduced.
"""

import heapq
import time
from dataclasses import dataclass, field, replace

import numpy as np

from .bounds import macaulay_weak
from .errors import (
    BudgetExceededError,
    IncompleteBasisError,
    NotWHomogeneousError,
)
from .monomial import (
    mono_divides,
    mono_lcm,
    mono_mul,
    monomials_of_wdeg,
    wdeg,
)
from .order import WGREVLEX, MonomialOrder
from .poly import reduce_poly, spoly
from .series import expand_rational, staircase_census, truncate_semiregular
from .transform import hom_w_inverse, hom_w_system


@dataclass
class GBStats:
    pairs_considered: int = 0
    reductions_to_zero: int = 0
    observed_dreg: int = -1
    max_matrix_rows: int = 0
    max_matrix_cols: int = 0
    engine: str = ""

    def as_dict(self):
        return {
            "engine": self.engine,
            "pairs_considered": self.pairs_considered,
            "reductions_to_zero": self.reductions_to_zero,
            "observed_dreg": self.observed_dreg,
            "max_matrix_rows": self.max_matrix_rows,
            "max_matrix_cols": self.max_matrix_cols,
        }


class GroebnerBasis:
    """A (reduced, monic) Groebner basis with its run statistics."""

    __slots__ = ("ring", "polys", "reduced", "stats")

    def __init__(self, ring, polys, reduced, stats):
        self.ring = ring
        self.polys = tuple(polys)
        self.reduced = reduced
        self.stats = stats

    @property
    def order(self):
        return self.ring.order

    def lt_monomials(self):
        return [f.lm for f in self.polys]

    def reduce(self, f):
        return reduce_poly(f, self.polys)

    def contains(self, f):
        return self.reduce(f).is_zero

    def spolynomial_audit(self):
        """Buchberger criterion: every S-polynomial reduces to zero."""
        G = self.polys
        for i in range(len(G)):
            for j in range(i + 1, len(G)):
                if mono_lcm(G[i].lm, G[j].lm) == mono_mul(G[i].lm, G[j].lm):
                    continue
                if not reduce_poly(spoly(G[i], G[j]), G).is_zero:
                    return False
        return True

    def __repr__(self):
        return f"GroebnerBasis({len(self.polys)} polys, {self.ring!r})"

    def __iter__(self):
        return iter(self.polys)


def _interreduce(ring, polys):
    """Fixpoint interreduction: monic, minimal leading terms, reduced tails.

    Accepts any generating set; on a Groebner basis this produces the
    unique reduced basis.
    """
    sort_key = lambda f: (ring.order.key(f.lm), f.terms)
    work = [f.monic() for f in polys if f]
    changed = True
    while changed:
        changed = False
        work.sort(key=sort_key)
        for i in range(len(work)):
            h = reduce_poly(work[i], work[:i] + work[i + 1 :])
            if h.is_zero:
                work.pop(i)
                changed = True
                break
            h = h.monic()
            if h.terms != work[i].terms:
                work[i] = h
                changed = True
                break
    work.sort(key=sort_key)
    return work


def reduce_basis(gb):
    """Reduced Groebner basis of the same ideal; idempotent."""
    polys = _interreduce(gb.ring, list(gb.polys))
    return GroebnerBasis(gb.ring, polys, True, replace(gb.stats))


def buchberger(sys, order=None):
    """Buchberger with lowest-weighted-degree-first pair selection.

    Applies the coprime-leading-term and chain criteria; the observed
    degree of regularity is the largest weighted degree of the lcm over
    pairs that were actually reduced.
    """
    if order is not None:
        sys = sys.with_order(order)
    ring = sys.ring
    okey = ring.order.key
    ws = ring.weights
    stats = GBStats(engine="buchberger")
    G = [f.monic() for f in sys.polys if f]
    if not G:
        return GroebnerBasis(ring, (), True, stats)

    heap = []

    def push_pair(i, j):
        l = mono_lcm(G[i].lm, G[j].lm)
        heapq.heappush(heap, (wdeg(l, ws), okey(l), i, j))

    for j in range(len(G)):
        for i in range(j):
            push_pair(i, j)

    treated = set()
    while heap:
        _, _, i, j = heapq.heappop(heap)
        treated.add((i, j))
        stats.pairs_considered += 1
        lmi, lmj = G[i].lm, G[j].lm
        l = mono_lcm(lmi, lmj)
        if l == mono_mul(lmi, lmj):
            continue  # coprime leading terms
        chain = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if mono_divides(G[k].lm, l):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in treated and b in treated:
                    chain = True
                    break
        if chain:
            continue
        stats.observed_dreg = max(stats.observed_dreg, wdeg(l, ws))
        h = reduce_poly(spoly(G[i], G[j]), G)
        if h.is_zero:
            stats.reductions_to_zero += 1
            continue
        h = h.monic()
        t = len(G)
        G.append(h)
        for i2 in range(t):
            push_pair(i2, t)

    polys = _interreduce(ring, G)
    return GroebnerBasis(ring, polys, True, stats)


def _semiregular_stop_degree(weights, degrees):
    window = None
    for _ in range(8):
        s = expand_rational(degrees, weights, window)
        try:
            return truncate_semiregular(s).degree
        except Exception:
            window = 2 * (s.window + 1)
    raise RuntimeError("could not locate the series truncation degree")


class _MatrixRun:
    """Shared degree-by-degree signature elimination.

    Harvested basis elements are tagged with the input index of the row
    that produced them, so the criterion for index i tests divisibility
    against leading terms discovered for indices < i only.
    """

    def __init__(self, sys):
        sys.require_w_homogeneous()
        if sys.ring.order.kind != WGREVLEX:
            raise NotWHomogeneousError("matrix engine requires the weighted grevlex order")
        self.ring = sys.ring
        self.p = sys.ring.field.p
        self.ws = sys.ring.weights
        self.inputs = [f.monic() for f in sys.polys if f]
        self.degrees = [f.wdeg() for f in self.inputs]
        self.basis = []      # harvested polynomials
        self.tags = []       # input index that produced each one
        self.stats = GBStats(engine="matrix")

    def _blocked(self, i, mult):
        for g, tag in zip(self.basis, self.tags):
            if tag < i and mono_divides(g.lm, mult):
                return True
        return False

    def run_degree(self, d):
        """Build and reduce the degree-d matrix; returns True if any row existed."""
        ring, p, ws = self.ring, self.p, self.ws
        okey = ring.order.key
        rows = []
        for i, (f, di) in enumerate(zip(self.inputs, self.degrees)):
            if di > d:
                continue
            if di == d:
                mults = [(0,) * ring.n]
            else:
                mults = sorted(monomials_of_wdeg(ws.weights, d - di), key=okey)
            for mult in mults:
                if not self._blocked(i, mult):
                    rows.append((i, mult, f))
        if not rows:
            return False
        cols = sorted(monomials_of_wdeg(ws.weights, d), key=okey, reverse=True)
        col_index = {m: idx for idx, m in enumerate(cols)}
        ncols = len(cols)
        self.stats.max_matrix_rows = max(self.stats.max_matrix_rows, len(rows))
        self.stats.max_matrix_cols = max(self.stats.max_matrix_cols, ncols)

        pivots = {}
        store = []
        known_lms = [g.lm for g in self.basis]
        for i, mult, f in rows:
            vec = np.zeros(ncols, dtype=np.int64)
            for e, c in f.terms:
                vec[col_index[mono_mul(e, mult)]] = c
            while True:
                nz = np.flatnonzero(vec)
                if nz.size == 0:
                    self.stats.reductions_to_zero += 1
                    break
                jcol = int(nz[0])
                hit = pivots.get(jcol)
                if hit is not None:
                    vec = (vec - int(vec[jcol]) * store[hit]) % p
                    continue
                inv = pow(int(vec[jcol]), p - 2, p)
                vec = (vec * inv) % p
                pivots[jcol] = len(store)
                store.append(vec)
                lmono = cols[jcol]
                if not any(mono_divides(lm, lmono) for lm in known_lms):
                    poly = ring.from_map(
                        {cols[int(k)]: int(vec[int(k)]) for k in np.flatnonzero(vec)}
                    )
                    self.basis.append(poly)
                    self.tags.append(i)
                    known_lms.append(lmono)
                break
        self.stats.observed_dreg = max(self.stats.observed_dreg, d)
        return True

    def census_matches(self, expected):
        upto = expected.degree + self.ws.max
        got = staircase_census([g.lm for g in self.basis], self.ws, upto)
        return got == expected.coeffs_upto(upto)


def matrix_gb_whomog(sys, expected_series=None, max_degree=None, deadline=None):
    """Degree-by-degree signature matrix engine for weighted homogeneous input.

    Stops when the supplied (polynomial) Hilbert series certifies the
    leading-term ideal, or else runs to the weak Macaulay window and checks
    the Buchberger criterion.  A window exhausted without either
    certificate raises IncompleteBasisError carrying the partial basis.
    """
    run = _MatrixRun(sys)
    ring = run.ring
    if not run.inputs:
        return GroebnerBasis(ring, (), True, run.stats)
    if expected_series is not None and not expected_series.polynomial:
        raise ValueError("Hilbert-driven termination needs a polynomial series")

    if max_degree is not None:
        d_stop = max_degree
    else:
        D = tuple(run.degrees)
        m, n = len(D), ring.n
        if m == n:
            d_stop = macaulay_weak(run.ws, D) + run.ws.max
        elif m > n:
            d_stop = _semiregular_stop_degree(run.ws, D) + run.ws.max
        else:
            raise ValueError(
                "underdetermined weighted homogeneous input needs an explicit max_degree"
            )

    complete = False
    for d in range(min(run.degrees), d_stop + 1):
        if deadline is not None and time.monotonic() > deadline:
            raise BudgetExceededError(
                f"matrix engine exceeded its budget at degree {d}", stats=run.stats
            )
        run.run_degree(d)
        if expected_series is not None and run.census_matches(expected_series):
            complete = True
            break

    polys = _interreduce(ring, run.basis)
    gb = GroebnerBasis(ring, polys, True, run.stats)
    if complete:
        return gb
    if expected_series is not None:
        raise IncompleteBasisError(
            f"window [{min(run.degrees)}, {d_stop}] exhausted without matching the "
            "expected Hilbert series",
            partial=gb,
            stats=run.stats,
        )
    if gb.spolynomial_audit():
        return gb
    raise IncompleteBasisError(
        f"window [{min(run.degrees)}, {d_stop}] exhausted and the partial basis fails "
        "the S-polynomial audit",
        partial=gb,
        stats=run.stats,
    )


def matrix_staircase_data(sys, up_to_degree):
    """Leading terms of the ideal, exact for all degrees <= up_to_degree.

    A degree-truncated run: the degree-d matrix spans the full degree-d
    slice of the ideal, so the harvested leading monomials determine the
    staircase exactly on the processed range even when the basis is not
    yet complete.
    """
    run = _MatrixRun(sys)
    if not run.inputs:
        return [], run.stats
    for d in range(min(run.degrees), up_to_degree + 1):
        run.run_degree(d)
    return list(run.basis), run.stats


def gb_via_homw(sys):
    """Compute through the weight substitution and pull back.

    The substitution preserves S-polynomials, so the reduced basis of the
    image system under grevlex pulls back exactly to the reduced weighted
    grevlex basis of the input.
    """
    sys.require_w_homogeneous()
    image = hom_w_system(sys)
    gb_img = buchberger(image)
    ws = sys.ring.weights
    pulled = []
    for g in gb_img.polys:
        try:
            pulled.append(hom_w_inverse(g, ws))
        except Exception as exc:  # cannot happen for weighted homogeneous input
            raise RuntimeError(
                f"engine inconsistency: image basis element {g} not in the "
                f"substitution image: {exc}"
            ) from exc
    ring = sys.ring.with_order(MonomialOrder.wgrevlex(ws))
    polys = [ring.from_map(f.coeff_map()) for f in pulled]
    polys.sort(key=lambda f: ring.order.key(f.lm))
    stats = replace(gb_img.stats, engine="homw")
    return GroebnerBasis(ring, polys, True, stats)


def elimination_gb(sys, k):
    """Basis under the block order eliminating the first k variables.

    Returns the pair (basis, elimination basis), the latter being the
    elements free of the first k variables.
    """
    n = sys.ring.n
    if k >= n:
        raise ValueError(f"cannot eliminate {k} of {n} variables")
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        order = MonomialOrder.wgrevlex(sys.ring.weights)
    else:
        order = MonomialOrder.elimination(sys.ring.weights, k)
    gb = buchberger(sys.with_order(order))
    elim = [f for f in gb.polys if all(e[i] == 0 for e, _ in f.terms for i in range(k))]
    return gb, elim
