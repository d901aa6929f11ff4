"""Hilbert series of weighted graded algebras and their shape analysis.

Everything here is exact integer arithmetic on coefficient windows of the
rational series  prod(1 - T^d_i) / prod(1 - T^w_j)  and on staircase
censuses of monomial ideals.
"""

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from .errors import (
    ArityError,
    InsufficientWindowError,
    PositiveDimensionError,
)
from .monomial import as_weights, mono_divides, monomials_of_wdeg, wdeg


# ---------------------------------------------------------------------------
# series container
# ---------------------------------------------------------------------------

class HilbertSeries:
    """A coefficient window a_0..a_N, or an exact polynomial.

    Polynomial series know all their coefficients (zero beyond the stored
    degree); window series only know the stored window and refuse to
    answer beyond it.
    """

    __slots__ = ("coeffs", "window", "polynomial", "numerator_degrees", "denominator_weights")

    def __init__(self, coeffs, window=None, polynomial=False,
                 numerator_degrees=None, denominator_weights=None):
        coeffs = list(coeffs)
        if polynomial:
            while coeffs and coeffs[-1] == 0:
                coeffs.pop()
        self.coeffs = coeffs
        self.polynomial = polynomial
        if window is None:
            window = len(coeffs) - 1
        self.window = max(window, len(coeffs) - 1)
        self.numerator_degrees = tuple(numerator_degrees) if numerator_degrees else None
        self.denominator_weights = tuple(denominator_weights) if denominator_weights else None

    @property
    def degree(self):
        """Degree as a polynomial (-1 for zero); error if only a window."""
        if not self.polynomial:
            raise PositiveDimensionError("series is a truncated window, not a polynomial")
        return len(self.coeffs) - 1

    def coeff(self, d):
        if d < 0:
            return 0
        if d < len(self.coeffs):
            return self.coeffs[d]
        if self.polynomial:
            return 0
        if d <= self.window:
            return 0
        raise InsufficientWindowError(
            f"coefficient {d} beyond computed window {self.window}"
        )

    def coeffs_upto(self, N):
        return [self.coeff(d) for d in range(N + 1)]

    def equals_upto(self, other, N):
        return self.coeffs_upto(N) == other.coeffs_upto(N)

    def __eq__(self, other):
        if not isinstance(other, HilbertSeries):
            return NotImplemented
        if self.polynomial and other.polynomial:
            return self.coeffs == other.coeffs
        N = min(self.window, other.window)
        return self.polynomial == other.polynomial and self.coeffs_upto(N) == other.coeffs_upto(N)

    def __repr__(self):
        kind = "poly" if self.polynomial else f"window<= {self.window}"
        return f"HilbertSeries({self.coeffs}, {kind})"


# ---------------------------------------------------------------------------
# rational expansion
# ---------------------------------------------------------------------------

def _numerator(D):
    num = [1]
    for d in D:
        new = [0] * (len(num) + d)
        for i, c in enumerate(num):
            new[i] += c
            new[i + d] -= c
        num = new
    return num


def _divide_window(coeffs, W, N):
    c = coeffs[: N + 1] + [0] * max(0, N + 1 - len(coeffs))
    for w in W:
        for i in range(w, N + 1):
            c[i] += c[i - w]
    return c


def _convolve(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def default_window(weights, degrees):
    """Smallest window on which the shape statements are checkable."""
    W = as_weights(weights)
    D = tuple(degrees)
    m, n = len(D), len(W)
    if m == n:
        return max(0, sum(D) - W.total) + W.max + 1
    if m > n:
        dstar = max(0, sum(D[:-1]) - W.total)
        return dstar + D[-1] + 1
    return sum(D) + W.max + 1


def expand_rational(degrees, weights, N=None):
    """Exact coefficients of prod(1-T^d_i)/prod(1-T^w_j) up to degree N.

    When the rational function is actually a polynomial (verified by exact
    reconvolution), the result is flagged polynomial and knows all its
    coefficients.
    """
    W = as_weights(weights)
    D = tuple(degrees)
    if any(d < 0 for d in D):
        raise ValueError("degrees must be non-negative")
    if N is None:
        N = default_window(W, D)
    if N < 0:
        raise ValueError("window must be >= 0")
    num = _numerator(D)
    delta = sum(D) - W.total
    if delta >= 0:
        q = _divide_window(num, W.weights, delta)
        recon = _convolve(q, _numerator(W.weights))
        padded = num + [0] * (len(recon) - len(num))
        if recon == padded:
            return HilbertSeries(q, window=max(N, delta), polynomial=True,
                                 numerator_degrees=D, denominator_weights=W.weights)
    return HilbertSeries(_divide_window(num, W.weights, N), window=N,
                         polynomial=False, numerator_degrees=D,
                         denominator_weights=W.weights)


def series_delta(s):
    """First difference: coefficients of (1-T) * S on the same window."""
    N = s.window
    out = [s.coeff(d) - s.coeff(d - 1) for d in range(N + 1)]
    return HilbertSeries(out, window=N, polynomial=False)


def series_integrate(s):
    """Running sums: coefficients of S / (1-T) on the same window."""
    N = s.window
    out = []
    acc = 0
    for d in range(N + 1):
        acc += s.coeff(d)
        out.append(acc)
    return HilbertSeries(out, window=N, polynomial=False)


def truncate_semiregular(s):
    """Drop everything from the first coefficient <= 0 onward.

    An all-positive polynomial series is returned unchanged; a window
    series with no non-positive coefficient in the window is an error
    (the window was too small to locate the truncation point).
    """
    limit = s.degree if s.polynomial else s.window
    for d in range(limit + 1):
        if s.coeff(d) <= 0:
            return HilbertSeries(s.coeffs[:d], polynomial=True,
                                 numerator_degrees=s.numerator_degrees,
                                 denominator_weights=s.denominator_weights)
    if s.polynomial:
        return s
    raise InsufficientWindowError(
        f"no non-positive coefficient up to degree {s.window}; enlarge the window"
    )


# ---------------------------------------------------------------------------
# shape parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeriesShape:
    """Partial sums delta_j = sum_{i<=j}(d_i - w_i) and the derived plateau data."""

    delta_j: tuple
    delta: int
    delta_star: int
    sigma: int
    sigma_star: Optional[int]
    mu: int
    mu_star: Optional[int]


@dataclass(frozen=True)
class CIShapeReport:
    self_reciprocal: bool
    monotone_pattern_ok: bool
    step_width_ok: bool
    shape: SeriesShape


def shape_params(weights, degrees):
    """Plateau parameters of a complete-intersection series.

    Degrees are sorted ascending whenever every degree is divisible by the
    largest weight (the setting in which the step-shape statement holds and
    its proof reorders them); otherwise they are taken as given.
    """
    W = as_weights(weights)
    D = tuple(degrees)
    n = len(W)
    if len(D) != n:
        raise ArityError(f"need {n} degrees for shape parameters, got {len(D)}")
    if all(d % W[0] == 0 for d in D):
        D = tuple(sorted(D))
    delta_j = []
    acc = 0
    for d, w in zip(D, W):
        acc += d - w
        delta_j.append(acc)
    delta = delta_j[-1]
    delta_star = delta_j[-2] if n >= 2 else 0
    sigma = min(delta_star, delta // 2)
    mu = delta - 2 * sigma
    if n >= 3:
        dss = delta_j[-3]
    elif n == 2:
        dss = 0
    else:
        dss = None
    sigma_star = min(dss, delta_star // 2) if dss is not None else None
    mu_star = delta_star - 2 * sigma_star if sigma_star is not None else None
    return SeriesShape(tuple(delta_j), delta, delta_star, sigma, sigma_star, mu, mu_star)


def validate_ci_shape(s, weights, degrees):
    """Check a series window against the complete-intersection shape.

    Verifies self-reciprocality a_d = a_{delta-d}, the rise/plateau/fall
    pattern around sigma and sigma+mu, and that the strict increases of
    the rising phase sit at multiples of w_{n-1} spaced exactly w_{n-1}
    apart (the step-width statement).  The guarantees only hold under
    reverse chain-divisible weights with all degrees divisible by the top
    weight; the checks themselves run on any input.
    """
    W = as_weights(weights)
    shape = shape_params(W, degrees)
    delta, sigma, mu = shape.delta, shape.sigma, shape.mu
    a = [s.coeff(d) for d in range(delta + 1)]

    self_rec = all(a[d] == a[delta - d] for d in range(delta + 1))

    monotone = True
    for d in range(0, sigma):
        if a[d] > a[d + 1]:
            monotone = False
    for d in range(sigma, sigma + mu):
        if a[d] != a[d + 1]:
            monotone = False
    for d in range(sigma + mu, delta):
        if a[d] < a[d + 1]:
            monotone = False

    n = len(W)
    steps = True
    if n >= 2:
        w_step = W[n - 2]
        rises = [
            d for d in range(0, sigma + 1) if a[d] > (a[d - 1] if d else 0)
        ]
        if any(d % w_step for d in rises):
            steps = False
        for prev, nxt in zip(rises, rises[1:]):
            if nxt - prev != w_step:
                steps = False
    return CIShapeReport(self_rec, monotone, steps, shape)


def delta_semiregular_n_plus_1(weights, degrees):
    """Closed-form degree of the truncated series for n+1 polynomials.

    min( sum_{i<=n} d_i - sum w_i , floor((sum_{i<=n+1} d_i - sum w_i)/2) ).
    """
    W = as_weights(weights)
    D = tuple(degrees)
    n = len(W)
    if len(D) != n + 1:
        raise ArityError(f"need n+1 = {n + 1} degrees, got {len(D)}")
    return min(sum(D[:n]) - W.total, (sum(D) - W.total) // 2)


# ---------------------------------------------------------------------------
# staircase census of monomial ideals
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _free_census(ws, N):
    return tuple(_divide_window([1], list(ws), N))


def _minimalize(gens):
    out = []
    for g in sorted(gens, key=sum):
        if not any(mono_divides(h, g) for h in out):
            out.append(g)
    return out


def staircase_census(lt_monomials, weights, N):
    """Count monomials of each weighted degree <= N outside <lt_monomials>.

    Pivot recursion: split on one variable occurrence,
    census(I) = census(I + <x_j>) + T^(w_j) * census(I : x_j),
    with free-algebra and pure-power base cases.
    """
    W = as_weights(weights)
    ws = W.weights
    gens = _minimalize(tuple(g) for g in lt_monomials)
    cache = {}

    def rec(gens, N):
        if N < 0:
            return []
        key = (tuple(sorted(gens)), N)
        hit = cache.get(key)
        if hit is not None:
            return hit
        if any(all(a == 0 for a in g) for g in gens):
            res = [0] * (N + 1)
        elif not gens:
            res = list(_free_census(ws, N))
        elif all(sum(1 for a in g if a) == 1 for g in gens):
            # pure variable powers: numerator product over the free census
            num = _numerator([wdeg(g, ws) for g in gens])
            res = _divide_window(num, ws, N)
        else:
            counts = [0] * len(ws)
            for g in gens:
                if sum(1 for a in g if a) > 1:
                    for j, a in enumerate(g):
                        if a:
                            counts[j] += 1
            j = counts.index(max(counts))
            pivot = tuple(1 if i == j else 0 for i in range(len(ws)))
            added = _minimalize([pivot] + [g for g in gens if g[j] == 0])
            colon = _minimalize([tuple(max(a - p, 0) for a, p in zip(g, pivot)) for g in gens])
            res = rec(added, N).copy()
            res += [0] * (N + 1 - len(res))
            shifted = rec(colon, N - ws[j])
            for d, c in enumerate(shifted):
                res[d + ws[j]] += c
        cache[key] = res
        return res

    return list(rec(gens, N))


def staircase_census_enumerate(lt_monomials, weights, N):
    """Brute-force census by monomial enumeration (cross-check oracle)."""
    W = as_weights(weights)
    gens = _minimalize(tuple(g) for g in lt_monomials)
    out = []
    for d in range(N + 1):
        cnt = 0
        for m in monomials_of_wdeg(W.weights, d):
            if not any(mono_divides(g, m) for g in gens):
                cnt += 1
        out.append(cnt)
    return out


def monomial_ideal_is_zero_dim(lt_monomials, n):
    """True iff the monomial ideal contains a pure power of every variable."""
    have = [False] * n
    for g in lt_monomials:
        nz = [i for i, a in enumerate(g) if a]
        if len(nz) == 1:
            have[nz[0]] = True
    return all(have)


def staircase_degree_bound(lt_monomials, weights):
    """Upper bound on staircase degrees for a zero-dimensional monomial ideal."""
    W = as_weights(weights)
    n = len(W)
    cap = [None] * n
    for g in lt_monomials:
        nz = [i for i, a in enumerate(g) if a]
        if len(nz) == 1:
            i = nz[0]
            cap[i] = g[i] if cap[i] is None else min(cap[i], g[i])
    if any(c is None for c in cap):
        raise PositiveDimensionError("no pure power for some variable")
    return sum((c - 1) * w for c, w in zip(cap, W.weights))


def quotient_hilbert_series(gb, N=None):
    """Hilbert series of the quotient by the leading-term ideal of a basis.

    For zero-dimensional ideals the full polynomial is returned; otherwise
    a window up to N (which is then required).
    """
    ring = gb.ring
    W = ring.weights
    lts = [f.lm for f in gb.polys]
    if any(all(a == 0 for a in g) for g in lts):
        return HilbertSeries([], window=N or 0, polynomial=True)
    zero_dim = monomial_ideal_is_zero_dim(lts, ring.n) if lts else ring.n == 0
    if zero_dim:
        bound = staircase_degree_bound(lts, W)
        upto = bound if N is None else max(N, bound)
        coeffs = staircase_census(lts, W, upto)
        return HilbertSeries(coeffs, window=upto, polynomial=True)
    if N is None:
        raise PositiveDimensionError(
            "positive-dimensional quotient: a window N is required"
        )
    return HilbertSeries(staircase_census(lts, W, N), window=N, polynomial=False)


def ideal_degree(s):
    """Vector-space dimension of a zero-dimensional quotient: HS(1)."""
    if not s.polynomial:
        raise PositiveDimensionError("series is not a polynomial; degree undefined")
    return sum(s.coeffs)
