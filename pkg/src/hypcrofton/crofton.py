"""Invariant samplers, intersection predicates and Crofton estimators.

Hyperplanes of H^n_R are spacelike unit vectors u = (sinh p, cosh p * w)
with w on S^{n-1}; the invariant measure has density cosh^{n-1}(p) dp dw,
identified under (p, w) ~ (-p, -w).  Horospheres of H^n_F are forward null
vectors xi = r (1, w) modulo right unit-scalar phase, with radial density
r^{k(n+1)-3} dr (k = real dimension of F); the horosphere itself is the
level set {x : |<x, xi>| = 1} and |log r| is its distance from the base
point.  Both samplers are restricted to the carriers meeting a ball around
the base point, which contains every carrier that can meet the segment.

Estimators are deterministic given an integer master seed: samples are
drawn in fixed-size chunks with independently spawned substreams, so the
result does not depend on the worker count or schedule.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .algebra import FIELD_DIM, REAL, form_coeffs, qconj, qmul, qnorm
from .spaces import (
    GeodesicSegment,
    HPoint,
    base_point,
    geodesic_between,
    hyperbolic_distance,
    projective_distance,
    sphere_distance,
    translation_to_base,
)

BOUNDARY_TOL = 1e-12
RADIUS_MARGIN = 0.5
CHUNK_SIZE = 1 << 17


class SegmentInHyperplaneError(ValueError):
    """The whole segment lies inside the hyperplane (measure-zero event)."""


# -- elementary integrals ------------------------------------------------------

def sphere_area(m):
    """Surface area of the unit sphere S^m in R^{m+1}."""
    return 2.0 * math.pi ** ((m + 1) / 2.0) / math.gamma((m + 1) / 2.0)


def cosh_power_antiderivative(m, t):
    """Antiderivative of cosh^m at t (recurrence, exact for integer m >= 0)."""
    t = np.asarray(t, dtype=float)
    if m == 0:
        return t + 0.0
    if m == 1:
        return np.sinh(t)
    return (np.cosh(t) ** (m - 1) * np.sinh(t)
            + (m - 1) * cosh_power_antiderivative(m - 2, t)) / m


def cosh_power_integral(m, a, b):
    """Integral of cosh^m over [a, b]."""
    return float(cosh_power_antiderivative(m, b) - cosh_power_antiderivative(m, a))


def power_integral(e, a, b):
    """Integral of r^e over [a, b], a > 0 (logarithm when e = -1)."""
    if e == -1:
        return math.log(b / a)
    return (b ** (e + 1) - a ** (e + 1)) / (e + 1)


def _sample_depths(n, R, u):
    """Inverse-CDF samples of the density cosh^{n-1}(p) on [-R, R].

    Closed form for n = 2; vectorized bisection to 1e-12 otherwise.
    """
    if n == 2:
        return np.arcsinh(np.sinh(R) * (2.0 * u - 1.0))
    lo_val = cosh_power_antiderivative(n - 1, -R)
    total = cosh_power_antiderivative(n - 1, R) - lo_val
    target = lo_val + u * total
    lo = np.full_like(u, -R)
    hi = np.full_like(u, R)
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        below = cosh_power_antiderivative(n - 1, mid) < target
        lo = np.where(below, mid, lo)
        hi = np.where(below, hi, mid)
    return 0.5 * (lo + hi)


def _uniform_sphere(m, size, rng):
    """Uniform samples on S^{m-1} embedded in R^m, shape (size, m)."""
    v = rng.standard_normal((size, m))
    return v / np.linalg.norm(v, axis=1, keepdims=True)


# -- carriers ------------------------------------------------------------------

class Hyperplane:
    """Totally geodesic hypersurface of H^n_R: {x : <x, u> = 0}, <u, u> = 1."""

    __slots__ = ("u",)

    def __init__(self, u):
        u = np.asarray(u, dtype=float)
        q = -u[0] ** 2 + np.sum(u[1:] ** 2)
        if abs(q - 1.0) > 1e-8:
            raise ValueError("hyperplane normal must be a spacelike unit vector")
        u = u / np.sqrt(q)
        u.flags.writeable = False
        object.__setattr__(self, "u", u)

    def __setattr__(self, name, value):
        raise AttributeError("Hyperplane is immutable")


class OrientedHalfSpace:
    """Half-space {x : <x, u> > 0}; flipping u complements membership."""

    __slots__ = ("u",)

    def __init__(self, u):
        hp = Hyperplane(u)
        object.__setattr__(self, "u", hp.u)

    def __setattr__(self, name, value):
        raise AttributeError("OrientedHalfSpace is immutable")

    def flipped(self):
        return OrientedHalfSpace(-self.u)


class Horosphere:
    """Level set {x : |<x, xi>| = 1} of a forward null vector xi.

    The representative's phase is fixed so the leading component is a
    positive real; log|<x0, xi>| is the signed distance of the base point
    from the horosphere.
    """

    __slots__ = ("space", "xi")

    def __init__(self, space, xi_coeffs):
        xi = np.asarray(xi_coeffs, dtype=float)
        if xi.shape != (space.dim, 4):
            raise ValueError(f"expected coefficients of shape {(space.dim, 4)}")
        norm2 = float(np.sum(xi ** 2))
        if norm2 == 0.0:
            raise ValueError("null vector must be nonzero")
        q = form_coeffs(xi, xi)[0]
        if abs(q) > 1e-10 * norm2:
            raise ValueError("horosphere parameter must be a null vector")
        lead = qnorm(xi[0])
        if lead <= 0.0:
            raise ValueError("leading component must be nonzero")
        lam = qconj(xi[0]) / lead
        xi = qmul(xi, lam[None, :])
        xi.flags.writeable = False
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "xi", xi)

    def __setattr__(self, name, value):
        raise AttributeError("Horosphere is immutable")

    def level(self, x):
        """|<x, xi>| -- the horosphere is its level-1 set."""
        return float(qnorm(form_coeffs(x.coords, self.xi)))

    def busemann_distance(self):
        """Distance of the base point from the horosphere, |log r|."""
        return abs(math.log(float(qnorm(self.xi[0]))))


@dataclass(frozen=True)
class CroftonEstimate:
    """Monte Carlo estimate of a Crofton integral over a restricted carrier set."""

    d: float
    total_measure: float
    mean_count: float
    estimate: float
    stderr: float
    samples: int
    seed: int
    ratio: float
    boundary_count: int = 0
    count_histogram: dict = field(default_factory=dict)
    note: str = ""


# -- sampling ------------------------------------------------------------------

def sample_hyperplane(n, R, rng):
    """One hyperplane with distance |p| <= R from the base point."""
    u = _sample_hyperplane_normals(n, R, 1, rng)[0]
    return Hyperplane(u)


def _sample_hyperplane_normals(n, R, size, rng):
    p = _sample_depths(n, R, rng.random(size))
    omega = _uniform_sphere(n, size, rng)
    u = np.empty((size, n + 1))
    u[:, 0] = np.sinh(p)
    u[:, 1:] = np.cosh(p)[:, None] * omega
    return u


def hyperplane_restricted_measure(n, R):
    """Invariant measure of {hyperplanes at distance <= R from x0}.

    The (p, w) chart double-covers the hyperplane space, hence the halving.
    """
    return sphere_area(n - 1) * cosh_power_integral(n - 1, -R, R) / 2.0


def sample_horosphere(space, R, rng):
    """One horosphere whose distance from the base point is <= R."""
    xi = _sample_horosphere_params(space, R, 1, rng)[0]
    return Horosphere(space, xi)


def _sample_horosphere_params(space, R, size, rng):
    k = FIELD_DIM[space.field]
    n = space.n
    e = k * (n + 1) - 3
    lo, hi = math.exp(-R), math.exp(R)
    u = rng.random(size)
    if e == -1:
        r = lo * np.exp(u * math.log(hi / lo))
    else:
        r = (lo ** (e + 1) + u * (hi ** (e + 1) - lo ** (e + 1))) ** (1.0 / (e + 1))
    omega = _uniform_sphere(k * n, size, rng)
    xi = np.zeros((size, n + 1, 4))
    xi[:, 0, 0] = r
    xi[:, 1:, :k] = r[:, None, None] * omega.reshape(size, n, k)
    return xi


def horosphere_restricted_measure(space, R):
    """Invariant measure of {horospheres at distance <= R from x0}."""
    k = FIELD_DIM[space.field]
    e = k * (space.n + 1) - 3
    return sphere_area(k * space.n - 1) * power_integral(e, math.exp(-R), math.exp(R))


# -- intersection predicates ---------------------------------------------------

def _endpoint_evaluations(hp_u, seg):
    xr = seg.base[:, 0]
    yr = seg.endpoint_coords()[:, 0]
    fa = -xr[0] * hp_u[0] + xr[1:] @ hp_u[1:]
    fb = -yr[0] * hp_u[0] + yr[1:] @ hp_u[1:]
    scale = np.linalg.norm(hp_u)
    return fa, fb, BOUNDARY_TOL * scale * max(np.linalg.norm(xr), np.linalg.norm(yr))


def hyperplane_meets_segment(hp, seg):
    """True iff the hyperplane meets the segment (endpoint touching counts).

    A totally geodesic hyperplane meets a geodesic segment at most once, so
    the test reduces to a sign change of <., u> between the endpoints.
    Raises SegmentInHyperplaneError when both endpoints lie on the
    hyperplane (the segment is contained; a measure-zero configuration).
    """
    if seg.space.field != REAL:
        raise ValueError("hyperplanes are defined over the real field only")
    fa, fb, tol = _endpoint_evaluations(hp.u, seg)
    a_on, b_on = abs(fa) <= tol, abs(fb) <= tol
    if a_on and b_on:
        raise SegmentInHyperplaneError("segment lies inside the hyperplane")
    if a_on or b_on:
        return True
    return bool(fa * fb < 0)


def halfspace_side(u, x):
    """+1 if x is in {<x, u> > 0}, -1 in the complement, 0 on the boundary.

    The representative sign of x is fixed by a positive leading coordinate.
    """
    u = np.asarray(u, dtype=float)
    xr = x.coords[:, 0] if isinstance(x, HPoint) else np.asarray(x, dtype=float)
    if xr[0] < 0:
        xr = -xr
    v = -xr[0] * u[0] + xr[1:] @ u[1:]
    tol = BOUNDARY_TOL * np.linalg.norm(u) * np.linalg.norm(xr)
    if abs(v) <= tol:
        return 0
    return 1 if v > 0 else -1


def halfspace_contains(half, x):
    """Strict membership; boundary points are reported as not contained."""
    return halfspace_side(half.u, x) > 0


def count_cosh_roots(alpha, beta, gamma, interval):
    """Roots of alpha*cosh t + beta*sinh t = gamma in a closed interval.

    Returns (count, roots) with count in {0, 1, 2}; tangency (double root)
    is counted once.  Raises on the degenerate (alpha, beta) = (0, 0).
    """
    s0, s1 = interval
    if alpha == 0.0 and beta == 0.0:
        raise ValueError("degenerate equation: alpha = beta = 0")
    tol = 1e-12 * max(abs(alpha), abs(beta))
    roots = []
    if abs(abs(alpha) - abs(beta)) <= tol:
        # pure exponential: alpha e^{+-t}
        sign = 1.0 if beta * alpha >= 0 else -1.0
        ratio = gamma / alpha
        if ratio > 0:
            roots = [sign * math.log(ratio)]
    elif abs(alpha) > abs(beta):
        r = math.sqrt(alpha * alpha - beta * beta)
        phi = math.atanh(beta / alpha)
        c = gamma / (math.copysign(r, alpha))
        if abs(c - 1.0) <= 1e-14 * max(abs(c), 1.0):
            roots = [-phi]
        elif c > 1.0:
            h = math.acosh(c)
            roots = [-phi - h, -phi + h]
    else:
        r = math.sqrt(beta * beta - alpha * alpha)
        phi = math.atanh(alpha / beta)
        roots = [math.asinh(gamma / math.copysign(r, beta)) - phi]
    etol = 1e-12 * max(abs(s0), abs(s1), 1.0)
    inside = [t for t in roots if s0 - etol <= t <= s1 + etol]
    return len(inside), inside


def _count_cosh_roots_arr(alpha, beta, gamma, s0, s1):
    """Vectorized root count of alpha cosh t + beta sinh t = gamma on [s0, s1].

    Only handles |alpha| >= |beta| (always true for horosphere counts, where
    alpha >= |beta| by Cauchy-Schwarz); the |alpha| = |beta| boundary is a
    measure-zero event handled by the exponential branch.
    """
    counts = np.zeros(alpha.shape, dtype=np.int64)
    etol = 1e-12 * max(abs(s0), abs(s1), 1.0)

    strict = np.abs(alpha) - np.abs(beta) > 1e-14 * np.abs(alpha)
    if np.any(strict):
        a, b, g = alpha[strict], beta[strict], gamma[strict]
        r = np.sqrt(a * a - b * b)
        phi = np.arctanh(b / a)
        c = g / (np.copysign(r, a))
        has = c >= 1.0
        h = np.where(has, np.arccosh(np.maximum(c, 1.0)), 0.0)
        t1 = -phi - h
        t2 = -phi + h
        sub = (has & (t1 >= s0 - etol) & (t1 <= s1 + etol)).astype(np.int64)
        two = has & (h > 0) & (t2 >= s0 - etol) & (t2 <= s1 + etol)
        sub += two.astype(np.int64)
        counts[strict] = sub

    degen = ~strict
    if np.any(degen):
        a, b, g = alpha[degen], beta[degen], gamma[degen]
        sign = np.where(a * b >= 0, 1.0, -1.0)
        ratio = g / a
        ok = ratio > 0
        t = np.where(ok, sign * np.log(np.where(ok, ratio, 1.0)), np.inf)
        counts[degen] = (ok & (t >= s0 - etol) & (t <= s1 + etol)).astype(np.int64)
    return counts


def count_horosphere_intersections(h, seg):
    """Number of times the horosphere meets the segment, in {0, 1, 2}.

    With a = <x, xi> and b = <w, xi> along p(s) = x cosh s + w sinh s, the
    level condition |<p(s), xi>|^2 = 1 becomes
    alpha cosh 2s + beta sinh 2s = 1 - gamma on [0, 2L].
    """
    if h.space != seg.space:
        raise ValueError("horosphere and segment live in different spaces")
    a = form_coeffs(seg.base, h.xi)
    b = form_coeffs(seg.tangent, h.xi)
    na2 = float(np.sum(a ** 2))
    nb2 = float(np.sum(b ** 2))
    if na2 == 0.0 and nb2 == 0.0:
        raise ArithmeticError("degenerate pairing; invalid horosphere or segment")
    alpha = 0.5 * (na2 + nb2)
    beta = float(a @ b)
    gamma = 0.5 * (na2 - nb2)
    count, _ = count_cosh_roots(alpha, beta, 1.0 - gamma, (0.0, 2.0 * seg.length))
    return count


# -- chunked Monte Carlo driver -------------------------------------------------

def _resolve_seed(seed):
    if isinstance(seed, np.random.Generator):
        return int(seed.integers(0, 2 ** 63 - 1))
    return int(seed)


def _run_chunks(chunk_fn, samples, seed, workers=1):
    """Run chunk_fn(rng, size) over fixed-size chunks with spawned substreams.

    chunk_fn returns a tuple of per-chunk scalar accumulators; the sums are
    independent of worker count and scheduling because chunk boundaries and
    seeds are fixed by (seed, chunk index).
    """
    sizes = [CHUNK_SIZE] * (samples // CHUNK_SIZE)
    if samples % CHUNK_SIZE:
        sizes.append(samples % CHUNK_SIZE)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))

    def run(i):
        return chunk_fn(np.random.default_rng(seeds[i]), sizes[i])

    if workers > 1 and len(sizes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, range(len(sizes))))
    else:
        results = [run(i) for i in range(len(sizes))]
    return [sum(parts) for parts in zip(*results)]


def _zero_estimate(seed, samples):
    return CroftonEstimate(d=0.0, total_measure=0.0, mean_count=0.0,
                           estimate=0.0, stderr=0.0, samples=samples,
                           seed=seed, ratio=float("nan"),
                           note="coincident points")


def _restriction_radius(x, y, margin):
    x0 = base_point(x.space)
    return max(hyperbolic_distance(x0, x), hyperbolic_distance(x0, y)) + margin


def _binomial_estimate(d, M, hits, boundary, samples, seed, note=""):
    phat = hits / samples
    est = M * phat
    stderr = M * math.sqrt(max(phat * (1.0 - phat), 0.0) / samples)
    return CroftonEstimate(d=d, total_measure=M, mean_count=phat,
                           estimate=est, stderr=stderr, samples=samples,
                           seed=seed, ratio=est / d if d > 0 else float("nan"),
                           boundary_count=boundary, note=note)


# -- estimators ----------------------------------------------------------------

def estimate_m(x, y, samples, seed=0, workers=1, margin=RADIUS_MARGIN):
    """Measure of hyperplanes meeting [xy], restricted to a covering ball.

    Every hyperplane meeting the segment is at distance <= max distance of
    the endpoints from the base point, so the restriction is exact up to
    the margin; the estimate divided by d(x, y) is the Crofton constant in
    this normalization.
    """
    if x.space.field != REAL:
        raise ValueError("hyperplane Crofton estimates require the real field")
    seed = _resolve_seed(seed)
    d = hyperbolic_distance(x, y)
    if d < 1e-12:
        return _zero_estimate(seed, samples)
    n = x.space.n
    R = _restriction_radius(x, y, margin)
    M = hyperplane_restricted_measure(n, R)
    seg = geodesic_between(x, y)
    xr = seg.base[:, 0]
    yr = seg.endpoint_coords()[:, 0]

    def chunk(rng, size):
        u = _sample_hyperplane_normals(n, R, size, rng)
        fa = -xr[0] * u[:, 0] + u[:, 1:] @ xr[1:]
        fb = -yr[0] * u[:, 0] + u[:, 1:] @ yr[1:]
        tol = BOUNDARY_TOL * np.linalg.norm(u, axis=1) \
            * max(np.linalg.norm(xr), np.linalg.norm(yr))
        a_on = np.abs(fa) <= tol
        b_on = np.abs(fb) <= tol
        contained = a_on & b_on
        touch = (a_on ^ b_on)
        cross = (fa * fb < 0) & ~a_on & ~b_on
        hits = int(np.sum((cross | touch) & ~contained))
        return hits, int(np.sum(a_on | b_on))

    hits, boundary = _run_chunks(chunk, samples, seed, workers)
    return _binomial_estimate(d, M, hits, boundary, samples, seed)


def estimate_symmetric_difference(x, y, samples, seed=0, workers=1,
                                  margin=RADIUS_MARGIN):
    """Measure of half-spaces containing exactly one of x, y.

    Uses the same hyperplane sampler (each normal u defines the half-space
    {<., u> > 0}); per sample, the sign predicates at x and y disagree
    exactly when the boundary hyperplane crosses the segment.
    """
    if x.space.field != REAL:
        raise ValueError("half-space estimates require the real field")
    seed = _resolve_seed(seed)
    d = hyperbolic_distance(x, y)
    if d < 1e-12:
        return _zero_estimate(seed, samples)
    n = x.space.n
    R = _restriction_radius(x, y, margin)
    # the half-space measure is normalized so that the double cover carries
    # the hyperplane measure; the two estimators then agree sample-for-sample
    M = hyperplane_restricted_measure(n, R)
    xr = np.where(x.coords[0, 0] < 0, -x.coords[:, 0], x.coords[:, 0])
    yr = np.where(y.coords[0, 0] < 0, -y.coords[:, 0], y.coords[:, 0])

    def chunk(rng, size):
        u = _sample_hyperplane_normals(n, R, size, rng)
        fa = -xr[0] * u[:, 0] + u[:, 1:] @ xr[1:]
        fb = -yr[0] * u[:, 0] + u[:, 1:] @ yr[1:]
        tol = BOUNDARY_TOL * np.linalg.norm(u, axis=1) \
            * max(np.linalg.norm(xr), np.linalg.norm(yr))
        on = (np.abs(fa) <= tol) | (np.abs(fb) <= tol)
        differ = (np.sign(fa) != np.sign(fb)) & ~on
        return int(np.sum(differ)), int(np.sum(on))

    hits, boundary = _run_chunks(chunk, samples, seed, workers)
    return _binomial_estimate(d, M, hits, boundary, samples, seed)


def _horosphere_quadratic_data(point_coords, tangent_coords, xi):
    """Per-sample (alpha, beta, gamma) for the level-set crossing equation."""
    a = qmul(qconj(point_coords)[None, :, :], xi)
    a = a[:, 1:, :].sum(axis=1) - a[:, 0, :]
    b = qmul(qconj(tangent_coords)[None, :, :], xi)
    b = b[:, 1:, :].sum(axis=1) - b[:, 0, :]
    na2 = np.sum(a ** 2, axis=1)
    nb2 = np.sum(b ** 2, axis=1)
    alpha = 0.5 * (na2 + nb2)
    beta = np.sum(a * b, axis=1)
    gamma = 0.5 * (na2 - nb2)
    return alpha, beta, gamma


def estimate_horosphere_crofton(x, y, samples, seed=0, workers=1,
                                margin=RADIUS_MARGIN):
    """Integral of the horosphere crossing count over [xy], ball-restricted.

    Valid over R, C and H; the mean crossing count times the restricted
    total measure estimates a constant multiple of d(x, y).  The segment is
    first translated so its midpoint sits at the base point: the measure is
    invariant, so the expectation is unchanged, while the restriction ball
    shrinks to half the segment length plus the margin.  This keeps the hit
    rate independent of where the pair sits (the radial density grows like
    r^{k(n+1)-3}, so an off-center restriction ball wastes most samples on
    far horospheres that cannot meet the segment).
    """
    seed = _resolve_seed(seed)
    d = hyperbolic_distance(x, y)
    if d < 1e-12:
        return _zero_estimate(seed, samples)
    space = x.space
    raw = geodesic_between(x, y)
    g = translation_to_base(raw.point(0.5 * d))
    seg = GeodesicSegment(space, g.apply_coords(raw.base),
                          g.apply_coords(raw.tangent), d)
    R = 0.5 * d + margin
    M = horosphere_restricted_measure(space, R)
    s1 = 2.0 * seg.length

    def chunk(rng, size):
        xi = _sample_horosphere_params(space, R, size, rng)
        alpha, beta, gamma = _horosphere_quadratic_data(seg.base, seg.tangent, xi)
        counts = _count_cosh_roots_arr(alpha, beta, 1.0 - gamma, 0.0, s1)
        hist = np.bincount(counts, minlength=3)
        return int(counts.sum()), int(np.sum(counts ** 2)), hist

    total, total_sq, hist = _run_chunks(chunk, samples, seed, workers)
    mean = total / samples
    var = max(total_sq / samples - mean ** 2, 0.0)
    est = M * mean
    stderr = M * math.sqrt(var / samples)
    histogram = {int(c): int(v) for c, v in enumerate(hist) if v > 0}
    return CroftonEstimate(d=d, total_measure=M, mean_count=mean,
                           estimate=est, stderr=stderr, samples=samples,
                           seed=seed, ratio=est / d,
                           count_histogram=histogram)


def projective_crofton_estimate(x, y, samples, seed=0, workers=1):
    """Fraction of hypersurfaces u-perp meeting the short segment in P^n_R.

    Representatives are aligned so (x, y) >= 0; the hypersurface of a
    uniform u on S^n meets the segment iff the sign of (., u) changes.
    With the sampling measure normalized to 1 the expected fraction is
    d(x, y) / pi.  No half-space decomposition exists here: a hypersurface
    does not separate projective space, so only the meet predicate is
    exposed.
    """
    seed = _resolve_seed(seed)
    d = projective_distance(x, y)
    if d < 1e-12:
        return _zero_estimate(seed, samples)
    xr = x.coords
    yr = y.coords if xr @ y.coords >= 0 else -y.coords
    note = ""
    if abs(xr @ yr) <= 1e-12:
        note = ("pair at distance pi/2: representative alignment fixed by "
                "first-nonzero-coordinate convention")
        if yr[np.nonzero(yr)[0][0]] < 0:
            yr = -yr

    def chunk(rng, size):
        u = _uniform_sphere(x.n + 1, size, rng)
        return (int(np.sum((u @ xr) * (u @ yr) < 0)),)

    (hits,) = _run_chunks(chunk, samples, seed, workers)
    return _binomial_estimate(d, 1.0, hits, 0, samples, seed, note=note)


def sphere_halfspace_crofton(x, y, samples, seed=0, workers=1):
    """Fraction of half-spaces of S^n containing exactly one of x, y.

    u is uniform on S^n; the half-spaces are the hemispheres {u . z > 0}.
    Expected fraction is d(x, y) / pi; this is also ||chi_x - chi_y||^2 for
    the hemisphere indicator feature map.
    """
    seed = _resolve_seed(seed)
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x = x / np.linalg.norm(x)
    y = y / np.linalg.norm(y)
    d = sphere_distance(x, y)
    if d < 1e-12:
        return _zero_estimate(seed, samples)
    note = ""
    if d > math.pi - 1e-12:
        note = "antipodal pair: geodesic non-unique, fraction is maximal"

    def chunk(rng, size):
        u = _uniform_sphere(x.shape[0], size, rng)
        return (int(np.sum((u @ x) * (u @ y) < 0)),)

    (hits,) = _run_chunks(chunk, samples, seed, workers)
    return _binomial_estimate(d, 1.0, hits, 0, samples, seed, note=note)
