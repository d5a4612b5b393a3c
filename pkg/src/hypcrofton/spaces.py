"""Points, geodesics, distances and isometries in linear-model coordinates.

Hyperbolic points are projective classes of negative vectors of the
signature-(1,n) form, stored as normalized representatives with
<x, x> = -1.  The representative's unit-scalar phase is deliberately not
canonicalized; every public operation is phase invariant.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import (
    FIELD_DIM,
    REAL,
    DimensionMismatchError,
    HermitianSpace,
    form_coeffs,
    from_coeffs,
    qconj,
    qmul,
    qnorm,
    to_coeffs,
)

NORMALIZATION_TOL = 1e-10


class DegenerateSegmentError(ValueError):
    """Geodesic requested between projectively equal points."""


def _rmul(coords, lam):
    """Right-multiply every coordinate of an (m, 4) vector by the scalar lam."""
    return qmul(coords, np.asarray(lam, dtype=float)[None, :])


class HPoint:
    """A point of H^n_F: normalized representative with <x, x> = -1."""

    __slots__ = ("space", "coords")

    def __init__(self, space, coords):
        coords = to_coeffs(coords, space.field)
        if coords.shape[0] != space.dim:
            raise DimensionMismatchError(
                f"expected {space.dim} coordinates, got {coords.shape[0]}")
        q = form_coeffs(coords, coords)[0]
        if q >= -1e-14 * float(np.sum(coords**2)):
            raise ValueError("not a negative vector of the form")
        coords = coords / np.sqrt(-q)
        coords.flags.writeable = False
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("HPoint is immutable")

    def phase_shifted(self, lam):
        """The same projective point represented by x * lam, |lam| = 1."""
        return HPoint(self.space, _rmul(self.coords, lam))

    def form_with(self, other):
        _check_same_space(self, other)
        return from_coeffs(form_coeffs(self.coords, other.coords),
                           self.space.field)

    def __repr__(self):
        return f"HPoint({self.space.field!r}, n={self.space.n})"


class PPoint:
    """A point of P^n_R: unit representative, defined up to sign."""

    __slots__ = ("n", "coords")

    def __init__(self, coords):
        coords = np.asarray(coords, dtype=float)
        if coords.ndim != 1 or coords.shape[0] < 2:
            raise ValueError("expected a real vector of length >= 2")
        norm = np.linalg.norm(coords)
        if norm == 0.0:
            raise ValueError("zero vector does not define a projective point")
        coords = coords / norm
        coords.flags.writeable = False
        object.__setattr__(self, "n", coords.shape[0] - 1)
        object.__setattr__(self, "coords", coords)

    def __setattr__(self, name, value):
        raise AttributeError("PPoint is immutable")

    def __repr__(self):
        return f"PPoint({np.round(self.coords, 6).tolist()})"


def base_point(space):
    """The origin x0 = (1, 0, ..., 0)."""
    c = np.zeros((space.dim, 4))
    c[0, 0] = 1.0
    return HPoint(space, c)


def _check_same_space(x, y):
    if x.space != y.space:
        raise DimensionMismatchError(
            f"points live in different spaces: {x.space} vs {y.space}")


def hyperbolic_distance(x, y):
    """Geodesic distance: cosh d = |<x, y>| for normalized representatives."""
    _check_same_space(x, y)
    mod = float(qnorm(form_coeffs(x.coords, y.coords)))
    if mod < 1.0 - 1e-9:
        raise ArithmeticError(
            f"|<x, y>| = {mod} < 1 for negative vectors; inconsistent state")
    return float(np.arccosh(max(mod, 1.0)))


def projective_distance(x, y):
    """Geodesic distance on P^n_R: cos d = |(x, y)|, in [0, pi/2]."""
    if x.n != y.n:
        raise DimensionMismatchError("projective points of different dimension")
    inner = float(x.coords @ y.coords)
    # arctan2 form is stable near coincident and orthogonal representatives
    perp = y.coords - x.coords * inner
    return float(np.arctan2(np.linalg.norm(perp), abs(inner)))


def sphere_distance(x, y):
    """Geodesic distance on the unit sphere: arccos(x . y), in [0, pi]."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    x = x / np.linalg.norm(x)
    y = y / np.linalg.norm(y)
    return float(np.arccos(np.clip(x @ y, -1.0, 1.0)))


def jordan_trace_distance(x, y):
    """Trace-form distance between the rank-one projections of x and y.

    Equals sqrt(2 - 2 cos^2 t) where cos t is the normalized |(x, y)|.
    """
    if x.n != y.n:
        raise DimensionMismatchError("projective points of different dimension")
    c = abs(float(x.coords @ y.coords))
    c = min(c, 1.0)
    return float(np.sqrt(max(2.0 - 2.0 * c * c, 0.0)))


@dataclass(frozen=True)
class GeodesicSegment:
    """Unit-speed geodesic s -> x cosh s + w sinh s, restricted to [0, length].

    base and tangent are (n+1, 4) coefficient arrays with <x, w> = 0 and
    <w, w> = 1, so <point(s), point(s)> = -1 for all s.
    """

    space: HermitianSpace
    base: np.ndarray
    tangent: np.ndarray
    length: float

    def point_coords(self, s):
        return self.base * np.cosh(s) + self.tangent * np.sinh(s)

    def point(self, s):
        return HPoint(self.space, self.point_coords(s))

    def endpoint_coords(self):
        return self.point_coords(self.length)


def geodesic_between(x, y):
    """The unit-speed segment from x to y.

    The representative of y is phase-aligned (right multiplication by the
    unit scalar lam = -conj(<x,y>)/|<x,y>|) so that <x, y_hat> is real and
    negative, which makes the real-span construction valid over all fields.
    """
    _check_same_space(x, y)
    f = form_coeffs(x.coords, y.coords)
    mod = float(qnorm(f))
    d = float(np.arccosh(max(mod, 1.0)))
    if d < 1e-12:
        raise DegenerateSegmentError("endpoints are projectively equal")
    lam = -qconj(f) / mod
    yhat = _rmul(y.coords, lam)
    w = (yhat - x.coords * np.cosh(d)) / np.sinh(d)
    return GeodesicSegment(x.space, x.coords, w, d)


def geodesic_point(seg, s):
    """The point at arclength s along the full geodesic through seg."""
    return seg.point(s)


def random_point(space, radius, rng):
    """A point at geodesic distance <= radius from the base point.

    Distribution: uniform tangent direction at x0 times uniform radius on
    [0, radius] (not uniform in hyperbolic volume).
    """
    if radius < 0:
        raise ValueError("radius must be nonnegative")
    if radius == 0:
        return base_point(space)
    k = FIELD_DIM[space.field]
    v = np.zeros((space.n, 4))
    v[:, :k] = rng.standard_normal((space.n, k))
    norm = np.sqrt(np.sum(v**2))
    if norm < 1e-12:
        return random_point(space, radius, rng)
    w = np.zeros((space.dim, 4))
    w[1:] = v / norm
    s = rng.uniform(0.0, radius)
    x0 = base_point(space).coords
    return HPoint(space, x0 * np.cosh(s) + w * np.sinh(s))


class Isometry:
    """Linear map of F^{n+1} preserving the hermitian form.

    The matrix is stored as an (n+1, n+1, 4) coefficient array; it acts on
    the left of coordinate columns, (g z)_i = sum_j g_ij z_j, compatible
    with the right-module structure.
    """

    __slots__ = ("space", "matrix")

    def __init__(self, space, matrix):
        matrix = np.asarray(matrix, dtype=float)
        if matrix.shape != (space.dim, space.dim, 4):
            raise DimensionMismatchError(
                f"expected matrix of shape {(space.dim, space.dim, 4)}")
        k = FIELD_DIM[space.field]
        if np.any(np.abs(matrix[..., k:]) > 0):
            raise ValueError(f"matrix entries outside field {space.field!r}")
        matrix = matrix.copy()
        matrix.flags.writeable = False
        object.__setattr__(self, "space", space)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, name, value):
        raise AttributeError("Isometry is immutable")

    def apply_coords(self, coords):
        return qmul(self.matrix, coords[None, :, :]).sum(axis=1)

    def apply(self, x):
        _check_same_space(self, x)
        return HPoint(self.space, self.apply_coords(x.coords))

    def __matmul__(self, x):
        return self.apply(x)

    @classmethod
    def identity(cls, space):
        m = np.zeros((space.dim, space.dim, 4))
        for i in range(space.dim):
            m[i, i, 0] = 1.0
        return cls(space, m)


def _form_gram_schmidt(space, columns):
    """Orthonormalize columns against the form; returns None on degeneracy.

    Column 0 is normalized to <c, c> = -1, the rest to +1, with earlier
    columns projected out (right-module projections, coefficients applied
    on the right).
    """
    d = space.dim
    cols = [np.array(columns[:, j, :]) for j in range(d)]
    signs = [-1.0] + [1.0] * (d - 1)
    for j in range(d):
        c = cols[j]
        for i in range(j):
            lam = form_coeffs(cols[i], c) / signs[i]
            c = c - _rmul(cols[i], lam)
        q = form_coeffs(c, c)[0]
        if signs[j] * q < 1e-6:
            return None
        cols[j] = c / np.sqrt(abs(q))
    return np.stack(cols, axis=1)


def _form_inverse(space, matrix):
    """Inverse of a form-preserving matrix: conjugate-transpose with signs."""
    d = space.dim
    signs = np.ones(d)
    signs[0] = -1.0
    out = qconj(np.swapaxes(matrix, 0, 1))
    return out * (signs[:, None] * signs[None, :])[:, :, None]


def translation_to_base(x, max_retries=20):
    """An isometry carrying the point x to the base point x0.

    Built as the form-inverse of a form-orthonormal frame whose first
    column is x; deterministic for a given x.
    """
    space = x.space
    d = space.dim
    k = FIELD_DIM[space.field]
    for attempt in range(max_retries):
        m = np.zeros((d, d, 4))
        m[:, 0, :] = x.coords
        for j in range(1, d):
            m[j, j, 0] = 1.0
        if attempt:
            noise = np.random.default_rng(attempt).standard_normal((d, d - 1, k))
            m[:, 1:, :k] += 1e-3 * attempt * noise
        frame = _form_gram_schmidt(space, m)
        if frame is not None:
            return Isometry(space, _form_inverse(space, frame))
    raise RuntimeError("failed to build a frame through the point")


def random_isometry(space, rng, scale=0.4, max_retries=20):
    """A random form-preserving matrix mixing boost and rotation parts.

    Built by form-orthonormalizing identity + scale * gaussian noise in the
    field's coefficient slots; scale = 0 returns the identity.
    """
    if scale == 0:
        return Isometry.identity(space)
    k = FIELD_DIM[space.field]
    d = space.dim
    for _ in range(max_retries):
        m = np.zeros((d, d, 4))
        for i in range(d):
            m[i, i, 0] = 1.0
        m[..., :k] += scale * rng.standard_normal((d, d, k))
        ortho = _form_gram_schmidt(space, m)
        if ortho is not None:
            return Isometry(space, ortho)
    raise RuntimeError("failed to orthonormalize a random perturbation")
