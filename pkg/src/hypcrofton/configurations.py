"""Explicit point configurations that violate the negative-type condition."""

from __future__ import annotations

import numpy as np

from .algebra import QUATERNION, HermitianSpace, Quaternion
from .kernels import build_distance_matrix
from .spaces import HPoint, PPoint

#: coefficients certifying both violations: +1 on the first group, -1 on the second
SPLIT_COEFFICIENTS = np.array([1, 1, 1, -1, -1, -1], dtype=float)


def projective_six_points():
    """Six points of P^2_R whose distance matrix is not of negative type.

    Two groups of three; within-group distances are all pi/2, cross
    distances follow a pi/3 / pi/4 / pi/2 pattern, and the split
    coefficients (1,1,1,-1,-1,-1) give a positive quadratic form.
    """
    return [
        PPoint([1, 0, 1]), PPoint([1, 0, -1]), PPoint([0, 1, 0]),
        PPoint([0, 1, 1]), PPoint([0, 1, -1]), PPoint([1, 0, 0]),
    ]


def quaternionic_cluster_points():
    """24 points of H^2_H violating the negative-type condition.

    Two clusters of twelve: (3, 2s + 2e, 0) and (3, 0, 2s + 2e) for
    s in {+1, -1} and e ranging over the six unit imaginary quaternions.
    With +1 on the first cluster and -1 on the second, the within-cluster
    distance sums exceed the cross-cluster sum.
    """
    space = HermitianSpace(QUATERNION, 2)
    units = [Quaternion(0, 1, 0, 0), Quaternion(0, -1, 0, 0),
             Quaternion(0, 0, 1, 0), Quaternion(0, 0, -1, 0),
             Quaternion(0, 0, 0, 1), Quaternion(0, 0, 0, -1)]
    zero = Quaternion()
    xs, ys = [], []
    for s in (1.0, -1.0):
        for e in units:
            middle = Quaternion(2 * s) + e * 2
            xs.append(HPoint(space, [Quaternion(3.0), middle, zero]))
            ys.append(HPoint(space, [Quaternion(3.0), zero, middle]))
    return xs + ys


def cluster_sums(points, split=12):
    """(within_sum, cross_sum) for a two-cluster configuration.

    Within-cluster distances are summed over unordered pairs of each
    cluster; cross distances over all ordered (i in first, j in second)
    pairs.  The negative-type condition fails iff within > cross.
    """
    D = build_distance_matrix(points)
    m = D.shape[0]
    first = np.arange(split)
    second = np.arange(split, m)
    iu = np.triu_indices(split, k=1)
    within = D[np.ix_(first, first)][iu].sum() + D[np.ix_(second, second)][
        np.triu_indices(m - split, k=1)].sum()
    cross = D[np.ix_(first, second)].sum()
    return float(within), float(cross)
