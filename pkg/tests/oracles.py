"""Independent reference computations for the tests.

Nothing here imports the solver modules: distances come from ``math.dist``
and optimality from plain subset enumeration.
"""
import itertools
import math


def independent(points, r, closed=False):
    for p, q in itertools.combinations(points, 2):
        d = math.dist(p, q)
        if (d <= 2 * r) if closed else (d < 2 * r):
            return False
    return True


def exhaustive_mis(points, r, closed=False):
    """Size and one maximum subset (as indices) by trying every subset, largest first."""
    n = len(points)
    for size in range(n, 0, -1):
        for combo in itertools.combinations(range(n), size):
            if independent([points[i] for i in combo], r, closed):
                return size, set(combo)
    return 0, set()


def adjacent_pairs(points, r):
    return {
        (i, j)
        for i, j in itertools.combinations(range(len(points)), 2)
        if math.dist(points[i], points[j]) < 2 * r
    }
