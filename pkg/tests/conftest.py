"""Shared fixtures: the two worked octagon examples and the hexagon case."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

import pytest

from foldmatch import geometry as geo
from foldmatch.polynomials import Polynomial


@pytest.fixture(scope="session")
def tbar_a():
    """Triangulated hexagon with a diagonal crossing all three arcs."""
    return geo.plain_triangulation(geo.restricted_polygon(3), [(3, 5), (0, 3), (0, 2)])


@pytest.fixture(scope="session")
def fix_b():
    """Octagon instance whose published expansion has eight terms."""
    t = geo.theta_invariant_triangulation(
        3, [(2, 4), (1, 4), (0, 4), (5, 0), (6, 0)], (4, 0))
    orbit = frozenset([(2, 7), (3, 6)])
    f = Polynomial(3, {
        (0, 0, 0): 1, (0, 0, 1): 2, (0, 0, 2): 1, (0, 1, 1): 2,
        (0, 1, 2): 2, (1, 1, 2): 1, (0, 2, 2): 1, (1, 2, 2): 1,
    })
    return t, orbit, f, (1, 0, -2)


@pytest.fixture(scope="session")
def fix_c():
    """Octagon instance for the other folded type, four-term expansion."""
    t = geo.theta_invariant_triangulation(
        3, [(0, 2), (2, 4), (0, 4), (6, 0), (4, 6)], (4, 0))
    orbit = frozenset([(3, 5), (1, 7)])
    f = Polynomial(3, {(0, 0, 0): 1, (1, 0, 0): 1, (1, 0, 1): 1, (1, 1, 1): 1})
    return t, orbit, f, (-1, 0, 0)


@pytest.fixture(scope="session")
def fix_a_poly():
    return Polynomial(3, {
        (0, 0, 0): 1, (1, 0, 0): 1, (0, 0, 1): 1, (1, 0, 1): 1, (1, 1, 1): 1,
    })
