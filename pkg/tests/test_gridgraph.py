import numpy as np
import pytest

from conftest import orbit_by_structure
from curvecone import (
    GridOracle,
    apex,
    brute_force_distance,
    cone_point,
    distance,
    orthant_distance,
)


@pytest.fixture(scope="module")
def oracle(s12):
    return GridOracle(s12, mesh=0.25, box=8.0)


def test_same_orbit_aligned_is_exact(s12, oracle):
    sn = orbit_by_structure(s12, [(0, 0), (0, 2)], [(0, 0), (0, 1)])
    x, y = (4.0, 1.0), (2.0, 3.0)
    p = cone_point(s12, sn.id, x)
    q = cone_point(s12, sn.id, y)
    assert oracle.distance(p, q) == orthant_distance(sn, x, y) == 1.0


def test_apex_ray_is_exact(s12, oracle):
    nn = orbit_by_structure(s12, [(0, 1), (0, 1)], [(0, 1), (0, 1)])
    q = cone_point(s12, nn.id, (2.0, 6.0))
    assert oracle.distance(apex(s12), q) == 3.0


def test_cross_orbit_agreement(s12, oracle):
    rng = np.random.default_rng(2)
    sn = orbit_by_structure(s12, [(0, 0), (0, 2)], [(0, 0), (0, 1)])
    nn = orbit_by_structure(s12, [(0, 1), (0, 1)], [(0, 1), (0, 1)])
    for _ in range(12):
        p = cone_point(s12, sn.id, 0.25 * rng.integers(1, 33, size=2))
        q = cone_point(s12, nn.id, 0.25 * rng.integers(1, 33, size=2))
        d = distance(p, q).distance
        bf = oracle.distance(p, q)
        assert bf >= d - 1e-9
        assert bf - d <= 2 * 0.25


def test_worked_cross_orbit_instance(s12, oracle):
    sn = orbit_by_structure(s12, [(0, 0), (0, 2)], [(0, 0), (0, 1)])
    nn = orbit_by_structure(s12, [(0, 1), (0, 1)], [(0, 1), (0, 1)])
    p = cone_point(s12, sn.id, (0.0, 4.0))
    q = cone_point(s12, nn.id, (2.0, 2.0))
    assert oracle.distance(p, q) == pytest.approx(3.0)


def test_identified_points_at_zero_distance(s12, oracle):
    nn = orbit_by_structure(s12, [(0, 1), (0, 1)], [(0, 1), (0, 1)])
    p = cone_point(s12, nn.id, (1.0, 3.0))
    q = cone_point(s12, nn.id, (3.0, 1.0))
    assert oracle.distance(p, q) == 0.0


def test_misaligned_coordinates_rejected(s12, oracle):
    nn = orbit_by_structure(s12, [(0, 1), (0, 1)], [(0, 1), (0, 1)])
    p = cone_point(s12, nn.id, (1.01, 3.0))
    with pytest.raises(ValueError, match="aligned"):
        oracle.distance(p, cone_point(s12, nn.id, (1.0, 1.0)))


def test_box_too_small_rejected(s12):
    nn = orbit_by_structure(s12, [(0, 1), (0, 1)], [(0, 1), (0, 1)])
    p = cone_point(s12, nn.id, (1.0, 9.0))
    q = cone_point(s12, nn.id, (1.0, 1.0))
    with pytest.raises(ValueError):
        brute_force_distance(p, q, mesh=0.5, box=4.0)


def test_one_shot_wrapper_defaults(s12):
    nn = orbit_by_structure(s12, [(0, 1), (0, 1)], [(0, 1), (0, 1)])
    p = cone_point(s12, nn.id, (1.0, 2.0))
    q = cone_point(s12, nn.id, (2.0, 4.0))
    assert brute_force_distance(p, q, mesh=0.5) == pytest.approx(1.0)


def test_three_dimensional_orbits(s2):
    oracle = GridOracle(s2, mesh=0.5, box=4.0)
    theta, dumbbell = sorted(s2.maximal_ids)
    rng = np.random.default_rng(4)
    for _ in range(4):
        p = cone_point(s2, theta, 0.5 * rng.integers(1, 9, size=3))
        q = cone_point(s2, dumbbell, 0.5 * rng.integers(1, 9, size=3))
        d = distance(p, q).distance
        bf = oracle.distance(p, q)
        assert bf >= d - 1e-9
        assert bf - d <= 2 * 0.5


def test_richer_complex_with_three_top_orbits():
    # Galleries over more than two top orbits, checked against the grid.
    from curvecone import Surface, build_complex

    cx = build_complex(Surface(1, 3))
    assert len(cx.maximal_ids) == 3
    oracle = GridOracle(cx, mesh=0.5, box=4.0)
    rng = np.random.default_rng(6)
    ids = [o.id for o in cx.orbits]
    for _ in range(10):
        oid_p = ids[rng.integers(len(ids))]
        oid_q = ids[rng.integers(len(ids))]
        p = cone_point(cx, oid_p, 0.5 * rng.integers(1, 9, size=cx.orbit(oid_p).n_edges))
        q = cone_point(cx, oid_q, 0.5 * rng.integers(1, 9, size=cx.orbit(oid_q).n_edges))
        d = distance(p, q).distance
        bf = oracle.distance(p, q)
        assert bf >= d - 1e-9
        assert bf - d <= 2 * 0.5
