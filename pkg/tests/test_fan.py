import pytest

from cytoric import lattice
from cytoric.catalog import product_of_projective_lines, projective_space
from cytoric.errors import NotAFan, NotComplete, NotSimplicial, TorusFactor
from cytoric.fan import (Cone, cone_multiplicity, is_complete, singular_cones,
                         validate_fan, walls)


def test_projective_space_is_valid(p4):
    assert p4.dim == 4 and p4.n_rays == 5
    assert is_complete(p4)
    assert len(p4.max_cones) == 5
    assert singular_cones(p4) == []
    # every subset of at most four rays is a cone
    assert len(p4.cones) == 1 + 5 + 10 + 10 + 5


def test_square_cone_is_not_simplicial():
    rays = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]
    with pytest.raises(NotSimplicial) as info:
        validate_fan(rays, [(0, 1, 2, 3)])
    assert list(info.value.cones) == [(0, 1, 2, 3)]


def test_rays_in_a_hyperplane():
    with pytest.raises(TorusFactor):
        validate_fan([(1, 0), (-1, 0)], [(0,), (1,)])


def test_overlapping_cones():
    rays = [(1, 0), (0, 1), (1, 1), (1, -1)]
    with pytest.raises(NotAFan):
        validate_fan(rays, [(0, 1), (2, 3)])


def test_bad_input():
    with pytest.raises(NotAFan):
        validate_fan([(1, 0), (1, 0), (0, 1)], [(0, 2)])
    with pytest.raises(NotAFan):
        validate_fan([(1, 0), (0, 1)], [(0, 5)])
    with pytest.raises(NotAFan):
        validate_fan([(1, 0), (0, 1), (-1, -1)], [(0, 1)])


def test_primitivized_rays_warn():
    fan = validate_fan([(2, 0), (0, 1), (-1, -1)], [(0, 1), (1, 2), (0, 2)])
    assert fan.rays[0] == (1, 0)
    assert fan.warnings == ("ray-primitivized:0",)


def test_incomplete_fan():
    fan = validate_fan([(1, 0), (0, 1), (-1, 0)], [(0, 1), (1, 2)])
    assert not is_complete(fan)
    with pytest.raises(NotComplete):
        walls(fan)


def test_multiplicities(p11112, torsion_fan):
    assert cone_multiplicity(p11112, (1, 2, 3, 4)) == 1
    assert cone_multiplicity(p11112, (0, 1, 2, 3)) == 2
    for c in torsion_fan.max_cones:
        det = lattice.determinant(torsion_fan.ray_matrix(c))
        assert cone_multiplicity(torsion_fan, Cone(c)) == abs(det)
    assert [c.rays for c in singular_cones(p11112)] == [(0, 1, 2, 3)]


def test_wall_counts():
    assert len(walls(projective_space(2))) == 3
    assert len(walls(projective_space(3))) == 6
    assert len(walls(product_of_projective_lines(2))) == 4
    for w in walls(projective_space(3)):
        assert w.extra_ray not in w.facet


def test_validation_is_idempotent(p11112):
    again = validate_fan(p11112.rays, p11112.max_cones, p11112.name)
    assert again == p11112 and hash(again) == hash(p11112)
    assert validate_fan(**{k: v for k, v in p11112.to_json().items()}) == p11112
