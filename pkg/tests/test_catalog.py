import pytest

from cytoric import catalog
from cytoric.errors import UnknownEntry, UnsupportedWeights


def test_names():
    assert catalog.names() == sorted(["X5", "X6", "X8", "X10", "X24", "X33", "X34", "X44",
                                      "ci2222", "sextic4fold"])


@pytest.mark.parametrize("name", ["X5", "X6", "X8", "X10", "X24", "X33", "X34", "X44"])
def test_threefold_entries(name):
    Z = catalog.catalog_entry(name)
    assert Z.dim == 3 and Z.name == name and Z.provenance


def test_added_entries_say_so():
    for name in ("ci2222", "sextic4fold"):
        assert "added for testing" in catalog.catalog_entry(name).provenance
    assert catalog.catalog_entry("sextic4fold").dim == 4


def test_weights_on_rays():
    fan = catalog.weighted_projective((1, 1, 1, 2, 5))
    # sum of w_j u_j vanishes
    assert all(sum(w * u[k] for w, u in zip((1, 1, 1, 2, 5), fan.rays)) == 0 for k in range(4))
    assert fan.name == "P(1,1,1,2,5)"


def test_projective_space_matches_unit_weights():
    assert catalog.projective_space(3) == catalog.weighted_projective((1, 1, 1, 1))


def test_unsupported_weights():
    with pytest.raises(UnsupportedWeights):
        catalog.weighted_projective((1, 2, 3))
    with pytest.raises(UnsupportedWeights):
        catalog.weighted_projective((2, 2, 4))
    with pytest.raises(ValueError):
        catalog.projective_space(0)


def test_ambient_names():
    assert catalog.ambient_fan("P3").n_rays == 4
    assert catalog.ambient_fan("P1^3").n_rays == 6
    assert catalog.ambient_fan("P(1,1,1,1,2)").name == "P(1,1,1,1,2)"
    assert catalog.ambient_fan("X8").name == "P(1,1,1,1,4)"
    with pytest.raises(UnknownEntry):
        catalog.catalog_entry("quintic")
