from collections import Counter

import pytest

from qpcluster.catalog import LABELS, catalog_entry
from qpcluster.errors import HasRemainders, NotLattice, Unbounded
from qpcluster.fano import (
    ascii_plot,
    fano_polygon,
    no_remainders,
    polygon_from_halfplanes,
    polygon_from_vertices,
    seed_from_polygon,
)
from qpcluster.toric import toric_data


def test_representative_polygons():
    e0 = fano_polygon(catalog_entry("E0(1)").vectors)
    assert e0.same_as(polygon_from_vertices([(0, 1), (-1, -1), (1, 0)]))
    e5 = fano_polygon(catalog_entry("E5(1)").vectors)
    assert set(e5.vertices) == {(1, 1), (-1, 1), (-1, -1), (1, -1)}
    assert all(f.l == 2 and f.c == 1 for f in e5.facets)
    e8 = fano_polygon(catalog_entry("E8(1)").vectors)
    assert set(e8.vertices) == {(3, 2), (-3, 2), (-3, -1), (3, -1)}


def test_no_remainders():
    assert no_remainders(fano_polygon(catalog_entry("E5(1)").vectors))
    tri = polygon_from_halfplanes([((-1, 2), 1), ((-1, -1), 1), ((2, -1), 1)])
    assert no_remainders(tri)
    # primitive endpoints on a height-2 line are an even distance apart, so use height 3
    fat = polygon_from_vertices([(1, -3), (2, -3), (0, 1), (-1, 0)])
    assert [(f.c, f.l) for f in fat.facets if f.w == (0, 1)] == [(3, 1)]
    assert not no_remainders(fat)
    with pytest.raises(HasRemainders):
        seed_from_polygon(fat)


def test_seed_from_polygon_examples():
    e5 = seed_from_polygon(fano_polygon(catalog_entry("E5(1)").vectors))
    assert len(e5.vectors) == 8
    assert set(Counter(e5.vectors).values()) == {2}
    e0 = seed_from_polygon(polygon_from_vertices([(0, 1), (-1, -1), (1, 0)]))
    assert sorted(e0.vectors) == sorted([(-1, 2), (-1, -1), (2, -1)])


@pytest.mark.parametrize("label", LABELS)
def test_round_trip(label):
    data = catalog_entry(label).vectors
    poly = fano_polygon(data)
    back = seed_from_polygon(poly)
    assert Counter(back.vectors) == Counter(data.vectors)
    assert fano_polygon(back).same_as(poly)
    mult = Counter(data.vectors)
    assert all(f.l == mult[f.w] * f.c for f in poly.facets)


def test_bad_polygons():
    with pytest.raises(Unbounded):
        polygon_from_halfplanes([((1, 0), 1), ((0, 1), 1)])
    with pytest.raises(NotLattice):
        polygon_from_halfplanes([((1, 0), 1), ((0, 1), 1), ((-1, -2), 2), ((-2, -1), 2)])


def test_ascii_plot():
    text = ascii_plot(fano_polygon(catalog_entry("E5(1)").vectors))
    assert text.splitlines() == ["* + *", "+ o +", "* + *"]
    assert "o" in ascii_plot(fano_polygon(toric_data([(-1, 2), (-1, -1), (2, -1)])))
