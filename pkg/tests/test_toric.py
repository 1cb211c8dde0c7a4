import pytest

from qpcluster.catalog import LABELS, catalog_entry
from qpcluster.errors import (
    InconsistentFan,
    NotPositivelySpanning,
    NotPrimitive,
    NotQPainleveType,
    RankDeficient,
)
from qpcluster.lattice import exchange_matrix
from qpcluster.toric import (
    INDEFINITE,
    NEGATIVE_DEFINITE,
    QPAINLEVE,
    Fan2D,
    boundary_data,
    classify_type,
    in_k_circ,
    k_circ_basis,
    k_form,
    null_root,
    qp_type_check,
    seed_from_vectors,
    smooth_complete_fan,
    star_subdivide,
    toric_data,
)

E0 = [(-1, 2), (-1, -1), (2, -1)]
P2 = [(1, 0), (0, 1), (-1, -1)]


def test_seed_from_vectors():
    _, s = seed_from_vectors(toric_data(E0))
    assert exchange_matrix(s) == ((0, 3, -3), (-3, 0, 3), (3, -3, 0))
    _, s = seed_from_vectors(toric_data([(1, 0), (0, 1)]))
    assert exchange_matrix(s) == ((0, 1), (-1, 0))
    _, s = seed_from_vectors(toric_data([(1, 0), (0, 1)], orientation=-1))
    assert exchange_matrix(s) == ((0, -1), (1, 0))
    with pytest.raises(NotPrimitive):
        toric_data([(2, 0), (0, 1)])
    with pytest.raises(RankDeficient):
        toric_data([(1, 0), (-1, 0)])


def test_smooth_complete_fan():
    square = [(0, 1), (-1, 0), (0, -1), (1, 0)]
    assert smooth_complete_fan(toric_data(square)).rays == tuple(square)
    fan = smooth_complete_fan(toric_data(E0))
    assert len(fan) == 9
    assert set(fan.rays) == set(E0) | {(-1, 1), (-1, 0), (0, -1), (1, -1), (1, 0), (0, 1)}
    # numbering starts at the first ray at or after (0, 1)
    assert fan.rays[0] == (-1, 2) and fan.rays[-1] == (0, 1)
    assert set(smooth_complete_fan(toric_data(P2)).rays) == set(P2)
    with pytest.raises(NotPositivelySpanning):
        smooth_complete_fan(toric_data([(1, 0), (0, 1), (1, 1)]))


def test_boundary_data_examples():
    data = toric_data(P2)
    bd = boundary_data(toric_data(P2 + [(1, 0)]), smooth_complete_fan(data))
    assert bd.self_int == (1, 1, 1)
    fan = smooth_complete_fan(data)
    from qpcluster.toric import toric_intersection_matrix

    assert toric_intersection_matrix(boundary_data(data, fan)) == ((1, 1, 1),) * 3
    e5 = catalog_entry("E5(1)")
    bd = boundary_data(e5.vectors, smooth_complete_fan(e5.vectors))
    assert bd.mult == (2, 2, 2, 2)
    assert all(bd.H[i][i] == -2 for i in range(4))
    assert bd.H[0][1] == bd.H[0][3] == 1 and bd.H[0][2] == 0
    with pytest.raises(InconsistentFan):
        boundary_data(data, Fan2D(((1, 0), (0, 1), (-1, 0), (0, -1), (1, 1))))


def test_qp_type_check_examples():
    assert qp_type_check(((-2, 1, 1), (1, -2, 1), (1, 1, -2))) == QPAINLEVE
    assert qp_type_check(((-1, 0), (0, -1))) == NEGATIVE_DEFINITE
    assert qp_type_check(((1,),)) == INDEFINITE
    assert qp_type_check(((0, 1), (1, 0))) == INDEFINITE


def test_null_root_examples():
    assert null_root(toric_data(E0)).delta == (1, 1, 1)
    assert null_root(catalog_entry("E7(1)").vectors).delta == (1, 1, 1, 1, 3, 2, 2, 1, 1, 1)
    assert null_root(catalog_entry("E8(1)").vectors).delta == (1, 1, 1, 1, 1, 1, 3, 2, 2, 2, 3)
    with pytest.raises(NotQPainleveType):
        null_root(toric_data([(1, 0), (0, 1), (1, 1)]))
    with pytest.raises(NotQPainleveType):
        null_root(toric_data(P2))


def test_k_circ_basis():
    e5 = catalog_entry("E5(1)")
    assert len(k_circ_basis(e5.vectors)) == 6
    assert in_k_circ(e5.vectors, (1, 0, 0, 0, 1, 0, 0, 0))
    assert k_circ_basis(toric_data([(1, 0), (0, 1)])) == []
    e7 = catalog_entry("E7(1)")
    assert len(k_circ_basis(e7.vectors)) == 8
    assert in_k_circ(e7.vectors, e7.delta)


def test_k_form_norms():
    e5 = catalog_entry("E5(1)")
    kf = k_form(e5.vectors)
    a0 = (-1, 1, 0, 0, 0, 0, 0, 0)
    assert kf.curve_class(a0) == (0, 0, 0, 0) or all(x == 0 for x in kf.curve_class(a0))
    assert kf.pair(a0, a0) == -2
    e1 = catalog_entry("E1(1)")
    kf = k_form(e1.vectors)
    assert kf.pair(e1.roots[0], e1.roots[0]) == -8
    for label in LABELS:
        e = catalog_entry(label)
        assert k_form(e.vectors).pair(e.delta, e.delta) == 0


def test_classification_examples():
    assert classify_type(catalog_entry("E7(1)").vectors).label == "E7(1)"
    cl = classify_type(catalog_entry("E1(1)'").vectors)
    assert (cl.label, cl.min_norm) == ("E1(1)'", -2)
    cl = classify_type(catalog_entry("E2(1)").vectors)
    assert cl.label == "E2(1)" and cl.quotient_rank == 2
    assert classify_type(catalog_entry("E1(1)").vectors).min_norm == -8


def test_star_subdivision_keeps_null_root():
    for label in ("E0(1)", "E3(1)"):
        data = catalog_entry(label).vectors
        fan = smooth_complete_fan(data)
        sub = star_subdivide(fan, 1)
        a, b = null_root(data, fan), null_root(data, sub)
        assert a.c == b.c
        assert b.c_prime[2] == a.c_prime[1] + a.c_prime[2]
