from fractions import Fraction

import pytest

from qpcluster import linalg as la
from qpcluster.catalog import catalog_entry
from qpcluster.errors import NonGenericParameters
from qpcluster.lattice import ClusterWord
from qpcluster.qp6 import (
    DEFAULT_PARAMS,
    build_qp6_context,
    orbit_discrepancy,
    orbit_to_csv,
    orbit_to_json,
    point_from_params,
    printed_q_matches_delta,
    qp6_maps,
    qp6_orbit,
    qp6_orbit_float,
    verify_qp6_identities,
)
from qpcluster.symbolic import evaluate_word, xmaps_equal


@pytest.fixture(scope="module")
def ctx():
    return build_qp6_context()


@pytest.fixture(scope="module")
def maps(ctx):
    return qp6_maps(ctx)


def test_context(ctx):
    # e_1 has integer coordinates in the finer basis
    assert la.is_integral(ctx.seed.fixed.to_char((1, 0, 0, 0, 0, 0, 0, 0)))
    assert ctx.chars["b5"] == la.vadd(ctx.chars["X5"], ctx.chars["f"])
    assert ctx.chars["q"] == ctx.seed.fixed.to_char(catalog_entry("E5(1)").delta)
    assert ctx.c1.target == ctx.seed and ctx.c2.target == ctx.seed


def test_printed_q_expansion_differs_from_delta(ctx):
    # the printed a_3 exponent is 3 while delta has coefficient 2 on alpha_3
    assert not printed_q_matches_delta(ctx)
    assert catalog_entry("E5(1)").delta_decomps[0][3] == 2


def test_iota3_is_iota2_iota1_iota2(ctx):
    e5 = ctx.entry
    direct = ClusterWord(ctx.seed, ctx.c1.steps[:1])
    composite = e5.product(("iota2", "iota1", "iota2"), ctx.seed)
    assert composite.target == direct.target
    assert xmaps_equal(evaluate_word(direct), evaluate_word(composite))


def test_identities(ctx, maps):
    rep = verify_qp6_identities(ctx, maps)
    assert all(c.ok for c in rep), [c.to_json() for c in rep if not c.ok]
    names = {c.name for c in rep}
    assert {"f fbar identity", "g gunder identity", "c1^2 trivial", "c2^2 trivial"} <= names


def test_orbit_basics(ctx, maps):
    pt = point_from_params(ctx, DEFAULT_PARAMS)
    rows = qp6_orbit(ctx, pt, 0, maps=maps)
    assert len(rows) == 1 and rows[0].f == 2
    rows = qp6_orbit(ctx, pt, 1, order="c1-first", maps=maps)
    assert rows[1].q == 1 / rows[0].q
    assert rows[1].map == "c1" and rows[1].g == rows[0].g


def test_orbit_order_flag(ctx, maps):
    pt = point_from_params(ctx, DEFAULT_PARAMS)
    a = qp6_orbit(ctx, pt, 4, maps=maps)
    b = qp6_orbit(ctx, pt, 4, order="c1-first", maps=maps)
    assert [r.map for r in a[1:]] == ["c2", "c1", "c2", "c1"]
    assert [r.map for r in b[1:]] == ["c1", "c2", "c1", "c2"]
    with pytest.raises(ValueError):
        qp6_orbit(ctx, pt, 1, order="sideways", maps=maps)


def test_pipelines_agree_short(ctx, maps):
    pt = point_from_params(ctx, DEFAULT_PARAMS)
    ptf = point_from_params(ctx, DEFAULT_PARAMS, exact=False)
    d = orbit_discrepancy(qp6_orbit(ctx, pt, 20, maps=maps), qp6_orbit_float(ctx, ptf, 20))
    assert max(d) <= 1e-12


def test_params(ctx):
    p = point_from_params(ctx, {"a": [16, 1, 81, 1, 1, 1], "f": 1, "g": 2}, exact=False)
    assert p[:3] == pytest.approx((2.0, 1.0, 3.0))
    with pytest.raises(NonGenericParameters):
        point_from_params(ctx, {"f": 1, "g": 1})
    with pytest.raises(NonGenericParameters):
        point_from_params(ctx, {"t": [1, 1, 1, 1, 1, 0], "f": 1, "g": 1})
    exact = point_from_params(ctx, {"t": ["1/2", 1, 1, 1, 1, 1], "f": "3", "g": 1})
    assert exact[0] == Fraction(1, 2)


def test_orbit_output(ctx, maps):
    rows = qp6_orbit(ctx, point_from_params(ctx, DEFAULT_PARAMS), 2, maps=maps)
    csv_text = orbit_to_csv(rows)
    assert csv_text.splitlines()[0] == "step,map,a0,a1,a2,a3,a4,a5,f,g,q"
    assert len(csv_text.splitlines()) == 4
    assert '"step": 2' in orbit_to_json(rows)
