from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from qpcluster import linalg as la
from qpcluster.catalog import LABELS, catalog_entry
from qpcluster.errors import QPClusterError
from qpcluster.lattice import (
    ClusterWord,
    IsoStep,
    MutationStep,
    exchange_matrix,
    make_isomorphism,
    mutate_matrix,
    mutate_seed,
    new_fixed_data,
    normalize_word,
    t_iso,
)
from qpcluster.symbolic import (
    LaurentPoly,
    RationalFn,
    evaluate_word,
    fast_reject,
    ratfn_equal,
    xmap_compose,
    xmap_is_identity,
    xmaps_equal,
)
from qpcluster.toric import (
    INDEFINITE,
    NEGATIVE_DEFINITE,
    QPAINLEVE,
    boundary_data,
    k_form,
    null_root,
    qp_type_check,
    smooth_complete_fan,
    star_subdivide,
    toric_data,
)

PROPS = settings(max_examples=100, deadline=None, derandomize=True)


@st.composite
def seeds(draw, max_rank=5, bound=3):
    n = draw(st.integers(2, max_rank))
    lam = [[0] * n for _ in range(n)]
    for i, j in combinations(range(n), 2):
        v = draw(st.integers(-bound, bound))
        lam[i][j], lam[j][i] = v, -v
    return new_fixed_data(lam).initial_seed()


@st.composite
def mutation_words(draw, max_len=4):
    # larger exchange entries make exact X-maps grow too fast for a property run
    seed = draw(seeds(max_rank=4, bound=1))
    steps = draw(
        st.lists(
            st.builds(MutationStep, st.integers(1, seed.rank), st.sampled_from((1, -1))),
            max_size=max_len,
        )
    )
    return ClusterWord(seed, tuple(steps))


@PROPS
@given(seeds(), st.data())
def test_signed_mutations_are_inverse(seed, data):
    k = data.draw(st.integers(1, seed.rank))
    e = data.draw(st.sampled_from((1, -1)))
    assert mutate_seed(mutate_seed(seed, k, e), k, -e) == seed


@PROPS
@given(seeds(), st.data())
def test_double_mutation_is_t_iso(seed, data):
    k = data.draw(st.integers(1, seed.rank))
    e = data.draw(st.sampled_from((1, -1)))
    assert mutate_seed(mutate_seed(seed, k, e), k, e) == t_iso(seed, k, e)


@PROPS
@given(seeds(max_rank=6), st.data())
def test_matrix_mutation_rule(seed, data):
    k = data.draw(st.integers(1, seed.rank))
    e = data.draw(st.sampled_from((1, -1)))
    assert exchange_matrix(mutate_seed(seed, k, e)) == mutate_matrix(exchange_matrix(seed), k - 1)


@PROPS
@given(mutation_words(), st.data())
def test_evaluation_is_functorial(word, data):
    cut = data.draw(st.integers(0, len(word)))
    seeds_ = word.seeds()
    inner = ClusterWord(word.source, word.steps[:cut])
    outer = ClusterWord(seeds_[cut], word.steps[cut:])
    assert xmaps_equal(evaluate_word(word), xmap_compose(evaluate_word(outer), evaluate_word(inner)))


@PROPS
@given(mutation_words())
def test_word_times_inverse_is_trivial(word):
    back = ClusterWord(word.target, tuple(s.inverse() for s in reversed(word.steps)))
    loop = word.then(back)
    assert loop.target == loop.source
    assert xmap_is_identity(evaluate_word(loop))


_E0 = catalog_entry("E0(1)").seed()
# pin sigma^flat so the same isomorphism can act at a mutated seed
_E0_ISOS = [
    make_isomorphism(_E0, mapping, sign).step()
    for mapping, sign in (
        ({1: 2, 2: 3, 3: 1}, 1),
        ({1: 3, 2: 1, 3: 2}, 1),
        ({1: 2, 2: 1}, -1),
        ({2: 3, 3: 2}, -1),
    )
]


@PROPS
@given(st.sampled_from(_E0_ISOS), st.integers(1, 3), st.sampled_from((1, -1)))
def test_iso_commutes_past_mutation(iso, k, e):
    # sign sigma o mu_k^e = mu_{sigma(k)}^{sign e} o sign sigma
    left = ClusterWord(_E0, (MutationStep(k, e), iso))
    right = ClusterWord(_E0, (iso, MutationStep(iso.mapping.get(k, k), iso.sign * e)))
    assert left.target == right.target
    assert xmaps_equal(evaluate_word(left), evaluate_word(right))


@PROPS
@given(mutation_words())
def test_normalize_word(word):
    norm = normalize_word(word)
    *muts, last = norm.steps
    assert all(isinstance(s, MutationStep) and s.sign == 1 for s in muts)
    assert isinstance(last, IsoStep)
    assert norm.target == word.target
    assert xmaps_equal(evaluate_word(norm), evaluate_word(word))


def polys(n):
    exps = st.tuples(*[st.integers(-2, 2)] * n)
    return st.dictionaries(exps, st.integers(-4, 4).filter(bool), min_size=1, max_size=4).map(
        lambda t: LaurentPoly(n, t)
    )


@PROPS
@given(polys(2), polys(2), st.integers(-6, 6).filter(bool), st.tuples(st.integers(-3, 3), st.integers(-3, 3)))
def test_content_normalization(num, den, c, shift):
    r = RationalFn(num, den)
    scaled = RationalFn(num.scale(c).shift(shift), den.scale(c).shift(shift))
    assert ratfn_equal(r, scaled)
    assert ratfn_equal(r.reduced(), r)
    assert ratfn_equal(r * RationalFn(den, num), RationalFn.const(2, 1))


def _oracle_type(h):
    # -H negative semidefinite test through all principal minors
    m = [[-x for x in row] for row in h]
    n = len(m)
    for size in range(1, n + 1):
        for idx in combinations(range(n), size):
            if la.det(tuple(tuple(m[i][j] for j in idx) for i in idx)) < 0:
                return INDEFINITE
    return QPAINLEVE if la.det(tuple(map(tuple, m))) == 0 else NEGATIVE_DEFINITE


@st.composite
def symmetric(draw):
    n = draw(st.integers(1, 4))
    a = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            a[i][j] = a[j][i] = draw(st.integers(-3, 3))
    return tuple(map(tuple, a))


@PROPS
@given(symmetric())
def test_qp_type_check_matches_minors(h):
    assert qp_type_check(h) == _oracle_type(h)


@PROPS
@given(st.sampled_from(LABELS), st.data())
def test_null_root_invariants(label, data):
    e = catalog_entry(label)
    fan = smooth_complete_fan(e.vectors)
    for _ in range(data.draw(st.integers(0, 2))):
        fan = star_subdivide(fan, data.draw(st.integers(0, len(fan.rays) - 1)))
    bd = boundary_data(e.vectors, fan)
    nr = null_root(e.vectors, fan, bd)
    assert la.mat_vec(bd.H, nr.c_prime) == (0,) * len(fan.rays)
    total = [0, 0]
    for c, w in zip(nr.c, e.vectors.vectors):
        total[0] += c * w[0]
        total[1] += c * w[1]
    assert total == [0, 0]
    assert nr.c == null_root(e.vectors).c
    assert k_form(e.vectors).pair(nr.delta, nr.delta) == 0


@PROPS
@given(st.lists(st.tuples(st.integers(-4, 4), st.integers(-4, 4)), min_size=3, max_size=6))
def test_fan_self_intersections(vectors):
    prim = {la.primitive(v) for v in vectors if v != (0, 0)}
    try:
        data = toric_data(sorted(prim))
        fan = smooth_complete_fan(data)
    except QPClusterError:
        return
    bd = boundary_data(data, fan)
    r = fan.rays
    s = len(r)
    for j in range(s):
        lhs = la.vadd(r[j - 1], r[(j + 1) % s])
        assert lhs == la.scale(-bd.self_int[j], r[j])


@PROPS
@given(mutation_words(max_len=4))
def test_fast_path_only_rejects_nontrivial(word):
    if word.target == word.source and fast_reject(word):
        assert not xmap_is_identity(evaluate_word(word))
