import random

import pytest

from qpcluster.catalog import (
    LABELS,
    action_on_TK,
    catalog_entry,
    pentagon_word,
    relation_word,
    relations,
    verify_actions,
    verify_fan_invariance,
    verify_relation,
    verify_root_basis,
)
from qpcluster.errors import NotAutomorphism, UnknownLabel
from qpcluster.lattice import ClusterWord, MutationStep, mutate_seed, parse_word
from qpcluster.symbolic import RationalFn, evaluate_word, ratfn_equal

ALIASES = {"e7": "E7(1)", "E1(1)'": "E1(1)'", "e1p": "E1(1)'"}


def test_labels_and_aliases():
    assert len(LABELS) == 10 and len(set(LABELS)) == 10
    for alias, label in ALIASES.items():
        assert catalog_entry(alias).label == label
    with pytest.raises(UnknownLabel):
        catalog_entry("E9(1)")


def test_e7_generator_words():
    e7 = catalog_entry("E7(1)")
    assert e7.generators["s3"] == "mu1- o (1,6) o mu1+"
    assert e7.generators["iota"] == "mu5- o -(1,5)(2,8)(3,9)(4,10) o mu5+"
    seed = e7.seed()
    for name in e7.generators:
        assert e7.word(name, seed).target == seed


def test_e0_generators():
    e0 = catalog_entry("E0(1)")
    assert e0.generators["iota1"] == "(1,2,3)"
    assert e0.generators["iota2"] == "-(1,2)"


def test_e2_tau_matrix():
    e2 = catalog_entry("E2(1)")
    perm, m = e2.matrices["sigma"]
    cols = list(zip(*m))
    assert cols[0] == (0, 0, 0, 1, 1)
    assert cols[4] == (0, 0, 1, 0, 0)


@pytest.mark.parametrize("label", LABELS)
def test_root_basis(label):
    rep = verify_root_basis(catalog_entry(label))
    assert all(c.ok for c in rep), [c.to_json() for c in rep if not c.ok]


def test_printed_norms():
    assert [catalog_entry("E2(1)").expected_gram()[i][i] for i in range(4)] == [-2, -2, -14, -14]
    assert catalog_entry("E0(1)").expected_gram() == ((0,),)
    e7 = catalog_entry("E7(1)")
    assert (1, 2, 3, 4, 3, 2, 1, 2) in e7.delta_decomps


@pytest.mark.parametrize("label", LABELS)
def test_actions(label):
    rep = verify_actions(catalog_entry(label))
    assert all(c.ok for c in rep), [c.to_json() for c in rep if not c.ok]


@pytest.mark.parametrize("label", LABELS)
def test_fan_invariance(label):
    assert all(c.ok for c in verify_fan_invariance(catalog_entry(label)))


def test_e7_relation_examples():
    e7 = catalog_entry("E7(1)")
    seed = e7.seed()
    assert verify_relation(e7, e7.product(("s3", "s3"), seed))
    braid = e7.product(("s0", "s1", "s0", "s1^-1", "s0^-1", "s1^-1"), seed)
    assert verify_relation(e7, braid)
    assert verify_relation(e7, pentagon_word())
    assert not verify_relation(e7, e7.product(("s0", "s1"), seed))


def test_relation_lists():
    e7 = relations(catalog_entry("E7(1)"))
    names = {r.name for r in e7}
    assert "s0^2" in names and "(s0 s1)^3" in names and "(iota)^2" in names
    assert any("iota s0 iota^-1" in n for n in names)
    e2 = relations(catalog_entry("E2(1)"))
    assert not any("^3" in r.name for r in e2 if "iota" in r.name)


def test_e7_iota_action():
    e7 = catalog_entry("E7(1)")
    act = action_on_TK(e7.vectors, e7.word("iota"))
    assert act.sign == -1
    want = [6, 5, 4, 3, 2, 1, 0, 7]
    for j, a in enumerate(e7.roots):
        assert act.apply(a) == tuple(-x for x in e7.roots[want[j]])


def test_tau_translations():
    e2 = catalog_entry("E2(1)")
    act = action_on_TK(e2.vectors, e2.word("tau"))
    d = e2.delta
    assert act.apply(e2.roots[2]) == tuple(a + b for a, b in zip(e2.roots[2], d))
    assert act.apply(e2.roots[3]) == tuple(a - b for a, b in zip(e2.roots[3], d))
    e1 = catalog_entry("E1(1)")
    act = action_on_TK(e1.vectors, e1.word("tau"))
    assert act.apply(e1.roots[0]) == tuple(a + b for a, b in zip(e1.roots[0], e1.delta))


def test_action_errors():
    e5 = catalog_entry("E5(1)")
    seed = e5.seed()
    with pytest.raises(NotAutomorphism):
        action_on_TK(e5.vectors, parse_word(seed, "mu1+"))
    # K° characters are Casimirs, so a trivial loop acts as the identity
    e0 = catalog_entry("E0(1)")
    act = action_on_TK(e0.vectors, parse_word(e0.seed(), "mu1+ o mu1-"))
    assert act.sign == 1
    assert act.images == act.basis


def test_conjugation_invariance():
    e7 = catalog_entry("E7(1)")
    seed = e7.seed()
    mu = MutationStep(1, 1)
    s1 = mutate_seed(seed, mu)
    s0 = e7.word("s0", seed)
    conj = ClusterWord(s1, (MutationStep(1, -1),) + s0.steps + (mu,))
    assert action_on_TK(e7.vectors, conj).images == action_on_TK(e7.vectors, s0).images


@pytest.mark.parametrize("label", ["E8(1)", "E6(1)", "E3(1)", "E0(1)"])
def test_distinct_generator_actions(label):
    e = catalog_entry(label)
    seed = e.seed()
    acts = {name: action_on_TK(e.vectors, e.word(name, seed)).images for name in e.reflections}
    assert len(set(acts.values())) == len(acts)


def test_sign_is_multiplicative():
    rng = random.Random(11)
    for label in ("E7(1)", "E4(1)", "E1(1)'", "E0(1)"):
        e = catalog_entry(label)
        seed = e.seed()
        names = list(e.generators)
        sign = {n: action_on_TK(e.vectors, e.word(n, seed)).sign for n in names}
        for _ in range(4):
            a, b = rng.choice(names), rng.choice(names)
            prod = action_on_TK(e.vectors, e.product((a, b), seed)).sign
            assert prod == sign[a] * sign[b]


def test_e0_relations_fast():
    e0 = catalog_entry("E0(1)")
    seed = e0.seed()
    for rel in relations(e0):
        assert verify_relation(e0, relation_word(e0, rel, seed)), rel.name


def test_k_circ_characters_are_invariant():
    e5 = catalog_entry("E5(1)")
    m = evaluate_word(parse_word(e5.seed(), "mu3+ o mu1-"))
    for a in e5.roots:
        assert ratfn_equal(m.pullback(a), RationalFn.monomial(a))
