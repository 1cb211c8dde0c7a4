"""The ten appendix datasets and the relation / torus-action verifier.

Each :class:`CatalogEntry` carries the toric vectors, the root basis, the
printed null root and Dynkin data, the generator words (in composition
notation, read right to left) and the printed action of every generator on
the characters ``z^alpha``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from . import linalg as la
from .errors import InvalidWord, NotAutomorphism, NotMonomial, UnknownLabel
from .lattice import ClusterWord, IsoStep, Seed, compose_word, invert_word, parse_word
from .symbolic import DEFAULT_SIMPLIFY_THRESHOLD, evaluate_word, is_trivial_word
from .toric import (
    NullRoot,
    ToricSeedData,
    boundary_data,
    in_k_circ,
    k_circ_basis,
    k_form,
    k_pairing,
    null_root,
    seed_from_vectors,
    smooth_complete_fan,
    star_subdivide,
    toric_data,
)


def _vec(n: int, coeffs: dict[int, int]) -> tuple:
    v = [0] * n
    for i, c in coeffs.items():
        v[i - 1] = c
    return tuple(v)


def _iso_matrix(n: int, images: dict[int, dict[int, int]]) -> la.Matrix:
    """Matrix whose column ``j`` is the image of ``e_j``."""
    return la.from_columns([_vec(n, images[j]) for j in range(1, n + 1)])


@dataclass(frozen=True)
class Action:
    """Printed action of a generator on the roots.

    ``kind`` is ``"reflection"`` (``s_i``, read off the Dynkin data) or
    ``"explicit"``, where ``images[j] = (sign, k, d)`` means
    ``alpha_j -> sign * alpha_k + d * delta``. ``sign`` is ``sgn(w)``.
    """

    kind: str
    sign: int = 1
    root: int | None = None
    images: tuple = ()


def _signed_perm(sign: int, perm: Sequence[int]) -> Action:
    return Action("explicit", sign, images=tuple((sign, k, 0) for k in perm))


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    vectors: ToricSeedData
    roots: tuple
    delta: tuple
    delta_decomps: tuple
    norms: tuple
    edges: dict
    generators: dict  # name -> composition text
    named: dict = field(default_factory=dict)  # name -> composition text of sub-words
    matrices: dict = field(default_factory=dict)  # name -> (perm dict, matrix) for explicit isomorphisms
    actions: dict = field(default_factory=dict)
    reflections: tuple = ()
    aut_relations: tuple = ()  # (word as list of generator names, exponent)
    conjugations: tuple = ()  # automorphism generators with conjugation relations
    untested: tuple = ()

    @property
    def rank(self) -> int:
        return len(self.vectors.vectors)

    def seed(self) -> Seed:
        return seed_from_vectors(self.vectors)[1]

    def expected_gram(self) -> la.Matrix:
        r = len(self.roots)
        g = [[0] * r for _ in range(r)]
        for i in range(r):
            g[i][i] = self.norms[i]
        for (i, j), w in self.edges.items():
            g[i][j] = g[j][i] = w
        return tuple(tuple(row) for row in g)

    def _named_steps(self, seed: Seed) -> dict:
        out: dict = {}
        for name, (mapping, matrix) in self.matrices.items():
            out[name] = [IsoStep.from_mapping(mapping, 1, matrix)]
        for name, text in self.named.items():
            out[name] = list(parse_word(seed, text, out).steps)
        return out

    def word(self, name: str, seed: Seed | None = None) -> ClusterWord:
        seed = seed or self.seed()
        if name not in self.generators:
            raise InvalidWord(f"{self.label} has no generator {name!r}")
        return parse_word(seed, self.generators[name], self._named_steps(seed))

    def product(self, names: Sequence[str], seed: Seed | None = None) -> ClusterWord:
        """Word applying the generators ``names`` in order; ``name^-1`` is the inverse."""
        seed = seed or self.seed()
        steps: list = []
        for nm in names:
            inv = nm.endswith("^-1")
            w = self.word(nm[:-3] if inv else nm, seed)
            if w.target != seed:
                raise NotAutomorphism(f"{nm} does not return to the base seed")
            steps.extend((invert_word(w) if inv else w).steps)
        return ClusterWord(seed, tuple(steps))


def _entries() -> dict[str, CatalogEntry]:
    E = {}

    # E8
    n = 11
    E["E8(1)"] = CatalogEntry(
        label="E8(1)",
        vectors=toric_data([(0, 1)] * 6 + [(-1, 0)] + [(0, -1)] * 3 + [(1, 0)]),
        roots=tuple(_vec(n, r) for r in [
            {6: 1, 5: -1}, {5: 1, 4: -1}, {4: 1, 3: -1}, {3: 1, 2: -1}, {2: 1, 1: -1},
            {1: 1, 8: 1}, {9: 1, 8: -1}, {10: 1, 9: -1}, {7: 1, 11: 1},
        ]),
        delta=_vec(n, {1: 1, 2: 1, 3: 1, 4: 1, 5: 1, 6: 1, 7: 3, 8: 2, 9: 2, 10: 2, 11: 3}),
        delta_decomps=((1, 2, 3, 4, 5, 6, 4, 2, 3),),
        norms=(-2,) * 9,
        edges={(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1, (5, 6): 1, (6, 7): 1, (5, 8): 1},
        generators={
            "s0": "(5,6)", "s1": "(4,5)", "s2": "(3,4)", "s3": "(2,3)", "s4": "(1,2)",
            "s5": "mu1- o (1,8) o mu1+", "s6": "(8,9)", "s7": "(9,10)",
            "s8": "mu7- o (7,11) o mu7+",
        },
        reflections=tuple(f"s{i}" for i in range(9)),
    )

    # E7
    n = 10
    E["E7(1)"] = CatalogEntry(
        label="E7(1)",
        vectors=toric_data([(0, 1)] * 4 + [(-1, 0)] + [(0, -1)] * 2 + [(1, 0)] * 3),
        roots=tuple(_vec(n, r) for r in [
            {4: 1, 3: -1}, {3: 1, 2: -1}, {2: 1, 1: -1}, {1: 1, 6: 1},
            {5: 1, 8: 1}, {9: 1, 8: -1}, {10: 1, 9: -1}, {7: 1, 6: -1},
        ]),
        delta=_vec(n, {1: 1, 2: 1, 3: 1, 4: 1, 5: 3, 6: 2, 7: 2, 8: 1, 9: 1, 10: 1}),
        delta_decomps=((1, 2, 3, 4, 3, 2, 1, 2),),
        norms=(-2,) * 8,
        edges={(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1, (5, 6): 1, (3, 7): 1},
        generators={
            "s0": "(3,4)", "s1": "(2,3)", "s2": "(1,2)", "s3": "mu1- o (1,6) o mu1+",
            "s4": "mu5- o (5,8) o mu5+", "s5": "(8,9)", "s6": "(9,10)", "s7": "(6,7)",
            "iota": "mu5- o -(1,5)(2,8)(3,9)(4,10) o mu5+",
        },
        actions={"iota": _signed_perm(-1, (6, 5, 4, 3, 2, 1, 0, 7))},
        reflections=tuple(f"s{i}" for i in range(8)),
        aut_relations=((("iota",), 2),),
        conjugations=("iota",),
    )

    # E6
    n = 9
    E["E6(1)"] = CatalogEntry(
        label="E6(1)",
        vectors=toric_data([(0, 1)] * 3 + [(-1, 0)] + [(0, -1)] * 3 + [(1, 0)] * 2),
        roots=tuple(_vec(n, r) for r in [
            {9: 1, 8: -1}, {3: 1, 2: -1}, {2: 1, 1: -1}, {1: 1, 5: 1},
            {6: 1, 5: -1}, {7: 1, 6: -1}, {4: 1, 8: 1},
        ]),
        delta=_vec(n, {1: 1, 2: 1, 3: 1, 4: 2, 5: 1, 6: 1, 7: 1, 8: 1, 9: 1}),
        delta_decomps=((1, 1, 2, 3, 2, 1, 2),),
        norms=(-2,) * 7,
        edges={(0, 6): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1, (3, 6): 1},
        generators={
            "s0": "(8,9)", "s1": "(2,3)", "s2": "(1,2)", "s3": "mu1- o (1,5) o mu1+",
            "s4": "(5,6)", "s5": "(6,7)", "s6": "mu4- o (4,8) o mu4+",
            "iota1": "-(1,5)(2,6)(3,7)",
            "iota2": "mu4- o -(1,4)(2,8)(3,9) o mu4+",
        },
        actions={
            "iota1": _signed_perm(-1, (0, 5, 4, 3, 2, 1, 6)),
            "iota2": _signed_perm(-1, (1, 0, 6, 3, 4, 5, 2)),
        },
        reflections=tuple(f"s{i}" for i in range(7)),
        aut_relations=((("iota1",), 2), (("iota2",), 2), (("iota1", "iota2"), 3)),
        conjugations=("iota1", "iota2"),
    )

    # E5
    n = 8
    E["E5(1)"] = CatalogEntry(
        label="E5(1)",
        vectors=toric_data([(0, 1)] * 2 + [(-1, 0)] * 2 + [(0, -1)] * 2 + [(1, 0)] * 2),
        roots=tuple(_vec(n, r) for r in [
            {2: 1, 1: -1}, {6: 1, 5: -1}, {1: 1, 5: 1}, {3: 1, 7: 1}, {4: 1, 3: -1}, {8: 1, 7: -1},
        ]),
        delta=_vec(n, {i: 1 for i in range(1, 9)}),
        delta_decomps=((1, 1, 2, 2, 1, 1),),
        norms=(-2,) * 6,
        edges={(1, 2): 1, (2, 3): 1, (3, 4): 1, (3, 5): 1, (0, 2): 1},
        generators={
            "s0": "(1,2)", "s1": "(5,6)", "s2": "mu1- o (1,5) o mu1+",
            "s3": "mu3- o (3,7) o mu3+", "s4": "(3,4)", "s5": "(7,8)",
            "iota1": "-(1,5)(2,6)", "iota2": "-(1,3)(2,4)(5,7)(6,8)",
        },
        actions={
            "iota1": _signed_perm(-1, (1, 0, 2, 3, 4, 5)),
            "iota2": _signed_perm(-1, (4, 5, 3, 2, 0, 1)),
        },
        reflections=tuple(f"s{i}" for i in range(6)),
        aut_relations=((("iota1",), 2), (("iota2",), 2), (("iota1", "iota2"), 4)),
        conjugations=("iota1", "iota2"),
    )

    # E4
    n = 7
    E["E4(1)"] = CatalogEntry(
        label="E4(1)",
        vectors=toric_data([(0, 1), (-1, 1), (-1, 0), (0, -1), (0, -1), (1, 0), (1, 0)]),
        roots=tuple(_vec(n, r) for r in [
            {2: 1, 4: 1, 6: 1}, {5: 1, 4: -1}, {1: 1, 4: 1}, {3: 1, 6: 1}, {7: 1, 6: -1},
        ]),
        delta=_vec(n, {i: 1 for i in range(1, 8)}),
        delta_decomps=((1, 1, 1, 1, 1),),
        norms=(-2,) * 5,
        edges={(1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 0): 1, (0, 1): 1},
        generators={
            "s0": "mu2- o mu4- o (4,6) o mu4+ o mu2+", "s1": "(4,5)",
            "s2": "mu1- o (1,4) o mu1+", "s3": "mu3- o (3,6) o mu3+", "s4": "(6,7)",
            "iota1": "sigma o mu4+", "iota2": "-(1,3)(4,6)(5,7)",
        },
        matrices={"sigma": (
            {1: 7, 7: 5, 5: 3, 3: 2, 2: 1, 4: 6, 6: 4},
            _iso_matrix(n, {1: {7: 1}, 2: {1: 1, 6: 1}, 3: {2: 1, 6: 1}, 4: {6: -1},
                            5: {3: 1}, 6: {4: 1}, 7: {5: 1}}),
        )},
        actions={
            "iota1": _signed_perm(1, (3, 4, 0, 1, 2)),
            "iota2": _signed_perm(-1, (0, 4, 3, 2, 1)),
        },
        reflections=tuple(f"s{i}" for i in range(5)),
        aut_relations=((("iota1",), 5), (("iota2",), 2), (("iota1", "iota2"), 2)),
        conjugations=("iota1", "iota2"),
    )

    # E3
    n = 6
    E["E3(1)"] = CatalogEntry(
        label="E3(1)",
        vectors=toric_data([(0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1), (1, 0)]),
        roots=tuple(_vec(n, r) for r in [
            {1: 1, 4: 1}, {2: 1, 5: 1}, {3: 1, 6: 1}, {1: 1, 3: 1, 5: 1}, {2: 1, 4: 1, 6: 1},
        ]),
        delta=_vec(n, {i: 1 for i in range(1, 7)}),
        delta_decomps=((1, 1, 1, 0, 0), (0, 0, 0, 1, 1)),
        norms=(-2,) * 5,
        edges={(0, 1): 1, (1, 2): 1, (0, 2): 1, (3, 4): 2},
        generators={
            "s0": "mu1- o (1,4) o mu1+", "s1": "mu2- o (2,5) o mu2+", "s2": "mu3- o (3,6) o mu3+",
            "s3": "mu1- o mu3- o (3,5) o mu3+ o mu1+", "s4": "mu2- o mu4- o (4,6) o mu4+ o mu2+",
            "iota1": "(1,2,3,4,5,6)", "iota2": "-(1,4)(2,3)(5,6)",
        },
        actions={
            "iota1": _signed_perm(1, (2, 0, 1, 4, 3)),
            "iota2": _signed_perm(-1, (0, 2, 1, 4, 3)),
        },
        reflections=tuple(f"s{i}" for i in range(5)),
        aut_relations=((("iota1",), 6), (("iota2",), 2), (("iota1", "iota2"), 2)),
        conjugations=("iota1", "iota2"),
    )

    # E2
    n = 5
    E["E2(1)"] = CatalogEntry(
        label="E2(1)",
        vectors=toric_data([(-1, 2), (-1, 0), (0, -1), (1, -1), (1, 0)]),
        roots=tuple(_vec(n, r) for r in [
            {1: 1, 3: 1, 4: 1}, {2: 1, 5: 1}, {1: 1, 3: 3, 4: -1, 5: 2}, {2: 1, 3: -2, 4: 2, 5: -1},
        ]),
        delta=_vec(n, {i: 1 for i in range(1, 6)}),
        delta_decomps=((1, 1, 0, 0), (0, 0, 1, 1)),
        norms=(-2, -2, -14, -14),
        edges={(0, 1): 2, (2, 3): 14},
        generators={
            "s0": "mu1- o mu3- o (3,4) o mu3+ o mu1+", "s1": "mu2- o (2,5) o mu2+",
            "tau": "sigma o mu3+", "iota": "-(2,5)(3,4) o tau",
        },
        named={"tau": "sigma o mu3+"},
        matrices={"sigma": (
            {1: 5, 5: 3, 3: 4, 4: 2, 2: 1},
            _iso_matrix(n, {1: {4: 1, 5: 1}, 2: {1: 1, 4: 1}, 3: {4: -1}, 4: {2: 1}, 5: {3: 1}}),
        )},
        actions={
            "tau": Action("explicit", 1, images=((1, 1, 0), (1, 0, 0), (1, 2, 1), (1, 3, -1))),
            "iota": _signed_perm(-1, (1, 0, 3, 2)),
        },
        reflections=("s0", "s1"),
        aut_relations=((("iota",), 2),),
        untested=("tau s_i tau^-1 = s_(tau(i)) and iota tau iota^-1 = tau^-1 are checked "
                  "on K° only; no presentation of the semidirect product is asserted",),
    )

    # E1
    n = 4
    E["E1(1)"] = CatalogEntry(
        label="E1(1)",
        vectors=toric_data([(-1, 2), (-1, -1), (1, -1), (1, 0)]),
        roots=(_vec(n, {1: 1, 3: 2, 4: -1}), _vec(n, {2: 1, 3: -1, 4: 2})),
        delta=_vec(n, {i: 1 for i in range(1, 5)}),
        delta_decomps=((1, 1),),
        norms=(-8, -8),
        edges={(0, 1): 8},
        generators={"tau": "sigma o mu3+", "iota": "-(1,2)(3,4)"},
        matrices={"sigma": (
            {1: 3, 3: 4, 4: 2, 2: 1},
            _iso_matrix(n, {1: {3: 1}, 2: {1: 1, 4: 2}, 3: {4: -1}, 4: {2: 1}}),
        )},
        actions={
            "tau": Action("explicit", 1, images=((1, 0, 1), (1, 1, -1))),
            "iota": _signed_perm(-1, (1, 0)),
        },
        aut_relations=((("iota",), 2),),
        untested=("iota tau iota^-1 = tau^-1 is checked on K° only",),
    )

    # E1'
    n = 4
    E["E1(1)'"] = CatalogEntry(
        label="E1(1)'",
        vectors=toric_data([(-1, 2), (-1, 0), (1, -2), (1, 0)]),
        roots=(_vec(n, {1: 1, 3: 1}), _vec(n, {2: 1, 4: 1})),
        delta=_vec(n, {i: 1 for i in range(1, 5)}),
        delta_decomps=((1, 1),),
        norms=(-2, -2),
        edges={(0, 1): 2},
        generators={
            "s0": "mu1- o (1,3) o mu1+", "s1": "mu2- o (2,4) o mu2+",
            "iota1": "(1,2,3,4)", "iota2": "-(1,3)",
        },
        actions={
            "iota1": _signed_perm(1, (1, 0)),
            "iota2": _signed_perm(-1, (0, 1)),
        },
        reflections=("s0", "s1"),
        aut_relations=((("iota1",), 4), (("iota2",), 2), (("iota1", "iota2"), 2)),
        untested=("conjugation relations iota s_i iota^-1 = s_j of the semidirect product "
                  "W(A1(1)) x| D8 are not printed and are not asserted",),
    )

    # E0
    n = 3
    E["E0(1)"] = CatalogEntry(
        label="E0(1)",
        vectors=toric_data([(-1, 2), (-1, -1), (2, -1)]),
        roots=(_vec(n, {1: 1, 2: 1, 3: 1}),),
        delta=_vec(n, {1: 1, 2: 1, 3: 1}),
        delta_decomps=((1,),),
        norms=(0,),
        edges={},
        generators={"iota1": "(1,2,3)", "iota2": "-(1,2)"},
        actions={
            "iota1": _signed_perm(1, (0,)),
            "iota2": _signed_perm(-1, (0,)),
        },
        aut_relations=((("iota1",), 3), (("iota2",), 2), (("iota1", "iota2"), 2)),
    )
    return E


CATALOG = _entries()
LABELS = tuple(CATALOG)

_ALIASES = {
    "e8": "E8(1)", "e7": "E7(1)", "e6": "E6(1)", "e5": "E5(1)", "e4": "E4(1)",
    "e3": "E3(1)", "e2": "E2(1)", "e1": "E1(1)", "e1'": "E1(1)'", "e1p": "E1(1)'", "e0": "E0(1)",
}


def catalog_entry(label: str) -> CatalogEntry:
    key = label if label in CATALOG else _ALIASES.get(label.lower().replace("(1)", ""))
    if key is None:
        raise UnknownLabel(f"unknown type label {label!r}")
    return CATALOG[key]


# -- reports ------------------------------------------------------------------


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witness: object = None

    def to_json(self) -> dict:
        d = {"check": self.name, "status": "pass" if self.ok else "fail"}
        if not self.ok and self.witness is not None:
            d["witness"] = self.witness
        return d


def computed_gram(entry: CatalogEntry, fan=None) -> la.Matrix:
    fan = fan or smooth_complete_fan(entry.vectors)
    bd = boundary_data(entry.vectors, fan)
    return tuple(
        tuple(k_pairing(entry.vectors, bd, a, b) for b in entry.roots) for a in entry.roots
    )


def verify_root_basis(entry: CatalogEntry) -> list[Check]:
    data = entry.vectors
    out = []
    bad = [i for i, a in enumerate(entry.roots) if not in_k_circ(data, a)]
    out.append(Check(f"{entry.label}: roots lie in K°", not bad, bad))
    nr = null_root(data)
    out.append(Check(f"{entry.label}: null root", nr.delta == entry.delta, list(nr.delta)))
    cw = [sum(c * v[t] for c, v in zip(nr.c, data.vectors)) for t in (0, 1)]
    out.append(Check(f"{entry.label}: sum c_i w_i = 0", cw == [0, 0], cw))
    gram = computed_gram(entry)
    out.append(Check(f"{entry.label}: Gram matches Dynkin data", gram == entry.expected_gram(),
                     [list(r) for r in gram]))
    for k, coeffs in enumerate(entry.delta_decomps):
        s = [sum(c * a[i] for c, a in zip(coeffs, entry.roots)) for i in range(entry.rank)]
        out.append(Check(f"{entry.label}: delta decomposition {k}", tuple(s) == entry.delta, s))
    kf = k_form(data)
    dd = kf.pair(nr.delta, nr.delta)
    out.append(Check(f"{entry.label}: delta^2 = 0", dd == 0, dd))
    return out


# -- actions on T_{K*} ---------------------------------------------------------


@dataclass(frozen=True)
class TKAction:
    """Action of an automorphism word on the characters of ``K°``.

    ``basis`` is a ZZ-basis of K° and ``images[i]`` the exponent of the
    pullback of ``z^{basis[i]}``.
    """

    basis: tuple
    images: tuple
    sign: int | None

    def apply(self, a: Sequence[int]) -> tuple:
        x = la.solve(la.from_columns(self.basis), a)
        if x is None or not la.is_integral(x):
            raise ValueError("vector is not in K°")
        out = [0] * len(a)
        for c, img in zip(la.to_int(x), self.images):
            for i, v in enumerate(img):
                out[i] += c * v
        return tuple(out)

    def matrix(self) -> la.Matrix:
        """Integer matrix on K°-coordinates (columns: images of basis vectors)."""
        b = la.from_columns(self.basis)
        return tuple(la.to_int(c) for c in la.transpose(
            tuple(la.solve(b, img) for img in self.images)))


def action_on_TK(data: ToricSeedData, word: ClusterWord, threshold=DEFAULT_SIMPLIFY_THRESHOLD) -> TKAction:
    if word.target != word.source:
        raise NotAutomorphism("word does not return to its source seed")
    xm = evaluate_word(word, threshold)
    basis = tuple(k_circ_basis(data))
    images = []
    for a in basis:
        r = xm.pullback(a)
        mono = r.as_monomial()
        if mono is None or mono[0] != 1:
            raise NotMonomial(f"pullback of z^{a} is {r.to_text()}")
        if not in_k_circ(data, mono[1]):
            raise NotMonomial(f"pullback of z^{a} leaves K°")
        images.append(mono[1])
    act = TKAction(basis, tuple(images), None)
    delta = null_root(data).delta
    img = act.apply(delta)
    sign = 1 if img == delta else (-1 if img == tuple(-x for x in delta) else None)
    return TKAction(basis, tuple(images), sign)


def expected_images(entry: CatalogEntry, name: str) -> tuple[tuple, int]:
    """Printed images of ``alpha_j`` under ``name`` and the printed sign."""
    gram = entry.expected_gram()
    roots = entry.roots
    if name in entry.reflections:
        i = int(name[1:])
        imgs = tuple(
            tuple(a + gram[i][j] * b for a, b in zip(roots[j], roots[i])) for j in range(len(roots))
        )
        return imgs, 1
    act = entry.actions[name]
    imgs = tuple(
        tuple(s * a + d * x for a, x in zip(roots[k], entry.delta)) for (s, k, d) in act.images
    )
    return imgs, act.sign


def verify_actions(entry: CatalogEntry, threshold=DEFAULT_SIMPLIFY_THRESHOLD) -> list[Check]:
    out = []
    gram = computed_gram(entry)
    seed = entry.seed()
    for name in entry.generators:
        label = f"{entry.label}: action of {name}"
        try:
            act = action_on_TK(entry.vectors, entry.word(name, seed), threshold)
        except (NotMonomial, NotAutomorphism) as exc:
            out.append(Check(label, False, f"{type(exc).__name__}: {exc}"))
            continue
        want, sign = expected_images(entry, name)
        got = tuple(act.apply(a) for a in entry.roots)
        ok = got == want and act.sign == sign
        out.append(Check(label, ok, {"images": [list(g) for g in got], "sign": act.sign}))
        if name in entry.reflections:
            # cross-check against the reflection formula with the computed form
            i = int(name[1:])
            ref = tuple(
                tuple(a + gram[i][j] * b for a, b in zip(entry.roots[j], entry.roots[i]))
                for j in range(len(entry.roots))
            )
            out.append(Check(f"{label} vs s(l) = l + (a.l) a", got == ref))
    return out


# -- relations ----------------------------------------------------------------


@dataclass(frozen=True)
class Relation:
    name: str
    word: tuple  # generator names in application order


def relations(entry: CatalogEntry) -> list[Relation]:
    """Weyl relations from the Dynkin data plus the automorphism relations.

    ``(a b)^m`` is listed with its generators in application order. For the
    conjugation relation ``g s_i g^-1 = s_{pi(i)}`` the cluster words compose
    contravariantly, so the trivial word is ``s_{pi(i)}^-1 o g^-1 o s_i o g``
    read right to left, where ``pi`` is the printed permutation of ``g``.
    """
    gram = entry.expected_gram()
    refl = list(entry.reflections)
    rels = []
    for s in refl:
        rels.append(Relation(f"{s}^2", (s, s)))
    for a, b in combinations(refl, 2):
        w = gram[int(a[1:])][int(b[1:])]
        if w == 0:
            rels.append(Relation(f"({a} {b})^2", (a, b) * 2))
        elif w == 1:
            rels.append(Relation(f"({a} {b})^3", (a, b) * 3))
    for names, k in entry.aut_relations:
        rels.append(Relation(f"({' '.join(names)})^{k}", tuple(names) * k))
    for g in entry.conjugations:
        perm = [k for (_, k, _) in entry.actions[g].images]
        for s in refl:
            i = int(s[1:])
            t = f"s{perm[i]}"
            rels.append(Relation(f"{g} {s} {g}^-1 = {t}", (g, s, f"{g}^-1", f"{t}^-1")))
    return rels


def relation_word(entry: CatalogEntry, rel: Relation, seed: Seed | None = None) -> ClusterWord:
    return entry.product(rel.word, seed)


def verify_relation(
    entry: CatalogEntry,
    word: ClusterWord,
    fast_path: bool = True,
    threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD,
) -> bool:
    return is_trivial_word(word, fast_path=fast_path, threshold=threshold)


def verify_relations(entry: CatalogEntry, fast_path=True, threshold=DEFAULT_SIMPLIFY_THRESHOLD) -> list[Check]:
    seed = entry.seed()
    out = []
    for rel in relations(entry):
        ok = verify_relation(entry, relation_word(entry, rel, seed), fast_path, threshold)
        out.append(Check(f"{entry.label}: relation {rel.name}", ok))
    return out


def pentagon_word() -> ClusterWord:
    """``(sigma o mu_1^+)^5`` on the rank-2 seed with ``{e_1, e_2} = 1``."""
    from .lattice import MutationStep, new_fixed_data

    fixed = new_fixed_data([[0, 1], [-1, 0]])
    seed = fixed.initial_seed()
    sigma = IsoStep.from_mapping({1: 2, 2: 1}, 1, [[0, 1], [-1, 0]])
    return ClusterWord(seed, (MutationStep(1, 1), sigma) * 5)


# -- suites ---------------------------------------------------------------------


def verify_fan_invariance(entry: CatalogEntry) -> list[Check]:
    """Null root and K°-Gram under the canonical fan and each one-step star subdivision."""
    data = entry.vectors
    fan = smooth_complete_fan(data)
    base_c = null_root(data, fan).c
    base_gram = computed_gram(entry, fan)
    out = []
    for j in range(len(fan.rays)):
        sub = star_subdivide(fan, j)
        c = null_root(data, sub).c
        gram = computed_gram(entry, sub)
        ok = c == base_c and gram == base_gram
        out.append(Check(f"{entry.label}: fan invariance, subdivision {j}", ok,
                         {"c": list(c), "gram": [list(r) for r in gram]}))
    return out


SUITES = ("roots", "fan", "actions", "relations")


def suite_tasks(label: str) -> list[tuple]:
    """Independent units of work for one type: one per suite, one per relation."""
    entry = catalog_entry(label)
    tasks = [(entry.label, s, None) for s in SUITES if s != "relations"]
    tasks.extend((entry.label, "relations", k) for k in range(len(relations(entry))))
    return tasks


def run_task(label: str, suite: str, index: int | None = None, fast_path: bool = True,
             threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD) -> list[Check]:
    if label == "pentagon":
        return [Check("pentagon: (sigma mu1+)^5", is_trivial_word(pentagon_word(), fast_path, threshold))]
    entry = catalog_entry(label)
    if suite == "roots":
        return verify_root_basis(entry)
    if suite == "fan":
        return verify_fan_invariance(entry)
    if suite == "actions":
        return verify_actions(entry, threshold)
    if suite == "relations":
        rels = relations(entry)
        chosen = rels if index is None else [rels[index]]
        seed = entry.seed()
        return [
            Check(f"{entry.label}: relation {r.name}",
                  verify_relation(entry, relation_word(entry, r, seed), fast_path, threshold))
            for r in chosen
        ]
    raise ValueError(f"unknown suite {suite!r}")


def verify_entry(entry: CatalogEntry, fast_path: bool = True,
                 threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD) -> list[Check]:
    out = []
    for s in SUITES:
        out.extend(run_task(entry.label, s, None, fast_path, threshold))
    return out
