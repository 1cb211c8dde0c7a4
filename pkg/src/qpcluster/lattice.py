"""Fixed data, seeds, signed mutations, signed seed isomorphisms and words.

Vectors of ``N°`` are written in the coordinates of the *initial* basis of
``N°``; a seed is the integer matrix whose ``i``-th column is its ``e_i``.
Labels are arbitrary hashables (usually ``1..n``); internally positions
``0..n-1`` in :attr:`FixedData.labels` are used.

Words (:class:`ClusterWord`) store their steps in the order they are applied,
so the groupoid composite ``g_n o ... o g_1`` is ``ClusterWord(src, [g_1, ..., g_n])``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Iterable, Sequence, Union

from . import linalg as la
from .errors import (
    BadSublattice,
    FormNotRespected,
    LatticeNotPreserved,
    NonIntegralExchange,
    NotBijective,
    NotComposable,
    NotSkewSymmetric,
    UnknownIndex,
)


def _bracket(x) -> int:
    return x if x > 0 else 0


@dataclass(frozen=True)
class FixedData:
    """Lattices ``N° ⊆ N`` with the skew form ``lam`` on the initial basis of ``N°``.

    ``n_basis`` (columns, in ``N° ⊗ QQ`` coordinates) is a basis of ``N``;
    ``None`` means ``N = N°``.
    """

    labels: tuple
    lam: la.Matrix
    n_basis: la.Matrix | None = None
    _index: dict = field(init=False, repr=False, compare=False, hash=False)
    _inv: la.Matrix = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        object.__setattr__(self, "_index", {lab: i for i, lab in enumerate(self.labels)})
        inv = la.identity(len(self.labels)) if self.n_basis is None else la.inverse(self.n_basis)
        object.__setattr__(self, "_inv", inv)

    @property
    def rank(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownIndex(f"unknown index {label!r}") from None

    def form(self, u: Sequence, v: Sequence):
        """``{u, v}`` for vectors in initial ``N°`` coordinates (rational allowed)."""
        return la.dot(u, la.mat_vec(self.lam, v))

    @property
    def char_basis(self) -> la.Matrix:
        """Columns: the character basis of ``N`` in ``N°`` coordinates."""
        return self.n_basis if self.n_basis is not None else la.identity(self.rank)

    @property
    def char_basis_inv(self) -> la.Matrix:
        return self._inv

    def to_char(self, v: Sequence) -> tuple:
        """Coordinates of ``v`` (``N°`` coordinates) in the character basis of ``N``."""
        if self.n_basis is None:
            return tuple(v)
        return la.mat_vec(self.char_basis_inv, v)

    def initial_seed(self) -> "Seed":
        return Seed(self, la.identity(self.rank))

    def with_n_basis(self, n_basis) -> "FixedData":
        return new_fixed_data(self.lam, n_basis, labels=self.labels)


def new_fixed_data(lam, n_basis=None, labels: Sequence[Hashable] | None = None) -> FixedData:
    """Validate and build :class:`FixedData`.

    >>> new_fixed_data([[0, 1], [-1, 0]]).rank
    2
    """
    lam = la.matrix(lam)
    n, m = la.shape(lam)
    if n != m:
        raise NotSkewSymmetric("lambda must be square")
    if not la.is_skew(lam):
        raise NotSkewSymmetric("lambda is not skew-symmetric")
    if not la.is_integral(lam):
        raise NonIntegralExchange("lambda is not integral on N°")
    if labels is None:
        labels = tuple(range(1, n + 1))
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise NotBijective("labels must be n distinct values")
    if n_basis is not None:
        n_basis = la.matrix(n_basis)
        if la.shape(n_basis) != (n, n) or la.det(n_basis) == 0:
            raise BadSublattice("n_basis must be an invertible square matrix")
        inv = la.inverse(n_basis)
        if not la.is_integral(inv):
            raise BadSublattice("N° is not contained in N")
        if not la.is_integral(la.mat_mul(lam, n_basis)):
            raise BadSublattice("{N, N°} is not contained in ZZ")
    return FixedData(labels, lam, n_basis)


@dataclass(frozen=True)
class Seed:
    """A labelled ZZ-basis of ``N°``: column ``i`` of ``basis`` is ``e_{labels[i]}``."""

    fixed: FixedData
    basis: la.Matrix

    def __post_init__(self):
        if abs(la.det(self.basis)) != 1 or not la.is_integral(self.basis):
            raise ValueError("seed basis must be unimodular")

    @property
    def rank(self) -> int:
        return self.fixed.rank

    def e(self, i: int) -> tuple:
        return la.column(self.basis, i)

    def exchange_matrix(self) -> la.Matrix:
        return exchange_matrix(self)

    def __eq__(self, other):
        return (
            isinstance(other, Seed)
            and self.fixed.labels == other.fixed.labels
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.fixed.labels, self.basis))


def exchange_matrix(seed: Seed) -> la.Matrix:
    b = seed.basis
    eps = la.mat_mul(la.mat_mul(la.transpose(b), seed.fixed.lam), b)
    return la.to_int(eps)


@dataclass(frozen=True)
class MutationStep:
    k: Hashable
    sign: int = 1

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    def inverse(self) -> "MutationStep":
        return MutationStep(self.k, -self.sign)

    def __str__(self):
        return f"mu{self.k}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class IsoStep:
    """A signed seed isomorphism as written in a word.

    ``perm`` maps labels to labels. Without ``matrix`` the isomorphism is
    ``e_i -> e_{perm(i)}`` on the current seed (so the target is the current
    seed); with ``matrix`` (initial ``N°`` coordinates) it is ``sigma^flat``
    itself and the target seed is computed.
    """

    perm: tuple  # tuple of (label, image) pairs, sorted by label
    sign: int = 1
    matrix: la.Matrix | None = None

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def mapping(self) -> dict:
        return dict(self.perm)

    @classmethod
    def from_mapping(cls, mapping: dict, sign: int = 1, matrix=None) -> "IsoStep":
        if matrix is not None:
            matrix = la.matrix(matrix)
        return cls(tuple(sorted(mapping.items(), key=lambda kv: str(kv[0]))), sign, matrix)

    def __str__(self):
        s = "" if self.sign > 0 else "-"
        body = ",".join(f"{a}->{b}" for a, b in self.perm if a != b) or "id"
        return f"{s}[{body}]" + ("*" if self.matrix is not None else "")


Step = Union[MutationStep, IsoStep]


def mutate_seed(seed: Seed, step: MutationStep | Hashable, sign: int | None = None) -> Seed:
    """Signed seed mutation ``mu_k^sign``.

    ``e'_k = -e_k`` and ``e'_i = e_i + [sign * eps_ik]_+ e_k`` for ``i != k``.
    """
    if not isinstance(step, MutationStep):
        step = MutationStep(step, 1 if sign is None else sign)
    k = seed.fixed.index(step.k)
    eps = exchange_matrix(seed)
    ek = seed.e(k)
    cols = []
    for i in range(seed.rank):
        ei = seed.e(i)
        if i == k:
            cols.append(tuple(-x for x in ek))
        else:
            c = _bracket(step.sign * eps[i][k])
            cols.append(tuple(x + c * y for x, y in zip(ei, ek)) if c else ei)
    return Seed(seed.fixed, la.from_columns(cols))


def mutate_matrix(eps: la.Matrix, k: int) -> la.Matrix:
    """Matrix mutation rule on a skew-symmetric exchange matrix (0-based ``k``)."""
    n = len(eps)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-eps[i][j])
            else:
                row.append(
                    eps[i][j]
                    + _bracket(eps[i][k]) * _bracket(eps[k][j])
                    - _bracket(-eps[i][k]) * _bracket(-eps[k][j])
                )
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class SeedIsomorphism:
    """A validated signed seed isomorphism ``sign * sigma: source -> target``.

    ``matrix`` is ``sigma^flat`` in initial ``N°`` coordinates; ``perm`` holds
    positions (``perm[i]`` is the position of ``sigma(labels[i])``).
    """

    perm: tuple[int, ...]
    matrix: la.Matrix
    sign: int
    source: Seed
    target: Seed

    def step(self) -> IsoStep:
        labels = self.source.fixed.labels
        return IsoStep.from_mapping(
            {labels[i]: labels[j] for i, j in enumerate(self.perm)}, self.sign, self.matrix
        )


def _perm_positions(fixed: FixedData, mapping: dict) -> tuple[int, ...]:
    full = {lab: mapping.get(lab, lab) for lab in fixed.labels}
    try:
        perm = tuple(fixed.index(full[lab]) for lab in fixed.labels)
    except Exception as exc:
        raise NotBijective(str(exc)) from None
    if sorted(perm) != list(range(fixed.rank)) or any(k not in full for k in mapping):
        raise NotBijective("perm is not a bijection of the index set")
    return perm


def make_isomorphism(seed: Seed, perm: dict | IsoStep, sign: int = 1, matrix=None) -> SeedIsomorphism:
    """Validate a signed seed isomorphism starting at ``seed``.

    Raises FormNotRespected unless ``eps'_{sigma(i) sigma(j)} = sign * eps_ij``
    (equivalently ``{s n, s n'} = sign {n, n'}``), LatticeNotPreserved when
    ``sigma^flat`` does not restrict to automorphisms of ``N°`` and ``N``.
    """
    if isinstance(perm, IsoStep):
        sign, matrix, perm = perm.sign, perm.matrix, perm.mapping
    fixed = seed.fixed
    pos = _perm_positions(fixed, perm)
    n = fixed.rank
    if matrix is None:
        p = la.from_columns([tuple(1 if r == pos[i] else 0 for r in range(n)) for i in range(n)])
        m = la.mat_mul(la.mat_mul(seed.basis, p), la.inverse(seed.basis))
    else:
        m = la.matrix(matrix)
        if la.shape(m) != (n, n):
            raise NotBijective("isomorphism matrix has the wrong shape")
    if not la.is_integral(m) or abs(la.det(m)) != 1:
        raise LatticeNotPreserved("sigma^flat does not restrict to an automorphism of N°")
    m = la.to_int(m)
    if fixed.n_basis is not None:
        mn = la.mat_mul(la.mat_mul(fixed.char_basis_inv, m), fixed.char_basis)
        if not la.is_integral(mn) or abs(la.det(mn)) != 1:
            raise LatticeNotPreserved("sigma^flat does not preserve N")
    lam = fixed.lam
    pulled = la.mat_mul(la.mat_mul(la.transpose(m), lam), m)
    if pulled != tuple(tuple(sign * x for x in row) for row in lam):
        raise FormNotRespected("sigma^flat does not respect the form up to the sign")
    # target: e'_{sigma(i)} = sigma^flat(e_i)
    images = [la.mat_vec(m, seed.e(i)) for i in range(n)]
    cols = [None] * n
    for i in range(n):
        cols[pos[i]] = images[i]
    target = Seed(fixed, la.from_columns(cols))
    return SeedIsomorphism(pos, m, sign, seed, target)


def isomorphism_between(source: Seed, target: Seed, mapping: dict, sign: int) -> SeedIsomorphism:
    """The isomorphism with the given index bijection carrying ``source`` onto ``target``."""
    fixed = source.fixed
    pos = _perm_positions(fixed, mapping)
    n = fixed.rank
    p = la.from_columns([tuple(1 if r == pos[i] else 0 for r in range(n)) for i in range(n)])
    m = la.mat_mul(la.mat_mul(target.basis, p), la.inverse(source.basis))
    iso = make_isomorphism(source, mapping, sign, m)
    assert iso.target == target
    return iso


def t_iso(seed: Seed, k: Hashable, sign: int) -> Seed:
    """Target seed of ``t_k^sign``: ``e_i -> e_i + sign * eps_ik e_k``."""
    i_k = seed.fixed.index(k)
    eps = exchange_matrix(seed)
    ek = seed.e(i_k)
    cols = [
        tuple(x + sign * eps[i][i_k] * y for x, y in zip(seed.e(i), ek)) for i in range(seed.rank)
    ]
    return Seed(seed.fixed, la.from_columns(cols))


def apply_step(seed: Seed, step: Step) -> Seed:
    if isinstance(step, MutationStep):
        return mutate_seed(seed, step)
    return make_isomorphism(seed, step).target


@dataclass(frozen=True)
class ClusterWord:
    """A seed cluster transformation: steps applied left to right from ``source``."""

    source: Seed
    steps: tuple = field(default_factory=tuple)

    def __post_init__(self):
        object.__setattr__(self, "steps", tuple(self.steps))

    def seeds(self) -> list[Seed]:
        """Source, then the target of each step."""
        out = [self.source]
        for st in self.steps:
            out.append(apply_step(out[-1], st))
        return out

    @property
    def target(self) -> Seed:
        return self.seeds()[-1]

    def __len__(self):
        return len(self.steps)

    def then(self, other: "ClusterWord") -> "ClusterWord":
        """``other o self``: first this word, then ``other``."""
        return compose_word(other, self)

    def __pow__(self, n: int) -> "ClusterWord":
        if n < 0:
            return invert_word(self) ** (-n)
        return ClusterWord(self.source, self.steps * n)

    def __str__(self):
        return " o ".join(str(s) for s in reversed(self.steps)) or "id"


def compose_word(*words: ClusterWord) -> ClusterWord:
    """Groupoid composite ``words[0] o words[1] o ... o words[-1]``."""
    if not words:
        raise ValueError("nothing to compose")
    ordered = list(reversed(words))
    steps: list = []
    for prev, nxt in zip(ordered, ordered[1:]):
        if nxt.source != prev.target:
            raise NotComposable("target of the inner word is not the source of the outer word")
    for w in ordered:
        steps.extend(w.steps)
    return ClusterWord(ordered[0].source, tuple(steps))


def invert_word(word: ClusterWord) -> ClusterWord:
    seeds = word.seeds()
    inv_steps = []
    for st, src in zip(reversed(word.steps), reversed(seeds[:-1])):
        if isinstance(st, MutationStep):
            inv_steps.append(st.inverse())
        elif st.matrix is None:
            inv_steps.append(IsoStep.from_mapping({b: a for a, b in st.perm}, st.sign))
        else:
            iso = make_isomorphism(src, st)
            labels = src.fixed.labels
            mapping = {labels[j]: labels[i] for i, j in enumerate(iso.perm)}
            inv_steps.append(IsoStep.from_mapping(mapping, st.sign, la.to_int(la.inverse(iso.matrix))))
    return ClusterWord(seeds[-1], tuple(inv_steps))


def normalize_word(word: ClusterWord) -> ClusterWord:
    """Rewrite as ``(sign sigma) o mu^+ o ... o mu^+`` with one trailing isomorphism.

    Each mutation is moved to the left of the accumulated isomorphism with
    ``sign sigma o mu_k^e = mu_{sigma(k)}^{sign e} o sign sigma``; a resulting
    ``mu^-`` is written as ``t^- o mu^+`` and the direct isomorphism ``t^-`` is
    absorbed into the final isomorphism, whose matrix is recovered from the
    end seeds.
    """
    fixed = word.source.fixed
    labels = fixed.labels
    sigma = {lab: lab for lab in labels}
    sign = 1
    current = word.source  # actual seed of the input word
    head = word.source  # end of the mu^+ chain
    out: list[Step] = []
    for st in word.steps:
        if isinstance(st, MutationStep):
            inv = {v: k for k, v in sigma.items()}
            j = inv[st.k]
            out.append(MutationStep(j, 1))
            head = mutate_seed(head, j, 1)
            current = mutate_seed(current, st)
        else:
            iso = make_isomorphism(current, st)
            mapping = {labels[i]: labels[p] for i, p in enumerate(iso.perm)}
            sigma = {lab: mapping[sigma[lab]] for lab in labels}
            sign *= st.sign
            current = iso.target
    iso = isomorphism_between(head, current, sigma, sign)
    out.append(iso.step())
    return ClusterWord(word.source, tuple(out))


def word_from_steps(seed: Seed, steps: Iterable[Step]) -> ClusterWord:
    return ClusterWord(seed, tuple(steps))


# -- textual notation ---------------------------------------------------------

def parse_cycles(text: str, label_type=int) -> dict:
    """Cycle notation ``(1,5)(2,8)`` to a mapping of labels."""
    mapping: dict = {}
    text = text.replace(" ", "")
    if text in ("", "id", "()"):
        return mapping
    for chunk in text.strip("()").split(")("):
        items = [label_type(x) for x in chunk.split(",") if x]
        for a, b in zip(items, items[1:] + items[:1]):
            if a in mapping:
                raise NotBijective(f"label {a!r} repeated in cycles")
            mapping[a] = b
    return mapping


def parse_word(seed: Seed, text: str, named: dict[str, Sequence[Step]] | None = None) -> ClusterWord:
    """Parse the composition notation ``mu1- o -(1,5)(2,8) o mu1+``.

    Factors are written right to left as in groupoid composition; ``named``
    supplies extra factors (e.g. an explicit-matrix ``sigma``) by name, given
    as step lists in application order.
    """
    named = named or {}
    label_type = type(seed.fixed.labels[0])
    factors = [f.strip() for f in text.split(" o ") if f.strip()]
    steps: list[Step] = []
    for f in reversed(factors):
        if f in named:
            steps.extend(named[f])
        elif f.startswith("mu"):
            body, sgn = f[2:-1], f[-1]
            if sgn not in "+-":
                raise ValueError(f"mutation {f!r} needs an explicit sign")
            steps.append(MutationStep(label_type(body), 1 if sgn == "+" else -1))
        else:
            sgn = -1 if f.startswith("-") else 1
            steps.append(IsoStep.from_mapping(parse_cycles(f.lstrip("+-"), label_type), sgn))
    return ClusterWord(seed, tuple(steps))


def rational_str(x) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
