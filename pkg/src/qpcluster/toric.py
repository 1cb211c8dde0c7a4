"""Seeds from plane vectors, smooth fans, null roots and the K° pairing."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Sequence

from . import linalg as la
from .errors import (
    InconsistentFan,
    NoPositiveKernelVector,
    NotPositivelySpanning,
    NotPrimitive,
    NotQPainleveType,
    RankDeficient,
    SingularSystem,
    UnrecognizedInvariants,
)
from .lattice import FixedData, Seed, new_fixed_data

Vec2 = tuple  # tuple[int, int]

QPAINLEVE = "QPainleve"
NEGATIVE_DEFINITE = "NegativeDefinite"
INDEFINITE = "Indefinite"

TYPE_LABELS = (
    "E0(1)", "E1(1)", "E1(1)'", "E2(1)", "E3(1)",
    "E4(1)", "E5(1)", "E6(1)", "E7(1)", "E8(1)",
)


def wedge(u: Sequence[int], v: Sequence[int]) -> int:
    return u[0] * v[1] - u[1] * v[0]


@dataclass(frozen=True)
class ToricSeedData:
    vectors: tuple
    orientation: int = 1
    labels: tuple | None = None

    @property
    def index_labels(self) -> tuple:
        return self.labels if self.labels is not None else tuple(range(1, len(self.vectors) + 1))


def toric_data(vectors, orientation: int = 1, labels=None) -> ToricSeedData:
    """Validate plane vectors: each primitive, jointly of rank 2."""
    vecs = tuple((int(a), int(b)) for a, b in vectors)
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    for v in vecs:
        if gcd(*v) != 1:
            raise NotPrimitive(f"{v} is not primitive")
    if la.rank(la.transpose(vecs) if vecs else ()) < 2:
        raise RankDeficient("vectors do not span a rank-2 sublattice")
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != len(vecs):
            raise ValueError("one label per vector")
    return ToricSeedData(vecs, orientation, labels)


def seed_from_vectors(data: ToricSeedData) -> tuple[FixedData, Seed]:
    """``{e_i, e_j} = orientation * (w_i ^ w_j)`` on ``N° = ZZ^I``."""
    w = data.vectors
    lam = [[data.orientation * wedge(a, b) for b in w] for a in w]
    fixed = new_fixed_data(lam, labels=data.index_labels)
    return fixed, fixed.initial_seed()


# -- fans ---------------------------------------------------------------------


def _ccw_from_top(u: Vec2, v: Vec2) -> int:
    """Compare by counterclockwise angle measured from the ray (0, 1)."""
    ru, rv = (u[1], -u[0]), (v[1], -v[0])

    def half(p):
        return 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1

    hu, hv = half(ru), half(rv)
    if hu != hv:
        return hu - hv
    c = wedge(ru, rv)
    return -1 if c > 0 else (1 if c < 0 else 0)


def sort_rays(rays) -> list:
    """Distinct rays counterclockwise, starting at the first at or after (0, 1)."""
    return sorted(set(rays), key=cmp_to_key(_ccw_from_top))


def _xgcd(a: int, b: int):
    if b == 0:
        return (a, 1, 0) if a >= 0 else (-a, -1, 0)
    g, x, y = _xgcd(b, a % b)
    return g, y, x - (a // b) * y


def _hj_sector(u: Vec2, v: Vec2) -> list:
    """Rays inserted strictly between ``u`` and ``v`` by Hirzebruch-Jung."""
    d = wedge(u, v)
    if d == 1:
        return []
    # p0 with det(u, p0) = 1
    g, s, t = _xgcd(u[0], u[1])
    p0 = (-t, s)
    assert wedge(u, p0) == 1
    a = wedge(p0, v) % d
    k = (a - wedge(p0, v)) // d
    p = (p0[0] + k * u[0], p0[1] + k * u[1])
    assert wedge(u, p) == 1 and 1 <= wedge(p, v) < d
    return [p] + _hj_sector(p, v)


@dataclass(frozen=True)
class Fan2D:
    rays: tuple

    def __len__(self):
        return len(self.rays)


def smooth_complete_fan(data: ToricSeedData) -> Fan2D:
    """Canonical smooth complete fan through every ``w_i``.

    Raises NotPositivelySpanning when some angular gap between consecutive
    data rays is at least pi.
    """
    rays = sort_rays(data.vectors)
    out: list = []
    for i, u in enumerate(rays):
        v = rays[(i + 1) % len(rays)]
        if len(rays) < 3 or wedge(u, v) <= 0:
            raise NotPositivelySpanning("vectors do not positively span the plane")
        out.append(u)
        out.extend(_hj_sector(u, v))
    fan = Fan2D(tuple(out))
    check_fan(fan)
    return fan


def star_subdivide(fan: Fan2D, j: int) -> Fan2D:
    """Insert ``w'_j + w'_{j+1}`` into the cone spanned by rays ``j`` and ``j+1`` (0-based)."""
    s = len(fan.rays)
    u, v = fan.rays[j % s], fan.rays[(j + 1) % s]
    rays = list(fan.rays)
    rays.insert(j % s + 1, (u[0] + v[0], u[1] + v[1]))
    return Fan2D(tuple(rays))


def check_fan(fan: Fan2D) -> None:
    """Smooth and complete with total turning exactly one revolution."""
    s = len(fan.rays)
    if s < 3:
        raise InconsistentFan("a complete fan needs at least three rays")
    turns = 0
    for j in range(s):
        u, v = fan.rays[j], fan.rays[(j + 1) % s]
        if wedge(u, v) != 1:
            raise InconsistentFan(f"sector {u}, {v} is not smooth")
        if (u[1] > 0 or (u[1] == 0 and u[0] > 0)) and not (v[1] > 0 or (v[1] == 0 and v[0] > 0)):
            turns += 1
    if turns != 1:
        raise InconsistentFan("rays do not wind once around the origin")


# -- boundary data ------------------------------------------------------------


@dataclass(frozen=True)
class BoundaryData:
    fan: Fan2D
    self_int: tuple  # n'_j
    mult: tuple  # m'_j
    H: la.Matrix


def _cyclic_adjacency(s: int, diag: Sequence[int]) -> la.Matrix:
    rows = []
    for i in range(s):
        row = [0] * s
        row[i] = diag[i]
        row[(i - 1) % s] = 1
        row[(i + 1) % s] = 1
        rows.append(tuple(row))
    return tuple(rows)


def boundary_data(data: ToricSeedData, fan: Fan2D) -> BoundaryData:
    check_fan(fan)
    rays = fan.rays
    s = len(rays)
    selfint = []
    for j in range(s):
        w, a, b = rays[j], rays[j - 1], rays[(j + 1) % s]
        t = (a[0] + b[0], a[1] + b[1])
        if wedge(t, w) != 0:
            raise InconsistentFan("neighbouring rays do not satisfy the colinearity relation")
        k = t[0] // w[0] if w[0] else t[1] // w[1]
        if (k * w[0], k * w[1]) != t:
            raise InconsistentFan("non-integral self-intersection")
        selfint.append(-k)
    pos = {r: j for j, r in enumerate(rays)}
    mult = [0] * s
    for v in data.vectors:
        if v not in pos:
            raise InconsistentFan(f"{v} is not a ray of the fan")
        mult[pos[v]] += 1
    diag = [n - m for n, m in zip(selfint, mult)]
    H = _cyclic_adjacency(s, diag)
    assert sum(mult) == len(data.vectors)
    return BoundaryData(fan, tuple(selfint), tuple(mult), H)


def toric_intersection_matrix(bd: BoundaryData) -> la.Matrix:
    return _cyclic_adjacency(len(bd.self_int), bd.self_int)


# -- definiteness -------------------------------------------------------------


def qp_type_check(H) -> str:
    """Negative semidefinite with nontrivial kernel, negative definite, or neither.

    Symmetric Gaussian elimination on ``-H`` with diagonal pivots: a negative
    pivot, or a zero pivot with a nonzero row, rules out semidefiniteness.
    """
    a = [[Fraction(-x) for x in row] for row in H]
    n = len(a)
    if not la.is_symmetric(tuple(tuple(r) for r in a)):
        raise ValueError("H must be symmetric")
    kernel = 0
    alive = list(range(n))
    while alive:
        k = alive.pop(0)
        p = a[k][k]
        if p < 0:
            return INDEFINITE
        if p == 0:
            if any(a[k][j] != 0 for j in alive):
                return INDEFINITE
            kernel += 1
            continue
        for i in alive:
            if a[i][k]:
                f = a[i][k] / p
                for j in alive:
                    a[i][j] -= f * a[k][j]
    return QPAINLEVE if kernel else NEGATIVE_DEFINITE


# -- null root ----------------------------------------------------------------


@dataclass(frozen=True)
class NullRoot:
    c_prime: tuple
    c: tuple
    delta: tuple


def null_root(data: ToricSeedData, fan: Fan2D | None = None, bd: BoundaryData | None = None) -> NullRoot:
    try:
        fan = fan or smooth_complete_fan(data)
    except NotPositivelySpanning as exc:
        raise NotQPainleveType(str(exc)) from None
    bd = bd or boundary_data(data, fan)
    if qp_type_check(bd.H) != QPAINLEVE:
        raise NotQPainleveType("boundary intersection matrix is not of q-Painleve type")
    ker = la.rational_kernel(bd.H)
    if len(ker) != 1:
        raise NoPositiveKernelVector(f"kernel of H has dimension {len(ker)}")
    cp = la.primitive(ker[0])
    if all(x <= 0 for x in cp):
        cp = tuple(-x for x in cp)
    if not all(x > 0 for x in cp):
        raise NoPositiveKernelVector("kernel vector of H has mixed signs")
    assert all(x == 0 for x in la.mat_vec(bd.H, cp))
    pos = {r: j for j, r in enumerate(fan.rays)}
    c = tuple(cp[pos[v]] for v in data.vectors)
    assert sum(ci * v[0] for ci, v in zip(c, data.vectors)) == 0
    assert sum(ci * v[1] for ci, v in zip(c, data.vectors)) == 0
    return NullRoot(tuple(cp), c, c)


# -- K° and its form ----------------------------------------------------------


def k_circ_basis(data: ToricSeedData) -> list[tuple]:
    """ZZ-basis of ``{a in ZZ^I : sum a_i w_i = 0}``."""
    return la.integer_kernel(la.transpose(data.vectors))


def in_k_circ(data: ToricSeedData, a: Sequence[int]) -> bool:
    return all(sum(x * v[t] for x, v in zip(a, data.vectors)) == 0 for t in (0, 1))


@dataclass(frozen=True)
class KForm:
    """The symmetric form on ``K°``, with ``gram`` on ``basis``."""

    data: ToricSeedData
    bd: BoundaryData
    basis: tuple
    gram: la.Matrix

    def curve_class(self, a: Sequence[int]) -> tuple:
        """Coefficients ``x_j`` of ``C_a = sum x_j D'_j`` (one particular solution)."""
        return _curve_class(self.data, self.bd, a)

    def pair(self, a: Sequence[int], b: Sequence[int]):
        return k_pairing(self.data, self.bd, a, b)

    def coords(self, a: Sequence[int]) -> tuple:
        x = la.solve(la.from_columns(self.basis), a)
        if x is None or not la.is_integral(x):
            raise ValueError("vector is not in K°")
        return la.to_int(x)


def _target(data: ToricSeedData, bd: BoundaryData, a: Sequence[int]) -> list:
    pos = {r: j for j, r in enumerate(bd.fan.rays)}
    t = [0] * len(bd.fan.rays)
    for ai, v in zip(a, data.vectors):
        t[pos[v]] += ai
    return t


def _curve_class(data, bd, a) -> tuple:
    t = _target(data, bd, a)
    T = toric_intersection_matrix(bd)
    for ker in la.rational_kernel(T):
        if la.dot(ker, t) != 0:
            raise SingularSystem("target is not orthogonal to the kernel of the intersection matrix")
    x = la.solve(T, t)
    if x is None:
        raise SingularSystem("no curve class with the prescribed intersections")
    return x


def k_pairing(data: ToricSeedData, bd: BoundaryData, a: Sequence[int], b: Sequence[int]):
    """``C_a . C_b - sum a_i b_i``."""
    x = _curve_class(data, bd, a)
    tb = _target(data, bd, b)
    _curve_class(data, bd, b)
    return la.norm(la.dot(x, tb) - sum(p * q for p, q in zip(a, b)))


def k_form(data: ToricSeedData, fan: Fan2D | None = None, bd: BoundaryData | None = None) -> KForm:
    fan = fan or smooth_complete_fan(data)
    bd = bd or boundary_data(data, fan)
    basis = tuple(k_circ_basis(data))
    gram = tuple(tuple(k_pairing(data, bd, a, b) for b in basis) for a in basis)
    assert la.is_symmetric(gram)
    return KForm(data, bd, basis, gram)


# -- classification -----------------------------------------------------------


def _binary_min_norm(q: la.Matrix) -> int:
    """Maximal nonzero value (closest to zero) of a negative definite binary form."""
    a, b, c = -q[0][0], -q[0][1], -q[1][1]
    # Lagrange reduction of the positive form a x^2 + 2 b x y + c y^2
    while True:
        if a > c:
            a, c = c, a
        if abs(2 * b) > a:
            k = round(Fraction(b, a))
            c = c - 2 * k * b + k * k * a
            b = b - k * a
            continue
        if a <= c:
            return -a


# (quotient rank, |det| of the quotient Gram, minimal norm or None) -> label
INVARIANT_TABLE = {
    (0, 1, None): "E0(1)",
    (1, 8, -8): "E1(1)",
    (1, 2, -2): "E1(1)'",
    (2, 7, -2): "E2(1)",
    (3, 6, None): "E3(1)",
    (4, 5, None): "E4(1)",
    (5, 4, None): "E5(1)",
    (6, 3, None): "E6(1)",
    (7, 2, None): "E7(1)",
    (8, 1, None): "E8(1)",
}


@dataclass(frozen=True)
class Classification:
    label: str
    quotient_rank: int
    quotient_det: int
    min_norm: int | None
    quotient_gram: la.Matrix


def quotient_gram(kf: KForm, delta: Sequence[int]) -> la.Matrix:
    """Gram matrix of ``K° / ZZ delta`` on representatives of a basis."""
    d = kf.coords(delta)
    u = la.complete_to_basis(la.primitive(d))
    basis = la.mat_mul(la.from_columns(kf.basis), u)
    reps = [la.column(basis, j) for j in range(1, len(kf.basis))]
    return tuple(tuple(kf.pair(a, b) for b in reps) for a in reps)


def classify_type(data: ToricSeedData, fan: Fan2D | None = None) -> Classification:
    nr = null_root(data, fan)
    fan = fan or smooth_complete_fan(data)
    kf = k_form(data, fan)
    q = quotient_gram(kf, nr.delta)
    r = len(q)
    det = abs(la.det(q)) if r else 1
    mn = None
    if r == 1:
        mn = q[0][0]
    elif r == 2:
        mn = _binary_min_norm(q)
    key = (r, det, mn)
    if key not in INVARIANT_TABLE:
        raise UnrecognizedInvariants(f"invariants {key} match no known type")
    return Classification(INVARIANT_TABLE[key], r, det, mn, q)
