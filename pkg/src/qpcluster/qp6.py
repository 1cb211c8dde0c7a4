"""The sixth q-Painlevé system on the E5(1) seed.

The torus is taken over the finer lattice ``N`` spanned by the quarter roots
``alpha_i / 4`` and the two vectors ``(e1+e2-e5-e6)/4``, ``(e3+e4-e7-e8)/4``,
so ``f``, ``g`` and the ``b_i`` are honest characters. A point of the torus
is the tuple of values of the eight basis characters
``(t_0, ..., t_5, f, g)`` with ``t_i^4 = a_i``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import flint

from . import linalg as la
from .catalog import CatalogEntry, catalog_entry
from .errors import LatticeValidationFailed, NonGenericParameters, PoleAtPoint, QPClusterError
from .lattice import ClusterWord, Seed, new_fixed_data
from .symbolic import (
    DEFAULT_SIMPLIFY_THRESHOLD,
    RationalFn,
    WordPointMap,
    XMap,
    evaluate_word,
    is_trivial_word,
    ratfn_equal,
    xmap_evaluate_exact,
)

C1_WORD = ("iota3", "s0", "s1", "s4", "s5", "s3", "s4", "s5", "s3")
C2_WORD = ("iota1", "s4", "s5", "s0", "s1", "s2", "s0", "s1", "s2")
IOTA3 = "-(3,7)(4,8)"

# printed expansion of q = z^delta in the a_i (see notes on the a_3 exponent)
PRINTED_Q_EXPONENTS = (1, 1, 2, 3, 1, 1)


@dataclass(frozen=True)
class QP6Context:
    entry: CatalogEntry
    seed: Seed
    n_basis: la.Matrix
    chars: dict  # name -> exponent vector in the N basis
    c1: ClusterWord
    c2: ClusterWord

    def char(self, name: str) -> RationalFn:
        return RationalFn.monomial(self.chars[name])

    def value(self, name: str, point: Sequence):
        return RationalFn.monomial(self.chars[name]).evaluate(point)


def _word(entry: CatalogEntry, seed: Seed, names: Sequence[str]) -> ClusterWord:
    from .lattice import parse_word

    steps: list = []
    for nm in names:
        w = parse_word(seed, IOTA3) if nm == "iota3" else entry.word(nm, seed)
        steps.extend(w.steps)
    return ClusterWord(seed, tuple(steps))


def build_qp6_context() -> QP6Context:
    entry = catalog_entry("E5(1)")
    n = entry.rank
    cols = [tuple(Fraction(x, 4) for x in a) for a in entry.roots]
    f_vec = tuple(Fraction(x, 4) for x in (1, 1, 0, 0, -1, -1, 0, 0))
    g_vec = tuple(Fraction(x, 4) for x in (0, 0, 1, 1, 0, 0, -1, -1))
    n_basis = la.from_columns(cols + [f_vec, g_vec])
    base = entry.seed()
    try:
        fixed = new_fixed_data(base.fixed.lam, n_basis, labels=base.fixed.labels)
    except QPClusterError as exc:
        raise LatticeValidationFailed(str(exc)) from None
    seed = fixed.initial_seed()

    def coords(v):
        x = fixed.to_char(v)
        if not la.is_integral(x):
            raise LatticeValidationFailed(f"{v} is not in N")
        return la.to_int(x)

    e = [tuple(1 if i == j else 0 for i in range(n)) for j in range(n)]
    chars = {f"a{i}": coords(a) for i, a in enumerate(entry.roots)}
    chars["f"] = coords(f_vec)
    chars["g"] = coords(g_vec)
    chars["q"] = coords(entry.delta)
    x = {i + 1: coords(e[i]) for i in range(n)}
    for i in range(1, 9):
        chars[f"X{i}"] = x[i]
    neg = lambda v: tuple(-t for t in v)  # noqa: E731
    add = la.vadd
    chars["b1"] = add(neg(x[1]), chars["f"])
    chars["b2"] = add(neg(x[2]), chars["f"])
    chars["b3"] = add(neg(x[3]), chars["g"])
    chars["b4"] = add(neg(x[4]), chars["g"])
    chars["b5"] = add(x[5], chars["f"])
    chars["b6"] = add(x[6], chars["f"])
    chars["b7"] = add(x[7], chars["g"])
    chars["b8"] = add(x[8], chars["g"])
    c1 = _word(entry, seed, C1_WORD)
    c2 = _word(entry, seed, C2_WORD)
    for w in (c1, c2):
        if w.target != seed:
            raise LatticeValidationFailed("c1/c2 do not return to the E5 seed")
    return QP6Context(entry, seed, n_basis, chars, c1, c2)


# quarter-root forms b_i = (prod a_j^{k_j})^{1/4}
B_QUARTER_ROOTS = {
    "b1": (1, -1, -2, 0, 0, 0), "b2": (-3, -1, -2, 0, 0, 0),
    "b3": (0, 0, 0, -2, 1, -1), "b4": (0, 0, 0, -2, -3, -1),
    "b5": (1, -1, 2, 0, 0, 0), "b6": (1, 3, 2, 0, 0, 0),
    "b7": (0, 0, 0, 2, 1, -1), "b8": (0, 0, 0, 2, 1, 3),
}


def qp6_maps(ctx: QP6Context, threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD) -> tuple[XMap, XMap]:
    return evaluate_word(ctx.c1, threshold), evaluate_word(ctx.c2, threshold)


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        d = {"check": self.name, "status": "pass" if self.ok else "fail"}
        if self.detail:
            d["detail"] = self.detail
        return d


def ffbar_sides(ctx: QP6Context, m1: XMap) -> tuple[RationalFn, RationalFn]:
    c = ctx.char
    lhs = c("f") * m1.pullback(ctx.chars["f"])
    rhs = (c("b7") * c("b8") * (c("g") + c("b3")) * (c("g") + c("b4"))
           / ((c("g") + c("b7")) * (c("g") + c("b8"))))
    return lhs, rhs


def gglow_sides(ctx: QP6Context, m2: XMap) -> tuple[RationalFn, RationalFn]:
    c = ctx.char
    lhs = c("g") * m2.pullback(ctx.chars["g"])
    rhs = (c("b1") * c("b2") * (c("f") + c("b5")) * (c("f") + c("b6"))
           / ((c("f") + c("b1")) * (c("f") + c("b2"))))
    return lhs, rhs


def verify_qp6_identities(
    ctx: QP6Context,
    maps: tuple[XMap, XMap] | None = None,
    fast_path: bool = True,
    threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD,
    random_points: int = 20,
    seed: int = 6,
) -> list[IdentityCheck]:
    import random

    m1, m2 = maps or qp6_maps(ctx, threshold)
    out = []
    for name, w in (("c1^2 trivial", ctx.c1), ("c2^2 trivial", ctx.c2)):
        ww = ClusterWord(w.source, w.steps * 2)
        out.append(IdentityCheck(name, is_trivial_word(ww, fast_path, threshold)))
    q = ctx.chars["q"]
    qinv = tuple(-x for x in q)
    for mname, m, moved in (("c1", m1, 2), ("c2", m2, 3)):
        for i in range(6):
            a = ctx.chars[f"a{i}"]
            want = la.vadd(a, qinv) if i == moved else a
            out.append(IdentityCheck(
                f"{mname}: pullback of a{i}",
                ratfn_equal(m.pullback(a), RationalFn.monomial(want)),
            ))
        out.append(IdentityCheck(f"{mname}: q -> q^-1",
                                 ratfn_equal(m.pullback(q), RationalFn.monomial(qinv))))
    out.append(IdentityCheck("c1 fixes g", ratfn_equal(m1.pullback(ctx.chars["g"]), ctx.char("g"))))
    out.append(IdentityCheck("c2 fixes f", ratfn_equal(m2.pullback(ctx.chars["f"]), ctx.char("f"))))
    for b, ks in B_QUARTER_ROOTS.items():
        four_b = la.scale(4, ctx.chars[b])
        rhs = [0] * len(four_b)
        for i, k in enumerate(ks):
            rhs = la.vadd(rhs, la.scale(k, ctx.chars[f"a{i}"]))
        out.append(IdentityCheck(f"{b} quarter-root form", tuple(four_b) == tuple(rhs)))
    sides = {"f fbar": ffbar_sides(ctx, m1), "g gunder": gglow_sides(ctx, m2)}
    for name, (lhs, rhs) in sides.items():
        out.append(IdentityCheck(f"{name} identity", ratfn_equal(lhs, rhs)))
    rng = random.Random(seed)
    n = len(ctx.chars["f"])
    for name, (lhs, rhs) in sides.items():
        bad = 0
        for _ in range(random_points):
            pt = tuple(Fraction(rng.randint(1, 50), rng.randint(1, 50)) for _ in range(n))
            try:
                if lhs.evaluate(pt) != rhs.evaluate(pt):
                    bad += 1
            except PoleAtPoint:
                continue
        out.append(IdentityCheck(f"{name} at {random_points} rational points", bad == 0,
                                 f"{bad} mismatches" if bad else ""))
    return out


def printed_q_matches_delta(ctx: QP6Context) -> bool:
    """Whether the printed monomial ``a0 a1 a2^2 a3^3 a4 a5`` equals ``z^delta``."""
    q = [0] * len(ctx.chars["q"])
    for i, k in enumerate(PRINTED_Q_EXPONENTS):
        q = la.vadd(q, la.scale(k, ctx.chars[f"a{i}"]))
    return tuple(q) == ctx.chars["q"]


# -- orbits -------------------------------------------------------------------


def point_from_params(ctx: QP6Context, params: dict, exact: bool = True) -> tuple:
    """Torus point from ``{"t": [...]} or {"a": [...]}`` plus ``"f"``, ``"g"``.

    ``a`` values are converted with the positive real fourth root, so they
    force the float pipeline.
    """
    if "t" in params:
        t = list(params["t"])
    elif "a" in params:
        t = [float(la.parse_number(x) if isinstance(x, str) else x) ** 0.25 for x in params["a"]]
        if any(not (x > 0) for x in t):
            raise NonGenericParameters("a_i must be positive for the real fourth root")
    else:
        raise NonGenericParameters("params need 't' or 'a'")
    if len(t) != 6:
        raise NonGenericParameters("need six parameters")
    vals = t + [params["f"], params["g"]]
    if exact:
        vals = [la.parse_number(x) if not isinstance(x, float) else Fraction(x) for x in vals]
    else:
        vals = [float(Fraction(la.parse_number(x))) if not isinstance(x, float) else x for x in vals]
    if any(v == 0 for v in vals):
        raise NonGenericParameters("coordinates must be nonzero")
    return tuple(vals)


@dataclass(frozen=True)
class OrbitRow:
    step: int
    map: str
    a: tuple
    f: object
    g: object
    q: object


def _row(ctx: QP6Context, step: int, name: str, x) -> OrbitRow:
    a = tuple(ctx.value(f"a{i}", x) for i in range(6))
    return OrbitRow(step, name, a, x[6], x[7], ctx.value("q", x))


def _schedule(steps: int, order: str) -> list[str]:
    first, second = ("c1", "c2") if order == "c1-first" else ("c2", "c1")
    return [first if k % 2 == 0 else second for k in range(steps)]


def qp6_orbit(
    ctx: QP6Context,
    point: Sequence,
    steps: int,
    order: str = "c2-first",
    maps: tuple[XMap, XMap] | None = None,
    threshold: int | None = DEFAULT_SIMPLIFY_THRESHOLD,
) -> list[OrbitRow]:
    """Exact orbit through the composed symbolic maps (one map per step)."""
    if order not in ("c1-first", "c2-first"):
        raise ValueError("order must be c1-first or c2-first")
    m1, m2 = maps or qp6_maps(ctx, threshold)
    # flint rationals: heights grow roughly cubically along the orbit
    x = tuple(_to_fmpq(v) for v in point)
    rows = [_row(ctx, 0, "", x)]
    for k, name in enumerate(_schedule(steps, order), start=1):
        try:
            x = xmap_evaluate_exact(m1 if name == "c1" else m2, x)
        except ZeroDivisionError:
            raise PoleAtPoint(f"pole at step {k}") from None
        rows.append(_row(ctx, k, name, x))
    return rows


def _to_fmpq(v):
    if isinstance(v, float):
        raise NonGenericParameters("the exact pipeline needs rational coordinates")
    v = Fraction(v)
    return flint.fmpq(v.numerator, v.denominator)


def qp6_orbit_float(ctx: QP6Context, point: Sequence[float], steps: int, order: str = "c2-first") -> list[OrbitRow]:
    """Floating orbit, generator by generator, without symbolic composition."""
    pm = {"c1": WordPointMap(ctx.c1), "c2": WordPointMap(ctx.c2)}
    x = tuple(float(v) for v in point)
    rows = [_row(ctx, 0, "", x)]
    for k, name in enumerate(_schedule(steps, order), start=1):
        try:
            x = pm[name](x)
            row = _row(ctx, k, name, x)
        except ZeroDivisionError:
            raise PoleAtPoint(f"pole at step {k}") from None
        except OverflowError:
            raise NonGenericParameters(f"float overflow at step {k}") from None
        rows.append(row)
    return rows


# low-height generic point: q = 16, all b_i distinct
DEFAULT_PARAMS = {"t": ["2/3", "2", "1/3", "3/2", "3", "2"], "f": "2", "g": "3"}


@dataclass
class OrbitResult:
    rows: list
    float_rows: list
    discrepancy: list | None  # None when only the float pipeline ran

    @property
    def max_error(self) -> float | None:
        return max(self.discrepancy) if self.discrepancy else None


def run_orbit(ctx: QP6Context, params: dict, steps: int, order: str = "c2-first") -> OrbitResult:
    """Both pipelines when the parameters are rational, else the float one only."""
    ptf = point_from_params(ctx, params, exact=False)
    fl = qp6_orbit_float(ctx, ptf, steps, order)
    if "a" in params:
        return OrbitResult(fl, fl, None)
    ex = qp6_orbit(ctx, point_from_params(ctx, params), steps, order)
    return OrbitResult(ex, fl, orbit_discrepancy(ex, fl))


def _rel(a, b) -> float:
    a, b = float(a), float(b)
    if a == b:
        return 0.0
    return abs(a - b) / max(abs(a), abs(b))


def orbit_discrepancy(exact: list[OrbitRow], approx: list[OrbitRow]) -> list[float]:
    """Per-step maximal relative error over all recorded coordinates."""
    out = []
    for r, s in zip(exact, approx):
        vals = list(zip(r.a, s.a)) + [(r.f, s.f), (r.g, s.g), (r.q, s.q)]
        out.append(max(_rel(p, q) for p, q in vals))
    return out


def _fmt(x) -> str:
    if isinstance(x, flint.fmpq):
        return str(x)
    if isinstance(x, Fraction) or isinstance(x, int):
        return la.rational_str(x)
    return repr(float(x))


def orbit_to_csv(rows: list[OrbitRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["step", "map", "a0", "a1", "a2", "a3", "a4", "a5", "f", "g", "q"])
    for r in rows:
        w.writerow([r.step, r.map, *(_fmt(v) for v in r.a), _fmt(r.f), _fmt(r.g), _fmt(r.q)])
    return buf.getvalue()


def orbit_to_json(rows: list[OrbitRow]) -> str:
    return json.dumps(
        [{"step": r.step, "map": r.map, "a": [_fmt(v) for v in r.a],
          "f": _fmt(r.f), "g": _fmt(r.g), "q": _fmt(r.q)} for r in rows],
        indent=1,
    )


def finite(rows: list[OrbitRow]) -> bool:
    return all(math.isfinite(float(v)) for r in rows for v in (*r.a, r.f, r.g, r.q))
