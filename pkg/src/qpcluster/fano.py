"""Fano polygons of q-Painlevé seeds and the inverse construction."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from math import gcd
from typing import Sequence

from .errors import HasRemainders, NotLattice, NotPrimitiveVertex, Unbounded
from .toric import NullRoot, ToricSeedData, null_root, sort_rays, toric_data, wedge


@dataclass(frozen=True)
class Facet:
    w: tuple  # primitive inner normal in N̄
    c: int  # height: the facet lies on <v, w> = -c
    l: int  # lattice length

    def to_json(self) -> dict:
        return {"w": list(self.w), "c": self.c, "l": self.l}


@dataclass(frozen=True)
class FanoPolygon:
    facets: tuple
    vertices: tuple

    def same_as(self, other: "FanoPolygon") -> bool:
        """Equality up to cyclic rotation of the vertex list."""
        a, b = list(self.vertices), list(other.vertices)
        if len(a) != len(b):
            return False
        return any(a[k:] + a[:k] == b for k in range(len(a)))

    def to_json(self) -> dict:
        return {
            "vertices": [list(v) for v in self.vertices],
            "facets": [f.to_json() for f in self.facets],
            "no_remainders": no_remainders(self),
        }


def _pair(v, w):
    return v[0] * w[0] + v[1] * w[1]


def _ccw_from_x(u, v) -> int:
    def half(p):
        return 0 if (p[1] > 0 or (p[1] == 0 and p[0] > 0)) else 1

    if half(u) != half(v):
        return half(u) - half(v)
    c = wedge(u, v)
    return -1 if c > 0 else (1 if c < 0 else 0)


def polygon_from_halfplanes(halfplanes: Sequence[tuple]) -> FanoPolygon:
    """Exact intersection of ``{v : <v, w> >= -c}`` over ``(w, c)`` pairs."""
    hp = sorted(set((tuple(w), int(c)) for w, c in halfplanes))
    normals = sort_rays([w for w, _ in hp])
    if len(normals) < 3 or any(
        wedge(normals[i], normals[(i + 1) % len(normals)]) <= 0 for i in range(len(normals))
    ):
        raise Unbounded("inner normals do not positively span the plane")
    for w, c in hp:
        if c <= 0:
            raise Unbounded("the origin must lie strictly inside every halfplane")
    pts = set()
    for i, (w1, c1) in enumerate(hp):
        for w2, c2 in hp[i + 1:]:
            d = wedge(w1, w2)
            if d == 0:
                continue
            # <v, w1> = -c1, <v, w2> = -c2
            x = Fraction(-c1 * w2[1] + c2 * w1[1], d)
            y = Fraction(-c2 * w1[0] + c1 * w2[0], d)
            if all(x * w[0] + y * w[1] >= -c for w, c in hp):
                pts.add((x, y))
    verts = []
    for x, y in pts:
        if x.denominator != 1 or y.denominator != 1:
            raise NotLattice(f"vertex ({x}, {y}) is not a lattice point")
        verts.append((int(x), int(y)))
    # keep only corners (drop points in the relative interior of an edge)
    corners = []
    for v in verts:
        tight = {_norm_dir(w) for w, c in hp if _pair(v, w) == -c}
        if len(tight) >= 2:
            corners.append(v)
    corners.sort(key=cmp_to_key(_ccw_from_x))
    for v in corners:
        if gcd(*v) != 1:
            raise NotPrimitiveVertex(f"vertex {v} is not primitive")
    facets = []
    for w in normals:
        cs = {c for ww, c in hp if ww == w}
        c = min(cs)
        on = [v for v in corners if _pair(v, w) == -c]
        if len(on) == 2:
            a, b = on
            l = gcd(a[0] - b[0], a[1] - b[1])
        else:
            l = 0
        facets.append(Facet(w, c, l))
    return FanoPolygon(tuple(facets), tuple(corners))


def _norm_dir(w):
    g = gcd(*w)
    return (w[0] // g, w[1] // g)


def fano_polygon(data: ToricSeedData, nr: NullRoot | None = None) -> FanoPolygon:
    """``P = ∩ {v : <v, w_i> >= -c_i}`` for the null-root coefficients ``c_i``."""
    nr = nr or null_root(data)
    poly = polygon_from_halfplanes(list(zip(data.vectors, nr.c)))
    mult = {}
    for w in data.vectors:
        mult[w] = mult.get(w, 0) + 1
    for f in poly.facets:
        assert f.l == mult.get(f.w, 0) * f.c, "facet length is not m * c"
    return poly


def no_remainders(poly: FanoPolygon) -> bool:
    return all(f.l % f.c == 0 for f in poly.facets)


def polygon_from_vertices(vertices: Sequence[Sequence[int]]) -> FanoPolygon:
    """Polygon with the given vertex set; facets are read off the edges."""
    vs = sorted({(int(x), int(y)) for x, y in vertices}, key=cmp_to_key(_ccw_from_x))
    hp = []
    for i, v in enumerate(vs):
        u = vs[(i + 1) % len(vs)]
        d = (u[0] - v[0], u[1] - v[1])
        g = gcd(*d)
        w = (-d[1] // g, d[0] // g)
        hp.append((w, -_pair(v, w)))
    return polygon_from_halfplanes(hp)


def seed_from_polygon(poly: FanoPolygon) -> ToricSeedData:
    """``l_F / c_F`` copies of each facet normal ``w_F``."""
    if not no_remainders(poly):
        bad = [f.to_json() for f in poly.facets if f.l % f.c]
        raise HasRemainders(f"facets with remainders: {bad}")
    by_w = {f.w: f.l // f.c for f in poly.facets}
    vecs = []
    for w in sort_rays(list(by_w)):
        vecs.extend([w] * by_w[w])
    return toric_data(vecs)


def ascii_plot(poly: FanoPolygon) -> str:
    """Lattice plot: ``*`` vertices, ``+`` boundary points, ``.`` interior, ``o`` origin."""
    xs = [v[0] for v in poly.vertices]
    ys = [v[1] for v in poly.vertices]
    rows = []
    for y in range(max(ys), min(ys) - 1, -1):
        row = []
        for x in range(min(xs), max(xs) + 1):
            vals = [_pair((x, y), f.w) + f.c for f in poly.facets]
            if (x, y) in poly.vertices:
                ch = "*"
            elif min(vals) < 0:
                ch = " "
            elif (x, y) == (0, 0):
                ch = "o"
            elif min(vals) == 0:
                ch = "+"
            else:
                ch = "."
            row.append(ch)
        rows.append(" ".join(row).rstrip())
    return "\n".join(rows)
