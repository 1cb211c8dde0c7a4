"""JSON readers and writers for seeds, words, toric data and polygons."""

from __future__ import annotations

from fractions import Fraction

from . import linalg as la
from .errors import InvalidWord
from .fano import FanoPolygon, polygon_from_halfplanes, polygon_from_vertices
from .lattice import ClusterWord, IsoStep, MutationStep, Seed, new_fixed_data, rational_str
from .toric import BoundaryData, Fan2D, NullRoot, ToricSeedData, toric_data


def _num(x):
    return la.parse_number(x) if isinstance(x, str) else Fraction(x)


def _matrix(rows):
    return la.matrix([[_num(x) for x in r] for r in rows])


def _matrix_out(m) -> list:
    return [[_out(x) for x in r] for r in m]


def _out(x):
    x = Fraction(x)
    return int(x) if x.denominator == 1 else rational_str(x)


def seed_from_json(obj: dict) -> Seed:
    """``{"labels", "lambda", "n_basis"?, "basis"?}``; without ``basis`` the initial seed."""
    lam = _matrix(obj["lambda"])
    nb = _matrix(obj["n_basis"]) if obj.get("n_basis") is not None else None
    fixed = new_fixed_data(lam, nb, labels=obj.get("labels"))
    if obj.get("basis") is None:
        return fixed.initial_seed()
    return Seed(fixed, la.to_int(_matrix(obj["basis"])))


def seed_to_json(seed: Seed) -> dict:
    f = seed.fixed
    return {
        "labels": list(f.labels),
        "lambda": _matrix_out(f.lam),
        "n_basis": None if f.n_basis is None else _matrix_out(f.n_basis),
        "basis": _matrix_out(seed.basis),
        "exchange_matrix": _matrix_out(seed.exchange_matrix()),
    }


def _sign(s) -> int:
    if s in ("+", 1, "+1"):
        return 1
    if s in ("-", -1, "-1"):
        return -1
    raise InvalidWord(f"bad sign {s!r}")


def word_from_json(seed: Seed, items: list) -> ClusterWord:
    """List order is application order (first item acts first).

    ``perm`` is either a mapping or the list of images of the labels in order.
    """
    labels = seed.fixed.labels
    lt = type(labels[0])
    steps = []
    for it in items:
        if "mut" in it:
            m = it["mut"]
            steps.append(MutationStep(lt(m["k"]), _sign(m.get("sign", "+"))))
        elif "iso" in it:
            s = it["iso"]
            perm = s["perm"]
            if isinstance(perm, dict):
                mapping = {lt(k): lt(v) for k, v in perm.items()}
            else:
                if len(perm) != len(labels):
                    raise InvalidWord("perm list must give one image per label")
                mapping = {a: lt(b) for a, b in zip(labels, perm)}
            mat = _matrix(s["matrix"]) if s.get("matrix") is not None else None
            steps.append(IsoStep.from_mapping(mapping, _sign(s.get("sign", "+")), mat))
        else:
            raise InvalidWord(f"unknown word item {it!r}")
    return ClusterWord(seed, tuple(steps))


def word_to_json(word: ClusterWord) -> list:
    out = []
    for st in word.steps:
        if isinstance(st, MutationStep):
            out.append({"mut": {"k": st.k, "sign": "+" if st.sign > 0 else "-"}})
        else:
            d = {"perm": {str(a): b for a, b in st.perm}, "sign": "+" if st.sign > 0 else "-"}
            if st.matrix is not None:
                d["matrix"] = _matrix_out(st.matrix)
            out.append({"iso": d})
    return out


def toric_from_json(obj: dict) -> ToricSeedData:
    return toric_data(obj["vectors"], obj.get("orientation", 1), obj.get("labels"))


def toric_to_json(data: ToricSeedData) -> dict:
    d = {"vectors": [list(v) for v in data.vectors], "orientation": data.orientation}
    if data.labels is not None:
        d["labels"] = list(data.labels)
    return d


def polygon_from_json(obj: dict) -> FanoPolygon:
    if "vertices" in obj:
        return polygon_from_vertices(obj["vertices"])
    return polygon_from_halfplanes([(tuple(f["w"]), int(f["c"])) for f in obj["facets"]])


def nullroot_to_json(fan: Fan2D, bd: BoundaryData, nr: NullRoot) -> dict:
    return {
        "fan": [list(r) for r in fan.rays],
        "self_intersections": list(bd.self_int),
        "multiplicities": list(bd.mult),
        "H": _matrix_out(bd.H),
        "c_prime": list(nr.c_prime),
        "delta": list(nr.delta),
    }
