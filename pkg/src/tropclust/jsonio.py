"""Exact JSON encoding for every public object type.

All documents carry a top-level ``"format": 1``.  Numbers are JSON integers
or fraction strings like ``"-3/4"``; floats are rejected outright, since
nothing in this package is approximate.  Serialization is deterministic:
entries are emitted sorted, so equal objects produce identical bytes.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .atlas import Seed
from .basis import Expansion
from .errors import InputFormatError
from .laminations import Lamination, TropicalCoords
from .laurent import LaurentPolynomial
from .polygon import Segment, Triangulation
from .polytopes import StasheffSpec
from .weighted_graphs import WeightedGraph

FORMAT = 1

_FRACTION_RE = re.compile(r"^-?\d+(/[1-9]\d*)?$")


def number_to_json(x):
    if isinstance(x, bool) or not isinstance(x, (int, Fraction)):
        raise InputFormatError(f"not an exact number: {x!r}")
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"
    return x


def number_from_json(x):
    if isinstance(x, bool):
        raise InputFormatError("booleans are not numbers")
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        raise InputFormatError(
            f"floats are not accepted ({x!r}); use integers or 'p/q' strings"
        )
    if isinstance(x, str):
        if not _FRACTION_RE.match(x):
            raise InputFormatError(f"malformed number string: {x!r}")
        value = Fraction(x)
        return int(value) if value.denominator == 1 else value
    raise InputFormatError(f"not a number: {x!r}")


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InputFormatError(message)


def _check_document(doc, kind: str) -> None:
    _require(isinstance(doc, dict), f"{kind}: document must be an object")
    _require(doc.get("format") == FORMAT, f"{kind}: missing or unsupported format")


def _int_field(doc, key: str, kind: str) -> int:
    value = doc.get(key)
    _require(isinstance(value, int) and not isinstance(value, bool),
             f"{kind}: field {key!r} must be an integer")
    return value


def _segment_from_json(item, kind: str) -> Segment:
    _require(
        isinstance(item, list) and len(item) == 2
        and all(isinstance(v, int) and not isinstance(v, bool) for v in item),
        f"{kind}: segment entries must be [i, j] integer pairs",
    )
    return Segment(item[0], item[1])


# -- weighted graphs and laminations ----------------------------------------


def graph_to_json(graph: WeightedGraph) -> dict:
    weights = [[i, j, number_to_json(w)] for i, j, w in graph.sparse_items()]
    return {"format": FORMAT, "n_gon": graph.n_gon, "weights": weights}


def graph_from_json(doc) -> WeightedGraph:
    _check_document(doc, "graph")
    n_gon = _int_field(doc, "n_gon", "graph")
    raw = doc.get("weights")
    _require(isinstance(raw, list), "graph: 'weights' must be a list")
    weights = {}
    for item in raw:
        _require(isinstance(item, list) and len(item) == 3,
                 "graph: weight entries must be [i, j, w] triples")
        seg = _segment_from_json(item[:2], "graph")
        _require(seg not in weights, f"graph: duplicate weight entry for {seg}")
        weights[seg] = number_from_json(item[2])
    return WeightedGraph.from_weights(n_gon, weights)


def lamination_to_json(lam: Lamination) -> dict:
    doc = graph_to_json(lam.graph)
    doc["domain"] = lam.domain
    return doc


def lamination_from_json(doc) -> Lamination:
    _check_document(doc, "lamination")
    domain = doc.get("domain", "int")
    _require(domain in ("int", "rat"), f"lamination: bad domain {domain!r}")
    return Lamination(graph_from_json(doc), domain)


def points_to_json(points) -> dict:
    return {"format": FORMAT, "points": [lamination_to_json(p) for p in points]}


def points_from_json(doc) -> list[Lamination]:
    _check_document(doc, "points")
    raw = doc.get("points")
    _require(isinstance(raw, list), "points: 'points' must be a list")
    return [lamination_from_json(item) for item in raw]


# -- coordinates and polytope specs ------------------------------------------


def coords_to_json(coords: TropicalCoords) -> dict:
    return {
        "format": FORMAT,
        "n_gon": coords.n_gon,
        "chart": [[d.i, d.j] for d in coords.chart.sorted_diagonals()],
        "values": [[s.i, s.j, number_to_json(v)] for s, v in coords.values],
    }


def coords_from_json(doc) -> TropicalCoords:
    _check_document(doc, "coords")
    n_gon = _int_field(doc, "n_gon", "coords")
    raw_chart = doc.get("chart")
    _require(isinstance(raw_chart, list), "coords: 'chart' must be a list")
    chart = Triangulation(
        n_gon, frozenset(_segment_from_json(item, "coords") for item in raw_chart)
    )
    raw_values = doc.get("values")
    _require(isinstance(raw_values, list), "coords: 'values' must be a list")
    values = []
    for item in raw_values:
        _require(isinstance(item, list) and len(item) == 3,
                 "coords: value entries must be [i, j, a] triples")
        values.append((_segment_from_json(item[:2], "coords"),
                       number_from_json(item[2])))
    return TropicalCoords(chart, tuple(values))


def spec_to_json(spec: StasheffSpec) -> dict:
    return {
        "format": FORMAT,
        "n_gon": spec.n_gon,
        "c": [[s.i, s.j, number_to_json(v)] for s, v in spec.c],
    }


def spec_from_json(doc) -> StasheffSpec:
    _check_document(doc, "spec")
    n_gon = _int_field(doc, "n_gon", "spec")
    raw = doc.get("c")
    _require(isinstance(raw, list), "spec: 'c' must be a list")
    items = []
    for item in raw:
        _require(isinstance(item, list) and len(item) == 3,
                 "spec: bound entries must be [i, j, c] triples")
        items.append((_segment_from_json(item[:2], "spec"), number_from_json(item[2])))
    return StasheffSpec(n_gon, tuple(items))


# -- expansions ---------------------------------------------------------------


def expansion_to_json(expansion: Expansion) -> dict:
    return {
        "format": FORMAT,
        "terms": [
            {"lamination": lamination_to_json(lam), "coeff": coeff}
            for lam, coeff in expansion
        ],
    }


def expansion_from_json(doc) -> Expansion:
    _check_document(doc, "expansion")
    raw = doc.get("terms")
    _require(isinstance(raw, list), "expansion: 'terms' must be a list")
    terms = []
    for item in raw:
        _require(isinstance(item, dict), "expansion: terms must be objects")
        coeff = item.get("coeff")
        _require(isinstance(coeff, int) and not isinstance(coeff, bool),
                 "expansion: 'coeff' must be an integer")
        terms.append((lamination_from_json(item.get("lamination")), coeff))
    return Expansion(tuple(terms))


# -- seeds and Laurent polynomials --------------------------------------------


def _label_to_json(label):
    if isinstance(label, Segment):
        return [label.i, label.j]
    _require(isinstance(label, int) and not isinstance(label, bool),
             f"seed: unsupported label {label!r}")
    return label


def _label_from_json(item):
    if isinstance(item, int) and not isinstance(item, bool):
        return item
    return _segment_from_json(item, "seed")


def seed_to_json(seed: Seed) -> dict:
    return {
        "format": FORMAT,
        "labels": [_label_to_json(l) for l in seed.labels],
        "frozen": sorted(
            (_label_to_json(l) for l in seed.frozen),
            key=lambda x: (0, x, 0) if isinstance(x, int) else (1, x[0], x[1]),
        ),
        "epsilon": [list(row) for row in seed.eps],
        "d": [number_to_json(x) for x in seed.d],
    }


def seed_from_json(doc) -> Seed:
    _check_document(doc, "seed")
    raw_labels = doc.get("labels")
    _require(isinstance(raw_labels, list), "seed: 'labels' must be a list")
    labels = tuple(_label_from_json(item) for item in raw_labels)
    raw_frozen = doc.get("frozen", [])
    _require(isinstance(raw_frozen, list), "seed: 'frozen' must be a list")
    frozen = frozenset(_label_from_json(item) for item in raw_frozen)
    raw_eps = doc.get("epsilon")
    _require(
        isinstance(raw_eps, list)
        and all(
            isinstance(row, list)
            and all(isinstance(x, int) and not isinstance(x, bool) for x in row)
            for row in raw_eps
        ),
        "seed: 'epsilon' must be a matrix of integers",
    )
    eps = tuple(tuple(row) for row in raw_eps)
    raw_d = doc.get("d")
    _require(isinstance(raw_d, list), "seed: 'd' must be a list")
    d = tuple(number_from_json(x) for x in raw_d)
    return Seed(labels, frozen, eps, d)


def laurent_to_json(poly: LaurentPolynomial) -> dict:
    return {
        "format": FORMAT,
        "vars": list(poly.vars),
        "terms": [[list(exps), coeff] for exps, coeff in poly.terms_sorted()],
    }


def laurent_from_json(doc) -> LaurentPolynomial:
    _check_document(doc, "laurent")
    raw_vars = doc.get("vars")
    _require(
        isinstance(raw_vars, list) and all(isinstance(v, str) for v in raw_vars),
        "laurent: 'vars' must be a list of strings",
    )
    names = tuple(raw_vars)
    raw_terms = doc.get("terms")
    _require(isinstance(raw_terms, list), "laurent: 'terms' must be a list")
    out = LaurentPolynomial.zero(names)
    for item in raw_terms:
        _require(isinstance(item, list) and len(item) == 2,
                 "laurent: term entries must be [exponents, coeff] pairs")
        exps, coeff = item
        _require(
            isinstance(exps, list) and len(exps) == len(names)
            and all(isinstance(e, int) and not isinstance(e, bool) for e in exps),
            "laurent: exponent vectors must be integer lists matching vars",
        )
        _require(isinstance(coeff, int) and not isinstance(coeff, bool),
                 "laurent: coefficients must be integers")
        out = out + LaurentPolynomial.monomial(names, tuple(exps), coeff)
    return out


# -- file plumbing -------------------------------------------------------------


def dumps(doc) -> str:
    """Deterministic serialization: sorted keys, two-space indent."""
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def load_path(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh, parse_float=_reject_float)
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"invalid JSON in {path}: {exc}") from exc


def _reject_float(text: str):
    raise InputFormatError(f"floats are not accepted ({text}); use integers or 'p/q'")
