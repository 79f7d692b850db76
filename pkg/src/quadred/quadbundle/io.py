"""JSON serialization of graded quadratic forms and node reports.

Polynomials are stored as strings in the standard grammar, so only integer
coefficients survive a round trip; forms over the rationals with non-integer
entries raise.  The field is {"p": <prime>} or "Q".
"""

import json
from fractions import Fraction

from ..poly import QQ, parse_poly, poly_to_string, prime_field
from .base import Gr24Chart, ProjSpace, ProjSpaceChart, QuadricInGr24
from .form import GradedQuadraticForm

__all__ = [
    "form_to_json",
    "form_from_json",
    "load_form",
    "save_form",
]


def _field_to_json(field):
    return "Q" if field.p is None else {"p": field.p}


def _field_from_json(doc):
    if doc == "Q":
        return QQ
    if isinstance(doc, dict) and "p" in doc:
        return prime_field(doc["p"])
    raise ValueError(f"unrecognized field {doc!r}")


def _scalar_to_int(c):
    if isinstance(c, Fraction):
        if c.denominator != 1:
            raise ValueError("non-integer coefficient cannot be serialized")
        return c.numerator
    return int(c)


def _base_to_json(base):
    if isinstance(base, ProjSpace):
        return {"kind": "ProjSpace", "n": base.n}
    if isinstance(base, ProjSpaceChart):
        return {"kind": "ProjSpaceChart", "n": base.n, "index": base.index}
    if isinstance(base, QuadricInGr24):
        return {
            "kind": "QuadricInGr24",
            "ell": [_scalar_to_int(c) for c in base.ell],
        }
    if isinstance(base, Gr24Chart):
        return {
            "kind": "Gr24Chart",
            "pair": list(base.pair),
            "ell": [_scalar_to_int(c) for c in base.ell],
        }
    raise ValueError(f"unrecognized base {base!r}")


def _base_from_json(doc, field):
    kind = doc.get("kind")
    if kind == "ProjSpace":
        return ProjSpace(doc["n"], field)
    if kind == "ProjSpaceChart":
        return ProjSpaceChart(doc["n"], doc["index"], field)
    if kind == "QuadricInGr24":
        return QuadricInGr24(doc["ell"], field)
    if kind == "Gr24Chart":
        return Gr24Chart(tuple(doc["pair"]), doc["ell"], field)
    raise ValueError(f"unrecognized base kind {kind!r}")


def _chart_names(base, chart_id):
    for chart in base.charts():
        if chart.chart_id == chart_id:
            return chart.names
    raise ValueError(f"unknown chart id {chart_id!r}")


def form_to_json(form):
    doc = {
        "field": _field_to_json(form.field),
        "base": _base_to_json(form.base),
        "degrees": list(form.degrees),
        "twist": form.twist,
    }
    if form.entries is not None:
        names = form.base.names
        doc["entries"] = [
            [poly_to_string(p, names) for p in row] for row in form.entries
        ]
    else:
        doc["chart_entries"] = {
            cid: [
                [poly_to_string(p, _chart_names(form.base, cid)) for p in row]
                for row in mat
            ]
            for cid, mat in sorted(form.chart_entries.items())
        }
    if form.relations:
        names = form.base.names
        doc["relations"] = [
            {
                "weight": w,
                "components": [poly_to_string(c, names) for c in comps],
            }
            for w, comps in form.relations
        ]
    return doc


def form_from_json(doc):
    field = _field_from_json(doc["field"])
    base = _base_from_json(doc["base"], field)
    degrees = tuple(doc["degrees"])
    twist = doc["twist"]
    entries = None
    chart_entries = None
    if "entries" in doc:
        names = base.names
        entries = [
            [parse_poly(s, names, field) for s in row]
            for row in doc["entries"]
        ]
    elif "chart_entries" in doc:
        chart_entries = {
            cid: [
                [parse_poly(s, _chart_names(base, cid), field) for s in row]
                for row in mat
            ]
            for cid, mat in doc["chart_entries"].items()
        }
    else:
        raise ValueError("form document has neither entries nor chart_entries")
    relations = []
    for rel in doc.get("relations", ()):
        comps = [parse_poly(s, base.names, field) for s in rel["components"]]
        relations.append((rel["weight"], comps))
    return GradedQuadraticForm(
        base, degrees, twist, entries=entries, chart_entries=chart_entries,
        relations=relations, field=field,
    )


def save_form(form, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(form_to_json(form), fh, indent=2, sort_keys=True)
        fh.write("\n")


def load_form(path):
    with open(path, "r", encoding="utf-8") as fh:
        return form_from_json(json.load(fh))
