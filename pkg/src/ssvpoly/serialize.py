"""Text, JSON and LaTeX forms of scalars and polynomials, and golden data."""

import json
from fractions import Fraction
from importlib import resources

from . import kernel
from .field import param_ring, poly_from_terms, poly_terms
from .laurent import LaurentPolynomial
from .rootsys import MetaplecticContext


def _poly_json(ring, f):
    out = []
    for c, exps in poly_terms(ring, f):
        out.append({"c": str(c), "pow": {s: e for s, e in zip(ring.symbols, exps)}})
    return out


def scalar_to_json(s):
    return {"num": _poly_json(s.ring, s.num), "den": _poly_json(s.ring, s.den)}


def _terms_from_json(items):
    return [(Fraction(t["c"]), {s: int(e) for s, e in t.get("pow", {}).items() if int(e)}) for t in items]


def scalar_from_json(ring, obj):
    num, dn = poly_from_terms(ring, _terms_from_json(obj["num"]))
    den, dd = poly_from_terms(ring, _terms_from_json(obj.get("den", [{"c": "1"}])))
    return ring.from_polys(kernel.mul_term(num, 0, dd), kernel.mul_term(den, 0, dn))


def poly_to_json(poly, ctx, mu=None, obj="E", normalization="monic"):
    return {
        "r": ctx.r,
        "n": ctx.n,
        "mu": list(mu) if mu is not None else None,
        "object": obj,
        "normalization": normalization,
        "reduce_ghalf": ctx.reduce_ghalf,
        "terms": [{"exp": list(e), "coeff": scalar_to_json(c)} for e, c in poly.items()],
    }


def dumps(poly, ctx, mu=None, obj="E", normalization="monic"):
    return json.dumps(poly_to_json(poly, ctx, mu, obj, normalization), sort_keys=True)


def poly_from_json(data):
    """Inverse of :func:`poly_to_json`; returns ``(poly, ctx)``."""
    if isinstance(data, str):
        data = json.loads(data)
    ctx = MetaplecticContext(int(data["r"]), int(data["n"]), bool(data.get("reduce_ghalf", True)))
    ring = ctx.ring
    terms = {}
    for t in data["terms"]:
        e = tuple(int(x) for x in t["exp"])
        c = scalar_from_json(ring, t["coeff"])
        terms[e] = terms[e] + c if e in terms else c
    return LaurentPolynomial(ring, ctx.r, terms), ctx


def load_golden(kind):
    """Golden entries for ``"E"`` or ``"P"``, transcribed from published tables."""
    name = {"E": "golden_e.json", "P": "golden_p.json"}[kind]
    return json.loads(resources.files("ssvpoly").joinpath("data").joinpath(name).read_text())


def golden_polynomial(entry, reduce_ghalf=True):
    """Sum of the stored summands as a polynomial over the entry's ring."""
    ring = param_ring(entry["n"], reduce_ghalf)
    r = entry["r"]
    terms = {}
    for s in entry["summands"]:
        e = tuple(s["exp"])
        c = scalar_from_json(ring, s["coeff"])
        terms[e] = terms[e] + c if e in terms else c
    return LaurentPolynomial(ring, r, terms)
