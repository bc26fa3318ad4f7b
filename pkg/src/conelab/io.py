"""JSON documents for cones, monoids, algebra elements and reports.

Numbers are integers, ``"p/q"`` strings, or ``[a, b]`` pairs meaning
``a + b*sqrt(n)`` with ``n`` declared once per document as ``quad_n``.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .cone import Cone, HalfSpace
from .frobenius import AlgebraElement, WitnessReport
from .grval import MonomialValuation
from .monoid import AffineMonoid
from .quadratic import QuadNum

__all__ = [
    "SchemaError",
    "decode_number",
    "encode_number",
    "decode_vec",
    "encode_vec",
    "cone_from_doc",
    "cone_to_doc",
    "monoid_from_doc",
    "element_from_doc",
    "element_to_doc",
    "witness_to_doc",
    "witness_from_doc",
    "valuation_from_doc",
    "dumps",
]


class SchemaError(ValueError):
    pass


def _rational(x) -> Fraction:
    if isinstance(x, bool):
        raise SchemaError(f"boolean {x!r} is not a number")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError):
            raise SchemaError(f"bad rational {x!r}") from None
    raise SchemaError(f"expected an integer or a 'p/q' string, got {x!r}")


def decode_number(x, quad_n=None):
    if isinstance(x, list):
        if len(x) != 2:
            raise SchemaError(f"quadratic number must be [a, b], got {x!r}")
        if quad_n is None:
            raise SchemaError("quadratic number given but quad_n is not declared")
        a, b = _rational(x[0]), _rational(x[1])
        return QuadNum(a, b, quad_n) if b else _plain(a)
    return _plain(_rational(x))


def _plain(f: Fraction):
    return int(f) if f.denominator == 1 else f


def encode_number(x):
    if isinstance(x, QuadNum):
        if x.b == 0:
            return encode_number(x.a)
        return [encode_number(x.a), encode_number(x.b)]
    f = Fraction(x)
    return int(f) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def decode_vec(v, quad_n=None, rank=None):
    if not isinstance(v, list):
        raise SchemaError(f"expected a list, got {v!r}")
    out = tuple(decode_number(x, quad_n) for x in v)
    if rank is not None and len(out) != rank:
        raise SchemaError(f"vector {v!r} does not have length {rank}")
    return out


def encode_vec(v):
    return [encode_number(x) for x in v]


def _int_vec(v, rank=None):
    out = decode_vec(v, None, rank)
    if any(not isinstance(x, int) for x in out):
        raise SchemaError(f"expected an integral vector, got {v!r}")
    return out


def _quad_n(doc):
    n = doc.get("quad_n")
    if n is not None and (isinstance(n, bool) or not isinstance(n, int)):
        raise SchemaError("quad_n must be an integer or null")
    return n


def cone_from_doc(doc) -> Cone:
    if not isinstance(doc, dict) or "rank" not in doc:
        raise SchemaError("cone document needs a 'rank'")
    d = doc["rank"]
    if isinstance(d, bool) or not isinstance(d, int) or d < 0:
        raise SchemaError("rank must be a nonnegative integer")
    n = _quad_n(doc)
    gens = doc.get("generators")
    ineqs = doc.get("inequalities")
    if gens is None and ineqs is None:
        raise SchemaError("cone document needs generators or inequalities")
    g = [decode_vec(v, n, d) for v in gens] if gens is not None else None
    h = None
    if ineqs is not None:
        h = []
        for item in ineqs:
            if not isinstance(item, dict) or "normal" not in item:
                raise SchemaError("each inequality needs a 'normal'")
            strict = item.get("strict", False)
            if not isinstance(strict, bool):
                raise SchemaError("'strict' must be a boolean")
            h.append(HalfSpace(decode_vec(item["normal"], n, d), strict))
    try:
        return Cone(d, generators=g, inequalities=h, quad_n=n)
    except SchemaError:
        raise
    except (ValueError, TypeError) as exc:
        raise SchemaError(str(exc)) from exc


def cone_to_doc(c: Cone, with_h: bool = True, with_v: bool = True) -> dict:
    doc = {"rank": c.rank, "quad_n": c.quad_n}
    if with_v:
        doc["generators"] = [encode_vec(v) for v in c.generators]
    if with_h:
        doc["inequalities"] = [{"normal": encode_vec(h.normal), "strict": bool(h.strict)}
                               for h in c.inequalities]
    return doc


def monoid_from_doc(doc) -> AffineMonoid:
    if "monoid_generators" not in doc:
        raise SchemaError("monoid document needs 'monoid_generators'")
    gens = [_int_vec(v) for v in doc["monoid_generators"]]
    d = doc.get("rank", len(gens[0]) if gens else None)
    if d is None:
        raise SchemaError("rank required for an empty generator list")
    try:
        return AffineMonoid(d, gens)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def element_from_doc(doc, p=None) -> AlgebraElement:
    p = doc.get("p", p)
    if p is None:
        raise SchemaError("algebra element needs 'p'")
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise SchemaError("algebra element needs a 'terms' list")
    acc = {}
    rank = doc.get("rank")
    for t in terms:
        exp = _int_vec(t["exp"], rank)
        rank = len(exp)
        c = t.get("coeff", 1)
        if isinstance(c, bool) or not isinstance(c, int):
            raise SchemaError("coefficients must be integers")
        acc[exp] = acc.get(exp, 0) + c
    if rank is None:
        raise SchemaError("rank required for the zero element")
    return AlgebraElement(p, acc, rank)


def element_to_doc(y: AlgebraElement) -> dict:
    return {"p": y.p, "rank": y.rank,
            "terms": [{"exp": list(e), "coeff": c} for e, c in y.terms.items()]}


def witness_to_doc(w: WitnessReport) -> dict:
    return {
        "e": w.e,
        "p": w.p,
        "alpha": list(w.alpha),
        "beta": list(w.beta),
        "shift": [w.p ** w.e * b + a for a, b in zip(w.alpha, w.beta)],
        "check_beta_outside": list(w.check_beta_outside),
        "check_shift_inside": list(w.check_shift_inside),
        "source": w.source,
    }


def witness_from_doc(doc) -> WitnessReport:
    return WitnessReport(doc["e"], doc["p"], tuple(doc["alpha"]), tuple(doc["beta"]),
                         tuple(doc["check_beta_outside"]), tuple(doc["check_shift_inside"]),
                         doc.get("source", "box"))


def valuation_from_doc(doc) -> MonomialValuation:
    m = monoid_from_doc(doc)
    vm = doc.get("value_map")
    if vm is None:
        vm = [[int(i == j) for j in range(m.rank)] for i in range(m.rank)]
    vm = [_int_vec(r, m.rank) for r in vm]
    n = _quad_n(doc)
    w = doc.get("order_weight")
    if w is None:
        raise SchemaError("grval document needs 'order_weight'")
    w = decode_vec(w, n)
    try:
        return MonomialValuation(m, vm, w)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, fixed separators, trailing newline."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
