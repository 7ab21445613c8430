"""JSON documents for every public value type.

Exact rationals are written as ``"p/q"`` strings and complex numbers as
``{"re": .., "im": ..}``.  Floats that appear in inexact results
(rescaling by a non-square length) are written as plain JSON numbers.
Every ``*_from_json`` function is the inverse of ``to_json`` on its type.
"""

from fractions import Fraction
from functools import singledispatch
from numbers import Rational

from .algebra import AlgebraElement, TensorElement
from .fock import StateSpec
from .group import GroupElement
from .lie import CurrentElement, LieElement, RescalingParams, StepFunction
from .poly import Poly
from .regions import Interval, Partition, Region
from .scalars import as_rational

__all__ = [
    "to_json",
    "scalar_from_json",
    "complex_from_json",
    "poly_from_json",
    "group_from_json",
    "step_from_json",
    "interval_from_json",
    "region_from_json",
    "partition_from_json",
    "lie_from_json",
    "current_from_json",
    "algebra_from_json",
    "tensor_from_json",
    "spec_from_json",
]


def rat_str(q):
    return f"{q.numerator}/{q.denominator}"


def scalar_to_json(x):
    if isinstance(x, Rational) and not isinstance(x, bool):
        return rat_str(Fraction(x))
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return float(x)


def scalar_from_json(v):
    """A rational string or integer becomes a Fraction; a float stays a float."""
    if isinstance(v, bool):
        raise TypeError("boolean is not a scalar")
    if isinstance(v, float):
        return v
    return as_rational(v)


def complex_from_json(v):
    if isinstance(v, dict):
        return complex(float(v["re"]), float(v.get("im", 0.0)))
    if isinstance(v, (int, float)) and not isinstance(v, bool):
        return complex(v)
    if isinstance(v, str):
        return complex(as_rational(v))
    raise TypeError(f"not a complex value: {v!r}")


@singledispatch
def to_json(obj):
    return scalar_to_json(obj)


@to_json.register
def _(obj: Poly):
    return {"n": obj.n, "coeffs": [scalar_to_json(c) for c in obj.coeffs]}


@to_json.register
def _(obj: GroupElement):
    return {"n": obj.n, "u": scalar_to_json(obj.u), "P": to_json(obj.P)}


@to_json.register
def _(obj: StepFunction):
    return [{"lo": rat_str(lo), "hi": rat_str(hi), "val": rat_str(v)} for lo, hi, v in obj.pieces]


@to_json.register
def _(obj: Interval):
    return {"lo": rat_str(obj.lo), "hi": rat_str(obj.hi)}


@to_json.register
def _(obj: Region):
    return [to_json(iv) for iv in obj.intervals]


@to_json.register
def _(obj: Partition):
    return {"of": to_json(obj.of), "cells": [to_json(c) for c in obj.cells]}


@to_json.register
def _(obj: LieElement):
    return {"n": obj.n, "u": scalar_to_json(obj.u), "a": [scalar_to_json(x) for x in obj.a]}


@to_json.register
def _(obj: CurrentElement):
    return {"n": obj.n, "c0": rat_str(obj.c0), "fields": [to_json(f) for f in obj.fields]}


@to_json.register
def _(obj: RescalingParams):
    return {
        "length": rat_str(obj.length),
        "a_I": rat_str(obj.a_I),
        "b": scalar_to_json(obj.b),
        "c": [scalar_to_json(ck) for ck in obj.c],
        "exact": obj.exact,
    }


@to_json.register
def _(obj: AlgebraElement):
    return [{"g": to_json(g), "c": scalar_to_json(complex(c))} for g, c in obj.terms.items()]


@to_json.register
def _(obj: TensorElement):
    words = []
    for key, c in obj.words.items():
        factors = [[{"g": to_json(g), "c": {"re": 1.0, "im": 0.0}}] for g in key]
        words.append({"coeff": scalar_to_json(complex(c)), "factors": factors})
    return {"n": obj.n, "partition": to_json(obj.partition), "words": words}


@to_json.register
def _(obj: StateSpec):
    if obj.weight_fn is not None:
        raise TypeError("custom weight functions cannot be serialized")
    d = obj.density
    return {"n": obj.n, "density": None if d is None else to_json(d)}


def poly_from_json(d):
    return Poly(int(d["n"]), tuple(scalar_from_json(c) for c in d["coeffs"]))


def group_from_json(d):
    n = int(d["n"])
    P = d.get("P", {"n": n, "coeffs": []})
    return GroupElement(n, scalar_from_json(d["u"]), poly_from_json(P))


def step_from_json(d):
    return StepFunction(tuple((p["lo"], p["hi"], p["val"]) for p in d))


def interval_from_json(d):
    if isinstance(d, (list, tuple)):
        return Interval(as_rational(d[0]), as_rational(d[1]))
    return Interval(as_rational(d["lo"]), as_rational(d["hi"]))


def region_from_json(d):
    return Region(tuple(interval_from_json(iv) for iv in d))


def partition_from_json(d):
    return Partition(region_from_json(d["of"]), tuple(region_from_json(c) for c in d["cells"]))


def lie_from_json(d):
    return LieElement(int(d["n"]), scalar_from_json(d["u"]), tuple(scalar_from_json(x) for x in d["a"]))


def current_from_json(d):
    return CurrentElement(int(d["n"]), as_rational(d.get("c0", 0)),
                          tuple(step_from_json(f) for f in d["fields"]))


def algebra_from_json(d, n=None):
    terms = {}
    for t in d:
        g = group_from_json(t["g"])
        if n is None:
            n = g.n
        c = complex_from_json(t.get("c", 1))
        terms[g] = terms.get(g, 0) + c
    if n is None:
        raise ValueError("cannot infer n from an empty algebra element")
    return AlgebraElement(n, terms)


def tensor_from_json(d):
    partition = partition_from_json(d["partition"])
    n = int(d["n"])
    total = TensorElement(n, partition)
    for w in d["words"]:
        factors = [algebra_from_json(f, n) for f in w["factors"]]
        word = TensorElement.from_factors(partition, factors, complex_from_json(w.get("coeff", 1)))
        total = total + word
    return total


def spec_from_json(d):
    dens = d.get("density")
    if isinstance(dens, list):
        dens = step_from_json(dens)
    elif dens is not None:
        dens = as_rational(dens)
    return StateSpec(int(d["n"]), dens)
