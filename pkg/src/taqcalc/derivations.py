"""Derivations on free graded-commutative algebras.

Two kinds of target are supported.  A *module* target is the free module
over the source algebra on named symbols (think of the symbols as dx);
elements are written ``sum c * m * e`` with the algebra monomial on the
left.  A *base* target is a plain graded vector space, reached through
the augmentation; derivations into it kill all decomposables.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from .algebra import ONE, Element, GradedAlgebra, Vector, augmentation


class FreeModule:
    """Free left module over ``algebra`` on symbols of given degrees."""

    def __init__(self, algebra: GradedAlgebra, symbols):
        self.algebra = algebra
        self.symbols = dict(symbols)

    def symbol(self, name: str, coeff: Element = None) -> "ModuleElement":
        coeff = coeff if coeff is not None else self.algebra.one()
        return ModuleElement(self, {(m, name): c for m, c in coeff.terms.items()})

    def zero(self) -> "ModuleElement":
        return ModuleElement(self, {})


class ModuleElement:
    __slots__ = ("module", "terms")

    def __init__(self, module: FreeModule, terms: dict):
        f = module.algebra.field
        self.module = module
        self.terms = {k: f(c) for k, c in terms.items() if f(c) != 0}

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            t[k] = t.get(k, 0) + c
        return ModuleElement(self.module, t)

    def __neg__(self):
        return ModuleElement(self.module, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, ModuleElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def left(self, a: Element) -> "ModuleElement":
        """a . self"""
        A = self.module.algebra
        t: dict = {}
        for m2, c2 in a.terms.items():
            for (m, s), c in self.terms.items():
                r = A.mono_mul(m2, m)
                if r is None:
                    continue
                sign, mm = r
                t[(mm, s)] = t.get((mm, s), 0) + sign * c * c2
        return ModuleElement(self.module, t)

    def right(self, a: Element) -> "ModuleElement":
        """self . a, moving a past each symbol with its Koszul sign."""
        A = self.module.algebra
        degs = self.module.symbols
        t: dict = {}
        for (m, s), c in self.terms.items():
            for m2, c2 in a.terms.items():
                r = A.mono_mul(m, m2)
                if r is None:
                    continue
                sign, mm = r
                if degs[s] % 2 and A.mono_degree(m2) % 2:
                    sign = -sign
                t[(mm, s)] = t.get((mm, s), 0) + sign * c * c2
        return ModuleElement(self.module, t)

    def to_json(self) -> list:
        A = self.module.algebra
        rows = sorted(self.terms.items(), key=lambda kv: (kv[0][1], A.mono_key(kv[0][0])))
        return [[A.mono_json(m), s, str(c)] for (m, s), c in rows]

    def __str__(self):
        if not self.terms:
            return "0"
        A = self.module.algebra
        parts = []
        for (m, s), c in sorted(self.terms.items(), key=lambda kv: (kv[0][1], A.mono_key(kv[0][0]))):
            body = s if not m else f"{A.mono_str(m)}*{s}"
            parts.append(body if c == 1 else f"{c}*{body}")
        return " + ".join(parts)

    __repr__ = __str__


@dataclass
class DerivationSpec:
    """Values of a derivation on the generators of ``source``.

    ``target`` is a :class:`FreeModule` over ``source`` or the string
    ``"base"``; values are then :class:`ModuleElement` resp.
    :class:`Vector`.  ``value_degrees`` gives degrees of base labels.
    """

    source: GradedAlgebra
    target: object
    generator_values: Mapping[str, object]
    target_shift: int = 0
    value_degrees: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        A = self.source
        missing = [g.name for g in A.generators if g.name not in self.generator_values]
        if missing:
            raise ValueError(f"no value given for generators {missing}")
        for g in A.generators:
            v = self.generator_values[g.name]
            want = g.degree + self.target_shift
            for d in self._value_degrees(v):
                if d != want:
                    raise ValueError(f"value on {g.name} has degree {d}, expected {want}")

    def _value_degrees(self, v):
        if isinstance(v, ModuleElement):
            syms = v.module.symbols
            return {self.source.mono_degree(m) + syms[s] for (m, s) in v.terms}
        if isinstance(v, Vector):
            return {self.value_degrees[k] for k in v.terms if k in self.value_degrees}
        raise TypeError(f"unsupported derivation value {v!r}")

    def zero_value(self):
        if isinstance(self.target, FreeModule):
            return self.target.zero()
        return Vector(self.source.field)


def extend_leibniz(spec: DerivationSpec, a: Element) -> ModuleElement:
    """The unique derivation with the given generator values.

    d(uv) = d(u) v + (-1)^{|u| s} u d(v) where s is the parity of the shift.
    """
    if not isinstance(spec.target, FreeModule):
        raise ValueError("extend_leibniz needs a module target")
    A = spec.source
    if a.algebra is not A:
        raise ValueError("element is not in the source algebra")
    odd = spec.target_shift % 2
    out = spec.target.zero()
    for m, c in a.terms.items():
        factors = [i for i, e in m for _ in range(e)]
        prefix_deg = 0
        for pos, i in enumerate(factors):
            g = A.generators[i]
            prefix = A.element({tuple(_collect(factors[:pos])): 1}) if pos else A.one()
            suffix = A.element({tuple(_collect(factors[pos + 1:])): 1})
            term = spec.generator_values[g.name].left(prefix).right(suffix)
            sign = -1 if odd and prefix_deg % 2 else 1
            out = out + _scale(term, sign * c)
            prefix_deg += g.degree
    return out


def _collect(indices):
    counts: dict = {}
    for i in indices:
        counts[i] = counts.get(i, 0) + 1
    return sorted(counts.items())


def _scale(v: ModuleElement, c) -> ModuleElement:
    return ModuleElement(v.module, {k: c * x for k, x in v.terms.items()})


def augmented_derivation(spec: DerivationSpec, a: Element) -> Vector:
    """Delta(uv) = eps(u) Delta(v) + eps(v) Delta(u): only single generators survive."""
    if isinstance(spec.target, FreeModule):
        raise ValueError("augmented_derivation needs a base target")
    A = spec.source
    if a.algebra is not A:
        raise ValueError("element is not in the source algebra")
    out = Vector(A.field)
    for m, c in a.terms.items():
        if len(m) == 1 and m[0][1] == 1:
            name = A.generators[m[0][0]].name
            out = out + spec.generator_values[name].scale(c)
    return out


def taq_spec(algebra: GradedAlgebra) -> DerivationSpec:
    """Delta(Q^I x) = x when I is empty, 0 otherwise."""
    values, degrees = {}, {}
    for g in algebra.generators:
        if g.word is None:
            raise ValueError(f"{g.name} is not a free-homology generator")
        if g.word:
            values[g.name] = Vector(algebra.field)
        else:
            values[g.name] = Vector(algebra.field, {g.base: 1})
            degrees[g.base] = g.degree
    return DerivationSpec(algebra, "base", values, 0, degrees)


def taq_delta(algebra: GradedAlgebra, a: Element) -> Vector:
    """The TAQ derivation of a reduced free algebra into span{x_j}."""
    if a.algebra is not algebra:
        raise ValueError("element is not in this algebra")
    return augmented_derivation(taq_spec(algebra), a)


def hurewicz_composite(htable: Mapping[str, Element], spec: DerivationSpec) -> dict:
    """Send each homotopy symbol through its Hurewicz image and then Delta."""
    return {sym: augmented_derivation(spec, h) for sym, h in htable.items()}
