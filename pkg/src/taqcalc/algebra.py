"""Free graded-commutative algebras over F_p or Q.

Monomials are tuples ``((gen_index, exponent), ...)`` sorted by generator
index, where generators are indexed in the canonical order (degree, name).
Odd-degree generators square to zero unless the characteristic is 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from typing import Iterable, Optional, Tuple

from .modp import PrimeField, Rationals, field_from_name

Monomial = Tuple[Tuple[int, int], ...]
ONE: Monomial = ()


@dataclass(frozen=True)
class Generator:
    name: str
    degree: int
    # provenance for generators of free-algebra homology: (class name, DL word)
    base: Optional[str] = None
    word: Optional[tuple] = None


class GradedAlgebra:
    """A free graded-commutative algebra on finitely many named generators.

    ``degree_zero_cap`` bounds exponents of degree-0 generators so that
    basis enumeration terminates; it must be given if such generators exist.
    """

    def __init__(self, field, generators: Iterable, degree_zero_cap: Optional[int] = None):
        self.field = field_from_name(field)
        gens = [g if isinstance(g, Generator) else Generator(*g) for g in generators]
        gens.sort(key=lambda g: (g.degree, g.name))
        names = [g.name for g in gens]
        if len(set(names)) != len(names):
            raise ValueError("generator names must be unique")
        if any(g.degree < 0 for g in gens):
            raise ValueError("generator degrees must be non-negative")
        self.generators = tuple(gens)
        self.index = {g.name: k for k, g in enumerate(gens)}
        self.degree_zero_cap = degree_zero_cap

    def __repr__(self):
        return f"GradedAlgebra({self.field}, {[g.name for g in self.generators]})"

    @property
    def exterior_odd(self) -> bool:
        return self.field.char != 2

    def gen(self, name: str) -> "Element":
        return Element(self, {((self.index[name], 1),): self.field(1)})

    def one(self) -> "Element":
        return Element(self, {ONE: self.field(1)})

    def zero(self) -> "Element":
        return Element(self, {})

    def scalar(self, c) -> "Element":
        return Element(self, {ONE: self.field(c)})

    def monomial(self, powers: dict) -> Monomial:
        """Build a monomial from ``{name: exponent}``."""
        items = sorted((self.index[n], e) for n, e in powers.items() if e)
        return tuple(items)

    def element(self, terms: dict) -> "Element":
        return Element(self, terms)

    def mono_degree(self, m: Monomial) -> int:
        return sum(self.generators[i].degree * e for i, e in m)

    # -- products ---------------------------------------------------------
    def mono_mul(self, m1: Monomial, m2: Monomial):
        """Return (sign, monomial) or None when the product vanishes."""
        gens = self.generators
        if self.exterior_odd:
            odd1 = [(i, e) for i, e in m1 if gens[i].degree % 2]
            swaps = 0
            for i, e in m2:
                if gens[i].degree % 2:
                    for j, f in odd1:
                        if j == i:
                            return None
                        if j > i:
                            swaps += e * f
            sign = -1 if swaps % 2 else 1
        else:
            sign = 1
        merged = dict(m1)
        for i, e in m2:
            merged[i] = merged.get(i, 0) + e
        return sign, tuple(sorted(merged.items()))

    # -- bases -------------------------------------------------------------
    def _max_exp(self, g: Generator) -> Optional[int]:
        if g.degree == 0:
            if self.degree_zero_cap is None:
                raise ValueError(f"degree-0 generator {g.name} needs an exponent cap")
            return self.degree_zero_cap
        if g.degree % 2 and self.exterior_odd:
            return 1
        return None

    def basis(self, d: int) -> list[Monomial]:
        """All monomials of degree d, in canonical order."""
        if d < 0:
            return []
        gens = self.generators
        caps = [self._max_exp(g) for g in gens]
        out = []

        def rec(k, remaining, acc):
            if k == len(gens):
                if remaining == 0:
                    out.append(tuple(acc))
                return
            deg = gens[k].degree
            top = caps[k]
            if deg > 0:
                most = remaining // deg
                top = most if top is None else min(top, most)
            for e in range(top + 1):
                if e:
                    acc.append((k, e))
                rec(k + 1, remaining - e * deg, acc)
                if e:
                    acc.pop()

        rec(0, d, [])
        out.sort(key=self.mono_key)
        return out

    def mono_key(self, m: Monomial):
        return tuple((i, e) for i, e in m)

    def hilbert(self, d_max: int) -> list[int]:
        """Dimensions in degrees 0..d_max, computed from the product formula."""
        series = [0] * (d_max + 1)
        series[0] = 1
        for g in self.generators:
            top = self._max_exp(g)
            if g.degree == 0:
                series = [c * (top + 1) for c in series]
                continue
            new = [0] * (d_max + 1)
            for d, c in enumerate(series):
                if not c:
                    continue
                e = 0
                while d + e * g.degree <= d_max and (top is None or e <= top):
                    new[d + e * g.degree] += c
                    e += 1
            series = new
        return series

    # -- naming ----------------------------------------------------------
    def mono_str(self, m: Monomial, unicode: bool = False) -> str:
        if not m:
            return "1"
        parts = []
        for i, e in m:
            name = self.generators[i].name
            parts.append(name if e == 1 else f"{name}^{e}")
        return "*".join(parts)

    def mono_json(self, m: Monomial) -> dict:
        return {"gens": [[self.generators[i].name, e] for i, e in m]}

    def mono_from_json(self, obj: dict) -> Monomial:
        return self.monomial({n: e for n, e in obj["gens"]})


def tensor(a: GradedAlgebra, b: GradedAlgebra) -> GradedAlgebra:
    if a.field != b.field:
        raise ValueError("tensor factors must share a field")
    cap = a.degree_zero_cap if a.degree_zero_cap is not None else b.degree_zero_cap
    return GradedAlgebra(a.field, list(a.generators) + list(b.generators), cap)


class Element:
    """A finite linear combination of monomials.  Immutable by convention."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: GradedAlgebra, terms: dict):
        f = algebra.field
        self.algebra = algebra
        self.terms = {m: f(c) for m, c in terms.items() if f(c) != 0}

    def _check(self, other):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise ValueError("operands belong to different algebras")

    def __add__(self, other):
        self._check(other)
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Element(self.algebra, t)

    def __neg__(self):
        return Element(self.algebra, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return Element(self.algebra, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, Element):
            return self.scale(other)
        self._check(other)
        A = self.algebra
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                r = A.mono_mul(m1, m2)
                if r is None:
                    continue
                sign, m = r
                t[m] = t.get(m, 0) + sign * c1 * c2
        return Element(A, t)

    __rmul__ = scale

    def __pow__(self, n: int):
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        return isinstance(other, Element) and other.algebra is self.algebra and other.terms == self.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_homogeneous(self) -> bool:
        return len({self.algebra.mono_degree(m) for m in self.terms}) <= 1

    def degree(self) -> Optional[int]:
        degs = {self.algebra.mono_degree(m) for m in self.terms}
        if len(degs) > 1:
            raise ValueError("element is not homogeneous")
        return degs.pop() if degs else None

    def to_json(self) -> list:
        A = self.algebra
        return [[A.mono_json(m), str(c)] for m, c in sorted(self.terms.items(), key=lambda mc: A.mono_key(mc[0]))]

    def __str__(self):
        if not self.terms:
            return "0"
        A = self.algebra
        parts = []
        for m, c in sorted(self.terms.items(), key=lambda mc: A.mono_key(mc[0])):
            s = A.mono_str(m)
            parts.append(s if c == 1 else (str(c) if not m else f"{c}*{s}"))
        return " + ".join(parts)

    __repr__ = __str__


def augmentation(a: Element):
    """Coefficient of the empty monomial."""
    return a.terms.get(ONE, a.algebra.field(0))


def element_from_json(algebra: GradedAlgebra, obj: list) -> Element:
    terms: dict = {}
    for mono, coeff in obj:
        m = algebra.mono_from_json(mono)
        terms[m] = terms.get(m, 0) + algebra.field.parse(str(coeff))
    return Element(algebra, terms)


def parse_element(algebra: GradedAlgebra, text: str) -> Element:
    """Parse ``"2*x1*Q[0,2].x1^2 + x3"``; names may not contain ``+*^`` or spaces."""
    out = algebra.zero()
    for term in text.split("+"):
        term = term.strip()
        if not term:
            continue
        value = algebra.one()
        for factor in term.split("*"):
            factor = factor.strip()
            if factor.lstrip("-").replace("/", "").isdigit():
                value = value.scale(algebra.field.parse(factor))
                continue
            name, _, exp = factor.partition("^")
            if name not in algebra.index:
                raise KeyError(f"unknown generator {name!r}")
            value = value * algebra.gen(name) ** (int(exp) if exp else 1)
        out = out + value
    return out


class Vector:
    """Sparse vector over a field with string basis labels (graded by caller)."""

    __slots__ = ("field", "terms")

    def __init__(self, field, terms: Optional[dict] = None):
        self.field = field_from_name(field)
        f = self.field
        self.terms = {k: f(v) for k, v in (terms or {}).items() if f(v) != 0}

    def __add__(self, other: "Vector"):
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return Vector(self.field, t)

    def scale(self, c):
        return Vector(self.field, {k: c * v for k, v in self.terms.items()})

    __rmul__ = scale

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, Vector) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def to_json(self) -> list:
        return [[k, str(v)] for k, v in sorted(self.terms.items())]

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(k if v == 1 else f"{v}*{k}" for k, v in sorted(self.terms.items()))

    __repr__ = __str__
