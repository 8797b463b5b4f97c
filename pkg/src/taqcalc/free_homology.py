"""Homology of free and reduced free commutative S-algebras from cell data."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .algebra import Element, Generator, GradedAlgebra
from .dlindex import (
    DLIndex, degree_shift, entry_shift, enumerate_generators, from_flat,
    is_admissible, word_label,
)
from .modp import PrimeField, Rationals, field_from_name


@dataclass(frozen=True)
class CellModule:
    """Homology basis of a connective spectrum, optionally with a bottom cell."""

    field: object
    classes: tuple  # of (name, degree)
    bottom_cell: Optional[str] = None

    def __post_init__(self):
        object.__setattr__(self, "field", field_from_name(self.field))
        object.__setattr__(self, "classes", tuple((str(n), int(d)) for n, d in self.classes))
        names = [n for n, _ in self.classes]
        if len(set(names)) != len(names):
            raise ValueError("class names must be unique")
        for n, d in self.classes:
            if d < 0:
                raise ValueError(f"class {n} has negative degree")
            if any(ch in n for ch in "+*^ "):
                raise ValueError(f"class name {n!r} contains a reserved character")
        if self.bottom_cell is not None:
            degs = dict(self.classes)
            if self.bottom_cell not in degs:
                raise ValueError("bottom cell is not one of the classes")
            if degs[self.bottom_cell] != 0:
                raise ValueError("bottom cell must have degree 0")
            if sum(1 for _, d in self.classes if d == 0) != 1:
                raise ValueError("bottom cell must be the only degree-0 class")

    @classmethod
    def from_json(cls, obj: dict) -> "CellModule":
        return cls(obj["field"], tuple((c["name"], c["degree"]) for c in obj["classes"]),
                   obj.get("bottom_cell"))

    def to_json(self) -> dict:
        out = {"field": str(self.field),
               "classes": [{"name": n, "degree": d} for n, d in self.classes]}
        if self.bottom_cell is not None:
            out["bottom_cell"] = self.bottom_cell
        return out

    def reduced_classes(self):
        return tuple((n, d) for n, d in self.classes if n != self.bottom_cell)


def generator_name(cls_name: str, word: DLIndex) -> str:
    return cls_name if not word else f"{word_label(word)}.{cls_name}"


def _build(field, classes, d_max: int, degree_zero_cap=None) -> GradedAlgebra:
    gens = []
    if isinstance(field, Rationals):
        for name, deg in classes:
            if deg <= d_max:
                gens.append(Generator(name, deg, name, ()))
    else:
        for name, deg in classes:
            if deg > d_max:
                continue
            for w in enumerate_generators(deg, field, d_max):
                gens.append(Generator(generator_name(name, w), deg + degree_shift(w, field), name, w))
    alg = GradedAlgebra(field, gens, degree_zero_cap)
    alg.d_max = d_max
    return alg


def free_algebra_homology(X: CellModule, d_max: int, degree_zero_cap: int = 0) -> GradedAlgebra:
    """H_*(PX) through degree d_max.

    Degree-0 classes give degree-0 polynomial generators; their exponents
    are truncated at ``degree_zero_cap`` for basis enumeration.
    """
    return _build(X.field, X.classes, d_max, degree_zero_cap)


def reduced_free_algebra_homology(X: CellModule, d_max: int) -> GradedAlgebra:
    """H_*(P~X): the same construction on the classes other than the bottom cell."""
    if X.bottom_cell is None:
        raise ValueError("reduced construction needs a bottom cell")
    return _build(X.field, X.reduced_classes(), d_max)


def kunneth_quotient_oracle(X: CellModule, d_max: int, degree_zero_cap: int = 2) -> list[int]:
    """Dimensions of H_*(PX)/(x0 - 1, Q^I x0 : len(I) > 0), counted on a basis.

    Each basis monomial of H_*(PX) is pushed through the substitution
    x0 -> 1, Q^I x0 -> 0 and the images are counted up to linear span.
    """
    if X.bottom_cell is None:
        raise ValueError("the quotient needs a bottom cell")
    if isinstance(X.field, Rationals):
        raise ValueError("the Kunneth oracle is for F_p coefficients")
    full = free_algebra_homology(X, d_max, degree_zero_cap)
    x0 = X.bottom_cell
    dims = []
    for d in range(d_max + 1):
        images = set()
        for m in full.basis(d):
            image = []
            killed = False
            for i, e in m:
                g = full.generators[i]
                if g.base == x0:
                    if g.word:
                        killed = True
                        break
                    continue  # x0 -> 1
                image.append((i, e))
            if not killed:
                images.add(tuple(image))
        # distinct surviving monomials are linearly independent
        dims.append(len(images))
    return dims


def convolve(a: list[int], b: list[int]) -> list[int]:
    n = min(len(a), len(b))
    return [sum(a[i] * b[d - i] for i in range(d + 1)) for d in range(n)]


def apply_Q(algebra: GradedAlgebra, op, target: str) -> Element:
    """Apply beta^e Q^r to a named generator Q^I x_j of a free-homology algebra."""
    field = algebra.field
    if not isinstance(field, PrimeField):
        raise ValueError("Dyer-Lashof operations need F_p coefficients")
    p = field.p
    e, r = op
    if p == 2 and e:
        raise ValueError("beta does not occur at p = 2")
    if r < 1 or e not in (0, 1):
        raise ValueError(f"bad operation {op}")
    g = algebra.generators[algebra.index[target]]
    if g.word is None:
        raise ValueError(f"{target} is not a Dyer-Lashof generator")
    word = ((e, r),) + tuple(g.word)
    if not is_admissible(word, p):
        raise ValueError(f"{word_label(word)} is not admissible")
    m = g.degree
    lead = r if p == 2 else 2 * r
    if lead > m:
        name = generator_name(g.base, word)
        if name not in algebra.index:
            raise ValueError(f"{name} lies beyond the truncation degree")
        return algebra.gen(name)
    if lead == m and e == 0:
        return algebra.gen(target) ** p
    return algebra.zero()


def op_degree(op, field) -> int:
    return entry_shift(op[0], op[1], field.p)
