"""Homology tables for Thom spectra, connective K-theory and the dual Steenrod algebra.

Everything here is "modulo decomposables" data: Dyer-Lashof actions are
recorded on the free module spanned by polynomial generators, and TAQ
Hurewicz images are single elements of the relevant homology algebra.

ASCII names: ``z3`` is zeta_3, ``xi3`` is xi_3, ``S^-1`` a desuspension.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from . import linalg
from .algebra import Element, GradedAlgebra, Vector
from .derivations import DerivationSpec, augmented_derivation
from .modp import _as_field, binom_mod_p, multinom_mod_p, p_digits

# -- pretty printing --------------------------------------------------------

_SUP = str.maketrans("0123456789-", "⁰¹²³⁴⁵⁶⁷⁸⁹⁻")
_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_GREEK = {"xi": "ξ", "z": "ζ", "taubar": "τ̄", "tau": "τ"}


def to_unicode(text: str) -> str:
    """Render an ASCII label such as ``S^-1 z1^2 z2`` with Greek letters and scripts."""
    text = re.sub(r"\b(taubar|tau|xi|z)(\d+)",
                  lambda m: _GREEK[m.group(1)] + m.group(2).translate(_SUB), text)
    text = re.sub(r"\b([ab]'?)(\d+)\b", lambda m: m.group(1) + m.group(2).translate(_SUB), text)
    text = re.sub(r"S\^(-?\d+) ?", lambda m: "Σ" + m.group(1).translate(_SUP), text)
    text = re.sub(r"\^(\d+)", lambda m: m.group(1).translate(_SUP), text)
    text = text.replace("*", "")
    return re.sub(r"(?<=[^\s+]) (?=[^\s+(])", "", text)


def _is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


# -- generator catalogs -----------------------------------------------------

@dataclass(frozen=True)
class SpectrumTable:
    """Names and degrees of polynomial/exterior generators of a homology algebra."""

    name: str
    p: int
    generators: tuple  # of (ascii name, degree)

    def degree(self, gen: str) -> int:
        return dict(self.generators)[gen]


def spectrum_table(name: str, field, count: int = 6) -> SpectrumTable:
    p = _as_field(field).p
    if name == "MU":
        gens = [(f"b{r}", 2 * r) for r in range(1, count + 1)]
    elif name == "MO":
        if p != 2:
            raise ValueError("MO is a mod 2 table")
        gens = [(f"a{n}", n) for n in range(1, count + 1)]
    elif name == "MSU":
        if p != 2:
            raise ValueError("MSU is a mod 2 table")
        gens = [(f"a'{n}", 2 * n) for n in range(2, count + 2)]
    elif name == "A":
        if p == 2:
            gens = [(f"z{s}", 2 ** s - 1) for s in range(1, count + 1)]
        else:
            gens = [(f"xi{s}", 2 * p ** s - 2) for s in range(1, count + 1)]
            gens += [(f"tau{s}", 2 * p ** s - 1) for s in range(0, count)]
    elif name == "ku":
        if p != 2:
            raise ValueError("use 'l' at odd primes")
        gens = [("z1^2", 2), ("z2^2", 6)] + [(f"z{s}", 2 ** s - 1) for s in range(3, count + 1)]
    elif name == "ko":
        if p != 2:
            raise ValueError("ko is a mod 2 table")
        gens = [("z1^4", 4), ("z2^2", 6)] + [(f"z{s}", 2 ** s - 1) for s in range(3, count + 1)]
    elif name == "l":
        if p == 2:
            raise ValueError("l is an odd-primary table")
        gens = [(f"z{s}", 2 * p ** s - 2) for s in range(1, count + 1)]
        gens += [(f"taubar{s}", 2 * p ** s - 1) for s in range(2, count + 1)]
    else:
        raise ValueError(f"unknown spectrum {name!r}")
    return SpectrumTable(name, p, tuple(sorted(gens, key=lambda g: (g[1], g[0]))))


# -- the mod 2 dual Steenrod algebra in the zeta basis ----------------------

A2_GENERATORS = 8  # zeta_1 .. zeta_8, enough for degrees below 255


@lru_cache(maxsize=None)
def dual_steenrod_2() -> GradedAlgebra:
    return GradedAlgebra(2, [(f"z{s}", 2 ** s - 1) for s in range(1, A2_GENERATORS + 1)])


@lru_cache(maxsize=None)
def xi(s: int) -> Element:
    """Milnor's xi_s written in the conjugate generators: xi_n = sum_i xi_{n-i}^{2^i} zeta_i."""
    A = dual_steenrod_2()
    if s < 0 or s > A2_GENERATORS:
        raise ValueError(f"xi_{s} is out of range")
    if s == 0:
        return A.one()
    out = A.zero()
    for i in range(1, s + 1):
        out = out + xi(s - i) ** (2 ** i) * A.gen(f"z{i}")
    return out


def _coords(x: Element, basis) -> list[int]:
    pos = {m: k for k, m in enumerate(basis)}
    v = [0] * len(basis)
    for m, c in x.terms.items():
        v[pos[m]] = c
    return v


# -- MU: Dyer-Lashof action and indecomposables -----------------------------

def mu_action_target(q: int, n: int, field) -> Optional[int]:
    """Index k of the generator b_k that Q^q b_n can hit, or None."""
    p = _as_field(field).p
    if p == 2:
        return None if q % 2 else n + q // 2
    return n + q * (p - 1)


def mu_dl_action(q: int, n: int, field) -> Vector:
    """Q^q b_n modulo decomposables, as a vector on the labels ``b{k}``."""
    F = _as_field(field)
    p = F.p
    if q < 1 or n < 1:
        raise ValueError("operation and generator indices must be positive")
    if p == 2:
        if q % 2:
            return Vector(F)
        r = q // 2
        return Vector(F, {f"b{n + r}": binom_mod_p(n, r - n - 1, F)})
    sign = -1 if (q + n + 1) % 2 else 1
    return Vector(F, {f"b{n + q * (p - 1)}": sign * binom_mod_p(n, q - n - 1, F)})


def mu_dl_indecomposables(field, d_max: int) -> list[int]:
    """Indices k (2k <= d_max) spanning a complement to the image of all Q^q."""
    F = _as_field(field)
    p = F.p
    if d_max < 2:
        raise ValueError("d_max >= 2")
    top = d_max // 2
    rows = set()
    for n in range(1, top + 1):
        q = 1
        while True:
            target = mu_action_target(q, n, F)
            if target is not None and target > top:
                break
            v = mu_dl_action(q, n, F)
            if v:
                row = [0] * top
                for label, c in v.terms.items():
                    row[int(label[1:]) - 1] = c
                rows.add(tuple(row))
            q += 1
    _, pivots = linalg.rref([list(r) for r in sorted(rows)], p)
    hit = set(pivots)
    return [k for k in range(1, top + 1) if k - 1 not in hit]


def mu_indecomposable_closed_form(k: int, field) -> bool:
    """Kochman's list: powers of 2 at p=2; the digit-chain condition at odd p."""
    p = _as_field(field).p
    if k < 1:
        raise ValueError("k >= 1")
    if p == 2:
        return _is_power_of_two(k)
    n = k
    while n % p == 0:
        n //= p
    r = n % (p - 1) or p - 1
    s = (n - r) // (p - 1)
    if s == 0:
        return True
    digits = p_digits(s, p)  # s_0, s_1, ..., s_d
    if digits[-1] < 1 or digits[0] > r:
        return False
    return all(digits[i + 1] <= digits[i] for i in range(len(digits) - 1))


@dataclass(frozen=True)
class DecompositionWitness:
    source: int        # generator index b_source
    operation: int     # upper index of Q
    coefficient: int   # the binomial coefficient mod p
    lands_on: int      # index reached by the action rule for (operation, source)


def dl_decomp_witness(n: int, field) -> DecompositionWitness:
    """Operation on the lowest p-adic piece of n that should produce b_n."""
    F = _as_field(field)
    p = F.p
    digits = p_digits(n, p) if n > 0 else []
    nonzero = [i for i, d in enumerate(digits) if d]
    if len(nonzero) < 2:
        raise ValueError(f"{n} has a single nonzero {p}-adic digit; no witness")
    s = nonzero[0]
    src = digits[s] * p ** s
    op = 2 * n - 2 ** (s + 1) if p == 2 else n - src
    top = n - src - 1  # coefficient C(n - src - 1, src)
    coeff = binom_mod_p(src, top - src, F)
    return DecompositionWitness(src, op, coeff, mu_action_target(op, src, F))


# -- theta' for MU ----------------------------------------------------------

@lru_cache(maxsize=None)
def xi_algebra(p: int, count: int) -> GradedAlgebra:
    """F_p[xi_1..xi_count] with |xi_j| = 2p^j - 2 (odd primes)."""
    return GradedAlgebra(p, [(f"xi{j}", 2 * p ** j - 2) for j in range(1, count + 1)])


def _xi_count(k: int, p: int) -> int:
    j = 0
    while p ** (j + 1) <= k:
        j += 1
    return max(j, 1)


def _xi_gen(A: GradedAlgebra, j: int) -> Element:
    return A.one() if j == 0 else A.gen(f"xi{j}")


@dataclass(frozen=True)
class ThetaImage:
    shift: int          # suspension of the target summand (2r at odd p, 2 or 4 at p=2)
    element: Element
    label: str

    def __bool__(self):
        return bool(self.element)


def adams_summand(k: int, p: int) -> int:
    """The r in 1..p-1 with r = k mod (p - 1)."""
    return k % (p - 1) or p - 1


def theta_prime_MU_series(k: int, p: int) -> Element:
    """Coefficient of t^k in t^r (sum_j xi_j t^{p^j - 1})^r, by truncated expansion."""
    if p == 2:
        raise ValueError("the generating function is the odd-primary description")
    r = adams_summand(k, p)
    A = xi_algebra(p, _xi_count(k, p))
    bound = k - r
    if bound < 0:
        return A.zero()
    base = {}
    j = 0
    while p ** j - 1 <= bound:
        if j <= len(A.generators):
            base[p ** j - 1] = _xi_gen(A, j)
        j += 1
    series = {0: A.one()}
    for _ in range(r):
        new: dict = {}
        for a, x in series.items():
            for b, y in base.items():
                if a + b <= bound:
                    new[a + b] = new.get(a + b, A.zero()) + x * y
        series = new
    return series.get(bound, A.zero())


def theta_prime_MU_closed(k: int, p: int) -> Element:
    """The multinomial closed form for b_{(s(p-1)+r)p^e}."""
    if p == 2:
        raise ValueError("odd primes only")
    A = xi_algebra(p, _xi_count(k, p))
    n, e = k, 0
    while n % p == 0:
        n //= p
        e += 1
    r = adams_summand(n, p)
    s = (n - r) // (p - 1)
    digits = p_digits(s, p) if s else []
    chain = [r] + digits + [0]
    exps = [chain[i] - chain[i + 1] for i in range(len(chain) - 1)]
    if any(x < 0 for x in exps):
        return A.zero()
    coeff = multinom_mod_p(exps, p)
    out = A.scalar(coeff)
    for offset, x in enumerate(exps):
        if x:
            out = out * _xi_gen(A, e + offset) ** x
    return out


def theta_prime_MU(k: int, field) -> ThetaImage:
    """TAQ Hurewicz image of b_k for MU (target Sigma^2 ku, or the Adams summands)."""
    p = _as_field(field).p
    if k < 1:
        raise ValueError("k >= 1")
    if p == 2:
        A = dual_steenrod_2()
        if not _is_power_of_two(k):
            return ThetaImage(2, A.zero(), "0")
        s = k.bit_length() - 1
        label = "S^2" if s == 0 else f"S^2 xi{s}^2"
        return ThetaImage(2, xi(s) ** 2, label)
    r = adams_summand(k, p)
    x = theta_prime_MU_closed(k, p)
    return ThetaImage(2 * r, x, _element_label(x, f"S^{2 * r}"))


def _element_label(x: Element, prefix: str) -> str:
    if not x:
        return "0"
    body = str(x).replace("*", " ")
    return prefix if body == "1" else f"{prefix} {body}"


def theta_prime_MU_spec(count: int) -> DerivationSpec:
    """theta' at p=2 as a base-valued derivation on F_2[b_1..b_count]."""
    src = GradedAlgebra(2, [(f"b{k}", 2 * k) for k in range(1, count + 1)])
    values, degrees = {}, {}
    for k in range(1, count + 1):
        img = theta_prime_MU(k, 2)
        values[f"b{k}"] = Vector(2, {img.label: 1} if img else {})
        if img:
            degrees[img.label] = 2 * k
    return DerivationSpec(src, "base", values, 0, degrees)


# -- theta' for MSU ---------------------------------------------------------

def msu_dl_indecomposable(k: int) -> bool:
    """a'_k (degree 2k) is Dyer-Lashof indecomposable iff 2k = 2^m + 2^n."""
    if k < 2:
        raise ValueError("MSU generators a'_k have k >= 2")
    return bin(k).count("1") <= 2


def theta_prime_MSU(k: int) -> ThetaImage:
    """Image of the generator a'_k in degree 2k (k >= 2) in H_*(Sigma^4 ku)."""
    if k < 2:
        raise ValueError("MSU generators a'_k have k >= 2 (degree >= 4)")
    A = dual_steenrod_2()
    bits = [i for i in range(k.bit_length()) if k >> i & 1]
    if len(bits) == 1:
        n = bits[0] - 1
        label = "S^4" if n == 0 else f"S^4 xi{n}^4"
        return ThetaImage(4, xi(n) ** 4, label)
    if len(bits) == 2:
        m, n = bits
        parts = [f"xi{j}^2" for j in (m, n) if j]
        return ThetaImage(4, xi(m) ** 2 * xi(n) ** 2, " ".join(["S^4"] + parts))
    return ThetaImage(4, A.zero(), "0")


def theta_prime_MSU_spec(count: int) -> DerivationSpec:
    src = GradedAlgebra(2, [(f"a'{k}", 2 * k) for k in range(2, count + 2)])
    values, degrees = {}, {}
    for k in range(2, count + 2):
        img = theta_prime_MSU(k)
        values[f"a'{k}"] = Vector(2, {img.label: 1} if img else {})
        if img:
            degrees[img.label] = 2 * k
    return DerivationSpec(src, "base", values, 0, degrees)


def derivation_kills_products(spec: DerivationSpec, max_factors: int = 3) -> bool:
    """Check that products of two or more generators map to zero."""
    A = spec.source
    gens = [A.gen(g.name) for g in A.generators]
    for i, x in enumerate(gens):
        for y in gens[i:]:
            if augmented_derivation(spec, x * y):
                return False
            if max_factors >= 3 and augmented_derivation(spec, x * y * gens[0]):
                return False
    return True


# -- H_*(ko), H_*(ko<1>) and psi_* ------------------------------------------

KO1_GENERATORS = {"S^-1 z1^2": 1, "S^-1 z2": 2, "S^-1 z1^2 z2": 4}


def _psi_multiplier(g: str) -> Element:
    return {"S^-1 z1^2": xi(0), "S^-1 z2": xi(1), "S^-1 z1^2 z2": xi(2)}[g]


def in_ko(w: Element) -> bool:
    """Membership in H_*(ko) = F_2[z1^4, z2^2, z3, z4, ...] inside the dual Steenrod algebra."""
    A = dual_steenrod_2()
    i1, i2 = A.index["z1"], A.index["z2"]
    for m in w.terms:
        e = dict(m)
        if e.get(i1, 0) % 4 or e.get(i2, 0) % 2:
            return False
    return True


def ko_basis(d: int) -> list:
    A = dual_steenrod_2()
    return [m for m in A.basis(d) if in_ko(A.element({m: 1}))]


class KoOneElement:
    """Element of the free H_*(ko)-module on the three ko<1> generators."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: dict):
        for g, w in coeffs.items():
            if g not in KO1_GENERATORS:
                raise ValueError(f"foreign module generator {g!r}")
            if not in_ko(w):
                raise ValueError(f"coefficient {w} is not in H_*(ko)")
        self.coeffs = {g: w for g, w in coeffs.items() if w}

    def __add__(self, other):
        out = dict(self.coeffs)
        for g, w in other.coeffs.items():
            out[g] = out[g] + w if g in out else w
        return KoOneElement(out)

    def __eq__(self, other):
        return isinstance(other, KoOneElement) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted((g, w) for g, w in self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    def degree(self) -> Optional[int]:
        degs = {w.degree() + KO1_GENERATORS[g] for g, w in self.coeffs.items()}
        if len(degs) > 1:
            raise ValueError("inhomogeneous element")
        return degs.pop() if degs else None

    def to_json(self) -> list:
        return [[g, self.coeffs[g].to_json()] for g in KO1_GENERATORS if g in self.coeffs]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for g in KO1_GENERATORS:
            if g in self.coeffs:
                w = str(self.coeffs[g])
                parts.append(g if w == "1" else f"({w}) {g}")
        return " + ".join(parts)

    __repr__ = __str__


def psi_star(w: Element, g: str) -> Element:
    """psi_*(w g) in the dual Steenrod algebra, one degree lower."""
    if g not in KO1_GENERATORS:
        raise ValueError(f"foreign module generator {g!r}")
    if not in_ko(w):
        raise ValueError(f"{w} is not in H_*(ko)")
    return w * _psi_multiplier(g)


def psi_star_element(x: KoOneElement) -> Element:
    out = dual_steenrod_2().zero()
    for g, w in x.coeffs.items():
        out = out + psi_star(w, g)
    return out


def eta_tilde_star(w: Element) -> KoOneElement:
    return KoOneElement({"S^-1 z1^2": w})


def ko1_basis(d: int) -> list:
    """Pairs (monomial of H_*(ko), generator) of total degree d."""
    return [(m, g) for g, gd in KO1_GENERATORS.items() for m in ko_basis(d - gd)]


def _psi_matrix(d: int):
    A = dual_steenrod_2()
    target = A.basis(d - 1)
    cols = [_coords(psi_star(A.element({m: 1}), g), target) for m, g in ko1_basis(d)]
    return cols, target


def psi_injectivity(d_max: int = 20) -> dict:
    """Per degree: (dimension of H_d(ko<1>), rank of psi_* there)."""
    out = {}
    for d in range(1, d_max + 1):
        cols, _ = _psi_matrix(d)
        out[d] = (len(cols), linalg.rank(cols, 2) if cols else 0)
    return out


def psi_preimage(x: Element) -> Optional[KoOneElement]:
    """The unique element of H_*(ko<1>) mapping to x, if any."""
    A = dual_steenrod_2()
    d = x.degree()
    if d is None:
        return KoOneElement({})
    cols, target = _psi_matrix(d + 1)
    sol = linalg.solve(cols, _coords(x, target), 2)
    if sol is None:
        return None
    coeffs: dict = {}
    for c, (m, g) in zip(sol, ko1_basis(d + 1)):
        if c:
            coeffs[g] = coeffs.get(g, A.zero()) + A.element({m: 1})
    return KoOneElement(coeffs)


# -- MO ---------------------------------------------------------------------

def mo_dl_action(r: int, n: int) -> Vector:
    """Q^r a_n modulo decomposables, by analogy with the MU rule: (n, r-n-1) a_{n+r}."""
    if r < 1 or n < 1:
        raise ValueError("indices must be positive")
    return Vector(2, {f"a{n + r}": binom_mod_p(n, r - n - 1, 2)})


@dataclass(frozen=True)
class MOImage:
    label: str
    element: KoOneElement

    def __bool__(self):
        return bool(self.element)


def theta_MO(n: int) -> MOImage:
    """TAQ Hurewicz image of the homotopy generator z_n of MO in H_n(ko<1>)."""
    if n < 1 or _is_power_of_two(n + 1):
        raise ValueError(f"z_{n} is not a polynomial generator of pi_*(MO)")
    if not _is_power_of_two(n):
        return MOImage("0", KoOneElement({}))
    A = dual_steenrod_2()
    if n == 2:
        return MOImage("S^-1 z2", KoOneElement({"S^-1 z2": A.one()}))
    if n == 4:
        return MOImage("S^-1 z1^2 z2", KoOneElement({"S^-1 z1^2 z2": A.one()}))
    s = n.bit_length() - 1
    # xi_s need not lie in H_*(ko); the class is the psi_*-preimage of xi_s
    pre = psi_preimage(xi(s))
    if pre is None:
        raise ArithmeticError(f"xi_{s} is not in the image of psi_*")
    return MOImage(f"S^-1 z1^2 xi{s}", pre)


def h_to_mo_obstruction() -> dict:
    """Q^4 a_1 hits a_5 while the dual Steenrod algebra has no degree 5 indecomposable."""
    action = mo_dl_action(4, 1)
    coeff = action.terms.get("a5", 0)
    indecomposable_degrees = [2 ** s - 1 for s in range(1, A2_GENERATORS + 1)]
    has_five = 5 in indecomposable_degrees
    return {
        "operation": "Q^4 a1",
        "image": str(action),
        "coefficient": coeff,
        "indecomposable_degrees": indecomposable_degrees,
        "degree_5_indecomposable": has_five,
        "contradiction": bool(coeff) and not has_five,
    }


# -- Steinberger's vanishing table ------------------------------------------

def steinberger_theta_H(field, count: int = 4) -> dict:
    """theta' on generators of the dual Steenrod algebra: 'nonzero' or 'zero'.

    Only nonvanishing is known for the bottom generator, so values are
    states rather than elements.
    """
    p = _as_field(field).p
    table = {}
    if p == 2:
        for i in range(1, count + 1):
            table[f"xi{i}"] = "nonzero" if i == 1 else "zero"
    else:
        for i in range(0, count + 1):
            table[f"tau{i}"] = "nonzero" if i == 0 else "zero"
        for i in range(1, count + 1):
            table[f"xi{i}"] = "zero"
    return table


# -- the spectrum map versus the TAQ route ----------------------------------

def comparison_remark(n: int) -> tuple:
    """Images of Sigma^-2 beta_n: via a map of spectra, and via b_{n-1} and theta'."""
    if n < 2:
        raise ValueError("n >= 2")
    A = dual_steenrod_2()
    spectrum = xi(n.bit_length() - 1) ** 4 if _is_power_of_two(n) else A.zero()
    taq = xi((n - 1).bit_length() - 1) ** 2 if _is_power_of_two(n - 1) else A.zero()
    return spectrum, taq


# -- Kriz's basis for TAQ of HF_2 ------------------------------------------

def _entries_before(b: int, room: int, convention: str) -> range:
    """Entries a <= room that may precede b."""
    return range(2 * b, room + 1) if convention == "steenrod" else range(1, min(room, 2 * b) + 1)


def _entries_after(a: int, room: int, convention: str) -> range:
    """Entries b <= room that may follow a."""
    return range(1, min(room, a // 2) + 1) if convention == "steenrod" else range((a + 1) // 2, room + 1)


def kriz_words_by_length(d_max: int, convention: str = "steenrod") -> list[int]:
    """Counts per degree 1 + sum(I), grown right to left, length by length."""
    counts = [0] * (d_max + 1)
    if d_max >= 1:
        counts[1] = 1
    budget = d_max - 1
    # words of the current length, counted by (leading entry, entry sum)
    layer = {(i, i): 1 for i in range(4, budget + 1)}
    while layer:
        nxt: dict = {}
        for (lead, total), c in layer.items():
            counts[1 + total] += c
            for a in _entries_before(lead, budget - total, convention):
                key = (a, total + a)
                nxt[key] = nxt.get(key, 0) + c
        layer = nxt
    return counts


def kriz_words_by_leading(d_max: int, convention: str = "steenrod") -> list[int]:
    """Same counts via a table indexed by entry sum and leading entry."""
    budget = d_max - 1
    # prefix[t][k] = number of words with entry sum t and leading entry <= k
    prefix = [[0] * (budget + 1) for _ in range(budget + 1)]
    counts = [0] * (d_max + 1)
    if d_max >= 1:
        counts[1] = 1
    for total in range(1, budget + 1):
        row, running = prefix[total], 0
        for lead in range(1, total + 1):
            rest = total - lead
            if rest == 0:
                running += 1 if lead >= 4 else 0
            else:
                nxt = _entries_after(lead, rest, convention)
                if len(nxt):
                    running += prefix[rest][nxt[-1]] - prefix[rest][nxt[0] - 1]
            row[lead] = running
        for k in range(total + 1, budget + 1):
            row[k] = running
        counts[1 + total] = running
    return counts


CROSS_CHECK_DEGREE = 64


def kriz_taq_dimensions(d_max: int, convention: str = "steenrod") -> list[int]:
    """dim TAQ^d(HF_2) for d = 0..d_max.

    The layered count is re-run as a cross-check up to CROSS_CHECK_DEGREE;
    beyond that it grows too fast in the "dl" convention.
    """
    if d_max < 1:
        raise ValueError("d_max >= 1")
    if convention not in ("steenrod", "dl"):
        raise ValueError("convention is 'steenrod' or 'dl'")
    dims = kriz_words_by_leading(d_max, convention)
    low = min(d_max, CROSS_CHECK_DEGREE)
    if kriz_words_by_length(low, convention) != dims[: low + 1]:
        raise ArithmeticError("enumeration orders disagree")
    return dims


# -- CP^infty_2 versus ku ---------------------------------------------------

def _ku_side(p: int, d_max: int) -> list[int]:
    """dim H_n(Sigma^2 ku) (p=2) or of the sum of Sigma^{2r} l (p odd)."""
    if p == 2:
        gens = [("z1^2", 2), ("z2^2", 6)]
        s = 3
        while 2 ** s - 1 <= d_max:
            gens.append((f"z{s}", 2 ** s - 1))
            s += 1
        base = GradedAlgebra(2, gens).hilbert(d_max)
        return [0, 0] + base[: d_max - 1] if d_max >= 1 else [0] * (d_max + 1)
    gens = []
    s = 1
    while 2 * p ** s - 2 <= d_max:
        gens.append((f"z{s}", 2 * p ** s - 2))
        s += 1
    s = 2
    while 2 * p ** s - 1 <= d_max:
        gens.append((f"taubar{s}", 2 * p ** s - 1))
        s += 1
    ell = GradedAlgebra(p, gens).hilbert(d_max)
    out = [0] * (d_max + 1)
    for r in range(1, p):
        for n in range(2 * r, d_max + 1):
            out[n] += ell[n - 2 * r]
    return out


def _cp_side(d_max: int) -> list[int]:
    return [1 if n >= 2 and n % 2 == 0 else 0 for n in range(d_max + 1)]


def cp_vs_ku_report(field, d_max: int) -> dict:
    p = _as_field(field).p
    if d_max < 2:
        raise ValueError("d_max >= 2")
    ku = _ku_side(p, d_max)
    cp = _cp_side(d_max)
    bad = [n for n in range(d_max + 1) if ku[n] > cp[n]]
    return {
        "p": p,
        "ku_dims": ku,
        "cp_dims": cp,
        "first_violation": bad[0] if bad else None,
        "first_odd_violation": next((n for n in bad if n % 2), None),
    }


def cp_vs_ku_obstruction(field, d_max: int) -> Optional[int]:
    """Least degree where the retract inequality dim H(ku side) <= dim H(CP side) fails."""
    return cp_vs_ku_report(field, d_max)["first_violation"]
