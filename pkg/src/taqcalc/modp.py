"""Exact scalar arithmetic: prime fields, the rationals, and mod-p combinatorics."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from math import factorial


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PrimeField:
    """The field F_p.  Elements are plain ints reduced into ``range(p)``."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    @property
    def char(self) -> int:
        return self.p

    def __call__(self, x) -> int:
        if isinstance(x, Fraction):
            return (x.numerator * pow(x.denominator, -1, self.p)) % self.p
        return int(x) % self.p

    def inv(self, x: int) -> int:
        return pow(x, -1, self.p)

    def parse(self, s: str) -> int:
        return self(Fraction(s))

    def __str__(self):
        return f"F{self.p}"


@dataclass(frozen=True)
class Rationals:
    """The field Q, with exact :class:`fractions.Fraction` elements."""

    @property
    def char(self) -> int:
        return 0

    def __call__(self, x) -> Fraction:
        return Fraction(x)

    def inv(self, x: Fraction) -> Fraction:
        return 1 / Fraction(x)

    def parse(self, s: str) -> Fraction:
        return Fraction(s)

    def __str__(self):
        return "Q"


QQ = Rationals()


def field_from_name(name) -> PrimeField | Rationals:
    """Accepts ``"Q"``, ``"F3"``, ``"3"`` or ``3``."""
    if isinstance(name, (PrimeField, Rationals)):
        return name
    s = str(name).strip()
    if s.upper() == "Q":
        return QQ
    if s[:1] in "Ff":
        s = s[1:]
    return PrimeField(int(s))


def _as_field(field) -> PrimeField:
    if isinstance(field, int):
        return _prime_field(field)
    return field


@lru_cache(maxsize=None)
def _prime_field(p: int) -> PrimeField:
    return PrimeField(p)


def p_digits(n: int, p: int) -> list[int]:
    """Base-p digits of n >= 0, least significant first."""
    out = []
    while n:
        n, d = divmod(n, p)
        out.append(d)
    return out


def binom_mod_p(a: int, b: int, field) -> int:
    """The symmetric binomial (a, b) = C(a+b, a) reduced mod p.

    Zero when either argument is negative.  Computed digit by digit:
    C(a+b, a) is nonzero mod p exactly when adding a and b in base p
    has no carries, and then it is the product of the digit binomials.
    """
    p = _as_field(field).p
    if a < 0 or b < 0:
        return 0
    n, k = a + b, a
    result = 1
    while n or k:
        n, nd = divmod(n, p)
        k, kd = divmod(k, p)
        if kd > nd:
            return 0
        result = result * _small_binom(nd, kd, p) % p
    return result


@lru_cache(maxsize=None)
def _small_binom(n: int, k: int, p: int) -> int:
    # 0 <= k <= n < p, so the denominator is a unit
    num = den = 1
    for i in range(k):
        num = num * (n - i) % p
        den = den * (i + 1) % p
    return num * pow(den, -1, p) % p


def multinom_mod_p(parts, field) -> int:
    """(sum parts)! / prod(parts!) mod p, as a product of binomials."""
    p = _as_field(field).p
    if any(x < 0 for x in parts):
        return 0
    result, total = 1, 0
    for x in parts:
        result = result * binom_mod_p(total, x, p) % p
        if not result:
            return 0
        total += x
    return result % p


def ord_p_factorial(n: int, field) -> int:
    """Legendre's formula for the p-adic valuation of n!."""
    p = _as_field(field).p
    if n < 0:
        raise ValueError("n must be non-negative")
    total, q = 0, p
    while q <= n:
        total += n // q
        q *= p
    return total


def nu_sign(n: int, field) -> int:
    """The unit (-1)^{n(n-1)(p-1)/4} (((p-1)/2)!)^n in F_p, p odd."""
    p = _as_field(field).p
    if p == 2:
        raise ValueError("nu_sign is only defined for odd primes")
    e = n * (n - 1) * (p - 1) // 4
    base = factorial((p - 1) // 2) % p
    return (-1) ** (e % 2) * pow(base, n, p) % p
