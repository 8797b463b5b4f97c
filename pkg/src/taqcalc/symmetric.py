"""Homology of cyclic and symmetric groups with tensor-power coefficients.

Permutations act on tensor words by moving the factor in slot i to slot
sigma(i) (slots numbered from 0), with the Koszul sign of the shuffle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Optional

from . import linalg
from .modp import PrimeField, _as_field, nu_sign, ord_p_factorial


@dataclass(frozen=True)
class GradedVectorSpace:
    field: PrimeField
    basis: tuple  # of (name, degree)

    @classmethod
    def of_degrees(cls, field, degrees) -> "GradedVectorSpace":
        return cls(_as_field(field), tuple((f"v{k}", d) for k, d in enumerate(degrees)))


class TensorPowerModule:
    """V^{(x) n} with permutations acting by shuffling slots."""

    def __init__(self, base: GradedVectorSpace, power: Optional[int] = None):
        self.base = base
        self.field = base.field
        self.power = power if power is not None else base.field.p
        self.words = list(product(range(len(base.basis)), repeat=self.power))
        self.position = {w: k for k, w in enumerate(self.words)}

    @property
    def dim(self) -> int:
        return len(self.words)

    def word_degree(self, w) -> int:
        return sum(self.base.basis[i][1] for i in w)

    def act(self, sigma, w):
        """Return (sign, new word) for the slot permutation sigma."""
        degs = [self.base.basis[i][1] for i in w]
        new = [None] * len(w)
        for i, x in enumerate(w):
            new[sigma[i]] = x
        swaps = 0
        for i in range(len(w)):
            for j in range(i + 1, len(w)):
                if sigma[i] > sigma[j]:
                    swaps += degs[i] * degs[j]
        return (-1 if swaps % 2 else 1), tuple(new)

    def matrix(self, sigma):
        """Matrix (rows = output coordinates) of the permutation action."""
        p = self.field.p
        n = self.dim
        M = [[0] * n for _ in range(n)]
        for col, w in enumerate(self.words):
            s, u = self.act(sigma, w)
            M[self.position[u]][col] = s % p
        return M


def cycle(p: int):
    """gamma = (1 2 ... p): slot i -> i+1 mod p."""
    return tuple((i + 1) % p for i in range(p))


def compose(s, t):
    """(s o t)(i) = s(t(i))."""
    return tuple(s[t[i]] for i in range(len(t)))


def inverse(s):
    out = [0] * len(s)
    for i, x in enumerate(s):
        out[x] = i
    return tuple(out)


def perm_power(s, k: int):
    out = tuple(range(len(s)))
    for _ in range(k % max(1, _order(s))):
        out = compose(s, out)
    return out


def _order(s) -> int:
    k, t, ident = 1, s, tuple(range(len(s)))
    while t != ident:
        t = compose(s, t)
        k += 1
    return k


class ChainComplex:
    """Differentials d_r : C_r -> C_{r-1} for r = 1..r_max+1 (d_0 = 0)."""

    def __init__(self, dims, differentials, p: int):
        self.dims = dims          # dims[r] for r = 0..top
        self.d = differentials    # d[r] for r = 1..top, as matrices
        self.p = p

    def check(self) -> bool:
        for r in range(2, len(self.dims)):
            prod = linalg.matmul(self.d[r - 1], self.d[r], self.p)
            if any(any(row) for row in prod):
                return False
        return True

    def boundary_rank(self, r: int) -> int:
        if r + 1 >= len(self.dims):
            raise IndexError("differential out of range")
        return linalg.rank(self.d[r + 1], self.p)

    def cycles(self, r: int):
        n = self.dims[r]
        if r == 0:
            return linalg.identity(n)
        return linalg.nullspace(self.d[r], n, self.p)

    def boundaries(self, r: int):
        return linalg.column_space(self.d[r + 1], self.dims[r + 1], self.p)

    def homology_dim(self, r: int) -> int:
        return len(self.cycles(r)) - self.boundary_rank(r)


def _cyclic_complex(M: TensorPowerModule, gen, order: int, r_max: int) -> ChainComplex:
    p = M.field.p
    n = M.dim
    # coinvariant model: e_r (x) m; the odd differential is 1 - g^{-1}
    G = M.matrix(inverse(gen))
    norm = [[0] * n for _ in range(n)]
    power = linalg.identity(n)
    g_mat = M.matrix(gen)
    for _ in range(order):
        norm = [[(a + b) % p for a, b in zip(r1, r2)] for r1, r2 in zip(norm, power)]
        power = linalg.matmul(g_mat, power, p)
    one_minus = [[(int(i == j) - G[i][j]) % p for j in range(n)] for i in range(n)]
    d = [None]
    for r in range(1, r_max + 2):
        d.append(one_minus if r % 2 else norm)
    return ChainComplex([n] * (r_max + 2), d, p)


def cyclic_resolution_complex(M: TensorPowerModule, r_max: int) -> ChainComplex:
    """The 2-periodic C_p resolution tensored with M, through degree r_max + 1."""
    p = M.power
    return _cyclic_complex(M, cycle(p), p, r_max)


def homology_Cp(M: TensorPowerModule, r_max: int):
    """Dimensions of H_r(C_p; M) for r = 0..r_max, and cycle representatives."""
    C = cyclic_resolution_complex(M, r_max)
    p = C.p
    dims, reps = [], []
    for r in range(r_max + 1):
        Z = C.cycles(r)
        B = C.boundaries(r)
        base_rank = len(B)
        chosen = []
        current = list(B)
        for z in Z:
            if linalg.rank(current + [z], p) > len(current):
                current.append(z)
                chosen.append(z)
        dims.append(len(Z) - base_rank)
        reps.append(chosen)
    return dims, reps


def primitive_root(p: int) -> int:
    for g in range(1, p):
        if len({pow(g, k, p) for k in range(1, p)}) == p - 1:
            return g
    raise ValueError(p)


def normalizer_chain_map(M: TensorPowerModule, u: int, r: int):
    """Action of u in (Z/p)^x on C_r, lifting gamma -> gamma^u.

    On e_{2k} it is u^k sigma_u; on e_{2k+1} it is u^k sum_{i<u} gamma^{-i} sigma_u,
    where sigma_u is the slot permutation i -> u i.
    """
    p = M.field.p
    n = M.dim
    sigma = tuple((u * i) % p for i in range(p))
    S = M.matrix(sigma)
    k = r // 2
    scale = pow(u, k, p)
    if r % 2 == 0:
        return [[x * scale % p for x in row] for row in S]
    ginv = M.matrix(inverse(cycle(p)))
    T = [[0] * n for _ in range(n)]
    power = linalg.identity(n)
    for _ in range(u):
        T = [[(a + b) % p for a, b in zip(r1, r2)] for r1, r2 in zip(T, power)]
        power = linalg.matmul(ginv, power, p)
    A = linalg.matmul(T, S, p)
    return [[x * scale % p for x in row] for row in A]


def homology_Sigma_p(M: TensorPowerModule, r_max: int) -> list[int]:
    """H_r(Sigma_p; M) as the (Z/p)^x-invariants of H_r(C_p; M)."""
    p = M.field.p
    C = cyclic_resolution_complex(M, r_max)
    if p == 2:
        return [C.homology_dim(r) for r in range(r_max + 1)]
    u = primitive_root(p)
    n = M.dim
    dims = []
    for r in range(r_max + 1):
        Z = C.cycles(r)
        B = C.boundaries(r)
        A = normalizer_chain_map(M, u, r)
        diff = [linalg.apply(A, z, p) for z in Z]
        diff = [[(a - b) % p for a, b in zip(v, z)] for v, z in zip(diff, Z)]
        # {c : sum c_i (A - 1) z_i in B}; columns are (A-1)z_i and the b's
        cols = diff + list(B)
        if not cols:
            dims.append(0)
            continue
        rows = linalg.transpose(cols, n) if n else []
        ns = linalg.nullspace(rows, len(cols), p)
        coeffs = [v[: len(Z)] for v in ns]
        invariant_cycles = linalg.rank(coeffs, p) if coeffs else 0
        dims.append(invariant_cycles - len(B))
    return dims


def survivors(n: int, p: int, r: int) -> bool:
    """Whether e_r (x) x^p survives, for x of degree n."""
    if r < 0:
        return False
    if p == 2:
        return True
    q = p - 1
    if n % 2 == 0:
        return r % (2 * q) == 0 or (r + 1) % (2 * q) == 0
    return (r % (2 * q) == q) or ((r + 1) % (2 * q) == q)


def coinvariants_coarse(M: TensorPowerModule) -> dict:
    """Graded dimensions of the coinvariants under Sigma_{p-1} on the first p-1 slots."""
    p = M.field.p
    k = M.power
    gens = [tuple(list(range(i)) + [i + 1, i] + list(range(i + 2, k))) for i in range(k - 2)]
    out: dict = {}
    by_degree: dict = {}
    for w in M.words:
        by_degree.setdefault(M.word_degree(w), []).append(w)
    for deg, words in sorted(by_degree.items()):
        pos = {w: j for j, w in enumerate(words)}
        rels = []
        for w in words:
            for s in gens:
                sign, u = M.act(s, w)
                v = [0] * len(words)
                v[pos[u]] = (v[pos[u]] + sign) % p
                v[pos[w]] = (v[pos[w]] - 1) % p
                rels.append(v)
        out[deg] = len(words) - (linalg.rank(rels, p) if rels else 0)
    return out


def sigma_p_minus_1_homology(M: TensorPowerModule, r_max: int) -> list[int]:
    """H_r(Sigma_{p-1}; M) for p in {2, 3}, where Sigma_{p-1} is cyclic."""
    p = M.field.p
    k = M.power
    if p == 2:
        return _complex_dims(_cyclic_complex(M, tuple(range(k)), 1, r_max), r_max)
    if p == 3:
        tau = tuple([1, 0] + list(range(2, k)))
        return _complex_dims(_cyclic_complex(M, tau, 2, r_max), r_max)
    raise ValueError("Sigma_{p-1} is not cyclic for p >= 5")


def _complex_dims(C: ChainComplex, r_max: int) -> list[int]:
    return [C.homology_dim(r) for r in range(r_max + 1)]


def transfer_vanishing_check(V: GradedVectorSpace, r_max: int = 10) -> bool:
    """True iff H_r(Sigma_{p-1}; V^{(x)p}) = 0 for 1 <= r <= r_max."""
    M = TensorPowerModule(V)
    if M.field.p not in (2, 3):
        raise ValueError("only p in {2, 3} is supported")
    dims = sigma_p_minus_1_homology(M, r_max)
    return all(d == 0 for d in dims[1:])


def qbar_upper_index(n: int, r: int, e: int, field):
    """Lower index and unit scalar relating upper and lower indexed operations."""
    p = _as_field(field).p
    if p == 2:
        if e:
            raise ValueError("beta does not occur at p = 2")
        if r < n:
            raise ValueError("need r >= n at p = 2")
        return r - n, 1
    if 2 * r < n:
        raise ValueError("need 2r >= n")
    k = (2 * r - n) * (p - 1) - e
    scalar = (-1) ** (r % 2) * nu_sign(n, p) % p
    return k, scalar


# -- p-orders of the subgroups used in the transfer argument ---------------

def p_order_report(p: int, m: int) -> dict:
    """Evaluate the p-order identities for Sigma_{p^m} and its subgroups."""
    if m < 1:
        raise ValueError("m >= 1")
    o = lambda n: ord_p_factorial(n, p)  # noqa: E731
    a = o(p ** (m - 1))
    closed = (p ** m - 1) // (p - 1)
    wreath = o(p) + p * a
    product_sub = (p - 1) * a + o(p ** (m - 1) - 1)
    mid = (p - 1) * a + o(p - 1) + a  # Sigma_{p-1} wr Sigma_{p^{m-1}} x Sigma_{p^{m-1}}
    report = {
        "ord_sigma_pm": o(p ** m),
        "closed_form": closed,
        "ord_wreath": wreath,
        "wreath_formula": 1 + p * (p ** (m - 1) - 1) // (p - 1),
        "ord_sigma_pm_minus_1": o(p ** m - 1),
        "closed_minus_m": closed - m,
        "ord_product_subgroup": product_sub,
        "index_orders": {
            "wreath<sigma_pm": o(p ** m) - wreath,
            "sigma_pm_minus_1<sigma_pm": o(p ** m) - o(p ** m - 1),
            "mid<wreath": wreath - mid,
            "product<mid": mid - product_sub,
            "product<sigma_pm_minus_1": o(p ** m - 1) - product_sub,
            "product<sigma_pm": o(p ** m) - product_sub,
        },
    }
    report["holds"] = (
        report["ord_sigma_pm"] == closed
        and wreath == closed == report["wreath_formula"]
        and report["ord_sigma_pm_minus_1"] == closed - m
        and product_sub == report["ord_sigma_pm_minus_1"]
        and report["index_orders"] == {
            "wreath<sigma_pm": 0, "sigma_pm_minus_1<sigma_pm": m, "mid<wreath": 1,
            "product<mid": m - 1, "product<sigma_pm_minus_1": 0, "product<sigma_pm": m,
        }
    )
    return report


# -- double cosets Sigma_m x Sigma_n \ Sigma_{m+n} / Sigma_{m+n-1} ---------

MAX_COSET_SIZE = 8


def _check_size(m: int, n: int):
    if m < 1 or n < 1:
        raise ValueError("m, n >= 1")
    if m + n > MAX_COSET_SIZE:
        raise ValueError(f"m + n must be at most {MAX_COSET_SIZE}")


def young_subgroup(m: int, n: int):
    """Sigma_m x Sigma_n in one-line notation on 1..m+n."""
    out = []
    for a in permutations(range(1, m + 1)):
        for b in permutations(range(m + 1, m + n + 1)):
            out.append(a + b)
    return out


def point_stabilizer(N: int, point: int):
    return [s for s in permutations(range(1, N + 1)) if s[point - 1] == point]


def pmul(s, t):
    """(s t)(i) = s(t(i)) in one-line notation on 1..N."""
    return tuple(s[t[i] - 1] for i in range(len(t)))


def transposition(N: int, a: int, b: int):
    s = list(range(1, N + 1))
    s[a - 1], s[b - 1] = b, a
    return tuple(s)


def cycle_notation(s) -> str:
    seen, cycles = set(), []
    for start in range(1, len(s) + 1):
        if start in seen or s[start - 1] == start:
            continue
        c, x = [], start
        while x not in seen:
            seen.add(x)
            c.append(x)
            x = s[x - 1]
        cycles.append("(" + " ".join(map(str, c)) + ")")
    return "".join(cycles) or "id"


def left_cosets(N: int):
    """G/K for K = Sigma_{N-1}, as frozensets of one-line permutations."""
    K = point_stabilizer(N, N)
    seen, cosets = set(), []
    for g in permutations(range(1, N + 1)):
        if g in seen:
            continue
        coset = frozenset(pmul(g, k) for k in K)
        seen |= coset
        cosets.append(coset)
    return cosets


def double_coset_classes(m: int, n: int):
    """Orbits of Sigma_m x Sigma_n on left cosets of Sigma_{m+n-1}."""
    _check_size(m, n)
    N = m + n
    H = young_subgroup(m, n)
    cosets = left_cosets(N)
    which = {g: c for c in cosets for g in c}
    orbits, done = [], set()
    for c in cosets:
        if c in done:
            continue
        g = next(iter(c))
        orbit = {which[pmul(h, g)] for h in H}
        done |= orbit
        orbits.append(orbit)
    return orbits


def double_cosets(m: int, n: int) -> list[tuple]:
    """Representatives, one per double coset: fewest moved points, then lex least."""
    out = []
    for orbit in double_coset_classes(m, n):
        elements = [g for c in orbit for g in c]
        moved = lambda g: sum(1 for i, x in enumerate(g, 1) if i != x)  # noqa: E731
        out.append(min(elements, key=lambda g: (moved(g), g)))
    return sorted(out, key=lambda g: (sum(1 for i, x in enumerate(g, 1) if i != x), g))


def subgroup_identity_check(m: int, n: int) -> bool:
    _check_size(m, n)
    N = m + n
    H = set(young_subgroup(m, n))
    K = set(point_stabilizer(N, N))
    t = transposition(N, m, N)
    conj = {pmul(pmul(t, k), t) for k in K}
    first = {g for g in H if g[N - 1] == N}  # Sigma_m x Sigma_{n-1}
    second = {g for g in H if g[m - 1] == m}  # Sigma_{m-1} x Sigma_n
    first_expected = {a + b + (N,) for a in permutations(range(1, m + 1))
                      for b in permutations(range(m + 1, N))}
    second_expected = {a + (m,) + b for a in permutations(range(1, m))
                       for b in permutations(range(m + 1, N + 1))}
    return (H & K) == first == first_expected and (H & conj) == second == second_expected
