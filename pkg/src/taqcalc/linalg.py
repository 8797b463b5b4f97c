"""Dense Gaussian elimination over F_p on lists of lists."""

from __future__ import annotations


def rref(rows, p: int):
    """Row-reduce a copy of ``rows``; return (reduced rows, pivot columns)."""
    M = [[x % p for x in r] for r in rows]
    if not M:
        return [], []
    ncols = len(M[0])
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        M[r] = [x * inv % p for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(x - f * y) % p for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M[:r], pivots


def rank(rows, p: int) -> int:
    return len(rref(rows, p)[1])


def nullspace(rows, ncols: int, p: int):
    """Basis of {v : rows . v = 0} as a list of vectors."""
    R, pivots = rref(rows, p)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for row, pc in zip(R, pivots):
            v[pc] = -row[f] % p
        basis.append(v)
    return basis


def transpose(rows, ncols: int):
    return [[r[c] for r in rows] for c in range(ncols)]


def matmul(A, B, p: int):
    Bt = list(zip(*B)) if B else []
    return [[sum(a * b for a, b in zip(row, col)) % p for col in Bt] for row in A]


def apply(A, v, p: int):
    return [sum(a * x for a, x in zip(row, v)) % p for row in A]


def identity(n: int):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def column_space(A, ncols: int, p: int):
    """Basis (as vectors) of the column space of A."""
    R, _ = rref(transpose(A, ncols), p)
    return R


def solve(columns, target, p: int):
    """Coefficients c with sum c_j columns[j] = target, or None if inconsistent."""
    n = len(target)
    rows = [[col[i] for col in columns] + [target[i]] for i in range(n)]
    if not rows:
        return [0] * len(columns)
    R, pivots = rref(rows, p)
    k = len(columns)
    if k in pivots:
        return None
    sol = [0] * k
    for row, pc in zip(R, pivots):
        sol[pc] = row[k]
    return sol
