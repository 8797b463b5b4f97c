import pytest

from conftest import random_cell_module
from taqcalc.algebra import GradedAlgebra
from taqcalc.dlindex import degree_shift
from taqcalc.free_homology import (
    CellModule, apply_Q, convolve, free_algebra_homology, kunneth_quotient_oracle,
    reduced_free_algebra_homology,
)

S1 = CellModule("F2", (("s1", 1),))


def brute_monomials(gen_degrees, d, exterior_odd):
    """Count multisets of generators of total degree d, by recursion on the list."""
    def count(k, left):
        if left == 0:
            return 1
        if k == len(gen_degrees) or left < 0:
            return 0
        g = gen_degrees[k]
        top = left // g
        if exterior_odd and g % 2:
            top = min(top, 1)
        return sum(count(k + 1, left - e * g) for e in range(top + 1))
    return count(0, d)


def test_circle_example():
    A = free_algebra_homology(S1, 4)
    assert [g.name for g in A.generators] == ["s1", "Q[0,2].s1", "Q[0,3].s1"]
    assert A.hilbert(4) == [1, 1, 1, 2, 3]


def test_circle_through_twenty_matches_brute_force():
    A = free_algebra_homology(S1, 20)
    degs = [g.degree for g in A.generators]
    assert A.hilbert(20) == [brute_monomials(degs, d, False) for d in range(21)]


def test_rational_and_empty():
    X = CellModule("Q", (("s2", 2),))
    assert free_algebra_homology(X, 6).hilbert(6) == [1, 0, 1, 0, 1, 0, 1]
    assert free_algebra_homology(CellModule("F3", ()), 5).hilbert(5) == [1, 0, 0, 0, 0, 0]


def test_rational_generating_function():
    X = CellModule("Q", (("a", 1), ("b", 2), ("c", 3), ("d", 4)))
    assert free_algebra_homology(X, 12).hilbert(12) == [brute_monomials([1, 2, 3, 4], d, True)
                                                         for d in range(13)]


def test_reduced_examples():
    X = CellModule("F2", (("x0", 0), ("x1", 1)), "x0")
    assert reduced_free_algebra_homology(X, 4).hilbert(4) == free_algebra_homology(
        CellModule("F2", (("x1", 1),)), 4).hilbert(4)
    assert reduced_free_algebra_homology(CellModule("F3", (("x0", 0),), "x0"), 6).hilbert(6) == [1] + [0] * 6
    beta = CellModule("Q", (("x0", 0),) + tuple((f"b{r}", 2 * r) for r in range(1, 4)), "x0")
    assert reduced_free_algebra_homology(beta, 6).hilbert(6) == GradedAlgebra(
        "Q", [("b1", 2), ("b2", 4), ("b3", 6)]).hilbert(6)
    with pytest.raises(ValueError):
        reduced_free_algebra_homology(S1, 4)


def test_cell_module_validation():
    with pytest.raises(ValueError):
        CellModule("F2", (("a", 1), ("a", 2)))
    with pytest.raises(ValueError):
        CellModule("F2", (("a", -1),))
    with pytest.raises(ValueError):
        CellModule("F2", (("x0", 0), ("y", 0)), "x0")
    with pytest.raises(ValueError):
        CellModule("F2", (("x0", 1),), "x0")
    X = CellModule("F3", (("x0", 0), ("y", 2)), "x0")
    assert CellModule.from_json(X.to_json()) == X


@pytest.mark.parametrize("X,p,d", [
    (CellModule("F2", (("x0", 0), ("x1", 1)), "x0"), 2, 10),
    (CellModule("F3", (("x0", 0),), "x0"), 3, 8),
    (CellModule("F3", (("x0", 0), ("y", 2)), "x0"), 3, 12),
])
def test_kunneth_examples(X, p, d):
    assert kunneth_quotient_oracle(X, d) == reduced_free_algebra_homology(X, d).hilbert(d)


def test_kunneth_random(rng):
    for field in ("F2", "F3"):
        for _ in range(5):
            X = random_cell_module(rng, field)
            assert kunneth_quotient_oracle(X, 12) == reduced_free_algebra_homology(X, 12).hilbert(12)


def test_wedge_is_tensor_product():
    X = CellModule("F3", (("a", 1), ("b", 2)))
    Y = CellModule("F3", (("c", 3),))
    XY = CellModule("F3", X.classes + Y.classes)
    d = 20
    assert free_algebra_homology(XY, d).hilbert(d) == convolve(
        free_algebra_homology(X, d).hilbert(d), free_algebra_homology(Y, d).hilbert(d))


def test_apply_q_examples():
    A = free_algebra_homology(S1, 8)
    assert apply_Q(A, (0, 2), "s1") == A.gen("Q[0,2].s1")
    assert apply_Q(A, (0, 1), "s1") == A.gen("s1") ** 2
    assert not apply_Q(A, (0, 1), "Q[0,3].s1")  # 1 < 4
    with pytest.raises(ValueError):
        apply_Q(A, (0, 7), "Q[0,3].s1")  # 7 > 2 * 3: not admissible
    with pytest.raises(ValueError):
        apply_Q(A, (0, 5), "Q[0,3].s1")  # a generator, but beyond degree 8


def test_apply_q_below_and_at_excess():
    A = free_algebra_homology(CellModule("F2", (("y", 4),)), 30)
    assert not apply_Q(A, (0, 3), "y")
    assert apply_Q(A, (0, 4), "y") == A.gen("y") ** 2
    B = free_algebra_homology(CellModule("F3", (("y", 2),)), 30)
    assert apply_Q(B, (0, 1), "y") == B.gen("y") ** 3
    assert not apply_Q(B, (1, 1), "y")
    assert apply_Q(B, (1, 2), "y") == B.gen("Q[1,2].y")


def test_apply_q_degrees():
    for p, cls in ((2, ("x", 1)), (3, ("x", 1)), (3, ("x", 2))):
        A = free_algebra_homology(CellModule(f"F{p}", (cls,)), 40)
        for g in A.generators:
            for e in ((0,) if p == 2 else (0, 1)):
                for r in range(1, 12):
                    try:
                        out = apply_Q(A, (e, r), g.name)
                    except ValueError:
                        continue
                    if out:
                        assert out.degree() == g.degree + degree_shift(((e, r),), p)
