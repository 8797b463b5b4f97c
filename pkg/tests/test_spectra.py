import math
from itertools import product

import pytest

from taqcalc.algebra import Vector
from taqcalc.modp import p_digits
from taqcalc.spectra import (
    KO1_GENERATORS, KoOneElement, comparison_remark, cp_vs_ku_obstruction, cp_vs_ku_report,
    derivation_kills_products, dl_decomp_witness, dual_steenrod_2, eta_tilde_star,
    h_to_mo_obstruction, kriz_taq_dimensions, kriz_words_by_leading, kriz_words_by_length,
    mo_dl_action, msu_dl_indecomposable, mu_dl_action, mu_dl_indecomposables,
    mu_indecomposable_closed_form, psi_injectivity, psi_preimage, psi_star, psi_star_element,
    spectrum_table, steinberger_theta_H, theta_MO, theta_prime_MSU, theta_prime_MSU_spec,
    theta_prime_MU, theta_prime_MU_closed, theta_prime_MU_series, theta_prime_MU_spec, to_unicode,
    xi,
)

A = dual_steenrod_2()
z = A.gen


def test_unicode_rendering():
    assert to_unicode("S^-1 z1^2 z2") == "Σ⁻¹ζ₁²ζ₂"
    assert to_unicode("S^2 xi2^2") == "Σ²ξ₂²"


def test_table_degrees():
    assert spectrum_table("MU", 2, 3).generators == (("b1", 2), ("b2", 4), ("b3", 6))
    assert dict(spectrum_table("MO", 2, 5).generators)["a5"] == 5
    assert [d for _, d in spectrum_table("MSU", 2, 4).generators] == [4, 6, 8, 10]
    assert dict(spectrum_table("A", 2, 4).generators)["z4"] == 15
    l3 = dict(spectrum_table("l", 3, 3).generators)
    assert l3["z1"] == 4 and l3["taubar2"] == 17
    a3 = dict(spectrum_table("A", 3, 2).generators)
    assert a3["tau0"] == 1 and a3["xi1"] == 4
    with pytest.raises(ValueError):
        spectrum_table("MO", 3)


def test_xi_in_zeta_basis():
    assert xi(1) == z("z1")
    assert xi(2) == z("z2") + z("z1") ** 3
    assert xi(3) == z("z3") + z("z1") ** 4 * z("z2") + z("z1") * z("z2") ** 2 + z("z1") ** 7


def test_mu_action_examples():
    assert mu_dl_action(4, 1, 2) == Vector(2, {"b3": 1})
    assert not mu_dl_action(6, 1, 2)
    assert mu_dl_action(8, 1, 2) == Vector(2, {"b5": 1})


def test_mu_action_formula_odd():
    # Q^r b_n = (-1)^{r+n+1} C(r-1, n) b_{n+r(p-1)}, checked against math.comb
    for p in (3, 5):
        for n in range(1, 8):
            for r in range(1, 12):
                c = (-1) ** (r + n + 1) * (math.comb(r - 1, n) if r - n - 1 >= 0 else 0) % p
                expected = Vector(p, {f"b{n + r * (p - 1)}": c} if c else {})
                assert mu_dl_action(r, n, p) == expected


def test_mu_indecomposables_examples():
    assert mu_dl_indecomposables(2, 32) == [1, 2, 4, 8, 16]
    assert mu_dl_indecomposables(2, 6) == [1, 2]
    low = mu_dl_indecomposables(3, 20)
    assert {1, 2, 3} <= set(low)


@pytest.mark.parametrize("p", [3, 5])
def test_mu_indecomposables_closed_form(p):
    got = mu_dl_indecomposables(p, 2 * 80)
    assert got == [k for k in range(1, 81) if mu_indecomposable_closed_form(k, p)]
    assert got == [k for k in range(1, 81) if sum(p_digits(k, p)) <= p - 1]


def test_witness_examples():
    for n, expected in [(5, (1, 8, 1)), (6, (2, 8, 1)), (3, (1, 4, 1))]:
        w = dl_decomp_witness(n, 2)
        assert (w.source, w.operation, w.coefficient) == expected
        assert w.lands_on == n
    with pytest.raises(ValueError):
        dl_decomp_witness(8, 2)


@pytest.mark.parametrize("p", [2, 3, 5])
def test_witness_coefficients_nonzero(p):
    for n in range(1, 121):
        if sum(1 for d in p_digits(n, p) if d) < 2:
            continue
        w = dl_decomp_witness(n, p)
        assert w.coefficient % p
        if p == 2:
            s = (n & -n).bit_length() - 1
            assert w.coefficient == math.comb(n - 2 ** s - 1, 2 ** s) % 2


def test_theta_prime_MU_examples():
    img = theta_prime_MU(4, 2)
    assert img.shift == 2 and img.element == xi(2) ** 2 and img.label == "S^2 xi2^2"
    assert not theta_prime_MU(6, 2).element
    assert theta_prime_MU(3, 3).label == "S^2 xi1"
    assert not theta_prime_MU(5, 3).element


def test_theta_prime_MU_two_table():
    for k in range(1, 129):
        img = theta_prime_MU(k, 2)
        if k & (k - 1) == 0:
            assert img.element == xi(k.bit_length() - 1) ** 2
        else:
            assert not img.element


@pytest.mark.parametrize("p", [3, 5])
def test_theta_prime_series_matches_closed(p):
    for k in range(1, 61):
        assert theta_prime_MU_series(k, p) == theta_prime_MU_closed(k, p)


def test_theta_prime_MSU():
    assert theta_prime_MSU(2).label == "S^4"
    assert theta_prime_MSU(6).element == xi(1) ** 2 * xi(2) ** 2
    assert theta_prime_MSU(10).element == xi(1) ** 2 * xi(3) ** 2
    assert not theta_prime_MSU(7).element
    with pytest.raises(ValueError):
        theta_prime_MSU(1)
    for k in range(2, 40):
        img = theta_prime_MSU(k).element
        assert bool(img) == msu_dl_indecomposable(k)
        if img:
            bits = [i for i in range(8) if (k >> i) & 1]
            m, n = (bits[0] - 1, bits[0] - 1) if len(bits) == 1 else bits
            assert img == xi(m) ** 2 * xi(n) ** 2


def test_derivations_kill_products():
    assert derivation_kills_products(theta_prime_MU_spec(8))
    assert derivation_kills_products(theta_prime_MSU_spec(8))


def test_psi_star_examples():
    assert psi_star(A.one(), "S^-1 z1^2") == A.one()
    assert psi_star(A.one(), "S^-1 z2") == z("z1")
    assert psi_star(A.one(), "S^-1 z1^2 z2") == z("z2") + z("z1") ** 3
    with pytest.raises(ValueError):
        psi_star(A.one(), "S^-1 z3")


def test_eta_tilde():
    w = z("z2") ** 2
    e = eta_tilde_star(w)
    assert e == KoOneElement({"S^-1 z1^2": w})
    assert psi_star_element(e) == w
    assert str(eta_tilde_star(A.one())) == "S^-1 z1^2"


def test_psi_injective():
    for d, (dim, rank) in psi_injectivity(20).items():
        assert dim == rank


def test_theta_MO():
    assert theta_MO(2).label == "S^-1 z2"
    assert theta_MO(4).label == "S^-1 z1^2 z2"
    assert not theta_MO(5).element
    assert theta_MO(8).label == "S^-1 z1^2 xi3"
    with pytest.raises(ValueError):
        theta_MO(7)
    for s in range(3, 7):
        assert psi_star_element(theta_MO(2 ** s).element) == xi(s)
    assert psi_preimage(z("z2")) is None  # nothing in degree 3
    assert psi_preimage(z("z3")) == KoOneElement({"S^-1 z1^2": z("z3")})


def test_mo_action_and_obstruction():
    assert mo_dl_action(4, 1) == Vector(2, {"a5": 1})
    rep = h_to_mo_obstruction()
    assert rep["coefficient"] == 1 and not rep["degree_5_indecomposable"] and rep["contradiction"]


def test_steinberger():
    assert steinberger_theta_H(3)["tau0"] == "nonzero"
    assert steinberger_theta_H(3)["xi1"] == "zero"
    assert steinberger_theta_H(2)["xi1"] == "nonzero"
    assert steinberger_theta_H(2)["xi2"] == "zero"


def test_comparison_remark():
    assert comparison_remark(4) == (xi(2) ** 4, A.zero())
    assert comparison_remark(5) == (A.zero(), xi(2) ** 2)
    assert comparison_remark(3) == (A.zero(), xi(1) ** 2)
    # n = 2 is the one overlap: b_1 goes to xi_0^2 = 1
    assert comparison_remark(2) == (xi(1) ** 4, A.one())
    for n in range(3, 65):
        a, b = comparison_remark(n)
        assert not (a and b)


def _compositions(total):
    if total == 0:
        yield ()
        return
    for first in range(1, total + 1):
        for rest in _compositions(total - first):
            yield (first,) + rest


def _brute_kriz(d_max, steenrod):
    counts = [0] * (d_max + 1)
    counts[1] = 1
    for total in range(4, d_max):
        for w in _compositions(total):
            if w[-1] < 4:
                continue
            ok = all((a >= 2 * b) if steenrod else (a <= 2 * b) for a, b in zip(w, w[1:]))
            counts[1 + total] += ok
    return counts


def test_kriz_dimensions():
    dims = kriz_taq_dimensions(40)
    assert dims[1] == 1 and dims[3] == 0 and dims[9] == 1
    assert kriz_words_by_length(40) == kriz_words_by_leading(40)
    assert kriz_words_by_length(40, "dl") == kriz_words_by_leading(40, "dl")
    assert dims[:17] == _brute_kriz(16, True)
    assert kriz_taq_dimensions(16, "dl") == _brute_kriz(16, False)


def _monomial_dims(gen_degrees, d_max):
    out = [0] * (d_max + 1)
    ranges = [range(0, d_max // d + 1) for d in gen_degrees]
    for exps in product(*ranges):
        deg = sum(e * d for e, d in zip(exps, gen_degrees))
        if deg <= d_max:
            out[deg] += 1
    return out


def test_cp_vs_ku_dimension_tables():
    rep = cp_vs_ku_report(2, 20)
    ku = _monomial_dims([2, 6, 7, 15], 18)  # z1^2, z2^2, z3, z4 (polynomial at p=2)
    assert rep["ku_dims"] == [0, 0] + ku[:19]
    assert rep["cp_dims"][8] == 1 and rep["ku_dims"][8] == 2  # z1^6 and z2^2 after the shift
    assert rep["first_violation"] == 8 and rep["first_odd_violation"] == 9
    assert cp_vs_ku_obstruction(2, 7) is None
    rep3 = cp_vs_ku_report(3, 30)
    assert rep3["first_violation"] == 18 and rep3["first_odd_violation"] == 19
