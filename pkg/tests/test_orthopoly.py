import math
from fractions import Fraction

import pytest
import sympy as sp

from symlat.orthopoly import (
    UniPoly,
    admissible,
    d_coeff,
    functional,
    gamma_ratio,
    moment,
    norm_closed_form_ratio,
    norm_hat,
    norm_hat_closed_form,
    p_poly,
    recurrence_residual,
    trig_relation_residual,
)

X = UniPoly.x()


def test_unipoly_basics():
    p = UniPoly([Fraction(-1, 3), 0, 1])
    assert str(p) == "x^2 - 1/3"
    assert p.degree == 2
    assert p(Fraction(1, 2)) == Fraction(-1, 12)
    assert p.derivative() == UniPoly([0, 2])
    assert (X - X).is_zero() and str(UniPoly()) == "0"
    assert str(-X * 3 + 2) == "-3*x + 2"
    assert X**3 == X * X * X


def test_p_poly_examples():
    for m in range(3, 20):
        assert p_poly(0, m) == UniPoly([1])
        assert p_poly(1, m) == X
        assert p_poly(2, m) == X * X - Fraction(1, m - 2)
    assert str(p_poly(2, 5)) == "x^2 - 1/3"
    assert p_poly(3, 7) == X**3 - X


def test_p_poly_monic_and_parity():
    for m in range(1, 31):
        for n in admissible(m):
            p = p_poly(n, m)
            assert p.degree == n and p[n] == 1
            assert all(p[j] == 0 for j in range(n + 1) if (n - j) % 2)


def test_p_poly_domain():
    with pytest.raises(ValueError):
        p_poly(4, 6)
    with pytest.raises(ValueError):
        p_poly(-1, 6)
    p_poly(3, 5)  # 2n = m + 1 is still allowed


def test_d_coeff_examples():
    for m in range(3, 15):
        assert d_coeff(1, m) == Fraction(1, m - 2)
    assert d_coeff(1, 5) == Fraction(1, 3)
    assert d_coeff(2, 7) == Fraction(4, 5)
    with pytest.raises(ValueError):
        d_coeff(3, 6)
    with pytest.raises(ValueError):
        d_coeff(0, 6)


def test_moment_examples():
    for m in range(1, 15):
        assert moment(0, m) == 1
        assert all(moment(j, m) == 0 for j in range(1, m, 2))
        if m >= 3:
            assert moment(2, m) == Fraction(1, m - 2) == d_coeff(1, m)
        if m >= 5:
            assert moment(4, m) == Fraction(3, (m - 2) * (m - 4))
    with pytest.raises(ValueError):
        moment(5, 5)
    with pytest.raises(ValueError):
        moment(0, 0)


def test_moment_against_symbolic_integral():
    # Lhat(x^j) = L(x^j) / L(1) with L(f) = int_0^oo int_R z^(m-1) f(y/z) exp(-(y^2+z^2)/2) dy dz
    y, z = sp.symbols("y z", real=True)

    def raw(j, m):
        return sp.integrate(y**j * sp.exp(-y**2 / 2), (y, -sp.oo, sp.oo)) * sp.integrate(
            z ** (m - 1 - j) * sp.exp(-z**2 / 2), (z, 0, sp.oo)
        )

    for m in range(1, 13):
        base = raw(0, m)
        for j in range(m):
            ratio = sp.nsimplify(sp.simplify(raw(j, m) / base))
            assert ratio.is_Rational
            assert Fraction(int(ratio.p), int(ratio.q)) == moment(j, m)


def test_gamma_ratio_against_sympy():
    for a2 in range(1, 20):
        for shift in range(-3, 4):
            a = Fraction(a2, 2)
            b = a + shift
            if b > 0:
                want = sp.gamma(sp.Rational(a2, 2)) / sp.gamma(sp.Rational(b.numerator, b.denominator))
                exact = sp.gammasimp(want)
                assert exact.is_Rational
                assert gamma_ratio(a, b) == Fraction(int(exact.p), int(exact.q))
    with pytest.raises(ValueError):
        gamma_ratio(Fraction(1, 2), Fraction(1, 3))


def test_functional_and_norm_examples():
    for m in range(4, 12):
        assert norm_hat(0, m) == 1
        assert functional(p_poly(1, m) * p_poly(2, m), m) == 0
    assert norm_hat(2, 5) == Fraction(8, 9)
    with pytest.raises(ValueError):
        functional(X**5, 5)


def test_orthogonality_and_norms():
    for m in range(1, 31):
        ns = list(admissible(m))
        for i in ns:
            for j in ns:
                if i != j and i + j <= m - 1:
                    assert functional(p_poly(i, m) * p_poly(j, m), m) == 0
        for n in ns:
            if 2 * n <= m - 1:
                nh = norm_hat(n, m)
                assert functional(p_poly(n, m) * p_poly(n, m), m) == nh
                assert nh == math.prod((d_coeff(l, m) for l in range(1, n + 1)), start=Fraction(1))
                for k in range(n):
                    assert functional(X**k * p_poly(n, m), m) == 0
                assert functional(X**n * p_poly(n, m), m) == nh


def test_three_term_recurrence():
    for m in range(3, 31):
        for n in range(1, m):
            if 2 * (n + 1) <= m - 1:
                assert recurrence_residual(n, m).is_zero()


def test_derivative_relation():
    for m in range(1, 31):
        for n in admissible(m):
            if n >= 1:
                assert trig_relation_residual(n, m).is_zero()


def test_gamma_closed_form():
    for m in range(1, 21):
        for n in range(1, m):
            if 2 * n <= m - 1:
                assert norm_closed_form_ratio(n, m) == d_coeff(n, m)
    for m in range(1, 31):
        for n in admissible(m):
            if 2 * n <= m - 1:
                assert norm_hat_closed_form(n, m) == norm_hat(n, m)
