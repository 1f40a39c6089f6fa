import math
from fractions import Fraction

import pytest

from klyachko.errors import DivisionByZero, MissingAtom, PoleAtEvaluationPoint
from klyachko.periods import (
    ALPHA,
    RES,
    AbsSquare,
    LocalRSFactor,
    Numeral,
    Power,
    Product,
    Quotient,
    evaluate_period,
    intertwining_eigenvalue,
    local_rs_factor,
    lval,
    norm_constant,
    period_formula,
    zeta_assignment,
    zeta_value,
)


def zeta_oracle(s, n_terms):
    """Plain truncated Dirichlet series with interval bounds: the true
    value lies between partial + integral-from-(N+1) and partial +
    integral-from-N."""
    partial = sum(k ** (-float(s)) for k in range(1, n_terms + 1))
    lo = partial + (n_terms + 1) ** (1 - s) / (s - 1)
    hi = partial + n_terms ** (1 - s) / (s - 1)
    return lo, hi


# frozen golden trees for t <= 8, written out by hand from the two
# closed formulas (even: L(2)...L(2m) / Res L(3)...L(2m-1); odd:
# alpha/Res * prod L(2j)/L(2j+1))
GOLDEN_PERIOD_STRINGS = {
    1: "alpha/Res",
    2: "L(2)/Res",
    3: "alpha*L(2)/(Res*L(3))",
    4: "L(2)*L(4)/(Res*L(3))",
    5: "alpha*L(2)*L(4)/(Res*L(3)*L(5))",
    6: "L(2)*L(4)*L(6)/(Res*L(3)*L(5))",
    7: "alpha*L(2)*L(4)*L(6)/(Res*L(3)*L(5)*L(7))",
    8: "L(2)*L(4)*L(6)*L(8)/(Res*L(3)*L(5)*L(7))",
}

GOLDEN_PERIOD_TREES = {
    2: Quotient(lval(2), RES),
    3: Quotient(Product((ALPHA, lval(2))), Product((RES, lval(3)))),
    4: Quotient(Product((lval(2), lval(4))), Product((RES, lval(3)))),
}


def test_period_formula_strings_match_golden():
    for t, expected in GOLDEN_PERIOD_STRINGS.items():
        assert period_formula(t).to_string() == expected


def test_period_formula_trees_match_golden():
    for t, tree in GOLDEN_PERIOD_TREES.items():
        assert period_formula(t) == tree


def test_even_case_has_no_alpha_atom():
    for t in (2, 4, 6, 8):
        assert "alpha" not in period_formula(t).atoms()
    for t in (1, 3, 5, 7):
        assert "alpha" in period_formula(t).atoms()


def test_period_atom_multisets():
    expr = period_formula(6)
    assert expr.atoms() == {"L(2)", "L(4)", "L(6)", "Res", "L(3)", "L(5)"}


def test_norm_constant():
    assert norm_constant(2).to_string() == "L(2)/Res"
    assert norm_constant(3).to_string() == "L(2)*L(3)/(Res^2)"
    assert norm_constant(4).to_string() == "L(2)*L(3)*L(4)/(Res^3)"


def test_intertwining_eigenvalue():
    for t in (3, 5, 7):
        expr = intertwining_eigenvalue(t)
        assert expr == Quotient(RES, lval(t))
    with pytest.raises(ValueError):
        intertwining_eigenvalue(4)


def test_json_shape():
    js = period_formula(4).to_json()
    assert js["kind"] == "quotient"
    num, den = js["children"]
    assert num == {"kind": "product", "children": [
        {"kind": "atom", "atom": "L(2)"}, {"kind": "atom", "atom": "L(4)"}]}
    assert den["children"][0] == {"kind": "atom", "atom": "Res"}


def test_evaluate_all_ones():
    for t in range(1, 9):
        expr = period_formula(t)
        ones = {key: 1 for key in expr.atoms()}
        assert evaluate_period(expr, ones) == 1


def test_evaluate_missing_atom():
    with pytest.raises(MissingAtom):
        evaluate_period(period_formula(2), {"Res": 1.0})


def test_evaluate_division_by_zero():
    with pytest.raises(DivisionByZero):
        evaluate_period(period_formula(2), {"L(2)": 1.0, "Res": 0.0})


def test_abs_square_and_power_and_numeral():
    expr = AbsSquare(Quotient(Numeral(Fraction(3, 2)), Power(Numeral(Fraction(1, 2)), 2)))
    assert evaluate_period(expr, {}) == 36
    assert expr.to_string() == "|3/2/(1/2^2)|^2"


def test_zeta_value_against_series_oracle():
    for s in (2, 3, 4):
        lo, hi = zeta_oracle(s, 200000 if s == 2 else 5000)
        val = zeta_value(s, tol=1e-9)
        assert lo - 1e-9 <= val <= hi + 1e-9
    assert abs(zeta_value(2) - math.pi**2 / 6) < 1e-7
    assert abs(zeta_value(4) - math.pi**4 / 90) < 1e-8


def test_period_zeta_instances():
    expr2 = period_formula(2)
    val2 = evaluate_period(expr2, zeta_assignment(expr2))
    assert abs(val2 - 1.6449341) < 1e-6
    expr4 = period_formula(4)
    val4 = evaluate_period(expr4, zeta_assignment(expr4))
    lo2, hi2 = zeta_oracle(2, 200000)
    lo3, hi3 = zeta_oracle(3, 5000)
    lo4, hi4 = zeta_oracle(4, 2000)
    assert lo2 * lo4 / hi3 - 1e-7 <= val4 <= hi2 * hi4 / lo3 + 1e-7
    assert abs(val4 - 1.4810866) < 1e-6


def test_local_rs_factor_gl1():
    assert abs(local_rs_factor([1], 2, 2) - 4 / 3) < 1e-12
    # sigma x sigma~ cancels any unitary alpha for GL_1
    import cmath

    for angle in (0.3, 1.2, 2.5):
        a = cmath.exp(1j * angle)
        assert abs(local_rs_factor([a], 2, 2) - 4 / 3) < 1e-12


def test_local_rs_factor_gl2_brute_force():
    import cmath

    a = cmath.exp(0.7j)
    sat = (a, 1 / a)
    q, s = 3, 2
    x = q ** (-s)
    expected = 1.0
    for ai in sat:
        for aj in sat:
            expected *= 1 / (1 - ai / aj * x)
    assert abs(local_rs_factor(sat, q, s) - expected) < 1e-12


def test_local_rs_factor_denominator_coeffs():
    factor = LocalRSFactor((2.0,), 5)
    # single parameter: denominator 1 - X
    coeffs = factor.denominator_coefficients()
    assert len(coeffs) == 2
    assert abs(coeffs[0] - 1) < 1e-12 and abs(coeffs[1] + 1) < 1e-12


def test_local_rs_factor_pole_detected():
    with pytest.raises(PoleAtEvaluationPoint):
        local_rs_factor([1], 2, 0)


def test_local_rs_factor_validation():
    with pytest.raises(ValueError):
        LocalRSFactor((), 2)
    with pytest.raises(ValueError):
        LocalRSFactor((0,), 2)
    with pytest.raises(ValueError):
        LocalRSFactor((1,), 1)
