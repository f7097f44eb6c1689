from fractions import Fraction

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from conftest import numeric
from qls_nakayama.cyclotomic import (
    ConductorMismatch,
    CycScalar,
    RootOfUnity,
    ScalarSyntaxError,
    cyclotomic_polynomial,
    detect_root_order,
    euler_phi,
    format_scalar,
    parse_scalar,
    root_exponent,
    root_of_unity,
)

CONDUCTORS = [1, 2, 3, 4, 5, 6, 8, 9, 12]


def scalars(N):
    coeff = st.fractions(min_value=-5, max_value=5, max_denominator=6)
    return st.lists(coeff, min_size=0, max_size=N + 2).map(lambda cs: CycScalar(N, cs))


conductor_and_scalars = st.sampled_from(CONDUCTORS).flatmap(
    lambda N: st.tuples(st.just(N), scalars(N), scalars(N), scalars(N)))


@pytest.mark.parametrize("n", list(range(1, 31)))
def test_cyclotomic_polynomial_matches_sympy(n):
    x = sympy.Symbol("x")
    want = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()[::-1]
    assert list(cyclotomic_polynomial(n)) == [int(c) for c in want]
    assert euler_phi(n) == sympy.totient(n)


def test_phi_12_reduction():
    # Phi_12 = z^4 - z^2 + 1, so z^4 reduces to z^2 - 1
    assert cyclotomic_polynomial(12) == (1, 0, -1, 0, 1)
    assert root_of_unity(12, 4) == parse_scalar("z^2 - 1", 12)


def test_i_squared_is_minus_one():
    i = root_of_unity(4, 1)
    assert i * i == CycScalar.rational(4, -1)
    assert i ** 4 == 1


@given(conductor_and_scalars)
def test_field_axioms(data):
    N, a, b, c = data
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == CycScalar.zero(N)
    if not a.is_zero():
        assert a * a.inv() == CycScalar.one(N)
        assert (b / a) * a == b


@given(conductor_and_scalars)
def test_agrees_with_complex_evaluation(data):
    N, a, b, _ = data
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-8
    assert abs(numeric(a + b) - numeric(a) - numeric(b)) < 1e-8
    if not a.is_zero():
        assert abs(numeric(a.inv()) * numeric(a) - 1) < 1e-8


@given(conductor_and_scalars)
def test_print_parse_round_trip(data):
    N, a, _, _ = data
    assert parse_scalar(format_scalar(a), N) == a


@pytest.mark.parametrize("text,N,expect", [
    ("1/2*z^3 - z + 2", 8, [2, -1, 0, Fraction(1, 2)]),
    ("z", 4, [0, 1]),
    ("-z^2", 8, [0, 0, -1]),
    ("3", 5, [3]),
    ("1/2*z - 1", 6, [-1, Fraction(1, 2)]),
    ("z^4", 4, [1]),
])
def test_parse_grammar_cases(text, N, expect):
    assert parse_scalar(text, N) == CycScalar(N, expect)


@pytest.mark.parametrize("text", ["", "z +", "2 z", "1/0", "z^", "x", "+ - z"])
def test_parse_errors_report_column(text):
    with pytest.raises((ScalarSyntaxError, ZeroDivisionError)):
        parse_scalar(text, 4)


def test_parse_error_column_points_at_offender():
    with pytest.raises(ScalarSyntaxError) as e:
        parse_scalar("z + q", 4)
    assert e.value.column >= 3


def test_zero_prints_as_zero():
    assert format_scalar(CycScalar.zero(6)) == "0"


def test_conductor_mismatch():
    with pytest.raises(ConductorMismatch):
        root_of_unity(4, 1) + root_of_unity(3, 1)


@pytest.mark.parametrize("N", CONDUCTORS)
def test_roots_of_unity_orders(N):
    for k in range(N):
        z = root_of_unity(N, k)
        assert detect_root_order(z) == RootOfUnity(N, k).order
        assert root_exponent(z) == k


def test_non_root_has_no_order():
    assert detect_root_order(CycScalar.rational(4, 2)) is None
    assert detect_root_order(parse_scalar("1 + z", 4)) is None


def test_root_of_unity_group_law():
    a, b = RootOfUnity(12, 5), RootOfUnity(12, 9)
    assert (a * b).value == a.value * b.value
    assert (a ** 7).value == a.value ** 7
    assert (a * a.inverse()).is_one()
    assert str(RootOfUnity(12, 0)) == "1"
