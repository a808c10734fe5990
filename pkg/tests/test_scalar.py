from fractions import Fraction

from hypothesis import given, strategies as st

from fewweight.scalar import AlgebraicScalar as A

coef = st.fractions(min_value=-20, max_value=20, max_denominator=6)
scalars = st.builds(lambda a, b, c, d: A(3, a, b, c, d), coef, coef, coef, coef)


def test_sqrt_p_squares_to_p():
    r = A.sqrt_p(5)
    assert r * r == 5
    assert (A.imag_unit(5) ** 2) == -1


def test_half_powers():
    assert A.p_half_power(3, 4) == 9
    assert A.p_half_power(3, 3) == 3 * A.sqrt_p(3)
    assert A.p_half_power(3, -2) == Fraction(1, 3)


def test_i_powers_cycle():
    vals = [A.i_power(7, k) for k in range(8)]
    assert vals[0] == 1 and vals[2] == -1 and vals[4] == 1
    assert vals[1] == vals[5] == A.imag_unit(7)


def test_str_forms():
    assert str(A.imag_unit(3) * A.sqrt_p(3)) == "i·√3"
    assert str(A(3, -9)) == "-9"
    assert str(-3 * A.imag_unit(3) * A.sqrt_p(3)) == "-3i·√3"


def test_predicates():
    assert A(3, 4).is_integer()
    assert A(3, 4, 0, -2).is_gaussian_integer()
    assert not A(3, Fraction(1, 2)).is_integer()
    assert not A(3, 0, 1).is_rational()


@given(scalars, scalars, scalars)
def test_ring_laws(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert (x * y) * z == x * (y * z)
    assert x - x == 0


@given(scalars, scalars)
def test_division_inverts_multiplication(x, y):
    if y != 0:
        assert (x * y) / y == x


@given(scalars, scalars)
def test_complex_conversion_is_a_homomorphism(x, y):
    assert abs(complex(x * y) - complex(x) * complex(y)) < 1e-6 * (1 + abs(complex(x * y)))
    assert abs(complex(x.conjugate()) - complex(x).conjugate()) < 1e-9 * (1 + abs(complex(x)))


@given(scalars)
def test_hash_consistent_with_eq(x):
    y = x + 0
    assert x == y and hash(x) == hash(y)
