import threading
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopftwist import cyclo
from hopftwist.cyclo import (
    I,
    ONE,
    ZERO,
    CycNumber,
    arith,
    cyc,
    cyclotomic_poly,
    embed,
    euler_phi,
    format_cyc,
    galois,
    in_subfield,
    is_algebraic_integer_in,
    parse_cyc,
    zeta,
)
from hopftwist.errors import (
    ConductorNotMultiple,
    ConductorOverflow,
    DivisionByZero,
    NotCoprime,
    ParseError,
)

CONDUCTORS = [1, 3, 4, 5, 6, 8, 12]


@st.composite
def cycs(draw, conductors=CONDUCTORS):
    n = draw(st.sampled_from(conductors))
    d = euler_phi(n)
    coeffs = draw(st.lists(
        st.fractions(min_value=-5, max_value=5, max_denominator=6), min_size=d, max_size=d))
    return CycNumber(n, coeffs)


def test_cyclotomic_polys():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)
    assert cyclotomic_poly(12) == (1, 0, -1, 0, 1)
    # Phi_105 is the first with a coefficient outside {-1, 0, 1}
    assert -2 in cyclotomic_poly(105)
    for n in range(1, 40):
        assert len(cyclotomic_poly(n)) - 1 == euler_phi(n)


def test_cyclotomic_memo_threadsafe():
    results = []

    def work():
        results.append([cyclotomic_poly(n) for n in range(200, 260)])

    ts = [threading.Thread(target=work) for _ in range(8)]
    for t in ts:
        t.start()
    for t in ts:
        t.join()
    assert all(r == results[0] for r in results)


def test_coeff_length_is_phi():
    with pytest.raises(ValueError):
        CycNumber(8, [1, 2])
    assert len(zeta(8).coeffs) == 4


def test_basic_arith():
    assert I * I == -1
    assert (I * I).is_rational()
    assert zeta(8) ** 2 == I
    assert (zeta(8) ** 2).conductor == 8
    assert cyc("1/2") + cyc("1/2") == 1
    assert arith(I, I, "mul") == -ONE
    assert arith(ONE, cyc(2), "div") == Fraction(1, 2)
    assert zeta(3) + zeta(3, 2) == -1


def test_no_auto_minimization():
    x = zeta(8) ** 2
    assert x.conductor == 8
    assert x.minimal().conductor == 4


def test_division_and_inverse():
    a = 1 + zeta(5) - zeta(5, 3) / 2
    assert a * a.inverse() == 1
    assert (a / a) == 1
    with pytest.raises(DivisionByZero):
        ONE / ZERO
    with pytest.raises(DivisionByZero):
        ZERO.inverse()


def test_embed_examples():
    assert embed(cyc(-1), 8).coeffs == (-1, 0, 0, 0)
    assert embed(I, 8) == zeta(8, 2)
    assert embed(I, 8).coeffs == (0, 0, 1, 0)
    e = embed(zeta(3), 6)
    assert e.coeffs == (-1, 1)
    assert format_cyc(e) == "-1 + z(6)"
    with pytest.raises(ConductorNotMultiple):
        embed(I, 6)


def test_galois_examples():
    assert galois(I, 3) == -I
    assert galois(cyc("7/3"), 5) == Fraction(7, 3)
    with pytest.raises(NotCoprime):
        galois(I, 2)


def test_subfield_examples():
    assert in_subfield(I, 4)
    assert not in_subfield(zeta(8), 4)
    assert in_subfield(zeta(3) + zeta(3, 2), 1)
    assert in_subfield(zeta(8) ** 2, 4)
    assert in_subfield(zeta(12) ** 3, 4)


def test_integrality_examples():
    assert is_algebraic_integer_in(ONE, 1)
    assert not is_algebraic_integer_in(cyc("1/2"), 1)
    assert is_algebraic_integer_in(zeta(8) + zeta(8) ** -1, 8)
    assert not is_algebraic_integer_in(zeta(8) + zeta(8) ** -1, 4)
    assert not is_algebraic_integer_in(I / 2, 4)
    assert is_algebraic_integer_in(cyc(-3), 2)


def test_conductor_overflow():
    old = cyclo.get_max_conductor()
    try:
        cyclo.set_max_conductor(50)
        with pytest.raises(ConductorOverflow):
            zeta(7) * zeta(11)
    finally:
        cyclo.set_max_conductor(old)


def test_parse_examples():
    h = parse_cyc("1/2")
    assert h.conductor == 1 and h == Fraction(1, 2)
    assert parse_cyc("-i") == -zeta(4)
    x = parse_cyc("z(8)^3 - 1/2")
    assert x.conductor == 8
    assert x == zeta(8, 3) - Fraction(1, 2)
    assert parse_cyc("2 i") == 2 * I
    assert parse_cyc("(1 + i)*(1 - i)") == 2
    assert parse_cyc("z(3)^-1") == zeta(3, 2)
    assert parse_cyc("z(4) * z(3)").conductor == 12


@pytest.mark.parametrize("bad,pos", [("1/", 2), ("z(", 2), ("1 + * 2", 4), ("i i)", 3), ("", 0), ("1/0", None)])
def test_parse_errors(bad, pos):
    with pytest.raises(ParseError) as err:
        parse_cyc(bad)
    if pos is not None:
        assert err.value.position == pos


def test_format_examples():
    assert format_cyc(ZERO) == "0"
    assert format_cyc(-I) == "-i"
    assert format_cyc(cyc("1/2") * I - 3) == "-3 + 1/2*i"
    assert str(zeta(8, 3)) == "z(8)^3"


def test_equality_and_hash_across_conductors():
    a = zeta(8) ** 2
    assert a == I
    assert hash(a) == hash(I)
    assert len({a, I, embed(I, 12)}) == 1
    assert cyc(2) == 2 and cyc(2) != 3
    assert cyc("1/2") == Fraction(1, 2)


@settings(max_examples=60, deadline=None)
@given(cycs(), cycs(), cycs())
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    assert a - a == 0
    if a:
        assert a * a.inverse() == 1
        assert (b / a) * a == b


@settings(max_examples=60, deadline=None)
@given(cycs([1, 2, 3, 4, 6, 12]), cycs([1, 2, 3, 4, 6, 12]))
def test_embed_homomorphism(a, b):
    assert embed(a + b, 12) == embed(a, 12) + embed(b, 12)
    assert embed(a * b, 12) == embed(a, 12) * embed(b, 12)


@settings(max_examples=60, deadline=None)
@given(cycs([12]), st.sampled_from([1, 5, 7, 11]), st.sampled_from([1, 5, 7, 11]))
def test_galois_composition(a, k, k2):
    assert galois(galois(a, k), k2) == galois(a, k * k2 % 12)


@settings(max_examples=60, deadline=None)
@given(cycs())
def test_subfield_properties(a):
    assert in_subfield(a, a.conductor)
    m = a.minimal()
    assert in_subfield(a, 1) == all(c == 0 for c in m.coeffs[1:])
    assert m == a


@settings(max_examples=80, deadline=None)
@given(cycs())
def test_parse_format_roundtrip(a):
    text = format_cyc(a)
    b = parse_cyc(text)
    assert b == a
    assert format_cyc(b.embed(a.conductor)) == text
