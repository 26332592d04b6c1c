from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gblocks import config
from gblocks.algebra import Cyclotomic, cyclo_arith, group_conj, group_parse, parse_scalar
from gblocks.errors import CyclotomicError, GroupError

small = st.fractions(min_value=-4, max_value=4, max_denominator=4)


def elements(n):
    return st.lists(small, min_size=n, max_size=n).map(lambda cs: Cyclotomic.from_powers(n, dict(enumerate(cs))))


def test_symmetric_preset():
    s3 = group_parse({"preset": "symmetric", "n": 3})
    assert s3.order == 6
    assert not s3.is_abelian()
    assert s3.name(s3.identity) == "e"
    assert {s3.element_order(g) for g in s3.elements} == {1, 2, 3}


def test_cyclic_preset_names():
    z4 = group_parse({"preset": "cyclic", "n": 4})
    assert z4.is_abelian()
    assert z4.mul(z4.index("3"), z4.index("2")) == z4.index("1")
    assert z4.inv(z4.index("1")) == z4.index("3")


def test_explicit_table():
    grp = group_parse({"table": [[0, 1], [1, 0]], "names": ["e", "s"]})
    assert grp.order == 2
    assert grp.index("s") == 1


@pytest.mark.parametrize("spec", [
    {"table": [[0, 1], [0, 1]]},
    {"table": [[1, 0], [0, 0]]},
    {"preset": "cyclic", "n": 0},
    {"preset": "quaternion", "n": 8},
    {"table": [[0, 1], [1, 0]], "names": ["e", "e"]},
    {},
])
def test_invalid_groups(spec):
    with pytest.raises(GroupError):
        group_parse(spec)


def test_conjugation():
    s3 = group_parse({"preset": "symmetric", "n": 3})
    x, g = s3.index("(12)"), s3.index("(123)")
    assert group_conj(s3, x, g) == s3.index("(132)")
    assert group_conj(s3, s3.identity, g) == g
    with pytest.raises(GroupError):
        group_conj(s3, 6, g)


def test_roots_of_unity():
    z = Cyclotomic.root(1, 8)
    assert z ** 8 == 1
    assert z ** 4 == -1
    assert z.conjugate() == Cyclotomic.root(7, 8)
    assert z * z.conjugate() == 1


def test_embedding_between_conductors():
    assert Cyclotomic.root(1, 4) == Cyclotomic.root(2, 8)
    assert Cyclotomic.root(1, 4) + Cyclotomic.root(3, 8) == Cyclotomic.root(3, 8) + Cyclotomic.root(2, 8)
    assert Cyclotomic.root(1, 3) + Cyclotomic.root(2, 3) == -1


def test_golden_ratio_inverse():
    # zeta_5 + zeta_5^4 = 1/phi, with phi^2 = phi + 1
    inv_phi = Cyclotomic.from_powers(5, {1: 1, 4: 1})
    phi = inv_phi.inverse()
    assert phi * phi == phi + 1
    assert phi - inv_phi == 1


def test_sqrt_two_from_zeta_eight():
    root2 = Cyclotomic.from_powers(8, {1: 1, 7: 1})
    assert root2 * root2 == 2
    assert (root2 / 2) * root2 == 1


def test_division_by_zero():
    with pytest.raises(CyclotomicError):
        Cyclotomic.zero(5).inverse()


def test_conductor_limit(monkeypatch):
    monkeypatch.setattr(config, "CONDUCTOR_LIMIT", 16)
    Cyclotomic.one(16)
    with pytest.raises(CyclotomicError):
        Cyclotomic.one(32)


def test_parse_scalar():
    assert parse_scalar("3/4", 8) == Fraction(3, 4)
    assert parse_scalar({"2": "1/2", "14": "1/2"}, 16) * parse_scalar({"2": 1, "14": 1}, 16) == 1
    with pytest.raises(CyclotomicError):
        parse_scalar({"x": 1}, 4)
    with pytest.raises(CyclotomicError):
        parse_scalar(0.5, 4)


def test_cyclo_arith():
    a, b = Cyclotomic.root(1, 3), Cyclotomic.root(2, 3)
    assert cyclo_arith(a, b, "mul") == 1
    assert cyclo_arith(a, None, "conjugate") == b
    with pytest.raises(CyclotomicError):
        cyclo_arith(a, None, "add")


@settings(max_examples=60, deadline=None)
@given(elements(8), elements(8), elements(8))
def test_field_axioms_zeta8(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) - b == a
    if b:
        assert (a / b) * b == a


@settings(max_examples=40, deadline=None)
@given(elements(12))
def test_inverse_and_conjugate_zeta12(a):
    if a:
        assert a * a.inverse() == 1
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).conjugate() == a * a.conjugate()


@settings(max_examples=40, deadline=None)
@given(elements(5), elements(5))
def test_canonical_representation(a, b):
    # equal values have equal coefficient tuples
    assert ((a + b) - b).coeffs == a.coeffs
    assert hash(a * 1) == hash(a)


def test_hash_ignores_the_conductor():
    assert hash(Cyclotomic.root(1, 4)) == hash(Cyclotomic.root(2, 8))
    assert len({Cyclotomic.root(1, 3), Cyclotomic.root(4, 12), Cyclotomic.root(2, 6)}) == 1
    assert hash(Cyclotomic.rational(Fraction(1, 2), 12)) == hash(Fraction(1, 2))
    assert {Cyclotomic.one(8): "x"}[1] == "x"


def test_canonical_conductor():
    assert Cyclotomic.root(2, 8).canonical().conductor == 4
    assert Cyclotomic.root(2, 6).canonical().conductor == 3
    assert Cyclotomic.root(3, 6).canonical() == -1
    assert Cyclotomic.root(3, 6).canonical().conductor == 1
    assert Cyclotomic.root(1, 8).canonical().conductor == 8


@settings(max_examples=40, deadline=None)
@given(elements(4), st.sampled_from([8, 12, 20]))
def test_equal_values_hash_alike(a, m):
    b = a.embed(m)
    assert a == b
    assert hash(a) == hash(b)
    assert b.canonical().conductor in (1, 4)
