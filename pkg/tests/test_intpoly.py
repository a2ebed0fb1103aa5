from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from cyclocert import intpoly as ip
from cyclocert.exceptions import NotDivisible, NotSquarefree

from conftest import int_polys

sympy = pytest.importorskip("sympy")
x = sympy.Symbol("x")


def to_sym(f):
    return sympy.Poly(list(reversed(f)) or [0], x, domain="ZZ")


def from_sym(P):
    return ip.trim(reversed([int(c) for c in P.all_coeffs()]))


def test_basics():
    f = ip.poly(3, -5, 1)
    assert ip.degree(f) == 2 and ip.lc(f) == 1
    assert ip.degree(ip.ZERO) == -1
    assert ip.trim([1, 2, 0, 0]) == (1, 2)
    assert ip.to_str(f) == "x^2 - 5x + 3"
    assert ip.content((6, -4, 2)) == 2
    assert ip.primitive_part((-6, 4, -2)) == (-3, 2, -1)


@given(int_polys(), int_polys())
def test_mul_matches_sympy(f, g):
    assert ip.mul(f, g) == from_sym(to_sym(f) * to_sym(g))


@given(int_polys(), int_polys(nonzero=True))
def test_exact_div_roundtrip(f, g):
    assert ip.exact_div(ip.mul(f, g), g) == f


def test_exact_div_rejects():
    with pytest.raises(NotDivisible):
        ip.exact_div((1, 0, 1), (1, 1))
    with pytest.raises(NotDivisible):
        ip.exact_div((1, 1), (0, 2))  # quotient would need 1/2
    with pytest.raises(ZeroDivisionError):
        ip.exact_div((1,), ())


@given(int_polys(6), int_polys(5, nonzero=True))
def test_pseudo_rem(f, g):
    r = ip.pseudo_rem(f, g)
    if ip.degree(f) < ip.degree(g):
        assert r == f
    else:
        assert r == from_sym(sympy.prem(to_sym(f), to_sym(g)))


@given(int_polys(6), int_polys(6))
def test_gcd_matches_sympy(f, g):
    h = ip.gcd(f, g)
    ref = from_sym(sympy.gcd(to_sym(f), to_sym(g)))
    if ref and ref[-1] < 0:
        ref = ip.neg(ref)
    assert h == ref


@given(int_polys(6), st.integers(-5, 5))
def test_shift_is_composition(f, c):
    assert ip.shift(f, c) == from_sym(to_sym(f).compose(sympy.Poly(x + c, x)))
    assert ip.shift(ip.shift(f, c), -c) == f


@given(int_polys(6), st.fractions(min_value=-7, max_value=7, max_denominator=9))
def test_evaluate_and_sign(f, r):
    val = sum(Fraction(a) * r**i for i, a in enumerate(f))
    assert ip.evaluate(f, r) == val
    assert ip.sign_at(f, r) == (val > 0) - (val < 0)


def test_eval_deriv():
    f = (1, 2, 3, 4)  # 4x^3 + 3x^2 + 2x + 1
    assert ip.eval_deriv(f, 2, -1) == 24 * -1 + 6
    assert ip.deriv(f, 3) == (24,)
    assert ip.deriv(f, 4) == ()


def test_symmetrize_and_reciprocal():
    # q^2 (q + 1/q)^2 - ... : x^2 - x - 3 -> q^4 - q^3 - q^2 - q + 1
    assert ip.symmetrize((-3, -1, 1)) == (1, -1, -1, -1, 1)
    assert ip.is_self_reciprocal((1, -1, -1, -1, 1))
    assert not ip.is_self_reciprocal((1, 2))
    assert ip.reverse((1, 2, 3)) == (3, 2, 1)


@given(int_polys(5, nonzero=True))
def test_graeffe_squares_roots(f):
    # g(x^2) = (-1)^n f(x) f(-x)
    g = ip.graeffe(f)
    n = ip.degree(f)
    fx = ip.mul(f, tuple(a * (-1) ** i for i, a in enumerate(f)))
    g2 = ip.trim(c for a in g for c in (a, 0))
    assert g2 == ip.scale(fx, (-1) ** n)


@given(st.lists(st.tuples(int_polys(3, nonzero=True), st.integers(1, 3)), min_size=1, max_size=3))
@settings(max_examples=60)
def test_squarefree_decomposition(parts):
    f = ip.product(ip.power(g, e) for g, e in parts)
    dec = ip.squarefree_decomposition(f)
    rebuilt = ip.product(ip.power(g, e) for g, e in dec)
    assert rebuilt in (ip.primitive_part(f), ip.neg(ip.primitive_part(f)))
    for g, _ in dec:
        assert ip.is_squarefree(g)
    ref = ip.primitive_part(from_sym(sympy.sqf_part(to_sym(f))))
    assert ip.squarefree_part(f) in (ref, ip.neg(ref))


def sylvester_det(f, g):
    from sympy.polys.subresultants_qq_zz import sylvester

    if ip.degree(f) < 1 and ip.degree(g) < 1:
        return None
    return int(sylvester(to_sym(f).as_expr(), to_sym(g).as_expr(), x, 1).det())


@given(int_polys(5, nonzero=True), int_polys(5, nonzero=True))
@settings(max_examples=150)
def test_resultant_is_sylvester_determinant(f, g):
    if ip.degree(f) < 1 or ip.degree(g) < 1:
        return
    assert ip.resultant(f, g) == sylvester_det(f, g)


def test_resultant_fixtures():
    assert ip.resultant((1, 2), (1, 0, 0, 1)) == 7
    assert ip.resultant((-2, 0, 1), (-3, 0, 1)) == 1
    # shared root
    assert ip.resultant((-1, 0, 1), (1, 1)) == 0


def test_discriminant_quadratic():
    # b^2 - 4ac
    for a, b, c in [(1, -5, 3), (2, 3, -7), (1, -1, -3), (-3, 4, 4)]:
        assert ip.discriminant((c, b, a)) == b * b - 4 * a * c
    # x^3 + px + q: -4p^3 - 27q^2
    assert ip.discriminant((5, -3, 0, 1)) == -4 * (-3) ** 3 - 27 * 25


@given(int_polys(6, nonzero=True))
@settings(max_examples=100)
def test_sturm_count_matches_sympy(f):
    if ip.degree(f) < 1:
        return
    s = ip.squarefree_part(f)
    assert ip.sturm_count(s) == sympy.Poly(to_sym(s)).count_roots()
    assert ip.sturm_count(s, -1, 2) == sum(1 for r in sympy.real_roots(to_sym(s)) if -1 < r <= 2)


def test_sturm_rejects_repeated_roots():
    with pytest.raises(NotSquarefree):
        ip.sturm_sequence((1, 2, 1))


def test_isolate_largest_root_quadratic():
    # (5 + sqrt 13)/2 for x^2 - 5x + 3
    w = Fraction(1, 10**12)
    b = ip.isolate_largest_root((3, -5, 1), w)
    assert b.width <= w
    lo, hi = b.lo, b.hi
    # root r satisfies (2r - 5)^2 = 13, 2r - 5 > 0
    assert (2 * lo - 5) ** 2 <= 13 <= (2 * hi - 5) ** 2


def test_isolate_exact_rational_root():
    b = ip.isolate_largest_root(ip.mul((-3, 2), (1, 1)), Fraction(1, 100))
    assert Fraction(3, 2) in b


@given(int_polys(6, nonzero=True))
@settings(max_examples=60)
def test_isolate_matches_sympy(f):
    if ip.degree(f) < 1 or ip.sturm_count(ip.squarefree_part(f)) == 0:
        return
    b = ip.isolate_largest_root(f, Fraction(1, 10**6))
    r = max(sympy.real_roots(to_sym(f)))
    assert b.lo <= sympy.Rational(r.evalf(30)) + sympy.Rational(1, 10**20)
    assert sympy.Rational(r.evalf(30)) - sympy.Rational(1, 10**20) <= b.hi


def test_isolate_without_real_roots():
    from cyclocert.exceptions import NoRealRoot

    with pytest.raises(NoRealRoot):
        ip.isolate_largest_root((1, 0, 1), Fraction(1, 10))
