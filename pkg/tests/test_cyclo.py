import pytest
from hypothesis import given, settings, strategies as st

from cyclocert import intpoly as ip
from cyclocert.cyclo import (CycloPart, certify_irreducible, cyclotomic_poly, degree_split_oracle,
                             graeffe_is_cyclotomic, is_cyclotomic_product, orders_with_totient_at_most,
                             totient, unity_root_indices)
from cyclocert.exceptions import CertificateFailure
from cyclocert import cyclo
from cyclocert.family import build_P, build_Q, minimal_polys

sympy = pytest.importorskip("sympy")
x = sympy.Symbol("x")


def test_totient_table():
    assert [totient(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


@pytest.mark.parametrize("n", list(range(1, 40)) + [105])
def test_cyclotomic_matches_sympy(n):
    ref = sympy.Poly(sympy.cyclotomic_poly(n, x), x).all_coeffs()
    assert cyclotomic_poly(n) == tuple(int(c) for c in reversed(ref))


def test_orders_with_small_totient():
    # phi(n) <= 4 exactly for these n
    assert orders_with_totient_at_most(4) == (1, 2, 3, 4, 5, 6, 8, 10, 12)
    brute = [n for n in range(1, 500) if sympy.totient(n) <= 10]
    assert list(orders_with_totient_at_most(10)) == brute


def sympy_cyclo_part(f):
    """Cyclotomic factors found by full factorization over the integers."""
    out = {}
    for g, e in sympy.factor_list(sympy.Poly(list(reversed(f)), x))[1]:
        if g.is_cyclotomic:
            for n in range(1, 1000):
                if sympy.Poly(sympy.cyclotomic_poly(n, x), x) == g:
                    out[n] = e
                    break
    return tuple(sorted(out.items()))


orders = st.lists(st.tuples(st.integers(1, 30), st.integers(1, 2)), max_size=3)
cofactors = st.sampled_from([(1,), (3, -5, 1), (-2, 0, 1), (1, 1, 0, 1), (2,), (-1, 0, 1, 1)])


@given(orders, cofactors)
@settings(max_examples=80, deadline=None)
def test_unity_root_indices_on_built_products(parts, cof):
    f = cof
    for n, e in parts:
        f = ip.mul(f, ip.power(cyclotomic_poly(n), e))
    part = unity_root_indices(f)
    assert part.reconstruct() == f
    assert part.entries == sympy_cyclo_part(f)


def test_cyclo_part_json():
    part = unity_root_indices(ip.mul((1, 1, 1), (3, -5, 1)))
    assert part.to_json() == {"entries": [[3, 1]], "cofactor": ["3", "-5", "1"]}
    assert part.orders == {3}


def test_graeffe_agrees_with_sieve():
    assert graeffe_is_cyclotomic(ip.mul(cyclotomic_poly(7), cyclotomic_poly(12)))
    assert not graeffe_is_cyclotomic((1, -1, -1, -1, 1))
    assert is_cyclotomic_product(ip.power(cyclotomic_poly(9), 2))
    assert not is_cyclotomic_product(build_P(3))
    with pytest.raises(ValueError):
        is_cyclotomic_product((1, 2))


@pytest.mark.parametrize("j", range(0, 13))
def test_family_cyclotomic_parts(j):
    want = ((3, 1),) if j % 3 == 1 else ()
    assert unity_root_indices(build_P(j)).entries == want
    wantQ = tuple(sorted(((1, 1), (2, 1), (4, 1)) + want))
    assert unity_root_indices(build_Q(j)).entries == wantQ
    if j <= 6:
        assert unity_root_indices(build_Q(j)).entries == sympy_cyclo_part(build_Q(j))


def test_degree_oracle():
    m, R = minimal_polys(5)
    orc = degree_split_oracle(R)
    assert orc.irreducible and len(orc.primes) >= 20
    # a genuine product keeps its factor degrees alive
    reducible = ip.mul((3, -5, 1), (-2, 0, 0, 1))
    orc = degree_split_oracle(reducible, min_primes=20, max_primes=40)
    assert 2 in orc.surviving and 3 in orc.surviving
    assert not orc.irreducible


@pytest.mark.parametrize("j", [0, 1, 2, 4, 9])
def test_certify_irreducible(j):
    rep = certify_irreducible(j)
    assert rep.proof_grade and rep.evidence_grade
    assert rep.cyclo.cofactor == minimal_polys(j)[1]
    if j <= 4:
        R = minimal_polys(j)[1]
        assert len(sympy.factor_list(sympy.Poly(list(reversed(R)), x))[1]) == 1


def test_certify_irreducible_detects_bad_cyclo_part(monkeypatch):
    monkeypatch.setattr(cyclo, "has_phi3", lambda j: True)
    with pytest.raises(CertificateFailure) as exc:
        certify_irreducible(2, oracle_primes=None)
    assert exc.value.check == "cyclotomic part"
