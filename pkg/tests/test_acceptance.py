"""Acceptance gate: one check per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from fractions import Fraction

import pytest

from cyclocert import intpoly as ip
from cyclocert.cyclo import certify_irreducible, degree_split_oracle, unity_root_indices
from cyclocert.family import (build_P, build_Q, build_p, build_q, check_identities, check_special_values,
                              minimal_polys, pf_index)
from cyclocert.fpoly import FpPoly, factor_mod_p, fermat_scan, fp_divrem, gcd_claims, reduce
from cyclocert.ntheory import is_prime
from cyclocert.obstruction import CERTIFIED, NO_CERTIFICATE, find_certificate, index_primes, pattern_mod_p

RESULTS = []  # (number, title, ok, detail, seconds)


def desc(*c):
    return ip.trim(reversed(c))


def c01_fixtures():
    want = {
        "q0": (build_q(0), desc(1, -5, 3)),
        "q1": (build_q(1), ip.mul(desc(1, -8, 17, -5), desc(1, -1))),
        "q2": (build_q(2), desc(1, -13, 63, -140, 142, -59, 7)),
        "q3": (build_q(3), desc(1, -17, 117, -418, 827, -898, 502, -124, 9)),
        "p0": (build_p(0), desc(1, -1, -3)),
        "p1": (build_p(1), ip.mul(desc(1, -2, -3, 5), desc(1, 1))),
        "P0": (build_P(0), desc(1, -1, -1, -1, 1)),
        "P1": (build_P(1), desc(1, -1, -1, -1, 1, -1, -1, -1, 1)),
    }
    bad = [k for k, (got, exp) in want.items() if got != exp]
    assert not bad, f"mismatch: {bad}"
    return f"{len(want)} printed polynomials reproduced"


def c02_identities():
    names = ("P recursion == closed form", "P == symmetrize(p)", "p == shift(q, 2)",
             "Q == P*(q^4-1) == expansion", "P self-reciprocal", "P coefficients in {-1,0,1}")
    bad = []
    for j in range(201):
        checks = check_identities(j)
        bad += [(j, n) for n in names if not checks[n]]
        if ip.symmetrize(ip.shift(build_q(j), 2)) != build_P(j):
            bad.append((j, "symmetrize(shift(q, 2))"))
    assert not bad, f"failures: {bad[:5]}"
    return "j = 0..200"


def c03_special_values():
    bad = []
    for j in range(201):
        k = j + 1
        p, P = build_p(j), build_P(j)
        s = (-1) ** (j + 1)
        ok = (ip.evaluate(p, 0) == s * (2 * j + 3) and ip.eval_deriv(p, 1, 0) == s * (j + 1)
              and ip.evaluate(P, 0) == 1 and ip.evaluate(P, 1) == -(2 * j + 1)
              and ip.eval_deriv(P, 2, -1) == Fraction(2 * (2 * k + 1) * (8 * k - 1) * k, 3) + 2 * k)
        if not ok or not all(check_special_values(j).values()):
            bad.append(j)
    assert not bad, f"failures at j = {bad[:10]}"
    return "j = 0..200"


def c04_cyclotomic_sieve():
    bad = []
    for j in range(151):
        extra = ((3, 1),) if j % 3 == 1 else ()
        if unity_root_indices(build_P(j)).entries != extra:
            bad.append(("P", j))
        if unity_root_indices(build_Q(j)).entries != tuple(sorted(((1, 1), (2, 1), (4, 1)) + extra)):
            bad.append(("Q", j))
    assert not bad, f"failures: {bad[:10]}"
    return "j = 0..150, P_j and Q_j"


def c05_degree_oracle():
    least = None
    for j in range(31):
        _, R = minimal_polys(j)
        orc = degree_split_oracle(R, min_primes=20)
        assert orc.irreducible, f"j={j}: degrees {orc.surviving} not excluded"
        assert len(orc.primes) >= 20
        assert all(not (ip.discriminant(R) * ip.lc(R)) % p == 0 for p in orc.primes[:3])
        least = len(orc.primes) if least is None else min(least, len(orc.primes))
    return f"j = 0..30, >= {least} unramified primes each"


def c06_certificates():
    seen = set()
    for j in range(2, 101):
        v = find_certificate(j)
        assert v.kind == CERTIFIED, f"j={j}: {v.kind}"
        assert any(not pattern_is_feasible(j, p) for p in index_primes(j)), f"j={j}: no certificate at a prime dividing 2j+3"
        seen.add(v.certificate.route)
    v2, v3 = find_certificate(2).certificate, find_certificate(3).certificate
    assert (v2.p, str(v2.pattern)) == (7, "{(1,1),(1,1),(4,1)}")
    assert v3.p == 3
    return f"j = 2..100 certified; routes used: {sorted(seen)}"


def pattern_is_feasible(j, p):
    from cyclocert.obstruction import galois_feasible

    return galois_feasible(pattern_mod_p(j, p))


def c07_negative_controls():
    for j in (0, 1):
        v = find_certificate(j, 1000)
        assert v.kind == NO_CERTIFICATE, f"j={j}: {v.kind}"
    return "j = 0, 1 uncertified up to 1000"


def c08_mod_p_claims():
    n = 0
    for j in range(1, 201):
        if is_prime(2 * j + 3):
            c = gcd_claims(j)
            assert c["claim1"] and c["claim2"], f"j={j}"
            n += 1
    worst = 0
    for j in range(2, 101):
        m, _ = minimal_polys(j)
        for p in index_primes(j):
            if p > 3:
                mx = max(e for _, e in factor_mod_p(m, p).factors)
                assert mx <= 4, f"j={j}, p={p}: multiplicity {mx}"
                worst = max(worst, mx)
    _, r = fp_divrem(FpPoly(7, build_P(2)), FpPoly(7, (1, 1, 1)))
    assert r, "q^2+q+1 divides P_2 mod 7"
    return f"gcd claims at {n} primes; max multiplicity {worst}; P_2 mod (q^2+q+1, 7) = {r.to_str('q')}"


def c09_fermat():
    for p in (3, 5, 7, 11, 13):
        r = fermat_scan(p)
        assert r["equivalent"] and r["units"] == p * p - 1, f"p={p}: {r['mismatches'][:3]}"
    return "every unit of F_{p^2}, p in {3,5,7,11,13}"


def c10_root_structure():
    w = Fraction(1, 10**9)
    for j in range(51):
        rep = certify_irreducible(j, oracle_primes=None)
        assert all(rep.root_structure.values()), f"j={j}: {rep.root_structure}"
        b = pf_index(j, w)  # raises on a failed cross-check
        assert b.width <= w
    b = pf_index(0, w)
    assert (2 * b.lo - 5) ** 2 <= 13 <= (2 * b.hi - 5) ** 2, "d_0 bracket misses (5+sqrt 13)/2"
    return f"j = 0..50; d_0 in [{float(b.lo):.10f}, {float(b.hi):.10f}]"


def c11_kernel():
    rng = random.Random(2024)

    def rand_poly(deg, size):
        f = ip.trim(rng.randint(-size, size) for _ in range(deg + 1))
        return f or (1,)

    for _ in range(10_000):
        f, g = rand_poly(rng.randint(0, 12), 10**6), rand_poly(rng.randint(0, 8), 100)
        assert ip.exact_div(ip.mul(f, g), g) == f
    primes = [2, 3, 5, 7, 11, 13, 101, 65537]
    for _ in range(1000):
        p = rng.choice(primes)
        f = rand_poly(rng.randint(1, 20), 10**4)
        if not reduce(f, p):
            continue
        a = factor_mod_p(f, p, seed=1)
        assert a.expand().coeffs == tuple(reduce(f, p))
        assert a == factor_mod_p(f, p, seed=2)
    return "10^4 exact divisions, 10^3 reconstructions, seed-independent"


CRITERIA = [
    (1, "fixture equality", c01_fixtures, 1),
    (2, "identity suite", c02_identities, 60),
    (3, "special values", c03_special_values, 60),
    (4, "cyclotomic sieve", c04_cyclotomic_sieve, 600),
    (5, "irreducibility cross-oracle", c05_degree_oracle, 300),
    (6, "non-Galois certificates", c06_certificates, 900),
    (7, "negative controls", c07_negative_controls, 60),
    (8, "mod-p claims", c08_mod_p_claims, 600),
    (9, "unit scan in F_{p^2}", c09_fermat, 10),
    (10, "root structure and pf index", c10_root_structure, 120),
    (11, "kernel properties", c11_kernel, 120),
]


def run_criterion(num, title, fn, budget):
    t0 = time.perf_counter()
    try:
        detail = fn()
        ok = True
    except AssertionError as exc:
        detail, ok = f"assertion: {exc}", False
    secs = time.perf_counter() - t0
    if ok and secs > budget:
        ok, detail = False, f"{detail}; took {secs:.1f}s, budget {budget}s"
    line = f"{'PASS' if ok else 'FAIL'} criterion {num:>2} {title}: {detail} [{secs:.1f}s]"
    RESULTS.append(line)
    return ok, line


@pytest.mark.parametrize("num,title,fn,budget", CRITERIA, ids=[f"c{c[0]:02d}" for c in CRITERIA])
def test_criterion(num, title, fn, budget):
    ok, line = run_criterion(num, title, fn, budget)
    print(line)
    assert ok, line


if __name__ == "__main__":
    results = [run_criterion(*c) for c in CRITERIA]
    for _, line in results:
        print(line)
    sys.exit(0 if all(ok for ok, _ in results) else 1)
