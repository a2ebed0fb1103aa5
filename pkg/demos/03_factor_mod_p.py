"""
Factoring over prime fields
===========================

Square-free decomposition, distinct-degree factorization and
Cantor-Zassenhaus splitting, applied to the minimal polynomials m_j.
"""

from cyclocert.family import build_P, minimal_polys
from cyclocert.fpoly import FpPoly, factor_mod_p, fermat_scan, fp_divrem, fp_powmod, gcd_claims

m2, _ = minimal_polys(2)
fm = factor_mod_p(m2, 7)
for g, e in fm.factors:
    print(f"  ({g.to_str()})^{e}")
print("pattern", fm.pattern(), "reconstructs:", fm.expand() == FpPoly(7, m2))

# results do not depend on the random seed
m, _ = minimal_polys(40)
print("seed-independent:", factor_mod_p(m, 83, seed=1) == factor_mod_p(m, 83, seed=2))

# x^(p-1) mod a polynomial, by square-and-multiply in the quotient ring
x = FpPoly(11, (0, 1))
print("x^12 mod P_1 over F_11 =", fp_powmod(x, 12, FpPoly(11, build_P(1))).to_str("q"))

# q^2+q+1 does not divide P_2 over F_7
print("P_2 mod (q^2+q+1) over F_7 =", fp_divrem(FpPoly(7, build_P(2)), FpPoly(7, (1, 1, 1)))[1].to_str("q"))

c = gcd_claims(4)
print(f"gcd claims over F_{c['p']}: {c['claim1']}, {c['claim2']}")

r = fermat_scan(13)
print(f"F_169: a + 1/a in F_13 iff a^12 = 1 or a^14 = 1, for all {r['units']} units: {r['equivalent']}")
