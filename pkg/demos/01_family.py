"""
The polynomial families and their largest roots
================================================

Build q_j, p_j and P_j for a few indices, run the identity checks and
bracket the largest root d_j of q_j with exact rational arithmetic.
"""

from fractions import Fraction

from cyclocert import intpoly as ip
from cyclocert.family import build_P, build_p, build_q, check_identities, family_record, pf_index

# q_j follows a three-term recursion; the coefficients grow quickly
for j in range(4):
    print(f"q_{j}(x) =", ip.to_str(build_q(j)))

# shifting x -> x + 2 gives p_j, and the substitution x = q + 1/q gives P_j,
# whose coefficients are all -1, 0 or 1
print("p_2(x) =", ip.to_str(build_p(2)))
print("P_2(q) =", ip.to_str(build_P(2), "q"))

checks = check_identities(7)
print(f"identities for j=7: {sum(checks.values())}/{len(checks)} hold")

# d_j increases towards a limit a little below 4.383
for j in (0, 1, 2, 10, 50):
    b = pf_index(j, Fraction(1, 10**12))
    print(f"d_{j:<3d} in [{float(b.lo):.12f}, {float(b.hi):.12f}]")

# a FamilyRecord bundles everything, with a digest of the coefficient lists
rec = family_record(4)
print("j=4 carries the factor q^2+q+1:", rec.has_phi3, "digest", rec.digest[:16])
