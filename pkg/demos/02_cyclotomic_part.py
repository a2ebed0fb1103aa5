"""
Cyclotomic factors and irreducibility
=====================================

P_j has exactly one cyclotomic factor, q^2+q+1, when j = 1 mod 3 and none
otherwise.  With the root structure this proves that what remains, R_j, is
irreducible; a degree-pattern scan over many primes corroborates it.
"""

from cyclocert import intpoly as ip
from cyclocert.cyclo import certify_irreducible, cyclotomic_poly, is_cyclotomic_product, unity_root_indices
from cyclocert.family import build_P, build_Q

print("Phi_12 =", ip.to_str(cyclotomic_poly(12)))

for j in range(6):
    part = unity_root_indices(build_P(j))
    print(f"P_{j}: cyclotomic part {list(part.entries)}, cofactor degree {ip.degree(part.cofactor)}")

# Q_j = P_j (q^4 - 1) picks up Phi_1, Phi_2 and Phi_4 as well
print("Q_4:", unity_root_indices(build_Q(4)).entries)

# the sieve is cross-checked by Graeffe root squaring
f = ip.mul(cyclotomic_poly(9), cyclotomic_poly(10))
print("Phi_9 Phi_10 is a cyclotomic product:", is_cyclotomic_product(f))

rep = certify_irreducible(12)
print(f"R_12 irreducible: proof {rep.proof_grade}, "
      f"degree oracle over {len(rep.oracle.primes)} primes leaves {rep.oracle.surviving or 'nothing'}")
