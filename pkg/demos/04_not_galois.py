"""
Certificates that Q(e_j) is not Galois
======================================

A Galois field of degree n forces every factorization pattern mod p into
blocks of equal degree and equal multiplicity.  Finding a pattern that
cannot be arranged that way proves the field is not Galois, so e_j is
not a cyclotomic integer.
"""

from cyclocert.obstruction import FactorPattern, feasible_shapes, find_certificate, galois_feasible, verdict

pat = FactorPattern.of([(1, 1), (1, 1), (4, 1)])
print(pat, "feasible:", galois_feasible(pat))
print("{(2,1),(2,1),(2,1)} shapes (e, h):", feasible_shapes(FactorPattern.of([(2, 1)] * 3)))

for j in range(2, 12):
    v = find_certificate(j)
    c = v.certificate
    print(f"j={j:<3d} 2j+3={2 * j + 3:<4d} p={c.p:<3d} {str(c.pattern):<36s} {c.route}"
          + ("  (ramified)" if c.ramified else ""))

# the first two indices are genuinely cyclotomic, so nothing is found
for j in (0, 1):
    print(f"j={j}:", find_certificate(j, 1000).kind)

# verdict() also runs the identity suite and the irreducibility proof first
print("j=25:", verdict(25).kind)
