"""Cyclotomic polynomials and exact extraction of cyclotomic factors.

:func:`unity_root_indices` finds every ``Phi_n`` dividing an integer
polynomial.  It enumerates all ``n`` with ``phi(n) <= deg f`` (finite, since
``phi(n) >= sqrt(n/2)``), discards most of them cheaply by evaluating ``f``
at a primitive ``n``-th root of unity modulo a prime ``l = 1 (mod n)``, and
confirms the survivors by exact division.  The modular filter can only
produce false positives, never false negatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from . import intpoly as ip
from .exceptions import CertificateFailure, NotDivisible
from .family import build_P, build_q, has_phi3, minimal_polys
from .fpoly import degree_pattern_mod_p, is_squarefree_mod_p
from .intpoly import IntPoly
from .ntheory import factorint, is_prime, primes_upto, totients_upto


def totient(n: int) -> int:
    """Euler's phi from the product formula over the prime factors of ``n``."""
    if n < 1:
        raise ValueError("totient needs n >= 1")
    out = n
    for q in factorint(n):
        out = out // q * (q - 1)
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> IntPoly:
    """``Phi_n``: ``x**n - 1`` with every ``Phi_d`` (``d | n``, ``d < n``) divided out."""
    if n < 1:
        raise ValueError("cyclotomic_poly needs n >= 1")
    f = ip.sub(ip.monomial(n), ip.ONE)
    for d in range(1, n):
        if n % d == 0:
            f = ip.exact_div(f, cyclotomic_poly(d))
    return f


@lru_cache(maxsize=64)
def orders_with_totient_at_most(D: int) -> tuple[int, ...]:
    """Every ``n >= 1`` with ``phi(n) <= D``, scanning ``n <= 2*D**2``."""
    if D < 1:
        return ()
    N = max(2 * D * D, 2)
    phi = totients_upto(N)
    return tuple(i for i in (phi[1:] <= D).nonzero()[0] + 1)


@lru_cache(maxsize=None)
def _root_of_unity_mod_prime(n: int) -> tuple[int, int]:
    """``(l, z)`` with ``l`` prime, ``l = 1 (mod n)`` and ``z`` of order exactly ``n`` mod ``l``."""
    l = n + 1
    while not is_prime(l):
        l += n
    qs = list(factorint(n))
    for a in range(2, l):
        z = pow(a, (l - 1) // n, l)
        if all(pow(z, n // q, l) != 1 for q in qs):
            return l, z
    raise ArithmeticError(f"no element of order {n} mod {l}")  # unreachable for prime l


def _vanishes_at_root_of_unity(f: IntPoly, n: int) -> bool:
    if n <= 2:
        return ip.evaluate(f, 1 if n == 1 else -1) == 0
    l, z = _root_of_unity_mod_prime(n)
    acc = 0
    for a in reversed(f):
        acc = (acc * z + a) % l
    return acc == 0


@dataclass(frozen=True)
class CycloPart:
    """``input == cofactor * prod(Phi_n ** mult)`` with a cyclotomic-free cofactor."""

    entries: tuple  # ((n, mult), ...) sorted by n
    cofactor: IntPoly

    @property
    def orders(self) -> set:
        return {n for n, _ in self.entries}

    def reconstruct(self) -> IntPoly:
        out = self.cofactor
        for n, m in self.entries:
            out = ip.mul(out, ip.power(cyclotomic_poly(n), m))
        return out

    def to_json(self) -> dict:
        return {"entries": [[n, m] for n, m in self.entries],
                "cofactor": [str(c) for c in self.cofactor]}


def unity_root_indices(f: IntPoly) -> CycloPart:
    """Complete cyclotomic part of a nonzero integer polynomial."""
    if not f:
        raise ValueError("unity_root_indices of the zero polynomial")
    cof = tuple(f)
    entries = []
    for n in orders_with_totient_at_most(ip.degree(f)):
        n = int(n)
        mult = 0
        while ip.degree(cof) >= totient(n) and _vanishes_at_root_of_unity(cof, n):
            try:
                cof = ip.exact_div(cof, cyclotomic_poly(n))
            except NotDivisible:
                break
            mult += 1
        if mult:
            entries.append((n, mult))
    return CycloPart(tuple(entries), cof)


def graeffe_is_cyclotomic(f: IntPoly) -> bool:
    """Independent Kronecker test by iterated root squaring.

    A monic ``f`` with ``f(0) != 0`` is a product of cyclotomic polynomials
    iff its Graeffe iterates stay inside the finite set of monic
    polynomials whose coefficients are bounded by ``C(n, n//2)``; a repeat
    proves it, exceeding the bound disproves it.
    """
    if not f or f[-1] != 1:
        raise ValueError("graeffe_is_cyclotomic needs a monic polynomial")
    n = ip.degree(f)
    if n == 0:
        return True
    if f[0] == 0:
        return False
    bound = comb(n, n // 2)
    seen = set()
    g = tuple(f)
    while True:
        if max(abs(a) for a in g) > bound:
            return False
        if g in seen:
            return True
        seen.add(g)
        g = ip.graeffe(g)


def is_cyclotomic_product(f: IntPoly) -> bool:
    """True iff the monic ``f`` is a product of cyclotomic polynomials.

    Decided by the divisibility sieve and cross-checked against
    :func:`graeffe_is_cyclotomic`; disagreement raises ``AssertionError``.
    """
    if not f or f[-1] != 1:
        raise ValueError("is_cyclotomic_product needs a monic polynomial")
    sieve = unity_root_indices(f).cofactor == ip.ONE
    if sieve != graeffe_is_cyclotomic(f):
        raise AssertionError(f"sieve and Graeffe disagree on {ip.to_str(f)}")
    return sieve


# --- irreducibility certificate -------------------------------------------


def _subset_sums(degrees) -> int:
    bits = 1
    for d in degrees:
        bits |= bits << d
    return bits


@dataclass(frozen=True)
class DegreeOracle:
    """Outcome of intersecting achievable factor degrees over several primes."""

    degree: int
    primes: tuple
    surviving: tuple  # proper factor degrees not yet ruled out

    @property
    def irreducible(self) -> bool:
        return not self.surviving


def degree_split_oracle(f: IntPoly, min_primes: int = 20, max_primes: int = 2000) -> DegreeOracle:
    """Rule out proper factor degrees of ``f`` from its factorization patterns.

    A factor of degree ``d`` over the integers forces ``d`` to be a sum of
    factor degrees modulo every prime not dividing ``lc(f) * disc(f)``.  At
    least ``min_primes`` such primes are used; the scan stops once no
    degree survives or after ``max_primes`` primes.
    """
    n = ip.degree(f)
    proper = (1 << n) - 2  # bits 1 .. n-1
    alive = proper
    used = []
    limit = 50
    p_iter = iter(())
    while True:
        p = next(p_iter, None)
        if p is None:
            start = used[-1] if used else 2
            limit *= 4
            p_iter = iter(q for q in primes_upto(limit) if q > start)
            continue
        if not is_squarefree_mod_p(f, p):
            continue
        pattern = degree_pattern_mod_p(f, p)
        alive &= _subset_sums(d for d, _ in pattern)
        used.append(p)
        if (len(used) >= min_primes and not alive) or len(used) >= max_primes:
            break
    surviving = tuple(d for d in range(1, n) if alive >> d & 1)
    return DegreeOracle(n, tuple(used), surviving)


@dataclass(frozen=True)
class IrreducibilityReport:
    j: int
    root_structure: dict
    cyclo: CycloPart
    expected_orders: tuple
    cofactor_is_R: bool
    oracle: DegreeOracle | None

    @property
    def proof_grade(self) -> bool:
        return (all(self.root_structure.values()) and self.cofactor_is_R
                and self.cyclo.entries == self.expected_orders)

    @property
    def evidence_grade(self) -> bool | None:
        return None if self.oracle is None else self.oracle.irreducible


def all_roots_real(f: IntPoly) -> bool:
    """Multiplicity-aware: every square-free layer has only real roots."""
    return all(ip.sturm_count(s) == ip.degree(s) for s, _ in ip.squarefree_decomposition(f))


def certify_irreducible(j: int, oracle_primes: int | None = 20) -> IrreducibilityReport:
    """Certify that ``R_j`` is irreducible.

    Proof chain: ``P_j`` has one root in (0, 1), one in (1, oo), none at or
    below 0, and every other root on the unit circle (all roots of ``q_j``
    are real).  Any irreducible factor not vanishing at those two real roots
    therefore has all its conjugates of modulus one and is cyclotomic, so
    ``R_j`` is ``P_j`` with its exact cyclotomic part removed.  The expected
    part is ``Phi_3`` when ``j % 3 == 1`` and nothing otherwise.

    The degree-pattern oracle (``oracle_primes`` primes, ``None`` to skip)
    is reported separately as corroborating evidence.  Raises
    :class:`CertificateFailure` naming the first failing proof step.
    """
    P = build_P(j)
    if not ip.is_squarefree(P):
        raise CertificateFailure("square-free", f"P_{j} has a repeated factor")
    seq = ip.sturm_sequence(P)
    roots = {
        "one root in (0,1)": ip.sturm_count(P, 0, 1, sequence=seq) == 1 and ip.sign_at(P, 1) != 0,
        "one root in (1,inf)": ip.sturm_count(P, 1, None, sequence=seq) == 1,
        "no root in (-inf,0]": ip.sturm_count(P, None, 0, sequence=seq) == 0,
        "q_j roots all real": all_roots_real(build_q(j)),
    }
    for name, ok in roots.items():
        if not ok:
            raise CertificateFailure("root structure", name)
    part = unity_root_indices(P)
    expected = ((3, 1),) if has_phi3(j) else ()
    if part.entries != expected:
        raise CertificateFailure("cyclotomic part", f"found {part.entries}, expected {expected}")
    _, R = minimal_polys(j)
    if part.cofactor != R:
        raise CertificateFailure("cofactor", f"cofactor of P_{j} differs from R_{j}")
    oracle = None if oracle_primes is None else degree_split_oracle(R, min_primes=oracle_primes)
    return IrreducibilityReport(j, roots, part, expected, True, oracle)
