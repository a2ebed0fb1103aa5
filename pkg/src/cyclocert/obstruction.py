"""Factorization-pattern obstruction to ``Q(e_j)`` being a Galois extension.

If ``K = Q(e)`` is Galois of degree ``n`` then for every prime ``p`` the
minimal polynomial of ``e`` factors mod ``p`` as ``(f_1 ... f_g)**e`` with
every ``f_i`` a power of an irreducible and ``deg f_i = h``, ``n = e*h*g``.
A factorization pattern admitting no such ``(e, h)`` is a certificate that
``K`` is not Galois, hence not inside a cyclotomic field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .exceptions import CertificateFailure, ClosedFormMismatch, IdentityFailure, NotDivisible
from .family import family_record, minimal_polys
from .fpoly import DEFAULT_SEED, FactorMultiset, factor_mod_p, is_squarefree_mod_p
from .ntheory import divisors, prime_divisors, primes_upto

INDEX_PRIME = "paper-prime"
SCAN = "unramified-scan"

CERTIFIED = "CertifiedNotGalois"
NO_CERTIFICATE = "NoCertificateWithinBound"
CLAIM_FAILURE = "ClaimFailure"


@dataclass(frozen=True)
class FactorPattern:
    """Multiset of ``(degree, multiplicity)`` blocks of total degree ``n``."""

    n: int
    blocks: tuple

    def __post_init__(self):
        blocks = tuple(sorted((int(d), int(m)) for d, m in self.blocks))
        if any(d < 1 or m < 1 for d, m in blocks):
            raise ValueError("block degrees and multiplicities must be positive")
        if sum(d * m for d, m in blocks) != self.n:
            raise ValueError(f"blocks {blocks} do not add up to degree {self.n}")
        object.__setattr__(self, "blocks", blocks)

    @classmethod
    def of(cls, blocks) -> "FactorPattern":
        blocks = tuple(blocks)
        return cls(sum(d * m for d, m in blocks), blocks)

    @classmethod
    def from_factorization(cls, fm: FactorMultiset) -> "FactorPattern":
        return cls(fm.degree, fm.pattern())

    def __str__(self):
        return "{" + ",".join(f"({d},{m})" for d, m in self.blocks) + "}"

    def to_json(self) -> list:
        return [[d, m] for d, m in self.blocks]


def feasible_shapes(pattern: FactorPattern) -> list[tuple[int, int]]:
    """All ``(e, h)`` compatible with the pattern under the Galois hypothesis."""
    out = []
    for h in divisors(pattern.n):
        if any(h % d for d, _ in pattern.blocks):
            continue
        for e in divisors(pattern.n // h):
            if all((d * m) % (e * h) == 0 for d, m in pattern.blocks):
                out.append((e, h))
    return out


def galois_feasible(pattern: FactorPattern) -> bool:
    """True iff some ``e, h >= 1`` with ``h | n`` make every block degree divide ``h``
    and ``e*h`` divide every ``degree * multiplicity``.

    Distinct prime ideals are allowed to give the same residue polynomial,
    so this is a necessary condition only; ``False`` rules Galois out.
    """
    return bool(feasible_shapes(pattern))


@dataclass(frozen=True)
class Certificate:
    j: int
    p: int
    pattern: FactorPattern
    route: str
    ramified: bool  # p divides disc(m_j)

    def to_json(self) -> dict:
        return {"p": self.p, "pattern": self.pattern.to_json(), "route": self.route,
                "ramified": self.ramified}


@dataclass(frozen=True)
class Verdict:
    """``CertifiedNotGalois`` / ``NoCertificateWithinBound`` / ``ClaimFailure``.

    ``NoCertificateWithinBound`` is inconclusive: it never asserts that the
    field is Galois.
    """

    kind: str
    j: int
    certificate: Optional[Certificate] = None
    bound: Optional[int] = None
    detail: str = ""
    primes_tried: int = field(default=0, compare=False)

    @property
    def certified(self) -> bool:
        return self.kind == CERTIFIED

    def to_json(self) -> dict:
        out = {"kind": self.kind}
        if self.certificate is not None:
            out["certificate"] = self.certificate.to_json()
        if self.bound is not None:
            out["bound"] = self.bound
        if self.detail:
            out["detail"] = self.detail
        return out


def default_prime_bound(j: int) -> int:
    return max(100, 10 * (2 * j + 3))


def index_primes(j: int) -> list[int]:
    """Prime divisors of ``2j + 3``, where ``x`` divides ``m_j`` exactly once."""
    return prime_divisors(2 * j + 3)


def pattern_mod_p(j: int, p: int, seed: int = DEFAULT_SEED) -> FactorPattern:
    m, _ = minimal_polys(j)
    return FactorPattern.from_factorization(factor_mod_p(m, p, seed=seed))


def check_certificate(cert: Certificate, seed: int = DEFAULT_SEED) -> bool:
    """Recompute the factorization from scratch; True iff it still refutes Galois."""
    pattern = pattern_mod_p(cert.j, cert.p, seed=seed)
    return pattern == cert.pattern and not galois_feasible(pattern)


def find_certificate(j: int, prime_bound: Optional[int] = None, seed: int = DEFAULT_SEED) -> Verdict:
    """First prime whose factorization of ``m_j`` is Galois-infeasible.

    Divisors of ``2j + 3`` are tried first (route ``paper-prime``), then all
    other primes up to ``prime_bound`` in increasing order.
    """
    bound = default_prime_bound(j) if prime_bound is None else prime_bound
    m, _ = minimal_polys(j)
    first = index_primes(j)
    order = [(p, INDEX_PRIME) for p in first]
    order += [(p, SCAN) for p in primes_upto(bound) if p not in first]
    for tried, (p, route) in enumerate(order, 1):
        pattern = pattern_mod_p(j, p, seed=seed)
        if not galois_feasible(pattern):
            cert = Certificate(j, p, pattern, route, not is_squarefree_mod_p(m, p))
            return Verdict(CERTIFIED, j, cert, bound, primes_tried=tried)
    return Verdict(NO_CERTIFICATE, j, None, bound, primes_tried=len(order))


def verdict(j: int, prime_bound: Optional[int] = None, seed: int = DEFAULT_SEED,
            oracle_primes: Optional[int] = 20) -> Verdict:
    """Identity suite, irreducibility certificate, then the certificate search.

    Any failed identity or irreducibility step, and any certificate that
    does not survive recomputation, gives a ``ClaimFailure`` verdict.
    """
    from .cyclo import certify_irreducible

    try:
        family_record(j)
        certify_irreducible(j, oracle_primes=oracle_primes)
    except (IdentityFailure, ClosedFormMismatch, NotDivisible, CertificateFailure) as exc:
        return Verdict(CLAIM_FAILURE, j, detail=str(exc))
    v = find_certificate(j, prime_bound, seed=seed)
    if v.certificate is not None and not check_certificate(v.certificate, seed=seed + 1):
        return Verdict(CLAIM_FAILURE, j, detail=f"certificate at p={v.certificate.p} did not reproduce")
    return v
