"""The polynomial families attached to the candidate graphs.

Index convention: ``j`` is the subscript of ``q_j`` (so ``deg q_j = 2j + 2``).
Statements written with ``k`` elsewhere use ``k = j + 1``.

* ``q_j(x)``: characteristic polynomial factor whose largest root is ``d_j``.
* ``p_j(x) = q_j(x + 2)``, whose largest root is ``e_j = d_j - 2``.
* ``P_j(q) = q**(2j+2) * p_j(q + 1/q)``, palindromic with coefficients in {-1, 0, 1}.
* ``Q_j(q) = P_j(q) * (q**4 - 1)``.
* ``m_j`` / ``R_j``: ``p_j`` / ``P_j`` with the factor ``x + 1`` / ``q**2 + q + 1``
  removed when ``j % 3 == 1``.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import intpoly as ip
from .exceptions import ClosedFormMismatch, IdentityFailure
from .intpoly import IntPoly, RationalInterval

# Seeds, expanded once from their factored forms (see tests for the check).
SEEDS_q = ((3, -5, 1), ip.mul((-5, 17, -8, 1), (-1, 1)))
SEEDS_p = ((-3, -1, 1), ip.mul((5, -3, -2, 1), (1, 1)))
SEEDS_P = ((1, -1, -1, -1, 1), (1, -1, -1, -1, 1, -1, -1, -1, 1))
Q_STEP = (2, -4, 1)          # x^2 - 4x + 2
P_STEP = (-2, 0, 1)          # x^2 - 2
BIG_P_STEP = (1, 0, 0, 0, 1)  # q^4 + 1
Q4 = (0, 0, 0, 0, 1)         # q^4
Q4_MINUS_1 = (-1, 0, 0, 0, 1)
PHI3 = (1, 1, 1)
X_PLUS_1 = (1, 1)

DEFAULT_WIDTH = Fraction(1, 10**9)


def _check_index(j):
    if j < 0:
        raise ValueError(f"family index must be nonnegative, got {j}")


def _three_term(seeds, step, tail, j):
    # f_j = step * f_{j-1} - tail * f_{j-2}
    a, b = seeds
    if j == 0:
        return a
    for _ in range(j - 1):
        a, b = b, ip.sub(ip.mul(step, b), ip.mul(tail, a))
    return b


@lru_cache(maxsize=512)
def build_q(j: int) -> IntPoly:
    """``q_j`` via ``q_j = (x^2 - 4x + 2) q_{j-1} - q_{j-2}``."""
    _check_index(j)
    return _three_term(SEEDS_q, Q_STEP, ip.ONE, j)


@lru_cache(maxsize=512)
def build_p(j: int) -> IntPoly:
    """``p_j`` via its own recursion ``p_j = (x^2 - 2) p_{j-1} - p_{j-2}``."""
    _check_index(j)
    return _three_term(SEEDS_p, P_STEP, ip.ONE, j)


def P_closed_form(j: int) -> IntPoly:
    """``1 + sum_{l=1}^{j+1} (q^4 - q^3 - q^2 - q) q^(4l-4)``."""
    _check_index(j)
    c = [0] * (4 * j + 5)
    c[0] = 1
    for l in range(1, j + 2):
        base = 4 * l - 4
        c[base + 4] += 1
        c[base + 3] -= 1
        c[base + 2] -= 1
        c[base + 1] -= 1
    return ip.trim(c)


@lru_cache(maxsize=512)
def build_P(j: int) -> IntPoly:
    """``P_j`` by the recursion ``P_j = (q^4+1) P_{j-1} - q^4 P_{j-2}``.

    The result is compared against the closed-form sum and
    :class:`ClosedFormMismatch` is raised if they differ.
    """
    _check_index(j)
    rec = _three_term(SEEDS_P, BIG_P_STEP, Q4, j)
    if rec != P_closed_form(j):
        raise ClosedFormMismatch(f"P_{j}: recursion and closed form differ")
    return rec


def Q_expansion(j: int) -> IntPoly:
    """The eight-term form ``q^(4j+8) - q^(4j+7) - q^(4j+6) - q^(4j+5) + q^3 + q^2 + q - 1``."""
    _check_index(j)
    c = [0] * (4 * j + 9)
    c[0], c[1], c[2], c[3] = -1, 1, 1, 1
    c[4 * j + 5] -= 1
    c[4 * j + 6] -= 1
    c[4 * j + 7] -= 1
    c[4 * j + 8] += 1
    return ip.trim(c)


@lru_cache(maxsize=512)
def build_Q(j: int) -> IntPoly:
    """``Q_j = P_j * (q^4 - 1)``."""
    return ip.mul(build_P(j), Q4_MINUS_1)


def has_phi3(j: int) -> bool:
    return j % 3 == 1


@lru_cache(maxsize=512)
def minimal_polys(j: int) -> tuple[IntPoly, IntPoly]:
    """``(m_j, R_j)``: the minimal polynomial of ``e_j`` and its palindromic lift.

    Propagates :class:`~cyclocert.exceptions.NotDivisible` if the expected
    linear or cyclotomic factor is missing.
    """
    p, P = build_p(j), build_P(j)
    if has_phi3(j):
        return ip.exact_div(p, X_PLUS_1), ip.exact_div(P, PHI3)
    return p, P


def check_special_values(j: int) -> dict[str, bool]:
    """Exact checks of the closed-form values at 0, 1 and -1.

    With ``k = j + 1``: ``p_j(0) = (-1)^k (2k+1)``, ``p_j'(0) = (-1)^k k``,
    ``P_j(0) = 1``, ``P_j(1) = -(2j+1)`` and
    ``P_j''(-1) = 2(2k+1)(8k-1)k/3 + 2k``.
    """
    k = j + 1
    p, P = build_p(j), build_P(j)
    sgn = -1 if k % 2 else 1
    second = Fraction(2 * (2 * k + 1) * (8 * k - 1) * k, 3) + 2 * k
    return {
        "p(0)": ip.eval_deriv(p, 0, 0) == sgn * (2 * k + 1),
        "p'(0)": ip.eval_deriv(p, 1, 0) == sgn * k,
        "P(0)": ip.eval_deriv(P, 0, 0) == 1,
        "P(1)": ip.eval_deriv(P, 0, 1) == -(2 * j + 1),
        "P''(-1)": ip.eval_deriv(P, 2, -1) == second,
    }


def check_identities(j: int) -> dict[str, bool]:
    """Structural identities tying the four families together."""
    q, p, P, Q = build_q(j), build_p(j), build_P(j), build_Q(j)
    m, R = minimal_polys(j)
    out = {
        "p == shift(q, 2)": p == ip.shift(q, 2),
        "P == symmetrize(p)": P == ip.symmetrize(p),
        "P recursion == closed form": P == P_closed_form(j),
        "Q == P*(q^4-1) == expansion": Q == Q_expansion(j),
        "P self-reciprocal": ip.is_self_reciprocal(P),
        "P coefficients in {-1,0,1}": all(a in (-1, 0, 1) for a in P),
        "R == symmetrize(m)": R == ip.symmetrize(m),
        "degrees": (ip.degree(q), ip.degree(P), ip.degree(Q)) == (2 * j + 2, 4 * j + 4, 4 * j + 8),
    }
    if has_phi3(j):
        out["p == (x+1)*m"] = p == ip.mul(X_PLUS_1, m)
        out["P == Phi3*R"] = P == ip.mul(PHI3, R)
    else:
        out["m == p, R == P"] = (m, R) == (p, P)
    return out


def pf_index(j: int, width=DEFAULT_WIDTH) -> RationalInterval:
    """Bracket of ``d_j``, the largest root of ``q_j``, of width at most ``width``.

    Two cross-checks run before returning: the largest root ``a`` of ``P_j``
    maps to ``a + 1/a + 2`` inside an overlapping bracket, and ``m_j``
    changes sign across the shifted bracket of ``e_j = d_j - 2``.
    """
    width = Fraction(width)
    d = ip.isolate_largest_root(build_q(j), width)
    a = ip.isolate_largest_root(build_P(j), width)
    if a.lo <= 1:
        raise ClosedFormMismatch(f"P_{j}: largest root bracket {a} not above 1")
    image = RationalInterval(a.lo + 1 / a.lo + 2, a.hi + 1 / a.hi + 2)
    if not image.overlaps(d):
        raise ClosedFormMismatch(f"j={j}: bracket of a+1/a+2 {image} misses d_j bracket {d}")
    m, _ = minimal_polys(j)
    s_lo, s_hi = ip.sign_at(m, d.lo - 2), ip.sign_at(m, d.hi - 2)
    if s_lo * s_hi > 0:
        raise ClosedFormMismatch(f"j={j}: m_j does not change sign on the e_j bracket")
    return d


def fixture_digest(j: int) -> str:
    """SHA-256 over the coefficient lists of ``q, p, P, Q, m, R`` for index ``j``."""
    m, R = minimal_polys(j)
    h = hashlib.sha256()
    for name, f in (("q", build_q(j)), ("p", build_p(j)), ("P", build_P(j)),
                    ("Q", build_Q(j)), ("m", m), ("R", R)):
        h.update(f"{name}:{','.join(map(str, f))};".encode())
    return h.hexdigest()


@dataclass(frozen=True)
class FamilyRecord:
    """Every family polynomial for one index, built with the identity suite run."""

    j: int
    q: IntPoly
    p: IntPoly
    P: IntPoly
    Q: IntPoly
    m: IntPoly
    R: IntPoly
    has_phi3: bool
    d_bracket: RationalInterval
    checks: dict = field(default_factory=dict, compare=False)

    @property
    def k(self) -> int:
        return self.j + 1

    @property
    def digest(self) -> str:
        return fixture_digest(self.j)


def family_record(j: int, width=DEFAULT_WIDTH) -> FamilyRecord:
    """Build and verify the record for ``j``; :class:`IdentityFailure` on any failed check."""
    _check_index(j)
    checks = {**check_identities(j), **check_special_values(j)}
    failed = [name for name, ok in checks.items() if not ok]
    if failed:
        raise IdentityFailure(j, failed)
    m, R = minimal_polys(j)
    return FamilyRecord(
        j=j, q=build_q(j), p=build_p(j), P=build_P(j), Q=build_Q(j), m=m, R=R,
        has_phi3=has_phi3(j), d_bracket=pf_index(j, width), checks=checks,
    )
