"""Polynomials over a prime field and their complete factorization.

The low-level routines work on plain lists of residues in ascending degree
order (``[]`` is zero) with the modulus passed separately; :class:`FpPoly`
wraps such a list together with its prime for the public API.

Factorization runs square-free decomposition, distinct-degree
factorization and Cantor-Zassenhaus equal-degree splitting (trace map in
characteristic 2).  Arithmetic modulo a fixed polynomial goes through
:class:`QuotientRing`, which multiplies with numpy convolutions and a
precomputed reduction matrix.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import intpoly as ip
from .exceptions import NotApplicable, NotPrime, ZeroModP
from .ntheory import is_prime

DEFAULT_SEED = 20080501

# --- list kernel -----------------------------------------------------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def reduce(f: Iterable[int], p: int) -> list[int]:
    return _trim([a % p for a in f])


def _add(a, b, p):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return _trim(out)


def _sub(a, b, p):
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % p
    return _trim(out)


def _scale(a, c, p):
    c %= p
    if c == 0:
        return []
    return [x * c % p for x in a]


def _np_dtype(n: int, p: int):
    # int64 is exact while n products of residues cannot overflow.
    return np.int64 if n * (p - 1) ** 2 < 2**62 else object


def _mul(a, b, p):
    if not a or not b:
        return []
    if min(len(a), len(b)) > 24:
        dt = _np_dtype(min(len(a), len(b)), p)
        out = np.convolve(np.array(a, dtype=dt), np.array(b, dtype=dt)) % p
        return _trim([int(c) for c in out])
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _divrem(a, b, p):
    if not b:
        raise ZeroDivisionError("polynomial division by zero mod p")
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv = pow(b[-1], -1, p)
    q = [0] * (len(r) - db)
    for i in range(len(r) - 1, db - 1, -1):
        c = r[i] * inv % p
        if c:
            q[i - db] = c
            off = i - db
            for k in range(db):
                r[off + k] = (r[off + k] - c * b[k]) % p
        r[i] = 0
    return _trim(q), _trim(r[:db])


def _monic(a, p):
    if not a or a[-1] == 1:
        return list(a)
    return _scale(a, pow(a[-1], -1, p), p)


def _gcd(a, b, p):
    """Monic gcd; Euclid with monic normalization at every step."""
    if min(len(a), len(b)) > 48 and p < 2**31:
        return _gcd_np(a, b, p)
    a, b = _monic(a, p), _monic(b, p)
    while b:
        a, b = b, _monic(_divrem(a, b, p)[1], p)
    return a


def _np_trim(v):
    nz = np.flatnonzero(v)
    return v[: nz[-1] + 1] if nz.size else v[:0]


def _gcd_np(a, b, p):
    # Same algorithm as the list version, one vectorized update per leading term.
    a = _np_trim(np.array(a, dtype=np.int64) % p)
    b = _np_trim(np.array(b, dtype=np.int64) % p)
    if len(a) < len(b):
        a, b = b, a
    while b.size:
        b = b * pow(int(b[-1]), -1, p) % p
        r = a.copy()
        db = b.size - 1
        for i in range(r.size - 1, db - 1, -1):
            c = r[i]
            if c:
                r[i - db : i + 1] = (r[i - db : i + 1] - c * b) % p
        a, b = b, _np_trim(r[:db])
    return _monic([int(c) for c in a], p)


def _deriv(a, p):
    return _trim([i * a[i] % p for i in range(1, len(a))])


def _quo(a, b, p):
    q, r = _divrem(a, b, p)
    if r:
        raise ArithmeticError("inexact division mod p")
    return q


def _pow(a, n, p):
    out, base = [1], list(a)
    while n:
        if n & 1:
            out = _mul(out, base, p)
        n >>= 1
        if n:
            base = _mul(base, base, p)
    return out


class QuotientRing:
    """Arithmetic in ``F_p[x] / (f)`` for a monic ``f`` of degree ``n >= 1``.

    Elements are length-``n`` numpy vectors.  A product is a convolution
    followed by one matrix-vector product against the precomputed images of
    ``x**n, ..., x**(2n-2)`` modulo ``f``.
    """

    def __init__(self, f: Sequence[int], p: int):
        f = list(f)
        if len(f) < 2 or f[-1] != 1:
            raise ValueError("modulus must be monic of positive degree")
        self.p, self.f, self.n = p, f, len(f) - 1
        n = self.n
        self.dtype = _np_dtype(n, p)
        red = np.zeros((max(n - 1, 0), n), dtype=self.dtype)
        row = np.array([(-c) % p for c in f[:-1]], dtype=self.dtype)  # x^n mod f
        for k in range(n - 1):
            red[k] = row
            top = row[-1]
            row = np.concatenate(([0], row[:-1])).astype(self.dtype)
            if top:
                row = (row + top * red[0]) % p
        self._red = red

    def element(self, a: Sequence[int]) -> np.ndarray:
        a = list(a)
        if len(a) > self.n:
            a = _divrem(a, self.f, self.p)[1]
        v = np.zeros(self.n, dtype=self.dtype)
        v[: len(a)] = a
        return v

    def to_list(self, v: np.ndarray) -> list[int]:
        return _trim([int(c) for c in v])

    def mul(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        n, p = self.n, self.p
        c = np.convolve(a, b) % p
        if n == 1:
            return c[:1] % p
        return (c[:n] + c[n:] @ self._red) % p

    def pow(self, a: np.ndarray, e: int) -> np.ndarray:
        out = self.element([1])
        base = a
        while e:
            if e & 1:
                out = self.mul(out, base)
            e >>= 1
            if e:
                base = self.mul(base, base)
        return out


# --- public types ----------------------------------------------------------


def _check_prime(p: int):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")


@dataclass(frozen=True)
class FpPoly:
    """Polynomial with coefficients in ``Z/pZ`` (ascending, trimmed)."""

    p: int
    coeffs: tuple

    def __post_init__(self):
        _check_prime(self.p)
        object.__setattr__(self, "coeffs", tuple(reduce(self.coeffs, self.p)))

    @classmethod
    def from_int(cls, f: Iterable[int], p: int) -> "FpPoly":
        return cls(p, tuple(f))

    @classmethod
    def _raw(cls, p: int, coeffs) -> "FpPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "p", p)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        return obj

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self):
        return bool(self.coeffs)

    def _same(self, other):
        if isinstance(other, int):
            return [other % self.p] if other % self.p else []
        if other.p != self.p:
            raise ValueError("moduli differ")
        return list(other.coeffs)

    def __add__(self, other):
        return FpPoly._raw(self.p, _add(list(self.coeffs), self._same(other), self.p))

    __radd__ = __add__

    def __sub__(self, other):
        return FpPoly._raw(self.p, _sub(list(self.coeffs), self._same(other), self.p))

    def __neg__(self):
        return FpPoly._raw(self.p, _sub([], list(self.coeffs), self.p))

    def __mul__(self, other):
        return FpPoly._raw(self.p, _mul(list(self.coeffs), self._same(other), self.p))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        return FpPoly._raw(self.p, _pow(list(self.coeffs), n, self.p))

    def __divmod__(self, other):
        return fp_divrem(self, other)

    def __mod__(self, other):
        return fp_divrem(self, other)[1]

    def __floordiv__(self, other):
        return fp_divrem(self, other)[0]

    def __call__(self, a: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def monic(self) -> "FpPoly":
        return FpPoly._raw(self.p, _monic(list(self.coeffs), self.p))

    def to_str(self, var: str = "x") -> str:
        return ip.to_str(self.coeffs, var)

    def __repr__(self):
        return f"FpPoly({self.to_str()} mod {self.p})"


def fp_divrem(f: FpPoly, g: FpPoly) -> tuple[FpPoly, FpPoly]:
    """``(quotient, remainder)`` with ``f == g*quotient + remainder``."""
    if f.p != g.p:
        raise ValueError("moduli differ")
    q, r = _divrem(list(f.coeffs), list(g.coeffs), f.p)
    return FpPoly._raw(f.p, q), FpPoly._raw(f.p, r)


def fp_gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    return FpPoly._raw(f.p, _gcd(list(f.coeffs), list(g.coeffs), f.p))


def fp_powmod(base: FpPoly, n: int, modulus: FpPoly) -> FpPoly:
    """``base**n mod modulus`` by square-and-multiply."""
    p = modulus.p
    if modulus.degree < 1:
        raise ValueError("modulus must be nonconstant")
    if n < 0:
        raise ValueError("exponent must be nonnegative")
    m = list(modulus.coeffs)
    inv = pow(m[-1], -1, p)
    ring = QuotientRing(_scale(m, inv, p), p)
    out = ring.pow(ring.element(base.coeffs), n)
    return FpPoly._raw(p, ring.to_list(out))


@dataclass(frozen=True)
class FactorMultiset:
    """Canonical factorization ``unit * prod(factor**mult)`` over ``F_p``.

    Factors are monic irreducible and sorted by degree, then by their
    ascending coefficient tuple.
    """

    p: int
    unit: int
    factors: tuple  # ((FpPoly, int), ...)

    @property
    def degree(self) -> int:
        return sum(g.degree * m for g, m in self.factors)

    def pattern(self) -> tuple:
        """Sorted ``(degree, multiplicity)`` pairs, one per distinct factor."""
        return tuple(sorted((g.degree, m) for g, m in self.factors))

    def multiplicity(self, g) -> int:
        coeffs = tuple(g.coeffs) if isinstance(g, FpPoly) else tuple(reduce(g, self.p))
        for h, m in self.factors:
            if h.coeffs == coeffs:
                return m
        return 0

    def expand(self) -> FpPoly:
        out = [self.unit % self.p]
        for g, m in self.factors:
            out = _mul(out, _pow(list(g.coeffs), m, self.p), self.p)
        return FpPoly._raw(self.p, out)

    def to_json(self) -> list:
        return [[[str(c) for c in g.coeffs], m] for g, m in self.factors]


# --- factorization ---------------------------------------------------------


def squarefree_decomposition(f: Sequence[int], p: int) -> list[tuple[list[int], int]]:
    """Monic square-free ``(g, e)`` pairs with ``monic(f) == prod g**e``."""
    f = _monic(list(f), p)
    out: list[tuple[list[int], int]] = []
    mult = 1
    while len(f) > 1:
        d = _deriv(f, p)
        if d:
            c = _gcd(f, d, p)
            w = _quo(f, c, p)
            i = 1
            while len(w) > 1:
                y = _gcd(w, c, p)
                fac = _quo(w, y, p)
                if len(fac) > 1:
                    out.append((fac, i * mult))
                w, c = y, _quo(c, y, p)
                i += 1
            f = c
        if len(f) > 1:
            # What remains is a p-th power: take the p-th root coefficientwise.
            f = [f[i] for i in range(0, len(f), p)]
            mult *= p
    return out


def distinct_degree_factorization(f: Sequence[int], p: int) -> list[tuple[list[int], int]]:
    """Split a monic square-free ``f`` into ``(product of all degree-d factors, d)``."""
    f = list(f)
    n = len(f) - 1
    if n < 1:
        return []
    ring = QuotientRing(f, p)
    out = []
    x = ring.element([0, 1])
    h = x
    g = f
    d = 0
    # One gcd per block of degrees against the product of (x^(p^i) - x);
    # only blocks with a nontrivial gcd are refined degree by degree.
    # gcd(g, a mod f) == gcd(g, a) because g divides f.
    block = _DDF_BLOCK
    while 2 * (d + 1) <= len(g) - 1:
        hs = []
        acc = ring.element([1])
        while len(hs) < block and 2 * (d + len(hs) + 1) <= len(g) - 1:
            h = ring.pow(h, p)
            hs.append(h)
            acc = ring.mul(acc, (h - x) % p)
        if len(_gcd(g, ring.to_list(acc), p)) > 1:
            for i, hi in enumerate(hs, d + 1):
                c = _gcd(g, ring.to_list((hi - x) % p), p)
                if len(c) > 1:
                    out.append((c, i))
                    g = _quo(g, c, p)
        d += len(hs)
    if len(g) > 1:
        out.append((g, len(g) - 1))
    return out


_DDF_BLOCK = 8


def _random_element(rng: random.Random, n: int, p: int) -> list[int]:
    while True:
        a = _trim([rng.randrange(p) for _ in range(n)])
        if len(a) > 1:
            return a


def equal_degree_split(f: Sequence[int], d: int, p: int, rng: random.Random) -> list[list[int]]:
    """All monic degree-``d`` irreducible factors of a square-free ``f`` whose factors all have degree ``d``."""
    f = list(f)
    n = len(f) - 1
    if n == d:
        return [f]
    if n % d:
        raise ValueError("degree is not a multiple of the factor degree")
    ring = QuotientRing(f, p)
    while True:
        a = ring.element(_random_element(rng, n, p))
        if p == 2:
            # Trace of a from F_{2^d} to F_2.
            t, c = a, a
            for _ in range(d - 1):
                c = ring.mul(c, c)
                t = (t + c) % 2
            cand = ring.to_list(t)
        else:
            # a**((p**d - 1)/2) as (a * a**p * ... * a**(p**(d-1)))**((p-1)/2).
            norm, c = a, a
            for _ in range(d - 1):
                c = ring.pow(c, p)
                norm = ring.mul(norm, c)
            b = ring.pow(norm, (p - 1) // 2)
            cand = _sub(ring.to_list(b), [1], p)
        g = _gcd(f, cand, p)
        if 1 <= len(g) - 1 < n:
            break
    return equal_degree_split(g, d, p, rng) + equal_degree_split(_quo(f, g, p), d, p, rng)


def _rng_for(f: Sequence[int], p: int, seed: int) -> random.Random:
    digest = hashlib.sha256(f"{seed}|{p}|{','.join(map(str, f))}".encode()).digest()
    return random.Random(int.from_bytes(digest[:16], "big"))


def _canonical(factors):
    return tuple(sorted(factors, key=lambda gm: (len(gm[0].coeffs), gm[0].coeffs, gm[1])))


def factor_mod_p(f, p: int, seed: int = DEFAULT_SEED) -> FactorMultiset:
    """Complete factorization of an integer (or ``F_p``) polynomial modulo ``p``.

    The random choices in equal-degree splitting are seeded from
    ``(seed, p, f)``; the output is sorted canonically, so it does not
    depend on ``seed``.  Raises :class:`ZeroModP` if ``f`` vanishes mod ``p``.
    """
    _check_prime(p)
    coeffs = f.coeffs if isinstance(f, FpPoly) else f
    a = reduce(coeffs, p)
    if not a:
        raise ZeroModP(f"polynomial vanishes identically mod {p}")
    unit = a[-1]
    rng = _rng_for(a, p, seed)
    factors = []
    for g, e in squarefree_decomposition(a, p):
        for block, d in distinct_degree_factorization(g, p):
            for h in equal_degree_split(block, d, p, rng):
                factors.append((FpPoly._raw(p, h), e))
    return FactorMultiset(p, unit, _canonical(factors))


def degree_pattern_mod_p(f, p: int) -> tuple:
    """``(degree, multiplicity)`` pairs of the factorization, without equal-degree splitting."""
    _check_prime(p)
    a = reduce(f, p)
    if not a:
        raise ZeroModP(f"polynomial vanishes identically mod {p}")
    out = []
    for g, e in squarefree_decomposition(a, p):
        for block, d in distinct_degree_factorization(g, p):
            out.extend([(d, e)] * ((len(block) - 1) // d))
    return tuple(sorted(out))


def is_squarefree_mod_p(f, p: int) -> bool:
    """True iff ``f mod p`` keeps its degree and is square-free, i.e. ``p`` does not divide ``lc(f) * disc(f)``."""
    a = reduce(f, p)
    if len(a) != len(f):
        return False
    return len(_gcd(a, _deriv(a, p), p)) == 1


# --- checks of the mod-p claims -------------------------------------------


def gcd_claims(j: int) -> dict:
    """Both gcd claims over ``F_p`` with ``p = 2j + 3`` (which must be prime).

    ``q**(p-1) - 1`` and ``q**(p+1) - 1`` are reduced modulo ``Q_j`` by
    modular exponentiation, then their gcds with ``Q_j`` are compared against
    ``q**4 - 1`` and ``(q**4 - 1)(q**2 + q + 1)`` respectively.
    """
    from .family import build_P, build_Q

    p = 2 * j + 3
    if not is_prime(p):
        raise NotApplicable(f"2j+3 = {p} is not prime")
    Q = FpPoly(p, build_Q(j))
    P = FpPoly(p, build_P(j))
    q = FpPoly(p, (0, 1))
    target1 = FpPoly(p, (-1, 0, 0, 0, 1))
    target2 = FpPoly(p, (-1, -1, -1, 0, 1, 1, 1))  # (q^4-1)(q^2+q+1)
    g1 = fp_gcd(fp_powmod(q, p - 1, Q) - 1, Q)
    g2 = fp_gcd(fp_powmod(q, p + 1, Q) - 1, Q)
    h1 = fp_gcd(fp_powmod(q, p - 1, P) - 1, P)
    h2 = fp_gcd(fp_powmod(q, p + 1, P) - 1, P)
    return {
        "j": j,
        "p": p,
        "gcd_minus": g1.coeffs,
        "gcd_plus": g2.coeffs,
        "claim1": not (target1 % g1),
        "claim2": not (target2 % g2),
        "claim1_P": not (target1 % h1),
        "claim2_P": not (target2 % h2),
    }


def _quadratic_nonresidue(p: int) -> int:
    for r in range(2, p):
        if pow(r, (p - 1) // 2, p) == p - 1:
            return r
    raise ValueError(f"no quadratic nonresidue mod {p}")


def fermat_scan(p: int) -> dict:
    """Brute-force check, over every unit of ``F_{p^2}``, of
    ``a + 1/a in F_p  <=>  a**(p-1) == 1 or a**(p+1) == 1``.

    The field is ``F_p[t]/(t^2 - r)`` with ``r`` a non-residue; elements are
    pairs ``(u, v)`` standing for ``u + v t``.
    """
    _check_prime(p)
    if p == 2 or p > 100:
        raise NotApplicable("fermat_scan covers odd primes up to 100")
    r = _quadratic_nonresidue(p)

    def mul(a, b):
        return ((a[0] * b[0] + r * a[1] * b[1]) % p, (a[0] * b[1] + a[1] * b[0]) % p)

    def power(a, e):
        out = (1, 0)
        while e:
            if e & 1:
                out = mul(out, a)
            a = mul(a, a)
            e >>= 1
        return out

    def inverse(a):
        nrm = (a[0] * a[0] - r * a[1] * a[1]) % p
        ni = pow(nrm, -1, p)
        return (a[0] * ni % p, (-a[1]) * ni % p)

    in_fp = fermat = both = 0
    mismatches = []
    for u in range(p):
        for v in range(p):
            if u == v == 0:
                continue
            a = (u, v)
            inv = inverse(a)
            lhs = (a[1] + inv[1]) % p == 0
            rhs = power(a, p - 1) == (1, 0) or power(a, p + 1) == (1, 0)
            in_fp += lhs
            fermat += rhs
            both += lhs and rhs
            if lhs != rhs:
                mismatches.append(a)
    return {
        "p": p,
        "units": p * p - 1,
        "trace_in_Fp": in_fp,
        "fermat": fermat,
        "equivalent": not mismatches,
        "mismatches": mismatches,
    }
