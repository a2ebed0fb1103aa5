"""Dense univariate polynomials over the integers.

A polynomial is a tuple of Python ints in ascending degree order, so
``(3, -5, 1)`` is ``x**2 - 5*x + 3``.  The zero polynomial is ``()`` and the
last entry of a nonzero polynomial is never zero.  Every function here is
pure and returns a new tuple.

Rational arguments are :class:`fractions.Fraction`; evaluation at a
rational point is done with homogeneous integer Horner so that only the
final value is turned into a fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd
from typing import Iterable, Optional, Sequence

from .exceptions import NoRealRoot, NotDivisible, NotSquarefree

IntPoly = tuple  # tuple[int, ...], ascending degree

ZERO: IntPoly = ()
ONE: IntPoly = (1,)
X: IntPoly = (0, 1)


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __contains__(self, value) -> bool:
        return self.lo <= value <= self.hi

    def overlaps(self, other: "RationalInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __str__(self):
        return f"[{float(self.lo):.12g}, {float(self.hi):.12g}]"


# --- construction and basic accessors -------------------------------------


def trim(coeffs: Iterable[int]) -> IntPoly:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly(*coeffs: int) -> IntPoly:
    """Build a polynomial from ascending coefficients."""
    return trim(int(a) for a in coeffs)


def monomial(n: int, c: int = 1) -> IntPoly:
    return trim([0] * n + [c])


def degree(f: IntPoly) -> int:
    """Degree of ``f``; the zero polynomial has degree -1."""
    return len(f) - 1


def lc(f: IntPoly) -> int:
    return f[-1] if f else 0


def content(f: IntPoly) -> int:
    g = 0
    for a in f:
        g = igcd(g, a)
        if g == 1:
            break
    return g


def primitive_part(f: IntPoly) -> IntPoly:
    """``f`` divided by its (positive) content."""
    c = content(f)
    if c in (0, 1):
        return f
    return tuple(a // c for a in f)


def to_str(f: IntPoly, var: str = "x") -> str:
    if not f:
        return "0"
    terms = []
    for i in range(len(f) - 1, -1, -1):
        a = f[i]
        if a == 0:
            continue
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        if i == 0:
            body = str(mag)
        else:
            body = "" if mag == 1 else str(mag)
            body += var if i == 1 else f"{var}^{i}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# --- ring operations -------------------------------------------------------


def add(f: IntPoly, g: IntPoly) -> IntPoly:
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, b in enumerate(g):
        out[i] += b
    return trim(out)


def neg(f: IntPoly) -> IntPoly:
    return tuple(-a for a in f)


def sub(f: IntPoly, g: IntPoly) -> IntPoly:
    return add(f, neg(g))


def scale(f: IntPoly, c: int) -> IntPoly:
    if c == 0:
        return ZERO
    return tuple(a * c for a in f)


def mul(f: IntPoly, g: IntPoly) -> IntPoly:
    """Schoolbook product."""
    if not f or not g:
        return ZERO
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return tuple(out)


def mul_shift(f: IntPoly, n: int) -> IntPoly:
    """``f * x**n``."""
    if not f:
        return ZERO
    return (0,) * n + tuple(f)


def power(f: IntPoly, n: int) -> IntPoly:
    out, base = ONE, f
    while n:
        if n & 1:
            out = mul(out, base)
        n >>= 1
        if n:
            base = mul(base, base)
    return out


def product(polys: Iterable[IntPoly]) -> IntPoly:
    out = ONE
    for f in polys:
        out = mul(out, f)
    return out


def divmod_exact_lc(f: IntPoly, g: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Division with remainder when every quotient coefficient is integral.

    Raises :class:`NotDivisible` as soon as a quotient coefficient would be
    a proper fraction, which cannot happen when ``g`` is monic.
    """
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(f)
    dg, lg = len(g) - 1, g[-1]
    if len(r) - 1 < dg:
        return ZERO, trim(r)
    q = [0] * (len(r) - dg)
    for i in range(len(r) - 1, dg - 1, -1):
        a = r[i]
        if a == 0:
            continue
        c, rem = divmod(a, lg)
        if rem:
            raise NotDivisible(f"{to_str(f)} is not divisible by {to_str(g)} over the integers")
        q[i - dg] = c
        for j in range(dg + 1):
            r[i - dg + j] -= c * g[j]
    return trim(q), trim(r[:dg])


def exact_div(f: IntPoly, g: IntPoly) -> IntPoly:
    """Quotient ``h`` with ``f == g*h``; :class:`NotDivisible` otherwise."""
    q, r = divmod_exact_lc(f, g)
    if r:
        raise NotDivisible(f"{to_str(f)} leaves remainder {to_str(r)} on division by {to_str(g)}")
    return q


def divides(g: IntPoly, f: IntPoly) -> bool:
    try:
        exact_div(f, g)
    except NotDivisible:
        return False
    return True


def pseudo_rem(f: IntPoly, g: IntPoly) -> IntPoly:
    """``lc(g)**(deg f - deg g + 1) * f mod g`` with integer arithmetic only."""
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    df, dg = degree(f), degree(g)
    if df < dg:
        return f
    r = list(f)
    lg = g[-1]
    e = df - dg + 1
    for i in range(df, dg - 1, -1):
        a = r[i]
        r = [lg * c for c in r]
        e -= 1
        if a:
            for j in range(dg + 1):
                r[i - dg + j] -= a * g[j]
        r.pop()
    r = [c * lg**e for c in r] if e else r
    return trim(r)


def deriv(f: IntPoly, order: int = 1) -> IntPoly:
    for _ in range(order):
        f = trim(i * f[i] for i in range(1, len(f)))
    return f


# --- evaluation -------------------------------------------------------------


def _homogeneous(f: IntPoly, num: int, den: int) -> int:
    """``den**deg(f) * f(num/den)`` as an integer."""
    acc = 0
    dpow = 1
    for a in reversed(f):
        acc = acc * num + a * dpow
        dpow *= den
    return acc


def evaluate(f: IntPoly, r) -> Fraction | int:
    """Exact value of ``f`` at an integer or rational point."""
    if isinstance(r, int):
        acc = 0
        for a in reversed(f):
            acc = acc * r + a
        return acc
    r = Fraction(r)
    if not f:
        return Fraction(0)
    return Fraction(_homogeneous(f, r.numerator, r.denominator), r.denominator ** (len(f) - 1))


def sign_at(f: IntPoly, r) -> int:
    """Sign of ``f(r)`` without forming a fraction."""
    r = Fraction(r)
    v = _homogeneous(f, r.numerator, r.denominator)
    return (v > 0) - (v < 0)


def eval_deriv(f: IntPoly, order: int, r) -> Fraction:
    """Exact value of the ``order``-th derivative of ``f`` at ``r``."""
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    return Fraction(evaluate(deriv(f, order), Fraction(r)))


# --- substitutions ----------------------------------------------------------


def shift(f: IntPoly, c: int) -> IntPoly:
    """``f(x + c)`` by repeated synthetic division (Taylor shift)."""
    a = list(f)
    n = len(a)
    if c == 0 or n < 2:
        return tuple(a)
    for i in range(n - 1):
        for k in range(n - 2, i - 1, -1):
            a[k] += c * a[k + 1]
    return trim(a)


def reverse(f: IntPoly) -> IntPoly:
    return trim(reversed(f))


def is_self_reciprocal(f: IntPoly) -> bool:
    return tuple(f) == tuple(reversed(f))


def symmetrize(f: IntPoly) -> IntPoly:
    """``q**deg(f) * f(q + 1/q)``, a self-reciprocal polynomial of twice the degree.

    Uses ``(q**2 + 1)**i * q**(n - i)`` for the i-th power term.
    """
    if not f:
        raise ValueError("symmetrize of the zero polynomial")
    n = degree(f)
    out = [0] * (2 * n + 1)
    base = ONE
    step = (1, 0, 1)
    for i, a in enumerate(f):
        if a:
            for k, b in enumerate(base):
                out[n - i + k] += a * b
        base = mul(base, step)
    return trim(out)


def graeffe(f: IntPoly) -> IntPoly:
    """Root-squaring: ``g(x**2) == (-1)**deg(f) * f(x) * f(-x)``."""
    if not f:
        raise ValueError("graeffe of the zero polynomial")
    even, odd = f[0::2], f[1::2]
    g = sub(mul(even, even), mul_shift(mul(odd, odd), 1))
    return g if degree(f) % 2 == 0 else neg(g)


# --- gcd, square-free parts ------------------------------------------------


def gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Greatest common divisor over the integers, normalized to positive leading coefficient.

    Primitive polynomial remainder sequence.
    """
    if not f:
        return _positive(g)
    if not g:
        return _positive(f)
    c = igcd(content(f), content(g))
    a, b = primitive_part(f), primitive_part(g)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r = pseudo_rem(a, b)
        a, b = b, primitive_part(r)
    return _positive(scale(a, c))


def _positive(f: IntPoly) -> IntPoly:
    return neg(f) if f and f[-1] < 0 else f


def squarefree_part(f: IntPoly) -> IntPoly:
    """Primitive square-free part with positive leading coefficient."""
    g = gcd(f, deriv(f))
    return _positive(primitive_part(exact_div(primitive_part(f), primitive_part(g))))


def squarefree_decomposition(f: IntPoly) -> list[tuple[IntPoly, int]]:
    """Yun's algorithm: primitive ``s_i`` with ``pp(f) = +-prod s_i**i``."""
    f = primitive_part(f)
    if degree(f) < 1:
        return []
    out = []
    g = gcd(f, deriv(f))
    w = exact_div(f, g)
    i = 1
    while degree(w) > 0:
        y = gcd(w, g)
        z = exact_div(w, y)
        if degree(z) > 0:
            out.append((_positive(primitive_part(z)), i))
        w = y
        g = exact_div(g, y)
        i += 1
    return out


def is_squarefree(f: IntPoly) -> bool:
    return degree(gcd(f, deriv(f))) < 1


# --- Sturm sequences and root isolation ------------------------------------


def sturm_sequence(f: IntPoly) -> list[IntPoly]:
    """Sturm chain of a square-free ``f`` using primitive pseudo-remainders.

    Each remainder is divided by its positive content and its sign is fixed
    to match the negated Euclidean remainder, so sign variations are exact.
    """
    if not is_squarefree(f):
        raise NotSquarefree(f"{to_str(f)} has a repeated factor; deflate it first")
    seq = [primitive_part(f)]
    if degree(f) < 1:
        return seq
    seq.append(primitive_part(deriv(seq[0])))
    while True:
        a, b = seq[-2], seq[-1]
        if degree(b) < 1:
            break
        r = pseudo_rem(a, b)
        if not r:
            break
        e = degree(a) - degree(b) + 1
        flip = -1 if (b[-1] < 0 and e % 2) else 1
        seq.append(scale(primitive_part(r), -flip))
    return seq


def _variations(signs: Sequence[int]) -> int:
    v, prev = 0, 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            v += 1
        prev = s
    return v


def _signs_at(seq: Sequence[IntPoly], r: Optional[Fraction], at_pos_inf: bool) -> list[int]:
    if r is None:
        if at_pos_inf:
            return [(p[-1] > 0) - (p[-1] < 0) for p in seq]
        return [((p[-1] > 0) - (p[-1] < 0)) * (-1) ** degree(p) for p in seq]
    return [sign_at(p, r) for p in seq]


def _var_at(seq, r, at_pos_inf=False) -> int:
    return _variations(_signs_at(seq, r, at_pos_inf))


def sturm_count(f: IntPoly, lo=None, hi=None, *, sequence: Optional[list[IntPoly]] = None) -> int:
    """Number of distinct real roots of a square-free ``f`` in ``(lo, hi]``.

    ``lo=None`` means minus infinity and ``hi=None`` plus infinity, so the
    default counts every real root.  Raises :class:`NotSquarefree` when
    ``gcd(f, f')`` is nonconstant.
    """
    seq = sequence if sequence is not None else sturm_sequence(f)
    lo = None if lo is None else Fraction(lo)
    hi = None if hi is None else Fraction(hi)
    if lo is not None and hi is not None and lo > hi:
        raise ValueError("lo must not exceed hi")
    return _var_at(seq, lo, False) - _var_at(seq, hi, True)


def cauchy_bound(f: IntPoly) -> Fraction:
    """``1 + max |a_i| / |a_n|``; every complex root has smaller modulus."""
    if degree(f) < 1:
        return Fraction(1)
    return 1 + Fraction(max(abs(a) for a in f[:-1]), abs(f[-1]))


def isolate_largest_root(f: IntPoly, width) -> RationalInterval:
    """Bracket of width at most ``width`` around the largest real root of ``f``.

    The bracket holds no other root.  On return the square-free part of
    ``f`` either vanishes at ``hi`` (then ``lo == hi``) or has opposite
    nonzero signs at the two endpoints.
    """
    width = Fraction(width)
    if width < 0:
        raise ValueError("width must be nonnegative")
    if not f or degree(f) < 1:
        raise NoRealRoot("constant polynomial")
    sf = squarefree_part(f)
    seq = sturm_sequence(sf)
    bound = cauchy_bound(sf)
    # Smallest power of two below the Cauchy bound that already encloses all
    # real roots, found by Sturm counts at small points.
    v_pos, v_neg = _var_at(seq, None, True), _var_at(seq, None)
    b = Fraction(1)
    while b < bound and not (_var_at(seq, b) == v_pos and _var_at(seq, -b) == v_neg):
        b *= 2
    bound = min(b, bound)
    lo, hi = -bound, bound
    v_lo, v_hi = _var_at(seq, lo), _var_at(seq, hi)
    if v_lo == v_hi:
        raise NoRealRoot(f"{to_str(f)} has no real root")
    # Sturm bisection until (lo, hi] holds exactly one root, the largest.
    while v_lo - v_hi > 1:
        mid = (lo + hi) / 2
        v_mid = _var_at(seq, mid)
        if v_mid - v_hi >= 1:
            lo, v_lo = mid, v_mid
        else:
            hi, v_hi = mid, v_mid
    s_hi = sign_at(sf, hi)
    if s_hi == 0:
        return RationalInterval(hi, hi)
    # Sign bisection; sign(sf) == s_hi exactly to the right of the root.
    while hi - lo > width or sign_at(sf, lo) == 0:
        mid = (lo + hi) / 2
        s = sign_at(sf, mid)
        if s == 0:
            return RationalInterval(mid, mid)
        if s == s_hi:
            hi = mid
        else:
            lo = mid
    return RationalInterval(lo, hi)


# --- resultants --------------------------------------------------------------


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Resultant via the subresultant polynomial remainder sequence."""
    if not f or not g:
        return 0
    da, db = degree(f), degree(g)
    if da == 0:
        return f[0] ** db
    if db == 0:
        return g[0] ** da
    a_c, b_c = content(f), content(g)
    a, b = primitive_part(f), primitive_part(g)
    t = a_c**db * b_c**da
    s = 1
    if da < db:
        a, b = b, a
        if da % 2 and db % 2:
            s = -s
    gg, h = 1, 1
    while degree(b) > 0:
        delta = degree(a) - degree(b)
        if degree(a) % 2 and degree(b) % 2:
            s = -s
        r = pseudo_rem(a, b)
        a = b
        div = gg * h**delta
        b = tuple(_exact_int_div(c, div) for c in r)
        gg = a[-1]
        if delta == 0:
            pass
        else:
            h = _exact_int_div(gg**delta, h ** (delta - 1))
        if not b:
            return 0
    da = degree(a)
    if da == 0:
        h = b[-1] ** da
    else:
        h = _exact_int_div(b[-1] ** da, h ** (da - 1))
    return s * t * h


def _exact_int_div(a: int, b: int) -> int:
    q, r = divmod(a, b)
    if r:
        raise ArithmeticError("inexact division in subresultant sequence")
    return q


def discriminant(f: IntPoly) -> int:
    """``(-1)**(n(n-1)/2) * res(f, f') / lc(f)``."""
    n = degree(f)
    if n < 1:
        raise ValueError("discriminant needs degree at least 1")
    r = resultant(f, deriv(f))
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * _exact_int_div(r, f[-1])
