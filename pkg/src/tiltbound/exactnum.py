"""Exact scalar arithmetic.

Rationals are plain ``fractions.Fraction`` (aliased ``Rat``).  On top of that
this module provides

* ``QuadNum`` -- numbers a + b*sqrt(m) with exact, float-free comparison,
  including across two distinct radicands (iterated squaring);
* ``RadicalSum`` -- finite sums q0 + sum_i c_i*sqrt(m_i) with an exact zero
  test and certified-interval sign determination, used when convex-chain
  sums mix several radicals;
* ``MPoly`` -- sparse multivariate polynomials over Q for identity checking;
* ``Poly1`` / ``RatFunc1`` -- dense univariate polynomials and rational
  functions over Q, used by the piecewise-bound engine and the verifier;
* ``radical_identity_check`` -- certifies sqrt(D) = R by checking R^2 = D
  polynomially and R >= 0 on a stated slope domain.

Everything is immutable and pure; floats appear only in ``__float__``
conveniences, never in decision paths of the exact API.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Iterable, Mapping, Sequence, Union

Rat = Fraction
Scalar = Union[Fraction, "QuadNum"]

__all__ = [
    "Rat",
    "Scalar",
    "ExactError",
    "MixedRadicandError",
    "NotHomogeneous",
    "ParseError",
    "square_free_core",
    "sqrt_exact",
    "QuadNum",
    "RadicalSum",
    "qn_compare",
    "compare_scalars",
    "scalar_sign",
    "scalar_min",
    "scalar_max",
    "floor_scalar",
    "parse_rat",
    "format_rat",
    "parse_scalar",
    "format_scalar",
    "decimal_str",
    "scalar_interval",
    "MPoly",
    "poly_equal",
    "radical_identity_check",
    "Poly1",
    "RatFunc1",
]


class ExactError(Exception):
    """Base class for exact-arithmetic errors."""


class MixedRadicandError(ExactError):
    """Arithmetic (not comparison) between distinct radicands was requested."""


class NotHomogeneous(ExactError):
    """radical_identity_check received degree-incompatible polynomials."""


class ParseError(ExactError):
    """Malformed exact-number text."""


# ---------------------------------------------------------------------------
# square-free decomposition
# ---------------------------------------------------------------------------

_TRIAL_LIMIT = 1_000_000


def _is_probable_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    # deterministic Miller-Rabin witness set for n < 3.3e24
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _pollard_rho(n: int) -> int:
    """A nontrivial factor of composite odd n."""
    if n % 2 == 0:
        return 2
    rng = random.Random(0xC0FFEE ^ n)
    while True:
        c = rng.randrange(1, n)
        x = y = rng.randrange(2, n)
        d = 1
        while d == 1:
            x = (x * x + c) % n
            y = (y * y + c) % n
            y = (y * y + c) % n
            d = math.gcd(abs(x - y), n)
        if d != n:
            return d


def _factor_into(counts: dict, n: int) -> None:
    if n == 1:
        return
    if _is_probable_prime(n):
        counts[n] = counts.get(n, 0) + 1
        return
    d = _pollard_rho(n)
    _factor_into(counts, d)
    _factor_into(counts, n // d)


def square_free_core(n: int) -> tuple[int, int]:
    """Decompose n > 0 as ``core * sq**2`` with core square-free.

    Trial division up to 1e6, then Pollard rho on the remainder (all the
    radicands that actually occur here are tiny; rho is the safety net for
    sweep-generated values).
    """
    if n <= 0:
        raise ValueError("square_free_core requires n > 0")
    core, sq = 1, 1
    for p in (2, 3, 5):
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e % 2:
            core *= p
        sq *= p ** (e // 2)
    p = 7
    while p * p <= n and p <= _TRIAL_LIMIT:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            if e % 2:
                core *= p
            sq *= p ** (e // 2)
        p += 2
    if n > 1:
        r = math.isqrt(n)
        if r * r == n:
            sq *= r
            n = 1
        elif _is_probable_prime(n):
            core *= n
            n = 1
        else:
            counts: dict = {}
            _factor_into(counts, n)
            for q, e in counts.items():
                if e % 2:
                    core *= q
                sq *= q ** (e // 2)
            n = 1
    return core, sq


def sqrt_exact(q: Fraction | int) -> Scalar:
    """Exact square root of a nonnegative rational, as Fraction or QuadNum."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt_exact of a negative rational")
    if q == 0:
        return Fraction(0)
    core, sq = square_free_core(q.numerator * q.denominator)
    coeff = Fraction(sq, q.denominator)
    if core == 1:
        return coeff
    return QuadNum(0, coeff, core)


# ---------------------------------------------------------------------------
# sign analysis for u + b*sqrt(m) [+ e*sqrt(k)]
# ---------------------------------------------------------------------------


def _sgn(x: Fraction) -> int:
    return (x > 0) - (x < 0)


def _sign_single(u: Fraction, b: Fraction, m: int) -> int:
    """Exact sign of u + b*sqrt(m), m square-free > 1."""
    if b == 0:
        return _sgn(u)
    if u == 0:
        return _sgn(b)
    su, sb = _sgn(u), _sgn(b)
    if su == sb:
        return su
    t = u * u - b * b * m
    if t == 0:
        return 0
    return su if t > 0 else sb


def _sign_rad_pair(u: Fraction, b: Fraction, m: int, e: Fraction, k: int) -> int:
    """Exact sign of u + b*sqrt(m) + e*sqrt(k) with m != k square-free > 1."""
    if b == 0 and e == 0:
        return _sgn(u)
    if e == 0:
        return _sign_single(u, b, m)
    if b == 0:
        return _sign_single(u, e, k)
    # sign of v = b*sqrt(m) + e*sqrt(k)
    sb, se = _sgn(b), _sgn(e)
    if sb == se:
        sv = sb
    else:
        t = b * b * m - e * e * k
        sv = sb if t > 0 else (se if t < 0 else 0)
    if u == 0:
        return sv
    su = _sgn(u)
    if sv == 0:
        return su
    if su == sv:
        return su
    # opposite signs: compare u^2 with v^2 = b^2 m + e^2 k + 2be*sqrt(mk)
    core, sq = square_free_core(m * k)
    diff = u * u - (b * b * m + e * e * k)
    s2 = _sign_single(diff, -2 * b * e * sq, core)  # sign of u^2 - v^2
    if s2 == 0:
        return 0
    return su if s2 > 0 else sv


# ---------------------------------------------------------------------------
# QuadNum
# ---------------------------------------------------------------------------


class QuadNum:
    """Exact a + b*sqrt(m); m square-free natural, m == 0 iff b == 0."""

    __slots__ = ("a", "b", "m")

    def __init__(self, a, b=0, m=0):
        a = Fraction(a)
        b = Fraction(b)
        m = int(m)
        if b != 0:
            if m <= 0:
                raise ValueError("radicand must be positive when b != 0")
            core, sq = square_free_core(m)
            b *= sq
            m = core
            if m == 1:
                a += b
                b = Fraction(0)
                m = 0
        else:
            m = 0
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "m", m)

    def __setattr__(self, *args):  # immutable
        raise AttributeError("QuadNum is immutable")

    # -- basic structure ----------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise MixedRadicandError(f"{self} is irrational")
        return self.a

    def sign(self) -> int:
        return _sign_single(self.a, self.b, self.m) if self.m else _sgn(self.a)

    def interval(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """Certified enclosure with width < |b|/2**(bits-1) + ulp."""
        if self.b == 0:
            return self.a, self.a
        s = math.isqrt(self.m << (2 * bits))
        lo = Fraction(s, 1 << bits)
        hi = Fraction(s + 1, 1 << bits)
        if self.b > 0:
            return self.a + self.b * lo, self.a + self.b * hi
        return self.a + self.b * hi, self.a + self.b * lo

    # -- arithmetic (same radicand only) ------------------------------------

    def _coerce(self, other) -> "QuadNum":
        if isinstance(other, QuadNum):
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.m and o.m and self.m != o.m:
            raise MixedRadicandError(f"add: sqrt({self.m}) vs sqrt({o.m})")
        m = self.m or o.m
        return QuadNum(self.a + o.a, self.b + o.b, m or 1)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.m or 1)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.m and o.m and self.m != o.m:
            raise MixedRadicandError(f"mul: sqrt({self.m}) vs sqrt({o.m})")
        m = self.m or o.m
        a = self.a * o.a + self.b * o.b * m
        b = self.a * o.b + self.b * o.a
        return QuadNum(a, b, m or 1)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.m and o.m and self.m != o.m:
            raise MixedRadicandError(f"div: sqrt({self.m}) vs sqrt({o.m})")
        m = self.m or o.m
        norm = o.a * o.a - o.b * o.b * m
        if norm == 0:
            if o.a == 0 and o.b == 0:
                raise ZeroDivisionError("division by zero QuadNum")
            raise ZeroDivisionError("conjugate norm is zero")  # unreachable: m square-free
        inv = QuadNum(o.a / norm, -o.b / norm, m or 1)
        return self * inv

    def __rtruediv__(self, other):
        o = self._coerce(other)
        return o / self

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = QuadNum(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- comparison ----------------------------------------------------------

    def _cmp(self, other) -> int:
        return compare_scalars(self, other)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        if isinstance(other, QuadNum):
            return (self.a, self.b, self.m) == (other.a, other.b, other.m)
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.m))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def __abs__(self):
        return -self if self.sign() < 0 else self

    def __float__(self):
        return float(self.a) + float(self.b) * math.sqrt(self.m) if self.m else float(self.a)

    def __str__(self):
        if self.b == 0:
            return format_rat(self.a)
        b = self.b
        sign = "-" if b < 0 else "+"
        return f"{format_rat(self.a)}{sign}{format_rat(abs(b))}*sqrt({self.m})"

    def __repr__(self):
        return f"QuadNum({self.a!r}, {self.b!r}, {self.m})"


def scalar_sign(x) -> int:
    if isinstance(x, QuadNum):
        return x.sign()
    if isinstance(x, RadicalSum):
        return x.sign()
    return _sgn(Fraction(x))


def compare_scalars(x, y) -> int:
    """Exact three-way comparison of Fraction/QuadNum/RadicalSum values."""
    if isinstance(x, RadicalSum) or isinstance(y, RadicalSum):
        return (RadicalSum.of(x) - RadicalSum.of(y)).sign()
    xa, xb, xm = (x.a, x.b, x.m) if isinstance(x, QuadNum) else (Fraction(x), Fraction(0), 0)
    ya, yb, ym = (y.a, y.b, y.m) if isinstance(y, QuadNum) else (Fraction(y), Fraction(0), 0)
    u = xa - ya
    if xm == ym:
        return _sign_single(u, xb - yb, xm) if xm else _sgn(u)
    if xm == 0:
        return _sign_single(u, -yb, ym)
    if ym == 0:
        return _sign_single(u, xb, xm)
    return _sign_rad_pair(u, xb, xm, -yb, ym)


def qn_compare(x, y) -> int:
    """Ordering of two exact values: -1, 0 or 1 (never floating point)."""
    return compare_scalars(x, y)


def scalar_min(*xs):
    best = xs[0]
    for x in xs[1:]:
        if compare_scalars(x, best) < 0:
            best = x
    return best


def scalar_max(*xs):
    best = xs[0]
    for x in xs[1:]:
        if compare_scalars(x, best) > 0:
            best = x
    return best


def floor_scalar(x) -> int:
    """Exact floor of a Fraction or QuadNum."""
    if isinstance(x, QuadNum):
        if x.is_rational:
            return math.floor(x.a)
        n = math.floor(float(x))  # guess, then correct exactly
        while compare_scalars(x, n) < 0:
            n -= 1
        while compare_scalars(x, n + 1) >= 0:
            n += 1
        return n
    return math.floor(Fraction(x))


def scalar_interval(x, bits: int = 64) -> tuple[Fraction, Fraction]:
    """Certified rational enclosure of an exact value."""
    if isinstance(x, QuadNum):
        return x.interval(bits)
    if isinstance(x, RadicalSum):
        return x.interval(bits)
    q = Fraction(x)
    return q, q


# ---------------------------------------------------------------------------
# RadicalSum
# ---------------------------------------------------------------------------

_SQRT_CACHE: dict[tuple[int, int], tuple[Fraction, Fraction]] = {}


def _sqrt_bounds(m: int, bits: int) -> tuple[Fraction, Fraction]:
    key = (m, bits)
    got = _SQRT_CACHE.get(key)
    if got is None:
        s = math.isqrt(m << (2 * bits))
        got = (Fraction(s, 1 << bits), Fraction(s + 1, 1 << bits))
        _SQRT_CACHE[key] = got
    return got


class RadicalSum:
    """Finite sum q + sum c_i*sqrt(m_i) over distinct square-free m_i > 1.

    The key-1 entry holds the rational part.  Zero testing is exact by
    Q-linear independence of square roots of distinct square-free integers;
    nonzero signs are certified by interval refinement.
    """

    __slots__ = ("terms", "approx")

    def __init__(self, terms: Mapping[int, Fraction] | None = None):
        t = {m: Fraction(c) for m, c in (terms or {}).items() if c != 0}
        object.__setattr__(self, "terms", t)
        a = 0.0
        for m, c in t.items():
            a += float(c) * (1.0 if m == 1 else math.sqrt(m))
        object.__setattr__(self, "approx", a)

    def __setattr__(self, *args):
        raise AttributeError("RadicalSum is immutable")

    @classmethod
    def of(cls, x) -> "RadicalSum":
        if isinstance(x, RadicalSum):
            return x
        if isinstance(x, QuadNum):
            t: dict[int, Fraction] = {}
            if x.a:
                t[1] = x.a
            if x.b:
                t[x.m] = x.b
            return cls(t)
        return cls({1: Fraction(x)})

    def __add__(self, other):
        o = RadicalSum.of(other)
        t = dict(self.terms)
        for m, c in o.terms.items():
            t[m] = t.get(m, Fraction(0)) + c
        return RadicalSum(t)

    __radd__ = __add__

    def __neg__(self):
        return RadicalSum({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-RadicalSum.of(other))

    def __rsub__(self, other):
        return RadicalSum.of(other) - self

    def scale(self, q) -> "RadicalSum":
        q = Fraction(q)
        return RadicalSum({m: c * q for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not self.terms

    def interval(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        lo = hi = Fraction(0)
        for m, c in self.terms.items():
            if m == 1:
                lo += c
                hi += c
                continue
            slo, shi = _sqrt_bounds(m, bits)
            if c > 0:
                lo += c * slo
                hi += c * shi
            else:
                lo += c * shi
                hi += c * slo
        return lo, hi

    def sign(self) -> int:
        t = self.terms
        if not t:
            return 0
        if len(t) == 1:
            ((m, c),) = t.items()
            return _sgn(c)
        if len(t) <= 3:
            rad = [(m, c) for m, c in t.items() if m != 1]
            u = t.get(1, Fraction(0))
            if len(rad) == 1:
                return _sign_single(u, rad[0][1], rad[0][0])
            if len(rad) == 2:
                (m, b), (k, e) = rad
                return _sign_rad_pair(u, b, m, e, k)
        bits = 64
        while bits <= 1 << 14:
            lo, hi = self.interval(bits)
            if lo > 0:
                return 1
            if hi < 0:
                return -1
            bits *= 2
        raise RuntimeError("sign refinement exhausted (nonzero guaranteed; unreachable)")

    def _cmp(self, other) -> int:
        o = RadicalSum.of(other)
        # certified float screen: approx is recomputed from canonical terms
        # on construction, so its error is < ~1e-13 * scale for the term
        # counts arising here; only close calls pay for exact arithmetic
        gap = self.approx - o.approx
        scale = 1.0 + abs(self.approx) + abs(o.approx)
        if math.isfinite(gap) and math.isfinite(scale):
            if gap > 1e-9 * scale:
                return 1
            if gap < -1e-9 * scale:
                return -1
        d = self - o
        if d.is_zero():
            return 0
        return d.sign()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, QuadNum, RadicalSum)):
            return (self - RadicalSum.of(other)).is_zero()
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0

    def to_exact(self) -> Scalar | "RadicalSum":
        """Collapse to Fraction or QuadNum when at most one radical survives."""
        rad = [(m, c) for m, c in self.terms.items() if m != 1]
        if not rad:
            return self.terms.get(1, Fraction(0))
        if len(rad) == 1:
            return QuadNum(self.terms.get(1, Fraction(0)), rad[0][1], rad[0][0])
        return self

    def __float__(self):
        return self.approx

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms):
            c = self.terms[m]
            parts.append(format_rat(c) if m == 1 else f"{format_rat(c)}*sqrt({m})")
        return " + ".join(parts)

    def __repr__(self):
        return f"RadicalSum({self.terms!r})"


# ---------------------------------------------------------------------------
# text serialization
# ---------------------------------------------------------------------------


def format_rat(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad rational {text!r}") from exc


def format_scalar(x) -> str:
    if isinstance(x, QuadNum):
        return str(x)
    if isinstance(x, RadicalSum):
        return str(x)
    return format_rat(Fraction(x))


def parse_scalar(text: str) -> Scalar:
    """Parse 'p/q' or 'a+b*sqrt(m)' (also 'a-b*sqrt(m)', 'b*sqrt(m)')."""
    s = text.strip().replace(" ", "")
    if "sqrt" not in s:
        return parse_rat(s)
    star = s.rfind("*sqrt(")
    if star < 0 or not s.endswith(")"):
        raise ParseError(f"bad quadratic irrational {text!r}")
    m_txt = s[star + 6 : -1]
    head = s[:star]
    # split head into a and b at the last +/- that is not a leading sign
    # or an exponent; heads look like "a+b" / "a-b" / "b"
    split = -1
    for i in range(len(head) - 1, 0, -1):
        if head[i] in "+-" and head[i - 1] not in "+-/*":
            split = i
            break
    if split < 0:
        a_txt, b_txt = "0", head
    else:
        a_txt, b_txt = head[:split], head[split:]
        if b_txt[0] == "+":
            b_txt = b_txt[1:]
    try:
        m = int(m_txt)
    except ValueError as exc:
        raise ParseError(f"bad radicand in {text!r}") from exc
    return QuadNum(parse_rat(a_txt), parse_rat(b_txt), m)


def decimal_str(x, digits: int = 12) -> str:
    """Deterministic decimal rendering with `digits` significant digits.

    Relative error < 10**(1-digits); the only approximation in the system.
    """
    if not 4 <= digits <= 64:
        raise ValueError("digits must be in [4, 64]")
    if isinstance(x, (QuadNum, RadicalSum)):
        lo, hi = scalar_interval(x, bits=4 * digits + 32)
        q = (lo + hi) / 2
    else:
        q = Fraction(x)
    if q == 0:
        return "0"
    sign = "-" if q < 0 else ""
    q = abs(q)
    # exponent e with 10^e <= q < 10^(e+1)
    e = len(str(q.numerator)) - len(str(q.denominator))
    while 10**e > q:
        e -= 1
    while 10 ** (e + 1) <= q:
        e += 1
    frac_digits = max(digits - 1 - e, 0)
    scaled = q * 10**frac_digits
    n = scaled.numerator // scaled.denominator
    if 2 * (scaled - n) >= 1:
        n += 1
    s = str(n).rjust(frac_digits + 1, "0")
    if frac_digits == 0:
        return sign + s
    return sign + s[:-frac_digits] + "." + s[-frac_digits:]


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------


class MPoly:
    """Sparse multivariate polynomial over Q with an explicit variable tuple."""

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, Fraction] | None = None):
        vs = tuple(variables)
        t = {}
        for exps, c in (terms or {}).items():
            c = Fraction(c)
            if c == 0:
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(vs):
                raise ValueError("exponent tuple does not match variables")
            t[exps] = t.get(exps, Fraction(0)) + c
        object.__setattr__(self, "vars", vs)
        object.__setattr__(self, "terms", {e: c for e, c in t.items() if c != 0})

    def __setattr__(self, *args):
        raise AttributeError("MPoly is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def variables(cls, *names: str) -> tuple["MPoly", ...]:
        gens = []
        for i, _ in enumerate(names):
            exps = tuple(1 if j == i else 0 for j in range(len(names)))
            gens.append(cls(names, {exps: Fraction(1)}))
        return tuple(gens)

    @classmethod
    def const(cls, variables: Sequence[str], c) -> "MPoly":
        return cls(variables, {tuple(0 for _ in variables): Fraction(c)})

    def _check(self, other: "MPoly") -> None:
        if self.vars != other.vars:
            raise ValueError("variable universes differ")

    # -- ring operations ------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, MPoly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return MPoly.const(self.vars, other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, Fraction(0)) + c
        return MPoly(self.vars, t)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return MPoly(self.vars, {e: c * Fraction(other) for e, c in self.terms.items()})
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        t: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, Fraction(0)) + c1 * c2
        return MPoly(self.vars, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = MPoly.const(self.vars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = MPoly.const(self.vars, other)
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # -- structure -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def evaluate(self, point: Mapping[str, object]):
        """Exact evaluation; values may be Fraction or QuadNum."""
        missing = [v for v in self.vars if v not in point]
        if missing:
            raise ValueError(f"missing values for {missing}")
        total: object = Fraction(0)
        for exps, c in self.terms.items():
            term: object = c
            for v, e in zip(self.vars, exps):
                for _ in range(e):
                    term = term * point[v]
            total = total + term
        return total

    def restrict_to_ratio(self, num: str, den: str) -> "Poly1":
        """One-variable profile g(t) = p(den=1, num=t) for a homogeneous p."""
        if set(self.vars) - {num, den}:
            raise ValueError("restrict_to_ratio expects variables {num, den}")
        i_num = self.vars.index(num)
        coeffs: dict[int, Fraction] = {}
        for exps, c in self.terms.items():
            d = exps[i_num]
            coeffs[d] = coeffs.get(d, Fraction(0)) + c
        deg = max(coeffs, default=0)
        return Poly1([coeffs.get(i, Fraction(0)) for i in range(deg + 1)])

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self.vars, exps) if e
            )
            parts.append(f"{format_rat(c)}" + (f"*{mono}" if mono else ""))
        return " + ".join(parts)

    __repr__ = __str__


def poly_equal(p: MPoly, q: MPoly) -> bool:
    """True iff p - q is the zero polynomial (same variable universe)."""
    if p.vars != q.vars:
        raise ValueError("variable universes differ")
    return (p - q).is_zero()


# ---------------------------------------------------------------------------
# univariate polynomials / rational functions
# ---------------------------------------------------------------------------


class Poly1:
    """Dense univariate polynomial over Q, coefficients low to high."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *args):
        raise AttributeError("Poly1 is immutable")

    @classmethod
    def const(cls, c) -> "Poly1":
        return cls([c])

    @classmethod
    def x(cls) -> "Poly1":
        return cls([0, 1])

    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def _lift(self, other):
        if isinstance(other, Poly1):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly1([other])
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        for i, c in enumerate(o.coeffs):
            a[i] += c
        return Poly1(a)

    __radd__ = __add__

    def __neg__(self):
        return Poly1([-c for c in self.coeffs])

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly1([c * Fraction(other) for c in self.coeffs])
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(o.coeffs):
                out[i + j] += a * b
        return Poly1(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def evaluate(self, x):
        total: object = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * x + c
        return total

    def derivative(self) -> "Poly1":
        return Poly1([i * c for i, c in enumerate(self.coeffs)][1:])

    def compose_affine(self, p0, dp) -> "Poly1":
        """self(p0 + dp*t) as a polynomial in t."""
        out = Poly1([0])
        lin = Poly1([Fraction(p0), Fraction(dp)])
        for c in reversed(self.coeffs):
            out = out * lin + c
        return out

    def real_roots(self) -> list:
        """Exact real roots for degree <= 2 (Fraction or QuadNum)."""
        cs = self.coeffs
        if len(cs) == 0:
            raise ValueError("zero polynomial has all roots")
        if len(cs) == 1:
            return []
        if len(cs) == 2:
            return [-cs[0] / cs[1]]
        if len(cs) == 3:
            a, b, c = cs[2], cs[1], cs[0]
            disc = b * b - 4 * a * c
            if disc < 0:
                return []
            root = sqrt_exact(disc)
            if isinstance(root, Fraction):
                r1 = (-b - root) / (2 * a)
                r2 = (-b + root) / (2 * a)
                return [r1] if r1 == r2 else sorted([r1, r2])
            lo = (QuadNum(-b) - root) / (2 * a)
            hi = (QuadNum(-b) + root) / (2 * a)
            return [lo, hi] if a > 0 else [hi, lo]
        raise NotImplementedError("exact roots only up to degree 2")

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                parts.append(format_rat(c))
            elif i == 1:
                parts.append(f"{format_rat(c)}*x")
            else:
                parts.append(f"{format_rat(c)}*x^{i}")
        return " + ".join(parts)

    __repr__ = __str__


class RatFunc1:
    """Univariate rational function num/den over Q; equality by cross-multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly1, den: Poly1 | None = None):
        den = den if den is not None else Poly1([1])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator polynomial")
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, *args):
        raise AttributeError("RatFunc1 is immutable")

    @classmethod
    def of(cls, x) -> "RatFunc1":
        if isinstance(x, RatFunc1):
            return x
        if isinstance(x, Poly1):
            return cls(x)
        return cls(Poly1([x]))

    def __add__(self, other):
        o = RatFunc1.of(other)
        return RatFunc1(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc1(-self.num, self.den)

    def __sub__(self, other):
        return self + (-RatFunc1.of(other))

    def __rsub__(self, other):
        return RatFunc1.of(other) - self

    def __mul__(self, other):
        o = RatFunc1.of(other)
        return RatFunc1(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = RatFunc1.of(other)
        if o.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RatFunc1(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return RatFunc1.of(other) / self

    def __eq__(self, other):
        o = RatFunc1.of(other)
        return (self.num * o.den - o.num * self.den).is_zero()

    def __hash__(self):  # pragma: no cover - not used as dict key
        return hash((self.num, self.den))

    def evaluate(self, x):
        d = self.den.evaluate(x)
        if scalar_sign(d) == 0:
            raise ZeroDivisionError("pole of rational function")
        return self.num.evaluate(x) / d

    def __str__(self):
        return f"({self.num}) / ({self.den})"

    __repr__ = __str__


# ---------------------------------------------------------------------------
# radical identity certification
# ---------------------------------------------------------------------------


def _poly_min_on_interval(g: Poly1, lo, hi):
    """Exact minimum of g over [lo, hi]; endpoints may be QuadNum."""
    candidates = [g.evaluate(lo), g.evaluate(hi)]
    dg = g.derivative()
    if dg.degree() > 2:
        raise NotImplementedError("positivity check supports degree <= 3")
    if dg.degree() >= 1:
        for r in dg.real_roots():
            if compare_scalars(lo, r) <= 0 <= compare_scalars(hi, r):
                candidates.append(g.evaluate(r))
    return scalar_min(*candidates)


def radical_identity_check(
    discriminant: MPoly,
    claimed_root: MPoly,
    positivity_domain: tuple,
    ratio_num: str = "d",
    ratio_den: str = "r",
) -> bool:
    """Certify sqrt(discriminant) == claimed_root on a slope domain.

    Both polynomials must already be cleared of denominators and homogeneous
    with deg(discriminant) == 2*deg(claimed_root); otherwise NotHomogeneous.
    Returns True iff claimed_root**2 equals discriminant coefficient-wise AND
    claimed_root >= 0 on the stated domain of the ratio ratio_num/ratio_den
    (certified by exact endpoint and critical-point evaluation).
    """
    if discriminant.vars != claimed_root.vars:
        raise ValueError("variable universes differ")
    if not (discriminant.is_homogeneous() and claimed_root.is_homogeneous()):
        raise NotHomogeneous("inputs must be homogeneous")
    if not discriminant.is_zero() and discriminant.degree() != 2 * claimed_root.degree():
        raise NotHomogeneous("degree of discriminant must be twice the claimed root's")
    if not poly_equal(claimed_root * claimed_root, discriminant):
        return False
    if len(discriminant.vars) == 1:
        g = Poly1(
            [
                claimed_root.terms.get((i,), Fraction(0))
                for i in range(claimed_root.degree() + 1)
            ]
        )
    else:
        g = claimed_root.restrict_to_ratio(ratio_num, ratio_den)
    lo, hi = positivity_domain
    return scalar_sign(_poly_min_on_interval(g, lo, hi)) >= 0
