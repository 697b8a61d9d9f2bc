"""Exact integer-polynomial algebra.

Everything here is arbitrary precision and division-free or exactly-divided;
no floating point.  Degrees in scope are small (factorization caps at 16, the
bivariate resultants peak at a few dozen), so the algorithms favor

  - subresultant PRS for resultants,
  - evaluation/interpolation for the bivariate resultant,
  - Yun + modular Zassenhaus (DDF, Cantor-Zassenhaus, quadratic Hensel
    lifting, subset recombination) for factorization over Q,

all of which are short enough to audit directly.
"""

from __future__ import annotations

import functools
import itertools
import math
import random
from fractions import Fraction

from . import _fpx
from .errors import InvariantViolation, ZeroPolynomial

FACTOR_DEGREE_CAP = 16


class IntPoly:
    """Immutable integer polynomial; coeffs low-to-high, trimmed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        for c in cs:
            if not isinstance(c, int):
                raise TypeError(f"integer coefficients only, got {type(c).__name__}")
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPoly is immutable")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> int:
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __sub__(self, other):
        out = list(self.coeffs) + [0] * (len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPoly(out)

    def __neg__(self):
        return IntPoly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([other * c for c in self.coeffs])
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return IntPoly()
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    out[i + j] += ca * cb
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = IntPoly([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0 if isinstance(x, int) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def derivative(self) -> "IntPoly":
        return IntPoly([i * self.coeffs[i] for i in range(1, len(self.coeffs))])

    def content(self) -> int:
        return math.gcd(*self.coeffs) if self.coeffs else 0

    def primitive(self) -> "IntPoly":
        """Content removed and leading coefficient made positive."""
        if self.is_zero:
            raise ZeroPolynomial("primitive part of zero polynomial")
        c = self.content()
        if self.lc < 0:
            c = -c
        return IntPoly([x // c for x in self.coeffs])

    def shift_scale(self, b: int) -> "IntPoly":
        """The polynomial f(b*x)."""
        return IntPoly([c * b ** i for i, c in enumerate(self.coeffs)])


X = IntPoly([0, 1])


def divmod_exact(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Quotient and remainder over Q, demanding integer results.

    Raises ValueError when the division leaves Z[x]; use divides() to probe.
    """
    q, r = _divmod_q(a, b)
    return _as_int_poly(q), _as_int_poly(r)


def _divmod_q(a: IntPoly, b: IntPoly) -> tuple[list, list]:
    if b.is_zero:
        raise ZeroPolynomial("division by zero polynomial")
    rem = [Fraction(c) for c in a.coeffs]
    db = b.degree
    lc = Fraction(b.lc)
    if len(rem) - 1 < db:
        return [], rem
    quo = [Fraction(0)] * (len(rem) - db)
    while rem and len(rem) - 1 >= db:
        c = rem[-1] / lc
        d = len(rem) - 1 - db
        quo[d] = c
        for i, cb in enumerate(b.coeffs):
            rem[d + i] -= c * cb
        while rem and rem[-1] == 0:
            rem.pop()
    return quo, rem


def _as_int_poly(fracs: list) -> IntPoly:
    out = []
    for c in fracs:
        if c.denominator != 1:
            raise ValueError("division is not exact over the integers")
        out.append(c.numerator)
    return IntPoly(out)


def divides(b: IntPoly, a: IntPoly) -> bool:
    """True when b divides a in Q[x] with an integer quotient."""
    try:
        _, r = divmod_exact(a, b)
    except ValueError:
        return False
    return r.is_zero


def divmod_monic(a: IntPoly, b: IntPoly) -> tuple[IntPoly, IntPoly]:
    """Integer long division by a monic divisor (always exact over Z)."""
    if not b.is_monic:
        raise ValueError("divisor must be monic")
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) - 1 < db:
        return IntPoly(), a
    quo = [0] * (len(rem) - db)
    for d in range(len(rem) - 1 - db, -1, -1):
        c = rem[d + db]
        if c:
            quo[d] = c
            for i, cb in enumerate(b.coeffs):
                rem[d + i] -= c * cb
    return IntPoly(quo), IntPoly(rem[:db])


def powmod_monic(base: IntPoly, e: int, mod: IntPoly) -> IntPoly:
    """base**e reduced modulo a monic polynomial, exactly over Z."""
    result = IntPoly([1])
    acc = divmod_monic(base, mod)[1]
    while e:
        if e & 1:
            result = divmod_monic(result * acc, mod)[1]
        acc = divmod_monic(acc * acc, mod)[1]
        e >>= 1
    return result


def _prem(a: IntPoly, b: IntPoly) -> IntPoly:
    # signed pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b
    d = a.degree - b.degree
    if d < 0:
        return a
    lcb = b.lc
    rem = list((a * lcb ** (d + 1)).coeffs)
    db = b.degree
    while rem and len(rem) - 1 >= db:
        c = rem[-1]
        if c % lcb:
            raise AssertionError("pseudo-remainder step not exact")
        c //= lcb
        k = len(rem) - 1 - db
        for i, cb in enumerate(b.coeffs):
            rem[k + i] -= c * cb
        while rem and rem[-1] == 0:
            rem.pop()
    return IntPoly(rem)


def resultant(f: IntPoly, g: IntPoly) -> int:
    """Res(f, g) = lc(f)^deg(g) * product of g over the roots of f.

    Fraction-free subresultant PRS.

    >>> resultant(IntPoly([-2, 1]), IntPoly([-3, 1]))
    -1
    """
    if f.is_zero or g.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial")
    if f.degree == 0:
        return f.coeffs[0] ** g.degree
    if g.degree == 0:
        return g.coeffs[0] ** f.degree
    a_cont = f.content() * (1 if f.lc > 0 else -1)
    b_cont = g.content() * (1 if g.lc > 0 else -1)
    A = IntPoly([c // a_cont for c in f.coeffs])
    B = IntPoly([c // b_cont for c in g.coeffs])
    t = a_cont ** g.degree * b_cont ** f.degree
    s = 1
    if A.degree < B.degree:
        if A.degree % 2 == 1 and B.degree % 2 == 1:
            s = -1
        A, B = B, A
    gg = 1
    hh = 1
    while True:
        dA, dB = A.degree, B.degree
        delta = dA - dB
        if dA % 2 == 1 and dB % 2 == 1:
            s = -s
        R = _prem(A, B)
        A = B
        denom = gg * hh ** delta
        if any(c % denom for c in R.coeffs):
            raise AssertionError("subresultant division not exact")
        B = IntPoly([c // denom for c in R.coeffs])
        gg = A.lc
        if delta > 0:
            hh = gg ** delta // hh ** (delta - 1)
        if B.is_zero:
            return 0
        if B.degree == 0:
            dA = A.degree
            res = B.coeffs[0] ** dA // hh ** (dA - 1)
            return s * t * res


def resultant_y(f: IntPoly, g_y: list[IntPoly]) -> IntPoly:
    """Res_y(f(y), G(x, y)) as a polynomial in x.

    G is given by its y-coefficients: g_y[j] is the x-polynomial multiplying
    y^j.  Computed by specializing x at small integers and interpolating
    exactly; specializations where the y-degree drops are corrected by the
    lc(f) power that the Sylvester determinant prescribes.
    """
    if f.is_zero:
        raise ZeroPolynomial("resultant of the zero polynomial")
    g_y = list(g_y)
    while g_y and g_y[-1].is_zero:
        g_y.pop()
    m = len(g_y) - 1
    if m < 1:
        raise ValueError("G must have positive y-degree")
    degx = max(gp.degree for gp in g_y if not gp.is_zero)
    npts = f.degree * degx + 1
    lcf = f.lc
    pts = []
    for t in _eval_points():
        gt = [gp(t) for gp in g_y]
        while gt and gt[-1] == 0:
            gt.pop()
        if not gt:
            val = 0
        elif len(gt) == 1:
            val = lcf ** m * gt[0] ** f.degree
        else:
            mp = len(gt) - 1
            val = lcf ** (m - mp) * resultant(f, IntPoly(gt))
        pts.append((t, val))
        if len(pts) == npts:
            break
    return _interpolate(pts)


def _eval_points():
    yield 0
    n = 1
    while True:
        yield n
        yield -n
        n += 1


def _interpolate(points: list[tuple[int, int]]) -> IntPoly:
    # exact Lagrange interpolation; the basis numerators stay integral
    n = len(points)
    acc = [Fraction(0)] * n
    for xi, yi in points:
        if yi == 0:
            continue
        num = [1]
        den = 1
        for xj, _ in points:
            if xj == xi:
                continue
            nxt = [0] * (len(num) + 1)
            for idx, c in enumerate(num):
                nxt[idx] -= c * xj
                nxt[idx + 1] += c
            num = nxt
            den *= xi - xj
        scale = Fraction(yi, den)
        for idx, c in enumerate(num):
            acc[idx] += c * scale
    return _as_int_poly(acc)


def poly_gcd(f: IntPoly, g: IntPoly) -> IntPoly:
    """Greatest common divisor in Z[x], primitive with positive lc
    (times the integer gcd of the contents)."""
    if f.is_zero and g.is_zero:
        raise ZeroPolynomial("gcd of two zero polynomials")
    if f.is_zero:
        return g.primitive() * g.content()
    if g.is_zero:
        return f.primitive() * f.content()
    cont = math.gcd(f.content(), g.content())
    A, B = f.primitive(), g.primitive()
    if A.degree < B.degree:
        A, B = B, A
    while not B.is_zero:
        R = _prem(A, B)
        A, B = B, (R if R.is_zero else R.primitive())
    return A * cont


def squarefree_part(f: IntPoly) -> IntPoly:
    """f divided by gcd(f, f'); primitive, positive lc; monic stays monic."""
    if f.is_zero:
        raise ZeroPolynomial("squarefree part of zero polynomial")
    if f.degree == 0:
        return IntPoly([1])
    g = poly_gcd(f, f.derivative())
    q, _ = divmod_exact(f, g)
    return q.primitive()


def _yun(F: IntPoly) -> list[tuple[IntPoly, int]]:
    # squarefree decomposition of a primitive positive-lc polynomial
    d = poly_gcd(F, F.derivative())
    b, _ = divmod_exact(F, d)
    c, _ = divmod_exact(F.derivative(), d)
    z = c - b.derivative()
    out = []
    i = 1
    while b.degree > 0:
        a = poly_gcd(b, z)
        if a.degree > 0:
            out.append((a, i))
        b, _ = divmod_exact(b, a)
        c, _ = divmod_exact(z, a)
        z = c - b.derivative()
        i += 1
    return out


@functools.lru_cache(maxsize=None)
def _primes_from_17() -> list[int]:
    out = []
    n = 17
    while len(out) < 64:
        if all(n % p for p in range(2, int(n ** 0.5) + 1)):
            out.append(n)
        n += 2
    return out


def _good_primes(F: IntPoly, want: int, prime_index: int) -> list[int]:
    # primes >= 17 where F stays squarefree (disc and lc nonzero mod p)
    disc = resultant(F, F.derivative())
    out = []
    skipped = 0
    for p in _primes_from_17():
        if disc % p == 0 or F.lc % p == 0:
            continue
        if skipped < prime_index:
            skipped += 1
            continue
        out.append(p)
        if len(out) == want:
            return out
    raise AssertionError("ran out of candidate primes")


def _subset_sums(pattern: list[int], n: int) -> int:
    # bitmask of degrees realizable as sums of sub-multisets of the pattern
    mask = 1
    for d in pattern:
        mask |= mask << d
    return mask & ((1 << n) - 1) & ~1  # keep strict 1..n-1


def _mignotte_bound(F: IntPoly) -> int:
    norm2 = math.isqrt(sum(c * c for c in F.coeffs)) + 1
    return (1 << F.degree) * norm2


def _mtrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _madd(a, b, M):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % M
    return _mtrim(out)


def _msub(a, b, M):
    out = list(a) + [0] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] = (out[i] - c) % M
    return _mtrim([c % M for c in out])


def _mmul(a, b, M):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] = (out[i + j] + ca * cb) % M
    return _mtrim(out)


def _mdivmod_monic(a, b, M):
    rem = list(a)
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], _mtrim(rem)
    quo = [0] * (len(rem) - db)
    for d in range(len(rem) - 1 - db, -1, -1):
        c = rem[d + db] % M
        if c:
            quo[d] = c
            for i, cb in enumerate(b):
                rem[d + i] = (rem[d + i] - c * cb) % M
    return _mtrim(quo), _mtrim([c % M for c in rem[:db]])


def _hensel_step(f, g, h, s, t, m):
    # one quadratic lift: f = g*h and s*g + t*h = 1, mod m -> mod m*m
    # (h monic; all polynomials are int lists low-to-high)
    M = m * m
    e = _msub([c % M for c in f], _mmul(g, h, M), M)
    q, r = _mdivmod_monic(_mmul(s, e, M), h, M)
    g_star = _madd(_madd(g, _mmul(t, e, M), M), _mmul(q, g, M), M)
    h_star = _madd(h, r, M)
    b = _msub(_madd(_mmul(s, g_star, M), _mmul(t, h_star, M), M), [1], M)
    c2, d2 = _mdivmod_monic(_mmul(s, b, M), h_star, M)
    s_star = _msub(s, d2, M)
    t_star = _msub(_msub(t, _mmul(t, b, M), M), _mmul(c2, g_star, M), M)
    return g_star, h_star, s_star, t_star


def _lift_split(f, left, right, p, target):
    # f monic mod target^?; left/right are factor lists mod p
    g = [1]
    for u in left:
        g = _fpx.mul(g, u, p)
    h = [1]
    for u in right:
        h = _fpx.mul(h, u, p)
    s, t = _fpx.bezout(g, h, p)
    m = p
    while m < target:
        fm = [c % (m * m) for c in f]
        while fm and fm[-1] == 0:
            fm.pop()
        g, h, s, t = _hensel_step(fm, g, h, s, t, m)
        m *= m
    return g, h, m


def _hensel_lift_all(f, factors_p, p, target):
    """Lift the mod-p factorization of monic f to modulus >= target.

    Returns (lifted factor list, modulus).  Divide and conquer over the
    factor list; each split is lifted quadratically.
    """
    if len(factors_p) == 1:
        m = p
        while m < target:
            m *= m
        fm = [c % m for c in f]
        while fm and fm[-1] == 0:
            fm.pop()
        return [fm], m
    half = len(factors_p) // 2
    left, right = factors_p[:half], factors_p[half:]
    g, h, m = _lift_split(f, left, right, p, target)
    lg, _ = _hensel_lift_all(g, left, p, target)
    lh, _ = _hensel_lift_all(h, right, p, target)
    return lg + lh, m


def _sym(c: int, m: int) -> int:
    c %= m
    return c - m if c > m // 2 else c


def _zassenhaus_squarefree(F: IntPoly, prime_index: int) -> list[IntPoly]:
    """Irreducible factors of a primitive squarefree positive-lc polynomial."""
    n = F.degree
    if n == 1:
        return [F]
    b = F.lc
    # monic transform: b^(n-1) * F(x/b); leading term becomes 1 exactly
    Fm = IntPoly([c * b ** (n - 1 - i) for i, c in enumerate(F.coeffs[:-1])] + [1])
    primes = _good_primes(Fm, 3, prime_index)
    patterns = [_fpx.degree_pattern([c % p for c in Fm.coeffs], p) for p in primes]
    allowed = functools.reduce(
        lambda a, b2: a & b2, (_subset_sums(pat, n) for pat in patterns)
    )
    if allowed == 0:
        return [F]
    p = primes[0]
    rng = random.Random(f"{p}:{Fm.coeffs}")
    modular = _fpx.factor_squarefree_monic([c % p for c in Fm.coeffs], p, rng)
    bound = _mignotte_bound(Fm)
    lifted, modulus = _hensel_lift_all(list(Fm.coeffs), modular, p, 2 * bound + 1)
    # subset recombination over the lifted factors
    remaining = list(range(len(lifted)))
    target = Fm
    found_monic: list[IntPoly] = []
    size = 1
    while 2 * size <= len(remaining):
        retry = True
        while retry:
            retry = False
            for combo in itertools.combinations(remaining, size):
                dsum = sum(len(lifted[i]) - 1 for i in combo)
                if not (allowed >> dsum) & 1:
                    continue
                prod = _mul_mod(combo, lifted, modulus)
                cand = IntPoly([_sym(c, modulus) for c in prod])
                quo, rem2 = divmod_monic(target, cand)
                if rem2.is_zero:
                    found_monic.append(cand)
                    for i in combo:
                        remaining.remove(i)
                    target = quo
                    retry = True
                    break
        size += 1
    if target.degree > 0:
        found_monic.append(target)
    # undo the monic transform: factors of F are primitive parts of h(b*x)
    out = [h.shift_scale(b).primitive() for h in found_monic]
    out.sort(key=lambda h: (h.degree, h.coeffs))
    return out


def _mul_mod(combo, lifted, modulus):
    prod = [1]
    for i in combo:
        nxt = [0] * (len(prod) + len(lifted[i]) - 1)
        for a, ca in enumerate(prod):
            if ca:
                for bj, cb in enumerate(lifted[i]):
                    nxt[a + bj] = (nxt[a + bj] + ca * cb) % modulus
        prod = nxt
    return prod


def factor(f: IntPoly, prime_index: int = 0) -> tuple[int, list[tuple[IntPoly, int]]]:
    """Complete factorization over Q.

    Returns (unit, [(irreducible, multiplicity), ...]) with each irreducible
    primitive and positive-lc (monic when f is monic), sorted by (degree,
    coeffs), and unit * product == f exactly.  prime_index shifts the choice
    of modular primes; any value must reproduce the same factors.
    """
    if f.is_zero:
        raise ZeroPolynomial("factor of zero polynomial")
    if f.degree > FACTOR_DEGREE_CAP:
        raise ValueError(f"degree {f.degree} beyond factoring scope")
    if f.degree == 0:
        return f.coeffs[0], []
    F = f.primitive()
    unit = f.lc // F.lc
    out: list[tuple[IntPoly, int]] = []
    for sq, mult in _yun(F):
        for irr in _zassenhaus_squarefree(sq, prime_index):
            out.append((irr, mult))
    out.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    prod = IntPoly([unit])
    for irr, mult in out:
        prod = prod * irr ** mult
    if prod != f:
        raise InvariantViolation("factor product does not reproduce the input")
    return unit, out


@functools.lru_cache(maxsize=None)
def cyclotomic(m: int) -> IntPoly:
    """The m-th cyclotomic polynomial.

    >>> cyclotomic(12)
    IntPoly([1, 0, -1, 0, 1])
    """
    if m < 1:
        raise ValueError("m must be positive")
    if m == 1:
        return IntPoly([-1, 1])
    num = IntPoly([0] * m + [1]) - IntPoly([1])
    for d in range(1, m):
        if m % d == 0:
            num, r = divmod_monic(num, cyclotomic(d))
            if not r.is_zero:
                raise AssertionError("cyclotomic division must be exact")
    return num
