"""Exact coefficient arithmetic in the half-power variable s (s^2 = q).

Values are reduced fractions of integer-coefficient Laurent polynomials in
a single formal variable s.  Working in the rational-function field rather
than with power series keeps substitutions like s -> s^{-1} total, which
the generating-series comparisons need.

Canonical form
--------------
A nonzero value is stored as ``s^shift * num / den`` where

* ``num`` and ``den`` are integer polynomial coefficient tuples (index =
  exponent) with nonzero constant term,
* ``num`` and ``den`` have no common factor in Z[s] (contents coprime and
  primitive parts coprime),
* the constant coefficient of ``den`` is positive.

Zero is ``(shift=0, num=(), den=(1,))``.  Equal values therefore have
bit-identical representations, so equality and hashing are structural.

The polynomial gcd uses a single-prime modular candidate (verified by
exact trial division) with a primitive pseudo-remainder sequence as the
fallback, so reductions stay fast on the q-Pochhammer-shaped denominators
that dominate this engine's workload.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd as _igcd
from typing import Iterable, Mapping

Poly = tuple  # integer coefficients, little-endian, no leading zeros; () is 0

_PRIME = (1 << 61) - 1  # Mersenne prime used for the modular gcd candidate


# ---------------------------------------------------------------------------
# integer polynomial helpers (little-endian coefficient tuples)
# ---------------------------------------------------------------------------

def _strip(cs: list) -> Poly:
    while cs and cs[-1] == 0:
        cs.pop()
    return tuple(cs)


def _padd(a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return _strip(out)


def _pneg(a: Poly) -> Poly:
    return tuple(-c for c in a)


def _pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if ca:
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
    return tuple(out)


def _pscale(a: Poly, c: int) -> Poly:
    if c == 0:
        return ()
    return tuple(c * x for x in a)


def _pshift(a: Poly, k: int) -> Poly:
    """Multiply by s^k, k >= 0."""
    if not a or k == 0:
        return a
    return (0,) * k + a


def _content(a: Poly) -> int:
    g = 0
    for c in a:
        if c:
            g = _igcd(g, abs(c))
            if g == 1:
                return 1
    return g


def _pdiv_exact(a: Poly, b: Poly):
    """Quotient a // b when the division is exact over Z, else None."""
    if not a:
        return ()
    da, db = len(a) - 1, len(b) - 1
    if da < db:
        return None
    lb = b[-1]
    r = list(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = r[k + db]
        if c:
            if c % lb:
                return None
            c //= lb
            q[k] = c
            for i, bc in enumerate(b):
                r[k + i] -= c * bc
    if any(r):
        return None
    return _strip(q)


def _gf_mod(a: list, b: list) -> list:
    """Remainder of a by b over GF(_PRIME); b nonzero, both little-endian."""
    p = _PRIME
    db = len(b) - 1
    inv = pow(b[-1], p - 2, p)
    r = list(a)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] % p
        if c:
            c = c * inv % p
            for i in range(db + 1):
                r[k + i] = (r[k + i] - c * b[i]) % p
    del r[db:]
    while r and r[-1] == 0:
        r.pop()
    return r


def _gf_gcd(a: list, b: list) -> list:
    while b:
        a, b = b, _gf_mod(a, b)
    p = _PRIME
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _prem(f: Poly, g: Poly) -> Poly:
    """Pseudo-remainder of f by g (up to a power of g's leading coefficient)."""
    dg = len(g) - 1
    lg = g[-1]
    r = list(f)
    while len(r) - 1 >= dg:
        lr = r.pop()
        k = len(r) - dg
        for i in range(len(r)):
            r[i] *= lg
        for i in range(dg):
            r[k + i] -= lr * g[i]
        while r and r[-1] == 0:
            r.pop()
        if not r:
            break
    return tuple(r)


def _primitive(a: Poly) -> Poly:
    c = _content(a)
    if c <= 1:
        return a
    return tuple(x // c for x in a)


def _pgcd_prs(a: Poly, b: Poly) -> Poly:
    """Primitive pseudo-remainder sequence gcd of primitive polynomials."""
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = _prem(a, b)
        a, b = b, _primitive(r)
    if a[-1] < 0:
        a = _pneg(a)
    return a


def _pgcd(a: Poly, b: Poly) -> Poly:
    """Gcd of primitive nonzero integer polynomials, positive leading coeff."""
    if len(a) == 1 or len(b) == 1:
        return (1,)
    la, lb = abs(a[-1]), abs(b[-1])
    if la < _PRIME and lb < _PRIME:
        gp = _gf_gcd([c % _PRIME for c in a], [c % _PRIME for c in b])
        if len(gp) == 1:
            return (1,)
        gamma = _igcd(la, lb)
        half = _PRIME // 2
        lifted = []
        for c in gp:
            c = c * gamma % _PRIME
            lifted.append(c - _PRIME if c > half else c)
        cand = _primitive(_strip(lifted))
        if cand and cand[-1] < 0:
            cand = _pneg(cand)
        if cand and _pdiv_exact(a, cand) is not None and _pdiv_exact(b, cand) is not None:
            return cand
    return _pgcd_prs(a, b)


def _gcd_full(a: Poly, b: Poly) -> Poly:
    """Gcd in Z[s] of nonzero polynomials: content gcd times primitive gcd."""
    ca, cb = _content(a), _content(b)
    c = _igcd(ca, cb)
    pa = a if ca == 1 else tuple(x // ca for x in a)
    pb = b if cb == 1 else tuple(x // cb for x in b)
    g = _pgcd(pa, pb)
    if c != 1:
        g = _pscale(g, c)
    return g


# ---------------------------------------------------------------------------
# the coefficient field
# ---------------------------------------------------------------------------

class QHalfRational:
    """A rational function in s with integer coefficients, in canonical form."""

    __slots__ = ("_shift", "_num", "_den")

    def __init__(self, terms: Mapping[int, int] | int = 0):
        """Build a Laurent polynomial from an exponent -> coefficient map."""
        if isinstance(terms, int):
            terms = {0: terms} if terms else {}
        if not terms:
            self._shift, self._num, self._den = 0, (), (1,)
            return
        lo = min(terms)
        hi = max(terms)
        cs = [0] * (hi - lo + 1)
        for e, c in terms.items():
            cs[e - lo] = c
        num = _strip(cs)
        if not num:
            self._shift, self._num, self._den = 0, (), (1,)
            return
        v = next(i for i, c in enumerate(num) if c)
        self._shift = lo + v
        self._num = num[v:]
        self._den = (1,)

    @classmethod
    def _make(cls, shift: int, num: Poly, den: Poly) -> QHalfRational:
        x = object.__new__(cls)
        x._shift = shift
        x._num = num
        x._den = den
        return x

    @classmethod
    def _canonical(cls, shift: int, num: Poly, den: Poly) -> QHalfRational:
        if not den:
            raise ZeroDivisionError("zero denominator")
        if not num:
            return _ZERO
        vn = next(i for i, c in enumerate(num) if c)
        vd = next(i for i, c in enumerate(den) if c)
        shift += vn - vd
        num = num[vn:]
        den = den[vd:]
        if den != (1,):
            cn, cd = _content(num), _content(den)
            c = _igcd(cn, cd)
            if c > 1:
                num = tuple(x // c for x in num)
                den = tuple(x // c for x in den)
                cn //= c
                cd //= c
            if len(num) > 1 and len(den) > 1:
                pn = num if cn == 1 else tuple(x // cn for x in num)
                pd = den if cd == 1 else tuple(x // cd for x in den)
                g = _pgcd(pn, pd)
                if len(g) > 1:
                    num = _pdiv_exact(num, g)
                    den = _pdiv_exact(den, g)
            if den[0] < 0:
                num = _pneg(num)
                den = _pneg(den)
        return cls._make(shift, num, den)

    # -- queries ----------------------------------------------------------

    def is_zero(self) -> bool:
        return not self._num

    def is_polynomial(self) -> bool:
        return self._den == (1,) and self._shift >= 0

    @property
    def numerator_terms(self) -> dict[int, int]:
        return {self._shift + i: c for i, c in enumerate(self._num) if c}

    @property
    def denominator_terms(self) -> dict[int, int]:
        return {i: c for i, c in enumerate(self._den) if c}

    # -- ring/field operations --------------------------------------------

    @staticmethod
    def _coerce(x) -> QHalfRational:
        if isinstance(x, QHalfRational):
            return x
        if isinstance(x, int):
            return QHalfRational(x)
        return NotImplemented

    def __add__(self, other) -> QHalfRational:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._num:
            return other
        if not other._num:
            return self
        u, v = self._shift, other._shift
        m = min(u, v)
        n1 = _pshift(self._num, u - m)
        n2 = _pshift(other._num, v - m)
        d1, d2 = self._den, other._den
        if d1 == d2:
            return self._canonical(m, _padd(n1, n2), d1)
        g = _gcd_full(d1, d2)
        if g == (1,):
            num = _padd(_pmul(n1, d2), _pmul(n2, d1))
            if not num:
                return _ZERO
            vn = next(i for i, c in enumerate(num) if c)
            den = _pmul(d1, d2)
            return self._make(m + vn, num[vn:], den)
        d2r = _pdiv_exact(d2, g)
        num = _padd(_pmul(n1, d2r), _pmul(n2, _pdiv_exact(d1, g)))
        return self._canonical(m, num, _pmul(d1, d2r))

    __radd__ = __add__

    def __neg__(self) -> QHalfRational:
        if not self._num:
            return self
        return self._make(self._shift, _pneg(self._num), self._den)

    def __sub__(self, other) -> QHalfRational:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> QHalfRational:
        return (-self) + other

    def __mul__(self, other) -> QHalfRational:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._num or not other._num:
            return _ZERO
        # monomial fast path: scaling cannot create a common factor with a
        # denominator whose content is already coprime to the numerator's
        if len(self._num) == 1 and self._den == (1,):
            c = self._num[0]
            if c == 1:
                return self._make(self._shift + other._shift, other._num, other._den)
            return self._canonical(
                self._shift + other._shift, _pscale(other._num, c), other._den
            )
        if len(other._num) == 1 and other._den == (1,):
            c = other._num[0]
            if c == 1:
                return self._make(self._shift + other._shift, self._num, self._den)
            return self._canonical(
                self._shift + other._shift, _pscale(self._num, c), self._den
            )
        n1, d1 = self._num, self._den
        n2, d2 = other._num, other._den
        if d2 != (1,):
            g = _gcd_full(n1, d2)
            if g != (1,):
                n1 = _pdiv_exact(n1, g)
                d2 = _pdiv_exact(d2, g)
        if d1 != (1,):
            g = _gcd_full(n2, d1)
            if g != (1,):
                n2 = _pdiv_exact(n2, g)
                d1 = _pdiv_exact(d1, g)
        num = _pmul(n1, n2)
        den = _pmul(d1, d2)
        if den[0] < 0:
            num = _pneg(num)
            den = _pneg(den)
        return self._make(self._shift + other._shift, num, den)

    __rmul__ = __mul__

    def inverse(self) -> QHalfRational:
        if not self._num:
            raise ZeroDivisionError("inversion of zero")
        num, den = self._den, self._num
        if den[0] < 0:
            num = _pneg(num)
            den = _pneg(den)
        return self._make(-self._shift, num, den)

    def __truediv__(self, other) -> QHalfRational:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> QHalfRational:
        return self.inverse() * other

    def __pow__(self, e: int) -> QHalfRational:
        if e == 0:
            return _ONE
        base = self if e > 0 else self.inverse()
        out = _ONE
        n = abs(e)
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (
            self._shift == other._shift
            and self._num == other._num
            and self._den == other._den
        )

    def __hash__(self):
        return hash((self._shift, self._num, self._den))

    # -- substitutions ------------------------------------------------------

    def invert_s(self) -> QHalfRational:
        """Substitute s -> s^{-1}; total on rational functions."""
        if not self._num:
            return self
        num = tuple(reversed(self._num))
        den = tuple(reversed(self._den))
        shift = -(self._shift + len(self._num) - len(self._den))
        return self._canonical(shift, num, den)

    # -- rendering ----------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: ``c*s^e`` terms ascending, fraction in parens."""
        num_s = _render_poly(self._shift, self._num)
        if self._den == (1,):
            return num_s
        return f"({num_s})/({_render_poly(0, self._den)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QHalfRational<{self.render()}>"


def _render_poly(shift: int, poly: Poly) -> str:
    if not poly:
        return "0"
    return " + ".join(f"{c}*s^{shift + i}" for i, c in enumerate(poly) if c)


_ZERO = QHalfRational._make(0, (), (1,))
_ONE = QHalfRational._make(0, (1,), (1,))

ZERO = _ZERO
ONE = _ONE


def s_power(e: int) -> QHalfRational:
    """The monomial s^e."""
    return QHalfRational._make(e, (1,), (1,))


def neg_s_power(e: int) -> QHalfRational:
    """The monomial (-s)^e = (-1)^e s^e."""
    return QHalfRational._make(e, (1,) if e % 2 == 0 else (-1,), (1,))


def fraction(num: Mapping[int, int], den: Mapping[int, int]) -> QHalfRational:
    """Build num/den from exponent -> coefficient maps and canonicalize."""
    return QHalfRational(num) / QHalfRational(den)


@lru_cache(maxsize=None)
def poch(n: int) -> QHalfRational:
    """q-Pochhammer (q; q)_n in s: the product of (1 - s^{2i}) for i = 1..n."""
    if n < 0:
        raise ValueError("poch requires n >= 0")
    if n == 0:
        return _ONE
    prev = poch(n - 1)
    factor = QHalfRational({0: 1, 2 * n: -1})
    return QHalfRational._make(0, _pmul(prev._num, factor._num), (1,))


@lru_cache(maxsize=None)
def gaussian_binomial(n: int, m: int) -> QHalfRational:
    """Gaussian binomial [n; m] in q = s^2; always a polynomial."""
    if m < 0 or n < 0 or m > n:
        raise ValueError(f"gaussian_binomial requires 0 <= m <= n, got ({n}, {m})")
    num = poch(n)._num
    q = _pdiv_exact(num, _pmul(poch(m)._num, poch(n - m)._num))
    assert q is not None, "q-Pochhammer quotient was not a polynomial"
    return QHalfRational._make(0, q, (1,))


def laurent_expand(x: QHalfRational, order: int) -> list[tuple[int, int]]:
    """Laurent-series coefficients of x around s = 0 up to exponent ``order``.

    Returns the nonzero (exponent, coefficient) pairs in ascending order.
    Raises ValueError if a requested coefficient is not an integer (which
    cannot happen for values whose canonical denominator has constant
    coefficient 1).
    """
    if x.is_zero():
        return []
    shift, num, den = x._shift, x._num, x._den
    count = order - shift + 1
    if count <= 0:
        return []
    if den == (1,):
        return [(shift + i, c) for i, c in enumerate(num[:count]) if c]
    d0 = den[0]
    cs: list = []
    if d0 == 1:
        for i in range(count):
            acc = num[i] if i < len(num) else 0
            for j in range(1, min(i, len(den) - 1) + 1):
                acc -= den[j] * cs[i - j]
            cs.append(acc)
    else:
        for i in range(count):
            acc = Fraction(num[i] if i < len(num) else 0)
            for j in range(1, min(i, len(den) - 1) + 1):
                acc -= den[j] * cs[i - j]
            cs.append(acc / d0)
        for c in cs:
            if c.denominator != 1:
                raise ValueError("expansion has non-integer coefficients")
        cs = [int(c) for c in cs]
    return [(shift + i, c) for i, c in enumerate(cs) if c]


def qsum(values: Iterable[QHalfRational]) -> QHalfRational:
    """Sum of rational values; empty sums are zero."""
    out = _ZERO
    for v in values:
        out = out + v
    return out
