"""Exact coefficient domains.

Everything algebraic in this package is generic over a *domain*: a small
stateless object bundling the exact ring/field operations, the order (via
``sign``) and a few conversion hooks.  Elements are plain values (ints,
Fractions, coefficient tuples, ...) interpreted by their domain.  This is
the usual domain-object pattern from computer algebra systems, kept
deliberately small: no coercion framework, no element wrappers.

Domains provided here:

* ``ZZ``   -- arbitrary-precision integers (ordered ring).
* ``QQ``   -- rationals as ``fractions.Fraction`` (ordered archimedean field).
* ``PolyDomain(base, var)`` -- univariate polynomials over ``base`` as an
  ordered ring; the indeterminate is deemed positive infinite, so the sign
  of a polynomial is the sign of its leading coefficient.
* ``FracDomain(ring)`` -- fraction field of an ordered integral domain;
  fractions are kept with a sign-positive denominator and are only reduced
  when the ring supports gcd (the integers).

The real-closure module adds ``AlgebraicExt`` on top of these.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class DomainError(Exception):
    """Operation not defined for this domain or these operands."""


class Domain:
    is_field = False
    archimedean = False

    # -- ring structure -------------------------------------------------
    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def is_zero(self, a):
        raise NotImplementedError

    def eq(self, a, b):
        return self.is_zero(self.sub(a, b))

    # -- order ----------------------------------------------------------
    def sign(self, a) -> int:
        """Sign in {-1, 0, +1}; total and consistent with the ring order."""
        raise DomainError(f"{self!r} is not ordered")

    def abs(self, a):
        return self.neg(a) if self.sign(a) < 0 else a

    # -- division -------------------------------------------------------
    def invert(self, a):
        raise DomainError(f"{self!r} is not a field")

    def div(self, a, b):
        return self.mul(a, self.invert(b))

    def exact_div(self, a, b):
        """a / b when b exactly divides a; raises DomainError otherwise."""
        if self.is_field:
            return self.div(a, b)
        raise DomainError(f"exact_div not available in {self!r}")

    # -- conversions ----------------------------------------------------
    def from_int(self, n: int):
        raise NotImplementedError

    def from_fraction(self, q: Fraction):
        raise DomainError(f"{self!r} cannot absorb general rationals")

    def to_fraction(self, a) -> Fraction | None:
        """Exact rational value of ``a`` if it has one, else None."""
        return None

    def approx(self, a, prec: int) -> tuple[Fraction, Fraction]:
        """Rational interval [lo, hi] containing a with hi-lo <= 2**-prec.

        Only archimedean domains support this.
        """
        raise DomainError(f"{self!r} has no rational approximation")

    # -- misc -----------------------------------------------------------
    def key(self):
        """Hashable identity used for caching engine state per domain."""
        return id(self)

    def fmt(self, a) -> str:
        return str(a)

    def fmt_is_atomic(self, a) -> bool:
        """True when fmt(a) needs no parentheses inside a product."""
        return True


class IntegerRing(Domain):
    archimedean = True

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def sign(self, a):
        return (a > 0) - (a < 0)

    def exact_div(self, a, b):
        q, r = divmod(a, b)
        if r:
            raise DomainError(f"{b} does not divide {a} in ZZ")
        return q

    def from_int(self, n):
        return n

    def to_fraction(self, a):
        return Fraction(a)

    def approx(self, a, prec):
        f = Fraction(a)
        return f, f

    def key(self):
        return "ZZ"

    def __repr__(self):
        return "ZZ"


class RationalField(Domain):
    is_field = True
    archimedean = True

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a == 0

    def eq(self, a, b):
        return a == b

    def sign(self, a):
        return (a > 0) - (a < 0)

    def invert(self, a):
        if a == 0:
            raise ZeroDivisionError("1/0 in QQ")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in QQ")
        return a / b

    def from_int(self, n):
        return Fraction(n)

    def from_fraction(self, q):
        return q

    def to_fraction(self, a):
        return a

    def approx(self, a, prec):
        return a, a

    def key(self):
        return "QQ"

    def fmt(self, a):
        return str(a)

    def fmt_is_atomic(self, a):
        return a.denominator == 1 and a >= 0

    def __repr__(self):
        return "QQ"


ZZ = IntegerRing()
QQ = RationalField()


class PolyDomain(Domain):
    """Univariate polynomials over ``base`` as an ordered ring.

    Elements are ``UPoly`` values from :mod:`nsarith.upoly`.  The order makes
    the indeterminate positive infinite: sign = sign of the leading
    coefficient, which is exactly the order used by the polynomial models.
    """

    def __init__(self, base: Domain, var: str = "Z"):
        self.base = base
        self.var = var

    @property
    def zero(self):
        from .upoly import UPoly
        return UPoly(self.base, ())

    @property
    def one(self):
        from .upoly import UPoly
        return UPoly(self.base, (self.base.one,))

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def is_zero(self, a):
        return a.is_zero()

    def eq(self, a, b):
        return (a - b).is_zero()

    def sign(self, a):
        if a.is_zero():
            return 0
        return self.base.sign(a.lc())

    def exact_div(self, a, b):
        return a.exact_div(b)

    def from_int(self, n):
        from .upoly import UPoly
        return UPoly.const(self.base, self.base.from_int(n))

    def from_fraction(self, q):
        from .upoly import UPoly
        return UPoly.const(self.base, self.base.from_fraction(q))

    def to_fraction(self, a):
        if a.is_zero():
            return Fraction(0)
        if a.degree() == 0:
            return self.base.to_fraction(a.cs[0])
        return None

    def key(self):
        return ("Poly", self.var, self.base.key())

    def fmt(self, a):
        return a.fmt(self.var)

    def fmt_is_atomic(self, a):
        return False

    def __repr__(self):
        return f"{self.base!r}[{self.var}]"


class FracDomain(Domain):
    """Fraction field of an ordered integral domain.

    Elements are ``(num, den)`` pairs with ``sign(den) > 0``; they are reduced
    only over ZZ (no gcd is available in the polynomial-model rings, whose
    fraction fields this class serves).
    """

    is_field = True

    def __init__(self, ring: Domain):
        self.ring = ring
        self.archimedean = ring.archimedean

    def new(self, num, den):
        s = self.ring.sign(den)
        if s == 0:
            raise ZeroDivisionError(f"zero denominator in {self!r}")
        if s < 0:
            num, den = self.ring.neg(num), self.ring.neg(den)
        if isinstance(self.ring, IntegerRing):
            g = _int_gcd(num, den)
            if g > 1:
                num, den = num // g, den // g
        return (num, den)

    @property
    def zero(self):
        return (self.ring.zero, self.ring.one)

    @property
    def one(self):
        return (self.ring.one, self.ring.one)

    def add(self, a, b):
        an, ad = a
        bn, bd = b
        r = self.ring
        return self.new(r.add(r.mul(an, bd), r.mul(bn, ad)), r.mul(ad, bd))

    def neg(self, a):
        return (self.ring.neg(a[0]), a[1])

    def mul(self, a, b):
        r = self.ring
        return self.new(r.mul(a[0], b[0]), r.mul(a[1], b[1]))

    def is_zero(self, a):
        return self.ring.is_zero(a[0])

    def eq(self, a, b):
        r = self.ring
        return r.eq(r.mul(a[0], b[1]), r.mul(b[0], a[1]))

    def sign(self, a):
        return self.ring.sign(a[0])

    def invert(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError(f"1/0 in {self!r}")
        return self.new(a[1], a[0])

    def from_int(self, n):
        return (self.ring.from_int(n), self.ring.one)

    def from_fraction(self, q):
        return self.new(self.ring.from_int(q.numerator),
                        self.ring.from_int(q.denominator))

    def from_ring(self, x):
        return (x, self.ring.one)

    def to_fraction(self, a):
        n = self.ring.to_fraction(a[0])
        d = self.ring.to_fraction(a[1])
        if n is None or d is None:
            return None
        return n / d

    def approx(self, a, prec):
        if not self.archimedean:
            raise DomainError(f"{self!r} has no rational approximation")
        f = self.to_fraction(a)
        if f is None:
            raise DomainError("non-rational element in archimedean FracDomain")
        return f, f

    def key(self):
        return ("Frac", self.ring.key())

    def fmt(self, a):
        num, den = a
        if self.ring.eq(den, self.ring.one):
            return self.ring.fmt(num)
        ns = self.ring.fmt(num)
        ds = self.ring.fmt(den)
        if not self.ring.fmt_is_atomic(num):
            ns = f"({ns})"
        if not self.ring.fmt_is_atomic(den):
            ds = f"({ds})"
        return f"{ns}/{ds}"

    def fmt_is_atomic(self, a):
        return self.ring.eq(a[1], self.ring.one) and self.ring.fmt_is_atomic(a[0])

    def __repr__(self):
        return f"Frac({self.ring!r})"
