"""Generic dense univariate polynomials and the real-root counting toolkit.

A ``UPoly`` is an immutable coefficient tuple (lowest degree first, trailing
zeros trimmed) over a coefficient :class:`~nsarith.rings.Domain`.  The zero
polynomial is the empty tuple.

On top of the ring arithmetic this module provides the machinery every higher
layer leans on: Sturm sequences, root counting on intervals with infinite
endpoints, Tarski queries, and resultants via the subresultant
pseudo-remainder sequence.  Everything is exact; signs of coefficients are
decided by the domain, never by floating point.  Over non-archimedean
coefficient fields this is what makes root counting work at all.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd

from .rings import Domain, DomainError, QQ, ZZ

NEG_INF = "-inf"
POS_INF = "+inf"


class UPoly:
    __slots__ = ("dom", "cs")

    def __init__(self, dom: Domain, cs):
        cs = list(cs)
        while cs and dom.is_zero(cs[-1]):
            cs.pop()
        self.dom = dom
        self.cs = tuple(cs)

    # -- constructors ----------------------------------------------------
    @staticmethod
    def const(dom: Domain, c) -> "UPoly":
        return UPoly(dom, (c,))

    @staticmethod
    def var(dom: Domain) -> "UPoly":
        return UPoly(dom, (dom.zero, dom.one))

    @staticmethod
    def from_ints(dom: Domain, ints) -> "UPoly":
        return UPoly(dom, tuple(dom.from_int(n) for n in ints))

    # -- basic structure --------------------------------------------------
    def is_zero(self) -> bool:
        return not self.cs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.cs) - 1

    def lc(self):
        if not self.cs:
            raise DomainError("zero polynomial has no leading coefficient")
        return self.cs[-1]

    def coeff(self, i: int):
        return self.cs[i] if i < len(self.cs) else self.dom.zero

    def __eq__(self, other):
        return (isinstance(other, UPoly) and self.dom.key() == other.dom.key()
                and self.cs == other.cs)

    def __hash__(self):
        return hash((self.dom.key(), self.cs))

    # -- ring arithmetic ---------------------------------------------------
    def __add__(self, other):
        d = self.dom
        a, b = self.cs, other.cs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = d.add(out[i], c)
        return UPoly(d, out)

    def __neg__(self):
        d = self.dom
        return UPoly(d, tuple(d.neg(c) for c in self.cs))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        d = self.dom
        if self.is_zero() or other.is_zero():
            return UPoly(d, ())
        out = [d.zero] * (len(self.cs) + len(other.cs) - 1)
        for i, a in enumerate(self.cs):
            if d.is_zero(a):
                continue
            for j, b in enumerate(other.cs):
                out[i + j] = d.add(out[i + j], d.mul(a, b))
        return UPoly(d, out)

    def scale(self, c) -> "UPoly":
        d = self.dom
        return UPoly(d, tuple(d.mul(c, x) for x in self.cs))

    def shift_up(self, k: int) -> "UPoly":
        """Multiply by Y**k."""
        if self.is_zero():
            return self
        return UPoly(self.dom, (self.dom.zero,) * k + self.cs)

    def __pow__(self, n: int):
        r = UPoly.const(self.dom, self.dom.one)
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    # -- division ----------------------------------------------------------
    def divrem(self, other) -> tuple["UPoly", "UPoly"]:
        """Quotient and remainder over a field (deg rem < deg divisor)."""
        d = self.dom
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if not d.is_field:
            raise DomainError("divrem needs field coefficients; use prem")
        rem = list(self.cs)
        dB = other.degree()
        inv_lc = d.invert(other.lc())
        q = [d.zero] * max(0, len(rem) - dB)
        while len(rem) - 1 >= dB and rem:
            k = len(rem) - 1 - dB
            c = d.mul(rem[-1], inv_lc)
            q[k] = c
            for i in range(dB + 1):
                rem[k + i] = d.sub(rem[k + i], d.mul(c, other.cs[i]))
            while rem and d.is_zero(rem[-1]):
                rem.pop()
        return UPoly(d, q), UPoly(d, rem)

    def exact_div(self, other) -> "UPoly":
        """Exact quotient in R[Y]; raises DomainError when not divisible."""
        d = self.dom
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        if d.is_field:
            q, r = self.divrem(other)
            if not r.is_zero():
                raise DomainError("inexact polynomial division")
            return q
        rem = list(self.cs)
        dB = other.degree()
        q = [d.zero] * max(0, len(rem) - dB)
        while rem and len(rem) - 1 >= dB:
            k = len(rem) - 1 - dB
            c = d.exact_div(rem[-1], other.lc())
            q[k] = c
            for i in range(dB + 1):
                rem[k + i] = d.sub(rem[k + i], d.mul(c, other.cs[i]))
            while rem and d.is_zero(rem[-1]):
                rem.pop()
        if rem:
            raise DomainError("inexact polynomial division")
        return UPoly(d, q)

    def scalar_exact_div(self, c) -> "UPoly":
        d = self.dom
        return UPoly(d, tuple(d.exact_div(x, c) for x in self.cs))

    def prem(self, other) -> "UPoly":
        """Pseudo-remainder: rem(lc(other)**(dA-dB+1) * self, other)."""
        d = self.dom
        dA, dB = self.degree(), other.degree()
        if dB < 0:
            raise ZeroDivisionError("pseudo-division by zero")
        if dA < dB:
            return self
        rem = list(self.cs)
        lb = other.lc()
        for k in range(dA - dB, -1, -1):
            top = rem[k + dB] if k + dB < len(rem) else d.zero
            for i in range(len(rem)):
                rem[i] = d.mul(rem[i], lb)
            for i in range(dB + 1):
                rem[k + i] = d.sub(rem[k + i], d.mul(top, other.cs[i]))
            # top coefficient cancels exactly
            rem = rem[: k + dB]
            while rem and d.is_zero(rem[-1]):
                rem.pop()
            if len(rem) - 1 < dB:
                break
        return UPoly(d, rem)

    # -- calculus / transforms ----------------------------------------------
    def derivative(self) -> "UPoly":
        d = self.dom
        return UPoly(d, tuple(d.mul(d.from_int(i), c)
                              for i, c in enumerate(self.cs) if i > 0))

    def eval(self, x):
        d = self.dom
        acc = d.zero
        for c in reversed(self.cs):
            acc = d.add(d.mul(acc, x), c)
        return acc

    def eval_in(self, dom: Domain, x, embed):
        """Evaluate at x living in ``dom``; ``embed`` maps coefficients in."""
        acc = dom.zero
        for c in reversed(self.cs):
            acc = dom.add(dom.mul(acc, x), embed(c))
        return acc

    def compose(self, other) -> "UPoly":
        acc = UPoly(self.dom, ())
        for c in reversed(self.cs):
            acc = acc * other + UPoly.const(self.dom, c)
        return acc

    def shift_arg(self, c) -> "UPoly":
        """p(Y + c), computed by synthetic Taylor shift."""
        d = self.dom
        cs = list(self.cs)
        n = len(cs)
        for i in range(n - 1):
            for j in range(n - 2, i - 1, -1):
                cs[j] = d.add(cs[j], d.mul(c, cs[j + 1]))
        return UPoly(d, cs)

    def scale_arg(self, c) -> "UPoly":
        """p(c * Y)."""
        d = self.dom
        out = []
        p = d.one
        for a in self.cs:
            out.append(d.mul(a, p))
            p = d.mul(p, c)
        return UPoly(d, out)

    def reverse(self) -> "UPoly":
        """Y**deg * p(1/Y); p must have nonzero constant term for root use."""
        return UPoly(self.dom, tuple(reversed(self.cs)))

    def map_coeffs(self, dom: Domain, f) -> "UPoly":
        return UPoly(dom, tuple(f(c) for c in self.cs))

    # -- printing ------------------------------------------------------------
    def fmt(self, var: str = "Y") -> str:
        d = self.dom
        if self.is_zero():
            return "0"
        parts = []
        for i in range(len(self.cs) - 1, -1, -1):
            c = self.cs[i]
            if d.is_zero(c):
                continue
            neg = False
            try:
                neg = d.sign(c) < 0
            except DomainError:
                pass
            body = c if not neg else d.neg(c)
            cstr = d.fmt(body)
            if i == 0:
                term = cstr if d.fmt_is_atomic(body) else f"({cstr})"
            else:
                x = var if i == 1 else f"{var}^{i}"
                if d.eq(body, d.one):
                    term = x
                else:
                    term = (f"{cstr}*{x}" if d.fmt_is_atomic(body)
                            else f"({cstr})*{x}")
            if not parts:
                parts.append(f"-{term}" if neg else term)
            else:
                parts.append(f"- {term}" if neg else f"+ {term}")
        return " ".join(parts)

    def __repr__(self):
        return f"UPoly({self.fmt()})"


# -- gcd / square-free over a field ------------------------------------------

def poly_gcd(f: UPoly, g: UPoly) -> UPoly:
    """Monic gcd over a field."""
    d = f.dom
    a, b = f, g
    while not b.is_zero():
        a, b = b, a.divrem(b)[1]
    if a.is_zero():
        return a
    return a.scale(d.invert(a.lc()))


def squarefree_part(f: UPoly) -> UPoly:
    """f / gcd(f, f'), monic-normalized away from repeated roots."""
    if f.is_zero():
        raise DomainError("square-free part of 0")
    if f.degree() == 0:
        return UPoly.const(f.dom, f.dom.one)
    g = poly_gcd(f, f.derivative())
    if g.degree() == 0:
        return f
    return f.exact_div(g)


# -- Sturm machinery -----------------------------------------------------------

def _chain_reduce(p: UPoly) -> UPoly:
    """Rescale by a positive constant to keep chain coefficients small.

    Over QQ: clear denominators and divide by the integer content.  Over a
    fraction field: clear denominators (with a sign-positive multiplier).
    Sign behaviour at every point is unchanged.
    """
    d = p.dom
    if p.is_zero():
        return p
    if d is QQ:
        den = 1
        for c in p.cs:
            den = den * c.denominator // _int_gcd(den, c.denominator)
        ints = [int(c * den) for c in p.cs]
        g = 0
        for n in ints:
            g = _int_gcd(g, n)
        if g > 1:
            ints = [n // g for n in ints]
        return UPoly(QQ, tuple(Fraction(n) for n in ints))
    new = getattr(d, "new", None)
    ring = getattr(d, "ring", None)
    if new is not None and ring is not None:       # FracDomain
        mult = ring.one
        for c in p.cs:
            if not ring.eq(c[1], ring.one):
                mult = ring.mul(mult, c[1])
        if ring.eq(mult, ring.one):
            return p
        if ring.sign(mult) < 0:
            mult = ring.neg(mult)
        m = (mult, ring.one)
        return UPoly(d, tuple(d.mul(c, m) for c in p.cs))
    return p


def sturm_sequence(f: UPoly) -> list[UPoly]:
    """Canonical Sturm chain: f, f', then negated remainders.

    The last element is an associate of gcd(f, f').  Coefficients must lie in
    an ordered field.
    """
    if f.is_zero():
        raise DomainError("Sturm chain of the zero polynomial")
    chain = [f]
    if f.degree() == 0:
        return chain
    g = f.derivative()
    while not g.is_zero():
        chain.append(g)
        r = chain[-2].divrem(g)[1]
        g = _chain_reduce(-r)
    return chain


def sturm_tarski_chain(f: UPoly, g: UPoly) -> list[UPoly]:
    """Chain of (f, f'*g) used for Tarski queries; f square-free."""
    chain = [f]
    h = _chain_reduce(f.derivative() * g)
    while not h.is_zero():
        chain.append(h)
        r = chain[-2].divrem(h)[1]
        h = _chain_reduce(-r)
    return chain


def _sign_at_inf(dom: Domain, p: UPoly, pos: bool) -> int:
    if p.is_zero():
        return 0
    s = dom.sign(p.lc())
    if not pos and p.degree() % 2 == 1:
        s = -s
    return s


def chain_signs_at(chain: list[UPoly], point) -> list[int]:
    """Signs of the chain at a K-point or at +/-infinity."""
    dom = chain[0].dom
    if point == NEG_INF:
        return [_sign_at_inf(dom, p, False) for p in chain]
    if point == POS_INF:
        return [_sign_at_inf(dom, p, True) for p in chain]
    return [dom.sign(p.eval(point)) for p in chain]


def sign_variations(signs) -> int:
    v = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev != 0 and s != prev:
            v += 1
        prev = s
    return v


def count_real_roots(f: UPoly, lo=NEG_INF, hi=POS_INF) -> int:
    """Number of distinct real roots of f in (lo, hi], in rc(K).

    Endpoints are K-elements or the +/-inf markers.  f is square-freed
    internally; for the canonical chain V(x) = V(x+eps), so V(lo) - V(hi)
    counts roots of the half-open interval directly.
    """
    if f.is_zero():
        raise DomainError("root counting for the zero polynomial")
    if f.degree() == 0:
        return 0
    sf = squarefree_part(f)
    chain = sturm_sequence(sf)
    return (sign_variations(chain_signs_at(chain, lo))
            - sign_variations(chain_signs_at(chain, hi)))


def has_root_at(f: UPoly, point) -> bool:
    return f.dom.is_zero(f.eval(point))


def tarski_query(f: UPoly, g: UPoly) -> int:
    """Sum over the real roots a of f of sign(g(a)); f nonzero, square-free."""
    if f.is_zero():
        raise DomainError("Tarski query against the zero polynomial")
    if f.degree() == 0:
        return 0
    if g.is_zero():
        return 0
    gr = g.divrem(f)[1] if g.degree() >= f.degree() else g
    if gr.is_zero():
        return 0
    chain = sturm_tarski_chain(f, gr)
    return (sign_variations(chain_signs_at(chain, NEG_INF))
            - sign_variations(chain_signs_at(chain, POS_INF)))


# -- resultants ------------------------------------------------------------------

def _subresultant_res(A: UPoly, B: UPoly):
    """res(A, B) in the convention res(A,B) = lc(A)^deg B * prod B(alpha).

    Subresultant pseudo-remainder sequence (Collins/Brown-Traub, as in
    Cohen's Algorithm 3.3.7); only ring operations and exact divisions.
    """
    d = A.dom
    s = 1
    if A.degree() < B.degree():
        if A.degree() % 2 == 1 and B.degree() % 2 == 1:
            s = -s
        A, B = B, A
    if B.is_zero():
        return d.zero
    if A.degree() == 0:
        return d.one
    g = d.one
    h = d.one
    while True:
        delta = A.degree() - B.degree()
        if A.degree() % 2 == 1 and B.degree() % 2 == 1:
            s = -s
        R = A.prem(B)
        A, B = B, R
        if B.is_zero():
            if A.degree() > 0:
                return d.zero
            break
        B = B.scalar_exact_div(d.mul(g, _dom_pow(d, h, delta)))
        g = A.lc()
        if delta == 0:
            h = h  # unchanged for equal-degree steps
        elif delta == 1:
            h = g
        else:
            h = d.exact_div(_dom_pow(d, g, delta), _dom_pow(d, h, delta - 1))
        if B.degree() == 0:
            break
    # here B is a nonzero constant and A the previous element
    dA = A.degree()
    if dA == 0:
        res = d.one  # both ended constant: deg B reached 0 with deg A 0
    elif dA == 1:
        res = B.lc()
    else:
        res = d.exact_div(_dom_pow(d, B.lc(), dA), _dom_pow(d, h, dA - 1))
    return d.mul(d.from_int(s), res)


def _dom_pow(d: Domain, a, n: int):
    r = d.one
    for _ in range(n):
        r = d.mul(r, a)
    return r


def resultant(f: UPoly, g: UPoly):
    """Resultant with res(Y - a, Y - b) = b - a; zero iff a common root.

    Computed by the subresultant pseudo-remainder sequence; equals
    lc(g)^deg f * prod over roots b of g of f(b).
    """
    if f.is_zero() or g.is_zero():
        raise DomainError("resultant of the zero polynomial")
    return _subresultant_res(g, f)


def sylvester_resultant(f: UPoly, g: UPoly):
    """Same value as :func:`resultant` via the Sylvester determinant
    (fraction-free Bareiss elimination).  Used as an independent oracle.
    """
    d = f.dom
    m, n = g.degree(), f.degree()
    if m < 0 or n < 0:
        raise DomainError("resultant of the zero polynomial")
    if m == 0:
        return _dom_pow(d, g.lc(), n)
    if n == 0:
        return _dom_pow(d, f.lc(), m)
    size = m + n
    rows = []
    gc = list(reversed(g.cs))
    fc = list(reversed(f.cs))
    for i in range(n):
        rows.append([d.zero] * i + gc + [d.zero] * (size - i - m - 1))
    for i in range(m):
        rows.append([d.zero] * i + fc + [d.zero] * (size - i - n - 1))
    # Bareiss
    sign = 1
    prev = d.one
    for k in range(size - 1):
        if d.is_zero(rows[k][k]):
            for r in range(k + 1, size):
                if not d.is_zero(rows[r][k]):
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return d.zero
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                num = d.sub(d.mul(rows[i][j], rows[k][k]),
                            d.mul(rows[i][k], rows[k][j]))
                rows[i][j] = d.exact_div(num, prev)
            rows[i][k] = d.zero
        prev = rows[k][k]
    det = rows[size - 1][size - 1]
    return d.neg(det) if sign < 0 else det


# -- integer-polynomial helpers (model M) ----------------------------------------

def zz_content(f: UPoly) -> int:
    g = 0
    for c in f.cs:
        g = _int_gcd(g, abs(int(c)))
    return g


def zz_primitive(f: UPoly) -> UPoly:
    """Primitive part with positive leading coefficient (over ZZ)."""
    if f.is_zero():
        return f
    c = zz_content(f)
    cs = [int(x) // c for x in f.cs]
    if cs[-1] < 0:
        cs = [-x for x in cs]
    return UPoly(ZZ, cs)


def zz_gcd(f: UPoly, g: UPoly) -> UPoly:
    """gcd in ZZ[Y] via QQ[Y] Euclid plus integer contents; positive lc."""
    if f.is_zero():
        return zz_primitive(g).scale(zz_content(g)) if not g.is_zero() else g
    if g.is_zero():
        return zz_primitive(f).scale(zz_content(f))
    cf, cg = zz_content(f), zz_content(g)
    fq = f.map_coeffs(QQ, Fraction)
    gq = g.map_coeffs(QQ, Fraction)
    hq = poly_gcd(fq, gq)
    den = 1
    for c in hq.cs:
        den = den * c.denominator // _int_gcd(den, c.denominator)
    h = UPoly(ZZ, tuple(int(c * den) for c in hq.cs))
    h = zz_primitive(h)
    return h.scale(_int_gcd(cf, cg))
