"""Exact coefficient arithmetic in one formal variable.

Three value types cover everything the character algorithms need:

* ``LaurentPoly`` -- sparse Laurent polynomial with arbitrary-precision
  integer coefficients.  Every final character value is one of these.
* ``RationalFn`` -- quotient of two LaurentPolys kept in a canonical form
  (denominator an honest polynomial with nonzero constant term, positive
  leading coefficient, numerator/denominator coprime with joint integer
  content cleared) so equal values compare and print identically.
* ``PolyV`` -- dense polynomial in an auxiliary variable ``v`` whose
  coefficients are LaurentPolys, used for generating-function expansions.

The variable is formal; it is only named ("q" or "t") when printing.
No floating point appears anywhere.
"""

from __future__ import annotations

from math import gcd


class ExactnessError(ArithmeticError):
    """A division the algebra guarantees to be exact was not.

    This always signals an internal inconsistency upstream, never bad
    user input.  ``remainder`` carries the offending residue when one is
    available.
    """

    def __init__(self, message, remainder=None):
        super().__init__(message)
        self.remainder = remainder


class LaurentPoly:
    """Sparse Laurent polynomial over the integers.

    Terms live in a dict ``{exponent: coefficient}`` with no stored zero
    coefficients; the zero polynomial has an empty map.  Instances are
    treated as immutable: every operation returns a new object.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        if terms:
            for e, c in terms.items():
                if c:
                    cleaned[e] = c
        self.terms = cleaned

    @classmethod
    def _raw(cls, terms):
        # trusted constructor: caller guarantees no zero coefficients
        self = object.__new__(cls)
        self.terms = terms
        return self

    @classmethod
    def const(cls, c):
        return cls._raw({0: c}) if c else cls._raw({})

    @classmethod
    def from_pairs(cls, pairs):
        """Build from ``[[exponent, coefficient-as-decimal-string], ...]``."""
        return cls({int(e): int(c) for e, c in pairs})

    def to_pairs(self):
        """Serialize as ascending-exponent ``[[exp, str(coeff)], ...]``."""
        return [[e, str(self.terms[e])] for e in sorted(self.terms)]

    # -- predicates and inspection ------------------------------------

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: 1}

    def is_constant(self):
        return not self.terms or set(self.terms) == {0}

    def is_polynomial(self):
        """True when no negative exponents occur."""
        return all(e >= 0 for e in self.terms)

    def constant_value(self):
        if not self.is_constant():
            raise ValueError("not a constant")
        return self.terms.get(0, 0)

    def min_exp(self):
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return min(self.terms)

    def max_exp(self):
        if not self.terms:
            raise ValueError("zero polynomial has no exponents")
        return max(self.terms)

    def coeff(self, e):
        return self.terms.get(e, 0)

    def leading_coeff(self):
        return self.terms[self.max_exp()]

    def content(self):
        """Positive gcd of the coefficients (0 for the zero polynomial)."""
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
        return g

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        elif not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._raw({e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # -- Laurent-specific helpers ----------------------------------------

    def shift(self, k):
        """Multiply by the k-th power of the variable."""
        if not k:
            return self
        return LaurentPoly._raw({e + k: c for e, c in self.terms.items()})

    def invert_variable(self):
        """Substitute the variable by its reciprocal (an involution)."""
        return LaurentPoly._raw({-e: c for e, c in self.terms.items()})

    def evaluate_at_one(self):
        """Sum of the coefficients."""
        return sum(self.terms.values())

    def divexact(self, other):
        """Exact division; raises ExactnessError if the quotient is not
        an integer Laurent polynomial."""
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return ZERO
        a, b = self.min_exp(), other.min_exp()
        q, r = _divmod_honest(self.shift(-a), other.shift(-b))
        if not r.is_zero():
            raise ExactnessError(
                f"inexact division: ({self}) / ({other})", remainder=r.shift(a))
        return q.shift(a - b)

    # -- printing ------------------------------------------------------

    def format(self, var="q"):
        """Deterministic plain form: ascending exponents, explicit
        coefficients, ``q^k`` notation."""
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = self.terms[e]
            if e == 0:
                parts.append(str(c))
                continue
            base = var if e == 1 else f"{var}^{e}"
            if c == 1:
                parts.append(base)
            elif c == -1:
                parts.append(f"-{base}")
            else:
                parts.append(f"{c}*{base}")
        return " + ".join(parts)

    def latex(self, var="q"):
        """Descending powers, display style: ``2q^{3}-3q^{2}+q``."""
        if not self.terms:
            return "0"
        chunks = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            if e == 0:
                body = str(abs(c))
            else:
                power = var if e == 1 else f"{var}^{{{e}}}"
                body = power if abs(c) == 1 else f"{abs(c)}{power}"
            if not chunks:
                chunks.append(("-" if c < 0 else "") + body)
            else:
                chunks.append(("-" if c < 0 else "+") + body)
        return "".join(chunks)

    def __repr__(self):
        return f"LaurentPoly<{self.format('t')}>"


ZERO = LaurentPoly._raw({})
ONE = LaurentPoly._raw({0: 1})
T = LaurentPoly._raw({1: 1})


def monomial(coeff, exp):
    return LaurentPoly._raw({exp: coeff}) if coeff else ZERO


def _divmod_honest(a, b):
    """Long division of honest polynomials over the integers.

    Stops as soon as a leading coefficient fails to divide, so the
    returned remainder is nonzero exactly when a/b is not an integer
    polynomial with this leading sequence -- sufficient for exactness
    checks and for gcd pseudo-division support.
    """
    q = {}
    rem = dict(a.terms)
    db = b.max_exp()
    lb = b.terms[db]
    while rem:
        dr = max(rem)
        if dr < db:
            break
        lr = rem[dr]
        c, residue = divmod(lr, lb)
        if residue:
            break
        q[dr - db] = c
        for e, bc in b.terms.items():
            ee = e + dr - db
            s = rem.get(ee, 0) - c * bc
            if s:
                rem[ee] = s
            else:
                rem.pop(ee, None)
    return LaurentPoly._raw(q), LaurentPoly(rem)


def _primitive(p):
    """Divide out the content, keeping the sign of the leading coefficient."""
    c = p.content()
    if c <= 1:
        return p
    return LaurentPoly._raw({e: cc // c for e, cc in p.terms.items()})


def _pseudo_rem(a, b):
    # remainder of lc(b)^k * a mod b for some k >= deg a - deg b + 1;
    # callers take primitive parts so the exact scaling is irrelevant
    db = b.max_exp()
    lb = b.terms[db]
    rem = a
    while not rem.is_zero() and rem.max_exp() >= db:
        dr = rem.max_exp()
        lr = rem.leading_coeff()
        rem = rem * lb - b * monomial(lr, dr - db)
    return rem


def poly_gcd(a, b):
    """Primitive gcd of two honest polynomials, positive leading coefficient.

    Primitive pseudo-remainder sequence; degrees here stay small so no
    subresultant bookkeeping is needed.
    """
    if a.is_zero() and b.is_zero():
        return ZERO
    a, b = _primitive(a), _primitive(b)
    while not b.is_zero():
        a, b = b, _primitive(_pseudo_rem(a, b))
    if not a.is_zero() and a.leading_coeff() < 0:
        a = -a
    return a


class RationalFn:
    """Quotient of LaurentPolys in canonical form.

    The denominator is an honest polynomial with nonzero constant term
    and positive leading coefficient; any pure variable power is shifted
    into the numerator.  Numerator and denominator are coprime over the
    rationals with joint integer content cleared, so canonical forms are
    reproducible bit-exactly and structural equality is meaningful.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=ONE):
        if isinstance(num, int):
            num = LaurentPoly.const(num)
        if isinstance(den, int):
            den = LaurentPoly.const(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ZERO, ONE
            return
        a, b = num.min_exp(), den.min_exp()
        n, d = num.shift(-a), den.shift(-b)
        if not d.is_constant():
            g = poly_gcd(n, d)
            if not g.is_constant():
                n = n.divexact(g)
                d = d.divexact(g)
        c = gcd(n.content(), d.content())
        if c > 1:
            n = LaurentPoly._raw({e: cc // c for e, cc in n.terms.items()})
            d = LaurentPoly._raw({e: cc // c for e, cc in d.terms.items()})
        if d.leading_coeff() < 0:
            n, d = -n, -d
        self.num = n.shift(a - b)
        self.den = d

    @staticmethod
    def _coerce(x):
        if isinstance(x, RationalFn):
            return x
        if isinstance(x, (int, LaurentPoly)):
            return RationalFn(x)
        return None

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = RationalFn._coerce(other)
        if other is None:
            return NotImplemented
        if self.den == other.den:
            return RationalFn(self.num + other.num, self.den)
        return RationalFn(self.num * other.den + other.num * self.den,
                          self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        out = object.__new__(RationalFn)
        out.num, out.den = -self.num, self.den
        return out

    def __sub__(self, other):
        other = RationalFn._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = RationalFn._coerce(other)
        if other is None:
            return NotImplemented
        return RationalFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = RationalFn._coerce(other)
        if other is None:
            return NotImplemented
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return RationalFn(self.num * other.den, self.den * other.num)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a non-negative integer")
        return RationalFn(self.num ** n, self.den ** n)

    def __eq__(self, other):
        other = RationalFn._coerce(other)
        if other is None:
            return NotImplemented
        # cross-multiplication: independent of representation
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def invert_variable(self):
        return RationalFn(self.num.invert_variable(), self.den.invert_variable())

    def to_laurent(self):
        """Convert to LaurentPoly; exact iff the denominator is the unit."""
        if self.den.is_one():
            return self.num
        try:
            return self.num.divexact(self.den)
        except ExactnessError as err:
            raise ExactnessError(
                f"rational function ({self.num})/({self.den}) is not a "
                "Laurent polynomial", remainder=err.remainder) from None

    def to_pairs(self):
        return {"num": self.num.to_pairs(), "den": self.den.to_pairs()}

    def format(self, var="t"):
        if self.den.is_one():
            return self.num.format(var)
        return f"({self.num.format(var)}) / ({self.den.format(var)})"

    def __repr__(self):
        return f"RationalFn<{self.format('t')}>"


class PolyV:
    """Dense polynomial in the auxiliary variable v over LaurentPolys."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = [c if isinstance(c, LaurentPoly) else LaurentPoly.const(c)
                  for c in coeffs]
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.coeffs = tuple(coeffs)

    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    def __eq__(self, other):
        if not isinstance(other, PolyV):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __repr__(self):
        inner = ", ".join(c.format("t") for c in self.coeffs)
        return f"PolyV[{inner}]"


def polyv_mul(a, b, truncate_at=None):
    if not a.coeffs or not b.coeffs:
        return PolyV([])
    deg = a.degree() + b.degree()
    if truncate_at is not None:
        deg = min(deg, truncate_at)
    out = [ZERO] * (deg + 1)
    for i, ca in enumerate(a.coeffs):
        if ca.is_zero() or i > deg:
            continue
        for j, cb in enumerate(b.coeffs):
            if i + j > deg:
                break
            if not cb.is_zero():
                out[i + j] = out[i + j] + ca * cb
    return PolyV(out)


def polyv_product(factors, truncate_at=None):
    """Exact product of PolyV factors, optionally truncated in v-degree."""
    result = PolyV([ONE])
    for f in factors:
        result = polyv_mul(result, f, truncate_at)
    return result
