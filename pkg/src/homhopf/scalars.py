"""Exact scalars: arbitrary-precision rationals and prime fields GF(p).

Rational scalars are ``fractions.Fraction`` values (always reduced, positive
denominator).  Prime-field scalars are ``FpElement`` values with residues in
[0, p).  Both kinds support ``+ - * /`` and compare exactly; there is no
floating point anywhere in this package.
"""

from fractions import Fraction
from functools import lru_cache

from .errors import ValidationError


class FpElement:
    """A residue modulo the prime of its field."""

    __slots__ = ("field", "val")

    def __init__(self, field, val):
        self.field = field
        self.val = val % field.p

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.field is not self.field:
                raise TypeError("mixed prime fields: GF(%d) vs GF(%d)"
                                % (self.field.p, other.field.p))
            return other
        if isinstance(other, int):
            return FpElement(self.field, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val + other.val)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val - other.val)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.field, other.val - self.val)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return FpElement(self.field, self.val * other.val)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.val == 0:
            raise ZeroDivisionError("division by zero in GF(%d)" % self.field.p)
        return FpElement(self.field, self.val * pow(other.val, -1, self.field.p))

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return FpElement(self.field, -self.val)

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.field is other.field and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.field.p
        return NotImplemented

    def __hash__(self):
        return hash((self.field.p, self.val))

    def __bool__(self):
        return self.val != 0

    def __repr__(self):
        return "%d" % self.val


class RationalField:
    """The field of rationals; scalars are Fraction instances."""

    name = "rational"

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, value):
        if isinstance(value, Fraction):
            return value
        if isinstance(value, (int, str)):
            return Fraction(value)
        raise TypeError("cannot coerce %r into the rational field" % (value,))

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")


class PrimeField:
    """GF(p) for a prime p.  Instances are cached; use GF(p)."""

    def __init__(self, p):
        if not _is_prime(p):
            raise ValidationError("field modulus %r is not prime" % (p,))
        self.p = p
        self.zero = FpElement(self, 0)
        self.one = FpElement(self, 1)

    @property
    def name(self):
        return "gf(%d)" % self.p

    def __call__(self, value):
        if isinstance(value, FpElement):
            if value.field is not self:
                raise TypeError("element of %r coerced into %r" % (value.field, self))
            return value
        if isinstance(value, int):
            return FpElement(self, value)
        if isinstance(value, str):
            frac = Fraction(value)
            return self.from_rational(frac)
        raise TypeError("cannot coerce %r into %r" % (value, self))

    def from_rational(self, frac):
        if frac.denominator % self.p == 0:
            raise ZeroDivisionError(
                "denominator of %s vanishes mod %d" % (frac, self.p))
        return FpElement(self, frac.numerator * pow(frac.denominator, -1, self.p))

    def __repr__(self):
        return "GF(%d)" % self.p


def _is_prime(p):
    if not isinstance(p, int) or p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


QQ = RationalField()


@lru_cache(maxsize=None)
def GF(p):
    return PrimeField(p)


def render_scalar(x):
    """Render a scalar the way the file format stores it: int or "a/b"."""
    if isinstance(x, FpElement):
        return x.val
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return int(x)
        return "%d/%d" % (x.numerator, x.denominator)
    raise TypeError("not a scalar: %r" % (x,))
