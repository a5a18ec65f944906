"""Exact scalar arithmetic: arbitrary-precision rationals and prime fields.

All computations in this package are exact; no floating point anywhere.
The default field is the rationals (every relation in scope has integer
coefficients, so rational arithmetic is characteristic-free for those
inputs).  A prime-field mode exists for robustness experiments.
"""

from fractions import Fraction


class RationalField:
    """The field of arbitrary-precision rationals (elements are Fraction)."""

    characteristic = 0

    def __init__(self):
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def of(self, x):
        return Fraction(x)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


QQ = RationalField()


class FpElement:
    """An element of a prime field, stored as a reduced residue."""

    __slots__ = ("val", "q")

    def __init__(self, val, q):
        self.val = val % q
        self.q = q

    def _coerce(self, other):
        if isinstance(other, FpElement):
            if other.q != self.q:
                raise ValueError("mixed prime fields")
            return other.val
        if isinstance(other, int):
            return other % self.q
        if isinstance(other, Fraction):
            return (other.numerator * pow(other.denominator, -1, self.q)) % self.q
        return NotImplemented

    def __add__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val + v, self.q)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val - v, self.q)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(v - self.val, self.q)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val * v, self.q)

    __rmul__ = __mul__

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(self.val * pow(v, -1, self.q), self.q)

    def __rtruediv__(self, other):
        v = self._coerce(other)
        if v is NotImplemented:
            return NotImplemented
        return FpElement(v * pow(self.val, -1, self.q), self.q)

    def __neg__(self):
        return FpElement(-self.val, self.q)

    def __bool__(self):
        return self.val != 0

    def __eq__(self, other):
        if isinstance(other, FpElement):
            return self.q == other.q and self.val == other.val
        if isinstance(other, int):
            return self.val == other % self.q
        return NotImplemented

    def __hash__(self):
        return hash((self.val, self.q))

    def __repr__(self):
        return "%d (mod %d)" % (self.val, self.q)


def _is_prime(q):
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


class PrimeField:
    """The prime field F_q for a prime q."""

    def __init__(self, q):
        if not _is_prime(q):
            raise ValueError("prime field order must be prime, got %r" % (q,))
        self.q = q
        self.characteristic = q
        self.zero = FpElement(0, q)
        self.one = FpElement(1, q)

    def of(self, x):
        if isinstance(x, FpElement):
            if x.q != self.q:
                raise ValueError("mixed prime fields")
            return x
        if isinstance(x, int):
            return FpElement(x, self.q)
        f = Fraction(x)
        return FpElement(
            f.numerator * pow(f.denominator, -1, self.q), self.q
        )

    def __repr__(self):
        return "GF(%d)" % self.q

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.q == self.q

    def __hash__(self):
        return hash(("GF", self.q))


def field_from_spec(text):
    """Parse a scalar-mode string: 'rat' or 'fp:<q>'."""
    if text == "rat":
        return QQ
    if text.startswith("fp:"):
        return PrimeField(int(text[3:]))
    raise ValueError("unknown scalar mode %r (expected 'rat' or 'fp:<q>')" % text)
