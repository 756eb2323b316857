"""Arbitrary-precision arithmetic modulo a prime.

FieldElement is the value type used for curve coordinates.  Elements are
immutable and always held in canonical reduced form, 0 <= value < modulus.
The integer substrate is gmpy2's mpz; inversion goes through gmpy2.invert,
GMP's extended-Euclidean modular inverse.
"""

from gmpy2 import invert, mpz

from .errors import IncompatibleModuliError, InvalidModulusError, NonInvertibleError


def parse_int(text):
    """Parse a decimal or 0x-prefixed hexadecimal integer string."""
    text = text.strip()
    if text.lower().startswith(("0x", "-0x")):
        return int(text, 16)
    return int(text, 10)


def inv_mod(value, modulus):
    """Inverse of value modulo a prime, via the extended Euclidean algorithm.

    Raises NonInvertibleError when value is congruent to zero.
    """
    if value % modulus == 0:
        raise NonInvertibleError("zero has no multiplicative inverse")
    return invert(value, modulus)


class FieldElement:
    """An integer in [0, modulus) under mod-p ring arithmetic.

    Operands of binary operations must share the same modulus; plain ints
    are accepted and coerced into the element's field.
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value, modulus):
        modulus = mpz(modulus)
        if modulus < 2:
            raise InvalidModulusError(f"modulus must be >= 2, got {modulus}")
        object.__setattr__(self, "value", mpz(value) % modulus)
        object.__setattr__(self, "modulus", modulus)

    def __setattr__(self, name, val):
        raise AttributeError("FieldElement is immutable")

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.modulus != self.modulus:
                raise IncompatibleModuliError(
                    f"moduli differ: {self.modulus} vs {other.modulus}"
                )
            return other.value
        if isinstance(other, (int, type(mpz(0)))):
            return mpz(other) % self.modulus
        return None

    def __add__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value + v, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value - v, self.modulus)

    def __rsub__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(v - self.value, self.modulus)

    def __mul__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return FieldElement(self.value * v, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(-self.value, self.modulus)

    def inverse(self):
        """Multiplicative inverse; self * self.inverse() == 1."""
        if self.value == 0:
            raise NonInvertibleError("zero has no multiplicative inverse")
        return FieldElement(invert(self.value, self.modulus), self.modulus)

    def __truediv__(self, other):
        v = self._coerce(other)
        if v is None:
            return NotImplemented
        return self * FieldElement(v, self.modulus).inverse()

    def __pow__(self, exponent):
        return FieldElement(pow(self.value, mpz(exponent), self.modulus), self.modulus)

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.modulus == other.modulus and self.value == other.value
        if isinstance(other, (int, type(mpz(0)))):
            return self.value == mpz(other) % self.modulus
        return NotImplemented

    def __hash__(self):
        return hash((int(self.value), int(self.modulus)))

    def __int__(self):
        return int(self.value)

    def __repr__(self):
        return f"FieldElement({self.value:#x}, modulus={self.modulus:#x})"
