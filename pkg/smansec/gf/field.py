"""
Prime fields GF(p) and their elements.

A ``FieldPrime`` is checked for primality once at construction; elements
are immutable residues that carry their field so mixing fields is caught
at the operation that would mix them.
"""

from dataclasses import dataclass
from typing import Union

from sympy import isprime

from ..errors import FieldDomainError, UsageError

MAX_MODULUS = 1 << 31


@dataclass(frozen=True)
class FieldPrime:
    """The prime modulus p of GF(p)."""
    p: int

    def __post_init__(self):
        if isinstance(self.p, bool) or not isinstance(self.p, int):
            raise UsageError(f"Field modulus must be an integer, got {type(self.p).__name__}")
        if not 2 <= self.p < MAX_MODULUS:
            raise UsageError(f"Field modulus {self.p} outside [2, 2^31)")
        if not isprime(self.p):
            raise UsageError(f"Field modulus {self.p} is not prime")

    def __call__(self, value: int) -> "FieldElement":
        """Reduce an integer into the field."""
        return FieldElement(int(value) % self.p, self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(0, self)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(1, self)

    def inverse(self, value: int) -> int:
        """Inverse of a residue; raises FieldDomainError for zero."""
        value %= self.p
        if value == 0:
            raise FieldDomainError(f"Zero has no inverse in GF({self.p})")
        return pow(value, -1, self.p)

    def __str__(self) -> str:
        return f"GF({self.p})"


Operand = Union["FieldElement", int]


@dataclass(frozen=True)
class FieldElement:
    """A residue in [0, p) together with its field."""
    value: int
    field: FieldPrime

    def __post_init__(self):
        if not 0 <= self.value < self.field.p:
            raise UsageError(f"Residue {self.value} outside [0, {self.field.p})")

    def _coerce(self, other: Operand) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise UsageError(f"Field mismatch: {self.field} and {other.field}")
            return other.value
        if isinstance(other, int) and not isinstance(other, bool):
            return other % self.field.p
        raise UsageError(f"Cannot combine {type(other).__name__} with a field element")

    def _wrap(self, value: int) -> "FieldElement":
        return FieldElement(value % self.field.p, self.field)

    def __add__(self, other: Operand) -> "FieldElement":
        return self._wrap(self.value + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Operand) -> "FieldElement":
        return self._wrap(self.value - self._coerce(other))

    def __rsub__(self, other: Operand) -> "FieldElement":
        return self._wrap(self._coerce(other) - self.value)

    def __neg__(self) -> "FieldElement":
        return self._wrap(-self.value)

    def __mul__(self, other: Operand) -> "FieldElement":
        return self._wrap(self.value * self._coerce(other))

    __rmul__ = __mul__

    def inv(self) -> "FieldElement":
        return FieldElement(self.field.inverse(self.value), self.field)

    def __truediv__(self, other: Operand) -> "FieldElement":
        return self._wrap(self.value * self.field.inverse(self._coerce(other)))

    def __pow__(self, exponent: int) -> "FieldElement":
        if isinstance(exponent, FieldElement):
            raise UsageError("Exponents are integers, not field elements")
        if exponent < 0:
            return self.inv() ** (-exponent)
        return FieldElement(pow(self.value, exponent, self.field.p), self.field)

    def __bool__(self) -> bool:
        return self.value != 0

    def __int__(self) -> int:
        return self.value

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"GF{self.field.p}({self.value})"
