# -*- encoding: utf-8 -*-
from functools import total_ordering

INF_SENTINEL = "inf"


@total_ordering
class ExtNat(object):
    """
    Integer extended with +infinity. Infinity absorbs + and * (by a positive
    factor) and min(Infinity, x) = x. Finite values may go negative while an
    inequality is being evaluated.
    """

    __slots__ = ("value",)

    def __init__(self, value=None):
        if value is not None and not isinstance(value, int):
            raise TypeError(f"ExtNat takes an int or None, not {value!r}")
        self.value = value

    @classmethod
    def coerce(cls, other):
        if isinstance(other, ExtNat):
            return other
        if isinstance(other, int):
            return cls(other)
        return NotImplemented

    @property
    def is_infinite(self):
        return self.value is None

    def __int__(self):
        if self.value is None:
            raise OverflowError("Infinity has no integer value")
        return self.value

    def __eq__(self, other):
        other = ExtNat.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.value == other.value

    def __hash__(self):
        return hash(float("inf")) if self.value is None else hash(self.value)

    def __lt__(self, other):
        other = ExtNat.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.value is None:
            return False
        if other.value is None:
            return True
        return self.value < other.value

    def __add__(self, other):
        other = ExtNat.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            return INFINITY
        return ExtNat(self.value + other.value)

    __radd__ = __add__

    def __neg__(self):
        if self.is_infinite:
            raise ArithmeticError("Negative infinity is not representable")
        return ExtNat(-self.value)

    def __sub__(self, other):
        other = ExtNat.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_infinite:
            raise ArithmeticError("Cannot subtract infinity")
        if self.is_infinite:
            return INFINITY
        return ExtNat(self.value - other.value)

    def __rsub__(self, other):
        return ExtNat.coerce(other) - self

    def __mul__(self, other):
        other = ExtNat.coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_infinite or other.is_infinite:
            factor = other if self.is_infinite else self
            if not factor.is_infinite and factor.value <= 0:
                raise ArithmeticError(f"Infinity times {factor.value} is undefined here")
            return INFINITY
        return ExtNat(self.value * other.value)

    __rmul__ = __mul__

    def __repr__(self):
        return "ExtNat(inf)" if self.is_infinite else f"ExtNat({self.value})"

    def __str__(self):
        return INF_SENTINEL if self.is_infinite else str(self.value)

    def to_json(self):
        return INF_SENTINEL if self.is_infinite else self.value


INFINITY = ExtNat(None)


def ext_min(*values):
    return min(ExtNat.coerce(v) for v in values)
