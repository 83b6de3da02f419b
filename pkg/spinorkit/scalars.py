"""Exact scalars for the complexified algebra: Gaussian rationals a + bi."""
import numbers
from fractions import Fraction
from typing import Union

Scalar = Union[Fraction, "GaussianRational", float, complex]


class GaussianRational:
    __slots__ = ("_real", "_imag")

    def __init__(self, real=0, imag=0):
        self._real = Fraction(real)
        self._imag = Fraction(imag)

    @property
    def real(self) -> Fraction:
        return self._real

    @property
    def imag(self) -> Fraction:
        return self._imag

    @classmethod
    def from_rational(cls, x):
        return cls(x, 0)

    def conjugate(self):
        return self.__class__(self._real, -self._imag)

    def norm(self) -> Fraction:
        return self._real * self._real + self._imag * self._imag

    def is_real(self) -> bool:
        return self._imag == 0

    def __repr__(self):
        return f"GaussianRational({self._real}, {self._imag})"

    def __str__(self):
        if self._imag == 0:
            return str(self._real)
        if self._real == 0:
            return f"{self._imag}i"
        sign = "-" if self._imag < 0 else "+"
        return f"{self._real}{sign}{abs(self._imag)}i"

    def __complex__(self):
        return complex(float(self._real), float(self._imag))

    def __bool__(self):
        return bool(self._real) or bool(self._imag)

    def __hash__(self):
        if self._imag == 0:
            return hash(self._real)
        return hash((self._real, self._imag))

    def __eq__(self, other):
        if isinstance(other, numbers.Rational):
            return self._imag == 0 and self._real == other
        if isinstance(other, self.__class__):
            return self._real == other.real and self._imag == other.imag
        if isinstance(other, numbers.Complex):
            return complex(self) == other
        return NotImplemented

    def __neg__(self):
        return self.__class__(-self._real, -self._imag)

    def __add__(self, other):
        if isinstance(other, numbers.Rational):
            return self.__class__(self._real + other, self._imag)
        if isinstance(other, self.__class__):
            return self.__class__(self._real + other.real, self._imag + other.imag)
        if isinstance(other, numbers.Complex):
            return complex(self) + other
        return NotImplemented

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, numbers.Rational):
            return self.__class__(self._real * other, self._imag * other)
        if isinstance(other, self.__class__):
            return self.__class__(
                self._real * other.real - self._imag * other.imag,
                self._real * other.imag + self._imag * other.real,
            )
        if isinstance(other, numbers.Complex):
            return complex(self) * other
        return NotImplemented

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        if isinstance(other, numbers.Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return self.__class__(self._real / other, self._imag / other)
        if isinstance(other, self.__class__):
            norm = other.norm()
            if norm == 0:
                raise ZeroDivisionError("division by zero")
            return self * other.conjugate() / norm
        if isinstance(other, numbers.Complex):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, numbers.Rational):
            return self.__class__(other) / self
        if isinstance(other, numbers.Complex):
            return other / complex(self)
        return NotImplemented


I = GaussianRational(0, 1)


def exact(value) -> Scalar:
    """Coerce ints to Fraction; keep other numeric types as given."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, numbers.Integral):
        return Fraction(value)
    if isinstance(value, (Fraction, GaussianRational, numbers.Complex)):
        return value
    raise TypeError(f"unsupported scalar {value!r}")


def conjugate(value) -> Scalar:
    if isinstance(value, numbers.Rational):
        return value
    if isinstance(value, numbers.Real):
        return value
    return value.conjugate()


def is_exact(value) -> bool:
    return isinstance(value, (numbers.Rational, GaussianRational))


def format_scalar(value) -> dict:
    """Split a scalar into string parts for JSON; "im" is omitted for real values."""
    if isinstance(value, GaussianRational):
        if value.is_real():
            return {"re": str(value.real)}
        return {"re": str(value.real), "im": str(value.imag)}
    if isinstance(value, numbers.Rational):
        return {"re": str(Fraction(value))}
    if isinstance(value, numbers.Real):
        return {"re": repr(float(value))}
    return {"re": repr(value.real), "im": repr(value.imag)}


def _parse_part(text: str):
    text = str(text).strip()
    if any(marker in text for marker in (".", "e", "E", "inf", "nan")):
        return float(text)
    return Fraction(text)


def parse_scalar(payload: dict) -> Scalar:
    real = _parse_part(payload.get("re", "0"))
    imag = _parse_part(payload.get("im", "0"))
    if isinstance(real, float) or isinstance(imag, float):
        return float(real) if imag == 0 else complex(float(real), float(imag))
    if imag == 0:
        return real
    return GaussianRational(real, imag)
