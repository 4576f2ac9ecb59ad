"""
Exact arithmetic in number fields K = Q[t]/(m(t)) for a monic integer minimal
polynomial m.

Elements are kept as integer numerators over one common positive denominator,
fully reduced, so equality and hashing are coefficient-wise.
"""

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, List, Sequence, Tuple, Union

import numpy as np
from sympy import totient

from ..custom_errors import (
    FieldMismatchError,
    NonInvertibleElementError,
    PolynomialError,
    ZeroInversionError,
)

Scalar = Union[int, Fraction, "FieldElement"]


@dataclass(frozen=True)
class FieldDescriptor:
    """K = Q[t]/(m(t)); `min_poly` lists the integer coefficients of m, low degree first"""
    min_poly: Tuple[int, ...]
    symbol: str = "t"

    def __post_init__(self):
        poly = tuple(self.min_poly)
        object.__setattr__(self, "min_poly", poly)
        if len(poly) < 2:
            raise PolynomialError("Minimal polynomial must have degree at least 1")
        if any(not isinstance(c, int) or isinstance(c, bool) for c in poly):
            raise PolynomialError("Minimal polynomial coefficients must be integers")
        if poly[-1] != 1:
            raise PolynomialError("Minimal polynomial must be monic")
        if not self.symbol.isidentifier():
            raise PolynomialError(f"Field symbol must be an identifier: {self.symbol!r}")

    @property
    def degree(self) -> int:
        return len(self.min_poly) - 1

    def element(self, coeffs: Iterable) -> "FieldElement":
        return FieldElement(self, coeffs)

    def scalar(self, value: Union[int, Fraction]) -> "FieldElement":
        return FieldElement(self, [value])

    def coerce(self, value) -> "FieldElement":
        """Accept a FieldElement, an int/Fraction/'p/q' scalar or a coefficient list"""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"Element of {value.field} used where {self} was expected")
            return value
        if isinstance(value, (list, tuple)):
            return FieldElement(self, value)
        return FieldElement(self, [value])

    @property
    def zero(self) -> "FieldElement":
        return FieldElement._raw(self, (0,) * self.degree, 1)

    @property
    def one(self) -> "FieldElement":
        return self.scalar(1)

    @property
    def gen(self) -> "FieldElement":
        """The class of t"""
        return FieldElement(self, [0, 1])

    def root_of_unity_bound(self) -> int:
        """Largest n with phi(n) <= 2 * degree.

        A finite-order element of PGL(2, K) has eigenvalue ratio a primitive
        n-th root of unity inside a quadratic extension of K.
        """
        return _root_of_unity_bound(self.degree)

    def complex_root(self) -> complex:
        """Root of m used for the complex embedding: smallest positive argument"""
        roots = np.roots(list(reversed(self.min_poly)))

        def key(z):
            arg = cmath.phase(complex(z))
            return (0, arg) if arg > 1e-12 else (1, -arg)

        return complex(sorted(roots, key=key)[0])

    def __str__(self) -> str:
        return f"Q[{self.symbol}]/({_poly_str(self.min_poly, self.symbol)})"


@lru_cache(maxsize=None)
def _root_of_unity_bound(degree: int) -> int:
    limit = 2 * degree
    # phi(n) >= sqrt(n / 2)
    search_to = 2 * limit * limit + 2
    return max(n for n in range(1, search_to + 1) if int(totient(n)) <= limit)


RATIONALS = FieldDescriptor((0, 1), "t")
EISENSTEIN = FieldDescriptor((1, 1, 1), "t")
GAUSSIAN = FieldDescriptor((1, 0, 1), "i")
CYCLOTOMIC5 = FieldDescriptor((1, 1, 1, 1, 1), "t")


def _reduce_int_poly(nums: List[int], modulus: Sequence[int]) -> List[int]:
    d = len(modulus) - 1
    nums = list(nums)
    for k in range(len(nums) - 1, d - 1, -1):
        c = nums[k]
        if c:
            base = k - d
            for j in range(d):
                nums[base + j] -= c * modulus[j]
            nums[k] = 0
    nums = nums[:d]
    return nums + [0] * (d - len(nums))


def _normalized(nums: List[int], den: int) -> Tuple[Tuple[int, ...], int]:
    if den < 0:
        nums = [-n for n in nums]
        den = -den
    g = math.gcd(den, *nums)
    if g > 1:
        nums = [n // g for n in nums]
        den //= g
    return tuple(nums), den


class FieldElement:
    """An element of Q[t]/(m(t)); immutable"""

    __slots__ = ("field", "_nums", "_den", "_hash")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable):
        fracs = [_to_fraction(c) for c in coeffs]
        if not fracs:
            fracs = [Fraction(0)]
        den = math.lcm(*(f.denominator for f in fracs))
        nums = [f.numerator * (den // f.denominator) for f in fracs]
        nums = _reduce_int_poly(nums, field.min_poly)
        self.field = field
        self._nums, self._den = _normalized(nums, den)
        self._hash = None

    @classmethod
    def _raw(cls, field: FieldDescriptor, nums: Tuple[int, ...], den: int) -> "FieldElement":
        obj = cls.__new__(cls)
        obj.field = field
        obj._nums = nums
        obj._den = den
        obj._hash = None
        return obj

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(n, self._den) for n in self._nums)

    def is_zero(self) -> bool:
        return not any(self._nums)

    def is_rational(self) -> bool:
        return not any(self._nums[1:])

    def __bool__(self) -> bool:
        return not self.is_zero()

    def _coerce(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"Cannot combine elements of {self.field} and {other.field}")
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return FieldElement(self.field, [other])
        return NotImplemented

    def __add__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self._den == other._den:
            nums = [a + b for a, b in zip(self._nums, other._nums)]
            den = self._den
        else:
            nums = [a * other._den + b * self._den for a, b in zip(self._nums, other._nums)]
            den = self._den * other._den
        return FieldElement._raw(self.field, *_normalized(nums, den))

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        return FieldElement._raw(self.field, tuple(-n for n in self._nums), self._den)

    def __sub__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._nums, other._nums
        if not any(b[1:]):
            nums = [x * b[0] for x in a]
        elif not any(a[1:]):
            nums = [a[0] * y for y in b]
        else:
            prod = [0] * (len(a) + len(b) - 1)
            for i, x in enumerate(a):
                if x:
                    for j, y in enumerate(b):
                        prod[i + j] += x * y
            nums = _reduce_int_poly(prod, self.field.min_poly)
        return FieldElement._raw(self.field, *_normalized(nums, self._den * other._den))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroInversionError("Cannot invert zero")
        return _inverse(self)

    def __truediv__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other: Scalar) -> "FieldElement":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int) -> "FieldElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, FieldElement):
            return self.field == other.field and self._nums == other._nums and self._den == other._den
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.is_rational() and Fraction(self._nums[0], self._den) == other
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._nums[0], self._den))
            else:
                self._hash = hash((self.field, self._nums, self._den))
        return self._hash

    def to_complex(self, root: complex) -> complex:
        return sum(complex(c) * root ** k for k, c in enumerate(self.coeffs))

    def to_json(self) -> Union[int, str, List[Union[int, str]]]:
        """Coefficient array (int shorthand for integers); rationals as 'p/q' strings"""
        encoded = [_fraction_json(c) for c in self.coeffs]
        while len(encoded) > 1 and encoded[-1] == 0:
            encoded.pop()
        return encoded[0] if len(encoded) == 1 and isinstance(encoded[0], int) else encoded

    def __str__(self) -> str:
        return _poly_str(self.coeffs, self.field.symbol)

    def __repr__(self) -> str:
        return f"FieldElement({self}, {self.field})"


@lru_cache(maxsize=8192)
def _inverse(a: FieldElement) -> FieldElement:
    modulus = [Fraction(c) for c in a.field.min_poly]
    g, s = _xgcd([Fraction(c) for c in a.coeffs], modulus)
    if len(g) != 1:
        raise NonInvertibleElementError(
            f"{a} is not invertible in {a.field}: it shares a factor with the minimal polynomial"
        )
    return FieldElement(a.field, [c / g[0] for c in s])


def _to_fraction(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("Booleans are not field coefficients")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"Unsupported coefficient type: {type(value).__name__}")


def _fraction_json(value: Fraction) -> Union[int, str]:
    return value.numerator if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _poly_str(coeffs: Sequence, symbol: str) -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            power = symbol if k == 1 else f"{symbol}^{k}"
            body = power if mag == 1 else f"{mag}*{power}"
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


# --- polynomial helpers over Q (lists low degree first) ---

def _trim(p: List[Fraction]) -> List[Fraction]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _is_zero_poly(p: List[Fraction]) -> bool:
    return all(c == 0 for c in p)


def _poly_sub(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return _trim([x - y for x, y in zip(a, b)])


def _poly_mul(a: List[Fraction], b: List[Fraction]) -> List[Fraction]:
    prod = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            prod[i + j] += x * y
    return _trim(prod)


def _poly_divmod(a: List[Fraction], b: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    a, b = _trim(a), _trim(b)
    if len(a) < len(b):
        return [Fraction(0)], a
    q = [Fraction(0)] * (len(a) - len(b) + 1)
    r = list(a)
    lead = b[-1]
    for k in range(len(a) - len(b), -1, -1):
        c = r[k + len(b) - 1] / lead
        q[k] = c
        if c:
            for j, bj in enumerate(b):
                r[k + j] -= c * bj
    return _trim(q), _trim(r[:len(b) - 1] or [Fraction(0)])


def _xgcd(a: List[Fraction], m: List[Fraction]) -> Tuple[List[Fraction], List[Fraction]]:
    """Return (g, s) with s*a = g mod m, g = gcd(a, m)"""
    r0, r1 = _trim(a), _trim(m)
    s0, s1 = [Fraction(1)], [Fraction(0)]
    while not _is_zero_poly(r1):
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    return r0, s0


# --- operation-level API ---

def field_add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def field_mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def field_inv(a: FieldElement) -> FieldElement:
    return a.inverse()
