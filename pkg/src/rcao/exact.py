"""Exact arithmetic kernel: Q(sqrt5), shifted Laurent polynomials, graded characters.

Everything here is immutable and exact.  Rationals are ``fractions.Fraction``;
character values live in the real quadratic field Q(sqrt5) so that one value
type serves both the crystallographic tables (where the sqrt5 part is zero)
and the H3/H4 tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rat = Fraction

RatLike = Union[int, Fraction]


class ExactError(Exception):
    """Base class for errors raised by the exact kernel."""


class NegativeLeading(ExactError):
    """A reduced character numerator has non-positive lowest coefficient."""


class ShiftMismatch(ExactError):
    """Addition of characters whose shifts differ by a non-integer."""


class NotReduced(ExactError):
    """An operation required a reduced graded character."""


class _Infinite:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITE"


#: Sentinel returned by :meth:`GradedCharacter.eval_at_one` for poles.
INFINITE = _Infinite()


def _rat(x: RatLike) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class QuadRat:
    """An element a + b*sqrt(5) of Q(sqrt5)."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    @staticmethod
    def of(a: RatLike, b: RatLike = 0) -> "QuadRat":
        return QuadRat(_rat(a), _rat(b))

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def as_rational(self) -> Fraction:
        if self.b != 0:
            raise ExactError(f"{self} is irrational")
        return self.a

    def conjugate(self) -> "QuadRat":
        return QuadRat(self.a, -self.b)

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def __add__(self, other) -> "QuadRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "QuadRat":
        return QuadRat(-self.a, -self.b)

    def __sub__(self, other) -> "QuadRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "QuadRat":
        return (-self) + other

    def __mul__(self, other) -> "QuadRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(
            self.a * other.a + 5 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    __rmul__ = __mul__

    def inverse(self) -> "QuadRat":
        norm = self.a * self.a - 5 * self.b * self.b
        if norm == 0:
            raise ZeroDivisionError("zero element of Q(sqrt5)")
        return QuadRat(self.a / norm, -self.b / norm)

    def __truediv__(self, other) -> "QuadRat":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> "QuadRat":
        return _coerce(other) * self.inverse()

    def __eq__(self, other) -> bool:
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self):
        return hash((self.a, self.b))

    def __repr__(self) -> str:
        if self.b == 0:
            return f"QuadRat({self.a})"
        return f"QuadRat({self.a}, {self.b})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        return f"{self.a}+{self.b}*sqrt5"


def _coerce(x) -> "QuadRat":
    if isinstance(x, QuadRat):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadRat(_rat(x), Fraction(0))
    return NotImplemented


QR_ZERO = QuadRat()
QR_ONE = QuadRat(Fraction(1), Fraction(0))


@dataclass(frozen=True)
class ShiftedLaurent:
    """t^shift * sum coeffs[k] * t^k with integer coefficients.

    ``coeffs`` is a tuple whose first and last entries are nonzero; the zero
    polynomial is the empty tuple (its shift is normalized to 0).
    """

    shift: Fraction
    coeffs: tuple[int, ...]

    @staticmethod
    def make(shift: RatLike, coeffs: Iterable[int]) -> "ShiftedLaurent":
        cs = list(coeffs)
        lead = 0
        while lead < len(cs) and cs[lead] == 0:
            lead += 1
        while len(cs) > lead and cs[-1] == 0:
            cs.pop()
        if lead == len(cs):
            return ShiftedLaurent(Fraction(0), ())
        return ShiftedLaurent(_rat(shift) + lead, tuple(cs[lead:]))

    @staticmethod
    def zero() -> "ShiftedLaurent":
        return ShiftedLaurent(Fraction(0), ())

    @staticmethod
    def constant(c: int) -> "ShiftedLaurent":
        return ShiftedLaurent.make(0, [c])

    @staticmethod
    def from_map(shift: RatLike, coeffs: Mapping[int, int]) -> "ShiftedLaurent":
        if not coeffs:
            return ShiftedLaurent.zero()
        top = max(coeffs)
        dense = [coeffs.get(k, 0) for k in range(top + 1)]
        return ShiftedLaurent.make(shift, dense)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff_at(self, exponent: RatLike) -> int:
        """Coefficient of t^exponent."""
        if self.is_zero:
            return 0
        k = _rat(exponent) - self.shift
        if k.denominator != 1 or k < 0 or k >= len(self.coeffs):
            return 0
        return self.coeffs[int(k)]

    def exponents(self) -> list[Fraction]:
        return [self.shift + k for k, c in enumerate(self.coeffs) if c != 0]

    def __add__(self, other: "ShiftedLaurent") -> "ShiftedLaurent":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        d = other.shift - self.shift
        if d.denominator != 1:
            raise ShiftMismatch(f"shift gap {d} is not an integer")
        d = int(d)
        lo = min(0, d)
        a = {k - lo: c for k, c in enumerate(self.coeffs)}
        for k, c in enumerate(other.coeffs):
            key = k + d - lo
            a[key] = a.get(key, 0) + c
        size = max(a) + 1
        return ShiftedLaurent.make(self.shift + lo, [a.get(k, 0) for k in range(size)])

    def __neg__(self) -> "ShiftedLaurent":
        return ShiftedLaurent(self.shift, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "ShiftedLaurent") -> "ShiftedLaurent":
        return self + (-other)

    def scale(self, n: int) -> "ShiftedLaurent":
        if n == 0 or self.is_zero:
            return ShiftedLaurent.zero()
        return ShiftedLaurent(self.shift, tuple(n * c for c in self.coeffs))

    def mul(self, other: "ShiftedLaurent") -> "ShiftedLaurent":
        if self.is_zero or other.is_zero:
            return ShiftedLaurent.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return ShiftedLaurent.make(self.shift + other.shift, out)

    def shifted(self, by: RatLike) -> "ShiftedLaurent":
        if self.is_zero:
            return self
        return ShiftedLaurent(self.shift + _rat(by), self.coeffs)

    def eval_at_one(self) -> int:
        return sum(self.coeffs)

    def __str__(self) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            e = self.shift + k
            if e == 0:
                parts.append(f"{c}")
            elif e == 1:
                parts.append(f"{c}*t")
            else:
                parts.append(f"{c}*t^{e}")
        return " + ".join(parts).replace("+ -", "- ")


def _divide_by_one_minus_t(coeffs: tuple[int, ...]) -> tuple[int, ...] | None:
    """Quotient of sum c_k t^k by (1 - t), or None if not divisible."""
    # (1 - t) * sum q_k t^k has coefficients q_k - q_{k-1}.
    q = []
    acc = 0
    for c in coeffs:
        acc += c
        q.append(acc)
    if acc != 0:  # remainder = value at t=1
        return None
    q.pop()
    return tuple(q)


@dataclass(frozen=True)
class GradedCharacter:
    """numerator / (1-t)^den_power."""

    numerator: ShiftedLaurent
    den_power: int

    @staticmethod
    def make(numerator: ShiftedLaurent, den_power: int) -> "GradedCharacter":
        if den_power < 0:
            raise ExactError("negative denominator power")
        return GradedCharacter(numerator, den_power).reduce()

    def reduce(self) -> "GradedCharacter":
        """Canonical form: (1-t) does not divide the numerator."""
        num, n = self.numerator, self.den_power
        if num.is_zero:
            return GradedCharacter(ShiftedLaurent.zero(), 0)
        while n > 0:
            q = _divide_by_one_minus_t(num.coeffs)
            if q is None:
                break
            num = ShiftedLaurent.make(num.shift, q)
            n -= 1
        return GradedCharacter(num, n)

    @property
    def is_reduced(self) -> bool:
        if self.numerator.is_zero:
            return self.den_power == 0
        return self.den_power == 0 or sum(self.numerator.coeffs) != 0

    def eval_at_one(self):
        """Total dimension: integer if the pole order is 0, else INFINITE."""
        g = self if self.is_reduced else self.reduce()
        if g.den_power > 0:
            return INFINITE
        return g.numerator.eval_at_one()

    def is_palindromic(self) -> bool:
        """True iff substituting t -> 1/t fixes the character."""
        g = self if self.is_reduced else self.reduce()
        if g.den_power != 0:
            raise NotReduced("palindromicity is defined for pole order 0")
        num = g.numerator
        if num.is_zero:
            return True
        cs = num.coeffs
        if 2 * num.shift + (len(cs) - 1) != 0:
            return False
        return cs == cs[::-1]

    def __add__(self, other: "GradedCharacter") -> "GradedCharacter":
        n = max(self.den_power, other.den_power)
        a = self.numerator
        for _ in range(n - self.den_power):
            a = a.mul(ShiftedLaurent.make(0, [1, -1]))
        b = other.numerator
        for _ in range(n - other.den_power):
            b = b.mul(ShiftedLaurent.make(0, [1, -1]))
        return GradedCharacter(a + b, n).reduce()

    def __neg__(self) -> "GradedCharacter":
        return GradedCharacter(-self.numerator, self.den_power)

    def __sub__(self, other: "GradedCharacter") -> "GradedCharacter":
        return self + (-other)

    def coeff_at(self, exponent: RatLike) -> int:
        """Coefficient of t^exponent in the series expansion (needs truncation-free den_power=0)."""
        if self.den_power != 0:
            raise NotReduced("coefficient extraction requires pole order 0")
        return self.numerator.coeff_at(exponent)

    def series_prefix(self, length: int) -> list[int]:
        """First ``length`` series coefficients starting at the numerator shift."""
        if self.numerator.is_zero:
            return [0] * length
        cs = list(self.numerator.coeffs[:length]) + [0] * max(
            0, length - len(self.numerator.coeffs)
        )
        for _ in range(self.den_power):
            acc = 0
            for k in range(length):
                acc += cs[k]
                cs[k] = acc
        return cs

    def __str__(self) -> str:
        if self.den_power == 0:
            return str(self.numerator)
        return f"({self.numerator}) / (1-t)^{self.den_power}"


def laurent_reduce(g: GradedCharacter) -> GradedCharacter:
    return g.reduce()


def eval_at_one(g: GradedCharacter):
    return g.eval_at_one()


def is_palindromic(g: GradedCharacter) -> bool:
    return g.is_palindromic()
