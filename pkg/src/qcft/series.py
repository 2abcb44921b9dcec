"""Truncated q-series over exact rationals with a rational prefactor exponent.

A series is q^a * (c_0 + c_1 q + ... + c_{N-1} q^{N-1}) with a rational and
all c_n rational.  The prefactor exponent a carries objects like
q^{-1/60} * G(q) exactly; the integer-indexed part keeps the Cauchy product
simple.  No floating point enters anywhere in this module.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import ExponentOutOfRange, NonAlignablePrefactor, NonUnitLeadingCoefficient

#: Default truncation order: coefficients through q^(a+200).
DEFAULT_ORDER = 201

RationalLike = Union[Fraction, int, str]


def rat(x: RationalLike) -> Fraction:
    """Coerce ints, 'p/q' strings and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rat_str(x: Fraction) -> str:
    """Serialize a rational as reduced 'numerator/denominator' ('0/1' for zero)."""
    return f"{x.numerator}/{x.denominator}"


class FracQSeries:
    """Immutable truncated power series q^prefactor * sum coeffs[n] q^n."""

    __slots__ = ("prefactor", "coeffs", "order")

    def __init__(self, prefactor: RationalLike, coeffs: Iterable[RationalLike]):
        object.__setattr__(self, "prefactor", rat(prefactor))
        object.__setattr__(self, "coeffs", tuple(rat(c) for c in coeffs))
        object.__setattr__(self, "order", len(self.coeffs))
        if self.order < 1:
            raise ValueError("a series must store at least one coefficient")

    def __setattr__(self, name, value):
        raise AttributeError("FracQSeries is immutable")

    # -- constructors --------------------------------------------------------

    @classmethod
    def one(cls, order: int = DEFAULT_ORDER) -> "FracQSeries":
        return cls(0, [1] + [0] * (order - 1))

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "FracQSeries":
        return cls(0, [0] * order)

    @classmethod
    def monomial(cls, exponent: RationalLike, order: int = DEFAULT_ORDER) -> "FracQSeries":
        """q^exponent as a series."""
        return cls(exponent, [1] + [0] * (order - 1))

    @classmethod
    def from_coeff_list(cls, coeffs: Sequence[RationalLike], order: int | None = None,
                        prefactor: RationalLike = 0) -> "FracQSeries":
        """Pad or truncate an explicit coefficient list to the given order."""
        cs = [rat(c) for c in coeffs]
        if order is not None:
            cs = (cs + [Fraction(0)] * order)[:order]
        return cls(prefactor, cs)

    # -- basics ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, FracQSeries):
            return NotImplemented
        return (self.prefactor == other.prefactor and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.prefactor, self.coeffs))

    def __repr__(self) -> str:
        head = ", ".join(str(c) for c in self.coeffs[:6])
        tail = ", ..." if self.order > 6 else ""
        return f"FracQSeries(q^{self.prefactor} * [{head}{tail}], order={self.order})"

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def normalized(self) -> "FracQSeries":
        """Shift leading zero coefficients into the prefactor (zero stays put)."""
        k = 0
        while k < self.order and self.coeffs[k] == 0:
            k += 1
        if k == 0 or k == self.order:
            return self
        return FracQSeries(self.prefactor + k, self.coeffs[k:])

    # -- ring operations -------------------------------------------------------

    def __add__(self, other: "FracQSeries") -> "FracQSeries":
        if not isinstance(other, FracQSeries):
            return NotImplemented
        shift = self.prefactor - other.prefactor
        if shift.denominator != 1:
            raise NonAlignablePrefactor(
                f"prefactors {self.prefactor} and {other.prefactor} differ by a non-integer")
        s = int(shift)
        if abs(s) >= min(self.order, other.order):
            raise NonAlignablePrefactor(
                f"prefactor offset {s} exceeds the shared order "
                f"min({self.order}, {other.order})")
        lo = min(self.prefactor, other.prefactor)
        hi = min(self.prefactor + self.order, other.prefactor + other.order)
        n = int(hi - lo)
        coeffs = [Fraction(0)] * n
        off_f = int(self.prefactor - lo)
        off_g = int(other.prefactor - lo)
        for i, c in enumerate(self.coeffs):
            if off_f + i < n:
                coeffs[off_f + i] += c
        for i, c in enumerate(other.coeffs):
            if off_g + i < n:
                coeffs[off_g + i] += c
        return FracQSeries(lo, coeffs)

    def __neg__(self) -> "FracQSeries":
        return FracQSeries(self.prefactor, [-c for c in self.coeffs])

    def __sub__(self, other: "FracQSeries") -> "FracQSeries":
        return self + (-other)

    def __mul__(self, other) -> "FracQSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, FracQSeries):
            return NotImplemented
        n = min(self.order, other.order)
        coeffs = [Fraction(0)] * n
        for i in range(n):
            ci = self.coeffs[i]
            if ci == 0:
                continue
            for j in range(n - i):
                cj = other.coeffs[j]
                if cj != 0:
                    coeffs[i + j] += ci * cj
        return FracQSeries(self.prefactor + other.prefactor, coeffs)

    __rmul__ = __mul__

    def scale(self, k: RationalLike) -> "FracQSeries":
        k = rat(k)
        return FracQSeries(self.prefactor, [k * c for c in self.coeffs])

    def invert(self) -> "FracQSeries":
        """Multiplicative inverse up to the stored order; prefactor is negated."""
        if self.coeffs[0] == 0:
            raise NonUnitLeadingCoefficient("leading coefficient is zero")
        a0 = self.coeffs[0]
        inv = [Fraction(0)] * self.order
        inv[0] = 1 / a0
        for n in range(1, self.order):
            acc = Fraction(0)
            for k in range(1, n + 1):
                ck = self.coeffs[k]
                if ck != 0:
                    acc += ck * inv[n - k]
            inv[n] = -acc / a0
        return FracQSeries(-self.prefactor, inv)

    def q_derivative(self) -> "FracQSeries":
        """The operator q d/dq: coefficient of q^(a+n) is multiplied by a+n."""
        a = self.prefactor
        return FracQSeries(a, [(a + n) * c for n, c in enumerate(self.coeffs)])

    def substitute_power(self, k: int) -> "FracQSeries":
        """The substitution q -> q^k; the valid order scales with k."""
        if k < 1:
            raise ValueError("k must be a positive integer")
        n = (self.order - 1) * k + 1
        coeffs = [Fraction(0)] * n
        for i, c in enumerate(self.coeffs):
            coeffs[i * k] = c
        return FracQSeries(self.prefactor * k, coeffs)

    def truncate(self, order: int) -> "FracQSeries":
        """Drop coefficients beyond the given order (pad with zeros if longer)."""
        cs = list(self.coeffs[:order])
        cs += [Fraction(0)] * (order - len(cs))
        return FracQSeries(self.prefactor, cs)

    # -- queries ---------------------------------------------------------------

    def coefficient_at(self, e: RationalLike) -> Fraction:
        """Exact coefficient of q^e; e - prefactor must be an integer in range."""
        d = rat(e) - self.prefactor
        if d.denominator != 1 or not (0 <= d < self.order):
            raise ExponentOutOfRange(f"exponent {e} not stored (prefactor {self.prefactor}, "
                                     f"order {self.order})")
        return self.coeffs[int(d)]

    def mul_sparse(self, exponent: int, coefficient: RationalLike) -> "FracQSeries":
        """Multiply by the binomial (1 + coefficient * q^exponent) in O(order)."""
        c = rat(coefficient)
        coeffs = list(self.coeffs)
        for n in range(self.order - 1, exponent - 1, -1):
            coeffs[n] += c * self.coeffs[n - exponent]
        return FracQSeries(self.prefactor, coeffs)

    # -- serialization -----------------------------------------------------------

    def to_record(self) -> dict:
        """Byte-stable record: prefactor and coefficients as 'p/q' strings."""
        return {
            "prefactor": rat_str(self.prefactor),
            "order": self.order,
            "coeffs": [rat_str(c) for c in self.coeffs],
        }

    @classmethod
    def from_record(cls, rec: dict) -> "FracQSeries":
        s = cls(Fraction(rec["prefactor"]), [Fraction(c) for c in rec["coeffs"]])
        if s.order != rec["order"]:
            raise ValueError("order field disagrees with coefficient count")
        return s


# Functional aliases matching the operation names used elsewhere.

def add(f: FracQSeries, g: FracQSeries) -> FracQSeries:
    return f + g


def mul(f: FracQSeries, g: FracQSeries) -> FracQSeries:
    return f * g


def invert(f: FracQSeries) -> FracQSeries:
    return f.invert()


def q_derivative(f: FracQSeries) -> FracQSeries:
    return f.q_derivative()


def substitute_power(f: FracQSeries, k: int) -> FracQSeries:
    return f.substitute_power(k)


def coefficient_at(f: FracQSeries, e: RationalLike) -> Fraction:
    return f.coefficient_at(e)
