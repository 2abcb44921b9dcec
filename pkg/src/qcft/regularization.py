"""Zeta-regularized sums over arithmetic progressions and their consumers.

The closed form sum_{n>=0} (pn + r) = r(p-r)/(2p) - p/12 is the s = -1
Hurwitz value; the naive split p*sum(n) + r*sum(1) misses -r^2/(2p).
Casimir exponents are half the regularized spectrum sum, which is the unique
constant calibration reproducing both q^{-1/60} and q^{11/60} at once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import InvalidProgression
from .series import DEFAULT_ORDER, FracQSeries, rat_str


@dataclass(frozen=True)
class ArithmeticProgressionSet:
    """A finite union of progressions {p*n + r : n >= 0} with 0 < r <= p."""

    progressions: tuple[tuple[int, int], ...]

    def __init__(self, progressions):
        progs = tuple((int(p), int(r)) for p, r in progressions)
        for p, r in progs:
            if p < 1 or not (1 <= r <= p):
                raise InvalidProgression(f"(p, r) = ({p}, {r})")
        object.__setattr__(self, "progressions", progs)
        bound = 10 * max(p for p, _ in progs)
        seen: set[int] = set()
        for e in self.members(bound):
            if e in seen:
                raise InvalidProgression(f"progressions overlap at {e}")
            seen.add(e)

    def members(self, below: int) -> list[int]:
        """All spectrum members < below, ascending (progressions kept disjoint)."""
        out: list[int] = []
        for p, r in self.progressions:
            out.extend(range(r, below, p))
        return sorted(out)


@dataclass(frozen=True)
class RegularizedValue:
    value: Fraction
    method: str  # "Hurwitz" or "RamanujanNaive"

    def to_record(self) -> dict:
        return {"value": rat_str(self.value), "method": self.method}


def _validate(p: int, r: int):
    if p < 1 or not (1 <= r <= p):
        raise InvalidProgression(f"(p, r) = ({p}, {r})")


def hurwitz_sum(p: int, r: int) -> RegularizedValue:
    """sum_{n>=0} (pn + r) = r(p-r)/(2p) - p/12."""
    _validate(p, r)
    return RegularizedValue(Fraction(r * (p - r), 2 * p) - Fraction(p, 12), "Hurwitz")


def ramanujan_naive_sum(p: int, r: int) -> RegularizedValue:
    """p * sum(n) + r * sum(1) with sum(n) = -1/12 and sum(1) = 1 + zeta(0) = 1/2."""
    _validate(p, r)
    return RegularizedValue(Fraction(-p, 12) + Fraction(r, 2), "RamanujanNaive")


def naive_defect(p: int, r: int) -> Fraction:
    """hurwitz - naive; equals -r^2/(2p) for every progression."""
    return hurwitz_sum(p, r).value - ramanujan_naive_sum(p, r).value


def casimir_exponent(s: ArithmeticProgressionSet) -> Fraction:
    """Half the regularized sum over the spectrum (the q-prefactor exponent)."""
    total = sum((hurwitz_sum(p, r).value for p, r in s.progressions), Fraction(0))
    return total / 2


def _product_series(s: ArithmeticProgressionSet, order: int, sign: int) -> FracQSeries:
    body = FracQSeries.one(order)
    for e in s.members(order):
        body = body.mul_sparse(e, sign)
    inv = body.invert()
    return FracQSeries(casimir_exponent(s), inv.coeffs)


def oscillator_partition_series(s: ArithmeticProgressionSet,
                                order: int = DEFAULT_ORDER) -> FracQSeries:
    """q^{Casimir} * prod_{E in spectrum} (1 - q^E)^{-1}, truncated."""
    return _product_series(s, order, -1)


def twisted_oscillator_series(s: ArithmeticProgressionSet,
                              order: int = DEFAULT_ORDER) -> FracQSeries:
    """Sign-twisted trace: (1 + q^E)^{-1} factors, same Casimir prefactor."""
    return _product_series(s, order, +1)


def critical_dimension() -> int:
    """Transverse oscillator count forced by a massless level-1 state, plus 2."""
    vacuum_per_dimension = hurwitz_sum(1, 1).value / 2  # -1/24
    d_t = Fraction(1) / (-vacuum_per_dimension)         # solves 1 + d_t * (-1/24) = 0
    assert d_t == 24
    return int(d_t) + 2
