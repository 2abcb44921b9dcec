"""Named modular objects: Dedekind eta, Eisenstein series, Rogers-Ramanujan products.

Exact constructors return FracQSeries; eta_eval and evaluate_series are the
numeric consumers (q = exp(2*pi*i*tau) throughout, cutoffs chosen so the first
neglected term is below 1e-15).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from .errors import NotInUpperHalfPlane
from .series import DEFAULT_ORDER, FracQSeries


def divisor_sums(k: int, n_max: int) -> list[int]:
    """sigma_k(n) for 1 <= n <= n_max, by sieving over divisors."""
    values = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dk = d ** k
        for m in range(d, n_max + 1, d):
            values[m] += dk
    return values[1:]


def dedekind_eta(order: int = DEFAULT_ORDER) -> FracQSeries:
    """q^{1/24} * prod_{n>=1} (1 - q^n), truncated after `order` coefficients."""
    if order < 1:
        raise ValueError("order must be >= 1")
    f = FracQSeries.one(order)
    for n in range(1, order):
        f = f.mul_sparse(n, -1)
    return FracQSeries(Fraction(1, 24), f.coeffs)


def eisenstein(k: int, order: int = DEFAULT_ORDER) -> FracQSeries:
    """E2 = 1 - 24 sum sigma_1(n) q^n, E4 = 1 + 240 sum sigma_3(n) q^n."""
    if k == 2:
        mult, power = -24, 1
    elif k == 4:
        mult, power = 240, 3
    else:
        raise ValueError("only E2 and E4 are provided")
    sig = divisor_sums(power, order - 1)
    return FracQSeries(0, [1] + [mult * s for s in sig])


def rr_product(which: str, order: int = DEFAULT_ORDER) -> FracQSeries:
    """Rogers-Ramanujan products: G over parts = +-1 mod 5, H over +-2 mod 5."""
    if order < 1:
        raise ValueError("order must be >= 1")
    residues = {"G": (1, 4), "H": (2, 3)}[which]
    f = FracQSeries.one(order)
    for e in range(1, order):
        if e % 5 in residues:
            f = f.mul_sparse(e, -1)
    return f.invert()


def rr_complement(which: str, order: int = DEFAULT_ORDER) -> FracQSeries:
    """The finite product prod (1 - q^e) over the residues of G or H (not inverted)."""
    residues = {"G": (1, 4), "H": (2, 3)}[which]
    f = FracQSeries.one(order)
    for e in range(1, order):
        if e % 5 in residues:
            f = f.mul_sparse(e, -1)
    return f


def _nome(tau: complex) -> complex:
    if tau.imag <= 0:
        raise NotInUpperHalfPlane(f"Im(tau) = {tau.imag} <= 0")
    return cmath.exp(2j * math.pi * tau)


def adaptive_cutoff(tau: complex, target: float = 1e-15) -> int:
    """Smallest n with |q|^n < target, floored at 8 terms."""
    y = tau.imag
    if y <= 0:
        raise NotInUpperHalfPlane(f"Im(tau) = {y} <= 0")
    return max(8, int(math.ceil(-math.log(target) / (2 * math.pi * y))) + 1)


def eta_eval(tau: complex, cutoff: int | None = None) -> complex:
    """Numeric eta(tau) = q^{1/24} prod_{n<=cutoff} (1 - q^n)."""
    q = _nome(tau)
    if cutoff is None:
        cutoff = adaptive_cutoff(tau)
    value = cmath.exp(2j * math.pi * tau / 24)
    qn = 1.0 + 0j
    for _ in range(cutoff):
        qn *= q
        value *= 1 - qn
    return value


def evaluate_series(f: FracQSeries, tau: complex) -> complex:
    """Numeric value of a FracQSeries at q = exp(2*pi*i*tau).

    The prefactor q^a is evaluated as exp(2*pi*i*tau*a), which is the branch
    every formula in scope intends.
    """
    q = _nome(tau)
    acc = 0j
    for c in reversed(f.coeffs):
        acc = acc * q + complex(c)
    a = f.prefactor
    if a != 0:
        acc *= cmath.exp(2j * math.pi * tau * complex(a))
    return acc
