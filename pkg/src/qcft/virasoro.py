"""Virasoro bracket, Verma-module Gram matrices, minimal-model data, and the
second-order modular differential equation satisfied by the (2,5) characters.

Mode convention: positive modes raise the L_0 weight (L_m maps weight h to
weight h + m), so a lowest-weight vector |h> is annihilated by every L_{-m}
with m > 0.  Gram entries are exact polynomials in (c, h).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import LevelTooLarge
from .partitions import PartitionConstraint, count_partitions
from .series import DEFAULT_ORDER, FracQSeries
from .special import eisenstein, evaluate_series, rr_product

MAX_GRAM_LEVEL = 6


def bracket(m: int, n: int) -> tuple[int, Fraction]:
    """[L_m, L_n] = (n - m) L_{m+n} + c/12 (n^3 - n) delta_{m+n,0}.

    Returns (coefficient of L_{m+n}, coefficient of c).
    """
    central = Fraction(n ** 3 - n, 12) if m + n == 0 else Fraction(0)
    return n - m, central


# -- bivariate polynomials in (c, h) ------------------------------------------

class PolyCH:
    """Polynomial in the central charge c and the weight h, exact coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        self.terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, x) -> "PolyCH":
        return cls({(0, 0): Fraction(x)})

    @classmethod
    def var_c(cls) -> "PolyCH":
        return cls({(1, 0): Fraction(1)})

    @classmethod
    def var_h(cls) -> "PolyCH":
        return cls({(0, 1): Fraction(1)})

    def __add__(self, other: "PolyCH") -> "PolyCH":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return PolyCH(out)

    def __sub__(self, other: "PolyCH") -> "PolyCH":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, Fraction(0)) - v
        return PolyCH(out)

    def __neg__(self) -> "PolyCH":
        return PolyCH({k: -v for k, v in self.terms.items()})

    def __mul__(self, other) -> "PolyCH":
        if isinstance(other, (int, Fraction)):
            return PolyCH({k: v * other for k, v in self.terms.items()})
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), v1 in self.terms.items():
            for (i2, j2), v2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, Fraction(0)) + v1 * v2
        return PolyCH(out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PolyCH.const(other)
        return isinstance(other, PolyCH) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, c, h):
        """Evaluate at numbers (Fractions stay exact, floats go numeric)."""
        exact = isinstance(c, (int, Fraction)) and isinstance(h, (int, Fraction))
        total = Fraction(0) if exact else 0.0
        for (i, j), v in self.terms.items():
            total += (v if exact else float(v)) * c ** i * h ** j
        return total

    def c_coefficients(self) -> dict[int, Fraction]:
        """Coefficients by power of c, valid only when no h appears."""
        if any(j for (_, j) in self.terms):
            raise ValueError("polynomial involves h")
        return {i: v for (i, _), v in self.terms.items()}

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (i, j) in sorted(self.terms, reverse=True):
            v = self.terms[(i, j)]
            coeff = f"{v.numerator}" if v.denominator == 1 else f"({v.numerator}/{v.denominator})"
            factors = [coeff]
            if i:
                factors.append("c" if i == 1 else f"c^{i}")
            if j:
                factors.append("h" if j == 1 else f"h^{j}")
            if (i or j) and v == 1:
                factors = factors[1:]
            elif (i or j) and v == -1:
                factors = ["-" + factors[1]] + factors[2:]
            parts.append("*".join(factors))
        return " + ".join(parts)

    __repr__ = __str__


# -- Gram matrices -------------------------------------------------------------

def _partitions_of(level: int, min_part: int) -> list[tuple[int, ...]]:
    """Weakly decreasing partitions of `level`, lexicographically descending."""
    out: list[tuple[int, ...]] = []

    def rec(rest: int, cap: int, acc: tuple[int, ...]):
        if rest == 0:
            out.append(acc)
            return
        for s in range(min(cap, rest), min_part - 1, -1):
            rec(rest - s, s, acc + (s,))

    rec(level, level, ())
    return out


def _act_lowering(m: int, mono: tuple[int, ...], h: PolyCH) -> list[tuple[tuple[int, ...], PolyCH]]:
    """L_{-m} applied to L_{mono[0]} ... L_{mono[-1]} |h>, m > 0.

    Returns monomials of raising modes with polynomial weights; the lowering
    operator is pushed through by the bracket until it annihilates |h>.
    """
    if not mono:
        return []
    n1, rest = mono[0], mono[1:]
    out: list[tuple[tuple[int, ...], PolyCH]] = []
    for tail, w in _act_lowering(m, rest, h):
        out.append(((n1,) + tail, w))
    lin, central = bracket(-m, n1)  # (n1 + m) L_{n1 - m} + central term
    k = n1 - m
    if k > 0:
        out.append(((k,) + rest, PolyCH.const(lin)))
    elif k == 0:
        weight = (h + PolyCH.const(sum(rest))) * lin
        out.append((rest, weight))
    else:
        for tail, w in _act_lowering(-k, rest, h):
            out.append((tail, w * lin))
    if central != 0:
        out.append((rest, PolyCH.var_c() * central))
    return out


def _contract(bra: tuple[int, ...], ket: tuple[int, ...], h: PolyCH) -> PolyCH:
    """<h| adjoint(L_bra ... ) L_ket ... |h> as a polynomial in (c, h)."""
    state: dict[tuple[int, ...], PolyCH] = {ket: PolyCH.const(1)}
    for m in bra:
        nxt: dict[tuple[int, ...], PolyCH] = {}
        for mono, coef in state.items():
            for mono2, w in _act_lowering(m, mono, h):
                cur = nxt.get(mono2)
                add = coef * w
                nxt[mono2] = add if cur is None else cur + add
        state = {k: v for k, v in nxt.items() if not v.is_zero()}
    return state.get((), PolyCH())


@dataclass(frozen=True)
class VermaGram:
    """Level-graded Gram matrix of descendants of a lowest-weight vector."""

    level: int
    vacuum: bool
    basis: tuple[tuple[int, ...], ...]
    entries: tuple[tuple[PolyCH, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def determinant(self) -> PolyCH:
        """Exact determinant by cofactor expansion (dimensions here are small)."""
        n = self.dimension
        if n == 0:
            return PolyCH.const(1)

        def det(rows: list[list[PolyCH]]) -> PolyCH:
            if len(rows) == 1:
                return rows[0][0]
            total = PolyCH()
            for j in range(len(rows)):
                minor = [r[:j] + r[j + 1:] for r in rows[1:]]
                term = rows[0][j] * det(minor)
                total = total + term if j % 2 == 0 else total - term
            return total

        return det([list(r) for r in self.entries])

    def evaluate(self, c, h) -> list[list]:
        return [[e.evaluate(c, h) for e in row] for row in self.entries]

    def to_record(self) -> dict:
        return {
            "level": self.level,
            "vacuum": self.vacuum,
            "basis": [list(b) for b in self.basis],
            "entries": [[str(e) for e in row] for row in self.entries],
        }


def gram_matrix(level: int, vacuum: bool = False) -> VermaGram:
    """Gram matrix at a given level; the vacuum module restricts parts to >= 2."""
    if not (1 <= level <= MAX_GRAM_LEVEL):
        raise LevelTooLarge(f"level {level} outside 1..{MAX_GRAM_LEVEL}")
    h = PolyCH() if vacuum else PolyCH.var_h()
    basis = tuple(_partitions_of(level, 2 if vacuum else 1))
    entries = []
    for i, mu in enumerate(basis):
        row = []
        for j, lam in enumerate(basis):
            if j < i:
                row.append(entries[j][i])  # symmetric
            else:
                row.append(_contract(mu, lam, h))
        entries.append(row)
    return VermaGram(level, vacuum, basis, tuple(tuple(r) for r in entries))


@dataclass(frozen=True)
class NullVectorResult:
    central_charges: tuple[Fraction, ...]
    beta: Fraction              # null combination (L_2^2 + beta L_4)|0>
    tt_remainder_ratio: Fraction  # ratio of the regular TT term to d^2 T


def null_vector_central_charges() -> NullVectorResult:
    """Central charges at which the level-4 vacuum Gram matrix degenerates.

    The determinant factors as c^2 * (linear in c) / const; the c = 0 factors
    are degenerate (the whole matrix vanishes) and are excluded.
    """
    g = gram_matrix(4, vacuum=True)
    det = g.determinant()
    coeffs = det.c_coefficients()
    low = min(coeffs)          # multiplicity of the degenerate c = 0 root
    reduced = {i - low: v for i, v in coeffs.items()}
    if sorted(reduced) != [0, 1]:
        raise RuntimeError("expected a linear nontrivial factor in c")
    root = -reduced[0] / reduced[1]
    # Null direction beta * L_4 + 1 * L_2^2 at the root.
    i4 = g.basis.index((4,))
    i22 = g.basis.index((2, 2))
    g44 = g.entries[i4][i4].evaluate(root, Fraction(0))
    g42 = g.entries[i4][i22].evaluate(root, Fraction(0))
    g22 = g.entries[i22][i22].evaluate(root, Fraction(0))
    beta = -g42 / g44
    if g42 * beta + g22 != 0:
        raise RuntimeError("null direction inconsistent between rows")
    # The regular term of the normal-ordered TT product is L_2^2 - L_4 acting
    # on the vacuum (symmetric subtraction of the singular part), while the
    # second derivative of the weight-2 field is 2 L_4.  In the quotient
    # L_2^2 = -beta L_4, so their ratio is (-beta - 1)/2.
    ratio = (-beta - 1) / 2
    return NullVectorResult((root,), beta, ratio)


# -- minimal models --------------------------------------------------------------

@dataclass(frozen=True)
class MinimalModelLabel:
    p: int
    q: int

    def __post_init__(self):
        if not (1 < self.p < self.q) or math.gcd(self.p, self.q) != 1:
            raise ValueError(f"({self.p}, {self.q}) is not a valid minimal-model label")


def central_charge(m: MinimalModelLabel) -> Fraction:
    """c = 1 - 6 (p - q)^2 / (p q)."""
    return 1 - Fraction(6 * (m.p - m.q) ** 2, m.p * m.q)


def effective_central_charge(m: MinimalModelLabel) -> Fraction:
    """c_eff = 1 - 6 / (p q), the growth exponent of the state count."""
    return 1 - Fraction(6, m.p * m.q)


def minimal_c_eff_scan(bound: int) -> tuple[MinimalModelLabel, Fraction]:
    """Label minimizing c_eff over all labels with p*q <= bound.

    The label (2,3) has c = 0 and an empty field content, so it is excluded
    from the scan: the minimum is over models with states to count.
    """
    best: tuple[MinimalModelLabel, Fraction] | None = None
    for p in range(2, bound + 1):
        for q in range(p + 1, bound // p + 1):
            if math.gcd(p, q) != 1:
                continue
            label = MinimalModelLabel(p, q)
            if central_charge(label) == 0:
                continue
            ceff = effective_central_charge(label)
            if best is None or ceff < best[1]:
                best = (label, ceff)
    assert best is not None
    return best


# -- (2,5) characters and the torus ----------------------------------------------

CHARACTER_PREFACTOR = {
    "V0": Fraction(11, 60),     # -c/24 at (2,5)
    "Vm15": Fraction(-1, 60),   # h - c/24 = -1/5 + 11/60
}


def character_25(sector: str, order: int = DEFAULT_ORDER) -> FracQSeries:
    """Graded dimensions of the two (2,5) irreducibles, with Casimir prefactor.

    V0 counts partitions without 1s and with gaps >= 2; Vm15 allows 1s.
    These reproduce q^{11/60} H(q) and q^{-1/60} G(q) exactly.
    """
    if sector not in CHARACTER_PREFACTOR:
        raise ValueError("sector must be 'V0' or 'Vm15'")
    min_part = 2 if sector == "V0" else 1
    counts = count_partitions(order - 1, PartitionConstraint(min_part=min_part, min_gap=2))
    return FracQSeries(CHARACTER_PREFACTOR[sector], counts.values)


def torus_partition_function_25(tau: complex, order: int = DEFAULT_ORDER) -> float:
    """|chi_{-1/60}|^2 + |chi_{11/60}|^2 at q = exp(2*pi*i*tau)."""
    chi_g = FracQSeries(Fraction(-1, 60), rr_product("G", order).coeffs)
    chi_h = FracQSeries(Fraction(11, 60), rr_product("H", order).coeffs)
    return abs(evaluate_series(chi_g, tau)) ** 2 + abs(evaluate_series(chi_h, tau)) ** 2


# -- modular ODE -------------------------------------------------------------------

def serre_derivative(f: FracQSeries, k) -> FracQSeries:
    """q d/dq f - (k/12) E2 f, mapping weight k to weight k + 2."""
    e2 = eisenstein(2, f.order)
    return f.q_derivative() - (Fraction(k) / 12) * (e2 * f)


def ode_residual(which: str, order: int = DEFAULT_ORDER,
                 rhs_coefficient: Fraction = Fraction(11, 3600)) -> FracQSeries:
    """LHS - RHS of (q d/dq - 1/6 E2) q d/dq Z = (11/3600) E4 Z.

    Z is q^{-1/60} G or q^{11/60} H; the residual must vanish identically.
    A different rhs_coefficient deliberately breaks the equation (probe).
    """
    pref = {"G": Fraction(-1, 60), "H": Fraction(11, 60)}[which]
    z = FracQSeries(pref, rr_product(which, order).coeffs)
    dz = z.q_derivative()
    lhs = serre_derivative(dz, 2)
    rhs = rhs_coefficient * (eisenstein(4, order) * z)
    return lhs - rhs


def scale_anomaly(c, genus: int, lam: float) -> float:
    """Rescaling factor lambda^{c (1 - g) / 6} of the partition function."""
    if lam <= 0:
        raise ValueError("lambda must be positive")
    return float(lam) ** (float(c) * (1 - genus) / 6)
