"""Partition counting: gap rules, congruence rules, Andrews-Gordon windows.

Every counter exists twice: a backtracking enumeration that applies the raw
definition to explicit part lists (the oracle, used up to n = 60), and a
dynamic program for larger n.  count_partitions runs both where both apply
and refuses to return if they disagree.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .errors import ConflictingConstraint
from .reports import CheckReport

ENUMERATION_LIMIT = 60


@dataclass(frozen=True)
class PartitionConstraint:
    """Rules a partition (weakly decreasing part list) must satisfy.

    min_gap g requires consecutive parts to differ by at least g; the
    window rule (k, gap) requires b_j - b_{j+k-1} >= gap for 1-indexed
    positions.  At most one of the two may be active.  allowed_residues
    restricts parts to given residues mod `modulus`.
    """

    min_part: int = 1
    min_gap: int = 0
    allowed_residues: frozenset[int] | None = None
    modulus: int | None = None
    window: tuple[int, int] | None = None

    def __post_init__(self):
        if self.min_gap > 0 and self.window is not None:
            raise ConflictingConstraint("min_gap and window cannot both be active")
        if (self.allowed_residues is None) != (self.modulus is None):
            raise ValueError("allowed_residues and modulus must be given together")
        if self.allowed_residues is not None:
            object.__setattr__(self, "allowed_residues",
                               frozenset(r % self.modulus for r in self.allowed_residues))

    def part_allowed(self, s: int) -> bool:
        if s < self.min_part:
            return False
        if self.allowed_residues is not None and s % self.modulus not in self.allowed_residues:
            return False
        return True

    def parts_valid(self, parts: list[int]) -> bool:
        """Raw check on an explicit weakly decreasing part list."""
        if any(not self.part_allowed(p) for p in parts):
            return False
        if self.min_gap > 0:
            for a, b in zip(parts, parts[1:]):
                if a - b < self.min_gap:
                    return False
        if self.window is not None:
            k, gap = self.window
            for j in range(len(parts) - k + 1):
                if parts[j] - parts[j + k - 1] < gap:
                    return False
        return True


@dataclass
class CountTable:
    """values[n] = number of partitions of n under some constraint."""

    values: list[int] = field(default_factory=list)

    def __getitem__(self, n: int) -> int:
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def to_record(self) -> list[str]:
        return [str(v) for v in self.values]


def _enumerate_counts(n_max: int, c: PartitionConstraint) -> list[int]:
    """Backtracking oracle: walk every valid partition with sum <= n_max."""
    counts = [0] * (n_max + 1)
    counts[0] = 1  # empty partition

    def extend(parts: list[int], total: int, max_next: int):
        for s in range(max_next, c.min_part - 1, -1):
            if total + s > n_max:
                continue
            parts.append(s)
            if c.parts_valid(parts):
                counts[total + s] += 1
                extend(parts, total + s, s)
            parts.pop()

    # Pruning on failed prefixes is sound: for every rule in scope, a prefix
    # (taken from the largest part down) of a valid partition is itself valid.
    extend([], 0, n_max)
    return counts


def _dp_counts(n_max: int, c: PartitionConstraint) -> list[int]:
    """Dynamic program for the same counts."""
    if c.window is not None:
        return _dp_window(n_max, c)
    gap = c.min_gap

    @lru_cache(maxsize=None)
    def g(n: int, m: int) -> int:
        # partitions of n with smallest-part threshold m under the gap rule
        if n == 0:
            return 1
        if m > n:
            return 0
        total = g(n, m + 1)
        if c.part_allowed(m):
            total += g(n - m, m + gap if gap > 0 else m)
        return total

    out = [g(n, c.min_part) for n in range(n_max + 1)]
    g.cache_clear()
    return out


def _dp_window(n_max: int, c: PartitionConstraint) -> list[int]:
    """Multiplicity DP for the window rule (k, gap) with gap = 2.

    b_j - b_{j+k-1} >= 2 is equivalent to f_v + f_{v+1} <= k - 1 for the
    multiplicities f_v of each value v.
    """
    k, gap = c.window
    if gap != 2:
        raise NotImplementedError("window DP implemented for gap = 2 only")

    @lru_cache(maxsize=None)
    def h(n: int, v: int, f_above: int) -> int:
        # n left to place with values <= v; f_above = multiplicity of v+1
        if n == 0:
            return 1
        if v < c.min_part:
            return 0
        total = 0
        cap = min(n // v, k - 1 - f_above) if c.part_allowed(v) else 0
        for f in range(max(cap, 0) + 1):
            total += h(n - f * v, v - 1, f)
        return total

    out = [h(n, n if n else 1, 0) for n in range(n_max + 1)]
    h.cache_clear()
    return out


def count_partitions(n_max: int, c: PartitionConstraint) -> CountTable:
    """Counts for 0 <= n <= n_max; enumeration and DP cross-checked to n = 60."""
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    dp = _dp_counts(n_max, c)
    check_to = min(n_max, ENUMERATION_LIMIT)
    enum = _enumerate_counts(check_to, c)
    for n in range(check_to + 1):
        if dp[n] != enum[n]:
            raise RuntimeError(
                f"oracle disagreement at n={n}: enumeration {enum[n]}, dp {dp[n]}")
    return CountTable(dp)


# -- unrestricted p(n) ---------------------------------------------------------

def unrestricted_p(n_max: int) -> CountTable:
    """p(n) by Euler's pentagonal number recurrence."""
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return CountTable(p)


# -- Andrews-Gordon ------------------------------------------------------------

def _gordon_gap_counts(n_max: int, k: int, i: int) -> list[int]:
    """Enumerate partitions with b_j - b_{j+k-1} >= 2 and at most i-1 ones."""
    counts = [0] * (n_max + 1)
    counts[0] = 1

    def extend(parts: list[int], total: int, max_next: int):
        for s in range(max_next, 0, -1):
            if total + s > n_max:
                continue
            if s == 1 and parts.count(1) >= i - 1:
                continue
            parts.append(s)
            if len(parts) >= k and parts[-k] - s < 2:
                parts.pop()
                continue
            counts[total + s] += 1
            extend(parts, total + s, s)
            parts.pop()

    extend([], 0, n_max)
    return counts


def _gordon_congruence_counts(n_max: int, k: int, i: int) -> list[int]:
    """Enumerate partitions into parts not congruent to 0, +-i mod 2k+1."""
    m = 2 * k + 1
    banned = {0, i % m, (-i) % m}
    allowed = [s for s in range(1, n_max + 1) if s % m not in banned]
    counts = [0] * (n_max + 1)
    counts[0] = 1

    def extend(total: int, idx: int):
        # parts chosen in decreasing order of the allowed list
        for j in range(idx, -1, -1):
            s = allowed[j]
            if total + s > n_max:
                continue
            counts[total + s] += 1
            extend(total + s, j)

    extend(0, len(allowed) - 1)
    return counts


def gordon_check(k: int, i: int, n_max: int) -> CheckReport:
    """Andrews-Gordon identity check by independent double enumeration."""
    if not (2 <= k and 1 <= i <= k):
        raise ValueError("need 2 <= k and 1 <= i <= k")
    if n_max > ENUMERATION_LIMIT:
        raise ValueError(f"enumeration capped at n_max = {ENUMERATION_LIMIT}")
    lhs = _gordon_gap_counts(n_max, k, i)
    rhs = _gordon_congruence_counts(n_max, k, i)
    bad = [(n, lhs[n], rhs[n]) for n in range(n_max + 1) if lhs[n] != rhs[n]]
    return CheckReport(
        name="gordon",
        params={"k": k, "i": i, "n_max": n_max},
        passed=not bad,
        residual="0/1" if not bad else str(len(bad)),
        details={"counterexamples": bad} if bad else None,
    )


# -- growth probe ----------------------------------------------------------------

def growth_probe(n: int) -> tuple[float, float]:
    """(log p(n), pi * sqrt(2n/3)) for inspecting the Hardy-Ramanujan growth rate."""
    if not (100 <= n <= 5000):
        raise ValueError("probe range is 100 <= n <= 5000")
    pn = unrestricted_p(n)[n]
    return math.log(pn), math.pi * math.sqrt(2 * n / 3)
