"""Weights, dominant tuples, and the five labeling flavors.

Index bookkeeping
-----------------
The weight lattice is spanned by epsilons indexed by either a "line" index
(an integer or half-integer) or a "bar" index (1-based). Line values are
stored doubled so that everything stays in plain ints: ('l', 2r) encodes
epsilon_r and ('b', j) encodes the j-th bar epsilon. Bars and even-doubled
line indices are even; odd-doubled line indices are odd.

In the standard total order the bars sit strictly between 0 and 1/2:

    ... < -1 < -1/2 < 0 < bar1 < ... < bark < 1/2 < 1 < ...

A Weight stores its epsilon coefficients together with a separate integer
level (the coefficient of the charge Lambda_0); keeping the level apart from
the coefficients makes tuple <-> weight conversion bijective for every a.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Mapping

from .partition import (
    Partition,
    ThetaCoords,
    check_partition,
    conjugate,
    format_partition,
    from_theta,
    parse_partition,
    part,
    theta,
)

IndexKey = tuple[str, int]


def line(twice: int) -> IndexKey:
    """Line index with value twice/2 (so line(1) is epsilon_{1/2})."""
    return ("l", twice)


def bar(j: int) -> IndexKey:
    if j < 1:
        raise ValueError(f"bar index must be >= 1, got {j}")
    return ("b", j)


def is_bar(ix: IndexKey) -> bool:
    return ix[0] == "b"


def is_line(ix: IndexKey) -> bool:
    return ix[0] == "l"


def is_half(ix: IndexKey) -> bool:
    """True for genuine half-integers like 1/2, -3/2."""
    return ix[0] == "l" and ix[1] % 2 != 0


def is_int_line(ix: IndexKey) -> bool:
    return ix[0] == "l" and ix[1] % 2 == 0


def parity(ix: IndexKey) -> int:
    """0 for even (integers and bars), 1 for odd (half-integers)."""
    return 1 if is_half(ix) else 0


def standard_key(ix: IndexKey) -> tuple[int, int]:
    """Sort key realizing the standard order; bars between 0 and 1/2."""
    kind, v = ix
    if kind == "l":
        return (2 * v, 0)
    return (1, v)


def format_index(ix: IndexKey) -> str:
    kind, v = ix
    if kind == "b":
        return f"bar{v}"
    if v % 2 == 0:
        return str(v // 2)
    return f"{v}/2"


def parse_index(text: str) -> IndexKey:
    s = text.strip()
    if s.startswith("bar"):
        try:
            j = int(s[3:])
        except ValueError:
            raise ValueError(f"bad bar index {text!r}") from None
        return bar(j)
    if "/" in s:
        num, _, den = s.partition("/")
        if den.strip() != "2":
            raise ValueError(f"half-integer index must have denominator 2: {text!r}")
        v = int(num)
        if v % 2 == 0:
            raise ValueError(f"{text!r} is not in lowest terms")
        return line(v)
    return line(2 * int(s))


@dataclass(frozen=True)
class Weight:
    """Epsilon coefficients plus a level, immutable and hashable."""

    items: tuple[tuple[IndexKey, int], ...]
    level: int = 0

    @staticmethod
    def of(coeffs: Mapping[IndexKey, int] | Iterable[tuple[IndexKey, int]], level: int = 0) -> "Weight":
        pairs = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        acc: dict[IndexKey, int] = {}
        for ix, c in pairs:
            if c:
                acc[ix] = acc.get(ix, 0) + c
                if not acc[ix]:
                    del acc[ix]
        return Weight(tuple(sorted(acc.items())), level)

    @staticmethod
    def zero(level: int = 0) -> "Weight":
        return Weight((), level)

    @property
    def coeffs(self) -> dict[IndexKey, int]:
        return dict(self.items)

    def coeff(self, ix: IndexKey) -> int:
        for k, v in self.items:
            if k == ix:
                return v
        return 0

    def support(self) -> tuple[IndexKey, ...]:
        return tuple(k for k, _ in self.items)

    def add(self, other: "Weight") -> "Weight":
        acc = dict(self.items)
        for ix, c in other.items:
            acc[ix] = acc.get(ix, 0) + c
        return Weight.of(acc, self.level + other.level)

    def add_coeffs(self, delta: Mapping[IndexKey, int], mult: int = 1) -> "Weight":
        """Shift coefficients by mult*delta, keeping the level."""
        acc = dict(self.items)
        for ix, c in delta.items():
            acc[ix] = acc.get(ix, 0) + mult * c
        return Weight.of(acc, self.level)

    def to_json_obj(self) -> dict:
        return {
            "level": self.level,
            "coeffs": {format_index(ix): c for ix, c in self.items},
        }

    @staticmethod
    def from_json_obj(obj: dict) -> "Weight":
        if not isinstance(obj, dict) or "coeffs" not in obj:
            raise ValueError("weight JSON must be an object with 'coeffs'")
        coeffs = {parse_index(k): int(v) for k, v in obj["coeffs"].items()}
        return Weight.of(coeffs, int(obj.get("level", 0)))

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), sort_keys=True, separators=(",", ":"))

    def __str__(self) -> str:
        if not self.items and not self.level:
            return "0"
        terms = []
        if self.level:
            terms.append(f"{self.level}*L0")
        for ix, c in self.items:
            terms.append(f"{c:+d}e({format_index(ix)})" if terms else f"{c}e({format_index(ix)})")
        return "".join(terms)


class Flavor(str, Enum):
    PLAIN = "plain"
    BAR = "bar"
    DIAMOND = "diamond"
    BAR_DIAMOND = "bar-diamond"
    TILDE = "tilde"


@dataclass(frozen=True)
class DominantTuple:
    """The bookkeeping data (a, lam0; lam_minus, lam_plus) with a Levi marking.

    lam0 is an arbitrary integer vector of length k; lam_minus and lam_plus
    are partitions. y0 marks bar-adjacent simple roots (j means the root
    between bar j and bar j+1) along which lam0 must be dominant.
    """

    a: int
    lam0: tuple[int, ...]
    lam_minus: Partition
    lam_plus: Partition
    y0: frozenset[int] = field(default_factory=frozenset)

    def __post_init__(self):
        check_partition(self.lam_minus)
        check_partition(self.lam_plus)
        k = len(self.lam0)
        for j in self.y0:
            if not 1 <= j <= k - 1:
                raise ValueError(f"y0 entry {j} outside 1..{k - 1}")
            if self.lam0[j - 1] < self.lam0[j]:
                raise ValueError(
                    f"lam0 must weakly decrease across marked root {j}: "
                    f"{self.lam0[j - 1]} < {self.lam0[j]}"
                )

    @property
    def k(self) -> int:
        return len(self.lam0)

    def format(self) -> str:
        text = (
            f"a={self.a};l0={','.join(str(c) for c in self.lam0)};"
            f"lm={format_partition(self.lam_minus)};lp={format_partition(self.lam_plus)}"
        )
        if self.y0:
            text += f";y0={','.join(str(j) for j in sorted(self.y0))}"
        return text

    @staticmethod
    def parse(text: str) -> "DominantTuple":
        fields: dict[str, str] = {}
        for chunk in text.strip().split(";"):
            if not chunk:
                continue
            key, eq, val = chunk.partition("=")
            if not eq:
                raise ValueError(f"bad tuple field {chunk!r}")
            fields[key.strip()] = val.strip()
        missing = {"a", "l0", "lm", "lp"} - set(fields)
        if missing:
            raise ValueError(f"tuple text missing fields: {sorted(missing)}")
        lam0 = tuple(int(x) for x in fields["l0"].split(",")) if fields["l0"] else ()
        marks = fields.get("y0", "")
        y0 = frozenset(int(x) for x in marks.split(",")) if marks else frozenset()
        return DominantTuple(
            a=int(fields["a"]),
            lam0=lam0,
            lam_minus=parse_partition(fields["lm"]),
            lam_plus=parse_partition(fields["lp"]),
            y0=y0,
        )


def _theta_positive(mu: Partition) -> dict[IndexKey, int]:
    return {line(k): v for k, v in theta(mu).items()}


def _theta_negative(mu: Partition) -> dict[IndexKey, int]:
    # slot r > 0 lands at the mirror index 1/2 - r with a sign flip
    return {line(1 - k): -v for k, v in theta(mu).items()}


def to_weight(t: DominantTuple, flavor: Flavor) -> Weight:
    """The highest weight labeled by t in the given flavor."""
    coeffs: dict[IndexKey, int] = {}
    for i, c in enumerate(t.lam0, start=1):
        if c:
            coeffs[bar(i)] = c
    lm, lp = t.lam_minus, t.lam_plus
    lmc, lpc = conjugate(lm), conjugate(lp)
    if flavor is Flavor.PLAIN:
        for j, p in enumerate(lp, start=1):
            coeffs[line(2 * j)] = p
        for j, p in enumerate(lm, start=1):
            coeffs[line(2 * (1 - j))] = -p
    elif flavor is Flavor.BAR:
        for j, p in enumerate(lpc, start=1):
            coeffs[line(2 * j - 1)] = p
        for j, p in enumerate(lm, start=1):
            coeffs[line(2 * (1 - j))] = -p
    elif flavor is Flavor.DIAMOND:
        for j, p in enumerate(lp, start=1):
            coeffs[line(2 * j)] = p
        for j, p in enumerate(lmc, start=1):
            coeffs[line(1 - 2 * j)] = -p
    elif flavor is Flavor.BAR_DIAMOND:
        for j, p in enumerate(lpc, start=1):
            coeffs[line(2 * j - 1)] = p
        for j, p in enumerate(lmc, start=1):
            coeffs[line(1 - 2 * j)] = -p
    elif flavor is Flavor.TILDE:
        coeffs.update(_theta_positive(lp))
        coeffs.update(_theta_negative(lmc))
    else:  # pragma: no cover
        raise ValueError(f"unknown flavor {flavor}")
    return Weight.of(coeffs, t.a)


def _read_partition_row(w: Weight, keys: list[IndexKey], sign: int, what: str) -> Partition:
    """Read coefficients at consecutive slots as a partition; validate hard."""
    vals = [sign * w.coeff(ix) for ix in keys]
    while vals and vals[-1] == 0:
        vals.pop()
    for i, v in enumerate(vals):
        if v < 0:
            raise ValueError(f"{what}: coefficient at {format_index(keys[i])} has the wrong sign")
        if i and vals[i - 1] < v:
            raise ValueError(
                f"{what}: coefficients must weakly decrease toward {format_index(keys[i])}"
            )
    return tuple(vals)


def from_weight(
    w: Weight, flavor: Flavor, k: int | None = None, y0: frozenset[int] = frozenset()
) -> DominantTuple:
    """Invert to_weight. Raises ValueError naming the first bad coordinate.

    k pins the number of bar indices; by default it is inferred from the
    largest bar with nonzero coefficient. The marks y0 are not encoded in
    the weight itself, so they must be supplied when the caller wants them
    back; they are validated against the recovered lam0.
    """
    bar_support = [ix[1] for ix in w.support() if is_bar(ix)]
    inferred_k = max(bar_support, default=0)
    if k is None:
        k = inferred_k
    elif inferred_k > k:
        raise ValueError(f"weight touches bar{inferred_k} but k={k}")
    lam0 = tuple(w.coeff(bar(i)) for i in range(1, k + 1))

    allowed, err = _flavor_support_check(flavor)
    for ix in w.support():
        if not allowed(ix):
            raise ValueError(f"support at {format_index(ix)} is not in the {flavor.value} index set{err}")

    span = max((abs(ix[1]) for ix in w.support() if is_line(ix)), default=0) + 2

    if flavor is Flavor.TILDE:
        pos_theta: ThetaCoords = {}
        neg_theta: ThetaCoords = {}
        for ix, c in w.items:
            if is_bar(ix):
                continue
            tw = ix[1]
            if tw > 0:
                pos_theta[tw] = c
            else:
                neg_theta[1 - tw] = -c
        for slot, v in sorted(neg_theta.items()):
            if v < 0:
                raise ValueError(
                    f"tilde negative-side coefficient at {format_index(line(1 - slot))} has the wrong sign"
                )
        lp = from_theta(pos_theta)
        lmc = from_theta(neg_theta)
        return DominantTuple(w.level, lam0, conjugate(lmc), lp, y0)

    if flavor is Flavor.PLAIN:
        lp = _read_partition_row(w, [line(2 * j) for j in range(1, span)], 1, "plain positive part")
        lm = _read_partition_row(w, [line(2 * (1 - j)) for j in range(1, span)], -1, "plain negative part")
        return DominantTuple(w.level, lam0, lm, lp, y0)
    if flavor is Flavor.BAR:
        lpc = _read_partition_row(w, [line(2 * j - 1) for j in range(1, span)], 1, "bar positive part")
        lm = _read_partition_row(w, [line(2 * (1 - j)) for j in range(1, span)], -1, "bar negative part")
        return DominantTuple(w.level, lam0, lm, conjugate(lpc), y0)
    if flavor is Flavor.DIAMOND:
        lp = _read_partition_row(w, [line(2 * j) for j in range(1, span)], 1, "diamond positive part")
        lmc = _read_partition_row(w, [line(1 - 2 * j) for j in range(1, span)], -1, "diamond negative part")
        return DominantTuple(w.level, lam0, conjugate(lmc), lp, y0)
    if flavor is Flavor.BAR_DIAMOND:
        lpc = _read_partition_row(w, [line(2 * j - 1) for j in range(1, span)], 1, "bar-diamond positive part")
        lmc = _read_partition_row(w, [line(1 - 2 * j) for j in range(1, span)], -1, "bar-diamond negative part")
        return DominantTuple(w.level, lam0, conjugate(lmc), conjugate(lpc), y0)
    raise ValueError(f"unknown flavor {flavor}")  # pragma: no cover


def _flavor_support_check(flavor: Flavor):
    if flavor is Flavor.PLAIN:
        return (lambda ix: is_bar(ix) or is_int_line(ix), " (integers and bars only)")
    if flavor is Flavor.BAR:
        return (
            lambda ix: is_bar(ix) or (is_int_line(ix) and ix[1] <= 0) or (is_half(ix) and ix[1] > 0),
            " (non-positive integers, positive half-integers, bars)",
        )
    if flavor is Flavor.DIAMOND:
        return (
            lambda ix: is_bar(ix) or (is_int_line(ix) and ix[1] > 0) or (is_half(ix) and ix[1] < 0),
            " (positive integers, negative half-integers, bars)",
        )
    if flavor is Flavor.BAR_DIAMOND:
        return (lambda ix: is_bar(ix) or is_half(ix), " (half-integers and bars only)")
    return (lambda ix: True, "")


def survives_truncation(w: Weight, m: int, n: int) -> bool:
    """Whether a weight lives on the rank-(m, n) finite window.

    Bars always survive. Line support must avoid r <= -m on the negative
    side, and on the positive side integers r >= n+1 and half-integers
    r >= n+1/2 (so exactly n of each shape survive on each side).
    """
    if m < 0 or n < 0:
        raise ValueError("ranks must be non-negative")
    for ix, c in w.items:
        if not c or is_bar(ix):
            continue
        tw = ix[1]
        if tw <= -2 * m:
            return False
        if tw % 2 == 0 and tw >= 2 * n + 2:
            return False
        if tw % 2 != 0 and tw >= 2 * n + 1:
            return False
    return True


def finite_coordinates(w: Weight, window: Iterable[IndexKey]) -> Weight:
    """Fold the level into epsilon coefficients for finite-rank display.

    Every non-positive line index of the window gains level * (-1)^parity,
    whether or not it already carries a coefficient; bars and positive
    indices are untouched. The result has level 0.
    """
    acc = dict(w.items)
    if w.level:
        for ix in window:
            if is_line(ix) and ix[1] <= 0:
                acc[ix] = acc.get(ix, 0) + w.level * (1 if ix[1] % 2 == 0 else -1)
    return Weight.of(acc, 0)
