"""Borel orderings, odd reflections, and highest-weight transport.

A Borel ordering is a finite window of epsilon indices listed left to
right; adjacent pairs are its simple roots, and swapping an adjacent pair
of opposite parity is an odd reflection. Folding the right sequence of odd
reflections carries the interleaved standard ordering to each of the four
one-sided orderings, and the highest weight follows along by the usual
coefficient rule.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partition import conjugate
from .weight import (
    DominantTuple,
    Flavor,
    IndexKey,
    Weight,
    bar,
    format_index,
    is_line,
    line,
    parity,
    standard_key,
    to_weight,
)


@dataclass(frozen=True)
class OddRoot:
    """epsilon_r - epsilon_s for two indices of opposite parity."""

    r: IndexKey
    s: IndexKey

    def __str__(self) -> str:
        return f"e({format_index(self.r)})-e({format_index(self.s)})"


@dataclass(frozen=True)
class BorelOrdering:
    order: tuple[IndexKey, ...]
    name: str = "custom"

    def __post_init__(self):
        if len(set(self.order)) != len(self.order):
            raise ValueError("ordering repeats an index")

    def position(self, ix: IndexKey) -> int:
        try:
            return self.order.index(ix)
        except ValueError:
            raise ValueError(f"index {format_index(ix)} not in this window") from None

    def simple_roots(self) -> list[tuple[IndexKey, IndexKey]]:
        return list(zip(self.order, self.order[1:]))

    def render(self) -> str:
        return " ≺ ".join(format_index(ix) for ix in self.order)


def standard_window(k: int, lo2: int, hi2: int) -> BorelOrdering:
    """All line indices with lo2 <= 2r <= hi2 plus k bars, standard order."""
    idxs = [line(tw) for tw in range(lo2, hi2 + 1)]
    idxs += [bar(j) for j in range(1, k + 1)]
    return BorelOrdering(tuple(sorted(idxs, key=standard_key)), "standard")


def flavor_window(flavor: Flavor, k: int, m: int, n: int) -> BorelOrdering:
    """Surviving indices of the flavor at ranks (m, n), in standard order."""
    if m < 0 or n < 0:
        raise ValueError("ranks must be non-negative")
    evens = range(-2 * m + 2, 2 * n + 1, 2)
    odds = range(-2 * m + 1, 2 * n, 2)
    if flavor is Flavor.PLAIN:
        lines = list(evens)
    elif flavor is Flavor.BAR:
        lines = [tw for tw in evens if tw <= 0] + [tw for tw in odds if tw > 0]
    elif flavor is Flavor.DIAMOND:
        lines = [tw for tw in odds if tw < 0] + [tw for tw in evens if tw > 0]
    elif flavor is Flavor.BAR_DIAMOND:
        lines = list(odds)
    elif flavor is Flavor.TILDE:
        lines = list(evens) + list(odds)
    else:  # pragma: no cover
        raise ValueError(f"unknown flavor {flavor}")
    idxs = [line(tw) for tw in lines] + [bar(j) for j in range(1, k + 1)]
    return BorelOrdering(tuple(sorted(idxs, key=standard_key)), f"{flavor.value}({m},{n})")


def odd_reflect(b: BorelOrdering, mu: Weight, alpha: OddRoot) -> tuple[BorelOrdering, Weight]:
    """Reflect along an odd simple root; returns the new ordering and weight.

    The root must be simple for b (alpha.r immediately before alpha.s) and
    genuinely odd (opposite parities). The weight stays put when its r and s
    coefficients cancel, otherwise it drops by alpha.
    """
    i = b.position(alpha.r)
    j = b.position(alpha.s)
    if j != i + 1:
        raise ValueError(f"{alpha} is not simple here: indices are not adjacent in the ordering")
    if parity(alpha.r) == parity(alpha.s):
        raise ValueError(f"{alpha} is an even root; odd reflections need opposite parities")
    new_order = list(b.order)
    new_order[i], new_order[j] = new_order[j], new_order[i]
    nb = BorelOrdering(tuple(new_order), "custom")
    cr, cs = mu.coeff(alpha.r), mu.coeff(alpha.s)
    if cr + cs == 0:
        return nb, mu
    return nb, mu.add_coeffs({alpha.r: -1, alpha.s: 1})


# ---------------------------------------------------------------------------
# reflection sequences from the interleaved standard ordering


def _phase_pos_halves_first(n: int) -> list[OddRoot]:
    # wave j pulls the half j+1/2 left past the integers j, j-1, ..., 1
    seq = []
    for j in range(1, n):
        seq += [OddRoot(line(2 * i), line(2 * j + 1)) for i in range(j, 0, -1)]
    return seq


def _phase_pos_ints_first(n: int) -> list[OddRoot]:
    # wave j pulls the integer j left past the halves j-1/2, ..., 1/2
    seq = []
    for j in range(1, n + 1):
        seq += [OddRoot(line(2 * h - 1), line(2 * j)) for h in range(j, 0, -1)]
    return seq


def _phase_neg_halves_first(n: int) -> list[OddRoot]:
    # wave j pushes the integer -j right past the halves -j+1/2, ..., -1/2
    seq = []
    for j in range(1, n):
        seq += [OddRoot(line(-2 * j), line(-2 * j + 2 * i - 1)) for i in range(1, j + 1)]
    return seq


def _phase_neg_ints_first(n: int) -> list[OddRoot]:
    # wave h pushes the half h right past the integers ceil(h), ..., 0
    seq = []
    for j in range(1, n + 1):
        h2 = 1 - 2 * j
        seq += [OddRoot(line(h2), line(tw)) for tw in range(h2 + 1, 1, 2)]
    return seq


TARGETS = ("c", "s", "dc", "ds")

TARGET_FLAVOR = {
    "c": Flavor.PLAIN,
    "s": Flavor.BAR,
    "dc": Flavor.DIAMOND,
    "ds": Flavor.BAR_DIAMOND,
}

TARGET_NAMES = {"c": "c({n})", "s": "s({n})", "dc": "◇c({n})", "ds": "◇s({n})"}


def sequence_to_target(target: str, n: int) -> list[OddRoot]:
    """Odd reflections carrying the standard ordering to a one-sided one.

    Positive side first, then negative; the two phases touch disjoint
    indices. n must be at least 1.
    """
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}, got {target!r}")
    if n < 1:
        raise ValueError(f"rank parameter must be >= 1, got {n}")
    pos = _phase_pos_ints_first(n) if target in ("c", "dc") else _phase_pos_halves_first(n)
    neg = _phase_neg_ints_first(n) if target in ("dc", "ds") else _phase_neg_halves_first(n)
    return pos + neg


def sequence_standard_to_bs(n: int) -> list[OddRoot]:
    """The sequence for the two-sided half-integer ordering (target 's')."""
    return sequence_to_target("s", n)


def sequence_gl_k2(k: int) -> list[OddRoot]:
    """Push epsilon_{-1/2} past every bar, one odd reflection per bar."""
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    return [OddRoot(line(-1), bar(i)) for i in range(1, k + 1)]


def _max_rows_cols(t: DominantTuple, target: str) -> list[tuple[str, int]]:
    lm_rows = t.lam_minus[0] if t.lam_minus else 0
    lm_cols = len(t.lam_minus)
    lp_rows = t.lam_plus[0] if t.lam_plus else 0
    lp_cols = len(t.lam_plus)
    if target == "c":
        return [("lam_minus column count", lm_cols), ("lam_plus column count", lp_cols)]
    if target == "s":
        return [("lam_minus column count", lm_cols), ("lam_plus first part", lp_rows)]
    if target == "dc":
        return [("lam_minus first part", lm_rows), ("lam_plus column count", lp_cols)]
    return [("lam_minus first part", lm_rows), ("lam_plus first part", lp_rows)]


def transport_highest_weight(t: DominantTuple, n: int, target: str) -> tuple[BorelOrdering, Weight]:
    """Carry the interleaved highest weight of t through the full sequence.

    Returns the final ordering and weight. The result is not looked up from
    the closed-form labels; it is produced by folding odd_reflect, so tests
    can compare the two routes independently.
    """
    if target not in TARGETS:
        raise ValueError(f"target must be one of {TARGETS}, got {target!r}")
    for what, size in _max_rows_cols(t, target):
        if size > n:
            raise ValueError(f"transport to {target} at n={n} needs {what} <= {n}, got {size}")
    b = standard_window(t.k, -2 * n - 2, 2 * n + 2)
    mu = to_weight(t, Flavor.TILDE)
    for alpha in sequence_to_target(target, n):
        b, mu = odd_reflect(b, mu, alpha)
    b = BorelOrdering(b.order, TARGET_NAMES[target].format(n=n))
    return b, mu


def gl_k2_nonstandard(k: int) -> BorelOrdering:
    """Window -1/2 < bars < 1/2, the block shape 1|k|1."""
    order = (line(-1),) + tuple(bar(i) for i in range(1, k + 1)) + (line(1),)
    return BorelOrdering(order, "gl(k|2)-nonstandard")


def gl_k2_standard(k: int) -> BorelOrdering:
    """Window bars < -1/2 < 1/2, even part first."""
    order = tuple(bar(i) for i in range(1, k + 1)) + (line(-1), line(1))
    return BorelOrdering(order, "gl(k|2)-standard")


def positive_roots(b: BorelOrdering) -> list[tuple[IndexKey, IndexKey]]:
    """All pairs (earlier, later) of the window."""
    out = []
    for i, r in enumerate(b.order):
        for s in b.order[i + 1 :]:
            out.append((r, s))
    return out


def root_parity(r: IndexKey, s: IndexKey) -> int:
    """1 for an odd root (endpoints of opposite parity), else 0."""
    return parity(r) ^ parity(s)


def height_of_drop(b: BorelOrdering, drop: dict[IndexKey, int]) -> int | None:
    """Express a coefficient drop in b's simple roots and return its height.

    drop maps indices to how much was subtracted (so a positive entry means
    the weight lost that much there). Returns None if the drop is not a
    non-negative combination of b's simple roots.
    """
    total = 0
    running = 0
    for ix in b.order[:-1]:
        running += drop.get(ix, 0)
        if running < 0:
            return None
        total += running
    running += drop.get(b.order[-1], 0)
    if running != 0:
        return None
    for ix in drop:
        if drop[ix] and ix not in b.order:
            return None
    return total
