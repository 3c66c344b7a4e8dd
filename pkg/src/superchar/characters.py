"""Formal characters at a fixed depth.

A character here is a finite window of an infinite formal sum: a base
weight together with integer multiplicities on the cone of non-negative
simple-root drops, cut off at a chosen height. The standalone Verma
character is the usual even/odd product over positive roots, divided by
marked bar-block Levi factors through an alternating Weyl sum. Irreducible
and tilting characters live in the parabolic categories whose Levi also
swallows each line side of the window wholesale (that is what the wedge
structure behind the transition values means); their building blocks are
category Verma characters, assembled as tableau-monomial run characters
times the free product over cross-run roots, weighted by the block's dual
canonical respectively canonical values at 1. A Hecke route through the
Coxeter bridge is available on purely even blocks as a cross-check;
disagreement raises CrossOracleError rather than picking a winner.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from . import hecke
from .dynkin import BorelOrdering, OddRoot, flavor_window, gl_k2_nonstandard, gl_k2_standard, odd_reflect, sequence_gl_k2
from .fock import CBTable, FockMonomial, FockShape, WindowError, block_to_coxeter, tuple_to_label
from .laurent import LaurentPoly
from .partition import super_schur_monomials
from .weight import (
    DominantTuple,
    Flavor,
    IndexKey,
    Weight,
    bar,
    finite_coordinates,
    format_index,
    from_weight,
    is_bar,
    is_line,
    line,
    parity,
    to_weight,
)

Ranks = tuple[int | None, int | None]


class CrossOracleError(RuntimeError):
    """The fock and hecke engines disagreed on a transition value."""


# ---------------------------------------------------------------------------
# drop vectors


def weight_drop(base: Weight, target: Weight) -> dict[IndexKey, int] | None:
    """Coefficientwise base - target, or None when the levels differ."""
    if base.level != target.level:
        return None
    d = {ix: c for ix, c in base.items}
    for ix, c in target.items:
        d[ix] = d.get(ix, 0) - c
    return d


def drop_vector(order: tuple[IndexKey, ...], delta: Mapping[IndexKey, int]) -> tuple[int, ...] | None:
    """Express a coefficient drop over the consecutive simple roots of order.

    Entry p (0-based) is the multiplicity of the root from order[p] to
    order[p+1]. Returns None when the drop has support off the window or
    is not a non-negative combination.
    """
    inside = set(order)
    for ix, amt in delta.items():
        if amt and ix not in inside:
            return None
    vec = []
    run = 0
    for ix in order[:-1]:
        run += delta.get(ix, 0)
        if run < 0:
            return None
        vec.append(run)
    if run + delta.get(order[-1], 0) != 0:
        return None
    return tuple(vec)


# ---------------------------------------------------------------------------
# the character container


class FormalCharacter:
    """Multiplicities on base - (non-negative simple-root drops), height <= depth.

    coeffs maps drop vectors (length = window size - 1) to integers; zero
    entries are stripped, and the all-zero dict is the zero character
    (the truncation proposition's "0, otherwise" branch). Instances are
    treated as immutable.
    """

    __slots__ = ("base", "borel", "depth", "coeffs")

    def __init__(self, base: Weight, borel: BorelOrdering, depth: int, coeffs: Mapping[tuple[int, ...], int]):
        if depth < 0:
            raise ValueError(f"depth must be >= 0, got {depth}")
        width = len(borel.order) - 1
        clean: dict[tuple[int, ...], int] = {}
        for vec, c in coeffs.items():
            if not c:
                continue
            if len(vec) != width:
                raise ValueError(f"drop vector {vec} does not fit a window of {width + 1} indices")
            if any(x < 0 for x in vec) or sum(vec) > depth:
                raise ValueError(f"drop vector {vec} leaves the depth-{depth} cone")
            clean[vec] = c
        self.base = base
        self.borel = borel
        self.depth = depth
        self.coeffs = clean

    def is_zero(self) -> bool:
        return not self.coeffs

    def multiplicity(self, vec: tuple[int, ...]) -> int:
        return self.coeffs.get(vec, 0)

    def weight_of(self, vec: tuple[int, ...]) -> Weight:
        """The weight sitting at a given drop vector."""
        order = self.borel.order
        delta: dict[IndexKey, int] = {}
        for p, m in enumerate(vec):
            if m:
                delta[order[p]] = delta.get(order[p], 0) - m
                delta[order[p + 1]] = delta.get(order[p + 1], 0) + m
        return self.base.add_coeffs(delta) if delta else self.base

    def coefficient_at(self, w: Weight) -> int:
        delta = weight_drop(self.base, w)
        if delta is None:
            return 0
        vec = drop_vector(self.borel.order, delta)
        return self.coeffs.get(vec, 0) if vec is not None else 0

    def sorted_terms(self) -> list[tuple[tuple[int, ...], int]]:
        """Terms ordered by height, then lexicographically by vector."""
        return sorted(self.coeffs.items(), key=lambda it: (sum(it[0]), it[0]))

    def weight_terms(self) -> list[tuple[Weight, int]]:
        return [(self.weight_of(vec), c) for vec, c in self.sorted_terms()]

    def __eq__(self, other) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return (
            self.base == other.base
            and self.borel.order == other.borel.order
            and self.depth == other.depth
            and self.coeffs == other.coeffs
        )

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __repr__(self) -> str:
        return f"FormalCharacter(base={self.base}, depth={self.depth}, terms={len(self.coeffs)})"

    def to_json_obj(self) -> dict:
        terms = []
        for vec, c in self.sorted_terms():
            drop = {str(p + 1): m for p, m in enumerate(vec) if m}
            terms.append({"drop": drop, "mult": c})
        return {
            "base": self.base.to_json_obj(),
            "depth": self.depth,
            "window": [format_index(ix) for ix in self.borel.order],
            "terms": terms,
        }

    def render(self) -> str:
        lines = [
            f"window: {self.borel.render()}",
            f"base: {self.base}",
            f"depth: {self.depth}",
            "height  mult  weight",
        ]
        for vec, c in self.sorted_terms():
            lines.append(f"{sum(vec):>6}  {c:>4}  {self.weight_of(vec)}")
        if self.is_zero():
            lines.append("(zero character)")
        return "\n".join(lines)


@dataclass(frozen=True)
class VermaFlag:
    """Verma-flag data of a tilting module, bottom entry first."""

    entries: tuple[tuple[Weight, int], ...]

    def __post_init__(self):
        for w, m in self.entries:
            if m <= 0:
                raise ValueError(f"flag multiplicity at {w} must be positive, got {m}")

    def to_json_obj(self) -> dict:
        return {"flag": [{"weight": w.to_json_obj(), "mult": m} for w, m in self.entries]}

    def render(self) -> str:
        if not self.entries:
            return "(empty flag)"
        return "\n".join(f"mult {m:>3}  {w}" for w, m in self.entries)


# ---------------------------------------------------------------------------
# Verma characters


@lru_cache(maxsize=None)
def _verma_table(order: tuple[IndexKey, ...], depth: int) -> tuple[dict[tuple[int, ...], int], ...]:
    """Drop multiplicities of the unmarked Verma product, grouped by height.

    Entry h maps vectors of height h to their multiplicity in the product
    of 1/(1 - e^{-a}) over even positive roots and (1 + e^{-a}) over odd
    ones, truncated at the given depth.
    """
    grouped: tuple[dict[tuple[int, ...], int], ...] = tuple({} for _ in range(depth + 1))
    for vec, c in _cross_table(order, (), depth).items():
        grouped[sum(vec)][vec] = c
    return grouped


def _mark_runs(marks: frozenset[int]) -> list[tuple[int, int]]:
    # mark j couples bars j and j+1; maximal runs (a, b) couple bars a..b
    if not marks:
        return []
    ms = sorted(marks)
    runs = []
    start = prev = ms[0]
    for j in ms[1:]:
        if j == prev + 1:
            prev = j
            continue
        runs.append((start, prev + 1))
        start = prev = j
    runs.append((start, prev + 1))
    return runs


def _levi_translates(mu: Weight, marks: frozenset[int]) -> list[tuple[int, dict[IndexKey, int]]]:
    """Signed dot-action translates of mu under the marked Levi's Weyl group.

    Each entry is (sign, delta) with delta mapping bar indices to the
    coefficient lost relative to mu. The identity gives (1, {}). Raises
    when mu is not weakly decreasing across a marked root.
    """
    out: list[tuple[int, dict[IndexKey, int]]] = [(1, {})]
    for a, b in _mark_runs(marks):
        r = b - a + 1
        coords = [mu.coeff(bar(i)) for i in range(a, b + 1)]
        for i in range(r - 1):
            if coords[i] < coords[i + 1]:
                raise ValueError(f"weight is not dominant across the marked root at bar {a + i}")
        # dot action through the per-run staircase; entries strictly decrease
        shifted = [coords[i] + (r - 1 - i) for i in range(r)]
        translates = []
        for perm in itertools.permutations(range(r)):
            inv = sum(1 for x in range(r) for y in range(x + 1, r) if perm[x] > perm[y])
            moved = [shifted[perm[i]] - (r - 1 - i) for i in range(r)]
            delta = {bar(a + i): coords[i] - moved[i] for i in range(r) if coords[i] != moved[i]}
            translates.append((-1 if inv % 2 else 1, delta))
        out = [(s1 * s2, {**d1, **d2}) for s1, d1 in out for s2, d2 in translates]
    return out


def verma_character(
    mu: Weight, b: BorelOrdering, depth: int, marks: frozenset[int] = frozenset()
) -> FormalCharacter:
    """Character of the (parabolic) Verma module with highest weight mu.

    marks name the bar-adjacent simple roots wedged into the Levi, in the
    same convention as DominantTuple.y0; the default is the plain Verma.
    The window must carry every index mu touches.
    """
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    inside = set(b.order)
    for ix, c in mu.items:
        if c and ix not in inside:
            raise WindowError(f"weight touches {format_index(ix)} outside the window")
    for j in marks:
        if bar(j) not in inside or bar(j + 1) not in inside:
            raise WindowError(f"marked root {j} needs bars {j} and {j + 1} inside the window")
    coeffs = _assemble(b, depth, [(1, mu, marks)])
    char = FormalCharacter(mu, b, depth, coeffs)
    zero = (0,) * (len(b.order) - 1)
    assert char.multiplicity(zero) == 1, "Verma character lost its highest weight"
    if any(c < 0 for c in char.coeffs.values()):
        raise AssertionError("parabolic Verma character came out negative; Levi data is inconsistent")
    return char


def _assemble(
    b: BorelOrdering, depth: int, pieces: Iterable[tuple[int, Weight, frozenset[int]]]
) -> dict[tuple[int, ...], int]:
    """Sum of a * (parabolic Verma at w), each expanded to the shared depth.

    pieces yields (coefficient, highest weight, marks). Weights must be
    comparable below the first piece's weight for the result to make sense
    as one character; this helper only accumulates drop vectors relative
    to each piece's own top, shifted by the piece offset.
    """
    order = b.order
    table = _verma_table(order, depth)
    coeffs: dict[tuple[int, ...], int] = {}
    base: Weight | None = None
    for a, w, marks in pieces:
        if base is None:
            base = w
            offset: tuple[int, ...] | None = (0,) * (len(order) - 1)
        else:
            delta = weight_drop(base, w)
            offset = drop_vector(order, delta) if delta is not None else None
        if offset is None:
            raise AssertionError(f"piece at {w} is not below the base {base} on this window")
        h0 = sum(offset)
        if h0 > depth:
            continue
        for sign, delta in _levi_translates(w, marks):
            tvec = drop_vector(order, delta)
            assert tvec is not None, "Levi translate fell off the simple-root cone"
            start = tuple(x + y for x, y in zip(offset, tvec))
            hs = sum(start)
            if hs > depth:
                continue
            s = a * sign
            for h in range(depth - hs + 1):
                for vec, c in table[h].items():
                    key = vec if hs == 0 else tuple(x + y for x, y in zip(start, vec))
                    acc = coeffs.get(key, 0) + s * c
                    if acc:
                        coeffs[key] = acc
                    else:
                        coeffs.pop(key, None)
    return coeffs


# ---------------------------------------------------------------------------
# category Verma characters
#
# The block categories are parabolic: besides the y0 runs in the bar block,
# each line side of the window belongs to the Levi wholesale, matching the
# wedge structure of the Fock space the transition values come from. One
# such Verma character is the product of its Levi-top character (tableau
# monomials, so manifestly non-negative) with the free even/odd product
# over the positive roots between distinct runs.


def _levi_spans(order: tuple[IndexKey, ...], y0: frozenset[int]) -> tuple[tuple[int, int], ...]:
    """Position ranges (inclusive) of the Levi runs on this window."""
    neg = [i for i, ix in enumerate(order) if is_line(ix) and ix[1] <= 0]
    pos = [i for i, ix in enumerate(order) if is_line(ix) and ix[1] > 0]
    bars = {ix[1]: i for i, ix in enumerate(order) if is_bar(ix)}
    spans: list[tuple[int, int]] = []
    for side in (neg, pos):
        if len(side) > 1:
            if side[-1] - side[0] != len(side) - 1:
                raise AssertionError("line side is not contiguous in this ordering")
            spans.append((side[0], side[-1]))
    for a, b in _mark_runs(y0):
        lo, hi = bars[a], bars[b]
        if hi - lo != b - a:
            raise AssertionError("marked bar run is not contiguous in this ordering")
        spans.append((lo, hi))
    return tuple(sorted(spans))


@lru_cache(maxsize=None)
def _cross_table(
    order: tuple[IndexKey, ...], spans: tuple[tuple[int, int], ...], depth: int
) -> dict[tuple[int, ...], int]:
    """Drop multiplicities of the root product outside the Levi runs.

    Same expansion as _verma_table but positive roots with both ends in a
    common span are left out; those live in the Levi and are accounted for
    by the run characters.
    """
    width = len(order) - 1
    run_of: dict[int, int] = {}
    for s, (a, b) in enumerate(spans):
        for i in range(a, b + 1):
            run_of[i] = s
    table: dict[tuple[int, ...], int] = {(0,) * width: 1}
    for i in range(len(order)):
        pi = parity(order[i])
        for j in range(i + 1, len(order)):
            h = j - i
            if h > depth:
                break
            if run_of.get(i, -1) == run_of.get(j, -2):
                continue
            odd = pi ^ parity(order[j])
            for vec, c in list(table.items()):
                room = depth - sum(vec)
                t = 1
                while t * h <= room:
                    lifted = list(vec)
                    for p in range(i, j):
                        lifted[p] += t
                    key = tuple(lifted)
                    table[key] = table.get(key, 0) + c
                    if odd:
                        break
                    t += 1
    return table


def _run_drops(
    span: tuple[int, int],
    parities: tuple[int, ...],
    shape: tuple[int, ...],
    reverse: bool,
    width: int,
    depth: int,
) -> tuple[tuple[int, ...], tuple[tuple[tuple[int, ...], int, int], ...]]:
    """One Levi-top character as (top counts, ((drop vec, height, mult), ...)).

    The polynomial module of the shape is generated on the span's alphabet;
    reverse mirrors the alphabet and negates the counts, the dual-module
    convention of the non-positive side. Drops are relative to the top and
    clipped at the depth.
    """
    a, b = span
    mons = super_schur_monomials(shape, parities[::-1] if reverse else parities)
    if not mons:
        raise AssertionError("Levi top admits no filling; shape and alphabet disagree")
    counted = [tuple(-x for x in c[::-1]) if reverse else c for c, _ in mons]
    top = max(counted)
    out: list[tuple[tuple[int, ...], int, int]] = []
    for counts, (_, mult) in zip(counted, mons):
        vec = [0] * width
        run = 0
        height = 0
        for i in range(a, b + 1):
            run += top[i - a] - counts[i - a]
            if i < b:
                assert run >= 0, "run monomial escaped the top's root cone"
                vec[i] = run
                height += run
        assert run == 0, "run monomial changed the total content"
        if height <= depth:
            out.append((tuple(vec), height, mult))
    return top, tuple(out)


@lru_cache(maxsize=None)
def _category_verma_drops(
    t: DominantTuple, flavor: Flavor, order: tuple[IndexKey, ...], depth: int
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Drop expansion of the category Verma at t, relative to its own top.

    Entries are (drop vector, multiplicity) with the zero vector carrying
    the highest weight. The level never appears: its fold into finite
    coordinates is one Berezinian twist of each side run, shared by every
    weight of the block, so drops cancel it.
    """
    w = to_weight(t, flavor)
    spans = _levi_spans(order, t.y0)
    width = len(order) - 1
    acc = dict(_cross_table(order, spans, depth))
    for a, b in spans:
        pars = tuple(parity(order[i]) for i in range(a, b + 1))
        if is_bar(order[a]):
            vals = [w.coeff(order[i]) for i in range(a, b + 1)]
            shift = vals[-1]
            shape = tuple(v - shift for v in vals if v != shift)
            expected = tuple(v - shift for v in vals)
            reverse = False
        elif order[a][1] <= 0:
            shape, reverse = t.lam_minus, True
            expected = tuple(w.coeff(order[i]) for i in range(a, b + 1))
        else:
            shape, reverse = t.lam_plus, False
            expected = tuple(w.coeff(order[i]) for i in range(a, b + 1))
        top, drops = _run_drops((a, b), pars, shape, reverse, width, depth)
        if top != expected:
            raise AssertionError(
                f"Levi top {top} disagrees with the dictionary slice {expected} at {t.format()}"
            )
        if len(drops) == 1:
            continue
        new: dict[tuple[int, ...], int] = {}
        for v1, m1 in acc.items():
            room = depth - sum(v1)
            for v2, h2, m2 in drops:
                if h2 > room:
                    continue
                key = tuple(x + y for x, y in zip(v1, v2))
                new[key] = new.get(key, 0) + m1 * m2
        acc = new
    return tuple(acc.items())


def _assemble_tuples(
    b: BorelOrdering, flavor: Flavor, depth: int, pieces: Iterable[tuple[int, DominantTuple]]
) -> dict[tuple[int, ...], int]:
    """Sum of a * (category Verma at mu), expanded to the shared depth.

    The first piece fixes the base weight; later pieces accumulate at
    their drop offsets below it.
    """
    order = b.order
    coeffs: dict[tuple[int, ...], int] = {}
    base: Weight | None = None
    for a, mu in pieces:
        w = to_weight(mu, flavor)
        if base is None:
            base = w
            offset: tuple[int, ...] | None = (0,) * (len(order) - 1)
        else:
            delta = weight_drop(base, w)
            offset = drop_vector(order, delta) if delta is not None else None
        if offset is None:
            raise AssertionError(f"piece at {mu.format()} is not below the base {base} on this window")
        h0 = sum(offset)
        if h0 > depth:
            continue
        for vec, m in _category_verma_drops(mu, flavor, order, depth - h0):
            key = tuple(x + y for x, y in zip(offset, vec))
            got = coeffs.get(key, 0) + a * m
            if got:
                coeffs[key] = got
            else:
                coeffs.pop(key, None)
    return coeffs


# ---------------------------------------------------------------------------
# block data shared by the irreducible and tilting assemblies


def _support_ranks(w: Weight) -> tuple[int, int]:
    """Minimal (m, n) whose flavor windows contain the line support of w."""
    m = n = 0
    for ix, c in w.items:
        if not c or is_bar(ix):
            continue
        tw = ix[1]
        if tw <= 0:
            m = max(m, (-tw) // 2 + 1 if tw % 2 == 0 else (1 - tw) // 2)
        else:
            n = max(n, tw // 2 if tw % 2 == 0 else (tw + 1) // 2)
    return m, n


def _index_alive(ix: IndexKey, m: int | None, n: int | None) -> bool:
    if is_bar(ix):
        return True
    tw = ix[1]
    if m is not None and tw <= -2 * m:
        return False
    if n is not None:
        if tw % 2 == 0 and tw >= 2 * n + 2:
            return False
        if tw % 2 != 0 and tw >= 2 * n + 1:
            return False
    return True


def _weight_survives(w: Weight, m: int | None, n: int | None) -> bool:
    return all(_index_alive(ix, m, n) for ix, c in w.items if c)


def _window_for(t: DominantTuple, flavor: Flavor, ranks: Ranks, depth: int) -> tuple[BorelOrdering, Weight, bool]:
    """The window, base weight, and whether any truncation is active."""
    m, n = ranks
    if (m is not None and m < 0) or (n is not None and n < 0):
        raise ValueError("ranks must be non-negative or None for the full window")
    base = to_weight(t, flavor)
    need_m, need_n = _support_ranks(base)
    margin = (depth + 1) // 2 if flavor is Flavor.TILDE else depth
    m_eff = m if m is not None else need_m + margin
    n_eff = n if n is not None else need_n + margin
    borel = flavor_window(flavor, t.k, m_eff, n_eff)
    return borel, base, m is not None or n is not None


@lru_cache(maxsize=None)
def _get_table(shape: FockShape, window: tuple[int, int]) -> CBTable:
    return CBTable(shape, window)


def _letter_content(lab: FockMonomial, shape: FockShape):
    """Signed letter counts, the invariant separating linkage classes."""
    counts: dict[int, int] = {}
    for p, x in enumerate(lab.letters):
        counts[x] = counts.get(x, 0) + (1 if shape.kind(p) == "v" else -1)
    return tuple(sorted((x, c) for x, c in counts.items() if c))


@lru_cache(maxsize=None)
def _dominant_below(
    base: Weight, borel: BorelOrdering, flavor: Flavor, k: int, y0: frozenset[int], depth: int
) -> tuple[tuple[DominantTuple, int], ...]:
    """Dominant tuples under base within the height horizon, with heights.

    Walks the non-negative multiplicity vectors over the simple roots of
    the window with total at most depth and keeps the weights that invert
    to a dominant tuple carrying the same marks. Prefixes that already
    break the slice shape are cut: line coefficients must carry the sign
    of their side, each side must be weakly decreasing along the window
    (per parity class when both parities share a side), and marked bar
    pairs must be weakly decreasing. Coefficients are final once the walk
    passes them, so these cuts lose no valid leaf.
    """
    order = borel.order
    base_c = [base.coeff(ix) for ix in order]
    L = len(order)
    tilde = flavor is Flavor.TILDE
    sign_req = [0] * L
    cmp_prev: list[int | None] = [None] * L
    for j, ix in enumerate(order):
        if is_bar(ix):
            if (ix[1] - 1) in y0:
                cmp_prev[j] = j - 1
            continue
        side = 1 if ix[1] > 0 else -1
        sign_req[j] = side
        for i in range(j - 1, -1, -1):
            px = order[i]
            if not is_line(px) or (1 if px[1] > 0 else -1) != side:
                break
            if not tilde or (px[1] - ix[1]) % 2 == 0:
                cmp_prev[j] = i
                break

    out: list[tuple[DominantTuple, int]] = []

    def leaf(coeffs: list[int], spent: int) -> None:
        w = Weight.of({ix: c for ix, c in zip(order, coeffs)}, base.level)
        try:
            out.append((from_weight(w, flavor, k, y0), spent))
        except ValueError:
            pass

    def ok(j: int, c: int, coeffs: list[int]) -> bool:
        if sign_req[j] > 0 and c < 0:
            return False
        if sign_req[j] < 0 and c > 0:
            return False
        p = cmp_prev[j]
        return p is None or c <= coeffs[p]

    def walk(j: int, prev: int, spent: int, coeffs: list[int]) -> None:
        if j == L - 1:
            c = base_c[j] + prev
            if ok(j, c, coeffs):
                coeffs.append(c)
                leaf(coeffs, spent)
                coeffs.pop()
            return
        for mj in range(depth - spent + 1):
            c = base_c[j] + prev - mj
            if not ok(j, c, coeffs):
                if sign_req[j] > 0 and c < 0:
                    break
                continue
            coeffs.append(c)
            walk(j + 1, mj, spent + mj, coeffs)
            coeffs.pop()

    walk(0, 0, 0, [])
    return tuple(out)


def _block_labels(t: DominantTuple, flavor: Flavor, ranks: Ranks, depth: int):
    """Wedge labels for the block members within the height horizon.

    Content membership is tested at probe pads wide enough for every
    candidate; slots beyond a label's columns hold the same vacuum
    letters for everyone, so the test is pad-stable and the final pads
    can be fixed by the surviving members alone. That keeps the letter
    window tight even when the horizon admits wide shapes outside the
    block.
    """
    borel, base, _ = _window_for(t, flavor, ranks, depth)
    cands = _dominant_below(base, borel, flavor, t.k, t.y0, depth)
    probe_m = max(max((mu.lam_minus[0] if mu.lam_minus else 0) for mu, _ in cands), 1)
    probe_n = max(max((mu.lam_plus[0] if mu.lam_plus else 0) for mu, _ in cands), 1)
    probe = FockShape(probe_m, t.k, probe_n, t.y0)
    content = _letter_content(tuple_to_label(t, probe_m, probe_n), probe)
    block = [
        (mu, h)
        for mu, h in cands
        if _letter_content(tuple_to_label(mu, probe_m, probe_n), probe) == content
    ]
    pad_m = max(max((mu.lam_minus[0] if mu.lam_minus else 0) for mu, _ in block), 1)
    pad_n = max(max((mu.lam_plus[0] if mu.lam_plus else 0) for mu, _ in block), 1)
    shape = FockShape(pad_m, t.k, pad_n, t.y0)
    seed = tuple_to_label(t, pad_m, pad_n)
    labeled = [(mu, h, tuple_to_label(mu, pad_m, pad_n)) for mu, h in block]
    return shape, seed, labeled


@lru_cache(maxsize=None)
def _block_values(t: DominantTuple, flavor: Flavor, ranks: Ranks, depth: int, kind: str):
    """Transition values at 1 for every dominant tuple under t in its block.

    Returns ((mu, height, value), ...) over the tuples within the height
    horizon whose value is nonzero. Correction order on wedge labels runs
    opposite to the weight order, so the expansion based at t is carried
    by the inverse transition matrix: the value at mu is the (t, mu) entry
    of the inverse of the canonical (kind 'dual', irreducible in Vermas)
    respectively dual canonical (kind 'canonical', tilting flag) matrix
    over the block, the usual inversion pairing between the two bases.
    The seed row of the inverse comes from one back-substitution along a
    global topological order of the candidate closures; labels outside
    the letter window cannot re-enter a closure, so the row is exact.

    Finite ranks enumerate candidates on the truncated window and work in
    the correspondingly small wedge space, which is the finite-rank form
    of the correspondence; values on surviving tuples agree with the full
    ones, so this is also the cheap route when truncation is requested.
    """
    if kind not in ("dual", "canonical"):
        raise ValueError(f"kind must be 'dual' or 'canonical', got {kind!r}")
    shape, seed, labeled = _block_labels(t, flavor, ranks, depth)
    if len(labeled) == 1:
        # typical weight: the block is a singleton and the matrix is (1)
        mu, h, _ = labeled[0]
        return ((mu, h, 1),)
    letters = [x for _, _, lab in labeled for x in lab.letters]
    table = _get_table(shape, (min(letters), max(letters)))

    order: list[FockMonomial] = []
    state: dict[FockMonomial, int] = {}

    def visit(node: FockMonomial) -> None:
        st = state.get(node)
        if st == 2:
            return
        if st == 1:
            raise AssertionError("bar corrections form a cycle; triangularity lost")
        state[node] = 1
        for other in table.bar_label(node):
            if other != node:
                visit(other)
        state[node] = 2
        order.append(node)

    for _, _, lab in sorted(labeled, key=lambda e: e[2].letters):
        visit(lab)

    row: dict[FockMonomial, LaurentPoly] = {seed: LaurentPoly.one()}
    past_seed = False
    for lab in order:
        if lab == seed:
            past_seed = True
            continue
        if not past_seed:
            continue
        column = table.canonical(lab) if kind == "dual" else table.dual_canonical(lab)
        acc = LaurentPoly.zero()
        for z, c in column.items():
            xz = row.get(z)
            if z == lab or xz is None:
                continue
            acc = acc + xz * c
        if not acc.is_zero():
            row[lab] = LaurentPoly.zero() - acc

    out: list[tuple[DominantTuple, int, int]] = []
    for mu, h, lab in labeled:
        got = row.get(lab)
        value = got.at_one() if got is not None else 0
        if value:
            out.append((mu, h, value))
    return tuple(out)


def _hecke_values(
    t: DominantTuple, flavor: Flavor, ranks: Ranks, depth: int, kind: str
) -> dict[DominantTuple, int]:
    """The same transition values through the Coxeter bridge.

    Only purely even blocks map across; mixed shapes raise ValueError.
    kind 'dual' takes the inverse matrix (irreducible in Vermas), kind
    'canonical' the forward one (tilting flag multiplicities).
    """
    shape, seed, labeled = _block_labels(t, flavor, ranks, depth)
    in_block = [(mu, lab) for mu, _, lab in labeled]
    labels = [lab for _, lab in in_block]
    rank, J, perms = block_to_coxeter(labels, shape)
    xs = list(perms.values())
    direction = "l-to-verma" if kind == "dual" else "verma-to-l"
    matrix = hecke.transition_at_one(J, xs, rank, direction)
    top = perms[seed]
    return {mu: matrix.get((top, perms[lab]), 0) for mu, lab in in_block}


def _resolved_values(
    t: DominantTuple, flavor: Flavor, ranks: Ranks, depth: int, kind: str, engine: str
) -> tuple[tuple[DominantTuple, int, int], ...]:
    fock_vals = _block_values(t, flavor, ranks, depth, kind)
    if engine == "fock":
        return fock_vals
    if engine not in ("hecke", "both"):
        raise ValueError(f"engine must be 'fock', 'hecke' or 'both', got {engine!r}")
    hecke_vals = _hecke_values(t, flavor, ranks, depth, kind)
    by_tuple = {mu: v for mu, _, v in fock_vals}
    for mu, hv in hecke_vals.items():
        fv = by_tuple.get(mu, 0)
        if fv != hv:
            raise CrossOracleError(
                f"transition value at {mu.format()} disagrees: fock {fv}, hecke {hv} (top {t.format()})"
            )
    if engine == "hecke":
        heights = {mu: h for mu, h, _ in fock_vals}
        return tuple((mu, heights[mu], v) for mu, v in hecke_vals.items() if v)
    return fock_vals


def _block_pieces(
    t: DominantTuple, flavor: Flavor, ranks: Ranks, depth: int, kind: str, engine: str
) -> tuple[BorelOrdering, Weight, list[tuple[int, DominantTuple]] | None]:
    """Window, base, and the signed Verma tops for one assembled character.

    Returns pieces = None when the base itself dies under the requested
    truncation (the zero-character branch).
    """
    borel, base, truncating = _window_for(t, flavor, ranks, depth)
    m, n = ranks
    if truncating and not _weight_survives(base, m, n):
        return borel, base, None
    pieces: list[tuple[int, DominantTuple]] = [(1, t)]
    if depth == 0:
        return borel, base, pieces
    for mu, _, a in _resolved_values(t, flavor, ranks, depth, kind, engine):
        if mu == t:
            if a != 1:
                raise AssertionError(f"transition matrix lost its unit diagonal at {t.format()}")
            continue
        if truncating and not _weight_survives(to_weight(mu, flavor), m, n):
            continue
        pieces.append((a, mu))
    return borel, base, pieces


def irreducible_character(
    t: DominantTuple, flavor: Flavor, ranks: Ranks, depth: int, engine: str = "fock"
) -> FormalCharacter:
    """Irreducible character as a signed sum of parabolic Verma characters.

    The expansion coefficients are the block's dual canonical values at 1,
    restricted to tuples surviving the requested truncation; ranks of None
    mean a window padded wide enough to be exact at this depth.
    """
    borel, base, pieces = _block_pieces(t, flavor, ranks, depth, "dual", engine)
    if pieces is None:
        return FormalCharacter(base, borel, depth, {})
    char = FormalCharacter(base, borel, depth, _assemble_tuples(borel, flavor, depth, pieces))
    zero = (0,) * (len(borel.order) - 1)
    assert char.multiplicity(zero) == 1, "irreducible character lost its highest weight"
    return char


def tilting_character(
    t: DominantTuple, flavor: Flavor, ranks: Ranks, depth: int, engine: str = "fock"
) -> tuple[FormalCharacter, VermaFlag]:
    """Tilting character and its Verma flag, bottom entry first.

    Flag multiplicities are the canonical-basis transition values at 1;
    the bottom entry is always (highest weight, 1).
    """
    borel, base, pieces = _block_pieces(t, flavor, ranks, depth, "canonical", engine)
    if pieces is None:
        return FormalCharacter(base, borel, depth, {}), VermaFlag(())
    weighted = [(a, to_weight(mu, flavor)) for a, mu in pieces]
    for a, w in weighted:
        if a < 0:
            raise AssertionError(f"tilting flag multiplicity {a} at {w} is negative")
    ordered = [weighted[0]] + sorted(
        weighted[1:], key=lambda p: (sum(drop_vector(borel.order, weight_drop(base, p[1]))), str(p[1]))
    )
    flag = VermaFlag(tuple((w, a) for a, w in ordered))
    char = FormalCharacter(base, borel, depth, _assemble_tuples(borel, flavor, depth, pieces))
    return char, flag


def truncate_character(c: FormalCharacter, ranks: Ranks) -> FormalCharacter:
    """Restrict a character to the indices alive at the given ranks.

    Terms whose weights touch dead indices are dropped; if the base weight
    itself dies the zero character over the shrunken window is returned.
    """
    m, n = ranks
    if m is None and n is None:
        return c
    kept = tuple(ix for ix in c.borel.order if _index_alive(ix, m, n))
    label = f"{c.borel.name}|tr({'*' if m is None else m},{'*' if n is None else n})"
    small = BorelOrdering(kept, label)
    if not _weight_survives(c.base, m, n):
        return FormalCharacter(c.base, small, c.depth, {})
    out: dict[tuple[int, ...], int] = {}
    for vec, mult in c.coeffs.items():
        w = c.weight_of(vec)
        if not _weight_survives(w, m, n):
            continue
        nv = drop_vector(kept, weight_drop(c.base, w))
        assert nv is not None, "surviving weight failed to re-embed in the truncated window"
        out[nv] = out.get(nv, 0) + mult
    return FormalCharacter(c.base, small, c.depth, out)


def extract_verma_coefficients(
    char: FormalCharacter, flavor: Flavor, y0: frozenset[int] = frozenset()
) -> dict[DominantTuple, int]:
    """Solve the unitriangular Verma expansion of a character, top down.

    Peels the lowest-height remaining term, reads its dominant tuple, and
    subtracts that many category Verma characters. A remaining term whose
    weight carries no dominant tuple means the character is not a Verma
    combination on this window; that raises ValueError.
    """
    order = char.borel.order
    k = sum(1 for ix in order if is_bar(ix))
    remaining = dict(char.coeffs)
    out: dict[DominantTuple, int] = {}
    while remaining:
        vec = min(remaining, key=lambda v: (sum(v), v))
        a = remaining[vec]
        w = char.weight_of(vec)
        try:
            mu_t = from_weight(w, flavor, k, y0)
        except ValueError as exc:
            raise ValueError(
                f"coefficient {a} sits at {w}, which is not a dominant tuple weight: {exc}"
            ) from exc
        out[mu_t] = a
        h0 = sum(vec)
        for dvec, m in _category_verma_drops(mu_t, flavor, order, char.depth - h0):
            key = tuple(x + y for x, y in zip(vec, dvec))
            left = remaining.get(key, 0) - a * m
            if left:
                remaining[key] = left
            else:
                remaining.pop(key, None)
    return out


# ---------------------------------------------------------------------------
# the gl(k|2) pipeline


def _det_twist(k: int) -> dict[IndexKey, int]:
    # the determinant weight on the 1|k|1 window
    d: dict[IndexKey, int] = {bar(i): 1 for i in range(1, k + 1)}
    d[line(-1)] = -1
    d[line(1)] = -1
    return d


def gl_k2_character(
    mu: Weight, k: int, borel: str = "nonstandard", depth: int = 4, engine: str = "fock"
) -> FormalCharacter:
    """Finite-dimensional-style irreducible character on the 1|k|1 window.

    mu is the highest weight with respect to the requested Borel ordering
    (gl_k2_nonstandard or gl_k2_standard) at level 0; the result is based
    at mu over that same ordering. Internally the weight is normalized by
    a determinant twist, pushed through the rank-(1,1) assembly on the
    half-integer side, and carried back by odd reflections when the
    standard ordering was asked for.
    """
    if k < 0:
        raise ValueError(f"k must be >= 0, got {k}")
    if mu.level != 0:
        raise ValueError("gl(k|2) weights are finite; expected level 0")
    allowed = {line(-1), line(1)} | {bar(i) for i in range(1, k + 1)}
    for ix, c in mu.items:
        if c and ix not in allowed:
            raise ValueError(f"weight touches {format_index(ix)} outside the 1|{k}|1 window")
    if borel not in ("nonstandard", "standard"):
        raise ValueError(f"borel must be 'nonstandard' or 'standard', got {borel!r}")

    nonstd = gl_k2_nonstandard(k)
    if borel == "standard":
        b, nu = gl_k2_standard(k), mu
        for alpha in reversed(sequence_gl_k2(k)):
            b, nu = odd_reflect(b, nu, OddRoot(alpha.s, alpha.r))
        assert b.order == nonstd.order
        # heights disagree between the orderings, so overshoot internally:
        # a drop of std height s changes the nonstd height by at most k per
        # unit, plus the constant offset of the two highest weights
        offset_vec = drop_vector(nonstd.order, weight_drop(nu, mu))
        assert offset_vec is not None
        inner_depth = (k + 1) * depth + sum(offset_vec)
    else:
        nu = mu
        inner_depth = depth

    q_hat = nu.coeff(line(1))
    hat = nu.add_coeffs(_det_twist(k), q_hat) if q_hat else nu
    assert hat.coeff(line(1)) == 0
    t = DominantTuple(-hat.coeff(line(-1)), tuple(hat.coeff(bar(i)) for i in range(1, k + 1)), (), ())
    big = irreducible_character(t, Flavor.BAR_DIAMOND, (1, 1), inner_depth, engine)
    # fold the level into coordinates and undo the twist; both shifts are
    # constant across the window, so every drop vector carries over
    base = finite_coordinates(big.base, big.borel.order)
    if q_hat:
        base = base.add_coeffs(_det_twist(k), -q_hat)
    assert base == nu, "pipeline did not return to the input weight"
    result = FormalCharacter(nu, nonstd, inner_depth, big.coeffs)
    if borel == "nonstandard":
        return result

    # rebase onto the standard ordering: same weights, drops re-expressed,
    # cut back to the requested depth
    std = gl_k2_standard(k)
    out: dict[tuple[int, ...], int] = {}
    for vec, c in result.coeffs.items():
        w = result.weight_of(vec)
        nv = drop_vector(std.order, weight_drop(mu, w))
        if nv is None:
            raise AssertionError(f"weight {w} of the module escaped the standard cone")
        if sum(nv) <= depth:
            out[nv] = out.get(nv, 0) + c
    return FormalCharacter(mu, std, depth, out)
