"""Hecke algebras of symmetric groups and Kazhdan-Lusztig bases.

Permutations are tuples in one-line notation, 1-based values. Everything
is computed in the balanced normalization: the generator H_i satisfies
H_i^2 = (v^{-1} - v) H_i + 1, the bar involution inverts v and each H_i,
and the self-dual basis element attached to w expands as

    b_w = H_w + sum over x < w of h_{x,w}(v) H_x,   h_{x,w} in v Z[v]

Classical polynomials come out through the exponent fold
P_{x,w}(q) = sum_d coeff(h, L - 2d) q^d with L = l(w) - l(x); the fold is
exact because all exponents of h share the parity of L.

The antispherical module over a parabolic J carries the same machinery;
its self-dual basis yields the parabolic polynomials used for Verma and
irreducible multiplicities.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .laurent import LaurentPoly

Perm = tuple[int, ...]

_V = LaurentPoly.q(1)
_VI = LaurentPoly.q(-1)
_DOWN = _V - _VI  # v - v^{-1}
_UP = _VI - _V


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def length(w: Perm) -> int:
    """Number of inversions."""
    n = len(w)
    return sum(1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j])


def mult(u: Perm, v: Perm) -> Perm:
    """(u v)(i) = u(v(i))."""
    return tuple(u[vi - 1] for vi in v)

def inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, wi in enumerate(w):
        out[wi - 1] = i + 1
    return tuple(out)


def apply_right_s(w: Perm, i: int) -> Perm:
    """w s_i: swap the entries in positions i, i+1 (1-based)."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def apply_left_s(w: Perm, i: int) -> Perm:
    """s_i w: swap the values i, i+1 wherever they sit."""
    tr = {i: i + 1, i + 1: i}
    return tuple(tr.get(x, x) for x in w)


def right_descents(w: Perm) -> list[int]:
    return [i for i in range(1, len(w)) if w[i - 1] > w[i]]


def reduced_word(w: Perm) -> list[int]:
    """One reduced word for w, letters are simple-root indices."""
    word = []
    while True:
        ds = right_descents(w)
        if not ds:
            break
        word.append(ds[0])
        w = apply_right_s(w, ds[0])
    word.reverse()
    return word


def bruhat_leq(x: Perm, w: Perm) -> bool:
    """Rank-matrix criterion for Bruhat order."""
    n = len(w)
    if len(x) != n:
        raise ValueError("permutations live in different symmetric groups")
    for i in range(1, n):
        xi = sorted(x[:i])
        wi = sorted(w[:i])
        # x <= w iff prefixes of x dominate entrywise from below
        for a, b in zip(xi, wi):
            if a > b:
                return False
    return True


def all_permutations(n: int) -> list[Perm]:
    return list(itertools.permutations(range(1, n + 1)))


def interval_below(w: Perm) -> list[Perm]:
    """All x <= w, sorted by length then lexicographically.

    Enumerates the whole symmetric group, so this is meant for small rank
    (the tests stay at n <= 6).
    """
    xs = [x for x in all_permutations(len(w)) if bruhat_leq(x, w)]
    xs.sort(key=lambda x: (length(x), x))
    return xs


def fold_to_classical(h: LaurentPoly, length_diff: int) -> LaurentPoly:
    """Turn h(v) = v^L P(v^{-2}) back into P(q).

    Every exponent must have L's parity and not exceed L; anything else
    means the input was not a KL-normalized entry.
    """
    coeffs = {}
    for e, c in h.items():
        if (length_diff - e) % 2 != 0 or e > length_diff:
            raise ValueError(f"exponent {e} incompatible with length difference {length_diff}")
        coeffs[(length_diff - e) // 2] = c
    return LaurentPoly(coeffs)


def _mult_hs_inv(elem: dict[Perm, LaurentPoly], i: int) -> dict[Perm, LaurentPoly]:
    """Right-multiply an H-basis expansion by H_i^{-1} = H_i + (v - v^{-1})."""
    out: dict[Perm, LaurentPoly] = {}

    def add(y, p):
        cur = out.get(y)
        out[y] = p if cur is None else cur + p

    for y, c in elem.items():
        ys = apply_right_s(y, i)
        if length(ys) > length(y):
            add(ys, c)
            add(y, c * _DOWN)
        else:
            add(ys, c)
    return {y: p for y, p in out.items() if not p.is_zero()}


class KLTable:
    """Memoized regular KL data for one symmetric group rank."""

    def __init__(self, n: int):
        self.n = n
        self._bar: dict[Perm, dict[Perm, LaurentPoly]] = {identity(n): {identity(n): LaurentPoly.one()}}
        self._canon: dict[Perm, dict[Perm, LaurentPoly]] = {}

    def bar_expansion(self, x: Perm) -> dict[Perm, LaurentPoly]:
        """bar(H_x) in the H basis."""
        got = self._bar.get(x)
        if got is not None:
            return got
        i = right_descents(x)[0]
        expanded = _mult_hs_inv(self.bar_expansion(apply_right_s(x, i)), i)
        self._bar[x] = expanded
        return expanded

    def canonical_in_v(self, w: Perm) -> dict[Perm, LaurentPoly]:
        """All h_{x,w}(v) for x <= w, solved from bar-invariance."""
        got = self._canon.get(w)
        if got is not None:
            return got
        xs = interval_below(w)
        h: dict[Perm, LaurentPoly] = {w: LaurentPoly.one()}
        for y in reversed(xs[:-1]):
            rhs = LaurentPoly.zero()
            for x in xs:
                if x == y or x not in h:
                    continue
                r = self.bar_expansion(x).get(y)
                if r is not None:
                    rhs = rhs + h[x].bar() * r
            # rhs = h_y - bar(h_y): anti-self-dual, so h_y is its positive half
            pos = {e: c for e, c in rhs.items() if e > 0}
            hy = LaurentPoly(pos)
            if not (hy - hy.bar() - rhs).is_zero():
                raise AssertionError("bar solve produced a non-anti-self-dual remainder")
            if not hy.is_zero():
                h[y] = hy
        self._canon[w] = h
        return h

    def kl(self, x: Perm, w: Perm) -> LaurentPoly:
        if x == w:
            return LaurentPoly.one()
        if not bruhat_leq(x, w):
            return LaurentPoly.zero()
        h = self.canonical_in_v(w).get(x, LaurentPoly.zero())
        return fold_to_classical(h, length(w) - length(x))


def kl_polynomial(x: Perm, w: Perm, table: KLTable | None = None) -> LaurentPoly:
    """Classical P_{x,w}(q); zero when x is not below w."""
    if table is None:
        table = KLTable(len(w))
    return table.kl(x, w)


# ---------------------------------------------------------------------------
# parabolic side: right cosets W_J \ W and the antispherical module


def check_parabolic(J: Iterable[int], n: int) -> frozenset[int]:
    Jf = frozenset(J)
    bad = [j for j in Jf if not 1 <= j <= n - 1]
    if bad:
        raise ValueError(f"parabolic generators {sorted(bad)} out of range for S_{n}")
    return Jf


def is_minimal(x: Perm, J: frozenset[int]) -> bool:
    """Minimal-length representative of its coset W_J x."""
    inv = inverse(x)
    return all(inv[j - 1] < inv[j] for j in J)


def parabolic_project(w: Perm, J: frozenset[int]) -> Perm:
    """The minimal representative of W_J w."""
    while True:
        inv = inverse(w)
        for j in J:
            if inv[j - 1] > inv[j]:
                w = apply_left_s(w, j)
                break
        else:
            return w


def minimal_reps(n: int, J: frozenset[int]) -> list[Perm]:
    xs = [x for x in all_permutations(n) if is_minimal(x, J)]
    xs.sort(key=lambda x: (length(x), x))
    return xs


def parabolic_subgroup(n: int, J: frozenset[int]) -> list[Perm]:
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for z in frontier:
            for j in J:
                zs = apply_right_s(z, j)
                if zs not in seen:
                    seen.add(zs)
                    nxt.append(zs)
        frontier = nxt
    return sorted(seen, key=lambda z: (length(z), z))


def _mult_ns_inv(elem: dict[Perm, LaurentPoly], i: int, J: frozenset[int]) -> dict[Perm, LaurentPoly]:
    """Right-multiply an n-basis expansion by H_i^{-1} in the antispherical module.

    Off the minimal representatives H_i acts by -v, hence its inverse by
    -v^{-1}; this is the eigenvalue that matches the wedge picture.
    """
    out: dict[Perm, LaurentPoly] = {}
    neg_vi = LaurentPoly.q(-1, -1)

    def add(y, p):
        cur = out.get(y)
        out[y] = p if cur is None else cur + p

    for y, c in elem.items():
        ys = apply_right_s(y, i)
        if not is_minimal(ys, J):
            add(y, c * neg_vi)
        elif length(ys) > length(y):
            add(ys, c)
            add(y, c * _DOWN)
        else:
            add(ys, c)
    return {y: p for y, p in out.items() if not p.is_zero()}


class AntisphericalTable:
    """Memoized antispherical KL data for (S_n, J)."""

    def __init__(self, n: int, J: Iterable[int]):
        self.n = n
        self.J = check_parabolic(J, n)
        e = identity(n)
        self._bar: dict[Perm, dict[Perm, LaurentPoly]] = {e: {e: LaurentPoly.one()}}
        self._canon: dict[Perm, dict[Perm, LaurentPoly]] = {}

    def bar_expansion(self, x: Perm) -> dict[Perm, LaurentPoly]:
        """bar(n_x) in the n basis, for x a minimal representative."""
        got = self._bar.get(x)
        if got is not None:
            return got
        if not is_minimal(x, self.J):
            raise ValueError(f"{x} is not a minimal coset representative")
        i = right_descents(x)[0]
        # prefixes of reduced words of minimal reps stay minimal
        expanded = _mult_ns_inv(self.bar_expansion(apply_right_s(x, i)), i, self.J)
        self._bar[x] = expanded
        return expanded

    def canonical_in_v(self, w: Perm) -> dict[Perm, LaurentPoly]:
        got = self._canon.get(w)
        if got is not None:
            return got
        if not is_minimal(w, self.J):
            raise ValueError(f"{w} is not a minimal coset representative")
        xs = [x for x in minimal_reps(self.n, self.J) if bruhat_leq(x, w)]
        h: dict[Perm, LaurentPoly] = {w: LaurentPoly.one()}
        for y in reversed(xs[:-1]):
            rhs = LaurentPoly.zero()
            for x in xs:
                if x == y or x not in h:
                    continue
                r = self.bar_expansion(x).get(y)
                if r is not None:
                    rhs = rhs + h[x].bar() * r
            pos = {e: c for e, c in rhs.items() if e > 0}
            hy = LaurentPoly(pos)
            if not (hy - hy.bar() - rhs).is_zero():
                raise AssertionError("antispherical bar solve lost self-duality")
            if not hy.is_zero():
                h[y] = hy
        self._canon[w] = h
        return h

    def parabolic_kl(self, x: Perm, w: Perm) -> LaurentPoly:
        """Classical parabolic polynomial for minimal representatives x, w."""
        if not is_minimal(x, self.J):
            raise ValueError(f"{x} is not a minimal coset representative")
        if x == w:
            return LaurentPoly.one()
        if not bruhat_leq(x, w):
            return LaurentPoly.zero()
        h = self.canonical_in_v(w).get(x, LaurentPoly.zero())
        return fold_to_classical(h, length(w) - length(x))


def parabolic_kl(J: Iterable[int], x: Perm, w: Perm, table: AntisphericalTable | None = None) -> LaurentPoly:
    if table is None:
        table = AntisphericalTable(len(w), J)
    return table.parabolic_kl(x, w)


def deodhar_alternating(J: Iterable[int], x: Perm, w: Perm, table: KLTable | None = None) -> LaurentPoly:
    """Parabolic polynomial as an alternating sum of regular ones.

    sum over z in W_J of (-1)^{l(z)} P_{zx, w}. Independent of the
    antispherical solve, which makes it a good cross-check.
    """
    n = len(w)
    Jf = check_parabolic(J, n)
    if table is None:
        table = KLTable(n)
    acc = LaurentPoly.zero()
    for z in parabolic_subgroup(n, Jf):
        p = table.kl(mult(z, x), w)
        if p.is_zero():
            continue
        acc = acc + (p if length(z) % 2 == 0 else -p)
    return acc


def transition_at_one(J: Iterable[int], xs: list[Perm], n: int, direction: str) -> dict[tuple[Perm, Perm], int]:
    """Integer transition matrices between Verma and irreducible labels.

    xs lists the minimal representatives of one linkage class, any order.
    'verma-to-l' returns the parabolic polynomials at q=1 (multiplicities
    of simples in Vermas); 'l-to-verma' returns the inverse unitriangular
    matrix (coefficients writing an irreducible character in Vermas).
    """
    Jf = check_parabolic(J, n)
    for x in xs:
        if not is_minimal(x, Jf):
            raise ValueError(f"{x} is not a minimal coset representative")
    table = AntisphericalTable(n, Jf)
    order = sorted(set(xs), key=lambda x: (length(x), x))
    fwd: dict[tuple[Perm, Perm], int] = {}
    for w in order:
        for x in order:
            fwd[(x, w)] = table.parabolic_kl(x, w).at_one()
    if direction == "verma-to-l":
        return fwd
    if direction != "l-to-verma":
        raise ValueError(f"direction must be 'l-to-verma' or 'verma-to-l', got {direction!r}")
    # invert the unitriangular integer matrix by forward substitution
    inv: dict[tuple[Perm, Perm], int] = {}
    for j, w in enumerate(order):
        for i, x in enumerate(order):
            if i > j:
                inv[(x, w)] = 0
            elif i == j:
                inv[(x, w)] = 1
            else:
                s = 0
                for t in range(i, j):
                    s += inv[(x, order[t])] * fwd[(order[t], w)]
                inv[(x, w)] = -s
    return inv
