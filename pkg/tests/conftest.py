"""Shared brute-force oracles.

Everything in here is deliberately naive and independent of the package
internals: partitions by direct recursion, Bruhat order by the prefix
dot criterion, Kazhdan-Lusztig polynomials by the textbook mu-recursion
on plain integer dictionaries. Tests freeze values against these, never
the other way around.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


def partitions_of(n: int, max_part: int | None = None):
    """Yield all partitions of n with parts bounded by max_part."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            yield (first,) + rest


def partitions_up_to(n: int):
    """Every partition of every size from 0 through n."""
    for size in range(n + 1):
        yield from partitions_of(size)


# ---------------------------------------------------------------------------
# symmetric group helpers on one-line words, no package imports


def perm_length(w: tuple[int, ...]) -> int:
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def bruhat_leq_oracle(x: tuple[int, ...], w: tuple[int, ...]) -> bool:
    """Dot criterion: descending prefixes of x entrywise below those of w."""
    for i in range(1, len(x)):
        xa = sorted(x[:i], reverse=True)
        wa = sorted(w[:i], reverse=True)
        if any(a > b for a, b in zip(xa, wa)):
            return False
    return True


def _swap_right(w: tuple[int, ...], i: int) -> tuple[int, ...]:
    # right multiplication by the simple transposition s_{i+1}
    lst = list(w)
    lst[i], lst[i + 1] = lst[i + 1], lst[i]
    return tuple(lst)


@lru_cache(maxsize=None)
def kl_oracle(x: tuple[int, ...], w: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    """P_{x,w} by the defining recursion, as sorted (exponent, coeff) pairs.

    Recursion on a right descent s of w with v = ws:
      P_{x,w} = q^{1-c} P_{xs,v} + q^c P_{x,v}
                - sum over z with zs < z, x <= z <= v of
                  mu(z, v) q^{(len(w)-len(z))/2} P_{x,z}
    where c = 1 iff xs < x and mu(z, v) is the coefficient of
    q^{(len(v)-len(z)-1)/2} in P_{z,v}.
    """
    if x == w:
        return ((0, 1),)
    if not bruhat_leq_oracle(x, w):
        return ()
    s = next(i for i in range(len(w) - 1) if w[i] > w[i + 1])
    v = _swap_right(w, s)
    xs = _swap_right(x, s)
    c = 1 if perm_length(xs) < perm_length(x) else 0
    acc: dict[int, int] = {}

    def add(poly, shift, scale):
        for e, a in poly:
            acc[e + shift] = acc.get(e + shift, 0) + scale * a

    add(kl_oracle(xs, v), 1 - c, 1)
    add(kl_oracle(x, v), c, 1)
    lw = perm_length(w)
    for z in itertools.permutations(range(1, len(w) + 1)):
        if perm_length(_swap_right(z, s)) >= perm_length(z):
            continue
        if not (bruhat_leq_oracle(x, z) and bruhat_leq_oracle(z, v)):
            continue
        lz = perm_length(z)
        mu_exp = (perm_length(v) - lz - 1) / 2
        mu = dict(kl_oracle(z, v)).get(mu_exp, 0) if mu_exp == int(mu_exp) else 0
        if mu:
            add(kl_oracle(x, z), (lw - lz) // 2, -mu)
    return tuple(sorted((e, a) for e, a in acc.items() if a))
