"""Integer partitions and their hook-style theta coordinates.

A partition is a tuple of weakly decreasing positive ints, e.g. (3, 1);
the empty partition is (). All arithmetic is exact; half-integer
coordinates are encoded as twice their value so no floats appear anywhere.
"""

from __future__ import annotations

from functools import lru_cache

Partition = tuple[int, ...]

# theta coordinates: {2*r: value} for r in {1/2, 1, 3/2, 2, ...}
ThetaCoords = dict[int, int]


def check_partition(mu: tuple[int, ...]) -> Partition:
    """Validate and normalize (drop trailing zeros)."""
    parts = list(mu)
    while parts and parts[-1] == 0:
        parts.pop()
    for i, p in enumerate(parts):
        if not isinstance(p, int) or p <= 0:
            raise ValueError(f"partition part #{i + 1} is {p!r}, expected a positive integer")
        if i and parts[i - 1] < p:
            raise ValueError(f"partition parts must weakly decrease, got {mu!r}")
    return tuple(parts)


def conjugate(mu: Partition) -> Partition:
    """Transpose of the Young diagram. conjugate((3,1)) == (2,1,1)."""
    if not mu:
        return ()
    return tuple(sum(1 for p in mu if p >= j) for j in range(1, mu[0] + 1))


def part(mu: Partition, i: int) -> int:
    """i-th part (1-based), zero beyond the last part."""
    return mu[i - 1] if 1 <= i <= len(mu) else 0


def _pos(n: int) -> int:
    # saturating subtraction has already happened; clamp at zero
    return n if n > 0 else 0


def theta(mu: Partition) -> ThetaCoords:
    """Theta coordinates of a partition, keyed by doubled index.

    theta(mu)[2i-1] = max(mu'_i - i + 1, 0)   (the half-integer slot i - 1/2)
    theta(mu)[2i]   = max(mu_i - i, 0)        (the integer slot i)

    Entries sum to |mu|; zero entries are omitted.
    """
    muc = conjugate(mu)
    out: ThetaCoords = {}
    i = 1
    while True:
        half = _pos(part(muc, i) - i + 1)
        whole = _pos(part(mu, i) - i)
        if half:
            out[2 * i - 1] = half
        if whole:
            out[2 * i] = whole
        if not half and not whole:
            break
        i += 1
    return out


def from_theta(coords: ThetaCoords) -> Partition:
    """Rebuild the partition from theta coordinates; inverse of theta().

    Raises ValueError (naming the offending slot) if the map is not the
    theta image of any partition.
    """
    cleaned = {k: v for k, v in coords.items() if v}
    for k, v in cleaned.items():
        if v < 0:
            raise ValueError(f"theta entry at slot {k}/2 is negative ({v})")
    d = 0
    while cleaned.get(2 * d + 1, 0) > 0:
        d += 1
    # arms from integer slots, legs from half slots; both strictly decrease
    arms = [cleaned.get(2 * i, 0) for i in range(1, d + 1)]
    legs = [cleaned.get(2 * i - 1) - 1 for i in range(1, d + 1)]
    for i in range(1, d):
        if arms[i - 1] <= arms[i]:
            raise ValueError(f"theta integer entries must strictly decrease on the diagonal (slot {2 * i})")
        if legs[i - 1] <= legs[i]:
            raise ValueError(f"theta half entries must strictly decrease on the diagonal (slot {2 * i - 1})")
    for k in cleaned:
        if k % 2 == 0 and k > 2 * d:
            raise ValueError(f"theta entry at integer slot {k // 2} lies beyond the diagonal")
    # Frobenius coordinates -> partition
    rows: list[int] = []
    for i in range(1, d + 1):
        rows.append(arms[i - 1] + i)
    # column lengths extend rows below the diagonal
    col = [legs[i - 1] + i for i in range(1, d + 1)]
    extra_rows = col[0] - d if d else 0
    for j in range(extra_rows):
        depth = d
        while depth and col[depth - 1] < d + j + 1:
            depth -= 1
        rows.append(depth)
    mu = tuple(r for r in rows if r)
    mu = check_partition(mu)
    if theta(mu) != cleaned:
        raise ValueError("theta coordinates do not come from a partition")
    return mu


def _sub_shapes(mu: Partition, vertical: bool):
    # shapes nu inside mu with mu/nu a horizontal (vertical) strip
    if not mu:
        yield ()
        return
    if vertical:
        rows = len(mu)
        for mask in range(1 << rows):
            nu = tuple(mu[i] - ((mask >> i) & 1) for i in range(rows))
            if all(nu[i] >= nu[i + 1] for i in range(rows - 1)) and nu[-1] >= 0:
                yield tuple(p for p in nu if p)
    else:
        def rec(i: int, cap: int, acc: tuple[int, ...]):
            if i == len(mu):
                yield acc
                return
            lo = mu[i + 1] if i + 1 < len(mu) else 0
            for v in range(min(cap, mu[i]), lo - 1, -1):
                yield from rec(i + 1, v, acc + ((v,) if v else ()))
        yield from rec(0, mu[0], ())


@lru_cache(maxsize=None)
def super_schur_monomials(
    shape: Partition, parities: tuple[int, ...]
) -> tuple[tuple[tuple[int, ...], int], ...]:
    """Weight multiplicities of the polynomial module of the given shape.

    parities lists the alphabet in Borel order, 0 for an even letter and 1
    for an odd one. Monomials are the content vectors of the tableaux in
    which an even letter fills a horizontal strip and an odd letter a
    vertical one; with a single parity this is the Schur (respectively
    transposed-Schur) expansion, with both it is the hook Schur one.
    Returns ((counts, multiplicity), ...); empty when the shape admits no
    filling by this alphabet.
    """
    if not parities:
        return (((), 1),) if not shape else ()
    acc: dict[tuple[int, ...], int] = {}
    cells = sum(shape)
    for nu in _sub_shapes(shape, vertical=bool(parities[-1])):
        eaten = cells - sum(nu)
        for counts, m in super_schur_monomials(nu, parities[:-1]):
            key = counts + (eaten,)
            acc[key] = acc.get(key, 0) + m
    return tuple(sorted(acc.items(), reverse=True))


def format_partition(mu: Partition) -> str:
    """(3,1) style text; the empty partition is '()'."""
    return "(" + ",".join(str(p) for p in mu) + ")"


def parse_partition(text: str) -> Partition:
    s = text.strip()
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"partition text must look like (3,1), got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    try:
        parts = tuple(int(x) for x in body.split(","))
    except ValueError:
        raise ValueError(f"partition text must contain integers, got {text!r}") from None
    return check_partition(parts)
