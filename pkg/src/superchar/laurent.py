"""Exact integer Laurent polynomials in one variable q.

Everything downstream (Hecke algebra, canonical bases) works over Z[q, q^-1]
with exact integer coefficients, so this is a tiny dict-backed ring rather
than a symbolic dependency.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping


class LaurentPoly:
    """An element of Z[q, q^-1], stored as {exponent: coefficient}.

    Instances are immutable and hashable. Zero coefficients are never stored.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[int, int] = {}
        for e, v in items:
            if v:
                c[e] = c.get(e, 0) + v
                if not c[e]:
                    del c[e]
        self._c = c

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def q(exp: int = 1, coeff: int = 1) -> "LaurentPoly":
        """coeff * q^exp"""
        return LaurentPoly({exp: coeff})

    @staticmethod
    def const(n: int) -> "LaurentPoly":
        return LaurentPoly({0: n})

    # -- ring ops ----------------------------------------------------------

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        c = dict(self._c)
        for e, v in other._c.items():
            c[e] = c.get(e, 0) + v
            if not c[e]:
                del c[e]
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e: -v for e, v in self._c.items()}
        return out

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        other = _coerce(other)
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        out = LaurentPoly.__new__(LaurentPoly)
        if not a:
            out._c = {}
            return out
        if len(a) == 1:
            # monomial factor: a shift and scale, no cancellation possible
            ((e1, v1),) = a.items()
            if v1 == 1:
                out._c = {e1 + e2: v2 for e2, v2 in b.items()}
            else:
                out._c = {e1 + e2: v1 * v2 for e2, v2 in b.items()}
            return out
        c: dict[int, int] = {}
        for e1, v1 in a.items():
            for e2, v2 in b.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + v1 * v2
        out._c = {e: v for e, v in c.items() if v}
        return out

    __rmul__ = __mul__

    # -- structure ---------------------------------------------------------

    def bar(self) -> "LaurentPoly":
        """The involution q -> q^-1."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {-e: v for e, v in self._c.items()}
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        out = LaurentPoly.__new__(LaurentPoly)
        out._c = {e + k: v for e, v in self._c.items()}
        return out

    def coeff(self, exp: int) -> int:
        return self._c.get(exp, 0)

    def at_one(self) -> int:
        return sum(self._c.values())

    def is_zero(self) -> bool:
        return not self._c

    @property
    def min_exp(self) -> int:
        """Lowest exponent present; raises on zero."""
        return min(self._c)

    @property
    def max_exp(self) -> int:
        """Highest exponent present; raises on zero."""
        return max(self._c)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self._c.items()))

    def split_by_sign(self) -> tuple["LaurentPoly", int, "LaurentPoly"]:
        """(negative-exponent part, constant term, positive-exponent part)."""
        neg = LaurentPoly({e: v for e, v in self._c.items() if e < 0})
        pos = LaurentPoly({e: v for e, v in self._c.items() if e > 0})
        return neg, self._c.get(0, 0), pos

    # -- dunder boilerplate --------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if isinstance(other, LaurentPoly):
            return self._c == other._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __bool__(self) -> bool:
        return bool(self._c)

    def __repr__(self) -> str:
        return f"LaurentPoly({self})"

    def __str__(self) -> str:
        return format_poly(self)


def _coerce(x: "LaurentPoly | int") -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot coerce {type(x).__name__} to LaurentPoly")


def format_poly(p: LaurentPoly) -> str:
    """Render like '1+q', '2q^2', 'q^-1-q'. Zero renders as '0'."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for e, v in p.items():
        if e == 0:
            term = str(abs(v))
        else:
            mag = "" if abs(v) == 1 else str(abs(v))
            term = f"{mag}q" if e == 1 else f"{mag}q^{e}"
        if not parts:
            parts.append(("-" if v < 0 else "") + term)
        else:
            parts.append(("-" if v < 0 else "+") + term)
    return "".join(parts)


def parse_poly(text: str) -> LaurentPoly:
    """Inverse of format_poly for the restricted shapes it emits."""
    s = text.strip().replace(" ", "")
    if s in ("0", ""):
        return LaurentPoly.zero()
    # split into signed terms
    terms: list[str] = []
    cur = ""
    for i, ch in enumerate(s):
        if ch in "+-" and cur and s[i - 1] not in "^+-":
            terms.append(cur)
            cur = ch
        else:
            cur += ch
    terms.append(cur)
    out = LaurentPoly.zero()
    for t in terms:
        sign = 1
        if t.startswith("-"):
            sign, t = -1, t[1:]
        elif t.startswith("+"):
            t = t[1:]
        if "q" not in t:
            out = out + LaurentPoly.const(sign * int(t))
            continue
        coeff_s, _, exp_s = t.partition("q")
        coeff = int(coeff_s) if coeff_s else 1
        if exp_s.startswith("^"):
            exp = int(exp_s[1:])
        elif exp_s == "":
            exp = 1
        else:
            raise ValueError(f"bad term {t!r} in {text!r}")
        out = out + LaurentPoly.q(exp, sign * coeff)
    return out
