"""Exact slopes, minus-convention continued fractions and the modular group.

Every value here is an immutable wrapper around Python ints, so all
arithmetic is exact and unbounded.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True, order=True)
class Slope:
    """Extended rational ``num/den`` in lowest terms with ``den >= 0``.

    The constructor normalizes, so ``Slope(4, -2) == Slope(-2, 1)`` and
    every ``Slope(n, 0)`` with ``n != 0`` becomes ``1/0``.
    """

    num: int
    den: int

    def __post_init__(self) -> None:
        n, d = int(self.num), int(self.den)
        if n == 0 and d == 0:
            raise ValueError("0/0 is not a slope")
        g = gcd(n, d)
        n, d = n // g, d // g
        if d < 0 or (d == 0 and n < 0):
            n, d = -n, -d
        object.__setattr__(self, "num", n)
        object.__setattr__(self, "den", d)

    @classmethod
    def infinity(cls) -> "Slope":
        return cls(1, 0)

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __neg__(self) -> "Slope":
        return Slope(-self.num, self.den)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"

    @classmethod
    def parse(cls, text: str) -> "Slope":
        from .plat import parse_slope

        return parse_slope(text)


INFINITY = Slope(1, 0)


@dataclass(frozen=True)
class ContinuedFraction:
    """Coefficients ``[a1, ..., ak]`` read as ``a1 - 1/(a2 - 1/(... - 1/ak))``."""

    coeffs: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.coeffs) + "]"

    def value(self) -> Slope:
        return cf_eval(self)

    def reverse_negate(self) -> "ContinuedFraction":
        return ContinuedFraction(tuple(-c for c in reversed(self.coeffs)))

    def __add__(self, other: "ContinuedFraction | Sequence[int]") -> "ContinuedFraction":
        return ContinuedFraction(self.coeffs + tuple(other))


def _coeffs(cf: ContinuedFraction | Iterable[int]) -> tuple[int, ...]:
    return cf.coeffs if isinstance(cf, ContinuedFraction) else tuple(cf)


def cf_eval_pair(coeffs: Sequence[int]) -> tuple[int, int]:
    """Unreduced projective value of a coefficient sequence.

    Runs ``(x, y) <- (a*x - y, x)`` from the right starting at ``(1, 0)``;
    an intermediate infinity just flows through, no division happens.
    """
    x, y = 1, 0
    for a in reversed(coeffs):
        x, y = a * x - y, x
    return x, y


def cf_eval(cf: ContinuedFraction | Iterable[int]) -> Slope:
    x, y = cf_eval_pair(_coeffs(cf))
    return Slope(x, y)


def cf_expand(s: Slope) -> ContinuedFraction:
    """Ceiling (subtractive) Euclidean expansion; ``1/0`` maps to ``[]``.

    After the first coefficient every remaining value exceeds 1, so all
    later coefficients are at least 2 and the output is unique.
    Runs of 2s (values just above 1) are emitted in one step, which keeps
    the cost polynomial in the bit length.
    """
    p, q = s.num, s.den
    out: list[int] = []
    while q != 0:
        r = p - q
        if out and 0 < r <= q:
            # (q + r)/q -> q/(q - r) keeps r fixed: q // r twos in a row
            k = q // r
            out.extend([2] * k)
            p, q = q - (k - 1) * r, q - k * r
            continue
        a = -((-p) // q)
        out.append(a)
        p, q = q, a * q - p
    return ContinuedFraction(tuple(out))


def cf_equal(x: ContinuedFraction | Iterable[int], y: ContinuedFraction | Iterable[int]) -> bool:
    return cf_eval(x) == cf_eval(y)


def slope_distance(x: Slope, y: Slope) -> int:
    return abs(x.num * y.den - x.den * y.num)


@dataclass(frozen=True)
class UnimodularMap:
    """``z -> (a z + b) / (c z + d)`` with ``ad - bc = 1``.

    The matrix and its negative act identically; the stored sign makes the
    first nonzero entry of ``(a, b)`` positive.
    """

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self) -> None:
        a, b, c, d = (int(v) for v in (self.a, self.b, self.c, self.d))
        if a * d - b * c != 1:
            raise ValueError(f"determinant of {(a, b, c, d)} is not 1")
        if a < 0 or (a == 0 and b < 0):
            a, b, c, d = -a, -b, -c, -d
        for name, v in zip("abcd", (a, b, c, d)):
            object.__setattr__(self, name, v)

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(1, 0, 0, 1)

    @classmethod
    def translation(cls, n: int) -> "UnimodularMap":
        return cls(1, n, 0, 1)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "UnimodularMap":
        (a, b), (c, d) = rows
        return cls(a, b, c, d)

    def rows(self) -> list[list[int]]:
        return [[self.a, self.b], [self.c, self.d]]

    def __call__(self, s: Slope) -> Slope:
        return unimodular_apply(self, s)

    def compose(self, other: "UnimodularMap") -> "UnimodularMap":
        """``self o other``: apply ``other`` first."""
        a, b, c, d = self.a, self.b, self.c, self.d
        e, f, g, h = other.a, other.b, other.c, other.d
        return UnimodularMap(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)

    def __matmul__(self, other: "UnimodularMap") -> "UnimodularMap":
        return self.compose(other)

    def inverse(self) -> "UnimodularMap":
        return UnimodularMap(self.d, -self.b, -self.c, self.a)


def unimodular_apply(f: UnimodularMap, s: Slope) -> Slope:
    return Slope(f.a * s.num + f.b * s.den, f.c * s.num + f.d * s.den)


def unimodular_taking(s: Slope) -> UnimodularMap:
    """Canonical ``phi`` with ``phi(s) = 1/0``.

    The bottom row is forced to ``(-den, num)``; the top-left entry is the
    least nonnegative inverse of ``num`` modulo ``den``.
    """
    r, t = s.num, s.den
    if t == 0:
        return UnimodularMap.identity()
    if t == 1:
        a = 0
    else:
        a = pow(r, -1, t)
    b = (1 - a * r) // t
    return UnimodularMap(a, b, -t, r)


def mod_inverse(r: int, s: int) -> int:
    return pow(r, -1, s)


def pair_orbit_residues(r_s: Slope) -> tuple[int, ...]:
    """Residues ``{r, -r, r^-1, -r^-1}`` modulo ``s`` for the slope ``r/s``."""
    s = r_s.den
    if s == 0:
        raise ValueError("pair with 1/0 has distance 0; no residue orbit")
    return _orbit(r_s.num, s)


def _orbit(r: int, s: int) -> tuple[int, ...]:
    if s == 1:
        return (0,)
    r %= s
    ri = pow(r, -1, s)
    return tuple(sorted({r, (-r) % s, ri, (-ri) % s}))


@dataclass(frozen=True)
class PairClass:
    """Homeomorphism class of an unordered pair of distinct slopes."""

    dist: int
    residues: tuple[int, ...]

    def to_json(self) -> dict:
        return {"dist": self.dist, "residues": list(self.residues)}


def pair_class_ints(p: int, q: int, u: int, v: int) -> PairClass:
    """``pair_canonical`` on normalized integer pairs (skips Slope objects).

    ``(p, q)`` must be reduced with ``q > 0`` or equal ``(1, 0)``.
    """
    # phi = unimodular_taking(p/q) = [[a, b], [-q, p]]
    if q == 0:
        a, b = 1, 0
    elif q == 1:
        a, b = 0, 1
    else:
        a = pow(p, -1, q)
        b = (1 - a * p) // q
    w = a * u + b * v
    s = p * v - q * u
    if s == 0:
        raise ValueError("equal slopes have no pair class")
    if s < 0:
        s, w = -s, -w
    return PairClass(s, _orbit(w, s))


def pair_canonical(x: Slope, y: Slope) -> PairClass:
    if x == y:
        raise ValueError(f"degenerate pair {x}, {y}: distance 0")
    w = unimodular_apply(unimodular_taking(x), y)
    return PairClass(w.den, _orbit(w.num, w.den))


def pairs_homeomorphic(a: tuple[Slope, Slope], b: tuple[Slope, Slope]) -> bool:
    return pair_canonical(*a) == pair_canonical(*b)
