"""Lens spaces, two shapes of Seifert invariants, and torus-knot and
Klein-bottle-fiber surgery formulas.

Orientation convention: ``-L(p, q) = L(p, -q)``; a mirrored space is stored
in canonical form ``L(p, p - q)``.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from math import gcd

from .arith import positive_divisors
from .rational import Slope


@dataclass(frozen=True, order=True)
class LensSpace:
    """``L(p, q)`` with ``0 <= q < p``; ``L(0, 1)`` is S^1 x S^2, ``L(1, 0)`` is S^3."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = int(self.p), int(self.q)
        if p < 0:
            p, q = -p, -q
        if p == 0:
            if abs(q) != 1:
                raise ValueError(f"L(0,{q}) is not a lens space")
            q = 1
        elif gcd(p, q) != 1:
            raise ValueError(f"L({p},{q}) needs coprime parameters")
        else:
            q %= p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"

    def mirror(self) -> "LensSpace":
        return LensSpace(self.p, -self.q)

    def __neg__(self) -> "LensSpace":
        return self.mirror()

    @property
    def order(self) -> int:
        """Order of the first homology (0 when infinite)."""
        return self.p

    def q_representatives(self, oriented: bool = False) -> tuple[int, ...]:
        p, q = self.p, self.q
        if p <= 1:
            return (q,)
        qi = pow(q, -1, p)
        reps = {q, qi}
        if not oriented:
            reps |= {(-q) % p, (-qi) % p}
        return tuple(sorted(reps))

    def to_json(self) -> dict:
        return {"lens": [self.p, self.q], "oriented": True}

    @classmethod
    def parse(cls, text: str) -> "LensSpace":
        m = re.fullmatch(r"\s*(-?)\s*L\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*", text)
        if not m:
            raise ValueError(f"expected L(p,q) or -L(p,q), got {text!r}")
        L = cls(int(m.group(2)), int(m.group(3)))
        return L.mirror() if m.group(1) else L


S3 = LensSpace(1, 0)
S1xS2 = LensSpace(0, 1)


def lens_equiv(x: LensSpace, y: LensSpace, oriented: bool = False) -> bool:
    return x.p == y.p and y.q in x.q_representatives(oriented)


# ---------------------------------------------------------------- Seifert invariants


@dataclass(frozen=True)
class SeifertInvariant:
    """``M(g; (alpha_1, beta_1), ...)``; negative ``g`` marks a non-orientable base."""

    g: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs))

    def __str__(self) -> str:
        body = ",".join(f"({a},{b})" for a, b in self.pairs)
        return f"M({self.g};{body})"

    def to_json(self) -> dict:
        return {"g": self.g, "pairs": [list(p) for p in self.pairs]}


def lens_of_seifert(s: SeifertInvariant) -> LensSpace | None:
    """Lens space for ``M(0; two pairs)`` or ``M(-1; (alpha, 1))``; None for other shapes."""
    if s.g == -1 and len(s.pairs) == 1 and s.pairs[0][1] == 1:
        alpha = s.pairs[0][0]
        return LensSpace(4 * alpha, 2 * alpha - 1)
    if s.g == 0 and len(s.pairs) == 2:
        (a1, b1), (a2, b2) = s.pairs
        if gcd(a1, b1) != 1 or gcd(a2, b2) != 1:
            return None
        # a1*y - b1*x = 1
        g, sx, sy = _ext_gcd(a1, -b1)
        y, x = sx * g, sy * g
        assert a1 * y - b1 * x == 1
        p = a1 * b2 + a2 * b1
        q = -a2 * y - b2 * x
        if p == 0:
            return S1xS2
        return LensSpace(p, q)
    return None


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a*x + b*y = g``, ``g = +-1`` here (sign kept)."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        k, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - k * x1
        y0, y1 = y1, y0 - k * y1
    return a, x0, y0


def seifert_normalize(s: SeifertInvariant) -> SeifertInvariant:
    """``M(-1; (alpha, 1))`` rewritten as ``M(0; (2, 1), (2, 2 alpha - 1))``."""
    if not (s.g == -1 and len(s.pairs) == 1 and s.pairs[0][1] == 1):
        raise ValueError(f"expected M(-1;(alpha,1)), got {s}")
    alpha = s.pairs[0][0]
    return SeifertInvariant(0, ((2, 1), (2, 2 * alpha - 1)))


# ---------------------------------------------------------------- torus knots


def torus_knot_surgery(r: int, s: int, P: int, Q: int, n: int) -> LensSpace:
    """``1/n`` surgery on the ``(P, Q)`` torus knot in ``L(r, s)``."""
    if gcd(P, Q) != 1 or gcd(r, s) != 1:
        raise ValueError("need gcd(P, Q) = gcd(r, s) = 1")
    delta = P * s - r * Q
    return LensSpace(r + n * delta * P, s + n * delta * Q)


def is_core_knot(r: int, s: int, P: int, Q: int) -> bool:
    """The torus knot is a core of a Heegaard solid torus."""
    return abs(P) == 1 or abs(P * s - r * Q) == 1


@dataclass(frozen=True, order=True)
class SurgeryWitness:
    P: int
    Q: int
    n: int

    def to_json(self) -> dict:
        return {"P": self.P, "Q": self.Q, "n": self.n}


def torus_knot_surgery_solve(
    source: LensSpace, target: LensSpace, d: int, oriented: bool = False, include_trivial: bool = False
) -> list[SurgeryWitness]:
    """All ``(P, Q, n)`` with ``|n| = d`` taking ``source = L(r, s)`` to ``target``.

    ``P`` ranges over divisors of ``A = (+-u - r)/n`` since
    ``n * delta * P = +-u - r``; ``Q`` then follows from ``delta = P s - r Q``.
    ``Q`` is only determined modulo ``u``; one representative per class is
    returned.  Solutions with ``P = 0`` or ``delta = 0`` leave the space
    unchanged and are dropped unless ``include_trivial``.
    """
    if d < 1:
        raise ValueError("d must be positive")
    r, s = source.p, source.q
    u = target.p
    found: set[SurgeryWitness] = set()

    def accept(P: int, Q: int, n: int) -> None:
        if gcd(P, Q) != 1:
            return
        delta = P * s - r * Q
        if not include_trivial and (P == 0 or delta == 0):
            return
        if lens_equiv(torus_knot_surgery(r, s, P, Q, n), target, oriented):
            found.add(SurgeryWitness(P, Q, n))

    for n in (d, -d):
        for sigma in ((1, -1) if u else (1,)):
            A, rem = divmod(sigma * u - r, n)
            if rem:
                continue
            if A == 0:
                if include_trivial:
                    accept(0, 1, n)
                    if r:
                        accept(r, s, n)
                continue
            for P0 in positive_divisors(A):
                for P in (P0, -P0):
                    delta = A // P
                    if r:
                        Q, rem = divmod(P * s - delta, r)
                        if rem == 0:
                            accept(P, Q, n)
                    else:
                        # L(0,1): delta = P (s = 1), so P^2 = A; Q is free modulo u
                        if delta != P:
                            continue
                        for Q0 in range(max(u, 1)):
                            for k in range(abs(P) + 1):
                                Q = Q0 + k * max(u, 1)
                                if gcd(P, Q) == 1:
                                    accept(P, Q, n)
                                    break
    return sorted(found)


# ---------------------------------------------------------------- Klein-bottle fibers


class KleinKind(str, enum.Enum):
    TRIVIAL = "trivial-knot"
    TORUS = "torus-knot"
    TOROIDAL = "toroidal-nonfibered"


def klein_fiber_classify(k: int) -> KleinKind:
    if k == 0:
        return KleinKind.TRIVIAL
    if abs(k) == 1:
        return KleinKind.TORUS
    return KleinKind.TOROIDAL


def klein_fiber_space(k: int) -> LensSpace:
    """``L(4k, 2k - 1)``, the space containing the fiber with parameter ``k``."""
    return LensSpace(4 * k, 2 * k - 1)


def klein_fiber_surgeries(k: int, n_bound: int) -> list[tuple[Slope, LensSpace]]:
    """Lens-space surgeries on the Klein-bottle regular fiber in ``L(4k, 2k - 1)``.

    Slopes are measured against the framing from the Klein bottle.
    """
    if n_bound < 0:
        raise ValueError("n_bound must be nonnegative")
    if k == 0:
        return [(Slope(1, n), S1xS2) for n in range(-n_bound, n_bound + 1)]
    if abs(k) == 1:
        out = []
        for n in range(-n_bound, n_bound + 1):
            if n == 0:
                continue
            L = LensSpace(4 * (n + 1), 2 * (n + 1) - 1)
            out.append((Slope(k * (n + 1), n), L if k > 0 else L.mirror()))
        return out
    if abs(k) == 2:
        L83 = LensSpace(8, 3)
        return [(Slope(1, 1), L83.mirror())] if k > 0 else [(Slope(-1, 1), L83)]
    return []


def seifert_knot_catalog(Y: LensSpace) -> list[dict]:
    """Knot types with Seifert-fibered exterior whose surgeries can yield ``Y``.

    Torus knots are always listed; the Klein-bottle regular fiber is listed
    with its parameter ``k`` when ``Y`` is ``L(4k, 2k - 1)`` up to orientation.
    The sign of ``k`` is chosen so the identification preserves orientation.
    """
    out: list[dict] = [{"kind": "torus-knots"}]
    if Y.p % 4:
        return out
    k0 = Y.p // 4
    matches = []
    for k in sorted({k0, -k0}, key=lambda v: (-v,)):
        L = klein_fiber_space(k)
        if lens_equiv(Y, L, oriented=True):
            matches.append((k, True))
    if not matches:
        for k in sorted({k0, -k0}, key=lambda v: (-v,)):
            if lens_equiv(Y, klein_fiber_space(k), oriented=False):
                matches.append((k, False))
    if matches:
        k, oriented = matches[0]
        out.append({
            "kind": "klein-fiber",
            "k": k,
            "type": klein_fiber_classify(k).value,
            "grid_number_one_index": 2 * abs(k),
            "orientation_preserving": oriented,
        })
    return out
