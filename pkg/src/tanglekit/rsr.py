"""Rational subtangle replacement between rational tangles.

A distance-``d`` replacement relates an unordered pair of slopes that is
homeomorphic to ``{1/0, r/s}`` with ``r/s`` in one of five parametrized
families.  This module evaluates the families, enumerates their members
around an arbitrary base slope, and decides membership with witnesses.

Witness conventions
-------------------
``RsrWitness.transport`` is a unimodular map ``T`` and the certified pair
is ``witness_pair(w)``:

* ``O``: ``{T(1/0), T(a/d)}``.
* ``I`` / ``II``: ``a, b, eps`` are the parameters of the closed formula
  around the base ``p/q = T(1/0)``; the partner is
  ``(p + eps*D*a*t) / (q + eps*D*b*t)`` with ``t = a*q - b*p`` and
  ``D = d`` (I) or ``4`` (II).
* ``III`` / ``IV``: ``a, b`` are the normalized parameters, the partner
  of ``T(1/0)`` is ``T(eps * r/s)`` with ``r/s`` the normalized value, and
  ``branch`` is the sign ``sigma`` of the square root of ``s``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Iterator

from .arith import exact_sqrt, signed_divisors
from .rational import (
    INFINITY,
    ContinuedFraction,
    PairClass,
    Slope,
    UnimodularMap,
    _orbit,
    cf_expand,
    unimodular_apply,
    unimodular_taking,
)


class Family(str, enum.Enum):
    O = "O"
    I = "I"
    II = "II"
    III = "III"
    IV = "IV"

    def __str__(self) -> str:
        return self.value


FAMILIES = (Family.O, Family.I, Family.II, Family.III, Family.IV)


@dataclass(frozen=True)
class RsrWitness:
    family: Family
    d: int
    eps: int
    a: int
    b: int
    branch: int | None = None
    transport: UnimodularMap | None = None

    def to_json(self) -> dict:
        t = self.transport
        return {
            "family": self.family.value,
            "d": self.d,
            "eps": self.eps,
            "a": self.a,
            "b": self.b,
            "branch": self.branch,
            "transport": None if t is None else t.rows(),
        }

    @classmethod
    def from_json(cls, obj: dict) -> "RsrWitness":
        t = obj.get("transport")
        return cls(
            family=Family(obj["family"]),
            d=int(obj["d"]),
            eps=int(obj["eps"]),
            a=int(obj["a"]),
            b=int(obj["b"]),
            branch=obj.get("branch"),
            transport=None if t is None else UnimodularMap.from_rows(t),
        )


FRAMING_NOTE = "site arc framed by the plane of the diagram"


class UnsupportedSiteError(ValueError):
    """Raised for families whose site diagram is not encoded; carries a CF pair instead."""

    def __init__(self, witness: RsrWitness, cf_pair: tuple[ContinuedFraction, ContinuedFraction]):
        super().__init__(f"no site plat for family {witness.family}; use the continued-fraction pair")
        self.witness = witness
        self.cf_pair = cf_pair


# ---------------------------------------------------------------- normalized values


def _raw_normalized(family: Family, d: int, a: int, b: int) -> tuple[int, int]:
    if family is Family.O:
        return a, d
    if family is Family.I:
        return 1 + d * a * b, d * a * a
    if family is Family.II:
        return 1 + 4 * a * b, 4 * a * a
    if family is Family.III:
        return (b - 1) * (4 * a * b - 4 * a - 2 * b - 1), (2 * a * b - 2 * a - b) ** 2
    if family is Family.IV:
        return (2 * a - 1) * (2 * a * b + a - b + 1), (2 * a * b + a - b) ** 2
    raise ValueError(f"unknown family {family!r}")


def _second_numerator(family: Family, a: int, b: int) -> int:
    """Numerator ``s'`` of the dual slope used by the second III/IV formula."""
    if family is Family.III:
        return (1 - 2 * a) ** 2 * (b - 1)
    return (2 * b + 1) * (2 * a * b + a - b + 1)


def family_normalized_value(family: Family | str, d: int, a: int, b: int = 0) -> Slope:
    """Slope ``r/s`` that the family pairs with ``1/0``.

    Family O reads ``(a, d)`` as ``a/d``.  Degenerate parameters whose value
    collapses to ``1/0`` are returned as such.
    """
    family = Family(family)
    if d < 1:
        raise ValueError("d must be positive")
    if family is Family.O:
        if gcd(a, d) != 1:
            raise ValueError(f"family O needs gcd(a, d) = 1, got a={a}, d={d}")
    elif family is Family.I:
        if a == 0 or gcd(a, b) != 1:
            raise ValueError(f"family I needs coprime a, b with a != 0, got {a}, {b}")
    else:
        if d != 1:
            raise ValueError(f"family {family} only occurs at distance 1")
        if family is Family.II and (a == 0 or gcd(a, b) != 1):
            raise ValueError(f"family II needs coprime a, b with a != 0, got {a}, {b}")
    r, s = _raw_normalized(family, d, a, b)
    if s == 0:
        return INFINITY
    return Slope(r, s)


# ---------------------------------------------------------------- witnesses


def base_transport(base: Slope) -> UnimodularMap:
    """Canonical map sending ``1/0`` to ``base``."""
    return unimodular_taking(base).inverse()


def witness_pair(w: RsrWitness) -> tuple[Slope, Slope]:
    """The ordered slope pair a witness certifies (first entry is ``T(1/0)``)."""
    T = w.transport or UnimodularMap.identity()
    base = unimodular_apply(T, INFINITY)
    if w.family is Family.O:
        return base, unimodular_apply(T, Slope(w.a, w.d))
    if w.family in (Family.I, Family.II):
        D = w.d if w.family is Family.I else 4
        p, q = T.a, T.c
        t = w.a * q - w.b * p
        return base, Slope(p + w.eps * D * w.a * t, q + w.eps * D * w.b * t)
    r, s = _raw_normalized(w.family, 1, w.a, w.b)
    return base, unimodular_apply(T, Slope(w.eps * r, s))


def normalized_witness(family: Family | str, d: int, a: int, b: int = 0) -> RsrWitness:
    """Witness whose pair is exactly ``(1/0, family_normalized_value(family, d, a, b))``."""
    family = Family(family)
    family_normalized_value(family, d, a, b)
    if family in (Family.I, Family.II):
        # base 1/0 swaps the roles: (p + eps D a' t)/(q + eps D b' t) with a' = b, b' = a
        return RsrWitness(family, d, -1, b, a, None, UnimodularMap.identity())
    branch = None if family is Family.O else _branch_sign(family, a, b)
    return RsrWitness(family, d, 1, a, b, branch, UnimodularMap.identity())


def normal_form(w: RsrWitness) -> tuple[int, int, int]:
    """``(a, b, sign)`` with the certified pair homeomorphic to
    ``{1/0, sign * family_normalized_value(family, d, a, b)}`` through ``transport``."""
    if w.family in (Family.I, Family.II):
        T = w.transport or UnimodularMap.identity()
        p, q, p2, q2 = T.a, T.c, T.b, T.d
        a0 = w.a * q - w.b * p
        b0 = w.eps * (q2 * w.a - p2 * w.b)
        if a0 < 0:
            a0, b0 = -a0, -b0
        return a0, b0, -w.eps
    return w.a, w.b, w.eps


def _transport_to(x: Slope, y: Slope, r: int, s: int) -> tuple[UnimodularMap, int] | None:
    """Find ``T`` and ``eps`` with ``{T(1/0), T(eps*r/s)} = {x, y}``."""
    for base, other in ((x, y), (y, x)):
        phi = unimodular_taking(base)
        w = unimodular_apply(phi, other)
        if w.den != s:
            return None
        for eps in (1, -1):
            k, rem = divmod(w.num - eps * r, s)
            if rem == 0:
                return phi.inverse() @ UnimodularMap.translation(k), eps
    return None


# ---------------------------------------------------------------- generation


def family_general_members(
    base: Slope,
    d: int,
    family: Family | str,
    bound: int,
    cofactor_bound: int | None = None,
) -> list[tuple[Slope, RsrWitness]]:
    """Members of a family around ``base`` with parameters in ``[-bound, bound]``.

    Families III and IV also sweep the Bezout cofactor ``(p' + N p, q' + N q)``
    over ``|N| <= cofactor_bound`` (default ``bound``).  Output is sorted by
    ``(den, num)``; each slope keeps the first witness met.
    """
    family = Family(family)
    if d < 1 or bound < 0:
        raise ValueError("need d >= 1 and bound >= 0")
    T = base_transport(base)
    found: dict[Slope, RsrWitness] = {}
    rng = range(-bound, bound + 1)

    def add(s: Slope, w: RsrWitness) -> None:
        if s != base and s not in found:
            found[s] = w

    if family is Family.O:
        for a in rng:
            if gcd(a, d) == 1:
                add(unimodular_apply(T, Slope(a, d)), RsrWitness(family, d, 1, a, 0, None, T))
    elif family in (Family.I, Family.II):
        if family is Family.II and d != 1:
            return []
        D = d if family is Family.I else 4
        p, q = T.a, T.c
        for a in rng:
            for b in rng:
                if gcd(a, b) != 1:
                    continue
                t = a * q - b * p
                if t == 0:
                    continue
                for eps in (1, -1):
                    u, v = p + eps * D * a * t, q + eps * D * b * t
                    add(Slope(u, v), RsrWitness(family, d, eps, a, b, None, T))
    else:
        if d != 1:
            return []
        nb = bound if cofactor_bound is None else cofactor_bound
        for a in rng:
            for b in rng:
                r, s = _raw_normalized(family, 1, a, b)
                if s == 0:
                    continue
                sigma = _branch_sign(family, a, b)
                s2 = _second_numerator(family, a, b)
                for n in range(-nb, nb + 1):
                    TN = T @ UnimodularMap.translation(n)
                    for eps in (1, -1):
                        add(unimodular_apply(TN, Slope(eps * r, s)),
                            RsrWitness(family, 1, eps, a, b, sigma, TN))
                        other = unimodular_apply(TN, Slope(eps * s2, s))
                        if other != base and other not in found:
                            hit = _transport_to(base, other, r, s)
                            if hit is None:
                                raise AssertionError(f"dual slope outside orbit for {family} {a},{b}")
                            found[other] = RsrWitness(family, 1, hit[1], a, b, sigma, hit[0])
    return sorted(found.items(), key=lambda kv: (kv[0].den, kv[0].num))


def _branch_sign(family: Family, a: int, b: int) -> int:
    root = 2 * a * b - 2 * a - b if family is Family.III else 2 * a * b + a - b
    return 1 if root >= 0 else -1


# ---------------------------------------------------------------- decision


def family_one_certificates(p: int, q: int, u: int, v: int, D: int) -> list[tuple[int, int, int]]:
    """All ``(eps, a, b)`` realizing ``u/v`` from base ``p/q`` in the closed I/II formula.

    Uses ``q*u - p*v = eps * D * t**2`` with ``t = a*q - b*p``; both sign
    representatives of ``(u, v)`` are tried.  Returned ``a`` is nonnegative.
    """
    out = []
    for sign in (1, -1):
        U, V = sign * u, sign * v
        delta = q * U - p * V
        if delta == 0:
            continue
        eps = 1 if delta > 0 else -1
        quot, rem = divmod(abs(delta), D)
        if rem:
            continue
        t = exact_sqrt(quot)
        if not t:
            continue
        step = eps * D * t
        a, ra = divmod(U - p, step)
        b, rb = divmod(V - q, step)
        if ra or rb or gcd(a, b) != 1 or a * q - b * p != t:
            continue
        # (a, b) -> (-a, -b) flips t and leaves the partner slope unchanged
        if a < 0 or (a == 0 and b < 0):
            a, b = -a, -b
        out.append((eps, a, b))
    return out


def family_iii_parameters(m: int, line_bound: int | None = None) -> list[tuple[int, int, int]]:
    """All ``(sigma, a, b)`` with ``2ab - 2a - b = sigma*m``, ``m >= 1``.

    Writing ``delta = 2a - 1`` gives ``b*delta = 2a + sigma*m``, so ``delta``
    runs over odd divisors of ``1 + sigma*m``.  When that is zero (``m = 1``)
    the solutions form the line ``b = 1``, all with value ``0/1``; only
    ``(1, 1)`` is reported unless ``line_bound`` asks for ``|a| <= line_bound``.
    """
    out = []
    for sigma in (1, -1):
        n = 1 + sigma * m
        if n == 0:
            if line_bound is None:
                out.append((sigma, 1, 1))
            else:
                out.extend((sigma, a, 1) for a in range(-line_bound, line_bound + 1))
            continue
        for delta in signed_divisors(n):
            if delta % 2 == 0:
                continue
            a = (delta + 1) // 2
            b, rem = divmod(2 * a + sigma * m, delta)
            if rem == 0:
                out.append((sigma, a, b))
    return out


def family_iv_parameters(m: int) -> list[tuple[int, int, int]]:
    """All ``(sigma, a, b)`` with ``2ab + a - b = sigma*m``, ``m >= 1``.

    With ``delta = 2b + 1``: ``a*delta = b + sigma*m``, so ``delta`` divides
    ``2*sigma*m - 1``.
    """
    out = []
    for sigma in (1, -1):
        for delta in signed_divisors(2 * sigma * m - 1):
            b = (delta - 1) // 2
            a, rem = divmod(b + sigma * m, delta)
            if rem == 0:
                out.append((sigma, a, b))
    return out


def _diophantine_witnesses(family: Family, x: Slope, y: Slope, cls: PairClass, verbose: bool) -> list[RsrWitness]:
    m = exact_sqrt(cls.dist)
    if not m:
        return []
    residues = set(cls.residues)
    params = family_iii_parameters(m) if family is Family.III else family_iv_parameters(m)
    out = []
    for sigma, a, b in params:
        r, s = _raw_normalized(family, 1, a, b)
        if r % s not in residues:
            continue
        hit = _transport_to(x, y, r, s)
        if hit is None:
            raise AssertionError("residue matched but no transport")
        out.append(RsrWitness(family, 1, hit[1], a, b, sigma, hit[0]))
        if not verbose:
            break
    return out


def classify_rsr(x: Slope, y: Slope, d: int, verbose: bool = False) -> list[RsrWitness]:
    """Families in which ``{x, y}`` is a distance-``d`` replacement pair.

    One witness per family in the order O, I, II, III, IV; ``verbose``
    keeps every witness found.
    """
    if d < 1:
        raise ValueError("d must be positive")
    p, q, u, v = x.num, x.den, y.num, y.den
    dist = abs(p * v - q * u)
    if dist == 0:
        raise ValueError(f"degenerate pair {x}, {y}: distance 0")
    out: list[RsrWitness] = []
    if dist == d:
        phi = unimodular_taking(x)
        w = unimodular_apply(phi, y)
        out.append(RsrWitness(Family.O, d, 1, w.num, 0, None, phi.inverse()))
    for family, D in ((Family.I, d), (Family.II, 4)):
        if family is Family.II and d != 1:
            break
        if dist % D or not exact_sqrt(dist // D):
            continue
        found = []
        for base, other in ((x, y), (y, x)):
            for eps, a, b in family_one_certificates(base.num, base.den, other.num, other.den, D):
                found.append(RsrWitness(family, d, eps, a, b, None, base_transport(base)))
        out.extend(found if verbose else found[:1])
    if d == 1 and exact_sqrt(dist):
        w = unimodular_apply(unimodular_taking(x), y)
        cls = PairClass(w.den, _orbit(w.num, w.den))
        for family in (Family.III, Family.IV):
            out.extend(_diophantine_witnesses(family, x, y, cls, verbose))
    return out


def rsr_families(x: Slope, y: Slope, d: int) -> set[Family]:
    return {w.family for w in classify_rsr(x, y, d)}


# ---------------------------------------------------------------- representatives


def representative_cf_pair(w: RsrWitness) -> tuple[ContinuedFraction, ContinuedFraction]:
    """Plat-ready continued fractions whose values form a pair homeomorphic to the witness pair.

    The first entry is always the empty fraction (the ``1/0`` tangle).
    """
    empty = ContinuedFraction(())
    if w.family is Family.O:
        return empty, cf_expand(Slope(w.a, w.d))
    if w.family in (Family.I, Family.II):
        a0, b0, _ = normal_form(w)
        c = cf_expand(Slope(a0, b0))
        D = w.d if w.family is Family.I else 4
        return empty, ContinuedFraction((0,)) + c + (D,) + c.reverse_negate()
    a, b = w.a, w.b
    if w.family is Family.III:
        return empty, ContinuedFraction((0, -a, -2, -b, -2, a, 1, b))
    return empty, ContinuedFraction((0, -b - 1, -1, 1, -a + 1, b, -2, a - 1))


def odd_length_expansion(s: Slope) -> ContinuedFraction:
    """A continued fraction of ``s`` with an odd number of terms."""
    c = cf_expand(s)
    if len(c) % 2:
        return c
    if not c.coeffs:
        return ContinuedFraction((0, 1, 1))
    *head, last = c.coeffs
    return ContinuedFraction((*head, last + 1, 1))


def site_plat(w: RsrWitness):
    """Before/after plats that differ only in the marked site region."""
    from .plat import PlatDesc, cf_to_plat

    if w.family is Family.O:
        # {0/1, d/a} is carried to {1/0, -a/d} by z -> -1/z
        after = cf_expand(Slope(w.d, w.a))
        note = "site: core arc of the whole tangle (full replacement)"
        before = cf_to_plat(ContinuedFraction((0,)))
        return (
            PlatDesc(before.regions, None, note),
            PlatDesc(cf_to_plat(after).regions, None, note),
        )
    if w.family in (Family.I, Family.II):
        a0, b0, _ = normal_form(w)
        c = odd_length_expansion(Slope(a0, b0))
        tail = c.reverse_negate()
        if w.family is Family.I:
            site = 1 + len(c)
            before = ContinuedFraction((0,)) + c + (0,) + tail
            after = ContinuedFraction((0,)) + c + (w.d,) + tail
            note = FRAMING_NOTE
        else:
            site = 0
            before = ContinuedFraction((2,)) + tail
            after = ContinuedFraction((-2,)) + tail
            note = FRAMING_NOTE
        return (
            PlatDesc(cf_to_plat(before).regions, site, note),
            PlatDesc(cf_to_plat(after).regions, site, note),
        )
    raise UnsupportedSiteError(w, representative_cf_pair(w))
