"""2-bridge links: Schubert equivalence, distance >= 2 replacements, and
the arithmetic banding criteria for the unknot and the 2-component unlink.

``S(p, q)`` is the numerator closure of the ``p/q`` tangle.  The closure of
``z`` agrees with the closure of ``z / (k z + 1)``, which is how slope
representatives of a link are parametrized below.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

from .arith import exact_sqrt, positive_divisors
from .rational import ContinuedFraction, Slope, UnimodularMap, cf_eval, cf_eval_pair, cf_expand
from .rsr import Family, RsrWitness, base_transport, family_one_certificates, witness_pair


@dataclass(frozen=True, order=True)
class TwoBridgeLink:
    """``S(p, q)`` with ``0 <= q < p``; ``S(1, 0)`` is the unknot, ``S(0, 1)`` the unlink."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = int(self.p), int(self.q)
        if p < 0:
            p, q = -p, -q
        if p == 0:
            if abs(q) != 1:
                raise ValueError(f"S(0,{q}) is not a 2-bridge link")
            q = 1
        elif gcd(p, q) != 1:
            raise ValueError(f"S({p},{q}) needs coprime parameters")
        else:
            q %= p
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    def __str__(self) -> str:
        return f"S({self.p},{self.q})"

    @property
    def is_unknot(self) -> bool:
        return self.p == 1

    @property
    def is_unlink(self) -> bool:
        return self.p == 0

    def mirror(self) -> "TwoBridgeLink":
        return TwoBridgeLink(self.p, -self.q)

    def q_representatives(self, oriented_space: bool = False) -> tuple[int, ...]:
        """Residues ``q'`` with ``S(p, q') = S(p, q)``, sorted."""
        p, q = self.p, self.q
        if p <= 1:
            return (q,)
        qi = pow(q, -1, p)
        reps = {q, qi}
        if not oriented_space:
            reps |= {(-q) % p, (-qi) % p}
        return tuple(sorted(reps))

    @classmethod
    def parse(cls, text: str) -> "TwoBridgeLink":
        m = re.fullmatch(r"\s*S\(\s*([+-]?\d+)\s*,\s*([+-]?\d+)\s*\)\s*", text)
        if not m:
            raise ValueError(f"expected S(p,q), got {text!r}")
        return cls(int(m.group(1)), int(m.group(2)))


UNKNOT = TwoBridgeLink(1, 0)
UNLINK = TwoBridgeLink(0, 1)


def tb_closure(s: Slope) -> TwoBridgeLink:
    if s.num == 0:
        return UNLINK
    sign = 1 if s.num > 0 else -1
    return TwoBridgeLink(abs(s.num), sign * s.den)


def tb_equiv(x: TwoBridgeLink, y: TwoBridgeLink, oriented_space: bool = False) -> bool:
    if x.p != y.p:
        return False
    return y.q in x.q_representatives(oriented_space)


# ---------------------------------------------------------------- distance >= 2


def _family_one_between(p: int, q0: int, u: int, v0: int, d: int):
    """Family-I witnesses for ``{p/q0, u/(v0 + j u)}`` over all integers ``j``.

    Witnesses whose parameter ``a`` is zero only re-glue a meridional
    neighbourhood and never change the link, so they are skipped.
    """
    x = Slope(p, q0)
    if p * u == 0:
        # psi_k fixes 0/1 and moves the other slope through all its representatives
        candidates = [Slope(u, v0)]
    else:
        candidates = []
        base = p * v0 - q0 * u
        tmax = (abs(u) + abs(p)) // d + abs(p) + 1
        for t in range(1, tmax + 1):
            for sigma in (1, -1):
                j, rem = divmod(sigma * d * t * t - base, p * u)
                if rem == 0:
                    candidates.append(Slope(u, v0 + j * u))
    for y in candidates:
        if y == x:
            continue
        for b0, o0 in ((x, y), (y, x)):
            for eps, a, b in family_one_certificates(b0.num, b0.den, o0.num, o0.den, d):
                if a != 0:
                    yield RsrWitness(Family.I, d, eps, a, b, None, base_transport(b0))


def tb_rsr_decide(
    x: TwoBridgeLink, y: TwoBridgeLink, d: int, oriented_space: bool = False
) -> RsrWitness | None:
    """A family-I witness relating slope representatives of ``x`` and ``y``, or None.

    Only the ``q`` representative of ``x`` needs varying: a common mirror
    preserves family I, and ``psi_k`` shifts both slopes at once.
    """
    if d < 2:
        raise ValueError("tb_rsr_decide needs d >= 2")
    xs = x.q_representatives(True)
    ys = y.q_representatives(oriented_space)
    for q0 in xs:
        for v0 in ys:
            for w in _family_one_between(x.p, q0, y.p, v0, d):
                return w
    return None


def _cf_matrix(coeffs) -> tuple[int, int, int, int]:
    a, b, c, e = 1, 0, 0, 1
    for k in coeffs:
        a, b, c, e = a * k + b, -a, c * k + e, -c
    return a, b, c, e


def tb_rsr_site_cf(
    x: TwoBridgeLink, y: TwoBridgeLink, witness: RsrWitness
) -> tuple[ContinuedFraction, ContinuedFraction]:
    """Continued fractions ``[A, 0, c, 0, -rev c]`` and ``[A, 0, c, m, -rev c]``.

    They close up to ``x`` and ``y`` and differ only in the coefficient
    ``0 <-> m`` with ``|m| = d``; that twist region is the replacement site.
    """
    d = witness.d
    pair = witness_pair(witness)
    tried = []
    for base, other in (pair, pair[::-1]):
        if not (tb_equiv(tb_closure(base), x) and tb_equiv(tb_closure(other), y)):
            continue
        prefix = cf_expand(base)
        a, b, c, e = _cf_matrix(prefix.coeffs)
        # inverse of z -> (a z + b)/(c z + e) applied to other
        w = Slope(e * other.num - b * other.den, -c * other.num + a * other.den)
        r, s = w.num, w.den
        if s == 0 or s % d:
            tried.append((base, other))
            continue
        a0 = exact_sqrt(s // d)
        if not a0:
            tried.append((base, other))
            continue
        for m in (d, -d):
            num = -(r + 1) if m > 0 else 1 - r
            b0, rem = divmod(num, d * a0)
            if rem or gcd(a0, b0) != 1:
                continue
            cseq = cf_expand(Slope(a0, b0))
            tail = cseq.reverse_negate()
            before = prefix + (0,) + cseq + (0,) + tail
            after = prefix + (0,) + cseq + (m,) + tail
            if tb_equiv(tb_closure(cf_eval(before)), x) and tb_equiv(tb_closure(cf_eval(after)), y):
                return before, after
        tried.append((base, other))
    raise AssertionError(f"no site presentation for {x} -> {y} from witness {witness.to_json()} (tried {tried})")


# ---------------------------------------------------------------- banding criteria


def _cong(x: int, y: int, mod: int) -> bool:
    return (x - y) % mod == 0 if mod else x == y


def _greene_conditions(p: int, q: int, k: int) -> list[int]:
    """Indices (1..6) of the displayed conditions that hold for ``(p, q, k)``."""
    out = []
    k2 = k * k
    # 1: i k = p -/+ q mod k^2 has a solution i with gcd(i, k) in {1, 2}
    for sgn in (1, -1):
        rhs = p - sgn * q
        if k == 0:
            continue
        if rhs % k == 0:
            i = (rhs // k) % abs(k)
            if gcd(i, k) in (1, 2):
                out.append(1)
                break
    # 2, 3, 4: p = +/-(coef) * delta mod k^2 over the listed divisors
    def divisor_case(coef: int, n: int, require) -> bool:
        if n == 0:
            return False
        for delta in positive_divisors(n):
            if not require(delta, n):
                continue
            for sgn in (1, -1):
                if _cong(p, sgn * coef * delta, k2):
                    return True
        return False

    odd_quot = lambda delta, n: (abs(n) // delta) % 2 == 1
    any_div = lambda delta, n: True
    odd_div = lambda delta, n: delta % 2 == 1
    if divisor_case(2 * k - 1, k + 1, odd_quot) or divisor_case(2 * k + 1, k - 1, odd_quot):
        out.append(2)
    if divisor_case(k - 1, 2 * k + 1, any_div) or divisor_case(k + 1, 2 * k - 1, any_div):
        out.append(3)
    if divisor_case(k + 1, k + 1, odd_div) or divisor_case(k - 1, k - 1, odd_div):
        out.append(4)
    if (k2 + k + 1) % p == 0 or (-k2 + k + 1) % p == 0:
        out.append(5)
    if 11 * p == 2 * k2 + k + 1 and k % 11 in (2, 3):
        out.append(6)
    return out


def _cond6_roots(p: int) -> list[int]:
    # 2k^2 + k + 1 - 11p = 0
    disc = 1 - 8 * (1 - 11 * p)
    r = exact_sqrt(disc)
    if r is None:
        return []
    return [k for k in ((-1 + r) // 4, (-1 - r) // 4) if 2 * k * k + k + 1 == 11 * p]


@lru_cache(maxsize=64)
def _square_roots_mod(p: int) -> dict[int, tuple[int, ...]]:
    roots: dict[int, list[int]] = {}
    for k in range(p):
        roots.setdefault(k * k % p, []).append(k)
    return {r: tuple(v) for r, v in roots.items()}


def greene_check(L: TwoBridgeLink) -> tuple[bool, list[dict]]:
    """Whether ``L`` admits a distance-1 replacement to the unknot.

    Certificates are ``{"k", "cond", "q"}`` with ``q`` the representative of
    ``L`` used.  ``k`` ranges over ``(-p, p)``.
    """
    p = L.p
    if p <= 1:
        return True, []
    roots = _square_roots_mod(p)
    certs: set[tuple[int, int, int]] = set()
    for q in L.q_representatives():
        ks: set[int] = set()
        for target in (q % p, (-q) % p):
            for k in roots.get(target, ()):
                ks.add(k)
                if k:
                    ks.add(k - p)
        for k in sorted(ks):
            for cond in _greene_conditions(p, q, k):
                if cond != 6:
                    certs.add((k, cond, q))
        for k in _cond6_roots(p):
            if (k * k - q) % p == 0 or (k * k + q) % p == 0:
                if 6 in _greene_conditions(p, q, k):
                    certs.add((k, 6, q))
    out = [{"k": k, "cond": c, "q": q} for k, c, q in sorted(certs, key=lambda t: (abs(t[0]), t[0], t[1], t[2]))]
    return bool(out), out


def _lisca_conditions(m: int, q: int) -> list[int]:
    out = []
    for sgn in (1, -1):
        k, rem = divmod(q - sgn, m)
        if rem == 0 and m > k > 0:
            g = gcd(m, k)
            if g == 1:
                out.append(1)
            elif g == 2:
                out.append(2)
    for sgn in (1, -1):
        base = m + sgn
        if base > 0 and q % base == 0:
            delta = q // base
            if delta > 1 and (2 * m - sgn) % delta == 0:
                out.append(3)
            if delta > 1 and delta % 2 == 1 and base % delta == 0:
                out.append(4)
    return sorted(set(out))


def lisca_check(L: TwoBridgeLink) -> tuple[bool, list[dict]]:
    """Whether ``L`` admits a distance-1 replacement to the 2-component unlink.

    Certificates are ``{"m", "cond", "q"}``.
    """
    if L.p <= 1:
        return True, []
    m = exact_sqrt(L.p)
    if not m:
        return False, []
    out = []
    for q in L.q_representatives():
        for cond in _lisca_conditions(m, q):
            out.append({"m": m, "cond": cond, "q": q})
    return bool(out), out
