import random
from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import slopes, unimodular_maps
from tanglekit.rational import (
    INFINITY,
    ContinuedFraction,
    PairClass,
    Slope,
    UnimodularMap,
    cf_equal,
    cf_eval,
    cf_expand,
    pair_canonical,
    pair_class_ints,
    pair_orbit_residues,
    pairs_homeomorphic,
    slope_distance,
    unimodular_apply,
    unimodular_taking,
)


def CF(*c):
    return ContinuedFraction(c)


class TestSlope:
    def test_normalizes(self):
        assert Slope(4, -2) == Slope(-2, 1)
        assert Slope(-7, 0) == INFINITY
        assert -INFINITY == INFINITY
        assert -Slope(3, 5) == Slope(-3, 5)

    def test_zero_over_zero(self):
        with pytest.raises(ValueError):
            Slope(0, 0)

    def test_text(self):
        assert str(Slope(29, 11)) == "29/11"
        assert Slope.parse("-3/1") == Slope(-3, 1)


class TestCfEval:
    @pytest.mark.parametrize(
        "coeffs, value",
        [
            ((3, 3, 4), Slope(29, 11)),
            ((), INFINITY),
            ((0, -2, -2, -3, -2, 2, 1), Slope(13, 18)),
            ((2, 3, 1, -3, -2), Slope(25, 16)),
            ((0, 0), INFINITY),
        ],
    )
    def test_examples(self, coeffs, value):
        assert cf_eval(CF(*coeffs)) == value

    def test_infinity_flows_through(self):
        # [1, 0] = 1 - 1/0 and [5, 0, 0] = 5 - 1/(0 - 1/0)
        assert cf_eval(CF(1, 0)) == INFINITY
        assert cf_eval(CF(5, 0, 0)) == Slope(5, 1)

    def test_huge_values_exact(self):
        c = CF(*([10**30] * 40))
        v = cf_eval(c)
        assert cf_expand(v).coeffs == c.coeffs


class TestCfExpand:
    def test_examples(self):
        assert cf_expand(INFINITY).coeffs == ()
        assert cf_expand(Slope(29, 11)).coeffs == (3, 3, 4)
        assert cf_expand(Slope(5, 3)).coeffs == (2, 3)

    def test_canonical_tail_at_least_two(self):
        for p in range(-40, 41):
            for q in range(1, 30):
                if gcd(p, q) == 1:
                    c = cf_expand(Slope(p, q)).coeffs
                    assert all(a >= 2 for a in c[1:])

    def test_round_trip_exhaustive_small(self):
        for q in range(0, 120):
            for p in range(-120, 121):
                if (p, q) != (0, 0) and gcd(p, q) == 1:
                    s = Slope(p, q)
                    assert cf_eval(cf_expand(s)) == s

    @given(slopes(bound=10**6))
    def test_round_trip_property(self, s):
        assert cf_eval(cf_expand(s)) == s

    def test_round_trip_random_big(self):
        rng = random.Random(2024)
        for _ in range(300):
            s = Slope(rng.randint(-10**60, 10**60), rng.randint(1, 10**60))
            assert cf_eval(cf_expand(s)) == s

    def test_long_run_of_twos(self):
        q = 10**5
        c = cf_expand(Slope(q + 1, q))
        assert c.coeffs == (2,) * q
        assert cf_eval(c) == Slope(q + 1, q)


class TestCfEqual:
    @given(st.lists(st.integers(-9, 9), max_size=8), st.integers(-9, 9))
    def test_unit_tail_rule(self, head, a):
        assert cf_equal(CF(*head, a, 1), CF(*head, a - 1))
        assert cf_equal(CF(*head, a, -1), CF(*head, a + 1))

    def test_examples(self):
        assert cf_equal(CF(), CF(0, 0))
        assert not cf_equal(CF(3), CF(4))


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=9), st.integers(-9, 9))
def test_palindrome_identity(c, d):
    a_b = cf_eval(c)
    a, b = a_b.num, a_b.den
    lhs = cf_eval(CF(*c) + (d,) + CF(*c).reverse_negate())
    assert lhs == Slope(d * a * a, 1 + d * a * b)


class TestUnimodular:
    def test_taking_examples(self):
        assert unimodular_taking(INFINITY) == UnimodularMap.identity()
        phi = unimodular_taking(Slope(3, 1))
        assert phi(Slope(3, 1)) == INFINITY
        assert phi(INFINITY).den == 1

    def test_determinant_enforced(self):
        with pytest.raises(ValueError):
            UnimodularMap(2, 0, 0, 1)

    def test_sign_canonical(self):
        assert UnimodularMap(-1, 0, 0, -1) == UnimodularMap.identity()

    def test_translation(self):
        assert unimodular_apply(UnimodularMap.translation(4), Slope(3, 7)) == Slope(31, 7)

    @given(slopes(bound=10**9))
    def test_taking_round_trip(self, s):
        phi = unimodular_taking(s)
        assert phi(s) == INFINITY
        assert phi.inverse()(INFINITY) == s

    @given(unimodular_maps(), slopes(), slopes())
    def test_distance_preserved(self, f, x, y):
        assert slope_distance(f(x), f(y)) == slope_distance(x, y)

    @given(unimodular_maps(), unimodular_maps(), slopes())
    def test_composition(self, f, g, s):
        assert (f @ g)(s) == f(g(s))
        assert (f @ f.inverse()) == UnimodularMap.identity()


class TestDistance:
    def test_examples(self):
        assert slope_distance(INFINITY, Slope(13, 8)) == 8
        assert slope_distance(Slope(2, 3), Slope(2, 3)) == 0
        for a in range(-20, 21):
            for d in range(1, 8):
                if gcd(a, d) == 1:
                    assert slope_distance(INFINITY, Slope(a, d)) == d


class TestPairs:
    def test_orbit_examples(self):
        assert pair_orbit_residues(Slope(1, 2)) == (1,)
        assert pair_orbit_residues(Slope(2, 5)) == (2, 3)
        assert pair_orbit_residues(Slope(3, 8)) == (3, 5)
        assert pair_orbit_residues(Slope(7, 1)) == (0,)
        with pytest.raises(ValueError):
            pair_orbit_residues(INFINITY)

    def test_canonical_examples(self):
        assert pair_canonical(Slope(3, 1), Slope(23, 5)) == PairClass(8, (3, 5))
        assert pair_canonical(INFINITY, Slope(2, 5)) == PairClass(5, (2, 3))
        with pytest.raises(ValueError):
            pair_canonical(Slope(1, 2), Slope(1, 2))

    def test_homeomorphic_examples(self):
        assert pairs_homeomorphic((INFINITY, Slope(3, 7)), (INFINITY, Slope(-3, 7)))
        assert pairs_homeomorphic((INFINITY, Slope(2, 5)), (INFINITY, Slope(3, 5)))
        assert not pairs_homeomorphic((INFINITY, Slope(1, 5)), (INFINITY, Slope(2, 5)))

    @given(slopes(bound=500), slopes(bound=500), unimodular_maps())
    def test_invariance(self, x, y, f):
        if x == y:
            return
        c = pair_canonical(x, y)
        assert c == pair_canonical(y, x) == pair_canonical(-x, -y) == pair_canonical(f(x), f(y))
        assert c.dist == slope_distance(x, y)
        assert c == pair_class_ints(x.num, x.den, y.num, y.den)

    @given(slopes(bound=10**6))
    def test_orbit_closed(self, s):
        if s.den == 0:
            return
        res = set(pair_orbit_residues(s))
        assert len(res) <= 4
        for r in res:
            assert (-r) % s.den in res
            if s.den > 1:
                assert pow(r, -1, s.den) in res

    def test_pair_class_json(self):
        assert PairClass(8, (3, 5)).to_json() == {"dist": 8, "residues": [3, 5]}

    def test_random_invariance_sweep(self):
        rng = random.Random(7)
        for _ in range(500):
            p, q = rng.randint(-99, 99), rng.randint(0, 99)
            u, v = rng.randint(-99, 99), rng.randint(0, 99)
            if (p, q) == (0, 0) or (u, v) == (0, 0):
                continue
            x, y = Slope(p, q), Slope(u, v)
            if x == y:
                continue
            f = UnimodularMap.translation(rng.randint(-9, 9)) @ UnimodularMap(0, -1, 1, 0)
            assert pair_canonical(f(x), f(y)) == pair_canonical(x, y)
