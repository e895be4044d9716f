from math import gcd

from hypothesis import settings
from hypothesis import strategies as st

from tanglekit.rational import Slope, UnimodularMap

settings.register_profile("default", max_examples=200, deadline=None)
settings.load_profile("default")


@st.composite
def slopes(draw, bound: int = 10**6):
    q = draw(st.integers(0, bound))
    if q == 0:
        return Slope(1, 0)
    p = draw(st.integers(-bound, bound).filter(lambda p: gcd(p, q) == 1))
    return Slope(p, q)


@st.composite
def unimodular_maps(draw, steps: int = 6, bound: int = 20):
    f = UnimodularMap.identity()
    for _ in range(draw(st.integers(0, steps))):
        n = draw(st.integers(-bound, bound))
        f = f @ UnimodularMap.translation(n) @ UnimodularMap(0, -1, 1, 0)
    return f
