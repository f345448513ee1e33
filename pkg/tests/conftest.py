from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "repo", max_examples=60, deadline=None, derandomize=True, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("repo")


def chain_elements(n):
    return st.integers(0, n).map(lambda k: Fraction(k, n))


def rationals01(max_den=12):
    return st.integers(1, max_den).flatmap(lambda q: st.integers(0, q).map(lambda p: Fraction(p, q)))
