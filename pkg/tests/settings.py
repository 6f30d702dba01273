"""Hypothesis settings profiles shared by the property tests.

Usage:
    from tests.settings import STANDARD_SETTINGS

    @given(g=digraphs())
    @STANDARD_SETTINGS
    def test_something(g):
        ...

Tiers:
- STANDARD_SETTINGS: 100 examples - combinatorial properties (orderings, patterns)
- ARRANGEMENT_SETTINGS: 30 examples - properties that build arrangements
- CHARPOLY_SETTINGS: 10 examples - properties that count points
"""

from hypothesis import HealthCheck, settings

STANDARD_SETTINGS = settings(max_examples=100, deadline=None)

# localization and relabeling build several arrangements per example
ARRANGEMENT_SETTINGS = settings(max_examples=30, deadline=None)

# each example interpolates at least one characteristic polynomial
CHARPOLY_SETTINGS = settings(
    max_examples=10, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
