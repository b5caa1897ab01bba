import pytest

from minkortho import lp, polygonal

SQUARE_VERTICES = [[1, 1], [-1, 1], [-1, -1], [1, -1]]


def norm_suite():
    """The gauges exercised by the cross-norm suites."""
    return [
        ("lp(1)", lp(1)),
        ("lp(1.5)", lp(1.5)),
        ("lp(2)", lp(2)),
        ("lp(4)", lp(4)),
        ("lp(inf)", lp(float("inf"))),
        ("square", polygonal(SQUARE_VERTICES)),
    ]


@pytest.fixture(scope="session")
def all_norms():
    return norm_suite()
