import time

import pytest

from cubicaut.verify import verify_all


@pytest.fixture(scope="session")
def full_run():
    """One complete claim run shared by the report and acceptance tests.

    Returns (claims, wall_seconds).  Everything downstream filters this list
    by claim id prefix instead of recomputing.
    """
    t0 = time.monotonic()
    claims = verify_all()
    return claims, time.monotonic() - t0


def by_prefix(claims, prefix):
    return [c for c in claims if c.id.startswith(prefix)]
