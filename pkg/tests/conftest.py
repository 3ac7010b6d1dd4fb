from pathlib import Path

import pytest

from fwlab import Graph

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def g3() -> Graph:
    """Triangle where the two-hop route 0->1->2 (weight 3) beats the direct edge."""
    return Graph(3, [(0, 1, 1), (1, 2, 2), (0, 2, 10)])


@pytest.fixture
def g5div() -> Graph:
    """Fixture on which the stale-buffer layered variant overestimates.

    True distances: 0->3 is 2 (via 1) and 0->4 is 3 (via 1 and 3).
    """
    return Graph(5, [(0, 1, 1), (1, 3, 1), (3, 4, 1), (0, 3, 10), (0, 4, 100)])
