from __future__ import annotations

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[1]
if str(ROOT) not in sys.path:
    sys.path.insert(0, str(ROOT))

from ringprob.catalog import build_family, enumerate_order4, parse_family  # noqa: E402
from ringprob.ring_core import GroupShape, make_ring  # noqa: E402

# Matrix-unit ids in M2(F_2): coordinates (E11, E12, E21, E22), least significant first.
E11, E12, E21, E22 = 1, 2, 4, 8
# T2(F_2): coordinates (E11, E12, E22).
T11, T12, T22 = 1, 2, 4


def family(text: str):
    return build_family(parse_family(text))


@pytest.fixture(scope="session")
def z4():
    return family("cyclic:4")


@pytest.fixture(scope="session")
def z6():
    return family("cyclic:6")


@pytest.fixture(scope="session")
def zero4():
    return family("zero:4")


@pytest.fixture(scope="session")
def m2f2():
    return family("matrix:2")


@pytest.fixture(scope="session")
def t2f2():
    return family("triangular:2")


@pytest.fixture(scope="session")
def order4_census():
    return list(enumerate_order4([4])) + list(enumerate_order4([2, 2]))


@pytest.fixture(scope="session")
def opposite_idempotent():
    """e1e1 = e1, e2e1 = e2 on Z_2 + Z_2: a ring whose left and right annihilators differ."""
    return make_ring(
        GroupShape((2, 2)),
        [[[1, 0], [0, 0]], [[0, 1], [0, 0]]],
        name="opposite-idempotent",
    )
