from pathlib import Path

import pytest

from intpoints.pointset import DistanceMatrix

DATA = Path(__file__).resolve().parent.parent / "data"

# The two known seven-point certificates, diameter 22270 and 66810.
HEPTAGON_1 = DistanceMatrix(
    [
        [0, 22270, 22098, 16637, 9248, 8908, 8636],
        [22270, 0, 21488, 11397, 15138, 20698, 13746],
        [22098, 21488, 0, 10795, 14450, 13430, 20066],
        [16637, 11397, 10795, 0, 7395, 11135, 11049],
        [9248, 15138, 14450, 7395, 0, 5780, 5916],
        [8908, 20698, 13430, 11135, 5780, 0, 10744],
        [8636, 13746, 20066, 11049, 5916, 10744, 0],
    ]
)

HEPTAGON_2 = DistanceMatrix(
    [
        [0, 66810, 66555, 66294, 49928, 41238, 40290],
        [66810, 0, 32385, 64464, 32258, 25908, 52020],
        [66555, 32385, 0, 34191, 16637, 33147, 33405],
        [66294, 64464, 34191, 0, 34322, 53244, 26724],
        [49928, 32258, 16637, 34322, 0, 20066, 20698],
        [41238, 25908, 33147, 53244, 20066, 0, 32232],
        [40290, 52020, 33405, 26724, 20698, 32232, 0],
    ]
)

# Exact coordinates of the first heptagon under the embedding convention:
# p1 at the origin, p2 on the positive x-axis, p3 above it; y = coeff*sqrt(2002).
HEPTAGON_1_COORDS = [
    ("0", "0"),
    ("22270", "0"),
    ("26127018/2227", "932064/2227"),
    ("245363/17", "3144/17"),
    ("17615968/2227", "238464/2227"),
    ("56068/17", "3144/17"),
    ("19079044/2227", "-54168/2227"),
]


@pytest.fixture
def heptagon1() -> DistanceMatrix:
    return HEPTAGON_1


@pytest.fixture
def heptagon2() -> DistanceMatrix:
    return HEPTAGON_2


@pytest.fixture
def heptagon1_file() -> Path:
    return DATA / "heptagon1.txt"


@pytest.fixture
def heptagon2_file() -> Path:
    return DATA / "heptagon2.txt"
