"""Shared fixtures: the reference collections and their golden outputs."""

import pytest

from polyoideals import parse_encoding

# reference encodings, kept verbatim (spacing included)
SINGLE = "{{{1, 1}, {2, 2}}}"
BLOCK22 = "{{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}, {{1, 2}, {2, 3}}, {{2, 2}, {3, 3}}}"
STAIR3 = "{{{1,1},{2,2}},{{2,2},{3,3}},{{3,3},{4,4}}}"
FIG2 = ("{{{1, 1}, {2, 2}}, {{2, 1}, {3, 2}}, {{3, 1}, {4, 2}}, {{2, 2}, {3, 3}}, "
        "{{3, 2}, {4, 3}}, {{2, 3}, {3, 4}}}")
FIG3A = ("{{{1, 1}, {2, 2}}, {{2, 2}, {3, 3}}, {{2, 1}, {3, 2}},{{3, 2}, {4, 3}}, "
         "{{2, 3}, {3, 4}}, {{4, 1}, {5, 2}}, {{3, 4}, {4, 5}}}")
CLOSED16 = ("{{{2, 1}, {3, 2}}, {{2, 2}, {3, 3}}, {{1, 2}, {2, 3}}, {{1, 3}, {2, 4}}, "
            "{{1, 4}, {2, 5}}, {{2, 4}, {3, 5}}, {{2, 5}, {3, 6}}, {{3, 5}, {4, 6}}, "
            "{{4, 5}, {5, 6}}, {{4, 4}, {5, 5}}, {{5, 4}, {6, 5}}, {{5, 3}, {6, 4}}, "
            "{{5, 2}, {6, 3}}, {{4, 2}, {5, 3}}, {{4, 1}, {5, 2}}, {{3, 1}, {4, 2}}}")
TWELVE = ("{{{1, 3}, {2, 4}}, {{2, 2}, {3, 3}}, {{2, 3}, {3, 4}}, {{2, 4}, {3, 5}}, "
          "{{3, 4}, {4, 5}}, {{3, 3}, {4, 4}}, {{3, 2}, {4, 3}}, {{3, 1}, {4, 2}}, "
          "{{3, 5}, {4, 6}}, {{4, 4}, {5, 5}}, {{4, 3}, {5, 4}}, {{5, 4}, {6, 5}}}")
FIG5 = ("{{{3, 1}, {4, 2}}, {{3, 2}, {4, 3}}, {{4, 2}, {5, 3}}, {{4, 3}, {5, 4}}, "
        "{{4, 4}, {5, 5}}, {{5, 3}, {6, 4}}, {{3, 4}, {4, 5}}, {{2, 4}, {3, 5}}, "
        "{{2, 3}, {3, 4}}, {{2, 2}, {3, 3}}, {{1, 3}, {2, 4}}, {{3, 5}, {4, 6}}}")

# the 15 expected generators of the 6-cell example's ideal
FIG2_GENERATORS = [
    "x_(4,3)x_(3,2)-x_(4,2)x_(3,3)",
    "x_(2,2)x_(1,1)-x_(2,1)x_(1,2)",
    "x_(4,3)x_(2,1)-x_(4,1)x_(2,3)",
    "x_(3,2)x_(2,1)-x_(3,1)x_(2,2)",
    "x_(4,3)x_(2,2)-x_(4,2)x_(2,3)",
    "x_(3,3)x_(2,1)-x_(3,1)x_(2,3)",
    "x_(4,2)x_(1,1)-x_(4,1)x_(1,2)",
    "x_(3,4)x_(2,1)-x_(3,1)x_(2,4)",
    "x_(3,3)x_(2,2)-x_(3,2)x_(2,3)",
    "x_(4,2)x_(3,1)-x_(4,1)x_(3,2)",
    "x_(3,4)x_(2,2)-x_(3,2)x_(2,4)",
    "x_(3,2)x_(1,1)-x_(3,1)x_(1,2)",
    "x_(4,3)x_(3,1)-x_(4,1)x_(3,3)",
    "x_(3,4)x_(2,3)-x_(3,3)x_(2,4)",
    "x_(4,2)x_(2,1)-x_(4,1)x_(2,2)",
]

FIG2_MATRIX = (
    "| 0       x_(2,4) x_(3,4) 0       |\n"
    "| 0       x_(2,3) x_(3,3) x_(4,3) |\n"
    "| x_(1,2) x_(2,2) x_(3,2) x_(4,2) |\n"
    "| x_(1,1) x_(2,1) x_(3,1) x_(4,1) |"
)

# the one degree->=3 minimal generator of the closed path's toric kernel
CLOSED16_QUARTIC = (
    ((6, 5), (5, 1), (2, 6), (1, 2)),  # positive monomial
    ((6, 2), (5, 6), (2, 1), (1, 5)),  # negative monomial
)

FIG5_HILBERT_NUMERATOR = (1, 12, 50, 92, 76, 24, 2)
FIG5_HILBERT_EXPONENT = 12

# expected variable listing for the 3-cell staircase ring
STAIR3_UNIVERSE = [
    "x_(4,4)", "x_(4,3)", "x_(3,4)", "x_(3,3)", "x_(3,2)",
    "x_(2,3)", "x_(2,2)", "x_(2,1)", "x_(1,2)", "x_(1,1)",
]


@pytest.fixture(scope="session")
def single():
    return parse_encoding(SINGLE)


@pytest.fixture(scope="session")
def block22():
    return parse_encoding(BLOCK22)


@pytest.fixture(scope="session")
def stair3():
    return parse_encoding(STAIR3)


@pytest.fixture(scope="session")
def fig2():
    return parse_encoding(FIG2)


@pytest.fixture(scope="session")
def fig3a():
    return parse_encoding(FIG3A)


@pytest.fixture(scope="session")
def closed16():
    return parse_encoding(CLOSED16)


@pytest.fixture(scope="session")
def twelve():
    return parse_encoding(TWELVE)


@pytest.fixture(scope="session")
def fig5():
    return parse_encoding(FIG5)
