"""Transcribed E7 source data: blocks, matrices, inverses, character oracles.

Labels follow the classical a/b/c convention; a prime marks the sign twist.
Lowest weights are recomputed exactly from the dimension/reflection-trace
table, so every stored weight line doubles as a consistency check.  Each
stored inverse is checked against its decomposition matrix on import.
"""

from fractions import Fraction

from .labels_e7 import DIM_REFL

F = Fraction


def _h(label, d):
    dim, v = DIM_REFL[label]
    return F(7, 2) - F(63, d) * F(v, dim)


def _bidiag(n):
    return tuple(
        tuple(1 if j == i or j == i + 1 else 0 for j in range(n))
        for i in range(n)
    )


def _alt(n):
    return tuple(
        tuple((-1) ** (j - i) if j >= i else 0 for j in range(n))
        for i in range(n)
    )


def _chain(d, members, stars=(), supports=None):
    n = len(members)
    hs = [_h(m, d) for m in members]
    assert all(b > a and (b - a).denominator == 1
               for a, b in zip(hs, hs[1:])), (d, members, hs)
    return {
        "members": list(members),
        "h": hs,
        "matrix": _bidiag(n),
        "inverse": _alt(n),
        "stars": list(stars),
        "supports": dict(supports or {}),
        "provenance": "verified",
        "defect_one": True,
    }


def _mat(n, ones):
    assert sorted(ones) == list(range(n))
    assert all(min(s) == i for i, s in ones.items())
    return tuple(
        tuple(1 if j in ones[i] else 0 for j in range(n)) for i in range(n)
    )


def _tri(rows):
    n = len(rows)
    assert all(len(r) == n - i for i, r in enumerate(rows))
    assert all(r[0] == 1 for r in rows)
    return tuple(tuple([0] * i + list(r)) for i, r in enumerate(rows))


def _block(d, members, ones, inv_rows, stars=(), supports=None, ties=True):
    n = len(members)
    hs = [_h(m, d) for m in members]
    assert all(b >= a for a, b in zip(hs, hs[1:])), (d, members)
    return {
        "members": list(members),
        "h": hs,
        "matrix": _mat(n, ones),
        "inverse": _tri(inv_rows),
        "stars": list(stars),
        "supports": dict(supports or {}),
        "provenance": "verified",
        "defect_one": False,
    }


# ---------------------------------------------------------------------------
# d = 6: the 34-member principal block.
# ---------------------------------------------------------------------------

M34 = ["1_a", "7_a'", "21_b'", "35_b", "21_a", "105_a'", "15_a'",
       "210_a", "168_a", "105_b", "315_a'", "280_a'", "70_a'",
       "105_c", "420_a", "210_b", "84_a",
       "105_c'", "420_a'", "210_b'", "84_a'",
       "315_a", "280_a", "70_a", "210_a'", "168_a'", "105_b'",
       "105_a", "15_a", "35_b'", "21_a'", "21_b", "7_a", "1_a'"]
H34 = [-7, -4, -2, -1, -1, 0, 0, 1, 1, 1, 2, 2, 2, 3, 3, 3, 3,
       4, 4, 4, 4, 5, 5, 5, 6, 6, 6, 7, 7, 8, 8, 9, 11, 14]

D34_ONES = {
    0: {0, 2, 3, 6, 8, 9, 12, 15},
    1: {1, 2, 3, 5, 7, 8, 9, 10, 13},
    2: {2, 7, 8, 9, 10, 15, 17, 21},
    3: {3, 8, 9, 10, 12, 13, 15, 16, 19},
    4: {4, 5, 7, 11},
    5: {5, 7, 8, 10, 11, 14, 17},
    6: {6, 9, 15, 20},
    7: {7, 10, 11, 13, 14, 17, 18, 21},
    8: {8, 10, 14, 15, 16, 17, 19, 21, 26},
    9: {9, 10, 15, 19, 20, 21, 25},
    10: {10, 13, 14, 18, 19, 21, 25, 26, 31},
    11: {11, 14, 18, 22},
    12: {12, 15, 19, 23},
    13: {13, 18, 31},
    14: {14, 17, 18, 21, 22, 24, 26, 31},
    15: {15, 19, 20, 21, 23, 25, 26, 29},
    16: {16, 19, 26, 28},
    17: {17, 21, 24},
    18: {18, 21, 22, 24, 25, 27, 31},
    19: {19, 23, 25, 26, 28, 29, 31, 33},
    20: {20, 25, 29},
    21: {21, 24, 25, 26, 27, 29, 31, 32},
    22: {22, 24, 27, 30},
    23: {23, 29, 33},
    24: {24, 27, 30, 31, 32},
    25: {25, 27, 29, 31, 32, 33},
    26: {26, 28, 29, 31, 32, 33},
    27: {27, 30, 32},
    28: {28, 33},
    29: {29, 32, 33},
    30: {30},
    31: {31, 32, 33},
    32: {32},
    33: {33},
}

L34_ROWS = [
    [1, 0, -1, -1, 0, 0, -1, 1, 1, 2, -2, -1, 0, 2, 1, -1, 0, -2, -1, 1,
     0, 2, 1, 0, -1, -1, -2, 0, 1, 1, 0, 1, 0, -1],
    [1, -1, -1, 0, -1, 0, 1, 2, 1, -2, 0, 1, 1, 0, -2, -1, -1, 0, 2, 1,
     2, 0, -1, -1, -2, -1, 1, 0, 1, 0, 1, -1, 0],
    [1, 0, 0, 0, 0, -1, -1, -1, 2, 1, 0, -1, -1, 1, 1, 2, 0, -2, 0, -2,
     0, 1, 1, 2, 2, -1, -1, -2, 0, -1, 1, 1],
    [1, 0, 0, 0, 0, -1, -1, 1, 0, -1, -2, 0, 2, 0, 1, 1, -1, -1, -3, -1,
     0, 2, 2, 2, -1, -1, -1, 0, -2, 1, 1],
    [1, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0, 0, 0,
     -1, 0, 1, 0, 0, -1, 0, 0, 0],
    [1, 0, -1, -1, 0, 1, 0, 0, 0, 0, 1, 1, 1, 0, -2, -1, -1, 0, 1, 0, 2,
     1, -1, 0, -1, 1, -1, 1, 0],
    [1, 0, 0, -1, 1, 0, 0, -1, -1, 0, 0, 1, 1, 0, 0, -1, 0, 0, 0, 0, 1,
     0, -1, 0, 0, 0, 0, 0],
    [1, 0, 0, -1, -1, 0, 0, 1, 0, 0, -2, 0, 1, 0, 1, 0, -1, 0, -1, -2,
     0, 1, 2, 0, 1, -1, -1],
    [1, 0, -1, 0, 0, 1, 0, -1, -1, -1, 0, 2, 1, 2, 0, -1, -1, -3, -2, 2,
     1, 2, -1, 2, -2, -1],
    [1, -1, 0, 0, 1, 1, -1, 0, -1, -1, 1, 0, 2, 0, 0, -1, -1, -2, 1, 1,
     1, 0, 1, -1, -1],
    [1, 0, 0, -1, -1, 0, 0, 1, 1, -1, 0, -2, 0, 1, 1, 1, 3, -1, -2, -2,
     0, -2, 2, 2],
    [1, 0, 0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, -1, -1, 0, 0,
     0, 1],
    [1, 0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, -1, -1, 0, 1, 0, 0, 0, 1, -1,
     0],
    [1, 0, 0, 0, 0, -1, 0, 0, 1, 1, 0, -1, 0, -1, 0, 1, 0, 0, 1, 0, -1],
    [1, 0, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0, -2, 0, 2, 1, 0, 1, -1, -2],
    [1, 0, 0, 0, -1, -1, -1, 0, 0, 1, 2, 1, -2, 0, -1, 1, -2, 2, 1],
    [1, 0, 0, -1, 0, 0, 0, 1, 0, 1, 0, -1, 0, -1, 1, 0, 1, 0],
    [1, 0, 0, 0, -1, 0, 0, 0, 1, 1, 0, -1, -1, 0, -1, 1, 1],
    [1, 0, 0, -1, -1, 0, 1, 0, 1, 0, -1, 0, 0, -2, 1, 2],
    [1, 0, 0, 0, -1, 0, -1, -1, 1, 0, 2, -1, 1, -2, -1],
    [1, 0, 0, 0, 0, -1, 0, 1, 0, 0, -1, 1, -1, 0],
    [1, 0, 0, -1, -1, -1, 1, 1, 1, 0, 2, -2, -2],
    [1, 0, -1, 0, 0, 0, 0, 0, 0, 1, 0, -1],
    [1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0],
    [1, 0, 0, -1, 0, 0, 0, -1, 1, 1],
    [1, 0, -1, 0, -1, 1, -1, 2, 1],
    [1, 0, -1, -1, 0, -1, 1, 2],
    [1, 0, 0, -1, 0, -1, 0],
    [1, 0, 0, 0, 0, -1],
    [1, 0, 0, -1, -1],
    [1, 0, 0, 0],
    [1, -1, -1],
    [1, 0],
    [1],
]

# ---------------------------------------------------------------------------
# d = 4: four blocks.
# ---------------------------------------------------------------------------

# block of 7_a' (sign-twist dual of the block of 7_a)
M12P = ["7_a'", "105_a'", "15_a'", "189_c'", "280_b", "378_a'",
        "105_c'", "210_b'", "216_a", "35_b'", "21_a'", "27_a'"]
D12P_ONES = {
    0: {0, 2, 4, 7},
    1: {1, 3, 4, 5},
    2: {2, 7, 9},
    3: {3, 5, 6},
    4: {4, 5, 7, 8},
    5: {5, 6, 8, 10},
    6: {6, 10},
    7: {7, 8, 9, 11},
    8: {8, 10, 11},
    9: {9, 11},
    10: {10},
    11: {11},
}
L12P_ROWS = [
    [1, 0, -1, 0, -1, 1, -1, 1, -1, 0, 1, 0],
    [1, 0, -1, -1, 1, 0, 1, -1, -1, 0, 1],
    [1, 0, 0, 0, 0, -1, 1, 0, -1, 0],
    [1, 0, -1, 0, 0, 1, 0, 0, -1],
    [1, -1, 1, -1, 1, 1, -1, -1],
    [1, -1, 0, -1, 0, 1, 1],
    [1, 0, 0, 0, -1, 0],
    [1, -1, -1, 1, 1],
    [1, 0, -1, -1],
    [1, 0, -1],
    [1, 0],
    [1],
]

# block of 7_a
M12 = ["27_a", "35_b", "21_a", "216_a'", "105_c", "210_b",
       "378_a", "280_b'", "189_c", "105_a", "15_a", "7_a"]
D12_ONES = {
    0: {0, 1, 3, 5},
    1: {1, 5, 10},
    2: {2, 3, 4, 6},
    3: {3, 5, 6, 7},
    4: {4, 6, 8},
    5: {5, 7, 10, 11},
    6: {6, 7, 8, 9},
    7: {7, 9, 11},
    8: {8, 9},
    9: {9},
    10: {10, 11},
    11: {11},
}
L12_ROWS = [
    [1, -1, 0, -1, 0, 1, 1, -1, -1, 1, 0, 0],
    [1, 0, 0, 0, -1, 0, 1, 0, -1, 0, 0],
    [1, -1, -1, 1, 1, -1, 0, 0, -1, 1],
    [1, 0, -1, -1, 1, 1, -1, 1, -1],
    [1, 0, -1, 1, 0, 0, 0, -1],
    [1, 0, -1, 0, 1, -1, 1],
    [1, -1, -1, 1, 0, 1],
    [1, 0, -1, 0, -1],
    [1, -1, 0, 0],
    [1, 0, 0],
    [1, -1],
    [1],
]

# block of 1_a (the spherical representation)
M13 = ["1_a", "56_a'", "210_a", "105_b", "405_a", "189_a", "336_a'",
      "315_a", "70_a", "35_a", "189_b", "120_a'", "21_b"]
D13_ONES = {
    0: {0, 3, 8},
    1: {1, 2, 3, 4},
    2: {2, 4, 5, 6},
    3: {3, 4, 8, 10},
    4: {4, 6, 7, 10},
    5: {5, 6, 9},
    6: {6, 7, 9},
    7: {7, 10, 11},
    8: {8, 10, 12},
    9: {9},
    10: {10, 11, 12},
    11: {11},
    12: {12},
}
L13_ROWS = [
    [1, 0, 0, -1, 1, 0, -1, 0, 0, 1, 0, 0, 0],
    [1, -1, -1, 1, 1, -1, 0, 1, 0, -1, 1, 0],
    [1, 0, -1, -1, 1, 0, 0, 0, 1, -1, -1],
    [1, -1, 0, 1, 0, -1, -1, 1, -1, 0],
    [1, 0, -1, 0, 0, 1, -1, 1, 1],
    [1, -1, 1, 0, 0, -1, 0, 1],
    [1, -1, 0, -1, 1, 0, -1],
    [1, 0, 0, -1, 0, 1],
    [1, 0, -1, 1, 0],
    [1, 0, 0, 0],
    [1, -1, -1],
    [1, 0],
    [1],
]

# block of 1_a'
M13P = ["21_b'", "120_a", "189_b'", "315_a'", "70_a'", "35_a'", "336_a",
        "405_a'", "189_a'", "210_a'", "105_b'", "56_a", "1_a'"]
D13P_ONES = {
    0: {0, 2, 4},
    1: {1, 2, 3, 6},
    2: {2, 3, 4, 10},
    3: {3, 6, 7, 10},
    4: {4, 10, 12},
    5: {5, 6, 8},
    6: {6, 7, 8, 9},
    7: {7, 9, 10, 11},
    8: {8, 9},
    9: {9, 11},
    10: {10, 11, 12},
    11: {11},
    12: {12},
}
L13P_ROWS = [
    [1, 0, -1, 1, 0, 0, -1, 0, 1, 0, 0, 0, 0],
    [1, -1, 0, 1, 0, -1, 1, 1, -1, -1, 1, 0],
    [1, -1, -1, 0, 1, 0, -1, 0, 1, -1, 0],
    [1, 0, 0, -1, 0, 1, 0, -1, 1, 1],
    [1, 0, 0, 0, 0, 0, -1, 1, 0],
    [1, -1, 1, 0, 0, -1, 0, 1],
    [1, -1, -1, 1, 1, -1, -1],
    [1, 0, -1, -1, 1, 1],
    [1, -1, 0, 1, 0],
    [1, 0, -1, 0],
    [1, -1, -1],
    [1, 0],
    [1],
]

# ---------------------------------------------------------------------------
# d = 3: the principal block, its dual, and four defect-1 satellites.
# ---------------------------------------------------------------------------

M22 = ["1_a", "35_b", "21_a", "120_a", "210_a", "168_a", "105_b",
       "280_b", "105_c", "420_a", "210_b", "84_a", "512_a'", "336_a",
       "280_a", "70_a", "35_a", "105_a", "15_a", "56_a", "21_b", "7_a"]
D22_ONES = {
    0: {0, 1, 3, 5, 18},
    1: {1, 5, 7, 8, 11, 18},
    2: {2, 3, 4, 15},
    3: {3, 4, 5, 6, 7, 9, 10, 12, 15, 18},
    4: {4, 7, 8, 9, 12, 13, 15, 16},
    5: {5, 7, 9, 10, 11, 12, 16, 17, 18},
    6: {6, 7, 10, 12, 21},
    7: {7, 8, 11, 12, 13, 16, 17, 18, 20, 21},
    8: {8, 13, 20},
    9: {9, 12, 13, 14, 16, 17},
    10: {10, 12, 15, 17, 19, 21},
    11: {11, 17, 18, 20},
    12: {12, 13, 14, 15, 17, 18, 19, 20, 21},
    13: {13, 14, 16, 17, 20},
    14: {14, 17, 19},
    15: {15, 19},
    16: {16, 17},
    17: {17, 19, 20, 21},
    18: {18, 20},
    19: {19, 21},
    20: {20, 21},
    21: {21},
}
L22_ROWS = [
    [1, -1, 0, -1, 1, 1, 1, -1, 1, -1, -1, 1, 1, -1, 1, 0, 1, -1, -1, 0,
     1, 0],
    [1, 0, 0, 0, -1, 0, 0, -1, 1, 1, 0, -1, 1, -1, 0, -1, 1, 1, 0, -1,
     0],
    [1, -1, 0, 1, 1, -1, 1, 0, -1, 0, 1, -1, 0, 0, 1, 0, 0, 0, 0, 0],
    [1, -1, -1, -1, 2, -1, 1, 1, -1, -2, 1, 0, 1, -2, 1, 1, -1, -1, 1],
    [1, 0, 0, -1, 0, -1, 0, 1, 1, 0, 0, -2, 1, -1, -1, 2, 1, -2],
    [1, 0, -1, 1, -1, -1, 0, 2, -1, 0, -1, 2, -1, -2, 1, 2, -2],
    [1, -1, 1, 0, -1, 1, 1, -1, 0, 0, 2, -1, -1, 1, 1, -1],
    [1, -1, 0, 0, -1, -1, 1, 0, 1, -2, 2, 1, -2, -2, 2],
    [1, 0, 0, 0, 0, -1, 1, 0, 1, -1, 0, 0, 1, 0],
    [1, 0, 0, -1, 0, 0, 1, -1, 1, 1, -1, -1, 2],
    [1, 0, -1, 1, 0, 0, -1, 0, 1, 0, -1, 1],
    [1, 0, 0, 0, 0, 0, -1, -1, 1, 1, -1],
    [1, -1, 0, -1, 1, -1, -1, 1, 2, -3],
    [1, -1, 0, -1, 1, 0, 0, -2, 1],
    [1, 0, 0, -1, 0, 0, 1, 0],
    [1, 0, 0, 0, -1, 0, 1],
    [1, -1, 0, 1, 1, -1],
    [1, 0, -1, -1, 1],
    [1, 0, -1, 1],
    [1, 0, -1],
    [1, -1],
    [1],
]

M22P = ["7_a'", "21_b'", "56_a'", "105_a'", "15_a'", "280_a'", "70_a'",
        "35_a'", "336_a'", "512_a", "105_c'", "420_a'", "210_b'",
        "84_a'", "280_b'", "210_a'", "168_a'", "105_b'", "120_a'",
        "35_b'", "21_a'", "1_a'"]
D22P_ONES = {
    0: {0, 1, 2, 3, 7, 17},
    1: {1, 3, 4, 9, 10, 13, 14, 17},
    2: {2, 3, 5, 6, 9, 12, 17},
    3: {3, 5, 7, 8, 9, 10, 12, 13, 14, 16, 17},
    4: {4, 9, 13, 14, 21},
    5: {5, 8, 9, 11, 12, 16},
    6: {6, 9, 12, 20},
    7: {7, 8, 16},
    8: {8, 9, 10, 11, 14, 15, 16},
    9: {9, 11, 12, 14, 15, 16, 17, 18, 20, 21},
    10: {10, 14, 15},
    11: {11, 15, 16, 18},
    12: {12, 16, 17, 18, 20},
    13: {13, 14, 16, 19, 21},
    14: {14, 15, 16, 17, 18, 19, 21},
    15: {15, 18, 20},
    16: {16, 18, 19, 21},
    17: {17, 18},
    18: {18, 20, 21},
    19: {19, 21},
    20: {20},
    21: {21},
}
L22P_ROWS = [
    [1, -1, -1, 1, 1, 0, 1, -2, 1, -2, -1, 1, 1, -1, 2, -1, -1, -1, 1,
     0, 0, 0],
    [1, 0, -1, -1, 1, 0, 1, -1, 1, 1, -1, -1, 1, -1, 1, 1, 1, -1, -1,
     0, 1],
    [1, -1, 0, 0, -1, 1, 0, 1, 1, -1, 0, 1, -2, 1, 1, 1, -1, 0, 0, 0],
    [1, 0, -1, 0, -1, 1, -1, -2, 1, 1, -1, 2, -1, -2, -3, 3, 1, -2,
     -2],
    [1, 0, 0, 0, 0, -1, 0, 1, 1, -1, 1, -1, -1, -1, 1, 1, 0, -1],
    [1, 0, 0, -1, 0, 1, 0, -1, 0, 0, 0, 1, 1, -1, -1, 2, 1],
    [1, 0, 0, -1, 0, 1, 0, 0, 1, -1, -1, 0, 1, 0, 0, 0],
    [1, -1, 1, 1, 0, -1, 0, -1, 0, 1, 1, -1, 0, 1, 0],
    [1, -1, -1, 0, 1, 0, 1, 0, -2, -1, 2, 1, -2, -1],
    [1, 0, -1, -1, 0, -1, 1, 2, 1, -2, -1, 1, 1],
    [1, 0, 0, 0, -1, 0, 1, 1, -1, 0, 1, 1],
    [1, 0, 0, 0, -1, -1, 0, 1, 1, 0, -1],
    [1, 0, 0, 0, -1, -1, 1, 1, -2, -1],
    [1, -1, 1, 0, 1, -1, 0, 0, 1],
    [1, -1, -1, -1, 2, 0, -1, -2],
    [1, 0, 0, -1, 0, 0, 1],
    [1, 0, -1, -1, 1, 1],
    [1, -1, 0, 1, 1],
    [1, 0, -1, -1],
    [1, 0, -1],
    [1, 0],
    [1],
]

BLOCKS = {
    ("E7", 18, "principal"): _chain(
        18,
        ["1_a", "7_a'", "21_a", "35_a'", "35_a", "21_a'", "7_a", "1_a'"],
        stars=["1_a"]),
    ("E7", 14, "principal"): _chain(
        14,
        ["1_a", "27_a", "105_a'", "189_a", "189_a'", "105_a", "27_a'",
         "1_a'"],
        stars=["1_a"]),
    ("E7", 12, "principal"): _chain(
        12,
        ["1_a", "56_a'", "210_a", "336_a'", "280_a", "120_a'", "21_b"],
        supports={"1_a": 1}),
    ("E7", 12, "dual"): _chain(
        12,
        ["21_b'", "120_a", "280_a'", "336_a", "210_a'", "56_a", "1_a'"],
        supports={"21_b'": 1}),
    ("E7", 10, "principal"): _chain(
        10,
        ["1_a", "21_b'", "189_c'", "420_a", "405_a'", "189_b", "35_b'"],
        supports={"1_a": 1}),
    ("E7", 10, "dual"): _chain(
        10,
        ["35_b", "189_b'", "405_a", "420_a'", "189_c", "21_b", "1_a'"],
        supports={"35_b": 1}),
    ("E7", 10, "standard"): _chain(
        10,
        ["7_a'", "27_a", "168_a", "378_a'", "378_a", "168_a'", "27_a'",
         "7_a"],
        stars=["7_a'"]),
    ("E7", 9, "principal"): _chain(
        9,
        ["1_a", "35_b", "280_b", "512_a'", "315_a", "56_a", "7_a"],
        supports={"1_a": 1}),
    ("E7", 9, "dual"): _chain(
        9,
        ["7_a'", "56_a'", "315_a'", "512_a", "280_b'", "35_b'", "1_a'"],
        supports={"7_a'": 1}),
    ("E7", 7, "principal"): _chain(
        7,
        ["1_a", "27_a", "120_a", "405_a", "512_a'", "216_a", "15_a"],
        supports={"1_a": 1}),
    ("E7", 7, "dual"): _chain(
        7,
        ["15_a'", "216_a'", "512_a", "405_a'", "120_a'", "27_a'", "1_a'"],
        supports={"15_a'": 1}),
    ("E7", 6, "principal"): {
        "members": M34,
        "h": [F(x) for x in H34],
        "matrix": _mat(34, D34_ONES),
        "inverse": _tri(L34_ROWS),
        "stars": ["1_a", "7_a'", "21_a", "15_a'"],
        "supports": {"21_b'": 1, "35_b": 1, "105_a'": 1,
                     "105_b": 2, "70_a'": 2, "105_c": 2,
                     "210_a": 3, "168_a": 3, "84_a": 3, "105_c'": 3},
        "provenance": "verified",
        "defect_one": False,
    },
    ("E7", 6, "sat27"): _chain(
        6, ["27_a", "189_b'", "378_a'", "405_a'", "189_c"],
        supports={"27_a": 3}),
    ("E7", 6, "sat27_dual"): _chain(
        6, ["189_c'", "405_a", "378_a", "189_b", "27_a'"],
        supports={"189_c'": 3}),
    ("E7", 6, "sat56"): _chain(
        6, ["56_a'", "120_a", "336_a'", "336_a", "120_a'", "56_a"],
        supports={"56_a'": 2}),
    ("E7", 5, "principal"): _chain(
        5, ["1_a", "84_a", "216_a", "189_b", "56_a"],
        supports={"1_a": 3}),
    ("E7", 5, "dual"): _chain(
        5, ["56_a'", "189_b'", "216_a'", "84_a'", "1_a'"],
        supports={"56_a'": 3}),
    ("E7", 5, "standard"): _chain(
        5, ["7_a'", "378_a'", "512_a", "168_a'", "27_a'"],
        supports={"7_a'": 3}),
    ("E7", 5, "standard_dual"): _chain(
        5, ["27_a", "168_a", "512_a'", "378_a", "7_a"],
        supports={"27_a": 3}),
    ("E7", 5, "sat21"): _chain(
        5, ["21_b'", "189_c'", "336_a'", "189_a'", "21_a'"],
        supports={"21_b'": 3}),
    ("E7", 5, "sat21_dual"): _chain(
        5, ["21_a", "189_a", "336_a", "189_c", "21_b"],
        supports={"21_a": 3}),
    ("E7", 4, "principal"): _block(
        4, M13, D13_ONES, L13_ROWS,
        supports={"1_a": 3, "56_a'": 3, "210_a": 4, "105_b": 4,
                  "189_a": 3}),
    ("E7", 4, "dual"): _block(
        4, M13P, D13P_ONES, L13P_ROWS,
        supports={"21_b'": 3, "120_a": 3, "189_b'": 4, "35_a'": 3,
                  "336_a": 4}),
    ("E7", 4, "standard"): _block(
        4, M12P, D12P_ONES, L12P_ROWS,
        supports={"7_a'": 3, "105_a'": 3, "15_a'": 4, "189_c'": 4,
                  "280_b": 4}),
    ("E7", 4, "standard_dual"): _block(
        4, M12, D12_ONES, L12_ROWS,
        supports={"27_a": 3, "35_b": 4, "21_a": 3, "216_a'": 4,
                  "105_c": 4}),
    ("E7", 3, "principal"): _block(
        3, M22, D22_ONES, L22_ROWS,
        supports={"1_a": 1, "35_b": 3, "21_a": 1, "120_a": 1,
                  "210_a": 5, "168_a": 5, "105_b": 3, "280_b": 5,
                  "105_c": 3, "420_a": 5, "210_b": 3, "35_a": 5}),
    ("E7", 3, "dual"): _block(
        3, M22P, D22P_ONES, L22P_ROWS,
        supports={"7_a'": 1, "21_b'": 1, "56_a'": 3, "105_a'": 5,
                  "15_a'": 3, "280_a'": 5, "70_a'": 3, "35_a'": 1,
                  "336_a'": 5, "512_a": 5, "105_c'": 5, "84_a'": 3}),
    ("E7", 3, "sat27"): _chain(
        3, ["27_a", "216_a", "189_c"], supports={"27_a": 5}),
    ("E7", 3, "sat27_dual"): _chain(
        3, ["189_c'", "216_a'", "27_a'"], supports={"189_c'": 5}),
    # the source prints the last member of the second chain as 189_b';
    # only 189_b lies on an integral weight line with 189_a and 378_a
    ("E7", 3, "sat189"): _chain(
        3, ["189_a", "378_a", "189_b"], supports={"189_a": 5}),
    ("E7", 3, "sat189_dual"): _chain(
        3, ["189_b'", "378_a'", "189_a'"], supports={"189_b'": 5}),
}

# d = 8 blocks are not of defect one and their full matrices are not
# verified; only the minimal-support simples are, each the alternating sum
# of the Vermas along its 6-chain, with 2-dimensional support.
D8_CHAINS = {
    "principal": ["1_a", "105_b", "216_a'", "280_b'", "189_b", "21_b"],
    "dual": ["21_b'", "189_b'", "280_b", "216_a", "105_b'", "1_a'"],
    "standard": ["7_a'", "120_a", "189_c'", "105_c'", "56_a", "27_a'"],
    "standard_dual": ["27_a", "56_a'", "105_c", "189_c", "120_a'", "7_a"],
}

# (group, d, block, label) -> (shift, numerator coefficients, pole order).
CHAR_ORACLES = {
    ("E7", 18, "principal", "1_a"): (F(0), (1,), 0),
    ("E7", 14, "principal", "1_a"): (F(-1), (1, 7, 1), 0),
    ("E7", 12, "principal", "1_a"): (F(-7, 4), (1, 6, 21), 1),
    ("E7", 12, "dual", "21_b'"): (F(3, 4), (21, 6, 1), 1),
    ("E7", 10, "principal", "1_a"): (F(-14, 5), (1, 6, 21, 35), 1),
    ("E7", 10, "dual", "35_b"): (F(4, 5), (35, 21, 6, 1), 1),
    ("E7", 10, "standard", "7_a'"): (F(-1), (7, 22, 7), 0),
    ("E7", 9, "principal", "1_a"): (
        F(-7, 2), (1, 6, 21, 56, 91, 42, 7), 1),
    ("E7", 9, "dual", "7_a'"): (
        F(-3, 2), (7, 42, 91, 56, 21, 6, 1), 1),
    ("E7", 8, "principal", "1_a"): (
        F(-35, 8), (1, 5, 15, 35, 70, 126, 105, 21), 2),
    ("E7", 8, "dual", "21_b'"): (
        F(-5, 8), (21, 105, 126, 70, 35, 15, 5, 1), 2),
    ("E7", 8, "standard", "7_a'"): (
        F(-17, 8), (7, 35, 105, 125, 79, 27), 2),
    ("E7", 8, "standard_dual", "27_a"): (
        F(-7, 8), (27, 79, 125, 105, 35, 7), 2),
    ("E7", 7, "principal", "1_a"): (
        F(-11, 2), (1, 6, 21, 56, 99, 90, 15), 1),
    ("E7", 7, "dual", "15_a'"): (
        F(1, 2), (15, 90, 99, 56, 21, 6, 1), 1),
    ("E7", 6, "principal", "1_a"): (
        F(-7), (1, 7, 28, 84, 210, 441, 742, 868, 742, 441, 210, 84, 28,
                7, 1), 0),
    ("E7", 6, "principal", "7_a'"): (
        F(-4), (7, 49, 175, 406, 532, 406, 175, 49, 7), 0),
    ("E7", 6, "principal", "21_a"): (F(-1), (21, 42, 21), 0),
    ("E7", 6, "principal", "15_a'"): (F(0), (15,), 0),
    ("E7", 6, "principal", "70_a'"): (F(2), (70, 140, 84, 35, 7), 2),
    ("E7", 6, "principal", "105_c"): (
        F(3), (105, 105, 70, 35, 15, 5, 1), 2),
    ("E7", 6, "principal", "84_a"): (F(3), (84, 126, 70, 28, 7), 3),
    ("E7", 6, "principal", "105_c'"): (
        F(4), (105, 105, 63, 27, 10, 4, 1), 3),
    ("E7", 5, "principal", "1_a"): (
        F(-91, 10), (1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364,
                     371, 224, 56), 3),
    ("E7", 5, "dual", "56_a'"): (
        F(-19, 10), (56, 224, 371, 364, 286, 220, 165, 120, 84, 56, 35,
                     20, 10, 4, 1), 3),
    ("E7", 4, "standard", "7_a'"): (
        F(-31, 4), (7, 28, 70, 140, 245, 392, 573, 780, 1005, 960, 735,
                    420, 210, 84, 21), 3),
    ("E7", 4, "standard", "105_a'"): (
        F(-7, 4), (105, 420, 861, 1064, 1043, 812, 595, 400, 235, 108,
                   27), 3),
    ("E7", 4, "standard", "15_a'"): (
        F(-7, 4), (15, 45, 90, 150, 225, 315, 210, 126, 63, 21), 4),
    ("E7", 4, "standard", "189_c'"): (
        F(1, 4), (189, 567, 756, 756, 567, 405, 270, 162, 81, 27), 4),
    ("E7", 4, "standard", "280_b"): (
        F(5, 4), (280, 462, 546, 427, 321, 228, 148, 81, 27), 4),
    ("E7", 4, "standard_dual", "27_a"): (
        F(-21, 4), (27, 108, 235, 400, 595, 812, 1043, 1064, 861, 420,
                    105), 3),
    ("E7", 4, "standard_dual", "35_b"): (
        F(-13, 4), (35, 105, 210, 350, 525, 735, 770, 630, 315, 105), 4),
    ("E7", 4, "standard_dual", "21_a"): (
        F(-13, 4), (21, 84, 210, 420, 735, 960, 1005, 780, 573, 392, 245,
                    140, 70, 28, 7), 3),
    ("E7", 4, "standard_dual", "216_a'"): (
        F(7, 4), (216, 438, 666, 522, 286, 147, 105, 70, 42, 21, 7), 4),
    ("E7", 4, "standard_dual", "105_c"): (
        F(11, 4), (105, 315, 252, 196, 147, 105, 70, 42, 21, 7), 4),
    ("E7", 4, "principal", "1_a"): (
        F(-49, 4), (1, 4, 10, 20, 35, 56, 84, 120, 165, 220, 286, 364,
                    350, 140, 35), 3),
    ("E7", 4, "principal", "56_a'"): (
        F(-13, 4), (56, 224, 560, 805, 700, 580, 444, 291, 120), 3),
    ("E7", 4, "principal", "210_a"): (
        F(-1, 4), (210, 630, 666, 654, 594, 486, 330, 126, 63, 21), 4),
    ("E7", 4, "principal", "105_b"): (
        F(-1, 4), (105, 315, 225, 171, 153, 171, 120), 4),
    ("E7", 4, "principal", "189_a"): (
        F(7, 4), (189, 420, 546, 420, 210, 84, 21), 3),
    ("E7", 4, "dual", "21_b'"): (
        F(-19, 4), (21, 84, 210, 420, 546, 420, 189), 3),
    ("E7", 4, "dual", "120_a"): (
        F(-7, 4), (120, 291, 444, 580, 700, 805, 560, 224, 56), 3),
    ("E7", 4, "dual", "189_b'"): (
        F(-3, 4), (189, 567, 749, 735, 525, 455, 336, 168, 56), 4),
    ("E7", 4, "dual", "35_a'"): (
        F(5, 4), (35, 140, 350, 364, 286, 220, 165, 120, 84, 56, 35, 20,
                  10, 4, 1), 3),
    ("E7", 4, "dual", "336_a"): (
        F(17, 4), (336, 414, 234, 111, 45, 36, 28, 21, 15, 10, 6, 3,
                   1), 4),
}

DIMS = {
    (18, "principal", "1_a"): 1,
    (14, "principal", "1_a"): 9,
    (10, "standard", "7_a'"): 36,
    (6, "principal", "1_a"): 3894,
    (6, "principal", "7_a'"): 1806,
    (6, "principal", "21_a"): 84,
    (6, "principal", "15_a'"): 15,
}

# ---------------------------------------------------------------------------
# K-theoretic induction/restriction oracles, E6 < E7.
# ---------------------------------------------------------------------------

# At d = 6: the principal-block component of [Ind L(tau)] for E6 simples
# tau, as vectors of E7 Verma classes (the source prints the projection to
# the principal block).
IND_E6_D6 = {
    "1_p": (("1_a", 1), ("1_a'", 1), ("7_a", 1), ("7_a'", 1),
            ("35_b", -2), ("35_b'", -2), ("105_a'", -1), ("105_a", -1),
            ("15_a'", -1), ("15_a", -1), ("168_a", 1), ("168_a'", 1),
            ("84_a", 1), ("84_a'", 1), ("420_a", -1), ("420_a'", -1),
            ("105_c'", 1), ("105_c", 1), ("105_b", 1), ("105_b'", 1),
            ("210_b", -1), ("210_b'", -1), ("70_a'", 1), ("70_a", 1),
            ("280_a'", 1), ("280_a", 1)),
    "6_p": (("21_a", 1), ("21_a'", 1), ("7_a", 1), ("7_a'", 1),
            ("35_b", -1), ("35_b'", -1), ("210_a", -1), ("210_a'", -1),
            ("21_b", -1), ("21_b'", -1), ("105_c", 1), ("105_c'", 1),
            ("105_b", 1), ("105_b'", 1), ("168_a", 1), ("168_a'", 1),
            ("70_a", 1), ("70_a'", 1), ("210_b", -1), ("210_b'", -1)),
    "15_q": (("35_b", 1), ("15_a'", 1), ("168_a", -1), ("70_a'", -1),
             ("420_a", 1), ("210_b'", 1), ("105_c", -1), ("84_a'", -1),
             ("280_a", -1), ("105_b'", -1), ("105_a", 1), ("35_b'", 1),
             ("7_a", -1), ("1_a'", -1)),
    "24_p": (("168_a", 1), ("315_a'", -1), ("105_c", 1), ("210_b", -1),
             ("84_a", 1), ("105_c'", 1), ("84_a'", 1), ("70_a", 1),
             ("210_a'", -1), ("168_a'", 1), ("15_a", -1), ("35_b'", -2),
             ("21_a'", 1), ("7_a", 2), ("1_a'", 1)),
}

# At d = 6: [Ind L(tau)] in terms of E7 simple classes.
IND_E6_COMP_D6 = {
    "1_p": (("1_a", 1), ("7_a'", 1), ("21_b'", 2)),
    "6_p": (("7_a'", 1), ("21_a", 1), ("105_a'", 2)),
    # the source's displayed sum prints a single 105_b, but its own
    # derivation states twice that two copies occur
    "15_q": (("35_b", 1), ("15_a'", 1), ("105_b", 2)),
}

# At d = 6: restrictions of E7 simples to E6 (empty tuple: restriction 0).
RES_E7_D6 = {
    "35_b": (),
    "168_a": (("20_p", 1),),
    "210_a": (("20_p", 1),),
    "84_a": (("24_p", 1),),
    "105_c'": (("24_p", 1),),
}

# At d = 6: Res of the principal-block component of Ind of E6 simples,
# in E6 simple classes.
RES_IND_E6_D6 = {
    "20_p": (("20_p", 4), ("6_p", 1), ("24_p", 1), ("1_p", 1)),
    "24_p": (("24_p", 4), ("20_p", 1)),
}

# At d = 3: inductions/restrictions of simples and sign-twist dual pairs.
# The inductions are block components ("after projecting to the block in
# question", as the source puts it).
IND_E6_D3 = {"1_p": "21_b'", "6_p": "7_a'", "15_p": "35_a'",
             "30_p": "56_a'", "15_q": "35_b"}
# Simple-multiplicity decompositions of restrictions of simples.  The
# source's running text asserts Res L(336_a) = L(64_p) and counts
# Res L(336_a') = L(64_p) once; the final matrices it prints give the
# decompositions below instead (a dropped prime and two extra L(20_s)).
RES_E7_D3 = {
    "35_a": (("20_s", 1),),
    "336_a": (("64_p'", 1), ("81_p", 1)),
    "512_a": (("60_p", 1),),
    "336_a'": (("64_p", 1), ("20_s", 2)),
    "105_c'": (("24_p", 1),),
}
# Sign-twist dual pairs between the principal block and its dual.  The
# source prints the middle partner as 35_a; only 35_a' lies in the dual
# block, and the twisted Verma vector matches its printed row.
DUALS_D3 = (("1_a", "21_b'"), ("21_a", "35_a'"), ("120_a", "7_a'"))

# At d = 4: a virtual module.  The class below lies in the block of 1_a'
# and restricts to E6 with a negative simple multiplicity, so no module of
# H_{1/4}(E7) has this class.
VIRTUAL_M_D4 = (("189_b'", 1), ("315_a'", -1), ("70_a'", -1),
                ("405_a'", 1), ("210_a'", -1), ("1_a'", 1))
# ... its E6 restriction as a Verma vector; in simples it is
# L(20_p) + L(15_q) - L(81_p), hence virtual.
VIRTUAL_RES_E6_D4 = (("20_p", 1), ("15_q", 1), ("81_p", -1),
                     ("60_p", -1), ("10_s", -1), ("60_p'", 1),
                     ("90_s", 1), ("15_p'", -1), ("20_p'", -1),
                     ("1_p'", 1))

# At d = 4: the projection of Ind L(1_p) to the block of 21_b' is L(21_b').
IND_PROJ_21BP_D4 = (("21_b'", 1), ("189_b'", -1), ("315_a'", 1),
                    ("336_a", -1), ("189_a'", 1))


def _check_inverse(key, blk):
    D, L = blk["matrix"], blk["inverse"]
    n = len(D)
    for i in range(n):
        for j in range(n):
            s = sum(D[i][k] * L[k][j] for k in range(n))
            assert s == (i == j), (key, i, j, s)


for _key, _blk in BLOCKS.items():
    assert len(_blk["members"]) == len(set(_blk["members"]))
    _check_inverse(_key, _blk)
    _hs = [_h(m, _key[1]) for m in _blk["members"]]
    assert _hs == _blk["h"], _key
    assert all(b >= a for a, b in zip(_hs, _hs[1:])), _key

for _name, _members in D8_CHAINS.items():
    _hs = [_h(m, 8) for m in _members]
    assert all(b > a and (b - a).denominator == 1
               for a, b in zip(_hs, _hs[1:])), (_name, _hs)

for (_g, _d, _b, _m), (_shift, _num, _pole) in CHAR_ORACLES.items():
    _members = D8_CHAINS[_b] if _d == 8 else BLOCKS[(_g, _d, _b)]["members"]
    assert _m in _members, (_d, _b, _m)
    assert _shift == _h(_m, _d), (_d, _b, _m)
    assert _num[0] == DIM_REFL[_m][0], (_d, _b, _m)
    if _pole == 0:
        assert _num == _num[::-1], (_d, _b, _m)
