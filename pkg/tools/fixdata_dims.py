"""Transcribed master table of finite-dimensional simples and their
dimensions, plus the locus map used to build the dataset's concordance file.

Labels are those of the emitted character tables.  In the source's naming
for F4, 1_1 -> 1, 2_1 -> 6, 2_3 -> 8, 4_1 -> 9, 9_1 -> 23 (the assignment
of 2_1/2_3 within {6, 8} is immaterial below: their entries always agree;
9_1 is the 9-dimensional character of b-invariant 2).  H4's boldface
numeric labels and the E6/E7 mnemonic labels coincide with ours.
"""

# group -> list of (d, label, dim L_{1/d}(label), conjectural)
DIMS_TABLE = {
    "F4": [
        (12, "1", 1, False),
        (8, "1", 6, False),
        (6, "1", 20, False),
        (6, "6", 2, False),
        (6, "8", 2, False),
        (4, "1", 96, False),
        (4, "9", 15, False),
        (3, "1", 256, False),
        (3, "9", 64, False),
        (2, "1", 1620, False),
        (2, "6", 78, True),
        (2, "8", 78, True),
        (2, "23", 84, True),
    ],
    "E6": [
        (12, "1_p", 1, False),
        (9, "1_p", 8, False),
        (6, "1_p", 92, False),
        (6, "6_p", 28, False),
        (3, "1_p", 4152, False),
        (3, "6_p", 1680, False),
        (3, "15_p", 56, False),
    ],
    "E7": [
        (18, "1_a", 1, False),
        (14, "1_a", 9, False),
        (10, "7_a'", 36, False),
        (6, "1_a", 3894, False),
        (6, "7_a'", 1806, False),
        (6, "21_a", 84, False),
        (6, "15_a'", 15, False),
    ],
    "H4": [
        (30, "1", 1, False),
        (20, "1", 6, False),
        (15, "1", 20, False),
        (15, "5", 4, False),
        (12, "1", 50, False),
        (10, "1", 105, False),
        (10, "5", 24, False),
        (10, "13", 9, False),
        (10, "3", 15, False),
        (6, "1", 800, False),
        (6, "3", 175, False),
        (6, "5", 175, False),
        (5, "1", 1620, False),
        (5, "11", 84, False),
        (5, "3", 384, False),
        (5, "20", 60, False),
        (4, "1", 3450, False),
        (4, "11", 300, False),
        (4, "13", 300, False),
        (3, "1", 12800, False),
        (3, "18", 300, False),
        (3, "3", 2500, False),
        (3, "5", 2500, False),
        (2, "1", 65625, True),
        (2, "3", 8550, True),
        (2, "5", 8550, True),
        (2, "11", 5625, True),
        (2, "13", 5625, True),
        (2, "27", 825, True),
    ],
}

# (group, d) -> subsection of the source treating that parameter
BLOCK_LOCI = {
    ("H4", 30): "4.1", ("H4", 20): "4.1", ("H4", 15): "4.1", ("H4", 12): "4.1",
    ("H4", 10): "4.2", ("H4", 6): "4.3", ("H4", 5): "4.4", ("H4", 3): "4.4",
    ("H4", 4): "4.5", ("H4", 2): "4.6",
    ("F4", 12): "5", ("F4", 8): "5", ("F4", 6): "5", ("F4", 4): "5",
    ("F4", 3): "5", ("F4", 2): "5",
    ("B3", 6): "5", ("B3", 4): "5", ("B3", 3): "5",
    ("B2", 4): "5", ("A2", 3): "5", ("A2xA1", 3): "5",
    ("E6", 12): "6.1", ("E6", 9): "6.1", ("E6", 8): "6.1",
    ("E6", 6): "6.2", ("E6", 5): "6.3", ("E6", 4): "6.4", ("E6", 3): "6.5",
    ("A4", 3): "6.5", ("A5", 3): "6.5",
    ("E7", 18): "7.1", ("E7", 14): "7.2", ("E7", 12): "7.3", ("E7", 10): "7.4",
    ("E7", 9): "7.5", ("E7", 8): "7.6", ("E7", 7): "7.7", ("E7", 6): "7.8",
    ("E7", 5): "7.9", ("E7", 4): "7.10", ("E7", 3): "7.11",
}

# the d=10 subsection of H4 is itself split principal/standard
BLOCK_LABEL_LOCI = {
    ("H4", 10, "principal"): "4.2.1",
    ("H4", 10, "standard"): "4.2.2",
}

TABLE_LOCI = {
    "H3": "4", "H4": "4",
    "F4": "5", "B3": "5", "B2": "5", "A2": "5", "A1": "5",
    "E6": "6", "D5": "6", "A5": "6.5", "A4": "6.5",
    "E7": "7",
}

FUSION_LOCI = {
    "H3_H4": "4",
    "B2_F4": "5", "B3_F4": "5", "C3_F4": "5",
    "A2xA1_F4_long": "5", "A2xA1_F4_short": "5",
    "A2_B3": "5", "B2_B3": "5",
    "D5_E6": "6", "A2xA2xA1_E6": "6",
    "A2_A4": "6.5", "A4_A5": "6.5", "A5_E6": "6.5",
    "E6_E7": "7",
}

DIMS_LOCUS = "2"
