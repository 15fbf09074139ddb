"""Assignment of the classical a/b/c labels to the E7 irreducibles.

A label is pinned by the pair (dimension, trace of a reflection): the 60
irreducibles fall into 57 distinct such pairs.  The three colliding pairs --
{280_a', 280_b} with trace +40, their sign twists {280_a, 280_b'}, and
{512_a, 512_a'} with trace 0 -- are resolved by branching to E6:

 * the restriction of 280_a' to E6 is 15_p + 30_p + 64_p + 81_p + 90_s
   (each with multiplicity one); 280_b does not contain 15_p;
 * the 512 pair is resolved by a caller-supplied discriminator (in the
   generator: the transcribed Verma vector of the simple L(512_a) in the
   c=1/3 dual block restricts to the E6 simple L(60_p), and the other
   members of that block are already pinned by (dimension, trace)).

280_a and 280_b' are the sign twists of 280_a' and 280_b.  Every final
assignment is checked against the dimension/reflection-trace table.
"""

from __future__ import annotations

from rcao.exact import QuadRat

# label -> (dimension, character value at a reflection)
DIM_REFL = {
    "1_a": (1, 1), "1_a'": (1, -1),
    "7_a'": (7, 5), "7_a": (7, -5),
    "15_a'": (15, 5), "15_a": (15, -5),
    "21_a": (21, 9), "21_a'": (21, -9),
    "21_b'": (21, 11), "21_b": (21, -11),
    "27_a": (27, 15), "27_a'": (27, -15),
    "35_b": (35, 15), "35_b'": (35, -15),
    "35_a'": (35, 5), "35_a": (35, -5),
    "56_a'": (56, 24), "56_a": (56, -24),
    "70_a'": (70, 10), "70_a": (70, -10),
    "84_a": (84, 4), "84_a'": (84, -4),
    "105_a'": (105, 35), "105_a": (105, -35),
    "105_b": (105, 25), "105_b'": (105, -25),
    "105_c": (105, 5), "105_c'": (105, -5),
    "120_a": (120, 40), "120_a'": (120, -40),
    "168_a": (168, 40), "168_a'": (168, -40),
    "189_a": (189, 21), "189_a'": (189, -21),
    "189_b'": (189, 51), "189_b": (189, -51),
    "189_c'": (189, 39), "189_c": (189, -39),
    "210_a": (210, 50), "210_a'": (210, -50),
    "210_b": (210, 10), "210_b'": (210, -10),
    "216_a'": (216, 24), "216_a": (216, -24),
    "280_a'": (280, 40), "280_a": (280, -40),
    "280_b": (280, 40), "280_b'": (280, -40),
    "315_a'": (315, 45), "315_a": (315, -45),
    "336_a'": (336, 16), "336_a": (336, -16),
    "378_a'": (378, 30), "378_a": (378, -30),
    "405_a": (405, 45), "405_a'": (405, -45),
    "420_a": (420, 20), "420_a'": (420, -20),
    "512_a'": (512, 0), "512_a": (512, 0),
}

# full E6 branching of 280_a' (multiplicity one each)
BRANCH_280A_PRIME = ("15_p", "30_p", "64_p", "81_p", "90_s")

def assign(data, e6_mult, pick_512) -> list[str]:
    """Labels for the rows of an E7 table.

    ``data`` is an e7build.E7Data; ``e6_mult(i, lab)`` gives the multiplicity
    of the E6 irreducible named ``lab`` in the restriction of row ``i``;
    ``pick_512(lab, candidates)`` receives the assignment of all other
    labels and the two candidate row indices and returns the row of 512_a.
    """
    rows = data.rows
    refl_idx = data.refl_classes[0]

    def dim_v(i: int) -> tuple[int, int]:
        d = rows[i][0].as_rational()
        v = rows[i][refl_idx].as_rational()
        assert d.denominator == 1 and v.denominator == 1
        return int(d), int(v)

    def twist(i: int) -> int:
        eps = [e for _, e in data.wclasses]
        target = tuple(QuadRat.of(e) * x for e, x in zip(eps, rows[i]))
        return rows.index(target)

    by_pair: dict[tuple[int, int], list[int]] = {}
    for i in range(len(rows)):
        by_pair.setdefault(dim_v(i), []).append(i)

    lab: dict[str, int] = {}
    for name, pair in DIM_REFL.items():
        if name in ("280_a'", "280_b", "280_a", "280_b'", "512_a'", "512_a"):
            continue
        cands = by_pair[pair]
        assert len(cands) == 1, (name, cands)
        lab[name] = cands[0]

    # 280_a' contains 15_p in its E6 restriction; 280_b does not
    plus = by_pair[(280, 40)]
    assert len(plus) == 2
    with15 = [i for i in plus if e6_mult(i, "15_p") == 1]
    assert len(with15) == 1, [e6_mult(i, "15_p") for i in plus]
    i280ap = with15[0]
    assert all(e6_mult(i280ap, s) == 1 for s in BRANCH_280A_PRIME)
    lab["280_a'"] = i280ap
    lab["280_b"] = next(i for i in plus if i != i280ap)
    lab["280_a"] = twist(i280ap)
    lab["280_b'"] = twist(lab["280_b"])
    assert {lab["280_a"], lab["280_b'"]} == set(by_pair[(280, -40)])

    i512 = by_pair[(512, 0)]
    assert len(i512) == 2
    lab["512_a"] = pick_512(dict(lab), list(i512))
    assert lab["512_a"] in i512
    lab["512_a'"] = next(i for i in i512 if i != lab["512_a"])
    assert twist(lab["512_a"]) == lab["512_a'"]

    assert len(lab) == len(rows) == 60
    assert len(set(lab.values())) == 60
    for name, i in lab.items():
        assert dim_v(i) == DIM_REFL[name], name
        if name.endswith("'") and name[:-1] in lab:
            assert twist(lab[name[:-1]]) == i, name

    out = [""] * len(rows)
    for name, i in lab.items():
        out[i] = name
    return out
