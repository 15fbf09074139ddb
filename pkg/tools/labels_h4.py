"""Assignment of Grove's bold labels 1..34 to the H4 irreducibles.

Anchors: 1 trivial, 2 sign, 3 reflection, 4 = 3', 5 the Galois conjugate of
3, 7 the exterior square of 3, plus the six labels whose (dim, reflection
trace) pair is unique.  The remaining ambiguities are resolved by requiring
that the recorded Verma-decomposition vector of each finite-dimensional
simple admits a Koszul quotient: sum_s a_s chi_s t^{h_s} must equal
ch L(w,t) * det(1 - t w|h*) with non-negative integral layers, which for a
finite-dimensional L is a terminating exact division.  Each pin asserts the
passing candidate is unique, and at the end every finite vector of every
block is re-checked under the final assignment.  (An exhaustive scan over
all 768 candidate assignments confirms this solution is globally unique.)
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from rcao.chartab import decompose_integral, sign_twist, sym_power_reflection
from rcao.exact import QuadRat

from . import fixdata_h4 as fd
from .build import RawGroup, ext_power_reflection, koszul_quotient

F = Fraction
Q = QuadRat.of


def assign(raw: RawGroup) -> list[str]:
    T = raw.provisional
    lab: dict[str, int] = {}

    def put(name: str, i: int):
        assert name not in lab and i not in lab.values(), (name, i)
        lab[name] = i

    def tw(i: int) -> int:
        return sign_twist(T, i)

    def only(seq):
        seq = list(seq)
        assert len(seq) == 1, seq
        return seq[0]

    def free(cands):
        return [i for i in cands if i not in lab.values()]

    def vec_for(key, member, trial=None):
        blk = fd.BLOCKS[key]
        mi = blk["members"].index(member)
        out = []
        for j, c in enumerate(blk["inverse"][mi]):
            if c:
                n = blk["members"][j]
                i = lab.get(n, (trial or {}).get(n))
                assert i is not None, (key, member, n)
                out.append((i, c, blk["h"][j]))
        return out

    def pin(key, member, groups, twists=()):
        """Unique candidate choice making the block's vector Koszul-exact.

        ``groups`` maps unknown labels to candidate rows; ``twists`` lists
        (primed, base) pairs filled in as sign twists of the trial choice.
        """
        names = list(groups)
        hits = []
        for combo in product(*(free(groups[n]) for n in names)):
            if len(set(combo)) != len(combo):
                continue
            trial = dict(zip(names, combo))
            for primed, base in twists:
                trial[primed] = tw(trial[base])
            if koszul_quotient(T, vec_for(key, member, trial)) is not None:
                hits.append(trial)
        for name, i in only(hits).items():
            put(name, i)

    put("1", raw.trivial_index())
    put("2", raw.sign_index())
    i3 = raw.reflection_index()
    put("3", i3)
    put("4", tw(i3))
    i5 = raw.galois(i3)
    assert i5 != i3
    put("5", i5)
    put("6", tw(i5))
    i7 = raw.find_row(ext_power_reflection(T, 2).values)
    put("7", i7)
    put("8", only(free(raw.rows_by(6, Q(0)))))

    put("15", only(raw.rows_by(10)))
    put("22", only(raw.rows_by(18)))
    put("33", only(raw.rows_by(40)))
    put("34", only(raw.rows_by(48)))
    put("31", only(raw.rows_by(36, Q(6))))
    put("32", only(raw.rows_by(36, Q(-6))))

    s4 = decompose_integral(sym_power_reflection(T, 4))
    i27 = only([i for i in s4 if T.dim(i) == 25])
    put("27", i27)
    put("28", tw(i27))

    g9 = raw.rows_by(9, Q(3))
    g16 = raw.rows_by(16)
    g24 = raw.rows_by(24)
    g30 = raw.rows_by(30)

    pin(("H4", 20, "principal"), "1", {"11": g9, "16": g16},
        twists=[("12", "11")])
    put("13", only(free(g9)))
    put("14", tw(lab["13"]))
    pin(("H4", 15, "principal"), "1", {"18": g16, "29": g30},
        twists=[("19", "18")])
    put("30", only(free(g30)))
    pin(("H4", 10, "principal"), "5", {"26": g24})
    pin(("H4", 15, "twisted"), "5", {"20": g16, "24": g24},
        twists=[("21", "20")])
    put("17", only(free(g16)))
    pin(("H4", 6, "principal"), "3", {"25": g24})
    put("23", only(free(g24)))
    pin(("H4", 5, "principal"), "11", {"9": raw.rows_by(8, Q(0))})
    put("10", only(free(raw.rows_by(8, Q(0)))))

    assert len(lab) == 34

    # every finite-dimensional vector of every block must pass
    for key, blk in fd.BLOCKS.items():
        for m in blk["stars"]:
            assert koszul_quotient(T, vec_for(key, m)) is not None, (key, m)

    # dimensions and reflection traces agree with the tabulated values
    s = raw.refl_classes[0]
    nrefl = sum(len(raw.G.class_members[c]) for c in raw.refl_classes)
    for name, i in lab.items():
        dim, reflsum = fd.DIM_REFL[name]
        assert raw.rows[i][0] == Q(dim), name
        assert raw.rows[i][s] * Q(nrefl) == Q(reflsum) * raw.rows[i][0] / Q(dim), name

    out = [""] * len(raw.rows)
    for name, i in lab.items():
        out[i] = name
    return out
