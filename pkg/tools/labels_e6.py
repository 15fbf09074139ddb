"""Assignment of the classical p/q/s labels to the E6 irreducibles.

Anchors: 1_p trivial, 1_p' sign, 6_p the reflection representation.  The
20-dimensional constituent of S^2 h* is 20_p and the 15-dimensional
Lambda^2 h* is 15_p; their sign twists get the primes.  The remaining
ambiguities are resolved by self-twist (the s-labels, whose reflection sum
vanishes) versus twist pairs (unprimed member has positive reflection sum).
Every assignment is checked against the dimension/reflection-sum table.
"""

from __future__ import annotations

from rcao.chartab import decompose_integral, sign_twist, sym_power_reflection

from .build import RawGroup, ext_power_reflection
from .fixdata_e6 import DIM_REFL


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

    def refl_sum(i: int) -> int:
        s = sum(
            len(raw.G.class_members[c]) * raw.rows[i][c].as_rational()
            for c in raw.refl_classes
        )
        assert s.denominator == 1
        return int(s)

    i1 = raw.trivial_index()
    i6 = raw.reflection_index()
    put("1_p", i1)
    put("1_p'", raw.sign_index())
    put("6_p", i6)
    put("6_p'", tw(i6))

    s2 = decompose_integral(sym_power_reflection(T, 2))
    i20 = only([i for i in s2 if T.dim(i) == 20])
    assert set(s2) == {i1, i20}
    put("20_p", i20)
    put("20_p'", tw(i20))
    i20s = only(free(raw.rows_by(20)))
    assert tw(i20s) == i20s
    put("20_s", i20s)

    i15 = only(decompose_integral(ext_power_reflection(T, 2)))
    put("15_p", i15)
    put("15_p'", tw(i15))
    i15q = only([i for i in free(raw.rows_by(15)) if refl_sum(i) > 0])
    put("15_q", i15q)
    put("15_q'", tw(i15q))

    put("10_s", only(raw.rows_by(10)))
    put("80_s", only(raw.rows_by(80)))
    put("90_s", only(raw.rows_by(90)))
    i60s = only([i for i in raw.rows_by(60) if tw(i) == i])
    put("60_s", i60s)

    for dim in (24, 30, 60, 64, 81):
        i = only([j for j in free(raw.rows_by(dim)) if refl_sum(j) > 0])
        put(f"{dim}_p", i)
        put(f"{dim}_p'", tw(i))

    assert len(lab) == len(raw.rows) == 25
    for name, i in lab.items():
        dim, rs = DIM_REFL[name]
        assert T.dim(i) == dim and refl_sum(i) == rs, (name, dim, rs)

    out = [""] * len(raw.rows)
    for name, i in lab.items():
        out[i] = name
    return out
