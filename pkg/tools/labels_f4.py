"""Assignment of the dimension-ordered labels 1..25 to the F4 irreducibles.

Anchors: 1 trivial, 9 the reflection representation, and the tensor
identities S^2 h* = 1 + 23, h* (x) 9 = 1 + 14 + 23, h* (x) 23 contains 25,
S^3 h* = 9 + 16 + 18 with 18 = h* (x) 6 and 16 = h* (x) 8, where 6 and 8
are the two 2-dimensional representations whose h-weight vanishes at
c = 1/6 (their Vermas' simple quotients stay 2-dimensional there).  The
diagram automorphism swapping long and short roots interchanges 6 with 8;
the two choices give equivalent data, and the assignment fixes one of them
deterministically.  Labels not pinned by any recorded identity are assigned
inside their dimension class by sign-twist pairing and row order.
"""

from __future__ import annotations

from fractions import Fraction

from rcao.chartab import (
    ClassFunction,
    decompose_integral,
    sign_twist,
    sym_power_reflection,
    tensor,
)
from rcao.exact import QuadRat

from .build import RawGroup

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

    def tens(i, j):
        return decompose_integral(
            tensor(
                ClassFunction(T, T.irreducibles[i].values),
                ClassFunction(T, T.irreducibles[j].values),
            )
        )

    def h_sixth(i):
        rs = sum(
            len(raw.G.class_members[c]) * raw.rows[i][c].as_rational()
            for c in raw.refl_classes
        )
        return F(2) - F(1, 6) * rs / raw.rows[i][0].as_rational()

    i1 = raw.trivial_index()
    i9 = raw.reflection_index()
    put("1", i1)
    put("4", raw.sign_index())
    put("9", i9)
    put("10", tw(i9))

    # h* (x) 9 = 1 + 14 + 23;  S^2 h* = 1 + 23 (consistency)
    t9 = tens(i9, i9)
    s2 = decompose_integral(sym_power_reflection(T, 2))
    i23 = only([i for i in t9 if T.dim(i) == 9])
    assert set(s2) == {i1, i23}
    put("23", i23)
    put("20", tw(i23))
    put("14", only([i for i in t9 if T.dim(i) == 6]))
    put("15", only(free(raw.rows_by(6))))

    # 6 and 8: the 2-dimensionals with h_{1/6} = 0, in deterministic order
    flat = sorted(
        (i for i in raw.rows_by(2) if h_sixth(i) == 0),
        key=lambda i: tuple((v.a, v.b) for v in raw.rows[i]),
    )
    assert len(flat) == 2
    put("6", flat[0])
    put("8", flat[1])
    put("5", tw(flat[0]))
    put("7", tw(flat[1]))

    # S^3 h* = 9 + 16 + 18 with 18 = h* (x) 6 and 16 = h* (x) 8
    s3 = decompose_integral(sym_power_reflection(T, 3))
    i18 = only([i for i in tens(i9, lab["6"]) ])
    i16 = only([i for i in tens(i9, lab["8"]) ])
    assert set(s3) == {i9, i16, i18}
    put("18", i18)
    put("16", i16)
    put("19", tw(i18))
    put("17", tw(i16))

    # h* (x) 23 = 9 + 16 + 18 + 25
    t23 = tens(i9, i23)
    i25 = only([i for i in t23 if T.dim(i) == 16])
    assert set(t23) == {i9, i16, i18, i25}
    put("25", i25)
    put("24", only(raw.rows_by(12)))

    # remaining linear characters (sign-twist pair), row order
    mixed = sorted(free(raw.rows_by(1)))
    assert len(mixed) == 2 and tw(mixed[0]) == mixed[1]
    put("2", mixed[0])
    put("3", mixed[1])

    # remaining 4-dimensionals: a sign-twist pair and a self-paired one
    rest4 = sorted(free(raw.rows_by(4)))
    assert len(rest4) == 3
    selfp = only([i for i in rest4 if tw(i) == i])
    pair = sorted(i for i in rest4 if i != selfp)
    put("11", pair[0])
    put("13", pair[1])
    put("12", selfp)

    # remaining 9-dimensionals (sign-twist pair), row order
    rest9 = sorted(free(raw.rows_by(9)))
    assert len(rest9) == 2 and tw(rest9[0]) == rest9[1]
    put("21", rest9[0])
    put("22", rest9[1])

    assert len(lab) == 25
    for name, i in lab.items():
        assert int(raw.rows[i][0].a) == DIM_OF[name], name

    out = [""] * len(raw.rows)
    for name, i in lab.items():
        out[i] = name
    return out


DIM_OF = {
    **{str(i): 1 for i in range(1, 5)},
    **{str(i): 2 for i in range(5, 9)},
    **{str(i): 4 for i in range(9, 14)},
    **{str(i): 6 for i in (14, 15)},
    **{str(i): 8 for i in range(16, 20)},
    **{str(i): 9 for i in range(20, 24)},
    "24": 12,
    "25": 16,
}
