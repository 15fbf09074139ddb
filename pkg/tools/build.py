"""Assembly of exact CharacterTable objects from concrete Coxeter groups.

``raw_group`` runs the full pipeline (roots, enumeration, classes, character
values, power maps, reflection data) and returns an untagged bundle; a
labeling pass then names the irreducibles and ``finish_table`` builds the
validated table in the chosen order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from rcao.chartab import (
    CharacterTable,
    ClassFunction,
    ConjClass,
    Irreducible,
    decompose_integral,
    sym_power_reflection,
    tensor,
)
from rcao.exact import QR_ONE, QuadRat

from . import dixon
from .coxeter import (
    Group,
    RootSystem,
    class_labels,
    degrees,
    enumerate_group,
    reflection_class_ids,
    reflection_trace,
    root_system,
)

F = Fraction


@dataclass
class RawGroup:
    name: str
    rs: RootSystem
    G: Group
    rows: list                 # irreducible value rows (QuadRat tuples)
    class_labels: list[str]
    power_maps: list
    refl_char: list            # reflection character values per class
    refl_classes: list[int]
    degs: tuple[int, ...]
    provisional: CharacterTable

    def find_row(self, values) -> int:
        values = tuple(values)
        for i, r in enumerate(self.rows):
            if r == values:
                return i
        raise LookupError("no irreducible with those values")

    def rows_by(self, dim: int, refl_value: QuadRat | None = None):
        out = []
        s = self.refl_classes[0]
        for i, r in enumerate(self.rows):
            if r[0] != QuadRat.of(dim):
                continue
            if refl_value is not None and r[s] != refl_value:
                continue
            out.append(i)
        return out

    def galois(self, i: int) -> int:
        return self.find_row(tuple(v.conjugate() for v in self.rows[i]))

    def trivial_index(self) -> int:
        return self.find_row((QR_ONE,) * len(self.rows[0]))

    def sign_index(self) -> int:
        for i, r in enumerate(self.rows):
            if r[0] == QR_ONE and all(
                r[c] == QuadRat.of(-1) for c in self.refl_classes
            ):
                if all(v * v == QR_ONE for v in r):
                    return i
        raise LookupError("no sign character")

    def reflection_index(self) -> int | None:
        try:
            return self.find_row(self.refl_char)
        except LookupError:
            return None


def raw_group(name: str, typ: str, n: int,
              class_matrix=None, group: Group | None = None) -> RawGroup:
    rs = root_system(typ, n)
    G = group if group is not None else enumerate_group(name, rs.simple_perms)
    rows = dixon.character_values(G, class_matrix=class_matrix)
    clabels = class_labels(G)
    pmaps = G.power_maps()
    refl_char = [reflection_trace(rs, G, ci) for ci in range(G.n_classes)]
    refl_classes = reflection_class_ids(rs, G)
    raw = RawGroup(
        name, rs, G, list(rows), clabels, pmaps, refl_char, refl_classes,
        degrees(typ, n), None,
    )
    raw.provisional = finish_table(
        raw, [f"x{i}" for i in range(len(rows))], list(range(len(rows))),
    )
    return raw


def finish_table(raw: RawGroup, labels: list[str], order: list[int],
                 name: str | None = None) -> CharacterTable:
    classes = [
        ConjClass(raw.class_labels[c], len(raw.G.class_members[c]),
                  tuple(raw.power_maps[c]))
        for c in range(raw.G.n_classes)
    ]
    irreducibles = [
        Irreducible(labels[i], tuple(raw.rows[i])) for i in order
    ]
    pos = {i: k for k, i in enumerate(order)}
    refl = raw.reflection_index()
    return CharacterTable(
        name=name or raw.name,
        order=raw.G.order,
        rank=raw.rs.n,
        degrees=raw.degs,
        classes=classes,
        irreducibles=irreducibles,
        reflection_classes=raw.refl_classes,
        trivial_rep=pos[raw.trivial_index()],
        sign_rep=pos[raw.sign_index()],
        reflection_rep=pos[refl] if refl is not None else None,
        reflection_character=raw.refl_char,
    )


# ---------------------------------------------------------------------------
# class-function helpers on a provisional table
# ---------------------------------------------------------------------------

def ext_power_reflection(T: CharacterTable, k: int) -> ClassFunction:
    """Character of Lambda^k of the reflection representation."""
    if k < 0:
        raise ValueError
    refl = T.reflection_character().values
    n = T.n_classes
    e = [[QR_ONE] * n]
    p = [[]]
    for i in range(1, k + 1):
        p.append([refl[T.power_class(c, i)] for c in range(n)])
        row = []
        iq = QuadRat.of(F(1, i))
        for c in range(n):
            s = QuadRat()
            for j in range(1, i + 1):
                sign = 1 if (j - 1) % 2 == 0 else -1
                s = s + sign * p[j][c] * e[i - j][c]
            row.append(s * iq)
        e.append(row)
    return ClassFunction(T, e[k])


def koszul_quotient(T: CharacterTable, terms):
    """Quotient of sum coeff*chi_i*t^h by sum_k (-1)^k Lambda^k(h*) t^k.

    ``terms`` is a list of (irr index, coeff, h) with rational h on a common
    integer grid.  Returns the quotient as a dict degree -> {irr: mult} with
    non-negative integer multiplicities, or None if the division fails.
    This is exactly the peeling that recovers the graded W-character of a
    simple module from its Verma-decomposition vector.
    """
    if not terms:
        return {}
    n = T.n_classes
    rank = T.rank
    lam = [ext_power_reflection(T, k) for k in range(rank + 1)]
    hs = sorted({h for _, _, h in terms})
    base = hs[0]
    layers: dict[int, list[QuadRat]] = {}
    for i, coeff, h in terms:
        d = h - base
        if d.denominator != 1:
            return None
        d = int(d)
        row = layers.setdefault(d, [QuadRat()] * n)
        vals = T.irreducibles[i].values
        for c in range(n):
            row[c] = row[c] + coeff * vals[c]
    top = max(layers)
    quotient: dict[int, dict[int, int]] = {}
    rem: dict[int, list[QuadRat]] = {
        d: layers.get(d, [QuadRat()] * n)[:] for d in range(top + 1)
    }
    for d in range(top + 1):
        cur = rem.get(d)
        if cur is None or all(not v for v in cur):
            continue
        f = ClassFunction(T, cur)
        try:
            mults = decompose_integral(f)
        except Exception:
            return None
        if any(m < 0 for m in mults.values()):
            return None
        quotient[d] = mults
        # subtract cur * (Lambda(t) - 1) * t^d from the remainder
        for k in range(1, rank + 1):
            sign = QuadRat.of(-1 if k % 2 else 1)
            tgt = rem.setdefault(d + k, [QuadRat()] * n)
            for c in range(n):
                tgt[c] = tgt[c] - sign * cur[c] * lam[k].values[c]
    for d, row in rem.items():
        if d > top and any(v for v in row):
            return None
    return quotient
