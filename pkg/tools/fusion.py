"""Fusion (class) maps for reflection subgroups.

A subgroup is described by the ambient coordinates of a set of simple roots
for it.  The subgroup gets its own abstract realization (so its character
table is built independently), and the class map sends each subgroup class
representative, expressed as a word in the subgroup's simple reflections,
to the ambient class of the corresponding product of ambient root
reflections.
"""

from __future__ import annotations

from .build import RawGroup
from .coxeter import _reflect, mul


def _root_reflection_perm(rs, alpha):
    return tuple(rs.root_index[_reflect(b, alpha, rs.gram)] for b in rs.roots)


def _embedding_gens(sub: RawGroup, amb: RawGroup, sub_roots_in_amb):
    """Ambient permutations realizing the subgroup's simple reflections.

    Matching Coxeter matrices are asserted via pairwise products' orders.
    """
    from .coxeter import perm_order

    gens = [_root_reflection_perm(amb.rs, tuple(a)) for a in sub_roots_in_amb]
    n = len(gens)
    assert n == len(sub.rs.simples)
    for i in range(n):
        for j in range(i, n):
            sub_ord = perm_order(mul(sub.rs.simple_perms[i], sub.rs.simple_perms[j]))
            amb_ord = perm_order(mul(gens[i], gens[j]))
            assert sub_ord == amb_ord, (i, j, sub_ord, amb_ord)
    return gens


def _class_reps_in_amb(sub: RawGroup, amb: RawGroup, gens):
    ident = tuple(range(len(amb.rs.roots)))
    reps = []
    for ci in range(sub.G.n_classes):
        word = sub.G.words[sub.G.class_reps[ci]]
        g = ident
        for k in word:
            g = mul(g, gens[k])
        reps.append(g)
    return reps


def class_map(sub: RawGroup, amb: RawGroup, sub_roots_in_amb) -> tuple[int, ...]:
    """sub class index -> ambient class index.

    ``sub_roots_in_amb``: for each simple reflection of the subgroup's
    realization, the ambient coordinates of a root with the same reflection,
    chosen so that the generator correspondence is an isomorphism onto the
    ambient subgroup.
    """
    gens = _embedding_gens(sub, amb, sub_roots_in_amb)
    reps = _class_reps_in_amb(sub, amb, gens)
    return tuple(amb.G.class_of[amb.G.index[g]] for g in reps)


def product_class_map(subs, amb: RawGroup, roots_per_factor) -> tuple[int, ...]:
    """Class map for a direct product of reflection subgroups.

    Classes of the product are ordered as itertools.product of the factors'
    class orders, matching the product character table's class order.  The
    factor embeddings must commute elementwise (asserted).
    """
    import itertools

    gens_per = [
        _embedding_gens(s, amb, roots) for s, roots in zip(subs, roots_per_factor)
    ]
    for a in range(len(subs)):
        for b in range(a + 1, len(subs)):
            for x in gens_per[a]:
                for y in gens_per[b]:
                    assert mul(x, y) == mul(y, x), (a, b)
    reps_per = [
        _class_reps_in_amb(s, amb, gens) for s, gens in zip(subs, gens_per)
    ]
    ident = tuple(range(len(amb.rs.roots)))
    out = []
    for combo in itertools.product(*[range(s.G.n_classes) for s in subs]):
        g = ident
        for reps, ci in zip(reps_per, combo):
            g = mul(g, reps[ci])
        out.append(amb.G.class_of[amb.G.index[g]])
    return tuple(out)
