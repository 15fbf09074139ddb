"""Exact character data for W(E7) via its quotient by the center.

W(E7) contains -1 and splits as {+-1} x K with K = ker(det) (a simple group
of order 1451520).  K acts faithfully on the 63 antipodal pairs of roots, so
the quotient Q = W/{+-1} (isomorphic to K) is enumerated concretely as
permutations of the 63 pairs, stored as numpy uint8 rows for speed.  Classes
of Q come from conjugation orbits, its character table from the mod-p
eigenvector method with numpy-accelerated class-sum matrices.

Everything about W(E7) is then reconstructed from pairs (class of Q, det):
 * classes of W are (cbar, eps) with eps = det in {+1,-1}; the W-class of
   eps*g has the size of cbar and power maps (cbar^p, eps^p);
 * irreducibles are chi (x) 1 and chi (x) det for chi in Irr(Q), with values
   chi(cbar) and eps*chi(cbar);
 * the reflection representation restricts to the unique 7-dimensional
   irreducible of K, so its character is eps*chi7(cbar) where chi7 is the
   one degree-7 row of Q's table;
 * a subgroup element given as a permutation of the 126 roots together with
   its determinant sign is classified by looking up its pair permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import numpy as np

from rcao.exact import QuadRat

from . import dixon
from .coxeter import PRIMES, RootSystem, inv, perm_order, perm_pow, root_system

F = Fraction

Q_ORDER = 1_451_520  # |W(E7)| / 2


# ---------------------------------------------------------------------------
# the quotient group on 63 root pairs
# ---------------------------------------------------------------------------

@dataclass
class Quotient:
    rs: RootSystem
    line_of: list[int]          # root index -> pair index
    line_reps: list[int]        # pair index -> a root index
    perms: np.ndarray           # (order, 63) uint8, identity first
    index: dict                 # bytes -> element id
    class_of: np.ndarray        # element id -> class id
    class_reps: list[int]       # class id -> element id (BFS-minimal)
    class_sizes: list[int]
    class_orders: list[int]

    @property
    def order(self) -> int:
        return len(self.perms)

    @property
    def n_classes(self) -> int:
        return len(self.class_reps)

    def elem_tuple(self, i: int):
        return tuple(int(x) for x in self.perms[i])

    def class_of_perm(self, p: np.ndarray) -> int:
        return int(self.class_of[self.index[p.tobytes()]])

    def pair_perm_of_root_perm(self, perm126) -> np.ndarray:
        return np.array(
            [self.line_of[perm126[r]] for r in self.line_reps], dtype=np.uint8
        )


def _lines(rs: RootSystem) -> tuple[list[int], list[int]]:
    nroots = len(rs.roots)
    assert nroots == 126
    neg = [rs.root_index[tuple(-x for x in v)] for v in rs.roots]
    line_of = [-1] * nroots
    line_reps: list[int] = []
    for i in range(nroots):
        if line_of[i] == -1:
            line_of[i] = len(line_reps)
            line_of[neg[i]] = len(line_reps)
            line_reps.append(i)
    assert len(line_reps) == 63
    return line_of, line_reps


def build_quotient() -> Quotient:
    rs = root_system("E", 7)
    line_of, line_reps = _lines(rs)

    gens = [
        np.array([line_of[p[line_reps[l]]] for l in range(63)], dtype=np.uint8)
        for p in rs.simple_perms
    ]

    perms = np.empty((Q_ORDER, 63), dtype=np.uint8)
    perms[0] = np.arange(63, dtype=np.uint8)
    index: dict = {perms[0].tobytes(): 0}
    n = 1
    frontier = [0]
    while frontier:
        nxt: list[int] = []
        block = perms[frontier]
        for g in gens:
            prods = block[:, g]  # rows: x o g (g applied first)
            for row in prods:
                b = row.tobytes()
                if b not in index:
                    index[b] = n
                    perms[n] = row
                    nxt.append(n)
                    n += 1
        frontier = nxt
    assert n == Q_ORDER, n

    class_of = np.full(Q_ORDER, -1, dtype=np.int16)
    class_reps: list[int] = []
    class_sizes: list[int] = []
    for start in range(Q_ORDER):
        if class_of[start] != -1:
            continue
        cid = len(class_reps)
        class_reps.append(start)
        class_of[start] = cid
        members = [start]
        head = 0
        while head < len(members):
            chunk = members[head : head + 4096]
            head += len(chunk)
            block = perms[chunk]
            for g in gens:  # generators are involutions: g x g^-1 = g o x o g
                prods = g[block[:, g]]
                for row in prods:
                    j = index[row.tobytes()]
                    if class_of[j] == -1:
                        class_of[j] = cid
                        members.append(j)
        class_sizes.append(len(members))
    class_orders = [perm_order(tuple(int(x) for x in perms[r])) for r in class_reps]
    return Quotient(
        rs, line_of, line_reps, perms, index, class_of,
        class_reps, class_sizes, class_orders,
    )


# ---------------------------------------------------------------------------
# character table of the quotient (adapter around tools.dixon)
# ---------------------------------------------------------------------------

class _Elements:
    def __init__(self, perms):
        self._p = perms

    def __getitem__(self, i):
        return tuple(int(x) for x in self._p[i])


class _Index:
    def __init__(self, d):
        self._d = d

    def __getitem__(self, perm):
        return self._d[bytes(perm)]


class _GroupView:
    """Just enough of tools.coxeter.Group for dixon.character_values."""

    def __init__(self, q: Quotient):
        self._q = q
        self.elements = _Elements(q.perms)
        self.index = _Index(q.index)
        self.class_of = q.class_of
        self.class_reps = q.class_reps
        self.class_orders = q.class_orders
        self.class_members = [range(s) for s in q.class_sizes]  # sizes only
        self.order = q.order
        self.n_classes = q.n_classes


def _class_matrix(q: Quotient, i: int) -> list[list[int]]:
    n = q.n_classes
    ids = np.nonzero(q.class_of == i)[0]
    X = q.perms[ids]
    Xinv = np.empty_like(X)
    Xinv[np.arange(len(ids))[:, None], X] = np.arange(63, dtype=np.uint8)[None, :]
    M = [[0] * n for _ in range(n)]
    for k in range(n):
        z = q.perms[q.class_reps[k]]
        prods = Xinv[:, z]  # rows: x^-1 o z
        col = [0] * n
        for row in prods:
            col[q.class_of[q.index[row.tobytes()]]] += 1
        for j in range(n):
            M[j][k] = col[j]
    return M


def quotient_rows(q: Quotient):
    """Irreducible character value rows of the quotient, via tools.dixon."""
    view = _GroupView(q)
    return dixon.character_values(view, class_matrix=lambda i: _class_matrix(q, i))


# ---------------------------------------------------------------------------
# W(E7) = {+-1} x K reconstructed from the quotient
# ---------------------------------------------------------------------------

@dataclass
class E7Data:
    q: Quotient
    wclasses: list[tuple[int, int]]       # (quotient class, eps)
    class_labels: list[str]
    class_sizes: list[int]
    class_orders: list[int]
    power_maps: list[tuple[tuple[int, int], ...]]
    rows: list[tuple]                     # 60 QuadRat value rows
    refl_char: list[QuadRat]
    refl_classes: list[int]
    trivial: int
    sign: int
    reflection: int

    def wclass_index(self, cbar: int, eps: int) -> int:
        return self.wclasses.index((cbar, eps))


def build_e7(q: Quotient | None = None, qrows=None) -> E7Data:
    if q is None:
        q = build_quotient()
    if qrows is None:
        qrows = quotient_rows(q)
    nq = q.n_classes
    assert nq == 30 and len(qrows) == 30

    wclasses = [(c, e) for c in range(nq) for e in (1, -1)]
    wsizes = [q.class_sizes[c] for c, _ in wclasses]
    worders = [
        q.class_orders[c] if e == 1 else lcm(2, q.class_orders[c])
        for c, e in wclasses
    ]

    # power maps: (cbar, eps)^p = (cbar^p, eps^(p mod 2))
    pos = {ce: k for k, ce in enumerate(wclasses)}
    pmaps = []
    for c, e in wclasses:
        x = q.elem_tuple(q.class_reps[c])
        m = perm_order(x)
        entries = []
        for p in PRIMES:
            cp = q.class_of_perm(np.array(perm_pow(x, p % m), dtype=np.uint8))
            entries.append((p, pos[(cp, e if p % 2 else 1)]))
        pmaps.append(tuple(entries))

    # irreducible rows: chi (x) 1 and chi (x) det
    rows = []
    for chi in qrows:
        rows.append(tuple(chi[c] for c, _ in wclasses))
        rows.append(tuple(QuadRat.of(e) * chi[c] for c, e in wclasses))

    chi7 = [chi for chi in qrows if chi[0] == QuadRat.of(7)]
    assert len(chi7) == 1, [r[0] for r in qrows]
    chi7 = chi7[0]
    refl_char = [QuadRat.of(e) * chi7[c] for c, e in wclasses]

    # reflections map to a single quotient class, with det = -1
    s_class = q.class_of_perm(
        q.pair_perm_of_root_perm(q.rs.simple_perms[0])
    )
    refl_idx = pos[(s_class, -1)]
    assert refl_char[refl_idx] == QuadRat.of(5)  # trace of a reflection
    assert refl_char[pos[(0, -1)]] == QuadRat.of(-7)  # trace of -1

    one = QuadRat.of(1)
    trivial = next(
        i for i, r in enumerate(rows) if all(v == one for v in r)
    )
    sign = next(
        i for i, r in enumerate(rows)
        if all(r[k] == QuadRat.of(e) for k, (_, e) in enumerate(wclasses))
    )
    reflection = rows.index(tuple(refl_char))

    labels = _class_labels(wsizes, worders)
    return E7Data(
        q, wclasses, labels, wsizes, worders, pmaps, rows,
        refl_char, [refl_idx], trivial, sign, reflection,
    )


def _class_labels(sizes, orders) -> list[str]:
    """order-plus-letter labels, deterministic (same scheme as class_labels)."""
    by_order: dict[int, list[int]] = {}
    for k, o in enumerate(orders):
        by_order.setdefault(o, []).append(k)
    labels = [""] * len(orders)
    for o, ks in by_order.items():
        ks.sort(key=lambda k: (sizes[k], k))
        for i, k in enumerate(ks):
            suffix = ""
            i0 = i
            while True:
                suffix = chr(ord("a") + i0 % 26) + suffix
                i0 = i0 // 26 - 1
                if i0 < 0:
                    break
            labels[k] = f"{o}{suffix}"
    return labels


# ---------------------------------------------------------------------------
# classifying subgroup elements
# ---------------------------------------------------------------------------

def cached_e7(cache_dir: str | None = None) -> E7Data:
    """build_e7 with an optional on-disk cache of the quotient enumeration
    (directory from RCAO_GEN_CACHE unless given)."""
    import os
    import pickle

    cache = cache_dir if cache_dir is not None else os.environ.get("RCAO_GEN_CACHE")
    qf = cache and os.path.join(cache, "e7quot.npz")
    rf = cache and os.path.join(cache, "e7rows.pkl")
    if qf and os.path.exists(qf) and os.path.exists(rf):
        z = np.load(qf)
        rs = root_system("E", 7)
        line_of, line_reps = _lines(rs)
        perms = z["perms"]
        index = {perms[i].tobytes(): i for i in range(len(perms))}
        q = Quotient(
            rs, line_of, line_reps, perms, index, z["class_of"],
            [int(x) for x in z["class_reps"]],
            [int(x) for x in z["class_sizes"]],
            [int(x) for x in z["class_orders"]],
        )
        with open(rf, "rb") as f:
            qrows = pickle.load(f)
        return build_e7(q, qrows)
    q = build_quotient()
    qrows = quotient_rows(q)
    if qf:
        np.savez_compressed(
            qf, perms=q.perms, class_of=q.class_of,
            class_reps=np.array(q.class_reps),
            class_sizes=np.array(q.class_sizes),
            class_orders=np.array(q.class_orders),
        )
        with open(rf, "wb") as f:
            pickle.dump(qrows, f)
    return build_e7(q, qrows)


def e7_class_of(data: E7Data, perm126, det_sign: int) -> int:
    """W(E7) class index of an element given as a root permutation + det."""
    cbar = data.q.class_of_perm(data.q.pair_perm_of_root_perm(perm126))
    return data.wclasses.index((cbar, det_sign))


def e7_class_map(sub, data: E7Data, sub_roots_in_amb) -> tuple[int, ...]:
    """Class map of a reflection subgroup into W(E7).

    Mirrors tools.fusion.class_map without enumerating W(E7): each subgroup
    class representative is a word in the subgroup's simple reflections; the
    corresponding product of E7 root reflections is classified by its pair
    permutation together with det = (-1)^(word length).
    """
    from .coxeter import mul, perm_order
    from .fusion import _root_reflection_perm

    rs = data.q.rs
    gens = [_root_reflection_perm(rs, tuple(a)) for a in sub_roots_in_amb]
    n = len(gens)
    assert n == len(sub.rs.simples)
    for i in range(n):
        for j in range(i, n):
            sub_ord = perm_order(
                mul(sub.rs.simple_perms[i], sub.rs.simple_perms[j])
            )
            assert sub_ord == perm_order(mul(gens[i], gens[j])), (i, j)
    ident = tuple(range(len(rs.roots)))
    out = []
    for ci in range(sub.G.n_classes):
        word = sub.G.words[sub.G.class_reps[ci]]
        g = ident
        for k in word:
            g = mul(g, gens[k])
        out.append(e7_class_of(data, g, -1 if len(word) % 2 else 1))
    return tuple(out)
