"""Concrete finite Coxeter groups as permutation groups on their root sets.

Builds root systems from simple-root data (crystallographic types in ambient
coordinates, H types in the simple-root basis with an explicit Gram matrix),
enumerates the group by breadth-first search with generator words, computes
conjugacy classes, prime power maps, reflection classes, and exact traces of
class representatives on the reflection representation.

Everything is exact: coordinates are QuadRat (elements of Q(sqrt5)).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from rcao.exact import QuadRat

F = Fraction
Q = QuadRat.of

PHI_HALF = QuadRat(F(1, 4), F(1, 4))  # cos(pi/5) = (1+sqrt5)/4


# ---------------------------------------------------------------------------
# simple roots
# ---------------------------------------------------------------------------

def _vec(*xs):
    return tuple(Q(x) if not isinstance(x, QuadRat) else x for x in xs)


def simple_roots(typ: str, n: int):
    """(list of simple-root vectors, gram matrix or None for Euclidean)."""
    if typ == "A":
        dim = n + 1
        roots = []
        for i in range(n):
            v = [F(0)] * dim
            v[i], v[i + 1] = F(1), F(-1)
            roots.append(_vec(*v))
        return roots, None
    if typ == "B":
        roots = []
        for i in range(n - 1):
            v = [F(0)] * n
            v[i], v[i + 1] = F(1), F(-1)
            roots.append(_vec(*v))
        v = [F(0)] * n
        v[n - 1] = F(1)
        roots.append(_vec(*v))
        return roots, None
    if typ == "D":
        roots = []
        for i in range(n - 1):
            v = [F(0)] * n
            v[i], v[i + 1] = F(1), F(-1)
            roots.append(_vec(*v))
        v = [F(0)] * n
        v[n - 2], v[n - 1] = F(1), F(1)
        roots.append(_vec(*v))
        return roots, None
    if typ == "F" and n == 4:
        return [
            _vec(F(0), F(1), F(-1), F(0)),
            _vec(F(0), F(0), F(1), F(-1)),
            _vec(F(0), F(0), F(0), F(1)),
            _vec(F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2)),
        ], None
    if typ == "E" and n in (6, 7, 8):
        a1 = [F(1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2), F(-1, 2),
              F(-1, 2), F(1, 2)]
        a2 = [F(1), F(1)] + [F(0)] * 6
        rest = []
        for i in range(1, 7):
            v = [F(0)] * 8
            v[i - 1], v[i] = F(-1), F(1)
            rest.append(v)
        allroots = [a1, a2] + rest
        return [_vec(*v) for v in allroots[:n]], None
    if typ == "H" and n in (2, 3, 4):
        # geometric representation: basis alpha_i, Gram (a_i,a_j)=-cos(pi/m_ij)
        gram = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
        for i in range(n - 1):
            c = PHI_HALF if i == 0 else Q(F(1, 2))
            gram[i][i + 1] = -c
            gram[i + 1][i] = -c
        basis = []
        for i in range(n):
            v = [Q(0)] * n
            v[i] = Q(1)
            basis.append(tuple(v))
        return basis, gram
    raise ValueError(f"unsupported type {typ}{n}")


def _inner(u, v, gram):
    if gram is None:
        s = QuadRat()
        for a, b in zip(u, v):
            s = s + a * b
        return s
    s = QuadRat()
    for i, a in enumerate(u):
        if not a:
            continue
        for j, b in enumerate(v):
            if b:
                s = s + a * gram[i][j] * b
    return s


def _reflect(beta, alpha, gram):
    c = _inner(beta, alpha, gram) / _inner(alpha, alpha, gram)
    c = c + c
    return tuple(b - c * a for b, a in zip(beta, alpha))


# ---------------------------------------------------------------------------
# root systems and groups
# ---------------------------------------------------------------------------

@dataclass
class RootSystem:
    typ: str
    n: int
    simples: list
    gram: object
    roots: list            # all roots, fixed order
    root_index: dict
    simple_perms: list     # permutation of roots for each simple reflection
    simple_mats: list      # n x n matrices in the simple-root basis


def root_system(typ: str, n: int) -> RootSystem:
    simples, gram = simple_roots(typ, n)
    roots = []
    seen = set()
    frontier = []
    for a in simples:
        for v in (a, tuple(-x for x in a)):
            if v not in seen:
                seen.add(v)
                roots.append(v)
                frontier.append(v)
    while frontier:
        nxt = []
        for beta in frontier:
            for alpha in simples:
                r = _reflect(beta, alpha, gram)
                if r not in seen:
                    seen.add(r)
                    roots.append(r)
                    nxt.append(r)
        frontier = nxt
    roots.sort(key=lambda v: tuple((x.a, x.b) for x in v))
    index = {v: i for i, v in enumerate(roots)}
    perms = []
    for alpha in simples:
        perms.append(tuple(index[_reflect(b, alpha, gram)] for b in roots))
    # matrix of s_i in the simple-root basis: s_i(a_j) = a_j - c_ij a_i
    mats = []
    for i, ai in enumerate(simples):
        m = [[Q(1) if r == c else Q(0) for c in range(n)] for r in range(n)]
        for j, aj in enumerate(simples):
            c = _inner(aj, ai, gram) / _inner(ai, ai, gram)
            m[i][j] = m[i][j] - (c + c)
        mats.append([row[:] for row in m])
    return RootSystem(typ, n, simples, gram, roots, index, perms, mats)


def mul(x, y):
    """Permutation composition, y applied first."""
    return tuple(x[i] for i in y)


def inv(x):
    out = [0] * len(x)
    for i, j in enumerate(x):
        out[j] = i
    return tuple(out)


def perm_order(x):
    n = len(x)
    seen = [False] * n
    from math import lcm
    m = 1
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = x[j]
            length += 1
        m = lcm(m, length)
    return m


def perm_pow(x, k):
    if k == 0:
        return tuple(range(len(x)))
    r = None
    b = x
    while k:
        if k & 1:
            r = b if r is None else mul(b, r)
        b = mul(b, b)
        k >>= 1
    return r


PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59,
          61, 67, 71, 73, 79, 83, 89, 97)


@dataclass
class Group:
    name: str
    gens: list
    elements: list         # perm tuples, identity first, BFS order
    index: dict            # perm -> element id
    words: list            # generator word per element
    class_of: list         # element id -> class id
    class_members: list    # class id -> list of element ids
    class_reps: list       # class id -> element id (BFS-minimal)
    class_orders: list     # element order per class

    @property
    def order(self):
        return len(self.elements)

    @property
    def n_classes(self):
        return len(self.class_reps)

    def elem(self, i):
        return self.elements[i]

    def class_sizes(self):
        return [len(m) for m in self.class_members]

    def power_map(self, ci, k):
        """Class of g^k for a class representative g."""
        x = self.elements[self.class_reps[ci]]
        m = perm_order(x)
        return self.class_of[self.index[perm_pow(x, k % m)]]

    def power_maps(self, primes=PRIMES):
        return [
            tuple((p, self.power_map(ci, p)) for p in primes)
            for ci in range(self.n_classes)
        ]


def enumerate_group(name: str, gens: list) -> Group:
    n = len(gens[0])
    ident = tuple(range(n))
    elements = [ident]
    words = [()]
    index = {ident: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for ei in frontier:
            e = elements[ei]
            w = words[ei]
            for gi, g in enumerate(gens):
                ne = mul(e, g)
                if ne not in index:
                    index[ne] = len(elements)
                    elements.append(ne)
                    words.append(w + (gi,))
                    nxt.append(index[ne])
        frontier = nxt
    class_of = [-1] * len(elements)
    class_members = []
    class_reps = []
    ginvs = [inv(g) for g in gens]
    for start in range(len(elements)):
        if class_of[start] != -1:
            continue
        cid = len(class_reps)
        class_reps.append(start)
        class_of[start] = cid
        members = [start]
        stack = [start]
        while stack:
            xi = stack.pop()
            x = elements[xi]
            for g, gi in zip(gens, ginvs):
                yi = index[mul(g, mul(x, gi))]
                if class_of[yi] == -1:
                    class_of[yi] = cid
                    members.append(yi)
                    stack.append(yi)
        class_members.append(members)
    class_orders = [perm_order(elements[r]) for r in class_reps]
    return Group(name, gens, elements, index, words, class_of,
                 class_members, class_reps, class_orders)


def class_labels(G: Group) -> list[str]:
    """GAP-style labels: element order plus a letter, deterministic."""
    by_order: dict[int, list[int]] = {}
    for ci in range(G.n_classes):
        by_order.setdefault(G.class_orders[ci], []).append(ci)
    labels = [""] * G.n_classes
    for order, cis in by_order.items():
        cis.sort(key=lambda ci: (len(G.class_members[ci]), G.class_reps[ci]))
        for k, ci in enumerate(cis):
            suffix = ""
            k0 = k
            while True:
                suffix = chr(ord("a") + k0 % 26) + suffix
                k0 = k0 // 26 - 1
                if k0 < 0:
                    break
            labels[ci] = f"{order}{suffix}"
    return labels


def reflection_class_ids(rs: RootSystem, G: Group) -> list[int]:
    out = set()
    for alpha in rs.roots:
        perm = tuple(
            rs.root_index[_reflect(b, alpha, rs.gram)] for b in rs.roots
        )
        out.add(G.class_of[G.index[perm]])
    return sorted(out)


def _mat_mul(a, b):
    n = len(a)
    return [
        [sum((a[i][k] * b[k][j] for k in range(n)), QuadRat())
         for j in range(n)]
        for i in range(n)
    ]


def word_matrix(rs: RootSystem, word) -> list:
    n = rs.n
    m = [[Q(1) if i == j else Q(0) for j in range(n)] for i in range(n)]
    for g in word:
        m = _mat_mul(m, rs.simple_mats[g])
    return m


def reflection_trace(rs: RootSystem, G: Group, ci: int) -> QuadRat:
    m = word_matrix(rs, G.words[G.class_reps[ci]])
    t = QuadRat()
    for i in range(rs.n):
        t = t + m[i][i]
    return t


DEGREES = {
    ("H", 3): (2, 6, 10),
    ("H", 4): (2, 12, 20, 30),
    ("F", 4): (2, 6, 8, 12),
    ("E", 6): (2, 5, 6, 8, 9, 12),
    ("E", 7): (2, 6, 8, 10, 12, 14, 18),
}


def degrees(typ: str, n: int) -> tuple[int, ...]:
    if typ == "A":
        return tuple(range(2, n + 2))
    if typ == "B":
        return tuple(2 * i for i in range(1, n + 1))
    if typ == "D":
        return tuple(2 * i for i in range(1, n)) + (n,)
    return DEGREES[(typ, n)]
