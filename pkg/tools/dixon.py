"""Exact character tables of concrete permutation groups.

Mod-p eigenvector method: the class-sum matrices M_i with entries a_ijk
(structure constants of the center of the group algebra) commute and have a
common eigenbasis whose eigenvectors are w_chi = (|C_j| chi(g_j)/chi(1))_j.
Working over F_p with p = 1 mod exponent(G) makes every eigenvalue live in
F_p; iterative eigenspace splitting recovers the eigenvectors, and the exact
values are lifted centered (with a fixed sqrt5 residue for the H-type
tables, using the Galois conjugate read off through class power maps).
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd, isqrt, lcm

from rcao.exact import QuadRat

from .coxeter import Group, inv, mul, perm_order, perm_pow

F = Fraction


# ---------------------------------------------------------------------------
# linear algebra mod p
# ---------------------------------------------------------------------------

def _solve_coords(B, C, p):
    """Solve B R = C for R, with B (n x d) of full column rank, C (n x e)."""
    n, d = len(B), len(B[0])
    e = len(C[0])
    rows = [B[i][:] + C[i][:] for i in range(n)]
    piv = []
    r = 0
    for c in range(d):
        pr = next((i for i in range(r, n) if rows[i][c] % p), None)
        if pr is None:
            raise ValueError("basis not of full column rank")
        rows[r], rows[pr] = rows[pr], rows[r]
        inv_ = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv_) % p for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        piv.append(r)
        r += 1
    return [[rows[piv[i]][d + j] for j in range(e)] for i in range(d)]


def _nullspace(A, p):
    """Basis of the nullspace of the d x d matrix A mod p."""
    d = len(A)
    rows = [row[:] for row in A]
    pivots = {}
    r = 0
    for c in range(d):
        pr = next((i for i in range(r, d) if rows[i][c] % p), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv_ = pow(rows[r][c], p - 2, p)
        rows[r] = [(x * inv_) % p for x in rows[r]]
        for i in range(d):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(x - f * y) % p for x, y in zip(rows[i], rows[r])]
        pivots[c] = r
        r += 1
    basis = []
    for c in range(d):
        if c in pivots:
            continue
        v = [0] * d
        v[c] = 1
        for pc, pr in pivots.items():
            v[pc] = (-rows[pr][c]) % p
        basis.append(v)
    return basis


def _charpoly(A, p):
    """Characteristic polynomial mod p via Hessenberg reduction."""
    d = len(A)
    h = [row[:] for row in A]
    for c in range(d - 2):
        pr = next((i for i in range(c + 1, d) if h[i][c] % p), None)
        if pr is None:
            continue
        if pr != c + 1:
            h[c + 1], h[pr] = h[pr], h[c + 1]
            for i in range(d):
                h[i][c + 1], h[i][pr] = h[i][pr], h[i][c + 1]
        inv_ = pow(h[c + 1][c], p - 2, p)
        for i in range(c + 2, d):
            if h[i][c] % p:
                f = (h[i][c] * inv_) % p
                h[i] = [(x - f * y) % p for x, y in zip(h[i], h[c + 1])]
                for r2 in range(d):
                    h[r2][c + 1] = (h[r2][c + 1] + f * h[r2][i]) % p
    # p_k(x) = charpoly of leading k x k block (monic, ascending coeffs)
    polys = [[1]]
    for k in range(1, d + 1):
        term = _poly_mul_linear(polys[k - 1], h[k - 1][k - 1], p)
        prod = 1
        for i in range(k - 1, 0, -1):
            prod = (prod * h[i][i - 1]) % p
            coef = (h[i - 1][k - 1] * prod) % p
            term = _poly_sub(term, _poly_scale(polys[i - 1], coef, p), p)
        polys.append(term)
    return polys[d]


def _poly_mul_linear(f, a, p):
    # f(x) * (x - a)
    out = [0] * (len(f) + 1)
    for i, c in enumerate(f):
        out[i + 1] = (out[i + 1] + c) % p
        out[i] = (out[i] - a * c) % p
    return out


def _poly_scale(f, a, p):
    return [(a * c) % p for c in f]


def _poly_sub(f, g, p):
    n = max(len(f), len(g))
    f = f + [0] * (n - len(f))
    g = g + [0] * (n - len(g))
    return [(a - b) % p for a, b in zip(f, g)]


def _poly_trim(f, p):
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def _poly_divmod(f, g, p):
    f = _poly_trim(f, p)
    g = _poly_trim(g, p)
    if not g:
        raise ZeroDivisionError
    q = [0] * max(0, len(f) - len(g) + 1)
    r = f[:]
    ginv = pow(g[-1], p - 2, p)
    while len(r) >= len(g) and any(r):
        r = _poly_trim(r, p)
        if len(r) < len(g):
            break
        c = (r[-1] * ginv) % p
        s = len(r) - len(g)
        q[s] = c
        for i, gc in enumerate(g):
            r[s + i] = (r[s + i] - c * gc) % p
        r = _poly_trim(r, p)
    return q, r


def _poly_gcd(f, g, p):
    f, g = _poly_trim(f, p), _poly_trim(g, p)
    while g:
        _, r = _poly_divmod(f, g, p)
        f, g = g, _poly_trim(r, p)
    if f:
        c = pow(f[-1], p - 2, p)
        f = [(x * c) % p for x in f]
    return f


def _poly_mulmod(f, g, m, p):
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    _, r = _poly_divmod(out, m, p)
    return _poly_trim(r, p)


def _poly_powmod(f, e, m, p):
    result = [1]
    base = f
    while e:
        if e & 1:
            result = _poly_mulmod(result, base, m, p)
        base = _poly_mulmod(base, base, m, p)
        e >>= 1
    return result


def _roots(f, p, rng):
    """Roots in F_p of f (with multiplicity stripped), via x^p - x and CZ."""
    f = _poly_trim(f, p)
    # square-free-ish reduction to the product of distinct linear factors
    xp = _poly_powmod([0, 1], p, f, p)
    lin = _poly_gcd(_poly_sub(xp, [0, 1], p), f, p)
    out = []
    stack = [lin]
    while stack:
        g = _poly_trim(stack.pop(), p)
        if len(g) <= 1:
            continue
        if len(g) == 2:
            out.append((-g[0] * pow(g[1], p - 2, p)) % p)
            continue
        while True:
            a = rng.randrange(p)
            h = _poly_powmod([a, 1], (p - 1) // 2, g, p)
            h = _poly_sub(h, [1], p)
            d = _poly_gcd(h, g, p)
            if 0 < len(d) - 1 < len(g) - 1:
                stack.append(d)
                stack.append(_poly_divmod(g, d, p)[0])
                break
    return sorted(out)


# ---------------------------------------------------------------------------
# the eigenvector method
# ---------------------------------------------------------------------------

def choose_prime(G: Group) -> int:
    e = lcm(*G.class_orders)
    p = 2 * G.order + 1
    p += (e - (p - 1) % e) % e
    while True:
        if _is_prime(p) and G.order % p:
            return p
        p += e


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _class_matrix(G: Group, i: int) -> list[list[int]]:
    n = G.n_classes
    M = [[0] * n for _ in range(n)]
    zs = [G.elements[G.class_reps[k]] for k in range(n)]
    for xi in G.class_members[i]:
        xinv = inv(G.elements[xi])
        for k, z in enumerate(zs):
            j = G.class_of[G.index[mul(xinv, z)]]
            M[j][k] += 1
    return M


def eigenvectors(G: Group, p: int, class_matrix=None,
                 seed: int = 20260823) -> list[list[int]]:
    """Common eigenvectors (omega_j residues mod p), normalized at identity."""
    if class_matrix is None:
        class_matrix = lambda i: _class_matrix(G, i)
    n = G.n_classes
    rng = random.Random(seed)
    ident = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    spaces = [ident]  # each: n rows x d columns
    order = sorted(range(1, n), key=lambda i: len(G.class_members[i]))
    for i in order:
        if all(len(B[0]) == 1 for B in spaces):
            break
        M = [[v % p for v in row] for row in class_matrix(i)]
        spaces = _split_all(spaces, M, p, rng)
    out = []
    for B in spaces:
        if len(B[0]) != 1:
            raise RuntimeError("eigenspaces not fully split")
        col = [B[r][0] % p for r in range(n)]
        c0 = pow(col[0], p - 2, p)
        out.append([(x * c0) % p for x in col])
    return out


def _split_all(spaces, M, p, rng):
    """Refine every subspace into eigenspaces of the class matrix M."""
    n = len(spaces[0])
    out = []
    for B in spaces:
        d = len(B[0])
        if d == 1:
            out.append(B)
            continue
        C = [[sum(M[r][k] * B[k][c] for k in range(n)) % p
              for c in range(d)] for r in range(n)]
        R = _solve_coords(B, C, p)
        lams = _roots(_charpoly(R, p), p, rng)
        if len(lams) <= 1:
            out.append(B)
            continue
        for lam in lams:
            A = [[(R[r][c] - (lam if r == c else 0)) % p
                  for c in range(d)] for r in range(d)]
            null = _nullspace(A, p)
            out.append([
                [sum(B[r][c] * v[c] for c in range(d)) % p for v in null]
                for r in range(n)
            ])
    return out


def character_values(G: Group, p: int | None = None, class_matrix=None):
    """Exact character table rows as QuadRat tuples, sorted by dimension."""
    if p is None:
        p = choose_prime(G)
    vecs = eigenvectors(G, p, class_matrix=class_matrix)
    n = G.n_classes
    sizes = [len(m) for m in G.class_members]
    inv_class = [
        G.class_of[G.index[inv(G.elements[G.class_reps[j]])]] for j in range(n)
    ]
    size_inv = [pow(s, p - 2, p) for s in sizes]
    # Galois partner class for sqrt5: value conjugation via g -> g^t
    conj_class = []
    for j in range(n):
        m = G.class_orders[j]
        if m % 5:
            conj_class.append(j)
        else:
            m5, rest = 5, m // 5
            while rest % 5 == 0:
                m5 *= 5
                rest //= 5
            t = _crt(2, m5, 1, rest)
            x = G.elements[G.class_reps[j]]
            conj_class.append(G.class_of[G.index[perm_pow(x, t % m)]])
    if any(m % 5 == 0 for m in G.class_orders):
        inv_s5 = pow(_sqrt_mod(5, p), p - 2, p)
    else:
        inv_s5 = 1  # never multiplies a nonzero difference
    rows = []
    for v in vecs:
        s = sum(v[j] * v[inv_class[j]] % p * size_inv[j] for j in range(n)) % p
        deg_sq = (G.order * pow(s, p - 2, p)) % p
        deg_sq = _lift(deg_sq, p)
        deg = isqrt(deg_sq)
        if deg * deg != deg_sq:
            raise RuntimeError("character degree is not a perfect square root")
        vals = []
        for j in range(n):
            r = deg * v[j] % p * size_inv[j] % p
            jj = conj_class[j]
            rbar = deg * v[jj] % p * size_inv[jj] % p
            two_a = _lift((r + rbar) % p, p)
            two_b = _lift((r - rbar) * inv_s5 % p, p)
            vals.append(QuadRat(F(two_a, 2), F(two_b, 2)))
        rows.append(tuple(vals))
    rows.sort(key=lambda row: tuple((x.a, x.b) for x in row))
    rows.sort(key=lambda row: row[0].a)
    return rows


def _lift(r: int, p: int) -> int:
    return r - p if r > p // 2 else r


def _crt(a1, m1, a2, m2):
    if m2 == 1:
        return a1 % m1
    g = gcd(m1, m2)
    assert g == 1
    x = (a2 - a1) * pow(m1, -1, m2) % m2
    return (a1 + m1 * x) % (m1 * m2)


def _sqrt_mod(a, p):
    a %= p
    if pow(a, (p - 1) // 2, p) != 1:
        raise ValueError("not a quadratic residue")
    # Tonelli-Shanks
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, tt = 0, t
        while tt != 1:
            tt = tt * tt % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r
