"""Constraint rules on partial decomposition matrices and a completion engine.

The rules are: the ricochet-robot reachability criterion (RR) under which a
decomposition number equals a Hom dimension; the sign-twist Hom-dimension
mirror (DIMHOM); bidiagonal filling of defect-1 blocks; the sign-twist
duality of minimal-support Verma vectors (SYMM); the sl2 graded-dimension
inequality; and the finiteness test dim L[2] < dim L[0].  ``complete`` is a
branch-and-prune search that fills the unknown cells of one block or of a
dual pair of blocks, subject to a chosen rule set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from . import ktheory
from .cato import (
    Block,
    DecompMatrix,
    PartialMatrix,
    invert_unitriangular,
    simple_character,
)
from .chartab import FusionMap, sign_twist
from .exact import GradedCharacter, NegativeLeading
from .ktheory import KVector


class LemmaError(Exception):
    pass


class HalfInteger(LemmaError):
    """(dim Hom) is not available for half-integer c."""


class NotMinimal(LemmaError):
    pass


class BudgetExceeded(LemmaError):
    pass


class _Indeterminate:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INDETERMINATE"

    def __bool__(self):
        raise TypeError("INDETERMINATE has no truth value")


INDETERMINATE = _Indeterminate()

RULE_KINDS = (
    "RR",
    "DIMHOM",
    "SYMM",
    "SL2",
    "E_COROLLARY",
    "COLUMN_DOT",
    "RES_ZERO",
    "IND_MEMBER",
    "RES_PEEL",
    # TENSOR is a seeding refinement, not an engine rule: cells are bounded
    # by (and at h-gap 1 equal to) the multiplicity of the column member in
    # (row member) (x) S^gap(h*).  Consumed by rcao.manifest.
    "TENSOR",
)


# ---------------------------------------------------------------------------
# (RR): the ricochet-robot game
# ---------------------------------------------------------------------------

def rr_blocked(P: PartialMatrix, ti: int, si: int):
    """Does every robot path from (ti,ti) to (si,si) pass through (ti,si)?

    The robot starts on the diagonal and may only move right and down.  A
    horizontal move slides until it lands on a nonzero decomposition number
    in its row; a vertical move slides until it lands on the diagonal 1 of
    its column.  Sliding over a square counts as passing through it.  If the
    landing point of some slide depends on an unknown cell, the answer is
    INDETERMINATE.
    """
    return rr_blocked_cells(P.cells, P.block.size, ti, si)


def rr_blocked_cells(cells, n: int, ti: int, si: int):
    """rr_blocked on a raw cell grid (rows of known ints / None)."""
    if not (0 <= ti < si < n):
        raise LemmaError("rr_blocked requires positions ti < si inside the block")
    indeterminate = False
    # state: current row r, current column c, whether (ti,si) was traversed.
    # All moves from a stop: one right-slide target (if any), one down-slide
    # target (the diagonal).  Depth-first over the binary choice tree.
    seen: set[tuple[int, int, bool]] = set()
    stack = [(ti, ti, False)]
    found_avoiding = False
    while stack:
        r, c, passed = stack.pop()
        if (r, c, passed) in seen:
            continue
        seen.add((r, c, passed))
        if (r, c) == (si, si):
            if not passed:
                found_avoiding = True
                break
            continue
        # right slide along row r from column c+1
        stop = None
        unknown_hit = False
        for c2 in range(c + 1, n):
            v = cells[r][c2]
            if v is None:
                unknown_hit = True
                break
            if v != 0:
                stop = c2
                break
        if unknown_hit:
            indeterminate = True
        elif stop is not None:
            slid_over = r == ti and c < si <= stop
            stack.append((r, stop, passed or slid_over))
        # down slide along column c to the diagonal (c,c), only if below
        if c > r:
            stack.append((c, c, passed))
    if found_avoiding:
        return False
    if indeterminate:
        return INDETERMINATE
    return True


def dimhom_pair(
    block: Block, tau: int, sigma: int, half_integer: bool = False
) -> tuple[int, int]:
    """Mirror of the cell (tau, sigma) under (dim Hom): the pair (sigma', tau').

    Arguments and result are irreducible indices of the block's table.  The
    mirrored cell lives in the block containing sigma' (the same block when
    it is self-dual).  Raises HalfInteger when c is a half-integer, where the
    rule is unavailable.
    """
    if half_integer or block.param.is_half_integer:
        raise HalfInteger("(dim Hom) requires c not a half-integer")
    T = block.table
    return sign_twist(T, sigma), sign_twist(T, tau)


# ---------------------------------------------------------------------------
# defect-1 blocks
# ---------------------------------------------------------------------------

def defect1_fill(B: Block, provenance: str = "verified") -> DecompMatrix:
    """Bidiagonal decomposition matrix of a defect-1 block.

    D has 1 on the diagonal and superdiagonal; each simple is the alternating
    sum of the Vermas to its right.  Support and finiteness flags are
    computed from the resulting characters.
    """
    n = B.size
    rows = tuple(
        tuple(1 if j in (i, i + 1) else 0 for j in range(n)) for i in range(n)
    )
    inv = invert_unitriangular(rows)
    finite = []
    support = []
    for i in range(n):
        g = simple_character(B, inv[i])
        s = g.den_power
        support.append(s)
        finite.append(s == 0)
    return DecompMatrix(
        block=B,
        rows=rows,
        finite=tuple(finite),
        support=tuple(support),
        provenance=provenance,
        defect_one=True,
    )


def alternating_inverse(n: int) -> list[list[int]]:
    """Inverse of the n x n bidiagonal unitriangular matrix: (-1)^(j-i) above."""
    return [[(-1) ** (j - i) if j >= i else 0 for j in range(n)] for i in range(n)]


# ---------------------------------------------------------------------------
# (Symm)
# ---------------------------------------------------------------------------

def symm_dual(B: Block, v: KVector) -> tuple[int, KVector]:
    """Dual of a minimal-support simple's Verma vector under sign twist.

    ``v`` is the Verma-decomposition vector of L(tau) for tau of minimal
    support in its block.  Returns (sigma', dual vector) where sigma is the
    h-maximal lowest weight occurring in v; the dual vector is +-(v with all
    labels sign-twisted), signed so that the coefficient of sigma' is +1.
    """
    if v.is_zero:
        raise NotMinimal("empty Verma vector")
    T = B.table
    hs = {m: h for m, h in zip(B.members, B.h)}
    try:
        sigma = max((i for i, _ in v.coeffs), key=lambda i: hs[i])
    except KeyError:
        raise NotMinimal("vector not supported on the block") from None
    top = v.coeff(sigma)
    if top not in (1, -1):
        raise NotMinimal("h-maximal coefficient is not +-1")
    twisted = {sign_twist(T, i): c * top for i, c in v.coeffs}
    return sign_twist(T, sigma), KVector.make(T, twisted)


# ---------------------------------------------------------------------------
# graded-dimension tests
# ---------------------------------------------------------------------------

def _degree_dims(g: GradedCharacter, upto: Fraction) -> dict[Fraction, int]:
    """Series dimensions of g by degree, from the lowest weight up to ``upto``."""
    if g.numerator.is_zero:
        return {}
    h = g.numerator.shift
    length = int(upto - h) + 1 if upto >= h else 0
    return {h + k: d for k, d in enumerate(g.series_prefix(length))}


def sl2_check(g: GradedCharacter) -> tuple[bool, list[Fraction]]:
    """Check dim L[-k] <= dim L[k] for every computable k > 0.

    Returns (all hold, list of failing k).  Degrees live on the grid
    h + Z; the inequality is vacuous unless the grid is symmetric about 0.
    """
    if g.numerator.is_zero:
        return True, []
    h = g.numerator.shift
    if h >= 0 or (2 * h).denominator != 1:
        return True, []
    fails = []
    dims = _degree_dims(g, -h)
    for deg, d in dims.items():
        if deg < 0:
            if d > dims.get(-deg, 0):
                fails.append(-deg)
    return not fails, sorted(fails)


FINITE = "FINITE"
UNKNOWN = "UNKNOWN"


def e_corollary(g: GradedCharacter) -> str:
    """FINITE if dim L[2] < dim L[0] in the sl2-centered grading, else UNKNOWN.

    Never asserts infinite-dimensionality.
    """
    if g.numerator.is_zero:
        return UNKNOWN
    h = g.numerator.shift
    if h > 0 or h.denominator != 1:
        return UNKNOWN
    dims = _degree_dims(g, Fraction(2))
    if dims.get(Fraction(2), 0) < dims.get(Fraction(0), 0):
        return FINITE
    return UNKNOWN


# The completion engine lives in its own module; re-exported here since it
# belongs to the same toolkit.
from .completion import (  # noqa: E402
    AMBIGUOUS,
    INFEASIBLE,
    UNIQUE,
    CompletionProblem,
    CompletionResult,
    DimPin,
    IndCheck,
    LRowPin,
    ResCheck,
    SuppPin,
    complete,
    seed_partial,
)
